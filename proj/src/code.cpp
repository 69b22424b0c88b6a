#include "swcx/code.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "swcx/error.hpp"

namespace swcx {

namespace {

std::uint64_t upow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// Deterministic augmenting-path perfect matching on a square relation.
// Returns row -> column assignment; rows and candidate columns are visited in
// ascending order, so the result is reproducible.
std::optional<std::vector<int>> perfect_matching(const std::vector<std::vector<char>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> match_col(n, -1);  // column -> row
    std::vector<char> visited(n);
    std::function<bool(int)> augment = [&](int row) {
        for (int j = 0; j < n; ++j) {
            if (!adj[row][j] || visited[j]) continue;
            visited[j] = 1;
            if (match_col[j] < 0 || augment(match_col[j])) {
                match_col[j] = row;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < n; ++i) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(i)) return std::nullopt;
    }
    std::vector<int> match_row(n, -1);
    for (int j = 0; j < n; ++j) match_row[match_col[j]] = j;
    return match_row;
}

}  // namespace

Code::Code(const Field& f, int ell, int n, Mat g) : field(f), ell(ell), n(n), gen(std::move(g)) {
    if (ell < 1 || n < 1) throw std::invalid_argument("alphabet and length must be positive");
    if (gen.cols != n * ell) throw std::invalid_argument("generator width must be n*ell");
    k = gen.rows;
    if (rank(field, gen) != k) {
        throw std::invalid_argument("generator matrix must have full row rank");
    }
}

Mat Code::coordinate_block(int i) const {
    Mat b(k, ell);
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < ell; ++c) b.at(r, c) = gen.at(r, i * ell + c);
    }
    return b;
}

CodeMap::CodeMap(Code c, Mat m) : source(std::move(c)), mu(std::move(m)) {
    if (mu.rows != source.k || mu.cols != source.n * source.ell) {
        throw std::invalid_argument("map matrix shape must match the generator");
    }
}

Mat CodeMap::mu_block(int i) const {
    Mat b(source.k, source.ell);
    for (int r = 0; r < source.k; ++r) {
        for (int c = 0; c < source.ell; ++c) b.at(r, c) = mu.at(r, i * source.ell + c);
    }
    return b;
}

int hamming_weight(const Vec& a, int ell) {
    if (a.size() % ell != 0) throw std::invalid_argument("length must be divisible by ell");
    int w = 0;
    for (size_t i = 0; i < a.size(); i += ell) {
        for (int j = 0; j < ell; ++j) {
            if (a[i + j] != 0) {
                ++w;
                break;
            }
        }
    }
    return w;
}

SwcVector swc(const Field& F, const Vec& a, const OrbitPartition& p) {
    if (p.n != 0 && a.size() % p.n != 0) {
        throw std::invalid_argument("word length must be divisible by the alphabet dimension");
    }
    SwcVector out;
    for (size_t i = 0; i < a.size(); i += p.n) {
        Vec block(a.begin() + i, a.begin() + i + p.n);
        out.counts[p.orbit_id[vec_index(F.q(), block)]] += 1;
    }
    return out;
}

Vec apply_monomial(const Field& F, const MonomialMap& h, const Vec& a, int ell) {
    int n = static_cast<int>(h.perm.size());
    if (static_cast<int>(a.size()) != n * ell) throw std::invalid_argument("word length mismatch");
    Vec out(a.size());
    for (int i = 0; i < n; ++i) {
        Vec block(a.begin() + h.perm[i] * ell, a.begin() + (h.perm[i] + 1) * ell);
        Vec img = vec_mat(F, block, h.autos[i]);
        std::copy(img.begin(), img.end(), out.begin() + static_cast<size_t>(i) * ell);
    }
    return out;
}

namespace {

// Per-message orbit labels of each coordinate, for lambda and mu.
struct ColumnLabels {
    // labels[col][widx] = orbit label of the col-th coordinate of the image
    // of message number widx.
    std::vector<std::vector<std::int32_t>> lam, mu;
    std::uint64_t words = 0;
};

ColumnLabels column_labels(const CodeMap& m, const OrbitPartition& p, std::uint64_t guard) {
    const Code& c = m.source;
    if (p.n != c.ell) throw std::invalid_argument("partition ambient must equal ell");
    if (p.q != c.field.q()) throw std::invalid_argument("partition field mismatch");
    std::uint64_t words = upow(c.field.q(), c.k);
    if (words > guard) {
        throw GuardError("message enumeration of " + std::to_string(words) +
                         " exceeds guard " + std::to_string(guard));
    }
    ColumnLabels out;
    out.words = words;
    out.lam.assign(c.n, std::vector<std::int32_t>(words));
    out.mu.assign(c.n, std::vector<std::int32_t>(words));
    int q = c.field.q();
    for (std::uint64_t wi = 0; wi < words; ++wi) {
        Vec w = vec_from_index(q, c.k, wi);
        Vec wl = vec_mat(c.field, w, c.gen);
        Vec wm = vec_mat(c.field, w, m.mu);
        for (int col = 0; col < c.n; ++col) {
            Vec bl(wl.begin() + static_cast<size_t>(col) * c.ell,
                   wl.begin() + static_cast<size_t>(col + 1) * c.ell);
            Vec bm(wm.begin() + static_cast<size_t>(col) * c.ell,
                   wm.begin() + static_cast<size_t>(col + 1) * c.ell);
            out.lam[col][wi] = p.orbit_id[vec_index(q, bl)];
            out.mu[col][wi] = p.orbit_id[vec_index(q, bm)];
        }
    }
    return out;
}

}  // namespace

bool is_swc_isometry(const CodeMap& m, const OrbitPartition& p, std::uint64_t guard) {
    ColumnLabels labels = column_labels(m, p, guard);
    int n = m.source.n;
    std::vector<std::int32_t> a(n), b(n);
    for (std::uint64_t wi = 0; wi < labels.words; ++wi) {
        for (int col = 0; col < n; ++col) {
            a[col] = labels.lam[col][wi];
            b[col] = labels.mu[col][wi];
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    return true;
}

std::optional<std::vector<int>> coordinate_matching(const CodeMap& m, const OrbitPartition& p,
                                                    std::uint64_t guard) {
    ColumnLabels labels = column_labels(m, p, guard);
    int n = m.source.n;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (std::uint64_t wi = 0; wi < labels.words; ++wi) {
                if (labels.lam[i][wi] != labels.mu[j][wi]) {
                    adj[i][j] = 0;
                    break;
                }
            }
        }
    }
    return perfect_matching(adj);
}

std::optional<MonomialMap> extend_to_monomial(const CodeMap& m, const MatGroup& g,
                                              std::uint64_t word_guard,
                                              std::uint64_t gl_guard) {
    const Code& c = m.source;
    if (g.n != c.ell) throw std::invalid_argument("group must act on the alphabet F_q^ell");
    std::uint64_t order = gl_order(c.field.q(), c.ell);
    if (order > gl_guard) {
        throw GuardError("automorphism sweep over |GL| = " + std::to_string(order) +
                         " exceeds guard " + std::to_string(gl_guard));
    }
    OrbitPartition p = orbits(g);
    ColumnLabels labels = column_labels(m, p, word_guard);
    int n = c.n;

    std::vector<Mat> lam_blocks(n), mu_blocks(n);
    for (int i = 0; i < n; ++i) {
        lam_blocks[i] = c.coordinate_block(i);
        mu_blocks[i] = m.mu_block(i);
    }

    // feasible[i][j]: mu column i can be realized as g_i applied to lambda
    // column j, with g_i in the closure (orbit-preserving). The first
    // qualifying g_i per pair is cached.
    std::vector<std::vector<char>> feasible(n, std::vector<char>(n, 0));
    std::vector<std::vector<Mat>> auto_for(n, std::vector<Mat>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            bool compat = true;
            for (std::uint64_t wi = 0; wi < labels.words && compat; ++wi) {
                if (labels.mu[i][wi] != labels.lam[j][wi]) compat = false;
            }
            if (!compat) continue;
            for_each_gl(c.field, c.ell, [&](const Mat& cand) {
                if (mat_mul(c.field, lam_blocks[j], cand) != mu_blocks[i]) return true;
                if (!preserves_partition(c.field, cand, p)) return true;
                feasible[i][j] = 1;
                auto_for[i][j] = cand;
                return false;
            });
        }
    }

    // mu columns are the left side: perm[i] is the lambda column feeding
    // coordinate i.
    auto match = perfect_matching(feasible);
    if (!match) return std::nullopt;
    MonomialMap h;
    h.perm = *match;
    h.autos.resize(n);
    for (int i = 0; i < n; ++i) h.autos[i] = auto_for[i][h.perm[i]];
    return h;
}

bool full_space_isometry_is_monomial(const Field& F, int n, int ell, const MatGroup& g,
                                     std::uint64_t space_guard) {
    int N = n * ell;
    std::uint64_t vecs = upow(F.q(), N);
    if (vecs > space_guard) {
        throw GuardError("ambient space of " + std::to_string(vecs) + " vectors exceeds guard " +
                         std::to_string(space_guard));
    }
    std::uint64_t order = gl_order(F.q(), N);
    if (order > kDefaultGlGuard) {
        throw GuardError("full-map sweep over |GL| = " + std::to_string(order) +
                         " exceeds guard");
    }
    OrbitPartition p = orbits(g);
    Code identity_code(F, ell, n, Mat::identity(N));
    bool ok = true;
    for_each_gl(F, N, [&](const Mat& f) {
        CodeMap m(identity_code, f);
        bool iso = is_swc_isometry(m, p);
        bool mono = extend_to_monomial(m, g).has_value();
        if (iso != mono) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

MinDistResult min_distance_ext(const Code& c, Felt alpha, Felt beta) {
    const Field& F = c.field;
    if (c.k != 4 || c.ell != 2) {
        throw std::invalid_argument("extension-field analysis expects k=4, ell=2");
    }
    // Multiplication by omega, a root of x^2 - alpha*x + beta, in the basis
    // (1, omega): (x, y) -> (-beta*y, x + alpha*y).
    Mat womega(2, 2);
    womega.at(0, 1) = 1;
    womega.at(1, 0) = F.neg(beta);
    womega.at(1, 1) = alpha;
    for (int i = 0; i < c.n; ++i) {
        Mat block = c.coordinate_block(i);
        for (int src = 0; src < 2; ++src) {
            Vec base = {block.at(src, 0), block.at(src, 1)};
            Vec twisted = vec_mat(F, base, womega);
            if (block.at(src + 2, 0) != twisted[0] || block.at(src + 2, 1) != twisted[1]) {
                throw std::invalid_argument(
                    "rows 3,4 are not the omega-multiples of rows 1,2");
            }
        }
    }
    std::uint64_t words = upow(F.q(), c.k);
    int d = c.n + 1;
    for (std::uint64_t wi = 1; wi < words; ++wi) {
        Vec w = vec_from_index(F.q(), c.k, wi);
        int wt = hamming_weight(vec_mat(F, w, c.gen), c.ell);
        d = std::min(d, wt);
    }
    MinDistResult r;
    r.d = d;
    r.mds = (d == c.n - 2 + 1);
    return r;
}

namespace {

// Shared state for the exhaustive isometry sweep of one ambient space.
struct BoundSweep {
    const Field& F;
    int ell, n, N, q;
    std::uint64_t total;
    std::vector<std::vector<std::int32_t>> block_of;  // [vector index][coordinate]
    std::map<std::vector<std::int32_t>, std::vector<std::uint64_t>> buckets;
    BoundReport report;
    std::size_t max_recorded;

    // DFS state
    std::vector<Vec> basis;
    std::vector<Vec> images;
    std::vector<std::pair<Vec, Vec>> span;  // (codeword, image) pairs

    BoundSweep(const Field& f, int ell, int n, std::size_t maxrec)
        : F(f), ell(ell), n(n), N(n * ell), q(f.q()), total(upow(f.q(), N)),
          max_recorded(maxrec) {
        block_of.resize(total);
        for (std::uint64_t vi = 0; vi < total; ++vi) {
            Vec v = vec_from_index(q, N, vi);
            std::vector<std::int32_t> sig(n);
            for (int i = 0; i < n; ++i) {
                Vec b(v.begin() + static_cast<size_t>(i) * ell,
                      v.begin() + static_cast<size_t>(i + 1) * ell);
                sig[i] = static_cast<std::int32_t>(vec_index(q, b));
            }
            block_of[vi] = sig;
            std::sort(sig.begin(), sig.end());
            buckets[sig].push_back(vi);
        }
        report.q = q;
        report.ell = ell;
        report.n = n;
    }

    std::vector<std::int32_t> signature(const Vec& v) const {
        std::vector<std::int32_t> sig = block_of[vec_index(q, v)];
        std::sort(sig.begin(), sig.end());
        return sig;
    }

    // Extension to a coordinate permutation: blocks must match exactly as
    // column maps on the code.
    bool extends(const Mat& b, const Mat& y) const {
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                bool eq = true;
                for (int r = 0; r < b.rows && eq; ++r) {
                    for (int c = 0; c < ell; ++c) {
                        if (y.at(r, i * ell + c) != b.at(r, j * ell + c)) {
                            eq = false;
                            break;
                        }
                    }
                }
                adj[i][j] = eq;
            }
        }
        return perfect_matching(adj).has_value();
    }

    void leaf() {
        ++report.num_isometries;
        Mat b = basis.empty() ? Mat(0, N) : Mat::from_rows(basis);
        Mat y = images.empty() ? Mat(0, N) : Mat::from_rows(images);
        if (!extends(b, y)) {
            ++report.num_failures;
            report.all_extend = false;
            if (report.failures.size() < max_recorded) {
                report.failures.push_back({b, y});
            }
        }
    }

    void dfs(std::size_t level) {
        if (level == basis.size()) {
            leaf();
            return;
        }
        const Vec& bj = basis[level];
        auto it = buckets.find(signature(bj));
        if (it == buckets.end()) return;
        for (std::uint64_t yi : it->second) {
            Vec y = vec_from_index(q, N, yi);
            bool ok = true;
            for (const auto& [u, uimg] : span) {
                for (int c = 1; c < q && ok; ++c) {
                    Vec lhs = vec_add(F, u, vec_scale(F, static_cast<Felt>(c), bj));
                    Vec rhs = vec_add(F, uimg, vec_scale(F, static_cast<Felt>(c), y));
                    if (signature(lhs) != signature(rhs)) ok = false;
                }
                if (!ok) break;
            }
            if (!ok) continue;
            size_t mark = span.size();
            for (size_t t = 0; t < mark; ++t) {
                for (int c = 1; c < q; ++c) {
                    span.emplace_back(
                        vec_add(F, span[t].first, vec_scale(F, static_cast<Felt>(c), bj)),
                        vec_add(F, span[t].second, vec_scale(F, static_cast<Felt>(c), y)));
                }
            }
            images.push_back(y);
            dfs(level + 1);
            images.pop_back();
            span.resize(mark);
        }
    }
};

}  // namespace

BoundReport verify_bound_trivial_group(const Field& F, int ell, int n, std::uint64_t guard,
                                       std::size_t max_recorded_failures) {
    int N = n * ell;
    if (upow(F.q(), N) > guard) {
        throw GuardError("ambient of " + std::to_string(upow(F.q(), N)) +
                         " vectors exceeds guard " + std::to_string(guard));
    }
    BoundSweep sweep(F, ell, n, max_recorded_failures);
    for (int d = 0; d <= N; ++d) {
        for (const Subspace& u : subspaces(F, N, d, guard)) {
            ++sweep.report.num_codes;
            sweep.basis.clear();
            for (int i = 0; i < u.dim(); ++i) sweep.basis.push_back(u.basis.row(i));
            sweep.images.clear();
            sweep.span.assign(1, {Vec(N, 0), Vec(N, 0)});
            sweep.dfs(0);
        }
    }
    return sweep.report;
}

}  // namespace swcx
