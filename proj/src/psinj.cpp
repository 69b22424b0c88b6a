#include "swcx/psinj.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "swcx/error.hpp"

namespace swcx {

namespace {

std::uint64_t upow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// Completes the subspace basis to an invertible n x n matrix with greedily
// chosen unit vectors, in ascending coordinate order.
Mat complete_basis(const Field& F, const Subspace& u) {
    int n = u.ambient;
    std::vector<Vec> rows;
    for (int i = 0; i < u.dim(); ++i) rows.push_back(u.basis.row(i));
    for (int j = 0; j < n && static_cast<int>(rows.size()) < n; ++j) {
        Vec e(n, 0);
        e[j] = 1;
        std::vector<Vec> trial = rows;
        trial.push_back(e);
        if (rank(F, Mat::from_rows(trial)) == static_cast<int>(trial.size())) {
            rows.push_back(e);
        }
    }
    return Mat::from_rows(rows);
}

// Searches for an invertible matrix that agrees with the basis images on the
// subspace and preserves the orbit partition. Free rows of the completed
// basis range over all vectors in ascending index order, so the first hit is
// canonical.
std::optional<Mat> find_extension(const Field& F, const Subspace& u,
                                  const std::vector<Vec>& images, const OrbitPartition& orb,
                                  const Mat& cinv, std::uint64_t gl_guard) {
    int n = u.ambient;
    int d = u.dim();
    int q = F.q();
    std::uint64_t per = upow(q, n);
    std::uint64_t total = 1;
    for (int i = 0; i < n - d; ++i) {
        if (total > gl_guard / per) throw GuardError("extension search space exceeds the guard");
        total *= per;
    }
    std::vector<Vec> rows = images;
    rows.resize(n, Vec(n, 0));
    for (std::uint64_t z = 0; z < total; ++z) {
        std::uint64_t rem = z;
        for (int i = n - 1; i >= d; --i) {
            rows[i] = vec_from_index(q, n, rem % per);
            rem /= per;
        }
        Mat g = mat_mul(F, cinv, Mat::from_rows(rows));
        if (is_invertible(F, g) && preserves_partition(F, g, orb)) return g;
    }
    return std::nullopt;
}

struct MapSearch {
    const Field& F;
    const OrbitPartition& orb;
    const std::map<std::int32_t, std::vector<Vec>>& buckets;
    const Subspace& u;
    const Mat& cinv;
    std::uint64_t gl_guard;
    std::vector<Vec> images;
    std::optional<PsinjWitness> failure;

    // True iff the span of the chosen images stays independent after adding y.
    bool independent_with(const Vec& y) const {
        std::vector<Vec> trial = images;
        trial.push_back(y);
        return rank(F, Mat::from_rows(trial)) == static_cast<int>(trial.size());
    }

    // Checks orbit preservation on every vector newly covered by basis row i:
    // combinations with a nonzero coefficient on row i.
    bool labels_ok(int i, const Vec& y) const {
        int q = F.q();
        int n = u.ambient;
        std::uint64_t combos = upow(q, i);
        for (std::uint64_t c = 0; c < combos; ++c) {
            Vec coeff = vec_from_index(q, i, c);
            for (int ci = 1; ci < q; ++ci) {
                Vec src(n, 0), dst(n, 0);
                for (int j = 0; j < i; ++j) {
                    src = vec_add(F, src, vec_scale(F, coeff[j], u.basis.row(j)));
                    dst = vec_add(F, dst, vec_scale(F, coeff[j], images[j]));
                }
                src = vec_add(F, src, vec_scale(F, static_cast<Felt>(ci), u.basis.row(i)));
                dst = vec_add(F, dst, vec_scale(F, static_cast<Felt>(ci), y));
                if (orb.orbit_id[vec_index(q, src)] != orb.orbit_id[vec_index(q, dst)]) {
                    return false;
                }
            }
        }
        return true;
    }

    // Returns false to stop the whole search (a failure witness was found).
    bool assign(int i) {
        int d = u.dim();
        if (i == d) {
            std::optional<Mat> ext = find_extension(F, u, images, orb, cinv, gl_guard);
            if (!ext) {
                failure = PsinjWitness{u, images, false, std::nullopt};
                return false;
            }
            return true;
        }
        std::int32_t label = orb.orbit_id[vec_index(F.q(), u.basis.row(i))];
        for (const Vec& y : buckets.at(label)) {
            if (!independent_with(y)) continue;
            if (!labels_ok(i, y)) continue;
            images.push_back(y);
            bool keep = assign(i + 1);
            images.pop_back();
            if (!keep) return false;
        }
        return true;
    }
};

bool rows_of(const Mat& g, const Vec& r0, const Vec& r1) {
    return g.row(0) == r0 && g.row(1) == r1;
}

// Shared validation for the explicit swap witnesses on span{e1, e2}: the
// subspace meets exactly the zero orbit plus one nonzero orbit, the swap is
// orbit-preserving, and no matrix in search_set restricts to it.
void validate_swap_witness(const Field& F, int n, const OrbitPartition& orb,
                           const std::vector<Mat>& search_set, CounterexampleReport& rep) {
    int q = F.q();
    Vec e1(n, 0), e2(n, 0);
    e1[0] = 1;
    e2[1] = 1;
    rep.witness.u = span_of(F, {e1, e2}, n);
    rep.witness.f_images = {e2, e1};
    rep.witness.extends = false;

    std::set<std::int32_t> labels;
    bool preserving = true;
    for (int x = 0; x < q; ++x) {
        for (int y = 0; y < q; ++y) {
            if (x == 0 && y == 0) continue;
            Vec src(n, 0), dst(n, 0);
            src[0] = static_cast<Felt>(x);
            src[1] = static_cast<Felt>(y);
            dst[0] = static_cast<Felt>(y);
            dst[1] = static_cast<Felt>(x);
            std::int32_t ls = orb.orbit_id[vec_index(q, src)];
            std::int32_t ld = orb.orbit_id[vec_index(q, dst)];
            labels.insert(ls);
            if (ls != ld) preserving = false;
        }
    }
    rep.u_meets_two_orbits = labels.size() == 1;

    bool no_ext = true;
    for (const Mat& g : search_set) {
        if (rows_of(g, e2, e1)) no_ext = false;
    }
    rep.valid = preserving && rep.u_meets_two_orbits && no_ext;
}

}  // namespace

PsinjResult is_pseudo_injective(const MatGroup& g, std::uint64_t enum_guard,
                                std::uint64_t gl_guard) {
    const Field& F = g.field;
    int n = g.n;
    int q = F.q();
    OrbitPartition orb = orbits(g, enum_guard);

    std::map<std::int32_t, std::vector<Vec>> buckets;
    for (std::uint64_t i = 0; i < upow(q, n); ++i) {
        buckets[orb.orbit_id[i]].push_back(vec_from_index(q, n, i));
    }

    for (int d = 2; d <= n - 1; ++d) {
        for (const Subspace& u : subspaces(F, n, d, enum_guard)) {
            Mat c = complete_basis(F, u);
            Mat cinv = mat_inv(F, c);
            MapSearch search{F, orb, buckets, u, cinv, gl_guard, {}, std::nullopt};
            if (!search.assign(0)) {
                return PsinjResult{false, std::move(search.failure)};
            }
        }
    }
    return PsinjResult{true, std::nullopt};
}

Mat build_T(const Field& F, int m, const Mat& block) {
    if (m < 1) throw std::invalid_argument("block count must be positive");
    if (block.rows != m || block.cols != m) {
        throw std::invalid_argument("block must be m x m");
    }
    if (!is_invertible(F, block)) throw std::invalid_argument("block must be invertible");
    int n = m * m;
    Mat t(n, n);
    for (int b = 0; b < m; ++b) {
        for (int r = 0; r < m; ++r) {
            for (int c = 0; c < m; ++c) {
                t.at(b * m + r, b * m + c) = block.at(r, c);
            }
        }
    }
    return t;
}

Mat build_Tprime(const Field& F, int n, int m, const Mat& block) {
    if (n <= m * m) {
        throw std::invalid_argument("dimension must exceed the block-diagonal size");
    }
    Mat t = build_T(F, m, block);
    Mat out(n, n);
    for (int r = 0; r < m * m; ++r) {
        for (int c = 0; c < m * m; ++c) out.at(r, c) = t.at(r, c);
    }
    for (int r = m * m; r < n; ++r) out.at(r, r) = 1;
    return out;
}

Mat primitive_mult_matrix(const Field& F) {
    int q = F.q();
    auto [alpha, beta] = find_irreducible_quadratic(F);
    // Pair arithmetic in F_q[x]/(x^2 + alpha x + beta), elements (c0, c1)
    // encoded as c0 + c1 * q.
    auto mul2 = [&](std::pair<Felt, Felt> a, std::pair<Felt, Felt> b) {
        Felt cross = F.add(F.mul(a.first, b.second), F.mul(a.second, b.first));
        Felt high = F.mul(a.second, b.second);
        return std::pair<Felt, Felt>{
            F.sub(F.mul(a.first, b.first), F.mul(beta, high)),
            F.sub(cross, F.mul(alpha, high))};
    };
    long long target = static_cast<long long>(q) * q - 1;
    for (int e = 2; e < q * q; ++e) {
        std::pair<Felt, Felt> w{static_cast<Felt>(e % q), static_cast<Felt>(e / q)};
        std::pair<Felt, Felt> acc{1, 0};
        long long order = 0;
        do {
            acc = mul2(acc, w);
            ++order;
        } while (acc != std::pair<Felt, Felt>{1, 0});
        if (order != target) continue;
        std::pair<Felt, Felt> w2 = mul2(w, w);
        // w2 = u * 1 + v * w in the basis (1, w); w is a generator, so its
        // theta-coefficient is nonzero.
        Felt v = F.mul(w2.second, F.inv(w.second));
        Felt u = F.sub(w2.first, F.mul(v, w.first));
        Mat m(2, 2);
        m.at(0, 1) = 1;
        m.at(1, 0) = u;
        m.at(1, 1) = v;
        return m;
    }
    throw std::logic_error("multiplicative group of the quadratic extension has a generator");
}

Mat build_X(const Field& F) {
    if (F.q() == 2) throw std::invalid_argument("construction requires q != 2");
    Mat m = primitive_mult_matrix(F);
    Felt d = det(F, m);
    Mat x(3, 3);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) x.at(r, c) = m.at(r, c);
    }
    x.at(2, 2) = d;
    return x;
}

CounterexampleReport counterexample_dim_ge4(const Field& F, int n, std::uint64_t gl_guard) {
    if (n < 4) throw std::invalid_argument("dimension must be at least 4");
    Mat block = primitive_mult_matrix(F);
    Mat gen = n == 4 ? build_T(F, 2, block) : build_Tprime(F, n, 2, block);

    CounterexampleReport rep;
    rep.group = group_generate(F, n, {gen});
    OrbitPartition orb = orbits(rep.group);

    const std::vector<Mat>* search_set = &rep.group.elements;
    MatGroup cl;
    if (gl_order(F.q(), n) <= gl_guard) {
        cl = closure(rep.group, gl_guard);
        rep.closure_size = cl.size();
        rep.closed_confirmed = cl.size() == rep.group.size();
        search_set = &cl.elements;
    } else {
        rep.closed_trusted = true;
        rep.closure_size = rep.group.size();
    }

    validate_swap_witness(F, n, orb, *search_set, rep);
    return rep;
}

CounterexampleReport counterexample_dim3(const Field& F, std::uint64_t gl_guard) {
    Mat x = build_X(F);
    CounterexampleReport rep;
    rep.group = group_generate(F, 3, {x});
    OrbitPartition orb = orbits(rep.group);

    MatGroup cl = closure(rep.group, gl_guard);
    rep.closure_size = cl.size();
    rep.closed_confirmed = cl.size() == rep.group.size();

    validate_swap_witness(F, 3, orb, cl.elements, rep);
    return rep;
}

F23Report f23_check() {
    Field F(2, 1);
    F23Report rep;

    std::vector<OrbitPartition> parts = poset_partitions(F, 3);
    rep.num_partitions = static_cast<int>(parts.size());

    std::vector<MatGroup> closed;
    std::set<std::vector<std::uint64_t>> seen;
    for (const OrbitPartition& p : parts) {
        MatGroup s = partition_stabilizer(F, p);
        if (seen.insert(s.keys).second) closed.push_back(std::move(s));
    }
    rep.num_closed = static_cast<int>(closed.size());

    Vec a = {1, 0, 0}, b = {0, 1, 0};
    std::uint64_t ia = vec_index(2, a), ib = vec_index(2, b);
    std::uint64_t iab = vec_index(2, vec_add(F, a, b));

    rep.step2_ok = true;
    int fixing = 0;
    for (const MatGroup& g : closed) {
        OrbitPartition orb = orbits(g);
        if (orb.block_size(orb.orbit_id[ia]) != 1) continue;
        ++fixing;
        for (std::uint64_t ic = 0; ic < 8; ++ic) {
            if (orb.orbit_id[ic] != orb.orbit_id[ib]) continue;
            Vec c = vec_from_index(2, 3, ic);
            if (orb.orbit_id[vec_index(2, vec_add(F, a, c))] != orb.orbit_id[iab]) continue;
            bool found = false;
            for (const Mat& m : g.elements) {
                if (vec_mat(F, a, m) == a && vec_mat(F, b, m) == c) {
                    found = true;
                    break;
                }
            }
            if (!found) rep.step2_ok = false;
        }
    }
    rep.num_fixing = fixing;

    rep.crosscheck_ok = true;
    for (const MatGroup& g : closed) {
        if (!is_pseudo_injective(g).pseudo_injective) rep.crosscheck_ok = false;
    }

    rep.overall = rep.step2_ok && rep.crosscheck_ok;
    return rep;
}

bool classify(int n, int q) { return n < 3 || (n == 3 && q == 2); }

}  // namespace swcx
