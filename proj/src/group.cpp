#include "swcx/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
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

std::vector<Vec> all_vectors(int q, int n) {
    std::uint64_t count = upow(q, n);
    std::vector<Vec> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(vec_from_index(q, n, i));
    return out;
}

}  // namespace

int OrbitPartition::num_orbits() const {
    int c = 0;
    for (size_t i = 0; i < orbit_id.size(); ++i) {
        if (orbit_id[i] == static_cast<std::int32_t>(i)) ++c;
    }
    return c;
}

std::uint64_t OrbitPartition::block_size(std::int32_t label) const {
    std::uint64_t c = 0;
    for (std::int32_t id : orbit_id) {
        if (id == label) ++c;
    }
    return c;
}

OrbitPartition singleton_partition(int q, int n) {
    OrbitPartition p;
    p.n = n;
    p.q = q;
    p.orbit_id.resize(upow(q, n));
    std::iota(p.orbit_id.begin(), p.orbit_id.end(), 0);
    return p;
}

bool MatGroup::contains(const Mat& m) const {
    std::uint64_t key = mat_key(field.q(), m);
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    return it != keys.end() && *it == key;
}

MatGroup trivial_group(const Field& F, int n) {
    MatGroup g;
    g.n = n;
    g.field = F;
    g.generators = {Mat::identity(n)};
    g.elements = {Mat::identity(n)};
    g.keys = {mat_key(F.q(), Mat::identity(n))};
    return g;
}

MatGroup group_generate(const Field& F, int n, const std::vector<Mat>& gens,
                        std::uint64_t guard) {
    if (gens.empty()) return trivial_group(F, n);
    for (const Mat& g : gens) {
        if (g.rows != n || g.cols != n) throw std::invalid_argument("generator shape mismatch");
        if (!is_invertible(F, g)) throw std::invalid_argument("generator is singular");
    }
    std::map<std::uint64_t, Mat> seen;
    Mat id = Mat::identity(n);
    seen.emplace(mat_key(F.q(), id), id);
    std::vector<Mat> frontier = {id};
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const Mat& x : frontier) {
            for (const Mat& g : gens) {
                Mat y = mat_mul(F, x, g);
                std::uint64_t key = mat_key(F.q(), y);
                if (seen.emplace(key, y).second) {
                    next.push_back(std::move(y));
                    if (seen.size() > guard) {
                        throw GuardError("generated group exceeds guard " + std::to_string(guard));
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    MatGroup out;
    out.n = n;
    out.field = F;
    out.generators = gens;
    out.elements.reserve(seen.size());
    out.keys.reserve(seen.size());
    for (auto& [key, m] : seen) {
        out.keys.push_back(key);
        out.elements.push_back(std::move(m));
    }
    return out;
}

MatGroup group_from_elements(const Field& F, int n, std::vector<Mat> elems,
                             std::vector<Mat> gens) {
    std::map<std::uint64_t, Mat> seen;
    for (Mat& m : elems) {
        if (m.rows != n || m.cols != n) throw std::invalid_argument("element shape mismatch");
        seen.emplace(mat_key(F.q(), m), std::move(m));
    }
    MatGroup out;
    out.n = n;
    out.field = F;
    out.elements.reserve(seen.size());
    out.keys.reserve(seen.size());
    for (auto& [key, m] : seen) {
        out.keys.push_back(key);
        out.elements.push_back(std::move(m));
    }
    out.generators = gens.empty() ? out.elements : std::move(gens);
    return out;
}

std::uint64_t gl_order(int q, int n) {
    // prod_{i=0}^{n-1} (q^n - q^i)
    std::uint64_t qn = upow(q, n);
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) r *= qn - upow(q, i);
    return r;
}

namespace {

// Row-by-row enumeration of invertible matrices: row i ranges over all vectors
// outside the span of rows 0..i-1, tracked with an incremental row echelon
// basis for the membership test.
struct GlEnumerator {
    const Field& F;
    int n;
    const std::function<bool(const Mat&)>& fn;
    Mat current;
    // Echelon rows of the chosen prefix, with ech_pivot[i] the pivot column.
    std::vector<Vec> ech;
    std::vector<int> ech_pivot;
    std::vector<Vec> vectors;
    bool aborted = false;

    GlEnumerator(const Field& f, int dim, const std::function<bool(const Mat&)>& cb)
        : F(f), n(dim), fn(cb), current(dim, dim), vectors(all_vectors(f.q(), dim)) {}

    // Reduces v by the echelon rows; returns the residual.
    Vec reduce(Vec v) const {
        for (size_t i = 0; i < ech.size(); ++i) {
            Felt c = v[ech_pivot[i]];
            if (c == 0) continue;
            for (int j = ech_pivot[i]; j < n; ++j) {
                v[j] = F.sub(v[j], F.mul(c, ech[i][j]));
            }
        }
        return v;
    }

    void recurse(int row) {
        if (aborted) return;
        if (row == n) {
            if (!fn(current)) aborted = true;
            return;
        }
        for (const Vec& v : vectors) {
            Vec res = reduce(v);
            if (vec_is_zero(res)) continue;
            int piv = 0;
            while (res[piv] == 0) ++piv;
            Felt s = F.inv(res[piv]);
            for (int j = piv; j < n; ++j) res[j] = F.mul(s, res[j]);
            current.set_row(row, v);
            ech.push_back(std::move(res));
            ech_pivot.push_back(piv);
            recurse(row + 1);
            ech.pop_back();
            ech_pivot.pop_back();
            if (aborted) return;
        }
    }
};

}  // namespace

void for_each_gl(const Field& F, int n, const std::function<bool(const Mat&)>& fn) {
    if (n == 0) {
        fn(Mat(0, 0));
        return;
    }
    GlEnumerator e(F, n, fn);
    e.recurse(0);
}

MatGroup gl_group(const Field& F, int n, std::uint64_t gl_guard) {
    std::uint64_t order = gl_order(F.q(), n);
    if (order > gl_guard) {
        throw GuardError("|GL_" + std::to_string(n) + "(F_" + std::to_string(F.q()) +
                         ")| = " + std::to_string(order) + " exceeds guard " +
                         std::to_string(gl_guard));
    }
    std::vector<Mat> elems;
    elems.reserve(order);
    for_each_gl(F, n, [&](const Mat& m) {
        elems.push_back(m);
        return true;
    });
    return group_from_elements(F, n, std::move(elems));
}

OrbitPartition orbits(const MatGroup& g, std::uint64_t guard) {
    int q = g.field.q();
    std::uint64_t count = upow(q, g.n);
    if (count > guard) {
        throw GuardError("orbit enumeration over " + std::to_string(count) +
                         " vectors exceeds guard " + std::to_string(guard));
    }
    OrbitPartition p;
    p.n = g.n;
    p.q = q;
    p.orbit_id.assign(count, -1);
    std::vector<std::uint64_t> stack;
    for (std::uint64_t start = 0; start < count; ++start) {
        if (p.orbit_id[start] >= 0) continue;
        // start is the smallest member of its orbit: any smaller member would
        // already have labeled it.
        std::int32_t label = static_cast<std::int32_t>(start);
        p.orbit_id[start] = label;
        stack.push_back(start);
        while (!stack.empty()) {
            std::uint64_t cur = stack.back();
            stack.pop_back();
            Vec v = vec_from_index(q, g.n, cur);
            for (const Mat& gen : g.generators) {
                std::uint64_t next = vec_index(q, vec_mat(g.field, v, gen));
                if (p.orbit_id[next] < 0) {
                    p.orbit_id[next] = label;
                    stack.push_back(next);
                }
            }
        }
    }
    return p;
}

bool preserves_partition(const Field& F, const Mat& m, const OrbitPartition& p) {
    int q = p.q;
    std::uint64_t count = p.orbit_id.size();
    for (std::uint64_t i = 0; i < count; ++i) {
        Vec v = vec_from_index(q, p.n, i);
        std::uint64_t j = vec_index(q, vec_mat(F, v, m));
        if (p.orbit_id[j] != p.orbit_id[i]) return false;
    }
    return true;
}

MatGroup closure(const MatGroup& g, std::uint64_t gl_guard) {
    std::uint64_t order = gl_order(g.field.q(), g.n);
    if (order > gl_guard) {
        throw GuardError("closure sweep over |GL| = " + std::to_string(order) +
                         " exceeds guard " + std::to_string(gl_guard));
    }
    OrbitPartition p = orbits(g);
    // Precompute vectors once; the sweep dominates runtime.
    std::vector<Vec> vectors = all_vectors(p.q, p.n);
    std::vector<Mat> elems;
    for_each_gl(g.field, g.n, [&](const Mat& m) {
        for (size_t i = 0; i < vectors.size(); ++i) {
            std::uint64_t j = vec_index(p.q, vec_mat(g.field, vectors[i], m));
            if (p.orbit_id[j] != p.orbit_id[i]) return true;  // not preserving; next
        }
        elems.push_back(m);
        return true;
    });
    return group_from_elements(g.field, g.n, std::move(elems));
}

bool is_closed(const MatGroup& g, std::uint64_t gl_guard) {
    return closure(g, gl_guard).size() == g.size();
}

bool partition_finer(const OrbitPartition& p1, const OrbitPartition& p2) {
    if (p1.n != p2.n || p1.q != p2.q) throw std::invalid_argument("ambient mismatch");
    // p1 refines p2 iff elements sharing a p1 block share a p2 block.
    std::map<std::int32_t, std::int32_t> to_p2;
    for (size_t i = 0; i < p1.orbit_id.size(); ++i) {
        auto [it, inserted] = to_p2.emplace(p1.orbit_id[i], p2.orbit_id[i]);
        if (!inserted && it->second != p2.orbit_id[i]) return false;
    }
    return true;
}

OrbitPartition partition_join(const OrbitPartition& p1, const OrbitPartition& p2) {
    if (p1.n != p2.n || p1.q != p2.q) throw std::invalid_argument("ambient mismatch");
    size_t count = p1.orbit_id.size();
    std::vector<std::int32_t> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::int32_t(std::int32_t)> find = [&](std::int32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        // Keep the smaller index as root so roots end up as minimum labels.
        if (a > b) std::swap(a, b);
        parent[b] = a;
    };
    for (size_t i = 0; i < count; ++i) {
        unite(static_cast<std::int32_t>(i), p1.orbit_id[i]);
        unite(static_cast<std::int32_t>(i), p2.orbit_id[i]);
    }
    OrbitPartition out;
    out.n = p1.n;
    out.q = p1.q;
    out.orbit_id.resize(count);
    for (size_t i = 0; i < count; ++i) out.orbit_id[i] = find(static_cast<std::int32_t>(i));
    return out;
}

std::vector<OrbitPartition> poset_partitions(const Field& F, int n, std::uint64_t gl_guard) {
    std::uint64_t order = gl_order(F.q(), n);
    if (order > gl_guard) {
        throw GuardError("poset sweep over |GL| = " + std::to_string(order) +
                         " exceeds guard " + std::to_string(gl_guard));
    }
    // Orbit partitions of all cyclic subgroups.
    std::set<std::vector<std::int32_t>> seen;
    std::vector<OrbitPartition> all;
    int q = F.q();
    std::uint64_t count = upow(q, n);
    for_each_gl(F, n, [&](const Mat& g) {
        OrbitPartition p;
        p.n = n;
        p.q = q;
        p.orbit_id.assign(count, -1);
        for (std::uint64_t start = 0; start < count; ++start) {
            if (p.orbit_id[start] >= 0) continue;
            std::int32_t label = static_cast<std::int32_t>(start);
            std::uint64_t cur = start;
            do {
                p.orbit_id[cur] = label;
                cur = vec_index(q, vec_mat(F, vec_from_index(q, n, cur), g));
            } while (cur != start);
        }
        if (seen.insert(p.orbit_id).second) all.push_back(std::move(p));
        return true;
    });
    // Close under joins.
    size_t frontier_begin = 0;
    while (frontier_begin < all.size()) {
        size_t frontier_end = all.size();
        for (size_t i = frontier_begin; i < frontier_end; ++i) {
            for (size_t j = 0; j < frontier_end; ++j) {
                OrbitPartition joined = partition_join(all[i], all[j]);
                if (seen.insert(joined.orbit_id).second) all.push_back(std::move(joined));
            }
        }
        frontier_begin = frontier_end;
    }
    std::sort(all.begin(), all.end());
    return all;
}

MatGroup partition_stabilizer(const Field& F, const OrbitPartition& p, std::uint64_t gl_guard) {
    std::uint64_t order = gl_order(F.q(), p.n);
    if (order > gl_guard) {
        throw GuardError("stabilizer sweep over |GL| = " + std::to_string(order) +
                         " exceeds guard " + std::to_string(gl_guard));
    }
    std::vector<Vec> vectors = all_vectors(p.q, p.n);
    std::vector<Mat> elems;
    for_each_gl(F, p.n, [&](const Mat& m) {
        for (size_t i = 0; i < vectors.size(); ++i) {
            std::uint64_t j = vec_index(p.q, vec_mat(F, vectors[i], m));
            if (p.orbit_id[j] != p.orbit_id[i]) return true;
        }
        elems.push_back(m);
        return true;
    });
    return group_from_elements(F, p.n, std::move(elems));
}

MatGroup point_stabilizer(const MatGroup& g, const Vec& x) {
    if (static_cast<int>(x.size()) != g.n) throw std::invalid_argument("vector length mismatch");
    std::vector<Mat> elems;
    for (const Mat& m : g.elements) {
        if (vec_mat(g.field, x, m) == x) elems.push_back(m);
    }
    return group_from_elements(g.field, g.n, std::move(elems));
}

}  // namespace swcx
