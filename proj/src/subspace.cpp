#include "swcx/subspace.hpp"

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

Mat drop_zero_rows(const Mat& m) {
    std::vector<Vec> rows;
    for (int i = 0; i < m.rows; ++i) {
        Vec r = m.row(i);
        if (!vec_is_zero(r)) rows.push_back(std::move(r));
    }
    if (rows.empty()) return Mat(0, m.cols);
    return Mat::from_rows(rows);
}

}  // namespace

bool Subspace::operator<(const Subspace& o) const {
    if (ambient != o.ambient) return ambient < o.ambient;
    if (basis.rows != o.basis.rows) return basis.rows < o.basis.rows;
    return basis.a < o.basis.a;
}

Subspace zero_subspace(int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Mat(0, ambient);
    return s;
}

Subspace full_subspace(int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Mat::identity(ambient);
    return s;
}

Subspace span_of(const Field& F, const std::vector<Vec>& gens, int ambient) {
    for (const Vec& g : gens) {
        if (static_cast<int>(g.size()) != ambient) {
            throw std::invalid_argument("generator length differs from ambient dimension");
        }
    }
    if (gens.empty()) return zero_subspace(ambient);
    Subspace s;
    s.ambient = ambient;
    s.basis = drop_zero_rows(row_reduce(F, Mat::from_rows(gens)));
    return s;
}

bool subspace_contains(const Field& F, const Subspace& s, const Vec& v) {
    if (static_cast<int>(v.size()) != s.ambient) {
        throw std::invalid_argument("vector length differs from ambient dimension");
    }
    // Reduce v against the RREF basis; membership iff the residual vanishes.
    Vec r = v;
    for (int i = 0; i < s.basis.rows; ++i) {
        int piv = -1;
        for (int j = 0; j < s.ambient; ++j) {
            if (s.basis.at(i, j) != 0) {
                piv = j;
                break;
            }
        }
        Felt c = r[piv];
        if (c == 0) continue;
        for (int j = piv; j < s.ambient; ++j) {
            r[j] = F.sub(r[j], F.mul(c, s.basis.at(i, j)));
        }
    }
    return vec_is_zero(r);
}

std::vector<Vec> subspace_elements(const Field& F, const Subspace& s, std::uint64_t guard) {
    int q = F.q();
    std::uint64_t count = upow(q, s.dim());
    if (count > guard) {
        throw GuardError("subspace has " + std::to_string(count) +
                         " elements, guard is " + std::to_string(guard));
    }
    std::vector<Vec> out;
    out.reserve(count);
    Vec coef(s.dim(), 0);
    for (std::uint64_t it = 0; it < count; ++it) {
        std::uint64_t x = it;
        for (int i = s.dim() - 1; i >= 0; --i) {
            coef[i] = static_cast<Felt>(x % q);
            x /= q;
        }
        Vec v(s.ambient, 0);
        for (int i = 0; i < s.dim(); ++i) {
            if (coef[i] == 0) continue;
            for (int j = 0; j < s.ambient; ++j) {
                v[j] = F.add(v[j], F.mul(coef[i], s.basis.at(i, j)));
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

Subspace subspace_intersect(const Field& F, const Subspace& u, const Subspace& v) {
    if (u.ambient != v.ambient) throw std::invalid_argument("ambient dimension mismatch");
    if (u.dim() == 0 || v.dim() == 0) return zero_subspace(u.ambient);
    // Residual of each u-basis row after reduction by v's basis; a combination
    // of u-rows lies in v iff the same combination of residuals vanishes.
    Mat residual(u.dim(), u.ambient);
    for (int i = 0; i < u.dim(); ++i) {
        Vec r = u.basis.row(i);
        for (int t = 0; t < v.basis.rows; ++t) {
            int piv = -1;
            for (int j = 0; j < v.ambient; ++j) {
                if (v.basis.at(t, j) != 0) {
                    piv = j;
                    break;
                }
            }
            Felt c = r[piv];
            if (c == 0) continue;
            for (int j = piv; j < v.ambient; ++j) {
                r[j] = F.sub(r[j], F.mul(c, v.basis.at(t, j)));
            }
        }
        residual.set_row(i, r);
    }
    Subspace coef = kernel(F, residual);
    std::vector<Vec> gens;
    for (int i = 0; i < coef.dim(); ++i) {
        gens.push_back(vec_mat(F, coef.basis.row(i), u.basis));
    }
    return span_of(F, gens, u.ambient);
}

Subspace kernel(const Field& F, const Mat& m) {
    // Solve v*m = 0 as the right null space of m^T via free variables.
    Mat mt = row_reduce(F, transpose(m));
    int n = m.rows;  // ambient of the kernel
    std::vector<int> pivot_of_col(n, -1);
    std::vector<int> pivots;
    for (int i = 0; i < mt.rows; ++i) {
        for (int j = 0; j < n; ++j) {
            if (mt.at(i, j) != 0) {
                pivot_of_col[j] = i;
                pivots.push_back(j);
                break;
            }
        }
    }
    std::vector<Vec> gens;
    for (int free = 0; free < n; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        Vec v(n, 0);
        v[free] = 1;
        for (int j : pivots) {
            v[j] = F.neg(mt.at(pivot_of_col[j], free));
        }
        gens.push_back(std::move(v));
    }
    return span_of(F, gens, n);
}

Subspace image(const Field& F, const Mat& m) {
    Subspace s;
    s.ambient = m.cols;
    s.basis = drop_zero_rows(row_reduce(F, m));
    return s;
}

std::vector<Subspace> subspaces(const Field& F, int m, int d, std::uint64_t guard) {
    if (d < 0 || d > m) throw std::invalid_argument("dimension out of range");
    int q = F.q();
    if (upow(q, m) > guard) {
        throw GuardError("ambient has " + std::to_string(upow(q, m)) +
                         " vectors, guard is " + std::to_string(guard));
    }
    std::vector<Subspace> out;
    if (d == 0) {
        out.push_back(zero_subspace(m));
        return out;
    }
    // Pivot column sets in ascending lexicographic order.
    std::vector<int> piv(d);
    for (int i = 0; i < d; ++i) piv[i] = i;
    while (true) {
        // Free positions: (row i, col j) with j > piv[i], j not a pivot column.
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < d; ++i) {
            for (int j = piv[i] + 1; j < m; ++j) {
                bool is_piv = false;
                for (int t = 0; t < d; ++t) {
                    if (piv[t] == j) {
                        is_piv = true;
                        break;
                    }
                }
                if (!is_piv) free_pos.emplace_back(i, j);
            }
        }
        std::uint64_t combos = upow(q, static_cast<int>(free_pos.size()));
        for (std::uint64_t it = 0; it < combos; ++it) {
            Subspace s;
            s.ambient = m;
            s.basis = Mat(d, m);
            for (int i = 0; i < d; ++i) s.basis.at(i, piv[i]) = 1;
            std::uint64_t x = it;
            for (int t = static_cast<int>(free_pos.size()) - 1; t >= 0; --t) {
                s.basis.at(free_pos[t].first, free_pos[t].second) = static_cast<Felt>(x % q);
                x /= q;
            }
            out.push_back(std::move(s));
        }
        // Next pivot combination.
        int i = d - 1;
        while (i >= 0 && piv[i] == m - d + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int t = i + 1; t < d; ++t) piv[t] = piv[t - 1] + 1;
    }
    return out;
}

std::uint64_t gaussian_binomial(int m, int d, int q) {
    if (d < 0 || d > m) return 0;
    // Product formula (q^m - q^i) / (q^d - q^i); compute as exact integer via
    // the numerator-of-ratios form to avoid division headaches.
    // [m d]_q = prod_{i=0}^{d-1} (q^(m-i) - 1) / (q^(i+1) - 1)
    std::uint64_t num = 1, den = 1;
    for (int i = 0; i < d; ++i) {
        num *= upow(q, m - i) - 1;
        den *= upow(q, i + 1) - 1;
    }
    return num / den;
}

std::uint64_t coset_intersection_size(const Field& F, const Vec& x, const Subspace& u,
                                      const Vec& y, const Subspace& v, std::uint64_t guard) {
    if (u.ambient != v.ambient || static_cast<int>(x.size()) != u.ambient ||
        static_cast<int>(y.size()) != v.ambient) {
        throw std::invalid_argument("coset arguments must share one ambient space");
    }
    const bool u_smaller = u.dim() <= v.dim();
    const Subspace& small = u_smaller ? u : v;
    const Subspace& big = u_smaller ? v : u;
    const Vec& base = u_smaller ? x : y;
    const Vec& other = u_smaller ? y : x;
    std::uint64_t count = 0;
    for (const Vec& s : subspace_elements(F, small, guard)) {
        Vec p = vec_add(F, base, s);
        if (subspace_contains(F, big, vec_sub(F, p, other))) ++count;
    }
    return count;
}

}  // namespace swcx
