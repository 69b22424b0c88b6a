#include "swcx/mat.hpp"

#include <stdexcept>
#include <string>

#include "swcx/error.hpp"

namespace swcx {

Vec Mat::row(int r) const {
    return Vec(a.begin() + static_cast<size_t>(r) * cols,
               a.begin() + static_cast<size_t>(r + 1) * cols);
}

void Mat::set_row(int r, const Vec& v) {
    if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("row length mismatch");
    std::copy(v.begin(), v.end(), a.begin() + static_cast<size_t>(r) * cols);
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat();
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(static_cast<int>(i), rows[i]);
    return m;
}

std::uint64_t vec_index(int q, const Vec& v) {
    std::uint64_t idx = 0;
    for (Felt x : v) idx = idx * q + x;
    return idx;
}

Vec vec_from_index(int q, int n, std::uint64_t idx) {
    Vec v(n);
    for (int i = n - 1; i >= 0; --i) {
        v[i] = static_cast<Felt>(idx % q);
        idx /= q;
    }
    return v;
}

std::uint64_t mat_key(int q, const Mat& m) {
    std::uint64_t key = 0;
    for (Felt x : m.a) {
        if (key > (UINT64_MAX - x) / q) {
            throw GuardError("matrix encoding exceeds 64 bits");
        }
        key = key * q + x;
    }
    return key;
}

Vec vec_add(const Field& F, const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vector size mismatch");
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = F.add(x[i], y[i]);
    return r;
}

Vec vec_scale(const Field& F, Felt c, const Vec& x) {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = F.mul(c, x[i]);
    return r;
}

Vec vec_sub(const Field& F, const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vector size mismatch");
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = F.sub(x[i], y[i]);
    return r;
}

bool vec_is_zero(const Vec& x) {
    for (Felt v : x) {
        if (v != 0) return false;
    }
    return true;
}

Vec vec_mat(const Field& F, const Vec& v, const Mat& m) {
    if (static_cast<int>(v.size()) != m.rows) throw std::invalid_argument("dimension mismatch");
    Vec r(m.cols, 0);
    for (int i = 0; i < m.rows; ++i) {
        Felt c = v[i];
        if (c == 0) continue;
        for (int j = 0; j < m.cols; ++j) {
            r[j] = F.add(r[j], F.mul(c, m.at(i, j)));
        }
    }
    return r;
}

Mat mat_mul(const Field& F, const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("dimension mismatch");
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int t = 0; t < x.cols; ++t) {
            Felt c = x.at(i, t);
            if (c == 0) continue;
            for (int j = 0; j < y.cols; ++j) {
                r.at(i, j) = F.add(r.at(i, j), F.mul(c, y.at(t, j)));
            }
        }
    }
    return r;
}

Mat mat_pow(const Field& F, const Mat& m, long long e) {
    if (m.rows != m.cols) throw std::invalid_argument("matrix power needs a square matrix");
    if (e < 0) return mat_pow(F, mat_inv(F, m), -e);
    Mat r = Mat::identity(m.rows);
    Mat b = m;
    while (e > 0) {
        if (e & 1) r = mat_mul(F, r, b);
        b = mat_mul(F, b, b);
        e >>= 1;
    }
    return r;
}

Mat transpose(const Mat& m) {
    Mat r(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    }
    return r;
}

Mat hconcat(const Mat& x, const Mat& y) {
    if (x.rows != y.rows) throw std::invalid_argument("row count mismatch");
    Mat r(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

Mat vconcat(const Mat& x, const Mat& y) {
    if (x.cols != y.cols) throw std::invalid_argument("column count mismatch");
    Mat r(x.rows + y.rows, x.cols);
    std::copy(x.a.begin(), x.a.end(), r.a.begin());
    std::copy(y.a.begin(), y.a.end(), r.a.begin() + x.a.size());
    return r;
}

Mat submatrix_rows(const Mat& m, const std::vector<int>& rows) {
    Mat r(static_cast<int>(rows.size()), m.cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < m.cols; ++j) r.at(static_cast<int>(i), j) = m.at(rows[i], j);
    }
    return r;
}

Mat row_reduce(const Field& F, const Mat& m) {
    Mat r = m;
    int lead = 0;
    for (int row = 0; row < r.rows && lead < r.cols; ++row) {
        int piv = -1;
        while (lead < r.cols) {
            for (int i = row; i < r.rows; ++i) {
                if (r.at(i, lead) != 0) {
                    piv = i;
                    break;
                }
            }
            if (piv >= 0) break;
            ++lead;
        }
        if (piv < 0) break;
        if (piv != row) {
            for (int j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(row, j));
        }
        Felt s = F.inv(r.at(row, lead));
        for (int j = 0; j < r.cols; ++j) r.at(row, j) = F.mul(s, r.at(row, j));
        for (int i = 0; i < r.rows; ++i) {
            if (i == row) continue;
            Felt c = r.at(i, lead);
            if (c == 0) continue;
            for (int j = 0; j < r.cols; ++j) {
                r.at(i, j) = F.sub(r.at(i, j), F.mul(c, r.at(row, j)));
            }
        }
        ++lead;
    }
    return r;
}

int rank(const Field& F, const Mat& m) {
    Mat r = row_reduce(F, m);
    int rk = 0;
    for (int i = 0; i < r.rows; ++i) {
        bool nonzero = false;
        for (int j = 0; j < r.cols; ++j) {
            if (r.at(i, j) != 0) {
                nonzero = true;
                break;
            }
        }
        if (nonzero) ++rk;
    }
    return rk;
}

bool is_invertible(const Field& F, const Mat& m) {
    return m.rows == m.cols && rank(F, m) == m.rows;
}

Mat mat_inv(const Field& F, const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse needs a square matrix");
    int n = m.rows;
    Mat aug = row_reduce(F, hconcat(m, Mat::identity(n)));
    // Left block must reduce to the identity.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (aug.at(i, j) != (i == j ? 1 : 0)) {
                throw std::invalid_argument("matrix is singular");
            }
        }
    }
    Mat r(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    }
    return r;
}

Felt det(const Field& F, const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant needs a square matrix");
    Mat r = m;
    int n = m.rows;
    Felt d = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i) {
            if (r.at(i, col) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(r.at(piv, j), r.at(col, j));
            d = F.neg(d);
        }
        d = F.mul(d, r.at(col, col));
        Felt s = F.inv(r.at(col, col));
        for (int i = col + 1; i < n; ++i) {
            Felt c = F.mul(s, r.at(i, col));
            if (c == 0) continue;
            for (int j = col; j < n; ++j) {
                r.at(i, j) = F.sub(r.at(i, j), F.mul(c, r.at(col, j)));
            }
        }
    }
    return d;
}

long long mat_order(const Field& F, const Mat& m) {
    if (!is_invertible(F, m)) throw std::invalid_argument("order needs an invertible matrix");
    Mat id = Mat::identity(m.rows);
    Mat cur = m;
    long long e = 1;
    while (cur != id) {
        cur = mat_mul(F, cur, m);
        ++e;
        if (e > (1LL << 40)) throw std::logic_error("order computation runaway");
    }
    return e;
}

}  // namespace swcx
