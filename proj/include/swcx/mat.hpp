#pragma once

#include <cstdint>
#include <vector>

#include "swcx/field.hpp"

namespace swcx {

using Vec = std::vector<Felt>;

// Dense row-major matrix over a finite field. The field is not stored;
// operations take it explicitly, matching the element convention.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Felt> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    Felt& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    Felt at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    Vec row(int r) const;
    void set_row(int r, const Vec& v);

    static Mat identity(int n);
    static Mat from_rows(const std::vector<Vec>& rows);

    bool operator==(const Mat&) const = default;
};

// Canonical index of a vector in F_q^n: big-endian base-q digits, so index
// order coincides with lexicographic order on vectors.
std::uint64_t vec_index(int q, const Vec& v);
Vec vec_from_index(int q, int n, std::uint64_t idx);

// Row-major big-endian packed encoding; total order on same-shape matrices.
// Throws GuardError if q^(rows*cols) does not fit 64 bits.
std::uint64_t mat_key(int q, const Mat& m);

Vec vec_add(const Field& F, const Vec& x, const Vec& y);
Vec vec_scale(const Field& F, Felt c, const Vec& x);
Vec vec_sub(const Field& F, const Vec& x, const Vec& y);
bool vec_is_zero(const Vec& x);

// Row vector times matrix (the right group action v -> v*m).
Vec vec_mat(const Field& F, const Vec& v, const Mat& m);
Mat mat_mul(const Field& F, const Mat& x, const Mat& y);
Mat mat_pow(const Field& F, const Mat& m, long long e);
Mat transpose(const Mat& m);
Mat hconcat(const Mat& x, const Mat& y);
Mat vconcat(const Mat& x, const Mat& y);
Mat submatrix_rows(const Mat& m, const std::vector<int>& rows);

// Reduced row echelon form (unique canonical form; idempotent).
Mat row_reduce(const Field& F, const Mat& m);
int rank(const Field& F, const Mat& m);
bool is_invertible(const Field& F, const Mat& m);
Mat mat_inv(const Field& F, const Mat& m);  // throws std::invalid_argument if singular
Felt det(const Field& F, const Mat& m);

// Multiplicative order of an invertible matrix (smallest e >= 1 with m^e = I).
long long mat_order(const Field& F, const Mat& m);

}  // namespace swcx
