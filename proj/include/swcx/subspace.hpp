#pragma once

#include <cstdint>
#include <vector>

#include "swcx/mat.hpp"

namespace swcx {

// Default guard on ambient enumeration size (number of vectors q^m).
inline constexpr std::uint64_t kDefaultEnumGuard = 1ull << 24;

// A subspace of F_q^ambient in canonical form: the basis is the unique reduced
// row echelon form of the span with zero rows dropped, so two Subspace values
// are equal iff their spans are equal.
struct Subspace {
    int ambient = 0;
    Mat basis;  // dim x ambient, RREF, strictly increasing pivots, no zero rows

    int dim() const { return basis.rows; }
    bool operator==(const Subspace&) const = default;
    // Deterministic total order for sorted containers: by ambient, then dim,
    // then row-major entries.
    bool operator<(const Subspace& o) const;
};

Subspace zero_subspace(int ambient);
Subspace full_subspace(int ambient);

// Canonicalizes the span of the given vectors (each of length ambient).
Subspace span_of(const Field& F, const std::vector<Vec>& gens, int ambient);

bool subspace_contains(const Field& F, const Subspace& s, const Vec& v);

// All q^dim elements, ordered by ascending coefficient tuples against the
// canonical basis rows.
std::vector<Vec> subspace_elements(const Field& F, const Subspace& s,
                                   std::uint64_t guard = kDefaultEnumGuard);

Subspace subspace_intersect(const Field& F, const Subspace& u, const Subspace& v);

// Left kernel { v : v*m = 0 } of the row-vector action, canonical.
Subspace kernel(const Field& F, const Mat& m);
// Row space of m (the image of v -> v*m), canonical.
Subspace image(const Field& F, const Mat& m);

// All subspaces of F_q^m of dimension d, deterministically ordered: pivot
// column sets ascending lexicographically, free entries counting up from zero.
// The first dim-2 subspace of any ambient is span{e1, e2}.
std::vector<Subspace> subspaces(const Field& F, int m, int d,
                                std::uint64_t guard = kDefaultEnumGuard);

std::uint64_t gaussian_binomial(int m, int d, int q);

// |(x + U) ∩ (y + V)| by enumeration of the smaller coset.
std::uint64_t coset_intersection_size(const Field& F, const Vec& x, const Subspace& u,
                                      const Vec& y, const Subspace& v,
                                      std::uint64_t guard = kDefaultEnumGuard);

}  // namespace swcx
