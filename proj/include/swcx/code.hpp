#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "swcx/group.hpp"

namespace swcx {

// Guard on codeword enumeration (q^k message vectors).
inline constexpr std::uint64_t kDefaultWordGuard = 1ull << 24;

// An F_q-linear code over the alphabet A = F_q^ell, block length n, dimension
// k, given by a full-rank generator matrix whose ell-wide column blocks are
// the coordinate maps.
struct Code {
    Field field;
    int ell = 0;
    int n = 0;
    int k = 0;
    Mat gen;  // k x (n*ell), rank k

    Code() : field(2, 1) {}
    // Validates shape and full row rank; throws std::invalid_argument.
    Code(const Field& f, int ell, int n, Mat gen);

    // The i-th coordinate map as a k x ell column block of gen.
    Mat coordinate_block(int i) const;
};

// A linear map f on a code, stored as mu = f∘lambda: the images of the
// generator rows. Well defined on the code because lambda is injective.
struct CodeMap {
    Code source;
    Mat mu;  // same shape as source.gen

    CodeMap() = default;
    CodeMap(Code c, Mat mu);
    Mat mu_block(int i) const;
};

// Symmetrized weight composition: per-orbit coordinate counts.
struct SwcVector {
    std::map<std::int32_t, int> counts;  // orbit label -> count (zeros omitted)
    bool operator==(const SwcVector&) const = default;
};

// h(a)_i = g_i(a_{perm[i]}): coordinate permutation plus per-coordinate
// alphabet automorphisms from the closure of the defining group.
struct MonomialMap {
    std::vector<int> perm;   // 0-based
    std::vector<Mat> autos;  // ell x ell invertible
};

// Number of nonzero ell-blocks.
int hamming_weight(const Vec& a, int ell);

SwcVector swc(const Field& F, const Vec& a, const OrbitPartition& p);

Vec apply_monomial(const Field& F, const MonomialMap& h, const Vec& a, int ell);

// True iff swc(lambda(w)) = swc(mu(w)) for every message w.
bool is_swc_isometry(const CodeMap& m, const OrbitPartition& p,
                     std::uint64_t guard = kDefaultWordGuard);

// A permutation pi with lambda_i^{-1}(O) = mu_{pi(i)}^{-1}(O) for every orbit
// O and coordinate i, when one exists. Found as a perfect matching on the
// relation "orbit(lambda_i(w)) = orbit(mu_j(w)) for all w" by augmenting-path
// search, columns visited in ascending index order.
std::optional<std::vector<int>> coordinate_matching(const CodeMap& m, const OrbitPartition& p,
                                                    std::uint64_t guard = kDefaultWordGuard);

// Searches for a monomial map h with h restricted to the code equal to f.
// Exhaustive over matchings of the compatibility relation and, per coordinate,
// over elements of GL_ell preserving the orbits of g. Deterministic: first
// matching in lexicographic order, first automorphism in encoding order.
std::optional<MonomialMap> extend_to_monomial(const CodeMap& m, const MatGroup& g,
                                              std::uint64_t word_guard = kDefaultWordGuard,
                                              std::uint64_t gl_guard = kDefaultGlGuard);

// Tiny-scale equivalence check: every invertible linear map on A^n is an
// swc-isometry iff it is a monomial map. Guarded by q^(n*ell) <= 2^12.
bool full_space_isometry_is_monomial(const Field& F, int n, int ell, const MatGroup& g,
                                     std::uint64_t space_guard = 1ull << 12);

struct MinDistResult {
    int d = 0;
    bool mds = false;
};

// Minimum block weight of the construction's code, validated first to be
// linear over the quadratic extension via the omega-multiple row relations
// (rows 3,4 are the omega-multiples of rows 1,2). mds tests d = n - 1 for the
// extension parameters [n, 2].
MinDistResult min_distance_ext(const Code& c, Felt alpha, Felt beta);

struct BoundFailure {
    Mat basis;   // generator of the offending code
    Mat images;  // images of the basis rows under the non-extending isometry
};

struct BoundReport {
    int q = 0, ell = 0, n = 0;
    std::uint64_t num_codes = 0;
    std::uint64_t num_isometries = 0;
    std::uint64_t num_failures = 0;
    bool all_extend = true;
    std::vector<BoundFailure> failures;  // capped sample
};

// Enumerates every code C in A^n and every injective linear map C -> A^n
// preserving swc of the trivial group, and tests extension to a coordinate
// permutation. Isometries are enumerated by basis images with partial-span
// pruning.
BoundReport verify_bound_trivial_group(const Field& F, int ell, int n,
                                       std::uint64_t guard = kDefaultEnumGuard,
                                       std::size_t max_recorded_failures = 16);

}  // namespace swcx
