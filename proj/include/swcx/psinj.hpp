#pragma once

#include <optional>
#include <vector>

#include "swcx/group.hpp"

namespace swcx {

// An injective, orbit-preserving linear map on a subspace, recorded by the
// images of the subspace's canonical basis rows, together with the extension
// verdict: either an extending matrix that preserves the group's orbits and
// agrees on the subspace, or proof-by-exhaustion that none exists.
struct PsinjWitness {
    Subspace u;
    std::vector<Vec> f_images;
    bool extends = false;
    std::optional<Mat> extender;
};

struct PsinjResult {
    bool pseudo_injective = true;
    std::optional<PsinjWitness> witness;  // first failure in canonical order
};

// Decides pseudo-injectivity of F_q^n with respect to g: every injective
// linear map from a subspace into the ambient space that preserves the orbit
// partition of g extends to an invertible orbit-preserving map on the whole
// space. Subspaces of dimension < 2 always extend (to an element of g itself)
// and the full space is its own extension, so dimensions 2..n-1 are searched.
// Deterministic: subspaces in canonical order, basis images ascending by
// vector index, extension search ascending over completions.
PsinjResult is_pseudo_injective(const MatGroup& g,
                                std::uint64_t enum_guard = kDefaultEnumGuard,
                                std::uint64_t gl_guard = kDefaultGlGuard);

// Block-diagonal matrix with m copies of the m x m invertible block; acts on
// F_q^(m^2). Throws std::invalid_argument on shape mismatch or singular block.
Mat build_T(const Field& F, int m, const Mat& block);

// diag(T, I_{n - m^2}) for n strictly greater than m^2.
Mat build_Tprime(const Field& F, int n, int m, const Mat& block);

// The multiplication-by-omega matrix in GL_2(F_q), in the basis (1, omega),
// where omega is the smallest (by pair encoding c0 + c1*q) generator of the
// multiplicative group of the quadratic extension built from the canonical
// irreducible x^2 + alpha*x + beta. The matrix has order q^2 - 1 and first
// row (0, 1), i.e. (1,0) maps to (0,1).
Mat primitive_mult_matrix(const Field& F);

// 3 x 3 block matrix diag(primitive_mult_matrix, det of it); requires q != 2.
Mat build_X(const Field& F);

struct CounterexampleReport {
    MatGroup group;
    bool closed_confirmed = false;   // brute-force closure computed and equal
    bool closed_trusted = false;     // closure guard exceeded; closedness assumed
    std::uint64_t closure_size = 0;
    bool u_meets_two_orbits = false;  // witness subspace meets {0} and one orbit
    PsinjWitness witness;
    bool valid = false;  // witness re-validated: injective, orbit-preserving,
                         // no extension among orbit-preserving matrices
};

// Non-pseudo-injectivity witness for n >= 4: the cyclic group generated by
// the block-diagonal matrix over the primitive multiplication block (padded
// with an identity tail for n > 4), subspace span{e1, e2}, and the swap of
// the two basis vectors.
CounterexampleReport counterexample_dim_ge4(const Field& F, int n,
                                            std::uint64_t gl_guard = kDefaultGlGuard);

// Non-pseudo-injectivity witness for n = 3, q != 2: the cyclic group
// generated by build_X, subspace span{e1, e2}, the swap map; the extension
// search runs over the full orbit-preserving closure in GL_3(F_q).
CounterexampleReport counterexample_dim3(const Field& F,
                                         std::uint64_t gl_guard = kDefaultGlGuard);

struct F23Report {
    int num_partitions = 0;  // orbit partitions in the subgroup poset
    int num_closed = 0;      // distinct closed subgroups (their stabilizers)
    int num_fixing = 0;      // closed subgroups whose orbit of e1 is {e1}
    bool step2_ok = false;   // transitive transport on the second basis vector
    bool crosscheck_ok = false;  // is_pseudo_injective true for every closed G
    bool overall = false;
};

// Full pseudo-injectivity computation for F_2^3: enumerates the closed
// subgroups of GL_3(F_2) through the orbit-partition poset, filters to those
// fixing e1, and checks that every orbit-compatible image c of e2 (same orbit
// as e2, with e1 + c in the orbit of e1 + e2) is reached by a group element
// fixing e1. Cross-checks the general decision procedure on every closed
// subgroup.
F23Report f23_check();

// The classification's prediction: F_q^n is pseudo-injective for every
// subgroup of GL_n(F_q) iff n < 3, or n = 3 and q = 2.
bool classify(int n, int q);

}  // namespace swcx
