#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "swcx/code.hpp"

namespace swcx {

// Point of the projective line, normalized: b = 1, or (a, b) = (1, 0).
struct ProjPoint {
    Felt a = 0;
    Felt b = 0;
    bool operator==(const ProjPoint&) const = default;
};

// The q+1 points, ordered [a:1] by ascending a, then [1:0].
std::vector<ProjPoint> proj_line(const Field& F);

// Normalizes a nonzero pair to its canonical representative.
ProjPoint normalize_proj(const Field& F, Felt a, Felt b);

// The 4x2 coordinate matrix at [a:b] for the quadratic x^2 + alpha*x + beta:
// rows (-ba, -b^2; a^2, ab; beta*b^2, -alpha*b^2 - ab; -beta*ab, a^2 +
// alpha*ab), all divided by Q(a,b). Independent of the representative.
Mat lambda_matrix(const Field& F, const ProjPoint& pt, Felt alpha, Felt beta);

// lambda with rows 2 and 3 exchanged.
Mat m_matrix(const Field& F, const ProjPoint& pt, Felt alpha, Felt beta);

// The length-(q+1) code C over A = F_q^2 with generator rows v1..v4 the images
// of the standard basis, and the map f sending the lambda blocks to the
// row-flipped blocks.
struct ConstructionResult {
    Field field;
    Felt alpha = 0, beta = 0;
    std::vector<ProjPoint> points;
    std::vector<Mat> lambdas;
    std::vector<Mat> ms;
    Code code;
    CodeMap fmap;

    ConstructionResult() : field(2, 1) {}
};

// Builds the construction over F; chi overrides the canonical irreducible
// quadratic when supplied (throws if the supplied quadratic has a root).
ConstructionResult build_construction(const Field& F,
                                      std::optional<std::pair<Felt, Felt>> chi = std::nullopt);

struct ConstructVerifyReport {
    bool is_isometry = false;           // f preserves swc of the trivial group
    bool fixes_and_swaps = false;       // f fixes v1, v4 and exchanges v2, v3
    bool is_automorphism = false;       // f(C) = C
    bool preimage_formulas_hold = false;
    bool indicator_identity = false;    // sum of V-coset indicators = sum of U's
    bool ext_linear = false;            // omega-multiple row relations
    bool mds = false;
    int min_distance = 0;
    bool kernel_multisets_differ = false;  // kernel multisets differ
    bool unextendable = false;          // no GL_2-monomial extension

    bool all() const;
};

ConstructVerifyReport verify_construction(const ConstructionResult& r);

struct SubcodeReport {
    bool constant_weight = false;           // nonzero words of C' have weight n-1
    bool restriction_is_isometry = false;
    bool restriction_unextendable = false;  // neither trivial- nor GL-monomial
    bool preimage_piecewise_hold = false;
    bool covering_zero_orbit = false;
    bool covering_nonzero_orbit = false;
    bool dim3_restrictions_unextendable = false;  // on <v1,v2,v3> and <v2,v3,v4>
    bool one_dim_restrictions_extend = false;

    bool all() const;
};

SubcodeReport subcode_analysis(const ConstructionResult& r);

// Embeds the alphabet into F_q^ell_target (first two coordinates) and appends
// n_target - (q+1) zero columns to both generator matrices.
std::pair<Code, CodeMap> pad_and_embed(const ConstructionResult& r, int ell_target,
                                       int n_target);

}  // namespace swcx
