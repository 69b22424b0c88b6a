#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <utility>

#include "doctest.h"
#include "swcx/construct.hpp"

using namespace swcx;

TEST_CASE("projective line enumeration") {
    std::vector<ProjPoint> p2 = proj_line(Field(2, 1));
    REQUIRE(p2.size() == 3);
    CHECK(p2[0] == ProjPoint{0, 1});
    CHECK(p2[1] == ProjPoint{1, 1});
    CHECK(p2[2] == ProjPoint{1, 0});

    std::vector<ProjPoint> p3 = proj_line(Field(3, 1));
    REQUIRE(p3.size() == 4);
    CHECK(p3[0] == ProjPoint{0, 1});
    CHECK(p3[1] == ProjPoint{1, 1});
    CHECK(p3[2] == ProjPoint{2, 1});
    CHECK(p3[3] == ProjPoint{1, 0});
}

TEST_CASE("projective normalization") {
    Field F(3, 1);
    CHECK(normalize_proj(F, 2, 2) == ProjPoint{1, 1});
    CHECK(normalize_proj(F, 0, 2) == ProjPoint{0, 1});
    CHECK(normalize_proj(F, 2, 0) == ProjPoint{1, 0});
    CHECK_THROWS_AS(normalize_proj(F, 0, 0), std::invalid_argument);
}

TEST_CASE("coordinate matrices over F_2") {
    Field F(2, 1);
    Felt alpha = 1, beta = 1;
    CHECK(lambda_matrix(F, {0, 1}, alpha, beta) ==
          Mat::from_rows({{0, 1}, {0, 0}, {1, 1}, {0, 0}}));
    CHECK(lambda_matrix(F, {1, 1}, alpha, beta) ==
          Mat::from_rows({{1, 1}, {1, 1}, {1, 0}, {1, 0}}));
    CHECK(lambda_matrix(F, {1, 0}, alpha, beta) ==
          Mat::from_rows({{0, 0}, {1, 0}, {0, 0}, {0, 1}}));
}

TEST_CASE("coordinate matrices over F_3") {
    Field F(3, 1);
    Felt alpha = 0, beta = 1;
    CHECK(lambda_matrix(F, {0, 1}, alpha, beta) ==
          Mat::from_rows({{0, 2}, {0, 0}, {1, 0}, {0, 0}}));
    CHECK(lambda_matrix(F, {1, 1}, alpha, beta) ==
          Mat::from_rows({{1, 1}, {2, 2}, {2, 1}, {1, 2}}));
    CHECK(lambda_matrix(F, {2, 1}, alpha, beta) ==
          Mat::from_rows({{2, 1}, {2, 1}, {2, 2}, {2, 2}}));
    CHECK(lambda_matrix(F, {1, 0}, alpha, beta) ==
          Mat::from_rows({{0, 0}, {1, 0}, {0, 0}, {0, 1}}));
}

TEST_CASE("row-swapped companion matrices") {
    for (int q : {2, 3, 4, 5}) {
        Field F = field_for_order(q);
        auto [alpha, beta] = find_irreducible_quadratic(F);
        for (const ProjPoint& pt : proj_line(F)) {
            Mat lam = lambda_matrix(F, pt, alpha, beta);
            Mat m = m_matrix(F, pt, alpha, beta);
            CHECK(m == submatrix_rows(lam, {0, 2, 1, 3}));
        }
    }
}

TEST_CASE("construction over F_2 matches the worked example") {
    ConstructionResult r = build_construction(Field(2, 1));
    CHECK(r.alpha == 1);
    CHECK(r.beta == 1);
    REQUIRE(r.points.size() == 3);
    CHECK(r.code.ell == 2);
    CHECK(r.code.n == 3);
    CHECK(r.code.k == 4);
    CHECK(r.code.gen == Mat::from_rows({{0, 1, 1, 1, 0, 0},
                                        {0, 0, 1, 1, 1, 0},
                                        {1, 1, 1, 0, 0, 0},
                                        {0, 0, 1, 0, 0, 1}}));
    CHECK(r.fmap.mu == submatrix_rows(r.code.gen, {0, 2, 1, 3}));
    REQUIRE(r.lambdas.size() == 3);
    CHECK(hconcat(hconcat(r.lambdas[0], r.lambdas[1]), r.lambdas[2]) == r.code.gen);
    CHECK(hconcat(hconcat(r.ms[0], r.ms[1]), r.ms[2]) == r.fmap.mu);
}

TEST_CASE("quadratic override") {
    Field F(3, 1);
    ConstructionResult dflt = build_construction(F);
    CHECK(dflt.alpha == 0);
    CHECK(dflt.beta == 1);
    ConstructionResult same = build_construction(F, std::pair<Felt, Felt>{0, 1});
    CHECK(same.code.gen == dflt.code.gen);

    // x^2 + 2 has the root 1 over F_3 and must be rejected.
    CHECK_THROWS_AS(build_construction(F, std::pair<Felt, Felt>{0, 2}), std::invalid_argument);

    // x^2 + 2x + 2 is irreducible; the alternate construction verifies too.
    ConstructionResult alt = build_construction(F, std::pair<Felt, Felt>{2, 2});
    CHECK(alt.alpha == 2);
    CHECK(alt.beta == 2);
    CHECK(verify_construction(alt).all());
}

TEST_CASE("full verification for small field orders") {
    for (int q : {2, 3, 4, 5}) {
        CAPTURE(q);
        ConstructionResult r = build_construction(field_for_order(q));
        ConstructVerifyReport rep = verify_construction(r);
        CHECK(rep.is_isometry);
        CHECK(rep.fixes_and_swaps);
        CHECK(rep.is_automorphism);
        CHECK(rep.preimage_formulas_hold);
        CHECK(rep.indicator_identity);
        CHECK(rep.ext_linear);
        CHECK(rep.mds);
        CHECK(rep.min_distance == q);
        CHECK(rep.kernel_multisets_differ);
        CHECK(rep.unextendable);
        CHECK(rep.all());
    }
}

TEST_CASE("tampering breaks the isometry") {
    ConstructionResult r = build_construction(Field(2, 1));
    Mat mu = r.fmap.mu;
    mu.at(0, 0) = r.field.sub(1, mu.at(0, 0));
    CHECK(!is_swc_isometry(CodeMap(r.code, mu), singleton_partition(2, 2)));
}

TEST_CASE("two-dimensional subcode analysis") {
    for (int q : {2, 3}) {
        CAPTURE(q);
        SubcodeReport rep = subcode_analysis(build_construction(field_for_order(q)));
        CHECK(rep.constant_weight);
        CHECK(rep.restriction_is_isometry);
        CHECK(rep.restriction_unextendable);
        CHECK(rep.preimage_piecewise_hold);
        CHECK(rep.covering_zero_orbit);
        CHECK(rep.covering_nonzero_orbit);
        CHECK(rep.dim3_restrictions_unextendable);
        CHECK(rep.one_dim_restrictions_extend);
        CHECK(rep.all());
    }
}

TEST_CASE("padding and embedding") {
    Field F(2, 1);
    ConstructionResult r = build_construction(F);

    SUBCASE("identity embedding keeps the matrices") {
        auto [code, map] = pad_and_embed(r, 2, 3);
        CHECK(code.gen == r.code.gen);
        CHECK(map.mu == r.fmap.mu);
    }

    SUBCASE("wider alphabet, longer code") {
        auto [code, map] = pad_and_embed(r, 3, 4);
        CHECK(code.ell == 3);
        CHECK(code.n == 4);
        CHECK(code.k == 4);
        // Third alphabet coordinate and fourth block are zero.
        for (int row = 0; row < 4; ++row) {
            for (int i = 0; i < 4; ++i) CHECK(code.gen.at(row, i * 3 + 2) == 0);
            for (int c = 9; c < 12; ++c) CHECK(code.gen.at(row, c) == 0);
        }
        CHECK(is_swc_isometry(map, singleton_partition(2, 3)));
        CHECK(!extend_to_monomial(map, trivial_group(F, 3)).has_value());
    }

    SUBCASE("longer code only") {
        auto [code, map] = pad_and_embed(r, 2, 5);
        CHECK(code.ell == 2);
        CHECK(code.n == 5);
        CHECK(is_swc_isometry(map, singleton_partition(2, 2)));
        CHECK(!extend_to_monomial(map, trivial_group(F, 2)).has_value());
    }

    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(pad_and_embed(r, 1, 4), std::invalid_argument);
        CHECK_THROWS_AS(pad_and_embed(r, 2, 2), std::invalid_argument);
    }
}
