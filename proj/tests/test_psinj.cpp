#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "swcx/psinj.hpp"

using namespace swcx;

namespace {

int mult_order(const Field& F, Felt a) {
    REQUIRE(a != 0);
    int e = 1;
    Felt acc = a;
    while (acc != 1) {
        acc = F.mul(acc, a);
        ++e;
    }
    return e;
}

}  // namespace

TEST_CASE("primitive multiplication matrix") {
    CHECK(primitive_mult_matrix(Field(2, 1)) == Mat::from_rows({{0, 1}, {1, 1}}));
    CHECK(primitive_mult_matrix(Field(3, 1)) == Mat::from_rows({{0, 1}, {1, 2}}));
    for (int q : {2, 3, 4, 5}) {
        CAPTURE(q);
        Field F = field_for_order(q);
        Mat m = primitive_mult_matrix(F);
        CHECK(m.row(0) == Vec{0, 1});  // (1,0) maps to (0,1)
        CHECK(mat_order(F, m) == q * q - 1);
        CHECK(mult_order(F, det(F, m)) == q - 1);
    }
}

TEST_CASE("block-diagonal generators") {
    Field F(2, 1);
    CHECK(build_T(F, 2, Mat::identity(2)) == Mat::identity(4));

    Mat m = primitive_mult_matrix(F);
    Mat t = build_T(F, 2, m);
    CHECK(t == Mat::from_rows({{0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}}));
    CHECK(mat_order(F, t) == 3);

    CHECK_THROWS_AS(build_T(F, 2, Mat::identity(3)), std::invalid_argument);
    CHECK_THROWS_AS(build_T(F, 2, Mat(2, 2)), std::invalid_argument);

    Mat tp = build_Tprime(F, 5, 2, m);
    CHECK(tp.rows == 5);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(tp.at(r, c) == t.at(r, c));
    CHECK(tp.at(4, 4) == 1);
    for (int i = 0; i < 4; ++i) {
        CHECK(tp.at(4, i) == 0);
        CHECK(tp.at(i, 4) == 0);
    }
    CHECK_THROWS_AS(build_Tprime(F, 4, 2, m), std::invalid_argument);
}

TEST_CASE("pseudo-injective ambients") {
    for (auto [n, q] : {std::pair{1, 2}, {2, 2}, {1, 3}, {2, 3}}) {
        CAPTURE(n);
        CAPTURE(q);
        Field F = field_for_order(q);
        CHECK(is_pseudo_injective(trivial_group(F, n)).pseudo_injective);
        CHECK(is_pseudo_injective(gl_group(F, n)).pseudo_injective);
    }
    Field F2(2, 1);
    CHECK(is_pseudo_injective(trivial_group(F2, 3)).pseudo_injective);
    CHECK(is_pseudo_injective(gl_group(F2, 3)).pseudo_injective);
    Mat cyc = Mat::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    CHECK(is_pseudo_injective(group_generate(F2, 3, {cyc})).pseudo_injective);
}

TEST_CASE("failure of pseudo-injectivity in dimension four") {
    Field F(2, 1);
    MatGroup g = group_generate(F, 4, {build_T(F, 2, primitive_mult_matrix(F))});
    CHECK(g.size() == 3);
    PsinjResult r = is_pseudo_injective(g);
    CHECK(!r.pseudo_injective);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->u == span_of(F, {{1, 0, 0, 0}, {0, 1, 0, 0}}, 4));
    CHECK(r.witness->f_images == std::vector<Vec>{{0, 1, 0, 0}, {1, 0, 0, 0}});
    CHECK(!r.witness->extends);
    CHECK(!r.witness->extender.has_value());
}

TEST_CASE("packaged counterexamples for dimension >= 4") {
    SUBCASE("q = 2, n = 4") {
        CounterexampleReport r = counterexample_dim_ge4(Field(2, 1), 4);
        CHECK(r.group.size() == 3);
        CHECK(r.closed_confirmed);
        CHECK(!r.closed_trusted);
        CHECK(r.closure_size == 3);
        CHECK(r.u_meets_two_orbits);
        CHECK(r.witness.u == span_of(Field(2, 1), {{1, 0, 0, 0}, {0, 1, 0, 0}}, 4));
        CHECK(r.witness.f_images == std::vector<Vec>{{0, 1, 0, 0}, {1, 0, 0, 0}});
        CHECK(!r.witness.extends);
        CHECK(r.valid);
    }
    SUBCASE("q = 2, n = 5") {
        CounterexampleReport r = counterexample_dim_ge4(Field(2, 1), 5);
        CHECK(r.group.size() == 3);
        CHECK(r.closed_confirmed);
        CHECK(r.closure_size == 3);
        CHECK(r.valid);
    }
    SUBCASE("q = 3, n = 4 runs above the sweep guard") {
        CounterexampleReport r = counterexample_dim_ge4(Field(3, 1), 4);
        CHECK(r.group.size() == 8);
        CHECK(!r.closed_confirmed);
        CHECK(r.closed_trusted);
        CHECK(r.closure_size == 8);
        CHECK(r.u_meets_two_orbits);
        CHECK(r.valid);
    }
    CHECK_THROWS_AS(counterexample_dim_ge4(Field(2, 1), 3), std::invalid_argument);
}

TEST_CASE("three-dimensional counterexample for q = 3") {
    CHECK(build_X(Field(3, 1)) == Mat::from_rows({{0, 1, 0}, {1, 2, 0}, {0, 0, 2}}));
    CHECK_THROWS_AS(build_X(Field(2, 1)), std::invalid_argument);

    CounterexampleReport r = counterexample_dim3(Field(3, 1));
    CHECK(r.group.size() == 8);
    CHECK(!r.closed_confirmed);  // the closure is strictly larger
    CHECK(r.closure_size == 16);
    CHECK(r.u_meets_two_orbits);
    CHECK(!r.witness.extends);
    CHECK(r.valid);
}

TEST_CASE("exhaustive check over F_2^3") {
    F23Report r = f23_check();
    CHECK(r.num_partitions == 100);
    CHECK(r.num_closed == 100);
    CHECK(r.num_fixing == 22);
    CHECK(r.step2_ok);
    CHECK(r.crosscheck_ok);
    CHECK(r.overall);
}

TEST_CASE("classification boundary") {
    CHECK(classify(1, 2));
    CHECK(classify(1, 5));
    CHECK(classify(2, 3));
    CHECK(classify(2, 7));
    CHECK(classify(3, 2));
    CHECK(!classify(3, 3));
    CHECK(!classify(4, 2));
    CHECK(!classify(5, 2));
}

TEST_CASE("orbit blocks are single orbits") {
    // Transport within blocks: every member of a block is reached from every
    // other by a group element.
    auto check_transport = [](const MatGroup& g) {
        Field F = g.field;
        OrbitPartition p = orbits(g);
        std::uint64_t total = 1;
        for (int i = 0; i < g.n; ++i) total *= F.q();
        for (std::uint64_t vi = 1; vi < total; ++vi) {
            Vec v = vec_from_index(F.q(), g.n, vi);
            for (std::uint64_t yi = 1; yi < total; ++yi) {
                if (p.orbit_id[yi] != p.orbit_id[vi]) continue;
                Vec y = vec_from_index(F.q(), g.n, yi);
                bool reached = false;
                for (const Mat& m : g.elements)
                    if (vec_mat(F, v, m) == y) {
                        reached = true;
                        break;
                    }
                CHECK(reached);
            }
        }
    };
    Field F2(2, 1);
    check_transport(group_generate(F2, 4, {build_T(F2, 2, primitive_mult_matrix(F2))}));
    check_transport(gl_group(Field(3, 1), 2));
}
