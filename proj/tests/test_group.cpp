#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "swcx/error.hpp"
#include "swcx/group.hpp"

using namespace swcx;

TEST_CASE("general linear group orders") {
    CHECK(gl_order(2, 2) == 6);
    CHECK(gl_order(2, 3) == 168);
    CHECK(gl_order(3, 2) == 48);
    CHECK(gl_order(3, 3) == 11232);
    CHECK(gl_order(2, 4) == 20160);
    CHECK(gl_order(2, 5) == 9999360);
    CHECK(gl_order(4, 2) == 180);
}

TEST_CASE("gl sweep is complete, strictly ascending, and materializes") {
    Field F(2, 1);
    std::uint64_t count = 0, last = 0;
    bool first = true;
    for_each_gl(F, 3, [&](const Mat& m) {
        std::uint64_t key = mat_key(2, m);
        if (!first) CHECK(key > last);
        first = false;
        last = key;
        ++count;
        return true;
    });
    CHECK(count == 168);
    MatGroup g = gl_group(F, 2);
    CHECK(g.size() == 6);
    for (const Mat& m : g.elements) CHECK(is_invertible(F, m));
    CHECK_THROWS_AS(gl_group(Field(3, 1), 3, 100), GuardError);
}

TEST_CASE("sweep abort stops early") {
    Field F(2, 1);
    int seen = 0;
    for_each_gl(F, 2, [&](const Mat&) { return ++seen < 3; });
    CHECK(seen == 3);
}

TEST_CASE("group generation") {
    Field F(2, 1);
    Mat swap = Mat::from_rows({{0, 1}, {1, 0}});
    Mat shear = Mat::from_rows({{1, 1}, {0, 1}});
    MatGroup g = group_generate(F, 2, {swap, shear});
    CHECK(g.size() == 6);  // the whole GL_2(F_2)
    CHECK(g.contains(Mat::identity(2)));
    CHECK(g.contains(mat_mul(F, swap, shear)));

    MatGroup t = group_generate(F, 2, {});
    CHECK(t.size() == 1);
    CHECK(t.elements[0] == Mat::identity(2));
    CHECK(trivial_group(F, 2).size() == 1);

    Mat singular(2, 2);
    CHECK_THROWS_AS(group_generate(F, 2, {singular}), std::invalid_argument);
    CHECK_THROWS_AS(group_generate(F, 2, {swap, shear}, 3), GuardError);
}

TEST_CASE("orbit partitions") {
    Field F(3, 1);
    MatGroup t = trivial_group(F, 2);
    OrbitPartition pt = orbits(t);
    CHECK(pt.num_orbits() == 9);
    for (int i = 0; i < 9; ++i) CHECK(pt.orbit_id[i] == i);

    MatGroup g = gl_group(F, 2);
    OrbitPartition pg = orbits(g);
    CHECK(pg.num_orbits() == 2);
    CHECK(pg.orbit_id[0] == 0);
    CHECK(pg.block_size(0) == 1);
    CHECK(pg.block_size(1) == 8);
    for (int i = 1; i < 9; ++i) CHECK(pg.orbit_id[i] == 1);
}

TEST_CASE("orbit labels are minimal member indices") {
    Field F(2, 1);
    // Swap of the two coordinates on F_2^2: orbits {0}, {e2, e1}, {e1+e2}.
    MatGroup g = group_generate(F, 2, {Mat::from_rows({{0, 1}, {1, 0}})});
    OrbitPartition p = orbits(g);
    CHECK(p.orbit_id == std::vector<std::int32_t>{0, 1, 1, 3});
}

TEST_CASE("partition preservation and closure") {
    Field F(3, 1);
    MatGroup t = trivial_group(F, 2);
    CHECK(closure(t).size() == 1);
    CHECK(is_closed(t));

    Mat minus = Mat::from_rows({{2, 0}, {0, 2}});
    MatGroup pm = group_generate(F, 2, {minus});
    CHECK(pm.size() == 2);
    MatGroup cl = closure(pm);
    CHECK(cl.size() == 2);
    CHECK(is_closed(pm));
    for (const Mat& m : cl.elements) CHECK(preserves_partition(F, m, orbits(pm)));

    // The full group is closed.
    CHECK(is_closed(gl_group(F, 2)));
}

TEST_CASE("finer and join") {
    Field F(2, 1);
    Mat swap = Mat::from_rows({{0, 1}, {1, 0}});
    Mat shear = Mat::from_rows({{1, 1}, {0, 1}});
    OrbitPartition pa = orbits(group_generate(F, 2, {swap}));
    OrbitPartition pb = orbits(group_generate(F, 2, {shear}));
    OrbitPartition singles = singleton_partition(2, 2);

    CHECK(partition_finer(singles, pa));
    CHECK(partition_finer(pa, pa));
    CHECK(!partition_finer(pa, singles));

    OrbitPartition j = partition_join(pa, pb);
    CHECK(j.orbit_id == std::vector<std::int32_t>{0, 1, 1, 1});
    CHECK(partition_finer(pa, j));
    CHECK(partition_finer(pb, j));
    CHECK(partition_join(pa, pa) == pa);
    CHECK(partition_join(pa, singles) == pa);
}

TEST_CASE("partition poset for n=2, q=2") {
    Field F(2, 1);
    std::vector<OrbitPartition> ps = poset_partitions(F, 2);
    REQUIRE(ps.size() == 5);
    std::vector<std::vector<std::int32_t>> expect = {{0, 1, 1, 1},
                                                     {0, 1, 1, 3},
                                                     {0, 1, 2, 1},
                                                     {0, 1, 2, 2},
                                                     {0, 1, 2, 3}};
    for (size_t i = 0; i < 5; ++i) CHECK(ps[i].orbit_id == expect[i]);
}

TEST_CASE("partition poset and stabilizer census for n=3, q=2") {
    Field F(2, 1);
    std::vector<OrbitPartition> ps = poset_partitions(F, 3);
    REQUIRE(ps.size() == 100);

    std::map<std::uint64_t, int> order_histogram;
    std::set<std::vector<std::uint64_t>> distinct;
    int fixing_e1 = 0;
    for (const OrbitPartition& p : ps) {
        MatGroup stab = partition_stabilizer(F, p);
        // The stabilizer's own orbits recover the partition: the poset is in
        // bijection with the closed subgroups.
        CHECK(orbits(stab) == p);
        CHECK(is_closed(stab));
        order_histogram[stab.size()] += 1;
        distinct.insert(stab.keys);
        if (p.block_size(p.orbit_id[4]) == 1) ++fixing_e1;  // index 4 = e1
    }
    CHECK(distinct.size() == 100);
    CHECK(fixing_e1 == 22);
    std::map<std::uint64_t, int> expect = {{1, 1},  {2, 21},  {4, 14}, {6, 28},
                                           {8, 21}, {24, 14}, {168, 1}};
    CHECK(order_histogram == expect);
}

TEST_CASE("stabilizer of the singleton partition is trivial") {
    Field F(2, 1);
    MatGroup s = partition_stabilizer(F, singleton_partition(2, 2));
    CHECK(s.size() == 1);
}

TEST_CASE("point stabilizer") {
    Field F(2, 1);
    MatGroup g = gl_group(F, 2);
    MatGroup s = point_stabilizer(g, {1, 0});
    CHECK(s.size() == 2);
    for (const Mat& m : s.elements) CHECK(vec_mat(F, {1, 0}, m) == Vec{1, 0});
}

TEST_CASE("group wrapping from an element list") {
    Field F(2, 1);
    std::vector<Mat> elems = {Mat::identity(2), Mat::from_rows({{0, 1}, {1, 0}})};
    MatGroup g = group_from_elements(F, 2, elems);
    CHECK(g.size() == 2);
    CHECK(g.contains(elems[1]));
    CHECK(!g.contains(Mat::from_rows({{1, 1}, {0, 1}})));
}
