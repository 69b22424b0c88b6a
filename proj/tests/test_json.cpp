#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "swcx/json_io.hpp"

using namespace swcx;

TEST_CASE("canonical dump: sorted keys, two-space indent, trailing newline") {
    Json j = Json::object({{"b", 1}, {"a", 2}});
    CHECK(dump_report(j) == "{\n  \"a\": 2,\n  \"b\": 1\n}\n");
}

TEST_CASE("serialization is deterministic") {
    std::string once = dump_report(construction_json(build_construction(Field(2, 1))));
    std::string twice = dump_report(construction_json(build_construction(Field(2, 1))));
    CHECK(once == twice);
    CHECK(!once.empty());
    CHECK(once.back() == '\n');
}

TEST_CASE("field spec serialization") {
    Json j = to_json(Field(2, 2).spec());
    CHECK(j == Json{{"k", 2}, {"modulus", Json::array({1, 1, 1})}, {"p", 2}, {"q", 4}});
}

TEST_CASE("vector and matrix serialization") {
    CHECK(to_json(Vec{1, 0, 2}) == Json::array({1, 0, 2}));
    Json id2 = Json::array({Json::array({1, 0}), Json::array({0, 1})});
    CHECK(to_json(Mat::identity(2)) == id2);
    CHECK(mat_from_json(id2) == Mat::identity(2));
}

TEST_CASE("weight composition serializes as a label map") {
    SwcVector s;
    s.counts = {{0, 1}, {3, 2}};
    CHECK(to_json(s) == Json{{"0", 1}, {"3", 2}});
}

TEST_CASE("projective point and partition serialization") {
    CHECK(to_json(ProjPoint{1, 0}) == Json::array({1, 0}));
    OrbitPartition p = singleton_partition(2, 1);
    Json j = to_json(p);
    CHECK(j.at("n") == 1);
    CHECK(j.at("q") == 2);
    CHECK(j.at("orbit_id") == Json::array({0, 1}));
}

TEST_CASE("construction payload carries every section") {
    Json j = construction_json(build_construction(Field(2, 1)));
    for (const char* key :
         {"field", "alpha", "beta", "points", "lambda", "m", "gen", "mu", "ell", "n", "dim"}) {
        CAPTURE(key);
        CHECK(j.contains(key));
    }
    CHECK(j.at("ell") == 2);
    CHECK(j.at("n") == 3);
    CHECK(j.at("dim") == 4);
    CHECK(j.at("points").size() == 3);
}

TEST_CASE("code file round trip") {
    ConstructionResult r = build_construction(Field(3, 1));
    Json j = code_json(r.code);
    Code c = load_code(j);
    CHECK(c.gen == r.code.gen);
    CHECK(c.ell == r.code.ell);
    CHECK(c.n == r.code.n);
    CHECK(c.field.spec().p == 3);
    CHECK(c.field.spec().k == 1);

    Json jm = code_map_json(r.fmap);
    CodeMap m = load_code_map(jm);
    CHECK(m.mu == r.fmap.mu);
    CHECK(m.source.gen == r.code.gen);
}

TEST_CASE("group file round trip") {
    Field F(2, 1);
    MatGroup g = group_generate(
        F, 2, {Mat::from_rows({{0, 1}, {1, 0}}), Mat::from_rows({{1, 1}, {0, 1}})});
    Json j = to_json(g);
    CHECK(j.at("element_count") == 6);
    CHECK(j.at("n") == 2);
    CHECK(j.at("q") == 2);
    MatGroup g2 = load_group(j);
    CHECK(g2.keys == g.keys);
}

TEST_CASE("witness serialization marks extension status") {
    PsinjWitness w;
    w.u = span_of(Field(2, 1), {{1, 0}}, 2);
    w.f_images = {{1, 0}};
    w.extends = false;
    Json j = to_json(w);
    CHECK(j.at("extends") == false);
    CHECK(!j.contains("extender"));
    w.extends = true;
    w.extender = Mat::identity(2);
    Json j2 = to_json(w);
    CHECK(j2.at("extender") == to_json(Mat::identity(2)));
}

TEST_CASE("loaders accept report envelopes") {
    ConstructionResult r = build_construction(Field(2, 1));

    // construct/pad reports nest the code map under "code".
    Json enveloped = Json{{"schema", 1}, {"command", "pad"}, {"code", code_map_json(r.fmap)}};
    CHECK(load_code(enveloped).gen == r.code.gen);
    CHECK(load_code_map(enveloped).mu == r.fmap.mu);

    // The full construction payload is flat but embeds the field object.
    Json full = construction_json(r);
    CodeMap m = load_code_map(full);
    CHECK(m.source.gen == r.code.gen);
    CHECK(m.mu == r.fmap.mu);
    CHECK(m.source.field.q() == 2);

    // Group reports nest the group under "group".
    MatGroup g = group_generate(Field(2, 1), 2, {Mat::from_rows({{0, 1}, {1, 0}})});
    Json genv = Json{{"schema", 1}, {"group", to_json(g)}};
    CHECK(load_group(genv).keys == g.keys);
}

TEST_CASE("field loading") {
    Field f9 = field_from_json(Json{{"q", 9}});
    CHECK(f9.spec().p == 3);
    CHECK(f9.spec().k == 2);
    CHECK(f9.spec().modulus == std::vector<int>{1, 0, 1});

    Field f4 = field_from_json(Json{{"p", 2}, {"k", 2}});
    CHECK(f4.q() == 4);

    CHECK_THROWS_AS(field_from_json(Json{{"p", 2}, {"k", 2}, {"q", 5}}), std::invalid_argument);
    CHECK_THROWS_AS(field_from_json(Json::object({{"n", 3}})), std::invalid_argument);
}

TEST_CASE("loader validation") {
    ConstructionResult r = build_construction(Field(2, 1));
    Json good = code_json(r.code);

    CHECK_THROWS_AS(load_code_map(good), std::invalid_argument);  // mu missing

    Json bad_entry = good;
    bad_entry["gen"][0][0] = 2;  // not an F_2 element
    CHECK_THROWS_AS(load_code(bad_entry), std::invalid_argument);

    Json ragged = good;
    ragged["gen"][1] = Json::array({0, 1});
    CHECK_THROWS_AS(load_code(ragged), std::invalid_argument);

    CHECK_THROWS_AS(mat_from_json(Json::object()), std::invalid_argument);
    CHECK_THROWS_AS(mat_from_json(Json::array()), std::invalid_argument);
    CHECK_THROWS_AS(mat_from_json(Json::array({Json::array({-1})})), std::invalid_argument);
}
