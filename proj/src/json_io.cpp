#include "swcx/json_io.hpp"

#include <stdexcept>

namespace swcx {

Json to_json(const FieldSpec& s) {
    return Json{{"p", s.p}, {"k", s.k}, {"modulus", s.modulus}, {"q", s.q()}};
}

Json to_json(const Vec& v) {
    Json a = Json::array();
    for (Felt x : v) a.push_back(static_cast<int>(x));
    return a;
}

Json to_json(const Mat& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) rows.push_back(to_json(m.row(r)));
    return rows;
}

Json to_json(const Subspace& s) {
    return Json{{"ambient", s.ambient}, {"basis", to_json(s.basis)}};
}

Json to_json(const MatGroup& g) {
    Json gens = Json::array();
    for (const Mat& m : g.generators) gens.push_back(to_json(m));
    return Json{{"n", g.n},
                {"q", g.field.q()},
                {"generators", gens},
                {"element_count", g.size()}};
}

Json to_json(const OrbitPartition& p) {
    return Json{{"n", p.n}, {"q", p.q}, {"orbit_id", p.orbit_id}};
}

Json to_json(const SwcVector& s) {
    Json o = Json::object();
    for (auto [label, count] : s.counts) o[std::to_string(label)] = count;
    return o;
}

Json to_json(const MonomialMap& h) {
    Json autos = Json::array();
    for (const Mat& m : h.autos) autos.push_back(to_json(m));
    return Json{{"perm", h.perm}, {"autos", autos}};
}

Json to_json(const ProjPoint& p) {
    return Json::array({static_cast<int>(p.a), static_cast<int>(p.b)});
}

Json to_json(const PsinjWitness& w) {
    Json images = Json::array();
    for (const Vec& v : w.f_images) images.push_back(to_json(v));
    Json j{{"subspace", to_json(w.u)}, {"f_images", images}, {"extends", w.extends}};
    if (w.extender) j["extender"] = to_json(*w.extender);
    return j;
}

Json to_json(const ConstructVerifyReport& r) {
    return Json{{"is_isometry", r.is_isometry},
                {"fixes_and_swaps", r.fixes_and_swaps},
                {"is_automorphism", r.is_automorphism},
                {"preimage_formulas_hold", r.preimage_formulas_hold},
                {"indicator_identity", r.indicator_identity},
                {"ext_linear", r.ext_linear},
                {"mds", r.mds},
                {"min_distance", r.min_distance},
                {"kernel_multisets_differ", r.kernel_multisets_differ},
                {"unextendable", r.unextendable},
                {"all", r.all()}};
}

Json to_json(const SubcodeReport& r) {
    return Json{{"constant_weight", r.constant_weight},
                {"restriction_is_isometry", r.restriction_is_isometry},
                {"restriction_unextendable", r.restriction_unextendable},
                {"preimage_piecewise_hold", r.preimage_piecewise_hold},
                {"covering_zero_orbit", r.covering_zero_orbit},
                {"covering_nonzero_orbit", r.covering_nonzero_orbit},
                {"dim3_restrictions_unextendable", r.dim3_restrictions_unextendable},
                {"one_dim_restrictions_extend", r.one_dim_restrictions_extend},
                {"all", r.all()}};
}

Json to_json(const BoundReport& r) {
    Json failures = Json::array();
    for (const BoundFailure& f : r.failures) {
        failures.push_back(Json{{"basis", to_json(f.basis)}, {"images", to_json(f.images)}});
    }
    return Json{{"q", r.q},
                {"ell", r.ell},
                {"n", r.n},
                {"num_codes", r.num_codes},
                {"num_isometries", r.num_isometries},
                {"num_failures", r.num_failures},
                {"all_extend", r.all_extend},
                {"failures", failures}};
}

Json to_json(const CounterexampleReport& r) {
    return Json{{"group", to_json(r.group)},
                {"closed_confirmed", r.closed_confirmed},
                {"closed_trusted", r.closed_trusted},
                {"closure_size", r.closure_size},
                {"u_meets_two_orbits", r.u_meets_two_orbits},
                {"witness", to_json(r.witness)},
                {"valid", r.valid}};
}

Json to_json(const F23Report& r) {
    return Json{{"num_partitions", r.num_partitions},
                {"num_closed", r.num_closed},
                {"num_fixing", r.num_fixing},
                {"step2_ok", r.step2_ok},
                {"crosscheck_ok", r.crosscheck_ok},
                {"overall", r.overall}};
}

Json construction_json(const ConstructionResult& r) {
    Json points = Json::array(), lambdas = Json::array(), ms = Json::array();
    for (const ProjPoint& p : r.points) points.push_back(to_json(p));
    for (const Mat& m : r.lambdas) lambdas.push_back(to_json(m));
    for (const Mat& m : r.ms) ms.push_back(to_json(m));
    return Json{{"field", to_json(r.field.spec())},
                {"alpha", static_cast<int>(r.alpha)},
                {"beta", static_cast<int>(r.beta)},
                {"points", points},
                {"lambda", lambdas},
                {"m", ms},
                {"gen", to_json(r.code.gen)},
                {"mu", to_json(r.fmap.mu)},
                {"ell", r.code.ell},
                {"n", r.code.n},
                {"dim", r.code.k}};
}

Json code_json(const Code& c) {
    FieldSpec s = c.field.spec();
    return Json{{"q", s.q()},     {"p", s.p}, {"k", s.k}, {"modulus", s.modulus},
                {"ell", c.ell},   {"n", c.n}, {"gen", to_json(c.gen)}};
}

Json code_map_json(const CodeMap& m) {
    Json j = code_json(m.source);
    j["mu"] = to_json(m.mu);
    return j;
}

Field field_from_json(const Json& j) {
    // Reports embed the field as a nested object; accept that shape too.
    if (!j.contains("q") && !j.contains("p") && j.contains("field")) {
        return field_from_json(j.at("field"));
    }
    if (j.contains("p") && j.contains("k")) {
        int p = j.at("p").get<int>();
        int k = j.at("k").get<int>();
        std::optional<std::vector<int>> mod;
        if (j.contains("modulus")) mod = j.at("modulus").get<std::vector<int>>();
        Field f = gf_make(p, k, mod);
        if (j.contains("q") && j.at("q").get<int>() != f.q()) {
            throw std::invalid_argument("q does not match p^k");
        }
        return f;
    }
    if (j.contains("q")) return field_for_order(j.at("q").get<int>());
    throw std::invalid_argument("field requires q or p and k");
}

Mat mat_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    std::vector<Vec> rows;
    for (const Json& jr : j) {
        Vec row;
        for (const Json& je : jr) {
            long long e = je.get<long long>();
            if (e < 0 || e > 0xffff) throw std::invalid_argument("entry out of range");
            row.push_back(static_cast<Felt>(e));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("matrix must have at least one row");
    return Mat::from_rows(rows);
}

Code load_code(const Json& j) {
    // Accept report envelopes that nest the code payload under "code".
    if (!j.contains("gen") && j.contains("code")) return load_code(j.at("code"));
    Field f = field_from_json(j);
    int ell = j.at("ell").get<int>();
    int n = j.at("n").get<int>();
    Mat gen = mat_from_json(j.at("gen"));
    for (Felt e : gen.a) {
        if (e >= f.q()) throw std::invalid_argument("generator entry not a field element");
    }
    return Code(f, ell, n, std::move(gen));
}

CodeMap load_code_map(const Json& j) {
    if (!j.contains("gen") && j.contains("code")) return load_code_map(j.at("code"));
    Code c = load_code(j);
    if (!j.contains("mu")) throw std::invalid_argument("code map requires mu");
    Mat mu = mat_from_json(j.at("mu"));
    return CodeMap(std::move(c), std::move(mu));
}

MatGroup load_group(const Json& j, std::uint64_t guard) {
    if (!j.contains("generators") && j.contains("group")) return load_group(j.at("group"), guard);
    Field f = field_from_json(j);
    int n = j.at("n").get<int>();
    std::vector<Mat> gens;
    for (const Json& jm : j.at("generators")) gens.push_back(mat_from_json(jm));
    for (const Mat& g : gens) {
        for (Felt e : g.a) {
            if (e >= f.q()) throw std::invalid_argument("generator entry not a field element");
        }
    }
    return group_generate(f, n, gens, guard);
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace swcx
