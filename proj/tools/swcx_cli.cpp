#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swcx/acceptance.hpp"
#include "swcx/code.hpp"
#include "swcx/construct.hpp"
#include "swcx/error.hpp"
#include "swcx/json_io.hpp"
#include "swcx/psinj.hpp"

namespace {

using swcx::Json;

struct Common {
    std::string out;
    std::string format = "json";
    std::uint64_t max_enum = swcx::kDefaultEnumGuard;
    std::uint64_t max_gl = swcx::kDefaultGlGuard;
    std::uint32_t seed = 1;
};

std::uint64_t upow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// Text mode: one "dotted.path: value" line per scalar, arrays inline.
void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            flatten(v, prefix.empty() ? k : prefix + "." + k, os);
        }
    } else {
        os << prefix << ": " << j.dump() << "\n";
    }
}

void emit(const Common& cfg, const Json& j) {
    std::string payload;
    if (cfg.format == "text") {
        std::ostringstream os;
        flatten(j, "", os);
        payload = os.str();
    } else {
        payload = swcx::dump_report(j);
    }
    if (!cfg.out.empty()) {
        std::ofstream f(cfg.out);
        if (!f) throw std::invalid_argument("cannot open output path " + cfg.out);
        f << payload;
    } else {
        std::cout << payload;
    }
}

Json envelope(const std::string& command) { return Json{{"schema", 1}, {"command", command}}; }

Json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    Json j;
    f >> j;
    return j;
}

swcx::MatGroup group_for_alphabet(const std::string& path, const swcx::Code& c) {
    if (path.empty()) return swcx::trivial_group(c.field, c.ell);
    swcx::MatGroup g = swcx::load_group(read_json_file(path));
    if (g.n != c.ell || !(g.field == c.field)) {
        throw std::invalid_argument("group does not act on the code's alphabet");
    }
    return g;
}

swcx::Vec parse_vec(const std::string& s) {
    swcx::Vec v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int x = std::stoi(item);
        if (x < 0 || x > 0xffff) throw std::invalid_argument("vector entry out of range");
        v.push_back(static_cast<swcx::Felt>(x));
    }
    if (v.empty()) throw std::invalid_argument("empty vector");
    return v;
}

// Smallest orbit label at which the column preimage multisets of the two
// generator matrices disagree, if any.
std::optional<std::int32_t> failing_orbit_label(const swcx::CodeMap& m,
                                              const swcx::OrbitPartition& orb,
                                              std::uint64_t guard) {
    const swcx::Field& F = m.source.field;
    int q = F.q();
    int n = m.source.n;
    int k = m.source.k;
    std::uint64_t total = upow(q, k);
    if (total > guard) throw swcx::GuardError("message enumeration exceeds the guard");
    std::vector<std::map<std::int32_t, std::vector<std::uint64_t>>> lam(n), mu(n);
    for (std::uint64_t wi = 0; wi < total; ++wi) {
        swcx::Vec w = swcx::vec_from_index(q, k, wi);
        for (int i = 0; i < n; ++i) {
            swcx::Vec a = swcx::vec_mat(F, w, m.source.coordinate_block(i));
            lam[i][orb.orbit_id[swcx::vec_index(q, a)]].push_back(wi);
            swcx::Vec b = swcx::vec_mat(F, w, m.mu_block(i));
            mu[i][orb.orbit_id[swcx::vec_index(q, b)]].push_back(wi);
        }
    }
    std::set<std::int32_t> labels(orb.orbit_id.begin(), orb.orbit_id.end());
    for (std::int32_t label : labels) {
        std::multiset<std::vector<std::uint64_t>> a, b;
        for (int i = 0; i < n; ++i) {
            auto ita = lam[i].find(label);
            a.insert(ita == lam[i].end() ? std::vector<std::uint64_t>{} : ita->second);
            auto itb = mu[i].find(label);
            b.insert(itb == mu[i].end() ? std::vector<std::uint64_t>{} : itb->second);
        }
        if (a != b) return label;
    }
    return std::nullopt;
}

std::vector<swcx::MatGroup> closed_subgroups(const swcx::Field& F, int n,
                                             std::uint64_t gl_guard) {
    std::vector<swcx::OrbitPartition> parts = swcx::poset_partitions(F, n, gl_guard);
    std::vector<swcx::MatGroup> out;
    std::set<std::vector<std::uint64_t>> seen;
    for (const swcx::OrbitPartition& p : parts) {
        swcx::MatGroup s = swcx::partition_stabilizer(F, p, gl_guard);
        if (seen.insert(s.keys).second) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear codes over vector-space alphabets: constructions, "
                 "isometry checks, group closures, pseudo-injectivity"};
    app.require_subcommand(1);

    Common cfg;
    app.add_option("--out", cfg.out, "Write the report to this path instead of stdout");
    app.add_option("--format", cfg.format, "Report format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-enum", cfg.max_enum, "Guard on vector/message enumeration size");
    app.add_option("--max-gl", cfg.max_gl, "Guard on full general-linear-group sweeps");
    app.add_option("--seed", cfg.seed, "Seed for the randomized property suites");

    int q = 0, ell = 0, n = 0, dim = 0;
    int alpha = -1, beta = -1;
    std::string code_path, group_path, fixing;

    CLI::App* c_construct =
        app.add_subcommand("construct", "Emit the projective-line code and its swap map");
    c_construct->add_option("--q", q, "Field order (prime power)")->required();
    c_construct->add_option("--alpha", alpha, "Linear coefficient of the quadratic");
    c_construct->add_option("--beta", beta, "Constant coefficient of the quadratic");
    c_construct->add_option("--ell", ell, "Target alphabet dimension for padding");
    c_construct->add_option("--n", n, "Target length for padding");

    CLI::App* c_verify = app.add_subcommand("verify", "Run the full verification suite");
    c_verify->add_option("--q", q)->required();

    CLI::App* c_subcode = app.add_subcommand("subcode", "Run the subcode analysis");
    c_subcode->add_option("--q", q)->required();

    CLI::App* c_pad = app.add_subcommand("pad", "Pad the construction to a larger alphabet/length");
    c_pad->add_option("--q", q)->required();
    c_pad->add_option("--ell", ell)->required();
    c_pad->add_option("--n", n)->required();

    CLI::App* c_swc = app.add_subcommand("swc", "Weight compositions of all codewords");
    c_swc->add_option("--code", code_path)->required();
    c_swc->add_option("--group", group_path);

    CLI::App* c_iso = app.add_subcommand("check-isometry", "Check a code map preserves swc");
    c_iso->add_option("--code", code_path)->required();
    c_iso->add_option("--group", group_path);

    CLI::App* c_ext = app.add_subcommand("check-extension", "Search for a monomial extension");
    c_ext->add_option("--code", code_path)->required();
    c_ext->add_option("--group", group_path);

    CLI::App* c_orb = app.add_subcommand("orbits", "Orbit partition of a matrix group");
    c_orb->add_option("--group", group_path)->required();

    CLI::App* c_clo = app.add_subcommand("closure", "Orbit-preserving closure of a group");
    c_clo->add_option("--group", group_path)->required();

    CLI::App* c_cs = app.add_subcommand("closed-subgroups", "Census of closed subgroups");
    c_cs->add_option("--n", n)->required();
    c_cs->add_option("--q", q)->required();
    c_cs->add_option("--fixing", fixing, "Keep groups whose orbit of this vector is a singleton");

    CLI::App* c_bound = app.add_subcommand("bound-check", "Exhaustive extension sweep");
    c_bound->add_option("--q", q)->required();
    c_bound->add_option("--ell", ell)->required();
    c_bound->add_option("--n", n)->required();

    CLI::App* c_ps = app.add_subcommand("psinj", "Pseudo-injectivity decision");
    c_ps->add_option("--n", dim)->required();
    c_ps->add_option("--q", q)->required();
    c_ps->add_option("--group", group_path,
                     "Group file, builtin:T, builtin:Tprime, builtin:X, or all-closed")
        ->required();

    CLI::App* c_f23 = app.add_subcommand("psinj-f23", "Full dimension-3 computation over F_2");

    CLI::App* c_cls = app.add_subcommand("classify", "Predicted pseudo-injectivity");
    c_cls->add_option("--n", dim)->required();
    c_cls->add_option("--q", q)->required();

    CLI::App* c_self = app.add_subcommand("selftest", "Run the acceptance checks");

    // Let app-level options (--out, --format, guards) appear after the
    // subcommand name as well.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*c_construct) {
            swcx::Field F = swcx::field_for_order(q);
            std::optional<std::pair<swcx::Felt, swcx::Felt>> chi;
            if (alpha >= 0 || beta >= 0) {
                if (alpha < 0 || beta < 0 || alpha >= F.q() || beta >= F.q()) {
                    throw std::invalid_argument("alpha and beta must both be field elements");
                }
                chi = {static_cast<swcx::Felt>(alpha), static_cast<swcx::Felt>(beta)};
            }
            swcx::ConstructionResult r = swcx::build_construction(F, chi);
            Json j = envelope("construct");
            if (ell > 0 || n > 0) {
                auto [pc, pm] = swcx::pad_and_embed(r, ell, n);
                j["code"] = swcx::code_map_json(pm);
            } else {
                j.update(swcx::construction_json(r));
            }
            emit(cfg, j);
            return 0;
        }
        if (*c_verify) {
            swcx::ConstructionResult r = swcx::build_construction(swcx::field_for_order(q));
            swcx::ConstructVerifyReport rep = swcx::verify_construction(r);
            swcx::SubcodeReport sub = swcx::subcode_analysis(r);
            Json j = envelope("verify");
            j["field"] = swcx::to_json(r.field.spec());
            j["construction"] = swcx::to_json(rep);
            j["subcode"] = swcx::to_json(sub);
            bool ok = rep.all() && sub.all();
            j["ok"] = ok;
            emit(cfg, j);
            return ok ? 0 : 1;
        }
        if (*c_subcode) {
            swcx::ConstructionResult r = swcx::build_construction(swcx::field_for_order(q));
            swcx::SubcodeReport sub = swcx::subcode_analysis(r);
            Json j = envelope("subcode");
            j["field"] = swcx::to_json(r.field.spec());
            j["subcode"] = swcx::to_json(sub);
            j["ok"] = sub.all();
            emit(cfg, j);
            return sub.all() ? 0 : 1;
        }
        if (*c_pad) {
            swcx::ConstructionResult r = swcx::build_construction(swcx::field_for_order(q));
            auto [pc, pm] = swcx::pad_and_embed(r, ell, n);
            bool iso = swcx::is_swc_isometry(pm, swcx::singleton_partition(pc.field.q(), ell),
                                             cfg.max_enum);
            bool unext =
                !swcx::extend_to_monomial(pm, swcx::trivial_group(pc.field, ell), cfg.max_enum,
                                          cfg.max_gl)
                     .has_value();
            Json j = envelope("pad");
            j["code"] = swcx::code_map_json(pm);
            j["is_isometry"] = iso;
            j["unextendable"] = unext;
            bool ok = iso && unext;
            j["ok"] = ok;
            emit(cfg, j);
            return ok ? 0 : 1;
        }
        if (*c_swc) {
            swcx::Code c = swcx::load_code(read_json_file(code_path));
            swcx::MatGroup g = group_for_alphabet(group_path, c);
            swcx::OrbitPartition orb = swcx::orbits(g, cfg.max_enum);
            std::uint64_t total = upow(c.field.q(), c.k);
            if (total > cfg.max_enum) throw swcx::GuardError("message count exceeds the guard");
            Json words = Json::array();
            for (std::uint64_t wi = 0; wi < total; ++wi) {
                swcx::Vec w = swcx::vec_from_index(c.field.q(), c.k, wi);
                swcx::Vec a = swcx::vec_mat(c.field, w, c.gen);
                words.push_back(Json{{"message", swcx::to_json(w)},
                                     {"word", swcx::to_json(a)},
                                     {"swc", swcx::to_json(swcx::swc(c.field, a, orb))}});
            }
            Json j = envelope("swc");
            j["field"] = swcx::to_json(c.field.spec());
            j["group"] = swcx::to_json(g);
            j["words"] = words;
            emit(cfg, j);
            return 0;
        }
        if (*c_iso) {
            swcx::CodeMap m = swcx::load_code_map(read_json_file(code_path));
            swcx::MatGroup g = group_for_alphabet(group_path, m.source);
            swcx::OrbitPartition orb = swcx::orbits(g, cfg.max_enum);
            bool iso = swcx::is_swc_isometry(m, orb, cfg.max_enum);
            Json j = envelope("check-isometry");
            j["field"] = swcx::to_json(m.source.field.spec());
            j["is_isometry"] = iso;
            emit(cfg, j);
            return iso ? 0 : 1;
        }
        if (*c_ext) {
            swcx::CodeMap m = swcx::load_code_map(read_json_file(code_path));
            swcx::MatGroup g = group_for_alphabet(group_path, m.source);
            swcx::OrbitPartition orb = swcx::orbits(g, cfg.max_enum);
            std::optional<std::vector<int>> match =
                swcx::coordinate_matching(m, orb, cfg.max_enum);
            std::optional<swcx::MonomialMap> ext =
                swcx::extend_to_monomial(m, g, cfg.max_enum, cfg.max_gl);
            Json j = envelope("check-extension");
            j["field"] = swcx::to_json(m.source.field.spec());
            j["coordinate_matching"] = match ? Json(*match) : Json(nullptr);
            j["extends"] = ext.has_value();
            if (ext) {
                j["witness"] = swcx::to_json(*ext);
            } else {
                std::optional<std::int32_t> label = failing_orbit_label(m, orb, cfg.max_enum);
                j["failing_orbit_label"] = label ? Json(*label) : Json(nullptr);
            }
            emit(cfg, j);
            return ext ? 0 : 1;
        }
        if (*c_orb) {
            swcx::MatGroup g = swcx::load_group(read_json_file(group_path));
            Json j = envelope("orbits");
            j["field"] = swcx::to_json(g.field.spec());
            j["group"] = swcx::to_json(g);
            j["orbits"] = swcx::to_json(swcx::orbits(g, cfg.max_enum));
            emit(cfg, j);
            return 0;
        }
        if (*c_clo) {
            swcx::MatGroup g = swcx::load_group(read_json_file(group_path));
            swcx::MatGroup cl = swcx::closure(g, cfg.max_gl);
            Json j = envelope("closure");
            j["field"] = swcx::to_json(g.field.spec());
            j["group"] = swcx::to_json(g);
            j["closure"] = swcx::to_json(cl);
            j["closed"] = g.size() == cl.size();
            emit(cfg, j);
            return 0;
        }
        if (*c_cs) {
            swcx::Field F = swcx::field_for_order(q);
            std::vector<swcx::MatGroup> groups = closed_subgroups(F, n, cfg.max_gl);
            if (!fixing.empty()) {
                swcx::Vec v = parse_vec(fixing);
                if (static_cast<int>(v.size()) != n) {
                    throw std::invalid_argument("fixing vector has the wrong length");
                }
                std::vector<swcx::MatGroup> kept;
                for (swcx::MatGroup& g : groups) {
                    swcx::OrbitPartition orb = swcx::orbits(g, cfg.max_enum);
                    std::int32_t label = orb.orbit_id[swcx::vec_index(F.q(), v)];
                    if (orb.block_size(label) == 1) kept.push_back(std::move(g));
                }
                groups = std::move(kept);
            }
            Json arr = Json::array();
            for (const swcx::MatGroup& g : groups) {
                swcx::OrbitPartition orb = swcx::orbits(g, cfg.max_enum);
                arr.push_back(Json{{"element_count", g.size()},
                                   {"num_orbits", orb.num_orbits()},
                                   {"orbit_id", orb.orbit_id}});
            }
            Json j = envelope("closed-subgroups");
            j["field"] = swcx::to_json(F.spec());
            j["n"] = n;
            j["count"] = groups.size();
            j["groups"] = arr;
            emit(cfg, j);
            return 0;
        }
        if (*c_bound) {
            swcx::Field F = swcx::field_for_order(q);
            swcx::BoundReport r = swcx::verify_bound_trivial_group(F, ell, n, cfg.max_enum);
            Json j = envelope("bound-check");
            j["field"] = swcx::to_json(F.spec());
            j["report"] = swcx::to_json(r);
            j["ok"] = r.all_extend;
            emit(cfg, j);
            return r.all_extend ? 0 : 1;
        }
        if (*c_ps) {
            swcx::Field F = swcx::field_for_order(q);
            Json j = envelope("psinj");
            j["field"] = swcx::to_json(F.spec());
            if (group_path == "all-closed") {
                std::vector<swcx::MatGroup> groups = closed_subgroups(F, dim, cfg.max_gl);
                Json arr = Json::array();
                bool all_ok = true;
                for (const swcx::MatGroup& g : groups) {
                    swcx::PsinjResult r = swcx::is_pseudo_injective(g, cfg.max_enum, cfg.max_gl);
                    all_ok = all_ok && r.pseudo_injective;
                    Json e{{"element_count", g.size()},
                           {"pseudo_injective", r.pseudo_injective}};
                    if (r.witness) e["witness"] = swcx::to_json(*r.witness);
                    arr.push_back(std::move(e));
                }
                j["groups"] = arr;
                j["count"] = groups.size();
                j["pseudo_injective"] = all_ok;
                emit(cfg, j);
                return all_ok ? 0 : 1;
            }
            swcx::MatGroup g;
            if (group_path == "builtin:T") {
                if (dim != 4) throw std::invalid_argument("builtin:T acts on dimension 4");
                g = swcx::group_generate(F, 4,
                                         {swcx::build_T(F, 2, swcx::primitive_mult_matrix(F))});
            } else if (group_path == "builtin:Tprime") {
                if (dim <= 4) throw std::invalid_argument("builtin:Tprime needs dimension > 4");
                g = swcx::group_generate(
                    F, dim, {swcx::build_Tprime(F, dim, 2, swcx::primitive_mult_matrix(F))});
            } else if (group_path == "builtin:X") {
                if (dim != 3) throw std::invalid_argument("builtin:X acts on dimension 3");
                g = swcx::group_generate(F, 3, {swcx::build_X(F)});
            } else {
                g = swcx::load_group(read_json_file(group_path));
                if (g.n != dim || !(g.field == F)) {
                    throw std::invalid_argument("group file does not match --n/--q");
                }
            }
            swcx::PsinjResult r = swcx::is_pseudo_injective(g, cfg.max_enum, cfg.max_gl);
            j["group"] = swcx::to_json(g);
            j["pseudo_injective"] = r.pseudo_injective;
            if (r.witness) j["witness"] = swcx::to_json(*r.witness);
            emit(cfg, j);
            return r.pseudo_injective ? 0 : 1;
        }
        if (*c_f23) {
            swcx::F23Report r = swcx::f23_check();
            Json j = envelope("psinj-f23");
            j["field"] = swcx::to_json(swcx::Field(2, 1).spec());
            j["report"] = swcx::to_json(r);
            j["ok"] = r.overall;
            emit(cfg, j);
            return r.overall ? 0 : 1;
        }
        if (*c_cls) {
            Json j = envelope("classify");
            j["n"] = dim;
            j["q"] = q;
            j["expected_pseudo_injective"] = swcx::classify(dim, q);
            emit(cfg, j);
            return 0;
        }
        if (*c_self) {
            swcx::AcceptanceOptions opts;
            opts.max_enum = cfg.max_enum;
            opts.max_gl = cfg.max_gl;
            opts.seed = cfg.seed;
            std::ostringstream log;
            bool ok = swcx::run_acceptance(log, opts);
            if (cfg.format == "text") {
                if (!cfg.out.empty()) {
                    std::ofstream f(cfg.out);
                    f << log.str();
                } else {
                    std::cout << log.str();
                }
            } else {
                Json j = envelope("selftest");
                j["ok"] = ok;
                std::vector<std::string> lines;
                std::istringstream is(log.str());
                for (std::string line; std::getline(is, line);) lines.push_back(line);
                j["log"] = lines;
                emit(cfg, j);
            }
            return ok ? 0 : 1;
        }
    } catch (const swcx::GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "json: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
