#include "tci/json_io.hpp"

#include <fstream>

#include "tci/parse.hpp"

namespace tci {

namespace {

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw input_error(std::string("missing required key \"") + key + "\"");
    return *it;
}

std::vector<std::string> string_list(const json& j, const char* key) {
    const auto& arr = field(j, key);
    if (!arr.is_array())
        throw input_error(std::string("\"") + key + "\" must be an array");
    std::vector<std::string> out;
    for (const auto& e : arr) {
        if (!e.is_string())
            throw input_error(std::string("\"") + key +
                              "\" must contain strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw input_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

Variety variety_from_json(const json& j, Budget& budget) {
    auto vars = string_list(j, "vars");
    if (vars.empty()) throw input_error("\"vars\" must not be empty");
    auto ctx = VariableContext::make(vars);
    std::vector<Polynomial> gens;
    for (const auto& text : string_list(j, "generators"))
        gens.push_back(parse_polynomial(text, ctx));
    std::optional<int> claimed;
    if (auto it = j.find("claimed_dim"); it != j.end()) {
        if (!it->is_number_integer())
            throw input_error("\"claimed_dim\" must be an integer");
        claimed = it->get<int>();
    }
    return Variety::analyze(Ideal(ctx, std::move(gens)), budget, claimed);
}

GaussianRational constant_from_string(const std::string& text) {
    static const ContextPtr empty_ctx = VariableContext::make({});
    auto p = parse_polynomial(text, empty_ctx);
    if (p.is_zero()) return GaussianRational();
    return p.terms().begin()->second;
}

LinearSubspace subspace_from_json(const json& j) {
    const auto& amb = field(j, "ambient");
    if (!amb.is_number_integer() || amb.get<int>() < 1)
        throw input_error("\"ambient\" must be a positive integer");
    const int m = amb.get<int>();
    const auto& basis = field(j, "basis");
    if (!basis.is_array())
        throw input_error("\"basis\" must be an array of vectors");
    std::vector<std::vector<GaussianRational>> vectors;
    for (const auto& row : basis) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(m))
            throw input_error("each basis vector needs exactly " +
                              std::to_string(m) + " entries");
        std::vector<GaussianRational> v;
        for (const auto& e : row) {
            if (!e.is_string())
                throw input_error("basis entries must be constant strings");
            v.push_back(constant_from_string(e.get<std::string>()));
        }
        vectors.push_back(std::move(v));
    }
    return LinearSubspace::make(m, std::move(vectors));
}

Splitting splitting_from_json(const json& j) {
    return Splitting::make(subspace_from_json(field(j, "V")),
                           subspace_from_json(field(j, "W")));
}

WitnessArc arc_from_json(const json& j, const Variety& X) {
    auto vars = string_list(j, "vars");
    const auto& ctx = X.context();
    if (vars.size() != ctx->arity())
        throw input_error("arc \"vars\" must match the variety's variables");
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] != ctx->name(i))
            throw input_error("arc \"vars\" must match the variety's "
                              "variables (found \"" + vars[i] +
                              "\", expected \"" + ctx->name(i) + "\")");
    const auto& par = field(j, "parameter");
    if (!par.is_string())
        throw input_error("\"parameter\" must be a variable name");
    auto pname = par.get<std::string>();
    auto pctx = VariableContext::make({pname});
    std::vector<Polynomial> comps;
    for (const auto& text : string_list(j, "components"))
        comps.push_back(parse_polynomial(text, pctx));
    return WitnessArc::make(X, pname, std::move(comps));
}

std::vector<std::string> basis_strings(const Ideal& I, const MonomialOrder& ord,
                                       Budget& budget) {
    std::vector<std::string> out;
    for (const auto& g : I.groebner(ord, budget, "serialization basis"))
        out.push_back(g.primitive().str());
    return out;
}

json cone_to_json(const ConeResult& cone, const MonomialOrder& ord,
                  Budget& budget) {
    json j;
    j["which"] = cone_kind_name(cone.which);
    json vars = json::array();
    for (std::size_t i = 0; i < cone.ideal.context()->arity(); ++i)
        vars.push_back(cone.ideal.context()->name(i));
    j["variables"] = vars;
    j["generators"] = basis_strings(cone.ideal, ord, budget);
    j["dim"] = cone.dim;
    j["purity"] = purity_name(cone.purity);
    if (!cone.warnings.empty()) j["warnings"] = cone.warnings;
    return j;
}

json inclusions_to_json(const InclusionReport& rep) {
    json j;
    j["ambient"] = rep.ambient;
    j["variety_dim"] = rep.k;
    j["dim_c3"] = rep.dim_c3;
    j["dim_c4"] = rep.dim_c4;
    j["dim_c5"] = rep.dim_c5;
    j["c3_contains_c4"] = rep.c4_vanishes_on_c3;
    j["c4_contains_c5"] = rep.c5_vanishes_on_c4;
    j["dim_c3_equals_variety_dim"] = rep.dim_c3_is_k;
    j["dims_within_window"] = rep.dim_window;
    if (!rep.failing_generator.empty())
        j["failing_generator"] = rep.failing_generator;
    j["pass"] = rep.pass();
    return j;
}

json theorem_to_json(const TheoremReport& rep) {
    json j;
    j["statement"] = rep.statement;
    auto items = [](const std::vector<CheckItem>& v) {
        json arr = json::array();
        for (const auto& c : v)
            arr.push_back({{"name", c.name},
                           {"pass", c.pass},
                           {"detail", c.detail}});
        return arr;
    };
    j["hypotheses"] = items(rep.hypotheses);
    j["conclusions"] = items(rep.conclusions);
    j["verdict"] = verdict_name(rep.verdict);
    if (!rep.data.empty()) j["data"] = rep.data;
    return j;
}

json subspace_to_json(const LinearSubspace& S) {
    json basis = json::array();
    for (const auto& v : S.vectors()) {
        json row = json::array();
        for (const auto& e : v) row.push_back(e.str());
        basis.push_back(row);
    }
    return {{"ambient", S.ambient()}, {"basis", basis}};
}

json membership_to_json(const MembershipReport& rep) {
    json j;
    j["radii"] = rep.radii;
    j["residuals"] = rep.residuals;
    if (rep.slope) j["slope"] = *rep.slope;
    j["pass"] = rep.pass;
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j;
}

json region_to_json(const RegionReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"radius", r.radius},
                        {"norm_v1", r.norm_v1},
                        {"norm_v2", r.norm_v2},
                        {"bound", r.bound},
                        {"ok", r.ok}});
    json j;
    j["samples"] = rows;
    j["holds"] = rep.holds;
    if (rep.fitted_exponent) j["fitted_exponent"] = *rep.fitted_exponent;
    j["coeff_a"] = rep.coeff_a;
    j["exponent_b"] = rep.exponent_b;
    if (!rep.warnings.empty()) j["warnings"] = rep.warnings;
    return j;
}

}  // namespace tci
