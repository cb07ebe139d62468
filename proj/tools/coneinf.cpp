#include <chrono>
#include <functional>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tci/ideal_ops.hpp"
#include "tci/json_io.hpp"
#include "tci/parse.hpp"

namespace {

using tci::Budget;
using tci::json;

struct CommonOpts {
    std::string input;
    std::string output;
    long long budget = 0;  // 0 = library default
    unsigned long long seed = 0;
    bool timings = false;
    std::string order = "grevlex";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input = true) {
    auto* in = cmd->add_option("--input", o.input,
                               "variety JSON ({\"vars\", \"generators\"})");
    if (needs_input) in->required();
    cmd->add_option("--output", o.output, "also write the report to this file");
    cmd->add_option("--budget", o.budget, "step budget (default 400000000)");
    cmd->add_option("--seed", o.seed, "seed for all randomized choices");
    cmd->add_flag("--timings", o.timings,
                  "include wall-clock timings in the report (off by default "
                  "so reports are byte-identical across runs)");
    cmd->add_option("--order", o.order, "serialization order: grevlex or lex")
        ->check(CLI::IsMember({"grevlex", "lex"}));
}

tci::MonomialOrder order_for(const CommonOpts& o, std::size_t arity) {
    return o.order == "lex" ? tci::MonomialOrder::lex(arity)
                            : tci::MonomialOrder::grevlex(arity);
}

int exit_for(tci::Verdict v) {
    switch (v) {
        case tci::Verdict::verified: return 0;
        case tci::Verdict::hypothesis_not_satisfied:
        case tci::Verdict::hypothesis_not_certified: return 2;
        case tci::Verdict::failed: return 1;
    }
    return 1;
}

// Runs the command body and renders the {command, inputs, results, timings,
// budget_used} envelope; the body returns {results, exit code}.
int run_reported(const std::string& command, const CommonOpts& opts,
                 json inputs,
                 const std::function<std::pair<json, int>(Budget&)>& body) {
    Budget budget(opts.budget > 0 ? static_cast<std::uint64_t>(opts.budget)
                                  : tci::Budget::kDefaultLimit);
    auto started = std::chrono::steady_clock::now();
    auto [results, code] = body(budget);
    json timings = json::object();
    if (opts.timings) {
        auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        timings["total_ms"] = elapsed;
    }
    json envelope;
    envelope["command"] = command;
    envelope["inputs"] = std::move(inputs);
    envelope["results"] = std::move(results);
    envelope["timings"] = std::move(timings);
    envelope["budget_used"] = budget.used();
    auto text = envelope.dump(2) + "\n";
    std::cout << text;
    if (!opts.output.empty()) {
        std::ofstream out(opts.output);
        if (!out) throw tci::input_error("cannot write " + opts.output);
        out << text;
    }
    return code;
}

json base_inputs(const CommonOpts& o) {
    json j;
    j["input"] = o.input;
    j["seed"] = o.seed;
    j["order"] = o.order;
    if (o.budget > 0) j["budget"] = o.budget;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "coneinf: tangent cones at infinity of affine complex algebraic "
        "sets, with symbolic theorem checks and numeric cross-validation"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string which = "c3", kind = "c3";
    std::string subspace_path, splitting_path, arc_path, arc2_path;
    std::vector<std::string> arc_paths;
    int index = 1;
    double bound_a = 2.0, bound_b = 1.0;

    auto* cone_cmd = app.add_subcommand("cone", "compute one cone at infinity");
    add_common(cone_cmd, opts);
    cone_cmd->add_option("--which", which, "c3, c4, or c5")
        ->required()
        ->check(CLI::IsMember({"c3", "c4", "c5"}));

    auto* incl_cmd = app.add_subcommand(
        "inclusions", "verify the chain C3 within C4 within C5 and the "
                      "dimension window");
    add_common(incl_cmd, opts);

    auto* dim_cmd = app.add_subcommand("dim", "dimension of the variety");
    add_common(dim_cmd, opts);

    auto* deg_cmd = app.add_subcommand("degree", "degree of the variety");
    add_common(deg_cmd, opts);

    auto* sing_cmd = app.add_subcommand("singular", "singular locus ideal");
    add_common(sing_cmd, opts);

    auto* trans_cmd = app.add_subcommand(
        "transverse", "find a random subspace meeting the directions-at-"
                      "infinity cone only at 0");
    add_common(trans_cmd, opts);

    auto* sheets_cmd = app.add_subcommand(
        "sheets", "generic fibre cardinality of the projection along a "
                  "transverse subspace");
    add_common(sheets_cmd, opts);
    sheets_cmd->add_option("--subspace", subspace_path, "subspace JSON")
        ->required();

    auto* t12_cmd = app.add_subcommand(
        "check-thm12", "check that smooth critical points of a transverse "
                       "projection form a finite set");
    add_common(t12_cmd, opts);
    t12_cmd->add_option("--subspace", subspace_path, "subspace JSON")
        ->required();

    auto* t13_cmd = app.add_subcommand(
        "check-thm13", "check the hypersurface-image property of a "
                       "coordinate-extended projection");
    add_common(t13_cmd, opts);
    t13_cmd->add_option("--splitting", splitting_path, "splitting JSON")
        ->required();
    t13_cmd->add_option("--index", index, "1-based W-coordinate index")
        ->required();

    auto* lin_cmd = app.add_subcommand(
        "check-linear", "check the linearity criterion from a pure "
                        "dimension-k secant-limit cone");
    add_common(lin_cmd, opts);

    auto* wit_cmd = app.add_subcommand(
        "witness", "sample escaping directions on an arc and test them "
                   "against the symbolic cone");
    add_common(wit_cmd, opts);
    wit_cmd->add_option("--kind", kind, "c3, c4, or c5")
        ->required()
        ->check(CLI::IsMember({"c3", "c4", "c5"}));
    wit_cmd->add_option("--arc", arc_path, "arc JSON")->required();
    wit_cmd->add_option("--arc2", arc2_path,
                        "second arc for secant sampling (default: the first "
                        "arc shifted by 1)");

    auto* reg_cmd = app.add_subcommand(
        "region-check", "test the algebraic-region inequality |z''| <= "
                        "A(1+|z'|)^B on arc samples");
    add_common(reg_cmd, opts);
    reg_cmd->add_option("--splitting", splitting_path,
                        "splitting JSON; V carries z', W carries z''")
        ->required();
    reg_cmd->add_option("--arc", arc_paths, "arc JSON (repeatable)")
        ->required();
    reg_cmd->add_option("--bound-a", bound_a, "coefficient A (default 2)");
    reg_cmd->add_option("--bound-b", bound_b, "exponent B (default 1)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cone_cmd->parsed()) {
            auto inputs = base_inputs(opts);
            inputs["which"] = which;
            return run_reported("cone", opts, inputs, [&](Budget& b) {
                auto X = tci::variety_from_json(tci::load_json_file(opts.input), b);
                auto cone = tci::cone_infinity(tci::cone_kind_from_name(which), X, b);
                json results;
                results["cone"] = tci::cone_to_json(
                    cone, order_for(opts, cone.ideal.context()->arity()), b);
                return std::pair<json, int>(results, 0);
            });
        }
        if (incl_cmd->parsed()) {
            return run_reported("inclusions", opts, base_inputs(opts),
                                [&](Budget& b) {
                auto X = tci::variety_from_json(tci::load_json_file(opts.input), b);
                auto rep = tci::verify_inclusions(X, b);
                return std::pair<json, int>(tci::inclusions_to_json(rep),
                                            rep.pass() ? 0 : 1);
            });
        }
        if (dim_cmd->parsed()) {
            return run_reported("dim", opts, base_inputs(opts), [&](Budget& b) {
                auto X = tci::variety_from_json(tci::load_json_file(opts.input), b);
                json results;
                results["dim"] = X.dim();
                results["ambient"] = X.ambient_dimension();
                return std::pair<json, int>(results, 0);
            });
        }
        if (deg_cmd->parsed()) {
            return run_reported("degree", opts, base_inputs(opts),
                                [&](Budget& b) {
                auto X = tci::variety_from_json(tci::load_json_file(opts.input), b);
                json results;
                results["degree"] = tci::degree(X, b);
                return std::pair<json, int>(results, 0);
            });
        }
        if (sing_cmd->parsed()) {
            return run_reported("singular", opts, base_inputs(opts),
                                [&](Budget& b) {
                auto X = tci::variety_from_json(tci::load_json_file(opts.input), b);
                auto sing = tci::singular_locus(X, b);
                json results;
                results["generators"] = tci::basis_strings(
                    sing, order_for(opts, sing.context()->arity()), b);
                results["dim"] = tci::dimension(sing, b, "singular locus dimension");
                return std::pair<json, int>(results, 0);
            });
        }
        if (trans_cmd->parsed()) {
            return run_reported("transverse", opts, base_inputs(opts),
                                [&](Budget& b) {
                auto X = tci::variety_from_json(tci::load_json_file(opts.input), b);
                auto c3 = tci::c3_infinity(X, b);
                auto W = tci::find_transverse_subspace(
                    c3, X.ambient_dimension() - X.dim(), opts.seed, b);
                json results;
                results["subspace"] = tci::subspace_to_json(W);
                results["proper"] = true;
                return std::pair<json, int>(results, 0);
            });
        }
        if (sheets_cmd->parsed()) {
            auto inputs = base_inputs(opts);
            inputs["subspace"] = subspace_path;
            return run_reported("sheets", opts, inputs, [&](Budget& b) {
                auto X = tci::variety_from_json(tci::load_json_file(opts.input), b);
                auto W = tci::subspace_from_json(tci::load_json_file(subspace_path));
                auto c3 = tci::c3_infinity(X, b);
                json results;
                results["sheets"] = tci::sheet_count(X, c3, W, opts.seed, b);
                return std::pair<json, int>(results, 0);
            });
        }
        if (t12_cmd->parsed()) {
            auto inputs = base_inputs(opts);
            inputs["subspace"] = subspace_path;
            return run_reported("check-thm12", opts, inputs, [&](Budget& b) {
                auto X = tci::variety_from_json(tci::load_json_file(opts.input), b);
                auto W = tci::subspace_from_json(tci::load_json_file(subspace_path));
                auto rep = tci::verify_theorem_1_2(X, W, b);
                return std::pair<json, int>(tci::theorem_to_json(rep),
                                            exit_for(rep.verdict));
            });
        }
        if (t13_cmd->parsed()) {
            auto inputs = base_inputs(opts);
            inputs["splitting"] = splitting_path;
            inputs["index"] = index;
            return run_reported("check-thm13", opts, inputs, [&](Budget& b) {
                auto X = tci::variety_from_json(tci::load_json_file(opts.input), b);
                auto split = tci::splitting_from_json(tci::load_json_file(splitting_path));
                auto rep = tci::verify_theorem_1_3(X, split, index, b);
                return std::pair<json, int>(tci::theorem_to_json(rep),
                                            exit_for(rep.verdict));
            });
        }
        if (lin_cmd->parsed()) {
            return run_reported("check-linear", opts, base_inputs(opts),
                                [&](Budget& b) {
                auto X = tci::variety_from_json(tci::load_json_file(opts.input), b);
                auto rep = tci::check_affine_linearity(X, b);
                return std::pair<json, int>(tci::theorem_to_json(rep),
                                            exit_for(rep.verdict));
            });
        }
        if (wit_cmd->parsed()) {
            auto inputs = base_inputs(opts);
            inputs["kind"] = kind;
            inputs["arc"] = arc_path;
            if (!arc2_path.empty()) inputs["arc2"] = arc2_path;
            return run_reported("witness", opts, inputs, [&](Budget& b) {
                auto X = tci::variety_from_json(tci::load_json_file(opts.input), b);
                auto arc = tci::arc_from_json(tci::load_json_file(arc_path), X);
                auto ck = tci::cone_kind_from_name(kind);
                auto cone = tci::cone_infinity(ck, X, b);
                auto sched = tci::SampleSchedule::standard(opts.seed);
                tci::SampleSet samples;
                if (ck == tci::ConeKind::c5) {
                    auto other = arc2_path.empty()
                                     ? arc.shifted(1)
                                     : tci::arc_from_json(
                                           tci::load_json_file(arc2_path), X);
                    samples = tci::sample_secants(arc, other, sched);
                } else {
                    samples = tci::sample_directions(ck, arc, sched);
                }
                auto rep = tci::check_cone_membership(cone, samples);
                json results;
                results["kind"] = kind;
                results["membership"] = tci::membership_to_json(rep);
                return std::pair<json, int>(results, 0);
            });
        }
        if (reg_cmd->parsed()) {
            auto inputs = base_inputs(opts);
            inputs["splitting"] = splitting_path;
            inputs["arcs"] = arc_paths;
            inputs["bound_a"] = bound_a;
            inputs["bound_b"] = bound_b;
            return run_reported("region-check", opts, inputs, [&](Budget& b) {
                auto X = tci::variety_from_json(tci::load_json_file(opts.input), b);
                auto split = tci::splitting_from_json(tci::load_json_file(splitting_path));
                std::vector<tci::WitnessArc> arcs;
                for (const auto& p : arc_paths)
                    arcs.push_back(tci::arc_from_json(tci::load_json_file(p), X));
                auto sched = tci::SampleSchedule::standard(opts.seed);
                auto rep = tci::algebraic_region_check(arcs, split.V, split.W,
                                                       bound_a, bound_b, sched);
                json results;
                results["region"] = tci::region_to_json(rep);
                return std::pair<json, int>(results, 0);
            });
        }
        std::cerr << "error: no command selected\n";
        return 1;
    } catch (const tci::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const tci::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const tci::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
