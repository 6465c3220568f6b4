// Command-line front door for the hook-valued tableau library: validate
// and render tableau files, run crystal operators and the (un)crowding
// maps, enumerate families, expand polynomials and execute the
// verification sweeps.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hooktab/crowding.hpp"
#include "hooktab/crystal.hpp"
#include "hooktab/enumerate.hpp"
#include "hooktab/errors.hpp"
#include "hooktab/serialize.hpp"
#include "hooktab/symfunc.hpp"
#include "hooktab/uncrowding.hpp"
#include "hooktab/verify.hpp"

namespace {

using namespace hooktab;

struct GlobalOptions {
    std::string format;
    std::string out_path;
    int jobs = 1;
    bool trace = false;
};

std::string effective_format(const GlobalOptions& g, const std::string& fallback = "json") {
    if (!g.format.empty()) return g.format;
    if (const char* env = std::getenv("HOOKTAB_FORMAT")) {
        std::string f(env);
        if (f == "json" || f == "tsv" || f == "ascii") return f;
    }
    return fallback;
}

void emit(const GlobalOptions& g, const std::string& text) {
    if (g.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(g.out_path);
    if (!out) throw TableauError("cannot open output file " + g.out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TableauError("cannot open input file " + path);
    json j;
    in >> j;
    return j;
}

Partition parse_shape(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        parts.push_back(std::stoi(item));
    }
    return Partition(std::move(parts));
}

// Inputs to crowd: either {"S":..,"F":..} or the output of uncrowd.
std::pair<HookValuedTableau, FlaggedTableau> load_pair(const json& j) {
    if (j.contains("S") && j.contains("F")) {
        return {hvt_from_json(j.at("S")), flagged_from_json(j.at("F"))};
    }
    if (j.contains("P") && j.contains("Q")) {
        return {hvt_from_json(j.at("P")), flagged_from_json(j.at("Q"))};
    }
    throw TableauError("crowd input must contain S/F (or P/Q) fields");
}

std::string tableau_output(const GlobalOptions& g, const HookValuedTableau& t) {
    return effective_format(g) == "ascii" ? render_ascii(t) : to_json(t).dump(2);
}

int run_validate(const GlobalOptions& g, const std::string& in, const std::string& kind) {
    auto j = load_json(in);
    if (kind == "hvt") {
        emit(g, tableau_output(g, hvt_from_json(j)));
    } else if (kind == "flagged") {
        auto f = flagged_from_json(j);
        emit(g, effective_format(g) == "ascii" ? render_ascii(f) : to_json(f).dump(2));
    } else {
        auto r = rpp_from_json(j);
        emit(g, to_json(r).dump(2));
    }
    return 0;
}

int run_word(const GlobalOptions& g, const std::string& in, const std::string& variant) {
    auto j = load_json(in);
    if (variant == "rpp") {
        auto [ev, word] = rpp_eval_and_word(rpp_from_json(j));
        if (effective_format(g) == "json") {
            emit(g, json{{"ev", ev}, {"word", word}}.dump(2));
        } else {
            emit(g, "ev\t" + word_to_string(ev) + "\nword\t" + word_to_string(word));
        }
        return 0;
    }
    auto t = hvt_from_json(j);
    Word w = (variant == "row") ? svt_reading_word(t) : column_reading_word(t);
    if (effective_format(g, "ascii") == "json") {
        emit(g, json{{"word", w}}.dump(2));
    } else {
        emit(g, word_to_string(w));
    }
    return 0;
}

int run_crystal(const GlobalOptions& g, const std::string& in, const std::string& op, int index) {
    auto t = hvt_from_json(load_json(in));
    if (op == "phi" || op == "eps") {
        auto pr = pair_letters(t, index);
        emit(g, json{{"phi", pr.phi()}, {"eps", pr.eps()}}.dump(2));
        return 0;
    }
    if (op == "highest") {
        int max_i = std::max(index, t.max_letter());
        emit(g, json{{"highest_weight", is_highest_weight(t, max_i)}}.dump(2));
        return 0;
    }
    auto image = apply_crystal(t, index, op == "f" ? Direction::Lower : Direction::Raise);
    if (!image) {
        emit(g, effective_format(g) == "ascii" ? "annihilated"
                                               : json{{"annihilated", true}}.dump(2));
        return 0;
    }
    emit(g, tableau_output(g, *image));
    return 0;
}

int run_uncrowd(const GlobalOptions& g, const std::string& in, const std::string& variant) {
    auto t = hvt_from_json(load_json(in));
    if (variant == "svt") {
        auto r = uncrowd_svt(t);
        emit(g, to_json(r).dump(2));
        return 0;
    }
    UncrowdResult r = (variant == "leg") ? multiset_uncrowd(t) : uncrowd(t);
    if (effective_format(g) == "ascii") {
        std::ostringstream os;
        os << "P:\n" << render_ascii(r.P) << "Q:\n" << render_ascii(r.Q);
        emit(g, os.str());
        return 0;
    }
    json out = to_json(r);
    if (g.trace) {
        json stages = json::array();
        for (const auto& stage : r.p_stages) stages.push_back(to_json(stage));
        out["stages"] = std::move(stages);
    }
    emit(g, out.dump(2));
    return 0;
}

int run_crowd(const GlobalOptions& g, const std::string& in) {
    auto [svt, flagged] = load_pair(load_json(in));
    auto r = crowd(svt, flagged);
    if (effective_format(g) == "ascii") {
        emit(g, render_ascii(r.T));
        return 0;
    }
    json out = to_json(r);
    if (!g.trace) {
        out = json{{"T", out.at("T")}};
    } else {
        json stages = json::array();
        for (const auto& stage : r.stages) stages.push_back(to_json(stage));
        out["stages"] = std::move(stages);
    }
    emit(g, out.dump(2));
    return 0;
}

int run_enumerate(const GlobalOptions& g, const std::string& kind, const std::string& shape,
                  int max_entry, int arm, int leg, const std::string& inner,
                  const std::string& outer, const std::string& orientation) {
    json out = json::array();
    long long count = 0;
    if (kind == "hvt") {
        for (const auto& t : enumerate_hvt(parse_shape(shape), max_entry, arm, leg)) {
            out.push_back(to_json(t));
            ++count;
        }
    } else if (kind == "rpp") {
        for (const auto& r : enumerate_rpp(parse_shape(shape), max_entry)) {
            out.push_back(to_json(r));
            ++count;
        }
    } else {
        auto o = orientation == "row" ? Orientation::RowFlagged : Orientation::ColumnFlagged;
        for (const auto& f : enumerate_flagged(parse_shape(inner), parse_shape(outer), o)) {
            out.push_back(to_json(f));
            ++count;
        }
    }
    if (effective_format(g) == "tsv") {
        emit(g, "count\t" + std::to_string(count));
    } else {
        emit(g, json{{"count", count}, {"items", std::move(out)}}.dump(2));
    }
    return 0;
}

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::Schur: return "s";
        case Basis::BigG: return "G";
        case Basis::SmallG: return "g";
    }
    return "?";
}

int run_expand(const GlobalOptions& g, const std::string& shape, const std::string& basis,
               int bound) {
    Partition lambda = parse_shape(shape);
    Basis b = Basis::Schur;
    if (basis == "bigG") b = Basis::BigG;
    if (basis == "smallg") b = Basis::SmallG;
    auto expansion = expand_in_basis(lambda, b, bound);

    if (effective_format(g, "tsv") == "json") {
        json terms = json::array();
        for (const auto& [nu, coeff] : expansion.terms) {
            json monomials = json::array();
            for (const auto& [exps, value] : coeff.terms()) {
                monomials.push_back(json{{"alpha", exps.first},
                                         {"beta", exps.second},
                                         {"coefficient", value.str()}});
            }
            terms.push_back(json{{"shape", nu.parts()}, {"terms", std::move(monomials)}});
        }
        emit(g, json{{"basis", basis_name(b)},
                     {"bound", expansion.truncation_bound},
                     {"expansion", std::move(terms)}}
                    .dump(2));
        return 0;
    }
    std::ostringstream os;
    os << "shape\talpha\tbeta\tcoefficient\n";
    for (const auto& [nu, coeff] : expansion.terms) {
        for (const auto& [exps, value] : coeff.terms()) {
            os << to_string(nu) << '\t' << exps.first << '\t' << exps.second << '\t' << value
               << '\n';
        }
    }
    emit(g, os.str());
    return 0;
}

int run_poly(const GlobalOptions& g, const std::string& family, const std::string& shape, int vars,
             int bound, bool beta_minus_one) {
    Partition lambda = parse_shape(shape);
    TruncatedSymmetricPolynomial poly;
    if (family == "schur") {
        poly = schur_poly(lambda, vars, bound);
    } else if (family == "stable") {
        poly = stable_grothendieck(lambda, vars, bound,
                                   beta_minus_one ? BetaMode::MinusOne : BetaMode::Formal);
    } else if (family == "dual") {
        poly = dual_grothendieck(lambda, vars);
    } else if (family == "weak") {
        poly = weak_grothendieck(lambda, vars, bound);
    } else {
        poly = canonical_grothendieck(lambda, vars, bound);
    }
    if (effective_format(g, "tsv") == "json") {
        json monomials = json::array();
        for (const auto& [exps, coeff] : poly.terms()) {
            monomials.push_back(json{{"exponents", exps}, {"coefficient", coeff.str()}});
        }
        emit(g, json{{"variables", poly.num_variables()},
                     {"max_degree", poly.max_degree()},
                     {"truncated", poly.truncated()},
                     {"monomials", std::move(monomials)}}
                    .dump(2));
        return 0;
    }
    std::ostringstream os;
    os << "exponents\tcoefficient\n";
    for (const auto& [exps, coeff] : poly.terms()) {
        for (std::size_t k = 0; k < exps.size(); ++k) os << (k ? "," : "") << exps[k];
        os << '\t' << coeff.str() << '\n';
    }
    emit(g, os.str());
    return 0;
}

int run_graph(const GlobalOptions& g, const std::string& shape, int max_entry, int arm, int leg) {
    auto graph = build_crystal_graph(parse_shape(shape), max_entry, arm, leg);
    if (effective_format(g, "dot") == "json") {
        emit(g, to_json(graph).dump(2));
    } else {
        emit(g, dot_export(graph));
    }
    return 0;
}

int run_verify(const GlobalOptions& g, const std::string& suite, const std::string& shape,
               int max_entry, int max_arm, int max_leg) {
    Partition lambda = parse_shape(shape);
    VerifyStats stats;
    for (int a = 0; a <= max_arm; ++a) {
        for (int l = 0; l <= max_leg; ++l) {
            if (suite == "roundtrip") {
                stats.merge(verify_roundtrip(lambda, max_entry, a, l, g.jobs));
            } else if (suite == "intertwine") {
                stats.merge(verify_intertwine(lambda, max_entry, a, l, g.jobs));
            } else if (suite == "knuth") {
                stats.merge(verify_knuth(lambda, max_entry, a, l, g.jobs));
            } else if (suite == "mvt-agree") {
                if (l == 0) stats.merge(verify_mvt_agreement(lambda, max_entry, a, g.jobs));
            } else if (suite == "stembridge") {
                stats.merge(verify_stembridge(lambda, max_entry, a, l));
            } else {
                stats.merge(verify_recording_and_weights(lambda, max_entry, a, l, g.jobs));
            }
        }
    }
    std::ostringstream os;
    os << "suite\tshape\tmax-entry\tchecked\tfailures\n";
    os << suite << '\t' << to_string(lambda) << '\t' << max_entry << '\t' << stats.checked << '\t'
       << stats.failures << '\n';
    for (const auto& note : stats.notes) os << "note\t" << note << '\n';
    emit(g, os.str());
    return stats.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hook-valued tableaux: crystal operators, uncrowding and crowding maps, "
                 "canonical Grothendieck expansions"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    int seed = 0;
    app.add_option("--format", g.format, "Output format: json, tsv or ascii (env HOOKTAB_FORMAT)")
        ->check(CLI::IsMember({"json", "tsv", "ascii", "dot"}));
    app.add_option("--out", g.out_path, "Write output to this file instead of stdout");
    app.add_option("--jobs", g.jobs, "Worker threads for verification sweeps")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed,
                   "Accepted for harness compatibility; all algorithms are deterministic and "
                   "the value is ignored");
    app.add_flag("--trace", g.trace, "Include intermediate stages in uncrowd/crowd output");

    std::string in, kind = "hvt", variant = "arm", op = "f", word_variant = "column";
    std::string shape, inner, outer, orientation = "column", basis = "schur", family = "canonical";
    std::string suite;
    int index = 1, max_entry = 3, arm = 0, leg = 0, bound = 4, vars = 3;
    bool beta_minus_one = false;

    auto* validate = app.add_subcommand("validate", "Validate a tableau file and echo it canonically");
    validate->add_option("--in", in, "Input JSON file")->required();
    validate->add_option("--kind", kind, "hvt, flagged or rpp")
        ->check(CLI::IsMember({"hvt", "flagged", "rpp"}));

    auto* word = app.add_subcommand("word", "Reading words and RPP evaluations");
    word->add_option("--in", in, "Input JSON file")->required();
    word->add_option("--variant", word_variant, "column (hook-valued), row (set-valued) or rpp")
        ->check(CLI::IsMember({"column", "row", "rpp"}));

    auto* crystal = app.add_subcommand("crystal", "Apply a crystal operator or report string data");
    crystal->add_option("--in", in, "Input JSON file")->required();
    crystal->add_option("--op", op, "f, e, phi, eps or highest")
        ->check(CLI::IsMember({"f", "e", "phi", "eps", "highest"}));
    crystal->add_option("--index", index, "Crystal index i")->check(CLI::PositiveNumber);

    auto* uncrowd_cmd = app.add_subcommand("uncrowd", "Uncrowd a hook-valued tableau");
    uncrowd_cmd->add_option("--in", in, "Input JSON file")->required();
    uncrowd_cmd->add_option("--variant", variant, "arm (set-valued target), leg (multiset) or svt")
        ->check(CLI::IsMember({"arm", "leg", "svt"}));

    auto* crowd_cmd = app.add_subcommand("crowd", "Crowd a set-valued tableau along a recording tableau");
    crowd_cmd->add_option("--in", in, "Input JSON file with S/F (or P/Q)")->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate tableau families");
    enumerate_cmd->add_option("--kind", kind, "hvt, rpp or flagged")
        ->check(CLI::IsMember({"hvt", "rpp", "flagged"}));
    enumerate_cmd->add_option("--shape", shape, "Partition, e.g. 2,1");
    enumerate_cmd->add_option("--max-entry", max_entry, "Largest letter");
    enumerate_cmd->add_option("--arm", arm, "Exact arm excess");
    enumerate_cmd->add_option("--leg", leg, "Exact leg excess");
    enumerate_cmd->add_option("--inner", inner, "Inner shape (flagged)");
    enumerate_cmd->add_option("--outer", outer, "Outer shape (flagged)");
    enumerate_cmd->add_option("--orientation", orientation, "row or column (flagged)")
        ->check(CLI::IsMember({"row", "column"}));

    auto* expand = app.add_subcommand("expand", "Basis expansions of the canonical polynomial");
    expand->add_option("--shape", shape, "Indexing partition")->required();
    expand->add_option("--basis", basis, "schur, bigG or smallg")
        ->check(CLI::IsMember({"schur", "bigG", "smallg"}));
    expand->add_option("--bound", bound, "Largest basis shape size explored");

    auto* poly = app.add_subcommand("poly", "Truncated polynomial generating functions");
    poly->add_option("--family", family, "schur, stable, dual, weak or canonical")
        ->check(CLI::IsMember({"schur", "stable", "dual", "weak", "canonical"}));
    poly->add_option("--shape", shape, "Indexing partition")->required();
    poly->add_option("--vars", vars, "Number of variables");
    poly->add_option("--max-letters", bound, "Total letter bound");
    poly->add_flag("--beta-minus-one", beta_minus_one, "Substitute beta = -1 (stable family)");

    auto* graph = app.add_subcommand("graph", "Export the crystal graph");
    graph->add_option("--shape", shape, "Partition")->required();
    graph->add_option("--max-entry", max_entry, "Largest letter");
    graph->add_option("--arm", arm, "Exact arm excess");
    graph->add_option("--leg", leg, "Exact leg excess");

    auto* verify = app.add_subcommand("verify", "Exhaustive verification sweeps");
    verify->add_option("suite", suite,
                       "roundtrip, intertwine, knuth, mvt-agree, stembridge or recording")
        ->required()
        ->check(CLI::IsMember({"roundtrip", "intertwine", "knuth", "mvt-agree", "stembridge",
                               "recording"}));
    verify->add_option("--shape", shape, "Partition")->required();
    verify->add_option("--max-entry", max_entry, "Largest letter");
    verify->add_option("--arm", arm, "Maximum arm excess (all values up to it are swept)");
    verify->add_option("--leg", leg, "Maximum leg excess");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits cleanly, usage errors with 2
    }

    try {
        if (*validate) return run_validate(g, in, kind);
        if (*word) return run_word(g, in, word_variant);
        if (*crystal) return run_crystal(g, in, op, index);
        if (*uncrowd_cmd) return run_uncrowd(g, in, variant);
        if (*crowd_cmd) return run_crowd(g, in);
        if (*enumerate_cmd)
            return run_enumerate(g, kind, shape, max_entry, arm, leg, inner, outer, orientation);
        if (*expand) return run_expand(g, shape, basis, bound);
        if (*poly) return run_poly(g, family, shape, vars, bound, beta_minus_one);
        if (*graph) return run_graph(g, shape, max_entry, arm, leg);
        if (*verify) return run_verify(g, suite, shape, max_entry, arm, leg);
    } catch (const NotInKLambdaError& e) {
        std::cerr << json{{"error", "NotInKLambda"},
                          {"stage", e.stage},
                          {"step", e.step},
                          {"detail", e.what()}}
                         .dump()
                  << '\n';
        return 1;
    } catch (const TableauError& e) {
        std::cerr << json{{"error", "TableauError"}, {"detail", e.what()}}.dump() << '\n';
        return 1;
    } catch (const json::exception& e) {
        std::cerr << json{{"error", "InvalidJson"}, {"detail", e.what()}}.dump() << '\n';
        return 1;
    }
    return 2;
}
