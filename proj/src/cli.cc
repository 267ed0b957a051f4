// Copyright 2026 The netbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netbell/cli.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "netbell/lhv.h"
#include "netbell/network.h"
#include "netbell/quantum.h"
#include "netbell/sampler.h"

#ifndef NETBELL_VERSION
#define NETBELL_VERSION "0.0.0"
#endif

namespace netbell {

namespace {

using nlohmann::json;

struct ParamSchema {
    std::string name;
    std::string type;
    std::string description;
};

struct ScenarioEntry {
    std::string name;
    std::string tag;
    std::string description;
    std::vector<ParamSchema> params;
    bool multi_family;
};

const ParamSchema kFamilyParam{"family", "first|second|combined", "setting family"};

const std::vector<ScenarioEntry> &registry() {
    static const std::vector<ScenarioEntry> entries = {
        {"chsh", "chsh", "CHSH on a single Bell pair", {}, false},
        {"bilocal-nonlinear", "bilocal/sqrt", "two-source bilocality baseline with square-root terms", {}, false},
        {"bilocal-linear", "bilocal/linear", "two-source bilocality baseline with linear absolute terms", {}, false},
        {"two-source", "two-source/<family>", "linear inequalities on the two-source chain", {kFamilyParam}, true},
        {"star", "star/linear/<family>", "linear inequalities on a K-source star network",
         {{"k", "integer >= 2", "number of sources"}, kFamilyParam}, true},
        {"star-nonlinear", "star/nonlinear/<family>", "nonlinear star inequalities with exponent r",
         {{"k", "integer >= 2", "number of sources"},
          {"r_num", "odd integer", "exponent numerator"},
          {"r_den", "odd integer", "exponent denominator; r K < 2"},
          kFamilyParam},
         true},
        {"nkm", "nkm/linear/<family>", "linear inequalities on an (N, K, m) network",
         {{"k", "integer >= 1", "number of single-qubit parties"},
          {"m", "integer >= 1", "number of joint parties (default K)"},
          {"n", "integer >= K", "number of sources (default from wiring)"},
          {"wiring", "string", "inter-Bob sources as '1-2,2-3'"},
          {"inter_bit", "0|1", "measurement bit of inter-Bob qubits"},
          kFamilyParam},
         true},
        {"ghz-a", "ghz/a/<family>", "Bell pair plus GHZ source, Bob holds two GHZ qubits", {kFamilyParam}, true},
        {"ghz-b", "ghz/b", "Bell pair plus GHZ source split over two Charlies", {}, false},
    };
    return entries;
}

const ScenarioEntry &find_entry(const std::string &name) {
    for (const ScenarioEntry &e : registry()) {
        if (e.name == name) {
            return e;
        }
    }
    throw UsageError("unknown scenario '" + name + "'; run 'netbell list'");
}

std::vector<InterBobLink> parse_wiring(const std::string &wiring) {
    std::vector<InterBobLink> links;
    if (wiring.empty()) {
        return links;
    }
    std::stringstream ss(wiring);
    std::string item;
    static const std::regex link_re(R"(\s*(\d+)\s*-\s*(\d+)\s*)");
    while (std::getline(ss, item, ',')) {
        std::smatch match;
        if (!std::regex_match(item, match, link_re)) {
            throw UsageError("wiring entries look like '1-2', got '" + item + "'");
        }
        std::size_t a = std::stoul(match[1]);
        std::size_t b = std::stoul(match[2]);
        if (a == 0 || b == 0) {
            throw UsageError("wiring uses 1-indexed Bobs");
        }
        links.push_back({a - 1, b - 1});
    }
    return links;
}

NetworkTopology nkm_topology(const RunConfig &cfg) {
    std::size_t k = cfg.k;
    std::size_t m = cfg.m == 0 ? k : cfg.m;
    std::vector<InterBobLink> links = parse_wiring(cfg.wiring);
    if (cfg.wiring.empty()) {
        for (std::size_t j = 0; j + 1 < m; j++) {
            links.push_back({j, j + 1});
        }
    }
    std::size_t n = cfg.n == 0 ? k + links.size() : cfg.n;
    std::vector<std::size_t> alice_bob;
    if (m == 1) {
        alice_bob.assign(k, 0);
    }
    return nkm({n, k, m, links, alice_bob});
}

FamilySelection single_family_only(const RunConfig &cfg) {
    if (cfg.family != "first") {
        throw UsageError("scenario " + cfg.scenario + " has a single setting family");
    }
    return FamilySelection::First;
}

std::vector<BellKind> parse_bell_kinds(const std::string &token) {
    static const std::regex kind_re(R"((phi|psi)[+-])");
    std::vector<BellKind> kinds;
    std::size_t consumed = 0;
    for (auto it = std::sregex_iterator(token.begin(), token.end(), kind_re); it != std::sregex_iterator(); ++it) {
        if (static_cast<std::size_t>(it->position()) != consumed) {
            break;
        }
        kinds.push_back(bell_kind_from_name(it->str()));
        consumed += static_cast<std::size_t>(it->length());
    }
    if (consumed != token.size() || kinds.empty()) {
        throw UsageError("Bell-state list must look like 'phi+psi-', got '" + token + "'");
    }
    return kinds;
}

StabilizerGroup bell_product(const std::vector<BellKind> &kinds, const NetworkTopology &t) {
    if (kinds.size() != t.sources.size()) {
        throw UsageError("state names " + std::to_string(kinds.size()) + " Bell states but the network has " +
                         std::to_string(t.sources.size()) + " sources");
    }
    StabilizerGroup g = maximally_mixed(t.n_qubits);
    for (std::size_t s = 0; s < t.sources.size(); s++) {
        if (t.sources[s].kind != SourceKind::BellPair) {
            throw UsageError("Bell-state lists need Bell-pair sources only");
        }
        g = g.combined_with(bell_state(kinds[s], t.sources[s].qubits[0], t.sources[s].qubits[1], t.n_qubits));
    }
    return g;
}

StabilizerGroup target_state(const NetworkTopology &t) {
    StabilizerGroup g = maximally_mixed(t.n_qubits);
    for (const SourceSpec &s : t.sources) {
        if (s.kind == SourceKind::BellPair) {
            g = g.combined_with(bell_pair(s.qubits[0], s.qubits[1], t.n_qubits));
        } else {
            g = g.combined_with(ghz3(s.qubits[0], s.qubits[1], s.qubits[2], t.n_qubits));
        }
    }
    return g;
}

double parse_angle(std::string token) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    static const std::regex pi_re(R"(^(\d*\.?\d*)\*?pi(?:/(\d+(?:\.\d+)?))?$)");
    std::smatch match;
    if (std::regex_match(token, match, pi_re)) {
        double factor = match[1].str().empty() ? 1.0 : std::stod(match[1]);
        double divisor = match[2].matched ? std::stod(match[2]) : 1.0;
        return factor * kPi / divisor;
    }
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != token.size() || token.empty()) {
        throw UsageError("cannot parse angle '" + token + "'");
    }
    return value;
}

std::vector<double> parse_angles(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_angle(item));
    }
    return out;
}

std::string exponent_string(const Exponent &r) {
    return std::to_string(r.numerator) + "/" + std::to_string(r.denominator);
}

json inequality_json(const InequalityExpr &ineq) {
    json terms = json::array();
    for (std::size_t t = 0; t < ineq.terms.size(); t++) {
        const Term &term = ineq.terms[t];
        SegmentedOperator op = segmented_operator(ineq, t);
        json factors = json::array();
        for (const SegmentFactor &f : op.factors) {
            factors.push_back(std::string(f.sine ? "sin " : "cos ") + ineq.angle_slots[f.angle_slot]);
        }
        terms.push_back({{"label", term.correlator.label},
                         {"coefficient", term.coefficient},
                         {"family", ineq.families[term.family].name},
                         {"operator", op.pauli.str()},
                         {"factors", factors}});
    }
    json families = json::array();
    for (const SettingFamily &f : ineq.families) {
        families.push_back(f.name);
    }
    return {{"name", ineq.name},
            {"tag", ineq.tag},
            {"topology", to_json(ineq.topology)},
            {"families", families},
            {"angle_slots", ineq.angle_slots},
            {"exponent", exponent_string(ineq.exponent)},
            {"absolute_terms", ineq.absolute_terms},
            {"scale", ineq.scale},
            {"classical_bound", ineq.classical_bound},
            {"claimed_quantum_max", ineq.claimed_quantum_max},
            {"bound_model", ineq.bound_model == BoundModel::Bilocal ? "bilocal" : "genuine-local"},
            {"terms", terms}};
}

json report_header(const std::string &command, const RunConfig &cfg, const InequalityExpr &ineq) {
    return {{"tool", {{"name", "netbell"}, {"version", NETBELL_VERSION}}},
            {"command", command},
            {"tag", ineq.tag},
            {"config", to_json(cfg)},
            {"inequality", inequality_json(ineq)}};
}

json correlators_json(const InequalityExpr &ineq, const Evaluator &ev, const AngleAssignment &angles) {
    json out = json::array();
    std::vector<double> values = ev.correlators(angles);
    for (std::size_t t = 0; t < ineq.terms.size(); t++) {
        out.push_back({{"label", ineq.terms[t].correlator.label},
                       {"value", values[t]},
                       {"pauli_expectation", ev.pauli_expectations()[t]}});
    }
    return out;
}

void require_valid(const RunConfig &cfg) {
    if (!(cfg.tolerance > 0)) {
        throw UsageError("tolerance must be positive");
    }
    if (cfg.format != "json" && cfg.format != "csv") {
        throw UsageError("format must be json or csv");
    }
    family_selection_from_name(cfg.family);
}

CommandResult with_verdict(json report, bool pass) {
    report["verdict"] = pass ? "PASS" : "FAIL";
    return {std::move(report), pass ? 0 : 1, {}};
}

template <typename Fn>
auto as_usage_error(Fn fn) {
    try {
        return fn();
    } catch (const UsageError &) {
        throw;
    } catch (const BudgetExceeded &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

/// Quantum value report shared by evaluate and optimize.
CommandResult quantum_report(const std::string &command, const RunConfig &cfg, bool optimize) {
    require_valid(cfg);
    InequalityExpr ineq = as_usage_error([&] { return build_scenario(cfg); });
    QuantumState state = as_usage_error([&] { return build_state(cfg.state, ineq, cfg.q); });
    Evaluator ev(ineq, state);
    json report = report_header(command, cfg, ineq);
    AngleAssignment angles;
    double value;
    if (optimize) {
        OptimizeOptions options;
        options.starts = cfg.starts;
        options.seed = cfg.seed;
        options.threads = thread_count();
        OptimizeResult r = optimize_angles(ineq, state, options);
        angles = r.angles;
        value = r.value;
        report["optimizer"] = {{"gradient_norm", r.gradient_norm}, {"sweeps", r.sweeps}, {"starts", cfg.starts}};
    } else {
        angles = as_usage_error([&] { return resolve_angles(cfg, ineq); });
        value = ev.value(angles);
    }
    double bound = ineq.classical_bound;
    report["angles"] = angles.theta;
    report["value"] = value;
    report["classical_bound"] = bound;
    report["claimed_quantum_max"] = ineq.claimed_quantum_max;
    report["violation_ratio"] = value / bound;
    report["violates_classical_bound"] = value > bound + cfg.tolerance;
    report["difference_from_claim"] = value - ineq.claimed_quantum_max;
    report["correlators"] = correlators_json(ineq, ev, angles);
    return with_verdict(std::move(report), std::abs(value - ineq.claimed_quantum_max) <= cfg.tolerance);
}

void write_atomically(const std::string &path, const std::string &content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::runtime_error("cannot open " + tmp + " for writing");
        }
        f << content;
        if (!f) {
            throw std::runtime_error("failed writing " + tmp);
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

json to_json(const RunConfig &cfg) {
    return {{"scenario", cfg.scenario}, {"k", cfg.k},         {"n", cfg.n},
            {"m", cfg.m},               {"r_num", cfg.r_num}, {"r_den", cfg.r_den},
            {"family", cfg.family},     {"wiring", cfg.wiring}, {"inter_bit", cfg.inter_bit},
            {"state", cfg.state},       {"q", cfg.q},         {"angles", cfg.angles},
            {"rounds", cfg.rounds},     {"seed", cfg.seed},   {"tolerance", cfg.tolerance},
            {"starts", cfg.starts},     {"out", cfg.out},     {"format", cfg.format}};
}

RunConfig run_config_from_json(const json &j, RunConfig base) {
    if (!j.is_object()) {
        throw UsageError("config must be a JSON object");
    }
    try {
        for (const auto &[key, value] : j.items()) {
            if (key == "scenario") base.scenario = value.get<std::string>();
            else if (key == "k") base.k = value.get<std::size_t>();
            else if (key == "n") base.n = value.get<std::size_t>();
            else if (key == "m") base.m = value.get<std::size_t>();
            else if (key == "r_num") base.r_num = value.get<int>();
            else if (key == "r_den") base.r_den = value.get<int>();
            else if (key == "family") base.family = value.get<std::string>();
            else if (key == "wiring") base.wiring = value.get<std::string>();
            else if (key == "inter_bit") base.inter_bit = value.get<int>();
            else if (key == "state") base.state = value.get<std::string>();
            else if (key == "q") base.q = value.get<double>();
            else if (key == "angles") {
                base.angles = value.is_string() ? parse_angles(value.get<std::string>()) : value.get<std::vector<double>>();
            }
            else if (key == "rounds") base.rounds = value.get<std::size_t>();
            else if (key == "seed") base.seed = value.get<std::uint64_t>();
            else if (key == "tolerance") base.tolerance = value.get<double>();
            else if (key == "starts") base.starts = value.get<std::size_t>();
            else if (key == "out") base.out = value.get<std::string>();
            else if (key == "format") base.format = value.get<std::string>();
            else throw UsageError("unknown config key '" + key + "'");
        }
    } catch (const json::exception &e) {
        throw UsageError(std::string("bad config value: ") + e.what());
    }
    return base;
}

InequalityExpr build_scenario(const RunConfig &cfg) {
    const ScenarioEntry &entry = find_entry(cfg.scenario);
    FamilySelection family = entry.multi_family ? family_selection_from_name(cfg.family) : single_family_only(cfg);
    const std::string &name = entry.name;
    if (name == "chsh") {
        return build_chsh();
    }
    if (name == "bilocal-nonlinear") {
        return build_bilocal_baseline().nonlinear;
    }
    if (name == "bilocal-linear") {
        return build_bilocal_baseline().linear;
    }
    if (name == "two-source") {
        TwoSourceLinear t = build_two_source_linear();
        return family == FamilySelection::First ? t.first : (family == FamilySelection::Second ? t.second : t.combined);
    }
    if (name == "star") {
        return build_star(cfg.k, family);
    }
    if (name == "star-nonlinear") {
        if (cfg.r_num <= 0 || cfg.r_den <= 0 || cfg.r_num % 2 == 0 || cfg.r_den % 2 == 0) {
            throw UsageError("nonlinear exponent r = r_num / r_den needs positive odd integers");
        }
        return build_star_nonlinear(cfg.k, (cfg.r_den - 1) / 2, (cfg.r_num - 1) / 2, family);
    }
    if (name == "nkm") {
        return build_nkm(nkm_topology(cfg), family, cfg.inter_bit);
    }
    if (name == "ghz-a") {
        return build_ghz_a(family);
    }
    return build_ghz_b();
}

QuantumState build_state(const std::string &selector, const InequalityExpr &ineq, double q) {
    const NetworkTopology &t = ineq.topology;
    if (selector == "target" || selector == "bell") {
        return target_state(t);
    }
    if (selector == "target-dense") {
        return to_dense(target_state(t));
    }
    if (selector == "mixed") {
        return maximally_mixed(t.n_qubits);
    }
    if (selector == "smolin") {
        if (t.sources.size() != 2 || t.n_qubits != 4 || t.sources[0].kind != SourceKind::BellPair ||
            t.sources[1].kind != SourceKind::BellPair) {
            throw UsageError("the Smolin state needs a network of two Bell-pair sources");
        }
        return smolin(t.sources[0].qubits[0], t.sources[0].qubits[1], t.sources[1].qubits[0], t.sources[1].qubits[1],
                      t.n_qubits);
    }
    auto check_q = [](double w) {
        if (!(w >= 0 && w <= 1)) {
            throw UsageError("mixture weight q must lie in [0, 1]");
        }
        return w;
    };
    if (selector == "rho1" || selector == "rho2") {
        std::string second = selector == "rho1" ? "psi-" : "psi+";
        std::vector<BellKind> a(t.sources.size(), BellKind::PhiPlus);
        std::vector<BellKind> b(t.sources.size(), bell_kind_from_name(second));
        return mix(check_q(q), bell_product(a, t), bell_product(b, t));
    }
    static const std::regex mix_re(R"(^mix\(\s*([0-9.eE+-]+)\s*,\s*([a-z+-]+)\s*,\s*([a-z+-]+)\s*\)$)");
    std::smatch match;
    if (std::regex_match(selector, match, mix_re)) {
        double w = 0;
        try {
            w = std::stod(match[1]);
        } catch (const std::exception &) {
            throw UsageError("bad mixture weight in '" + selector + "'");
        }
        return mix(check_q(w), bell_product(parse_bell_kinds(match[2]), t),
                   bell_product(parse_bell_kinds(match[3]), t));
    }
    throw UsageError("unknown state '" + selector + "'");
}

AngleAssignment resolve_angles(const RunConfig &cfg, const InequalityExpr &ineq) {
    std::size_t slots = ineq.angle_slots.size();
    AngleAssignment angles;
    if (cfg.angles.empty()) {
        angles = AngleAssignment::uniform(slots);
    } else if (cfg.angles.size() == 1) {
        angles = AngleAssignment::uniform(slots, cfg.angles.front());
    } else {
        angles.theta = cfg.angles;
    }
    angles.validate(slots);
    return angles;
}

json cmd_list() {
    json scenarios = json::array();
    for (const ScenarioEntry &e : registry()) {
        json params = json::array();
        for (const ParamSchema &p : e.params) {
            params.push_back({{"name", p.name}, {"type", p.type}, {"description", p.description}});
        }
        scenarios.push_back({{"name", e.name}, {"tag", e.tag}, {"description", e.description}, {"parameters", params}});
    }
    return {{"tool", {{"name", "netbell"}, {"version", NETBELL_VERSION}}},
            {"command", "list"},
            {"scenarios", scenarios},
            {"states", {"target", "bell", "target-dense", "mixed", "smolin", "rho1", "rho2", "mix(q,A,B)"}}};
}

CommandResult cmd_certify(const RunConfig &cfg) {
    require_valid(cfg);
    InequalityExpr ineq = as_usage_error([&] { return build_scenario(cfg); });
    Certification c = certify(ineq, cfg.tolerance);
    json report = report_header("certify", cfg, ineq);
    report["bound"] = c.bound;
    report["method"] = c.method;
    report["classical_bound"] = ineq.classical_bound;
    report["raw_strategies"] = c.raw_strategies;
    report["reduced_strategies"] = c.reduced_strategies;
    report["vertex_count"] = c.vertex_count;
    report["cross_polytope"] = c.cross_polytope;
    report["normalization_ok"] = c.normalization_ok;
    report["enumerated_bound"] = c.enumerated_bound ? json(*c.enumerated_bound) : json(nullptr);
    report["numeric_bound"] = c.numeric_bound ? json(*c.numeric_bound) : json(nullptr);
    report["warnings"] = c.warnings;
    report["verdict"] = c.verdict;
    return {std::move(report), c.verdict == "FAIL" ? 1 : 0, {}};
}

CommandResult cmd_evaluate(const RunConfig &cfg) {
    return quantum_report("evaluate", cfg, false);
}

CommandResult cmd_optimize(const RunConfig &cfg) {
    return quantum_report("optimize", cfg, true);
}

CommandResult cmd_simulate(const RunConfig &cfg) {
    require_valid(cfg);
    if (cfg.rounds == 0) {
        throw UsageError("simulate needs --rounds > 0");
    }
    InequalityExpr ineq = as_usage_error([&] { return build_scenario(cfg); });
    QuantumState state = as_usage_error([&] { return build_state(cfg.state, ineq, cfg.q); });
    AngleAssignment angles = as_usage_error([&] { return resolve_angles(cfg, ineq); });
    SimulationOptions options{cfg.rounds, cfg.seed, thread_count()};
    RoundLog log = as_usage_error([&] { return simulate_rounds(ineq, state, angles, options); });
    EstimateReport est = estimate(log, ineq);
    double exact = evaluate(ineq, state, angles);

    json report = report_header("simulate", cfg, ineq);
    json correlators = json::array();
    for (const CorrelatorEstimate &c : est.correlators) {
        correlators.push_back({{"label", c.label},
                               {"estimate", c.estimate},
                               {"standard_error", std::isfinite(c.standard_error) ? json(c.standard_error) : json("inf")}});
    }
    bool finite = std::isfinite(est.standard_error);
    double deviation = std::abs(est.value - exact);
    report["angles"] = angles.theta;
    report["estimate"] = {{"value", est.value},
                          {"standard_error", finite ? json(est.standard_error) : json("inf")},
                          {"rounds", est.rounds},
                          {"rounds_per_family", cfg.rounds},
                          {"seed", est.seed},
                          {"correlators", correlators}};
    report["exact_value"] = exact;
    report["deviation_in_standard_errors"] =
        finite && est.standard_error > 0 ? json(deviation / est.standard_error) : json(nullptr);
    report["warnings"] = est.warnings;
    CommandResult result = with_verdict(std::move(report), !finite || deviation <= 4 * est.standard_error);
    if (cfg.format == "csv") {
        std::ostringstream csv;
        write_csv(csv, log, ineq);
        result.csv = csv.str();
    }
    return result;
}

std::size_t thread_count() {
    const char *env = std::getenv("NETBELL_THREADS");
    if (env == nullptr || *env == '\0') {
        return 1;
    }
    char *end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0) {
        return 1;
    }
    return static_cast<std::size_t>(v);
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"netbell: Bell inequalities on quantum networks"};
    app.set_version_flag("--version", NETBELL_VERSION);
    app.require_subcommand(1);

    RunConfig flags;
    std::string angles_text;
    std::string config_path;
    // Options given on the command line, by config key.
    std::vector<std::pair<std::string, CLI::Option *>> given;

    auto add_run_options = [&](CLI::App *sub, bool simulation) {
        given.push_back({"scenario", sub->add_option("--scenario", flags.scenario, "scenario name (see 'list')")});
        given.push_back({"k", sub->add_option("--k", flags.k, "number of sources / single-qubit parties")});
        given.push_back({"n", sub->add_option("--n", flags.n, "number of sources of an (N, K, m) network")});
        given.push_back({"m", sub->add_option("--m", flags.m, "number of Bobs of an (N, K, m) network")});
        given.push_back({"r_num", sub->add_option("--r-num", flags.r_num, "exponent numerator")});
        given.push_back({"r_den", sub->add_option("--r-den", flags.r_den, "exponent denominator")});
        given.push_back({"family", sub->add_option("--family", flags.family, "first, second or combined")
                                       ->check(CLI::IsMember({"first", "second", "combined"}))});
        given.push_back({"wiring", sub->add_option("--wiring", flags.wiring, "inter-Bob sources, e.g. '1-2,2-3'")});
        given.push_back({"inter_bit", sub->add_option("--inter-bit", flags.inter_bit, "inter-Bob measurement bit")
                                          ->check(CLI::IsMember({0, 1}))});
        given.push_back({"tolerance", sub->add_option("--tolerance", flags.tolerance, "PASS tolerance")});
        given.push_back({"out", sub->add_option("--out", flags.out, "output file (written atomically)")});
        given.push_back({"format", sub->add_option("--format", flags.format, "json or csv")
                                       ->check(CLI::IsMember({"json", "csv"}))});
        sub->add_option("--config", config_path, "JSON file with RunConfig keys; flags override it");
        if (sub->get_name() == "certify") {
            return;
        }
        given.push_back({"state", sub->add_option("--state", flags.state, "state selector")});
        given.push_back({"q", sub->add_option("--q", flags.q, "mixture weight for rho1 / rho2")});
        given.push_back({"angles", sub->add_option("--angles", angles_text, "comma-separated angles, e.g. pi/4,0.5")});
        given.push_back({"seed", sub->add_option("--seed", flags.seed, "random seed")});
        if (simulation) {
            given.push_back({"rounds", sub->add_option("--rounds", flags.rounds, "rounds per setting family")});
        } else {
            given.push_back({"starts", sub->add_option("--starts", flags.starts, "extra Nelder-Mead starts")});
        }
    };

    CLI::App *list = app.add_subcommand("list", "list scenarios and their parameters");
    CLI::App *certify_cmd = app.add_subcommand("certify", "classical (LHV) bound by enumeration");
    CLI::App *evaluate_cmd = app.add_subcommand("evaluate", "quantum value at given angles");
    CLI::App *optimize_cmd = app.add_subcommand("optimize", "quantum value optimized over angles");
    CLI::App *simulate_cmd = app.add_subcommand("simulate", "Monte Carlo estimate from simulated rounds");
    std::string list_out;
    list->add_option("--out", list_out, "output file");
    add_run_options(certify_cmd, false);
    add_run_options(evaluate_cmd, false);
    add_run_options(optimize_cmd, false);
    add_run_options(simulate_cmd, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) {
            std::string text = cmd_list().dump(2) + "\n";
            if (list_out.empty()) {
                out << text;
            } else {
                write_atomically(list_out, text);
            }
            return 0;
        }
        RunConfig cfg;
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) {
                throw UsageError("cannot read config file " + config_path);
            }
            json j;
            try {
                j = json::parse(f);
            } catch (const json::exception &e) {
                throw UsageError(std::string("config file is not valid JSON: ") + e.what());
            }
            cfg = run_config_from_json(j);
        }
        if (!angles_text.empty()) {
            flags.angles = parse_angles(angles_text);
        }
        json flag_json = to_json(flags);
        json overrides = json::object();
        for (const auto &[key, option] : given) {
            if (option->count() > 0) {
                overrides[key] = flag_json[key];
            }
        }
        cfg = run_config_from_json(overrides, cfg);

        CommandResult result;
        if (certify_cmd->parsed()) {
            result = cmd_certify(cfg);
        } else if (evaluate_cmd->parsed()) {
            result = cmd_evaluate(cfg);
        } else if (optimize_cmd->parsed()) {
            result = cmd_optimize(cfg);
        } else {
            result = cmd_simulate(cfg);
        }
        std::string json_text = result.report.dump(2) + "\n";
        if (cfg.format == "csv" && !result.csv.empty()) {
            if (cfg.out.empty()) {
                out << result.csv;
            } else {
                write_atomically(cfg.out, result.csv);
                out << json_text;
            }
        } else if (cfg.out.empty()) {
            out << json_text;
        } else {
            write_atomically(cfg.out, json_text);
        }
        return result.exit_code;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace netbell
