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

#include "netbell/sampler.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace netbell {

namespace {

std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int parity_sign(std::uint64_t mask) {
    return (std::popcount(mask) & 1) ? -1 : 1;
}

std::vector<MixtureComponent> components_of(const QuantumState &state) {
    if (const auto *g = std::get_if<StabilizerGroup>(&state)) {
        return {{1.0, *g}};
    }
    if (const auto *m = std::get_if<StabilizerMixture>(&state)) {
        return m->components();
    }
    throw std::invalid_argument("sampling needs a stabilizer state or mixture, not a dense state vector");
}

BlochAxis letter_axis(char letter) {
    switch (letter) {
        case 'X':
            return {1, 0, 0};
        case 'Y':
            return {0, 1, 0};
        case 'Z':
            return {0, 0, 1};
        default:
            throw std::invalid_argument(std::string("joint observables use X, Y or Z, got ") + letter);
    }
}

/// Axes of the qubits a party owns, for one input of one family.
std::vector<BlochAxis> party_axes(const PartyObservable &obs, const std::string &input, const AngleAssignment &angles) {
    if (obs.is_single()) {
        const SingleQubitObservable &s = obs.single();
        double t = angles.theta.at(s.angle_slot);
        double side = (input == "0" ? 1.0 : -1.0) * std::sin(t);
        BlochAxis axis{0, 0, std::cos(t)};
        (s.plane == Plane::ZX ? axis.x : axis.y) = side;
        return {axis};
    }
    std::vector<BlochAxis> axes;
    for (char c : obs.joint().letters.at(input)) {
        axes.push_back(letter_axis(c));
    }
    return axes;
}

/// Everything needed to sample one family: per-source cumulative outcome tables indexed by
/// [component][source][combination of the recipients' input indices].
struct FamilySampler {
    std::vector<std::uint16_t> label_counts;  // per party
    std::vector<std::vector<std::size_t>> recipients;  // per source, distinct parties
    std::vector<std::vector<std::vector<std::vector<double>>>> cdf;
};

FamilySampler build_family_sampler(const InequalityExpr &ineq, std::size_t family, const AngleAssignment &angles,
                                   const std::vector<MixtureComponent> &components,
                                   const std::vector<std::vector<std::string>> &labels) {
    const NetworkTopology &t = ineq.topology;
    const SettingFamily &fam = ineq.families[family];
    FamilySampler out;
    for (const auto &l : labels) {
        if (l.empty() || l.size() > std::numeric_limits<std::uint16_t>::max()) {
            throw std::invalid_argument("party input label count out of range");
        }
        out.label_counts.push_back(static_cast<std::uint16_t>(l.size()));
    }
    // axes[p][i] = axes of party p's qubits for input i
    std::vector<std::vector<std::vector<BlochAxis>>> axes(t.parties.size());
    for (std::size_t p = 0; p < t.parties.size(); p++) {
        for (const std::string &input : labels[p]) {
            axes[p].push_back(party_axes(fam.parties[p], input, angles));
        }
    }
    for (const SourceSpec &s : t.sources) {
        std::vector<std::size_t> r;
        for (std::size_t p : s.recipients) {
            if (std::find(r.begin(), r.end(), p) == r.end()) {
                r.push_back(p);
            }
        }
        out.recipients.push_back(r);
    }
    out.cdf.resize(components.size());
    for (std::size_t c = 0; c < components.size(); c++) {
        for (std::size_t si = 0; si < t.sources.size(); si++) {
            const SourceSpec &s = t.sources[si];
            const auto &r = out.recipients[si];
            std::size_t combos = 1;
            for (std::size_t p : r) {
                combos *= out.label_counts[p];
            }
            std::vector<std::vector<double>> tables;
            for (std::size_t combo = 0; combo < combos; combo++) {
                std::vector<std::size_t> input_of(t.parties.size(), 0);
                std::size_t rest = combo;
                for (std::size_t p : r) {
                    input_of[p] = rest % out.label_counts[p];
                    rest /= out.label_counts[p];
                }
                std::vector<BlochAxis> source_axes;
                for (std::size_t k = 0; k < s.qubits.size(); k++) {
                    std::size_t p = s.recipients[k];
                    const auto &owned = t.parties[p].qubits;
                    std::size_t pos = static_cast<std::size_t>(
                        std::find(owned.begin(), owned.end(), s.qubits[k]) - owned.begin());
                    source_axes.push_back(axes[p][input_of[p]][pos]);
                }
                std::vector<double> prob = outcome_distribution(components[c].group, s.qubits, source_axes);
                for (std::size_t o = 1; o < prob.size(); o++) {
                    prob[o] += prob[o - 1];
                }
                prob.back() = 1;
                tables.push_back(std::move(prob));
            }
            out.cdf[c].push_back(std::move(tables));
        }
    }
    return out;
}

}  // namespace

std::uint64_t CounterRng::draw(std::uint64_t counter) const {
    return splitmix64_mix(seed_ + (counter + 1) * 0x9E3779B97F4A7C15ULL);
}

double CounterRng::uniform(std::uint64_t counter) const {
    return static_cast<double>(draw(counter) >> 11) * 0x1.0p-53;
}

std::uint64_t CounterRng::below(std::uint64_t counter, std::uint64_t n) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(draw(counter)) * n) >> 64);
}

std::vector<double> outcome_distribution(const StabilizerGroup &state, const std::vector<std::size_t> &qubits,
                                         const std::vector<BlochAxis> &axes) {
    std::size_t m = qubits.size();
    if (axes.size() != m || m == 0 || m > 8) {
        throw std::invalid_argument("outcome_distribution needs one axis per qubit and 1..8 qubits");
    }
    std::size_t n = state.n_qubits();
    // E[S] = <prod_{i in S} n_i . sigma_i>, expanded over Pauli letters.
    std::vector<double> correlation(std::size_t{1} << m, 0);
    for (std::size_t subset = 0; subset < correlation.size(); subset++) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < m; i++) {
            if ((subset >> i) & 1) {
                members.push_back(i);
            }
        }
        std::size_t words = 1;
        for (std::size_t k = 0; k < members.size(); k++) {
            words *= 3;
        }
        double total = 0;
        for (std::size_t w = 0; w < words; w++) {
            PauliString p = PauliString::identity(n);
            double weight = 1;
            std::size_t rest = w;
            for (std::size_t i : members) {
                std::size_t letter = rest % 3;
                rest /= 3;
                const BlochAxis &a = axes[i];
                double component = letter == 0 ? a.x : (letter == 1 ? a.y : a.z);
                weight *= component;
                p = p * PauliString::single(n, qubits[i], letter == 0 ? Letter::X : (letter == 1 ? Letter::Y : Letter::Z));
            }
            if (weight != 0) {
                total += weight * state.expectation(p);
            }
        }
        correlation[subset] = total;
    }
    std::vector<double> prob(std::size_t{1} << m, 0);
    double norm = 0;
    for (std::size_t o = 0; o < prob.size(); o++) {
        double p = 0;
        for (std::size_t subset = 0; subset < correlation.size(); subset++) {
            p += parity_sign(o & subset) * correlation[subset];
        }
        prob[o] = std::max(p / static_cast<double>(prob.size()), 0.0);
        norm += prob[o];
    }
    for (double &p : prob) {
        p /= norm;
    }
    return prob;
}

bool is_product_over_sources(const StabilizerGroup &state, const NetworkTopology &topology) {
    std::size_t n = state.n_qubits();
    double log_total = 0;
    for (const SourceSpec &s : topology.sources) {
        std::size_t m = s.qubits.size();
        std::size_t count = 0;
        for (std::size_t w = 0; w < (std::size_t{1} << (2 * m)); w++) {
            PauliString p = PauliString::identity(n);
            for (std::size_t i = 0; i < m; i++) {
                auto letter = static_cast<Letter>((w >> (2 * i)) & 3);
                if (letter != Letter::I) {
                    p = p * PauliString::single(n, s.qubits[i], letter);
                }
            }
            if (state.expectation(p) != 0) {
                count++;
            }
        }
        log_total += std::log2(static_cast<double>(count));
    }
    return std::abs(log_total - static_cast<double>(state.generators().size())) < 1e-9;
}

RoundLog::RoundLog(std::size_t n_parties, std::size_t n_qubits, std::vector<std::vector<std::vector<std::string>>> labels)
    : n_parties_(n_parties), n_qubits_(n_qubits), labels_(std::move(labels)) {}

const std::string &RoundLog::input(std::size_t round, std::size_t party) const {
    return labels_[family(round)][party][input_index(round, party)];
}

int RoundLog::qubit_outcome(std::size_t round, std::size_t qubit) const {
    return ((outcomes_[round] >> qubit) & 1) ? -1 : 1;
}

int RoundLog::party_outcome(std::size_t round, std::size_t party, const NetworkTopology &topology) const {
    int o = 1;
    for (std::size_t q : topology.parties.at(party).qubits) {
        o *= qubit_outcome(round, q);
    }
    return o;
}

RoundRecord RoundLog::record(std::size_t round, const NetworkTopology &topology) const {
    RoundRecord r{round, family(round), {}, {}, {}};
    for (std::size_t p = 0; p < n_parties_; p++) {
        r.inputs.push_back(input(round, p));
        r.party_outcomes.push_back(party_outcome(round, p, topology));
    }
    for (std::size_t q = 0; q < n_qubits_; q++) {
        r.qubit_outcomes.push_back(qubit_outcome(round, q));
    }
    return r;
}

void RoundLog::resize(std::size_t rounds) {
    families_.resize(rounds);
    inputs_.resize(rounds * n_parties_);
    outcomes_.resize(rounds);
}

void RoundLog::set(std::size_t round, std::uint8_t family, const std::uint16_t *inputs, std::uint64_t outcomes) {
    families_[round] = family;
    std::copy(inputs, inputs + n_parties_, inputs_.begin() + static_cast<std::ptrdiff_t>(round * n_parties_));
    outcomes_[round] = outcomes;
}

RoundLog simulate_rounds(const InequalityExpr &ineq, const QuantumState &state, const AngleAssignment &angles,
                         const SimulationOptions &options) {
    if (options.rounds == 0) {
        throw std::invalid_argument("simulation needs at least one round");
    }
    if (n_qubits(state) != ineq.topology.n_qubits) {
        throw std::invalid_argument("state qubit count does not match the topology");
    }
    if (ineq.families.size() > 255) {
        throw std::invalid_argument("too many setting families");
    }
    angles.validate(ineq.angle_slots.size());
    std::vector<MixtureComponent> components = components_of(state);
    for (const MixtureComponent &c : components) {
        if (!is_product_over_sources(c.group, ineq.topology)) {
            throw std::invalid_argument("state is not a product over the network sources");
        }
    }
    std::vector<double> component_cdf;
    double cumulative = 0;
    for (const MixtureComponent &c : components) {
        cumulative += c.weight;
        component_cdf.push_back(cumulative);
    }
    component_cdf.back() = 1;

    std::vector<std::vector<std::vector<std::string>>> labels;
    std::vector<FamilySampler> samplers;
    for (std::size_t f = 0; f < ineq.families.size(); f++) {
        labels.push_back(family_inputs(ineq, f));
        samplers.push_back(build_family_sampler(ineq, f, angles, components, labels.back()));
    }

    const NetworkTopology &t = ineq.topology;
    std::size_t n_parties = t.parties.size();
    std::size_t n_sources = t.sources.size();
    std::uint64_t stride = n_parties + n_sources + 1;
    std::size_t total = options.rounds * ineq.families.size();
    RoundLog log(n_parties, t.n_qubits, labels);
    log.set_seed(options.seed);
    log.resize(total);
    CounterRng rng(options.seed);

    auto run_block = [&](std::size_t begin, std::size_t end) {
        std::vector<std::uint16_t> inputs(n_parties);
        for (std::size_t r = begin; r < end; r++) {
            std::size_t f = r / options.rounds;
            const FamilySampler &fs = samplers[f];
            std::uint64_t base = r * stride;
            for (std::size_t p = 0; p < n_parties; p++) {
                inputs[p] = static_cast<std::uint16_t>(rng.below(base + p, fs.label_counts[p]));
            }
            std::size_t c = 0;
            if (components.size() > 1) {
                double u = rng.uniform(base + n_parties + n_sources);
                c = static_cast<std::size_t>(std::upper_bound(component_cdf.begin(), component_cdf.end(), u) -
                                             component_cdf.begin());
                c = std::min(c, components.size() - 1);
            }
            std::uint64_t outcomes = 0;
            for (std::size_t s = 0; s < n_sources; s++) {
                std::size_t combo = 0;
                std::size_t radix = 1;
                for (std::size_t p : fs.recipients[s]) {
                    combo += inputs[p] * radix;
                    radix *= fs.label_counts[p];
                }
                const std::vector<double> &cdf = fs.cdf[c][s][combo];
                double u = rng.uniform(base + n_parties + s);
                std::size_t o = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
                o = std::min(o, cdf.size() - 1);
                const auto &qubits = t.sources[s].qubits;
                for (std::size_t i = 0; i < qubits.size(); i++) {
                    if ((o >> i) & 1) {
                        outcomes |= std::uint64_t{1} << qubits[i];
                    }
                }
            }
            log.set(r, static_cast<std::uint8_t>(f), inputs.data(), outcomes);
        }
    };

    std::size_t block = std::max<std::size_t>(1, options.block_size);
    std::size_t n_blocks = (total + block - 1) / block;
    std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, n_blocks));
    auto worker = [&](std::size_t first) {
        for (std::size_t b = first; b < n_blocks; b += threads) {
            run_block(b * block, std::min(total, (b + 1) * block));
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < threads; i++) {
        pool.emplace_back(worker, i);
    }
    worker(0);
    for (auto &th : pool) {
        th.join();
    }
    return log;
}

EstimateReport estimate(const RoundLog &log, const InequalityExpr &ineq) {
    if (log.size() == 0) {
        throw std::invalid_argument("cannot estimate from an empty round log");
    }
    const auto &labels = log.labels();
    if (labels.size() != ineq.families.size() || log.n_parties() != ineq.topology.parties.size()) {
        throw std::invalid_argument("round log does not match the inequality");
    }
    std::size_t n_parties = log.n_parties();
    // Cells are full input tuples; each accumulates the product of every party outcome,
    // which is the parity of all qubit outcomes.
    std::vector<std::vector<std::size_t>> radix(labels.size());
    std::vector<std::vector<double>> sums(labels.size());
    std::vector<std::vector<std::size_t>> counts(labels.size());
    for (std::size_t f = 0; f < labels.size(); f++) {
        std::size_t cells = 1;
        for (std::size_t p = 0; p < n_parties; p++) {
            radix[f].push_back(cells);
            cells *= labels[f][p].size();
        }
        sums[f].assign(cells, 0);
        counts[f].assign(cells, 0);
    }
    for (std::size_t r = 0; r < log.size(); r++) {
        std::size_t f = log.family(r);
        std::size_t cell = 0;
        for (std::size_t p = 0; p < n_parties; p++) {
            cell += log.input_index(r, p) * radix[f][p];
        }
        sums[f][cell] += parity_sign(log.outcome_mask(r));
        counts[f][cell]++;
    }

    EstimateReport report;
    report.rounds = log.size();
    report.seed = log.seed();
    // Delta-method weight of each (family, cell) mean in the inequality value.
    std::map<std::pair<std::size_t, std::size_t>, double> weights;
    std::vector<std::vector<std::pair<std::size_t, int>>> term_cells(ineq.terms.size());
    bool empty_cell = false;
    for (std::size_t t = 0; t < ineq.terms.size(); t++) {
        const Term &term = ineq.terms[t];
        std::size_t f = term.family;
        const auto &inputs = term.correlator.inputs;
        std::vector<std::size_t> singles;
        std::size_t fixed = 0;
        for (std::size_t p = 0; p < n_parties; p++) {
            if (std::holds_alternative<SignExponent>(inputs[p])) {
                singles.push_back(p);
            } else {
                const auto &ls = labels[f][p];
                std::size_t idx = static_cast<std::size_t>(
                    std::find(ls.begin(), ls.end(), std::get<JointInput>(inputs[p]).input) - ls.begin());
                fixed += idx * radix[f][p];
            }
        }
        double norm = std::ldexp(1.0, -static_cast<int>(singles.size()));
        CorrelatorEstimate est{term.correlator.label, 0, 0};
        double variance = 0;
        bool missing = false;
        for (std::size_t x = 0; x < (std::size_t{1} << singles.size()); x++) {
            std::size_t cell = fixed;
            int sign = 1;
            for (std::size_t j = 0; j < singles.size(); j++) {
                int xj = static_cast<int>((x >> j) & 1);
                // labels of single parties are "0", "1" in that order
                cell += static_cast<std::size_t>(xj) * radix[f][singles[j]];
                if (xj && std::get<SignExponent>(inputs[singles[j]]).exponent) {
                    sign = -sign;
                }
            }
            term_cells[t].emplace_back(cell, sign);
            std::size_t n = counts[f][cell];
            if (n == 0) {
                missing = true;
                continue;
            }
            double m = sums[f][cell] / static_cast<double>(n);
            est.estimate += norm * sign * m;
            variance += norm * norm * (1 - m * m) / static_cast<double>(n);
        }
        est.standard_error = missing ? std::numeric_limits<double>::infinity() : std::sqrt(variance);
        if (missing) {
            empty_cell = true;
            report.warnings.push_back("correlator " + est.label + " reads an input cell with no rounds");
        }
        report.correlators.push_back(est);
        double x = est.estimate;
        report.value += ineq.scale * term.coefficient * term_power(x, ineq.exponent, ineq.absolute_terms);
        double d;
        if (ineq.exponent.is_one()) {
            d = (ineq.absolute_terms && x < 0) ? -1 : 1;
        } else {
            double r = ineq.exponent.value();
            d = r * std::pow(std::max(std::abs(x), 1e-12), r - 1);
            if (ineq.absolute_terms && x < 0) {
                d = -d;
            }
        }
        for (const auto &[cell, sign] : term_cells[t]) {
            weights[{f, cell}] += ineq.scale * term.coefficient * d * norm * sign;
        }
    }
    double variance = 0;
    for (const auto &[key, w] : weights) {
        std::size_t n = counts[key.first][key.second];
        if (n == 0) {
            continue;
        }
        double m = sums[key.first][key.second] / static_cast<double>(n);
        variance += w * w * (1 - m * m) / static_cast<double>(n);
    }
    report.standard_error = empty_cell ? std::numeric_limits<double>::infinity() : std::sqrt(variance);
    return report;
}

std::vector<MarginalEstimate> marginals(const RoundLog &log, const InequalityExpr &ineq) {
    const auto &labels = log.labels();
    std::vector<MarginalEstimate> out;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::pair<double, std::size_t>> acc;
    for (std::size_t r = 0; r < log.size(); r++) {
        for (std::size_t p = 0; p < log.n_parties(); p++) {
            auto &a = acc[{p, log.family(r), log.input_index(r, p)}];
            a.first += log.party_outcome(r, p, ineq.topology);
            a.second++;
        }
    }
    for (const auto &[key, a] : acc) {
        auto [p, f, i] = key;
        double mean = a.first / static_cast<double>(a.second);
        double se = std::sqrt(std::max(1 - mean * mean, 0.0) / static_cast<double>(a.second));
        out.push_back({p, f, labels[f][p][i], mean, se, a.second});
    }
    return out;
}

void write_csv(std::ostream &out, const RoundLog &log, const InequalityExpr &ineq) {
    bool prefix = ineq.families.size() > 1;
    out << "round,party,input,outcome\n";
    for (std::size_t r = 0; r < log.size(); r++) {
        for (std::size_t p = 0; p < log.n_parties(); p++) {
            out << r << ',' << ineq.topology.parties[p].name << ',';
            if (prefix) {
                out << log.family(r);
            }
            out << log.input(r, p) << ',' << log.party_outcome(r, p, ineq.topology) << '\n';
        }
    }
}

}  // namespace netbell
