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

#include "netbell/scenario.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace netbell {

namespace {

/// A source whose label bit drives one single-qubit party and one qubit of a joint party.
struct LabeledPair {
    std::size_t single_party;
    std::size_t joint_party;
    std::size_t single_qubit;
    std::size_t joint_qubit;
};

struct PairLayout {
    NetworkTopology topology;
    std::vector<LabeledPair> labeled;
    std::vector<std::size_t> inter_qubits;
    int inter_bit = 0;
};

std::string bit_string(std::size_t value, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t i = 0; i < width; i++) {
        if ((value >> (width - 1 - i)) & 1) {
            s[i] = '1';
        }
    }
    return s;
}

int hamming_weight(const std::string &bits) {
    return static_cast<int>(std::count(bits.begin(), bits.end(), '1'));
}

std::string slot_name(bool primed, const std::string &party) {
    return std::string(primed ? "theta'[" : "theta[") + party + "]";
}

/// Bob's input string for label y: one bit per owned qubit, in qubit order.
std::string joint_input(const PairLayout &layout, std::size_t party, const std::string &y) {
    std::string input;
    for (std::size_t q : layout.topology.parties[party].qubits) {
        char bit = '?';
        for (std::size_t i = 0; i < layout.labeled.size(); i++) {
            if (layout.labeled[i].joint_qubit == q) {
                bit = y[i];
            }
        }
        if (std::find(layout.inter_qubits.begin(), layout.inter_qubits.end(), q) != layout.inter_qubits.end()) {
            bit = layout.inter_bit ? '1' : '0';
        }
        if (bit == '?') {
            throw std::logic_error("joint party qubit not covered by the pair layout");
        }
        input += bit;
    }
    return input;
}

std::string letters_for_bits(const std::string &bits, char one_letter) {
    std::string letters;
    for (char b : bits) {
        letters += b == '1' ? one_letter : 'Z';
    }
    return letters;
}

/// Inter-Bob qubits use ZZ or XX in both families, since both stabilize the shared pair.
std::string letters_for_input(const PairLayout &layout, std::size_t party, const std::string &bits, char one_letter) {
    const auto &qubits = layout.topology.parties[party].qubits;
    std::string letters;
    for (std::size_t i = 0; i < bits.size(); i++) {
        bool inter = std::find(layout.inter_qubits.begin(), layout.inter_qubits.end(), qubits[i]) !=
                     layout.inter_qubits.end();
        letters += bits[i] == '1' ? (inter ? 'X' : one_letter) : 'Z';
    }
    return letters;
}

bool is_labeled_single(const PairLayout &layout, std::size_t party) {
    return std::any_of(layout.labeled.begin(), layout.labeled.end(),
                       [&](const LabeledPair &l) { return l.single_party == party; });
}

/// Adds one family of 2^L correlators: first family (X letters, all +1) or second family
/// (Y letters, sign (-1)^W(y)).
void add_pair_family(InequalityExpr &expr, const PairLayout &layout, bool second, const std::string &label_prefix,
                     const std::vector<std::string> &labels) {
    const NetworkTopology &t = layout.topology;
    std::size_t family_index = expr.families.size();
    SettingFamily family{second ? "second" : "first", {}};
    char letter = second ? 'Y' : 'X';
    Plane plane = second ? Plane::ZY : Plane::ZX;
    for (std::size_t p = 0; p < t.parties.size(); p++) {
        if (is_labeled_single(layout, p)) {
            expr.angle_slots.push_back(slot_name(second, t.parties[p].name));
            family.parties.push_back({p, SingleQubitObservable{t.parties[p].qubits.front(), plane,
                                                               expr.angle_slots.size() - 1}});
        } else {
            JointPauliObservable joint{t.parties[p].qubits, {}};
            for (const std::string &y : labels) {
                std::string input = joint_input(layout, p, y);
                joint.letters[input] = letters_for_input(layout, p, input, letter);
            }
            family.parties.push_back({p, joint});
        }
    }
    expr.families.push_back(std::move(family));

    for (const std::string &y : labels) {
        CorrelatorSpec c{label_prefix + y, {}};
        for (std::size_t p = 0; p < t.parties.size(); p++) {
            if (is_labeled_single(layout, p)) {
                for (std::size_t i = 0; i < layout.labeled.size(); i++) {
                    if (layout.labeled[i].single_party == p) {
                        c.inputs.push_back(SignExponent{y[i] - '0'});
                    }
                }
            } else {
                c.inputs.push_back(JointInput{joint_input(layout, p, y)});
            }
        }
        int coefficient = (second && (hamming_weight(y) & 1)) ? -1 : +1;
        expr.terms.push_back({coefficient, std::move(c), family_index});
    }
}

std::vector<std::string> all_labels(std::size_t width) {
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < (std::size_t{1} << width); v++) {
        labels.push_back(bit_string(v, width));
    }
    return labels;
}

InequalityExpr pair_inequality(const PairLayout &layout, FamilySelection selection, std::string name,
                               std::string tag) {
    InequalityExpr expr;
    expr.name = std::move(name);
    expr.tag = std::move(tag);
    expr.topology = layout.topology;
    auto labels = all_labels(layout.labeled.size());
    switch (selection) {
        case FamilySelection::First:
            add_pair_family(expr, layout, false, "", labels);
            break;
        case FamilySelection::Second:
            add_pair_family(expr, layout, true, "", labels);
            break;
        case FamilySelection::Combined:
            add_pair_family(expr, layout, false, "0", labels);
            add_pair_family(expr, layout, true, "1", labels);
            break;
    }
    return expr;
}

PairLayout star_layout(std::size_t k) {
    PairLayout layout{star(k), {}, {}, 0};
    for (std::size_t i = 0; i < k; i++) {
        layout.labeled.push_back({i, k, k + i, i});
    }
    return layout;
}

PairLayout two_source_layout() {
    PairLayout layout{two_source(), {}, {}, 0};
    layout.labeled.push_back({0, 1, 0, 1});
    layout.labeled.push_back({2, 1, 3, 2});
    return layout;
}

/// Families of linear inequalities scale additively: one unit of classical bound and
/// 2^(K/2) of quantum value per family.
void set_linear_bounds(InequalityExpr &expr, std::size_t k) {
    double families = static_cast<double>(expr.families.size());
    expr.classical_bound = families;
    expr.claimed_quantum_max = families * std::pow(2.0, static_cast<double>(k) / 2);
}

std::string k_suffix(std::size_t k) {
    return "(K=" + std::to_string(k) + ")";
}

}  // namespace

std::size_t CorrelatorSpec::single_party_count() const {
    return static_cast<std::size_t>(
        std::count_if(inputs.begin(), inputs.end(), [](const PartyInput &in) { return in.index() == 0; }));
}

double CorrelatorSpec::normalization() const {
    return std::ldexp(1.0, -static_cast<int>(single_party_count()));
}

std::vector<int> CorrelatorSpec::cell() const {
    std::vector<int> cell;
    for (const PartyInput &in : inputs) {
        if (const auto *s = std::get_if<SignExponent>(&in)) {
            cell.push_back(s->exponent);
        }
    }
    return cell;
}

std::vector<std::size_t> InequalityExpr::family_terms(std::size_t family) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < terms.size(); i++) {
        if (terms[i].family == family) {
            out.push_back(i);
        }
    }
    return out;
}

void validate(const InequalityExpr &expr) {
    auto fail = [&](const std::string &why) { throw std::invalid_argument(expr.name + ": " + why); };
    if (auto d = validate(expr.topology)) {
        fail("invalid topology: " + d->message);
    }
    if (expr.exponent.numerator <= 0 || expr.exponent.denominator <= 0) {
        fail("exponent must be positive");
    }
    if (!expr.absolute_terms && !expr.exponent.is_odd_over_odd()) {
        fail("signed terms need an odd/odd exponent");
    }
    if (!std::isfinite(expr.classical_bound) || expr.classical_bound <= 0 ||
        !std::isfinite(expr.claimed_quantum_max) || expr.claimed_quantum_max <= 0) {
        fail("bounds must be finite and positive");
    }
    for (const SettingFamily &family : expr.families) {
        if (family.parties.size() != expr.topology.parties.size()) {
            fail("family " + family.name + " does not cover every party");
        }
        for (std::size_t p = 0; p < family.parties.size(); p++) {
            const PartyObservable &obs = family.parties[p];
            if (obs.party != p) {
                fail("family " + family.name + " lists parties out of order");
            }
            const auto &owned = expr.topology.parties[p].qubits;
            if (obs.is_single()) {
                if (owned.size() != 1 || owned.front() != obs.single().qubit) {
                    fail("single-qubit observable of " + expr.topology.parties[p].name + " is on the wrong qubit");
                }
                if (obs.single().angle_slot >= expr.angle_slots.size()) {
                    fail("angle slot out of range");
                }
            } else {
                if (obs.joint().qubits != owned) {
                    fail("joint observable of " + expr.topology.parties[p].name + " does not match owned qubits");
                }
                for (const auto &[input, letters] : obs.joint().letters) {
                    if (letters.size() != owned.size()) {
                        fail("letter string '" + letters + "' has the wrong length");
                    }
                    for (char c : letters) {
                        letter_from_char(c);
                    }
                }
            }
        }
    }
    std::set<std::string> labels;
    for (const Term &term : expr.terms) {
        if (term.coefficient != 1 && term.coefficient != -1) {
            fail("coefficients must be +1 or -1");
        }
        if (term.family >= expr.families.size()) {
            fail("term refers to a missing family");
        }
        if (!labels.insert(term.correlator.label).second) {
            fail("duplicate correlator label " + term.correlator.label);
        }
        const SettingFamily &family = expr.families[term.family];
        if (term.correlator.inputs.size() != expr.topology.parties.size()) {
            fail("correlator " + term.correlator.label + " does not cover every party");
        }
        for (std::size_t p = 0; p < term.correlator.inputs.size(); p++) {
            const PartyInput &in = term.correlator.inputs[p];
            if (family.parties[p].is_single()) {
                const auto *s = std::get_if<SignExponent>(&in);
                if (s == nullptr || (s->exponent != 0 && s->exponent != 1)) {
                    fail("correlator " + term.correlator.label + " needs a sign exponent for " +
                         expr.topology.parties[p].name);
                }
            } else {
                const auto *j = std::get_if<JointInput>(&in);
                if (j == nullptr || !family.parties[p].joint().letters.count(j->input)) {
                    fail("correlator " + term.correlator.label + " has no joint input for " +
                         expr.topology.parties[p].name);
                }
            }
        }
    }
}

double term_power(double x, const Exponent &r, bool absolute_terms) {
    if (r.is_one()) {
        return absolute_terms ? std::abs(x) : x;
    }
    double magnitude = std::pow(std::abs(x), r.value());
    if (absolute_terms) {
        return magnitude;
    }
    return x < 0 ? -magnitude : magnitude;
}

AngleAssignment AngleAssignment::uniform(std::size_t slots, double value) {
    return {std::vector<double>(slots, value)};
}

void AngleAssignment::validate(std::size_t slots) const {
    if (theta.size() != slots) {
        throw std::invalid_argument("expected " + std::to_string(slots) + " angles, got " +
                                    std::to_string(theta.size()));
    }
    for (double t : theta) {
        if (!(t > 0 && t < kPi / 2)) {
            throw std::invalid_argument("angles must lie strictly inside (0, pi/2), got " + std::to_string(t));
        }
    }
}

double SegmentedOperator::coefficient(const AngleAssignment &angles) const {
    double c = 1;
    for (const SegmentFactor &f : factors) {
        double t = angles.theta.at(f.angle_slot);
        c *= f.sine ? std::sin(t) : std::cos(t);
    }
    return c;
}

SegmentedOperator segmented_operator(const CorrelatorSpec &correlator, const SettingFamily &family,
                                     const NetworkTopology &topology) {
    if (correlator.inputs.size() != family.parties.size() || family.parties.size() != topology.parties.size()) {
        throw std::invalid_argument("correlator " + correlator.label + " has inconsistent party coverage");
    }
    std::size_t n = topology.n_qubits;
    SegmentedOperator op{{}, PauliString::identity(n)};
    std::uint64_t covered = 0;
    auto place = [&](std::size_t qubit, Letter letter) {
        if ((covered >> qubit) & 1) {
            throw std::invalid_argument("qubit " + std::to_string(qubit) + " covered twice in correlator " +
                                        correlator.label);
        }
        covered |= std::uint64_t{1} << qubit;
        op.pauli = op.pauli * PauliString::single(n, qubit, letter);
    };
    for (std::size_t p = 0; p < family.parties.size(); p++) {
        const PartyObservable &obs = family.parties[p];
        if (obs.is_single()) {
            const auto &s = obs.single();
            int e = std::get<SignExponent>(correlator.inputs[p]).exponent;
            op.factors.push_back({s.angle_slot, e == 1});
            place(s.qubit, e == 0 ? Letter::Z : (s.plane == Plane::ZX ? Letter::X : Letter::Y));
        } else {
            const auto &j = obs.joint();
            const std::string &letters = j.letters.at(std::get<JointInput>(correlator.inputs[p]).input);
            for (std::size_t k = 0; k < j.qubits.size(); k++) {
                place(j.qubits[k], letter_from_char(letters[k]));
            }
        }
    }
    if (covered != qubit_mask(n)) {
        throw std::invalid_argument("correlator " + correlator.label + " leaves qubits uncovered");
    }
    return op;
}

SegmentedOperator segmented_operator(const InequalityExpr &expr, std::size_t term) {
    const Term &t = expr.terms.at(term);
    return segmented_operator(t.correlator, expr.families.at(t.family), expr.topology);
}

std::pair<double, PauliString> segmented_operator(const InequalityExpr &expr, std::size_t term,
                                                  const AngleAssignment &angles) {
    SegmentedOperator op = segmented_operator(expr, term);
    return {op.coefficient(angles), op.pauli};
}

std::vector<std::vector<std::string>> family_inputs(const InequalityExpr &expr, std::size_t family) {
    const SettingFamily &fam = expr.families.at(family);
    std::vector<std::set<std::string>> used(fam.parties.size());
    for (std::size_t i : expr.family_terms(family)) {
        const CorrelatorSpec &c = expr.terms[i].correlator;
        for (std::size_t p = 0; p < c.inputs.size(); p++) {
            if (const auto *j = std::get_if<JointInput>(&c.inputs[p])) {
                used[p].insert(j->input);
            } else {
                used[p].insert("0");
                used[p].insert("1");
            }
        }
    }
    std::vector<std::vector<std::string>> out;
    for (auto &s : used) {
        out.emplace_back(s.begin(), s.end());
    }
    return out;
}

std::optional<std::string> check_cell_map(const InequalityExpr &expr) {
    for (std::size_t f = 0; f < expr.families.size(); f++) {
        std::set<std::vector<int>> cells;
        std::size_t singles = 0;
        for (std::size_t i : expr.family_terms(f)) {
            const CorrelatorSpec &c = expr.terms[i].correlator;
            singles = c.single_party_count();
            if (!cells.insert(c.cell()).second) {
                return "family " + expr.families[f].name + ": correlator " + c.label +
                       " reads a cell already used by another correlator";
            }
        }
        if (cells.size() != (std::size_t{1} << singles)) {
            return "family " + expr.families[f].name + ": " + std::to_string(cells.size()) + " correlators cover " +
                   std::to_string(cells.size()) + " of " + std::to_string(std::size_t{1} << singles) + " cells";
        }
    }
    return std::nullopt;
}

std::string family_selection_name(FamilySelection f) {
    switch (f) {
        case FamilySelection::First:
            return "first";
        case FamilySelection::Second:
            return "second";
        case FamilySelection::Combined:
            return "combined";
    }
    return "?";
}

FamilySelection family_selection_from_name(const std::string &name) {
    if (name == "first") {
        return FamilySelection::First;
    }
    if (name == "second") {
        return FamilySelection::Second;
    }
    if (name == "combined") {
        return FamilySelection::Combined;
    }
    throw std::invalid_argument("family must be first, second or combined, got '" + name + "'");
}

InequalityExpr build_chsh() {
    PairLayout layout{single_pair(), {{0, 1, 0, 1}}, {}, 0};
    InequalityExpr expr = pair_inequality(layout, FamilySelection::First, "chsh", "chsh");
    // (A0 + A1) B0 + (A0 - A1) B1 = 2 (I_0 + I_1)
    expr.scale = 2;
    expr.classical_bound = 2;
    expr.claimed_quantum_max = 2 * std::sqrt(2.0);
    validate(expr);
    return expr;
}

BilocalBaseline build_bilocal_baseline() {
    PairLayout layout = two_source_layout();
    BilocalBaseline out;
    for (bool nonlinear : {true, false}) {
        InequalityExpr expr;
        expr.name = nonlinear ? "bilocal-nonlinear" : "bilocal-linear";
        expr.tag = nonlinear ? "bilocal/sqrt" : "bilocal/linear";
        expr.topology = layout.topology;
        add_pair_family(expr, layout, false, "", {"00", "11"});
        expr.absolute_terms = true;
        expr.exponent = nonlinear ? Exponent{1, 2} : Exponent{1, 1};
        expr.bound_model = BoundModel::Bilocal;
        expr.classical_bound = 1;
        expr.claimed_quantum_max = nonlinear ? std::sqrt(2.0) : 1;
        validate(expr);
        (nonlinear ? out.nonlinear : out.linear) = std::move(expr);
    }
    return out;
}

InequalityExpr build_star(std::size_t k, FamilySelection family) {
    InequalityExpr expr = pair_inequality(star_layout(k), family, "star-" + family_selection_name(family) + k_suffix(k),
                                          "star/linear/" + family_selection_name(family));
    set_linear_bounds(expr, k);
    validate(expr);
    return expr;
}

InequalityExpr build_star_first(std::size_t k) {
    return build_star(k, FamilySelection::First);
}

InequalityExpr build_star_second(std::size_t k) {
    return build_star(k, FamilySelection::Second);
}

InequalityExpr build_star_combined(std::size_t k) {
    return build_star(k, FamilySelection::Combined);
}

InequalityExpr build_star_nonlinear(std::size_t k, int u, int v, FamilySelection family) {
    if (u < 0 || v < 0) {
        throw std::invalid_argument("u and v must be nonnegative");
    }
    Exponent r{2 * v + 1, 2 * u + 1};
    double t = r.value() * static_cast<double>(k);
    // t = rK < 2  <=>  (2v+1) K < 2 (2u+1), decided in integers.
    if (static_cast<long long>(r.numerator) * static_cast<long long>(k) >= 2LL * r.denominator) {
        throw std::invalid_argument("nonlinear star inequality needs t = rK < 2, got t = " + std::to_string(t));
    }
    InequalityExpr expr =
        pair_inequality(star_layout(k), family,
                        "star-nonlinear-" + family_selection_name(family) + k_suffix(k) + "(r=" +
                            std::to_string(r.numerator) + "/" + std::to_string(r.denominator) + ")",
                        "star/nonlinear/" + family_selection_name(family));
    expr.exponent = r;
    double families = static_cast<double>(expr.families.size());
    double kd = static_cast<double>(k);
    expr.classical_bound = families * std::pow(2.0, kd - t);
    expr.claimed_quantum_max = families * std::pow(2.0, kd - t / 2);
    validate(expr);
    return expr;
}

TwoSourceLinear build_two_source_linear() {
    PairLayout layout = two_source_layout();
    TwoSourceLinear out{pair_inequality(layout, FamilySelection::First, "two-source-first", "two-source/first"),
                        pair_inequality(layout, FamilySelection::Second, "two-source-second", "two-source/second"),
                        pair_inequality(layout, FamilySelection::Combined, "two-source-combined",
                                        "two-source/combined")};
    for (InequalityExpr *expr : {&out.first, &out.second, &out.combined}) {
        set_linear_bounds(*expr, 2);
        validate(*expr);
    }
    return out;
}

InequalityExpr build_nkm(const NetworkTopology &topology, FamilySelection family, int inter_bit) {
    if (auto d = validate(topology)) {
        throw std::invalid_argument("invalid (N, K, m) topology: " + d->message);
    }
    if (inter_bit != 0 && inter_bit != 1) {
        throw std::invalid_argument("inter_bit must be 0 or 1");
    }
    PairLayout layout{topology, {}, {}, inter_bit};
    for (const SourceSpec &s : topology.sources) {
        if (s.kind != SourceKind::BellPair) {
            throw std::invalid_argument("(N, K, m) networks use Bell-pair sources only");
        }
        bool first_single = !topology.parties[s.recipients[0]].is_joint();
        bool second_single = !topology.parties[s.recipients[1]].is_joint();
        if (first_single && second_single) {
            throw std::invalid_argument("source " + s.id + " connects two single-qubit parties");
        }
        if (first_single || second_single) {
            std::size_t a = first_single ? 0 : 1;
            layout.labeled.push_back({s.recipients[a], s.recipients[1 - a], s.qubits[a], s.qubits[1 - a]});
        } else {
            layout.inter_qubits.push_back(s.qubits[0]);
            layout.inter_qubits.push_back(s.qubits[1]);
        }
    }
    std::sort(layout.labeled.begin(), layout.labeled.end(),
              [](const LabeledPair &a, const LabeledPair &b) { return a.single_party < b.single_party; });
    std::size_t k = layout.labeled.size();
    InequalityExpr expr = pair_inequality(layout, family, "nkm-" + family_selection_name(family) + k_suffix(k),
                                          "nkm/linear/" + family_selection_name(family));
    set_linear_bounds(expr, k);
    validate(expr);
    return expr;
}

NkmInequalities build_nkm(const NetworkTopology &topology, int inter_bit) {
    return {build_nkm(topology, FamilySelection::First, inter_bit),
            build_nkm(topology, FamilySelection::Second, inter_bit)};
}

InequalityExpr build_ghz_a(FamilySelection selection) {
    // Parties: Alice{0}, Bob{1,2,3}, Charlie{4}. Labels y2y3y4 are Bob's input bits; Alice
    // reads sign y2 and Charlie reads y3 + y4 + 1 (mod 2).
    NetworkTopology t = ghz_case_a();
    InequalityExpr expr;
    expr.name = "ghz-a-" + family_selection_name(selection);
    expr.tag = "ghz/a/" + family_selection_name(selection);
    expr.topology = t;

    auto add_family = [&](bool primed, const std::vector<std::string> &labels, const std::string &prefix) {
        std::size_t index = expr.families.size();
        SettingFamily family{primed ? "s'" : "s", {}};
        expr.angle_slots.push_back(slot_name(primed, "Alice"));
        family.parties.push_back({0, SingleQubitObservable{0, Plane::ZX, expr.angle_slots.size() - 1}});
        JointPauliObservable bob{{1, 2, 3}, {}};
        for (const std::string &y : labels) {
            bob.letters[y] = letters_for_bits(y, 'X');
        }
        family.parties.push_back({1, bob});
        expr.angle_slots.push_back(slot_name(primed, "Charlie"));
        family.parties.push_back({2, SingleQubitObservable{4, Plane::ZX, expr.angle_slots.size() - 1}});
        expr.families.push_back(std::move(family));
        for (const std::string &y : labels) {
            int y2 = y[0] - '0';
            int y3 = y[1] - '0';
            int y4 = y[2] - '0';
            CorrelatorSpec c{prefix + y, {SignExponent{y2}, JointInput{y}, SignExponent{(y3 + y4 + 1) & 1}}};
            expr.terms.push_back({+1, std::move(c), index});
        }
    };
    const std::vector<std::string> s = {"001", "000", "100", "110"};
    const std::vector<std::string> s_primed = {"010", "000", "100", "101"};
    switch (selection) {
        case FamilySelection::First:
            add_family(false, s, "");
            break;
        case FamilySelection::Second:
            add_family(true, s_primed, "");
            break;
        case FamilySelection::Combined:
            add_family(false, s, "0");
            add_family(true, s_primed, "1");
            break;
    }
    double families = static_cast<double>(expr.families.size());
    expr.classical_bound = families;
    expr.claimed_quantum_max = 2 * families;
    validate(expr);
    return expr;
}

InequalityExpr build_ghz_b() {
    // Parties: Alice{0}, Bob{1,2}, Charlie1{3}, Charlie2{4}; Bob's input is y2y3.
    NetworkTopology t = ghz_case_b();
    InequalityExpr expr;
    expr.name = "ghz-b";
    expr.tag = "ghz/b";
    expr.topology = t;
    SettingFamily family{"first", {}};
    expr.angle_slots = {slot_name(false, "Alice"), slot_name(false, "Charlie1"), slot_name(false, "Charlie2")};
    family.parties.push_back({0, SingleQubitObservable{0, Plane::ZX, 0}});
    JointPauliObservable bob{{1, 2}, {}};
    for (const std::string &y : all_labels(2)) {
        bob.letters[y] = letters_for_bits(y, 'X');
    }
    family.parties.push_back({1, bob});
    family.parties.push_back({2, SingleQubitObservable{3, Plane::ZX, 1}});
    family.parties.push_back({3, SingleQubitObservable{4, Plane::ZX, 2}});
    expr.families.push_back(std::move(family));

    for (bool primed : {false, true}) {
        for (const std::string &y : all_labels(2)) {
            int y2 = y[0] - '0';
            int y3 = y[1] - '0';
            int charlie1 = primed ? 1 - y2 : y2;
            int charlie2 = primed ? (y2 ^ y3) : 1 - (y2 ^ y3);
            int sign_bit = primed ? ((1 - y2) & y3) : (y2 & y3);
            CorrelatorSpec c{y + (primed ? "'" : ""),
                             {SignExponent{y2}, JointInput{y}, SignExponent{charlie1}, SignExponent{charlie2}}};
            expr.terms.push_back({sign_bit ? -1 : +1, std::move(c), 0});
        }
    }
    expr.classical_bound = 1;
    expr.claimed_quantum_max = 2 * std::sqrt(2.0);
    validate(expr);
    return expr;
}

}  // namespace netbell
