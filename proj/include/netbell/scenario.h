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

#ifndef NETBELL_SCENARIO_H
#define NETBELL_SCENARIO_H

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "netbell/network.h"
#include "netbell/pauli.h"

namespace netbell {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kQuarterPi = kPi / 4;

/// Measurement plane of a single-qubit party: input x measures cos(t) Z + (-1)^x sin(t) P,
/// with P = X for ZX and P = Y for ZY.
enum class Plane { ZX, ZY };

struct SingleQubitObservable {
    std::size_t qubit;
    Plane plane;
    std::size_t angle_slot;
};

/// Joint measurement of commuting single-qubit Paulis; the outcome is their product.
struct JointPauliObservable {
    std::vector<std::size_t> qubits;
    /// Input string -> one letter per entry of `qubits` ("ZX", "YY", ...).
    std::map<std::string, std::string> letters;
};

struct PartyObservable {
    std::size_t party;
    std::variant<SingleQubitObservable, JointPauliObservable> kind;

    bool is_single() const { return std::holds_alternative<SingleQubitObservable>(kind); }
    const SingleQubitObservable &single() const { return std::get<SingleQubitObservable>(kind); }
    const JointPauliObservable &joint() const { return std::get<JointPauliObservable>(kind); }
};

/// One complete assignment of observables to every party. Combined inequalities carry two
/// families; each party's inputs are tagged by family so labels never collide.
struct SettingFamily {
    std::string name;
    std::vector<PartyObservable> parties;  // indexed by topology party
};

/// Factor (a_0 + (-1)^e a_1) / 2 of a single-qubit party.
struct SignExponent {
    int exponent;
};

/// Output b_input of a joint party.
struct JointInput {
    std::string input;
};

using PartyInput = std::variant<SignExponent, JointInput>;

struct CorrelatorSpec {
    std::string label;
    std::vector<PartyInput> inputs;  // indexed by topology party

    std::size_t single_party_count() const;
    /// 2^-(number of single-qubit parties).
    double normalization() const;
    /// Sign exponents of the single-qubit parties, in party order: the probability cell
    /// this correlator reads out.
    std::vector<int> cell() const;
};

struct Term {
    int coefficient;
    CorrelatorSpec correlator;
    std::size_t family;
};

/// Rational exponent r = numerator / denominator.
struct Exponent {
    int numerator = 1;
    int denominator = 1;

    double value() const { return static_cast<double>(numerator) / denominator; }
    bool is_one() const { return numerator == denominator; }
    bool is_odd_over_odd() const { return (numerator % 2 != 0) && (denominator % 2 != 0); }
};

/// Classical model the stated bound refers to.
enum class BoundModel { GenuineLocal, Bilocal };

/// value = scale * sum_k coefficient_k * pow(<I_k>, r), where pow is sign-preserving for
/// odd/odd r, or |<I_k>|^r when `absolute_terms` is set.
struct InequalityExpr {
    std::string name;
    std::string tag;
    NetworkTopology topology;
    std::vector<SettingFamily> families;
    std::vector<std::string> angle_slots;
    std::vector<Term> terms;
    Exponent exponent;
    bool absolute_terms = false;
    double scale = 1;
    double classical_bound = 0;
    double claimed_quantum_max = 0;
    BoundModel bound_model = BoundModel::GenuineLocal;

    std::vector<std::size_t> family_terms(std::size_t family) const;
};

/// Throws std::invalid_argument when an expression breaks its structural invariants.
void validate(const InequalityExpr &expr);

/// The signed power used in every inequality value: sign(x)|x|^r, or |x|^r for absolute terms.
double term_power(double x, const Exponent &r, bool absolute_terms);

/// Measurement angles, one per angle slot, each strictly inside (0, pi/2).
struct AngleAssignment {
    std::vector<double> theta;

    static AngleAssignment uniform(std::size_t slots, double value = kQuarterPi);
    void validate(std::size_t slots) const;
};

struct SegmentFactor {
    std::size_t angle_slot;
    bool sine;  // sin(theta) when the party's sign exponent is 1, else cos(theta)
};

/// A correlator collapsed under the cos/sin observable family: coefficient(angles) * pauli.
struct SegmentedOperator {
    std::vector<SegmentFactor> factors;
    PauliString pauli;

    double coefficient(const AngleAssignment &angles) const;
};

SegmentedOperator segmented_operator(const CorrelatorSpec &correlator, const SettingFamily &family,
                                     const NetworkTopology &topology);
SegmentedOperator segmented_operator(const InequalityExpr &expr, std::size_t term);
std::pair<double, PauliString> segmented_operator(const InequalityExpr &expr, std::size_t term,
                                                  const AngleAssignment &angles);

/// Inputs each party uses within one family: "0"/"1" for single-qubit parties, the
/// distinct input strings for joint parties. Empty for parties absent from the family.
std::vector<std::vector<std::string>> family_inputs(const InequalityExpr &expr, std::size_t family);

/// Checks that within every family distinct correlators read distinct cells and that the
/// cells exhaust {0,1}^(single-qubit parties). Returns a diagnostic on failure.
std::optional<std::string> check_cell_map(const InequalityExpr &expr);

enum class FamilySelection { First, Second, Combined };

std::string family_selection_name(FamilySelection f);
FamilySelection family_selection_from_name(const std::string &name);

InequalityExpr build_chsh();

struct BilocalBaseline {
    InequalityExpr nonlinear;  // |I|^(1/2) + |J|^(1/2) <= 1 under bilocality
    InequalityExpr linear;     // |I| + |J| <= 1
};
BilocalBaseline build_bilocal_baseline();

InequalityExpr build_star(std::size_t k, FamilySelection family);
InequalityExpr build_star_first(std::size_t k);
InequalityExpr build_star_second(std::size_t k);
InequalityExpr build_star_combined(std::size_t k);

/// Exponent r = (2v+1)/(2u+1); requires t = rK < 2.
InequalityExpr build_star_nonlinear(std::size_t k, int u, int v, FamilySelection family = FamilySelection::First);

struct TwoSourceLinear {
    InequalityExpr first;
    InequalityExpr second;
    InequalityExpr combined;
};
TwoSourceLinear build_two_source_linear();

/// Linear inequalities on an (N, K, m) topology. Bits of inter-Bob sources are absent from
/// the label; both recipients use `inter_bit` (0: ZZ, 1: XX) in either family.
InequalityExpr build_nkm(const NetworkTopology &topology, FamilySelection family, int inter_bit = 0);

struct NkmInequalities {
    InequalityExpr first;
    InequalityExpr second;
};
NkmInequalities build_nkm(const NetworkTopology &topology, int inter_bit = 0);

InequalityExpr build_ghz_a(FamilySelection family = FamilySelection::Combined);
InequalityExpr build_ghz_b();

}  // namespace netbell

#endif
