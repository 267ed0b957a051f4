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

#include "netbell/states.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace netbell {

namespace {

bool row_bit(std::uint64_t x, std::uint64_t z, int column) {
    return column < 64 ? ((x >> column) & 1) : ((z >> (column - 64)) & 1);
}

void require_distinct(std::initializer_list<std::size_t> qubits, std::size_t n) {
    std::uint64_t seen = 0;
    for (std::size_t q : qubits) {
        if (q >= n) {
            throw std::out_of_range("qubit index " + std::to_string(q) + " out of range for " + std::to_string(n) +
                                    " qubits");
        }
        std::uint64_t bit = std::uint64_t{1} << q;
        if (seen & bit) {
            throw std::invalid_argument("qubit index clash at " + std::to_string(q));
        }
        seen |= bit;
    }
}

}  // namespace

StabilizerGroup::StabilizerGroup(std::size_t n_qubits, std::vector<PauliString> generators)
    : n_(n_qubits), generators_(std::move(generators)) {
    if (n_ > kMaxQubits) {
        throw std::invalid_argument("StabilizerGroup supports at most 64 qubits");
    }
    if (generators_.size() > n_) {
        throw std::invalid_argument("more generators than qubits");
    }
    for (std::size_t a = 0; a < generators_.size(); a++) {
        const PauliString &g = generators_[a];
        if (g.n_qubits() != n_) {
            throw std::invalid_argument("generator " + g.str() + " has wrong width");
        }
        if (!g.is_hermitian()) {
            throw std::invalid_argument("generator " + g.str() + " is not Hermitian");
        }
        for (std::size_t b = 0; b < a; b++) {
            if (!commutes(g, generators_[b])) {
                throw std::invalid_argument("generators " + generators_[b].str() + " and " + g.str() +
                                            " anticommute");
            }
        }
        echelon_.push_back({g.x_mask(), g.z_mask(), std::uint64_t{1} << a});
    }

    std::size_t rank = 0;
    for (int column = 0; column < 128 && rank < echelon_.size(); column++) {
        std::size_t pivot = rank;
        while (pivot < echelon_.size() && !row_bit(echelon_[pivot].x, echelon_[pivot].z, column)) {
            pivot++;
        }
        if (pivot == echelon_.size()) {
            continue;
        }
        std::swap(echelon_[rank], echelon_[pivot]);
        for (std::size_t r = 0; r < echelon_.size(); r++) {
            if (r != rank && row_bit(echelon_[r].x, echelon_[r].z, column)) {
                echelon_[r].x ^= echelon_[rank].x;
                echelon_[r].z ^= echelon_[rank].z;
                echelon_[r].combination ^= echelon_[rank].combination;
            }
        }
        pivots_.push_back(column);
        rank++;
    }
    if (rank != generators_.size()) {
        throw std::invalid_argument("stabilizer generators are not independent over GF(2)");
    }
}

int StabilizerGroup::expectation(const PauliString &p) const {
    if (p.n_qubits() != n_) {
        throw std::invalid_argument("expectation: Pauli width " + std::to_string(p.n_qubits()) +
                                    " does not match state width " + std::to_string(n_));
    }
    if (!p.is_hermitian()) {
        throw std::invalid_argument("expectation of non-Hermitian Pauli word " + p.str());
    }
    std::uint64_t x = p.x_mask();
    std::uint64_t z = p.z_mask();
    std::uint64_t combination = 0;
    for (std::size_t r = 0; r < pivots_.size(); r++) {
        if (row_bit(x, z, pivots_[r])) {
            x ^= echelon_[r].x;
            z ^= echelon_[r].z;
            combination ^= echelon_[r].combination;
        }
    }
    if (x != 0 || z != 0) {
        return 0;
    }
    PauliString product = PauliString::identity(n_);
    for (std::size_t a = 0; a < generators_.size(); a++) {
        if ((combination >> a) & 1) {
            product = product * generators_[a];
        }
    }
    return product.log_i_phase() == p.log_i_phase() ? +1 : -1;
}

StabilizerGroup StabilizerGroup::combined_with(const StabilizerGroup &other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("combined_with: register width mismatch");
    }
    std::vector<PauliString> all = generators_;
    all.insert(all.end(), other.generators_.begin(), other.generators_.end());
    return StabilizerGroup(n_, std::move(all));
}

StabilizerMixture::StabilizerMixture(std::vector<MixtureComponent> components) : components_(std::move(components)) {
    if (components_.empty()) {
        throw std::invalid_argument("mixture needs at least one component");
    }
    double total = 0;
    for (const auto &c : components_) {
        if (!(c.weight >= 0)) {
            throw std::invalid_argument("mixture weights must be nonnegative");
        }
        if (c.group.n_qubits() != components_.front().group.n_qubits()) {
            throw std::invalid_argument("mixture components act on different register widths");
        }
        total += c.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("mixture weights sum to " + std::to_string(total) + ", not 1");
    }
}

double StabilizerMixture::expectation(const PauliString &p) const {
    double value = 0;
    for (const auto &c : components_) {
        value += c.weight * c.group.expectation(p);
    }
    return value;
}

DenseState::DenseState(std::size_t n_qubits, std::vector<std::complex<double>> amplitudes)
    : n_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_ > 26) {
        throw std::invalid_argument("DenseState is limited to 26 qubits");
    }
    if (amplitudes_.size() != (std::size_t{1} << n_)) {
        throw std::invalid_argument("DenseState needs 2^n amplitudes");
    }
    double norm = 0;
    for (const auto &a : amplitudes_) {
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > 1e-12) {
        throw std::invalid_argument("DenseState is not normalized (squared norm " + std::to_string(norm) + ")");
    }
}

std::vector<std::complex<double>> apply_pauli(const PauliString &p, const std::vector<std::complex<double>> &psi) {
    std::vector<std::complex<double>> out(psi.size());
    // Letters equal i^(xz) X^x Z^z; Z^z contributes (-1)^(z.b) before X^x moves b to b^x.
    std::uint8_t log_i = (p.log_i_phase() + std::popcount(p.x_mask() & p.z_mask())) & 3;
    static const std::complex<double> kPowers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<double> scale = kPowers[log_i];
    for (std::uint64_t b = 0; b < psi.size(); b++) {
        std::complex<double> v = scale * psi[b];
        if (std::popcount(p.z_mask() & b) & 1) {
            v = -v;
        }
        out[b ^ p.x_mask()] = v;
    }
    return out;
}

double DenseState::expectation(const PauliString &p) const {
    if (p.n_qubits() != n_) {
        throw std::invalid_argument("expectation: Pauli width does not match dense state width");
    }
    if (!p.is_hermitian()) {
        throw std::invalid_argument("expectation of non-Hermitian Pauli word " + p.str());
    }
    auto image = apply_pauli(p, amplitudes_);
    std::complex<double> total = 0;
    for (std::size_t b = 0; b < image.size(); b++) {
        total += std::conj(amplitudes_[b]) * image[b];
    }
    return total.real();
}

std::size_t n_qubits(const QuantumState &state) {
    return std::visit([](const auto &s) { return s.n_qubits(); }, state);
}

double expectation(const QuantumState &state, const PauliString &p) {
    return std::visit([&](const auto &s) { return static_cast<double>(s.expectation(p)); }, state);
}

std::string bell_kind_name(BellKind kind) {
    switch (kind) {
        case BellKind::PhiPlus:
            return "phi+";
        case BellKind::PhiMinus:
            return "phi-";
        case BellKind::PsiPlus:
            return "psi+";
        case BellKind::PsiMinus:
            return "psi-";
    }
    return "?";
}

BellKind bell_kind_from_name(const std::string &name) {
    for (BellKind k : {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus}) {
        if (bell_kind_name(k) == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown Bell state '" + name + "' (expected phi+, phi-, psi+, psi-)");
}

StabilizerGroup bell_state(BellKind kind, std::size_t i, std::size_t j, std::size_t n) {
    require_distinct({i, j}, n);
    std::uint64_t pair = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
    bool zz_negative = kind == BellKind::PsiPlus || kind == BellKind::PsiMinus;
    bool xx_negative = kind == BellKind::PhiMinus || kind == BellKind::PsiMinus;
    return StabilizerGroup(n, {PauliString::from_masks(n, 0, pair, zz_negative ? 2 : 0),
                               PauliString::from_masks(n, pair, 0, xx_negative ? 2 : 0)});
}

StabilizerGroup bell_pair(std::size_t i, std::size_t j, std::size_t n) {
    return bell_state(BellKind::PhiPlus, i, j, n);
}

StabilizerGroup ghz3(std::size_t i, std::size_t j, std::size_t k, std::size_t n) {
    require_distinct({i, j, k}, n);
    std::uint64_t bi = std::uint64_t{1} << i;
    std::uint64_t bj = std::uint64_t{1} << j;
    std::uint64_t bk = std::uint64_t{1} << k;
    return StabilizerGroup(n, {PauliString::from_masks(n, bi, bj | bk), PauliString::from_masks(n, bj, bi | bk),
                               PauliString::from_masks(n, bk, bi | bj)});
}

StabilizerMixture smolin(std::size_t i, std::size_t j, std::size_t k, std::size_t l, std::size_t n) {
    require_distinct({i, j, k, l}, n);
    std::vector<MixtureComponent> components;
    for (BellKind kind : {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus}) {
        components.push_back({0.25, bell_state(kind, i, j, n).combined_with(bell_state(kind, k, l, n))});
    }
    return StabilizerMixture(std::move(components));
}

StabilizerMixture mix(double q, const StabilizerGroup &a, const StabilizerGroup &b) {
    if (!(q >= 0 && q <= 1)) {
        throw std::invalid_argument("mixing parameter must lie in [0, 1]");
    }
    return StabilizerMixture({{q, a}, {1 - q, b}});
}

StabilizerGroup maximally_mixed(std::size_t n) {
    return StabilizerGroup(n, {});
}

DenseState to_dense(const StabilizerGroup &group) {
    std::size_t n = group.n_qubits();
    if (n > 14) {
        throw std::invalid_argument("to_dense is limited to 14 qubits");
    }
    if (!group.is_pure()) {
        throw std::invalid_argument("to_dense needs a pure stabilizer group (n generators)");
    }
    std::size_t dim = std::size_t{1} << n;

    // Reference vectors: |0...0>, then fixed pseudo-random vectors.
    std::uint64_t lcg = 0x9E3779B97F4A7C15ull;
    auto next_unit = [&lcg]() {
        lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<double>(lcg >> 11) * 0x1.0p-53 - 0.5;
    };
    for (int attempt = 0; attempt < 4; attempt++) {
        std::vector<std::complex<double>> v(dim);
        if (attempt == 0) {
            v[0] = 1;
        } else {
            for (auto &a : v) {
                double re = next_unit();
                a = {re, next_unit()};
            }
        }
        for (const PauliString &g : group.generators()) {
            auto gv = apply_pauli(g, v);
            for (std::size_t b = 0; b < dim; b++) {
                v[b] = 0.5 * (v[b] + gv[b]);
            }
        }
        double norm = 0;
        for (const auto &a : v) {
            norm += std::norm(a);
        }
        if (norm < 1e-12) {
            continue;
        }
        // Fix the global phase so the largest amplitude is real and positive.
        std::size_t best = 0;
        for (std::size_t b = 1; b < dim; b++) {
            if (std::abs(v[b]) > std::abs(v[best]) + 1e-12) {
                best = b;
            }
        }
        std::complex<double> rotate = std::conj(v[best]) / std::abs(v[best]) / std::sqrt(norm);
        for (auto &a : v) {
            a *= rotate;
        }
        return DenseState(n, std::move(v));
    }
    throw std::runtime_error("projection onto stabilizer generators vanished; generators are inconsistent");
}

}  // namespace netbell
