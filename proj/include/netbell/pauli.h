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

#ifndef NETBELL_PAULI_H
#define NETBELL_PAULI_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace netbell {

inline constexpr std::size_t kMaxQubits = 64;

/// Single-qubit Pauli letter. Bit 0 is the X component, bit 1 the Z component.
enum class Letter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(Letter l);
Letter letter_from_char(char c);

/// A phased Pauli word `phase * P_0 (x) P_1 (x) ...` over up to 64 qubits.
///
/// Stored in binary symplectic form: bit q of `x_mask` / `z_mask` says whether X / Z acts
/// on qubit q. A qubit with both bits set is the letter Y, and the project-wide convention
/// is Y = iXZ. The phase is the coefficient in front of the letter form, so "+Y0" has
/// phase +1 even though it equals i*X0*Z0. Phase is kept as a power of i (0..3).
class PauliString {
   public:
    PauliString() = default;

    static PauliString identity(std::size_t n_qubits);
    static PauliString from_masks(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
                                  std::uint8_t log_i_phase = 0);
    /// Dense letter form, one character per qubit with qubit 0 first: "ZZXI", "-YY", "+iXZ".
    static PauliString from_letters(std::string_view text);
    /// Sparse token form: "+X0 Z3 Y5". Sign is optional (+, -, +i, -i, i); "I" or empty is identity.
    static PauliString parse(std::string_view text, std::size_t n_qubits);
    static PauliString single(std::size_t n_qubits, std::size_t qubit, Letter letter);

    std::size_t n_qubits() const { return n_; }
    std::uint64_t x_mask() const { return x_; }
    std::uint64_t z_mask() const { return z_; }
    std::uint8_t log_i_phase() const { return phase_; }
    std::complex<double> phase() const;

    Letter letter(std::size_t qubit) const;
    std::size_t weight() const;
    bool is_hermitian() const { return (phase_ & 1) == 0; }
    bool has_identity_masks() const { return x_ == 0 && z_ == 0; }
    /// +1 or -1. Throws for non-Hermitian words.
    int sign() const;

    PauliString negated() const;
    PauliString with_phase(std::uint8_t log_i_phase) const;

    /// Sparse rendering, e.g. "+X0 Z3 Y5", "-I", "+iZ1".
    std::string str() const;
    /// Dense rendering, e.g. "+ZZXI".
    std::string letters() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;

   private:
    std::uint32_t n_ = 0;
    std::uint8_t phase_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
};

/// Exact matrix product p*q.
PauliString multiply(const PauliString &p, const PauliString &q);
PauliString operator*(const PauliString &p, const PauliString &q);

/// True iff the symplectic inner product of p and q vanishes.
bool commutes(const PauliString &p, const PauliString &q);

/// Places qubit k of p onto qubit qubit_map[k] of a `total`-qubit register.
PauliString embed(const PauliString &p, std::span<const std::size_t> qubit_map, std::size_t total);

std::uint64_t qubit_mask(std::size_t n_qubits);

}  // namespace netbell

#endif
