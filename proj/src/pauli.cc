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

#include "netbell/pauli.h"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace netbell {

namespace {

void require_width(std::size_t n_qubits) {
    if (n_qubits > kMaxQubits) {
        throw std::invalid_argument("PauliString supports at most 64 qubits, got " + std::to_string(n_qubits));
    }
}

void require_same_width(const PauliString &p, const PauliString &q) {
    if (p.n_qubits() != q.n_qubits()) {
        throw std::invalid_argument("Pauli dimension mismatch: " + std::to_string(p.n_qubits()) + " vs " +
                                    std::to_string(q.n_qubits()));
    }
}

int popcount(std::uint64_t v) {
    return std::popcount(v);
}

/// Consumes an optional sign prefix and returns it as a power of i.
std::uint8_t take_sign(std::string_view &text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    std::uint8_t log_i = 0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        if (text.front() == '-') {
            log_i = 2;
        }
        text.remove_prefix(1);
    }
    if (!text.empty() && text.front() == 'i') {
        log_i = (log_i + 1) & 3;
        text.remove_prefix(1);
    }
    return log_i;
}

const char *sign_text(std::uint8_t log_i) {
    static const char *kSigns[] = {"+", "+i", "-", "-i"};
    return kSigns[log_i & 3];
}

}  // namespace

char letter_char(Letter l) {
    return "IXZY"[static_cast<int>(l)];
}

Letter letter_from_char(char c) {
    switch (c) {
        case 'I':
        case '_':
            return Letter::I;
        case 'X':
            return Letter::X;
        case 'Y':
            return Letter::Y;
        case 'Z':
            return Letter::Z;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
    }
}

std::uint64_t qubit_mask(std::size_t n_qubits) {
    return n_qubits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_qubits) - 1);
}

PauliString PauliString::identity(std::size_t n_qubits) {
    return from_masks(n_qubits, 0, 0, 0);
}

PauliString PauliString::from_masks(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
                                    std::uint8_t log_i_phase) {
    require_width(n_qubits);
    std::uint64_t valid = qubit_mask(n_qubits);
    if ((x_mask & ~valid) || (z_mask & ~valid)) {
        throw std::invalid_argument("Pauli mask has bits beyond qubit count " + std::to_string(n_qubits));
    }
    PauliString p;
    p.n_ = static_cast<std::uint32_t>(n_qubits);
    p.x_ = x_mask;
    p.z_ = z_mask;
    p.phase_ = log_i_phase & 3;
    return p;
}

PauliString PauliString::from_letters(std::string_view text) {
    std::uint8_t log_i = take_sign(text);
    require_width(text.size());
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t q = 0; q < text.size(); q++) {
        auto bits = static_cast<std::uint8_t>(letter_from_char(text[q]));
        if (bits & 1) {
            x |= std::uint64_t{1} << q;
        }
        if (bits & 2) {
            z |= std::uint64_t{1} << q;
        }
    }
    return from_masks(text.size(), x, z, log_i);
}

PauliString PauliString::parse(std::string_view text, std::size_t n_qubits) {
    require_width(n_qubits);
    std::uint8_t log_i = take_sign(text);
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    std::uint64_t seen = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*') {
            pos++;
            continue;
        }
        Letter letter = letter_from_char(text[pos++]);
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            pos++;
        }
        if (start == pos) {
            if (letter == Letter::I) {
                continue;
            }
            throw std::invalid_argument("Pauli token without qubit index in '" + std::string(text) + "'");
        }
        std::size_t qubit = std::stoul(std::string(text.substr(start, pos - start)));
        if (qubit >= n_qubits) {
            throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range for " +
                                    std::to_string(n_qubits) + " qubits");
        }
        std::uint64_t bit = std::uint64_t{1} << qubit;
        if (seen & bit) {
            throw std::invalid_argument("qubit " + std::to_string(qubit) + " appears twice in Pauli word");
        }
        seen |= bit;
        auto bits = static_cast<std::uint8_t>(letter);
        if (bits & 1) {
            x |= bit;
        }
        if (bits & 2) {
            z |= bit;
        }
    }
    return from_masks(n_qubits, x, z, log_i);
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit, Letter letter) {
    if (qubit >= n_qubits) {
        throw std::out_of_range("qubit index out of range");
    }
    auto bits = static_cast<std::uint8_t>(letter);
    std::uint64_t bit = std::uint64_t{1} << qubit;
    return from_masks(n_qubits, (bits & 1) ? bit : 0, (bits & 2) ? bit : 0, 0);
}

std::complex<double> PauliString::phase() const {
    switch (phase_) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
    }
}

Letter PauliString::letter(std::size_t qubit) const {
    if (qubit >= n_) {
        throw std::out_of_range("qubit index out of range");
    }
    unsigned bits = ((x_ >> qubit) & 1) | (((z_ >> qubit) & 1) << 1);
    return static_cast<Letter>(bits);
}

std::size_t PauliString::weight() const {
    return static_cast<std::size_t>(popcount(x_ | z_));
}

int PauliString::sign() const {
    if (!is_hermitian()) {
        throw std::invalid_argument("sign() of non-Hermitian Pauli word " + str());
    }
    return phase_ == 0 ? +1 : -1;
}

PauliString PauliString::negated() const {
    return with_phase(phase_ + 2);
}

PauliString PauliString::with_phase(std::uint8_t log_i_phase) const {
    PauliString p = *this;
    p.phase_ = log_i_phase & 3;
    return p;
}

std::string PauliString::str() const {
    std::string out = sign_text(phase_);
    bool first = true;
    for (std::size_t q = 0; q < n_; q++) {
        Letter l = letter(q);
        if (l == Letter::I) {
            continue;
        }
        if (!first) {
            out += ' ';
        }
        first = false;
        out += letter_char(l);
        out += std::to_string(q);
    }
    if (first) {
        out += 'I';
    }
    return out;
}

std::string PauliString::letters() const {
    std::string out = sign_text(phase_);
    for (std::size_t q = 0; q < n_; q++) {
        out += letter_char(letter(q));
    }
    return out;
}

PauliString multiply(const PauliString &p, const PauliString &q) {
    require_same_width(p, q);
    // Each letter is i^(xz) X^x Z^z. Moving Z^z1 past X^x2 costs (-1)^(z1 x2), and the
    // resulting X^x3 Z^z3 is i^(-x3 z3) times a letter.
    std::uint64_t x3 = p.x_mask() ^ q.x_mask();
    std::uint64_t z3 = p.z_mask() ^ q.z_mask();
    int log_i = p.log_i_phase() + q.log_i_phase() + popcount(p.x_mask() & p.z_mask()) +
                popcount(q.x_mask() & q.z_mask()) + 2 * popcount(p.z_mask() & q.x_mask()) - popcount(x3 & z3);
    return PauliString::from_masks(p.n_qubits(), x3, z3, static_cast<std::uint8_t>(((log_i % 4) + 4) % 4));
}

PauliString operator*(const PauliString &p, const PauliString &q) {
    return multiply(p, q);
}

bool commutes(const PauliString &p, const PauliString &q) {
    require_same_width(p, q);
    int anti = popcount(p.x_mask() & q.z_mask()) + popcount(p.z_mask() & q.x_mask());
    return (anti & 1) == 0;
}

PauliString embed(const PauliString &p, std::span<const std::size_t> qubit_map, std::size_t total) {
    require_width(total);
    if (qubit_map.size() != p.n_qubits()) {
        throw std::invalid_argument("qubit map length " + std::to_string(qubit_map.size()) +
                                    " does not match Pauli width " + std::to_string(p.n_qubits()));
    }
    std::uint64_t used = 0;
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t k = 0; k < qubit_map.size(); k++) {
        std::size_t target = qubit_map[k];
        if (target >= total) {
            throw std::out_of_range("embed target " + std::to_string(target) + " out of range for " +
                                    std::to_string(total) + " qubits");
        }
        std::uint64_t bit = std::uint64_t{1} << target;
        if (used & bit) {
            throw std::invalid_argument("embed map is not injective at target " + std::to_string(target));
        }
        used |= bit;
        if ((p.x_mask() >> k) & 1) {
            x |= bit;
        }
        if ((p.z_mask() >> k) & 1) {
            z |= bit;
        }
    }
    return PauliString::from_masks(total, x, z, p.log_i_phase());
}

}  // namespace netbell
