// Copyright 2026 The smallcodes Authors
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

#include "smallcodes/pauli.h"

namespace smallcodes {

PauliOperator::PauliOperator(int n_qubits, QubitMask x_mask, QubitMask z_mask)
    : n_qubits_(static_cast<std::uint8_t>(n_qubits)), x_(x_mask), z_(z_mask) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(n_qubits) + " outside [0, 32]");
  }
  QubitMask outside = ~low_mask(n_qubits);
  if ((x_mask | z_mask) & outside) {
    throw std::invalid_argument("Pauli mask has bits beyond qubit count " + std::to_string(n_qubits));
  }
}

PauliOperator PauliOperator::single(int n_qubits, int qubit, char kind) {
  if (qubit < 0 || qubit >= n_qubits) {
    throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range");
  }
  QubitMask bit = QubitMask{1} << qubit;
  switch (kind) {
    case 'X':
      return {n_qubits, bit, 0};
    case 'Y':
      return {n_qubits, bit, bit};
    case 'Z':
      return {n_qubits, 0, bit};
    case 'I':
      return identity(n_qubits);
  }
  throw std::invalid_argument(std::string("unknown Pauli '") + kind + "'");
}

PauliOperator PauliOperator::from_string(std::string_view text) {
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) text.remove_prefix(1);
  int n = static_cast<int>(text.size());
  QubitMask x = 0, z = 0;
  for (int i = 0; i < n; ++i) {
    QubitMask bit = QubitMask{1} << i;
    switch (text[i]) {
      case 'I':
      case '_':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      default:
        throw std::invalid_argument("bad Pauli character in '" + std::string(text) + "'");
    }
  }
  return {n, x, z};
}

char PauliOperator::at(int qubit) const {
  bool x = (x_ >> qubit) & 1, z = (z_ >> qubit) & 1;
  return "IZXY"[2 * x + z];
}

std::string PauliOperator::str() const {
  std::string out;
  out.reserve(n_qubits_);
  for (int i = 0; i < n_qubits_; ++i) out += at(i);
  return out;
}

static void require_same_size(const PauliOperator& a, const PauliOperator& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw SizeMismatchError("operator sizes differ: " + std::to_string(a.n_qubits()) + " vs " +
                            std::to_string(b.n_qubits()));
  }
}

int symplectic_product(const PauliOperator& a, const PauliOperator& b) {
  require_same_size(a, b);
  return symplectic_parity(a.x_mask(), a.z_mask(), b.x_mask(), b.z_mask());
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  require_same_size(a, b);
  return {a.n_qubits(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask()};
}

WeightProfile weight_profile(const PauliOperator& a) { return weight_profile(a.x_mask(), a.z_mask()); }

std::uint64_t count_errors(int n_qubits, int max_weight) {
  std::uint64_t total = 0, binom = 1, pow3 = 1;
  for (int i = 0; i <= max_weight && i <= n_qubits; ++i) {
    total += binom * pow3;
    binom = binom * static_cast<std::uint64_t>(n_qubits - i) / static_cast<std::uint64_t>(i + 1);
    pow3 *= 3;
  }
  return total;
}

ErrorEnumerator::ErrorEnumerator(int n_qubits, int max_weight) : n_(n_qubits), max_weight_(max_weight) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) throw std::invalid_argument("qubit count outside [0, 32]");
  if (max_weight < 0 || max_weight > n_qubits) {
    throw std::invalid_argument("max_weight " + std::to_string(max_weight) + " outside [0, " +
                                std::to_string(n_qubits) + "]");
  }
}

bool ErrorEnumerator::advance_support() {
  if (weight_ > 0) {
    // Gosper's hack: next mask with the same popcount.
    std::uint64_t v = support_;
    std::uint64_t c = v & (~v + 1);
    std::uint64_t r = v + c;
    std::uint64_t next = (((r ^ v) >> 2) / c) | r;
    if (next < (std::uint64_t{1} << n_)) {
      support_ = static_cast<QubitMask>(next);
      return true;
    }
  }
  if (++weight_ > max_weight_) return false;
  support_ = low_mask(weight_);
  return true;
}

bool ErrorEnumerator::next(QubitMask& x, QubitMask& z) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else if ((y_ = (y_ - x_) & x_) != 0) {
  } else if ((x_ = (x_ - support_) & support_) != 0) {
  } else if (!advance_support()) {
    done_ = true;
    return false;
  }
  x = x_;
  z = (support_ & ~x_) | y_;
  return true;
}

bool ErrorEnumerator::next(PauliOperator& out) {
  QubitMask x, z;
  if (!next(x, z)) return false;
  out = PauliOperator(n_, x, z);
  return true;
}

}  // namespace smallcodes
