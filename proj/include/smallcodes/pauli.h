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

#ifndef SMALLCODES_PAULI_H
#define SMALLCODES_PAULI_H

#include <bit>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>

namespace smallcodes {

/// Largest supported qubit count. Each mask fits in one 32-bit word.
inline constexpr int kMaxQubits = 32;

using QubitMask = std::uint32_t;

/// Raised when two operators (or an operator and a code) disagree on qubit count.
class SizeMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr QubitMask low_mask(int n) {
  return n >= 32 ? ~QubitMask{0} : ((QubitMask{1} << n) - 1);
}

/// An n-qubit Pauli operator stored as paired X/Z bit masks.
///
/// Qubit i carries I, X, Z or Y when (x_i, z_i) is (0,0), (1,0), (0,1) or
/// (1,1). The global phase is not tracked: syndromes and logical classes only
/// depend on the masks.
class PauliOperator {
 public:
  PauliOperator() = default;
  PauliOperator(int n_qubits, QubitMask x_mask, QubitMask z_mask);

  static PauliOperator identity(int n_qubits) { return {n_qubits, 0, 0}; }
  /// Single-qubit Pauli `kind` ('X', 'Y' or 'Z') acting on `qubit`.
  static PauliOperator single(int n_qubits, int qubit, char kind);
  /// Parses a dense string such as "IXYZ" or "_XYZ"; character i is qubit i.
  static PauliOperator from_string(std::string_view text);

  int n_qubits() const { return n_qubits_; }
  QubitMask x_mask() const { return x_; }
  QubitMask z_mask() const { return z_; }
  QubitMask support() const { return x_ | z_; }
  int weight() const { return std::popcount(support()); }
  bool is_identity() const { return (x_ | z_) == 0; }
  /// 'I', 'X', 'Y' or 'Z' on one qubit.
  char at(int qubit) const;

  std::string str() const;

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

 private:
  std::uint8_t n_qubits_ = 0;
  QubitMask x_ = 0;
  QubitMask z_ = 0;
};

/// Per-type counts of the non-identity tensor factors of an operator.
struct WeightProfile {
  int n_x = 0;
  int n_y = 0;
  int n_z = 0;

  int total() const { return n_x + n_y + n_z; }
  friend bool operator==(const WeightProfile&, const WeightProfile&) = default;
};

/// 1 iff `a` and `b` anticommute. Throws SizeMismatchError on differing sizes.
int symplectic_product(const PauliOperator& a, const PauliOperator& b);

/// Unchecked kernel on raw masks.
inline int symplectic_parity(QubitMask ax, QubitMask az, QubitMask bx, QubitMask bz) {
  return std::popcount((ax & bz) ^ (az & bx)) & 1;
}

/// Componentwise product with the phase discarded.
PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
inline PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) { return multiply(a, b); }

WeightProfile weight_profile(const PauliOperator& a);

inline WeightProfile weight_profile(QubitMask x, QubitMask z) {
  int y = std::popcount(x & z);
  return {std::popcount(x) - y, y, std::popcount(z) - y};
}

/// Number of n-qubit Paulis with support size at most `max_weight`,
/// i.e. sum over i <= max_weight of C(n, i) * 3^i.
std::uint64_t count_errors(int n_qubits, int max_weight);

/// Streams every Pauli of support size <= max_weight exactly once.
///
/// Order: increasing weight, then increasing support mask, then increasing
/// x mask, then increasing z mask. The order is part of the contract because
/// reference corrections are chosen as the first error seen per syndrome.
class ErrorEnumerator {
 public:
  ErrorEnumerator(int n_qubits, int max_weight);

  /// Writes the next operator's masks; false once exhausted.
  bool next(QubitMask& x, QubitMask& z);
  bool next(PauliOperator& out);

  int n_qubits() const { return n_; }
  int current_weight() const { return weight_; }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = PauliOperator;
    using difference_type = std::ptrdiff_t;
    using pointer = const PauliOperator*;
    using reference = const PauliOperator&;

    iterator() = default;
    explicit iterator(ErrorEnumerator* owner) : owner_(owner) { ++*this; }
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++() {
      if (!owner_->next(current_)) owner_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.owner_ == b.owner_; }

   private:
    ErrorEnumerator* owner_ = nullptr;
    PauliOperator current_;
  };

  iterator begin() { return iterator(this); }
  iterator end() { return iterator(); }

 private:
  bool advance_support();

  int n_;
  int max_weight_;
  int weight_ = 0;
  QubitMask support_ = 0;
  QubitMask x_ = 0;
  QubitMask y_ = 0;  // subset of x_ that also carries Z
  bool started_ = false;
  bool done_ = false;
};

}  // namespace smallcodes

#endif  // SMALLCODES_PAULI_H
