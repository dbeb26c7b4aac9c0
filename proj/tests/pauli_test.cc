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

#include <gtest/gtest.h>

#include <set>
#include <utility>

#include "generators.h"
#include "smallcodes/pauli.h"

namespace smallcodes {
namespace {

using testing::Gen;

TEST(Pauli, FromStringRoundTrip) {
  PauliOperator p = PauliOperator::from_string("XIZY");
  EXPECT_EQ(p.n_qubits(), 4);
  EXPECT_EQ(p.at(0), 'X');
  EXPECT_EQ(p.at(1), 'I');
  EXPECT_EQ(p.at(2), 'Z');
  EXPECT_EQ(p.at(3), 'Y');
  EXPECT_EQ(p.str(), "XIZY");
  EXPECT_EQ(p.weight(), 3);
}

TEST(Pauli, SymplecticExamples) {
  EXPECT_EQ(symplectic_product(PauliOperator::from_string("X"), PauliOperator::from_string("Z")), 1);
  EXPECT_EQ(symplectic_product(PauliOperator::from_string("XX"), PauliOperator::from_string("ZZ")), 0);
  EXPECT_EQ(symplectic_product(PauliOperator::from_string("Y"), PauliOperator::from_string("Y")), 0);
  EXPECT_EQ(symplectic_product(PauliOperator::from_string("XY"), PauliOperator::from_string("ZI")), 1);
}

TEST(Pauli, ProductOfXAndZIsY) {
  PauliOperator y = PauliOperator::from_string("X") * PauliOperator::from_string("Z");
  EXPECT_EQ(y.str(), "Y");
}

TEST(Pauli, WeightProfileExample) {
  WeightProfile w = weight_profile(PauliOperator::from_string("XYYZIZZ"));
  EXPECT_EQ(w, (WeightProfile{1, 2, 3}));
  EXPECT_EQ(w.total(), 6);
}

TEST(Pauli, SizeMismatchThrows) {
  PauliOperator a = PauliOperator::identity(3);
  PauliOperator b = PauliOperator::identity(4);
  EXPECT_THROW(symplectic_product(a, b), SizeMismatchError);
  EXPECT_THROW(multiply(a, b), SizeMismatchError);
}

TEST(PauliProperty, SymplecticIsSymmetricAndBilinear) {
  Gen g(11);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = g.integer(1, 32);
    PauliOperator a = g.pauli(n), b = g.pauli(n), c = g.pauli(n);
    EXPECT_EQ(symplectic_product(a, b), symplectic_product(b, a));
    EXPECT_EQ(symplectic_product(a * b, c), symplectic_product(a, c) ^ symplectic_product(b, c));
    EXPECT_EQ(symplectic_product(a, a), 0);
  }
}

TEST(PauliProperty, MultiplicationIsAnInvolutionGroup) {
  Gen g(12);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = g.integer(1, 32);
    PauliOperator a = g.pauli(n), b = g.pauli(n);
    EXPECT_TRUE((a * a).is_identity());
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * PauliOperator::identity(n), a);
  }
}

TEST(PauliProperty, ProfileMatchesCharacters) {
  Gen g(13);
  for (int trial = 0; trial < 500; ++trial) {
    int n = g.integer(1, 32);
    PauliOperator a = g.pauli(n);
    WeightProfile w{};
    for (int q = 0; q < n; ++q) {
      char c = a.at(q);
      w.n_x += c == 'X';
      w.n_y += c == 'Y';
      w.n_z += c == 'Z';
    }
    EXPECT_EQ(weight_profile(a), w);
    EXPECT_EQ(w.total(), a.weight());
    EXPECT_EQ(PauliOperator::from_string(a.str()), a);
  }
}

TEST(Enumerator, CountsMatchBinomialFormula) {
  EXPECT_EQ(count_errors(5, 0), 1u);
  EXPECT_EQ(count_errors(5, 1), 16u);
  EXPECT_EQ(count_errors(15, 15), 1ull << 30);
  for (int n = 1; n <= 7; ++n) {
    for (int w = 0; w <= n; ++w) {
      ErrorEnumerator en(n, w);
      std::uint64_t seen = 0;
      for (const PauliOperator& p : en) {
        EXPECT_LE(p.weight(), w);
        ++seen;
      }
      EXPECT_EQ(seen, count_errors(n, w)) << "n=" << n << " w=" << w;
    }
  }
}

TEST(Enumerator, FullEnumerationIsDistinctAndWeightOrdered) {
  for (int n = 1; n <= 6; ++n) {
    ErrorEnumerator en(n, n);
    std::set<std::pair<QubitMask, QubitMask>> seen;
    int last_weight = 0;
    for (const PauliOperator& p : en) {
      EXPECT_GE(p.weight(), last_weight);
      last_weight = p.weight();
      EXPECT_TRUE(seen.insert({p.x_mask(), p.z_mask()}).second);
    }
    EXPECT_EQ(seen.size(), std::size_t{1} << (2 * n));
  }
}

TEST(Enumerator, OrderIsDeterministic) {
  ErrorEnumerator a(9, 3), b(9, 3);
  QubitMask ax, az, bx, bz;
  while (a.next(ax, az)) {
    ASSERT_TRUE(b.next(bx, bz));
    EXPECT_EQ(ax, bx);
    EXPECT_EQ(az, bz);
  }
  EXPECT_FALSE(b.next(bx, bz));
}

TEST(Enumerator, FirstErrorIsIdentity) {
  ErrorEnumerator en(4, 2);
  PauliOperator p;
  ASSERT_TRUE(en.next(p));
  EXPECT_TRUE(p.is_identity());
}

}  // namespace
}  // namespace smallcodes
