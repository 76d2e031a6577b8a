// Copyright 2026 The Symgeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <gtest/gtest.h>

#include "symgeo/dyadic_mult.hpp"

namespace symgeo {
namespace {

Rational q(long p, long d = 1) { return Rational(mpz_class(p), mpz_class(d)); }
Arrow arr(const char* text) { return Arrow::parse(text); }

Arrow random_arrow(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<long> num(-100, 100), den(1, 10);
  std::vector<Rational> t, h;
  for (std::size_t i = 0; i < d; ++i) {
    t.push_back(q(num(rng), den(rng)));
    h.push_back(q(num(rng), den(rng)));
  }
  return Arrow(Point(std::move(t)), Point(std::move(h)));
}

// n-fold addition, the definition nat_mul shortcuts.
Arrow repeated_sum(long n, const Arrow& a) {
  Arrow acc = a;
  for (long k = 1; k < n; ++k) acc = add(acc, a);
  return acc;
}

Rational len_sq(const Arrow& a) {
  Rational s;
  for (std::size_t i = 0; i < a.dim(); ++i) s += square(a.head[i] - a.tail[i]);
  return s;
}

TEST(NatMul, Examples) {
  EXPECT_EQ(nat_mul(3, arr("(0,0)->(1,0)")), arr("(0,0)->(3,0)"));
  const Arrow a = arr("(1/2,3)->(4,-5)");
  EXPECT_EQ(nat_mul(1, a), a);
  EXPECT_THROW(nat_mul(0, a), ModelError);
}

TEST(NatMul, MatchesRepeatedAddition) {
  std::mt19937_64 rng(3);
  for (long n = 1; n <= 70; ++n) {
    const Arrow a = random_arrow(rng, 1 + static_cast<std::size_t>(n % 4));
    ASSERT_EQ(nat_mul(n, a), repeated_sum(n, a)) << n;
  }
}

TEST(IntMul, Examples) {
  const Arrow a = arr("(2,3)->(4,-5)");
  EXPECT_EQ(int_mul(0, a), Arrow::null_at(a.tail));
  EXPECT_EQ(int_mul(-2, arr("(0,0)->(1,1)")), arr("(0,0)->(-2,-2)"));
}

TEST(DyadicMul, Examples) {
  EXPECT_EQ(dyadic_mul(Dyadic(mpz_class(1), 1), arr("(0,0)->(2,4)")), arr("(0,0)->(1,2)"));
  EXPECT_EQ(dyadic_mul(Dyadic(mpz_class(3), 2), arr("(0,0)->(4,0)")), arr("(0,0)->(3,0)"));
}

TEST(DyadicMul, AgreementTower) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> m(-300, 300);
  std::uniform_int_distribution<unsigned> e(0, 10);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int i = 0; i < 2000; ++i) {
    const Arrow a = random_arrow(rng, dim(rng));
    const long k = m(rng);
    ASSERT_EQ(int_mul(k, a), scale(k, a));
    if (k > 0) {
      ASSERT_EQ(nat_mul(k, a), scale(k, a));
    }
    const Dyadic d(mpz_class(k), e(rng));
    ASSERT_EQ(dyadic_mul(d, a), scale(d.value(), a));
  }
}

TEST(RealMulApprox, OneThirdTrace) {
  // x-coordinates 3 * floor(2^k / 3) / 2^k for k = 0, 1, 2
  const DyadicApproxTrace t = real_mul_approx(q(1, 3), arr("(0,0)->(3,0)"), 2);
  ASSERT_EQ(t.steps.size(), 3u);
  EXPECT_EQ(t.steps[0].point, Point::parse("(0,0)"));
  EXPECT_EQ(t.steps[1].point, Point::parse("(0,0)"));
  EXPECT_EQ(t.steps[2].point, Point::parse("(3/4,0)"));
  EXPECT_EQ(t.steps[2].dyadic.value(), q(1, 4));
  EXPECT_EQ(t.final_error_sq, q(1, 16));
}

TEST(RealMulApprox, DyadicTargetIsExact) {
  const Arrow a = arr("(1,2)->(3,5)");
  const DyadicApproxTrace t = real_mul_approx(q(5), a, 0);
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.steps[0].point, scale(5, a).head);
  EXPECT_TRUE(t.final_error_sq.is_zero());
}

TEST(RealMulApprox, ErrorBoundMonotoneAndHalving) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> num(1, 999), den(1, 97);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int i = 0; i < 100; ++i) {
    const Rational lambda = q(num(rng), den(rng)) / 10;
    const Arrow a = random_arrow(rng, dim(rng));
    const DyadicApproxTrace t = real_mul_approx(lambda, a, 20);
    const Rational base = len_sq(a);
    Rational bound = base;
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
      ASSERT_LE(t.steps[k].error_sq, bound) << "depth " << k;
      bound /= 4;
      if (k == 0) continue;
      ASSERT_LE(t.steps[k].error_sq, t.steps[k - 1].error_sq);
      // progress along AB never goes backwards
      for (std::size_t c = 0; c < a.dim(); ++c) {
        const Rational dir = a.head[c] - a.tail[c];
        ASSERT_GE((t.steps[k].point[c] - t.steps[k - 1].point[c]) * dir, Rational());
      }
    }
  }
}

TEST(RealMulApprox, NegativeTargetMirrorsPositive) {
  const Arrow a = arr("(1,1)->(4,3)");
  const DyadicApproxTrace pos = real_mul_approx(q(7, 5), a, 8);
  const DyadicApproxTrace neg = real_mul_approx(q(-7, 5), a, 8);
  for (std::size_t k = 0; k < pos.steps.size(); ++k) {
    EXPECT_EQ(neg.steps[k].dyadic, -pos.steps[k].dyadic);
    EXPECT_EQ(neg.steps[k].error_sq, pos.steps[k].error_sq);
    EXPECT_EQ(midpoint(pos.steps[k].point, neg.steps[k].point), a.tail);
  }
}

TEST(RealMulApprox, EquivalentArrowsGiveEquivalentSteps) {
  const Arrow a = arr("(0,1,2)->(5,-1,7/2)");
  const Arrow b = translate(a, Point::parse("(9,9,-9)"));
  const DyadicApproxTrace ta = real_mul_approx(q(22, 7), a, 12);
  const DyadicApproxTrace tb = real_mul_approx(q(22, 7), b, 12);
  for (std::size_t k = 0; k < ta.steps.size(); ++k) {
    EXPECT_TRUE(equivalent(Arrow(a.tail, ta.steps[k].point), Arrow(b.tail, tb.steps[k].point)));
  }
}

}  // namespace
}  // namespace symgeo
