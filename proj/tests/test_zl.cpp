#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ramsplit/errors.hpp"
#include "ramsplit/zl.hpp"

using namespace ramsplit;

namespace {

CharClass g(PrimeModulus m, const std::string& name, std::int64_t c = 1) {
  return CharClass::generator(m, {"k", name}, c);
}

}  // namespace

// ---------------------------------------------------------------------------
// PrimeModulus and Scalar

TEST(PrimeModulus, AcceptsPrimesOnly) {
  for (std::int64_t n = -5; n <= 60; ++n) {
    if (oracle::prime(n)) {
      EXPECT_EQ(PrimeModulus(n).ell(), n);
    } else {
      EXPECT_THROW(PrimeModulus{n}, NotPrime) << n;
    }
  }
}

TEST(Scalar, ReducesOnConstruction) {
  PrimeModulus m(7);
  EXPECT_EQ(Scalar(m, 10).value(), 3);
  EXPECT_EQ(Scalar(m, -1).value(), 6);
  EXPECT_EQ(Scalar(m, -8).value(), 6);
}

TEST(Scalar, ArithmeticMatchesIntegerReduction) {
  for (std::int64_t l : {2, 3, 5, 7, 11, 13}) {
    PrimeModulus m(l);
    for (std::int64_t a = 0; a < l; ++a)
      for (std::int64_t b = 0; b < l; ++b) {
        EXPECT_EQ((Scalar(m, a) + Scalar(m, b)).value(), oracle::mod(a + b, l));
        EXPECT_EQ((Scalar(m, a) - Scalar(m, b)).value(), oracle::mod(a - b, l));
        EXPECT_EQ((Scalar(m, a) * Scalar(m, b)).value(), oracle::mod(a * b, l));
      }
    for (std::int64_t a = 1; a < l; ++a) EXPECT_EQ(Scalar(m, a).inverse().value(), oracle::inverse(a, l));
    EXPECT_THROW(Scalar::zero(m).inverse(), std::domain_error);
  }
}

TEST(Scalar, MixedModuliThrow) {
  EXPECT_THROW(Scalar(PrimeModulus(3), 1) + Scalar(PrimeModulus(5), 1), ModulusMismatch);
  EXPECT_THROW(Scalar(PrimeModulus(3), 1) * Scalar(PrimeModulus(5), 1), ModulusMismatch);
}

TEST(GeneratorId, KeyRoundTrip) {
  GeneratorId id{"k(z1)", "t"};
  EXPECT_EQ(id.key(), "k(z1):t");
  EXPECT_EQ(GeneratorId::parse("k(z1):t"), id);
  EXPECT_EQ(GeneratorId::parse("a:b:c"), (GeneratorId{"a", "b:c"}));
  EXPECT_THROW(GeneratorId::parse("nocolon"), SchemaError);
}

// ---------------------------------------------------------------------------
// add

TEST(CharClassAdd, InversePairCancels) {
  PrimeModulus m(5);
  EXPECT_TRUE(add(g(m, "g1", 2), g(m, "g1", 3)).is_zero());
}

TEST(CharClassAdd, DisjointSupports) {
  PrimeModulus m(3);
  CharClass s = add(g(m, "g1"), g(m, "g2"));
  EXPECT_EQ(s.terms().size(), 2u);
  EXPECT_EQ(s.coefficient({"k", "g1"}).value(), 1);
  EXPECT_EQ(s.coefficient({"k", "g2"}).value(), 1);
}

TEST(CharClassAdd, ReducesCoefficients) {
  PrimeModulus m(3);
  // (2g1 + g2) + 2g1 = 4g1 + g2 = g1 + g2
  EXPECT_EQ(add(g(m, "g1", 2) + g(m, "g2"), g(m, "g1", 2)), g(m, "g1") + g(m, "g2"));
}

TEST(CharClassAdd, Errors) {
  PrimeModulus m(5);
  CharClass other = CharClass::generator(m, {"k2", "g1"});
  EXPECT_THROW(add(g(m, "g1"), other), SpaceMismatch);
  EXPECT_THROW(add(g(m, "g1"), g(PrimeModulus(7), "g1")), ModulusMismatch);
  // the zero class carries no space
  EXPECT_EQ(add(CharClass(m), other), other);
}

TEST(CharClass, NoZeroTermsStored) {
  PrimeModulus m(5);
  CharClass c(m, {{{"k", "a"}, 5}, {{"k", "b"}, 7}});
  EXPECT_EQ(c.terms().size(), 1u);
  EXPECT_EQ(c.coefficient({"k", "b"}).value(), 2);
  EXPECT_EQ(c.coefficient({"k", "a"}).value(), 0);
  EXPECT_THROW((CharClass(m, {{{"k", "a"}, 1}, {{"j", "b"}, 1}})), SpaceMismatch);
}

// ---------------------------------------------------------------------------
// scale

TEST(CharClassScale, Examples) {
  PrimeModulus m(5);
  CharClass x = g(m, "g1") + g(m, "g2", 4);
  EXPECT_TRUE(scale(Scalar::zero(m), x).is_zero());
  EXPECT_EQ(scale(Scalar::one(m), x), x);
  EXPECT_EQ(scale(Scalar(m, 3), g(m, "g1", 2)), g(m, "g1"));
  EXPECT_THROW(scale(Scalar(PrimeModulus(3), 1), x), ModulusMismatch);
}

// ---------------------------------------------------------------------------
// same_line, solve_ratio, order

TEST(SameLine, Examples) {
  PrimeModulus m(5);
  EXPECT_TRUE(same_line(g(m, "g1"), g(m, "g1", 2)));
  EXPECT_FALSE(same_line(g(m, "g1"), g(m, "g2")));
  EXPECT_TRUE(same_line(g(m, "g1", 2) + g(m, "g2", 4), g(m, "g1", 3) + g(m, "g2")));
  EXPECT_TRUE(same_line(CharClass(m), CharClass(m)));
  EXPECT_FALSE(same_line(CharClass(m), g(m, "g1")));
  EXPECT_FALSE(same_line(g(m, "g1"), CharClass(m)));
  EXPECT_THROW(same_line(g(m, "g1"), CharClass::generator(m, {"k2", "g1"})), SpaceMismatch);
}

TEST(SolveRatio, Examples) {
  PrimeModulus m(5);
  EXPECT_EQ(solve_ratio(g(m, "g1", 2), g(m, "g1", 3))->value(), 4);
  EXPECT_EQ(solve_ratio(CharClass(m), CharClass(m))->value(), 1);
  EXPECT_FALSE(solve_ratio(g(m, "g1"), g(m, "g2")).has_value());
  EXPECT_FALSE(solve_ratio(g(m, "g1"), CharClass(m)).has_value());
  EXPECT_EQ(solve_ratio(CharClass(m), g(m, "g1"))->value(), 0);
  EXPECT_THROW(solve_ratio(g(m, "g1"), CharClass::generator(m, {"k2", "g1"})), SpaceMismatch);
}

TEST(Order, Examples) {
  EXPECT_EQ(order(CharClass(PrimeModulus(5))), 1);
  EXPECT_EQ(order(g(PrimeModulus(7), "g1")), 7);
  PrimeModulus m(3);
  EXPECT_EQ(order(g(m, "g1", 3) + g(m, "g2")), 3);
}

// Every pair of vectors in (Z/l)^2 against exhaustion over n.
TEST(SolveRatio, AgreesWithExhaustion) {
  for (std::int64_t l : {2, 3, 5, 7, 11, 13}) {
    PrimeModulus m(l);
    auto make = [&](std::int64_t x, std::int64_t y) { return g(m, "g1", x) + g(m, "g2", y); };
    for (std::int64_t a1 = 0; a1 < l; ++a1)
      for (std::int64_t a2 = 0; a2 < l; ++a2)
        for (std::int64_t b1 = 0; b1 < l; ++b1)
          for (std::int64_t b2 = 0; b2 < l; ++b2) {
            auto want = oracle::ratio({a1, a2}, {b1, b2}, l);
            auto got = solve_ratio(make(a1, a2), make(b1, b2));
            ASSERT_EQ(got.has_value(), want.has_value()) << l << " " << a1 << a2 << b1 << b2;
            if (want) {
              // n is unique unless b = 0
              if (b1 != 0 || b2 != 0) ASSERT_EQ(got->value(), *want);
              ASSERT_EQ(make(a1, a2), *got * make(b1, b2));
            }
          }
  }
}

// ---------------------------------------------------------------------------
// Module axioms and line properties on random inputs

class ZlProperties : public ::testing::TestWithParam<std::int64_t> {
 protected:
  CharClass random_class(std::mt19937_64& rng) {
    PrimeModulus m(GetParam());
    CharClass c(m);
    for (const char* name : {"a", "b", "c"}) {
      c = c + g(m, name, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(GetParam())));
    }
    return c;
  }
};

TEST_P(ZlProperties, ModuleAxioms) {
  const std::int64_t l = GetParam();
  PrimeModulus m(l);
  std::mt19937_64 rng(l);
  for (int i = 0; i < 300; ++i) {
    CharClass x = random_class(rng), y = random_class(rng), z = random_class(rng);
    Scalar s(m, static_cast<std::int64_t>(rng() % 100)), t(m, static_cast<std::int64_t>(rng() % 100));
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x + CharClass(m), x);
    EXPECT_TRUE((x + (-x)).is_zero());
    EXPECT_EQ(s * (x + y), s * x + s * y);
    EXPECT_EQ((s + t) * x, s * x + t * x);
    EXPECT_EQ((s * t) * x, s * (t * x));
    EXPECT_TRUE((Scalar(m, l) * x).is_zero());
    CharClass lx(m);
    for (std::int64_t k = 0; k < l; ++k) lx = lx + x;
    EXPECT_TRUE(lx.is_zero());
  }
}

TEST_P(ZlProperties, LinesAndOrders) {
  const std::int64_t l = GetParam();
  PrimeModulus m(l);
  std::mt19937_64 rng(100 + l);
  for (int i = 0; i < 300; ++i) {
    CharClass x = random_class(rng), y = random_class(rng);
    EXPECT_EQ(l % order(x), 0);
    EXPECT_EQ(order(x) == 1, x.is_zero());
    if (x.is_zero() || y.is_zero()) continue;
    auto n = solve_ratio(x, y);
    EXPECT_EQ(same_line(x, y), n.has_value() && n->is_unit());
    EXPECT_EQ(same_line(x, y), same_line(y, x));
    EXPECT_TRUE(same_line(x, x));
    Scalar u(m, 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(l - 1)));
    EXPECT_TRUE(same_line(x, u * x));
    CharClass z = random_class(rng);
    if (!z.is_zero() && same_line(x, y) && same_line(y, z)) EXPECT_TRUE(same_line(x, z));
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, ZlProperties, ::testing::Values(2, 3, 5, 7, 11, 13));
