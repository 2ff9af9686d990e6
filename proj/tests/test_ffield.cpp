#include <gtest/gtest.h>

#include "milnor/ffield.hpp"
#include "test_util.hpp"

using namespace milnor;

namespace {

LaurentPoly mono(const ResidueFieldPtr& k, Exponent a, std::uint32_t c = 1) {
  return LaurentPoly::monomial(k, std::move(a), Fq{c});
}

}  // namespace

TEST(FiniteField, PrimeFieldArithmetic) {
  FiniteField F(5, 1);
  EXPECT_EQ(F.add(Fq{3}, Fq{4}), Fq{2});
  EXPECT_EQ(F.mul(Fq{3}, Fq{4}), Fq{2});
  EXPECT_EQ(F.neg(Fq{1}), Fq{4});
  for (std::uint32_t a = 1; a < 5; ++a) EXPECT_EQ(F.mul(Fq{a}, F.inv(Fq{a})), F.one());
  EXPECT_EQ(F.from_int(-1), Fq{4});
  EXPECT_EQ(F.frob_inv(Fq{3}), Fq{3});
}

TEST(FiniteField, ExtensionFieldIsAField) {
  for (auto [p, f] : {std::pair{2u, 2}, {2u, 3}, {3u, 2}, {5u, 2}}) {
    FiniteField F(p, f);
    const std::uint32_t q = F.size();
    // The generator has order exactly q - 1.
    std::uint32_t ord = 1;
    for (Fq x = F.generator(); x != F.one(); x = F.mul(x, F.generator())) ++ord;
    EXPECT_EQ(ord, q - 1);
    for (std::uint32_t a = 0; a < q; ++a) {
      const Fq x{a};
      EXPECT_EQ(F.frob_inv(F.frob(x)), x);
      EXPECT_EQ(F.from_digits(F.digits(x)), x);
      EXPECT_EQ(F.frob_power(x, f), x);
      if (a) {
        EXPECT_EQ(F.mul(x, F.inv(x)), F.one());
        EXPECT_EQ(F.gen_pow(F.log(x)), x);
      }
      for (std::uint32_t b = 0; b < q; ++b) {
        const Fq y{b};
        // Frobenius is additive.
        EXPECT_EQ(F.frob(F.add(x, y)), F.add(F.frob(x), F.frob(y)));
        EXPECT_EQ(F.sub(F.add(x, y), y), x);
      }
    }
  }
}

TEST(FiniteField, RejectsBadInput) {
  expect_error(Errc::InvalidParams, [] { FiniteField(4, 1); });
  expect_error(Errc::InvalidParams, [] { FiniteField(2, 2, {1, 0, 1}); });  // x^2 + 1 = (x + 1)^2
  expect_error(Errc::InvalidParams, [] { FiniteField(3, 1).inv(Fq{0}); });
}

TEST(FiniteField, Primality) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
}

TEST(LaurentPoly, AdditionExamples) {
  auto k = ResidueField::make(3, 1, 2);
  const auto f = mono(k, {2, 0}) + mono(k, {0, 1});
  EXPECT_EQ(f + LaurentPoly(k), f);
  EXPECT_TRUE((mono(k, {1, 0}) + mono(k, {1, 0}, 2)).is_zero());
  const auto sum = f + mono(k, {2, 0});
  EXPECT_EQ(sum, mono(k, {2, 0}, 2) + mono(k, {0, 1}));
  EXPECT_EQ(sum.size(), 2u);
}

TEST(LaurentPoly, MultiplicationExamples) {
  auto k = ResidueField::make(5, 1, 1);
  const auto f = mono(k, {3}, 2) + mono(k, {-1});
  EXPECT_EQ(f * LaurentPoly::constant(k, Fq{1}), f);
  EXPECT_EQ(mono(k, {-1}) * mono(k, {1}), LaurentPoly::constant(k, Fq{1}));
}

TEST(LaurentPoly, FreshmansDream) {
  for (auto [p, f] : {std::pair{2u, 1}, {3u, 1}, {5u, 1}, {3u, 2}}) {
    auto k = ResidueField::make(p, f, 2);
    const auto t1 = LaurentPoly::variable(k, 1);
    const auto t2 = LaurentPoly::variable(k, 2);
    EXPECT_EQ((t1 + t2).pow(p), t1.pow(p) + t2.pow(p)) << "p=" << p << " f=" << f;
    const auto g = mono(k, {1, -2}, k->field().generator().v) + t2;
    EXPECT_EQ(g.pow(p), g.frobenius());
  }
}

TEST(LaurentPoly, PthRoot) {
  auto k = ResidueField::make(3, 2, 2);
  const auto& F = k->field();
  EXPECT_EQ(mono(k, {3, 0}).pth_root(), LaurentPoly::variable(k, 1));
  EXPECT_EQ(LaurentPoly::constant(k, F.one()).pth_root(), LaurentPoly::constant(k, F.one()));
  const Fq c = F.generator();
  const auto root = mono(k, {3, 6}, c.v).pth_root();
  EXPECT_EQ(root, mono(k, {1, 2}, F.frob_inv(c).v));
  EXPECT_EQ(root.pow(3), mono(k, {3, 6}, c.v));
  EXPECT_FALSE(mono(k, {1, 0}).is_pth_power());
  expect_error(Errc::NotAPthPower, [&] { mono(k, {1, 3}).pth_root(); });
}

TEST(LaurentPoly, ContextMismatch) {
  auto k1 = ResidueField::make(3, 1, 1);
  auto k2 = ResidueField::make(3, 1, 2);
  expect_error(Errc::ContextMismatch, [&] { (void)(LaurentPoly::variable(k1, 1) + LaurentPoly::variable(k2, 1)); });
}

TEST(LaurentPoly, VariableIndexAndExponentRange) {
  auto k = ResidueField::make(2, 1, 1);
  expect_error(Errc::InvalidParams, [&] { LaurentPoly::variable(k, 3); });
  const auto big = mono(k, {std::int64_t{1} << 62});
  expect_error(Errc::ExponentOverflow, [&] { (void)big.pow(2); });
}
