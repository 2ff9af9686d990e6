#include <gtest/gtest.h>

#include "milnor/graded.hpp"
#include "milnor/properties.hpp"
#include "test_util.hpp"

using namespace milnor;

namespace {

CDVFParams make(std::uint32_t p, int r, int e, int n, int q, LaurentPoly (*a)(const ResidueFieldPtr&) = nullptr,
                int f = 1) {
  auto k = ResidueField::make(p, f, r);
  return CDVFParams(k, e, n, q, a ? a(k) : LaurentPoly::constant(k, Fq{1}));
}

CDVFParams q2i() { return make(2, 0, 2, 2, 1); }

DiffForm term(const ResidueFieldPtr& k, Exponent alpha, std::vector<int> idx, std::uint32_t c = 1) {
  DiffForm w = DiffForm::function(LaurentPoly::monomial(k, std::move(alpha), Fq{c}));
  for (int i : idx) w = wedge(w, DiffForm::dlog(k, i));
  return w;
}

SymbolEntry entry(Exponent alpha, std::uint32_t c = 1) { return SymbolEntry{false, Fq{c}, std::move(alpha)}; }
SymbolEntry prime() { return SymbolEntry{true, Fq{1}, {}}; }

int order_log(const CDVFParams& P, std::int64_t m) { return GradedQuotient(P, m).size(0).order->log_p; }

}  // namespace

TEST(Params, Thresholds) {
  const auto P = q2i();
  EXPECT_EQ(P.e0(), 2);
  EXPECT_EQ(P.threshold(0), 0);
  EXPECT_EQ(P.threshold(1), 4);
  EXPECT_EQ(P.threshold(2), 6);
}

TEST(Params, Validation) {
  expect_error(Errc::InvalidParams, [] { make(3, 0, 3, 1, 1); });  // e_0 = 3/2
  expect_error(Errc::InvalidParams, [] { make(3, 0, 2, 2, 1); });  // 3 * 2 does not divide 2
  expect_error(Errc::InvalidParams, [] { make(2, 0, 2, 0, 1); });
  expect_error(Errc::InvalidParams, [] { make(2, 0, 2, 1, 0); });
  expect_error(Errc::InvalidParams, [] {
    auto k = ResidueField::make(2, 1, 0);
    CDVFParams(k, 2, 1, 1, LaurentPoly(k));
  });
}

TEST(Classify, Examples) {
  const auto P = q2i();
  EXPECT_EQ(classify(P, 3), (GradedCase{GradedCase::Kind::I, 0, 0}));
  EXPECT_EQ(classify(P, 4).kind, GradedCase::Kind::II);
  EXPECT_EQ(classify(P, 4).i, 1);
  EXPECT_EQ(classify(P, 5), (GradedCase{GradedCase::Kind::I, 1, 0}));
  EXPECT_EQ(classify(P, 6).kind, GradedCase::Kind::II);
  EXPECT_EQ(classify(P, 6).i, 2);
  EXPECT_EQ(classify(P, 7).kind, GradedCase::Kind::III);
  EXPECT_EQ(classify(P, 0).kind, GradedCase::Kind::OutOfRange);
  expect_error(Errc::OutOfRange, [&] { descriptor(P, 0); });
}

TEST(Descriptor, Examples) {
  const auto P = q2i();
  const auto d5 = descriptor(P, 5);
  EXPECT_EQ(d5.shape, GrDescriptor::Shape::CokerTheta);
  EXPECT_EQ(d5.tower_level, 0);
  const auto d4 = descriptor(P, 4);
  EXPECT_EQ(d4.shape, GrDescriptor::Shape::OnePlusAC);
  EXPECT_EQ(d4.tower_level, 1);
  EXPECT_EQ(descriptor(P, 7).shape, GrDescriptor::Shape::Zero);
  // c_1 < m < c_2 with n - i <= s: e = 4, n = 2, m = 10 has i = 1, s = 1.
  const auto d10 = descriptor(make(2, 0, 4, 2, 1), 10);
  EXPECT_EQ(d10.shape, GrDescriptor::Shape::ModZ);
  EXPECT_EQ(d10.tower_level, 1);
  // theta coefficient (-1)^q (m - i e)/p^s mod p.
  EXPECT_EQ(descriptor(make(3, 1, 2, 1, 2), 2).theta_coeff, 2u);
  EXPECT_EQ(descriptor(make(3, 1, 2, 1, 1), 2).theta_coeff, 1u);
}

TEST(Theta, Examples) {
  const auto P = make(3, 1, 2, 1, 2);
  const auto& k = P.context();
  const auto img = theta(P, 1, term(k, {1}, {}));
  EXPECT_EQ(img.first, term(k, {1}, {1}));
  EXPECT_EQ(img.second, term(k, {1}, {}));
  EXPECT_EQ(theta(P, 2, term(k, {1}, {})).second, term(k, {1}, {}, 2));
  EXPECT_TRUE(theta(P, 1, DiffForm(k, 0)).is_zero());
  // q = 1: the source is Omega^{-1} = 0.
  const auto P1 = make(3, 1, 2, 1, 1);
  EXPECT_TRUE(theta(P1, 1, DiffForm(P1.context(), -1)).is_zero());
  expect_error(Errc::PreconditionViolated, [&] { theta(P, 3, DiffForm(k, 0)); });
}

TEST(OnePlusAC, Examples) {
  const auto P = make(5, 0, 4, 1, 1, [](const ResidueFieldPtr& k) { return LaurentPoly::constant(k, Fq{3}); });
  const auto& k = P.context();
  EXPECT_TRUE(one_plus_aC(P, DiffForm(k, 0)).is_zero());
  // C is the identity on F_p, so x -> x + a x = 4x.
  EXPECT_EQ(one_plus_aC(P, term(k, {}, {}, 2)), term(k, {}, {}, 3));
  const auto Q = q2i();
  EXPECT_TRUE(one_plus_aC(Q, term(Q.context(), {}, {})).is_zero());
  const auto R = make(2, 1, 2, 1, 1);
  expect_error(Errc::NotClosed, [&] { one_plus_aC(R, term(R.context(), {1}, {})); });
}

TEST(Reduce, ZeroAndThetaImages) {
  const auto P = make(3, 1, 2, 1, 2);
  const auto& k = P.context();
  GradedQuotient Q(P, 1);
  EXPECT_TRUE(Q.reduce(zero_element(P)).is_zero());
  const auto w = term(k, {1}, {}) + term(k, {-2}, {}, 2) + term(k, {3}, {});
  EXPECT_TRUE(Q.is_zero(theta(P, 1, w)));
  EXPECT_FALSE(Q.is_zero({term(k, {1}, {1}), DiffForm(k, 0)}));
}

// (1 + aC) kills 1 over F_2 with a = 1, so the relation subgroup is trivial and
// the class of 1 survives; gr^4 has order 2 on both sides of the comparison.
TEST(Reduce, OneSurvivesAtCaseTwoOverF2) {
  const auto P = q2i();
  const auto& k = P.context();
  GradedQuotient Q(P, 4);
  const GrElement one{term(k, {}, {}), DiffForm(k, -1)};
  EXPECT_TRUE(one_plus_aC(P, one.first).is_zero());
  EXPECT_FALSE(Q.is_zero(one));
  EXPECT_EQ(Q.reduce(one), one);
  EXPECT_EQ(order_log(P, 4), 1);
}

TEST(IsZero, Examples) {
  const auto P = q2i();
  const auto& k = P.context();
  EXPECT_TRUE(GradedQuotient(P, 7).is_zero({term(k, {}, {}), DiffForm(k, -1)}));
  EXPECT_FALSE(GradedQuotient(P, 5).is_zero({term(k, {}, {}), DiffForm(k, -1)}));
  expect_error(Errc::ContextMismatch,
               [&] { GradedQuotient(P, 5).is_zero({DiffForm(k, -1), DiffForm(k, -1)}); });
}

TEST(RhoEval, Examples) {
  const auto P1 = make(3, 1, 2, 1, 1);
  const auto& k1 = P1.context();
  const auto u1 = LaurentPoly::monomial(k1, {2}, Fq{2});
  const auto r1 = rho_eval(P1, {3, u1, {}});
  EXPECT_EQ(r1.first, DiffForm::function(u1));
  EXPECT_TRUE(r1.second.is_zero());

  const auto P = make(3, 1, 2, 1, 2);
  const auto& k = P.context();
  const auto u = LaurentPoly::variable(k, 1);
  EXPECT_EQ(rho_eval(P, {2, u, {entry({1})}}).first, term(k, {1}, {1}));
  const auto pr = rho_eval(P, {2, u, {prime()}});
  EXPECT_TRUE(pr.first.is_zero());
  EXPECT_EQ(pr.second, term(k, {1}, {}));
  // dlog(c t1^2) = 2 dlog t1.
  EXPECT_EQ(rho_eval(P, {2, u, {entry({2}, 2)}}).first, term(k, {1}, {1}, 2));

  expect_error(Errc::MalformedSymbol, [&] { rho_eval(P, {2, u, {}}); });
  expect_error(Errc::MalformedSymbol, [&] { rho_eval(P, {2, LaurentPoly(k), {entry({1})}}); });
}

TEST(RhoEval, PrimeEntryPositionSign) {
  const auto P = make(3, 2, 2, 1, 3);
  const auto& k = P.context();
  const auto u = LaurentPoly::variable(k, 2);
  const auto last = rho_eval(P, {2, u, {entry({1, 0}), prime()}});
  const auto first = rho_eval(P, {2, u, {prime(), entry({1, 0})}});
  EXPECT_EQ(last.second, term(k, {0, 1}, {1}));
  EXPECT_EQ(first.second, -last.second);
  expect_error(Errc::MalformedSymbol, [&] { rho_eval(P, {2, u, {prime(), prime()}}); });
}

// Orders for r = 0 frozen from the brute-force unit group computation
// (Q_2(i) at n = 2 and Q_3(zeta_3) at n = 1).
TEST(Orders, FrozenAgainstOracle) {
  const auto P = q2i();
  for (int m = 1; m <= 6; ++m) EXPECT_EQ(order_log(P, m), 1) << "m=" << m;
  EXPECT_EQ(order_log(P, 7), 0);
  const auto Q = make(3, 0, 2, 1, 1, [](const ResidueFieldPtr& k) { return LaurentPoly::constant(k, Fq{2}); });
  for (int m = 1; m <= 3; ++m) EXPECT_EQ(order_log(Q, m), 1) << "m=" << m;
  EXPECT_EQ(order_log(Q, 4), 0);
}

TEST(Orders, PerSliceForPositiveR) {
  const auto P = make(2, 1, 2, 2, 1);
  const auto S = GradedQuotient(P, 3).size(2);
  EXPECT_FALSE(S.order.has_value());
  EXPECT_EQ(S.slice_log_p.size(), 5u);
  for (const auto& [g, v] : S.slice_log_p) EXPECT_EQ(v, 1) << g[0];
  EXPECT_EQ(GradedQuotient(P, 7).size(2).order->log_p, 0);
  expect_error(Errc::WindowOverflow, [&] { GradedQuotient(P, 3, QuotientOptions{4}).size(2); });
}

TEST(Lemma1, Examples) {
  const auto P = q2i();
  const auto L5 = lemma1_consistency(P, 5, {});
  EXPECT_TRUE(L5.case_shift_ok);
  ASSERT_TRUE(L5.orders_equal.has_value());
  EXPECT_TRUE(*L5.orders_equal);
  EXPECT_EQ(L5.upper_order->log_p, 1);
  EXPECT_EQ(L5.lower_order->log_p, 1);
  EXPECT_TRUE(L5.consistent());
  EXPECT_TRUE(lemma1_consistency(P, 6, {}).consistent());
  expect_error(Errc::PreconditionViolated, [&] { lemma1_consistency(P, 4, {}); });
  expect_error(Errc::PreconditionViolated, [&] { lemma1_consistency(make(2, 0, 2, 1, 1), 5, {}); });
}

TEST(Lemma1, ProbesAgreeAcrossPresentations) {
  const auto P = make(2, 1, 2, 2, 1, [](const ResidueFieldPtr& k) { return LaurentPoly::variable(k, 1); });
  const auto& k = P.context();
  std::vector<GrElement> probes;
  for (int a = -3; a <= 3; ++a) probes.push_back({term(k, {a}, {}), DiffForm(k, -1)});
  for (std::int64_t m = 5; m <= 6; ++m) {
    const auto L = lemma1_consistency(P, m, probes);
    EXPECT_TRUE(L.probe_mismatches.empty()) << "m=" << m;
    EXPECT_TRUE(L.consistent()) << "m=" << m;
  }
}

TEST(GradedProperties, SmallRunPasses) {
  for (const auto& r : props::run(props::graded_properties(40), 13))
    EXPECT_TRUE(r.passed()) << r.suite << "." << r.name << ": " << r.first_failure;
}
