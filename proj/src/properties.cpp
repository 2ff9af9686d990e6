#include "milnor/properties.hpp"

#include "milnor/text.hpp"

namespace milnor::props {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  // Plain modular reduction keeps draws identical across standard libraries.
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng() % span);
}

namespace gen {

namespace {

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(v.size()) - 1))];
}

}  // namespace

ResidueFieldPtr context(Rng& rng, int max_r) {
  struct Shape {
    std::uint32_t p;
    int f;
  };
  static const std::vector<Shape> shapes{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}};
  const auto& s = pick(rng, shapes);
  return ResidueField::make(s.p, s.f, static_cast<int>(uniform(rng, 1, max_r)));
}

Exponent exponent(Rng& rng, int r, std::int64_t lo, std::int64_t hi) {
  Exponent a(r);
  for (auto& x : a) x = uniform(rng, lo, hi);
  return a;
}

Fq scalar(Rng& rng, const FiniteField& F, bool nonzero) {
  return Fq{static_cast<std::uint32_t>(uniform(rng, nonzero ? 1 : 0, F.size() - 1))};
}

LaurentPoly poly(Rng& rng, const ResidueFieldPtr& ctx, int max_terms, std::int64_t lo, std::int64_t hi) {
  LaurentPoly out(ctx);
  const auto terms = uniform(rng, 0, max_terms);
  for (std::int64_t k = 0; k < terms; ++k) out.add_term(exponent(rng, ctx->r(), lo, hi), scalar(rng, ctx->field(), true));
  return out;
}

DiffForm form(Rng& rng, const ResidueFieldPtr& ctx, int degree, int max_terms, std::int64_t lo, std::int64_t hi) {
  DiffForm out(ctx, degree);
  const auto& sets = subsets(ctx->r(), degree);
  if (sets.empty()) return out;
  const auto terms = uniform(rng, 0, max_terms);
  for (std::int64_t k = 0; k < terms; ++k)
    out.add_term(exponent(rng, ctx->r(), lo, hi), pick(rng, sets), scalar(rng, ctx->field(), true));
  return out;
}

DiffForm b_member(Rng& rng, const ResidueFieldPtr& ctx, int degree, int s) {
  DiffForm out(ctx, degree);
  for (int k = 0; k < s && k < 2; ++k) {
    const int j = static_cast<int>(uniform(rng, 0, s - 1));
    out = out + inv_cartier_power(d(form(rng, ctx, degree - 1, 3, -3, 3)), j);
  }
  return out;
}

DiffForm z_member(Rng& rng, const ResidueFieldPtr& ctx, int degree, int s) {
  return inv_cartier_power(form(rng, ctx, degree, 3, -3, 3), s) + b_member(rng, ctx, degree, s);
}

DiffForm tower_mix(Rng& rng, const ResidueFieldPtr& ctx, int degree) {
  DiffForm out(ctx, degree);
  const auto pieces = uniform(rng, 1, 3);
  for (std::int64_t k = 0; k < pieces; ++k) {
    const int s = static_cast<int>(uniform(rng, 0, 3));
    switch (uniform(rng, 0, 3)) {
      case 0: out = out + form(rng, ctx, degree, 2); break;
      case 1: out = out + b_member(rng, ctx, degree, s); break;
      default: out = out + z_member(rng, ctx, degree, s); break;
    }
  }
  return out;
}

CDVFParams params(Rng& rng, int max_r, int max_q) {
  struct Grid {
    std::uint32_t p;
    int e, n, f;
  };
  static const std::vector<Grid> grid{{2, 2, 1, 1}, {2, 2, 2, 1}, {2, 4, 2, 1}, {2, 4, 3, 1}, {3, 2, 1, 1},
                                      {3, 6, 2, 1}, {5, 4, 1, 1}, {2, 2, 2, 2}, {3, 2, 1, 2}};
  const auto& g = pick(rng, grid);
  auto ctx = ResidueField::make(g.p, g.f, static_cast<int>(uniform(rng, 0, max_r)));
  LaurentPoly a(ctx);
  while (a.is_zero()) a = poly(rng, ctx, 2, -2, 2);
  return CDVFParams(ctx, g.e, g.n, static_cast<int>(uniform(rng, 1, max_q)), a);
}

std::optional<std::pair<CDVFParams, std::int64_t>> level_with_shape(Rng& rng, GrDescriptor::Shape shape, int min_q) {
  for (int attempt = 0; attempt < 400; ++attempt) {
    auto P = params(rng);
    if (P.q() < min_q) continue;
    const auto cn = P.threshold(P.n());
    const std::int64_t m = shape == GrDescriptor::Shape::Zero ? uniform(rng, cn + 1, cn + 4) : uniform(rng, 1, cn);
    if (descriptor(P, m).shape == shape) return std::make_pair(P, m);
  }
  return std::nullopt;
}

}  // namespace gen

namespace {

std::string describe(const CDVFParams& P, std::int64_t m) {
  return "p=" + std::to_string(P.p()) + " f=" + std::to_string(P.f()) + " r=" + std::to_string(P.r()) +
         " e=" + std::to_string(P.e()) + " n=" + std::to_string(P.n()) + " q=" + std::to_string(P.q()) +
         " a=" + print_element(P.a()) + " m=" + std::to_string(m);
}

std::string describe(const GrElement& el) { return "(" + print_form(el.first) + ", " + print_form(el.second) + ")"; }

std::optional<std::string> fail_with(const std::string& what) { return what; }

// Matrix of d on the alpha-slice from degree q to q+1, built from d itself.
FqMatrix d_matrix(const ResidueFieldPtr& ctx, const Exponent& alpha, int q) {
  const auto& src = subsets(ctx->r(), q);
  const auto& dst = subsets(ctx->r(), q + 1);
  FqMatrix m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const auto img = d(DiffForm::monomial(ctx, alpha, src[j], ctx->field().one())).slice(alpha);
    for (std::size_t i = 0; i < dst.size() && i < img.size(); ++i) m.at(i, j) = img[i];
  }
  return m;
}

GrElement random_element(Rng& rng, const CDVFParams& P) {
  const auto& ctx = P.context();
  return {gen::form(rng, ctx, P.q() - 1, 3), gen::form(rng, ctx, P.q() - 2, 3)};
}

// A random element of the relation subgroup of the descriptor.
GrElement random_relation(Rng& rng, const CDVFParams& P, const GrDescriptor& D) {
  const auto& ctx = P.context();
  const int q = P.q(), t = D.tower_level;
  switch (D.shape) {
    case GrDescriptor::Shape::CokerTheta: {
      auto th = theta(P, D.m, gen::form(rng, ctx, q - 2, 2, -3, 3));
      return {th.first + gen::b_member(rng, ctx, q - 1, t), th.second + gen::b_member(rng, ctx, q - 2, t)};
    }
    case GrDescriptor::Shape::ModZ:
      return {gen::z_member(rng, ctx, q - 1, t), gen::z_member(rng, ctx, q - 2, t)};
    case GrDescriptor::Shape::OnePlusAC:
      return {one_plus_aC(P, gen::z_member(rng, ctx, q - 1, t)), one_plus_aC(P, gen::z_member(rng, ctx, q - 2, t))};
    case GrDescriptor::Shape::Zero: return random_element(rng, P);
  }
  return zero_element(P);
}

GrDescriptor::Shape random_shape(Rng& rng) {
  static const GrDescriptor::Shape all[] = {GrDescriptor::Shape::CokerTheta, GrDescriptor::Shape::ModZ,
                                            GrDescriptor::Shape::OnePlusAC, GrDescriptor::Shape::Zero};
  return all[uniform(rng, 0, 3)];
}

}  // namespace

std::vector<Property> forms_properties(std::size_t cases) {
  std::vector<Property> out;
  auto add = [&](std::string name, Check c) { out.push_back({"forms", std::move(name), cases, std::move(c)}); };

  add("d_squared_zero", [](Rng& rng) -> std::optional<std::string> {
    auto ctx = gen::context(rng);
    auto w = gen::form(rng, ctx, static_cast<int>(uniform(rng, 0, 3)));
    if (!d(d(w)).is_zero()) return fail_with("d(d(w)) != 0 for w = " + print_form(w));
    return std::nullopt;
  });

  add("cartier_inverts_inv_cartier", [](Rng& rng) -> std::optional<std::string> {
    auto ctx = gen::context(rng);
    auto w = gen::form(rng, ctx, static_cast<int>(uniform(rng, 0, 3)));
    auto c = inv_cartier(w);
    if (!is_closed(c)) return fail_with("inv_cartier(w) not closed for w = " + print_form(w));
    if (!(cartier(c) == w)) return fail_with("C(C^-1 w) != w for w = " + print_form(w));
    return std::nullopt;
  });

  add("cartier_kills_exact", [](Rng& rng) -> std::optional<std::string> {
    auto ctx = gen::context(rng);
    auto eta = gen::form(rng, ctx, static_cast<int>(uniform(rng, 0, 2)));
    if (!cartier(d(eta)).is_zero()) return fail_with("C(d eta) != 0 for eta = " + print_form(eta));
    return std::nullopt;
  });

  add("leibniz", [](Rng& rng) -> std::optional<std::string> {
    auto ctx = gen::context(rng);
    auto f = gen::poly(rng, ctx, 3);
    auto w = gen::form(rng, ctx, static_cast<int>(uniform(rng, 0, 2)));
    auto lhs = d(w.times(f));
    auto rhs = wedge(d(DiffForm::function(f)), w) + d(w).times(f);
    if (!(lhs == rhs)) return fail_with("d(f w) != df^w + f dw for f = " + print_element(f) + ", w = " + print_form(w));
    return std::nullopt;
  });

  add("chain_inclusions", [](Rng& rng) -> std::optional<std::string> {
    auto ctx = gen::context(rng);
    const int q = static_cast<int>(uniform(rng, 0, 3));
    auto w = gen::tower_mix(rng, ctx, q);
    for (int s = 0; s <= 3; ++s) {
      const bool b = in_B(w, s), z = in_Z(w, s);
      if (b && !in_B(w, s + 1)) return fail_with("B_s not inside B_{s+1}, s=" + std::to_string(s) + ", w = " + print_form(w));
      if (in_Z(w, s + 1) && !z) return fail_with("Z_{s+1} not inside Z_s, s=" + std::to_string(s) + ", w = " + print_form(w));
      if (b)
        for (int t = 0; t <= 3; ++t)
          if (!in_Z(w, t))
            return fail_with("B_" + std::to_string(s) + " not inside Z_" + std::to_string(t) + ", w = " + print_form(w));
    }
    return std::nullopt;
  });

  add("koszul_exactness", [](Rng& rng) -> std::optional<std::string> {
    auto ctx = gen::context(rng);
    const int r = ctx->r(), q = static_cast<int>(uniform(rng, 0, r));
    const auto& F = ctx->field();
    Exponent alpha = gen::exponent(rng, r);
    const bool divisible = exp_divisible(alpha, ctx->p());
    const std::size_t nq = subsets(r, q).size();
    const std::size_t rank_in = q >= 1 ? rank(F, d_matrix(ctx, alpha, q - 1)) : 0;
    const std::size_t rank_out = rank(F, d_matrix(ctx, alpha, q));
    const std::size_t z1 = nq - rank_out, b1 = rank_in;
    const auto zs = tower_slice(*ctx, alpha, q, Tower::Z, 1);
    const auto bs = tower_slice(*ctx, alpha, q, Tower::B, 1);
    const std::string where = " at alpha " + print_exponent(alpha) + ", q = " + std::to_string(q) + ", p = " +
                              std::to_string(ctx->p());
    if (zs.dim() != z1 || bs.dim() != b1) return fail_with("tower slice dims disagree with ranks of d" + where);
    if (divisible) {
      if (b1 != 0 || z1 != nq) return fail_with("p-divisible slice is not (B_1, Z_1) = (0, all)" + where);
      return std::nullopt;
    }
    if (z1 != b1) return fail_with("Z_1 and B_1 differ in dimension" + where);
    for (const auto& v : bs.basis())
      if (!zs.contains(v)) return fail_with("B_1 slice not inside Z_1 slice" + where);
    return std::nullopt;
  });

  add("nf_mod_matches_membership", [](Rng& rng) -> std::optional<std::string> {
    auto ctx = gen::context(rng);
    const int q = static_cast<int>(uniform(rng, 0, 3));
    auto w = gen::tower_mix(rng, ctx, q);
    const int s = static_cast<int>(uniform(rng, 0, 3));
    const Tower kind = uniform(rng, 0, 1) ? Tower::B : Tower::Z;
    const bool member = kind == Tower::B ? in_B(w, s) : in_Z(w, s);
    if (nf_mod(w, kind, s).is_zero() != member)
      return fail_with(std::string("nf_mod zero-ness differs from in_") + (kind == Tower::B ? "B" : "Z") +
                       ", s=" + std::to_string(s) + ", w = " + print_form(w));
    return std::nullopt;
  });

  add("nf_mod_coset", [](Rng& rng) -> std::optional<std::string> {
    auto ctx = gen::context(rng);
    const int q = static_cast<int>(uniform(rng, 0, 3));
    const int s = static_cast<int>(uniform(rng, 0, 3));
    const Tower kind = uniform(rng, 0, 1) ? Tower::B : Tower::Z;
    auto w = gen::form(rng, ctx, q);
    auto rel = kind == Tower::B ? gen::b_member(rng, ctx, q, s) : gen::z_member(rng, ctx, q, s);
    auto nf = nf_mod(w, kind, s);
    if (!nf_mod(nf - w, kind, s).is_zero()) return fail_with("nf_mod(w) - w outside the subgroup for w = " + print_form(w));
    if (!(nf_mod(nf, kind, s) == nf)) return fail_with("nf_mod not idempotent for w = " + print_form(w));
    if (!(nf_mod(w + rel, kind, s) == nf)) return fail_with("nf_mod not constant on the coset of w = " + print_form(w));
    return std::nullopt;
  });
  return out;
}

std::vector<Property> graded_properties(std::size_t cases) {
  std::vector<Property> out;
  auto add = [&](std::string name, Check c) { out.push_back({"graded", std::move(name), cases, std::move(c)}); };

  add("case_partition", [](Rng& rng) -> std::optional<std::string> {
    auto P = gen::params(rng);
    const std::int64_t m = uniform(rng, 1, P.threshold(P.n()) + 5);
    int hits = 0, which_i = -1;
    GradedCase::Kind kind = GradedCase::Kind::OutOfRange;
    for (int i = 0; i < P.n(); ++i)
      if (P.threshold(i) < m && m < P.threshold(i + 1)) ++hits, kind = GradedCase::Kind::I, which_i = i;
    for (int i = 1; i <= P.n(); ++i)
      if (m == P.threshold(i)) ++hits, kind = GradedCase::Kind::II, which_i = i;
    if (m > P.threshold(P.n())) ++hits, kind = GradedCase::Kind::III, which_i = 0;
    const auto c = classify(P, m);
    if (hits != 1) return fail_with("thresholds do not partition m for " + describe(P, m));
    if (c.kind != kind || (kind != GradedCase::Kind::III && c.i != which_i))
      return fail_with("classify disagrees with the thresholds for " + describe(P, m));
    return std::nullopt;
  });

  add("theta_image_vanishes", [](Rng& rng) -> std::optional<std::string> {
    auto pick = gen::level_with_shape(rng, GrDescriptor::Shape::CokerTheta, 2);
    if (!pick) return fail_with("no case (i) level found");
    const auto& [P, m] = *pick;
    GradedQuotient Q(P, m);
    auto w = gen::form(rng, P.context(), P.q() - 2, 3);
    auto el = theta(P, m, w);
    if (!Q.is_zero(el)) return fail_with("theta(w) not zero for w = " + print_form(w) + ", " + describe(P, m));
    return std::nullopt;
  });

  add("one_plus_aC_vanishes", [](Rng& rng) -> std::optional<std::string> {
    auto pick = gen::level_with_shape(rng, GrDescriptor::Shape::OnePlusAC);
    if (!pick) return fail_with("no case (ii) level found");
    const auto& [P, m] = *pick;
    GradedQuotient Q(P, m);
    const int t = Q.descriptor().tower_level;
    GrElement el{one_plus_aC(P, gen::z_member(rng, P.context(), P.q() - 1, t)),
                 one_plus_aC(P, gen::z_member(rng, P.context(), P.q() - 2, t))};
    if (!Q.is_zero(el)) return fail_with("(1+aC)z not zero: " + describe(el) + ", " + describe(P, m));
    return std::nullopt;
  });

  add("reduce_idempotent", [](Rng& rng) -> std::optional<std::string> {
    auto pick = gen::level_with_shape(rng, random_shape(rng));
    if (!pick) return fail_with("no level found");
    const auto& [P, m] = *pick;
    GradedQuotient Q(P, m);
    auto el = random_element(rng, P);
    auto red = Q.reduce(el);
    if (!(Q.reduce(red) == red)) return fail_with("reduce not idempotent on " + describe(el) + ", " + describe(P, m));
    return std::nullopt;
  });

  add("reduce_coset_constant", [](Rng& rng) -> std::optional<std::string> {
    auto pick = gen::level_with_shape(rng, random_shape(rng));
    if (!pick) return fail_with("no level found");
    const auto& [P, m] = *pick;
    GradedQuotient Q(P, m);
    auto el = random_element(rng, P);
    auto rel = random_relation(rng, P, Q.descriptor());
    GrElement shifted{el.first + rel.first, el.second + rel.second};
    if (!(Q.reduce(shifted) == Q.reduce(el)))
      return fail_with("reduce differs on " + describe(el) + " and its shift by " + describe(rel) + ", " +
                       describe(P, m));
    return std::nullopt;
  });

  add("vanishing_beyond_c_n", [](Rng& rng) -> std::optional<std::string> {
    auto P = gen::params(rng);
    const std::int64_t m = uniform(rng, P.threshold(P.n()) + 1, P.threshold(P.n()) + 4);
    GradedQuotient Q(P, m);
    if (Q.descriptor().kase.kind != GradedCase::Kind::III) return fail_with("not case (iii): " + describe(P, m));
    if (!Q.is_zero(random_element(rng, P))) return fail_with("nonzero element beyond c_n: " + describe(P, m));
    return std::nullopt;
  });
  return out;
}

std::vector<PropertyResult> run(const std::vector<Property>& props, std::uint64_t seed) {
  std::vector<PropertyResult> out;
  for (const auto& prop : props) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a of the name
    for (char c : prop.name) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    Rng rng(seq);
    PropertyResult res{prop.suite, prop.name, 0, 0, {}};
    for (std::size_t k = 0; k < prop.cases; ++k) {
      std::optional<std::string> verdict;
      try {
        verdict = prop.check(rng);
      } catch (const std::exception& ex) {
        verdict = std::string("exception: ") + ex.what();
      }
      ++res.cases;
      if (verdict) {
        if (res.failures == 0) res.first_failure = "case " + std::to_string(k) + ": " + *verdict;
        ++res.failures;
      }
    }
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace milnor::props
