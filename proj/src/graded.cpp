#include "milnor/graded.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace milnor {

namespace {

std::int64_t ipow(std::int64_t b, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i)
    if (__builtin_mul_overflow(r, b, &r)) fail(Errc::InvalidParams, "integer overflow in p-power");
  return r;
}

DiffForm zero_form(const CDVFParams& params, int degree) { return DiffForm(params.context(), degree); }

// Enumerates the box |alpha_i| <= radius in lexicographic order.
std::vector<Exponent> box(int r, std::int64_t radius, std::size_t cap) {
  std::size_t count = 1;
  for (int i = 0; i < r; ++i) {
    count *= static_cast<std::size_t>(2 * radius + 1);
    if (count > cap) fail(Errc::WindowOverflow, "degree window exceeds the configured slice cap");
  }
  std::vector<Exponent> out;
  out.reserve(count);
  Exponent cur(r, -radius);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(cur);
    for (int i = r - 1; i >= 0; --i) {
      if (cur[i] < radius) {
        ++cur[i];
        break;
      }
      cur[i] = -radius;
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- params

CDVFParams::CDVFParams(ResidueFieldPtr ctx, int e, int n, int q, LaurentPoly a)
    : ctx_(std::move(ctx)), e_(e), n_(n), q_(q), a_(std::move(a)) {
  if (!ctx_) fail(Errc::InvalidParams, "missing residue field");
  if (e_ < 1) fail(Errc::InvalidParams, "e must be positive");
  if (n_ < 1) fail(Errc::InvalidParams, "n must be positive");
  if (q_ < 1) fail(Errc::InvalidParams, "q must be at least 1");
  const auto pm1 = static_cast<std::int64_t>(p() - 1);
  if (e_ % pm1 != 0)
    fail(Errc::InvalidParams, "e_0 = e/(p-1) is not an integer (e = " + std::to_string(e_) +
                                  ", p = " + std::to_string(p()) + ")");
  const std::int64_t need = ipow(p(), n_ - 1) * pm1;
  if (e_ % need != 0)
    fail(Errc::InvalidParams, "p^(n-1)(p-1) = " + std::to_string(need) + " does not divide e = " +
                                  std::to_string(e_) + "; K cannot contain a primitive p^n-th root of unity");
  require_same_context(ctx_, a_.context());
  if (a_.is_zero()) fail(Errc::InvalidParams, "a (the residue of p/pi^e) must be nonzero");
}

std::int64_t CDVFParams::threshold(int i) const noexcept {
  return i == 0 ? 0 : static_cast<std::int64_t>(i) * e_ + e0();
}

int p_adic_valuation(std::int64_t m, std::int64_t p) noexcept {
  if (m == 0) return 0;
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

std::string to_string(GradedCase::Kind k) {
  switch (k) {
    case GradedCase::Kind::I: return "I";
    case GradedCase::Kind::II: return "II";
    case GradedCase::Kind::III: return "III";
    case GradedCase::Kind::OutOfRange: return "OutOfRange";
  }
  return "?";
}

std::string to_string(GrDescriptor::Shape s) {
  switch (s) {
    case GrDescriptor::Shape::CokerTheta: return "coker-theta";
    case GrDescriptor::Shape::ModZ: return "mod-Z";
    case GrDescriptor::Shape::OnePlusAC: return "mod-(1+aC)Z";
    case GrDescriptor::Shape::Zero: return "zero";
  }
  return "?";
}

GradedCase classify(const CDVFParams& params, std::int64_t m) {
  GradedCase out;
  if (m <= 0) return out;
  out.s = p_adic_valuation(m, params.p());
  const int n = params.n();
  if (m > params.threshold(n)) {
    out.kind = GradedCase::Kind::III;
    return out;
  }
  for (int i = 1; i <= n; ++i)
    if (m == params.threshold(i)) {
      out.kind = GradedCase::Kind::II;
      out.i = i;
      return out;
    }
  for (int i = 0; i < n; ++i)
    if (params.threshold(i) < m && m < params.threshold(i + 1)) {
      out.kind = GradedCase::Kind::I;
      out.i = i;
      return out;
    }
  fail(Errc::PreconditionViolated, "classification fell through");  // unreachable
}

GrDescriptor descriptor(const CDVFParams& params, std::int64_t m) {
  GrDescriptor d;
  d.m = m;
  d.q = params.q();
  d.kase = classify(params, m);
  const int n = params.n();
  switch (d.kase.kind) {
    case GradedCase::Kind::OutOfRange:
      fail(Errc::OutOfRange, "gr^m is only described for m >= 1 (got m = " + std::to_string(m) + ")");
    case GradedCase::Kind::III:
      d.shape = GrDescriptor::Shape::Zero;
      break;
    case GradedCase::Kind::II:
      d.shape = GrDescriptor::Shape::OnePlusAC;
      // C is only defined on closed forms, so the top case uses Z_1.
      d.tower_level = std::max(n - d.kase.i, 1);
      break;
    case GradedCase::Kind::I: {
      const int i = d.kase.i, s = d.kase.s;
      if (n - i > s) {
        d.shape = GrDescriptor::Shape::CokerTheta;
        d.tower_level = s;
        const std::int64_t num = m - static_cast<std::int64_t>(i) * params.e();
        const std::int64_t ps = ipow(params.p(), s);
        if (num % ps != 0)
          fail(Errc::CoefficientNotIntegral, "(m - i e)/p^s = " + std::to_string(num) + "/" + std::to_string(ps));
        const auto p = static_cast<std::int64_t>(params.p());
        std::int64_t c = ((num / ps) % p + p) % p;
        if (params.q() % 2 == 1) c = (p - c) % p;
        d.theta_coeff = static_cast<std::uint32_t>(c);
      } else {
        d.shape = GrDescriptor::Shape::ModZ;
        d.tower_level = n - i;
      }
      break;
    }
  }
  return d;
}

GrElement zero_element(const CDVFParams& params) {
  return {zero_form(params, params.q() - 1), zero_form(params, params.q() - 2)};
}

namespace {

GrElement theta_for(const CDVFParams& params, const GrDescriptor& desc, const DiffForm& w) {
  if (desc.shape != GrDescriptor::Shape::CokerTheta)
    fail(Errc::PreconditionViolated, "theta is only defined in case (i) with n - i > s");
  if (w.degree() != params.q() - 2) fail(Errc::ContextMismatch, "theta takes a form of degree q - 2");
  require_same_context(params.context(), w.context());
  const int s = desc.tower_level;
  const auto& F = params.context()->field();
  return {inv_cartier_power(d(w), s), inv_cartier_power(w, s).scaled(F.from_int(desc.theta_coeff))};
}

}  // namespace

GrElement theta(const CDVFParams& params, std::int64_t m, const DiffForm& w) {
  return theta_for(params, descriptor(params, m), w);
}

DiffForm one_plus_aC(const CDVFParams& params, const DiffForm& z) {
  require_same_context(params.context(), z.context());
  return z + cartier(z).times(params.a());
}

// ---------------------------------------------------------------- symbols

GrElement rho_eval(const CDVFParams& params, const SymbolExpr& sym) {
  const auto& ctx = params.context();
  const int q = params.q(), r = params.r();
  const auto p = static_cast<std::int64_t>(params.p());
  const auto& F = ctx->field();
  if (sym.u.is_zero()) fail(Errc::MalformedSymbol, "the unit 1 + pi^m u needs u != 0");
  require_same_context(ctx, sym.u.context());
  if (static_cast<int>(sym.tail.size()) != q - 1)
    fail(Errc::MalformedSymbol, "symbol has " + std::to_string(sym.tail.size() + 1) + " entries, expected q = " +
                                    std::to_string(q));
  std::optional<std::size_t> prime_pos;
  for (std::size_t k = 0; k < sym.tail.size(); ++k) {
    const auto& entry = sym.tail[k];
    if (entry.is_prime) {
      if (prime_pos) fail(Errc::MalformedSymbol, "at most one entry may be the prime element");
      prime_pos = k;
      continue;
    }
    if (entry.coeff.v == 0) fail(Errc::MalformedSymbol, "symbol entries must be nonzero");
    if (static_cast<int>(entry.alpha.size()) != r) fail(Errc::MalformedSymbol, "entry exponent length differs from r");
  }
  auto dlog_of = [&](const SymbolEntry& entry) {
    // dlog(c t^alpha) = sum alpha_i dlog t_i; dc/c vanishes for c in the perfect field F_{p^f}.
    DiffForm w(ctx, 1);
    for (int i = 0; i < r; ++i) {
      const std::int64_t ai = ((entry.alpha[i] % p) + p) % p;
      if (ai != 0) w.add_term(Exponent(r, 0), IndexSet{1u << i}, F.from_int(ai));
    }
    return w;
  };
  DiffForm acc = DiffForm::function(sym.u);
  if (prime_pos) {
    // Move pi to the last slot; each transposition flips the sign.
    const std::size_t swaps = sym.tail.size() - 1 - *prime_pos;
    if (swaps % 2 == 1) acc = -acc;
  }
  for (std::size_t k = 0; k < sym.tail.size(); ++k)
    if (!sym.tail[k].is_prime) acc = wedge(acc, dlog_of(sym.tail[k]));
  GrElement out = zero_element(params);
  if (prime_pos)
    out.second = acc;
  else
    out.first = acc;
  return out;
}

// ---------------------------------------------------------------- quotient

std::optional<std::uint64_t> GroupOrder::value() const noexcept {
  std::uint64_t v = 1;
  for (int i = 0; i < log_p; ++i)
    if (__builtin_mul_overflow(v, std::uint64_t{p}, &v)) return std::nullopt;
  return v;
}

GradedQuotient::GradedQuotient(CDVFParams params, std::int64_t m, QuotientOptions opts)
    : params_(std::move(params)), desc_(milnor::descriptor(params_, m)), opts_(opts), prime_field_(params_.p(), 1) {
  if (desc_.shape == GrDescriptor::Shape::OnePlusAC) {
    std::int64_t D = 0;
    for (const auto& [delta, c] : params_.a().terms()) D = std::max(D, exp_norm(delta));
    const std::int64_t p = params_.p();
    core_radius_ = (p * D + (p - 2)) / (p - 1);  // ceil(p D / (p - 1))
  }
}

void GradedQuotient::check_element(const GrElement& el) const {
  require_same_context(params_.context(), el.first.context());
  require_same_context(params_.context(), el.second.context());
  if (el.first.degree() != params_.q() - 1 || el.second.degree() != params_.q() - 2)
    fail(Errc::ContextMismatch, "element slots must have degrees q-1 and q-2");
}

GrElement GradedQuotient::reduce(const GrElement& el) const {
  check_element(el);
  switch (desc_.shape) {
    case GrDescriptor::Shape::Zero: return zero_element(params_);
    case GrDescriptor::Shape::CokerTheta: return reduce_coker_theta(el);
    case GrDescriptor::Shape::ModZ: return {reduce_mod_z(el.first), reduce_mod_z(el.second)};
    case GrDescriptor::Shape::OnePlusAC: return {reduce_one_plus_aC(el.first), reduce_one_plus_aC(el.second)};
  }
  return el;
}

DiffForm GradedQuotient::reduce_mod_z(const DiffForm& w) const { return nf_mod(w, Tower::Z, desc_.tower_level); }

Subspace GradedQuotient::coker_slice_relations(const Exponent& gamma) const {
  const auto& ctx = *params_.context();
  const auto& F = ctx.field();
  const int q = params_.q(), r = params_.r(), s = desc_.tower_level;
  const std::size_t d1 = subsets(r, q - 1).size(), d2 = subsets(r, q - 2).size();
  Subspace rel(F, d1 + d2);
  const auto b1 = tower_slice(ctx, gamma, q - 1, Tower::B, s);
  for (const auto& row : b1.basis()) {
    FqVector v(d1 + d2, Fq{0});
    std::copy(row.begin(), row.end(), v.begin());
    rel.insert(std::move(v));
  }
  const auto b2 = tower_slice(ctx, gamma, q - 2, Tower::B, s);
  for (const auto& row : b2.basis()) {
    FqVector v(d1 + d2, Fq{0});
    std::copy(row.begin(), row.end(), v.begin() + static_cast<std::ptrdiff_t>(d1));
    rel.insert(std::move(v));
  }
  const std::int64_t ps = ipow(params_.p(), s);
  if (d2 > 0 && exp_divisible(gamma, ps)) {
    // theta(lambda w) = lambda^{p^s} theta(w): the image is the F-span of theta on basis monomials.
    const Exponent alpha = exp_div(gamma, ps);
    for (auto set : subsets(r, q - 2)) {
      auto img = theta_for(params_, desc_, DiffForm::monomial(params_.context(), alpha, set, F.one()));
      FqVector v(d1 + d2, Fq{0});
      auto a1 = img.first.slice(gamma), a2 = img.second.slice(gamma);
      std::copy(a1.begin(), a1.end(), v.begin());
      std::copy(a2.begin(), a2.end(), v.begin() + static_cast<std::ptrdiff_t>(d1));
      rel.insert(std::move(v));
    }
  }
  return rel;
}

int GradedQuotient::coker_slice_log(const Exponent& gamma) const {
  const auto rel = coker_slice_relations(gamma);
  return params_.f() * static_cast<int>(rel.ambient_dim() - rel.dim());
}

GrElement GradedQuotient::reduce_coker_theta(const GrElement& el) const {
  std::set<Exponent> support;
  for (const auto& [g, v] : el.first.slices()) support.insert(g);
  for (const auto& [g, v] : el.second.slices()) support.insert(g);
  GrElement out = zero_element(params_);
  const std::size_t d1 = el.first.slice_dim();
  for (const auto& gamma : support) {
    FqVector v = el.first.slice(gamma);
    auto v2 = el.second.slice(gamma);
    v.insert(v.end(), v2.begin(), v2.end());
    v = coker_slice_relations(gamma).reduce(std::move(v));
    out.first.add_slice(gamma, FqVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(d1)));
    out.second.add_slice(gamma, FqVector(v.begin() + static_cast<std::ptrdiff_t>(d1), v.end()));
  }
  return out;
}

std::vector<Exponent> GradedQuotient::core_neighbours(const Exponent& g) const {
  const auto p = static_cast<std::int64_t>(params_.p());
  std::vector<Exponent> out;
  for (const auto& [delta, c] : params_.a().terms()) {
    if (exp_divisible(g, p)) out.push_back(exp_add(exp_div(g, p), delta));
    auto back = exp_scale(exp_sub(g, delta), p);
    if (exp_norm(back) <= core_radius_) out.push_back(std::move(back));
  }
  return out;
}

GradedQuotient::CoreComponent GradedQuotient::core_component(const Exponent& seed, int degree) const {
  const auto& ctx = *params_.context();
  const auto& F = ctx.field();
  const auto p = static_cast<std::int64_t>(params_.p());
  const int f = params_.f();
  const std::size_t dim = subsets(params_.r(), degree).size();

  std::set<Exponent> seen{seed};
  std::deque<Exponent> queue{seed};
  while (!queue.empty()) {
    Exponent g = queue.front();
    queue.pop_front();
    for (auto& h : core_neighbours(g))
      if (seen.insert(h).second) {
        if (seen.size() > opts_.slice_cap)
          fail(Errc::WindowOverflow, "(1+aC) core component exceeds the configured slice cap");
        queue.push_back(std::move(h));
      }
  }
  CoreComponent comp{std::vector<Exponent>(seen.begin(), seen.end()), {}, dim, f,
                     Subspace(prime_field_, seen.size() * dim * f)};
  for (std::size_t k = 0; k < comp.degrees.size(); ++k) comp.index.emplace(comp.degrees[k], k);

  const int t = desc_.tower_level;
  for (const auto& g : comp.degrees) {
    const auto zt = tower_slice(ctx, g, degree, Tower::Z, t);
    for (const auto& b : zt.basis())
      for (int j = 0; j < f; ++j) {
        // x^j (encoded p^j) runs through an F_p-basis of F_{p^f}; (1+aC) is only additive.
        const Fq lambda{static_cast<std::uint32_t>(ipow(p, j))};
        FqVector zb(dim);
        for (std::size_t k = 0; k < dim; ++k) zb[k] = F.mul(lambda, b[k]);
        FqVector gen(comp.coords(), Fq{0});
        comp.scatter(gen, g, zb, F, prime_field_);
        if (exp_divisible(g, p)) {
          const Exponent base = exp_div(g, p);
          for (const auto& [delta, c] : params_.a().terms()) {
            FqVector ac(dim);
            for (std::size_t k = 0; k < dim; ++k) ac[k] = F.mul(c, F.frob_inv(zb[k]));
            comp.scatter(gen, exp_add(base, delta), ac, F, prime_field_);
          }
        }
        comp.relations.insert(std::move(gen));
      }
  }
  return comp;
}

void GradedQuotient::CoreComponent::scatter(FqVector& vec, const Exponent& g, const FqVector& vals,
                                            const FiniteField& F, const FiniteField& Fp) const {
  const std::size_t off = index.at(g) * slice_dim * f;
  for (std::size_t k = 0; k < slice_dim; ++k) {
    auto dg = F.digits(vals[k]);
    for (int j = 0; j < f; ++j) {
      auto& slot = vec[off + k * f + j];
      slot = Fp.add(slot, Fq{dg[j]});
    }
  }
}

FqVector GradedQuotient::CoreComponent::gather(const FqVector& vec, const Exponent& g, const FiniteField& F) const {
  const std::size_t off = index.at(g) * slice_dim * f;
  FqVector out(slice_dim);
  std::vector<std::uint32_t> dg(f);
  for (std::size_t k = 0; k < slice_dim; ++k) {
    for (int j = 0; j < f; ++j) dg[j] = vec[off + k * f + j].v;
    out[k] = F.from_digits(dg);
  }
  return out;
}

DiffForm GradedQuotient::reduce_one_plus_aC(const DiffForm& w) const {
  const auto& ctx = *params_.context();
  const auto& F = ctx.field();
  const int degree = w.degree();
  const int t = desc_.tower_level;
  const auto p = static_cast<std::int64_t>(params_.p());
  DiffForm out(w.context(), degree);
  if (w.slice_dim() == 0) return out;
  const std::size_t dim = w.slice_dim();

  // Descent: outside the core box, split each slice into its Z_t part z and
  // the canonical complement, and trade z for -aC(z), which lives in strictly
  // smaller sup-norm.
  std::map<Exponent, FqVector> work(w.slices().begin(), w.slices().end());
  auto by_norm_desc = [](const Exponent& x, const Exponent& y) {
    auto nx = exp_norm(x), ny = exp_norm(y);
    return nx != ny ? nx > ny : x < y;
  };
  std::set<Exponent, decltype(by_norm_desc)> pending(by_norm_desc);
  for (const auto& [g, v] : work) pending.insert(g);
  while (!pending.empty() && exp_norm(*pending.begin()) > core_radius_) {
    const Exponent gamma = *pending.begin();
    pending.erase(pending.begin());
    FqVector v = std::move(work[gamma]);
    work.erase(gamma);
    const FqVector nf = tower_slice(ctx, gamma, degree, Tower::Z, t).reduce(v);
    out.add_slice(gamma, nf);
    if (!exp_divisible(gamma, p)) continue;  // C kills Z_t here
    FqVector z(dim);
    for (std::size_t k = 0; k < dim; ++k) z[k] = F.frob_inv(F.sub(v[k], nf[k]));
    if (is_zero_vector(z)) continue;
    const Exponent base = exp_div(gamma, p);
    for (const auto& [delta, c] : params_.a().terms()) {
      const Exponent target = exp_add(base, delta);
      auto [it, inserted] = work.try_emplace(target, FqVector(dim, Fq{0}));
      for (std::size_t k = 0; k < dim; ++k) it->second[k] = F.sub(it->second[k], F.mul(c, z[k]));
      pending.insert(target);
    }
  }

  // Core: exact F_p-linear reduction modulo (1+aC)Z_t on each connected
  // component of the degree graph gamma -> gamma/p + delta.
  std::set<Exponent> remaining;
  for (const auto& [g, v] : work)
    if (!is_zero_vector(v)) remaining.insert(g);
  while (!remaining.empty()) {
    const auto comp = core_component(*remaining.begin(), degree);
    FqVector vec(comp.coords(), Fq{0});
    for (const auto& g : comp.degrees) {
      remaining.erase(g);
      auto it = work.find(g);
      if (it != work.end()) comp.scatter(vec, g, it->second, F, prime_field_);
    }
    vec = comp.relations.reduce(std::move(vec));
    for (const auto& g : comp.degrees) out.add_slice(g, comp.gather(vec, g, F));
  }
  return out;
}

int GradedQuotient::core_log(int degree) const {
  if (subsets(params_.r(), degree).empty()) return 0;
  int total = 0;
  std::set<Exponent> done;
  for (const auto& g : box(params_.r(), core_radius_, opts_.slice_cap)) {
    if (done.count(g)) continue;
    const auto comp = core_component(g, degree);
    done.insert(comp.degrees.begin(), comp.degrees.end());
    total += static_cast<int>(comp.coords() - comp.relations.dim());
  }
  return total;
}

GradedSize GradedQuotient::size(std::int64_t window) const {
  GradedSize out;
  const auto p = params_.p();
  const int q = params_.q(), r = params_.r(), f = params_.f();
  if (desc_.shape == GrDescriptor::Shape::Zero) {
    out.order = GroupOrder{p, 0};
    return out;
  }
  const auto& ctx = *params_.context();
  auto mod_tower_log = [&](const Exponent& g) {
    int total = 0;
    for (int deg : {q - 1, q - 2}) {
      const std::size_t dim = subsets(r, deg).size();
      if (dim == 0) continue;
      total += f * static_cast<int>(dim - tower_slice(ctx, g, deg, Tower::Z, desc_.tower_level).dim());
    }
    return total;
  };
  if (desc_.shape == GrDescriptor::Shape::OnePlusAC) {
    out.core_radius = core_radius_;
    out.core_log_p = core_log(q - 1) + core_log(q - 2);
  }
  if (r == 0) {
    const Exponent g;
    int log = 0;
    switch (desc_.shape) {
      case GrDescriptor::Shape::CokerTheta: log = coker_slice_log(g); break;
      case GrDescriptor::Shape::ModZ: log = mod_tower_log(g); break;
      case GrDescriptor::Shape::OnePlusAC: log = *out.core_log_p; break;
      case GrDescriptor::Shape::Zero: break;
    }
    out.order = GroupOrder{p, log};
    return out;
  }
  for (const auto& g : box(r, window, opts_.slice_cap)) {
    switch (desc_.shape) {
      case GrDescriptor::Shape::CokerTheta: out.slice_log_p[g] = coker_slice_log(g); break;
      case GrDescriptor::Shape::ModZ: out.slice_log_p[g] = mod_tower_log(g); break;
      case GrDescriptor::Shape::OnePlusAC:
        if (exp_norm(g) > core_radius_) out.slice_log_p[g] = mod_tower_log(g);
        break;
      case GrDescriptor::Shape::Zero: break;
    }
  }
  return out;
}

// ---------------------------------------------------------------- Lemma 1

bool Lemma1Report::consistent() const noexcept {
  return case_shift_ok && orders_equal.value_or(true) && slices_equal.value_or(true) && core_equal.value_or(true) &&
         probe_mismatches.empty();
}

Lemma1Report lemma1_consistency(const CDVFParams& params, std::int64_t m, const std::vector<GrElement>& probes,
                                std::int64_t window, QuotientOptions opts) {
  if (params.n() <= 1) fail(Errc::PreconditionViolated, "multiplication by p needs n > 1");
  if (m <= static_cast<std::int64_t>(params.e()) + params.e0())
    fail(Errc::PreconditionViolated, "multiplication by p needs m > e + e_0 = " +
                                         std::to_string(params.e() + params.e0()));
  Lemma1Report rep;
  rep.m = m;
  rep.n = params.n();
  GradedQuotient upper(params, m, opts);
  GradedQuotient lower(params.with_level(params.n() - 1), m - params.e(), opts);
  rep.upper = upper.descriptor();
  rep.lower = lower.descriptor();

  const auto& U = rep.upper;
  const auto& L = rep.lower;
  const bool indexed = U.kase.kind == GradedCase::Kind::I || U.kase.kind == GradedCase::Kind::II;
  rep.case_shift_ok = U.kase.kind == L.kase.kind && (!indexed || L.kase.i == U.kase.i - 1) && U.shape == L.shape &&
                      U.tower_level == L.tower_level && U.theta_coeff == L.theta_coeff;

  const auto su = upper.size(window), sl = lower.size(window);
  if (params.r() == 0) {
    rep.upper_order = su.order;
    rep.lower_order = sl.order;
    rep.orders_equal = su.order->log_p == sl.order->log_p;
  } else {
    rep.slices_equal = true;
    for (const auto& [g, v] : su.slice_log_p) {
      auto it = sl.slice_log_p.find(g);
      if (it == sl.slice_log_p.end() || it->second != v) {
        rep.slices_equal = false;
        rep.slice_mismatches.push_back(g);
      }
    }
    if (su.slice_log_p.size() != sl.slice_log_p.size()) rep.slices_equal = false;
    if (su.core_log_p || sl.core_log_p) rep.core_equal = su.core_log_p == sl.core_log_p;
  }
  for (std::size_t k = 0; k < probes.size(); ++k)
    if (upper.is_zero(probes[k]) != lower.is_zero(probes[k])) rep.probe_mismatches.push_back(k);
  return rep;
}

}  // namespace milnor
