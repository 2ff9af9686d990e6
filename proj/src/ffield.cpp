#include "milnor/ffield.hpp"

#include <algorithm>
#include <numeric>

namespace milnor {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::NotAPthPower: return "NotAPthPower";
    case Errc::ExponentOverflow: return "ExponentOverflow";
    case Errc::NotClosed: return "NotClosed";
    case Errc::CoefficientNotIntegral: return "CoefficientNotIntegral";
    case Errc::WindowOverflow: return "WindowOverflow";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::MalformedSymbol: return "MalformedSymbol";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::NotEisenstein: return "NotEisenstein";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParamsMismatch: return "ParamsMismatch";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

constexpr std::uint32_t kMaxTableSize = 1u << 22;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Conway polynomials, coefficients c_0..c_f.
struct ShippedModulus {
  std::uint32_t p;
  int f;
  std::vector<std::uint32_t> coeffs;
};

const std::vector<ShippedModulus>& shipped_moduli() {
  static const std::vector<ShippedModulus> table = {
      {2, 2, {1, 1, 1}},       {2, 3, {1, 1, 0, 1}},       {2, 4, {1, 1, 0, 0, 1}},
      {2, 5, {1, 0, 1, 0, 0, 1}}, {3, 2, {2, 2, 1}},       {3, 3, {1, 2, 0, 1}},
      {5, 2, {2, 4, 1}},       {7, 2, {3, 6, 1}},
  };
  return table;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, int f) : FiniteField(p, f, default_modulus(p, f)) {}

FiniteField::FiniteField(std::uint32_t p, int f, std::vector<std::uint32_t> modulus)
    : p_(p), f_(f), modulus_(std::move(modulus)) {
  if (!is_prime(p)) fail(Errc::InvalidParams, "p = " + std::to_string(p) + " is not prime");
  if (f < 1) fail(Errc::InvalidParams, "f must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < f; ++i) {
    q *= p;
    if (q > (f == 1 ? (1ull << 31) : kMaxTableSize))
      fail(Errc::InvalidParams, "field F_{p^f} too large for table arithmetic");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (f == 1) {
    modulus_ = {0, 1};
    if (p_ == 2) {
      gen_ = 1;
    } else {
      auto factors = prime_factors(p_ - 1);
      for (std::uint32_t g = 2; g < p_; ++g) {
        bool ok = std::all_of(factors.begin(), factors.end(),
                              [&](std::uint64_t l) { return pow(Fq{g}, (p_ - 1) / l).v != 1; });
        if (ok) {
          gen_ = g;
          break;
        }
      }
    }
    return;
  }
  if (static_cast<int>(modulus_.size()) != f + 1 || modulus_.back() != 1)
    fail(Errc::InvalidParams, "modulus must be monic of degree f");
  for (auto c : modulus_)
    if (c >= p_) fail(Errc::InvalidParams, "modulus coefficient out of range");
  build_tables();
}

Fq FiniteField::poly_mul(Fq a, Fq b) const {
  auto da = digits(a), db = digits(b);
  std::vector<std::uint64_t> prod(2 * f_ - 1, 0);
  for (int i = 0; i < f_; ++i)
    for (int j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_;
  for (int k = 2 * f_ - 2; k >= f_; --k) {
    std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (int j = 0; j < f_; ++j)
      prod[k - f_ + j] = (prod[k - f_ + j] + (p_ - c) * modulus_[j]) % p_;
  }
  std::vector<std::uint32_t> out(f_);
  for (int i = 0; i < f_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return from_digits(out);
}

void FiniteField::build_tables() {
  const std::uint64_t order = q_ - 1;
  auto factors = prime_factors(order);
  auto slow_pow = [&](Fq a, std::uint64_t k) {
    Fq r = one();
    while (k) {
      if (k & 1) r = poly_mul(r, a);
      a = poly_mul(a, a);
      k >>= 1;
    }
    return r;
  };
  std::optional<std::uint32_t> found;
  for (std::uint32_t g = 2; g < q_ && !found; ++g) {
    if (slow_pow(Fq{g}, order).v != 1) continue;
    bool ok = std::all_of(factors.begin(), factors.end(),
                          [&](std::uint64_t l) { return slow_pow(Fq{g}, order / l).v != 1; });
    if (ok) found = g;
  }
  if (!found) fail(Errc::InvalidParams, "modulus is not irreducible over F_p");
  gen_ = *found;
  exp_.assign(2 * order, 0);
  log_.assign(q_, 0);
  std::vector<bool> seen(q_, false);
  Fq cur = one();
  for (std::uint64_t k = 0; k < order; ++k) {
    if (seen[cur.v]) fail(Errc::InvalidParams, "modulus is not irreducible over F_p");
    seen[cur.v] = true;
    exp_[k] = exp_[k + order] = cur.v;
    log_[cur.v] = static_cast<std::uint32_t>(k);
    cur = poly_mul(cur, Fq{gen_});
  }
}

std::vector<std::uint32_t> FiniteField::default_modulus(std::uint32_t p, int f) {
  if (f == 1) return {0, 1};
  for (const auto& m : shipped_moduli())
    if (m.p == p && m.f == f) return m.coeffs;
  // Least monic polynomial (coefficients read c_{f-1}..c_0 lexicographically)
  // for which x is primitive.
  std::uint64_t q = 1;
  for (int i = 0; i < f; ++i) q *= p;
  if (q > kMaxTableSize) fail(Errc::InvalidParams, "field F_{p^f} too large for table arithmetic");
  auto factors = prime_factors(q - 1);
  std::vector<std::uint32_t> c(f + 1, 0);
  c[f] = 1;
  for (std::uint64_t code = 0; code < q; ++code) {
    std::uint64_t rest = code;
    for (int i = 0; i < f; ++i) {
      c[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (c[0] == 0) continue;
    // Probe x's order with the candidate modulus via a throwaway context.
    try {
      FiniteField probe(p, f, c);
      Fq x{p};
      bool primitive = std::all_of(factors.begin(), factors.end(),
                                   [&](std::uint64_t l) { return probe.pow(x, (q - 1) / l).v != 1; });
      if (primitive) return c;
    } catch (const MathError&) {
    }
  }
  fail(Errc::InvalidParams, "no primitive modulus found");
}

Fq FiniteField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Fq{static_cast<std::uint32_t>(r)};
}

std::vector<std::uint32_t> FiniteField::digits(Fq a) const {
  std::vector<std::uint32_t> d(f_);
  std::uint32_t v = a.v;
  for (int i = 0; i < f_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

Fq FiniteField::from_digits(std::span<const std::uint32_t> d) const {
  std::uint32_t v = 0;
  for (int i = f_ - 1; i >= 0; --i) v = v * p_ + d[i];
  return Fq{v};
}

Fq FiniteField::add(Fq a, Fq b) const {
  if (f_ == 1) return Fq{static_cast<std::uint32_t>((std::uint64_t(a.v) + b.v) % p_)};
  std::uint32_t out = 0, scale = 1, x = a.v, y = b.v;
  for (int i = 0; i < f_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Fq{out};
}

Fq FiniteField::neg(Fq a) const {
  if (f_ == 1) return Fq{a.v == 0 ? 0 : p_ - a.v};
  std::uint32_t out = 0, scale = 1, x = a.v;
  for (int i = 0; i < f_; ++i) {
    std::uint32_t d = x % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    x /= p_;
    scale *= p_;
  }
  return Fq{out};
}

Fq FiniteField::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq FiniteField::mul(Fq a, Fq b) const {
  if (a.v == 0 || b.v == 0) return zero();
  if (f_ == 1) return Fq{static_cast<std::uint32_t>((std::uint64_t(a.v) * b.v) % p_)};
  if (exp_.empty()) return poly_mul(a, b);
  return Fq{exp_[log_[a.v] + log_[b.v]]};
}

Fq FiniteField::pow(Fq a, std::uint64_t k) const {
  Fq r = one();
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

Fq FiniteField::inv(Fq a) const {
  if (a.v == 0) fail(Errc::InvalidParams, "inverse of zero in F_{p^f}");
  if (f_ > 1) return Fq{exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)]};
  return pow(a, q_ - 2);
}

Fq FiniteField::frob_inv(Fq a) const {
  if (f_ == 1) return a;
  std::uint64_t k = 1;
  for (int i = 0; i < f_ - 1; ++i) k *= p_;
  return pow(a, k);
}

Fq FiniteField::frob_power(Fq a, int k) const {
  int steps = ((k % f_) + f_) % f_;
  for (int i = 0; i < steps; ++i) a = frob(a);
  return a;
}

std::uint32_t FiniteField::log(Fq a) const {
  if (a.v == 0) fail(Errc::InvalidParams, "log of zero");
  if (f_ > 1) return log_[a.v];
  std::uint32_t k = 0;
  for (Fq cur = one(); cur != a; cur = mul(cur, Fq{gen_})) ++k;
  return k;
}

Fq FiniteField::gen_pow(std::int64_t k) const {
  std::int64_t order = static_cast<std::int64_t>(q_) - 1;
  std::int64_t r = ((k % order) + order) % order;
  return pow(Fq{gen_}, static_cast<std::uint64_t>(r));
}

// ---------------------------------------------------------------- exponents

Exponent exp_add(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (__builtin_add_overflow(a[i], b[i], &out[i])) fail(Errc::ExponentOverflow, "exponent addition");
  return out;
}

Exponent exp_sub(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (__builtin_sub_overflow(a[i], b[i], &out[i])) fail(Errc::ExponentOverflow, "exponent subtraction");
  return out;
}

Exponent exp_scale(const Exponent& a, std::int64_t k) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (__builtin_mul_overflow(a[i], k, &out[i])) fail(Errc::ExponentOverflow, "exponent scaling");
  return out;
}

bool exp_divisible(const Exponent& a, std::int64_t k) noexcept {
  return std::all_of(a.begin(), a.end(), [k](std::int64_t x) { return x % k == 0; });
}

Exponent exp_div(const Exponent& a, std::int64_t k) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] / k;
  return out;
}

bool exp_is_zero(const Exponent& a) noexcept {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t exp_norm(const Exponent& a) noexcept {
  std::int64_t m = 0;
  for (auto x : a) m = std::max(m, x < 0 ? -x : x);
  return m;
}

// ---------------------------------------------------------------- contexts

ResidueField::ResidueField(FiniteField field, int r) : field_(std::move(field)), r_(r) {
  if (r < 0 || r > 16) fail(Errc::InvalidParams, "r must lie in [0, 16]");
}

std::shared_ptr<const ResidueField> ResidueField::make(std::uint32_t p, int f, int r) {
  return std::make_shared<const ResidueField>(FiniteField(p, f), r);
}

std::shared_ptr<const ResidueField> ResidueField::make(std::uint32_t p, int f, int r,
                                                       std::vector<std::uint32_t> modulus) {
  return std::make_shared<const ResidueField>(FiniteField(p, f, std::move(modulus)), r);
}

void require_same_context(const ResidueFieldPtr& a, const ResidueFieldPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) fail(Errc::ContextMismatch, "operands live in different residue fields");
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(ResidueFieldPtr ctx) : ctx_(std::move(ctx)) {}

LaurentPoly LaurentPoly::constant(ResidueFieldPtr ctx, Fq c) {
  LaurentPoly out(ctx);
  out.add_term(Exponent(ctx->r(), 0), c);
  return out;
}

LaurentPoly LaurentPoly::monomial(ResidueFieldPtr ctx, Exponent alpha, Fq c) {
  if (static_cast<int>(alpha.size()) != ctx->r()) fail(Errc::ContextMismatch, "exponent length differs from r");
  LaurentPoly out(ctx);
  out.add_term(alpha, c);
  return out;
}

LaurentPoly LaurentPoly::variable(ResidueFieldPtr ctx, int index) {
  if (index < 1 || index > ctx->r()) fail(Errc::InvalidParams, "variable index out of range");
  Exponent alpha(ctx->r(), 0);
  alpha[index - 1] = 1;
  return monomial(ctx, alpha, ctx->field().one());
}

Fq LaurentPoly::coeff(const Exponent& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Fq{0} : it->second;
}

void LaurentPoly::add_term(const Exponent& alpha, Fq c) {
  if (c.v == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second = field().add(it->second, c);
    if (it->second.v == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  require_same_context(ctx_, o.ctx_);
  LaurentPoly out = *this;
  for (const auto& [alpha, c] : o.terms_) out.add_term(alpha, c);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(ctx_);
  for (const auto& [alpha, c] : terms_) out.terms_.emplace(alpha, field().neg(c));
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  require_same_context(ctx_, o.ctx_);
  LaurentPoly out(ctx_);
  for (const auto& [a, c] : terms_)
    for (const auto& [b, d] : o.terms_) out.add_term(exp_add(a, b), field().mul(c, d));
  return out;
}

LaurentPoly LaurentPoly::scaled(Fq c) const {
  LaurentPoly out(ctx_);
  if (c.v == 0) return out;
  for (const auto& [alpha, d] : terms_) out.terms_.emplace(alpha, field().mul(c, d));
  return out;
}

LaurentPoly LaurentPoly::pow(std::uint64_t k) const {
  LaurentPoly result = constant(ctx_, field().one());
  LaurentPoly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::frobenius() const {
  LaurentPoly out(ctx_);
  const auto p = static_cast<std::int64_t>(ctx_->p());
  for (const auto& [alpha, c] : terms_) out.terms_.emplace(exp_scale(alpha, p), field().frob(c));
  return out;
}

bool LaurentPoly::is_pth_power() const noexcept {
  const auto p = static_cast<std::int64_t>(ctx_->p());
  return std::all_of(terms_.begin(), terms_.end(),
                     [p](const auto& kv) { return exp_divisible(kv.first, p); });
}

LaurentPoly LaurentPoly::pth_root() const {
  if (!is_pth_power()) fail(Errc::NotAPthPower, "some exponent is not divisible by p");
  LaurentPoly out(ctx_);
  const auto p = static_cast<std::int64_t>(ctx_->p());
  for (const auto& [alpha, c] : terms_) out.terms_.emplace(exp_div(alpha, p), field().frob_inv(c));
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return *ctx_ == *o.ctx_ && terms_ == o.terms_;
}

}  // namespace milnor
