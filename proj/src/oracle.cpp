#include "milnor/oracle.hpp"

#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace milnor::oracle {

namespace {

int vp(std::int64_t v, std::int64_t p) {
  if (v == 0) return std::numeric_limits<int>::max();
  int k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

int vp_u(std::uint64_t v, std::uint64_t p) {
  if (v == 0) return std::numeric_limits<int>::max();
  int k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::int64_t parse_int(const std::string& s, const std::string& key) {
  try {
    std::size_t used = 0;
    const auto v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(Errc::ParseError, "fixture key '" + key + "': not an integer: '" + s + "'");
  }
}

// Digit count of coordinate j of the pi-adic expansion modulo pi^N.
int coord_precision(int N, int e, int j) { return N - j <= 0 ? 0 : (N - j + e - 1) / e; }

}  // namespace

// ---------------------------------------------------------------- fixtures

void EisensteinPoly::validate() const {
  if (!is_prime(p)) fail(Errc::InvalidParams, "prime " + std::to_string(p) + " is not prime");
  if (f < 1) fail(Errc::InvalidParams, "f must be positive");
  if (coeffs.size() < 2) fail(Errc::NotEisenstein, "polynomial must have degree at least 1");
  if (coeffs.back() != 1) fail(Errc::NotEisenstein, "polynomial must be monic");
  const auto P = static_cast<std::int64_t>(p);
  if (vp(coeffs[0], P) != 1)
    fail(Errc::NotEisenstein, "constant term " + std::to_string(coeffs[0]) + " must have valuation exactly 1");
  for (int i = 1; i < e(); ++i)
    if (coeffs[i] % P != 0)
      fail(Errc::NotEisenstein, "coefficient c_" + std::to_string(i) + " = " + std::to_string(coeffs[i]) +
                                    " is not divisible by p");
}

EisensteinPoly EisensteinPoly::parse(std::string_view text) {
  EisensteinPoly out;
  bool have_p = false, have_c = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail(Errc::ParseError, "fixture line " + std::to_string(lineno) + ": expected 'key: value'");
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    if (key == "name") {
      out.name = value;
    } else if (key == "prime") {
      const auto v = parse_int(value, key);
      if (v < 2 || v > (1ll << 31)) fail(Errc::InvalidParams, "prime out of range");
      out.p = static_cast<std::uint32_t>(v);
      have_p = true;
    } else if (key == "f") {
      out.f = static_cast<int>(parse_int(value, key));
    } else if (key == "n") {
      out.n = static_cast<int>(parse_int(value, key));
    } else if (key == "coeffs") {
      std::istringstream vs(value);
      std::string tok;
      while (vs >> tok) out.coeffs.push_back(parse_int(tok, key));
      have_c = true;
    } else {
      fail(Errc::ParseError, "fixture line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!have_p) fail(Errc::ParseError, "fixture is missing 'prime'");
  if (!have_c) fail(Errc::ParseError, "fixture is missing 'coeffs'");
  out.validate();
  return out;
}

EisensteinPoly EisensteinPoly::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open fixture '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

// ---------------------------------------------------------------- O_K / pi^N

LocalField::LocalField(EisensteinPoly poly, int N) : poly_(std::move(poly)), F_(poly_.p, poly_.f), N_(N) {
  poly_.validate();
  if (N_ < 2) fail(Errc::PreconditionViolated, "cutoff N must be at least 2");
  const int e = poly_.e(), f = poly_.f;
  const std::uint64_t p = poly_.p;
  M_ = (N_ + e - 1) / e + 2;
  mod_ = 1;
  for (int i = 0; i < M_; ++i)
    if (__builtin_mul_overflow(mod_, p, &mod_) || mod_ > (std::uint64_t{1} << 62))
      fail(Errc::TooLarge, "p^M exceeds 62 bits");
  for (int l = 0; l < f; ++l) h_.push_back(F_.modulus()[l] % mod_);
  for (auto c : poly_.coeffs) {
    const auto m = static_cast<std::int64_t>(mod_);
    c_.push_back(static_cast<std::uint64_t>(((c % m) + m) % m));
  }

  // 1-unit code: b_0 contributes p^{prec-1} per coordinate (b_0 = 0 mod p), the rest p^{prec}.
  int total = 0;
  for (int j = 0; j < e; ++j)
    for (int l = 0; l < f; ++l) {
      const int k = std::max(coord_precision(N_, e, j) - (j == 0 ? 1 : 0), 0);
      radix_log_.push_back(k);
      total += k;
    }
  unit_count_ = 1;
  for (int i = 0; i < total; ++i)
    if (__builtin_mul_overflow(unit_count_, p, &unit_count_)) {
      index_fits_ = false;
      unit_count_ = std::numeric_limits<std::uint64_t>::max();
      break;
    }

  // pi^e = p * eps with eps a unit; a is the inverse residue of eps.
  Elem pe = pow(pi(), static_cast<std::uint64_t>(e));
  Elem eps(pe.size());
  for (std::size_t k = 0; k < pe.size(); ++k) {
    if (pe[k] % p != 0) fail(Errc::NotEisenstein, "pi^e is not divisible by p");
    eps[k] = pe[k] / p;
  }
  a_res_ = F_.inv(residue(eps));
}

std::uint64_t LocalField::mulmod(std::uint64_t a, std::uint64_t b) const {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod_);
}

std::uint64_t LocalField::ppow(int k) const {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= poly_.p;
  return r;
}

LocalField::Elem LocalField::zero() const { return Elem(static_cast<std::size_t>(e() * f()), 0); }

LocalField::Elem LocalField::one() const { return from_int(1); }

LocalField::Elem LocalField::pi() const {
  Elem out = zero();
  if (e() == 1) {
    // pi = -c_0
    out[0] = (mod_ - c_[0]) % mod_;
  } else {
    out[static_cast<std::size_t>(f())] = 1;
  }
  return out;
}

LocalField::Elem LocalField::from_int(std::int64_t v) const {
  Elem out = zero();
  const auto m = static_cast<std::int64_t>(mod_);
  out[0] = static_cast<std::uint64_t>(((v % m) + m) % m);
  return out;
}

LocalField::Elem LocalField::lift(Fq c) const {
  Elem out = zero();
  const auto dg = F_.digits(c);
  for (int l = 0; l < f(); ++l) out[l] = dg[l];
  return out;
}

LocalField::Elem LocalField::teichmuller(Fq c) const {
  Elem y = lift(c);
  const auto q = static_cast<std::uint64_t>(F_.size());
  for (int k = 0; k <= M_; ++k) y = pow(y, q);
  return y;
}

LocalField::Elem LocalField::add(const Elem& a, const Elem& b) const {
  Elem out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = (a[k] + b[k]) % mod_;
  return out;
}

LocalField::Elem LocalField::sub(const Elem& a, const Elem& b) const {
  Elem out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = (a[k] + mod_ - b[k]) % mod_;
  return out;
}

// out += a * b in W.
void LocalField::w_mul_acc(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b) const {
  const int f = poly_.f;
  std::vector<std::uint64_t> tmp(static_cast<std::size_t>(2 * f - 1), 0);
  for (int i = 0; i < f; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < f; ++j) tmp[i + j] = (tmp[i + j] + mulmod(a[i], b[j])) % mod_;
  }
  for (int k = 2 * f - 2; k >= f; --k) {
    const auto t = tmp[k];
    if (t == 0) continue;
    for (int l = 0; l < f; ++l) tmp[k - f + l] = (tmp[k - f + l] + mod_ - mulmod(t, h_[l])) % mod_;
  }
  for (int l = 0; l < f; ++l) out[l] = (out[l] + tmp[l]) % mod_;
}

LocalField::Elem LocalField::mul(const Elem& a, const Elem& b) const {
  const int e = poly_.e(), f = poly_.f;
  std::vector<std::uint64_t> prod(static_cast<std::size_t>((2 * e - 1) * f), 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) w_mul_acc(&prod[(i + j) * f], &a[i * f], &b[j * f]);
  // pi^k = -sum_i c_i pi^{k-e+i}
  for (int k = 2 * e - 2; k >= e; --k)
    for (int l = 0; l < f; ++l) {
      const auto t = prod[k * f + l];
      if (t == 0) continue;
      prod[k * f + l] = 0;
      for (int i = 0; i < e; ++i) {
        auto& slot = prod[(k - e + i) * f + l];
        slot = (slot + mod_ - mulmod(t, c_[i])) % mod_;
      }
    }
  prod.resize(static_cast<std::size_t>(e * f));
  return prod;
}

LocalField::Elem LocalField::pow(Elem a, std::uint64_t k) const {
  Elem r = one();
  while (k) {
    if (k & 1) r = mul(r, a);
    k >>= 1;
    if (k) a = mul(a, a);
  }
  return r;
}

LocalField::Elem LocalField::inverse(const Elem& a) const {
  const Fq r0 = residue(a);
  if (r0.v == 0) fail(Errc::PreconditionViolated, "inverse of a non-unit");
  Elem y = lift(F_.inv(r0));
  const Elem two = from_int(2);
  int prec = 1;
  while (prec < e() * M_) {
    y = mul(y, sub(two, mul(a, y)));
    prec *= 2;
  }
  return y;
}

LocalField::Elem LocalField::canonical(Elem a) const {
  const int e = poly_.e(), f = poly_.f;
  for (int j = 0; j < e; ++j) {
    const auto m = ppow(coord_precision(N_, e, j));
    for (int l = 0; l < f; ++l) a[j * f + l] %= m;
  }
  return a;
}

int LocalField::valuation(const Elem& x) const {
  const Elem a = canonical(x);
  const int e = poly_.e(), f = poly_.f;
  int v = N_;
  for (int j = 0; j < e; ++j)
    for (int l = 0; l < f; ++l)
      if (a[j * f + l] != 0) v = std::min(v, e * vp_u(a[j * f + l], poly_.p) + j);
  return v;
}

Fq LocalField::residue(const Elem& a) const {
  std::vector<std::uint32_t> dg(static_cast<std::size_t>(f()));
  for (int l = 0; l < f(); ++l) dg[l] = static_cast<std::uint32_t>(a[l] % poly_.p);
  return F_.from_digits(dg);
}

Fq LocalField::leading_residue(const Elem& x, int m) const {
  if (m >= N_) fail(Errc::PreconditionViolated, "leading residue beyond the cutoff");
  const Elem a = canonical(x);
  if (valuation(a) < m) fail(Errc::PreconditionViolated, "element has valuation below m");
  const int e = poly_.e(), f = poly_.f;
  const int j0 = m % e, k = m / e;
  const auto pk = ppow(k);
  std::vector<std::uint32_t> dg(static_cast<std::size_t>(f));
  for (int l = 0; l < f; ++l) dg[l] = static_cast<std::uint32_t>(a[j0 * f + l] / pk % poly_.p);
  // b pi^{j0} = (b / p^k) (p / pi^e)^k pi^m
  return F_.mul(F_.from_digits(dg), F_.pow(a_res_, static_cast<std::uint64_t>(k)));
}

Fq LocalField::a_residue() const { return a_res_; }

std::uint64_t LocalField::one_unit_index(const Elem& u) const {
  if (!index_fits_) fail(Errc::TooLarge, "1-unit group does not fit a 64-bit index");
  const Elem y = canonical(sub(u, one()));
  std::uint64_t idx = 0, weight = 1;
  for (std::size_t k = 0; k < y.size(); ++k) {
    std::uint64_t d = y[k];
    if (k < static_cast<std::size_t>(f())) {
      if (d % poly_.p != 0) fail(Errc::PreconditionViolated, "not a 1-unit");
      d /= poly_.p;
    }
    idx += d * weight;
    weight *= ppow(radix_log_[k]);
  }
  return idx;
}

LocalField::Elem LocalField::one_unit_from_index(std::uint64_t idx) const {
  Elem y = zero();
  for (std::size_t k = 0; k < y.size(); ++k) {
    const auto radix = ppow(radix_log_[k]);
    std::uint64_t d = idx % radix;
    idx /= radix;
    if (k < static_cast<std::size_t>(f())) d *= poly_.p;
    y[k] = d;
  }
  return add(y, one());
}

// ---------------------------------------------------------------- unit groups

std::string to_string(Route r) {
  switch (r) {
    case Route::Auto: return "auto";
    case Route::Enumerate: return "enumeration";
    case Route::Present: return "presentation";
  }
  return "?";
}

namespace {

int threshold_cn(const LocalField& field, int n) { return n * field.e() + field.e() / static_cast<int>(field.p() - 1); }

std::uint64_t int_pow(std::uint64_t b, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i)
    if (__builtin_mul_overflow(r, b, &r)) fail(Errc::TooLarge, "p^n exceeds 64 bits");
  return r;
}

LocalField::Elem pn_power(const LocalField& K, LocalField::Elem u, int n) {
  for (int i = 0; i < n; ++i) u = K.pow(std::move(u), K.p());
  return u;
}

bool is_one_unit(const LocalField& K, const LocalField::Elem& w) {
  return K.valuation(K.sub(w, K.one())) >= 1;
}

// A p^n-th power of a non-1-unit must never be a 1-unit outside P.
template <class InP>
int check_nonunits(const LocalField& K, int n, const UnitGroupOptions& opts, InP&& in_p) {
  std::mt19937_64 rng(opts.seed);
  const auto& F = K.residue_field();
  int checked = 0;
  for (int k = 0; k < opts.nonunit_samples; ++k) {
    const bool can_twist = F.size() > 2;
    int a = static_cast<int>(rng() % 3);
    if (a == 0 && !can_twist) a = 1;
    Fq zeta{static_cast<std::uint32_t>(1 + rng() % (F.size() - 1))};
    if (a == 0 && zeta == F.one()) zeta = F.generator();
    LocalField::Elem u = K.one();
    if (K.one_unit_count() != std::numeric_limits<std::uint64_t>::max())
      u = K.one_unit_from_index(rng() % K.one_unit_count());
    auto w = K.mul(K.mul(K.pow(K.pi(), static_cast<std::uint64_t>(a)), K.teichmuller(zeta)), u);
    auto wp = pn_power(K, w, n);
    if (is_one_unit(K, wp) && !in_p(wp))
      fail(Errc::PreconditionViolated, "p^n-th power of a non-1-unit landed in U^1 outside P");
    ++checked;
  }
  return checked;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, b = ((a % m) + m) % m;
  while (b) {
    const auto q = g / b;
    std::tie(g, b) = std::make_pair(b, g - q * b);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  return ((x % m) + m) % m;
}

// log_p |(Z/p^n)^k / rowspan(A)| by Smith normal form with minimal-valuation pivots.
int quotient_log(std::vector<std::vector<std::int64_t>> A, std::size_t k, std::int64_t p, int n) {
  const auto pn = static_cast<std::int64_t>(int_pow(static_cast<std::uint64_t>(p), n));
  auto val = [&](std::int64_t x) { return x == 0 ? n : std::min(vp(x, p), n); };
  std::size_t rows = A.size();
  int log = 0;
  std::size_t rank = 0;
  for (std::size_t col0 = 0; col0 < k && rank < rows; ++col0) {
    int best = n;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = rank; i < rows; ++i)
      for (std::size_t j = rank; j < k; ++j) {
        const int v = val(A[i][j]);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best >= n) break;
    std::swap(A[rank], A[bi]);
    for (auto& row : A) std::swap(row[rank], row[bj]);
    // Normalise the pivot to p^best.
    const std::int64_t pb = static_cast<std::int64_t>(int_pow(static_cast<std::uint64_t>(p), best));
    const std::int64_t unit = A[rank][rank] / pb;
    const std::int64_t uinv = inv_mod(unit, pn);
    for (auto& x : A[rank]) x = static_cast<std::int64_t>(static_cast<__int128>(x) * uinv % pn);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || A[i][rank] == 0) continue;
      const std::int64_t factor = A[i][rank] / pb;
      for (std::size_t j = 0; j < k; ++j)
        A[i][j] = static_cast<std::int64_t>(((A[i][j] - static_cast<__int128>(factor) * A[rank][j]) % pn + pn) % pn);
    }
    // Column operations only touch the pivot row once its column is clear.
    for (std::size_t j = rank + 1; j < k; ++j) A[rank][j] = 0;
    log += best;
    ++rank;
  }
  log += n * static_cast<int>(k - rank);
  return log;
}

UnitGroupTable enumerate(const LocalField& K, int n, const UnitGroupOptions& opts, UnitGroupTable t) {
  const std::uint64_t count = K.one_unit_count();
  std::vector<bool> in_p(count, false);
  for (std::uint64_t idx = 0; idx < count; ++idx)
    in_p[K.one_unit_index(pn_power(K, K.one_unit_from_index(idx), n))] = true;
  std::vector<std::uint64_t> level_hist(static_cast<std::size_t>(t.N + 1), 0);
  std::uint64_t p_size = 0;
  for (std::uint64_t idx = 0; idx < count; ++idx)
    if (in_p[idx]) {
      ++p_size;
      ++level_hist[K.valuation(K.sub(K.one_unit_from_index(idx), K.one()))];
    }
  auto exact_log = [&](std::uint64_t v) {
    int l = 0;
    while (v > 1) {
      if (v % t.p != 0) fail(Errc::PreconditionViolated, "subgroup order is not a power of p");
      v /= t.p;
      ++l;
    }
    return l;
  };
  t.log_P = exact_log(p_size);
  t.image_log.assign(static_cast<std::size_t>(t.N + 1), 0);
  std::uint64_t in_hm = 0;  // |H_m cap P|
  for (int m = t.N; m >= 1; --m) {
    in_hm += level_hist[m];
    t.image_log[m] = t.f * (t.N - m) - exact_log(in_hm);
  }
  t.nonunit_checked = check_nonunits(K, n, opts, [&](const LocalField::Elem& w) { return in_p[K.one_unit_index(w)]; });
  return t;
}

UnitGroupTable present(const LocalField& K, int n, const UnitGroupOptions& opts, UnitGroupTable t) {
  const int N = t.N, f = t.f;
  const auto& F = K.residue_field();
  const std::size_t G = static_cast<std::size_t>(f * (N - 1));
  if (G > 4096) fail(Errc::TooLarge, "presentation needs more than 4096 generators");
  const auto pn = static_cast<std::int64_t>(int_pow(t.p, n));

  // Generators 1 + x^j pi^m, indexed (m - 1) f + j.
  std::vector<LocalField::Elem> gens(G), gens_inv(G);
  for (int m = 1; m < N; ++m) {
    const auto pim = K.pow(K.pi(), static_cast<std::uint64_t>(m));
    for (int j = 0; j < f; ++j) {
      std::vector<std::uint32_t> dg(static_cast<std::size_t>(f), 0);
      dg[j] = 1;
      const auto g = K.add(K.one(), K.mul(K.lift(F.from_digits(dg)), pim));
      gens[(m - 1) * f + j] = g;
      gens_inv[(m - 1) * f + j] = K.inverse(g);
    }
  }
  auto digits_of = [&](LocalField::Elem u) {
    std::vector<std::int64_t> out(G, 0);
    for (int m = 1; m < N; ++m) {
      const auto dg = F.digits(K.leading_residue(K.sub(u, K.one()), m));
      for (int j = 0; j < f; ++j) {
        out[(m - 1) * f + j] = dg[j];
        for (std::uint32_t c = 0; c < dg[j]; ++c) u = K.mul(u, gens_inv[(m - 1) * f + j]);
      }
    }
    if (!K.equal(u, K.one())) fail(Errc::PreconditionViolated, "digit decomposition did not terminate at 1");
    return out;
  };
  // Relations p e_g - digits(g^p).
  std::vector<std::vector<std::int64_t>> R(G);
  for (std::size_t g = 0; g < G; ++g) {
    auto row = digits_of(K.pow(gens[g], t.p));
    for (auto& x : row) x = (pn - x % pn) % pn;
    row[g] = (row[g] + static_cast<std::int64_t>(t.p)) % pn;
    R[g] = std::move(row);
  }
  auto block_log = [&](int m) {
    // Columns and rows of generators at levels < m.
    const std::size_t k = static_cast<std::size_t>(f * (m - 1));
    std::vector<std::vector<std::int64_t>> A(k, std::vector<std::int64_t>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) A[i][j] = R[i][j];
    return quotient_log(std::move(A), k, t.p, n);
  };
  const int total = block_log(N);
  t.log_P = static_cast<int>(G) - total;
  t.image_log.assign(static_cast<std::size_t>(N + 1), 0);
  for (int m = 1; m <= N; ++m) t.image_log[m] = total - block_log(m);
  t.nonunit_checked = check_nonunits(K, n, opts, [](const LocalField::Elem&) { return false; });
  return t;
}

}  // namespace

UnitGroupTable unit_group(const LocalField& field, int n, const UnitGroupOptions& opts) {
  if (n < 1) fail(Errc::InvalidParams, "n must be positive");
  const int cn = threshold_cn(field, n);
  if (field.cutoff() <= cn)
    fail(Errc::PreconditionViolated, "cutoff N = " + std::to_string(field.cutoff()) + " must exceed c_n = " +
                                         std::to_string(cn));
  UnitGroupTable t;
  t.p = field.p();
  t.f = field.f();
  t.e = field.e();
  t.n = n;
  t.N = field.cutoff();
  t.log_H = t.f * (t.N - 1);
  const bool fits = field.one_unit_count() <= opts.enumeration_cap;
  Route route = opts.route;
  if (route == Route::Auto) route = fits ? Route::Enumerate : Route::Present;
  if (route == Route::Enumerate && !fits)
    fail(Errc::TooLarge, "|H| = p^" + std::to_string(t.log_H) + " exceeds the enumeration cap");
  t.route = route;
  return route == Route::Enumerate ? enumerate(field, n, opts, t) : present(field, n, opts, t);
}

GradedOrdersReport gr_orders(const UnitGroupTable& table) {
  GradedOrdersReport out;
  out.p = table.p;
  out.f = table.f;
  out.e = table.e;
  out.n = table.n;
  out.N = table.N;
  out.route = table.route;
  out.gr0_pi_log = table.n;
  // F^x / (F^x)^{p^n} has order gcd(p^f - 1, p^n).
  const std::uint64_t units = int_pow(table.p, table.f) - 1;
  out.gr0_teichmuller_log = vp_u(std::gcd(units, int_pow(table.p, table.n)), table.p);
  out.gr_log.assign(static_cast<std::size_t>(table.N), 0);
  out.gr_log[0] = out.gr0_pi_log + out.gr0_teichmuller_log;
  for (int m = 1; m < table.N; ++m) out.gr_log[m] = table.image_log[m] - table.image_log[m + 1];
  out.total_log = table.image_log[1];
  return out;
}

CDVFParams params_for(const LocalField& field, int n) {
  const auto& F = field.residue_field();
  auto ctx = ResidueField::make(F.p(), F.degree(), 0, F.modulus());
  return CDVFParams(ctx, field.e(), n, 1, LaurentPoly::constant(ctx, field.a_residue()));
}

ComparisonReport compare(const LocalField& field, const CDVFParams& params, const UnitGroupOptions& opts) {
  auto mismatch = [](const std::string& what) { fail(Errc::ParamsMismatch, what); };
  if (params.p() != field.p()) mismatch("p differs from the field's prime");
  if (params.f() != field.f()) mismatch("f differs from the field's residue degree");
  if (params.e() != field.e()) mismatch("e differs from the Eisenstein degree");
  if (params.r() != 0) mismatch("the oracle field has r = 0");
  if (params.q() != 1) mismatch("the oracle covers q = 1 only");
  if (!(params.context()->field() == field.residue_field())) mismatch("residue field modulus differs");
  const auto a = LaurentPoly::constant(params.context(), field.a_residue());
  if (!(params.a() == a)) mismatch("a differs from the residue of p pi^{-e}");

  ComparisonReport out;
  out.oracle = gr_orders(unit_group(field, params.n(), opts));
  out.all_match = true;
  for (int m = 1; m < field.cutoff(); ++m) {
    ComparisonRow row;
    row.m = m;
    row.oracle_log = out.oracle.gr_log[m];
    row.kase = classify(params, m);
    row.engine_log = GradedQuotient(params, m).size().order->log_p;
    row.match = row.oracle_log == row.engine_log;
    out.all_match = out.all_match && row.match;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace milnor::oracle
