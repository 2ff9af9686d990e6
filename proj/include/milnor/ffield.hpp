#pragma once

// Residue field model k = F_{p^f}(t_1, ..., t_r), with elements restricted to
// Laurent polynomials in the p-basis t_1, ..., t_r.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "milnor/error.hpp"

namespace milnor {

/// An element of F_{p^f}, encoded as sum c_j p^j for the polynomial sum c_j x^j
/// modulo the field's stored irreducible modulus.
struct Fq {
  std::uint32_t v = 0;
  friend auto operator<=>(Fq, Fq) = default;
};

/// Arithmetic context for F_{p^f}. Multiplication for f > 1 goes through
/// discrete log tables of the stored generator.
class FiniteField {
 public:
  /// Uses the shipped default modulus for (p, f).
  FiniteField(std::uint32_t p, int f);
  /// `modulus` lists the coefficients c_0..c_f of a monic irreducible polynomial.
  FiniteField(std::uint32_t p, int f, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const noexcept { return p_; }
  int degree() const noexcept { return f_; }
  std::uint32_t size() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Fq zero() const noexcept { return Fq{0}; }
  Fq one() const noexcept { return Fq{1}; }
  Fq from_int(std::int64_t n) const;

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq pow(Fq a, std::uint64_t k) const;
  Fq frob(Fq a) const { return pow(a, p_); }
  Fq frob_inv(Fq a) const;
  /// Applies frob (k > 0) or frob_inv (k < 0) |k| times.
  Fq frob_power(Fq a, int k) const;

  bool in_prime_field(Fq a) const noexcept { return a.v < p_; }
  /// The primitive element used by the text grammar's `g^k` coefficients.
  Fq generator() const noexcept { return Fq{gen_}; }
  /// Discrete log base generator(); a must be nonzero.
  std::uint32_t log(Fq a) const;
  Fq gen_pow(std::int64_t k) const;

  /// Coordinates of a over F_p in the basis 1, x, ..., x^{f-1}.
  std::vector<std::uint32_t> digits(Fq a) const;
  Fq from_digits(std::span<const std::uint32_t> d) const;

  bool operator==(const FiniteField& o) const noexcept {
    return p_ == o.p_ && f_ == o.f_ && modulus_ == o.modulus_;
  }

  /// Default irreducible (and primitive) modulus for F_{p^f}: a shipped table
  /// for small (p, f), else the lexicographically least primitive polynomial.
  static std::vector<std::uint32_t> default_modulus(std::uint32_t p, int f);

 private:
  Fq poly_mul(Fq a, Fq b) const;
  void build_tables();

  std::uint32_t p_;
  int f_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t gen_ = 1;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

bool is_prime(std::uint64_t n) noexcept;

using Exponent = std::vector<std::int64_t>;

Exponent exp_add(const Exponent& a, const Exponent& b);
Exponent exp_sub(const Exponent& a, const Exponent& b);
Exponent exp_scale(const Exponent& a, std::int64_t k);
bool exp_divisible(const Exponent& a, std::int64_t k) noexcept;
Exponent exp_div(const Exponent& a, std::int64_t k);
bool exp_is_zero(const Exponent& a) noexcept;
std::int64_t exp_norm(const Exponent& a) noexcept;  // max |a_i|

/// The residue field context k = F_{p^f}(t_1..t_r).
class ResidueField {
 public:
  static std::shared_ptr<const ResidueField> make(std::uint32_t p, int f, int r);
  static std::shared_ptr<const ResidueField> make(std::uint32_t p, int f, int r,
                                                   std::vector<std::uint32_t> modulus);

  ResidueField(FiniteField field, int r);

  const FiniteField& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_.p(); }
  int f() const noexcept { return field_.degree(); }
  int r() const noexcept { return r_; }

  bool operator==(const ResidueField& o) const noexcept { return r_ == o.r_ && field_ == o.field_; }

 private:
  FiniteField field_;
  int r_;
};

using ResidueFieldPtr = std::shared_ptr<const ResidueField>;

void require_same_context(const ResidueFieldPtr& a, const ResidueFieldPtr& b);

/// Finite-support Laurent polynomial over F_{p^f}; never stores a zero coefficient.
class LaurentPoly {
 public:
  explicit LaurentPoly(ResidueFieldPtr ctx);
  static LaurentPoly constant(ResidueFieldPtr ctx, Fq c);
  static LaurentPoly monomial(ResidueFieldPtr ctx, Exponent alpha, Fq c);
  /// t_i, 1-based variable index as in the text grammar.
  static LaurentPoly variable(ResidueFieldPtr ctx, int index);

  const ResidueFieldPtr& context() const noexcept { return ctx_; }
  const FiniteField& field() const noexcept { return ctx_->field(); }
  const std::map<Exponent, Fq>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Fq coeff(const Exponent& alpha) const;

  /// Adds c * t^alpha, dropping the term if the result is zero.
  void add_term(const Exponent& alpha, Fq c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(Fq c) const;
  LaurentPoly pow(std::uint64_t k) const;

  /// Coefficientwise Frobenius with exponents multiplied by p: f -> f^p.
  LaurentPoly frobenius() const;
  bool is_pth_power() const noexcept;
  /// Inverse of frobenius(); throws NotAPthPower.
  LaurentPoly pth_root() const;

  bool operator==(const LaurentPoly& o) const;

 private:
  ResidueFieldPtr ctx_;
  std::map<Exponent, Fq> terms_;
};

}  // namespace milnor
