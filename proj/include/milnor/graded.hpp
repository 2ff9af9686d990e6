#pragma once

// Presentations of the graded quotients gr^m k_{q,n} of K_q^M(K)/p^n for a
// mixed characteristic CDVF K containing the p^n-th roots of unity, in terms
// of differential forms of the residue field.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "milnor/forms.hpp"

namespace milnor {

class CDVFParams {
 public:
  /// Validates: (p-1) | e, p^{n-1}(p-1) | e, q >= 1, n >= 1, a != 0.
  CDVFParams(ResidueFieldPtr ctx, int e, int n, int q, LaurentPoly a);

  const ResidueFieldPtr& context() const noexcept { return ctx_; }
  std::uint32_t p() const noexcept { return ctx_->p(); }
  int f() const noexcept { return ctx_->f(); }
  int r() const noexcept { return ctx_->r(); }
  int e() const noexcept { return e_; }
  int n() const noexcept { return n_; }
  int q() const noexcept { return q_; }
  /// e_0 = e/(p-1).
  int e0() const noexcept { return e_ / static_cast<int>(p() - 1); }
  /// The residue class of p * pi^{-e}.
  const LaurentPoly& a() const noexcept { return a_; }

  /// c_i = i e + e_0 for i >= 1, c_0 = 0.
  std::int64_t threshold(int i) const noexcept;

  CDVFParams with_level(int n) const { return CDVFParams(ctx_, e_, n, q_, a_); }
  CDVFParams with_degree(int q) const { return CDVFParams(ctx_, e_, n_, q, a_); }

 private:
  ResidueFieldPtr ctx_;
  int e_, n_, q_;
  LaurentPoly a_;
};

int p_adic_valuation(std::int64_t m, std::int64_t p) noexcept;

struct GradedCase {
  enum class Kind { I, II, III, OutOfRange };
  Kind kind = Kind::OutOfRange;
  int i = 0;  // I: c_i < m < c_{i+1};  II: m = c_i
  int s = 0;  // v_p(m)
  friend bool operator==(const GradedCase&, const GradedCase&) = default;
};

std::string to_string(GradedCase::Kind k);
GradedCase classify(const CDVFParams& params, std::int64_t m);

/// Quotient data for one level m.
struct GrDescriptor {
  enum class Shape {
    CokerTheta,  // Coker(theta) over Omega^{q-1}/B_s + Omega^{q-2}/B_s
    ModZ,        // Omega^{q-1}/Z_{n-i} + Omega^{q-2}/Z_{n-i}
    OnePlusAC,   // Omega^{q-1}/(1+aC)Z_t + Omega^{q-2}/(1+aC)Z_t
    Zero,        // m > c_n
  };
  std::int64_t m = 0;
  GradedCase kase;
  Shape shape = Shape::Zero;
  /// s for CokerTheta, n-i for ModZ, t for OnePlusAC.
  int tower_level = 0;
  /// (-1)^q (m - i e)/p^s reduced mod p, in [0, p); CokerTheta only.
  std::uint32_t theta_coeff = 0;
  int q = 1;
};

std::string to_string(GrDescriptor::Shape s);
/// Throws OutOfRange for m = 0.
GrDescriptor descriptor(const CDVFParams& params, std::int64_t m);

/// (omega1, omega2) in Omega^{q-1} + Omega^{q-2}.
struct GrElement {
  DiffForm first;
  DiffForm second;
  bool is_zero() const noexcept { return first.is_zero() && second.is_zero(); }
  bool operator==(const GrElement& o) const { return first == o.first && second == o.second; }
};

GrElement zero_element(const CDVFParams& params);

/// theta(w) = (C^{-s} dw, (-1)^q (m - i e)/p^s C^{-s} w) for w of degree q-2.
GrElement theta(const CDVFParams& params, std::int64_t m, const DiffForm& w);
/// z + a C(z); throws NotClosed.
DiffForm one_plus_aC(const CDVFParams& params, const DiffForm& z);

/// One entry of a symbol tail: a monomial c t^alpha or the prime element.
struct SymbolEntry {
  bool is_prime = false;
  Fq coeff{1};
  Exponent alpha;
};

/// {1 + pi^m u~, y_1, ..., y_{q-1}}.
struct SymbolExpr {
  std::int64_t m = 0;
  LaurentPoly u;
  std::vector<SymbolEntry> tail;
};

/// Preimage of a symbol under rho_m, with monomial liftings.
GrElement rho_eval(const CDVFParams& params, const SymbolExpr& sym);

struct GroupOrder {
  std::uint32_t p = 0;
  int log_p = 0;
  /// p^log_p when it fits in 64 bits.
  std::optional<std::uint64_t> value() const noexcept;
};

struct GradedSize {
  std::optional<GroupOrder> order;  // exact, r = 0 or the zero group
  /// log_p of the order of each alpha-slice of the quotient in the window
  /// (r >= 1); slices inside the OnePlusAC core are reported via core_log_p.
  std::map<Exponent, int> slice_log_p;
  std::optional<int> core_log_p;
  std::int64_t core_radius = 0;
};

struct QuotientOptions {
  std::size_t slice_cap = 100000;
};

/// gr^m k_{q,n} with canonical reduction of representatives.
class GradedQuotient {
 public:
  GradedQuotient(CDVFParams params, std::int64_t m, QuotientOptions opts = {});

  const CDVFParams& params() const noexcept { return params_; }
  const GrDescriptor& descriptor() const noexcept { return desc_; }

  GrElement reduce(const GrElement& el) const;
  bool is_zero(const GrElement& el) const { return reduce(el).is_zero(); }

  /// Exact order for r = 0 (or the zero group); per-slice table otherwise over
  /// exponents with |alpha_i| <= window.
  GradedSize size(std::int64_t window = 2) const;

  /// Radius B of the box |alpha|_inf <= B that (1+aC) reduction cannot shrink
  /// further; 0 unless the shape is OnePlusAC.
  std::int64_t core_radius() const noexcept { return core_radius_; }

 private:
  void check_element(const GrElement& el) const;
  GrElement reduce_coker_theta(const GrElement& el) const;
  DiffForm reduce_mod_z(const DiffForm& w) const;
  DiffForm reduce_one_plus_aC(const DiffForm& w) const;
  Subspace coker_slice_relations(const Exponent& gamma) const;
  int coker_slice_log(const Exponent& gamma) const;
  int core_log(int degree) const;

  // A connected set of degrees of the core box with F_p coordinates
  // (degree, subset, digit) in lexicographic order, and the F_p-span of
  // (1+aC)Z_t inside it.
  struct CoreComponent {
    std::vector<Exponent> degrees;
    std::map<Exponent, std::size_t> index;
    std::size_t slice_dim = 0;
    int f = 1;
    Subspace relations;

    std::size_t coords() const noexcept { return degrees.size() * slice_dim * f; }
    void scatter(FqVector& vec, const Exponent& g, const FqVector& vals, const FiniteField& F,
                 const FiniteField& Fp) const;
    FqVector gather(const FqVector& vec, const Exponent& g, const FiniteField& F) const;
  };
  std::vector<Exponent> core_neighbours(const Exponent& g) const;
  CoreComponent core_component(const Exponent& seed, int degree) const;

  CDVFParams params_;
  GrDescriptor desc_;
  QuotientOptions opts_;
  FiniteField prime_field_;
  std::int64_t core_radius_ = 0;
};

struct Lemma1Report {
  std::int64_t m = 0;
  int n = 0;
  GrDescriptor upper;  // (n, m)
  GrDescriptor lower;  // (n-1, m-e)
  bool case_shift_ok = false;
  std::optional<bool> orders_equal;
  std::optional<GroupOrder> upper_order, lower_order;
  std::optional<bool> slices_equal;
  std::vector<Exponent> slice_mismatches;
  std::optional<bool> core_equal;
  /// Indices of probes that are zero in exactly one presentation.
  std::vector<std::size_t> probe_mismatches;
  bool consistent() const noexcept;
};

/// Compares gr^m k_{q,n} with gr^{m-e} k_{q,n-1}; requires m > e + e_0, n > 1.
Lemma1Report lemma1_consistency(const CDVFParams& params, std::int64_t m, const std::vector<GrElement>& probes,
                                std::int64_t window = 2, QuotientOptions opts = {});

}  // namespace milnor
