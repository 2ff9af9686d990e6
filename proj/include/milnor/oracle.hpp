#pragma once

// Brute-force ground truth for q = 1: the filtration on the image of the
// 1-units of a concrete totally ramified extension K/Q_{p^f} in K^x/(K^x)^{p^n}.
//
// O_K/pi^N is modelled as sum_{j<e} b_j pi^j with b_j in W = Z/p^M[x]/(h),
// h the lift of the residue field modulus and M = ceil(N/e) + 2.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "milnor/ffield.hpp"
#include "milnor/graded.hpp"

namespace milnor::oracle {

/// Monic x^e + c_{e-1} x^{e-1} + ... + c_0 with integer coefficients over the
/// unramified extension of Q_p of degree f.
struct EisensteinPoly {
  std::string name;
  std::uint32_t p = 2;
  int f = 1;
  std::vector<std::int64_t> coeffs;  // c_0 .. c_e, c_e = 1
  std::optional<int> n;              // suggested level, from the fixture

  int e() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  /// Throws NotEisenstein (or InvalidParams for a bad prime / degree).
  void validate() const;

  /// Fixture text: `key: value` lines (prime, f, coeffs c_0 .. c_e, optional
  /// n and name); '#' starts a comment.
  static EisensteinPoly parse(std::string_view text);
  static EisensteinPoly load(const std::string& path);
};

/// O_K / pi^N.
class LocalField {
 public:
  using Elem = std::vector<std::uint64_t>;  // coordinate (j, l) of b_j x^l at j * f + l

  /// build_field; requires N >= 2.
  LocalField(EisensteinPoly poly, int N);

  const EisensteinPoly& poly() const noexcept { return poly_; }
  const FiniteField& residue_field() const noexcept { return F_; }
  std::uint32_t p() const noexcept { return poly_.p; }
  int f() const noexcept { return poly_.f; }
  int e() const noexcept { return poly_.e(); }
  int cutoff() const noexcept { return N_; }
  int precision() const noexcept { return M_; }

  Elem zero() const;
  Elem one() const;
  Elem pi() const;
  Elem from_int(std::int64_t v) const;
  /// A lift of c with coordinates in [0, p).
  Elem lift(Fq c) const;
  Elem teichmuller(Fq c) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, std::uint64_t k) const;
  /// Newton iteration; throws PreconditionViolated for non-units.
  Elem inverse(const Elem& a) const;

  /// Reduction modulo pi^N to the canonical representative.
  Elem canonical(Elem a) const;
  bool equal(const Elem& a, const Elem& b) const { return canonical(sub(a, b)) == zero(); }
  /// v_K(a), capped at N.
  int valuation(const Elem& a) const;
  Fq residue(const Elem& a) const;
  /// Residue of a / pi^m; requires v_K(a) >= m.
  Fq leading_residue(const Elem& a, int m) const;
  /// Residue of p pi^{-e}, obtained by dividing pi^e by p in the ring.
  Fq a_residue() const;

  /// Bijection between (1 + pi O_K)/(1 + pi^N O_K) and [0, p^{f(N-1)}).
  std::uint64_t one_unit_count() const noexcept { return unit_count_; }
  std::uint64_t one_unit_index(const Elem& u) const;
  Elem one_unit_from_index(std::uint64_t idx) const;

 private:
  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const;
  void w_mul_acc(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b) const;
  std::uint64_t ppow(int k) const;

  EisensteinPoly poly_;
  FiniteField F_;
  int N_, M_;
  std::uint64_t mod_;  // p^M
  std::vector<std::uint64_t> h_;  // W modulus coefficients h_0 .. h_{f-1} (monic)
  std::vector<std::uint64_t> c_;  // Eisenstein coefficients mod p^M
  std::vector<int> radix_log_;    // per coordinate, log_p of its range inside a 1-unit code
  std::uint64_t unit_count_ = 1;
  bool index_fits_ = true;
  Fq a_res_{0};
};

enum class Route { Auto, Enumerate, Present };
std::string to_string(Route r);

struct UnitGroupOptions {
  Route route = Route::Auto;
  std::uint64_t enumeration_cap = std::uint64_t{1} << 22;
  std::uint64_t seed = 7;  // drives the non-1-unit sample check
  int nonunit_samples = 64;
};

/// H = (1 + pi O_K)/(1 + pi^N O_K) and its subgroup P of p^n-th powers.
struct UnitGroupTable {
  std::uint32_t p = 0;
  int f = 0, e = 0, n = 0, N = 0;
  Route route = Route::Auto;
  int log_H = 0;
  int log_P = 0;
  /// image_log[m] = log_p |H_m P / P| for m = 1..N (image_log[N] = 0).
  std::vector<int> image_log;
  /// Non-1-units sampled and checked to have p^n-th powers outside U^1 \ P.
  int nonunit_checked = 0;
};

/// Requires N > c_n = n e + e_0 (PreconditionViolated names c_n); TooLarge if
/// enumeration is forced beyond the cap.
UnitGroupTable unit_group(const LocalField& field, int n, const UnitGroupOptions& opts = {});

struct GradedOrdersReport {
  std::uint32_t p = 0;
  int f = 0, e = 0, n = 0, N = 0;
  Route route = Route::Auto;
  /// log_p |gr^m| for m = 0..N-1; entry 0 is gr^0 = pi part + Teichmueller part.
  std::vector<int> gr_log;
  int gr0_pi_log = 0;
  int gr0_teichmuller_log = 0;
  /// log_p of the image of U^1 in K^x/(K^x)^{p^n}.
  int total_log = 0;
};

GradedOrdersReport gr_orders(const UnitGroupTable& table);

/// Symbolic parameters (r = 0, q = 1) matching the field, with a computed.
CDVFParams params_for(const LocalField& field, int n);

struct ComparisonRow {
  std::int64_t m = 0;
  int oracle_log = 0;
  int engine_log = 0;
  GradedCase kase;
  bool match = false;
};

struct ComparisonReport {
  GradedOrdersReport oracle;
  std::vector<ComparisonRow> rows;  // m = 1..N-1
  bool all_match = false;
};

/// Throws ParamsMismatch unless params describe the field at q = 1, r = 0.
ComparisonReport compare(const LocalField& field, const CDVFParams& params, const UnitGroupOptions& opts = {});

}  // namespace milnor::oracle
