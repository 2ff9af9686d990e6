#pragma once

// Absolute Kähler differentials of k = F_{p^f}(t_1..t_r) in the dlog basis.
//
// A degree-q form is stored as a map from exponent vectors alpha to the
// coordinate vector of its alpha-slice over the q-subsets of {1..r} (listed
// lexicographically). The basis element (alpha, S) is t^alpha dlog t_S.
// d preserves alpha, the Cartier operators rescale it by p, so the B/Z towers
// are computed slice by slice.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "milnor/ffield.hpp"
#include "milnor/linalg.hpp"

namespace milnor {

/// A subset of {0..r-1} (0-based internally, printed 1-based).
struct IndexSet {
  std::uint32_t mask = 0;

  int size() const noexcept { return __builtin_popcount(mask); }
  bool contains(int i) const noexcept { return (mask >> i) & 1u; }
  std::vector<int> indices() const;
  static IndexSet of(std::span<const int> zero_based);

  friend bool operator==(IndexSet, IndexSet) = default;
  /// Lexicographic order on the sorted index lists.
  friend bool operator<(IndexSet a, IndexSet b);
};

/// q-subsets of {0..r-1} in lexicographic order; empty when q < 0 or q > r.
const std::vector<IndexSet>& subsets(int r, int q);
/// Position of s within subsets(r, s.size()).
std::size_t subset_position(int r, IndexSet s);

/// Sign of dlog t_i ^ dlog t_S relative to dlog t_{S+i}; 0 if i is in S.
int insertion_sign(int i, IndexSet s) noexcept;
/// Sign of dlog t_S ^ dlog t_T relative to dlog t_{S u T}; 0 if they meet.
int merge_sign(IndexSet s, IndexSet t) noexcept;

class DiffForm {
 public:
  DiffForm(ResidueFieldPtr ctx, int degree);

  static DiffForm monomial(ResidueFieldPtr ctx, const Exponent& alpha, IndexSet s, Fq c);
  static DiffForm function(const LaurentPoly& f);
  /// dlog t_i with 1-based i.
  static DiffForm dlog(ResidueFieldPtr ctx, int index);

  const ResidueFieldPtr& context() const noexcept { return ctx_; }
  const FiniteField& field() const noexcept { return ctx_->field(); }
  int degree() const noexcept { return degree_; }
  /// Number of q-subsets, i.e. the dimension of each alpha-slice.
  std::size_t slice_dim() const noexcept;
  bool is_zero() const noexcept { return slices_.empty(); }

  const std::map<Exponent, FqVector>& slices() const noexcept { return slices_; }
  FqVector slice(const Exponent& alpha) const;
  /// Adds v to the alpha-slice; zero slices are dropped.
  void add_slice(const Exponent& alpha, const FqVector& v);
  void add_term(const Exponent& alpha, IndexSet s, Fq c);

  /// The coefficient f_S in sum_S f_S dlog t_S.
  LaurentPoly coefficient(IndexSet s) const;

  struct Term {
    Exponent alpha;
    IndexSet set;
    Fq coeff;
  };
  /// Nonzero terms ordered by (alpha, S).
  std::vector<Term> terms() const;

  DiffForm operator+(const DiffForm& o) const;
  DiffForm operator-(const DiffForm& o) const;
  DiffForm operator-() const;
  DiffForm scaled(Fq c) const;
  /// f * omega for a function f.
  DiffForm times(const LaurentPoly& f) const;

  bool operator==(const DiffForm& o) const;

 private:
  void check_compatible(const DiffForm& o) const;

  ResidueFieldPtr ctx_;
  int degree_;
  std::map<Exponent, FqVector> slices_;
};

DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm d(const DiffForm& w);
bool is_closed(const DiffForm& w);
/// Monomial inverse Cartier: t^alpha dlog t_S, coefficient c -> c^p t^{p alpha} dlog t_S.
DiffForm inv_cartier(const DiffForm& w);
/// s-fold inv_cartier.
DiffForm inv_cartier_power(const DiffForm& w, int s);
/// Cartier operator on closed forms; throws NotClosed otherwise.
DiffForm cartier(const DiffForm& w);

bool in_Z(const DiffForm& w, int s);
bool in_B(const DiffForm& w, int s);

enum class Tower { B, Z };

/// One alpha-slice of a degree-q form, coordinates over the q-subsets.
struct DegreeComponent {
  Exponent alpha;
  int degree = 0;
  FqVector coords;
};

/// Matrix of v -> alpha_bar ^ v from the degree-q slice to the degree-(q+1)
/// slice, alpha_bar = sum (alpha_i mod p) dlog t_i.
FqMatrix koszul_matrix(const ResidueField& ctx, const Exponent& alpha, int q);

/// The alpha-slice of B_s^q or Z_s^q as an echelonized subspace.
Subspace tower_slice(const ResidueField& ctx, const Exponent& alpha, int q, Tower kind, int s);
std::vector<DegreeComponent> subspace_basis(const ResidueField& ctx, const Exponent& alpha, int q,
                                            Tower kind, int s);

/// Canonical representative of w modulo B_s (resp. Z_s).
DiffForm nf_mod(const DiffForm& w, Tower kind, int s);

}  // namespace milnor
