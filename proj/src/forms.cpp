#include "milnor/forms.hpp"

#include <algorithm>
#include <array>

namespace milnor {

namespace {

constexpr int kMaxR = 16;

struct SubsetTables {
  std::array<std::vector<std::vector<IndexSet>>, kMaxR + 1> by_size;
  std::array<std::vector<std::uint32_t>, kMaxR + 1> position;

  SubsetTables() {
    for (int r = 0; r <= kMaxR; ++r) {
      by_size[r].resize(r + 1);
      position[r].assign(std::size_t{1} << r, 0);
      for (int q = 0; q <= r; ++q) {
        auto& out = by_size[r][q];
        std::vector<int> combo;
        // Lexicographic enumeration of q-combinations of {0..r-1}.
        auto rec = [&](auto&& self, int start) -> void {
          if (static_cast<int>(combo.size()) == q) {
            out.push_back(IndexSet::of(combo));
            return;
          }
          for (int i = start; i < r; ++i) {
            combo.push_back(i);
            self(self, i + 1);
            combo.pop_back();
          }
        };
        rec(rec, 0);
        for (std::size_t k = 0; k < out.size(); ++k) position[r][out[k].mask] = static_cast<std::uint32_t>(k);
      }
    }
  }
};

const SubsetTables& tables() {
  static const SubsetTables t;
  return t;
}

Fq sign_scalar(const FiniteField& F, int sign, Fq c) { return sign > 0 ? c : F.neg(c); }

}  // namespace

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

IndexSet IndexSet::of(std::span<const int> zero_based) {
  IndexSet s;
  for (int i : zero_based) s.mask |= (1u << i);
  return s;
}

bool operator<(IndexSet a, IndexSet b) {
  auto x = a.indices(), y = b.indices();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

const std::vector<IndexSet>& subsets(int r, int q) {
  static const std::vector<IndexSet> empty;
  if (r < 0 || r > kMaxR || q < 0 || q > r) return empty;
  return tables().by_size[r][q];
}

std::size_t subset_position(int r, IndexSet s) { return tables().position[r][s.mask]; }

int insertion_sign(int i, IndexSet s) noexcept {
  if (s.contains(i)) return 0;
  const std::uint32_t below = s.mask & ((1u << i) - 1u);
  return (__builtin_popcount(below) % 2) ? -1 : 1;
}

int merge_sign(IndexSet s, IndexSet t) noexcept {
  if (s.mask & t.mask) return 0;
  int inversions = 0;
  for (int j : t.indices()) inversions += __builtin_popcount(s.mask >> (j + 1));
  return (inversions % 2) ? -1 : 1;
}

// ---------------------------------------------------------------- DiffForm

DiffForm::DiffForm(ResidueFieldPtr ctx, int degree) : ctx_(std::move(ctx)), degree_(degree) {}

std::size_t DiffForm::slice_dim() const noexcept { return subsets(ctx_->r(), degree_).size(); }

DiffForm DiffForm::monomial(ResidueFieldPtr ctx, const Exponent& alpha, IndexSet s, Fq c) {
  if (static_cast<int>(alpha.size()) != ctx->r()) fail(Errc::ContextMismatch, "exponent length differs from r");
  if (s.mask >> ctx->r()) fail(Errc::InvalidParams, "dlog index exceeds r");
  DiffForm w(ctx, s.size());
  w.add_term(alpha, s, c);
  return w;
}

DiffForm DiffForm::function(const LaurentPoly& f) {
  DiffForm w(f.context(), 0);
  for (const auto& [alpha, c] : f.terms()) w.add_slice(alpha, FqVector{c});
  return w;
}

DiffForm DiffForm::dlog(ResidueFieldPtr ctx, int index) {
  if (index < 1 || index > ctx->r()) fail(Errc::InvalidParams, "dlog index out of range");
  const int i = index - 1;
  auto one = ctx->field().one();
  return monomial(ctx, Exponent(ctx->r(), 0), IndexSet::of(std::span<const int>(&i, 1)), one);
}

FqVector DiffForm::slice(const Exponent& alpha) const {
  auto it = slices_.find(alpha);
  return it == slices_.end() ? FqVector(slice_dim(), Fq{0}) : it->second;
}

void DiffForm::add_slice(const Exponent& alpha, const FqVector& v) {
  if (v.size() != slice_dim()) fail(Errc::ContextMismatch, "slice dimension mismatch");
  if (is_zero_vector(v)) return;
  auto [it, inserted] = slices_.try_emplace(alpha, v);
  if (!inserted) {
    for (std::size_t k = 0; k < v.size(); ++k) it->second[k] = field().add(it->second[k], v[k]);
    if (is_zero_vector(it->second)) slices_.erase(it);
  }
}

void DiffForm::add_term(const Exponent& alpha, IndexSet s, Fq c) {
  if (s.size() != degree_) fail(Errc::ContextMismatch, "term degree differs from form degree");
  if (c.v == 0) return;
  FqVector v(slice_dim(), Fq{0});
  v[subset_position(ctx_->r(), s)] = c;
  add_slice(alpha, v);
}

LaurentPoly DiffForm::coefficient(IndexSet s) const {
  LaurentPoly out(ctx_);
  if (s.size() != degree_ || degree_ < 0 || degree_ > ctx_->r()) return out;
  const auto k = subset_position(ctx_->r(), s);
  for (const auto& [alpha, v] : slices_) out.add_term(alpha, v[k]);
  return out;
}

std::vector<DiffForm::Term> DiffForm::terms() const {
  std::vector<Term> out;
  const auto& sets = subsets(ctx_->r(), degree_);
  for (const auto& [alpha, v] : slices_)
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k].v != 0) out.push_back({alpha, sets[k], v[k]});
  return out;
}

void DiffForm::check_compatible(const DiffForm& o) const {
  require_same_context(ctx_, o.ctx_);
  if (degree_ != o.degree_) fail(Errc::ContextMismatch, "forms of different degree");
}

DiffForm DiffForm::operator+(const DiffForm& o) const {
  check_compatible(o);
  DiffForm out = *this;
  for (const auto& [alpha, v] : o.slices_) out.add_slice(alpha, v);
  return out;
}

DiffForm DiffForm::operator-() const { return scaled(field().neg(field().one())); }

DiffForm DiffForm::operator-(const DiffForm& o) const { return *this + (-o); }

DiffForm DiffForm::scaled(Fq c) const {
  DiffForm out(ctx_, degree_);
  if (c.v == 0) return out;
  for (const auto& [alpha, v] : slices_) {
    FqVector w(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) w[k] = field().mul(c, v[k]);
    out.slices_.emplace(alpha, std::move(w));
  }
  return out;
}

DiffForm DiffForm::times(const LaurentPoly& f) const {
  require_same_context(ctx_, f.context());
  DiffForm out(ctx_, degree_);
  for (const auto& [beta, c] : f.terms())
    for (const auto& [alpha, v] : slices_) {
      FqVector w(v.size());
      for (std::size_t k = 0; k < v.size(); ++k) w[k] = field().mul(c, v[k]);
      out.add_slice(exp_add(alpha, beta), w);
    }
  return out;
}

bool DiffForm::operator==(const DiffForm& o) const {
  return *ctx_ == *o.ctx_ && degree_ == o.degree_ && slices_ == o.slices_;
}

// ---------------------------------------------------------------- operators

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  require_same_context(a.context(), b.context());
  const auto& ctx = a.context();
  const auto& F = ctx->field();
  DiffForm out(ctx, a.degree() + b.degree());
  if (a.degree() < 0 || b.degree() < 0) return out;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      int sign = merge_sign(ta.set, tb.set);
      if (sign == 0) continue;
      out.add_term(exp_add(ta.alpha, tb.alpha), IndexSet{ta.set.mask | tb.set.mask},
                   sign_scalar(F, sign, F.mul(ta.coeff, tb.coeff)));
    }
  return out;
}

DiffForm d(const DiffForm& w) {
  const auto& ctx = w.context();
  const auto& F = ctx->field();
  const int r = ctx->r();
  const auto p = static_cast<std::int64_t>(ctx->p());
  DiffForm out(ctx, w.degree() + 1);
  if (w.degree() < 0) return out;
  const auto& sets = subsets(r, w.degree());
  for (const auto& [alpha, v] : w.slices()) {
    FqVector acc(out.slice_dim(), Fq{0});
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].v == 0) continue;
      for (int i = 0; i < r; ++i) {
        const std::int64_t ai = ((alpha[i] % p) + p) % p;
        const int sign = insertion_sign(i, sets[k]);
        if (ai == 0 || sign == 0) continue;
        const auto pos = subset_position(r, IndexSet{sets[k].mask | (1u << i)});
        acc[pos] = F.add(acc[pos], sign_scalar(F, sign, F.mul(F.from_int(ai), v[k])));
      }
    }
    out.add_slice(alpha, acc);
  }
  return out;
}

bool is_closed(const DiffForm& w) { return d(w).is_zero(); }

DiffForm inv_cartier(const DiffForm& w) {
  const auto& F = w.field();
  const auto p = static_cast<std::int64_t>(w.context()->p());
  DiffForm out(w.context(), w.degree());
  for (const auto& [alpha, v] : w.slices()) {
    FqVector t(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) t[k] = F.frob(v[k]);
    out.add_slice(exp_scale(alpha, p), t);
  }
  return out;
}

DiffForm inv_cartier_power(const DiffForm& w, int s) {
  DiffForm out = w;
  for (int i = 0; i < s; ++i) out = inv_cartier(out);
  return out;
}

DiffForm cartier(const DiffForm& w) {
  if (!is_closed(w)) fail(Errc::NotClosed, "Cartier operator applied to a form with nonzero d");
  const auto& F = w.field();
  const auto p = static_cast<std::int64_t>(w.context()->p());
  DiffForm out(w.context(), w.degree());
  for (const auto& [alpha, v] : w.slices()) {
    if (!exp_divisible(alpha, p)) continue;  // exact part of a closed form
    FqVector t(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) t[k] = F.frob_inv(v[k]);
    out.add_slice(exp_div(alpha, p), t);
  }
  return out;
}

bool in_Z(const DiffForm& w, int s) {
  if (s <= 0) return true;
  if (!is_closed(w)) return false;
  return in_Z(cartier(w), s - 1);
}

bool in_B(const DiffForm& w, int s) {
  if (s <= 0) return w.is_zero();
  if (!is_closed(w)) return false;
  if (s == 1) return cartier(w).is_zero();
  return in_B(cartier(w), s - 1);
}

// ---------------------------------------------------------------- towers

FqMatrix koszul_matrix(const ResidueField& ctx, const Exponent& alpha, int q) {
  const int r = ctx.r();
  const auto& F = ctx.field();
  const auto p = static_cast<std::int64_t>(ctx.p());
  const auto& src = subsets(r, q);
  const auto& dst = subsets(r, q + 1);
  FqMatrix m(dst.size(), src.size());
  for (std::size_t k = 0; k < src.size(); ++k)
    for (int i = 0; i < r; ++i) {
      const std::int64_t ai = ((alpha[i] % p) + p) % p;
      const int sign = insertion_sign(i, src[k]);
      if (ai == 0 || sign == 0) continue;
      m.at(subset_position(r, IndexSet{src[k].mask | (1u << i)}), k) = sign_scalar(F, sign, F.from_int(ai));
    }
  return m;
}

Subspace tower_slice(const ResidueField& ctx, const Exponent& alpha, int q, Tower kind, int s) {
  const auto& F = ctx.field();
  const std::size_t dim = subsets(ctx.r(), q).size();
  if (dim == 0) return Subspace(F, 0);
  if (s <= 0) return kind == Tower::Z ? Subspace::full(F, dim) : Subspace(F, dim);
  const auto p = static_cast<std::int64_t>(ctx.p());
  if (exp_divisible(alpha, p)) {
    // omega in X_s at p*beta iff C(omega) in X_{s-1} at beta.
    return tower_slice(ctx, exp_div(alpha, p), q, kind, s - 1).frobenius_twist(1);
  }
  if (kind == Tower::B) return image(F, koszul_matrix(ctx, alpha, q - 1));
  return kernel(F, koszul_matrix(ctx, alpha, q));
}

std::vector<DegreeComponent> subspace_basis(const ResidueField& ctx, const Exponent& alpha, int q,
                                            Tower kind, int s) {
  std::vector<DegreeComponent> out;
  const auto slice = tower_slice(ctx, alpha, q, kind, s);
  for (const auto& row : slice.basis()) out.push_back({alpha, q, row});
  return out;
}

DiffForm nf_mod(const DiffForm& w, Tower kind, int s) {
  DiffForm out(w.context(), w.degree());
  for (const auto& [alpha, v] : w.slices())
    out.add_slice(alpha, tower_slice(*w.context(), alpha, w.degree(), kind, s).reduce(v));
  return out;
}

}  // namespace milnor
