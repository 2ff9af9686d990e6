#include "milnor/linalg.hpp"

#include <algorithm>

namespace milnor {

bool is_zero_vector(const FqVector& v) noexcept {
  return std::all_of(v.begin(), v.end(), [](Fq x) { return x.v == 0; });
}

Subspace::Subspace(const FiniteField& field, std::size_t dim) : field_(&field), dim_(dim) {}

Subspace Subspace::full(const FiniteField& field, std::size_t dim) {
  Subspace s(field, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    FqVector e(dim, Fq{0});
    e[i] = field.one();
    s.rows_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(const FiniteField& field, std::size_t dim, std::span<const FqVector> gens) {
  Subspace s(field, dim);
  for (const auto& g : gens) s.insert(g);
  return s;
}

FqVector Subspace::reduce(FqVector v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Fq c = v[pivots_[k]];
    if (c.v == 0) continue;
    const auto& row = rows_[k];
    for (std::size_t j = pivots_[k]; j < dim_; ++j)
      if (row[j].v != 0) v[j] = field_->sub(v[j], field_->mul(c, row[j]));
  }
  return v;
}

bool Subspace::contains(const FqVector& v) const { return is_zero_vector(reduce(v)); }

bool Subspace::insert(FqVector v) {
  v = reduce(std::move(v));
  auto it = std::find_if(v.begin(), v.end(), [](Fq x) { return x.v != 0; });
  if (it == v.end()) return false;
  const auto piv = static_cast<std::size_t>(it - v.begin());
  const Fq scale = field_->inv(v[piv]);
  for (std::size_t j = piv; j < dim_; ++j) v[j] = field_->mul(v[j], scale);
  for (auto& row : rows_) {
    Fq c = row[piv];
    if (c.v == 0) continue;
    for (std::size_t j = piv; j < dim_; ++j)
      if (v[j].v != 0) row[j] = field_->sub(row[j], field_->mul(c, v[j]));
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

Subspace Subspace::frobenius_twist(int k) const {
  Subspace out(*field_, dim_);
  out.pivots_ = pivots_;
  out.rows_.reserve(rows_.size());
  for (const auto& row : rows_) {
    FqVector t(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) t[j] = field_->frob_power(row[j], k);
    out.rows_.push_back(std::move(t));
  }
  return out;
}

std::size_t rank(const FiniteField& field, FqMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c).v == 0) ++piv;
    if (piv == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const Fq inv = field.inv(m.at(r, c));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      Fq f = field.mul(m.at(i, c), inv);
      if (f.v == 0) continue;
      for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) = field.sub(m.at(i, j), field.mul(f, m.at(r, j)));
    }
    ++r;
  }
  return r;
}

Subspace image(const FiniteField& field, const FqMatrix& m) {
  Subspace s(field, m.rows);
  for (std::size_t j = 0; j < m.cols; ++j) {
    FqVector col(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) col[i] = m.at(i, j);
    s.insert(std::move(col));
  }
  return s;
}

Subspace kernel(const FiniteField& field, const FqMatrix& m) {
  // Row-reduce m; free columns give the nullspace basis.
  Subspace rowspace(field, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    FqVector row(m.data.begin() + i * m.cols, m.data.begin() + (i + 1) * m.cols);
    rowspace.insert(std::move(row));
  }
  const auto& piv = rowspace.pivots();
  Subspace out(field, m.cols);
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (std::binary_search(piv.begin(), piv.end(), free)) continue;
    FqVector x(m.cols, Fq{0});
    x[free] = field.one();
    for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = field.neg(rowspace.basis()[k][free]);
    out.insert(std::move(x));
  }
  return out;
}

}  // namespace milnor
