#pragma once

// Dense exact linear algebra over F_{p^f}: reduced row echelon subspaces,
// rank and nullspace. Pivots are always the leftmost nonzero column.

#include <span>
#include <vector>

#include "milnor/ffield.hpp"

namespace milnor {

using FqVector = std::vector<Fq>;

/// A subspace of F^dim kept as reduced row echelon rows.
class Subspace {
 public:
  Subspace(const FiniteField& field, std::size_t dim);

  static Subspace full(const FiniteField& field, std::size_t dim);
  static Subspace span(const FiniteField& field, std::size_t dim, std::span<const FqVector> gens);

  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<FqVector>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Inserts v; returns true if the dimension grew.
  bool insert(FqVector v);
  /// Canonical representative of v + this: zero in every pivot column.
  FqVector reduce(FqVector v) const;
  bool contains(const FqVector& v) const;

  /// Coordinatewise Frobenius applied k times (negative k applies frob_inv).
  Subspace frobenius_twist(int k) const;

 private:
  const FiniteField* field_;
  std::size_t dim_;
  std::vector<FqVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// rows x cols matrix, row-major.
struct FqMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Fq> data;

  FqMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Fq{0}) {}
  Fq& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  Fq at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

std::size_t rank(const FiniteField& field, FqMatrix m);
/// Column space of m (the image of x -> m x), as a subspace of F^rows.
Subspace image(const FiniteField& field, const FqMatrix& m);
/// {x : m x = 0} as a subspace of F^cols.
Subspace kernel(const FiniteField& field, const FqMatrix& m);

bool is_zero_vector(const FqVector& v) noexcept;

}  // namespace milnor
