#ifndef ANNULUS_LINALG_HPP
#define ANNULUS_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "annulus/scalar.hpp"

namespace annulus {

/// Dense row-major matrix over RadicalScalar.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<RadicalScalar>& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  RadicalScalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const RadicalScalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix adjoint() const;
  bool is_hermitian() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RadicalScalar> data_;
};

std::size_t rank(Matrix m);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::size_t rank() const { return positive + negative; }
};

/// Inertia of a Hermitian matrix by congruence diagonalization.  Pivots on
/// the largest-magnitude nonzero diagonal entry; when every remaining
/// diagonal entry vanishes a 2x2 block [[0,b],[conj b,0]] is eliminated,
/// contributing one positive and one negative eigenvalue.
Inertia hermitian_inertia(Matrix m);

/// Some solution of a x = b (free variables set to zero), or nullopt when inconsistent.
std::optional<std::vector<RadicalScalar>> solve_linear(Matrix a, std::vector<RadicalScalar> b);

}  // namespace annulus

#endif
