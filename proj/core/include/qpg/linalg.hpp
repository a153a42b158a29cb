#pragma once

#include "qpg/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qpg {

using Vector = std::vector<Rational>;

// Dense matrix over Q, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Vector row(std::size_t i) const;
  std::vector<Vector> row_vectors() const;

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Vector apply(const Vector& v) const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_symmetric() const;
  bool is_zero() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
std::size_t rank_of(const std::vector<Vector>& rows, std::size_t dim);
Rational determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
// Basis of {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m);
// Some solution of m x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

bool in_span(const std::vector<Vector>& basis, const Vector& v, std::size_t dim);
// Independent rows spanning the same space.
std::vector<Vector> span_basis(const std::vector<Vector>& rows, std::size_t dim);
// Coordinates of v in an independent spanning set (nullopt if outside).
std::optional<Vector> coordinates_in(const std::vector<Vector>& basis, const Vector& v);
// Orthogonal complement {x : x^T g b = 0 for all b in basis}.
std::vector<Vector> orthogonal_complement(const std::vector<Vector>& basis, const Matrix& g);

Rational dot(const Vector& a, const Vector& b);
Rational bilinear(const Vector& a, const Matrix& g, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector scale(const Vector& a, const Rational& c);
bool is_zero(const Vector& v);
Vector unit(std::size_t n, std::size_t i);
std::string to_string(const Vector& v);

}  // namespace qpg
