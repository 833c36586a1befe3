#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "valab/rational.hpp"

namespace valab {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  Vector operator*(const Vector& x) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  friend Matrix operator*(const Rational& c, const Matrix& m);

  Rational trace() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::string to_string(const Matrix& m);

/// Reduced row echelon form. Pivot rule: first nonzero entry in the current
/// column, scanning rows top to bottom.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// x^T G y.
Rational bilinear(const Matrix& gram, const Vector& x, const Vector& y);

/// A linear subspace of Q^n stored by its canonical RREF basis, so equality is
/// a plain comparison of bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Removes the pivot coordinates of v using the basis rows; the result is
  /// zero iff v lies in the subspace.
  Vector reduce(const Vector& v) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

std::string to_string(const Subspace& s);

/// "2 b - 1/2 da"; "0" for the zero vector.
std::string named(const Vector& v, const std::vector<std::string>& names);
/// "span{da, u}".
std::string named(const Subspace& s, const std::vector<std::string>& names);

/// particular + span(homogeneous).
struct AffineSpace {
  Vector particular;
  Subspace homogeneous;

  std::size_t dim() const { return homogeneous.dim(); }
  bool contains(const Vector& x) const;
  friend bool operator==(const AffineSpace& a, const AffineSpace& b);
};

Subspace kernel(const Matrix& m);
/// Column space of m.
Subspace image(const Matrix& m);

/// All solutions of m x = rhs; std::nullopt when the system is inconsistent.
std::optional<AffineSpace> solve_affine(const Matrix& m, const Vector& rhs);

/// Kernel of a symmetric Gram matrix. Throws Error{NotSymmetric}.
Subspace form_radical(const Matrix& gram);

/// {x : y^T G x = 0 for all y in s}.
Subspace right_orthogonal(const Matrix& gram, const Subspace& s);
/// {x : x^T G y = 0 for all y in s}.
Subspace left_orthogonal(const Matrix& gram, const Subspace& s);

/// Coefficients c_0..c_n of det(xI - m) = sum c_k x^k (Faddeev-LeVerrier).
std::vector<Rational> characteristic_polynomial(const Matrix& m);

/// Dense 3-index tensor T[i][j][k], used for bilinear structure maps:
/// apply(x, y) = sum_ij x_i y_j T[i][j][.].
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2);

  std::size_t dim0() const noexcept { return d0_; }
  std::size_t dim1() const noexcept { return d1_; }
  std::size_t dim2() const noexcept { return d2_; }
  std::size_t size() const noexcept { return data_.size(); }

  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * d1_ + j) * d2_ + k];
  }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * d1_ + j) * d2_ + k];
  }
  Rational& flat(std::size_t idx) { return data_[idx]; }
  const Rational& flat(std::size_t idx) const { return data_[idx]; }

  Vector slice(std::size_t i, std::size_t j) const;
  void set_slice(std::size_t i, std::size_t j, const Vector& v);
  Vector apply(const Vector& x, const Vector& y) const;

  friend bool operator==(const Tensor3& a, const Tensor3& b) = default;

 private:
  std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<Rational> data_;
};

}  // namespace valab
