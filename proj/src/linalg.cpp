#include "valab/linalg.hpp"

#include <sstream>
#include <utility>

#include "valab/error.hpp"

namespace valab {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool Matrix::is_zero() const { return valab::is_zero(data_); }

Vector Matrix::operator*(const Vector& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  Vector y = zeros(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(x[c]) != 0) y[r] += (*this)(r, c) * x[c];
  return y;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  Matrix p(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) p(r, c) += a * other(k, c);
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  Matrix s(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += other.data_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
  Matrix s(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= other.data_[i];
  return s;
}

Matrix operator*(const Rational& c, const Matrix& m) {
  Matrix s(m);
  for (auto& q : s.data_) q *= c;
  return s;
}

Rational Matrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string to_string(const Matrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out << ", ";
    out << to_string(m.row(r));
  }
  out << ']';
  return out.str();
}

namespace {

// In-place elimination; returns pivot columns.
std::vector<std::size_t> eliminate(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead, k));
    Rational inv = 1 / m(lead, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

Matrix take_rows(const Matrix& m, std::size_t count) {
  Matrix out(count, m.cols());
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

}  // namespace

Matrix rref(const Matrix& m) {
  Matrix r(m);
  eliminate(r);
  return r;
}

std::size_t rank(const Matrix& m) {
  Matrix r(m);
  return eliminate(r).size();
}

Rational bilinear(const Matrix& gram, const Vector& x, const Vector& y) {
  return dot(x, gram * y);
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Matrix m = Matrix::from_rows(vectors, ambient_dim);
  auto piv = eliminate(m);
  Subspace s(ambient_dim);
  s.basis_ = take_rows(m, piv.size());
  s.pivots_ = std::move(piv);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vector> e;
  for (std::size_t i = 0; i < ambient_dim; ++i) e.push_back(unit_vector(ambient_dim, i));
  return span(ambient_dim, e);
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(basis_.row(r));
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspace membership");
  Vector r(v);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Rational f = r[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) r[c] -= f * basis_(i, c);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return valab::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_vectors())
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  auto vs = basis_vectors();
  auto ws = other.basis_vectors();
  vs.insert(vs.end(), ws.begin(), ws.end());
  return span(ambient_, vs);
}

Subspace Subspace::intersect(const Subspace& other) const {
  // x = sum a_i u_i = sum b_j w_j; solve [U^T | -W^T] (a, b) = 0.
  std::size_t k = dim(), l = other.dim();
  Matrix sys(ambient_, k + l);
  for (std::size_t c = 0; c < ambient_; ++c) {
    for (std::size_t i = 0; i < k; ++i) sys(c, i) = basis_(i, c);
    for (std::size_t j = 0; j < l; ++j) sys(c, k + j) = -other.basis_(j, c);
  }
  std::vector<Vector> out;
  for (const auto& coeffs : kernel(sys).basis_vectors()) {
    Vector x = zeros(ambient_);
    for (std::size_t i = 0; i < k; ++i) x += coeffs[i] * basis_.row(i);
    out.push_back(x);
  }
  return span(ambient_, out);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

std::string to_string(const Subspace& s) {
  std::ostringstream out;
  out << "span{";
  auto vs = s.basis_vectors();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out << ", ";
    out << to_string(vs[i]);
  }
  out << '}';
  return out.str();
}

bool AffineSpace::contains(const Vector& x) const { return homogeneous.contains(x - particular); }

bool operator==(const AffineSpace& a, const AffineSpace& b) {
  return a.homogeneous == b.homogeneous && a.contains(b.particular);
}

Subspace kernel(const Matrix& m) {
  Matrix r(m);
  auto piv = eliminate(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zeros(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), basis);
}

Subspace image(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.rows(), cols);
}

std::optional<AffineSpace> solve_affine(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  auto piv = eliminate(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  Vector x = zeros(m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, m.cols());
  return AffineSpace{std::move(x), kernel(m)};
}

Subspace form_radical(const Matrix& gram) {
  if (!gram.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "Gram matrix is not symmetric");
  return kernel(gram);
}

Subspace right_orthogonal(const Matrix& gram, const Subspace& s) {
  // rows y^T G
  std::vector<Vector> rows;
  for (const auto& y : s.basis_vectors()) rows.push_back(gram.transpose() * y);
  return kernel(Matrix::from_rows(rows, gram.cols()));
}

Subspace left_orthogonal(const Matrix& gram, const Subspace& s) {
  std::vector<Vector> rows;
  for (const auto& y : s.basis_vectors()) rows.push_back(gram * y);
  return kernel(Matrix::from_rows(rows, gram.rows()));
}

std::vector<Rational> characteristic_polynomial(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "characteristic polynomial of non-square matrix");
  // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    Matrix am = m * mk;
    c[n - k] = -am.trace() / Rational(static_cast<long>(k));
  }
  return c;
}

Tensor3::Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
    : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2, Rational(0)) {}

Vector Tensor3::slice(std::size_t i, std::size_t j) const {
  Vector v(d2_);
  for (std::size_t k = 0; k < d2_; ++k) v[k] = (*this)(i, j, k);
  return v;
}

void Tensor3::set_slice(std::size_t i, std::size_t j, const Vector& v) {
  if (v.size() != d2_) throw Error(ErrorKind::DimensionMismatch, "tensor slice length");
  for (std::size_t k = 0; k < d2_; ++k) (*this)(i, j, k) = v[k];
}

Vector Tensor3::apply(const Vector& x, const Vector& y) const {
  if (x.size() != d0_ || y.size() != d1_) throw Error(ErrorKind::DimensionMismatch, "bilinear map arguments");
  Vector out = zeros(d2_);
  for (std::size_t i = 0; i < d0_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < d1_; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < d2_; ++k) out[k] += w * (*this)(i, j, k);
    }
  }
  return out;
}

std::string named(const Vector& v, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational& c = v[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    std::string term = mag == 1 ? names[i] : to_string(mag) + " " + names[i];
    if (s.empty()) {
      s = sgn(c) < 0 ? "-" + term : term;
    } else {
      s += (sgn(c) < 0 ? " - " : " + ") + term;
    }
  }
  return s.empty() ? "0" : s;
}

std::string named(const Subspace& s, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& v : s.basis_vectors()) out += (out.empty() ? "" : ", ") + named(v, names);
  return "span{" + out + "}";
}

}  // namespace valab
