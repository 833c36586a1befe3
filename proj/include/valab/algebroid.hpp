#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "valab/commalg.hpp"
#include "valab/leibniz.hpp"
#include "valab/linalg.hpp"
#include "valab/report.hpp"

namespace valab {

/// Vertex A-algebroid (A, B) by structure constants. n = dim A, m = dim B.
///
///   partial  n x m      row i is d(a_i) in B
///   action   n x m x m  a_i . b_j
///   bracket  m x m x m  [b_i, b_j] = (b_i)_0 b_j
///   anchor   m x n x n  pi(b_i)(a_j) = (b_i)_0 a_j
///   pairing  m x m x n  <b_i, b_j> = (b_i)_1 b_j
///
/// a_0 u is not stored; it is -u_0 a.
struct AlgebroidData {
  CommAlgebra algebra;
  std::vector<std::string> b_names;
  Matrix partial;
  Tensor3 action;
  Tensor3 bracket;
  Tensor3 anchor;
  Tensor3 pairing;
};

class VertexAlgebroid {
 public:
  VertexAlgebroid() = default;
  /// Throws Error{DimensionMismatch} on inconsistent shapes.
  explicit VertexAlgebroid(AlgebroidData data);

  /// B = 0 over the given algebra.
  static VertexAlgebroid trivial(CommAlgebra algebra);

  const AlgebroidData& data() const noexcept { return d_; }
  AlgebroidData& mutable_data() noexcept { return d_; }
  const CommAlgebra& algebra() const noexcept { return d_.algebra; }
  std::size_t a_dim() const noexcept { return d_.algebra.dim(); }
  std::size_t b_dim() const noexcept { return d_.b_names.size(); }
  const std::vector<std::string>& a_names() const noexcept { return d_.algebra.names(); }
  const std::vector<std::string>& b_names() const noexcept { return d_.b_names; }

  Vector mul(const Vector& a, const Vector& a2) const { return d_.algebra.multiply(a, a2); }
  Vector partial(const Vector& a) const;
  Vector act(const Vector& a, const Vector& v) const { return d_.action.apply(a, v); }
  Vector bracket(const Vector& u, const Vector& v) const { return d_.bracket.apply(u, v); }
  Vector anchor(const Vector& u, const Vector& a) const { return d_.anchor.apply(u, a); }
  Vector pairing(const Vector& u, const Vector& v) const { return d_.pairing.apply(u, v); }
  const Vector& one() const noexcept { return d_.algebra.unit(); }

  Vector a_basis(std::size_t i) const { return unit_vector(a_dim(), i); }
  Vector b_basis(std::size_t i) const { return unit_vector(b_dim(), i); }

  /// Matrix (n x m) of v -> pi(v)(a).
  Matrix anchor_at(const Vector& a) const;
  /// Matrix (m x n) of the map d: A -> B.
  Matrix partial_matrix() const { return d_.partial.transpose(); }
  /// Matrix (m x m) of v -> a . v.
  Matrix action_by(const Vector& a) const;

  /// Mode products on C = A (+) B for k in {0, 1}; vectors have length n + m.
  Vector c_mode(int k, const Vector& x, const Vector& y) const;
  /// d on C; zero on the B component.
  Vector c_partial(const Vector& x) const;
  Vector embed_a(const Vector& a) const { return concat(a, zeros(b_dim())); }
  Vector embed_b(const Vector& v) const { return concat(zeros(a_dim()), v); }

 private:
  AlgebroidData d_;
};

/// Homogeneous element of weight 0 (in A) or 1 (in B). Negative weights carry
/// an empty coordinate vector and stand for zero.
struct GradedElement {
  int weight = 0;
  Vector coords;

  static GradedElement in_a(Vector v) { return {0, std::move(v)}; }
  static GradedElement in_b(Vector v) { return {1, std::move(v)}; }
  bool is_zero() const { return valab::is_zero(coords); }
  friend bool operator==(const GradedElement&, const GradedElement&) = default;
};

/// x_k y for k in {-2, -1, 0, 1}. Derived modes use skew symmetry:
/// a_{-2}a' = a'.d(a), u_{-1}a = a.u + d(u_0 a), a_0 u = -u_0 a.
/// Throws Error{OutOfWeightRange} when the result would have weight >= 2.
GradedElement mode(const VertexAlgebroid& g, const GradedElement& x, int k, const GradedElement& y);

CheckReport check_truncated_conformal(const VertexAlgebroid& g);
CheckReport check_vertex_algebroid(const VertexAlgebroid& g);
CheckReport check_compatibility(const VertexAlgebroid& g);

/// check_algebra + check_leibniz(leibniz_of) + the three algebroid suites.
CheckReport check_all(const VertexAlgebroid& g);

LeibnizAlgebra leibniz_of(const VertexAlgebroid& g);

Subspace ker_partial(const VertexAlgebroid& g);
bool ker_partial_is_scalars(const VertexAlgebroid& g);

/// sl2 triple and the highest-weight decomposition of A = Q1 (+) N^1 (+) ... (+) N^l.
struct Sl2Data {
  Vector e, f, h;
  /// blocks[j] = {a_{j,0}, a_{j,1}}, both in A.
  std::vector<std::vector<Vector>> blocks;
};

/// Conclusions of the structure theorem for algebroids whose Leibniz algebra is
/// sl2 extended by a Leibniz module. Throws Error{NotSl2Triple}.
CheckReport semisimple_fixture_check(const VertexAlgebroid& g, const Sl2Data& s);

}  // namespace valab
