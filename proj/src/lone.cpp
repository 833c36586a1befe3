#include "valab/lone.hpp"

#include "valab/error.hpp"

namespace valab {

CheckReport l1_constraints(const VertexAlgebroid& g, const LOneMap& l1) {
  const std::size_t n = g.a_dim(), m = g.b_dim();
  if (l1.matrix.rows() != n || l1.matrix.cols() != m)
    throw Error(ErrorKind::DimensionMismatch, "L(1) must be dim A x dim B");
  const auto& an = g.a_names();
  const auto& bn = g.b_names();
  IdentityTally kp("l1.kills_partial", "L(1) d(A) = 0");
  IdentityTally br("l1.bracket", "L(1)(u_0 v) = (L(1)u)_0 v + u_0 L(1)v");
  IdentityTally ac("l1.action", "L(1)(a.b) = a*L(1)b - a_0 b");
  for (std::size_t i = 0; i < n; ++i) kp.record("(" + an[i] + ")", l1(g.partial(g.a_basis(i))));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      Vector U = g.b_basis(u), V = g.b_basis(v);
      // (a)_0 v = -v_0 a
      br.record("(" + bn[u] + ", " + bn[v] + ")",
                l1(g.bracket(U, V)) + g.anchor(V, l1(U)) - g.anchor(U, l1(V)));
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vector A = g.a_basis(a), Bv = g.b_basis(b);
      ac.record("(" + an[a] + ", " + bn[b] + ")", l1(g.act(A, Bv)) - g.mul(A, l1(Bv)) - g.anchor(Bv, A));
    }
  CheckReport r;
  r.add(kp.finish());
  r.add(br.finish());
  r.add(ac.finish());
  return r;
}

bool l1_valid(const VertexAlgebroid& g, const LOneMap& l1) { return l1_constraints(g, l1).passed(); }

Vector flatten(const LOneMap& l1) {
  const std::size_t n = l1.matrix.rows(), m = l1.matrix.cols();
  Vector x(n * m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) x[j * n + i] = l1.matrix(i, j);
  return x;
}

LOneMap unflatten(const Vector& x, std::size_t a_dim, std::size_t b_dim) {
  if (x.size() != a_dim * b_dim) throw Error(ErrorKind::DimensionMismatch, "L(1) coordinate count");
  LOneMap l1{Matrix(a_dim, b_dim)};
  for (std::size_t j = 0; j < b_dim; ++j)
    for (std::size_t i = 0; i < a_dim; ++i) l1.matrix(i, j) = x[j * a_dim + i];
  return l1;
}

}  // namespace valab
