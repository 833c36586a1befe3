#include "valab/algebroid.hpp"

#include "valab/error.hpp"

namespace valab {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::DimensionMismatch, what);
}

std::string label(std::initializer_list<std::string> parts) {
  std::string s = "(";
  bool first = true;
  for (const auto& p : parts) {
    if (!first) s += ", ";
    s += p;
    first = false;
  }
  return s + ")";
}

}  // namespace

VertexAlgebroid::VertexAlgebroid(AlgebroidData data) : d_(std::move(data)) {
  const std::size_t n = a_dim(), m = b_dim();
  require(d_.partial.rows() == n && d_.partial.cols() == m, "partial must be dim A x dim B");
  require(d_.action.dim0() == n && d_.action.dim1() == m && d_.action.dim2() == m, "action must be n x m x m");
  require(d_.bracket.dim0() == m && d_.bracket.dim1() == m && d_.bracket.dim2() == m, "bracket must be m x m x m");
  require(d_.anchor.dim0() == m && d_.anchor.dim1() == n && d_.anchor.dim2() == n, "anchor must be m x n x n");
  require(d_.pairing.dim0() == m && d_.pairing.dim1() == m && d_.pairing.dim2() == n, "pairing must be m x m x n");
}

VertexAlgebroid VertexAlgebroid::trivial(CommAlgebra algebra) {
  const std::size_t n = algebra.dim();
  AlgebroidData d{std::move(algebra), {}, Matrix(n, 0), Tensor3(n, 0, 0), Tensor3(0, 0, 0),
                  Tensor3(0, n, n), Tensor3(0, 0, n)};
  return VertexAlgebroid(std::move(d));
}

Vector VertexAlgebroid::partial(const Vector& a) const { return d_.partial.transpose() * a; }

Matrix VertexAlgebroid::anchor_at(const Vector& a) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < b_dim(); ++j) cols.push_back(anchor(b_basis(j), a));
  return Matrix::from_columns(cols, a_dim());
}

Matrix VertexAlgebroid::action_by(const Vector& a) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < b_dim(); ++j) cols.push_back(act(a, b_basis(j)));
  return Matrix::from_columns(cols, b_dim());
}

Vector VertexAlgebroid::c_mode(int k, const Vector& x, const Vector& y) const {
  const std::size_t n = a_dim(), m = b_dim();
  Vector xa(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n)), xb(x.begin() + static_cast<std::ptrdiff_t>(n), x.end());
  Vector ya(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n)), yb(y.begin() + static_cast<std::ptrdiff_t>(n), y.end());
  if (k == 0) return concat(anchor(xb, ya) - anchor(yb, xa), bracket(xb, yb));
  if (k == 1) return concat(pairing(xb, yb), zeros(m));
  return zeros(n + m);
}

Vector VertexAlgebroid::c_partial(const Vector& x) const {
  Vector xa(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(a_dim()));
  return concat(zeros(a_dim()), partial(xa));
}

GradedElement mode(const VertexAlgebroid& g, const GradedElement& x, int k, const GradedElement& y) {
  const int w = x.weight + y.weight - k - 1;
  if (w < 0 || x.weight < 0 || y.weight < 0) return {std::min(w, -1), {}};
  if (w >= 2 || k < -2)
    throw Error(ErrorKind::OutOfWeightRange, "mode product lands in weight " + std::to_string(w));
  const bool xa = x.weight == 0, ya = y.weight == 0;
  if (xa && ya) {
    if (k == -1) return GradedElement::in_a(g.mul(x.coords, y.coords));
    return GradedElement::in_b(g.act(y.coords, g.partial(x.coords)));  // k == -2
  }
  if (xa && !ya) {
    if (k == 0) return GradedElement::in_a(-g.anchor(y.coords, x.coords));
    return GradedElement::in_b(g.act(x.coords, y.coords));  // k == -1
  }
  if (!xa && ya) {
    if (k == 0) return GradedElement::in_a(g.anchor(x.coords, y.coords));
    return GradedElement::in_b(g.act(y.coords, x.coords) + g.partial(g.anchor(x.coords, y.coords)));
  }
  if (k == 1) return GradedElement::in_a(g.pairing(x.coords, y.coords));
  return GradedElement::in_b(g.bracket(x.coords, y.coords));  // k == 0
}

CheckReport check_truncated_conformal(const VertexAlgebroid& g) {
  const std::size_t n = g.a_dim(), m = g.b_dim(), c = n + m;
  std::vector<std::string> cn = g.a_names();
  cn.insert(cn.end(), g.b_names().begin(), g.b_names().end());
  auto ce = [&](std::size_t i) { return unit_vector(c, i); };
  const auto& an = g.a_names();
  const auto& bn = g.b_names();

  IdentityTally d0("tc.partial_mode0", "(da)_0 = 0");
  IdentityTally d1("tc.partial_mode1", "(da)_1 = -a_0");
  IdentityTally dd("tc.partial_derivation", "d(u_0 a) = u_0 d(a)");
  IdentityTally sa("tc.skew_anchor", "u_0 a = -a_0 u");
  IdentityTally sb("tc.skew_bracket", "u_0 v = -v_0 u + d(u_1 v)");
  IdentityTally ps("tc.pairing_symmetry", "u_1 v = v_1 u");
  IdentityTally as0("tc.assoc_mode0", "x_0 y_0 z = y_0 x_0 z + (x_0 y)_0 z");
  IdentityTally as1("tc.assoc_mode1", "x_0 y_1 z = y_1 x_0 z + (x_0 y)_1 z");

  for (std::size_t i = 0; i < n; ++i) {
    Vector a = g.embed_a(g.a_basis(i));
    Vector da = g.c_partial(a);
    for (std::size_t j = 0; j < c; ++j) {
      d0.record(label({"d" + an[i], cn[j]}), g.c_mode(0, da, ce(j)));
      d1.record(label({"d" + an[i], cn[j]}), g.c_mode(1, da, ce(j)) + g.c_mode(0, a, ce(j)));
    }
  }
  for (std::size_t u = 0; u < m; ++u) {
    Vector ub = g.embed_b(g.b_basis(u));
    for (std::size_t i = 0; i < n; ++i) {
      Vector a = g.embed_a(g.a_basis(i));
      dd.record(label({bn[u], an[i]}), g.c_partial(g.c_mode(0, ub, a)) - g.c_mode(0, ub, g.c_partial(a)));
      sa.record(label({bn[u], an[i]}), g.c_mode(0, ub, a) + g.c_mode(0, a, ub));
    }
    for (std::size_t v = 0; v < m; ++v) {
      Vector vb = g.embed_b(g.b_basis(v));
      sb.record(label({bn[u], bn[v]}), g.c_mode(0, ub, vb) + g.c_mode(0, vb, ub) - g.c_partial(g.c_mode(1, ub, vb)));
      if (u < v) ps.record(label({bn[u], bn[v]}), g.c_mode(1, ub, vb) - g.c_mode(1, vb, ub));
    }
  }
  for (std::size_t x = 0; x < c; ++x)
    for (std::size_t y = 0; y < c; ++y) {
      Vector xy = g.c_mode(0, ce(x), ce(y));
      for (std::size_t z = 0; z < c; ++z) {
        std::string lab = label({cn[x], cn[y], cn[z]});
        for (int k : {0, 1}) {
          Vector res = g.c_mode(0, ce(x), g.c_mode(k, ce(y), ce(z))) - g.c_mode(k, ce(y), g.c_mode(0, ce(x), ce(z))) -
                       g.c_mode(k, xy, ce(z));
          (k == 0 ? as0 : as1).record(lab, res);
        }
      }
    }
  CheckReport r;
  for (const auto* t : {&d0, &d1, &dd, &sa, &sb, &ps, &as0, &as1}) r.add(t->finish());
  return r;
}

CheckReport check_vertex_algebroid(const VertexAlgebroid& g) {
  const std::size_t n = g.a_dim(), m = g.b_dim();
  const auto& an = g.a_names();
  const auto& bn = g.b_names();
  auto A = [&](std::size_t i) { return g.a_basis(i); };
  auto B = [&](std::size_t i) { return g.b_basis(i); };

  IdentityTally unit("va.unit_action", "1.v = v");
  IdentityTally leib("va.leibniz", "[u,[v,w]] = [[u,v],w] + [v,[u,w]]");
  IdentityTally ader("va.anchor_derivation", "pi(u)(a*a') = pi(u)(a)*a' + a*pi(u)(a')");
  IdentityTally ahom("va.anchor_homomorphism", "pi([u,v]) = [pi(u), pi(v)]");
  IdentityTally psym("va.pairing_symmetry", "<u,v> = <v,u>");
  IdentityTally apar("va.anchor_partial", "pi(d(a)) = 0");
  IdentityTally i1("va.module_assoc", "a.(a'.v) - (a*a').v = pi(v)(a).d(a') + pi(v)(a').d(a)");
  IdentityTally i2("va.bracket_action", "[u,a.v] = pi(u)(a).v + a.[u,v]");
  IdentityTally i3("va.bracket_symmetric_part", "[u,v] + [v,u] = d(<u,v>)");
  IdentityTally i4("va.anchor_linearity", "pi(a.v) = a pi(v)");
  IdentityTally i5("va.pairing_action", "<a.u,v> = a*<u,v> - pi(u)(pi(v)(a))");
  IdentityTally i6("va.pairing_invariance", "pi(v)(<v1,v2>) = <[v,v1],v2> + <v1,[v,v2]>");
  IdentityTally i7("va.partial_derivation", "d(a*a') = a.d(a') + a'.d(a)");
  IdentityTally i8("va.bracket_partial", "[v,d(a)] = d(pi(v)(a))");
  IdentityTally i9("va.pairing_partial", "<v,d(a)> = pi(v)(a)");

  for (std::size_t v = 0; v < m; ++v) unit.record(label({bn[v]}), g.act(g.one(), B(v)) - B(v));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      for (std::size_t w = 0; w < m; ++w) {
        leib.record(label({bn[u], bn[v], bn[w]}),
                    g.bracket(B(u), g.bracket(B(v), B(w))) - g.bracket(g.bracket(B(u), B(v)), B(w)) -
                        g.bracket(B(v), g.bracket(B(u), B(w))));
        i6.record(label({bn[u], bn[v], bn[w]}),
                  g.anchor(B(u), g.pairing(B(v), B(w))) - g.pairing(g.bracket(B(u), B(v)), B(w)) -
                      g.pairing(B(v), g.bracket(B(u), B(w))));
      }
      if (u < v) psym.record(label({bn[u], bn[v]}), g.pairing(B(u), B(v)) - g.pairing(B(v), B(u)));
      i3.record(label({bn[u], bn[v]}),
                g.bracket(B(u), B(v)) + g.bracket(B(v), B(u)) - g.partial(g.pairing(B(u), B(v))));
      for (std::size_t a = 0; a < n; ++a) {
        ahom.record(label({bn[u], bn[v], an[a]}),
                    g.anchor(g.bracket(B(u), B(v)), A(a)) - g.anchor(B(u), g.anchor(B(v), A(a))) +
                        g.anchor(B(v), g.anchor(B(u), A(a))));
        i2.record(label({bn[u], an[a], bn[v]}),
                  g.bracket(B(u), g.act(A(a), B(v))) - g.act(g.anchor(B(u), A(a)), B(v)) -
                      g.act(A(a), g.bracket(B(u), B(v))));
        i5.record(label({an[a], bn[u], bn[v]}),
                  g.pairing(g.act(A(a), B(u)), B(v)) - g.mul(A(a), g.pairing(B(u), B(v))) +
                      g.anchor(B(u), g.anchor(B(v), A(a))));
      }
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t a2 = 0; a2 < n; ++a2) {
      Vector prod = g.mul(A(a), A(a2));
      apar.record(label({"d" + an[a], an[a2]}), g.anchor(g.partial(A(a)), A(a2)));
      i7.record(label({an[a], an[a2]}),
                g.partial(prod) - g.act(A(a), g.partial(A(a2))) - g.act(A(a2), g.partial(A(a))));
      for (std::size_t v = 0; v < m; ++v) {
        i1.record(label({an[a], an[a2], bn[v]}),
                  g.act(A(a), g.act(A(a2), B(v))) - g.act(prod, B(v)) -
                      g.act(g.anchor(B(v), A(a)), g.partial(A(a2))) -
                      g.act(g.anchor(B(v), A(a2)), g.partial(A(a))));
        ader.record(label({bn[v], an[a], an[a2]}),
                    g.anchor(B(v), prod) - g.mul(g.anchor(B(v), A(a)), A(a2)) -
                        g.mul(A(a), g.anchor(B(v), A(a2))));
        i4.record(label({an[a], bn[v], an[a2]}),
                  g.anchor(g.act(A(a), B(v)), A(a2)) - g.mul(A(a), g.anchor(B(v), A(a2))));
      }
    }
  for (std::size_t v = 0; v < m; ++v)
    for (std::size_t a = 0; a < n; ++a) {
      i8.record(label({bn[v], an[a]}),
                g.bracket(B(v), g.partial(A(a))) - g.partial(g.anchor(B(v), A(a))));
      i9.record(label({bn[v], an[a]}), g.pairing(B(v), g.partial(A(a))) - g.anchor(B(v), A(a)));
    }
  CheckReport r;
  for (const auto* t : {&unit, &leib, &ader, &ahom, &psym, &apar, &i1, &i2, &i3, &i4, &i5, &i6, &i7, &i8, &i9})
    r.add(t->finish());
  return r;
}

CheckReport check_compatibility(const VertexAlgebroid& g) {
  const std::size_t n = g.a_dim(), m = g.b_dim();
  const auto& an = g.a_names();
  const auto& bn = g.b_names();
  auto A = [&](std::size_t i) { return g.a_basis(i); };
  auto B = [&](std::size_t i) { return g.b_basis(i); };

  IdentityTally c1("compat.module_assoc", "a.(a'.u) - (a*a').u = (u_0 a).d(a') + (u_0 a').d(a)");
  IdentityTally c2("compat.bracket_action", "u_0(a.v) - a.(u_0 v) = (u_0 a).v");
  IdentityTally c3("compat.anchor_derivation", "u_0(a*a') = a*(u_0 a') + (u_0 a)*a'");
  IdentityTally c4("compat.anchor_module", "a_0(a'.v) = a'*(a_0 v)");
  IdentityTally c5("compat.pairing_action", "(a.u)_1 v = a*(u_1 v) - u_0 v_0 a");
  IdentityTally c6("compat.partial_derivation", "d(a*a') = a.d(a') + a'.d(a)");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t a2 = 0; a2 < n; ++a2) {
      Vector prod = g.mul(A(a), A(a2));
      c6.record(label({an[a], an[a2]}),
                g.partial(prod) - g.act(A(a), g.partial(A(a2))) - g.act(A(a2), g.partial(A(a))));
      for (std::size_t u = 0; u < m; ++u) {
        c1.record(label({an[a], an[a2], bn[u]}),
                  g.act(A(a), g.act(A(a2), B(u))) - g.act(prod, B(u)) -
                      g.act(g.anchor(B(u), A(a)), g.partial(A(a2))) -
                      g.act(g.anchor(B(u), A(a2)), g.partial(A(a))));
        c3.record(label({bn[u], an[a], an[a2]}),
                  g.anchor(B(u), prod) - g.mul(A(a), g.anchor(B(u), A(a2))) -
                      g.mul(g.anchor(B(u), A(a)), A(a2)));
        // a_0 w = -pi(w)(a)
        c4.record(label({an[a], an[a2], bn[u]}),
                  -g.anchor(g.act(A(a2), B(u)), A(a)) + g.mul(A(a2), g.anchor(B(u), A(a))));
      }
    }
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t a = 0; a < n; ++a) {
        c2.record(label({bn[u], an[a], bn[v]}),
                  g.bracket(B(u), g.act(A(a), B(v))) - g.act(A(a), g.bracket(B(u), B(v))) -
                      g.act(g.anchor(B(u), A(a)), B(v)));
        c5.record(label({an[a], bn[u], bn[v]}),
                  g.pairing(g.act(A(a), B(u)), B(v)) - g.mul(A(a), g.pairing(B(u), B(v))) +
                      g.anchor(B(u), g.anchor(B(v), A(a))));
      }
  CheckReport r;
  for (const auto* t : {&c1, &c2, &c3, &c4, &c5, &c6}) r.add(t->finish());
  return r;
}

LeibnizAlgebra leibniz_of(const VertexAlgebroid& g) { return LeibnizAlgebra(g.data().bracket, g.b_names()); }

CheckReport check_all(const VertexAlgebroid& g) {
  CheckReport r = check_algebra(g.algebra());
  r.append(check_leibniz(leibniz_of(g)));
  r.append(check_truncated_conformal(g));
  r.append(check_vertex_algebroid(g));
  r.append(check_compatibility(g));
  return r;
}

Subspace ker_partial(const VertexAlgebroid& g) { return kernel(g.partial_matrix()); }

bool ker_partial_is_scalars(const VertexAlgebroid& g) {
  return ker_partial(g) == Subspace::span(g.a_dim(), {g.one()});
}

CheckReport semisimple_fixture_check(const VertexAlgebroid& g, const Sl2Data& s) {
  const std::size_t n = g.a_dim();
  const Vector& one = g.one();
  if (g.bracket(s.e, s.f) != s.h || g.bracket(s.h, s.e) != Rational(2) * s.e ||
      g.bracket(s.h, s.f) != Rational(-2) * s.f)
    throw Error(ErrorKind::NotSl2Triple, "designated e, f, h do not satisfy the sl2 relations");

  CheckReport r;
  r.add(verdict("ss.context_dim_a", "dim A >= 2", n >= 2));

  IdentityTally pv("ss.pairing_vanishing", "e_1 e = f_1 f = e_1 h = f_1 h = 0");
  pv.record("(e, e)", g.pairing(s.e, s.e));
  pv.record("(f, f)", g.pairing(s.f, s.f));
  pv.record("(e, h)", g.pairing(s.e, s.h));
  pv.record("(f, h)", g.pairing(s.f, s.h));
  r.add(pv.finish());
  CheckEntry k = verdict("ss.k_equals_one", "e_1 f = 1", g.pairing(s.e, s.f) == one);
  k.value("e_1 f", to_string(g.pairing(s.e, s.f)));
  r.add(k);
  CheckEntry hh = verdict("ss.h1h", "h_1 h = 2", g.pairing(s.h, s.h) == Rational(2) * one);
  hh.value("h_1 h", to_string(g.pairing(s.h, s.h)));
  r.add(hh);
  r.add(verdict("ss.ker_partial", "Ker d = Q1", ker_partial_is_scalars(g)));

  std::vector<Vector> span_all{one};
  bool blocks_ok = true;
  for (const auto& blk : s.blocks) {
    blocks_ok = blocks_ok && blk.size() == 2 && Subspace::span(n, blk).dim() == 2 &&
                g.anchor(s.f, blk[0]) == blk[1];
    span_all.insert(span_all.end(), blk.begin(), blk.end());
  }
  const std::size_t l = s.blocks.size();
  blocks_ok = blocks_ok && Subspace::span(n, span_all).dim() == 1 + 2 * l && n == 1 + 2 * l;
  CheckEntry bd = verdict("ss.block_dims", "each N^j is two-dimensional and A = Q1 + sum N^j", blocks_ok);
  std::size_t leib_dim = leib_subspace(leibniz_of(g)).dim();
  bd.value("l", std::to_string(l)).value("dim_leib", std::to_string(leib_dim));
  r.add(bd);
  r.add(verdict("ss.leib_dim", "dim Leib(B) = 2l", leib_dim == 2 * l));

  auto elem = [&](std::size_t j, int i) {
    if (i < 0 || i > 1) return zeros(n);
    return s.blocks[j][static_cast<std::size_t>(i)];
  };
  IdentityTally r1("ss.rel1", "a_{j,i} * a_{j',i'} = 0");
  IdentityTally r2("ss.rel2", "a_{j,0}.e = 0, a_{j,1}.e = d(a_{j,0})");
  IdentityTally r3("ss.rel3", "a_{j,0}.f = d(a_{j,1}), a_{j,1}.f = 0");
  IdentityTally r4("ss.rel4", "a_{j,0}.h = d(a_{j,0}), a_{j,1}.h = -d(a_{j,1})");
  IdentityTally r5("ss.rel5", "a_{j,i}.d(a_{j',i'}) = 0");
  IdentityTally r6("ss.rel6", "d(a_{j,i})_1 e = e_0 a_{j,i} = (2-i) a_{j,i-1}");
  IdentityTally r7("ss.rel7", "d(a_{j,i})_1 f = f_0 a_{j,i} = (i+1) a_{j,i+1}");
  IdentityTally r8("ss.rel8", "d(a_{j,i})_1 h = h_0 a_{j,i} = (1-2i) a_{j,i}");
  for (std::size_t j = 0; j < l; ++j)
    for (int i = 0; i < 2; ++i) {
      const std::string lab = "(a_" + std::to_string(j + 1) + "," + std::to_string(i) + ")";
      Vector a = elem(j, i);
      Vector da = g.partial(a);
      for (std::size_t j2 = 0; j2 < l; ++j2)
        for (int i2 = 0; i2 < 2; ++i2) {
          const std::string lab2 = lab + "(a_" + std::to_string(j2 + 1) + "," + std::to_string(i2) + ")";
          r1.record(lab2, g.mul(a, elem(j2, i2)));
          r5.record(lab2, g.act(a, g.partial(elem(j2, i2))));
        }
      r2.record(lab, g.act(a, s.e) - (i == 0 ? zeros(g.b_dim()) : g.partial(elem(j, 0))));
      r3.record(lab, g.act(a, s.f) - (i == 0 ? g.partial(elem(j, 1)) : zeros(g.b_dim())));
      r4.record(lab, g.act(a, s.h) - (i == 0 ? g.partial(a) : -g.partial(a)));
      Vector expect6 = Rational(2 - i) * elem(j, i - 1);
      Vector expect7 = Rational(i + 1) * elem(j, i + 1);
      Vector expect8 = Rational(1 - 2 * i) * a;
      r6.record(lab, concat(g.pairing(da, s.e) - expect6, g.anchor(s.e, a) - expect6));
      r7.record(lab, concat(g.pairing(da, s.f) - expect7, g.anchor(s.f, a) - expect7));
      r8.record(lab, concat(g.pairing(da, s.h) - expect8, g.anchor(s.h, a) - expect8));
    }
  for (const auto* t : {&r1, &r2, &r3, &r4, &r5, &r6, &r7, &r8}) r.add(t->finish());

  const CommAlgebra& alg = g.algebra();
  auto rad = jacobson_radical(alg).basis_vectors();
  IdentityTally sq("ss.square_zero", "m^2 = 0");
  for (std::size_t p = 0; p < rad.size(); ++p)
    for (std::size_t q = p; q < rad.size(); ++q)
      sq.record("(m" + std::to_string(p) + ", m" + std::to_string(q) + ")", alg.multiply(rad[p], rad[q]));
  r.add(sq.finish());
  r.add(verdict("ss.local", "A is local", is_local(alg) == Locality::Local));
  return r;
}

}  // namespace valab
