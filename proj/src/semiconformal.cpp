#include "valab/semiconformal.hpp"

#include <random>
#include <string>

#include "valab/error.hpp"

namespace valab {

namespace {

// Concatenated residuals of the three L(1) constraint families; affine in l1.
Vector constraint_residuals(const VertexAlgebroid& g, const LOneMap& l1) {
  const std::size_t n = g.a_dim(), m = g.b_dim();
  Vector out;
  auto push = [&out](const Vector& v) { out.insert(out.end(), v.begin(), v.end()); };
  for (std::size_t i = 0; i < n; ++i) push(l1(g.partial(g.a_basis(i))));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      Vector U = g.b_basis(u), V = g.b_basis(v);
      push(l1(g.bracket(U, V)) + g.anchor(V, l1(U)) - g.anchor(U, l1(V)));
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vector A = g.a_basis(a), Bv = g.b_basis(b);
      push(l1(g.act(A, Bv)) - g.mul(A, l1(Bv)) - g.anchor(Bv, A));
    }
  return out;
}

// Coordinates of y along the columns of `cols`, or nullopt.
std::optional<AffineSpace> coordinates(const std::vector<Vector>& cols, const Vector& y) {
  return solve_affine(Matrix::from_columns(cols, y.size()), y);
}

}  // namespace

AffineSpace solve_L1(const VertexAlgebroid& g) {
  const std::size_t n = g.a_dim(), m = g.b_dim(), k = n * m;
  const Vector r0 = constraint_residuals(g, LOneMap{Matrix(n, m)});
  std::vector<Vector> cols;
  cols.reserve(k);
  for (std::size_t idx = 0; idx < k; ++idx)
    cols.push_back(constraint_residuals(g, unflatten(unit_vector(k, idx), n, m)) - r0);
  if (r0.empty()) return AffineSpace{zeros(k), Subspace::full(k)};
  auto sol = solve_affine(Matrix::from_columns(cols, r0.size()), -r0);
  if (!sol) throw Error(ErrorKind::NoSolution, "no L(1) satisfies the constraints");
  return *sol;
}

PinnedLOne pin_L1(const VertexAlgebroid& g, const AffineSpace& solutions, const GorensteinContext& ctx) {
  const std::size_t n = g.a_dim(), m = g.b_dim();
  const Vector eps_row = ctx.form.transpose() * g.one();  // eps(a) = eps_row . a
  const std::vector<Vector> dirs = solutions.homogeneous.basis_vectors();
  // eps(L(1) b_j) is the dot of eps_row with column j of the flattened map.
  auto eps_of = [&](const Vector& x, std::size_t j) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) s += eps_row[i] * x[j * n + i];
    return s;
  };
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t j = 0; j < m; ++j) {
    Vector r(dirs.size());
    for (std::size_t d = 0; d < dirs.size(); ++d) r[d] = eps_of(dirs[d], j);
    rows.push_back(r);
    rhs.push_back(-eps_of(solutions.particular, j));
  }
  Vector particular = solutions.particular;
  std::vector<Vector> rest;
  if (dirs.empty()) {
    if (!is_zero(rhs)) throw Error(ErrorKind::Inconsistent, "eps(L(1)u) = 0 fails on the unique solution");
  } else {
    auto c = solve_affine(Matrix::from_rows(rows, dirs.size()), rhs);
    if (!c) throw Error(ErrorKind::Inconsistent, "eps(L(1)u) = 0 has no solution in the L(1) family");
    for (std::size_t d = 0; d < dirs.size(); ++d) particular += c->particular[d] * dirs[d];
    for (const auto& h : c->homogeneous.basis_vectors()) {
      Vector x = zeros(n * m);
      for (std::size_t d = 0; d < dirs.size(); ++d) x += h[d] * dirs[d];
      rest.push_back(x);
    }
  }
  AffineSpace space{particular, Subspace::span(n * m, rest)};
  // Canonical point: reduce the particular solution against the remaining directions.
  space.particular = space.homogeneous.reduce(space.particular);
  PinnedLOne out{space, space.dim() == 0, unflatten(space.particular, n, m)};
  return out;
}

HeisenbergWitness heisenberg_search(const GorensteinContext& ctx) {
  const VertexAlgebroid& g = ctx.base;
  const Vector& t = ctx.t;
  const Vector one = g.one();
  Matrix at_t = g.anchor_at(t);
  if (at_t.is_zero()) throw Error(ErrorKind::NoGenerator, "v_0 t = 0 for every v, so M is all of B");
  auto gen = solve_affine(at_t, t);
  if (!gen) throw Error(ErrorKind::NoGenerator, "no g with g_0 t = t");

  HeisenbergWitness w;
  w.g = gen->particular;
  Vector gg = g.pairing(w.g, w.g);
  auto coeffs = coordinates({one, t}, gg);
  if (!coeffs) throw Error(ErrorKind::NotInSpan, "g_1 g is not in span{1, t}");
  w.beta = coeffs->particular[0];
  w.rho = coeffs->particular[1];

  const Vector dt = g.partial(t);
  w.h_prime = w.g - Rational(w.rho / 2) * dt;
  Vector square = g.bracket(w.h_prime, w.h_prime);
  if (!is_zero(square)) {
    // (h' + l d(t))_0 (h' + l d(t)) = h'_0 h' + l d(t) since d(t)_0 = 0 and h'_0 d(t) = d(h'_0 t) = d(t).
    auto lambda = coordinates({dt}, -square);
    if (!lambda) throw Error(ErrorKind::NotInSpan, "h'_0 h' is not a multiple of d(t)");
    w.h_prime += lambda->particular[0] * dt;
    w.corrected = true;
    if (!is_zero(g.bracket(w.h_prime, w.h_prime)))
      throw Error(ErrorKind::NotInSpan, "h'_0 h' cannot be cleared");
  }
  auto b = coordinates({one}, g.pairing(w.h_prime, w.h_prime));
  if (!b) throw Error(ErrorKind::NotInSpan, "h'_1 h' is not a multiple of 1");
  w.beta = b->particular[0];
  if (sgn(w.beta) == 0) throw Error(ErrorKind::BetaZero, "h'_1 h' = 0");
  if (auto root = rational_sqrt(w.beta)) {
    w.normalized = true;
    w.h = Rational(1 / *root) * w.h_prime;
  }
  return w;
}

LoopVector loop_virasoro(const BModuleLoop& mod, int mode_m, std::size_t u, int n) {
  LoopVector out;
  auto emit = [&](std::size_t v, int power, const Rational& c) {
    if (sgn(c) == 0) return;
    if (power < mod.window_lo || power > mod.window_hi)
      throw Error(ErrorKind::WindowOverflow, "L(" + std::to_string(mode_m) + ") sends t^" + std::to_string(n) +
                                                 " to t^" + std::to_string(power));
    Rational& slot = out[{v, power}];
    slot += c;
    if (sgn(slot) == 0) out.erase({v, power});
  };
  const bool top = u >= mod.u0_dim;
  Rational c = -(mode_m + n + 1);
  if (top) c += mode_m + 1;
  emit(u, mode_m + n, c);
  if (top) {
    Rational k(mode_m * (mode_m + 1), 2);
    k.canonicalize();
    if (auto it = mod.l1_coefficient_override.find(mode_m); it != mod.l1_coefficient_override.end()) k = it->second;
    if (sgn(k) != 0)
      for (std::size_t i = 0; i < mod.u0_dim; ++i) emit(i, mode_m + n - 1, k * mod.l1_action(i, u - mod.u0_dim));
  }
  return out;
}

LoopVector loop_virasoro(const BModuleLoop& mod, int mode_m, const LoopVector& x) {
  LoopVector out;
  for (const auto& [key, coeff] : x)
    for (const auto& [k2, c2] : loop_virasoro(mod, mode_m, key.first, key.second)) {
      Rational& slot = out[k2];
      slot += coeff * c2;
      if (sgn(slot) == 0) out.erase(k2);
    }
  return out;
}

CheckReport virasoro_commutator_check(const BModuleLoop& mod, int max_mode) {
  IdentityTally tally("loop.virasoro_commutator", "[L(p), L(q)] = (p - q) L(p + q) on L(U)");
  const int lo = mod.window_lo + 4, hi = mod.window_hi - 2 * max_mode;
  if (lo > hi) throw Error(ErrorKind::WindowOverflow, "window too small for the requested modes");
  for (int p = -1; p <= max_mode; ++p)
    for (int q = -1; q <= max_mode; ++q)
      for (std::size_t u = 0; u < mod.dim(); ++u)
        for (int n = lo; n <= hi; ++n) {
          LoopVector x{{{u, n}, Rational(1)}};
          LoopVector lhs = loop_virasoro(mod, p, loop_virasoro(mod, q, x));
          for (const auto& [k, c] : loop_virasoro(mod, q, loop_virasoro(mod, p, x))) {
            Rational& slot = lhs[k];
            slot -= c;
            if (sgn(slot) == 0) lhs.erase(k);
          }
          for (const auto& [k, c] : loop_virasoro(mod, p + q, x)) {
            Rational& slot = lhs[k];
            slot -= (p - q) * c;
            if (sgn(slot) == 0) lhs.erase(k);
          }
          std::string detail;
          for (const auto& [k, c] : lhs)
            detail += (detail.empty() ? "" : " + ") + to_string(c) + " u" + std::to_string(k.first) + " t^" +
                      std::to_string(k.second);
          tally.record("(p=" + std::to_string(p) + ", q=" + std::to_string(q) + ", u=" + std::to_string(u) +
                           ", n=" + std::to_string(n) + ")",
                       lhs.empty(), detail);
        }
  CheckReport r;
  r.add(tally.finish());
  return r;
}

BModuleLoop random_module(std::uint64_t seed, int window) {
  std::mt19937_64 rng(seed);
  BModuleLoop mod;
  mod.u0_dim = 1 + rng() % 3;
  mod.u1_dim = rng() % 4;
  mod.window_lo = -window;
  mod.window_hi = window;
  mod.l1_action = Matrix(mod.u0_dim, mod.u1_dim);
  for (std::size_t i = 0; i < mod.u0_dim; ++i)
    for (std::size_t j = 0; j < mod.u1_dim; ++j) {
      Rational q(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 2));
      q.canonicalize();
      mod.l1_action(i, j) = q;
    }
  return mod;
}

CheckEntry indecomposability_report(const VertexAlgebroid& g) {
  const Locality loc = is_local(g.algebra());
  CheckEntry e;
  e.id = "v0.indecomposable";
  e.anchor = "for semiconformal V, V_0 is local iff V is indecomposable";
  e.value("locality", to_string(loc));
  switch (loc) {
    case Locality::Local:
      e.status = Status::Pass;
      e.value("verdict", "indecomposable");
      break;
    case Locality::NotLocal:
      e.status = Status::Pass;
      e.value("verdict", "decomposable");
      break;
    case Locality::IndeterminateNonSplit:
      e.status = Status::Indeterminate;
      e.value("verdict", "undetermined");
      e.note = "no rational idempotent found and the algebra does not split over Q";
      break;
  }
  IdempotentStatus idem = idempotent_status(g.algebra());
  e.value("idempotents", to_string(idem.kind));
  if (idem.witness) e.value("idempotent", to_string(*idem.witness));
  return e;
}

}  // namespace valab
