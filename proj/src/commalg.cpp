#include "valab/commalg.hpp"

#include <algorithm>
#include <set>

#include "valab/error.hpp"

namespace valab {

namespace {

std::vector<std::string> default_names(std::size_t n, const char* prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::string tuple_label(const std::vector<std::string>& names, std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) s += ", ";
    s += names[i];
    first = false;
  }
  return s + ")";
}

// Positive divisors of |v|, or nullopt when |v| is too large to factor by trial division.
std::optional<std::vector<mpz_class>> divisors(const mpz_class& v) {
  mpz_class a = abs(v);
  if (a == 0) return std::vector<mpz_class>{};
  static const mpz_class kLimit("1000000000000");
  if (a > kLimit) return std::nullopt;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    small.push_back(d);
    if (d * d != a) large.push_back(a / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Rational roots of sum c_k x^k, ascending. Roots whose search would exceed the
// trial-division limit are silently not reported.
std::vector<Rational> rational_roots(std::vector<Rational> c) {
  std::set<Rational> roots;
  while (c.size() > 1 && sgn(c.front()) == 0) {
    roots.insert(Rational(0));
    c.erase(c.begin());
  }
  while (c.size() > 1 && sgn(c.back()) == 0) c.pop_back();
  if (c.size() <= 1) return {roots.begin(), roots.end()};
  mpz_class den = 1;
  for (const auto& q : c) den = lcm(den, q.get_den());
  std::vector<mpz_class> ints;
  for (const auto& q : c) ints.push_back(mpz_class(q * den));
  auto ps = divisors(ints.front());
  auto qs = divisors(ints.back());
  if (!ps || !qs) return {roots.begin(), roots.end()};
  for (const auto& p : *ps)
    for (const auto& q : *qs)
      for (int sign : {1, -1}) {
        Rational r(sign * p, q);
        r.canonicalize();
        if (sgn(eval_poly(c, r)) == 0) roots.insert(r);
      }
  return {roots.begin(), roots.end()};
}

Matrix matrix_power(const Matrix& m, std::size_t k) {
  Matrix r = Matrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace

CommAlgebra::CommAlgebra(Tensor3 mul, Vector unit, std::vector<std::string> names)
    : mul_(std::move(mul)), unit_(std::move(unit)), names_(std::move(names)) {
  const std::size_t n = unit_.size();
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "algebra must have dimension at least 1");
  if (mul_.dim0() != n || mul_.dim1() != n || mul_.dim2() != n)
    throw Error(ErrorKind::DimensionMismatch, "multiplication tensor must be dim x dim x dim");
  if (names_.empty()) names_ = default_names(n, "e");
  if (names_.size() != n) throw Error(ErrorKind::DimensionMismatch, "algebra basis names");
}

Vector CommAlgebra::power(const Vector& x, std::size_t k) const {
  Vector r = unit_;
  for (std::size_t i = 0; i < k; ++i) r = multiply(r, x);
  return r;
}

Matrix CommAlgebra::left_mult(const Vector& x) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(x, basis(j)));
  return Matrix::from_columns(cols, dim());
}

std::vector<std::size_t> Grading::indices_of_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degree.size(); ++i)
    if (degree[i] == d) out.push_back(i);
  return out;
}

CheckReport check_algebra(const CommAlgebra& a) {
  const std::size_t n = a.dim();
  const auto& nm = a.names();
  IdentityTally comm("algebra.commutativity", "x*y = y*x");
  IdentityTally unit("algebra.unitality", "1*x = x");
  IdentityTally assoc("algebra.associativity", "(x*y)*z = x*(y*z)");
  for (std::size_t i = 0; i < n; ++i) {
    unit.record(tuple_label(nm, {i}), a.multiply(a.unit(), a.basis(i)) - a.basis(i));
    for (std::size_t j = i + 1; j < n; ++j)
      comm.record(tuple_label(nm, {i, j}), a.mul().slice(i, j) - a.mul().slice(j, i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ij = a.mul().slice(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = a.multiply(ij, a.basis(k));
        Vector rhs = a.multiply(a.basis(i), a.mul().slice(j, k));
        assoc.record(tuple_label(nm, {i, j, k}), lhs - rhs);
      }
    }
  CheckReport r;
  r.add(assoc.finish());
  r.add(comm.finish());
  r.add(unit.finish());
  return r;
}

bool nilpotent_oracle(const CommAlgebra& a, const Vector& x) {
  return is_zero(a.power(x, a.dim() + 1));
}

Subspace jacobson_radical(const CommAlgebra& a) {
  const std::size_t n = a.dim();
  Vector traces(n);
  for (std::size_t k = 0; k < n; ++k) traces[k] = a.left_mult(a.basis(k)).trace();
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = dot(a.mul().slice(i, j), traces);
  return kernel(gram);
}

std::string to_string(Locality l) {
  switch (l) {
    case Locality::Local: return "Local";
    case Locality::NotLocal: return "NotLocal";
    case Locality::IndeterminateNonSplit: return "IndeterminateNonSplit";
  }
  return "Unknown";
}

std::string to_string(IdempotentStatus::Kind k) {
  switch (k) {
    case IdempotentStatus::Kind::OnlyTrivial: return "OnlyTrivial";
    case IdempotentStatus::Kind::NontrivialFound: return "NontrivialFound";
    case IdempotentStatus::Kind::Indeterminate: return "Indeterminate";
  }
  return "Unknown";
}

std::optional<Vector> find_nontrivial_idempotent(const CommAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> candidates;
  for (std::size_t i = 0; i < n; ++i) candidates.push_back(a.basis(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      candidates.push_back(a.basis(i) + a.basis(j));
      candidates.push_back(a.basis(i) - a.basis(j));
    }
  for (const auto& x : candidates) {
    Matrix lx = a.left_mult(x);
    for (const auto& lambda : rational_roots(characteristic_polynomial(lx))) {
      Vector y = x - lambda * a.unit();
      Matrix p = matrix_power(a.left_mult(y), n);
      if (p.is_zero()) continue;
      Subspace ker = kernel(p);
      Subspace img = image(p);
      if (ker.dim() == 0) continue;
      // 1 = k + i with k in ker, i in img; the img component is the idempotent.
      auto kb = ker.basis_vectors();
      auto ib = img.basis_vectors();
      std::vector<Vector> cols = kb;
      cols.insert(cols.end(), ib.begin(), ib.end());
      auto sol = solve_affine(Matrix::from_columns(cols, n), a.unit());
      if (!sol) continue;
      Vector e = zeros(n);
      for (std::size_t k = 0; k < ib.size(); ++k) e += sol->particular[kb.size() + k] * ib[k];
      if (is_zero(e) || e == a.unit()) continue;
      if (a.multiply(e, e) == e) return e;
    }
  }
  return std::nullopt;
}

Locality is_local(const CommAlgebra& a) {
  if (a.dim() - jacobson_radical(a).dim() == 1) return Locality::Local;
  if (find_nontrivial_idempotent(a)) return Locality::NotLocal;
  return Locality::IndeterminateNonSplit;
}

IdempotentStatus idempotent_status(const CommAlgebra& a) {
  if (a.dim() - jacobson_radical(a).dim() == 1) return {IdempotentStatus::Kind::OnlyTrivial, std::nullopt};
  if (auto e = find_nontrivial_idempotent(a)) return {IdempotentStatus::Kind::NontrivialFound, e};
  return {IdempotentStatus::Kind::Indeterminate, std::nullopt};
}

Subspace socle(const CommAlgebra& a) {
  const std::size_t n = a.dim();
  auto rad = jacobson_radical(a).basis_vectors();
  if (rad.empty()) return Subspace::full(n);
  std::vector<Vector> rows;
  for (const auto& u : rad) {
    Matrix lu = a.left_mult(u);
    for (std::size_t r = 0; r < n; ++r) rows.push_back(lu.row(r));
  }
  return kernel(Matrix::from_rows(rows, n));
}

bool is_gorenstein(const CommAlgebra& a) {
  if (is_local(a) != Locality::Local) throw Error(ErrorKind::NotLocal, "Gorenstein test needs a local algebra");
  return socle(a).dim() == 1;
}

void validate_grading(const CommAlgebra& a, const Grading& g) {
  const std::size_t n = a.dim();
  if (g.degree.size() != n) throw Error(ErrorKind::GradingViolation, "one degree per basis element required");
  for (int d : g.degree)
    if (d < 0 || d > g.top) throw Error(ErrorKind::GradingViolation, "degree outside 0..top");
  std::vector<Vector> deg0;
  for (auto i : g.indices_of_degree(0)) deg0.push_back(a.basis(i));
  if (!(Subspace::span(n, deg0) == Subspace::span(n, {a.unit()})))
    throw Error(ErrorKind::GradingViolation, "degree-0 component must be span{1}");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(a.mul()(i, j, k)) != 0 && g.degree[k] != g.degree[i] + g.degree[j])
          throw Error(ErrorKind::GradingViolation,
                      "product " + a.names()[i] + "*" + a.names()[j] + " has a component of the wrong degree");
}

CheckReport poincare_check(const CommAlgebra& a, const Grading& g) {
  validate_grading(a, g);
  CheckReport r;
  const auto top = g.indices_of_degree(g.top);
  CheckEntry te = verdict("poincare.top_dimension", "top graded component is one-dimensional", top.size() == 1);
  te.value("dim", std::to_string(top.size()));
  r.add(te);
  bool duality = top.size() == 1;
  for (int d = 0; 2 * d <= g.top; ++d) {
    CheckEntry e;
    e.id = "poincare.pairing.d" + std::to_string(d);
    e.anchor = "pairing A_d x A_{s-d} -> A_s is nondegenerate";
    auto lo = g.indices_of_degree(d);
    auto hi = g.indices_of_degree(g.top - d);
    e.value("dim_d", std::to_string(lo.size())).value("dim_s_minus_d", std::to_string(hi.size()));
    if (top.size() != 1) {
      e.status = Status::Skipped;
      e.note = "top component is not one-dimensional";
      r.add(e);
      continue;
    }
    Matrix gram(lo.size(), hi.size());
    for (std::size_t p = 0; p < lo.size(); ++p)
      for (std::size_t q = 0; q < hi.size(); ++q) gram(p, q) = a.mul()(lo[p], hi[q], top[0]);
    std::size_t rk = rank(gram);
    e.value("gram_rank", std::to_string(rk));
    bool ok = lo.size() == hi.size() && rk == lo.size();
    e.status = ok ? Status::Pass : Status::Fail;
    e.failures = ok ? 0 : 1;
    duality = duality && ok;
    r.add(e);
  }
  CheckEntry summary = verdict("poincare.duality", "Poincare duality algebra", duality);
  r.add(summary);
  CheckEntry agree;
  agree.id = "poincare.agrees_with_gorenstein";
  agree.anchor = "Poincare duality holds iff the algebra is Gorenstein";
  if (is_local(a) == Locality::Local) {
    bool gor = socle(a).dim() == 1;
    agree.status = gor == duality ? Status::Pass : Status::Fail;
    agree.failures = gor == duality ? 0 : 1;
    agree.value("gorenstein", gor ? "true" : "false");
  } else {
    agree.status = Status::Skipped;
    agree.note = "algebra is not local";
  }
  r.add(agree);
  return r;
}

Vector choose_t(const CommAlgebra& a) {
  Subspace s = socle(a);
  if (s.dim() != 1)
    throw Error(ErrorKind::NotGorenstein, "socle has dimension " + std::to_string(s.dim()));
  Vector t = s.basis().row(0);
  auto last = std::find_if(t.rbegin(), t.rend(), [](const Rational& q) { return sgn(q) != 0; });
  Rational scale = 1 / *last;
  return scale * t;
}

}  // namespace valab
