#include "valab/leibniz.hpp"

#include "valab/error.hpp"

namespace valab {

LeibnizAlgebra::LeibnizAlgebra(Tensor3 bracket, std::vector<std::string> names)
    : bracket_(std::move(bracket)), names_(std::move(names)) {
  const std::size_t n = bracket_.dim0();
  if (bracket_.dim1() != n || bracket_.dim2() != n)
    throw Error(ErrorKind::DimensionMismatch, "bracket tensor must be dim x dim x dim");
  if (names_.empty())
    for (std::size_t i = 0; i < n; ++i) names_.push_back("b" + std::to_string(i));
  if (names_.size() != n) throw Error(ErrorKind::DimensionMismatch, "Leibniz basis names");
}

Matrix LeibnizAlgebra::left_ad(const Vector& x) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back((*this)(x, basis(j)));
  return Matrix::from_columns(cols, dim());
}

CheckReport check_leibniz(const LeibnizAlgebra& l) {
  const std::size_t n = l.dim();
  const auto& nm = l.names();
  IdentityTally t("leibniz.identity", "[a,[b,c]] = [[a,b],c] + [b,[a,c]]");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector a = l.basis(i), b = l.basis(j), c = l.basis(k);
        Vector res = l(a, l(b, c)) - l(l(a, b), c) - l(b, l(a, c));
        t.record("(" + nm[i] + ", " + nm[j] + ", " + nm[k] + ")", res);
      }
  CheckReport r;
  r.add(t.finish());
  return r;
}

Subspace leib_subspace(const LeibnizAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector s = l.bracket().slice(i, j);
      if (i != j) s += l.bracket().slice(j, i);
      gens.push_back(std::move(s));
    }
  return Subspace::span(n, gens);
}

Subspace bracket_span(const LeibnizAlgebra& l, const Subspace& s) {
  auto b = s.basis_vectors();
  std::vector<Vector> gens;
  for (const auto& x : b)
    for (const auto& y : b) gens.push_back(l(x, y));
  return Subspace::span(l.dim(), gens);
}

std::vector<Subspace> derived_series(const LeibnizAlgebra& l, const Subspace& s) {
  std::vector<Subspace> out{bracket_span(l, s)};
  for (;;) {
    Subspace next = bracket_span(l, out.back());
    if (next == out.back()) break;
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<Subspace> derived_series(const LeibnizAlgebra& l) {
  return derived_series(l, Subspace::full(l.dim()));
}

bool is_solvable(const LeibnizAlgebra& l, const Subspace& s) { return derived_series(l, s).back().dim() == 0; }

bool is_solvable(const LeibnizAlgebra& l) { return is_solvable(l, Subspace::full(l.dim())); }

Subspace solvable_radical(const LeibnizAlgebra& l) {
  const std::size_t n = l.dim();
  Subspace leib = leib_subspace(l);
  // Quotient coordinates: the non-pivot coordinates after reduction modulo Leib.
  std::vector<bool> pivot(n, false);
  for (auto p : leib.pivots()) pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) free.push_back(i);
  const std::size_t q = free.size();
  auto project = [&](const Vector& v) {
    Vector r = leib.reduce(v);
    Vector out(q);
    for (std::size_t i = 0; i < q; ++i) out[i] = r[free[i]];
    return out;
  };
  auto lift = [&](const Vector& v) {
    Vector out = zeros(n);
    for (std::size_t i = 0; i < q; ++i) out[free[i]] = v[i];
    return out;
  };
  Tensor3 qb(q, q, q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) qb.set_slice(i, j, project(l.bracket().slice(free[i], free[j])));
  LeibnizAlgebra quotient(qb);
  std::vector<Matrix> ad;
  for (std::size_t i = 0; i < q; ++i) ad.push_back(quotient.left_ad(quotient.basis(i)));
  Matrix killing(q, q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) killing(i, j) = (ad[i] * ad[j]).trace();
  Subspace derived = bracket_span(quotient, Subspace::full(q));
  Subspace lie_radical = left_orthogonal(killing, derived);
  std::vector<Vector> gens = leib.basis_vectors();
  for (const auto& v : lie_radical.basis_vectors()) gens.push_back(lift(v));
  return Subspace::span(n, gens);
}

bool is_semisimple_leibniz(const LeibnizAlgebra& l) { return solvable_radical(l) == leib_subspace(l); }

std::string to_string(IdealKind k) {
  switch (k) {
    case IdealKind::TwoSided: return "TwoSided";
    case IdealKind::LeftOnly: return "LeftOnly";
    case IdealKind::RightOnly: return "RightOnly";
    case IdealKind::NotIdeal: return "NotIdeal";
  }
  return "Unknown";
}

IdealKind ideal_check(const LeibnizAlgebra& l, const Subspace& s) {
  if (s.ambient_dim() != l.dim()) throw Error(ErrorKind::DimensionMismatch, "subspace ambient dimension");
  bool left = true, right = true;
  for (const auto& v : s.basis_vectors())
    for (std::size_t i = 0; i < l.dim(); ++i) {
      left = left && s.contains(l(l.basis(i), v));
      right = right && s.contains(l(v, l.basis(i)));
    }
  if (left && right) return IdealKind::TwoSided;
  if (left) return IdealKind::LeftOnly;
  if (right) return IdealKind::RightOnly;
  return IdealKind::NotIdeal;
}

}  // namespace valab
