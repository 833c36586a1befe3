#include "oracles.hpp"

#include <functional>
#include <map>
#include <random>

namespace oracle {

namespace {

using valab::Matrix;
using valab::Subspace;
using valab::Tensor3;

Vec add(const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}
Vec sub(const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}
Vec neg(const Vec& x) { return sub(Vec(x.size()), x); }
bool zero(const Vec& x) {
  for (const auto& q : x)
    if (q != 0) return false;
  return true;
}

// sum_ij x_i y_j T(i, j, k)
Vec apply(const Tensor3& t, const Vec& x, const Vec& y) {
  Vec r(t.dim2());
  for (std::size_t i = 0; i < t.dim0(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < t.dim1(); ++j) {
      if (y[j] == 0) continue;
      Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < t.dim2(); ++k) r[k] += c * t(i, j, k);
    }
  }
  return r;
}

struct Raw {
  const valab::AlgebroidData& d;
  std::size_t n, m;

  Vec mul(const Vec& a, const Vec& b) const { return apply(d.algebra.mul(), a, b); }
  Vec act(const Vec& a, const Vec& v) const { return apply(d.action, a, v); }
  Vec br(const Vec& u, const Vec& v) const { return apply(d.bracket, u, v); }
  Vec pi(const Vec& u, const Vec& a) const { return apply(d.anchor, u, a); }
  Vec pr(const Vec& u, const Vec& v) const { return apply(d.pairing, u, v); }
  Vec del(const Vec& a) const {
    Vec r(m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) r[j] += a[i] * d.partial(i, j);
    return r;
  }
  const Vec& one() const { return d.algebra.unit(); }

  // C = A (+) B
  Vec ca(const Vec& x) const { return Vec(x.begin(), x.begin() + static_cast<long>(n)); }
  Vec cb(const Vec& x) const { return Vec(x.begin() + static_cast<long>(n), x.end()); }
  Vec c(const Vec& a, const Vec& b) const {
    Vec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
  }
  Vec cmode(int k, const Vec& x, const Vec& y) const {
    if (k == 0) return c(sub(pi(cb(x), ca(y)), pi(cb(y), ca(x))), br(cb(x), cb(y)));
    return c(pr(cb(x), cb(y)), Vec(m));
  }
  Vec cdel(const Vec& x) const { return c(Vec(n), del(ca(x))); }
  Vec ina(const Vec& a) const { return c(a, Vec(m)); }
  Vec inb(const Vec& b) const { return c(Vec(n), b); }
};

struct Point {
  Vec a1, a2, a3, u, v, w, x, y, z;
};

using Identity = std::function<Vec(const Raw&, const Point&)>;

const std::vector<std::pair<std::string, Identity>>& identities() {
  static const std::vector<std::pair<std::string, Identity>> table = {
      {"algebra.associativity",
       [](const Raw& r, const Point& p) {
         return sub(r.mul(r.mul(p.a1, p.a2), p.a3), r.mul(p.a1, r.mul(p.a2, p.a3)));
       }},
      {"algebra.commutativity", [](const Raw& r, const Point& p) { return sub(r.mul(p.a1, p.a2), r.mul(p.a2, p.a1)); }},
      {"algebra.unitality", [](const Raw& r, const Point& p) { return sub(r.mul(r.one(), p.a1), p.a1); }},
      {"leibniz.identity",
       [](const Raw& r, const Point& p) {
         return sub(sub(r.br(p.u, r.br(p.v, p.w)), r.br(r.br(p.u, p.v), p.w)), r.br(p.v, r.br(p.u, p.w)));
       }},
      {"tc.partial_mode0", [](const Raw& r, const Point& p) { return r.cmode(0, r.cdel(r.ina(p.a1)), p.x); }},
      {"tc.partial_mode1",
       [](const Raw& r, const Point& p) {
         return add(r.cmode(1, r.cdel(r.ina(p.a1)), p.x), r.cmode(0, r.ina(p.a1), p.x));
       }},
      {"tc.partial_derivation",
       [](const Raw& r, const Point& p) {
         Vec u = r.inb(p.u), a = r.ina(p.a1);
         return sub(r.cdel(r.cmode(0, u, a)), r.cmode(0, u, r.cdel(a)));
       }},
      {"tc.skew_anchor",
       [](const Raw& r, const Point& p) {
         Vec u = r.inb(p.u), a = r.ina(p.a1);
         return add(r.cmode(0, u, a), r.cmode(0, a, u));
       }},
      {"tc.skew_bracket",
       [](const Raw& r, const Point& p) {
         Vec u = r.inb(p.u), v = r.inb(p.v);
         return sub(add(r.cmode(0, u, v), r.cmode(0, v, u)), r.cdel(r.cmode(1, u, v)));
       }},
      {"tc.pairing_symmetry",
       [](const Raw& r, const Point& p) {
         Vec u = r.inb(p.u), v = r.inb(p.v);
         return sub(r.cmode(1, u, v), r.cmode(1, v, u));
       }},
      {"tc.assoc_mode0",
       [](const Raw& r, const Point& p) {
         return sub(sub(r.cmode(0, p.x, r.cmode(0, p.y, p.z)), r.cmode(0, p.y, r.cmode(0, p.x, p.z))),
                    r.cmode(0, r.cmode(0, p.x, p.y), p.z));
       }},
      {"tc.assoc_mode1",
       [](const Raw& r, const Point& p) {
         return sub(sub(r.cmode(0, p.x, r.cmode(1, p.y, p.z)), r.cmode(1, p.y, r.cmode(0, p.x, p.z))),
                    r.cmode(1, r.cmode(0, p.x, p.y), p.z));
       }},
      {"va.unit_action", [](const Raw& r, const Point& p) { return sub(r.act(r.one(), p.u), p.u); }},
      {"va.leibniz",
       [](const Raw& r, const Point& p) {
         return sub(sub(r.br(p.u, r.br(p.v, p.w)), r.br(r.br(p.u, p.v), p.w)), r.br(p.v, r.br(p.u, p.w)));
       }},
      {"va.anchor_derivation",
       [](const Raw& r, const Point& p) {
         return sub(sub(r.pi(p.u, r.mul(p.a1, p.a2)), r.mul(r.pi(p.u, p.a1), p.a2)), r.mul(p.a1, r.pi(p.u, p.a2)));
       }},
      {"va.anchor_homomorphism",
       [](const Raw& r, const Point& p) {
         return add(sub(r.pi(r.br(p.u, p.v), p.a1), r.pi(p.u, r.pi(p.v, p.a1))), r.pi(p.v, r.pi(p.u, p.a1)));
       }},
      {"va.pairing_symmetry", [](const Raw& r, const Point& p) { return sub(r.pr(p.u, p.v), r.pr(p.v, p.u)); }},
      {"va.anchor_partial", [](const Raw& r, const Point& p) { return r.pi(r.del(p.a1), p.a2); }},
      {"va.module_assoc",
       [](const Raw& r, const Point& p) {
         Vec lhs = sub(r.act(p.a1, r.act(p.a2, p.u)), r.act(r.mul(p.a1, p.a2), p.u));
         return sub(sub(lhs, r.act(r.pi(p.u, p.a1), r.del(p.a2))), r.act(r.pi(p.u, p.a2), r.del(p.a1)));
       }},
      {"va.bracket_action",
       [](const Raw& r, const Point& p) {
         return sub(sub(r.br(p.u, r.act(p.a1, p.v)), r.act(r.pi(p.u, p.a1), p.v)), r.act(p.a1, r.br(p.u, p.v)));
       }},
      {"va.bracket_symmetric_part",
       [](const Raw& r, const Point& p) { return sub(add(r.br(p.u, p.v), r.br(p.v, p.u)), r.del(r.pr(p.u, p.v))); }},
      {"va.anchor_linearity",
       [](const Raw& r, const Point& p) { return sub(r.pi(r.act(p.a1, p.u), p.a2), r.mul(p.a1, r.pi(p.u, p.a2))); }},
      {"va.pairing_action",
       [](const Raw& r, const Point& p) {
         return add(sub(r.pr(r.act(p.a1, p.u), p.v), r.mul(p.a1, r.pr(p.u, p.v))), r.pi(p.u, r.pi(p.v, p.a1)));
       }},
      {"va.pairing_invariance",
       [](const Raw& r, const Point& p) {
         return sub(sub(r.pi(p.u, r.pr(p.v, p.w)), r.pr(r.br(p.u, p.v), p.w)), r.pr(p.v, r.br(p.u, p.w)));
       }},
      {"va.partial_derivation",
       [](const Raw& r, const Point& p) {
         return sub(sub(r.del(r.mul(p.a1, p.a2)), r.act(p.a1, r.del(p.a2))), r.act(p.a2, r.del(p.a1)));
       }},
      {"va.bracket_partial",
       [](const Raw& r, const Point& p) { return sub(r.br(p.u, r.del(p.a1)), r.del(r.pi(p.u, p.a1))); }},
      {"va.pairing_partial", [](const Raw& r, const Point& p) { return sub(r.pr(p.u, r.del(p.a1)), r.pi(p.u, p.a1)); }},
      {"compat.module_assoc",
       [](const Raw& r, const Point& p) {
         Vec lhs = sub(r.act(p.a1, r.act(p.a2, p.u)), r.act(r.mul(p.a1, p.a2), p.u));
         return sub(sub(lhs, r.act(r.pi(p.u, p.a1), r.del(p.a2))), r.act(r.pi(p.u, p.a2), r.del(p.a1)));
       }},
      {"compat.bracket_action",
       [](const Raw& r, const Point& p) {
         return sub(sub(r.br(p.u, r.act(p.a1, p.v)), r.act(p.a1, r.br(p.u, p.v))), r.act(r.pi(p.u, p.a1), p.v));
       }},
      {"compat.anchor_derivation",
       [](const Raw& r, const Point& p) {
         return sub(sub(r.pi(p.u, r.mul(p.a1, p.a2)), r.mul(p.a1, r.pi(p.u, p.a2))), r.mul(r.pi(p.u, p.a1), p.a2));
       }},
      {"compat.anchor_module",
       [](const Raw& r, const Point& p) {
         // a_0 w = -pi(w)(a)
         return add(neg(r.pi(r.act(p.a2, p.u), p.a1)), r.mul(p.a2, r.pi(p.u, p.a1)));
       }},
      {"compat.pairing_action",
       [](const Raw& r, const Point& p) {
         return add(sub(r.pr(r.act(p.a1, p.u), p.v), r.mul(p.a1, r.pr(p.u, p.v))), r.pi(p.u, r.pi(p.v, p.a1)));
       }},
      {"compat.partial_derivation",
       [](const Raw& r, const Point& p) {
         return sub(sub(r.del(r.mul(p.a1, p.a2)), r.act(p.a1, r.del(p.a2))), r.act(p.a2, r.del(p.a1)));
       }},
  };
  return table;
}

Vec random_vec(std::mt19937_64& rng, std::size_t len) {
  Vec v(len);
  for (auto& q : v) q = static_cast<long>(rng() % 19) - 9;
  return v;
}

// Integer vectors with entries in [-r, r], r chosen so the box stays small.
std::vector<Vec> small_vectors(std::size_t n) {
  const long r = n <= 2 ? 4 : n <= 3 ? 2 : 1;
  std::vector<Vec> out;
  std::vector<long> digits(n, -r);
  while (true) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = digits[i];
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && digits[i] == r) digits[i++] = -r;
    if (i == n) break;
    ++digits[i];
  }
  return out;
}

Vec bracket(const valab::LeibnizAlgebra& l, const Vec& x, const Vec& y) { return apply(l.bracket(), x, y); }

}  // namespace

const std::vector<std::string>& axiom_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, f] : identities()) v.push_back(id);
    return v;
  }();
  return ids;
}

std::set<std::string> violated_axioms(const valab::VertexAlgebroid& g, std::uint64_t seed, int trials) {
  const Raw raw{g.data(), g.a_dim(), g.b_dim()};
  std::mt19937_64 rng(seed);
  std::set<std::string> out;
  for (int t = 0; t < trials; ++t) {
    const std::size_t n = raw.n, m = raw.m;
    Point p{random_vec(rng, n), random_vec(rng, n), random_vec(rng, n), random_vec(rng, m), random_vec(rng, m), random_vec(rng, m),
            random_vec(rng, n + m), random_vec(rng, n + m), random_vec(rng, n + m)};
    for (const auto& [id, f] : identities())
      if (!zero(f(raw, p))) out.insert(id);
  }
  return out;
}

bool is_nilpotent(const valab::CommAlgebra& a, const Vec& x) {
  Vec p = x;
  for (std::size_t k = 0; k < a.dim(); ++k) p = apply(a.mul(), p, x);
  return zero(p);
}

Subspace nilpotent_span(const valab::CommAlgebra& a) {
  std::vector<Vec> nil;
  for (const auto& v : small_vectors(a.dim()))
    if (is_nilpotent(a, v)) nil.push_back(v);
  return Subspace::span(a.dim(), nil);
}

Subspace brute_socle(const valab::CommAlgebra& a) {
  const auto rad = nilpotent_span(a).basis_vectors();
  std::vector<Vec> killed;
  for (const auto& v : small_vectors(a.dim())) {
    bool ok = true;
    for (const auto& r : rad) ok = ok && zero(apply(a.mul(), r, v));
    if (ok) killed.push_back(v);
  }
  return Subspace::span(a.dim(), killed);
}

std::vector<Subspace> small_subspaces(std::size_t dim) {
  std::vector<Subspace> out;
  for (unsigned mask = 0; mask < (1u << dim); ++mask) {
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < dim; ++i)
      if (mask & (1u << i)) pivots.push_back(i);
    // free slots: row r, column c > pivot r, c not a pivot
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (std::size_t c = pivots[r] + 1; c < dim; ++c)
        if (!(mask & (1u << c))) slots.emplace_back(r, c);
    std::size_t combos = 1;
    for (std::size_t s = 0; s < slots.size(); ++s) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      std::vector<Vec> rows(pivots.size(), Vec(dim));
      for (std::size_t r = 0; r < pivots.size(); ++r) rows[r][pivots[r]] = 1;
      std::size_t c = code;
      for (const auto& [r, col] : slots) {
        rows[r][col] = static_cast<long>(c % 3) - 1;
        c /= 3;
      }
      out.push_back(Subspace::span(dim, rows));
    }
  }
  return out;
}

bool is_left_ideal(const valab::LeibnizAlgebra& l, const Subspace& s) {
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (const auto& x : s.basis_vectors())
      if (!s.contains(bracket(l, l.basis(i), x))) return false;
  return true;
}

bool is_right_ideal(const valab::LeibnizAlgebra& l, const Subspace& s) {
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (const auto& x : s.basis_vectors())
      if (!s.contains(bracket(l, x, l.basis(i)))) return false;
  return true;
}

bool is_solvable(const valab::LeibnizAlgebra& l, const Subspace& s) {
  Subspace cur = s;
  while (cur.dim() > 0) {
    std::vector<Vec> prods;
    for (const auto& x : cur.basis_vectors())
      for (const auto& y : cur.basis_vectors()) prods.push_back(bracket(l, x, y));
    Subspace next = Subspace::span(l.dim(), prods);
    if (next.dim() == cur.dim()) return false;
    cur = next;
  }
  return true;
}

Subspace brute_solvable_radical(const valab::LeibnizAlgebra& l) {
  Subspace best(l.dim());
  for (const auto& s : small_subspaces(l.dim()))
    if (s.dim() > best.dim() && is_left_ideal(l, s) && is_right_ideal(l, s) && oracle::is_solvable(l, s)) best = s;
  return best;
}

}  // namespace oracle
