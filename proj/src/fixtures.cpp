#include "valab/fixtures.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>

namespace valab::fixtures {

namespace {

Vector vec(std::initializer_list<Rational> xs) { return Vector(xs); }

// Monomial algebra on a down-closed set of exponent vectors.
GradedAlgebra monomial_algebra(const std::vector<std::vector<int>>& monomials, const std::vector<std::string>& names) {
  const std::size_t n = monomials.size();
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[monomials[i]] = i;
  Tensor3 mul(n, n, n);
  std::vector<int> degree(n);
  int top = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (int e : monomials[i]) degree[i] += e;
    top = std::max(top, degree[i]);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<int> prod = monomials[i];
      for (std::size_t v = 0; v < prod.size(); ++v) prod[v] += monomials[j][v];
      if (auto it = index.find(prod); it != index.end()) mul(i, j, it->second) = 1;
    }
  }
  const std::size_t one = index.at(std::vector<int>(monomials[0].size(), 0));
  return {CommAlgebra(std::move(mul), unit_vector(n, one), names), Grading{degree, top}};
}

std::string monomial_name(const std::vector<int>& e) {
  static const char* vars = "xyzw";
  std::string s;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    s += vars[v];
    if (e[v] > 1) s += "^" + std::to_string(e[v]);
  }
  return s.empty() ? "1" : s;
}

AlgebroidData empty_data(const CommAlgebra& a, std::vector<std::string> b_names) {
  const std::size_t n = a.dim(), m = b_names.size();
  AlgebroidData d;
  d.algebra = a;
  d.b_names = std::move(b_names);
  d.partial = Matrix(n, m);
  d.action = Tensor3(n, m, m);
  d.bracket = Tensor3(m, m, m);
  d.anchor = Tensor3(m, n, n);
  d.pairing = Tensor3(m, m, n);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(a.unit()[i]) == 0) continue;
      d.action(i, j, j) = a.unit()[i];
    }
  return d;
}

}  // namespace

CommAlgebra truncated_polynomial(std::size_t n) {
  std::vector<std::vector<int>> mons;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    mons.push_back({static_cast<int>(i)});
    names.push_back(monomial_name(mons.back()));
  }
  return monomial_algebra(mons, names).algebra;
}

Grading truncated_polynomial_grading(std::size_t n) {
  Grading g;
  for (std::size_t i = 0; i < n; ++i) g.degree.push_back(static_cast<int>(i));
  g.top = static_cast<int>(n) - 1;
  return g;
}

CommAlgebra dual_numbers_squared() {
  return monomial_algebra({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {"1", "X", "Y", "XY"}).algebra;
}

CommAlgebra square_zero_plane() { return monomial_algebra({{0, 0}, {1, 0}, {0, 1}}, {"1", "x", "y"}).algebra; }

CommAlgebra split_pair() {
  Tensor3 mul(2, 2, 2);
  mul(0, 0, 0) = 1;
  mul(0, 1, 1) = 1;
  mul(1, 0, 1) = 1;
  mul(1, 1, 1) = 1;
  return CommAlgebra(mul, vec({1, 0}), {"1", "e"});
}

CommAlgebra sqrt_two_field() {
  Tensor3 mul(2, 2, 2);
  mul(0, 0, 0) = 1;
  mul(0, 1, 1) = 1;
  mul(1, 0, 1) = 1;
  mul(1, 1, 0) = 2;
  return CommAlgebra(mul, vec({1, 0}), {"1", "x"});
}

GradedAlgebra random_monomial_quotient(std::uint64_t seed, std::size_t max_dim) {
  std::mt19937_64 rng(seed);
  const std::size_t vars = 1 + rng() % 3;
  const std::size_t target = 1 + rng() % max_dim;
  std::vector<std::vector<int>> mons{std::vector<int>(vars, 0)};
  std::set<std::vector<int>> have(mons.begin(), mons.end());
  // Grow an order ideal: a monomial joins only once every divisor by one variable is present.
  for (int attempt = 0; attempt < 200 && mons.size() < target; ++attempt) {
    std::vector<int> cand = mons[rng() % mons.size()];
    cand[rng() % vars] += 1;
    if (have.count(cand)) continue;
    bool closed = true;
    for (std::size_t v = 0; v < vars; ++v) {
      if (cand[v] == 0) continue;
      std::vector<int> d = cand;
      d[v] -= 1;
      closed = closed && have.count(d);
    }
    if (!closed) continue;
    mons.push_back(cand);
    have.insert(cand);
  }
  std::vector<std::string> names;
  for (const auto& m : mons) names.push_back(monomial_name(m));
  return monomial_algebra(mons, names);
}

AlgebroidFile ex61(std::size_t k) {
  AlgebroidFile f;
  f.id = "ex61_k" + std::to_string(k);
  f.algebroid = VertexAlgebroid::trivial(truncated_polynomial(k + 1));
  f.grading = truncated_polynomial_grading(k + 1);
  return f;
}

AlgebroidFile ex62(const Rational& alpha) {
  const Rational half(1, 2);
  Tensor3 mul(2, 2, 2);
  mul(0, 0, 0) = 1;
  mul(0, 1, 1) = 1;
  mul(1, 0, 1) = 1;
  mul(1, 1, 0) = -alpha * alpha / 4;
  mul(1, 1, 1) = alpha;
  CommAlgebra a(mul, vec({1, 0}), {"1", "a"});

  AlgebroidData d = empty_data(a, {"b", "da"});
  const std::size_t b = 0, da = 1, aa = 1;
  d.partial(aa, da) = 1;
  d.action.set_slice(aa, b, vec({half * alpha, half * alpha - 1}));
  d.action.set_slice(aa, da, vec({0, half * alpha}));
  d.bracket.set_slice(b, b, vec({0, half}));
  d.bracket.set_slice(b, da, vec({0, 1}));
  d.anchor.set_slice(b, aa, vec({-half * alpha, 1}));
  d.pairing.set_slice(b, b, vec({0, 1}));
  d.pairing.set_slice(b, da, vec({-half * alpha, 1}));
  d.pairing.set_slice(da, b, vec({-half * alpha, 1}));

  AlgebroidFile f;
  f.id = "ex62_alpha" + to_string(alpha);
  f.algebroid = VertexAlgebroid(std::move(d));
  f.has_algebroid = true;
  f.t = vec({-half * alpha, 1});
  f.form = Matrix{{0, 1}, {1, alpha}};
  f.l1 = LOneMap{Matrix{{-1, 0}, {0, 0}}};
  return f;
}

AlgebroidFile ex63(const Rational& rho) {
  CommAlgebra a = truncated_polynomial(2);
  AlgebroidData d = empty_data(CommAlgebra(a.mul(), a.unit(), {"1", "a"}), {"u", "v", "da"});
  const std::size_t u = 0, v = 1, w = 2, aa = 1;
  d.partial(aa, w) = 1;
  d.action.set_slice(aa, v, vec({0, 0, rho}));
  d.bracket.set_slice(u, v, vec({0, 0, 1}));
  d.bracket.set_slice(v, w, vec({0, 0, 1}));
  d.anchor.set_slice(v, aa, vec({0, 1}));
  d.pairing.set_slice(u, v, vec({0, 1}));
  d.pairing.set_slice(v, u, vec({0, 1}));
  d.pairing.set_slice(v, w, vec({0, 1}));
  d.pairing.set_slice(w, v, vec({0, 1}));
  d.pairing.set_slice(v, v, vec({1 + rho, 0}));

  AlgebroidFile f;
  f.id = "ex63_rho" + to_string(rho);
  f.algebroid = VertexAlgebroid(std::move(d));
  f.has_algebroid = true;
  f.grading = Grading{{0, 1}, 1};
  f.t = vec({0, 1});
  f.form = Matrix{{0, 1}, {1, 0}};
  f.l1 = LOneMap{Matrix{{0, -1, 0}, {0, 0, 0}}};
  return f;
}

AlgebroidFile semisimple(std::size_t l) {
  const std::size_t n = 1 + 2 * l, m = 3 + 2 * l;
  std::vector<std::string> a_names{"1"}, b_names{"e", "f", "h"};
  for (std::size_t j = 1; j <= l; ++j)
    for (int i = 0; i < 2; ++i) a_names.push_back("a" + std::to_string(j) + std::to_string(i));
  for (std::size_t j = 1; j <= l; ++j)
    for (int i = 0; i < 2; ++i) b_names.push_back("da" + std::to_string(j) + std::to_string(i));
  Tensor3 mul(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    mul(0, i, i) = 1;
    mul(i, 0, i) = 1;
  }
  CommAlgebra a(mul, unit_vector(n, 0), a_names);
  AlgebroidData d = empty_data(a, b_names);
  const std::size_t e = 0, f = 1, h = 2;
  auto A = [](std::size_t j, int i) { return 1 + 2 * j + static_cast<std::size_t>(i); };
  auto D = [](std::size_t j, int i) { return 3 + 2 * j + static_cast<std::size_t>(i); };

  // sl2
  d.bracket(e, f, h) = 1;
  d.bracket(f, e, h) = -1;
  d.bracket(h, e, e) = 2;
  d.bracket(e, h, e) = -2;
  d.bracket(h, f, f) = -2;
  d.bracket(f, h, f) = 2;
  d.pairing(e, f, 0) = 1;
  d.pairing(f, e, 0) = 1;
  d.pairing(h, h, 0) = 2;
  for (std::size_t j = 0; j < l; ++j) {
    d.partial(A(j, 0), D(j, 0)) = 1;
    d.partial(A(j, 1), D(j, 1)) = 1;
    d.action(A(j, 1), e, D(j, 0)) = 1;
    d.action(A(j, 0), f, D(j, 1)) = 1;
    d.action(A(j, 0), h, D(j, 0)) = 1;
    d.action(A(j, 1), h, D(j, 1)) = -1;
    // x_0 a for x in sl2; the block is the two-dimensional irreducible module.
    const std::vector<std::tuple<std::size_t, int, int, Rational>> anchors{
        {e, 1, 0, 1}, {f, 0, 1, 1}, {h, 0, 0, 1}, {h, 1, 1, -1}};
    for (const auto& [x, from, to, c] : anchors) {
      d.anchor(x, A(j, from), A(j, to)) = c;
      // <x, d(a)> = <d(a), x> = x_0 a
      d.pairing(x, D(j, from), A(j, to)) = c;
      d.pairing(D(j, from), x, A(j, to)) = c;
      // x_0 d(a) = d(x_0 a)
      d.bracket(x, D(j, from), D(j, to)) = c;
    }
  }
  AlgebroidFile out;
  out.id = "semisimple_l" + std::to_string(l);
  out.algebroid = VertexAlgebroid(std::move(d));
  out.has_algebroid = true;
  Sl2Data s{unit_vector(m, e), unit_vector(m, f), unit_vector(m, h), {}};
  for (std::size_t j = 0; j < l; ++j) s.blocks.push_back({unit_vector(n, A(j, 0)), unit_vector(n, A(j, 1))});
  out.semisimple = std::move(s);
  return out;
}

std::vector<AlgebroidFile> corpus() {
  std::vector<AlgebroidFile> out;
  for (std::size_t k = 1; k <= 5; ++k) out.push_back(ex61(k));
  for (int alpha = 0; alpha <= 3; ++alpha) out.push_back(ex62(alpha));
  for (int rho = -1; rho <= 1; ++rho) out.push_back(ex63(rho));
  out.push_back(semisimple(1));
  return out;
}

}  // namespace valab::fixtures
