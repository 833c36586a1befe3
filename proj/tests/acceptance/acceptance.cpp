// One line per acceptance criterion; exit status is nonzero when any fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "valab/error.hpp"
#include "valab/fixtures.hpp"
#include "valab/forms.hpp"
#include "valab/lone.hpp"
#include "valab/mutate.hpp"
#include "valab/semiconformal.hpp"

using namespace valab;
namespace fx = valab::fixtures;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      why << what;
      ok = false;
    }
  }
};

GorensteinContext ctx_of(const AlgebroidFile& f) { return make_context(f.algebroid, f.grading, f.form, f.t); }

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
  return s;
}

void axiom_suites(Outcome& o) {
  std::vector<AlgebroidFile> files;
  for (int alpha = 0; alpha <= 3; ++alpha) files.push_back(fx::ex62(alpha));
  for (int rho = -1; rho <= 1; ++rho) files.push_back(fx::ex63(rho));
  for (const auto& f : files) {
    const auto& g = f.algebroid;
    CheckReport r = check_algebra(g.algebra());
    r.append(check_leibniz(leibniz_of(g)));
    r.append(check_truncated_conformal(g));
    r.append(check_vertex_algebroid(g));
    r.append(check_compatibility(g));
    o.expect(r.passed(), f.id + " fails " + join(r.failed_ids()));
  }
}

void ring_invariants(Outcome& o) {
  o.expect(socle(fx::dual_numbers_squared()) == Subspace::span(4, {{0, 0, 0, 1}}), "socle of Q[X,Y]/(X^2,Y^2)");
  for (std::size_t n = 1; n <= 6; ++n)
    o.expect(socle(fx::truncated_polynomial(n)) == Subspace::span(n, {unit_vector(n, n - 1)}),
             "socle of Q[x]/(x^" + std::to_string(n) + ")");
  const auto plane = fx::square_zero_plane();
  o.expect(is_local(plane) == Locality::Local && !is_gorenstein(plane), "Q[x,y]/(x^2,xy,y^2) local, not Gorenstein");
  std::vector<fx::GradedAlgebra> graded;
  for (std::size_t n = 1; n <= 6; ++n) graded.push_back({fx::truncated_polynomial(n), fx::truncated_polynomial_grading(n)});
  graded.push_back({fx::dual_numbers_squared(), Grading{{0, 1, 1, 2}, 2}});
  graded.push_back({plane, Grading{{0, 1, 1}, 1}});
  for (const auto& f : fx::corpus())
    if (f.grading) graded.push_back({f.algebra(), *f.grading});
  for (std::uint64_t seed = 0; seed < 50; ++seed) graded.push_back(fx::random_monomial_quotient(seed));
  std::size_t disagree = 0;
  for (const auto& g : graded) {
    const CheckEntry* e = poincare_check(g.algebra, g.grading).find("poincare.duality");
    if (!e || (e->status == Status::Pass) != is_gorenstein(g.algebra)) ++disagree;
  }
  o.expect(disagree == 0, std::to_string(disagree) + " graded algebras where duality and Gorenstein disagree");
}

void radical_oracle(Outcome& o) {
  std::vector<CommAlgebra> algebras = {fx::dual_numbers_squared(), fx::square_zero_plane(), fx::split_pair(),
                                       fx::sqrt_two_field()};
  for (std::size_t n = 1; n <= 6; ++n) algebras.push_back(fx::truncated_polynomial(n));
  for (const auto& f : fx::corpus()) algebras.push_back(f.algebra());
  for (std::uint64_t seed = 0; seed < 50; ++seed) algebras.push_back(fx::random_monomial_quotient(seed).algebra);
  std::size_t bad = 0;
  for (const auto& a : algebras)
    if (a.dim() > 6 || !(jacobson_radical(a) == oracle::nilpotent_span(a))) ++bad;
  o.expect(bad == 0, std::to_string(bad) + " of " + std::to_string(algebras.size()) + " algebras disagree");
}

void ex62_table(Outcome& o) {
  {
    const auto c = ctx_of(fx::ex62(1));
    const Vector dt = c.base.partial(c.t);
    const Subspace sdt = Subspace::span(2, {dt});
    o.expect(c.t == Vector{Rational(-1, 2), 1}, "alpha=1: t = a - 1/2");
    o.expect(dt == Vector{0, 1}, "alpha=1: d t = d a");
    o.expect(m_subspace(c) == sdt, "alpha=1: M");
    o.expect(ann_t(c) == sdt, "alpha=1: Ann");
    o.expect(rad_double_form(c) == sdt, "alpha=1: rad");
  }
  o.expect(ann_t(ctx_of(fx::ex62(2))) == Subspace::full(2), "alpha=2: Ann = V_1");
  o.expect(rad_double_form(ctx_of(fx::ex62(0))) == Subspace::full(2), "alpha=0: rad = V_1");
}

void ex63_table(Outcome& o) {
  for (int rho = -1; rho <= 1; ++rho) {
    const auto c = ctx_of(fx::ex63(rho));
    const auto u_da = Subspace::span(3, {{1, 0, 0}, {0, 0, 1}});
    const std::string tag = "rho=" + std::to_string(rho) + ": ";
    o.expect(m_subspace(c) == u_da, tag + "M = " + named(m_subspace(c), c.base.b_names()));
    o.expect(ann_t(c) == u_da, tag + "Ann = " + named(ann_t(c), c.base.b_names()));
    const Subspace want = rho == -1 ? Subspace::full(3) : u_da;
    o.expect(rad_double_form(c) == want, tag + "rad = " + named(rad_double_form(c), c.base.b_names()));
  }
}

void solver(Outcome& o) {
  for (int alpha = 0; alpha <= 3; ++alpha) {
    const auto f = fx::ex62(alpha);
    const std::string tag = "alpha=" + std::to_string(alpha) + ": ";
    const AffineSpace sol = solve_L1(f.algebroid);
    Rational half_alpha(-alpha, 2);
    half_alpha.canonicalize();
    const Subspace dir = Subspace::span(4, {{half_alpha, 1, 0, 0}});
    o.expect(sol.dim() == 1 && sol.homogeneous == dir && sol.contains(Vector{-1, 0, 0, 0}), tag + "family");
    const auto p = pin_L1(f.algebroid, sol, ctx_of(f));
    o.expect(p.unique && p.map.matrix == Matrix{{-1, 0}, {0, 0}}, tag + "pinned");
    o.expect(self_duality_dim(f.algebroid, p.map) == 1, tag + "self-duality dim");
  }
  for (int rho = -1; rho <= 1; ++rho) {
    const auto f = fx::ex63(rho);
    const std::string tag = "rho=" + std::to_string(rho) + ": ";
    const auto p = pin_L1(f.algebroid, solve_L1(f.algebroid), ctx_of(f));
    o.expect(p.unique && p.map.matrix == Matrix{{0, -1, 0}, {0, 0, 0}}, tag + "pinned");
    o.expect(self_duality_dim(f.algebroid, p.map) == 1, tag + "self-duality dim");
  }
}

void heisenberg_generator(Outcome& o) {
  {
    const auto f = fx::ex62(1);
    const auto& g = f.algebroid;
    const auto w = heisenberg_search(ctx_of(f));
    o.expect(w.g == Vector{1, 0}, "alpha=1: g = b");
    o.expect(w.h_prime == Vector{1, Rational(-1, 2)}, "alpha=1: h' = b - 1/2 da");
    o.expect(is_zero(g.bracket(w.h_prime, w.h_prime)), "alpha=1: h'_0 h' = 0");
    o.expect(g.pairing(w.h_prime, w.h_prime) == Vector{Rational(1, 2), 0}, "alpha=1: h'_1 h' = 1/2");
  }
  {
    const auto f = fx::ex63(0);
    const auto& g = f.algebroid;
    const auto w = heisenberg_search(ctx_of(f));
    o.expect(w.g == Vector{0, 1, 0}, "rho=0: g = v");
    o.expect(w.beta == 1, "rho=0: beta = 1");
    o.expect(w.normalized && w.h && is_zero(g.bracket(*w.h, *w.h)) && g.pairing(*w.h, *w.h) == g.one(),
             "rho=0: h_0 h = 0, h_1 h = 1");
  }
}

void lemma_suite(Outcome& o) {
  std::size_t covered = 0;
  for (const auto& f : fx::corpus()) {
    std::optional<GorensteinContext> c;
    try {
      c = ctx_of(f);
    } catch (const Error&) {
      continue;
    }
    std::optional<LOneMap> l1 = f.l1;
    if (!l1) {
      try {
        auto p = pin_L1(f.algebroid, solve_L1(f.algebroid), *c);
        if (p.unique) l1 = p.map;
      } catch (const Error&) {
      }
    }
    if (!l1 || !l1_valid(f.algebroid, *l1)) continue;
    ++covered;
    const auto r = perp_lemma_suite(*c, l1);
    for (const char* id : {"lemma.partial_in_rad", "lemma.rad_two_sided", "lemma.m_is_perp_dt", "lemma.t_minus2_m_perp",
                           "lemma.m_codim"}) {
      const CheckEntry* e = r.find(id);
      o.expect(e && e->status == Status::Pass, f.id + " " + id);
    }
  }
  o.expect(covered >= 7, "only " + std::to_string(covered) + " fixtures covered");
}

void loop_relations(Outcome& o) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto mod = random_module(seed, 12);
    o.expect(virasoro_commutator_check(mod, 4).passed(), "random module " + std::to_string(seed));
  }
  BModuleLoop bad;
  bad.u0_dim = 1;
  bad.u1_dim = 1;
  bad.l1_action = Matrix{{1}};
  bad.l1_coefficient_override[2] = 2;
  const CheckEntry* e = virasoro_commutator_check(bad, 4).find("loop.virasoro_commutator");
  o.expect(e && e->status == Status::Fail && !e->witnesses.empty(), "corrupted action not flagged");
}

void mutation(Outcome& o) {
  const auto corpus = fx::corpus();
  const auto& known = oracle::axiom_ids();
  std::size_t violating = 0, missed = 0;
  std::vector<std::string> extra;
  for (std::uint64_t k = 0; k < 100; ++k) {
    const auto& f = corpus[k % corpus.size()];
    const auto mus = draw_mutations(f.algebroid, 5000 + k, 1);
    if (mus.empty()) continue;
    const auto g = apply_mutation(f.algebroid, mus[0]);
    const auto truth = oracle::violated_axioms(g, k, 3);
    std::set<std::string> flagged;
    for (const auto& id : check_all(g).failed_ids())
      if (std::find(known.begin(), known.end(), id) != known.end()) flagged.insert(id);
    if (!truth.empty()) ++violating;
    for (const auto& id : truth)
      if (!flagged.count(id)) {
        ++missed;
        o.expect(false, f.id + " " + mus[0].label() + " missed " + id);
      }
    // Random points can miss a violation the exhaustive checker sees; confirm
    // those with a denser sample before reporting them.
    for (const auto& id : flagged)
      if (!truth.count(id)) {
        const bool confirmed = oracle::violated_axioms(g, 1000 + k, 40).count(id) > 0;
        extra.push_back(f.id + " " + mus[0].label() + " " + id + (confirmed ? " (confirmed)" : " (unconfirmed)"));
        o.expect(confirmed, "checker flags " + id + " on " + f.id + " " + mus[0].label() + " without a violation");
      }
  }
  std::cout << "  mutations violating an axiom: " << violating << "/100, missed ids: " << missed
            << ", ids flagged beyond the 3-point sample: " << extra.size() << "\n";
  for (const auto& x : extra) std::cout << "    " << x << "\n";
}

void semisimple_structure(Outcome& o) {
  const auto f = fx::semisimple(1);
  const auto r = semisimple_fixture_check(f.algebroid, *f.semisimple);
  o.expect(r.passed(), "fails " + join(r.failed_ids()));
  const CheckEntry* h = r.find("ss.h1h");
  const CheckEntry* sq = r.find("ss.square_zero");
  o.expect(h && h->status == Status::Pass, "h_1 h = 2");
  o.expect(sq && sq->status == Status::Pass, "m^2 = 0");
  o.expect(!is_gorenstein(f.algebra()), "A is Gorenstein");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"axiom suites on ex62 and ex63", axiom_suites},
      {"ring invariants", ring_invariants},
      {"trace-form radical equals nilpotent span", radical_oracle},
      {"ex62 subspace table", ex62_table},
      {"ex63 subspace table", ex63_table},
      {"L(1) solver and pinning", solver},
      {"Heisenberg generator", heisenberg_generator},
      {"orthogonality lemmas", lemma_suite},
      {"loop Virasoro relations", loop_relations},
      {"mutation robustness", mutation},
      {"sl2 structure fixture", semisimple_structure},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first;
    if (!o.ok) std::cout << "  [" << o.why.str() << "]";
    std::cout << std::endl;
    failures += o.ok ? 0 : 1;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
