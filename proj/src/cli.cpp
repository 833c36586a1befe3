#include "valab/cli.hpp"

#include <functional>
#include <optional>
#include <set>

#include "valab/forms.hpp"
#include "valab/mutate.hpp"
#include "valab/semiconformal.hpp"

namespace valab {

namespace {

CheckEntry info(std::string id, std::string anchor) {
  CheckEntry e;
  e.id = std::move(id);
  e.anchor = std::move(anchor);
  return e;
}

CheckEntry skipped(std::string id, std::string anchor, std::string note) {
  CheckEntry e = info(std::move(id), std::move(anchor));
  e.status = Status::Skipped;
  e.note = std::move(note);
  return e;
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
  return s;
}

std::string named_map(const LOneMap& l1, const std::vector<std::string>& a_names,
                      const std::vector<std::string>& b_names) {
  std::string s;
  for (std::size_t j = 0; j < b_names.size(); ++j) {
    if (!s.empty()) s += "; ";
    s += "L(1)" + b_names[j] + " = " + named(l1.matrix.column(j), a_names);
  }
  return s.empty() ? "0" : s;
}

void finish(CommandResult& res) {
  if (!res.errors.empty()) {
    res.exit_code = exit_code::kPrecondition;
  } else if (!res.report.passed()) {
    res.exit_code = exit_code::kCheckFailure;
  } else {
    res.exit_code = exit_code::kPass;
  }
}

// Runs one section; a hypothesis error becomes a skipped entry, and is recorded
// as a command error when `fatal` is set.
void guarded(CommandResult& res, const std::string& id, const std::string& anchor, bool fatal,
             const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::DimensionMismatch) throw;
    res.report.add(skipped(id, anchor, e.what()));
    if (fatal) res.errors.push_back(e.what());
  }
}

void axiom_precondition(CommandResult& res, const AlgebroidFile& file) {
  CheckReport axioms = check_all(file.algebroid);
  CheckEntry e = verdict("precondition.axioms", "input satisfies every algebroid axiom", axioms.passed());
  if (!axioms.passed()) {
    e.value("failed", join(axioms.failed_ids()));
    e.note = "results below are computed on data that violates the axioms";
  }
  res.report.add(e);
}

std::optional<GorensteinContext> context_for(CommandResult& res, const AlgebroidFile& file) {
  if (!file.t && !file.form) {
    res.report.add(skipped("ctx", "Gorenstein data t, B", "MissingGorensteinData: no gorenstein block"));
    return std::nullopt;
  }
  std::optional<GorensteinContext> ctx;
  guarded(res, "ctx", "Gorenstein data t, B", false,
          [&] { ctx = make_context(file.algebroid, file.grading, file.form, file.t); });
  return ctx;
}

// L(1) from the file, or the pinned solution when it is unique.
std::optional<LOneMap> l1_for(const AlgebroidFile& file, const std::optional<GorensteinContext>& ctx,
                              std::string& source) {
  if (file.l1) {
    source = "file";
    return file.l1;
  }
  if (!ctx) return std::nullopt;
  try {
    PinnedLOne p = pin_L1(file.algebroid, solve_L1(file.algebroid), *ctx);
    if (!p.unique) return std::nullopt;
    source = "pinned";
    return p.map;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::ParseError || kind == ErrorKind::DimensionMismatch ? exit_code::kInputError
                                                                              : exit_code::kPrecondition;
}

CommandResult cmd_check(const AlgebroidFile& file) {
  CommandResult res{"check", file.id, {}, {}, 0};
  res.report = check_all(file.algebroid);
  if (file.semisimple)
    guarded(res, "ss", "sl2 structure relations", true,
            [&] { res.report.append(semisimple_fixture_check(file.algebroid, *file.semisimple)); });
  finish(res);
  return res;
}

CommandResult cmd_invariants(const AlgebroidFile& file) {
  CommandResult res{"invariants", file.id, {}, {}, 0};
  CheckReport& r = res.report;
  const VertexAlgebroid& g = file.algebroid;
  const CommAlgebra& a = g.algebra();
  const auto& an = g.a_names();
  const auto& bn = g.b_names();
  axiom_precondition(res, file);

  CheckEntry jr = info("ring.jacobson_radical", "J(R) equals the nilradical N(R)");
  Subspace j = jacobson_radical(a);
  jr.value("basis", named(j, an)).value("dim", std::to_string(j.dim()));
  r.add(jr);
  CheckEntry so = info("ring.socle", "socle = annihilator of J(R)");
  Subspace soc = socle(a);
  so.value("basis", named(soc, an)).value("dim", std::to_string(soc.dim()));
  r.add(so);
  r.add(indecomposability_report(g));
  guarded(res, "ring.gorenstein", "local algebra with one-dimensional socle", false, [&] {
    CheckEntry e = info("ring.gorenstein", "local algebra with one-dimensional socle");
    e.value("gorenstein", is_gorenstein(a) ? "true" : "false");
    r.add(e);
  });
  if (file.grading) {
    guarded(res, "poincare", "Poincare duality iff Gorenstein", false,
            [&] { r.append(poincare_check(a, *file.grading)); });
  } else {
    r.add(skipped("poincare", "Poincare duality iff Gorenstein", "no grading"));
  }
  guarded(res, "ring.t", "socle generator", false, [&] {
    CheckEntry e = info("ring.t", "socle generator");
    e.value("t", named(choose_t(a), an));
    r.add(e);
  });
  CheckEntry kp = info("algebroid.ker_partial", "Ker d on V_0");
  kp.value("basis", named(ker_partial(g), an)).value("scalars_only", ker_partial_is_scalars(g) ? "true" : "false");
  r.add(kp);

  const LeibnizAlgebra leib = leibniz_of(g);
  guarded(res, "leibniz.structure", "Leib, derived series, solvable radical", false, [&] {
    CheckEntry e = info("leibniz.leib", "Leib = span{[u, u]}");
    e.value("basis", named(leib_subspace(leib), bn));
    r.add(e);
    CheckEntry ds = info("leibniz.derived_series", "S^(i+1) = [S^(i), S^(i)]");
    auto series = derived_series(leib);
    for (std::size_t i = 0; i < series.size(); ++i) ds.value("L^(" + std::to_string(i + 1) + ")", named(series[i], bn));
    ds.value("solvable", is_solvable(leib) ? "true" : "false");
    r.add(ds);
    CheckEntry sr = info("leibniz.solvable_radical", "maximal solvable ideal");
    sr.value("basis", named(solvable_radical(leib), bn))
        .value("semisimple", is_semisimple_leibniz(leib) ? "true" : "false");
    r.add(sr);
  });

  std::optional<GorensteinContext> ctx = context_for(res, file);
  std::string l1_source;
  std::optional<LOneMap> l1 = l1_for(file, ctx, l1_source);
  if (ctx) {
    r.append(validate_context(*ctx));
    AnchorIdeal aid = ideal_a(*ctx);
    CheckEntry ai = info("forms.anchor_ideal", "span{v_0 a : v in V_1, a in m} is an ideal of V_0");
    ai.status = aid.is_ideal ? Status::Pass : Status::Fail;
    ai.value("basis", named(aid.span, an)).value("proper", aid.proper ? "true" : "false");
    r.add(ai);
    guarded(res, "v0t.in_span_t", "v_0 t lies in Qt for all v", false, [&] { r.append(v0t_check(*ctx)); });
    Subspace mm = m_subspace(*ctx);
    CheckEntry me = info("forms.M", "M = {u : u_0 t = 0}");
    me.value("basis", named(mm, bn)).value("dim", std::to_string(mm.dim()));
    r.add(me);
    IdealKind mk = ideal_check(leib, mm);
    CheckEntry ms = verdict("forms.M_solvable_ideal", "M is a solvable ideal",
                            mk == IdealKind::TwoSided && is_solvable(leib, mm));
    ms.value("ideal", to_string(mk));
    r.add(ms);
    Subspace ann = ann_t(*ctx);
    CheckEntry ae = info("forms.ann_t", "Ann(t_{-1}) = {v : t.v = 0}");
    ae.value("basis", named(ann, bn)).value("dim", std::to_string(ann.dim()));
    r.add(ae);
    CheckEntry ge = info("forms.double_form", "((u, v)) = B(u_1 v, t)");
    ge.value("gram", to_string(double_form(*ctx)));
    r.add(ge);
    Subspace rad = rad_double_form(*ctx);
    CheckEntry re = info("forms.rad_double_form", "rad((,))");
    re.value("basis", named(rad, bn)).value("dim", std::to_string(rad.dim()));
    r.add(re);
    guarded(res, "lemma", "orthogonality lemmas", false, [&] {
      CheckReport suite = perp_lemma_suite(*ctx, l1);
      if (l1) {
        CheckEntry src = info("lemma.l1_source", "L(1) used by the lemma suite");
        src.value("source", l1_source).value("map", named_map(*l1, an, bn));
        r.add(src);
      }
      r.append(suite);
    });
  } else {
    for (const char* id : {"forms.anchor_ideal", "forms.M", "forms.ann_t", "forms.double_form",
                           "forms.rad_double_form", "lemma"})
      r.add(skipped(id, "needs Gorenstein data", "MissingGorensteinData"));
  }
  if (l1) {
    CheckEntry sd = info("forms.self_duality_dim", "dim V_0 / L(1)V_1 counts invariant forms");
    sd.value("dim", std::to_string(self_duality_dim(g, *l1))).value("l1_source", l1_source);
    r.add(sd);
    if (ctx) r.add(verdict("forms.epsilon_kills_l1", "eps(L(1)u) = 0", epsilon_kills_l1(*ctx, *l1)));
  } else {
    r.add(skipped("forms.self_duality_dim", "dim V_0 / L(1)V_1 counts invariant forms", "no L(1) available"));
  }
  finish(res);
  return res;
}

CommandResult cmd_semiconformal(const AlgebroidFile& file) {
  CommandResult res{"semiconformal", file.id, {}, {}, 0};
  CheckReport& r = res.report;
  const VertexAlgebroid& g = file.algebroid;
  const auto& an = g.a_names();
  const auto& bn = g.b_names();
  const std::size_t n = g.a_dim(), m = g.b_dim();
  axiom_precondition(res, file);

  std::optional<AffineSpace> family;
  guarded(res, "l1.family", "L(1) d = 0 and the two L(1) compatibility conditions", true, [&] {
    family = solve_L1(g);
    CheckEntry e = info("l1.family", "L(1) d = 0 and the two L(1) compatibility conditions");
    e.value("dim", std::to_string(family->dim()))
        .value("particular", named_map(unflatten(family->particular, n, m), an, bn));
    auto dirs = family->homogeneous.basis_vectors();
    for (std::size_t k = 0; k < dirs.size(); ++k)
      e.value("direction" + std::to_string(k + 1), named_map(unflatten(dirs[k], n, m), an, bn));
    r.add(e);
    IdentityTally rt("l1.family_roundtrip", "every member of the family satisfies the constraints");
    rt.record("particular", l1_valid(g, unflatten(family->particular, n, m)));
    for (std::size_t k = 0; k < dirs.size(); ++k)
      rt.record("particular + direction" + std::to_string(k + 1),
                l1_valid(g, unflatten(family->particular + dirs[k], n, m)));
    r.add(rt.finish());
  });

  std::optional<GorensteinContext> ctx = context_for(res, file);
  if (!ctx) {
    r.add(skipped("l1.pinned", "eps(L(1)u) = 0", "no Gorenstein context"));
    r.add(skipped("heisenberg", "rank one Heisenberg generator", "no Gorenstein context"));
    finish(res);
    return res;
  }
  if (family) {
    guarded(res, "l1.pinned", "eps(L(1)u) = 0", true, [&] {
      PinnedLOne p = pin_L1(g, *family, *ctx);
      CheckEntry e = info("l1.pinned", "eps(L(1)u) = 0");
      e.value("unique", p.unique ? "true" : "false").value("map", named_map(p.map, an, bn));
      r.add(e);
      r.add(verdict("l1.pinned_eps", "eps(L(1)u) = 0 for every basis u", epsilon_kills_l1(*ctx, p.map)));
      CheckEntry sd = info("l1.self_duality_dim", "dim V_0 / L(1)V_1 counts invariant forms");
      sd.value("dim", std::to_string(self_duality_dim(g, p.map)));
      r.add(sd);
    });
  } else {
    r.add(skipped("l1.pinned", "eps(L(1)u) = 0", "no L(1) family"));
  }

  guarded(res, "heisenberg", "rank one Heisenberg generator", true, [&] {
    HeisenbergWitness w = heisenberg_search(*ctx);
    CheckEntry e = info("heisenberg.witness", "g_0 t = t, g_1 g = beta 1 + rho t, h' = g - rho/2 d(t)");
    e.value("g", named(w.g, bn))
        .value("rho", to_string(w.rho))
        .value("beta", to_string(w.beta))
        .value("h_prime", named(w.h_prime, bn))
        .value("normalized", w.normalized ? "true" : "false");
    if (w.h) e.value("h", named(*w.h, bn));
    if (w.corrected) e.note = "h' shifted by a multiple of d(t) to clear h'_0 h'";
    r.add(e);
    const Vector& t = ctx->t;
    r.add(verdict("heisenberg.g0t", "g_0 t = t", g.anchor(w.g, t) == t));
    r.add(verdict("heisenberg.h0t", "h'_0 t = t", g.anchor(w.h_prime, t) == t));
    r.add(verdict("heisenberg.h0h", "h'_0 h' = 0", is_zero(g.bracket(w.h_prime, w.h_prime))));
    r.add(verdict("heisenberg.h1h", "h'_1 h' = beta 1", g.pairing(w.h_prime, w.h_prime) == w.beta * g.one()));
    r.add(verdict("heisenberg.g_not_in_rad", "g is not in rad((,))", !rad_double_form(*ctx).contains(w.g)));
    if (w.h) {
      r.add(verdict("heisenberg.h_normalized", "h_0 h = 0 and h_1 h = 1",
                    is_zero(g.bracket(*w.h, *w.h)) && g.pairing(*w.h, *w.h) == g.one()));
    } else {
      r.add(skipped("heisenberg.h_normalized", "h_0 h = 0 and h_1 h = 1", "beta is not a rational square"));
    }
  });
  finish(res);
  return res;
}

CommandResult cmd_mutate(const AlgebroidFile& file, std::uint64_t seed, std::size_t count) {
  CommandResult res{"mutate", file.id, {}, {}, 0};
  CheckReport& r = res.report;
  const VertexAlgebroid& g = file.algebroid;
  CheckReport base = check_all(g);
  const auto base_failed = base.failed_ids();
  const std::set<std::string> known(base_failed.begin(), base_failed.end());
  CheckEntry be = verdict("mutation.base", "original satisfies every algebroid axiom", base.passed());
  if (!base.passed()) {
    be.value("failed", join(base_failed));
    be.note = "a mutation counts as caught when a further check id fails";
  }
  r.add(be);

  std::size_t caught = 0;
  const auto mutations = draw_mutations(g, seed, count);
  for (std::size_t k = 0; k < mutations.size(); ++k) {
    const Mutation& mu = mutations[k];
    CheckReport rep = check_all(apply_mutation(g, mu));
    std::vector<std::string> fresh;
    for (const auto& id : rep.failed_ids())
      if (!known.count(id)) fresh.push_back(id);
    CheckEntry e = info("mutation." + std::to_string(k + 1), "single-coefficient perturbation");
    e.value("mutation", mu.label());
    if (fresh.empty()) {
      e.value("outcome", "uncaught-but-consistent");
    } else {
      ++caught;
      e.value("outcome", "caught").value("failed", join(fresh));
    }
    r.add(e);
  }
  CheckEntry s = info("mutation.summary", "caught and uncaught mutations");
  s.value("seed", std::to_string(seed))
      .value("count", std::to_string(mutations.size()))
      .value("caught", std::to_string(caught))
      .value("uncaught", std::to_string(mutations.size() - caught));
  r.add(s);
  finish(res);
  return res;
}

}  // namespace valab
