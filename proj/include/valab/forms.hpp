#pragma once

#include <cstddef>
#include <optional>

#include "valab/algebroid.hpp"
#include "valab/commalg.hpp"
#include "valab/lone.hpp"
#include "valab/report.hpp"

namespace valab {

/// Gorenstein data attached to an algebroid: socle generator t, invariant form
/// B on A (Gram matrix), and the maximal ideal m.
struct GorensteinContext {
  VertexAlgebroid base;
  std::optional<Grading> grading;
  Vector t;
  Matrix form;
  Subspace maximal_ideal;

  /// eps(a) = B(1, a).
  Rational epsilon(const Vector& a) const { return bilinear(form, base.one(), a); }
};

/// Fills in missing pieces: t from the socle, B by solving for the unique
/// graded invariant form with B(1, t) = 1. t is rescaled so that B(1, t) = 1.
/// Throws Error{NotGorenstein}, Error{MissingGorensteinData} (no form and no
/// grading) or Error{Inconsistent} (synthesized form not unique).
GorensteinContext make_context(VertexAlgebroid base, std::optional<Grading> grading = std::nullopt,
                               std::optional<Matrix> form = std::nullopt, std::optional<Vector> t = std::nullopt);

/// Unique symmetric invariant form with B(1,t) = 1 that pairs A_d with A_{s-d} only.
Matrix synthesize_form(const CommAlgebra& a, const Grading& g, const Vector& t);

CheckReport validate_context(const GorensteinContext& ctx);

struct AnchorIdeal {
  Subspace span;
  bool is_ideal = false;
  bool proper = false;
};

/// span{pi(v)(a) : v in B, a in m}.
AnchorIdeal ideal_a(const GorensteinContext& ctx);

/// pi(v)(t) in Qt for every basis v; records the scalars.
/// Throws Error{PreconditionViolated} when the anchor ideal is all of A.
CheckReport v0t_check(const GorensteinContext& ctx);

/// G(i, j) = B(<b_i, b_j>, t).
Matrix double_form(const GorensteinContext& ctx);
Subspace rad_double_form(const GorensteinContext& ctx);

/// {v : pi(v)(t) = 0}.
Subspace m_subspace(const GorensteinContext& ctx);
/// {v : t.v = 0}.
Subspace ann_t(const GorensteinContext& ctx);

/// Number of terms of the defining series of <u|v> that survive at a given weight.
constexpr int pairing_series_terms(int weight) { return weight + 1; }

/// Gram matrix of <u|v> = -eps(<u,v> + (L(1)u)_0 v) on B.
/// Throws Error{InvalidLOne} when l1 fails its constraints.
Matrix pairing_v1(const GorensteinContext& ctx, const LOneMap& l1);

/// Orthogonality and radical statements tying M, rad, W and t_{-2}m to <.|.>.
/// Sub-checks needing L(1) are Skipped without one.
/// Throws Error{PreconditionViolated} when the anchor ideal is all of A.
CheckReport perp_lemma_suite(const GorensteinContext& ctx, const std::optional<LOneMap>& l1);

/// dim A / L(1)B.
std::size_t self_duality_dim(const VertexAlgebroid& g, const LOneMap& l1);

/// eps(L(1)u) = 0 for every basis u.
bool epsilon_kills_l1(const GorensteinContext& ctx, const LOneMap& l1);

}  // namespace valab
