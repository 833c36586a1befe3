#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "valab/algebroid.hpp"
#include "valab/forms.hpp"
#include "valab/lone.hpp"
#include "valab/report.hpp"

namespace valab {

/// All L(1) maps satisfying the three constraint families, as an affine space
/// over the column-major flattening (see flatten). Throws Error{NoSolution}.
AffineSpace solve_L1(const VertexAlgebroid& g);

struct PinnedLOne {
  AffineSpace space;
  bool unique = false;
  /// The point of `space` with free coordinates zeroed.
  LOneMap map;
};

/// Restricts a solution space by eps(L(1)u) = 0 for every basis u.
/// Throws Error{Inconsistent}.
PinnedLOne pin_L1(const VertexAlgebroid& g, const AffineSpace& solutions, const GorensteinContext& ctx);

struct HeisenbergWitness {
  Vector g;
  Rational rho;
  Rational beta;
  Vector h_prime;
  bool normalized = false;
  /// h' / sqrt(beta), present when normalized.
  std::optional<Vector> h;
  /// Set when h' needed a multiple of d(t) beyond g - rho/2 d(t) to kill h'_0 h'.
  bool corrected = false;
};

/// Finds g with g_0 t = t, decomposes g_1 g = beta 1 + rho t and builds
/// h' = g - rho/2 d(t) with h'_0 h' = 0, h'_1 h' = beta 1.
/// Throws Error{NoGenerator}, Error{NotInSpan} or Error{BetaZero}.
HeisenbergWitness heisenberg_search(const GorensteinContext& ctx);

/// Loop module L(U) = U (x) Q[t, 1/t] of a 1-truncated sl2-module U = U_0 (+) U_1,
/// restricted to powers in [window_lo, window_hi]. Basis index u < u0_dim is in
/// U_0, the rest in U_1.
struct BModuleLoop {
  std::size_t u0_dim = 0;
  std::size_t u1_dim = 0;
  /// u0_dim x u1_dim matrix of L(1): U_1 -> U_0.
  Matrix l1_action;
  int window_lo = -12;
  int window_hi = 12;
  /// Replaces m(m+1)/2 in the L(1) term of L(m), for fault injection.
  std::map<int, Rational> l1_coefficient_override;

  std::size_t dim() const { return u0_dim + u1_dim; }
};

/// Sparse element of the windowed loop module, keyed by (basis index, power of t).
using LoopVector = std::map<std::pair<std::size_t, int>, Rational>;

/// L(m)(u (x) t^n) = -(m+n+1) u t^{m+n} + (m+1) L(0)u t^{m+n} + m(m+1)/2 L(1)u t^{m+n-1}.
/// Throws Error{WindowOverflow} when a nonzero term leaves the window.
LoopVector loop_virasoro(const BModuleLoop& mod, int mode_m, std::size_t u, int n);
LoopVector loop_virasoro(const BModuleLoop& mod, int mode_m, const LoopVector& x);

/// [L(p), L(q)] = (p - q) L(p + q) on every basis u (x) t^n with n in the safe
/// sub-window, for -1 <= p, q <= max_mode.
CheckReport virasoro_commutator_check(const BModuleLoop& mod, int max_mode);

/// Small random module with integer and half-integer L(1) entries.
BModuleLoop random_module(std::uint64_t seed, int window = 12);

/// Locality of A read as indecomposability of V.
CheckEntry indecomposability_report(const VertexAlgebroid& g);

}  // namespace valab
