#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "valab/linalg.hpp"
#include "valab/report.hpp"

namespace valab {

/// Finite-dimensional left Leibniz algebra: [e_i, e_j] = sum_k bracket(i, j, k) e_k.
class LeibnizAlgebra {
 public:
  LeibnizAlgebra() = default;
  LeibnizAlgebra(Tensor3 bracket, std::vector<std::string> names = {});

  std::size_t dim() const noexcept { return bracket_.dim0(); }
  const Tensor3& bracket() const noexcept { return bracket_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  Vector operator()(const Vector& x, const Vector& y) const { return bracket_.apply(x, y); }
  /// Matrix of y -> [x, y].
  Matrix left_ad(const Vector& x) const;
  Vector basis(std::size_t i) const { return unit_vector(dim(), i); }

 private:
  Tensor3 bracket_;
  std::vector<std::string> names_;
};

CheckReport check_leibniz(const LeibnizAlgebra& l);

/// span{[x, x]}, by polarization.
Subspace leib_subspace(const LeibnizAlgebra& l);

/// [S, S] for a subspace S.
Subspace bracket_span(const LeibnizAlgebra& l, const Subspace& s);

/// S^(1) = [S, S], S^(i+1) = [S^(i), S^(i)], up to stabilization.
std::vector<Subspace> derived_series(const LeibnizAlgebra& l, const Subspace& s);
std::vector<Subspace> derived_series(const LeibnizAlgebra& l);
bool is_solvable(const LeibnizAlgebra& l, const Subspace& s);
bool is_solvable(const LeibnizAlgebra& l);

/// Preimage of the Killing-form radical of the Lie quotient by Leib.
Subspace solvable_radical(const LeibnizAlgebra& l);

bool is_semisimple_leibniz(const LeibnizAlgebra& l);

enum class IdealKind { TwoSided, LeftOnly, RightOnly, NotIdeal };
std::string to_string(IdealKind k);

/// Left means [L, s] in s; right means [s, L] in s.
IdealKind ideal_check(const LeibnizAlgebra& l, const Subspace& s);

}  // namespace valab
