#pragma once

#include <cstdint>
#include <vector>

#include "valab/io.hpp"

namespace valab::fixtures {

/// Q[x]/(x^n) with basis 1, x, ..., x^{n-1}.
CommAlgebra truncated_polynomial(std::size_t n);
Grading truncated_polynomial_grading(std::size_t n);
/// Q[X,Y]/(X^2, Y^2) with basis 1, X, Y, XY.
CommAlgebra dual_numbers_squared();
/// Q[x,y]/(x^2, xy, y^2) with basis 1, x, y.
CommAlgebra square_zero_plane();
/// Q x Q with basis 1, e where e^2 = e.
CommAlgebra split_pair();
/// Q[x]/(x^2 - 2) with basis 1, x.
CommAlgebra sqrt_two_field();

/// Q[x_1..x_k]/I for a random monomial ideal I with quotient of dimension at most max_dim,
/// graded by total degree.
struct GradedAlgebra {
  CommAlgebra algebra;
  Grading grading;
};
GradedAlgebra random_monomial_quotient(std::uint64_t seed, std::size_t max_dim = 6);

/// Algebra-only Q[x]/(x^{k+1}).
AlgebroidFile ex61(std::size_t k);
/// Two-dimensional A = span{1, a} with a^2 = alpha a - alpha^2/4, B = span{b, d(a)}.
AlgebroidFile ex62(const Rational& alpha);
/// A = Q[a]/(a^2), B = span{u, v, d(a)}, a.v = rho d(a).
AlgebroidFile ex63(const Rational& rho);
/// sl2 extended by l two-dimensional blocks, from the structure relations.
AlgebroidFile semisimple(std::size_t l);

/// Every shipped fixture, in corpus order.
std::vector<AlgebroidFile> corpus();

}  // namespace valab::fixtures
