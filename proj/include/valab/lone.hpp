#pragma once

#include "valab/algebroid.hpp"
#include "valab/linalg.hpp"
#include "valab/report.hpp"

namespace valab {

/// The map L(1): B -> A, stored as a dim A x dim B matrix.
struct LOneMap {
  Matrix matrix;

  Vector operator()(const Vector& u) const { return matrix * u; }
  friend bool operator==(const LOneMap&, const LOneMap&) = default;
};

/// L(1) d = 0, L(1)(u_0 v) = (L(1)u)_0 v + u_0 L(1)v, L(1)(a.b) = a*L(1)b - a_0 b.
CheckReport l1_constraints(const VertexAlgebroid& g, const LOneMap& l1);
bool l1_valid(const VertexAlgebroid& g, const LOneMap& l1);

/// Column-major flattening: entry (i, j) of the matrix is unknown j * dim A + i.
Vector flatten(const LOneMap& l1);
LOneMap unflatten(const Vector& x, std::size_t a_dim, std::size_t b_dim);

}  // namespace valab
