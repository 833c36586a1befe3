#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "valab/linalg.hpp"
#include "valab/report.hpp"

namespace valab {

/// Finite-dimensional unital commutative associative algebra given by
/// structure constants: e_i * e_j = sum_k mul(i, j, k) e_k.
class CommAlgebra {
 public:
  CommAlgebra() = default;
  CommAlgebra(Tensor3 mul, Vector unit, std::vector<std::string> names = {});

  std::size_t dim() const noexcept { return unit_.size(); }
  const Tensor3& mul() const noexcept { return mul_; }
  Tensor3& mul() noexcept { return mul_; }
  const Vector& unit() const noexcept { return unit_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  Vector multiply(const Vector& x, const Vector& y) const { return mul_.apply(x, y); }
  Vector power(const Vector& x, std::size_t k) const;
  /// Matrix of y -> x * y.
  Matrix left_mult(const Vector& x) const;
  Vector basis(std::size_t i) const { return unit_vector(dim(), i); }

 private:
  Tensor3 mul_;
  Vector unit_;
  std::vector<std::string> names_;
};

/// Degree of every basis element; top is the socle degree s.
struct Grading {
  std::vector<int> degree;
  int top = 0;

  std::vector<std::size_t> indices_of_degree(int d) const;
};

CheckReport check_algebra(const CommAlgebra& a);

/// x^(dim+1) == 0. Brute-force cross-check only.
bool nilpotent_oracle(const CommAlgebra& a, const Vector& x);

/// Radical of the trace form tr(L_{x*y}); equals the nilradical in characteristic 0.
Subspace jacobson_radical(const CommAlgebra& a);

enum class Locality { Local, NotLocal, IndeterminateNonSplit };
std::string to_string(Locality l);

Locality is_local(const CommAlgebra& a);

struct IdempotentStatus {
  enum class Kind { OnlyTrivial, NontrivialFound, Indeterminate };
  Kind kind = Kind::Indeterminate;
  std::optional<Vector> witness;
};
std::string to_string(IdempotentStatus::Kind k);

IdempotentStatus idempotent_status(const CommAlgebra& a);

/// A nontrivial idempotent found by Fitting decomposition of small candidate
/// elements, if any.
std::optional<Vector> find_nontrivial_idempotent(const CommAlgebra& a);

/// Annihilator of the Jacobson radical.
Subspace socle(const CommAlgebra& a);

/// dim socle == 1. Throws Error{NotLocal} unless the algebra is local.
bool is_gorenstein(const CommAlgebra& a);

/// Throws Error{GradingViolation} when the grading is not compatible with the
/// multiplication.
void validate_grading(const CommAlgebra& a, const Grading& g);

/// Poincare duality: dim A_s = 1 and every pairing A_d x A_{s-d} -> A_s is
/// nondegenerate. Includes an entry comparing the outcome with is_gorenstein.
CheckReport poincare_check(const CommAlgebra& a, const Grading& g);

/// Socle generator scaled so its last nonzero coordinate is 1.
/// Throws Error{NotGorenstein} when the socle is not one-dimensional.
Vector choose_t(const CommAlgebra& a);

}  // namespace valab
