#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "valab/algebroid.hpp"

namespace valab {

/// One perturbed structure constant. `table` is one of mul, partial, action,
/// bracket, anchor, pairing; `index` holds its coordinates.
struct Mutation {
  std::string table;
  std::vector<std::size_t> index;
  Rational delta;

  std::string label() const;
};

/// Number of mutable coefficients in the structure tables of g.
std::size_t coefficient_count(const VertexAlgebroid& g);

/// `count` mutations from one seeded 64-bit Mersenne Twister stream; the
/// coefficient and a nonzero delta in {1, -1, 2, -2, 1/2, -1/2} are drawn per mutation.
std::vector<Mutation> draw_mutations(const VertexAlgebroid& g, std::uint64_t seed, std::size_t count);

VertexAlgebroid apply_mutation(const VertexAlgebroid& g, const Mutation& mu);

}  // namespace valab
