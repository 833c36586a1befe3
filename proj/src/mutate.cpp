#include "valab/mutate.hpp"

#include <array>
#include <random>

#include "valab/error.hpp"

namespace valab {

namespace {

struct TableShape {
  const char* name;
  std::vector<std::size_t> dims;
};

std::vector<TableShape> shapes(const VertexAlgebroid& g) {
  const std::size_t n = g.a_dim(), m = g.b_dim();
  return {{"mul", {n, n, n}},       {"partial", {n, m}},     {"action", {n, m, m}},
          {"bracket", {m, m, m}},   {"anchor", {m, n, n}},   {"pairing", {m, m, n}}};
}

std::size_t volume(const std::vector<std::size_t>& dims) {
  std::size_t v = 1;
  for (auto d : dims) v *= d;
  return v;
}

}  // namespace

std::string Mutation::label() const {
  std::string s = table;
  for (auto i : index) s += "[" + std::to_string(i) + "]";
  return s + " += " + to_string(delta);
}

std::size_t coefficient_count(const VertexAlgebroid& g) {
  std::size_t total = 0;
  for (const auto& s : shapes(g)) total += volume(s.dims);
  return total;
}

std::vector<Mutation> draw_mutations(const VertexAlgebroid& g, std::uint64_t seed, std::size_t count) {
  static const std::array<Rational, 6> deltas{Rational(1), Rational(-1), Rational(2),
                                              Rational(-2), Rational(1, 2), Rational(-1, 2)};
  const std::size_t total = coefficient_count(g);
  std::vector<Mutation> out;
  if (total == 0) return out;
  std::mt19937_64 rng(seed);
  for (std::size_t c = 0; c < count; ++c) {
    std::size_t flat = rng() % total;
    Rational delta = deltas[rng() % deltas.size()];
    for (const auto& s : shapes(g)) {
      const std::size_t v = volume(s.dims);
      if (flat >= v) {
        flat -= v;
        continue;
      }
      std::vector<std::size_t> index(s.dims.size());
      for (std::size_t k = s.dims.size(); k-- > 0;) {
        index[k] = flat % s.dims[k];
        flat /= s.dims[k];
      }
      out.push_back({s.name, index, delta});
      break;
    }
  }
  return out;
}

VertexAlgebroid apply_mutation(const VertexAlgebroid& g, const Mutation& mu) {
  AlgebroidData d = g.data();
  const auto& i = mu.index;
  if (mu.table == "mul") {
    d.algebra.mul()(i.at(0), i.at(1), i.at(2)) += mu.delta;
  } else if (mu.table == "partial") {
    d.partial(i.at(0), i.at(1)) += mu.delta;
  } else if (mu.table == "action") {
    d.action(i.at(0), i.at(1), i.at(2)) += mu.delta;
  } else if (mu.table == "bracket") {
    d.bracket(i.at(0), i.at(1), i.at(2)) += mu.delta;
  } else if (mu.table == "anchor") {
    d.anchor(i.at(0), i.at(1), i.at(2)) += mu.delta;
  } else if (mu.table == "pairing") {
    d.pairing(i.at(0), i.at(1), i.at(2)) += mu.delta;
  } else {
    throw Error(ErrorKind::ParseError, "unknown table " + mu.table);
  }
  return VertexAlgebroid(std::move(d));
}

}  // namespace valab
