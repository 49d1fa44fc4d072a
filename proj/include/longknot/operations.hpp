#pragma once

#include "longknot/diagram.hpp"

#include <cstdint>
#include <random>

namespace longknot {

/// Reads the long word around the circle (base point at infinity).
ClosedGaussDiagram closure(const LongGaussDiagram& d);

/// k1 # k2: k2 drawn to the right of k1. k2's arrows are shifted past
/// k1's largest id.
LongGaussDiagram concatenate(const LongGaussDiagram& k1, const LongGaussDiagram& k2);

/// K^{-1} = -r(K): word reversed, signs negated, roles kept.
LongGaussDiagram inverse(const LongGaussDiagram& k);

/// K^m as an m-fold concatenation; power(k, 0) is the unknot.
LongGaussDiagram power(const LongGaussDiagram& k, unsigned m);

/// Moves the first `shift` endpoints of the word to its end (a new base point
/// on the same closed diagram).
LongGaussDiagram rotate_base_point(const LongGaussDiagram& d, std::size_t shift);

/// Uniform draw from [0, bound). Portable across standard libraries, unlike
/// std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniformly random interleaving of n Over/Under endpoint pairs with uniform
/// signs. Deterministic for a given seed; ids are 1..n by first occurrence.
LongGaussDiagram random_diagram(std::size_t n_arrows, std::uint64_t seed);
LongGaussDiagram random_diagram(std::size_t n_arrows, std::mt19937_64& rng);

}  // namespace longknot
