#pragma once

#include <optional>

#include "ekrlab/families.hpp"

namespace ekrlab {

// True iff every C <= a and D <= b meet, decided by the pigeonhole
// criterion: some 1 <= i, j <= r with i + j > max(a_i, b_j).
bool cross_intersecting(const RSet& a, const RSet& b);

// Least s in [1, r] with a ≺ [s, 2s-1]; nullopt iff a_i >= 2i for every i,
// in which case {1,3,...,2r-1} and {2,4,...,2r} both lie below a.
std::optional<int> star_index(const RSet& a);

// Checks cross_intersecting on every pair of generators, self-pairs
// included. Sufficient because the criterion passes down to smaller sets.
bool is_intersecting(const GeneratorFamily& f);

// Pairwise check over all members. Only for families small enough to list.
bool is_intersecting_naive(const GeneratorFamily& f);

}  // namespace ekrlab
