/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "ipart/hahn.hpp"

namespace ipart {

/* Coefficients c with sum c[i] * vectors[i] == target, or nullopt if target is outside the span. */
std::optional<std::vector<mpq_class>> solve_combination(const std::vector<ExponentVec>& vectors,
                                                        const ExponentVec& target);

/* Exact rank of the vectors over Q. */
std::size_t rank_of(const std::vector<ExponentVec>& vectors);

inline bool linearly_independent(const std::vector<ExponentVec>& vectors) {
  return rank_of(vectors) == vectors.size();
}

/* span(a) == span(b), by mutual containment. */
bool same_span(const std::vector<ExponentVec>& a, const std::vector<ExponentVec>& b);

}  // namespace ipart
