/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ipart/hahn.hpp"
#include "ipart/report.hpp"

namespace ipart {

struct FloorResult {
  HahnElem floor;
  HahnElem remainder;
};

/* Membership in the canonical integer part: purely infinite plus an integer. */
bool ip_member(const HahnElem& x);

/* The floor in the canonical integer part; throws TruncationNotSupported. */
FloorResult ip_floor(const HahnElem& x);

/*
 * A set proposed as an integer part: a membership test and a rounding
 * procedure returning some member i with i <= x < i + 1 (nullopt if it has none).
 */
struct IntegerPartCandidate {
  std::string name;
  std::function<bool(const HahnElem&)> member;
  std::function<std::optional<HahnElem>(const HahnElem&)> round_down;
};

IntegerPartCandidate canonical_integer_part();
/* The integers alone, sitting inside K as constants. */
IntegerPartCandidate integers_only();

/* Laws: closure, minimality, discreteness, rounding. */
LawReport ip_verify(const std::vector<HahnElem>& samples, const std::vector<std::pair<HahnElem, HahnElem>>& ring_samples,
                    const IntegerPartCandidate& candidate = canonical_integer_part());

/* Every exponent denominator of the expansion at or below 0 divides m. */
long required_ramification(const HahnElem& x);

struct DenseFloorTrace {
  HahnElem x_prime;    // truncation at exponent 0, lies in D
  HahnElem i;          // floor_D(x') - 1
  int interval = 0;    // 1, 2, 3: x in (i,i+1], (i+1,i+2], (i+2,i+3)
  FloorResult result;
};

/*
 * Floor through the dense subfield D with exponents in (1/m)Z^n: round the
 * truncation x' in D, then place x among three unit intervals by sign tests.
 * Throws TruncationNotSupported, RamificationTooSmall.
 */
DenseFloorTrace ip_floor_via_dense_trace(const HahnElem& x, long m);
inline FloorResult ip_floor_via_dense(const HahnElem& x, long m) { return ip_floor_via_dense_trace(x, m).result; }

}  // namespace ipart
