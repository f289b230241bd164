#pragma once

#include <cstdint>

#include "absconv/scenario.hpp"

namespace absconv {

/// One randomly generated finite instance: two families on a shared grid,
/// two envelope-built (hence abstract convex) targets, one free-form target,
/// and a base point inside every effective domain.
struct RandomInstance {
  FamilyRef L1, L2;
  TargetFunction f1, f2;
  TargetFunction g;
  Point x;
};

RandomInstance make_random_instance(std::uint64_t seed);

/// Runs the invariant battery (hulls, calculus rules, monotone operators) on
/// `count` seeded random instances.  Deterministic for a fixed seed.
Report run_property_suite(std::uint64_t seed, int count);

}  // namespace absconv
