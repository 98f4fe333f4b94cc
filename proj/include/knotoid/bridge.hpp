#pragma once

// Bridges of classical knot diagrams and the crossing-number test they give:
// a diagram with a bridge of length k and fewer than 3k crossings is not
// minimal. Cutting the bridge out leaves a flat knotoid diagram F whose
// endpoints are joined by the reversed bridge, a shortcut crossing F k times.

#include <cstddef>
#include <string>

#include "knotoid/code.hpp"
#include "knotoid/planar.hpp"

namespace knotoid {

struct BridgeLocation {
  Pass kind = Pass::Over;  // Over or Under
  std::size_t start = 0;   // visit position of the first bridge crossing
  std::size_t length = 0;

  friend bool operator==(const BridgeLocation&, const BridgeLocation&) = default;
};

/// Longest maximal cyclic run of equal passes; ties go to the smallest start.
BridgeLocation longest_bridge(const Diagram& knot);

struct BridgeCut {
  Diagram flat;       // starts just after the bridge, ends just before it
  Shortcut shortcut;  // the reversed bridge
};

BridgeCut cut_bridge(const Diagram& knot, const BridgeLocation& loc);

enum class Verdict { NotMinimal, Inconclusive };

const char* to_string(Verdict v);

struct MinimalityResult {
  Verdict verdict = Verdict::Inconclusive;
  int k = 0;
  int cr = 0;
  BridgeLocation bridge;  // the certificate
};

/// NOT_MINIMAL iff cr < 3k. Never claims minimality.
MinimalityResult minimality_check(const Diagram& knot);

}  // namespace knotoid
