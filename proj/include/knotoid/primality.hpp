#pragma once

// Primality of flat knotoid diagrams via short closed dual walks.
//
// A circle meeting F once corresponds to an arc with the same face on both
// sides (a bridge); a circle meeting F twice corresponds to two distinct arcs
// separating the same pair of faces. Cutting the strand at those arcs splits
// the crossings into two sides. A witness disqualifies primality when both
// sides contain a crossing.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "knotoid/code.hpp"

namespace knotoid {

enum class WitnessKind { OnePoint, TwoPoint };

const char* to_string(WitnessKind kind);

struct PrimalityWitness {
  WitnessKind kind = WitnessKind::OnePoint;
  std::vector<std::size_t> arcs;  // 1 or 2 arcs, increasing
  std::pair<int, int> faces{-1, -1};
  // OnePoint: side_a holds the crossings before the cut (with the beginning),
  // side_b those after it. TwoPoint: side_a is the piece between the two cut
  // arcs (it never holds an endpoint), side_b the rest.
  std::vector<int> side_a;
  std::vector<int> side_b;

  bool disqualifying() const { return !side_a.empty() && !side_b.empty(); }
  friend bool operator==(const PrimalityWitness&, const PrimalityWitness&) = default;
};

class WitnessError : public std::runtime_error {
 public:
  explicit WitnessError(const std::string& detail) : std::runtime_error("BAD_WITNESS: " + detail) {}
};

std::vector<PrimalityWitness> one_point_circles(const Diagram& f);

/// Same-arc-twice circles are left out: such a circle crosses one arc twice
/// and one of its disks holds only a piece of that arc, never a crossing.
std::vector<PrimalityWitness> two_point_circles(const Diagram& f);

struct PrimeResult {
  bool prime = true;
  std::optional<PrimalityWitness> witness;
};

/// One-point witnesses are tried before two-point ones.
PrimeResult is_prime(const Diagram& f);

/// Replaces the piece between the two cut arcs by a plain arc.
Diagram contract_two_point_circle(const Diagram& f, const PrimalityWitness& w);

/// Cuts F at the bridge: the part containing the beginning and the rest.
std::pair<Diagram, Diagram> split_one_point_circle(const Diagram& f, const PrimalityWitness& w);

struct DecompositionStep {
  WitnessKind kind;
  std::string input;
  PrimalityWitness witness;
  std::vector<std::string> outputs;
};

struct Decomposition {
  std::vector<Diagram> pieces;
  std::vector<DecompositionStep> trace;
};

Decomposition prime_decompose(const Diagram& f);

}  // namespace knotoid
