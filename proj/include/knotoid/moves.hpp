#pragma once

// Reidemeister moves Omega1 and Omega2 as rewrites of signed Gauss codes.
// Inserted material never crosses an endpoint: a kink or finger lives next to
// a single arc (Omega1) or inside a single face (Omega2).

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "knotoid/code.hpp"

namespace knotoid {

enum class Side { Left, Right };

enum class MoveErrorKind { PatternNotFound, NotAdjacent };

const char* to_string(MoveErrorKind kind);

class MoveError : public std::runtime_error {
 public:
  MoveError(MoveErrorKind kind, const std::string& detail);
  MoveErrorKind kind() const noexcept { return kind_; }

 private:
  MoveErrorKind kind_;
};

/// A rewritten diagram and the visit position where the move happened; that
/// position is what the matching deletion expects.
struct MoveResult {
  Diagram diagram;
  std::size_t site = 0;
};

/// Adds a kink on `arc`, with the small loop on the given side of the strand.
/// `writhe` picks the over/under order for knotted diagrams (ignored if flat).
MoveResult r1_insert(const Diagram& d, std::size_t arc, Side side, int writhe = 1);

/// Removes the kink whose two visits sit at positions site, site + 1.
Diagram r1_delete(const Diagram& d, std::size_t site);

struct R2Variant {
  bool a_over = true;  // knotted diagrams: arc_a passes over arc_b
  int face = -1;       // common face to push through; -1 picks the least one
};

/// Pushes a finger of arc_a across arc_b through a face they both bound.
MoveResult r2_insert(const Diagram& d, std::size_t arc_a, std::size_t arc_b, R2Variant variant = {});

/// Removes a bigon whose first strand visits positions site, site + 1.
Diagram r2_delete(const Diagram& d, std::size_t site);

/// Applies `steps` successful random Omega1/Omega2 insertions and deletions,
/// deterministically from `seed`.
Diagram random_rewrite(const Diagram& d, std::uint64_t seed, int steps);

}  // namespace knotoid
