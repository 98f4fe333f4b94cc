#pragma once

// Signed Gauss codes for flat knotoid, knotoid and knot diagrams.
//
// A diagram is stored as its visit sequence: every crossing is visited twice
// while travelling along the strand. The chirality of a crossing is +1 when
// the frame (direction at the first visit, direction at the second visit) is
// counterclockwise on the sphere, -1 otherwise. Chirality is a property of the
// flat projection; the writhe sign of a knotted crossing is derived from it
// (see affine.hpp).
//
// Arc numbering. Open diagrams with n crossings have arcs e_0..e_2n, where e_i
// ends at visit i (or at the end endpoint for i = 2n). Closed diagrams have
// arcs e_0..e_{2n-1}, where e_i leaves visit i.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotoid {

enum class Pass : std::uint8_t { Flat, Over, Under };

enum class DiagramKind : std::uint8_t { Flat, Knotoid, Knot };

struct Visit {
  int crossing = 0;  // 1-based label
  Pass pass = Pass::Flat;

  friend bool operator==(const Visit&, const Visit&) = default;
};

enum class CodeErrorKind { Malformed, LabelCount, SignMismatch, NotSpherical };

const char* to_string(CodeErrorKind kind);

class CodeError : public std::runtime_error {
 public:
  CodeError(CodeErrorKind kind, const std::string& detail);

  CodeErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  CodeErrorKind kind_;
  std::string detail_;
};

/// An immutable, validated diagram. Crossing labels are always in
/// first-occurrence order and the flat projection is spherical.
class Diagram {
 public:
  /// The trivial flat knotoid diagram (an embedded arc).
  Diagram() = default;

  /// Validates, relabels to first-occurrence order, and checks sphericity.
  /// `chirality[c - 1]` is the chirality of label c *before* relabelling;
  /// labels must therefore be 1..n. Throws CodeError.
  static Diagram make(DiagramKind kind, std::vector<Visit> visits, std::vector<int> chirality);

  static Diagram trivial(DiagramKind kind = DiagramKind::Flat);

  DiagramKind kind() const noexcept { return kind_; }
  bool is_closed() const noexcept { return kind_ == DiagramKind::Knot; }
  bool is_open() const noexcept { return !is_closed(); }
  bool has_passes() const noexcept { return kind_ != DiagramKind::Flat; }

  int crossing_count() const noexcept { return static_cast<int>(chirality_.size()); }
  std::size_t visit_count() const noexcept { return visits_.size(); }
  std::size_t arc_count() const noexcept { return is_closed() ? visits_.size() : visits_.size() + 1; }

  std::span<const Visit> visits() const noexcept { return visits_; }
  const Visit& visit(std::size_t pos) const { return visits_.at(pos); }
  std::span<const int> chiralities() const noexcept { return chirality_; }
  int chirality(int crossing) const { return chirality_.at(static_cast<std::size_t>(crossing - 1)); }

  /// Positions (first, second) of the two visits of a crossing.
  const std::array<std::size_t, 2>& occurrences(int crossing) const {
    return occurrences_.at(static_cast<std::size_t>(crossing - 1));
  }

  /// Arc arriving at / leaving the visit at `pos`.
  std::size_t in_arc(std::size_t pos) const noexcept;
  std::size_t out_arc(std::size_t pos) const noexcept;

  /// Visit position at the tail / head of an arc; npos denotes an endpoint.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t arc_tail(std::size_t arc) const noexcept;
  std::size_t arc_head(std::size_t arc) const noexcept;

  /// Outer arcs of an open diagram: e_0 and e_2n.
  std::size_t first_arc() const noexcept { return 0; }
  std::size_t last_arc() const noexcept { return is_closed() ? visits_.size() - 1 : visits_.size(); }

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  Diagram(DiagramKind kind, std::vector<Visit> visits, std::vector<int> chirality);

  DiagramKind kind_ = DiagramKind::Flat;
  std::vector<Visit> visits_;
  std::vector<int> chirality_;
  std::vector<std::array<std::size_t, 2>> occurrences_;

  friend Diagram make_unchecked(DiagramKind, std::vector<Visit>, std::vector<int>);
};

/// Builds a diagram whose labels are already canonical and whose flat
/// projection is known to be spherical. Used by the enumerator's hot loop.
Diagram make_unchecked(DiagramKind kind, std::vector<Visit> visits, std::vector<int> chirality);

/// Relabels crossings in first-occurrence order. Labels must be positive.
/// Returns the relabelled visits; `old_to_new[label]` receives the mapping.
std::vector<Visit> relabel_first_occurrence(std::span<const Visit> visits, std::vector<int>* old_to_new = nullptr);

Diagram parse_flat_code(std::string_view text);
Diagram parse_knotoid_code(std::string_view text);
Diagram parse_knot_code(std::string_view text);

/// Dispatches on the header word.
Diagram parse_code(std::string_view text);

std::string serialize(const Diagram& diagram);

/// First-occurrence labelling; for knots also the least code over all cyclic
/// rotations of the visit sequence. Reversal and mirroring are not quotiented.
std::string canonical_code(const Diagram& diagram);

/// Cyclic rotation of a closed diagram so that `new_start` becomes position 0.
/// Chirality is flipped for crossings whose visit order swaps.
Diagram rotate(const Diagram& knot, std::size_t new_start);

Diagram forget_over_under(const Diagram& diagram);

}  // namespace knotoid
