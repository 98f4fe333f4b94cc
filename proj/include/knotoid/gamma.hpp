#pragma once

// Classification of a flat diagram relative to a fixed minimal shortcut:
// gamma-edges and gamma-regions, crossing types, left/right border edges,
// exceptional crossings, the boundary path of the gamma-domain and its border
// chains, plus the lemma-level properties as executable checks.
//
// The boundary path P is stored as a dart walk with the gamma-domain on the
// left. Step j of a walk is a dart; "entry j" is the crossing head(dart j),
// where the walk turns from dart j to dart j+1. A crossing touching the
// domain boundary twice (e.g. a one-sided exceptional crossing) has two
// entries.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "knotoid/code.hpp"
#include "knotoid/planar.hpp"

namespace knotoid {

enum class BorderSide { None, Left, Right };

/// Refinement of type-0 crossings. NotTypeZero marks every other crossing;
/// Mixed (four border edges, neither 4+0 nor 2+2 by side) does not occur for
/// prime diagrams with a minimal shortcut and is flagged rather than hidden.
enum class Exceptional { NotTypeZero, Regular, OneSidedLeft, OneSidedRight, TwoSided, Mixed };

const char* to_string(BorderSide side);
const char* to_string(Exceptional kind);

class NotMinimalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BoundaryStep {
  Dart dart;
  BorderSide side;
};

struct BorderChain {
  BorderSide side = BorderSide::None;  // None: the run mixes sides
  std::size_t walk = 0;                // index of the boundary walk
  std::size_t first_entry = 0;         // chain runs over darts first_entry+1 .. last_entry
  std::size_t last_entry = 0;
  std::array<int, 2> endpoints{0, 0};  // crossing labels at the two bounding entries
  std::vector<std::size_t> arcs;
  bool passes_regular = false;
  int two_sided_count = 0;             // distinct two-sided crossings passed
  int type2_count = 0;                 // distinct type-2 crossings passed
  bool is_true_chain = false;
};

/// The part of P between the two entries of a one-sided crossing that lies
/// on that crossing's side; it frames every crossing it passes.
struct SelfChain {
  int crossing = 0;
  BorderSide side = BorderSide::None;
  std::size_t walk = 0;
  std::size_t first_entry = 0;
  std::size_t last_entry = 0;
  std::vector<std::size_t> arcs;
  std::vector<int> passed;  // crossing labels of interior entries, with repetition
};

struct GammaReport {
  int crossings = 0;
  int height = 0;
  Shortcut shortcut;

  std::vector<char> is_gamma_edge;          // per arc
  std::vector<std::size_t> gamma_edges;     // sorted
  std::vector<int> regions;                 // canonical order: begin-face .. end-face
  std::vector<int> region_number;           // per face, -1 if not a gamma-region
  std::vector<std::pair<int, int>> arc_faces;  // per arc: (left, right)
  std::vector<char> arc_is_graph_loop;      // per arc: both ends at one crossing

  std::vector<int> crossing_type;           // per crossing (label - 1)
  std::array<int, 5> counts{};              // c_0 .. c_4
  std::vector<BorderSide> border;           // per arc
  std::vector<Exceptional> exceptional;     // per crossing
  std::vector<std::array<int, 4>> corner_faces;  // per crossing, ccw from the first visit's in-dart

  int u = 0;  // crossing at the end of the first outer arc (0 if none)
  int v = 0;  // crossing at the start of the last outer arc
  BorderSide u_sidedness = BorderSide::None;  // left-/right-sided type-2 status of u
  BorderSide v_sidedness = BorderSide::None;

  std::vector<std::vector<BoundaryStep>> boundary;  // P as one walk per boundary component
  std::vector<BorderChain> chains;                  // P cut at every entry of c0_set and c2_set
  std::vector<SelfChain> self_chains;

  std::vector<int> framed_by;  // per crossing: label of a framing one-sided crossing, 0 if none
  std::vector<int> c0_set;     // maximal one-sided exceptional crossings
  std::vector<int> c2_set;     // unframed type-2 crossings
  int q = 0;                   // number of chains

  int c(int n) const { return counts[static_cast<std::size_t>(n)]; }
};

/// Classifies F against `shortcut`, which must be a valid dual path from the
/// begin-face to the end-face. Throws NotMinimalError if it is longer than
/// height(F), std::invalid_argument if it is not a begin-to-end dual path.
GammaReport classify(const Diagram& f, const Shortcut& shortcut);
GammaReport classify(const Diagram& f, const CombinatorialMap& map, const Shortcut& shortcut, int height);

/// 2h + 2 = c1 + 2 c2 and cr - 2h = c0 + 2 - c2.
bool check_counting_identity(const GammaReport& r);

/// c3 = c4 = 0.
bool check_no_type34(const GammaReport& r);

/// Every arc with gamma-regions on both sides is a gamma-edge.
bool check_shared_edge_property(const GammaReport& r);
bool check_shared_edge_property(const Diagram& f, const GammaReport& r);

/// Each gamma-region is met by the shortcut exactly twice, in two distinct
/// gamma-edges (an endpoint counts as a meeting inside its outer arc); the
/// regions are pairwise distinct and no gamma-edge is a loop.
bool check_gamma_regions(const GammaReport& r);

struct DistanceCheck {
  int one_sided = 0;  // exceptional crossings examined, by kind
  int two_sided = 0;
  int failures = 0;
  std::vector<int> failed;  // crossing labels
  bool ok() const { return failures == 0; }
};

/// Region distance between the two gamma-regions at each exceptional
/// crossing: 1 when two-sided, 2 when one-sided.
DistanceCheck check_exceptional_distances(const Diagram& f, const GammaReport& r);
DistanceCheck check_exceptional_distances(const DualGraph& dual, const GammaReport& r);

struct ChainLemmaCheck {
  // applicable = chains meeting the hypotheses; failed = conclusion violated
  std::array<int, 3> applicable{};  // non-ended chains, ended chains, self-returning chains
  std::array<int, 3> failed{};
  bool ok() const { return failed[0] == 0 && failed[1] == 0 && failed[2] == 0; }
};

/// Chain lemmas, on the chains of the report (parts of P between entries of
/// C0 and C2, self-returning parts excluded): a true chain avoiding u and v
/// with at most one two-sided crossing passes a regular crossing; so does one
/// whose endpoints at u/v are type-2 crossings sided like the chain and that
/// passes no two-sided crossing. A self-returning chain of any one-sided
/// crossing passes at most one type-2 crossing and passes every other
/// exceptional crossing inside it twice.
ChainLemmaCheck check_chain_lemmas(const GammaReport& r);

struct BoundResult {
  bool found = false;
  std::optional<Shortcut> shortcut;
  std::optional<GammaReport> report;
  bool c0_ge_q_minus_2 = false;
  bool q_ge_c2 = false;
  std::size_t scanned = 0;
  std::size_t violating = 0;  // scanned shortcuts with c0 + 2 < c2
  bool truncated = false;
};

/// Scans minimal shortcuts in lexicographic order (at most `cap`) and returns
/// the first whose report satisfies c0 + 2 >= c2.
BoundResult exists_minimal_shortcut_with_bound(const Diagram& f, std::size_t cap = 1u << 16);

}  // namespace knotoid
