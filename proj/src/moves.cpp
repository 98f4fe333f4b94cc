#include "knotoid/moves.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "knotoid/planar.hpp"

namespace knotoid {

const char* to_string(MoveErrorKind kind) {
  switch (kind) {
    case MoveErrorKind::PatternNotFound: return "PATTERN_NOT_FOUND";
    case MoveErrorKind::NotAdjacent: return "NOT_ADJACENT";
  }
  return "UNKNOWN";
}

MoveError::MoveError(MoveErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

namespace {

// Labels in `visits` index into `chirality` (label - 1); unused labels are
// dropped before validation.
Diagram rebuild(DiagramKind kind, std::vector<Visit> visits, const std::vector<int>& chirality) {
  std::vector<int> dense(chirality.size() + 1, 0);
  for (const auto& v : visits) dense[static_cast<std::size_t>(v.crossing)] = 1;
  std::vector<int> chir;
  for (std::size_t label = 1; label < dense.size(); ++label) {
    if (!dense[label]) continue;
    chir.push_back(chirality[label - 1]);
    dense[label] = static_cast<int>(chir.size());
  }
  for (auto& v : visits) v.crossing = dense[static_cast<std::size_t>(v.crossing)];
  return Diagram::make(kind, std::move(visits), std::move(chir));
}

std::size_t insertion_point(const Diagram& d, std::size_t arc) { return d.is_closed() ? arc + 1 : arc; }

std::size_t next_position(const Diagram& d, std::size_t pos) {
  if (d.is_closed()) return (pos + 1) % d.visit_count();
  return pos + 1;
}

std::vector<int> chirality_copy(const Diagram& d) { return {d.chiralities().begin(), d.chiralities().end()}; }

std::vector<Visit> without_positions(const Diagram& d, std::vector<std::size_t> drop) {
  std::sort(drop.begin(), drop.end());
  std::vector<Visit> out;
  for (std::size_t pos = 0; pos < d.visit_count(); ++pos)
    if (!std::binary_search(drop.begin(), drop.end(), pos)) out.push_back(d.visit(pos));
  return out;
}

}  // namespace

MoveResult r1_insert(const Diagram& d, std::size_t arc, Side side, int writhe) {
  if (arc >= d.arc_count()) throw MoveError(MoveErrorKind::PatternNotFound, "arc " + std::to_string(arc) + " does not exist");
  // With chirality + the monogon sits to the right of the strand.
  const int chir = side == Side::Right ? 1 : -1;
  const int label = d.crossing_count() + 1;
  Pass first = Pass::Flat, second = Pass::Flat;
  if (d.has_passes()) {
    const bool first_over = (writhe > 0) == (chir > 0);
    first = first_over ? Pass::Over : Pass::Under;
    second = first_over ? Pass::Under : Pass::Over;
  }
  const std::size_t site = insertion_point(d, arc);
  std::vector<Visit> visits(d.visits().begin(), d.visits().end());
  visits.insert(visits.begin() + static_cast<std::ptrdiff_t>(site), {Visit{label, first}, Visit{label, second}});
  auto chirality = chirality_copy(d);
  chirality.push_back(chir);
  return {rebuild(d.kind(), std::move(visits), chirality), site};
}

Diagram r1_delete(const Diagram& d, std::size_t site) {
  const std::size_t m = d.visit_count();
  if (site >= m || (!d.is_closed() && site + 1 >= m))
    throw MoveError(MoveErrorKind::PatternNotFound, "no adjacent visit pair at " + std::to_string(site));
  const std::size_t next = next_position(d, site);
  if (d.visit(site).crossing != d.visit(next).crossing)
    throw MoveError(MoveErrorKind::PatternNotFound, "visits at " + std::to_string(site) + " are not a kink");
  if (d.is_closed() && m == 2) throw MoveError(MoveErrorKind::PatternNotFound, "would leave an empty closed diagram");
  return rebuild(d.kind(), without_positions(d, {site, next}), chirality_copy(d));
}

MoveResult r2_insert(const Diagram& d, std::size_t arc_a, std::size_t arc_b, R2Variant variant) {
  if (arc_a >= d.arc_count() || arc_b >= d.arc_count())
    throw MoveError(MoveErrorKind::NotAdjacent, "arc out of range");
  if (arc_a == arc_b) throw MoveError(MoveErrorKind::NotAdjacent, "the two arcs must be distinct");
  const auto map = trace_faces(d);
  const std::array<int, 2> fa{map.left_face(arc_a), map.right_face(arc_a)};
  const std::array<int, 2> fb{map.left_face(arc_b), map.right_face(arc_b)};
  std::vector<int> common;
  for (int f : fa)
    if (f == fb[0] || f == fb[1]) common.push_back(f);
  if (common.empty())
    throw MoveError(MoveErrorKind::NotAdjacent,
                    "arcs " + std::to_string(arc_a) + " and " + std::to_string(arc_b) + " share no face");
  int face = *std::min_element(common.begin(), common.end());
  if (variant.face >= 0) {
    if (std::find(common.begin(), common.end(), variant.face) == common.end())
      throw MoveError(MoveErrorKind::NotAdjacent, "face " + std::to_string(variant.face) + " is not shared");
    face = variant.face;
  }

  // Orient both arcs so the face is on their left. Travelling along a's dart
  // the finger meets X then Y; along b's dart it meets Y then X. In dart
  // orientation the frame (a, b) is counterclockwise at X, clockwise at Y.
  const bool a_fwd = map.face_of(forward_dart(arc_a)) == face;
  const bool b_fwd = map.face_of(forward_dart(arc_b)) == face;
  const int s = (a_fwd ? 1 : -1) * (b_fwd ? 1 : -1);
  const bool a_first = arc_a < arc_b;
  const int x = d.crossing_count() + 1;
  const int y = x + 1;
  auto chirality = chirality_copy(d);
  chirality.push_back(a_first ? s : -s);
  chirality.push_back(a_first ? -s : s);

  Pass pa = Pass::Flat, pb = Pass::Flat;
  if (d.has_passes()) {
    pa = variant.a_over ? Pass::Over : Pass::Under;
    pb = variant.a_over ? Pass::Under : Pass::Over;
  }
  const std::array<Visit, 2> on_a = a_fwd ? std::array<Visit, 2>{Visit{x, pa}, Visit{y, pa}}
                                          : std::array<Visit, 2>{Visit{y, pa}, Visit{x, pa}};
  const std::array<Visit, 2> on_b = b_fwd ? std::array<Visit, 2>{Visit{y, pb}, Visit{x, pb}}
                                          : std::array<Visit, 2>{Visit{x, pb}, Visit{y, pb}};

  std::vector<Visit> visits(d.visits().begin(), d.visits().end());
  const std::size_t pos_a = insertion_point(d, arc_a);
  const std::size_t pos_b = insertion_point(d, arc_b);
  auto put = [&](std::size_t pos, const std::array<Visit, 2>& pair) {
    visits.insert(visits.begin() + static_cast<std::ptrdiff_t>(pos), pair.begin(), pair.end());
  };
  if (pos_a > pos_b) {
    put(pos_a, on_a);
    put(pos_b, on_b);
  } else {
    put(pos_b, on_b);
    put(pos_a, on_a);
  }
  return {rebuild(d.kind(), std::move(visits), chirality), std::min(pos_a, pos_b)};
}

Diagram r2_delete(const Diagram& d, std::size_t site) {
  const std::size_t m = d.visit_count();
  auto fail = [&](const std::string& why) {
    return MoveError(MoveErrorKind::PatternNotFound, "no bigon at " + std::to_string(site) + ": " + why);
  };
  if (site >= m || (!d.is_closed() && site + 1 >= m)) throw fail("position out of range");
  const std::size_t i1 = site;
  const std::size_t i2 = next_position(d, site);
  const int x = d.visit(i1).crossing;
  const int y = d.visit(i2).crossing;
  if (x == y) throw fail("kink, not a bigon");
  if (d.visit(i1).pass != d.visit(i2).pass) throw fail("strand is not over or under at both crossings");
  const auto& ox = d.occurrences(x);
  const auto& oy = d.occurrences(y);
  const std::size_t jx = ox[0] == i1 ? ox[1] : ox[0];
  const std::size_t jy = oy[0] == i2 ? oy[1] : oy[0];
  std::size_t q1;
  if (next_position(d, jx) == jy && (d.is_closed() || jx + 1 < m)) {
    q1 = jx;
  } else if (next_position(d, jy) == jx && (d.is_closed() || jy + 1 < m)) {
    q1 = jy;
  } else {
    throw fail("other visits are not adjacent");
  }

  const auto map = trace_faces(d);
  const std::size_t arc1 = d.out_arc(i1);
  const std::size_t arc2 = d.out_arc(q1);
  bool bigon = false;
  for (Dart dart : {forward_dart(arc1), backward_dart(arc1)}) {
    const auto orbit = map.face(map.face_of(dart));
    if (orbit.size() != 2) continue;
    for (Dart e : orbit)
      if (arc_of(e) == arc2) bigon = true;
  }
  if (!bigon) throw fail("the two strands do not bound a bigon face");
  if (d.is_closed() && m == 4) throw fail("would leave an empty closed diagram");
  return rebuild(d.kind(), without_positions(d, {i1, i2, jx, jy}), chirality_copy(d));
}

Diagram random_rewrite(const Diagram& start, std::uint64_t seed, int steps) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  Diagram d = start;
  int done = 0;
  while (done < steps) {
    const auto op = pick(4);
    try {
      if (op == 0) {
        const Side side = pick(2) ? Side::Left : Side::Right;
        d = r1_insert(d, pick(d.arc_count()), side, pick(2) ? 1 : -1).diagram;
      } else if (op == 1) {
        const auto map = trace_faces(d);
        const auto darts = map.face(static_cast<int>(pick(map.face_count())));
        std::vector<std::size_t> arcs;
        for (Dart t : darts) arcs.push_back(arc_of(t));
        std::sort(arcs.begin(), arcs.end());
        arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
        if (arcs.size() < 2) continue;
        const auto i = pick(arcs.size());
        auto j = pick(arcs.size() - 1);
        if (j >= i) ++j;
        R2Variant variant;
        variant.a_over = pick(2) == 0;
        variant.face = map.face_of(darts[0]);
        d = r2_insert(d, arcs[i], arcs[j], variant).diagram;
      } else {
        std::vector<Diagram> options;
        for (std::size_t site = 0; site < d.visit_count(); ++site) {
          try {
            options.push_back(op == 2 ? r1_delete(d, site) : r2_delete(d, site));
          } catch (const MoveError&) {
          }
        }
        if (options.empty()) continue;
        d = options[pick(options.size())];
      }
      ++done;
    } catch (const MoveError&) {
    }
  }
  return d;
}

}  // namespace knotoid
