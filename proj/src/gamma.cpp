#include "knotoid/gamma.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace knotoid {

const char* to_string(BorderSide side) {
  switch (side) {
    case BorderSide::None: return "NONE";
    case BorderSide::Left: return "LEFT";
    case BorderSide::Right: return "RIGHT";
  }
  return "NONE";
}

const char* to_string(Exceptional kind) {
  switch (kind) {
    case Exceptional::NotTypeZero: return "NOT_TYPE_ZERO";
    case Exceptional::Regular: return "REGULAR";
    case Exceptional::OneSidedLeft: return "ONE_SIDED_LEFT";
    case Exceptional::OneSidedRight: return "ONE_SIDED_RIGHT";
    case Exceptional::TwoSided: return "TWO_SIDED";
    case Exceptional::Mixed: return "MIXED";
  }
  return "UNKNOWN";
}

namespace {

bool one_sided(Exceptional e) { return e == Exceptional::OneSidedLeft || e == Exceptional::OneSidedRight; }

BorderSide side_of(Exceptional e) {
  if (e == Exceptional::OneSidedLeft) return BorderSide::Left;
  if (e == Exceptional::OneSidedRight) return BorderSide::Right;
  return BorderSide::None;
}

void check_path(const CombinatorialMap& map, const Shortcut& s) {
  if (s.faces.size() != s.arcs.size() + 1) throw std::invalid_argument("shortcut: faces/arcs size mismatch");
  if (s.faces.front() != map.begin_face() || s.faces.back() != map.end_face())
    throw std::invalid_argument("shortcut must run from the begin-face to the end-face");
  for (std::size_t i = 0; i < s.arcs.size(); ++i) {
    const auto a = s.arcs[i];
    if (a >= map.arc_count()) throw std::invalid_argument("shortcut: arc out of range");
    const int l = map.left_face(a), r = map.right_face(a);
    const int f0 = s.faces[i], f1 = s.faces[i + 1];
    if (!((l == f0 && r == f1) || (l == f1 && r == f0)))
      throw std::invalid_argument("shortcut: arc " + std::to_string(a) + " does not separate consecutive faces");
  }
}

// Which way a type-2 crossing at an outer arc sees the shortcut, looking along
// its other gamma-edge.
BorderSide outer_sidedness(const GammaReport& r, const CombinatorialMap& map, int crossing, Dart outer_dart) {
  if (crossing == 0 || r.crossing_type[static_cast<std::size_t>(crossing - 1)] != 2) return BorderSide::None;
  const std::size_t last = r.is_gamma_edge.size() - 1;
  for (Dart t : map.vertex_darts(crossing - 1)) {
    if (t == outer_dart || !r.is_gamma_edge[arc_of(t)]) continue;
    const auto a = arc_of(t);
    if (a == 0 || a == last) return BorderSide::None;
    const auto it = std::find(r.shortcut.arcs.begin(), r.shortcut.arcs.end(), a);
    if (it == r.shortcut.arcs.end()) return BorderSide::None;
    const auto i = static_cast<std::size_t>(it - r.shortcut.arcs.begin());
    const int from = r.shortcut.faces[i], to = r.shortcut.faces[i + 1];
    const int left = map.face_of(t), right = map.face_of(reverse(t));
    if (left == right) return BorderSide::None;
    // Crossing from right(t) to left(t) means t starts on the left of gamma.
    if (from == right && to == left) return BorderSide::Left;
    if (from == left && to == right) return BorderSide::Right;
    return BorderSide::None;
  }
  return BorderSide::None;
}

struct Cut {
  std::size_t transition;
  int order;
  bool is_u;
};

void assign_sides(std::vector<BoundaryStep>& walk, std::vector<Cut> cuts) {
  const bool has_u = std::any_of(cuts.begin(), cuts.end(), [](const Cut& c) { return c.is_u; });
  const bool has_v = std::any_of(cuts.begin(), cuts.end(), [](const Cut& c) { return !c.is_u; });
  if (!has_u || !has_v) return;
  // Token stream: dart j, then the cuts of transition j in sweep order.
  struct Token {
    int kind;  // 0 dart, 1 u-cut, 2 v-cut
    std::size_t index;
  };
  std::sort(cuts.begin(), cuts.end(),
            [](const Cut& a, const Cut& b) { return std::tie(a.transition, a.order) < std::tie(b.transition, b.order); });
  std::vector<Token> tokens;
  std::size_t ci = 0;
  for (std::size_t j = 0; j < walk.size(); ++j) {
    tokens.push_back({0, j});
    for (; ci < cuts.size() && cuts[ci].transition == j; ++ci) tokens.push_back({cuts[ci].is_u ? 1 : 2, j});
  }
  std::size_t start = 0;
  while (tokens[start].kind != 1) ++start;
  BorderSide current = BorderSide::Right;
  for (std::size_t k = 1; k < tokens.size(); ++k) {
    const auto& t = tokens[(start + k) % tokens.size()];
    if (t.kind == 2) current = BorderSide::Left;
    if (t.kind == 1) current = BorderSide::Right;
    if (t.kind == 0) walk[t.index].side = current;
  }
}

}  // namespace

GammaReport classify(const Diagram& f, const Shortcut& shortcut) {
  if (f.is_closed()) throw std::invalid_argument("classify: open diagram required");
  const auto map = trace_faces(f);
  const DualGraph dual(map);
  return classify(f, map, shortcut, height(map, dual).height);
}

GammaReport classify(const Diagram& f, const CombinatorialMap& map, const Shortcut& shortcut, int h) {
  check_path(map, shortcut);
  if (static_cast<int>(shortcut.length()) > h)
    throw NotMinimalError("NOT_MINIMAL: shortcut of length " + std::to_string(shortcut.length()) +
                          " exceeds height " + std::to_string(h));
  if (static_cast<int>(shortcut.length()) < h) throw std::invalid_argument("shortcut shorter than the height");

  const int n = f.crossing_count();
  const std::size_t arcs = map.arc_count();
  const std::size_t last = arcs - 1;
  GammaReport r;
  r.crossings = n;
  r.height = h;
  r.shortcut = shortcut;

  r.is_gamma_edge.assign(arcs, 0);
  r.is_gamma_edge[0] = r.is_gamma_edge[last] = 1;
  for (auto a : shortcut.arcs) r.is_gamma_edge[a] = 1;
  for (std::size_t a = 0; a < arcs; ++a)
    if (r.is_gamma_edge[a]) r.gamma_edges.push_back(a);

  r.regions = shortcut.faces;
  r.region_number.assign(map.face_count(), -1);
  for (std::size_t i = 0; i < shortcut.faces.size(); ++i) {
    auto& num = r.region_number[static_cast<std::size_t>(shortcut.faces[i])];
    if (num < 0) num = static_cast<int>(i);
  }
  auto in_domain = [&](int face) { return r.region_number[static_cast<std::size_t>(face)] >= 0; };

  r.arc_faces.resize(arcs);
  r.arc_is_graph_loop.assign(arcs, 0);
  r.border.assign(arcs, BorderSide::None);
  for (std::size_t a = 0; a < arcs; ++a) {
    r.arc_faces[a] = {map.left_face(a), map.right_face(a)};
    r.arc_is_graph_loop[a] = map.tail(forward_dart(a)) == map.head(forward_dart(a));
  }

  r.crossing_type.assign(static_cast<std::size_t>(n), 0);
  r.corner_faces.assign(static_cast<std::size_t>(n), {});
  for (int c = 1; c <= n; ++c) {
    const auto darts = map.vertex_darts(c - 1);
    int type = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      if (r.is_gamma_edge[arc_of(darts[i])]) ++type;
      r.corner_faces[static_cast<std::size_t>(c - 1)][i] = map.face_of(darts[i]);
    }
    r.crossing_type[static_cast<std::size_t>(c - 1)] = type;
    ++r.counts[static_cast<std::size_t>(type)];
  }

  if (n > 0) {
    const int hu = map.head(forward_dart(0));
    const int tv = map.tail(forward_dart(last));
    r.u = hu < n ? hu + 1 : 0;
    r.v = tv < n ? tv + 1 : 0;
  }

  // Boundary walks of the gamma-domain: darts with a gamma-region on the left
  // along non-gamma arcs, turning clockwise past gamma-edges at each vertex.
  const Dart u_dart = backward_dart(0);
  const Dart v_dart = forward_dart(last);
  std::vector<char> seen(map.dart_count(), 0);
  for (Dart start = 0; start < map.dart_count(); ++start) {
    if (seen[start] || r.is_gamma_edge[arc_of(start)] || !in_domain(map.face_of(start))) continue;
    std::vector<BoundaryStep> walk;
    std::vector<Cut> cuts;
    Dart d = start;
    do {
      seen[d] = 1;
      walk.push_back({d, BorderSide::None});
      Dart t = map.face_next(d);
      int order = 0;
      while (r.is_gamma_edge[arc_of(t)]) {
        if (t == u_dart) cuts.push_back({walk.size() - 1, order, true});
        if (t == v_dart) cuts.push_back({walk.size() - 1, order, false});
        ++order;
        t = map.cw_next(t);
      }
      d = t;
    } while (d != start);
    assign_sides(walk, std::move(cuts));
    r.boundary.push_back(std::move(walk));
  }

  for (const auto& walk : r.boundary)
    for (const auto& step : walk) {
      const auto a = arc_of(step.dart);
      const auto [l, rt] = r.arc_faces[a];
      if (in_domain(l) != in_domain(rt)) r.border[a] = step.side;
    }
  auto is_border = [&](std::size_t a) {
    const auto [l, rt] = r.arc_faces[a];
    return in_domain(l) != in_domain(rt);
  };

  r.exceptional.assign(static_cast<std::size_t>(n), Exceptional::NotTypeZero);
  for (int c = 1; c <= n; ++c) {
    if (r.crossing_type[static_cast<std::size_t>(c - 1)] != 0) continue;
    int left = 0, right = 0;
    bool all_border = true;
    for (Dart t : map.vertex_darts(c - 1)) {
      const auto a = arc_of(t);
      if (!is_border(a)) all_border = false;
      if (r.border[a] == BorderSide::Left) ++left;
      if (r.border[a] == BorderSide::Right) ++right;
    }
    auto& e = r.exceptional[static_cast<std::size_t>(c - 1)];
    if (!all_border) e = Exceptional::Regular;
    else if (left == 4) e = Exceptional::OneSidedLeft;
    else if (right == 4) e = Exceptional::OneSidedRight;
    else if (left == 2 && right == 2) e = Exceptional::TwoSided;
    else e = Exceptional::Mixed;
  }

  r.u_sidedness = outer_sidedness(r, map, r.u, u_dart);
  r.v_sidedness = outer_sidedness(r, map, r.v, v_dart);

  auto crossing_at = [&](const std::vector<BoundaryStep>& walk, std::size_t j) {
    return map.head(walk[j].dart) + 1;
  };
  auto type_of = [&](int c) { return r.crossing_type[static_cast<std::size_t>(c - 1)]; };
  auto exc_of = [&](int c) { return r.exceptional[static_cast<std::size_t>(c - 1)]; };

  // Self-returning chains of one-sided crossings.
  std::map<int, std::vector<std::pair<std::size_t, std::size_t>>> entries;
  for (std::size_t w = 0; w < r.boundary.size(); ++w)
    for (std::size_t j = 0; j < r.boundary[w].size(); ++j) entries[crossing_at(r.boundary[w], j)].push_back({w, j});
  for (int c = 1; c <= n; ++c) {
    const auto side = side_of(exc_of(c));
    if (side == BorderSide::None) continue;
    const auto& e = entries[c];
    if (e.size() != 2 || e[0].first != e[1].first) continue;
    const auto& walk = r.boundary[e[0].first];
    const std::size_t len = walk.size();
    for (auto [from, to] : {std::pair{e[0].second, e[1].second}, std::pair{e[1].second, e[0].second}}) {
      const std::size_t steps = (to + len - from) % len;
      bool pure = steps > 0;
      for (std::size_t s = 1; s <= steps && pure; ++s) pure = walk[(from + s) % len].side == side;
      if (!pure) continue;
      SelfChain sc;
      sc.crossing = c;
      sc.side = side;
      sc.walk = e[0].first;
      sc.first_entry = from;
      sc.last_entry = to;
      for (std::size_t s = 1; s <= steps; ++s) {
        const std::size_t j = (from + s) % len;
        sc.arcs.push_back(arc_of(walk[j].dart));
        if (s < steps) sc.passed.push_back(crossing_at(walk, j));
      }
      r.self_chains.push_back(std::move(sc));
      break;
    }
  }

  r.framed_by.assign(static_cast<std::size_t>(n), 0);
  for (const auto& sc : r.self_chains)
    for (int y : sc.passed)
      if (y != sc.crossing && r.framed_by[static_cast<std::size_t>(y - 1)] == 0)
        r.framed_by[static_cast<std::size_t>(y - 1)] = sc.crossing;
  for (int c = 1; c <= n; ++c) {
    if (r.framed_by[static_cast<std::size_t>(c - 1)] != 0) continue;
    if (one_sided(exc_of(c))) r.c0_set.push_back(c);
    if (type_of(c) == 2) r.c2_set.push_back(c);
  }
  std::set<int> cutters(r.c0_set.begin(), r.c0_set.end());
  cutters.insert(r.c2_set.begin(), r.c2_set.end());
  // Chains: P cut at every entry of C0 and C2. Crossings framed by a
  // one-sided crossing stay inside its self-returning part.
  for (std::size_t w = 0; w < r.boundary.size(); ++w) {
    const auto& walk = r.boundary[w];
    const std::size_t len = walk.size();
    std::vector<std::size_t> stops;
    for (std::size_t j = 0; j < len; ++j)
      if (cutters.count(crossing_at(walk, j))) stops.push_back(j);
    if (stops.empty()) {
      BorderChain ch;
      ch.walk = w;
      ch.first_entry = len - 1;
      ch.last_entry = len - 1;
      ch.side = walk[0].side;
      for (const auto& s : walk) {
        ch.arcs.push_back(arc_of(s.dart));
        if (s.side != ch.side) ch.side = BorderSide::None;
      }
      r.chains.push_back(std::move(ch));
      continue;
    }
    for (std::size_t k = 0; k < stops.size(); ++k) {
      BorderChain ch;
      ch.walk = w;
      ch.first_entry = stops[k];
      ch.last_entry = stops[(k + 1) % stops.size()];
      ch.endpoints = {crossing_at(walk, ch.first_entry), crossing_at(walk, ch.last_entry)};
      std::size_t steps = (ch.last_entry + len - ch.first_entry) % len;
      if (steps == 0) steps = len;
      ch.side = walk[(ch.first_entry + 1) % len].side;
      std::set<int> two_sided, type2;
      for (std::size_t s = 1; s <= steps; ++s) {
        const std::size_t j = (ch.first_entry + s) % len;
        ch.arcs.push_back(arc_of(walk[j].dart));
        if (walk[j].side != ch.side) ch.side = BorderSide::None;
        if (s == steps) break;
        const int c = crossing_at(walk, j);
        if (exc_of(c) == Exceptional::Regular) ch.passes_regular = true;
        if (exc_of(c) == Exceptional::TwoSided) two_sided.insert(c);
        if (type_of(c) == 2) type2.insert(c);
      }
      ch.two_sided_count = static_cast<int>(two_sided.size());
      ch.type2_count = static_cast<int>(type2.size());
      auto true_end = [&](int c) { return type_of(c) == 2 || (one_sided(exc_of(c)) && side_of(exc_of(c)) == ch.side); };
      ch.is_true_chain = ch.side != BorderSide::None && true_end(ch.endpoints[0]) && true_end(ch.endpoints[1]);
      r.chains.push_back(std::move(ch));
    }
  }

  r.q = static_cast<int>(r.chains.size());
  return r;
}

bool check_counting_identity(const GammaReport& r) {
  const int h = r.height;
  return 2 * h + 2 == r.c(1) + 2 * r.c(2) && r.crossings - 2 * h == r.c(0) + 2 - r.c(2);
}

bool check_no_type34(const GammaReport& r) { return r.c(3) == 0 && r.c(4) == 0; }

bool check_shared_edge_property(const GammaReport& r) {
  for (std::size_t a = 0; a < r.arc_faces.size(); ++a) {
    const auto [l, rt] = r.arc_faces[a];
    const bool both = r.region_number[static_cast<std::size_t>(l)] >= 0 && r.region_number[static_cast<std::size_t>(rt)] >= 0;
    if (both && !r.is_gamma_edge[a]) return false;
  }
  return true;
}

bool check_shared_edge_property(const Diagram& f, const GammaReport& r) {
  if (f.crossing_count() != r.crossings) throw std::invalid_argument("report does not belong to diagram");
  return check_shared_edge_property(r);
}

bool check_gamma_regions(const GammaReport& r) {
  if (r.crossings == 0) return true;
  const auto& faces = r.shortcut.faces;
  const auto& arcs = r.shortcut.arcs;
  if (std::set<int>(faces.begin(), faces.end()).size() != faces.size()) return false;
  for (auto a : r.gamma_edges)
    if (r.arc_is_graph_loop[a]) return false;
  const std::size_t last = r.is_gamma_edge.size() - 1;
  const std::size_t h = arcs.size();
  for (std::size_t i = 0; i <= h; ++i) {
    std::vector<std::size_t> meet;
    if (i == 0) meet.push_back(0);
    if (i > 0) meet.push_back(arcs[i - 1]);
    if (i < h) meet.push_back(arcs[i]);
    if (i == h) meet.push_back(last);
    if (meet.size() != 2 || meet[0] == meet[1]) return false;
  }
  return true;
}

DistanceCheck check_exceptional_distances(const DualGraph& dual, const GammaReport& r) {
  DistanceCheck out;
  for (int c = 1; c <= r.crossings; ++c) {
    const auto e = r.exceptional[static_cast<std::size_t>(c - 1)];
    if (e == Exceptional::NotTypeZero || e == Exceptional::Regular) continue;
    int expected = 0;
    if (e == Exceptional::TwoSided) {
      ++out.two_sided;
      expected = 1;
    } else if (one_sided(e)) {
      ++out.one_sided;
      expected = 2;
    }
    std::vector<int> gamma_corners;
    for (int face : r.corner_faces[static_cast<std::size_t>(c - 1)])
      if (r.region_number[static_cast<std::size_t>(face)] >= 0) gamma_corners.push_back(face);
    const bool ok = expected > 0 && gamma_corners.size() == 2 &&
                    region_distance(dual, gamma_corners[0], gamma_corners[1]) == expected;
    if (!ok) {
      ++out.failures;
      out.failed.push_back(c);
    }
  }
  return out;
}

DistanceCheck check_exceptional_distances(const Diagram& f, const GammaReport& r) {
  const auto map = trace_faces(f);
  return check_exceptional_distances(DualGraph(map), r);
}

ChainLemmaCheck check_chain_lemmas(const GammaReport& r) {
  ChainLemmaCheck out;
  auto sided = [&](int c) {
    BorderSide s = BorderSide::None;
    if (c == r.u) s = r.u_sidedness;
    if (c == r.v) s = (c == r.u && s != r.v_sidedness) ? BorderSide::None : r.v_sidedness;
    return s;
  };
  auto outer = [&](int c) { return c == r.u || c == r.v; };
  for (const auto& ch : r.chains) {
    if (!ch.is_true_chain) continue;
    // A part starting and ending at one C0 crossing is its self-returning chain.
    if (ch.endpoints[0] == ch.endpoints[1] && r.exceptional[static_cast<std::size_t>(ch.endpoints[0] - 1)] != Exceptional::NotTypeZero) continue;
    const bool touches_outer = outer(ch.endpoints[0]) || outer(ch.endpoints[1]);
    if (!touches_outer && ch.two_sided_count <= 1) {
      ++out.applicable[0];
      if (!ch.passes_regular) ++out.failed[0];
    }
    if (touches_outer && ch.two_sided_count == 0) {
      bool ends_ok = true;
      for (int c : ch.endpoints)
        if (outer(c) && (r.crossing_type[static_cast<std::size_t>(c - 1)] != 2 || sided(c) != ch.side)) ends_ok = false;
      if (ends_ok) {
        ++out.applicable[1];
        if (!ch.passes_regular) ++out.failed[1];
      }
    }
  }
  for (const auto& sc : r.self_chains) {
    ++out.applicable[2];
    std::map<int, int> times;
    for (int y : sc.passed) ++times[y];
    int type2 = 0;
    bool ok = true;
    for (auto [y, k] : times) {
      if (r.crossing_type[static_cast<std::size_t>(y - 1)] == 2) ++type2;
      const auto e = r.exceptional[static_cast<std::size_t>(y - 1)];
      const bool exceptional = e != Exceptional::NotTypeZero && e != Exceptional::Regular;
      if (exceptional && y != sc.crossing && k != 2) ok = false;
    }
    if (type2 > 1) ok = false;
    if (!ok) ++out.failed[2];
  }
  return out;
}

BoundResult exists_minimal_shortcut_with_bound(const Diagram& f, std::size_t cap) {
  BoundResult out;
  if (f.is_closed()) throw std::invalid_argument("exists_minimal_shortcut_with_bound: open diagram required");
  const auto map = trace_faces(f);
  const DualGraph dual(map);
  const int h = height(map, dual).height;
  const auto list = enumerate_minimal_shortcuts(map, dual, cap);
  out.truncated = list.truncated;
  for (const auto& s : list.shortcuts) {
    ++out.scanned;
    auto report = classify(f, map, s, h);
    if (report.c(0) + 2 < report.c(2)) {
      ++out.violating;
      continue;
    }
    if (!out.found) {
      out.found = true;
      out.c0_ge_q_minus_2 = report.c(0) >= report.q - 2;
      out.q_ge_c2 = report.q >= report.c(2);
      out.shortcut = s;
      out.report = std::move(report);
    }
  }
  return out;
}

}  // namespace knotoid
