#include "knotoid/bridge.hpp"

#include <stdexcept>
#include <vector>

namespace knotoid {

const char* to_string(Verdict v) { return v == Verdict::NotMinimal ? "NOT_MINIMAL" : "INCONCLUSIVE"; }

namespace {

void require_knot(const Diagram& d) {
  if (d.kind() != DiagramKind::Knot) throw std::invalid_argument("a knot diagram is required");
  if (d.crossing_count() < 1) throw std::invalid_argument("the knot diagram has no crossing");
}

}  // namespace

BridgeLocation longest_bridge(const Diagram& knot) {
  require_knot(knot);
  const std::size_t m = knot.visit_count();
  BridgeLocation best;
  for (std::size_t s = 0; s < m; ++s) {
    const Pass p = knot.visit(s).pass;
    if (knot.visit((s + m - 1) % m).pass == p) continue;  // not the start of a run
    std::size_t len = 1;
    while (len < m && knot.visit((s + len) % m).pass == p) ++len;
    if (len > best.length) best = {p, s, len};
  }
  return best;
}

BridgeCut cut_bridge(const Diagram& knot, const BridgeLocation& loc) {
  require_knot(knot);
  const std::size_t m = knot.visit_count();
  const std::size_t k = loc.length;
  if (k == 0 || k >= m || loc.start >= m) throw std::invalid_argument("bad bridge location");
  for (std::size_t i = 0; i < k; ++i)
    if (knot.visit((loc.start + i) % m).pass != loc.kind) throw std::invalid_argument("not a bridge of this diagram");

  // Start the strand just after the bridge; the bridge is then the tail.
  const Diagram r = rotate(knot, (loc.start + k) % m);
  std::vector<char> on_bridge(static_cast<std::size_t>(r.crossing_count()) + 1, 0);
  std::vector<int> bridge_order;  // bridge crossings from its far end back to u
  for (std::size_t i = m - k; i < m; ++i) on_bridge[static_cast<std::size_t>(r.visit(i).crossing)] = 1;
  for (std::size_t i = m; i-- > m - k;) bridge_order.push_back(r.visit(i).crossing);

  std::vector<Visit> visits;
  std::vector<std::size_t> crossed_arc(on_bridge.size(), 0);
  for (std::size_t i = 0; i < m - k; ++i) {
    const Visit v = r.visit(i);
    if (on_bridge[static_cast<std::size_t>(v.crossing)]) {
      crossed_arc[static_cast<std::size_t>(v.crossing)] = visits.size();
      continue;
    }
    visits.push_back({v.crossing, Pass::Flat});
  }
  std::vector<int> chir(r.chiralities().begin(), r.chiralities().end());
  std::vector<int> dense(on_bridge.size(), 0);
  std::vector<int> kept_chir;
  for (std::size_t c = 1; c < on_bridge.size(); ++c) {
    if (on_bridge[c]) continue;
    kept_chir.push_back(chir[c - 1]);
    dense[c] = static_cast<int>(kept_chir.size());
  }
  for (auto& v : visits) v.crossing = dense[static_cast<std::size_t>(v.crossing)];
  BridgeCut out{Diagram::make(DiagramKind::Flat, std::move(visits), std::move(kept_chir)), {}};

  // The reversed bridge runs from u (the beginning of F) to v (its end) and
  // crosses F where the bridge crossings were.
  std::vector<std::size_t> arcs;
  for (int c : bridge_order) arcs.push_back(crossed_arc[static_cast<std::size_t>(c)]);
  out.shortcut = shortcut_from_arcs(trace_faces(out.flat), arcs);
  return out;
}

MinimalityResult minimality_check(const Diagram& knot) {
  MinimalityResult out;
  out.bridge = longest_bridge(knot);
  out.k = static_cast<int>(out.bridge.length);
  out.cr = knot.crossing_count();
  out.verdict = out.cr < 3 * out.k ? Verdict::NotMinimal : Verdict::Inconclusive;
  return out;
}

}  // namespace knotoid
