#include "knotoid/primality.hpp"

#include <algorithm>
#include <deque>

#include "knotoid/planar.hpp"

namespace knotoid {

const char* to_string(WitnessKind kind) { return kind == WitnessKind::OnePoint ? "ONE_POINT" : "TWO_POINT"; }

namespace {

void require_open(const Diagram& f) {
  if (f.is_closed()) throw std::invalid_argument("primality is defined for open diagrams");
}

// Crossings whose both visits lie in [lo, hi) versus both outside.
void split_by_visits(const Diagram& f, std::size_t lo, std::size_t hi, std::vector<int>& inside, std::vector<int>& outside) {
  for (int c = 1; c <= f.crossing_count(); ++c) {
    const auto& occ = f.occurrences(c);
    const bool in0 = occ[0] >= lo && occ[0] < hi;
    const bool in1 = occ[1] >= lo && occ[1] < hi;
    if (in0 && in1) inside.push_back(c);
    else if (!in0 && !in1) outside.push_back(c);
    else throw std::logic_error("cut does not separate the diagram");
  }
}

Diagram from_visits(const Diagram& f, std::vector<Visit> visits) {
  std::vector<int> chirality(f.chiralities().begin(), f.chiralities().end());
  std::vector<int> dense(chirality.size() + 1, 0);
  for (const auto& v : visits) dense[static_cast<std::size_t>(v.crossing)] = 1;
  std::vector<int> chir;
  for (std::size_t label = 1; label < dense.size(); ++label) {
    if (!dense[label]) continue;
    chir.push_back(chirality[label - 1]);
    dense[label] = static_cast<int>(chir.size());
  }
  for (auto& v : visits) v.crossing = dense[static_cast<std::size_t>(v.crossing)];
  return Diagram::make(f.kind(), std::move(visits), std::move(chir));
}

}  // namespace

std::vector<PrimalityWitness> one_point_circles(const Diagram& f) {
  require_open(f);
  const auto map = trace_faces(f);
  std::vector<PrimalityWitness> out;
  for (std::size_t a = 0; a < f.arc_count(); ++a) {
    if (map.left_face(a) != map.right_face(a)) continue;
    PrimalityWitness w;
    w.kind = WitnessKind::OnePoint;
    w.arcs = {a};
    w.faces = {map.left_face(a), map.left_face(a)};
    // Arc a ends at visit a: visits before it form one side.
    split_by_visits(f, 0, a, w.side_a, w.side_b);
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<PrimalityWitness> two_point_circles(const Diagram& f) {
  require_open(f);
  const auto map = trace_faces(f);
  std::vector<PrimalityWitness> out;
  const std::size_t arcs = f.arc_count();
  auto key = [&](std::size_t a) {
    const int l = map.left_face(a), r = map.right_face(a);
    return std::pair{std::min(l, r), std::max(l, r)};
  };
  for (std::size_t a = 0; a < arcs; ++a) {
    for (std::size_t b = a + 1; b < arcs; ++b) {
      if (key(a) != key(b)) continue;
      PrimalityWitness w;
      w.kind = WitnessKind::TwoPoint;
      w.arcs = {a, b};
      w.faces = key(a);
      // Between the cuts lie visits a .. b-1.
      split_by_visits(f, a, b, w.side_a, w.side_b);
      out.push_back(std::move(w));
    }
  }
  return out;
}

PrimeResult is_prime(const Diagram& f) {
  for (auto& w : one_point_circles(f))
    if (w.disqualifying()) return {false, std::move(w)};
  for (auto& w : two_point_circles(f))
    if (w.disqualifying()) return {false, std::move(w)};
  return {true, std::nullopt};
}

Diagram contract_two_point_circle(const Diagram& f, const PrimalityWitness& w) {
  require_open(f);
  if (w.kind != WitnessKind::TwoPoint || w.arcs.size() != 2 || w.arcs[0] >= w.arcs[1] || w.arcs[1] >= f.arc_count())
    throw WitnessError("expected a two-point witness of this diagram");
  const auto map = trace_faces(f);
  auto key = [&](std::size_t a) {
    const int l = map.left_face(a), r = map.right_face(a);
    return std::pair{std::min(l, r), std::max(l, r)};
  };
  if (key(w.arcs[0]) != key(w.arcs[1])) throw WitnessError("arcs do not separate the same two faces");
  const std::size_t a = w.arcs[0], b = w.arcs[1];
  if (a == b) throw WitnessError("arcs coincide");
  std::vector<Visit> visits;
  for (std::size_t pos = 0; pos < f.visit_count(); ++pos)
    if (pos < a || pos >= b) visits.push_back(f.visit(pos));
  if (visits.size() == f.visit_count()) throw WitnessError("the contracted disk holds no crossing");
  return from_visits(f, std::move(visits));
}

std::pair<Diagram, Diagram> split_one_point_circle(const Diagram& f, const PrimalityWitness& w) {
  require_open(f);
  if (w.kind != WitnessKind::OnePoint || w.arcs.size() != 1 || w.arcs[0] >= f.arc_count())
    throw WitnessError("expected a one-point witness of this diagram");
  const std::size_t a = w.arcs[0];
  const auto map = trace_faces(f);
  if (map.left_face(a) != map.right_face(a)) throw WitnessError("arc " + std::to_string(a) + " is not a bridge");
  if (a == 0 || a == f.visit_count()) throw WitnessError("one side has no crossing");
  std::vector<Visit> head(f.visits().begin(), f.visits().begin() + static_cast<std::ptrdiff_t>(a));
  std::vector<Visit> tail(f.visits().begin() + static_cast<std::ptrdiff_t>(a), f.visits().end());
  return {from_visits(f, std::move(head)), from_visits(f, std::move(tail))};
}

Decomposition prime_decompose(const Diagram& f) {
  require_open(f);
  Decomposition out;
  std::deque<Diagram> work{f};
  while (!work.empty()) {
    Diagram d = std::move(work.front());
    work.pop_front();
    auto res = is_prime(d);
    if (res.prime) {
      out.pieces.push_back(std::move(d));
      continue;
    }
    DecompositionStep step{res.witness->kind, serialize(d), *res.witness, {}};
    if (res.witness->kind == WitnessKind::OnePoint) {
      auto [f1, f2] = split_one_point_circle(d, *res.witness);
      step.outputs = {serialize(f1), serialize(f2)};
      work.push_front(std::move(f2));
      work.push_front(std::move(f1));
    } else {
      auto g = contract_two_point_circle(d, *res.witness);
      step.outputs = {serialize(g)};
      work.push_front(std::move(g));
    }
    out.trace.push_back(std::move(step));
  }
  return out;
}

}  // namespace knotoid
