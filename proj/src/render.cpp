#include "knotoid/render.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <vector>

#include "knotoid/planar.hpp"

namespace knotoid {

namespace {

struct Point {
  double x = 0, y = 0;
};

Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
double norm(Point a) { return std::hypot(a.x, a.y); }
double dist(Point a, Point b) { return norm(a - b); }
Point rotated(Point a, double t) { return {a.x * std::cos(t) - a.y * std::sin(t), a.x * std::sin(t) + a.y * std::cos(t)}; }

constexpr double ring_radius = 0.8;

// Layout coordinates live in [-1, 1]^2 with y up.
double sx(Point p) { return 500.0 + 450.0 * p.x; }
double sy(Point p) { return 500.0 - 450.0 * p.y; }
std::string fmt_point(Point p) { return fmt::format("{:.2f},{:.2f}", sx(p), sy(p)); }

int outer_face(const Diagram& d, const CombinatorialMap& map) {
  if (d.is_open()) return map.begin_face();
  int best = 0;
  for (int f = 1; f < static_cast<int>(map.face_count()); ++f)
    if (map.face(f).size() > map.face(best).size()) best = f;
  return best;
}

// Node numbering: map vertices, then two subdivision points per arc, then face centres.
struct Layout {
  int V = 0, A = 0;
  std::vector<Point> pos;
  int sub(std::size_t arc, int i) const { return V + 2 * static_cast<int>(arc) + i; }
  int centre(int f) const { return V + 2 * A + f; }
  Point at(int v) const { return pos[static_cast<std::size_t>(v)]; }
};

// An arc ending at an endpoint that sits in the outer face is a spike: it is
// kept off the pinned ring and drawn radially outwards afterwards.
bool is_spike(const CombinatorialMap& map, std::size_t arc, int outer) {
  if (!map.is_open()) return false;
  const Dart d = forward_dart(arc);
  const bool touches = map.tail(d) == map.begin_vertex() || map.head(d) == map.end_vertex();
  return touches && map.left_face(arc) == outer;
}

Layout layout(const CombinatorialMap& map, int outer) {
  Layout L;
  L.V = static_cast<int>(map.vertex_count());
  L.A = static_cast<int>(map.arc_count());
  const int F = static_cast<int>(map.face_count());
  const int N = L.V + 2 * L.A + F;
  L.pos.assign(static_cast<std::size_t>(N), {});

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(N));
  auto link = [&](int a, int b) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  };
  for (std::size_t a = 0; a < map.arc_count(); ++a) {
    const Dart d = forward_dart(a);
    link(map.tail(d), L.sub(a, 0));
    link(L.sub(a, 0), L.sub(a, 1));
    link(L.sub(a, 1), map.head(d));
  }
  for (int f = 0; f < F; ++f) {
    if (f == outer) continue;
    for (Dart d : map.face(f)) {
      link(L.centre(f), map.tail(d));
      link(L.centre(f), L.sub(arc_of(d), 0));
      link(L.centre(f), L.sub(arc_of(d), 1));
    }
  }

  std::vector<char> pinned(static_cast<std::size_t>(N), 0);
  pinned[static_cast<std::size_t>(L.centre(outer))] = 1;
  std::vector<int> ring;
  for (Dart d : map.face(outer)) {
    const std::size_t a = arc_of(d);
    if (is_spike(map, a, outer)) continue;
    ring.push_back(map.tail(d));
    const bool fwd = d == forward_dart(a);
    ring.push_back(L.sub(a, fwd ? 0 : 1));
    ring.push_back(L.sub(a, fwd ? 1 : 0));
  }

  std::vector<char> on_ring(static_cast<std::size_t>(N), 0);
  std::vector<int> distinct;
  for (int v : ring)
    if (!on_ring[static_cast<std::size_t>(v)]) on_ring[static_cast<std::size_t>(v)] = 1, distinct.push_back(v);
  if (distinct.size() < 3) {
    // Only the trivial diagram: a single straight strand.
    const int b = map.begin_vertex(), e = map.end_vertex();
    L.pos[static_cast<std::size_t>(b)] = {-ring_radius, 0};
    L.pos[static_cast<std::size_t>(e)] = {ring_radius, 0};
    L.pos[static_cast<std::size_t>(L.sub(0, 0))] = {-ring_radius / 3, 0};
    L.pos[static_cast<std::size_t>(L.sub(0, 1))] = {ring_radius / 3, 0};
    return L;
  }
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    // Clockwise, so the outer face lies on the left of its boundary walk.
    const double t = std::numbers::pi / 2 - 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(distinct.size());
    L.pos[static_cast<std::size_t>(distinct[i])] = {ring_radius * std::cos(t), ring_radius * std::sin(t)};
    pinned[static_cast<std::size_t>(distinct[i])] = 1;
  }

  std::vector<std::size_t> spikes;
  for (std::size_t a = 0; a < map.arc_count(); ++a) {
    if (!is_spike(map, a, outer)) continue;
    spikes.push_back(a);
    for (int v : {map.tail(forward_dart(a)), map.head(forward_dart(a)), L.sub(a, 0), L.sub(a, 1)})
      if (v == map.begin_vertex() || v == map.end_vertex() || v >= L.V) pinned[static_cast<std::size_t>(v)] = 1;
  }

  std::vector<int> index(static_cast<std::size_t>(N), -1);
  int free_count = 0;
  for (int v = 0; v < N; ++v)
    if (!pinned[static_cast<std::size_t>(v)]) index[static_cast<std::size_t>(v)] = free_count++;

  if (free_count > 0) {
    std::vector<Eigen::Triplet<double>> entries;
    Eigen::VectorXd bx = Eigen::VectorXd::Zero(free_count), by = Eigen::VectorXd::Zero(free_count);
    for (int v = 0; v < N; ++v) {
      const int i = index[static_cast<std::size_t>(v)];
      if (i < 0) continue;
      double degree = 0;
      for (int w : adj[static_cast<std::size_t>(v)]) {
        // Spike points are placed later and do not pull on the rest.
        if (pinned[static_cast<std::size_t>(w)] && !on_ring[static_cast<std::size_t>(w)]) continue;
        degree += 1;
        const int j = index[static_cast<std::size_t>(w)];
        if (j >= 0) {
          entries.emplace_back(i, j, -1.0);
        } else {
          bx[i] += L.pos[static_cast<std::size_t>(w)].x;
          by[i] += L.pos[static_cast<std::size_t>(w)].y;
        }
      }
      entries.emplace_back(i, i, degree);
    }
    Eigen::SparseMatrix<double> M(free_count, free_count);
    M.setFromTriplets(entries.begin(), entries.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
    solver.compute(M);
    const Eigen::VectorXd x = solver.solve(bx);
    const Eigen::VectorXd y = solver.solve(by);
    for (int v = 0; v < N; ++v) {
      const int i = index[static_cast<std::size_t>(v)];
      if (i >= 0) L.pos[static_cast<std::size_t>(v)] = {x[i], y[i]};
    }
  }

  // Two spikes on one crossing are fanned apart.
  const bool shared = spikes.size() == 2 && [&] {
    auto anchor = [&](std::size_t a) {
      const Dart d = forward_dart(a);
      return map.tail(d) == map.begin_vertex() ? map.head(d) : map.tail(d);
    };
    return anchor(spikes[0]) == anchor(spikes[1]);
  }();
  for (std::size_t a : spikes) {
    const Dart d = forward_dart(a);
    const bool from_begin = map.tail(d) == map.begin_vertex();
    const int endpoint = from_begin ? map.tail(d) : map.head(d);
    const int anchor = from_begin ? map.head(d) : map.tail(d);
    const Point w = L.at(anchor);
    Point dir = (1.0 / norm(w)) * w;
    if (shared) dir = rotated(dir, from_begin ? 0.4 : -0.4);
    const int near = L.sub(a, from_begin ? 1 : 0), far = L.sub(a, from_begin ? 0 : 1);
    L.pos[static_cast<std::size_t>(near)] = w + 0.07 * dir;
    L.pos[static_cast<std::size_t>(far)] = w + 0.14 * dir;
    L.pos[static_cast<std::size_t>(endpoint)] = w + 0.21 * dir;
  }
  return L;
}

// Catmull-Rom through the given points, sampled densely.
std::vector<Point> smooth(const std::vector<Point>& p) {
  std::vector<Point> out;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Point p0 = i == 0 ? p[0] : p[i - 1];
    const Point p3 = i + 2 < n ? p[i + 2] : p[n - 1];
    const Point p1 = p[i], p2 = p[i + 1];
    for (int s = 0; s < 16; ++s) {
      const double t = s / 16.0, t2 = t * t, t3 = t2 * t;
      out.push_back(0.5 * ((2.0 * p1) + t * (p2 - p0) + t2 * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) +
                           t3 * ((3.0 * p1 - p0) - 3.0 * p2 + p3)));
    }
  }
  out.push_back(p[n - 1]);
  return out;
}

}  // namespace

std::string render_svg(const Diagram& d, const RenderOptions& options) {
  const auto map = trace_faces(d);
  const int outer = outer_face(d, map);
  const Layout L = layout(map, outer);
  constexpr double gap = 0.04;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 1000 1000\" width=\"1000\" height=\"1000\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" style=\"fill:#ffffff\"/>\n";

  auto under = [&](std::size_t pos_index) {
    return pos_index != Diagram::npos && d.visit(pos_index).pass == Pass::Under;
  };
  for (std::size_t a = 0; a < map.arc_count(); ++a) {
    const Dart fd = forward_dart(a);
    const Point p0 = L.at(map.tail(fd)), p3 = L.at(map.head(fd));
    // Under-passes are broken near their crossing.
    const bool cut_tail = under(d.arc_tail(a));
    const bool cut_head = under(d.arc_head(a));
    std::string path;
    for (Point q : smooth({p0, L.at(L.sub(a, 0)), L.at(L.sub(a, 1)), p3})) {
      if ((cut_tail && dist(q, p0) < gap) || (cut_head && dist(q, p3) < gap)) {
        if (!path.empty()) break;
        continue;
      }
      path += (path.empty() ? "M " : " L ") + fmt_point(q);
    }
    if (path.empty()) continue;
    out += fmt::format("<path d=\"{}\" style=\"fill:none;stroke:#000000;stroke-width:4;stroke-linejoin:round\"/>\n", path);
  }

  if (d.is_open()) {
    for (int v : {map.begin_vertex(), map.end_vertex()})
      out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"9\" style=\"fill:#000000\"/>\n", sx(L.at(v)), sy(L.at(v)));
    if (options.shortcut) {
      const auto h = height(map, build_dual(map));
      const auto& s = h.shortcut;
      std::vector<Point> pts{L.at(map.begin_vertex())};
      for (std::size_t i = 0; i < s.arcs.size(); ++i) {
        pts.push_back(0.5 * (L.at(L.sub(s.arcs[i], 0)) + L.at(L.sub(s.arcs[i], 1))));
        if (i + 1 < s.arcs.size()) pts.push_back(L.at(L.centre(s.faces[i + 1])));
      }
      pts.push_back(L.at(map.end_vertex()));
      std::string path;
      for (Point q : pts) path += (path.empty() ? "M " : " L ") + fmt_point(q);
      out += fmt::format(
          "<path d=\"{}\" style=\"fill:none;stroke:#c03030;stroke-width:3;stroke-dasharray:12,8\"/>\n", path);
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace knotoid
