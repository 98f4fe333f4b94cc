#include "knotoid/affine.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace knotoid {

void LaurentPolynomial::add(int exponent, long long coefficient) {
  if (coefficient == 0) return;
  auto& c = terms_[exponent];
  c += coefficient;
  if (c == 0) terms_.erase(exponent);
}

long long LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<int, long long>> order(terms_.begin(), terms_.end());
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    const int ax = std::abs(x.first), ay = std::abs(y.first);
    return ax != ay ? ax < ay : x.first < y.first;
  });
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto [e, c] = order[i];
    if (i == 0) {
      out += std::to_string(c);
    } else {
      out += c < 0 ? " - " : " + ";
      out += std::to_string(c < 0 ? -c : c);
    }
    if (e != 0) out += "*t^" + std::to_string(e);
  }
  return out;
}

std::vector<int> flat_labels(const Diagram& d) {
  std::vector<int> labels(d.arc_count(), 0);
  if (d.visit_count() == 0) return labels;
  // Walk from e_0 through each visit in strand order.
  const std::size_t m = d.visit_count();
  std::size_t arc = 0;
  std::size_t pos = d.arc_head(0);
  for (std::size_t step = 0; step < m; ++step) {
    const int c = d.visit(pos).crossing;
    const bool first = d.occurrences(c)[0] == pos;
    const int delta = (first ? 1 : -1) * d.chirality(c);
    const std::size_t next = d.out_arc(pos);
    if (d.is_closed() && next == 0) break;
    labels[next] = labels[arc] + delta;
    arc = next;
    pos = d.arc_head(next);
    if (pos == Diagram::npos) break;
  }
  return labels;
}

int writhe_sign(const Diagram& d, int crossing) {
  if (!d.has_passes()) throw std::invalid_argument("writhe needs over/under data");
  const auto& occ = d.occurrences(crossing);
  const bool first_over = d.visit(occ[0]).pass == Pass::Over;
  return first_over ? d.chirality(crossing) : -d.chirality(crossing);
}

std::vector<CrossingData> crossing_data(const Diagram& d) {
  if (!d.has_passes()) throw std::invalid_argument("affine index needs over/under data");
  const auto labels = flat_labels(d);
  std::vector<CrossingData> out(static_cast<std::size_t>(d.crossing_count()));
  for (int c = 1; c <= d.crossing_count(); ++c) {
    auto& x = out[static_cast<std::size_t>(c - 1)];
    for (auto pos : d.occurrences(c)) {
      const int incoming = labels[d.in_arc(pos)];
      if (d.visit(pos).pass == Pass::Under) x.a = incoming;
      else x.b = incoming;
    }
    x.eps = writhe_sign(d, c);
    x.weight = x.a - x.b - x.eps;
  }
  return out;
}

LaurentPolynomial affine_polynomial(const Diagram& d) {
  LaurentPolynomial p;
  for (const auto& x : crossing_data(d)) {
    p.add(x.weight, x.eps);
    p.add(0, -x.eps);
  }
  return p;
}

int d_max(const LaurentPolynomial& p) {
  if (p.is_zero()) return 0;
  return std::max(0, p.terms().rbegin()->first);
}

AffineBounds bounds(const Diagram& d) {
  const int dm = d_max(affine_polynomial(d));
  return {dm, 2 * dm};
}

}  // namespace knotoid
