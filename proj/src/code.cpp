#include "knotoid/code.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <tuple>
#include <utility>

#include "knotoid/planar.hpp"

namespace knotoid {

const char* to_string(CodeErrorKind kind) {
  switch (kind) {
    case CodeErrorKind::Malformed: return "MALFORMED";
    case CodeErrorKind::LabelCount: return "LABEL_COUNT";
    case CodeErrorKind::SignMismatch: return "SIGN_MISMATCH";
    case CodeErrorKind::NotSpherical: return "NOT_SPHERICAL";
  }
  return "UNKNOWN";
}

CodeError::CodeError(CodeErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

Diagram::Diagram(DiagramKind kind, std::vector<Visit> visits, std::vector<int> chirality)
    : kind_(kind), visits_(std::move(visits)), chirality_(std::move(chirality)) {
  occurrences_.assign(chirality_.size(), {npos, npos});
  for (std::size_t pos = 0; pos < visits_.size(); ++pos) {
    auto& occ = occurrences_[static_cast<std::size_t>(visits_[pos].crossing - 1)];
    (occ[0] == npos ? occ[0] : occ[1]) = pos;
  }
}

Diagram make_unchecked(DiagramKind kind, std::vector<Visit> visits, std::vector<int> chirality) {
  return Diagram(kind, std::move(visits), std::move(chirality));
}

Diagram Diagram::trivial(DiagramKind kind) {
  if (kind == DiagramKind::Knot) throw CodeError(CodeErrorKind::Malformed, "empty closed diagram");
  Diagram d;
  d.kind_ = kind;
  return d;
}

std::vector<Visit> relabel_first_occurrence(std::span<const Visit> visits, std::vector<int>* old_to_new) {
  int max_label = 0;
  for (const auto& v : visits) max_label = std::max(max_label, v.crossing);
  std::vector<int> map(static_cast<std::size_t>(max_label) + 1, 0);
  int next = 0;
  std::vector<Visit> out(visits.begin(), visits.end());
  for (auto& v : out) {
    auto& slot = map[static_cast<std::size_t>(v.crossing)];
    if (slot == 0) slot = ++next;
    v.crossing = slot;
  }
  if (old_to_new) *old_to_new = std::move(map);
  return out;
}

Diagram Diagram::make(DiagramKind kind, std::vector<Visit> visits, std::vector<int> chirality) {
  const bool closed = kind == DiagramKind::Knot;
  if (closed && visits.empty()) throw CodeError(CodeErrorKind::Malformed, "closed diagram without visits");
  const std::size_t n = chirality.size();
  if (visits.size() != 2 * n)
    throw CodeError(CodeErrorKind::LabelCount, "expected " + std::to_string(2 * n) + " visits for " +
                                                   std::to_string(n) + " crossings");
  std::vector<int> count(n + 1, 0), overs(n + 1, 0);
  for (std::size_t pos = 0; pos < visits.size(); ++pos) {
    const auto& v = visits[pos];
    if (v.crossing < 1 || static_cast<std::size_t>(v.crossing) > n)
      throw CodeError(CodeErrorKind::LabelCount, "label " + std::to_string(v.crossing) + " out of range");
    if ((kind == DiagramKind::Flat) != (v.pass == Pass::Flat))
      throw CodeError(CodeErrorKind::Malformed, "pass flag does not match diagram kind at visit " + std::to_string(pos));
    ++count[static_cast<std::size_t>(v.crossing)];
    if (v.pass == Pass::Over) ++overs[static_cast<std::size_t>(v.crossing)];
  }
  for (std::size_t c = 1; c <= n; ++c) {
    if (count[c] != 2)
      throw CodeError(CodeErrorKind::LabelCount,
                      "label " + std::to_string(c) + " appears " + std::to_string(count[c]) + " times");
    if (kind != DiagramKind::Flat && overs[c] != 1)
      throw CodeError(CodeErrorKind::LabelCount, "label " + std::to_string(c) + " needs one O and one U visit");
    if (chirality[c - 1] != 1 && chirality[c - 1] != -1)
      throw CodeError(CodeErrorKind::Malformed, "chirality must be +1 or -1");
  }

  std::vector<int> old_to_new;
  auto relabelled = relabel_first_occurrence(visits, &old_to_new);
  std::vector<int> chir(n);
  for (std::size_t c = 1; c <= n; ++c) chir[static_cast<std::size_t>(old_to_new[c] - 1)] = chirality[c - 1];

  const auto faces = count_faces(relabelled, chir, closed);
  const auto expected = spherical_face_count(static_cast<int>(n), closed);
  if (faces != expected)
    throw CodeError(CodeErrorKind::NotSpherical,
                    "face tracing gives " + std::to_string(faces) + " faces, sphere needs " + std::to_string(expected));
  return Diagram(kind, std::move(relabelled), std::move(chir));
}

std::size_t Diagram::in_arc(std::size_t pos) const noexcept {
  if (!is_closed()) return pos;
  return (pos + visits_.size() - 1) % visits_.size();
}

std::size_t Diagram::out_arc(std::size_t pos) const noexcept { return is_closed() ? pos : pos + 1; }

std::size_t Diagram::arc_tail(std::size_t arc) const noexcept {
  if (is_closed()) return arc;
  return arc == 0 ? npos : arc - 1;
}

std::size_t Diagram::arc_head(std::size_t arc) const noexcept {
  if (is_closed()) return (arc + 1) % visits_.size();
  return arc == visits_.size() ? npos : arc;
}

namespace {

const char* header_for(DiagramKind kind) {
  switch (kind) {
    case DiagramKind::Flat: return "flatknotoid";
    case DiagramKind::Knotoid: return "knotoid";
    case DiagramKind::Knot: return "knot";
  }
  return "";
}

std::string_view strip_line(std::string_view text) {
  if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text.find('\n') != std::string_view::npos || text.find('\r') != std::string_view::npos)
    throw CodeError(CodeErrorKind::Malformed, "code must be a single line");
  return text;
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

struct Token {
  int label;
  Pass pass;
  int sign;
};

// U+2212 MINUS SIGN is accepted alongside ASCII '-'.
constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

Token parse_token(std::string_view tok, bool with_pass, std::size_t index) {
  auto fail = [&](const std::string& why) {
    return CodeError(CodeErrorKind::Malformed, "token " + std::to_string(index + 1) + " '" + std::string(tok) + "': " + why);
  };
  Token t{0, Pass::Flat, 0};
  std::string_view rest = tok;
  if (with_pass) {
    if (rest.empty() || (rest[0] != 'O' && rest[0] != 'U')) throw fail("expected O or U");
    t.pass = rest[0] == 'O' ? Pass::Over : Pass::Under;
    rest.remove_prefix(1);
  }
  if (rest.ends_with('+')) {
    t.sign = 1;
    rest.remove_suffix(1);
  } else if (rest.ends_with('-')) {
    t.sign = -1;
    rest.remove_suffix(1);
  } else if (rest.ends_with(kUnicodeMinus)) {
    t.sign = -1;
    rest.remove_suffix(kUnicodeMinus.size());
  } else {
    throw fail("expected sign + or -");
  }
  if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw fail("expected decimal label");
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), t.label);
  if (ec != std::errc() || ptr != rest.data() + rest.size()) throw fail("label out of range");
  if (t.label < 1) throw fail("label must be >= 1");
  return t;
}

Diagram parse_with_kind(std::string_view text, DiagramKind kind) {
  const auto words = split_ws(strip_line(text));
  const std::string_view header = header_for(kind);
  if (words.empty() || words[0] != header)
    throw CodeError(CodeErrorKind::Malformed, "expected header '" + std::string(header) + "'");
  const bool with_pass = kind != DiagramKind::Flat;
  if (kind == DiagramKind::Knot && words.size() == 1)
    throw CodeError(CodeErrorKind::Malformed, "empty closed diagram");

  std::vector<Token> tokens;
  tokens.reserve(words.size() - 1);
  for (std::size_t i = 1; i < words.size(); ++i) tokens.push_back(parse_token(words[i], with_pass, i - 1));

  // Dense labels in first-occurrence order; arbitrary positive input labels.
  std::map<int, int> dense;
  for (const auto& t : tokens) dense.try_emplace(t.label, static_cast<int>(dense.size()) + 1);
  std::vector<int> count(dense.size() + 1, 0), overs(dense.size() + 1, 0), sign(dense.size() + 1, 0);
  for (const auto& t : tokens) {
    const auto c = static_cast<std::size_t>(dense[t.label]);
    ++count[c];
    if (t.pass == Pass::Over) ++overs[c];
  }
  for (const auto& [label, c] : dense) {
    if (count[static_cast<std::size_t>(c)] != 2)
      throw CodeError(CodeErrorKind::LabelCount, "label " + std::to_string(label) + " appears " +
                                                     std::to_string(count[static_cast<std::size_t>(c)]) + " times");
    if (with_pass && overs[static_cast<std::size_t>(c)] != 1)
      throw CodeError(CodeErrorKind::LabelCount, "label " + std::to_string(label) + " needs one O and one U visit");
  }
  for (const auto& t : tokens) {
    auto& s = sign[static_cast<std::size_t>(dense[t.label])];
    if (s != 0 && s != t.sign)
      throw CodeError(CodeErrorKind::SignMismatch, "label " + std::to_string(t.label) + " carries both signs");
    s = t.sign;
  }

  std::vector<Visit> visits;
  visits.reserve(tokens.size());
  for (const auto& t : tokens) visits.push_back({dense[t.label], t.pass});
  std::vector<int> chirality(sign.begin() + 1, sign.end());
  return Diagram::make(kind, std::move(visits), std::move(chirality));
}

}  // namespace

Diagram parse_flat_code(std::string_view text) { return parse_with_kind(text, DiagramKind::Flat); }
Diagram parse_knotoid_code(std::string_view text) { return parse_with_kind(text, DiagramKind::Knotoid); }
Diagram parse_knot_code(std::string_view text) { return parse_with_kind(text, DiagramKind::Knot); }

Diagram parse_code(std::string_view text) {
  const auto words = split_ws(strip_line(text));
  if (words.empty()) throw CodeError(CodeErrorKind::Malformed, "empty input");
  if (words[0] == "flatknotoid") return parse_flat_code(text);
  if (words[0] == "knotoid") return parse_knotoid_code(text);
  if (words[0] == "knot") return parse_knot_code(text);
  throw CodeError(CodeErrorKind::Malformed, "unknown header '" + std::string(words[0]) + "'");
}

std::string serialize(const Diagram& diagram) {
  std::string out = header_for(diagram.kind());
  for (const auto& v : diagram.visits()) {
    out += ' ';
    if (v.pass == Pass::Over) out += 'O';
    if (v.pass == Pass::Under) out += 'U';
    out += std::to_string(v.crossing);
    out += diagram.chirality(v.crossing) > 0 ? '+' : '-';
  }
  return out;
}

Diagram rotate(const Diagram& knot, std::size_t new_start) {
  if (!knot.is_closed()) throw std::invalid_argument("rotate: diagram is not closed");
  const auto m = knot.visit_count();
  new_start %= m;
  std::vector<Visit> visits;
  visits.reserve(m);
  for (std::size_t i = 0; i < m; ++i) visits.push_back(knot.visit((new_start + i) % m));
  std::vector<int> chir(knot.chiralities().begin(), knot.chiralities().end());
  for (int c = 1; c <= knot.crossing_count(); ++c) {
    const auto& occ = knot.occurrences(c);
    if (occ[0] < new_start && new_start <= occ[1]) chir[static_cast<std::size_t>(c - 1)] *= -1;
  }
  std::vector<int> old_to_new;
  auto relabelled = relabel_first_occurrence(visits, &old_to_new);
  std::vector<int> out(chir.size());
  for (std::size_t c = 1; c < old_to_new.size(); ++c) out[static_cast<std::size_t>(old_to_new[c] - 1)] = chir[c - 1];
  return make_unchecked(DiagramKind::Knot, std::move(relabelled), std::move(out));
}

std::string canonical_code(const Diagram& diagram) {
  if (!diagram.is_closed()) return serialize(diagram);
  using Key = std::vector<std::tuple<int, int, int>>;
  auto key_of = [](const Diagram& d) {
    Key k;
    for (const auto& v : d.visits()) k.emplace_back(v.crossing, static_cast<int>(v.pass), -d.chirality(v.crossing));
    return k;
  };
  Diagram best = diagram;
  Key best_key = key_of(diagram);
  for (std::size_t s = 1; s < diagram.visit_count(); ++s) {
    auto r = rotate(diagram, s);
    auto k = key_of(r);
    if (k < best_key) {
      best_key = std::move(k);
      best = std::move(r);
    }
  }
  return serialize(best);
}

Diagram forget_over_under(const Diagram& diagram) {
  if (diagram.is_closed()) throw std::invalid_argument("forget_over_under: expects an open diagram");
  std::vector<Visit> visits(diagram.visits().begin(), diagram.visits().end());
  for (auto& v : visits) v.pass = Pass::Flat;
  return make_unchecked(DiagramKind::Flat, std::move(visits),
                        std::vector<int>(diagram.chiralities().begin(), diagram.chiralities().end()));
}

}  // namespace knotoid
