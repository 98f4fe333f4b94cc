#include <doctest.h>

#include <map>

#include <string>
#include <vector>

#include "fixtures.hpp"
#include "knotoid/code.hpp"
#include "knotoid/enumerate.hpp"
#include "oracles.hpp"

using namespace knotoid;

namespace {

CodeErrorKind error_kind(const std::string& text) {
  try {
    (void)parse_code(text);
  } catch (const CodeError& e) {
    return e.kind();
  }
  FAIL("accepted: " << text);
  return CodeErrorKind::Malformed;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto j = text.find(' ', i);
    out.push_back(text.substr(i, j - i));
    if (j == std::string::npos) break;
    i = j + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("trivial flat diagram") {
  const auto d = parse_code("flatknotoid");
  CHECK(d.crossing_count() == 0);
  CHECK(d.arc_count() == 1);
  CHECK(d.kind() == DiagramKind::Flat);
  CHECK(serialize(d) == "flatknotoid");
  CHECK(d == Diagram::trivial());
}

TEST_CASE("one-crossing diagram and its mirror") {
  const auto d = parse_code(fixtures::kink);
  CHECK(d.crossing_count() == 1);
  CHECK(d.arc_count() == 3);
  CHECK(serialize(d) == fixtures::kink);
  const auto m = parse_code(fixtures::kink_mirror);
  CHECK(m.chirality(1) == -1);
  CHECK(serialize(m) == fixtures::kink_mirror);
}

TEST_CASE("error kinds") {
  CHECK(error_kind("flatknotoid 1+ 2+ 1+") == CodeErrorKind::LabelCount);
  CHECK(error_kind("knotoid O1+ O1+") == CodeErrorKind::LabelCount);
  CHECK(error_kind("knot") == CodeErrorKind::Malformed);
  CHECK(error_kind("knot O1+ U1-") == CodeErrorKind::SignMismatch);
  CHECK(error_kind("knot O1+ U1−") == CodeErrorKind::SignMismatch);
  CHECK(error_kind("flatknotoid 1 1") == CodeErrorKind::Malformed);
  CHECK(error_kind("flatknotoid O1+ U1+") == CodeErrorKind::Malformed);
  CHECK(error_kind("knotoid 1+ 1+") == CodeErrorKind::Malformed);
  CHECK(error_kind("circle 1+ 1+") == CodeErrorKind::Malformed);
  CHECK(error_kind("") == CodeErrorKind::Malformed);
  CHECK(error_kind("flatknotoid 0+ 0+") == CodeErrorKind::Malformed);
}

TEST_CASE("comments are ignored") {
  CHECK(serialize(parse_code("flatknotoid 1+ 1+ # a kink")) == fixtures::kink);
}

TEST_CASE("the four sign vectors of 1 2 1 2 follow the face-tracing oracle") {
  int accepted = 0;
  for (const char* s1 : {"+", "-"})
    for (const char* s2 : {"+", "-"}) {
      const std::string text = std::string("flatknotoid 1") + s1 + " 2" + s2 + " 1" + s1 + " 2" + s2;
      const bool expect = oracle::spherical(oracle::read(text));
      CAPTURE(text);
      if (expect) {
        CHECK_NOTHROW((void)parse_code(text));
        ++accepted;
      } else {
        CHECK(error_kind(text) == CodeErrorKind::NotSpherical);
      }
    }
  CHECK(accepted == 2);
}

TEST_CASE("uniformly signed example codes are rejected, as the oracle predicts") {
  for (const char* text : {"flatknotoid 1+ 2+ 1+ 2+", "knotoid O1+ O2+ U1+ U2+", "knot O1+ U2+ O3+ U1+ O2+ U3+"}) {
    CAPTURE(text);
    CHECK_FALSE(oracle::spherical(oracle::read(text)));
    CHECK(error_kind(text) == CodeErrorKind::NotSpherical);
  }
}

TEST_CASE("knotoid and knot codes") {
  const auto k = parse_code(fixtures::kink_knotoid);
  CHECK(k.kind() == DiagramKind::Knotoid);
  CHECK(serialize(forget_over_under(k)) == fixtures::kink);
  const auto c = parse_code(fixtures::clasp_knotoid);
  CHECK(serialize(forget_over_under(c)) == fixtures::clasp);
  const auto t = parse_code(fixtures::trefoil);
  CHECK(t.kind() == DiagramKind::Knot);
  CHECK(t.crossing_count() == 3);
  CHECK(t.arc_count() == 6);
  CHECK(oracle::spherical(oracle::read(fixtures::trefoil)));
  CHECK(oracle::spherical(oracle::read(fixtures::figure_eight)));
}

TEST_CASE("relabeling matches the first-occurrence oracle") {
  for (const char* text : {"flatknotoid 2+ 1- 2+ 1-", "knotoid U7- O3+ O7- U3+", "flatknotoid 5+ 5+ 2+ 2+"}) {
    CAPTURE(text);
    CHECK(serialize(parse_code(text)) == oracle::relabel(text));
  }
}

TEST_CASE("round trip and idempotent canonical form on enumerated diagrams") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& d : generate_flat_codes(n)) {
      const std::string s = serialize(d);
      CHECK(serialize(parse_code(s)) == s);
      CHECK(canonical_code(d) == s);
      CHECK(canonical_code(parse_code(canonical_code(d))) == canonical_code(d));
      CHECK(forget_over_under(d).crossing_count() == d.crossing_count());
    }
}

TEST_CASE("knot codes canonicalize identically under cyclic rotation") {
  for (const char* text : {fixtures::trefoil, fixtures::figure_eight}) {
    auto words = split(text);
    const std::string header = words.front();
    words.erase(words.begin());
    const std::string canon = canonical_code(parse_code(text));
    for (std::size_t r = 0; r < words.size(); ++r) {
      // A crossing whose visit order swaps changes sign: the sign is relative
      // to the first visit.
      std::map<std::string, int> seen;
      std::string rotated = header;
      for (std::size_t i = 0; i < words.size(); ++i) {
        const std::size_t j = (r + i) % words.size();
        std::string w = words[j];
        const std::string label = w.substr(1, w.size() - 2);
        const bool first_now = seen[label]++ == 0;
        std::size_t first_before = 0;
        while (words[first_before].substr(1, words[first_before].size() - 2) != label) ++first_before;
        if (first_now != (j == first_before)) w.back() = w.back() == '+' ? '-' : '+';
        rotated += " " + w;
      }
      CAPTURE(rotated);
      CHECK(canonical_code(parse_code(rotated)) == canon);
      CHECK(canonical_code(rotate(parse_code(text), r)) == canon);
    }
  }
}

TEST_CASE("every accepted diagram carries one chirality per crossing") {
  for (const auto& d : generate_flat_codes(3))
    for (int c = 1; c <= d.crossing_count(); ++c) {
      const auto occ = d.occurrences(c);
      CHECK(d.visit(occ[0]).crossing == c);
      CHECK(d.visit(occ[1]).crossing == c);
      CHECK((d.chirality(c) == 1 || d.chirality(c) == -1));
    }
}
