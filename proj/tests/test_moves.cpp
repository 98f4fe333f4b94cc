#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "knotoid/code.hpp"
#include "knotoid/enumerate.hpp"
#include "knotoid/moves.hpp"
#include "knotoid/planar.hpp"
#include "oracles.hpp"

using namespace knotoid;

namespace {

bool oracle_ok(const Diagram& d) { return oracle::spherical(oracle::read(serialize(d))); }

}  // namespace

TEST_CASE("Omega1 on the trivial diagram and back") {
  const auto r = r1_insert(Diagram::trivial(), 0, Side::Left, 1);
  CHECK(r.diagram.crossing_count() == 1);
  CHECK(oracle_ok(r.diagram));
  CHECK(r1_delete(r.diagram, r.site) == Diagram::trivial());
  const auto l = r1_insert(Diagram::trivial(), 0, Side::Left, 1).diagram;
  const auto rt = r1_insert(Diagram::trivial(), 0, Side::Right, 1).diagram;
  CHECK(l.chirality(1) == -rt.chirality(1));
}

TEST_CASE("Omega2 on the one-crossing knotoid and back") {
  const auto d = parse_code(fixtures::kink_knotoid);
  const auto map = trace_faces(d);
  int done = 0;
  for (std::size_t a = 0; a < d.arc_count(); ++a)
    for (std::size_t b = 0; b < d.arc_count(); ++b) {
      if (a == b) continue;
      for (bool over : {true, false}) {
        try {
          const auto r = r2_insert(d, a, b, {over, -1});
          CHECK(r.diagram.crossing_count() == 3);
          CHECK(oracle_ok(r.diagram));
          CHECK(r2_delete(r.diagram, r.site) == d);
          ++done;
        } catch (const MoveError& e) {
          CHECK(e.kind() == MoveErrorKind::NotAdjacent);
        }
      }
    }
  CHECK(done > 0);
}

TEST_CASE("insert then delete is the identity on enumerated diagrams") {
  for (int n = 0; n <= 3; ++n)
    for (const auto& d : generate_flat_codes(n)) {
      for (std::size_t a = 0; a < d.arc_count(); ++a)
        for (Side s : {Side::Left, Side::Right}) {
          const auto r = r1_insert(d, a, s);
          CHECK(oracle_ok(r.diagram));
          CHECK(r1_delete(r.diagram, r.site) == d);
        }
      // Arcs sharing a face per the oracle are exactly the valid Omega2 sites.
      const auto f = oracle::trace(oracle::read(serialize(d)));
      for (std::size_t a = 0; a < d.arc_count(); ++a)
        for (std::size_t b = 0; b < d.arc_count(); ++b) {
          if (a == b) continue;
          std::set<int> fa{f.sides[a][0], f.sides[a][1]};
          const bool share = fa.count(f.sides[b][0]) || fa.count(f.sides[b][1]);
          if (share) {
            const auto r = r2_insert(d, a, b);
            CHECK(oracle_ok(r.diagram));
            CHECK(r2_delete(r.diagram, r.site) == d);
          } else {
            CHECK_THROWS_AS(r2_insert(d, a, b), MoveError);
          }
        }
    }
}

TEST_CASE("deletions demand their local pattern") {
  const auto d = parse_code(fixtures::clasp);
  try {
    (void)r1_delete(d, 0);
    FAIL("no kink at 0");
  } catch (const MoveError& e) {
    CHECK(e.kind() == MoveErrorKind::PatternNotFound);
  }
  const auto k = parse_code(fixtures::kink);
  try {
    (void)r2_delete(k, 0);
    FAIL("no bigon at 0");
  } catch (const MoveError& e) {
    CHECK(e.kind() == MoveErrorKind::PatternNotFound);
  }
  CHECK_THROWS_AS(r2_insert(k, 1, 1), MoveError);
}

TEST_CASE("random rewrites stay realizable and are reproducible") {
  for (const char* text : {fixtures::clasp_knotoid, fixtures::trefoil, fixtures::clasp}) {
    const auto d = parse_code(text);
    const auto a = random_rewrite(d, 7, 60);
    CHECK(a == random_rewrite(d, 7, 60));
    CHECK(oracle_ok(a));
    CHECK(a.kind() == d.kind());
  }
}
