#include "knotoid/enumerate.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <thread>

#include "knotoid/gamma.hpp"
#include "knotoid/planar.hpp"
#include "knotoid/primality.hpp"

namespace knotoid {

ShardSpec parse_shard(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("shard must be i/m");
  ShardSpec s;
  const char* b = text.data();
  const char* e = b + text.size();
  auto r1 = std::from_chars(b, b + slash, s.index);
  auto r2 = std::from_chars(b + slash + 1, e, s.count);
  if (r1.ec != std::errc{} || r1.ptr != b + slash || r2.ec != std::errc{} || r2.ptr != e)
    throw std::invalid_argument("shard must be i/m");
  if (s.count == 0 || s.index >= s.count) throw std::invalid_argument("shard index must satisfy 0 <= i < m");
  return s;
}

std::uint64_t shard_key(std::span<const Visit> visits, std::span<const int> chirality) {
  const std::size_t n = chirality.size();
  const std::uint64_t base = 2 * n + 2;
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < (n + 1) / 2 && i < visits.size(); ++i) {
    const auto c = visits[i].crossing;
    key = key * base + static_cast<std::uint64_t>(2 * c + (chirality[static_cast<std::size_t>(c - 1)] < 0 ? 1 : 0));
  }
  return key;
}

namespace {

struct Generator {
  int n;
  const std::function<void(const Diagram&, const Ordinal&)>& fn;
  ShardSpec shard;
  std::size_t lane, lanes;
  std::vector<Visit> visits;
  std::vector<int> seen;
  std::uint64_t sequence = 0;

  void emit() {
    const std::uint64_t ordinal = sequence++;
    if (ordinal % lanes != lane) return;
    const auto un = static_cast<std::size_t>(n);
    std::vector<int> chir(un);
    const std::size_t faces = spherical_face_count(n, false);
    for (std::uint32_t mask = 0; mask < (1u << un); ++mask) {
      for (std::size_t i = 0; i < un; ++i) chir[i] = (mask >> i) & 1u ? -1 : 1;
      if (shard.count > 1 && shard_key(visits, chir) % shard.count != shard.index) continue;
      if (count_faces(visits, chir, false) != faces) continue;
      fn(make_unchecked(DiagramKind::Flat, visits, chir), Ordinal{n, ordinal, mask});
    }
  }

  void fill(std::size_t pos, int next) {
    if (pos == visits.size()) {
      emit();
      return;
    }
    for (int c = 1; c < next; ++c) {
      if (seen[static_cast<std::size_t>(c)] != 1) continue;
      seen[static_cast<std::size_t>(c)] = 2;
      visits[pos] = Visit{c, Pass::Flat};
      fill(pos + 1, next);
      seen[static_cast<std::size_t>(c)] = 1;
    }
    if (next <= n) {
      seen[static_cast<std::size_t>(next)] = 1;
      visits[pos] = Visit{next, Pass::Flat};
      fill(pos + 1, next + 1);
      seen[static_cast<std::size_t>(next)] = 0;
    }
  }
};

template <class T>
void merge_sorted(std::vector<T>& into, const std::vector<T>& from) {
  into.insert(into.end(), from.begin(), from.end());
  std::sort(into.begin(), into.end());
}

template <class C>
void add_by_n(std::vector<C>& into, const std::vector<C>& from) {
  if (into.size() != from.size()) throw std::invalid_argument("cannot merge reports over different ranges");
  for (std::size_t i = 0; i < into.size(); ++i) {
    if (into[i].n != from[i].n) throw std::invalid_argument("cannot merge reports over different ranges");
    into[i] += from[i];
  }
}

void note_fixture(std::map<std::string, LemmaFixture>& fixtures, const std::string& key, const LemmaFixture& candidate) {
  auto it = fixtures.find(key);
  if (it == fixtures.end() || candidate.ordinal < it->second.ordinal) fixtures[key] = candidate;
}

}  // namespace

void for_each_flat_code(int n, const std::function<void(const Diagram&, const Ordinal&)>& fn, ShardSpec shard,
                        std::size_t lane, std::size_t lanes) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n > 16) throw std::invalid_argument("n too large for exhaustive generation");
  if (lanes == 0 || lane >= lanes) throw std::invalid_argument("bad lane");
  const auto un = static_cast<std::size_t>(n);
  Generator g{n, fn, shard, lane, lanes, std::vector<Visit>(2 * un), std::vector<int>(un + 2, 0)};
  g.fill(0, 1);
}

std::vector<Diagram> generate_flat_codes(int n, ShardSpec shard) {
  std::vector<Diagram> out;
  for_each_flat_code(n, [&](const Diagram& d, const Ordinal&) { out.push_back(d); }, shard);
  return out;
}

Diagram spiral(int k) {
  if (k < 1) throw std::invalid_argument("spiral needs k >= 1");
  std::vector<Visit> visits;
  for (int c = 1; c <= 2 * k; ++c) visits.push_back({c, Pass::Flat});
  for (int i = 1; i <= k; ++i) {
    visits.push_back({i, Pass::Flat});
    visits.push_back({2 * k + 1 - i, Pass::Flat});
  }
  std::vector<int> chir(static_cast<std::size_t>(2 * k));
  for (int c = 1; c <= 2 * k; ++c) chir[static_cast<std::size_t>(c - 1)] = c <= k ? 1 : -1;
  return Diagram::make(DiagramKind::Flat, std::move(visits), std::move(chir));
}

Census& Census::operator+=(const Census& o) {
  total += o.total;
  prime += o.prime;
  equality += o.equality;
  for (auto [h, k] : o.heights) heights[h] += k;
  merge_sorted(violations, o.violations);
  return *this;
}

MachineryCensus& MachineryCensus::operator+=(const MachineryCensus& o) {
  prime += o.prime;
  counting_identity += o.counting_identity;
  type34 += o.type34;
  regions += o.regions;
  shared_edge += o.shared_edge;
  distance += o.distance;
  chain_lemmas += o.chain_lemmas;
  bound += o.bound;
  bound_truncated += o.bound_truncated;
  c0_ge_q_minus_2 += o.c0_ge_q_minus_2;
  q_ge_c2 += o.q_ge_c2;
  one_sided += o.one_sided;
  two_sided += o.two_sided;
  for (std::size_t i = 0; i < 3; ++i) chains_applicable[i] += o.chains_applicable[i];
  merge_sorted(failures, o.failures);
  return *this;
}

std::size_t MachineryCensus::failure_count() const {
  return counting_identity + type34 + regions + shared_edge + distance + chain_lemmas + bound + bound_truncated +
         c0_ge_q_minus_2 + q_ge_c2;
}

DecompositionCensus& DecompositionCensus::operator+=(const DecompositionCensus& o) {
  non_prime += o.non_prime;
  contractions += o.contractions;
  splits += o.splits;
  decompositions += o.decompositions;
  merge_sorted(failures, o.failures);
  return *this;
}

VerifyReport& VerifyReport::operator+=(const VerifyReport& o) {
  if (max_n != o.max_n || machinery_max_n != o.machinery_max_n)
    throw std::invalid_argument("cannot merge reports over different ranges");
  add_by_n(theorem, o.theorem);
  add_by_n(machinery, o.machinery);
  add_by_n(decomposition, o.decomposition);
  for (const auto& [key, fx] : o.fixtures) note_fixture(fixtures, key, fx);
  return *this;
}

std::size_t VerifyReport::violation_count() const {
  std::size_t total = 0;
  for (const auto& c : theorem) total += c.violations.size();
  for (const auto& m : machinery) total += m.failure_count();
  for (const auto& d : decomposition) total += d.failures.size();
  return total;
}

void check_prime_machinery(const Diagram& f, const Ordinal& ordinal, MachineryCensus& census,
                           std::map<std::string, LemmaFixture>& fixtures) {
  ++census.prime;
  const std::string code = serialize(f);
  auto fail = [&](std::size_t& counter, const char* check) {
    ++counter;
    census.failures.push_back(std::string(check) + ": " + code);
  };
  const auto map = trace_faces(f);
  const DualGraph dual(map);
  const auto hr = height(map, dual);
  const auto r = classify(f, map, hr.shortcut, hr.height);
  if (!check_counting_identity(r)) fail(census.counting_identity, "counting_identity");
  if (!check_no_type34(r)) fail(census.type34, "type34");
  if (!check_gamma_regions(r)) fail(census.regions, "regions");
  if (!check_shared_edge_property(r)) fail(census.shared_edge, "shared_edge");
  const auto dc = check_exceptional_distances(dual, r);
  census.one_sided += static_cast<std::size_t>(dc.one_sided);
  census.two_sided += static_cast<std::size_t>(dc.two_sided);
  if (!dc.ok()) fail(census.distance, "distance");
  const auto lc = check_chain_lemmas(r);
  for (std::size_t i = 0; i < 3; ++i) census.chains_applicable[i] += static_cast<std::size_t>(lc.applicable[i]);
  if (!lc.ok()) fail(census.chain_lemmas, "chain_lemmas");

  const LemmaFixture fx{ordinal, code, hr.shortcut.arcs};
  if (dc.one_sided > 0) note_fixture(fixtures, "lemma2_one_sided", fx);
  if (dc.two_sided > 0) note_fixture(fixtures, "lemma2_two_sided", fx);
  if (lc.applicable[0] > 0) note_fixture(fixtures, "lemma3", fx);
  if (lc.applicable[1] > 0) note_fixture(fixtures, "lemma4", fx);
  if (lc.applicable[2] > 0) note_fixture(fixtures, "lemma5", fx);

  const auto b = exists_minimal_shortcut_with_bound(f);
  if (b.truncated) fail(census.bound_truncated, "bound_truncated");
  if (!b.found) {
    fail(census.bound, "bound");
    return;
  }
  if (!b.c0_ge_q_minus_2) fail(census.c0_ge_q_minus_2, "c0_ge_q_minus_2");
  if (!b.q_ge_c2) fail(census.q_ge_c2, "q_ge_c2");
}

void check_decomposition(const Diagram& f, DecompositionCensus& census) {
  ++census.non_prime;
  const std::string code = serialize(f);
  auto fail = [&](const std::string& what) { census.failures.push_back(what + ": " + code); };
  const int h = height(f).height;
  const int n = f.crossing_count();
  for (const auto& w : one_point_circles(f)) {
    if (!w.disqualifying()) continue;
    ++census.splits;
    const auto [f1, f2] = split_one_point_circle(f, w);
    if (f1.crossing_count() + f2.crossing_count() != n) fail("split_cr arc " + std::to_string(w.arcs[0]));
    if (height(f1).height + height(f2).height != h) fail("split_h arc " + std::to_string(w.arcs[0]));
  }
  for (const auto& w : two_point_circles(f)) {
    if (!w.disqualifying()) continue;
    ++census.contractions;
    const auto g = contract_two_point_circle(f, w);
    const std::string where = " arcs " + std::to_string(w.arcs[0]) + "," + std::to_string(w.arcs[1]);
    if (g.crossing_count() >= n) fail("contract_cr" + where);
    if (height(g).height != h) fail("contract_h" + where);
  }
  ++census.decompositions;
  const auto dec = prime_decompose(f);
  int sum_h = 0, sum_cr = 0;
  for (const auto& p : dec.pieces) {
    sum_h += height(p).height;
    sum_cr += p.crossing_count();
    if (!is_prime(p).prime) fail("decompose_not_prime");
  }
  if (sum_h != h) fail("decompose_h");
  if (sum_cr > n) fail("decompose_cr");
  if (static_cast<int>(dec.trace.size()) > n) fail("decompose_steps");
}

namespace {

VerifyReport empty_report(const VerifyOptions& o) {
  VerifyReport r;
  r.max_n = o.max_n;
  r.machinery_max_n = std::min(o.max_n, o.machinery_max_n);
  for (int n = 0; n <= o.max_n; ++n) {
    r.theorem.emplace_back().n = n;
    r.decomposition.emplace_back().n = n;
  }
  for (int n = 1; n <= r.machinery_max_n; ++n) r.machinery.emplace_back().n = n;
  return r;
}

VerifyReport run_lane(const VerifyOptions& o, std::size_t lane, std::size_t lanes, bool full) {
  auto r = empty_report(o);
  for (int n = 0; n <= o.max_n; ++n) {
    auto& census = r.theorem[static_cast<std::size_t>(n)];
    for_each_flat_code(
        n,
        [&](const Diagram& f, const Ordinal& ord) {
          const int h = height(f).height;
          ++census.total;
          ++census.heights[h];
          if (n == 2 * h) ++census.equality;
          if (n < 2 * h) census.violations.push_back(serialize(f));
          if (!full) return;
          if (is_prime(f).prime) {
            ++census.prime;
            if (n >= 1 && n <= r.machinery_max_n)
              check_prime_machinery(f, ord, r.machinery[static_cast<std::size_t>(n - 1)], r.fixtures);
          } else {
            check_decomposition(f, r.decomposition[static_cast<std::size_t>(n)]);
          }
        },
        o.shard, lane, lanes);
  }
  return r;
}

VerifyReport run_parallel(const VerifyOptions& o, bool full) {
  if (o.max_n < 0) throw std::invalid_argument("max_n must be non-negative");
  const std::size_t jobs = std::max<std::size_t>(1, o.jobs);
  std::vector<VerifyReport> parts(jobs);
  if (jobs == 1) {
    parts[0] = run_lane(o, 0, 1, full);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back([&, j] { parts[j] = run_lane(o, j, jobs, full); });
    for (auto& t : pool) t.join();
  }
  auto out = empty_report(o);
  for (const auto& p : parts) out += p;
  return out;
}

}  // namespace

std::vector<Census> verify_theorem_campaign(int n_max, ShardSpec shard, std::size_t jobs) {
  VerifyOptions o;
  o.max_n = n_max;
  o.machinery_max_n = -1;
  o.shard = shard;
  o.jobs = jobs;
  return run_parallel(o, false).theorem;
}

VerifyReport verify(const VerifyOptions& options) { return run_parallel(options, true); }

}  // namespace knotoid
