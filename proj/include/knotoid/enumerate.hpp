#pragma once

// Exhaustive generation of realizable flat knotoid diagrams, the spiral
// family, and the verification campaigns run over them.
//
// Generation order: label sequences with first-occurrence-increasing labels in
// lexicographic order, and for each sequence the 2^n sign vectors with mask
// bit i set meaning crossing i+1 is negative. A diagram's position in that
// order is its Ordinal; shards and worker threads partition it, and merged
// results are ordered by it, so output never depends on how work was split.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "knotoid/code.hpp"

namespace knotoid {

struct Ordinal {
  int n = 0;
  std::uint64_t sequence = 0;
  std::uint32_t mask = 0;

  friend auto operator<=>(const Ordinal&, const Ordinal&) = default;
};

struct ShardSpec {
  std::size_t index = 0;
  std::size_t count = 1;
};

/// Parses "i/m" with 0 <= i < m. Throws std::invalid_argument.
ShardSpec parse_shard(const std::string& text);

/// Shard key: the first ceil(n/2) visit tokens (label and sign) read as a
/// number.
std::uint64_t shard_key(std::span<const Visit> visits, std::span<const int> chirality);

/// Calls `fn` for every realizable flat diagram with n crossings in shard
/// `shard`. `lane`/`lanes` further split the work by sequence ordinal, for
/// worker threads.
void for_each_flat_code(int n, const std::function<void(const Diagram&, const Ordinal&)>& fn, ShardSpec shard = {},
                        std::size_t lane = 0, std::size_t lanes = 1);

std::vector<Diagram> generate_flat_codes(int n, ShardSpec shard = {});

/// Visit sequence 1 2 .. 2k 1 2k 2 2k-1 .. k k+1; labels up to k positive,
/// the rest negative. 2k crossings and height k.
Diagram spiral(int k);

struct Census {
  int n = 0;
  std::size_t total = 0;
  std::size_t prime = 0;
  std::size_t equality = 0;                 // diagrams with n = 2h
  std::map<int, std::size_t> heights;       // h -> count
  std::vector<std::string> violations;      // codes with n < 2h

  Census& operator+=(const Census& other);
  friend bool operator==(const Census&, const Census&) = default;
};

struct MachineryCensus {
  int n = 0;
  std::size_t prime = 0;
  std::size_t counting_identity = 0;  // failure counts per check
  std::size_t type34 = 0;
  std::size_t regions = 0;
  std::size_t shared_edge = 0;
  std::size_t distance = 0;
  std::size_t chain_lemmas = 0;
  std::size_t bound = 0;              // no minimal shortcut with c0 + 2 >= c2
  std::size_t bound_truncated = 0;    // shortcut scan hit the cap
  std::size_t c0_ge_q_minus_2 = 0;    // on the shortcut found by the bound scan
  std::size_t q_ge_c2 = 0;
  std::size_t one_sided = 0;          // exceptional crossings examined
  std::size_t two_sided = 0;
  std::array<std::size_t, 3> chains_applicable{};
  std::vector<std::string> failures;  // "check: code"

  MachineryCensus& operator+=(const MachineryCensus& other);
  std::size_t failure_count() const;
  friend bool operator==(const MachineryCensus&, const MachineryCensus&) = default;
};

struct DecompositionCensus {
  int n = 0;
  std::size_t non_prime = 0;
  std::size_t contractions = 0;  // two-point witnesses checked
  std::size_t splits = 0;        // one-point witnesses checked
  std::size_t decompositions = 0;
  std::vector<std::string> failures;

  DecompositionCensus& operator+=(const DecompositionCensus& other);
  friend bool operator==(const DecompositionCensus&, const DecompositionCensus&) = default;
};

/// First diagram, in generation order, on which a check applies nonvacuously.
struct LemmaFixture {
  Ordinal ordinal;
  std::string code;
  std::vector<std::size_t> shortcut;  // arcs of the canonical minimal shortcut

  friend bool operator==(const LemmaFixture&, const LemmaFixture&) = default;
};

struct VerifyOptions {
  int max_n = 5;
  int machinery_max_n = 5;  // prime machinery runs for 1 <= n <= min(max_n, this)
  ShardSpec shard;
  std::size_t jobs = 1;
};

struct VerifyReport {
  int max_n = 0;
  int machinery_max_n = 0;
  std::vector<Census> theorem;
  std::vector<MachineryCensus> machinery;  // n = 1 .. machinery_max_n
  std::vector<DecompositionCensus> decomposition;
  std::map<std::string, LemmaFixture> fixtures;  // lemma2_one_sided, lemma2_two_sided, lemma3, lemma4, lemma5

  /// Adds the results of another shard; both must cover the same range.
  VerifyReport& operator+=(const VerifyReport& other);
  std::size_t violation_count() const;
  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/// n >= 2h for every realizable flat diagram with n <= n_max.
std::vector<Census> verify_theorem_campaign(int n_max, ShardSpec shard = {}, std::size_t jobs = 1);

/// The full campaign: theorem census, prime machinery on prime diagrams and
/// decomposition checks on non-prime ones.
VerifyReport verify(const VerifyOptions& options);

/// Gamma-module checks and the shortcut bound on one prime diagram.
void check_prime_machinery(const Diagram& f, const Ordinal& ordinal, MachineryCensus& census,
                           std::map<std::string, LemmaFixture>& fixtures);

/// Contraction, splitting and full decomposition checks on one non-prime diagram.
void check_decomposition(const Diagram& f, DecompositionCensus& census);

}  // namespace knotoid
