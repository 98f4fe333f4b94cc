#pragma once

// JSON forms of the analysis results. Keys keep insertion order, so equal
// values always serialize to identical bytes.

#include <json.hpp>

#include "knotoid/affine.hpp"
#include "knotoid/bridge.hpp"
#include "knotoid/enumerate.hpp"
#include "knotoid/gamma.hpp"
#include "knotoid/planar.hpp"
#include "knotoid/primality.hpp"

namespace knotoid {

using Json = nlohmann::ordered_json;

Json to_json(const Shortcut& s);
Json to_json(const PrimalityWitness& w);
Json to_json(const Decomposition& d);
Json to_json(const GammaReport& r);
Json to_json(const MinimalityResult& m);
Json to_json(const LaurentPolynomial& p);

Json to_json(const Census& c);
Json to_json(const MachineryCensus& m);
Json to_json(const DecompositionCensus& d);
Json to_json(const LemmaFixture& f);

/// Report body without schema/version envelope. A sharded report carries a
/// "shard" member; merged and unsharded reports do not.
Json to_json(const VerifyReport& r, const ShardSpec& shard = {});

struct ShardedReport {
  VerifyReport report;
  ShardSpec shard;
};

/// Inverse of to_json(VerifyReport). Throws std::invalid_argument on a
/// malformed document.
ShardedReport verify_report_from_json(const Json& j);

/// Merges shard reports; the shards must cover 0..m-1 exactly once (a single
/// unsharded report is also accepted).
VerifyReport merge_shards(const std::vector<ShardedReport>& parts);

}  // namespace knotoid
