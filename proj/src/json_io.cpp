#include "knotoid/json_io.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace knotoid {

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing member \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(std::string("bad member \"") + key + "\"");
  }
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing member \"") + key + "\"");
  return j.at(key);
}

const Json& array_member(const Json& j, const char* key) {
  const Json& a = member(j, key);
  if (!a.is_array()) throw std::invalid_argument(std::string("member \"") + key + "\" is not an array");
  return a;
}

}  // namespace

Json to_json(const Shortcut& s) { return Json{{"length", s.length()}, {"arcs", s.arcs}, {"faces", s.faces}}; }

Json to_json(const PrimalityWitness& w) {
  return Json{{"kind", to_string(w.kind)},
              {"arcs", w.arcs},
              {"faces", {w.faces.first, w.faces.second}},
              {"side_a", w.side_a},
              {"side_b", w.side_b}};
}

Json to_json(const Decomposition& d) {
  Json pieces = Json::array();
  for (const auto& p : d.pieces) pieces.push_back(serialize(p));
  Json trace = Json::array();
  for (const auto& s : d.trace)
    trace.push_back(Json{{"kind", to_string(s.kind)}, {"input", s.input}, {"witness", to_json(s.witness)}, {"outputs", s.outputs}});
  return Json{{"pieces", pieces}, {"trace", trace}};
}

Json to_json(const GammaReport& r) {
  Json crossings = Json::array();
  for (int c = 1; c <= r.crossings; ++c) {
    const auto i = static_cast<std::size_t>(c - 1);
    crossings.push_back(Json{{"label", c},
                             {"type", r.crossing_type[i]},
                             {"exceptional", to_string(r.exceptional[i])},
                             {"framed_by", r.framed_by[i]},
                             {"corner_faces", r.corner_faces[i]}});
  }
  Json arcs = Json::array();
  for (std::size_t a = 0; a < r.border.size(); ++a)
    arcs.push_back(Json{{"arc", a},
                        {"gamma_edge", r.is_gamma_edge[a] != 0},
                        {"border", to_string(r.border[a])},
                        {"faces", {r.arc_faces[a].first, r.arc_faces[a].second}}});
  Json chains = Json::array();
  for (const auto& ch : r.chains)
    chains.push_back(Json{{"side", to_string(ch.side)},
                          {"endpoints", ch.endpoints},
                          {"arcs", ch.arcs},
                          {"passes_regular", ch.passes_regular},
                          {"two_sided_count", ch.two_sided_count},
                          {"type2_count", ch.type2_count},
                          {"true_chain", ch.is_true_chain}});
  Json self_chains = Json::array();
  for (const auto& ch : r.self_chains)
    self_chains.push_back(
        Json{{"crossing", ch.crossing}, {"side", to_string(ch.side)}, {"arcs", ch.arcs}, {"passed", ch.passed}});
  return Json{{"crossings", r.crossings},
              {"height", r.height},
              {"shortcut", to_json(r.shortcut)},
              {"counts", r.counts},
              {"regions", r.regions},
              {"gamma_edges", r.gamma_edges},
              {"crossing", crossings},
              {"arc", arcs},
              {"u", r.u},
              {"v", r.v},
              {"u_sidedness", to_string(r.u_sidedness)},
              {"v_sidedness", to_string(r.v_sidedness)},
              {"chains", chains},
              {"self_chains", self_chains},
              {"c0_set", r.c0_set},
              {"c2_set", r.c2_set},
              {"q", r.q}};
}

Json to_json(const MinimalityResult& m) {
  return Json{{"verdict", to_string(m.verdict)},
              {"k", m.k},
              {"cr", m.cr},
              {"bridge",
               {{"kind", m.bridge.kind == Pass::Over ? "OVER" : "UNDER"},
                {"start", m.bridge.start},
                {"length", m.bridge.length}}}};
}

Json to_json(const LaurentPolynomial& p) {
  Json terms = Json::object();
  for (const auto& [e, c] : p.terms()) terms[std::to_string(e)] = c;
  return Json{{"text", p.to_string()}, {"terms", terms}};
}

Json to_json(const Census& c) {
  Json heights = Json::object();
  for (const auto& [h, count] : c.heights) heights[std::to_string(h)] = count;
  return Json{{"n", c.n},
              {"total", c.total},
              {"prime", c.prime},
              {"equality", c.equality},
              {"heights", heights},
              {"violations", c.violations}};
}

Json to_json(const MachineryCensus& m) {
  return Json{{"n", m.n},
              {"prime", m.prime},
              {"failed",
               {{"counting_identity", m.counting_identity},
                {"type34", m.type34},
                {"regions", m.regions},
                {"shared_edge", m.shared_edge},
                {"distance", m.distance},
                {"chain_lemmas", m.chain_lemmas},
                {"bound", m.bound},
                {"bound_truncated", m.bound_truncated},
                {"c0_ge_q_minus_2", m.c0_ge_q_minus_2},
                {"q_ge_c2", m.q_ge_c2}}},
              {"one_sided", m.one_sided},
              {"two_sided", m.two_sided},
              {"chains_applicable", m.chains_applicable},
              {"failures", m.failures}};
}

Json to_json(const DecompositionCensus& d) {
  return Json{{"n", d.n},
              {"non_prime", d.non_prime},
              {"contractions", d.contractions},
              {"splits", d.splits},
              {"decompositions", d.decompositions},
              {"failures", d.failures}};
}

Json to_json(const LemmaFixture& f) {
  return Json{{"ordinal", {{"n", f.ordinal.n}, {"sequence", f.ordinal.sequence}, {"mask", f.ordinal.mask}}},
              {"code", f.code},
              {"shortcut", f.shortcut}};
}

Json to_json(const VerifyReport& r, const ShardSpec& shard) {
  Json j;
  j["max_n"] = r.max_n;
  j["machinery_max_n"] = r.machinery_max_n;
  if (shard.count > 1) j["shard"] = {{"index", shard.index}, {"count", shard.count}};
  Json theorem = Json::array(), machinery = Json::array(), decomposition = Json::array();
  for (const auto& c : r.theorem) theorem.push_back(to_json(c));
  for (const auto& m : r.machinery) machinery.push_back(to_json(m));
  for (const auto& d : r.decomposition) decomposition.push_back(to_json(d));
  j["theorem"] = theorem;
  j["machinery"] = machinery;
  j["decomposition"] = decomposition;
  Json fixtures = Json::object();
  for (const auto& [key, f] : r.fixtures) fixtures[key] = to_json(f);
  j["fixtures"] = fixtures;
  j["violation_count"] = r.violation_count();
  return j;
}

ShardedReport verify_report_from_json(const Json& j) {
  ShardedReport out;
  auto& r = out.report;
  r.max_n = get<int>(j, "max_n");
  r.machinery_max_n = get<int>(j, "machinery_max_n");
  if (j.contains("shard")) {
    out.shard.index = get<std::size_t>(j["shard"], "index");
    out.shard.count = get<std::size_t>(j["shard"], "count");
    if (out.shard.count == 0 || out.shard.index >= out.shard.count) throw std::invalid_argument("bad shard member");
  }
  for (const auto& c : array_member(j, "theorem")) {
    Census x;
    x.n = get<int>(c, "n");
    x.total = get<std::size_t>(c, "total");
    x.prime = get<std::size_t>(c, "prime");
    x.equality = get<std::size_t>(c, "equality");
    for (const auto& [h, count] : member(c, "heights").items()) x.heights[std::stoi(h)] = count.get<std::size_t>();
    x.violations = get<std::vector<std::string>>(c, "violations");
    r.theorem.push_back(std::move(x));
  }
  for (const auto& m : array_member(j, "machinery")) {
    MachineryCensus x;
    x.n = get<int>(m, "n");
    x.prime = get<std::size_t>(m, "prime");
    const Json& f = member(m, "failed");
    x.counting_identity = get<std::size_t>(f, "counting_identity");
    x.type34 = get<std::size_t>(f, "type34");
    x.regions = get<std::size_t>(f, "regions");
    x.shared_edge = get<std::size_t>(f, "shared_edge");
    x.distance = get<std::size_t>(f, "distance");
    x.chain_lemmas = get<std::size_t>(f, "chain_lemmas");
    x.bound = get<std::size_t>(f, "bound");
    x.bound_truncated = get<std::size_t>(f, "bound_truncated");
    x.c0_ge_q_minus_2 = get<std::size_t>(f, "c0_ge_q_minus_2");
    x.q_ge_c2 = get<std::size_t>(f, "q_ge_c2");
    x.one_sided = get<std::size_t>(m, "one_sided");
    x.two_sided = get<std::size_t>(m, "two_sided");
    x.chains_applicable = get<std::array<std::size_t, 3>>(m, "chains_applicable");
    x.failures = get<std::vector<std::string>>(m, "failures");
    r.machinery.push_back(std::move(x));
  }
  for (const auto& d : array_member(j, "decomposition")) {
    DecompositionCensus x;
    x.n = get<int>(d, "n");
    x.non_prime = get<std::size_t>(d, "non_prime");
    x.contractions = get<std::size_t>(d, "contractions");
    x.splits = get<std::size_t>(d, "splits");
    x.decompositions = get<std::size_t>(d, "decompositions");
    x.failures = get<std::vector<std::string>>(d, "failures");
    r.decomposition.push_back(std::move(x));
  }
  for (const auto& [key, f] : member(j, "fixtures").items()) {
    LemmaFixture x;
    const Json& o = member(f, "ordinal");
    x.ordinal = {get<int>(o, "n"), get<std::uint64_t>(o, "sequence"), get<std::uint32_t>(o, "mask")};
    x.code = get<std::string>(f, "code");
    x.shortcut = get<std::vector<std::size_t>>(f, "shortcut");
    r.fixtures[key] = std::move(x);
  }
  return out;
}

VerifyReport merge_shards(const std::vector<ShardedReport>& parts) {
  if (parts.empty()) throw std::invalid_argument("nothing to merge");
  const std::size_t m = parts.front().shard.count;
  if (parts.size() != m) throw std::invalid_argument("expected " + std::to_string(m) + " shard reports");
  std::vector<char> seen(m, 0);
  for (const auto& p : parts) {
    if (p.shard.count != m) throw std::invalid_argument("shard reports disagree on the shard count");
    if (seen[p.shard.index]++) throw std::invalid_argument("shard " + std::to_string(p.shard.index) + " given twice");
  }
  // Start from an empty report over the same range so that merge order is
  // irrelevant.
  VerifyReport out = parts.front().report;
  auto reset = [](auto& list) {
    for (auto& x : list) {
      const int n = x.n;
      x = {};
      x.n = n;
    }
  };
  reset(out.theorem);
  reset(out.machinery);
  reset(out.decomposition);
  out.fixtures.clear();
  for (const auto& p : parts) out += p.report;
  return out;
}

}  // namespace knotoid
