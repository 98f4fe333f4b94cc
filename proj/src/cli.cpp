#include "knotoid/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "knotoid/affine.hpp"
#include "knotoid/bridge.hpp"
#include "knotoid/enumerate.hpp"
#include "knotoid/gamma.hpp"
#include "knotoid/json_io.hpp"
#include "knotoid/planar.hpp"
#include "knotoid/primality.hpp"
#include "knotoid/render.hpp"

#ifndef KNOTOID_VERSION
#define KNOTOID_VERSION "0.0.0"
#endif

namespace knotoid::cli {

const char* version() { return KNOTOID_VERSION; }

namespace {

// Bad input: reported on the diagnostic stream, exit 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  bool json = false;
  bool stable = false;
};

struct Input {
  std::string code;
  std::string file;
};

void add_output(CLI::App* sub, Output& o) {
  sub->add_flag("--json", o.json, "JSON output");
  sub->add_flag("--stable", o.stable, "omit the version field from JSON output");
}

void add_input(CLI::App* sub, Input& in) {
  sub->add_option("code", in.code, "diagram code, e.g. \"flatknotoid 1+ 1+\"");
  sub->add_option("--file", in.file, "read codes from a file, one per line");
}

std::vector<std::string> read_codes(const Input& in) {
  if (!in.code.empty() && !in.file.empty()) throw InputError("give either a code or --file, not both");
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw InputError("cannot read " + in.file);
    std::vector<std::string> codes;
    std::string line;
    while (std::getline(f, line)) {
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      const auto e = line.find_last_not_of(" \t\r");
      codes.push_back(line.substr(b, e - b + 1));
    }
    if (codes.empty()) throw InputError(in.file + " holds no codes");
    return codes;
  }
  if (in.code.empty()) throw InputError("no input code (positional argument or --file)");
  return {in.code};
}

Diagram parse_input(const std::string& text) {
  try {
    return parse_code(text);
  } catch (const CodeError& e) {
    throw InputError(std::string(to_string(e.kind())) + ": " + e.detail());
  }
}

void require_open(const Diagram& d, const char* what) {
  if (!d.is_open()) throw InputError(std::string(what) + " needs an open diagram (flatknotoid or knotoid)");
}

void require_knot(const Diagram& d, const char* what) {
  if (d.kind() != DiagramKind::Knot) throw InputError(std::string(what) + " needs a knot code");
  if (d.crossing_count() < 1) throw InputError(std::string(what) + " needs at least one crossing");
}

std::string envelope(const std::string& command, const std::optional<std::string>& input, Json result,
                     const Output& o) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  if (input) j["input"] = *input;
  j["result"] = std::move(result);
  if (!o.stable) j["version"] = version();
  return j.dump(2) + "\n";
}

const char* kind_name(DiagramKind k) {
  switch (k) {
    case DiagramKind::Flat: return "flatknotoid";
    case DiagramKind::Knotoid: return "knotoid";
    case DiagramKind::Knot: return "knot";
  }
  return "";
}

std::string join(const auto& values, const char* sep = " ") { return fmt::format("{}", fmt::join(values, sep)); }

std::vector<std::size_t> parse_arcs(const std::string& text) {
  std::vector<std::size_t> arcs;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0) throw InputError("bad arc index \"" + tok + "\"");
    arcs.push_back(static_cast<std::size_t>(v));
  }
  return arcs;
}

// Per-code commands. Each returns the exit status for that code.

int cmd_validate(const std::string& text, const Output& o, std::ostream& out) {
  try {
    const Diagram d = parse_code(text);
    const std::string canon = canonical_code(d);
    if (o.json)
      out << envelope("validate", canon,
                      Json{{"valid", true}, {"kind", kind_name(d.kind())}, {"crossings", d.crossing_count()}}, o);
    else
      out << fmt::format("valid {} crossings={} canonical={}\n", kind_name(d.kind()), d.crossing_count(), canon);
    return 0;
  } catch (const CodeError& e) {
    if (o.json)
      out << envelope("validate", std::nullopt,
                      Json{{"valid", false}, {"error", {{"kind", to_string(e.kind())}, {"detail", e.detail()}}}}, o);
    else
      out << fmt::format("invalid {}: {}\n", to_string(e.kind()), e.detail());
    return 1;
  }
}

int cmd_height(const Diagram& d, const Output& o, std::ostream& out) {
  require_open(d, "height");
  const auto h = height(d);
  if (o.json)
    out << envelope("height", canonical_code(d), Json{{"height", h.height}, {"shortcut", to_json(h.shortcut)}}, o);
  else
    out << fmt::format("h={}\n", h.height);
  return 0;
}

int cmd_gamma(const Diagram& input, const std::string& arcs_text, const Output& o, std::ostream& out) {
  require_open(input, "gamma");
  const Diagram f = forget_over_under(input);
  const auto map = trace_faces(f);
  const DualGraph dual(map);
  const int h = height(map, dual).height;
  Shortcut s = height(map, dual).shortcut;
  if (!arcs_text.empty()) {
    try {
      s = shortcut_from_arcs(map, parse_arcs(arcs_text));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  GammaReport r;
  try {
    r = classify(f, map, s, h);
  } catch (const NotMinimalError& e) {
    throw InputError(e.what());
  }
  const bool prime = is_prime(f).prime;
  const bool counting = check_counting_identity(r);
  const bool type34 = check_no_type34(r);
  const bool regions = check_gamma_regions(r);
  const bool shared = check_shared_edge_property(f, r);
  const auto dist = check_exceptional_distances(dual, r);
  const auto chains = check_chain_lemmas(r);
  const bool all_ok = counting && type34 && regions && shared && dist.ok() && chains.ok();
  if (o.json) {
    Json j = to_json(r);
    j["prime"] = prime;
    j["checks"] = {{"counting_identity", counting},
                   {"no_type34", type34},
                   {"gamma_regions", regions},
                   {"shared_edge", shared},
                   {"distances", {{"one_sided", dist.one_sided}, {"two_sided", dist.two_sided}, {"failed", dist.failed}}},
                   {"chain_lemmas", {{"applicable", chains.applicable}, {"failed", chains.failed}}}};
    out << envelope("gamma", canonical_code(input), j, o);
  } else {
    auto ok = [](bool b) { return b ? "ok" : "FAIL"; };
    out << fmt::format("h={} cr={} prime={} shortcut=[{}]\n", r.height, r.crossings, prime ? "yes" : "no",
                       join(r.shortcut.arcs));
    out << fmt::format("c0={} c1={} c2={} c3={} c4={} q={} C0=[{}] C2=[{}]\n", r.c(0), r.c(1), r.c(2), r.c(3), r.c(4),
                       r.q, join(r.c0_set), join(r.c2_set));
    out << fmt::format(
        "counting_identity={} no_type34={} gamma_regions={} shared_edge={} distances={} (one_sided={} two_sided={}) "
        "chain_lemmas={} (applicable={})\n",
        ok(counting), ok(type34), ok(regions), ok(shared), ok(dist.ok()), dist.one_sided, dist.two_sided,
        ok(chains.ok()), join(chains.applicable, ","));
  }
  // The checks are claims about prime diagrams only.
  return prime && !all_ok ? 1 : 0;
}

int cmd_prime(const Diagram& input, const Output& o, std::ostream& out) {
  require_open(input, "prime");
  const Diagram f = forget_over_under(input);
  const auto p = is_prime(f);
  if (o.json) {
    Json j{{"prime", p.prime}};
    if (p.witness) j["witness"] = to_json(*p.witness);
    out << envelope("prime", canonical_code(input), j, o);
  } else if (p.prime) {
    out << "prime\n";
  } else {
    const auto& w = *p.witness;
    out << fmt::format("not prime: {} arcs=[{}] side_a=[{}] side_b=[{}]\n", to_string(w.kind), join(w.arcs),
                       join(w.side_a), join(w.side_b));
  }
  return 0;
}

int cmd_decompose(const Diagram& input, const Output& o, std::ostream& out) {
  require_open(input, "decompose");
  const auto dec = prime_decompose(forget_over_under(input));
  if (o.json) {
    out << envelope("decompose", canonical_code(input), to_json(dec), o);
    return 0;
  }
  for (const auto& s : dec.trace)
    out << fmt::format("step {} arcs=[{}]: {} -> {}\n", to_string(s.kind), join(s.witness.arcs), s.input,
                       join(s.outputs, " | "));
  for (const auto& p : dec.pieces) out << fmt::format("piece {}\n", serialize(p));
  return 0;
}

int cmd_affine(const Diagram& d, const Output& o, std::ostream& out) {
  if (!d.has_passes()) throw InputError("affine needs over/under data (knotoid or knot code)");
  const auto p = affine_polynomial(d);
  const auto b = bounds(d);
  if (o.json) {
    Json crossings = Json::array();
    int c = 0;
    for (const auto& x : crossing_data(d))
      crossings.push_back({{"label", ++c}, {"a", x.a}, {"b", x.b}, {"eps", x.eps}, {"weight", x.weight}});
    out << envelope("affine", canonical_code(d),
                    Json{{"polynomial", to_json(p)},
                         {"d_max", d_max(p)},
                         {"height_lb", b.height_lb},
                         {"crossing_lb", b.crossing_lb},
                         {"crossings", crossings}},
                    o);
  } else {
    out << fmt::format("P={} d_max={} height_lb={} crossing_lb={}\n", p.to_string(), d_max(p), b.height_lb,
                       b.crossing_lb);
  }
  return 0;
}

int cmd_bridge(const Diagram& d, const Output& o, std::ostream& out) {
  require_knot(d, "bridge");
  const auto m = minimality_check(d);
  if (o.json) {
    out << envelope("bridge", canonical_code(d), to_json(m), o);
  } else {
    out << fmt::format("{} k={} cr={} bridge={} start={} length={}\n", to_string(m.verdict), m.k, m.cr,
                       m.bridge.kind == Pass::Over ? "OVER" : "UNDER", m.bridge.start, m.bridge.length);
  }
  return m.verdict == Verdict::NotMinimal ? 1 : 0;
}

int cmd_render(const Diagram& d, bool shortcut, const std::string& path, std::ostream& out) {
  if (shortcut) require_open(d, "render --shortcut");
  RenderOptions opts;
  opts.shortcut = shortcut;
  const std::string svg = render_svg(d, opts);
  if (path.empty()) {
    out << svg;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!(f << svg)) throw InputError("cannot write " + path);
  return 0;
}

void verify_text(const VerifyReport& r, std::ostream& out) {
  for (const auto& c : r.theorem) {
    std::vector<std::string> hs;
    for (const auto& [h, count] : c.heights) hs.push_back(fmt::format("{}:{}", h, count));
    out << fmt::format("theorem n={} total={} prime={} equality={} heights={} violations={}\n", c.n, c.total, c.prime,
                       c.equality, join(hs, ","), c.violations.size());
  }
  for (const auto& m : r.machinery) {
    out << fmt::format(
        "machinery n={} prime={} failures={} one_sided={} two_sided={} lemma3={} lemma4={} lemma5={}\n", m.n,
        m.prime, m.failure_count(), m.one_sided, m.two_sided, m.chains_applicable[0], m.chains_applicable[1],
        m.chains_applicable[2]);
  }
  for (const auto& d : r.decomposition)
    out << fmt::format("decomposition n={} non_prime={} splits={} contractions={} failures={}\n", d.n, d.non_prime,
                       d.splits, d.contractions, d.failures.size());
  for (const auto& [key, f] : r.fixtures) out << fmt::format("fixture {} {} shortcut=[{}]\n", key, f.code, join(f.shortcut));
  for (const auto& c : r.theorem)
    for (const auto& v : c.violations) out << "violation theorem " << v << "\n";
  for (const auto& m : r.machinery)
    for (const auto& v : m.failures) out << "violation machinery " << v << "\n";
  for (const auto& d : r.decomposition)
    for (const auto& v : d.failures) out << "violation decomposition " << v << "\n";
  out << fmt::format("violations={}\n", r.violation_count());
}

ShardedReport read_report(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read " + path);
  try {
    const Json j = Json::parse(f);
    if (j.value("schema", 0) != 1 || j.value("command", std::string()) != "verify" || !j.contains("result"))
      throw InputError(path + " is not a verify report");
    return verify_report_from_json(j["result"]);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation on knotoid and flat knotoid diagrams.", "knotoid"};
  app.set_help_all_flag("--help-all", "help for all subcommands");
  bool show_version = false;
  app.add_flag("--version", show_version, "print the version and exit");

  Input in;
  Output o;
  std::string arcs_text, out_path, shard_text;
  bool overlay = false, count_only = false;
  int n = 0, k = 0, max_n = 5, machinery_max_n = 5;
  std::size_t jobs = 1;
  std::vector<std::string> merge_files;

  std::vector<CLI::App*> per_code;
  auto code_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    add_input(sub, in);
    add_output(sub, o);
    per_code.push_back(sub);
    return sub;
  };
  auto* validate = code_command("validate", "check a code and print its canonical form");
  auto* height_cmd = code_command("height", "height of an open diagram");
  auto* gamma = code_command("gamma", "gamma-edge classification against a minimal shortcut");
  gamma->add_option("--arcs", arcs_text, "shortcut as crossed arcs, e.g. \"4 6 11 9\" (default: canonical)");
  auto* prime = code_command("prime", "primality test with a witness circle");
  auto* decompose = code_command("decompose", "prime decomposition");
  auto* affine = code_command("affine", "affine index polynomial and the bounds it gives");
  auto* bridge = code_command("bridge", "bridge-length non-minimality test for knot diagrams");
  auto* render = code_command("render", "SVG drawing");
  render->add_option("--out", out_path, "output file (default: standard output)");
  render->add_flag("--shortcut", overlay, "overlay the canonical minimal shortcut");

  auto* enumerate = app.add_subcommand("enumerate", "list realizable flat codes with n crossings");
  enumerate->add_option("-n,--n", n, "crossing count")->required()->check(CLI::Range(0, 16));
  enumerate->add_option("--shard", shard_text, "shard i/m");
  enumerate->add_flag("--count", count_only, "print the count only");
  add_output(enumerate, o);

  auto* verify_cmd = app.add_subcommand("verify", "exhaustive verification campaign");
  verify_cmd->add_option("--max-n", max_n, "largest crossing count")->check(CLI::Range(0, 9));
  verify_cmd->add_option("--machinery-max-n", machinery_max_n, "largest crossing count for the prime machinery")
      ->check(CLI::Range(-1, 9));
  verify_cmd->add_option("--shard", shard_text, "shard i/m");
  verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  verify_cmd->add_option("--merge", merge_files, "merge shard reports (JSON files) instead of running");
  add_output(verify_cmd, o);

  auto* spiral_cmd = app.add_subcommand("spiral", "the equality family spiral(k)");
  spiral_cmd->add_option("k", k, "k >= 1")->required()->check(CLI::Range(1, 64));
  add_output(spiral_cmd, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (show_version) {
    out << "knotoid " << version() << "\n";
    return 0;
  }

  try {
    for (auto* sub : per_code) {
      if (!sub->parsed()) continue;
      const std::string name = sub->get_name();
      int status = 0;
      for (const auto& text : read_codes(in)) {
        if (sub == validate) {
          status = std::max(status, cmd_validate(text, o, out));
          continue;
        }
        const Diagram d = parse_input(text);
        if (sub == height_cmd) status = std::max(status, cmd_height(d, o, out));
        else if (sub == gamma) status = std::max(status, cmd_gamma(d, arcs_text, o, out));
        else if (sub == prime) status = std::max(status, cmd_prime(d, o, out));
        else if (sub == decompose) status = std::max(status, cmd_decompose(d, o, out));
        else if (sub == affine) status = std::max(status, cmd_affine(d, o, out));
        else if (sub == bridge) status = std::max(status, cmd_bridge(d, o, out));
        else if (sub == render) {
          status = std::max(status, cmd_render(d, overlay, out_path, out));
          break;  // one drawing per invocation
        }
      }
      return status;
    }

    ShardSpec shard;
    if (!shard_text.empty()) {
      try {
        shard = parse_shard(shard_text);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
    }

    if (enumerate->parsed()) {
      const auto codes = generate_flat_codes(n, shard);
      if (o.json) {
        Json list = Json::array();
        if (!count_only)
          for (const auto& d : codes) list.push_back(serialize(d));
        Json j{{"n", n}, {"count", codes.size()}};
        if (!count_only) j["codes"] = list;
        out << envelope("enumerate", std::nullopt, j, o);
      } else if (count_only) {
        out << codes.size() << "\n";
      } else {
        for (const auto& d : codes) out << serialize(d) << "\n";
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      VerifyReport report;
      ShardSpec shown;
      if (!merge_files.empty()) {
        std::vector<ShardedReport> parts;
        for (const auto& f : merge_files) parts.push_back(read_report(f));
        try {
          report = merge_shards(parts);
        } catch (const std::invalid_argument& e) {
          throw InputError(e.what());
        }
      } else {
        VerifyOptions opts;
        opts.max_n = max_n;
        opts.machinery_max_n = machinery_max_n;
        opts.shard = shard;
        opts.jobs = jobs;
        report = verify(opts);
        shown = shard;
      }
      if (o.json) out << envelope("verify", std::nullopt, to_json(report, shown), o);
      else verify_text(report, out);
      return report.violation_count() == 0 ? 0 : 1;
    }

    if (spiral_cmd->parsed()) {
      const Diagram d = spiral(k);
      const int h = height(d).height;
      if (o.json)
        out << envelope("spiral", std::nullopt,
                        Json{{"k", k}, {"code", serialize(d)}, {"crossings", d.crossing_count()}, {"height", h}}, o);
      else
        out << serialize(d) << "\n";
      return 0;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << app.help();
  return 2;
}

}  // namespace knotoid::cli
