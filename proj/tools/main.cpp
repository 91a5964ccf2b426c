// Command-line front end: point-set ingestion, Groebner/border-basis
// subcommands, exhaustive (quasi) order ideal enumeration, verification of
// serialized results, benchmarking, and point-set generation.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "borderbases/borderbases.hpp"

namespace bb = borderbases;
using bb::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bb::InputError("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_output(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
    if (!contents.empty() && contents.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bb::InputError("cannot write '" + path + "'");
  out << contents;
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct CommonOptions {
  std::string input;
  std::string output_format = "json";
  std::string output_file;
  bool parallel = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_parallel = true) {
  cmd->add_option("--input,-i", opts.input, "point file (JSON or text)")->required();
  cmd->add_option("--output,-o", opts.output_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", opts.output_file, "write output to a file instead of stdout");
  if (with_parallel) {
    cmd->add_option("--parallel", opts.parallel, "explore branches on worker threads")
        ->transform(CLI::CheckedTransformer(std::map<std::string, bool>{{"on", true}, {"off", false}}));
  }
}

struct OrderingOptions {
  std::string kind = "degrevlex";
  std::string perm;
};

void add_ordering(CLI::App* cmd, OrderingOptions& opts) {
  cmd->add_option("--order", opts.kind, "term ordering")
      ->check(CLI::IsMember({"degrevlex", "deglex", "lex"}));
  cmd->add_option("--perm", opts.perm,
                  "variable precedence, 1-based, most significant first (e.g. 2,1)");
}

bb::TermOrdering make_ordering(const OrderingOptions& opts, std::size_t arity) {
  bb::TermOrdering::Kind kind = bb::TermOrdering::Kind::DegRevLex;
  if (opts.kind == "deglex") kind = bb::TermOrdering::Kind::DegLex;
  if (opts.kind == "lex") kind = bb::TermOrdering::Kind::Lex;
  if (opts.perm.empty()) return {kind, arity};
  std::vector<std::size_t> perm;
  std::stringstream ss(opts.perm);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t v = std::stoull(tok);
    if (v < 1 || v > arity) throw bb::InputError("permutation index out of range: " + tok);
    perm.push_back(v - 1);
  }
  if (perm.size() != arity)
    throw bb::InputError("permutation must list all " + std::to_string(arity) + " variables");
  return {kind, std::move(perm)};
}

json ordering_to_json(const bb::TermOrdering& ord) {
  json perm = json::array();
  for (auto v : ord.permutation()) perm.push_back(v + 1);
  return json{{"kind", ord.to_string()}, {"perm", std::move(perm)}};
}

// Run fn with the typed point set; fn must work for both coefficient fields.
template <typename Fn>
int with_point_file(const std::string& path, Fn&& fn) {
  auto parsed = bb::parse_point_file(read_file(path));
  if (parsed.spec.is_rationals()) return fn(bb::realize_points<bb::Rational>(parsed));
  return fn(bb::realize_points<bb::Fp>(parsed));
}

template <typename K>
json run_meta(const bb::PointSet<K>& x, const std::string& command) {
  return json{{"command", command},
              {"field", bb::field_to_json(x.spec())},
              {"n", x.arity()},
              {"s", x.size()}};
}

template <typename K>
std::string render_pair_text(const bb::BorderPair<K>& pair) {
  std::string out = "O = " + pair.order_ideal.to_string() + "\n";
  for (const auto& g : pair.basis) out += "  " + g.to_string() + "\n";
  return out;
}

template <typename K>
std::string render_enumeration_text(const bb::EnumerationResult<K>& result) {
  std::string out = "pairs: " + std::to_string(result.pairs.size()) +
                    " (raw " + std::to_string(result.raw_count) + ", branches " +
                    std::to_string(result.branch_count) + ")\n";
  for (const auto& p : result.pairs) out += render_pair_text(p);
  return out;
}

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

void report_time(const std::string& what, const Stopwatch& watch) {
  std::cerr << what << ": " << watch.ms() << " ms\n";
}

int run_groebner(const CommonOptions& opts, const OrderingOptions& ord_opts) {
  return with_point_file(opts.input, [&](const auto& x) {
    auto ord = make_ordering(ord_opts, x.arity());
    Stopwatch watch;
    auto result = bb::buchberger_moller(x, ord);
    report_time("groebner", watch);
    if (opts.output_format == "json") {
      json j = run_meta(x, "groebner");
      j["ordering"] = ordering_to_json(ord);
      json basis = json::array();
      for (const auto& g : result.groebner) basis.push_back(bb::polynomial_to_json(g));
      json oi = json::array();
      for (const auto& t : result.order_ideal) oi.push_back(bb::term_to_json(t));
      j["order_ideal"] = std::move(oi);
      j["groebner"] = std::move(basis);
      write_output(opts.output_file, j.dump(2));
    } else {
      std::string out = "O = " + result.order_ideal.to_string() + "\n";
      for (const auto& g : result.groebner) out += "  " + g.to_string() + "\n";
      write_output(opts.output_file, out);
    }
    return kExitOk;
  });
}

template <typename K>
int emit_single_pair(const CommonOptions& opts, const bb::PointSet<K>& x,
                     const bb::BorderPair<K>& pair, const std::string& command) {
  if (opts.output_format == "json") {
    json j = run_meta(x, command);
    j["pair"] = bb::pair_to_json(pair);
    write_output(opts.output_file, j.dump(2));
  } else {
    write_output(opts.output_file, render_pair_text(pair));
  }
  return kExitOk;
}

int run_border(const CommonOptions& opts, const OrderingOptions& ord_opts) {
  return with_point_file(opts.input, [&](const auto& x) {
    auto ord = make_ordering(ord_opts, x.arity());
    Stopwatch watch;
    auto pair = bb::bm_border(x, ord);
    report_time("border", watch);
    return emit_single_pair(opts, x, pair, "border");
  });
}

int run_fg_border(const CommonOptions& opts) {
  return with_point_file(opts.input, [&](const auto& x) {
    Stopwatch watch;
    auto pair = bb::fg_border(x);
    report_time("fg-border", watch);
    return emit_single_pair(opts, x, pair, "fg-border");
  });
}

int run_enumeration(const CommonOptions& opts, const std::string& command, const std::string& engine) {
  return with_point_file(opts.input, [&](const auto& x) {
    using K = typename std::decay_t<decltype(x)>::value_type;
    Stopwatch watch;
    bb::EnumerationResult<K> result;
    bool quasi = command == "all-quasi";
    if (!quasi) {
      result = bb::bm_all_order_ideals(x, opts.parallel);
    } else if (engine == "fg") {
      result = bb::fg_all_quasi_order_ideals(x, opts.parallel);
    } else {
      result = bb::bm_all_quasi_order_ideals(x, opts.parallel);
    }
    report_time(command + " (" + engine + ")", watch);
    if (opts.output_format == "json") {
      json j = bb::enumeration_to_json(result, x.spec(), x.arity(), x.size(), command, engine, quasi);
      write_output(opts.output_file, j.dump(2));
    } else {
      write_output(opts.output_file, render_enumeration_text(result));
    }
    return kExitOk;
  });
}

int run_verify(const CommonOptions& opts, const std::string& pairs_path) {
  return with_point_file(opts.input, [&](const auto& x) {
    using K = typename std::decay_t<decltype(x)>::value_type;
    json doc;
    try {
      doc = json::parse(read_file(pairs_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw bb::InputError("pairs file: " + std::string(e.what()));
    }
    json list = json::array();
    if (doc.is_array()) list = doc;
    else if (doc.contains("pairs")) list = doc["pairs"];
    else if (doc.contains("pair")) list.push_back(doc["pair"]);
    else list.push_back(doc);

    json reports = json::array();
    bool all_pass = true;
    std::string text;
    for (std::size_t i = 0; i < list.size(); ++i) {
      auto pair = bb::pair_from_json<K>(list[i], x.spec(), x.arity(), x.one());
      auto report = bb::verify_border_pair(pair, x);
      all_pass = all_pass && report.pass();
      reports.push_back(json{{"index", i},
                             {"order_ideal", bb::pair_to_json(pair)["order_ideal"]},
                             {"report", bb::report_to_json(report)}});
      text += "pair " + std::to_string(i + 1) + " " + pair.order_ideal.to_string() + ": " +
              (report.pass() ? "pass" : "FAIL") + "\n";
      if (!report.pass()) text += report.to_string();
    }
    if (opts.output_format == "json") {
      write_output(opts.output_file, json{{"command", "verify"},
                                          {"pass", all_pass},
                                          {"pairs", reports}}
                                         .dump(2));
    } else {
      write_output(opts.output_file, text);
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
  });
}

// --- gen ---------------------------------------------------------------

struct GenOptions {
  std::string kind = "random";
  std::string field = "Q";
  std::string roots;
  std::size_t s = 5;
  std::size_t n = 2;
  std::uint64_t seed = 1;
  std::string out;
};

bb::FieldSpec parse_field_flag(const std::string& text) {
  if (text == "Q" || text == "q") return bb::FieldSpec::rationals();
  return bb::FieldSpec::prime_field(std::stoull(text));
}

template <typename K>
json points_to_json(const bb::PointSet<K>& x) {
  json pts = json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    json row = json::array();
    for (const auto& c : x.point(i)) row.push_back(c.to_string());
    pts.push_back(std::move(row));
  }
  return json{{"field", bb::field_to_json(x.spec())}, {"n", x.arity()}, {"points", std::move(pts)}};
}

template <typename K>
std::vector<std::vector<K>> parse_roots(const bb::FieldSpec& spec, const std::string& text) {
  std::vector<std::vector<K>> out;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<K> roots;
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (!item.empty()) roots.push_back(bb::parse_element<K>(spec, item));
    }
    if (roots.empty()) throw bb::InputError("empty root list in --roots");
    out.push_back(std::move(roots));
  }
  if (out.empty()) throw bb::InputError("--roots is required for --kind ci");
  return out;
}

template <typename K>
int emit_generated(const GenOptions& opts, const bb::FieldSpec& spec) {
  bb::PointSet<K> x = [&] {
    if (opts.kind == "ci")
      return bb::generate_complete_intersection<K>(spec, parse_roots<K>(spec, opts.roots));
    return bb::generate_random_points<K>(spec, opts.s, opts.n, opts.seed);
  }();
  write_output(opts.out, points_to_json(x).dump(2));
  return kExitOk;
}

int run_gen(const GenOptions& opts) {
  auto spec = parse_field_flag(opts.field);
  if (spec.is_rationals()) return emit_generated<bb::Rational>(opts, spec);
  return emit_generated<bb::Fp>(opts, spec);
}

// --- bench ---------------------------------------------------------------

struct BenchRow {
  std::string label, digest, command, engine, field;
  std::size_t s = 0, n = 0;
  std::uint64_t pair_count = 0, raw_count = 0, branch_count = 0;
  double wall_ms = 0, dedup_ratio = 1;
};

json row_to_json(const BenchRow& r) {
  return json{{"label", r.label},       {"digest", r.digest},
              {"command", r.command},   {"engine", r.engine},
              {"field", r.field},       {"s", r.s},
              {"n", r.n},               {"pair_count", r.pair_count},
              {"raw_count", r.raw_count}, {"branch_count", r.branch_count},
              {"wall_ms", r.wall_ms},   {"dedup_ratio", r.dedup_ratio}};
}

template <typename K>
BenchRow bench_one(const bb::PointSet<K>& x, const std::string& command, const std::string& engine,
                   bool parallel) {
  BenchRow row;
  row.command = command;
  row.engine = engine;
  row.field = x.spec().to_string();
  row.s = x.size();
  row.n = x.arity();
  row.digest = hex64(fnv1a64(points_to_json(x).dump()));
  Stopwatch watch;
  bb::EnumerationResult<K> result;
  if (command == "all-order-ideals") {
    result = bb::bm_all_order_ideals(x, parallel);
  } else if (command == "all-quasi" && engine == "fg") {
    result = bb::fg_all_quasi_order_ideals(x, parallel);
  } else if (command == "all-quasi") {
    result = bb::bm_all_quasi_order_ideals(x, parallel);
  } else {
    throw bb::InputError("bench supports all-order-ideals and all-quasi, got '" + command + "'");
  }
  row.wall_ms = watch.ms();
  row.pair_count = result.pairs.size();
  row.raw_count = result.raw_count;
  row.branch_count = result.branch_count;
  row.dedup_ratio =
      row.pair_count == 0 ? 1.0 : static_cast<double>(row.raw_count) / static_cast<double>(row.pair_count);
  return row;
}

int run_bench(const std::string& manifest_path, const std::string& format, const std::string& out,
              bool parallel) {
  json manifest;
  try {
    manifest = json::parse(read_file(manifest_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw bb::InputError("manifest: " + std::string(e.what()));
  }
  if (!manifest.is_array()) throw bb::InputError("manifest must be a JSON array");

  std::vector<BenchRow> rows;
  for (const auto& entry : manifest) {
    std::string command = entry.contains("subcommand") ? entry["subcommand"].get<std::string>()
                                                       : entry.at("command").get<std::string>();
    std::string engine = entry.value("engine", std::string("bm"));
    std::string label = entry.value("label", std::string());

    bb::ParsedPointFile parsed;
    if (entry.contains("input")) {
      parsed = bb::parse_point_file(read_file(entry["input"].get<std::string>()));
    } else if (entry.contains("gen")) {
      const json& g = entry["gen"];
      auto spec = bb::field_from_json(g.at("field"));
      json pf;
      if (g.at("kind") == "ci") {
        json roots = g.at("roots");
        auto build = [&](auto k_tag) {
          using K = decltype(k_tag);
          std::vector<std::vector<K>> rr;
          for (const auto& group : roots) {
            std::vector<K> row;
            for (const auto& item : group)
              row.push_back(bb::parse_element<K>(spec, item.get<std::string>()));
            rr.push_back(std::move(row));
          }
          return points_to_json(bb::generate_complete_intersection<K>(spec, rr));
        };
        pf = spec.is_rationals() ? build(bb::Rational{}) : build(bb::Fp{});
      } else {
        auto s = g.at("s").get<std::size_t>();
        auto n = g.at("n").get<std::size_t>();
        auto seed = g.value("seed", std::uint64_t{1});
        pf = spec.is_rationals()
                 ? points_to_json(bb::generate_random_points<bb::Rational>(spec, s, n, seed))
                 : points_to_json(bb::generate_random_points<bb::Fp>(spec, s, n, seed));
      }
      parsed = bb::parse_point_file_json(pf.dump());
    } else {
      throw bb::InputError("manifest entry needs 'input' or 'gen'");
    }

    BenchRow row = parsed.spec.is_rationals()
                       ? bench_one(bb::realize_points<bb::Rational>(parsed), command, engine, parallel)
                       : bench_one(bb::realize_points<bb::Fp>(parsed), command, engine, parallel);
    row.label = label;
    rows.push_back(std::move(row));
  }

  if (format == "json") {
    json j = json::array();
    for (const auto& r : rows) j.push_back(row_to_json(r));
    write_output(out, j.dump(2));
  } else {
    std::string text = "label\tcommand\tengine\tfield\ts\tn\tpairs\traw\tbranches\tms\n";
    for (const auto& r : rows) {
      text += r.label + "\t" + r.command + "\t" + r.engine + "\t" + r.field + "\t" +
              std::to_string(r.s) + "\t" + std::to_string(r.n) + "\t" +
              std::to_string(r.pair_count) + "\t" + std::to_string(r.raw_count) + "\t" +
              std::to_string(r.branch_count) + "\t" + std::to_string(r.wall_ms) + "\n";
    }
    write_output(out, text);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact border bases and (quasi) order ideal enumeration for ideals of points"};
  app.require_subcommand(1);

  CommonOptions groebner_opts, border_opts, fg_border_opts, all_oi_opts, all_quasi_opts, verify_opts;
  OrderingOptions groebner_ord, border_ord;
  std::string all_quasi_engine = "fg";
  std::string verify_pairs;
  GenOptions gen_opts;
  std::string bench_manifest, bench_format = "json", bench_out;
  bool bench_parallel = false;

  auto* groebner = app.add_subcommand("groebner", "reduced Groebner basis of the vanishing ideal");
  add_common(groebner, groebner_opts, false);
  add_ordering(groebner, groebner_ord);

  auto* border = app.add_subcommand("border", "border pair via degree-by-degree elimination");
  add_common(border, border_opts, false);
  add_ordering(border, border_ord);

  auto* fgb = app.add_subcommand("fg-border", "border pair via the incremental point-by-point pass");
  add_common(fgb, fg_border_opts, false);

  auto* all_oi = app.add_subcommand("all-order-ideals",
                                    "every order ideal supporting a border basis, with bases");
  add_common(all_oi, all_oi_opts);

  auto* all_quasi = app.add_subcommand("all-quasi", "every quasi border pair");
  add_common(all_quasi, all_quasi_opts);
  all_quasi->add_option("--engine", all_quasi_engine, "enumeration engine")
      ->check(CLI::IsMember({"fg", "bm"}));

  auto* verify = app.add_subcommand("verify", "re-check serialized border pairs against points");
  add_common(verify, verify_opts, false);
  verify->add_option("--pairs", verify_pairs, "JSON file with a pair or enumeration output")
      ->required();

  auto* gen = app.add_subcommand("gen", "generate point sets");
  gen->add_option("--kind", gen_opts.kind, "generator kind")->check(CLI::IsMember({"ci", "random"}));
  gen->add_option("--field", gen_opts.field, "Q or a prime modulus");
  gen->add_option("--roots", gen_opts.roots, "per-variable roots for ci, e.g. '0,1,3;0,1,2'");
  gen->add_option("--s", gen_opts.s, "number of random points");
  gen->add_option("--n", gen_opts.n, "number of variables");
  gen->add_option("--seed", gen_opts.seed, "PRNG seed");
  gen->add_option("--out", gen_opts.out, "output file (default stdout)");

  auto* bench = app.add_subcommand("bench", "run a manifest of enumeration jobs and report rows");
  bench->add_option("--manifest", bench_manifest, "JSON manifest")->required();
  bench->add_option("--output,-o", bench_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  bench->add_option("--out", bench_out, "write output to a file");
  bench->add_option("--parallel", bench_parallel, "explore branches on worker threads")
      ->transform(CLI::CheckedTransformer(std::map<std::string, bool>{{"on", true}, {"off", false}}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (groebner->parsed()) return run_groebner(groebner_opts, groebner_ord);
    if (border->parsed()) return run_border(border_opts, border_ord);
    if (fgb->parsed()) return run_fg_border(fg_border_opts);
    if (all_oi->parsed()) return run_enumeration(all_oi_opts, "all-order-ideals", "bm");
    if (all_quasi->parsed()) return run_enumeration(all_quasi_opts, "all-quasi", all_quasi_engine);
    if (verify->parsed()) return run_verify(verify_opts, verify_pairs);
    if (gen->parsed()) return run_gen(gen_opts);
    if (bench->parsed()) return run_bench(bench_manifest, bench_format, bench_out, bench_parallel);
  } catch (const bb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
