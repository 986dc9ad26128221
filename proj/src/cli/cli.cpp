#include "antireg/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "antireg/building_string.hpp"
#include "antireg/feasibility.hpp"
#include "antireg/hypergraph.hpp"
#include "antireg/ipoly.hpp"
#include "antireg/serialize.hpp"
#include "antireg/threshold.hpp"

namespace antireg::cli {

namespace {

using nlohmann::json;

// Bad flags or inputs that only surface after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool text = false;
  Guard guard = Guard::enforce;

  void emit(const json& j, const std::string& text_form) const {
    if (text) {
      out << text_form;
      if (text_form.empty() || text_form.back() != '\n') out << '\n';
    } else {
      out << j.dump(2) << '\n';
    }
  }
};

// --string/--k or --file, exactly one.
struct Source {
  std::string bits;
  int k = 0;
  std::string file;

  void add_to(CLI::App* cmd, bool allow_string = true, bool allow_file = true) {
    if (allow_string) {
      cmd->add_option("--string", bits, "Binary building string");
      cmd->add_option("--k", k, "Edge size (k >= 2)");
    }
    if (allow_file) cmd->add_option("--file", file, "Hypergraph JSON file");
  }
};

struct Loaded {
  Hypergraph h;
  std::optional<BuildingString> b;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

BuildingString string_from(const Source& s) {
  if (s.k == 0) throw UsageError("--string requires --k");
  try {
    return BuildingString(s.k, s.bits);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Loaded load(const Source& s) {
  const bool has_string = !s.bits.empty();
  const bool has_file = !s.file.empty();
  if (has_string == has_file) throw UsageError("give exactly one of --string (with --k) or --file");
  if (has_string) {
    auto b = string_from(s);
    return {build_hypergraph(b), b};
  }
  try {
    return {hypergraph_from_json(read_json_file(s.file)), std::nullopt};
  } catch (const std::invalid_argument& e) {
    throw UsageError(s.file + ": " + e.what());
  }
}

json edge_json(const Edge& e) { return json(e); }

std::string join(const std::vector<mpz_class>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v[i].get_str();
  }
  return out;
}

std::string edge_text(const Edge& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------- gen/build

int cmd_gen(const Context& ctx, std::size_t n, int k, bool connected) {
  BuildingString b = [&] {
    try {
      return antiregular_string(n, k, connected);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  json j{{"string", b.str()}, {"k", k}, {"n", n}, {"connected", b.connected()}};
  ctx.emit(j, b.str());
  return kOk;
}

std::string hypergraph_text(const Hypergraph& h) {
  std::ostringstream os;
  os << "n " << h.vertex_count() << "\nk "
     << (h.uniformity() ? std::to_string(*h.uniformity()) : std::string("none")) << "\nedges "
     << h.edge_count() << '\n';
  for (const auto& e : h.edges()) os << edge_text(e) << '\n';
  return os.str();
}

int cmd_build(const Context& ctx, const Source& src) {
  const auto b = string_from(src);
  const auto h = build_hypergraph(b);
  ctx.emit(to_json(h), hypergraph_text(h));
  return kOk;
}

// ---------------------------------------------------------------- ipoly

struct MethodRun {
  std::map<std::string, Polynomial> results;
  std::vector<std::pair<std::string, std::string>> skipped;

  bool agree() const {
    return std::all_of(results.begin(), results.end(),
                       [&](const auto& r) { return r.second == results.begin()->second; });
  }
};

const std::vector<std::string> kMethods{"brute", "trinks", "recurrence", "closed", "semiclosed"};

// Why `method` cannot run on this input, or nullopt when it can.
std::optional<std::string> inapplicable(const std::string& method, const Loaded& in) {
  if (method == "brute" || method == "trinks") return std::nullopt;
  if (!in.b || !in.b->antiregular()) return "needs an antiregular building string";
  const auto n = in.b->size();
  const int k = in.b->k();
  if (method == "closed" && k != 3) return "closed forms exist only for k = 3";
  if (method == "semiclosed" && n < static_cast<std::size_t>(k) + 1) {
    return "semi-closed forms need n >= k+1";
  }
  return std::nullopt;
}

Polynomial compute(const std::string& method, const Loaded& in, Guard guard) {
  if (method == "brute") return ipoly_bruteforce(in.h, guard);
  if (method == "trinks") return ipoly_trinks(in.h, guard);
  const auto n = in.b->size();
  const int k = in.b->k();
  const bool connected = in.b->connected();
  if (method == "recurrence") return ipoly_antiregular_recurrence(n, k, connected);
  if (method == "closed") return ipoly_k3_closed(n, connected);
  return ipoly_semiclosed(n, k, connected);
}

int cmd_ipoly(const Context& ctx, const Source& src, const std::string& method) {
  const auto in = load(src);
  MethodRun run;
  if (method == "all") {
    for (const auto& m : kMethods) {
      if (auto why = inapplicable(m, in)) {
        run.skipped.emplace_back(m, *why);
        continue;
      }
      try {
        run.results.emplace(m, compute(m, in, ctx.guard));
      } catch (const GuardExceeded& e) {
        run.skipped.emplace_back(m, e.what());
      }
    }
  } else {
    if (auto why = inapplicable(method, in)) throw UsageError("--method " + method + ": " + *why);
    run.results.emplace(method, compute(method, in, ctx.guard));
  }

  json methods = json::object();
  std::ostringstream text;
  for (const auto& m : kMethods) {
    const auto it = run.results.find(m);
    if (it == run.results.end()) continue;
    methods[m] = to_json(it->second);
    text << m << ": " << it->second << '\n';
  }
  json skipped = json::array();
  for (const auto& [m, why] : run.skipped) {
    skipped.push_back({{"method", m}, {"reason", why}});
    text << m << ": skipped (" << why << ")\n";
  }
  const bool agree = run.agree();
  text << "agree: " << (agree ? "yes" : "no") << '\n';
  ctx.emit({{"methods", methods}, {"skipped", skipped}, {"agree", agree}}, text.str());
  return agree ? kOk : kPropertyFails;
}

// ---------------------------------------------------------------- logconcave

int cmd_logconcave(const Context& ctx, const Source& src, std::size_t max_n) {
  if (src.k == 0) throw UsageError("logconcave requires --k");
  if (src.bits.empty() && max_n == 0) throw UsageError("logconcave needs --string or --max-n");

  json instances = json::array();
  std::ostringstream text;
  bool all_hold = true;
  auto check = [&](const BuildingString& b, const Polynomial& p) {
    const auto report = is_log_concave(p);
    all_hold = all_hold && report.holds;
    instances.push_back({{"string", b.str()},
                         {"holds", report.holds},
                         {"first_violation", report.first_violation ? json(*report.first_violation)
                                                                    : json(nullptr)}});
    text << b.str() << ' ' << (report.holds ? "log-concave" : "not log-concave");
    if (report.first_violation) text << " (violation at i = " << *report.first_violation << ')';
    text << '\n';
  };

  if (!src.bits.empty()) {
    const auto b = string_from(src);
    const auto p = b.antiregular()
                       ? ipoly_antiregular_recurrence(b.size(), b.k(), b.connected())
                       : ipoly_trinks(build_hypergraph(b), ctx.guard);
    check(b, p);
  }
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (bool connected : {false, true}) {
      if (connected && n < static_cast<std::size_t>(src.k)) continue;
      check(antiregular_string(n, src.k, connected),
            ipoly_antiregular_recurrence(n, src.k, connected));
    }
  }
  ctx.emit({{"instances", instances}, {"holds", all_hold}}, text.str());
  return all_hold ? kOk : kPropertyFails;
}

// ---------------------------------------------------------------- labels

Labeling labels_for(const BuildingString& b) {
  return b.has_dominating() ? algorithm1_labels(b) : edgeless_labeling(b.size(), b.k());
}

std::string labeling_text(const Labeling& l) { return "c: " + join(l.c) + "\ntau: " + l.tau.get_str(); }

int cmd_label(const Context& ctx, const Source& src) {
  const auto b = string_from(src);
  const auto l = labels_for(b);
  ctx.emit(to_json(l), labeling_text(l));
  return kOk;
}

int cmd_verify_t2(const Context& ctx, const Source& src, const std::string& labels) {
  if (labels.empty()) throw UsageError("verify-t2 requires --labels (auto or a JSON file)");
  const auto in = load(src);
  Labeling l;
  if (labels == "auto") {
    if (!in.b) {
      throw UsageError(
          "--labels auto needs a building string; a hypergraph file has no construction "
          "order to label (pass --labels L.json, or run recognize first)");
    }
    l = labels_for(*in.b);
  } else {
    try {
      l = labeling_from_json(read_json_file(labels));
    } catch (const std::invalid_argument& e) {
      throw UsageError(labels + ": " + e.what());
    }
  }
  T2Verdict v;
  try {
    v = verify_t2(in.h, l, ctx.guard);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  ctx.emit({{"holds", v.holds}, {"witness", v.witness ? edge_json(*v.witness) : json(nullptr)}},
           v.holds ? "T2 holds" : "T2 fails at " + edge_text(*v.witness));
  return v.holds ? kOk : kPropertyFails;
}

int cmd_verify_t3(const Context& ctx, const Source& src) {
  const auto in = load(src);
  T3Verdict v;
  try {
    v = verify_t3(in.h, ctx.guard);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json witness = nullptr;
  std::string text = "T3 holds";
  if (v.witness) {
    witness = {v.witness->first, v.witness->second};
    text = "T3 fails: vertices " + std::to_string(v.witness->first) + " and " +
           std::to_string(v.witness->second) + " are incomparable";
  }
  ctx.emit({{"holds", v.holds}, {"witness", witness}}, text);
  return v.holds ? kOk : kPropertyFails;
}

int cmd_degrees(const Context& ctx, const Source& src) {
  const auto in = load(src);
  const auto d = degree_sequence(in.h);
  json mult = json::array();
  std::ostringstream text;
  text << "degrees:";
  for (auto x : d.degrees) text << ' ' << x;
  text << "\nmultiplicities:";
  for (const auto& [value, count] : d.multiplicities()) {
    mult.push_back({value, count});
    text << ' ' << value << 'x' << count;
  }
  ctx.emit({{"degrees", d.degrees}, {"multiplicities", mult}}, text.str());
  return kOk;
}

int cmd_feasible_t2(const Context& ctx, const Source& src) {
  const auto in = load(src);
  FeasibilityVerdict v;
  try {
    v = t2_feasibility(in.h, ctx.guard);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (v.feasible) {
    ctx.emit({{"feasible", true}, {"labeling", to_json(*v.witness)}},
             "feasible\n" + labeling_text(*v.witness));
    return kOk;
  }
  json terms = json::array();
  std::string text = "infeasible; certificate (weight, subset, kind):\n";
  for (const auto& t : v.certificate->terms) {
    terms.push_back({{"subset", t.subset}, {"edge", t.is_edge}, {"weight", t.weight.get_str()}});
    text += t.weight.get_str() + ' ' + edge_text(t.subset) + (t.is_edge ? " edge\n" : " non-edge\n");
  }
  ctx.emit({{"feasible", false}, {"certificate", terms}}, text);
  return kPropertyFails;
}

int cmd_recognize(const Context& ctx, const Source& src) {
  const auto in = load(src);
  std::optional<Recognition> r;
  try {
    r = recognize_zero_one_constructable(in.h, ctx.guard);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!r) {
    ctx.emit({{"constructable", false}}, "not {0,1}-constructable");
    return kPropertyFails;
  }
  std::ostringstream text;
  text << r->string.str() << "\norder:";
  for (auto v : r->order) text << ' ' << v;
  ctx.emit({{"constructable", true}, {"string", r->string.str()}, {"order", r->order}}, text.str());
  return kOk;
}

// ---------------------------------------------------------------- sweep

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NUM_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) n = static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // ignore malformed values
    }
  }
  return n;
}

// Runs jobs[i]() on a worker pool; results keep job order.
std::vector<std::vector<std::string>> run_pool(
    const std::vector<std::function<std::vector<std::string>()>>& jobs, unsigned workers) {
  std::vector<std::vector<std::string>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = jobs[i]();
      } catch (const std::exception& e) {
        results[i] = {std::string("exception: ") + e.what()};
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned extra = std::min<std::size_t>(workers, jobs.size()) > 1
                             ? static_cast<unsigned>(std::min<std::size_t>(workers, jobs.size())) - 1
                             : 0;
  for (unsigned t = 0; t < extra; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::vector<std::string> check_antiregular(std::size_t n, int k, bool connected, Guard guard) {
  std::vector<std::string> problems;
  const auto b = antiregular_string(n, k, connected);
  const auto h = build_hypergraph(b);
  const auto reference = ipoly_antiregular_recurrence(n, k, connected);
  auto compare = [&](const char* name, const Polynomial& p) {
    if (p != reference) problems.push_back(std::string(name) + " = " + p.to_string() +
                                           " but recurrence = " + reference.to_string());
  };
  compare("brute", ipoly_bruteforce(h, guard));
  compare("trinks", ipoly_trinks(h, guard));
  if (n >= static_cast<std::size_t>(k) + 1) compare("semiclosed", ipoly_semiclosed(n, k, connected));
  if (k == 3) compare("closed", ipoly_k3_closed(n, connected));

  if (n >= static_cast<std::size_t>(k)) {
    const auto partner = build_hypergraph(antiregular_string(n, k, !connected));
    if (complement_uniform(h).edges() != partner.edges()) {
      problems.push_back("complement differs from the opposite antiregular hypergraph");
    }
  }
  return problems;
}

std::vector<std::string> check_constructable(const BuildingString& b, Guard guard) {
  std::vector<std::string> problems;
  const auto h = build_hypergraph(b);
  const auto l = labels_for(b);
  const auto t2 = verify_t2(h, l, guard);
  if (!t2.holds) problems.push_back("T2 fails at " + edge_text(*t2.witness));
  if (b.has_dominating()) {
    const auto mono = check_label_monotonicity(b, l);
    if (!mono.holds) {
      problems.push_back("monotonicity clause " + std::string(to_string(*mono.violated)) +
                         " fails at vertices " + std::to_string(mono.witness->first) + ", " +
                         std::to_string(mono.witness->second));
    }
  }
  return problems;
}

int cmd_sweep(const Context& ctx, int k_max, std::size_t n_max) {
  if (k_max < 2) throw UsageError("--k-max must be at least 2");
  if (n_max < 1) throw UsageError("--n-max must be at least 1");
  if (n_max > 24 && ctx.guard == Guard::enforce) {
    throw GuardExceeded("sweep: --n-max " + std::to_string(n_max) + " exceeds the guard 24");
  }

  std::vector<std::string> keys;
  std::vector<std::function<std::vector<std::string>()>> jobs;
  std::size_t antiregular_count = 0;
  std::size_t constructable_count = 0;
  const Guard guard = ctx.guard;
  for (int k = 2; k <= k_max; ++k) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (bool connected : {false, true}) {
        if (connected && n < static_cast<std::size_t>(k)) continue;
        keys.push_back("antiregular k=" + std::to_string(k) + " n=" + std::to_string(n) +
                       (connected ? " connected" : " disconnected"));
        jobs.emplace_back([=] { return check_antiregular(n, k, connected, guard); });
        ++antiregular_count;
      }
    }
    for (std::size_t n = 1; n <= n_max; ++n) {
      // Free positions are k..n; positions before k are forced to 0.
      const std::size_t free = n >= static_cast<std::size_t>(k) ? n - k + 1 : 0;
      for (std::uint64_t suffix = 0; suffix < (std::uint64_t{1} << free); ++suffix) {
        std::string bits(n, '0');
        for (std::size_t j = 0; j < free; ++j) {
          if ((suffix >> (free - 1 - j)) & 1) bits[k - 1 + j] = '1';
        }
        keys.push_back("constructable k=" + std::to_string(k) + " " + bits);
        jobs.emplace_back([=] { return check_constructable(BuildingString(k, bits), guard); });
        ++constructable_count;
      }
    }
  }

  const auto results = run_pool(jobs, worker_count());
  json disagreements = json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (const auto& problem : results[i]) {
      disagreements.push_back({{"instance", keys[i]}, {"detail", problem}});
      text << keys[i] << ": " << problem << '\n';
    }
  }
  const bool ok = disagreements.empty();
  text << "antiregular instances: " << antiregular_count
       << "\nconstructable strings: " << constructable_count
       << "\ndisagreements: " << disagreements.size() << '\n';
  ctx.emit({{"k_max", k_max},
            {"n_max", n_max},
            {"antiregular_instances", antiregular_count},
            {"constructable_strings", constructable_count},
            {"disagreements", disagreements},
            {"ok", ok}},
           text.str());
  return ok ? kOk : kPropertyFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Antiregular hypergraphs: construction, independence polynomials, threshold labels"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  std::string format = "json";
  bool unsafe = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--unsafe-no-guard", unsafe, "Lift the size caps on exponential-time routines");

  std::size_t n = 0;
  int k = 0;
  bool connected = false;
  auto* gen = app.add_subcommand("gen", "Antiregular building string");
  gen->add_option("--n", n, "Vertex count")->required();
  gen->add_option("--k", k, "Edge size")->required();
  gen->add_flag("--connected", connected, "Last vertex dominating");

  Source build_src;
  auto* build = app.add_subcommand("build", "Hypergraph of a building string");
  build_src.add_to(build, true, false);

  Source ipoly_src;
  std::string method = "all";
  auto* ipoly = app.add_subcommand("ipoly", "Independence polynomial");
  ipoly_src.add_to(ipoly);
  ipoly->add_option("--method", method, "Method")
      ->check(CLI::IsMember({"brute", "trinks", "recurrence", "closed", "semiclosed", "all"}))
      ->capture_default_str();

  Source lc_src;
  std::size_t max_n = 0;
  auto* logconcave = app.add_subcommand("logconcave", "Log-concavity of independence polynomials");
  lc_src.add_to(logconcave, true, false);
  logconcave->add_option("--max-n", max_n, "Check every antiregular hypergraph with n <= M");

  Source label_src;
  auto* label = app.add_subcommand("label", "Threshold labeling of a building string");
  label_src.add_to(label, true, false);

  Source t2_src;
  std::string labels;
  auto* vt2 = app.add_subcommand("verify-t2", "Check a labeling against a hypergraph");
  t2_src.add_to(vt2);
  vt2->add_option("--labels", labels, "'auto' (building strings only) or a labeling JSON file");

  Source t3_src;
  auto* vt3 = app.add_subcommand("verify-t3", "Pairwise comparability check");
  t3_src.add_to(vt3);

  Source deg_src;
  auto* degrees = app.add_subcommand("degrees", "Vertex-degree sequence");
  deg_src.add_to(degrees);

  Source feas_src;
  auto* feasible = app.add_subcommand("feasible-t2", "Decide whether any T2 labeling exists");
  feas_src.add_to(feasible);

  Source rec_src;
  auto* recognize = app.add_subcommand("recognize", "Find a building string for a hypergraph");
  rec_src.add_to(recognize);

  int k_max = 0;
  std::size_t n_max = 0;
  auto* sweep = app.add_subcommand("sweep", "Exhaustive cross-checks over small instances");
  sweep->add_option("--k-max", k_max, "Largest edge size")->required();
  sweep->add_option("--n-max", n_max, "Largest vertex count")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Context ctx{out, err, format == "text", unsafe ? Guard::bypass : Guard::enforce};
  if (unsafe) err << "warning: size guards disabled; exponential routines may run for a long time\n";

  try {
    if (*gen) return cmd_gen(ctx, n, k, connected);
    if (*build) return cmd_build(ctx, build_src);
    if (*ipoly) return cmd_ipoly(ctx, ipoly_src, method);
    if (*logconcave) return cmd_logconcave(ctx, lc_src, max_n);
    if (*label) return cmd_label(ctx, label_src);
    if (*vt2) return cmd_verify_t2(ctx, t2_src, labels);
    if (*vt3) return cmd_verify_t3(ctx, t3_src);
    if (*degrees) return cmd_degrees(ctx, deg_src);
    if (*feasible) return cmd_feasible_t2(ctx, feas_src);
    if (*recognize) return cmd_recognize(ctx, rec_src);
    if (*sweep) return cmd_sweep(ctx, k_max, n_max);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << " (use --unsafe-no-guard to override)\n";
    return kGuard;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace antireg::cli
