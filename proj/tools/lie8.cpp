// lie8: command-line front end.
//
// Exit status: 0 success, 1 verification or integrity failure, 2 usage
// error, 3 resource cap exceeded (a partial report is still printed).

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lie8/adjoint.hpp"
#include "lie8/bsgs.hpp"
#include "lie8/cartan.hpp"
#include "lie8/errors.hpp"
#include "lie8/root_cache.hpp"
#include "lie8/serialize.hpp"
#include "lie8/strata.hpp"
#include "lie8/verify.hpp"
#include "lie8/weyl.hpp"
#include "lie8/weyl_classes.hpp"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kResource = 3 };

struct RunConfig {
  std::string type = "E8";
  unsigned q = 3;
  std::uint64_t samples = lie8::verify::kCensusSamples;
  std::uint64_t seed = lie8::verify::kDefaultSeed;
  std::string format = "text";
  std::string cache_dir;
  unsigned threads = 1;
  std::uint64_t group_cap = lie8::kDefaultGroupCap;
  std::uint64_t closure_cap = lie8::kDefaultClosureCap;
  std::uint64_t descent_cap = lie8::kDefaultDescentCap;
  bool allow_e7 = false;
  bool allow_large = false;
  bool no_closure = false;
  std::string word;
  std::vector<int> dump;
  unsigned p = 2;
};

class Context {
 public:
  explicit Context(const RunConfig& cfg) : cfg_(cfg), cache_(cache_dir(cfg)) {}

  const lie8::RootSystem& system() {
    if (!rs_) rs_ = std::make_unique<lie8::RootSystem>(cache_.get(lie8::parse_type(cfg_.type)));
    return *rs_;
  }
  const RunConfig& cfg() const { return cfg_; }
  bool json_out() const { return cfg_.format == "json"; }

 private:
  static std::string cache_dir(const RunConfig& cfg) {
    if (!cfg.cache_dir.empty()) return cfg.cache_dir;
    if (const char* env = std::getenv("LIE8_CACHE_DIR")) return env;
    if (const char* home = std::getenv("HOME")) return std::string(home) + "/.cache/lie8";
    return {};
  }

  const RunConfig& cfg_;
  lie8::RootCache cache_;
  std::unique_ptr<lie8::RootSystem> rs_;
};

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

std::vector<int> parse_word(std::string text) {
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream in(text);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int x = -1;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw lie8::ArgumentError("bad word entry '" + tok + "'");
    out.push_back(x);
  }
  return out;
}

// Shortest product of at most three factorials n! (2 <= n <= 20) equal to
// the order, written like "4!·6!·8!".
std::string factorial_form(std::uint64_t order) {
  std::vector<std::uint64_t> f(21, 1);
  for (int n = 1; n <= 20; ++n) f[n] = f[n - 1] * n;
  for (int k = 1; k <= 3; ++k) {
    std::vector<int> idx(k, 2);
    std::function<std::string(int, int, unsigned __int128)> rec = [&](int pos, int from,
                                                                      unsigned __int128 acc) -> std::string {
      if (pos == k) {
        if (acc != order) return {};
        std::string s;
        for (int j = 0; j < k; ++j) s += (j ? "·" : "") + std::to_string(idx[j]) + "!";
        return s;
      }
      for (int n = from; n <= 20; ++n) {
        const unsigned __int128 next = acc * f[n];
        if (next > order) break;
        idx[pos] = n;
        if (auto s = rec(pos + 1, n, next); !s.empty()) return s;
      }
      return {};
    };
    if (auto s = rec(0, 2, 1); !s.empty()) return s;
  }
  return {};
}

int cmd_roots(Context& ctx) {
  const auto& rs = ctx.system();
  if (ctx.json_out()) {
    emit(lie8::roots_document(rs));
  } else {
    std::cout << rs.name() << ": " << rs.size() << " roots, " << rs.num_positive() << " positive\n";
  }
  return kOk;
}

int cmd_weyl_order(Context& ctx) {
  const auto& rs = ctx.system();
  lie8::StabilizerChain chain = lie8::weyl_chain(rs);
  const std::uint64_t order = chain.order();
  const bool verified = chain.verify();
  const std::string form = factorial_form(order);
  if (ctx.json_out()) {
    json d = lie8::document("weyl_order");
    d["type"] = rs.name();
    d["order"] = std::to_string(order);
    d["factorial_form"] = form;
    d["base_length"] = chain.base_length();
    d["orbit_sizes"] = chain.orbit_sizes();
    d["strong_generators"] = chain.strong_generator_count();
    d["verified"] = verified;
    emit(d);
  } else {
    std::cout << "|W(" << rs.name() << ")| = " << order;
    if (!form.empty()) std::cout << " = " << form;
    std::cout << (verified ? "" : "  (VERIFICATION FAILED)") << '\n';
  }
  return verified ? kOk : kFailed;
}

std::uint64_t enumeration_cap(Context& ctx) {
  const auto& rs = ctx.system();
  const auto& cfg = ctx.cfg();
  if (rs.name() == "E8") {
    throw lie8::ResourceError("exhaustive mode is refused for E8 (|W| = " +
                              std::to_string(lie8::group_order_bsgs(rs)) + "); use `census`");
  }
  if (rs.name() == "E7") {
    const std::uint64_t order = lie8::group_order_bsgs(rs);
    const std::uint64_t bytes = order * (2 * rs.size() + 160);
    std::cerr << "E7: " << order << " elements, estimated memory " << bytes / (1u << 20) << " MiB\n";
    if (!cfg.allow_e7) throw lie8::ResourceError("E7 exhaustive mode needs --allow-e7");
    return std::max(cfg.group_cap, order);
  }
  return cfg.group_cap;
}

int cmd_classes(Context& ctx) {
  const std::uint64_t cap = enumeration_cap(ctx);
  const auto& rs = ctx.system();
  auto classes = lie8::conjugacy_classes_exhaustive(rs, cap);
  if (ctx.json_out()) {
    emit(lie8::classes_document(rs, classes));
    return kOk;
  }
  std::size_t elliptic = 0;
  std::printf("%-4s %10s %6s %6s %8s  %s\n", "id", "size", "order", "l_min", "elliptic", "representative");
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto& c = classes[k];
    elliptic += c.elliptic;
    std::string word;
    for (int i : lie8::reduced_word(c.representative)) word += std::to_string(i) + " ";
    std::printf("%-4zu %10llu %6llu %6d %8s  %s\n", k, static_cast<unsigned long long>(*c.size),
                static_cast<unsigned long long>(c.order), c.min_length, c.elliptic ? "yes" : "no",
                word.empty() ? "e" : word.c_str());
  }
  std::printf("%zu classes, %zu elliptic\n", classes.size(), elliptic);
  return kOk;
}

int cmd_census(Context& ctx) {
  const auto& cfg = ctx.cfg();
  auto c = lie8::sample_class_census(ctx.system(), cfg.samples, cfg.seed, !cfg.no_closure);
  if (ctx.json_out()) {
    emit(lie8::census_document(c));
  } else {
    std::cout << c.type << ": " << c.samples << " samples (seed " << c.seed << ")\n"
              << "  distinct fingerprints: " << c.distinct << " (" << c.elliptic << " elliptic)\n"
              << "  from draws alone:      " << c.distinct_sampled << " (" << c.elliptic_sampled
              << " elliptic)\n";
  }
  return kOk;
}

int cmd_cmin(Context& ctx) {
  const auto& rs = ctx.system();
  const auto& cfg = ctx.cfg();
  if (!cfg.word.empty()) {
    auto word = parse_word(cfg.word);
    lie8::WeylElement w = lie8::from_word(rs, word);
    auto res = lie8::min_length_descent(w, cfg.descent_cap);
    if (ctx.json_out()) {
      json d = lie8::document("cmin");
      d["type"] = rs.name();
      d["word"] = word;
      d["length"] = lie8::length(w);
      d["order"] = std::to_string(lie8::element_order(w));
      d["min_length"] = res.min_length;
      d["witness"] = lie8::reduced_word(res.witness);
      d["states_visited"] = res.states_visited;
      d["elliptic"] = lie8::is_elliptic(w);
      emit(d);
    } else {
      std::cout << "length " << lie8::length(w) << ", minimal length in class " << res.min_length
                << ", witness";
      for (int i : lie8::reduced_word(res.witness)) std::cout << ' ' << i;
      std::cout << '\n';
    }
    return kOk;
  }
  const std::uint64_t cap = enumeration_cap(ctx);
  auto classes = lie8::conjugacy_classes_exhaustive(rs, cap);
  if (ctx.json_out()) {
    json d = lie8::document("cmin_table");
    d["type"] = rs.name();
    json list = json::array();
    for (const auto& c : classes) {
      json words = json::array();
      for (const auto& w : c.minimal_elements) words.push_back(lie8::reduced_word(w));
      list.push_back({{"fingerprint", lie8::to_json(c.fingerprint)},
                      {"min_length", c.min_length},
                      {"elliptic", c.elliptic},
                      {"cmin", std::move(words)}});
    }
    d["classes"] = std::move(list);
    emit(d);
    return kOk;
  }
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto& c = classes[k];
    std::cout << "class " << k << ": l_min " << c.min_length << ", |C_min| " << c.minimal_elements.size()
              << (c.elliptic ? ", elliptic" : "") << '\n';
  }
  return kOk;
}

int cmd_adjoint_check(Context& ctx) {
  const auto& rs = ctx.system();
  lie8::AdjointModule m(rs);
  const auto& cfg = ctx.cfg();
  if (!cfg.dump.empty()) {
    if (cfg.dump.size() != 2) throw lie8::ArgumentError("--dump takes a vertex and a sign");
    emit(lie8::operator_document(m, lie8::build_E(m, cfg.dump[0], cfg.dump[1])));
    return kOk;
  }
  json ops = json::array();
  bool ok = true;
  for (int i = 0; i < rs.rank(); ++i) {
    for (int eps : {1, -1}) {
      auto e = lie8::build_E(m, i, eps);
      bool divided = true;
      try {
        lie8::divided_square(e);
      } catch (const lie8::IntegrityError&) {
        divided = false;
      }
      const bool law = divided && lie8::verify::one_parameter_law<2>(e) &&
                       lie8::verify::one_parameter_law<3>(e) && lie8::verify::one_parameter_law<5>(e);
      const bool plus = lie8::stabilizes_Mplus(m, e.matrix);
      ok = ok && divided && law && plus == (eps == 1);
      ops.push_back({{"vertex", i},
                     {"sign", eps},
                     {"cube_zero_square_even", divided},
                     {"one_parameter_law", law},
                     {"stabilizes_Mplus", plus}});
    }
  }
  json sl2 = json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    try {
      lie8::sl2_check(m, i);
      sl2.push_back({{"vertex", i}, {"ok", true}});
    } catch (const lie8::IntegrityError& e) {
      ok = false;
      sl2.push_back({{"vertex", i}, {"ok", false}, {"error", e.what()}});
    }
  }
  std::size_t pairs = 0;
  json comm_fail = json::array();
  for (auto [i, j] : lie8::verify::non_adjacent_pairs(rs.datum())) {
    ++pairs;
    try {
      lie8::commuting_check(m, i, j);
    } catch (const lie8::IntegrityError& e) {
      ok = false;
      comm_fail.push_back(e.what());
    }
  }
  if (ctx.json_out()) {
    json d = lie8::document("adjoint_check");
    d["type"] = rs.name();
    d["dim"] = m.dim();
    d["dim_positive"] = m.dim_positive();
    d["operators"] = std::move(ops);
    d["sl2"] = std::move(sl2);
    d["commuting_pairs"] = pairs;
    d["commuting_failures"] = std::move(comm_fail);
    d["ok"] = ok;
    emit(d);
  } else {
    std::cout << rs.name() << ": dim M = " << m.dim() << ", dim M+ = " << m.dim_positive() << "; "
              << 2 * rs.rank() << " operators, " << pairs << " commuting pairs: " << (ok ? "all checks pass" : "FAILURES")
              << '\n';
  }
  return ok ? kOk : kFailed;
}

int cmd_chevgroup(Context& ctx) {
  const auto& cfg = ctx.cfg();
  const auto& rs = ctx.system();
  if (rs.name() == "E8") throw lie8::ResourceError("Chevalley closure is refused for E8 (order about q^248)");
  if (rs.name() != "A1" && rs.name() != "A2" && !cfg.allow_large) {
    throw lie8::ResourceError("closure for " + rs.name() + " needs --allow-large");
  }
  lie8::AdjointModule m(rs);
  const std::uint64_t order = lie8::chevalley_group_order(m, cfg.p, cfg.closure_cap);
  if (ctx.json_out()) {
    json d = lie8::document("chevalley_group");
    d["type"] = rs.name();
    d["p"] = cfg.p;
    d["order"] = std::to_string(order);
    emit(d);
  } else {
    std::cout << "|<exp(l E_{i,e})>| over F_" << cfg.p << " for " << rs.name() << " = " << order << '\n';
  }
  return kOk;
}

int cmd_strata(Context& ctx) {
  const auto& cfg = ctx.cfg();
  if (cfg.type != "B2") throw lie8::UnsupportedError("strata are available for --type B2 only");
  lie8::sp4::FiniteModel m(cfg.q);
  auto r = lie8::sp4::stratum_map(m);
  auto u = lie8::sp4::unipotent_report(m, r);
  if (cfg.format == "json") {
    emit(lie8::sp4::strata_document(m, r, u));
  } else if (cfg.format == "csv") {
    std::cout << lie8::sp4::strata_csv(m, r);
  } else {
    std::printf("B2 model over F_%u: %zu elements, %zu classes (%zu geometric)\n", cfg.q, m.order(),
                m.classes().size(), m.geometric_count());
    std::printf("%-6s %5s %5s %8s %7s %12s  %s\n", "class", "l_min", "delta", "elliptic", "classes",
                "elements", "boxed class ids");
    for (const auto& s : r.strata) {
      std::string ids;
      for (auto c : s.boxed) ids += std::to_string(c) + " ";
      std::printf("%-6s %5d %5d %8s %7zu %12llu  %s\n", s.label.c_str(), s.min_length, s.delta,
                  s.elliptic ? "yes" : "no", s.boxed.size(), static_cast<unsigned long long>(s.boxed_size),
                  ids.c_str());
    }
    const auto& th = r.theorem;
    std::printf("(a) cover: %s  (b) equal or disjoint: %s  (d) delta = 10 - l(w): %s\n",
                th.cover ? "yes" : "no", th.equal_or_disjoint ? "yes" : "no", th.elliptic_delta ? "yes" : "no");
    std::printf("(c) unipotent classes per boxed set, merged: %s; raw: %s\n",
                th.unipotent_merged_single ? "at most one" : "more than one",
                th.unipotent_raw_single ? "at most one" : "more than one (rational splitting)");
    std::printf("unipotent classes: %zu raw, %zu merged\n", u.raw, u.merged);
    for (const auto& s : th.counterexamples) std::printf("  note: %s\n", s.c_str());
  }
  return r.theorem.cover && r.theorem.equal_or_disjoint && r.theorem.well_defined ? kOk : kFailed;
}

int cmd_verify(Context& ctx) {
  const auto& cfg = ctx.cfg();
  lie8::verify::Options opt;
  opt.seed = cfg.seed;
  bool all = true;
  auto print = [&](const lie8::verify::Criterion& c) {
    all = all && c.pass();
    if (!ctx.json_out()) {
      std::printf("[%s] %2d %s: %s (%.2f s)\n", c.pass() ? "PASS" : "FAIL", c.id, c.name.c_str(),
                  c.summary.c_str(), c.seconds);
      std::fflush(stdout);
    }
  };
  auto results = lie8::verify::run_all(opt, print);
  if (ctx.json_out()) emit(lie8::verify::report_json(results));
  return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"lie8: root systems, Weyl groups, Chevalley operators and B2 strata"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir, "Root-system cache directory (default $LIE8_CACHE_DIR, then ~/.cache/lie8)");
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads (computation is single-threaded)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto type_opt = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("--type", cfg.type, "A<n>, D<n>, E6, E7, E8 or B2");
    if (required) o->required();
  };

  auto* roots = app.add_subcommand("roots", "Root counts and canonical root list");
  type_opt(roots);
  auto* order = app.add_subcommand("weyl-order", "Order of W from a stabilizer chain");
  type_opt(order);
  auto* classes = app.add_subcommand("classes", "Exhaustive conjugacy classes of W");
  type_opt(classes);
  classes->add_flag("--allow-e7", cfg.allow_e7, "Permit E7 (several GiB)");
  classes->add_option("--cap", cfg.group_cap, "Enumeration cap")->capture_default_str();
  auto* census = app.add_subcommand("census", "Sampled class census of W");
  type_opt(census);
  census->add_option("--samples", cfg.samples, "Number of uniform draws")->capture_default_str();
  census->add_flag("--no-closure", cfg.no_closure, "Count raw draws only, without power-map closure");
  auto* cmin = app.add_subcommand("cmin", "Minimal length in a class (by descent, or the full table)");
  type_opt(cmin);
  cmin->add_option("--word", cfg.word, "Element as a word in simple reflections, e.g. \"0 1 0\"");
  cmin->add_option("--cap", cfg.descent_cap, "Descent visited-state cap")->capture_default_str();
  cmin->add_flag("--allow-e7", cfg.allow_e7, "Permit E7 in table mode");
  auto* adj = app.add_subcommand("adjoint-check", "Checks on the operators E_{i,e}");
  type_opt(adj);
  adj->add_option("--dump", cfg.dump, "Print E_{i,e} as JSON: vertex and sign")->expected(2);
  auto* chev = app.add_subcommand("chevgroup", "Order of <exp(l E_{i,e})> over F_p by closure");
  type_opt(chev);
  chev->add_option("--p", cfg.p, "Prime")->check(CLI::IsMember({2u, 3u, 5u, 7u}))->capture_default_str();
  chev->add_option("--cap", cfg.closure_cap, "Closure cap")->capture_default_str();
  chev->add_flag("--allow-large", cfg.allow_large, "Permit types beyond A1 and A2");
  auto* strata = app.add_subcommand("strata", "Strata of the B2 finite model");
  cfg.type = "B2";
  type_opt(strata, false);
  strata->add_option("--q", cfg.q, "Field size")->check(CLI::IsMember({3u, 5u}))->capture_default_str();
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite from an empty cache");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (verify->parsed()) cfg.type = "E8";

  try {
    Context ctx(cfg);
    if (roots->parsed()) return cmd_roots(ctx);
    if (order->parsed()) return cmd_weyl_order(ctx);
    if (classes->parsed()) return cmd_classes(ctx);
    if (census->parsed()) return cmd_census(ctx);
    if (cmin->parsed()) return cmd_cmin(ctx);
    if (adj->parsed()) return cmd_adjoint_check(ctx);
    if (chev->parsed()) return cmd_chevgroup(ctx);
    if (strata->parsed()) return cmd_strata(ctx);
    if (verify->parsed()) return cmd_verify(ctx);
  } catch (const lie8::ResourceError& e) {
    json d = lie8::document("partial");
    d["error"] = "resource";
    d["message"] = e.what();
    emit(d);
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
