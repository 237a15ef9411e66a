#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <unistd.h>

#include <json.hpp>

#include "lie8/adjoint.hpp"
#include "lie8/bsgs.hpp"
#include "lie8/cartan.hpp"
#include "lie8/flags.hpp"
#include "lie8/root_cache.hpp"
#include "lie8/serialize.hpp"
#include "lie8/sp4.hpp"
#include "lie8/strata.hpp"
#include "lie8/weyl.hpp"
#include "lie8/weyl_classes.hpp"

namespace lie8::verify {

inline constexpr std::uint64_t kDefaultSeed = 248;
inline constexpr std::uint64_t kCensusSamples = 1'000'000;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t census_samples = kCensusSamples;
  bool determinism = true;  // criterion 12: a second run from an empty cache
};

struct Criterion {
  int id = 0;
  std::string name;
  bool correct = false;
  double seconds = 0;
  double limit = 0;
  std::string summary;
  nlohmann::json detail;

  bool within_limit() const { return seconds < limit; }
  bool pass() const { return correct && within_limit(); }
};

/// Pairs i < j of vertices not joined in the graph.
inline std::vector<std::pair<int, int>> non_adjacent_pairs(const CartanDatum& d) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < d.rank; ++i) {
    for (int j = i + 1; j < d.rank; ++j) {
      if (d.at(i, j) == 0) out.emplace_back(i, j);
    }
  }
  return out;
}

template <std::uint32_t P>
bool one_parameter_law(const AdjointOperator& e) {
  using F = Fp<P>;
  std::vector<Matrix<F>> ex;
  for (std::uint32_t l = 0; l < P; ++l) ex.push_back(exp_unipotent<F>(e, F(l)));
  for (std::uint32_t a = 0; a < P; ++a) {
    for (std::uint32_t b = 0; b < P; ++b) {
      if (!(ex[a] * ex[b] == ex[(a + b) % P])) return false;
    }
  }
  return true;
}

/// q(q^2 - 1) / gcd(2, q - 1): order of the adjoint group of type A1.
inline std::uint64_t adjoint_a1_order(std::uint64_t q) { return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1); }

/// q^3 (q^3 - 1)(q^2 - 1) / gcd(3, q - 1): order of the adjoint group of type A2.
inline std::uint64_t adjoint_a2_order(std::uint64_t q) {
  return q * q * q * (q * q * q - 1) * (q * q - 1) / std::gcd<std::uint64_t>(3, q - 1);
}

inline std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

/// Runs criteria 1-11 against a private root cache in a fresh directory.
class Runner {
 public:
  explicit Runner(Options opt) : opt_(opt) {
    static int counter = 0;
    dir_ = std::filesystem::temp_directory_path() /
           ("lie8-verify-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
    cache_ = RootCache(dir_);
  }
  ~Runner() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  Runner(const Runner&) = delete;
  Runner& operator=(const Runner&) = delete;

  std::vector<Criterion> run(const std::function<void(const Criterion&)>& on_result = {}) {
    std::vector<Criterion> out;
    auto go = [&](int id, std::string name, double limit, auto body) {
      Criterion c;
      c.id = id;
      c.name = std::move(name);
      c.limit = limit;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        body(c);
      } catch (const std::exception& e) {
        c.correct = false;
        c.summary = std::string("exception: ") + e.what();
        c.detail["exception"] = e.what();
      }
      c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (on_result) on_result(c);
      out.push_back(std::move(c));
    };
    go(1, "root counts", 1, [&](Criterion& c) { root_counts(c); });
    go(2, "module dimensions", 1, [&](Criterion& c) { module_dimensions(c); });
    go(3, "Weyl order", 30, [&](Criterion& c) { weyl_order(c); });
    go(4, "class census", 300, [&](Criterion& c) { class_census(c); });
    go(5, "Coxeter class", 60, [&](Criterion& c) { coxeter_class(c); });
    go(6, "operator identities", 120, [&](Criterion& c) { operator_identities(c); });
    go(7, "small Chevalley closures", 60, [&](Criterion& c) { chevalley_closures(c); });
    go(8, "finite-model orders", 120, [&](Criterion& c) { finite_model_orders(c); });
    go(9, "B2 strata at q=3", 600, [&](Criterion& c) { strata(c); });
    go(10, "well-definedness of G_C", 600, [&](Criterion& c) { well_defined(c); });
    go(11, "property suites", 180, [&](Criterion& c) { property_suites(c); });
    return out;
  }

  std::size_t cache_hits() const { return cache_.hits(); }
  std::size_t cache_misses() const { return cache_.misses(); }

 private:
  const RootSystem& system(const std::string& type) {
    auto it = systems_.find(type);
    if (it == systems_.end()) {
      it = systems_.emplace(type, std::make_unique<RootSystem>(cache_.get(parse_type(type)))).first;
    }
    return *it->second;
  }

  void root_counts(Criterion& c) {
    const auto& rs = system("E8");
    c.correct = rs.size() == 240 && rs.num_positive() == 120;
    c.detail = {{"roots", rs.size()}, {"positive", rs.num_positive()}};
    c.summary = "|R| = " + std::to_string(rs.size()) + ", |R+| = " + std::to_string(rs.num_positive());
  }

  void module_dimensions(Criterion& c) {
    AdjointModule m(system("E8"));
    c.correct = m.dim() == 248 && m.dim_positive() == 120;
    c.detail = {{"dim", m.dim()}, {"dim_positive", m.dim_positive()}};
    c.summary = "dim M = " + std::to_string(m.dim()) + ", dim M+ = " + std::to_string(m.dim_positive());
  }

  void weyl_order(Criterion& c) {
    StabilizerChain chain = weyl_chain(system("E8"));
    const std::uint64_t order = chain.order();
    const std::uint64_t expected = factorial(4) * factorial(6) * factorial(8);
    const bool certified = chain.verify();
    c.correct = order == expected && certified;
    c.detail = {{"order", std::to_string(order)},
                {"expected", std::to_string(expected)},
                {"base_length", chain.base_length()},
                {"verified", certified}};
    c.summary = "|W(E8)| = " + std::to_string(order) + " (4!6!8! = " + std::to_string(expected) + ")";
  }

  void class_census(Criterion& c) {
    Census cen = sample_class_census(system("E8"), opt_.census_samples, opt_.seed);
    c.correct = cen.distinct == 112 && cen.elliptic == 30;
    c.detail = {{"samples", std::to_string(cen.samples)},
                {"seed", std::to_string(cen.seed)},
                {"distinct", cen.distinct},
                {"elliptic", cen.elliptic},
                {"distinct_sampled", cen.distinct_sampled},
                {"elliptic_sampled", cen.elliptic_sampled}};
    c.summary = std::to_string(cen.distinct) + " fingerprints, " + std::to_string(cen.elliptic) +
                " elliptic (raw draws alone: " + std::to_string(cen.distinct_sampled) + ", " +
                std::to_string(cen.elliptic_sampled) + ")";
    if (cen.distinct < 112) c.summary += "; FINGERPRINT INCOMPLETE OR CENSUS SHORT";
  }

  void coxeter_class(Criterion& c) {
    const auto& rs = system("E8");
    StabilizerChain chain = weyl_chain(rs);
    std::mt19937_64 rng(opt_.seed + 30);
    const Fingerprint cox = fingerprint(coxeter_element(rs));
    std::size_t found = 0, draws = 0, same = 0, reach8 = 0, cox_reach8 = 0;
    std::set<int> lengths;
    std::set<std::vector<std::int64_t>> charpolys;
    std::set<Fingerprint> prints;
    while (found < 100) {
      WeylElement w(rs, chain.random_element(rng));
      ++draws;
      if (element_order(w) != 30) continue;
      ++found;
      const Fingerprint fp = fingerprint(w);
      prints.insert(fp);
      charpolys.insert(fp.charpoly);
      same += fp == cox;
      const int ml = min_length_descent(w).min_length;
      lengths.insert(ml);
      reach8 += ml == 8;
      cox_reach8 += fp == cox && ml == 8;
    }
    c.correct = same == 100 && reach8 == 100;

    // s_i over every vertex but 3: Coxeter element of a parabolic A4+A2+A1.
    std::vector<int> word;
    for (int i = 0; i < rs.rank(); ++i) {
      if (i != 3) word.push_back(i);
    }
    const WeylElement par = from_word(rs, word);
    const bool witness = element_order(par) == 30 && !is_elliptic(par);

    c.detail = {{"elements", found},
                {"draws", std::to_string(draws)},
                {"same_fingerprint", same},
                {"min_length_8", reach8},
                {"coxeter_fingerprint_min_length_8", cox_reach8},
                {"distinct_fingerprints", prints.size()},
                {"distinct_charpolys", charpolys.size()},
                {"fixed_vector_witness", {{"word", word}, {"order_30_not_elliptic", witness}}},
                {"min_lengths", std::vector<int>(lengths.begin(), lengths.end())}};
    c.summary = std::to_string(same) + "/100 share the Coxeter fingerprint, " + std::to_string(reach8) +
                "/100 descend to length 8; the draws meet " + std::to_string(charpolys.size()) +
                " characteristic polynomials";
    if (witness) c.summary += "; s0 s1 s2 s4 s5 s6 s7 has order 30 and a fixed vector";
  }

  void operator_identities(Criterion& c) {
    std::size_t operators = 0, failures = 0, commuting = 0;
    std::vector<std::string> failed;
    for (const auto& type : ade_types_up_to_rank8()) {
      AdjointModule m(system(type));
      for (int i = 0; i < m.system().rank(); ++i) {
        for (int eps : {1, -1}) {
          ++operators;
          try {
            auto e = build_E(m, i, eps);
            divided_square(e);  // E^3 = 0 and E^2 even, or throws
            if (!one_parameter_law<2>(e) || !one_parameter_law<3>(e) || !one_parameter_law<5>(e)) {
              throw IntegrityError("one-parameter law fails");
            }
          } catch (const std::exception& ex) {
            ++failures;
            failed.push_back(type + " E_{" + std::to_string(i) + "," + std::to_string(eps) + "}: " + ex.what());
          }
        }
        try {
          sl2_check(m, i);
        } catch (const std::exception& ex) {
          ++failures;
          failed.push_back(type + " sl2 " + ex.what());
        }
      }
      for (auto [i, j] : non_adjacent_pairs(m.system().datum())) {
        ++commuting;
        try {
          commuting_check(m, i, j);
        } catch (const std::exception& ex) {
          ++failures;
          failed.push_back(type + " commuting " + ex.what());
        }
      }
    }
    c.correct = failures == 0;
    c.detail = {{"types", ade_types_up_to_rank8()},
                {"operators", operators},
                {"commuting_pairs", commuting},
                {"failures", failed}};
    c.summary = std::to_string(operators) + " operators over " +
                std::to_string(ade_types_up_to_rank8().size()) + " types, " + std::to_string(commuting) +
                " commuting pairs, " + std::to_string(failures) + " failures";
  }

  void chevalley_closures(Criterion& c) {
    AdjointModule a1(system("A1"));
    AdjointModule a2(system("A2"));
    const std::uint64_t a2p2 = chevalley_group_order(a2, 2);
    const std::uint64_t a1p2 = chevalley_group_order(a1, 2);
    const std::uint64_t a1p3 = chevalley_group_order(a1, 3);
    c.correct = a2p2 == 168 && a2p2 == adjoint_a2_order(2) && a1p2 == adjoint_a1_order(2) &&
                a1p3 == adjoint_a1_order(3);
    c.detail = {{"A2_p2", a2p2}, {"A1_p2", a1p2}, {"A1_p3", a1p3},
                {"A1_p2_oracle", adjoint_a1_order(2)}, {"A1_p3_oracle", adjoint_a1_order(3)}};
    c.summary = "A2/F2 " + std::to_string(a2p2) + ", A1/F2 " + std::to_string(a1p2) + " (oracle " +
                std::to_string(adjoint_a1_order(2)) + "), A1/F3 " + std::to_string(a1p3) + " (oracle " +
                std::to_string(adjoint_a1_order(3)) + ")";
  }

  void finite_model_orders(Criterion& c) {
    const std::size_t g2 = sp4::sp4_group(2).size();
    const std::size_t g3 = sp4::sp4_group(3).size();
    const std::size_t f2 = sp4::FlagSpace(2).size();
    const std::size_t f3 = sp4::FlagSpace(3).size();
    c.correct = g2 == 720 && g2 == sp4::sp4_order_formula(2) && g3 == 51840 &&
                g3 == sp4::sp4_order_formula(3) && f2 == 45 && f2 == sp4::flag_count_formula(2) &&
                f3 == 160 && f3 == sp4::flag_count_formula(3);
    c.detail = {{"sp4_2", g2}, {"sp4_3", g3}, {"flags_2", f2}, {"flags_3", f3}};
    c.summary = "|Sp4(F2)| = " + std::to_string(g2) + ", |Sp4(F3)| = " + std::to_string(g3) + ", flags " +
                std::to_string(f2) + " and " + std::to_string(f3);
  }

  void strata(Criterion& c) {
    model3_ = std::make_unique<sp4::FiniteModel>(3);
    report3_ = sp4::stratum_map(*model3_);
    const auto& m = *model3_;
    const auto& r = *report3_;
    const auto& th = r.theorem;
    std::map<std::string, int> delta;
    std::map<std::string, std::vector<std::uint32_t>> boxed;
    for (const auto& s : r.strata) {
      delta[s.label] = s.delta;
      boxed[s.label] = s.boxed;
    }
    const std::map<std::string, int> expected{{"C4", 8}, {"C4^2", 6}, {"C'", 4}, {"C''", 4}, {"{1}", 0}};

    auto classes_of_dim = [&](int d) {
      std::vector<std::uint32_t> out;
      for (std::uint32_t k = 0; k < m.classes().size(); ++k) {
        if (m.classes()[k].dimension == d) out.push_back(k);
      }
      return out;
    };
    auto geometric_of = [&](const std::vector<std::uint32_t>& ids) {
      std::set<std::uint32_t> g;
      for (auto k : ids) g.insert(m.classes()[k].geometric);
      return g.size();
    };
    const auto& one = boxed["{1}"];
    const bool identity_only = one.size() == 1 && m.classes()[one.front()].size == 1 &&
                               sp4::unpack(m.classes()[one.front()].rep) == sp4::identity();
    std::vector<std::uint32_t> dim4 = boxed["C'"];
    dim4.insert(dim4.end(), boxed["C''"].begin(), boxed["C''"].end());
    std::sort(dim4.begin(), dim4.end());
    const bool exact_match = boxed["C4"] == classes_of_dim(8) && boxed["C4^2"] == classes_of_dim(6) &&
                          dim4 == classes_of_dim(4) && geometric_of(boxed["C'"]) == 1 &&
                          geometric_of(boxed["C''"]) == 1;
    c.correct = r.strata.size() == 5 && th.distinct_strata == 5 && delta == expected && identity_only &&
                th.cover && th.equal_or_disjoint && th.elliptic_delta && th.nonempty && exact_match;
    c.detail = {{"deltas", delta},
                {"distinct_strata", th.distinct_strata},
                {"identity_stratum", identity_only},
                {"a_cover", th.cover},
                {"b_equal_or_disjoint", th.equal_or_disjoint},
                {"d_elliptic_delta", th.elliptic_delta},
                {"g_c_nonempty", th.nonempty},
                {"boxed_sets_match_dimension_classes", exact_match},
                {"c_unipotent_merged_single", th.unipotent_merged_single},
                {"c_unipotent_raw_single", th.unipotent_raw_single},
                {"cover_rational_flags", th.cover_rational_flags},
                {"uncovered_rational", th.uncovered_rational},
                {"group_order", std::to_string(r.group_order)},
                {"classes", m.classes().size()},
                {"geometric_classes", m.geometric_count()}};
    c.summary = "dims C4 " + std::to_string(delta["C4"]) + ", C4^2 " + std::to_string(delta["C4^2"]) +
                ", C' " + std::to_string(delta["C'"]) + ", C'' " + std::to_string(delta["C''"]) + ", {1} " +
                std::to_string(delta["{1}"]) + "; (a) " + (th.cover ? "yes" : "no") + " (b) " +
                (th.equal_or_disjoint ? "yes" : "no") + " (d) " + (th.elliptic_delta ? "yes" : "no") +
                "; rational flags alone leave " + std::to_string(th.uncovered_rational.size()) +
                " class(es) uncovered";
  }

  void well_defined(Criterion& c) {
    if (!model3_) throw IntegrityError("criterion 10 needs the run of criterion 9");
    const auto unstable = sp4::first_unstable_element(*model3_);
    std::size_t pairs = 0;
    for (const auto& s : report3_->strata) pairs += s.cmin.size() * (s.cmin.size() - 1) / 2;
    c.correct = report3_->theorem.well_defined && !unstable;
    c.detail = {{"well_defined", report3_->theorem.well_defined},
                {"cmin_pairs", pairs},
                {"g_w_union_of_classes", !unstable}};
    c.summary = std::string("G_w equal across C_min for all 5 classes: ") +
                (report3_->theorem.well_defined ? "yes" : "no") + " (" + std::to_string(pairs) +
                " pair(s)); G_w a union of classes over all 25920 elements: " + (unstable ? "no" : "yes");
  }

  void property_suites(Criterion& c) {
    nlohmann::json per = nlohmann::json::object();
    bool ok = true;
    for (const std::string type : {"A1", "A2", "A3", "B2", "D4", "E6"}) {
      const auto& rs = system(type);
      ClassPartition part = conjugacy_partition(rs);
      const auto& t = part.table;
      std::uint64_t total = 0;
      std::set<Fingerprint> fps;
      for (const auto& k : part.classes) {
        total += *k.size;
        fps.insert(k.fingerprint);
      }
      bool fp_constant = true, descent = true, inverse_length = true;
      for (std::size_t x = 0; x < t.size(); ++x) {
        const auto& rec = part.classes[part.class_of[x]];
        if (fingerprint(t[x]) != rec.fingerprint) fp_constant = false;
        if (min_length_descent(t[x]).min_length != rec.min_length) descent = false;
        if (length(invert(t[x])) != t.length_of(x)) inverse_length = false;
      }
      const bool sizes = total == group_order_bsgs(rs) && total == t.size();
      const bool complete = fps.size() == part.classes.size();
      const bool all = sizes && complete && fp_constant && descent && inverse_length;
      ok = ok && all;
      per[type] = {{"order", std::to_string(total)},
                   {"classes", part.classes.size()},
                   {"fingerprints", fps.size()},
                   {"sizes_sum_to_order", sizes},
                   {"fingerprint_constant", fp_constant},
                   {"fingerprint_complete", complete},
                   {"descent_matches_scan", descent},
                   {"length_inverse", inverse_length}};
    }
    c.correct = ok;
    c.detail = per;
    c.summary = std::string("A1 A2 A3 B2 D4 E6: ") + (ok ? "all properties hold" : "FAILURES, see detail");
  }

  Options opt_;
  std::filesystem::path dir_;
  RootCache cache_;
  std::map<std::string, std::unique_ptr<RootSystem>> systems_;
  std::unique_ptr<sp4::FiniteModel> model3_;
  std::optional<sp4::StrataReport> report3_;
};

/// Report of a run, without timings.
inline nlohmann::json report_json(const std::vector<Criterion>& results) {
  nlohmann::json d = document("verify");
  nlohmann::json list = nlohmann::json::array();
  bool all = true;
  for (const auto& c : results) {
    all = all && c.correct;
    list.push_back({{"id", c.id}, {"name", c.name}, {"correct", c.correct}, {"detail", c.detail}});
  }
  d["criteria"] = std::move(list);
  d["all_correct"] = all;
  return d;
}

/// Criteria 1-11, then (if requested) criterion 12: a second run in a new
/// empty cache whose JSON must equal the first byte for byte.
inline std::vector<Criterion> run_all(const Options& opt,
                                      const std::function<void(const Criterion&)>& on_result = {}) {
  std::vector<Criterion> results;
  {
    Runner r(opt);
    results = r.run(on_result);
  }
  if (!opt.determinism) return results;
  Criterion c;
  c.id = 12;
  c.name = "determinism";
  c.limit = std::numeric_limits<double>::infinity();  // no stated limit
  const auto t0 = std::chrono::steady_clock::now();
  try {
    std::vector<Criterion> again;
    {
      Runner r(opt);
      again = r.run();
    }
    const std::string a = report_json(results).dump();
    const std::string b = report_json(again).dump();
    c.correct = a == b;
    c.detail = {{"bytes", a.size()}, {"identical", c.correct}};
    c.summary = std::string("second run from an empty cache: ") + (c.correct ? "byte-identical" : "DIFFERS") +
                " (" + std::to_string(a.size()) + " bytes)";
  } catch (const std::exception& e) {
    c.correct = false;
    c.summary = std::string("exception: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (on_result) on_result(c);
  results.push_back(std::move(c));
  return results;
}

}  // namespace lie8::verify
