#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "lie8/adjoint.hpp"
#include "lie8/root_cache.hpp"
#include "lie8/strata.hpp"
#include "lie8/weyl.hpp"
#include "lie8/weyl_classes.hpp"

// JSON documents. Objects are key-sorted (nlohmann::json default), counts
// that may exceed 2^53 are decimal strings, and nothing time-dependent is
// written, so identical inputs give byte-identical output.

namespace lie8 {

using nlohmann::json;

inline json document(const std::string& kind) {
  return {{"schema_version", kSchemaVersion}, {"kind", kind}};
}

inline json to_json(const CycleType& c) {
  json out = json::array();
  for (auto [len, count] : c) out.push_back({len, count});
  return out;
}

inline json to_json(const Fingerprint& fp) {
  json ref = json::array();
  for (const auto& c : fp.refinement) ref.push_back(to_json(c));
  return {{"cycles", to_json(fp.cycles)}, {"charpoly", fp.charpoly}, {"refinement", std::move(ref)}};
}

inline json roots_document(const RootSystem& rs) {
  json d = root_system_document(rs);
  d["kind"] = "roots";
  d["total"] = rs.size();
  return d;
}

inline json to_json(const ClassRecord& c) {
  json out{{"fingerprint", to_json(c.fingerprint)},
           {"min_length", c.min_length},
           {"elliptic", c.elliptic},
           {"order", std::to_string(c.order)},
           {"representative", reduced_word(c.representative)}};
  if (c.size) out["size"] = std::to_string(*c.size);
  if (!c.minimal_elements.empty()) out["cmin_size"] = c.minimal_elements.size();
  return out;
}

inline json classes_document(const RootSystem& rs, const std::vector<ClassRecord>& classes) {
  json d = document("classes");
  d["type"] = rs.name();
  std::uint64_t total = 0;
  std::size_t elliptic = 0;
  json list = json::array();
  for (const auto& c : classes) {
    total += c.size.value_or(0);
    elliptic += c.elliptic;
    list.push_back(to_json(c));
  }
  d["group_order"] = std::to_string(total);
  d["class_count"] = classes.size();
  d["elliptic_count"] = elliptic;
  d["classes"] = std::move(list);
  return d;
}

inline json census_document(const Census& c) {
  json d = document("census");
  d["type"] = c.type;
  d["samples"] = std::to_string(c.samples);
  d["seed"] = std::to_string(c.seed);
  d["power_closure"] = c.power_closure;
  d["distinct"] = c.distinct;
  d["elliptic"] = c.elliptic;
  d["distinct_sampled"] = c.distinct_sampled;
  d["elliptic_sampled"] = c.elliptic_sampled;
  json entries = json::array();
  for (const auto& e : c.entries) {
    entries.push_back({{"fingerprint", to_json(e.fingerprint)},
                       {"order", std::to_string(e.order)},
                       {"elliptic", e.elliptic},
                       {"hits", std::to_string(e.sampled_hits)},
                       {"reached_by_closure", e.reached_by_closure}});
  }
  d["entries"] = std::move(entries);
  return d;
}

/// Row-major entries of an integer operator.
inline json operator_document(const AdjointModule& m, const AdjointOperator& op) {
  json d = document("operator");
  d["type"] = m.system().name();
  d["vertex"] = op.vertex;
  d["sign"] = op.sign;
  d["rows"] = op.matrix.rows();
  d["cols"] = op.matrix.cols();
  d["entries"] = op.matrix.data();
  return d;
}

namespace sp4 {

inline json matrix_json(const Mat4& g) {
  json rows = json::array();
  for (int r = 0; r < 4; ++r) rows.push_back({g[r * 4], g[r * 4 + 1], g[r * 4 + 2], g[r * 4 + 3]});
  return rows;
}

inline json mask_json(std::uint8_t mask) {
  json out = json::array();
  for (int w = 0; w < 8; ++w) {
    if (mask >> w & 1u) out.push_back(w);
  }
  return out;
}

inline json strata_document(const FiniteModel& m, const StrataReport& r, const UnipotentReport& u) {
  json d = document("strata");
  d["type"] = "B2";
  d["q"] = r.q;
  d["group_order"] = std::to_string(r.group_order);
  d["geometric_class_count"] = m.geometric_count();

  json weyl = json::array();
  const auto& wt = m.weyl().table();
  for (std::size_t w = 0; w < wt.size(); ++w) {
    const auto& img = m.weyl().image(w);
    weyl.push_back({{"id", w},
                    {"word", reduced_word(wt[w])},
                    {"length", wt.length_of(w)},
                    {"permutation", std::vector<int>(img.begin(), img.end())}});
  }
  d["weyl_elements"] = std::move(weyl);

  json classes = json::array();
  for (std::size_t c = 0; c < m.classes().size(); ++c) {
    const auto& g = m.classes()[c];
    json rec{{"id", c},
             {"size", std::to_string(g.size)},
             {"order", g.order},
             {"unipotent", g.unipotent},
             {"geometric_class", g.geometric},
             {"representative", matrix_json(unpack(g.rep))},
             {"charpoly", std::vector<int>(g.charpoly.begin(), g.charpoly.end())},
             {"realized", mask_json(g.realized)},
             {"realized_geometric", mask_json(g.realized_geometric)}};
    rec["dimension"] = g.dimension ? json(*g.dimension) : json(nullptr);
    classes.push_back(std::move(rec));
  }
  d["classes"] = std::move(classes);

  json strata = json::array();
  for (const auto& s : r.strata) {
    strata.push_back({{"weyl_class", s.weyl_class},
                      {"label", s.label},
                      {"fingerprint", to_json(s.fingerprint)},
                      {"min_length", s.min_length},
                      {"elliptic", s.elliptic},
                      {"weyl_order", s.weyl_order},
                      {"cmin", s.cmin},
                      {"chosen", s.chosen},
                      {"well_defined", s.well_defined},
                      {"members", s.members},
                      {"members_size", std::to_string(s.members_size)},
                      {"delta", s.delta},
                      {"boxed", s.boxed},
                      {"boxed_size", std::to_string(s.boxed_size)},
                      {"unipotent_raw", s.unipotent_raw},
                      {"unipotent_merged", s.unipotent_merged}});
  }
  d["strata"] = std::move(strata);

  const auto& th = r.theorem;
  d["theorem"] = {{"g_c_nonempty", th.nonempty},
                  {"well_defined", th.well_defined},
                  {"a_cover", th.cover},
                  {"b_equal_or_disjoint", th.equal_or_disjoint},
                  {"c_unipotent_raw_single", th.unipotent_raw_single},
                  {"c_unipotent_merged_single", th.unipotent_merged_single},
                  {"d_elliptic_delta", th.elliptic_delta},
                  {"d_elliptic_unipotent_single", th.elliptic_unipotent_single},
                  {"distinct_strata", th.distinct_strata},
                  {"cover_rational_flags", th.cover_rational_flags},
                  {"uncovered_rational", th.uncovered_rational},
                  {"counterexamples", th.counterexamples}};

  d["unipotent"] = {{"classes", u.classes},
                    {"raw", u.raw},
                    {"merged", u.merged},
                    {"strata_containing", u.strata_containing},
                    {"each_in_one_stratum", u.each_in_one_stratum}};
  return d;
}

/// One row per (stratum, boxed class).
inline std::string strata_csv(const FiniteModel& m, const StrataReport& r) {
  std::string out = "stratum,label,min_length,elliptic,delta,class_id,class_size,class_order,dimension,unipotent\n";
  for (const auto& s : r.strata) {
    for (auto c : s.boxed) {
      const auto& g = m.classes()[c];
      out += std::to_string(s.weyl_class) + "," + s.label + "," + std::to_string(s.min_length) + "," +
             (s.elliptic ? "1" : "0") + "," + std::to_string(s.delta) + "," + std::to_string(c) + "," +
             std::to_string(g.size) + "," + std::to_string(g.order) + "," +
             (g.dimension ? std::to_string(*g.dimension) : "") + "," + (g.unipotent ? "1" : "0") + "\n";
    }
  }
  return out;
}

}  // namespace sp4
}  // namespace lie8
