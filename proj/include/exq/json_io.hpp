#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "exq/chartable.hpp"
#include "exq/clifford.hpp"
#include "exq/examples.hpp"
#include "exq/langlands.hpp"

namespace exq {

using nlohmann::json;

constexpr const char* kSchemaTag = "exq/1";

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
inline json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return json(v.convert_to<long long>());
  return json(v.str());
}

inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

inline json rat_to_json(const Rat& r) { return json::array({int_to_json(num(r)), int_to_json(den(r))}); }

inline Rat rat_from_json(const json& j) {
  if (j.is_array() && j.size() == 2) return Rat(int_from_json(j[0]), int_from_json(j[1]));
  if (j.is_number_integer()) return Rat(int_from_json(j));
  throw std::invalid_argument("expected rational as [num, den]");
}

inline json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(rows)}};
}

inline IntMatrix matrix_from_json(const json& j) {
  IntMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
  const json& rows = j.at("entries");
  if (static_cast<int>(rows.size()) != m.rows) throw std::invalid_argument("bad entry row count");
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols)
      throw std::invalid_argument("bad entry column count");
    for (int c = 0; c < m.cols; ++c) m.at(i, c) = int_from_json(rows[i][c]);
  }
  return m;
}

inline json point_to_json(const TorusPoint& t) {
  json coords = json::array();
  for (const auto& c : t.coords)
    coords.push_back(json{{"mag", rat_to_json(c.mag)}, {"angle", rat_to_json(c.angle)}});
  return json{{"coords", std::move(coords)}};
}

inline TorusPoint point_from_json(const json& j) {
  std::vector<TorusCoord> coords;
  for (const auto& c : j.at("coords"))
    coords.emplace_back(rat_from_json(c.at("mag")), rat_from_json(c.at("angle")));
  return TorusPoint(std::move(coords));
}

inline json vector_to_json(const std::vector<Int>& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(int_to_json(x));
  return out;
}

inline std::vector<Int> vector_from_json(const json& j) {
  std::vector<Int> out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

inline json datum_to_json(const RootDatum& rd) {
  json roots = json::array(), coroots = json::array();
  for (const auto& r : rd.roots) roots.push_back(vector_to_json(r));
  for (const auto& r : rd.coroots) coroots.push_back(vector_to_json(r));
  return json{{"rank", rd.rank},
              {"roots", std::move(roots)},
              {"coroots", std::move(coroots)},
              {"simple", rd.simple},
              {"name", rd.name}};
}

inline RootDatum datum_from_json(const json& j) {
  RootDatum rd;
  rd.rank = j.at("rank").get<int>();
  for (const auto& r : j.at("roots")) rd.roots.push_back(vector_from_json(r));
  for (const auto& r : j.at("coroots")) rd.coroots.push_back(vector_from_json(r));
  rd.simple = j.at("simple").get<std::vector<int>>();
  rd.name = j.value("name", std::string("datum"));
  rd.validate();
  return rd;
}

inline json chi_to_json(const InertialDatum& chi) {
  json gens = json::array();
  for (const auto& g : chi.generators) gens.push_back(point_to_json(g));
  return json{{"generators", std::move(gens)}};
}

inline InertialDatum chi_from_json(const json& j) {
  InertialDatum chi;
  for (const auto& g : j.at("generators")) chi.generators.push_back(point_from_json(g));
  return chi;
}

inline json structure_to_json(const FinAbGroupStructure& s) {
  json factors = json::array();
  for (const Int& f : s.invariant_factors) factors.push_back(int_to_json(f));
  return json{{"free_rank", s.free_rank}, {"invariant_factors", std::move(factors)}};
}

inline json snf_to_json(const SmithDecomposition& s) {
  return json{{"schema", kSchemaTag},
              {"U", matrix_to_json(s.U)},
              {"D", matrix_to_json(s.D)},
              {"V", matrix_to_json(s.V)}};
}

// Cyclotomic values as coefficient vectors over the declared root of unity.
inline json cyc_to_json(const CycField& f, const CycField::Elt& v) {
  json coeffs = json::array();
  for (const Rat& c : v) coeffs.push_back(rat_to_json(c));
  return json{{"order", f.order()}, {"coeffs", std::move(coeffs)}};
}

inline json chartable_to_json(const CharTable& t) {
  json classes = json::array();
  for (int j = 0; j < t.num_classes(); ++j)
    classes.push_back(json{{"size", t.classes.classes[j].size()},
                           {"representative", t.classes.representatives[j]},
                           {"element_order", t.class_element_order[j]}});
  json degrees = json::array();
  for (const Int& d : t.degrees) degrees.push_back(int_to_json(d));
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::array();
    for (const auto& v : row) r.push_back(cyc_to_json(*t.field, v));
    rows.push_back(std::move(r));
  }
  return json{{"schema", kSchemaTag},
              {"group_order", int_to_json(t.group_order)},
              {"cyclotomic_order", t.field->order()},
              {"classes", std::move(classes)},
              {"degrees", std::move(degrees)},
              {"rows", std::move(rows)}};
}

inline json fiber_to_json(const FiberReport& r) {
  return json{{"schema", kSchemaTag},
              {"point", point_to_json(r.point)},
              {"stabilizer_order", r.stabilizer_order},
              {"class_count", r.class_count},
              {"irr_count", r.irr_count},
              {"predicted_constituents", r.predicted_constituents}};
}

inline json eq_to_json(const SeriesContext& ctx, const std::vector<EQComponentFirst>& eq) {
  json entries = json::array();
  for (const auto& e : eq) {
    json samples = json::array();
    for (const auto& s : e.locus.sample_points) samples.push_back(point_to_json(s));
    entries.push_back(json{{"class_index", e.class_index},
                           {"class_representative", matrix_to_json(ctx.ws.elem(e.class_rep))},
                           {"dimension", e.locus.dimension},
                           {"component_count", int_to_json(e.locus.component_count)},
                           {"structure", structure_to_json(e.locus.structure)},
                           {"component_orbit", e.component_orbit},
                           {"quotient_component_count", int_to_json(e.quotient_component_count)},
                           {"sample_points", std::move(samples)}});
  }
  return json{{"schema", kSchemaTag}, {"group_order", ctx.ws.size()}, {"components", std::move(entries)}};
}

inline const char* cocycle_flag_name(CocycleFlag f) {
  switch (f) {
    case CocycleFlag::proved_trivial:
      return "proved-trivial";
    case CocycleFlag::nontrivial_detected:
      return "nontrivial-detected";
    default:
      return "undetermined";
  }
}

inline json clifford_to_json(const CliffordListing& res, const CocycleStatus& st) {
  json labels = json::array();
  for (const auto& l : res.labels) {
    bool settled = l.orbit < static_cast<int>(st.per_orbit.size()) &&
                   st.per_orbit[l.orbit] == CocycleFlag::proved_trivial;
    labels.push_back(json{{"orbit", l.orbit},
                          {"orbit_representative_row", l.orbit_rep_row},
                          {"chi_dim", int_to_json(l.chi_dim)},
                          {"stabilizer_order", l.stabilizer_order},
                          {"psi", l.psi},
                          {"psi_dim", int_to_json(l.psi_dim)},
                          {"psi_status", settled ? "ordinary" : "projective, multiplicity unresolved"},
                          {"dim", int_to_json(l.dim)}});
  }
  json flags = json::array();
  for (auto f : st.per_orbit) flags.push_back(cocycle_flag_name(f));
  return json{{"schema", kSchemaTag},
              {"labels", std::move(labels)},
              {"validation",
               json{{"per_orbit", std::move(flags)},
                    {"label_count", int_to_json(st.label_count)},
                    {"product_class_count", int_to_json(st.product_class_count)},
                    {"label_dim_square_sum", int_to_json(st.label_dim_square_sum)},
                    {"product_order", int_to_json(st.product_order)}}}};
}

inline json report_to_json(const ExampleReport& rep) {
  json facts = json::array();
  for (const auto& f : rep.facts)
    facts.push_back(json{{"name", f.name},
                         {"computed", f.computed},
                         {"expected", f.expected},
                         {"provenance", f.provenance},
                         {"pass", f.pass}});
  return json{{"schema", kSchemaTag},
              {"example", rep.example},
              {"facts", std::move(facts)},
              {"all_pass", rep.all_pass()}};
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace exq
