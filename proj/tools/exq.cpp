// exq: exact extended-quotient computations for principal-series data.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "exq/examples.hpp"
#include "exq/json_io.hpp"

using namespace exq;

namespace {

struct Output {
  std::string path;

  void emit(const json& j) const {
    if (path.empty()) {
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write output file: " + path);
    out << j.dump(2) << "\n";
  }
};

RootDatum resolve_datum(const std::string& spec) {
  if (spec.rfind("gl", 0) == 0 && spec.size() > 2 && std::isdigit(static_cast<unsigned char>(spec[2])))
    return gl_datum(std::stoi(spec.substr(2)));
  if (spec.rfind("pgl", 0) == 0 && spec.size() > 3 && std::isdigit(static_cast<unsigned char>(spec[3])))
    return pgl_datum(std::stoi(spec.substr(3)));
  if (spec == "b2") return b2_datum();
  if (spec == "g2") return g2_datum();
  return datum_from_json(load_json_file(spec));
}

InertialDatum resolve_chi(const std::string& path, int rank) {
  if (path.empty()) {
    InertialDatum chi;
    chi.generators.push_back(TorusPoint::one(rank));
    return chi;
  }
  InertialDatum chi = chi_from_json(load_json_file(path));
  chi.validate(rank);
  return chi;
}

WsMode resolve_mode(const std::string& mode) {
  if (mode == "roots") return WsMode::roots;
  if (mode == "stabilizer") return WsMode::stabilizer;
  throw std::invalid_argument("mode must be 'roots' or 'stabilizer'");
}

SeriesContext make_context(const std::string& datum_spec, const std::string& chi_path,
                           const std::string& mode, std::size_t bound) {
  RootDatum rd = resolve_datum(datum_spec);
  MatGroup w = weyl_group(rd, bound);
  InertialDatum chi = resolve_chi(chi_path, rd.rank);
  WsResult r = compute_Ws(rd, w, chi, resolve_mode(mode));
  return SeriesContext(r.h_datum, std::move(r.ws));
}

Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) parts.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return Partition(parts);
}

MatGroup group_from_file(const std::string& path, std::size_t bound) {
  json j = load_json_file(path);
  std::vector<IntMatrix> gens;
  for (const auto& g : j.at("generators")) gens.push_back(matrix_from_json(g));
  if (gens.empty()) throw std::invalid_argument("generator file contains no generators");
  int n = gens.front().rows;
  return MatGroup(std::move(gens), MatOps(n), bound);
}

PermGroup perm_group_from_file(const std::string& path, std::size_t bound) {
  json j = load_json_file(path);
  std::vector<std::vector<int>> gens = j.at("perm_generators").get<std::vector<std::vector<int>>>();
  if (gens.empty()) throw std::invalid_argument("no permutation generators given");
  int deg = static_cast<int>(gens.front().size());
  return PermGroup(std::move(gens), PermOps(deg), bound);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact extended quotients, Clifford labels, and principal-series parameters"};
  app.require_subcommand(1);

  std::size_t bound = kDefaultGroupBound;
  app.add_option("--bound", bound, "group closure bound")->envname("EXQ_BOUND");
  Output out;
  app.add_option("--out", out.path, "write the JSON report to this file");

  // snf
  std::string snf_file;
  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf_cmd->add_option("file", snf_file, "matrix JSON file")->required();

  // group
  std::string group_gens;
  auto* group_cmd = app.add_subcommand("group", "closure computations for a matrix group");
  auto* classes_cmd = group_cmd->add_subcommand("classes", "conjugacy classes");
  auto* chartable_cmd = group_cmd->add_subcommand("chartable", "exact character table");
  group_cmd->require_subcommand(1);
  classes_cmd->add_option("--generators", group_gens, "generator matrices JSON file")->required();
  chartable_cmd->add_option("--generators", group_gens, "generator matrices JSON file")->required();

  // ws
  std::string ws_datum, ws_chi, ws_mode = "roots";
  auto* ws_cmd = app.add_subcommand("ws", "Bernstein group W^s from inertial data");
  ws_cmd->add_option("--datum", ws_datum, "root datum (name or file)")->required();
  ws_cmd->add_option("--chi", ws_chi, "inertial generators JSON file");
  ws_cmd->add_option("--mode", ws_mode, "roots | stabilizer");

  // components
  std::string comp_datum, comp_chi, comp_mode = "roots";
  auto* comp_cmd = app.add_subcommand("components", "extended quotient of the first kind");
  comp_cmd->add_option("--datum", comp_datum, "root datum (name or file)")->required();
  comp_cmd->add_option("--ws-chi", comp_chi, "inertial generators for W^s");
  comp_cmd->add_option("--mode", comp_mode, "roots | stabilizer");

  // fiber
  std::string fiber_datum, fiber_chi, fiber_point, fiber_mode = "roots";
  auto* fiber_cmd = app.add_subcommand("fiber", "fiber cardinality over a torus point");
  fiber_cmd->add_option("--datum", fiber_datum, "root datum (name or file)")->required();
  fiber_cmd->add_option("--point", fiber_point, "torus point JSON file")->required();
  fiber_cmd->add_option("--ws-chi", fiber_chi, "inertial generators for W^s");
  fiber_cmd->add_option("--mode", fiber_mode, "roots | stabilizer");

  // clifford
  std::string cl_g1, cl_g, cl_action;
  auto* cl_cmd =
      app.add_subcommand("clifford", "twisted extended quotient labels for a semidirect product");
  cl_cmd->add_option("--g1", cl_g1, "normal factor permutation group file")->required();
  cl_cmd->add_option("--g", cl_g, "acting group permutation file")->required();
  cl_cmd->add_option("--action", cl_action, "generator images file")->required();

  // lparam
  std::string lp_chi, lp_t, lp_lambda;
  auto* lp_cmd = app.add_subcommand("lparam", "assemble an L-parameter");
  lp_cmd->add_option("--chi", lp_chi, "inertial generators JSON file");
  lp_cmd->add_option("--t", lp_t, "torus point JSON file")->required();
  lp_cmd->add_option("--lambda", lp_lambda, "partition, e.g. 3,1")->required();

  // lpackets
  std::string pk_datum, pk_chi, pk_points, pk_mode = "roots";
  auto* pk_cmd = app.add_subcommand("lpackets", "L-packet classes of assembled parameters");
  pk_cmd->add_option("--datum", pk_datum, "root datum (name or file)")->required();
  pk_cmd->add_option("--ws-chi", pk_chi, "inertial generators for W^s");
  pk_cmd->add_option("--mode", pk_mode, "roots | stabilizer");
  pk_cmd->add_option("--points", pk_points, "points JSON file")->required();

  // example
  std::string ex_name, ex_datum = "gl3", ex_chi, ex_mode = "roots";
  int ex_n = 4;
  auto* ex_cmd = app.add_subcommand("example", "run a built-in example suite");
  ex_cmd->add_option("name", ex_name, "sl4 | gln | lowest-cell")->required();
  ex_cmd->add_option("--n", ex_n, "rank for the gln example");
  ex_cmd->add_option("--datum", ex_datum, "datum for the lowest-cell example");
  ex_cmd->add_option("--chi", ex_chi, "inertial generators for the lowest-cell example");
  ex_cmd->add_option("--mode", ex_mode, "roots | stabilizer");

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*snf_cmd) {
      IntMatrix a = matrix_from_json(load_json_file(snf_file));
      if (a.empty()) throw std::invalid_argument("matrix must be nonempty");
      out.emit(snf_to_json(smith_normal_form(a)));
    } else if (*group_cmd) {
      MatGroup g = group_from_file(group_gens, bound);
      if (*classes_cmd) {
        ConjClassSet cls = conjugacy_classes(g);
        json classes = json::array();
        for (int c = 0; c < cls.count(); ++c)
          classes.push_back(json{{"size", cls.classes[c].size()},
                                 {"representative", matrix_to_json(g.elem(cls.representatives[c]))}});
        out.emit(json{{"schema", kSchemaTag}, {"order", g.size()}, {"classes", classes}});
      } else if (*chartable_cmd) {
        out.emit(chartable_to_json(character_table(g)));
      }
    } else if (*ws_cmd) {
      RootDatum rd = resolve_datum(ws_datum);
      MatGroup w = weyl_group(rd, bound);
      InertialDatum chi = resolve_chi(ws_chi, rd.rank);
      WsResult r = compute_Ws(rd, w, chi, resolve_mode(ws_mode));
      json roots = json::array();
      for (int i : r.rs_roots) roots.push_back(vector_to_json(rd.roots[i]));
      out.emit(json{{"schema", kSchemaTag},
                    {"ambient_order", w.size()},
                    {"ws_order", r.ws.size()},
                    {"rs_roots", roots},
                    {"h_datum", datum_to_json(r.h_datum)}});
    } else if (*comp_cmd) {
      SeriesContext ctx = make_context(comp_datum, comp_chi, comp_mode, bound);
      out.emit(eq_to_json(ctx, extended_quotient_first(ctx)));
    } else if (*fiber_cmd) {
      SeriesContext ctx = make_context(fiber_datum, fiber_chi, fiber_mode, bound);
      TorusPoint t = point_from_json(load_json_file(fiber_point));
      out.emit(fiber_to_json(fiber_cardinality(ctx, t)));
    } else if (*cl_cmd) {
      PermGroup g1 = perm_group_from_file(cl_g1, bound);
      PermGroup g = perm_group_from_file(cl_g, bound);
      json aj = load_json_file(cl_action);
      std::vector<std::vector<int>> images;
      for (const auto& per_gen : aj.at("images")) {
        std::vector<int> imgs;
        for (const auto& perm : per_gen) imgs.push_back(g1.index_of(perm.get<std::vector<int>>()));
        images.push_back(std::move(imgs));
      }
      SemidirectDatum<PermOps, PermOps> d(std::move(g1), std::move(g), images);
      CliffordListing listing = clifford_irr_list(d);
      CocycleStatus status = validate_clifford(d);
      out.emit(clifford_to_json(listing, status));
    } else if (*lp_cmd) {
      TorusPoint t = point_from_json(load_json_file(lp_t));
      InertialDatum chi = resolve_chi(lp_chi, t.rank());
      Partition lambda = parse_partition(lp_lambda);
      LParameter p = build_phi(chi, t, lambda);
      out.emit(json{{"schema", kSchemaTag},
                    {"chi_hat", chi_to_json(p.chi_hat)},
                    {"t", point_to_json(p.t)},
                    {"nilpotent", p.nilpotent.parts},
                    {"h_exponents", vector_to_json(p.h.exponents)}});
    } else if (*pk_cmd) {
      SeriesContext ctx = make_context(pk_datum, pk_chi, pk_mode, bound);
      json pj = load_json_file(pk_points);
      std::vector<SecondKindPoint> pts;
      InertialDatum chi = resolve_chi(pk_chi, ctx.rank());
      for (const auto& entry : pj.at("points")) {
        TorusPoint t = point_from_json(entry.at("t"));
        Partition lambda = Partition(entry.at("lambda").get<std::vector<int>>());
        int psi = entry.value("psi", 0);
        ReederParameter rp = mu_assemble(ctx, t, lambda, 0, psi, chi);
        SecondKindPoint pt;
        pt.t = rp.t;
        pt.tau = 0;
        pt.springer = SpringerData{rp.x, rp.rho, rp.psi, rp.h};
        pts.push_back(std::move(pt));
      }
      std::vector<int> packet(pts.size(), -1);
      int next = 0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (packet[i] >= 0) continue;
        packet[i] = next;
        for (std::size_t j = i + 1; j < pts.size(); ++j)
          if (packet[j] < 0 && lpacket_equiv(ctx, pts[i], pts[j])) packet[j] = next;
        ++next;
      }
      json classes = json::array();
      for (int c = 0; c < next; ++c) {
        json members = json::array();
        for (std::size_t i = 0; i < pts.size(); ++i)
          if (packet[i] == c) members.push_back(i);
        classes.push_back(std::move(members));
      }
      out.emit(json{{"schema", kSchemaTag}, {"packets", classes}});
    } else if (*ex_cmd) {
      ExampleReport rep;
      if (ex_name == "sl4") {
        rep = run_example_sl4(bound);
      } else if (ex_name == "gln") {
        rep = run_example_gln(ex_n, bound);
      } else if (ex_name == "lowest-cell") {
        RootDatum rd = resolve_datum(ex_datum);
        InertialDatum chi = resolve_chi(ex_chi, rd.rank);
        rep = run_example_lowest_cell(rd, chi, resolve_mode(ex_mode), bound);
      } else {
        throw std::invalid_argument("unknown example: " + ex_name);
      }
      out.emit(report_to_json(rep));
      for (const auto& f : rep.facts)
        std::cerr << (f.pass ? "[pass] " : "[FAIL] ") << rep.example << ": " << f.name << " = "
                  << f.computed << " (expected " << f.expected << ", " << f.provenance << ")\n";
      if (rep.external_fact_failed()) return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
