// contactlab: generators, validation, coloring, discharging, sparsification
// experiments and cycle packing over contact-family instance files, with
// machine-readable reports. Runs are fully determined by their arguments
// (including the seed), so repeated runs produce byte-identical reports.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "contactlab/contactlab.hpp"

namespace cl = contactlab;
using cl::Json;
using cl::Rat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

std::uint64_t default_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("CONTACTLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw cl::ParseError("CONTACTLAB_SEED must be an unsigned integer");
    }
  }
  return 0;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    cl::write_file(out_path, text);
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json validation_json(const cl::ValidationReport& rep) {
  Json j;
  j["valid"] = rep.valid();
  j["simplicity_checked"] = rep.simplicity_checked;
  if (rep.simplicity_checked) j["simple"] = rep.simple;
  j["violations"] = Json::array();
  for (const auto& v : rep.violations)
    j["violations"].push_back({{"code", v.code}, {"message", v.message}});
  return j;
}

Json stats_json(const cl::FamilyStats& st) {
  Json j;
  j["n"] = st.n;
  j["m"] = st.m;
  j["k_effective"] = st.k_effective;
  if (st.max_distance >= 0)
    j["max_distance"] = st.max_distance;
  else
    j["max_distance"] = nullptr;
  if (st.alpha) {
    j["alpha"] = cl::rat_string(*st.alpha);
    j["alpha_value"] = cl::to_double(*st.alpha);
    j["avg_distance"] = cl::rat_string(*st.avg_distance);
    j["avg_distance_value"] = cl::to_double(*st.avg_distance);
  } else {
    j["alpha"] = nullptr;
    j["avg_distance"] = nullptr;
  }
  return j;
}

Json bounds_json(const std::vector<cl::BoundRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows)
    arr.push_back({{"name", r.name},
                   {"value", r.value},
                   {"applicable", r.applicable},
                   {"note", r.note}});
  return arr;
}

std::string bounds_csv(const std::vector<cl::BoundRow>& rows) {
  std::ostringstream os;
  os << "name,value,applicable,note\n";
  for (const auto& r : rows)
    os << r.name << ',' << r.value << ',' << (r.applicable ? "yes" : "no")
       << ",\"" << r.note << "\"\n";
  return os.str();
}

Json claims_json(const cl::ClaimReport& cr) {
  auto one = [](const cl::ClaimCheck& c) {
    Json j;
    j["holds"] = c.holds;
    if (!c.holds) j["witness"] = c.witness;
    return j;
  };
  Json j;
  j["connected"] = one(cr.connected);
  j["faces_degree_ge_6"] = one(cr.faces_degree_ge_6);
  j["degree_bounds"] = one(cr.degree_bounds);
  j["no_adjacent_2_vertices"] = one(cr.no_adjacent_2_vertices);
  j["small_disk_has_big_neighbor"] = one(cr.small_disk_has_big_neighbor);
  return j;
}

Json coloring_json(const cl::ContactFamily& f, const cl::Coloring& col,
                   const std::string& mode, int k) {
  std::size_t checked = 0;
  bool proper = cl::is_proper(f, col, &checked);
  Json j;
  j["mode"] = mode;
  j["k"] = k;
  j["palette_size"] = col.palette_size;
  j["proper"] = proper;
  j["checked_pairs"] = checked;
  Json assign = Json::object();
  for (int c = 0; c < f.n(); ++c) assign[f.curve_ids[c]] = col.color[c];
  j["assignment"] = std::move(assign);
  return j;
}

Json sparsify_json(const cl::SparsifyOutcome& o, std::uint64_t seed) {
  Json j;
  j["delta"] = o.delta;
  j["p"] = o.p;
  j["trials"] = o.trials;
  j["seed"] = seed;
  j["mean_good_edges"] = o.mean_good_edges;
  j["std_err"] = o.std_err;
  j["lower_bound"] = o.lower_bound;
  j["upper_bound"] = o.upper_bound;
  j["vacuous"] = o.vacuous;
  j["n"] = o.n;
  j["m"] = o.m;
  j["k_effective"] = o.k_effective;
  j["alpha"] = o.alpha;
  return j;
}

// Crossing-pair diagnostics for curves that every other curve meets, with
// the 2ekn cap and its margin.
Json crossing_json(const cl::ContactFamily& f, const cl::FamilyStats& st) {
  Json arr = Json::array();
  if (f.kind != cl::FamilyKind::Curves || f.n() < 2) return arr;
  auto g = cl::intersection_graph(f);
  for (int c = 0; c < f.n(); ++c) {
    if (g.degree(c) != f.n() - 1) continue;  // needs all others to intersect c
    long long count = cl::count_c_crossing_pairs(f, c);
    double cap = 2.0 * std::exp(1.0) * st.k_effective * (f.n() - 1);
    Json j;
    j["curve"] = f.curve_ids[c];
    j["c_crossing_pairs"] = count;
    j["bound_2ekn"] = cap;
    j["margin"] = cap - static_cast<double>(count);
    arr.push_back(std::move(j));
  }
  return arr;
}

int run_generate(const std::string& type, int k, int n, std::uint64_t seed,
                 double nest_prob, const std::string& out) {
  cl::ContactFamily f;
  if (type == "point-clique") {
    f = cl::gen_point_clique(k);
  } else if (type == "fpb-extremal") {
    f = cl::gen_fpb_extremal(n, k);
  } else if (type == "random") {
    f = cl::gen_random_curves(n, k, seed, nest_prob);
  } else if (type == "bad-quad") {
    f = cl::gen_bad_quad_fixture(k);
  } else {
    throw cl::ParseError("unknown generator type: " + type);
  }
  emit(dump_json(cl::family_to_json(f)), out);
  return kExitOk;
}

int run_validate(const std::string& path, bool simple, const std::string& out) {
  auto f = cl::load_family(path);
  auto rep = cl::validate_family(f, simple);
  emit(dump_json(validation_json(rep)), out);
  return rep.valid() ? kExitOk : kExitViolation;
}

int run_stats(const std::string& path, const std::string& out) {
  auto f = cl::load_family(path);
  emit(dump_json(stats_json(cl::family_stats(f))), out);
  return kExitOk;
}

int run_color(const std::string& path, const std::string& mode,
              std::optional<int> k_flag, const std::string& out) {
  auto f = cl::load_family(path);
  int k = k_flag.value_or(f.declared_k);
  cl::Coloring col;
  if (mode == "kplus1") {
    col = cl::color_regions(f, k);
  } else if (mode == "greedy") {
    col = cl::greedy_coloring(cl::intersection_graph(f));
  } else {
    throw cl::ParseError("unknown coloring mode: " + mode);
  }
  Json j = coloring_json(f, col, mode, k);
  emit(dump_json(j), out);
  return j["proper"].get<bool>() ? kExitOk : kExitViolation;
}

int run_discharge(const std::string& path, const std::string& csv_out,
                  const std::string& summary_out,
                  const std::string& dump_out) {
  auto f = cl::load_family(path);
  auto g = cl::build_contact_graph(f);
  auto faces = cl::trace_faces(g);
  auto init = cl::formula_charges(g, faces);
  auto fin = cl::apply_rules(g, faces, init);

  // Per-site received/given from the transfer log.
  std::vector<Rat> recv_v(g.n(), Rat(0)), given_v(g.n(), Rat(0));
  std::vector<Rat> recv_f(faces.count(), Rat(0)), given_f(faces.count(), Rat(0));
  for (const auto& t : fin.log) {
    if (t.from.kind == cl::Site::Vertex)
      given_v[t.from.index] += t.amount;
    else
      given_f[t.from.index] += t.amount;
    if (t.to.kind == cl::Site::Vertex)
      recv_v[t.to.index] += t.amount;
    else
      recv_f[t.to.index] += t.amount;
  }
  std::ostringstream csv;
  csv << "site,kind,degree,initial,received,given,final\n";
  for (int v = 0; v < g.n(); ++v) {
    const auto& vx = g.vertices[v];
    bool disk = vx.kind == cl::VertexKind::Disk;
    csv << (disk ? "D:" + f.curve_ids[vx.ref] : "C:" + f.contacts[vx.ref].id)
        << ',' << (disk ? "disk" : "contact") << ',' << g.degree(v) << ','
        << cl::rat_string(init.vertex_charge[v]) << ','
        << cl::rat_string(recv_v[v]) << ',' << cl::rat_string(given_v[v]) << ','
        << cl::rat_string(fin.vertex_charge[v]) << '\n';
  }
  for (std::size_t fi = 0; fi < faces.count(); ++fi)
    csv << "F:" << fi << ",face," << faces.degree(static_cast<int>(fi)) << ','
        << cl::rat_string(init.face_charge[fi]) << ','
        << cl::rat_string(recv_f[fi]) << ',' << cl::rat_string(given_f[fi])
        << ',' << cl::rat_string(fin.face_charge[fi]) << '\n';

  auto init_totals = cl::component_totals(g, faces, init);
  auto fin_totals = cl::component_totals(g, faces, fin);
  bool totals_ok = true;
  for (const auto& t : init_totals) totals_ok = totals_ok && t == -12;
  for (const auto& t : fin_totals) totals_ok = totals_ok && t == -12;
  Json summary;
  summary["components"] = init_totals.size();
  summary["component_initial_totals"] = Json::array();
  for (const auto& t : init_totals)
    summary["component_initial_totals"].push_back(cl::rat_string(t));
  summary["component_final_totals"] = Json::array();
  for (const auto& t : fin_totals)
    summary["component_final_totals"].push_back(cl::rat_string(t));
  summary["totals_are_minus_12"] = totals_ok;
  summary["conserved"] = init.total() == fin.total();
  int neg = 0;
  Json neg_sites = Json::array();
  for (int v = 0; v < g.n(); ++v)
    if (fin.vertex_charge[v] < 0) {
      ++neg;
      const auto& vx = g.vertices[v];
      neg_sites.push_back(
          (vx.kind == cl::VertexKind::Disk ? "D:" + f.curve_ids[vx.ref]
                                           : "C:" + f.contacts[vx.ref].id));
    }
  for (std::size_t fi = 0; fi < faces.count(); ++fi)
    if (fin.face_charge[fi] < 0) {
      ++neg;
      neg_sites.push_back("F:" + std::to_string(fi));
    }
  summary["negative_sites"] = neg;
  summary["negative_site_ids"] = std::move(neg_sites);
  summary["claims"] = claims_json(cl::structure_report(g, f.declared_k));
  summary["transfers"] = fin.log.size();

  if (!csv_out.empty()) cl::write_file(csv_out, csv.str());
  if (!dump_out.empty()) cl::write_file(dump_out, cl::dump_graph(g, f));
  emit(dump_json(summary), summary_out);
  return totals_ok && summary["conserved"].get<bool>() ? kExitOk
                                                        : kExitViolation;
}

int run_sparsify(const std::string& path, std::optional<double> delta_flag,
                 std::uint64_t trials, std::uint64_t seed,
                 const std::string& out) {
  auto f = cl::load_family(path);
  double delta;
  if (delta_flag) {
    delta = *delta_flag;
  } else {
    auto st = cl::family_stats(f);
    if (!st.alpha)
      throw cl::ParseError("cannot derive delta: family has no intersecting pairs");
    delta = cl::delta_of_alpha(cl::to_double(*st.alpha));
  }
  auto o = cl::sparsify_experiment(f, delta, trials, seed);
  emit(dump_json(sparsify_json(o, seed)), out);
  return kExitOk;
}

int run_bounds(const std::string& path, const std::string& format,
               const std::string& out) {
  auto f = cl::load_family(path);
  auto st = cl::family_stats(f);
  auto rep = cl::validate_family(f, true);
  auto rows = cl::bound_table(st, f.kind, rep.simple);
  if (format == "json")
    emit(dump_json(bounds_json(rows)), out);
  else
    emit(bounds_csv(rows), out);
  return kExitOk;
}

int run_cyclepack(const std::string& path, std::size_t limit,
                  const std::string& format, const std::string& out) {
  auto g = cl::load_digraph(path);
  auto pk = cl::pack_cycles(g, limit);
  if (format == "csv") {
    std::ostringstream os;
    os << "quantity,value\n";
    os << "cycles," << pk.cycles.size() << "\n";
    os << "nu," << pk.nu << "\n";
    os << "nu_star," << cl::rat_string(pk.nu_star) << "\n";
    if (pk.nu > 0)
      os << "ratio," << cl::rat_string(pk.nu_star / pk.nu) << "\n";
    emit(os.str(), out);
    return kExitOk;
  }
  Json j;
  j["cycle_count"] = pk.cycles.size();
  j["nu"] = pk.nu;
  j["nu_star"] = cl::rat_string(pk.nu_star);
  j["nu_star_value"] = cl::to_double(pk.nu_star);
  Json witness = Json::array();
  for (const auto& c : pk.nu_witness) {
    Json cyc = Json::array();
    for (int v : c) cyc.push_back(g.labels[v]);
    witness.push_back(std::move(cyc));
  }
  j["nu_witness"] = std::move(witness);
  Json weights = Json::array();
  for (std::size_t i = 0; i < pk.weights.size(); ++i) {
    if (pk.weights[i] == 0) continue;
    Json cyc = Json::array();
    for (int v : pk.cycles[i]) cyc.push_back(g.labels[v]);
    weights.push_back({{"cycle", std::move(cyc)},
                       {"weight", cl::rat_string(pk.weights[i])}});
  }
  j["lp_weights"] = std::move(weights);
  Json dual = Json::object();
  for (int v = 0; v < g.n(); ++v) dual[g.labels[v]] = cl::rat_string(pk.dual.empty() ? Rat(0) : pk.dual[v]);
  j["dual"] = std::move(dual);
  j["fraction"] = {{"n", pk.rs_n.str()}, {"k", pk.rs_k.str()}};
  if (pk.nu > 0) {
    Rat ratio = pk.nu_star / pk.nu;
    j["ratio"] = cl::rat_string(ratio);
    j["ratio_value"] = cl::to_double(ratio);
    j["within_proved_15_95"] = ratio <= Rat(1595, 100);
    j["within_conjectured_10_22"] = ratio <= Rat(1022, 100);
    if (ratio > Rat(1595, 100)) {
      emit(dump_json(j), out);
      return kExitViolation;
    }
  } else {
    j["ratio"] = nullptr;
  }
  emit(dump_json(j), out);
  return kExitOk;
}

int run_scan(const std::string& gen, int count, int k, int n,
             std::uint64_t seed, double nest_prob,
             const std::string& witness_dir, const std::string& out) {
  Json fam_reports = Json::array();
  double max_alpha = 0.0, sum_alpha = 0.0;
  int measured = 0, witnesses = 0;
  bool violation = false;
  const double limit = cl::max_alpha_bound();
  for (int i = 0; i < count; ++i) {
    cl::ContactFamily f;
    if (gen == "fpb-extremal") {
      // deterministic sizes derived from the item index
      int nn = std::max(n, 2 * k - 2) + 7 * i;
      f = cl::gen_fpb_extremal(nn, k);
    } else if (gen == "random") {
      f = cl::gen_random_curves(n, k, cl::SplitMix64::stream(seed, i).next(),
                                nest_prob);
    } else {
      throw cl::ParseError("unknown generator for scan: " + gen);
    }
    auto st = cl::family_stats(f);
    Json item;
    item["index"] = i;
    item["n"] = st.n;
    item["m"] = st.m;
    item["k_effective"] = st.k_effective;
    if (st.alpha) {
      double a = cl::to_double(*st.alpha);
      item["alpha"] = a;
      max_alpha = std::max(max_alpha, a);
      sum_alpha += a;
      ++measured;
      if (a > limit) violation = true;
      if (a > 0.5) {
        // evidence about the conjecture, not a failure: keep the instance
        ++witnesses;
        if (!witness_dir.empty()) {
          std::filesystem::create_directories(witness_dir);
          cl::write_file(witness_dir + "/witness_" + std::to_string(i) + ".json",
                         dump_json(cl::family_to_json(f)));
          item["witness_file"] =
              witness_dir + "/witness_" + std::to_string(i) + ".json";
        }
      }
    } else {
      item["alpha"] = nullptr;
    }
    fam_reports.push_back(std::move(item));
  }
  Json j;
  j["generator"] = gen;
  j["count"] = count;
  j["seed"] = seed;
  j["measured"] = measured;
  j["max_alpha"] = measured ? Json(max_alpha) : Json(nullptr);
  j["mean_alpha"] = measured ? Json(sum_alpha / measured) : Json(nullptr);
  j["conjectured_limit"] = 0.5;
  j["proved_limit"] = limit;
  j["alpha_above_half"] = witnesses;
  j["violates_proved_limit"] = violation;
  j["families"] = std::move(fam_reports);
  emit(dump_json(j), out);
  return violation ? kExitViolation : kExitOk;
}

int run_pipeline(const std::string& path, const std::string& out) {
  Json j;
  j["input"] = path;
  Json errors = Json::array();
  int exit_code = kExitOk;
  cl::ContactFamily f;
  try {
    f = cl::load_family(path);
  } catch (const cl::ParseError& e) {
    errors.push_back(e.what());
    j["errors"] = std::move(errors);
    emit(dump_json(j), out);
    return kExitInput;
  }
  auto rep = cl::validate_family(f, false);
  j["validation"] = validation_json(rep);
  if (!rep.valid()) {
    errors.push_back("family is invalid; later stages skipped");
    j["errors"] = std::move(errors);
    emit(dump_json(j), out);
    return kExitViolation;
  }
  auto st = cl::family_stats(f);
  j["stats"] = stats_json(st);
  j["bounds"] = bounds_json(cl::bound_table(st, f.kind, rep.simple));
  try {
    cl::Coloring col;
    std::string mode;
    if (f.kind == cl::FamilyKind::Regions && rep.simple &&
        f.declared_k >= cl::DischargeConstants::k_threshold) {
      col = cl::color_regions(f, f.declared_k);
      mode = "kplus1";
    } else {
      col = cl::greedy_coloring(cl::intersection_graph(f));
      mode = "greedy";
    }
    Json cj = coloring_json(f, col, mode, f.declared_k);
    cj.erase("assignment");  // summary only
    j["coloring"] = std::move(cj);
  } catch (const std::exception& e) {
    errors.push_back(std::string("coloring: ") + e.what());
    exit_code = kExitViolation;
  }
  // a failed stage skips everything after it
  if (errors.empty() && f.kind == cl::FamilyKind::Regions) {
    try {
      auto g = cl::build_contact_graph(f);
      auto faces = cl::trace_faces(g);
      auto init = cl::formula_charges(g, faces);
      auto fin = cl::apply_rules(g, faces, init);
      auto init_totals = cl::component_totals(g, faces, init);
      auto fin_totals = cl::component_totals(g, faces, fin);
      Json dj;
      dj["components"] = init_totals.size();
      bool ok = true;
      for (const auto& t : init_totals) ok = ok && t == -12;
      for (const auto& t : fin_totals) ok = ok && t == -12;
      dj["totals_are_minus_12"] = ok;
      int neg = 0;
      for (const auto& c : fin.vertex_charge)
        if (c < 0) ++neg;
      for (const auto& c : fin.face_charge)
        if (c < 0) ++neg;
      dj["negative_sites"] = neg;
      dj["claims"] = claims_json(cl::structure_report(g, f.declared_k));
      j["discharging"] = std::move(dj);
    } catch (const std::exception& e) {
      errors.push_back(std::string("discharging: ") + e.what());
      exit_code = kExitViolation;
    }
  } else if (errors.empty() && f.kind == cl::FamilyKind::Curves) {
    j["crossing"] = crossing_json(f, st);
  }
  j["errors"] = std::move(errors);
  emit(dump_json(j), out);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "contactlab: combinatorial models of touching curve and region "
      "families, coloring and discharging, sparsification experiments, and "
      "exact directed cycle packing"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "emit a generated instance");
  std::string gen_type;
  int gen_k = 490, gen_n = 50;
  std::optional<std::uint64_t> gen_seed;
  double gen_nest = 0.3;
  std::string gen_out;
  gen->add_option("--type", gen_type,
                  "point-clique|fpb-extremal|random|bad-quad")
      ->required();
  gen->add_option("--k", gen_k, "touching bound");
  gen->add_option("--n", gen_n, "curve count parameter");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--nest-prob", gen_nest, "nesting probability (random)");
  gen->add_option("-o,--out", gen_out, "output file (default stdout)");

  // validate
  auto* val = app.add_subcommand("validate", "validate an instance file");
  std::string val_path, val_out;
  bool val_simple = false;
  val->add_option("file", val_path)->required();
  val->add_flag("--simple", val_simple, "treat simplicity as required");
  val->add_option("-o,--out", val_out, "output file (default stdout)");

  // stats
  auto* stats = app.add_subcommand("stats", "exact family statistics");
  std::string stats_path, stats_out;
  stats->add_option("file", stats_path)->required();
  stats->add_option("-o,--out", stats_out, "output file (default stdout)");

  // color
  auto* color = app.add_subcommand("color", "color an instance");
  std::string color_path, color_mode = "greedy", color_out;
  std::optional<int> color_k;
  color->add_option("file", color_path)->required();
  color->add_option("--mode", color_mode, "kplus1|greedy");
  color->add_option("--k", color_k, "touching bound override");
  color->add_option("-o,--out", color_out, "output file (default stdout)");

  // discharge
  auto* dis = app.add_subcommand("discharge", "run charge redistribution");
  std::string dis_path, dis_csv, dis_summary, dis_dump;
  dis->add_option("file", dis_path)->required();
  dis->add_option("--csv", dis_csv, "per-site CSV output path");
  dis->add_option("--summary", dis_summary, "summary JSON path (default stdout)");
  dis->add_option("--dump-graph", dis_dump, "contact graph text dump path");

  // sparsify
  auto* spa = app.add_subcommand("sparsify", "Monte-Carlo sparsification");
  std::string spa_path, spa_out;
  std::optional<double> spa_delta;
  std::uint64_t spa_trials = 10000;
  std::optional<std::uint64_t> spa_seed;
  spa->add_option("file", spa_path)->required();
  spa->add_option("--delta", spa_delta, "probability scale (default delta(alpha))");
  spa->add_option("--trials", spa_trials, "number of trials");
  spa->add_option("--seed", spa_seed, "random seed");
  spa->add_option("-o,--out", spa_out, "output file (default stdout)");

  // bounds
  auto* bnd = app.add_subcommand("bounds", "chromatic bound table");
  std::string bnd_path, bnd_fmt = "csv", bnd_out;
  bnd->add_option("file", bnd_path)->required();
  bnd->add_option("--format", bnd_fmt, "csv|json");
  bnd->add_option("-o,--out", bnd_out, "output file (default stdout)");

  // cyclepack
  auto* cyc = app.add_subcommand("cyclepack", "exact cycle packing");
  std::string cyc_path, cyc_fmt = "json", cyc_out;
  std::size_t cyc_limit = 100000;
  cyc->add_option("file", cyc_path)->required();
  cyc->add_option("--limit", cyc_limit, "cycle enumeration cap");
  cyc->add_option("--report", cyc_fmt, "csv|json");
  cyc->add_option("-o,--out", cyc_out, "output file (default stdout)");

  // scan-conjecture
  auto* scan = app.add_subcommand("scan-conjecture",
                                  "average-distance scan over generated families");
  std::string scan_gen = "random", scan_witness_dir, scan_out;
  int scan_count = 100, scan_k = 8, scan_n = 30;
  std::optional<std::uint64_t> scan_seed;
  double scan_nest = 0.3;
  scan->add_option("--gen", scan_gen, "fpb-extremal|random");
  scan->add_option("--count", scan_count, "number of families");
  scan->add_option("--k", scan_k, "touching bound");
  scan->add_option("--n", scan_n, "curve count parameter");
  scan->add_option("--seed", scan_seed, "random seed");
  scan->add_option("--nest-prob", scan_nest, "nesting probability (random)");
  scan->add_option("--witness-dir", scan_witness_dir,
                   "directory for alpha > 1/2 witnesses");
  scan->add_option("-o,--out", scan_out, "output file (default stdout)");

  // pipeline
  auto* pipe = app.add_subcommand("pipeline",
                                  "validate, stats, bounds, color, discharge");
  std::string pipe_path, pipe_out;
  pipe->add_option("file", pipe_path)->required();
  pipe->add_option("-o,--out", pipe_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen)
      return run_generate(gen_type, gen_k, gen_n, default_seed(gen_seed),
                          gen_nest, gen_out);
    if (*val) return run_validate(val_path, val_simple, val_out);
    if (*stats) return run_stats(stats_path, stats_out);
    if (*color) return run_color(color_path, color_mode, color_k, color_out);
    if (*dis) return run_discharge(dis_path, dis_csv, dis_summary, dis_dump);
    if (*spa)
      return run_sparsify(spa_path, spa_delta, spa_trials,
                          default_seed(spa_seed), spa_out);
    if (*bnd) return run_bounds(bnd_path, bnd_fmt, bnd_out);
    if (*cyc) return run_cyclepack(cyc_path, cyc_limit, cyc_fmt, cyc_out);
    if (*scan)
      return run_scan(scan_gen, scan_count, scan_k, scan_n,
                      default_seed(scan_seed), scan_nest, scan_witness_dir,
                      scan_out);
    if (*pipe) return run_pipeline(pipe_path, pipe_out);
  } catch (const cl::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const cl::LimitError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const cl::GuaranteeError& e) {
    std::cerr << "property violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const cl::FamilyError& e) {
    std::cerr << "property violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitOk;
}
