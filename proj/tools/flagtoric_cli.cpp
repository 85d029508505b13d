// Command-line surface over the library: batch computations, family sweeps,
// and machine-readable reports. Exit codes: 0 computed, 1 usage/runtime
// error, 2 a cross-check assertion failed (reported, not a crash).
#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "flagtoric/catalan.hpp"
#include "flagtoric/io.hpp"
#include "flagtoric/matroid.hpp"
#include "flagtoric/orbit.hpp"
#include "flagtoric/richardson.hpp"
#include "flagtoric/schubert.hpp"

using namespace flagtoric;
using nlohmann::json;

namespace {

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;
  int jobs = 1;
  long long limit = 0;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--seed", opt.seed, "random seed, recorded in reports");
  cmd->add_option("--jobs", opt.jobs, "worker threads for sweeps")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--limit", opt.limit, "cap on enumerated items (0 = all)");
}

json report_head(const std::string& command, const Options& opt) {
  json j;
  j["version"] = FLAGTORIC_VERSION;
  j["command"] = command;
  j["seed"] = opt.seed;
  return j;
}

void emit(const json& j, const Options& opt) {
  if (opt.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  // text: flat key-value lines
  std::function<void(const json&, std::string)> walk = [&](const json& node,
                                                           std::string prefix) {
    if (node.is_object()) {
      for (const auto& [k, v] : node.items())
        walk(v, prefix.empty() ? k : prefix + "." + k);
    } else if (node.is_array() && !node.empty() && node[0].is_object()) {
      int i = 0;
      for (const auto& v : node) walk(v, prefix + "[" + std::to_string(i++) + "]");
    } else {
      std::cout << prefix << ": " << node.dump() << "\n";
    }
  };
  walk(j, "");
}

json fvector_json(const LatticePolytope& q) {
  return json(q.f_polynomial().coeffs());
}

// Work-stealing map over a range of indices; results land in caller arrays.
template <typename F>
void parallel_over(std::size_t count, int jobs, F&& body) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::future<void>> futs;
  std::atomic<std::size_t> next{0};
  for (int t = 0; t < jobs; ++t)
    futs.push_back(std::async(std::launch::async, [&]() {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    }));
  for (auto& f : futs) f.get();
}

int cmd_bruhat(const std::string& vs, const std::string& ws, const Options& opt) {
  const Perm v = Perm::parse(vs);
  const Perm w = Perm::parse(ws);
  json j = report_head("bruhat", opt);
  j["v"] = v.str();
  j["w"] = w.str();
  j["ell_v"] = v.length();
  j["ell_w"] = w.length();
  j["v_leq_w"] = bruhat_leq(v, w);
  j["w_leq_v"] = bruhat_leq(w, v);
  if (bruhat_leq(v, w)) {
    j["interval_size"] = interval_elements(v, w).size();
    json atoms = json::array(), coatoms = json::array();
    for (const auto& a : interval_atoms(v, w)) atoms.push_back(a.str());
    for (const auto& c : interval_coatoms(v, w)) coatoms.push_back(c.str());
    j["atoms"] = atoms;
    j["coatoms"] = coatoms;
    j["boolean"] = interval_is_boolean(v, w);
  }
  emit(j, opt);
  return 0;
}

json polytope_report(const LatticePolytope& q) {
  json j;
  j["dim"] = q.dim();
  j["vertices"] = q.num_vertices();
  j["f_vector"] = fvector_json(q);
  j["f_polynomial"] = q.f_polynomial().str();
  j["h_polynomial"] = q.h_polynomial().str();
  j["simple"] = q.is_simple();
  json nonsimple = json::array();
  for (std::size_t i = 0; i < q.num_vertices(); ++i)
    if (!q.is_simple_at(static_cast<int>(i)))
      nonsimple.push_back(q.labels().empty() ? std::to_string(i)
                                             : q.label(static_cast<int>(i)));
  j["nonsimple_vertices"] = nonsimple;
  j["cube"] = q.is_cube();
  j["edges"] = q.num_vertices() >= 2 ? q.edges().size() : 0;
  j["root_edges"] = q.edge_directions_are_roots();
  return j;
}

int cmd_polytope(const std::string& kind, const std::vector<std::string>& args,
                 bool with_fan, const Options& opt) {
  json j = report_head("polytope", opt);
  j["kind"] = kind;
  std::optional<LatticePolytope> q;
  if (kind == "qw") {
    const Perm w = Perm::parse(args.at(0));
    q = schubert_polytope(w);
    j["w"] = w.str();
    j["ell"] = w.length();
    j["complexity"] = complexity(w);
    j["toric"] = complexity(w) == 0;
  } else if (kind == "qvw") {
    const Perm v = Perm::parse(args.at(0));
    const Perm w = Perm::parse(args.at(1));
    q = interval_polytope(v, w);
    j["v"] = v.str();
    j["w"] = w.str();
    j["ell_diff"] = w.length() - v.length();
    j["toric"] = interval_polytope_toric(v, w);
    j["boolean"] = interval_is_boolean(v, w);
  } else if (kind == "perm") {
    const int n = std::stoi(args.at(0));
    std::vector<IntVec> verts;
    std::vector<std::string> labels;
    for (const Perm& u : all_perms(n)) {
      verts.push_back(moment_point(u));
      labels.push_back(u.str());
    }
    q = LatticePolytope(std::move(verts), std::move(labels));
    j["n"] = n;
  } else if (kind == "matroid") {
    std::ifstream in(args.at(0));
    if (!in) throw std::runtime_error("cannot read " + args.at(0));
    json mj;
    in >> mj;
    const CoxeterSubset m = matroid_from_json(mj);
    q = matroid_polytope(m);
    j["n"] = m.n();
    j["elements"] = m.elements().size();
    j["coxeter_matroid"] = is_coxeter_matroid(m).is_matroid;
  } else {
    throw std::runtime_error("kind must be qw|qvw|perm|matroid");
  }
  j["polytope"] = polytope_report(*q);
  if (with_fan) j["normal_fan"] = fan_json(normal_fan(*q));
  emit(j, opt);
  return 0;
}

int cmd_poincare(const std::string& ws, const Options& opt) {
  const Perm w = Perm::parse(ws);
  json j = report_head("poincare", opt);
  j["w"] = w.str();
  const IntPoly aw = ascent_polynomial(w);
  j["ascent_polynomial"] = aw.str();
  j["poincare"] = poincare_polynomial(w).str();
  j["A_w"] = json(aw.coeffs());
  const IntPoly h = schubert_polytope(w).h_polynomial();
  j["h_polynomial"] = h.str();
  j["h_identity"] = aw == h;
  j["palindromic"] = aw.palindromic();
  emit(j, opt);
  return aw == h ? 0 : 2;
}

int cmd_orbit(const std::string& path, const Options& opt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const FlagMatrix x = flag_matrix_from_csv(buf.str());
  json j = report_head("orbit", opt);
  j["n"] = x.n();
  const CoxeterSubset fp = fixed_points(x);
  json fpj = json::array();
  for (const auto& p : fp.elements()) fpj.push_back(p.str());
  j["fixed_points"] = fpj;
  j["coxeter_matroid"] = is_coxeter_matroid(fp).is_matroid;

  bool agree = true;
  std::map<Perm, Perm> table;
  for (const Perm& u : all_perms(x.n())) {
    const Perm rg = geometric_retraction(x, u);
    table.emplace(u, rg);
    if (rg != algebraic_retraction(fp, u)) agree = false;
  }
  j["geometric_equals_matroid_retraction"] = agree;
  if (opt.format == "csv") {
    std::cout << retraction_table_csv(table);
    return agree ? 0 : 2;
  }
  json tj = json::object();
  for (const auto& [u, r] : table) tj[u.str()] = r.str();
  j["retraction"] = tj;
  const OrbitFan of = orbit_fan(x);
  json fans = fan_json(of.to_fan());
  json fibers = json::object();
  for (const auto& [y, us] : of.fibers) {
    json l = json::array();
    for (const auto& u : us) l.push_back(u.str());
    fibers[y.str()] = l;
  }
  fans["fibers"] = fibers;
  j["fan"] = fans;
  j["fibers_connected"] = of.fibers_connected();
  j["fibers_convex"] = of.fibers_convex();
  emit(j, opt);
  return agree ? 0 : 2;
}

int cmd_retraction(const std::string& path, int random_n, const Options& opt) {
  json j = report_head("retraction", opt);
  std::optional<CoxeterSubset> m;
  if (random_n > 0) {
    const FlagMatrix x = random_flag(random_n, opt.seed);
    m = fixed_points(x);
    j["source"] = "random flag";
    j["n"] = random_n;
  } else {
    if (path.empty()) throw std::runtime_error("need a matroid file or --random");
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    json mj;
    in >> mj;
    m = matroid_from_json(mj);
    j["source"] = path;
    j["n"] = m->n();
  }
  const auto check = is_coxeter_matroid(*m);
  j["coxeter_matroid"] = check.is_matroid;
  if (!check.is_matroid && check.witness)
    j["witness"] = {{"u", check.witness->u.str()},
                    {"max1", check.witness->max1.str()},
                    {"max2", check.witness->max2.str()}};
  auto table = retraction_table(*m, /*algebraic=*/true);
  bool closest_ok = true;
  if (check.is_matroid) {
    for (const auto& [u, r] : table) {
      if (r != matroid_retraction(*m, u)) closest_ok = false;
      const auto d = distance_to_set(u, *m);
      if (d.argmin.size() != 1 || d.argmin[0] != r) closest_ok = false;
    }
    j["algebraic_equals_matroid"] = closest_ok;
  }
  if (opt.format == "csv") {
    std::cout << retraction_table_csv(table);
  } else {
    json tj = json::object();
    for (const auto& [u, r] : table) tj[u.str()] = r.str();
    j["retraction"] = tj;
    emit(j, opt);
  }
  return (check.is_matroid && !closest_ok) ? 2 : 0;
}

int cmd_sweep(const std::string& family, int n, const Options& opt) {
  json j = report_head("sweep", opt);
  j["family"] = family;
  j["n"] = n;
  int exit = 0;
  if (family == "toric-schubert") {
    const auto perms = all_perms(n);
    std::vector<ToricReport> reports(perms.size());
    parallel_over(perms.size(), opt.jobs,
                  [&](std::size_t i) { reports[i] = toric_schubert_report(perms[i]); });
    int toric = 0;
    json findings = json::array();
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if (reports[i].complexity_zero) ++toric;
      if (!reports[i].consistent) {
        findings.push_back(perms[i].str());
        exit = 2;
      }
    }
    j["toric_count"] = toric;
    j["all_conditions_agree"] = findings.empty();
    j["disagreements"] = findings;
  } else if (family == "complexity-one") {
    const auto perms = all_perms(n);
    std::vector<ComplexityOneReport> reports(perms.size());
    parallel_over(perms.size(), opt.jobs,
                  [&](std::size_t i) { reports[i] = complexity_one_report(perms[i]); });
    int smooth = 0, singular = 0;
    json findings = json::array();
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if (reports[i].kind == ComplexityOneKind::smooth_c1) ++smooth;
      if (reports[i].kind == ComplexityOneKind::singular_c1) ++singular;
      if (!reports[i].consistent) {
        findings.push_back(perms[i].str());
        exit = 2;
      }
    }
    j["smooth_c1"] = smooth;
    j["singular_c1"] = singular;
    j["all_conditions_agree"] = findings.empty();
    j["disagreements"] = findings;
  } else if (family == "sf-classes") {
    j["classes"] = signed_forest_classes(n).size();
  } else if (family == "catalan") {
    const auto ts = triangulations(n);
    std::set<std::string> classes;
    for (const Triangulation& t : ts)
      classes.insert(tree_of_triangulation(t).unordered_canonical());
    j["triangulations"] = ts.size();
    j["classes"] = classes.size();
    const long long expect = wedderburn_etherington(n + 1).back();
    j["wedderburn_etherington"] = expect;
    if (classes.size() != static_cast<std::size_t>(expect)) exit = 2;
  } else if (family == "conjecture-search") {
    // smooth at distinguished fixed points but singular somewhere else;
    // witnesses reported, nothing asserted
    const auto perms = all_perms(n);
    std::vector<std::string> hits(perms.size());
    parallel_over(perms.size(), opt.jobs, [&](std::size_t i) {
      const Perm& w = perms[i];
      if (!is_smooth_at(w, w)) return;
      if (!orbit_closure_smooth(w)) hits[i] = w.str();
    });
    json schubert_witnesses = json::array();
    for (const auto& h : hits)
      if (!h.empty()) schubert_witnesses.push_back(h);
    j["schubert_witnesses"] = schubert_witnesses;

    json interval_witnesses = json::array();
    long long seen = 0;
    for (const Perm& v : perms) {
      for (const Perm& w : perms) {
        if (!bruhat_leq(v, w) || v == w) continue;
        if (opt.limit && ++seen > opt.limit) break;
        const LatticePolytope q = interval_polytope(v, w);
        const int vi = q.vertex_index(moment_point(v));
        const int wi = q.vertex_index(moment_point(w));
        if (!q.is_simple_at(vi) || !q.is_simple_at(wi)) continue;
        if (!q.is_simple())
          interval_witnesses.push_back(json{{"v", v.str()}, {"w", w.str()}});
      }
    }
    j["interval_witnesses"] = interval_witnesses;
  } else {
    throw std::runtime_error(
        "family must be toric-schubert|complexity-one|sf-classes|catalan|conjecture-search");
  }
  emit(j, opt);
  return exit;
}

int cmd_catalan(int n, const Options& opt) {
  json j = report_head("catalan", opt);
  j["n"] = n;
  const auto ts = triangulations(n);
  j["triangulations"] = ts.size();
  std::map<std::string, int> classes;
  for (const Triangulation& t : ts)
    ++classes[tree_of_triangulation(t).unordered_canonical()];
  j["classes"] = classes.size();
  const auto b = wedderburn_etherington(std::max(n + 1, 15));
  j["wedderburn_etherington"] = json(std::vector<long long>(b.begin(), b.begin() + n + 1));
  json cj = json::array();
  int idx = 0;
  for (const auto& [shape, count] : classes) {
    cj.push_back(json{{"class", idx++}, {"tree", shape}, {"triangulations", count}});
    if (opt.limit && idx >= opt.limit) break;
  }
  j["class_table"] = cj;
  bool fano_all = true;
  for (const Triangulation& t : ts)
    if (!is_fano(catalan_fan(t))) fano_all = false;
  j["all_fano"] = fano_all;
  emit(j, opt);
  return fano_all && classes.size() == static_cast<std::size_t>(b[n]) ? 0 : 2;
}

int cmd_bott(const std::string& path, int classes_n, const Options& opt) {
  json j = report_head("bott", opt);
  if (classes_n > 0) {
    const auto classes = signed_forest_classes(classes_n);
    j["n"] = classes_n;
    j["classes"] = classes.size();
    json reps = json::array();
    for (const auto& f : classes) reps.push_back(forest_json(f));
    j["representatives"] = reps;
    emit(j, opt);
    return 0;
  }
  if (path.empty()) throw std::runtime_error("need a forest file or --classes");
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  json fj;
  in >> fj;
  const SignedForest f = forest_from_json(fj);
  const Fan fan = bott_fan_from_forest(f);
  j["forest"] = forest_json(f);
  j["fan"] = fan_json(fan);
  j["fano"] = is_fano(fan);
  j["smooth"] = fan_is_smooth(fan);
  const SignedForest back = forest_from_bott_fan(fan);
  const bool round = fan_isomorphic(bott_fan_from_forest(back), fan);
  j["round_trip_isomorphic"] = round;
  emit(j, opt);
  return round ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorics of torus orbit closures in the flag variety"};
  app.require_subcommand(1);
  Options opt;

  std::string arg_v, arg_w, arg_kind, arg_file;
  std::vector<std::string> arg_rest;
  bool with_fan = false;
  int arg_n = 3, random_n = 0, classes_n = 0;

  auto* bruhat = app.add_subcommand("bruhat", "compare two permutations");
  bruhat->add_option("v", arg_v)->required();
  bruhat->add_option("w", arg_w)->required();
  add_common(bruhat, opt);

  auto* polytope = app.add_subcommand("polytope", "moment polytope reports");
  polytope->add_option("kind", arg_kind, "qw|qvw|perm|matroid")->required();
  polytope->add_option("args", arg_rest, "kind arguments");
  polytope->add_flag("--fan", with_fan, "include the normal fan");
  add_common(polytope, opt);

  auto* poincare = app.add_subcommand("poincare", "ascent and Poincare polynomials");
  poincare->add_option("w", arg_w)->required();
  add_common(poincare, opt);

  auto* orbit = app.add_subcommand("orbit", "orbit closure of a flag matrix");
  orbit->add_option("matrix", arg_file, "CSV of rationals p/q")->required();
  add_common(orbit, opt);

  auto* retraction = app.add_subcommand("retraction", "retraction tables");
  retraction->add_option("matroid", arg_file, "matroid JSON file");
  retraction->add_option("--random", random_n, "random flag of the given rank");
  add_common(retraction, opt);

  auto* sweep = app.add_subcommand("sweep", "family sweeps and searches");
  sweep->add_option("family", arg_kind)->required();
  sweep->add_option("--n", arg_n, "rank bound")->required();
  add_common(sweep, opt);

  auto* catalan = app.add_subcommand("catalan", "triangulation families");
  catalan->add_option("n", arg_n)->required();
  add_common(catalan, opt);

  auto* bott = app.add_subcommand("bott", "signed forests and their fans");
  bott->add_option("forest", arg_file, "forest JSON file");
  bott->add_option("--classes", classes_n, "list class representatives");
  add_common(bott, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (bruhat->parsed()) return cmd_bruhat(arg_v, arg_w, opt);
    if (polytope->parsed()) return cmd_polytope(arg_kind, arg_rest, with_fan, opt);
    if (poincare->parsed()) return cmd_poincare(arg_w, opt);
    if (orbit->parsed()) return cmd_orbit(arg_file, opt);
    if (retraction->parsed()) return cmd_retraction(arg_file, random_n, opt);
    if (sweep->parsed()) return cmd_sweep(arg_kind, arg_n, opt);
    if (catalan->parsed()) return cmd_catalan(arg_n, opt);
    if (bott->parsed()) return cmd_bott(arg_file, classes_n, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
