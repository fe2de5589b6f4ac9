#include "distlap/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "distlap/eigen.hpp"
#include "distlap/enumerate.hpp"
#include "distlap/families.hpp"
#include "distlap/graph6.hpp"
#include "distlap/io.hpp"
#include "distlap/report.hpp"
#include "distlap/transforms.hpp"
#include "distlap/verify.hpp"

namespace distlap {

namespace {

struct GraphSource {
  std::string family;
  std::string input;
  std::string format = "auto";
};

void add_graph_source(CLI::App* cmd, GraphSource& src) {
  auto* fam = cmd->add_option("--family", src.family, "family spec, e.g. path:5 or broom:8,4,1,3");
  auto* in = cmd->add_option("--input", src.input, "graph file ('-' for stdin)");
  fam->excludes(in);
  cmd->add_option("--format", src.format, "input format")->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
}

GraphFormat to_format(const std::string& s) {
  if (s == "edgelist") return GraphFormat::EdgeList;
  if (s == "graph6") return GraphFormat::Graph6;
  return GraphFormat::Auto;
}

FamilySpec load_graph(const GraphSource& src, std::istream& in) {
  if (!src.family.empty()) return parse_family_spec(src.family, in);
  if (!src.input.empty()) return {read_graph(src.input, to_format(src.format), in), std::nullopt};
  throw Error(Errc::ParseError, "one of --family or --input is required");
}

int resolve_threads(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  return std::max(1, requested);
#endif
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::ParseError, "cannot write '" + path + "'");
  f << content;
}

nlohmann::json summary_json(const SpectralSummary& s) {
  return {{"rho", round9(s.rho)},
          {"residual", s.residual},
          {"iterations", s.iterations},
          {"method", s.method == EigenMethod::PowerIteration ? "power" : "jacobi"}};
}

// ---------------------------------------------------------------- spectrum
struct SpectrumOpts {
  GraphSource src;
  bool json = false;
};

int run_spectrum(const SpectrumOpts& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o.src, in).graph;
  const auto d = distance_data(g);
  const auto l = rho_L(g);
  const auto q = rho_Q(g);
  if (o.json) {
    nlohmann::json j{{"n", g.order()},
                     {"edges", g.edge_count()},
                     {"graph6", graph6_encode(g)},
                     {"tr_max", d.tr_max},
                     {"rho_L", summary_json(l)},
                     {"rho_Q", summary_json(q)}};
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "graph6       " << graph6_encode(g) << '\n';
  out << "n            " << g.order() << '\n';
  out << "edges        " << g.edge_count() << '\n';
  out << "tr_max       " << d.tr_max << '\n';
  out << "rho_L        " << format9(l.rho) << '\n';
  out << "rho_Q        " << format9(q.rho) << '\n';
  out << "residual_L   " << format9(l.residual) << '\n';
  out << "residual_Q   " << format9(q.residual) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- family
struct FamilyOpts {
  std::string spec;
  std::string relocate;
  std::string out_format = "graph6";
  bool describe = false;
};

int run_family(const FamilyOpts& o, std::istream& in, std::ostream& out) {
  FamilySpec fs = parse_family_spec(o.spec, in);
  Graph g = fs.graph;
  if (!o.relocate.empty()) {
    if (!fs.triple) throw Error(Errc::BadParams, "--relocate applies to triplestar specs only");
    g = relocate_star(*fs.triple, o.relocate == "end1" ? StarTarget::End1 : StarTarget::EndL);
  }
  if (!o.describe) {
    out << (o.out_format == "edgelist" ? format_edge_list(g) : graph6_encode(g) + "\n");
    return kExitOk;
  }
  const auto deg = degrees_and_pendants(g);
  out << "graph6       " << graph6_encode(g) << '\n';
  out << "n            " << g.order() << '\n';
  out << "edges        " << g.edge_count() << '\n';
  out << "pendants     " << deg.pendants.size() << '\n';
  out << "degrees     ";
  for (int d : deg.degrees) out << ' ' << d;
  out << '\n';
  out << "branch_vtx   " << branch_vertex_count(g) << '\n';
  if (g.is_tree()) out << "canonical    " << tree_canonical_form(g) << '\n';
  const auto broom = recognize_double_broom(g);
  out << "double_broom " << (broom ? to_string(*broom) : std::string("none")) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- graft
struct GraftOpts {
  GraphSource src;
  std::string op;
  int u = -1;
  int v = -1;
  int v0 = -1;
  std::vector<int> p_path, q_path, g1, g2, g3;
  bool json = false;
};

int run_graft(const GraftOpts& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o.src, in).graph;
  Graph result = g;
  std::optional<GraftConditionReport> cond_l, cond_q;
  if (o.op == "shift") {
    result = shift_pendant_path(g, o.u, o.p_path, o.q_path);
  } else if (o.op == "add-edge") {
    result = add_edge(g, o.u, o.v);
  } else {
    BranchDecomposition d{o.v0, o.g1, o.g2, o.g3, o.u};
    result = move_branch(g, d);
    cond_l = graft_condition(g, d, rho_L(g).vector, GraftVariant::LaplacianMinus);
    cond_q = graft_condition(g, d, rho_Q(g).vector, GraftVariant::SignlessPlus);
  }
  const double l0 = rho_L(g).rho, l1 = rho_L(result).rho;
  const double q0 = rho_Q(g).rho, q1 = rho_Q(result).rho;
  if (o.json) {
    nlohmann::json j{{"op", o.op},
                     {"before", graph6_encode(g)},
                     {"after", graph6_encode(result)},
                     {"rho_L", {{"before", round9(l0)}, {"after", round9(l1)}}},
                     {"rho_Q", {{"before", round9(q0)}, {"after", round9(q1)}}}};
    auto cond = [](const GraftConditionReport& r) {
      return nlohmann::json{{"lhs", round9(r.lhs)}, {"rhs", round9(r.rhs)}, {"strict", r.strict}};
    };
    if (cond_l) j["condition_L"] = cond(*cond_l);
    if (cond_q) j["condition_Q"] = cond(*cond_q);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "before       " << graph6_encode(g) << '\n';
  out << "after        " << graph6_encode(result) << '\n';
  out << "rho_L        " << format9(l0) << " -> " << format9(l1) << '\n';
  out << "rho_Q        " << format9(q0) << " -> " << format9(q1) << '\n';
  if (cond_l) {
    out << "cond_L       lhs=" << format9(cond_l->lhs) << " rhs=" << format9(cond_l->rhs)
        << (cond_l->strict ? " strict" : "") << '\n';
    out << "cond_Q       lhs=" << format9(cond_q->lhs) << " rhs=" << format9(cond_q->rhs)
        << (cond_q->strict ? " strict" : "") << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- enumerate
struct EnumerateOpts {
  std::string kind = "tree";
  int n = 0;
  std::optional<int> k;
  bool allow_n8 = false;
};

int graph_cap(bool allow_n8, int n, std::ostream& err) {
  if (allow_n8 && n == kHardGraphCap) {
    err << "warning: n=8 graph enumeration scans 2^28 edge subsets and takes a long time\n";
    return kHardGraphCap;
  }
  return kDefaultGraphCap;
}

int run_enumerate(const EnumerateOpts& o, std::ostream& out, std::ostream& err) {
  if (o.kind == "tree") {
    TreeClassStream s({o.n, o.k});
    while (auto t = s.next()) out << graph6_encode(*t) << '\n';
    return kExitOk;
  }
  const int cap = graph_cap(o.allow_n8, o.n, err);
  for (int k = 0; k <= o.n; ++k) {
    if (o.k && *o.k != k) continue;
    ConnectedGraphStream s({o.n, k, cap});
    while (auto g = s.next()) out << graph6_encode(*g) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- extremal
struct ExtremalOpts {
  std::string kind = "tree";
  int n = 0;
  std::optional<int> k;
  std::string objective = "both";
  std::string json_path;
  std::string csv_path;
  int threads = 0;
  std::size_t block_size = 1024;
  bool allow_n8 = false;
};

int run_extremal(const ExtremalOpts& o, std::ostream& out, std::ostream& err) {
  ClassQuery base;
  base.kind = o.kind == "tree" ? GraphClass::Trees : GraphClass::Graphs;
  base.n = o.n;
  if (base.kind == GraphClass::Graphs) base.graph_cap = graph_cap(o.allow_n8, o.n, err);
  std::vector<int> ks;
  if (o.k) {
    ks.push_back(*o.k);
  } else {
    for (int k = 2; k <= o.n - 2; ++k) ks.push_back(k);
  }
  if (ks.empty()) throw Error(Errc::BadParams, "no pendant counts in range for n=" + std::to_string(o.n));
  std::vector<Objective> objectives;
  if (o.objective != "rhoQ") objectives.push_back(Objective::RhoL);
  if (o.objective != "rhoL") objectives.push_back(Objective::RhoQ);

  ExecPolicy policy{resolve_threads(o.threads), o.block_size};
  std::vector<ExtremalCertificate> certs;
  for (int k : ks) {
    for (Objective obj : objectives) {
      ClassQuery q = base;
      q.k = k;
      certs.push_back(extremal_search(q, obj, policy));
    }
  }
  bool ok = true;
  for (const auto& c : certs) {
    out << certificate_text(c) << '\n';
    ok = ok && c.passes();
  }
  if (!o.json_path.empty()) {
    nlohmann::json doc;
    if (certs.size() == 1) {
      doc = certificate_json(certs.front());
    } else {
      doc = nlohmann::json::array();
      for (const auto& c : certs) doc.push_back(certificate_json(c));
    }
    write_file(o.json_path, doc.dump(2) + "\n");
  }
  if (!o.csv_path.empty()) {
    std::string csv = certificate_csv_header() + "\n";
    for (const auto& c : certs) csv += certificate_csv_row(c) + "\n";
    write_file(o.csv_path, csv);
  }
  double total_ms = 0.0;
  for (const auto& c : certs) total_ms += c.runtime_ms;
  err << "extremal: " << certs.size() << " certificate(s) in " << format9(total_ms) << " ms on " << policy.threads
      << " thread(s)\n";
  return ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- sweep
struct SweepOpts {
  std::string lemma;
  int max_n = 0;
  int max_path_sum = 6;
  std::string json_path;
  int threads = 0;
};

int run_sweep(const SweepOpts& o, std::ostream& out, std::ostream& err) {
  std::vector<Lemma> lemmas;
  if (o.lemma == "all") {
    lemmas.assign(all_lemmas().begin(), all_lemmas().end());
  } else {
    lemmas.push_back(parse_lemma(o.lemma));
  }
  ExecPolicy policy{resolve_threads(o.threads), 1024};
  std::vector<SweepReport> reports;
  bool ok = true;
  for (Lemma l : lemmas) {
    reports.push_back(sweep_lemma(l, {o.max_n, o.max_path_sum}, policy));
    out << sweep_text(reports.back()) << '\n';
    ok = ok && reports.back().violations.empty();
    err << "sweep " << reports.back().lemma << ": " << format9(reports.back().runtime_ms) << " ms\n";
  }
  if (!o.json_path.empty()) {
    nlohmann::json doc;
    if (reports.size() == 1) {
      doc = sweep_json(reports.front());
    } else {
      doc = nlohmann::json::array();
      for (const auto& r : reports) doc.push_back(sweep_json(r));
    }
    write_file(o.json_path, doc.dump(2) + "\n");
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- profile
struct ProfileOpts {
  int n = 0;
  int k = 0;
  std::string objective = "rhoL";
  bool json = false;
};

int run_profile(const ProfileOpts& o, std::ostream& out) {
  const Objective obj = parse_objective(o.objective);
  const auto rows = report_broom_profile(o.n, o.k, obj);
  if (o.json) {
    out << profile_json(o.n, o.k, obj, rows).dump(2) << '\n';
    return kExitOk;
  }
  out << "t1 t2 rank " << objective_name(obj) << '\n';
  for (const auto& r : rows) out << r.t1 << ' ' << r.t2 << ' ' << r.rank << ' ' << format9(r.rho) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance Laplacian and distance signless Laplacian spectra, graft transformations and extremal "
               "tree certification",
               "distlap"};
  app.require_subcommand(1);

  SpectrumOpts spectrum;
  auto* c_spectrum = app.add_subcommand("spectrum", "print rho_L, rho_Q, Tr_max and residuals");
  add_graph_source(c_spectrum, spectrum.src);
  c_spectrum->add_flag("--json", spectrum.json);

  FamilyOpts family;
  auto* c_family = app.add_subcommand("family", "build a named graph family member");
  c_family->add_option("--family,--spec", family.spec, "family spec")->required();
  c_family->add_option("--relocate", family.relocate, "move the interior star (triplestar only)")
      ->check(CLI::IsMember({"end1", "endl"}));
  c_family->add_option("--output-format", family.out_format)->check(CLI::IsMember({"graph6", "edgelist"}));
  c_family->add_flag("--describe", family.describe, "print degrees, canonical form and double broom recognition");

  GraftOpts graft;
  auto* c_graft = app.add_subcommand("graft", "apply a graft transformation and compare spectral radii");
  add_graph_source(c_graft, graft.src);
  c_graft->add_option("--op", graft.op)->required()->check(CLI::IsMember({"shift", "move", "add-edge"}));
  c_graft->add_option("--u", graft.u, "attachment vertex / target / edge endpoint");
  c_graft->add_option("--v", graft.v, "second endpoint for add-edge");
  c_graft->add_option("--v0", graft.v0, "cut vertex for move");
  c_graft->add_option("--p-path", graft.p_path)->delimiter(',');
  c_graft->add_option("--q-path", graft.q_path)->delimiter(',');
  c_graft->add_option("--g1", graft.g1)->delimiter(',');
  c_graft->add_option("--g2", graft.g2)->delimiter(',');
  c_graft->add_option("--g3", graft.g3)->delimiter(',');
  c_graft->add_flag("--json", graft.json);

  EnumerateOpts enumerate;
  auto* c_enum = app.add_subcommand("enumerate", "stream a graph class as graph6 lines");
  c_enum->add_option("--class", enumerate.kind)->check(CLI::IsMember({"tree", "graph"}));
  c_enum->add_option("--n", enumerate.n)->required();
  c_enum->add_option("--k", enumerate.k, "pendant vertex count");
  c_enum->add_flag("--allow-n8", enumerate.allow_n8);

  ExtremalOpts extremal;
  auto* c_ext = app.add_subcommand("extremal", "certify the maximizer of rho over a class");
  c_ext->add_option("--class", extremal.kind)->check(CLI::IsMember({"tree", "graph"}));
  c_ext->add_option("--n", extremal.n)->required();
  c_ext->add_option("--k", extremal.k, "pendant count; all 2..n-2 when omitted");
  c_ext->add_option("--objective", extremal.objective)->check(CLI::IsMember({"rhoL", "rhoQ", "both"}));
  c_ext->add_option("--json", extremal.json_path, "certificate output file");
  c_ext->add_option("--csv", extremal.csv_path, "summary table output file");
  c_ext->add_option("--threads", extremal.threads, "worker threads (0 = all)")->check(CLI::NonNegativeNumber);
  c_ext->add_option("--block-size", extremal.block_size)->check(CLI::PositiveNumber);
  c_ext->add_flag("--allow-n8", extremal.allow_n8);

  SweepOpts sweep;
  auto* c_sweep = app.add_subcommand("sweep", "check a graft inequality over a finite corpus");
  c_sweep->add_option("--lemma", sweep.lemma, "sweep id, e.g. pendant-shift-L, or 'all'")->required();
  c_sweep->add_option("--max-n", sweep.max_n, "corpus size bound (lemma default when omitted)");
  c_sweep->add_option("--max-path-sum", sweep.max_path_sum, "p + q bound for pendant shifts");
  c_sweep->add_option("--json", sweep.json_path, "report output file");
  c_sweep->add_option("--threads", sweep.threads, "worker threads (0 = all)")->check(CLI::NonNegativeNumber);

  ProfileOpts profile;
  auto* c_prof = app.add_subcommand("profile", "rho of every double broom T(n,k;t1,t2)");
  c_prof->add_option("--n", profile.n)->required();
  c_prof->add_option("--k", profile.k)->required();
  c_prof->add_option("--objective", profile.objective)->check(CLI::IsMember({"rhoL", "rhoQ"}));
  c_prof->add_flag("--json", profile.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (c_spectrum->parsed()) return run_spectrum(spectrum, in, out);
    if (c_family->parsed()) return run_family(family, in, out);
    if (c_graft->parsed()) {
      if ((graft.op == "shift" || graft.op == "add-edge" || graft.op == "move") && graft.u < 0) {
        throw Error(Errc::BadParams, "--u is required");
      }
      if (graft.op == "add-edge" && graft.v < 0) throw Error(Errc::BadParams, "--v is required for add-edge");
      if (graft.op == "move" && graft.v0 < 0) throw Error(Errc::BadParams, "--v0 is required for move");
      return run_graft(graft, in, out);
    }
    if (c_enum->parsed()) return run_enumerate(enumerate, out, err);
    if (c_ext->parsed()) return run_extremal(extremal, out, err);
    if (c_sweep->parsed()) return run_sweep(sweep, out, err);
    if (c_prof->parsed()) return run_profile(profile, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace distlap
