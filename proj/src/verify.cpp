#include "distlap/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <exception>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "distlap/graph6.hpp"
#include "distlap/transforms.hpp"

namespace distlap {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Runs fn(i) for every i in [0, count). Exceptions are captured per index and
// the first one (by index) is rethrown after the loop.
template <class Fn>
void parallel_for_index(std::size_t count, int threads, Fn&& fn) {
  std::vector<std::exception_ptr> errors(count);
#ifdef _OPENMP
  const int t = std::max(1, threads);
#pragma omp parallel for schedule(dynamic, 4) num_threads(t)
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
#else
  (void)threads;
  for (std::size_t i = 0; i < count; ++i) {
    try {
      fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
#endif
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

double rho_of(const Graph& g, Objective objective) { return spectral_radius(g, objective).rho; }

// Streams the class in its deterministic order.
class ClassStream {
 public:
  explicit ClassStream(const ClassQuery& q) {
    if (q.kind == GraphClass::Trees) {
      trees_.emplace(TreeClassQuery{q.n, q.k});
    } else {
      graphs_.emplace(GraphClassQuery{q.n, q.k, q.graph_cap});
    }
  }
  std::optional<Graph> next() { return trees_ ? trees_->next() : graphs_->next(); }

 private:
  std::optional<TreeClassStream> trees_;
  std::optional<ConnectedGraphStream> graphs_;
};

void check_class_query(const ClassQuery& q) {
  if (q.kind == GraphClass::Trees) {
    if (q.n < 2) throw Error(Errc::OutOfRange, "tree class needs n >= 2");
    check_tree_query({q.n, q.k});
  } else {
    check_graph_query({q.n, q.k, q.graph_cap});
    if (q.n < 2) throw Error(Errc::OutOfRange, "graph class needs n >= 2");
  }
}

// Keeps every graph whose rho is within tolerance of the running maximum.
class ArgmaxReducer {
 public:
  void offer(const Graph& g, double rho) {
    ++scanned_;
    if (candidates_.empty() || rho > best_) {
      const bool raised = !candidates_.empty();
      best_ = rho;
      if (raised) {
        std::erase_if(candidates_, [&](const auto& c) { return compare_rho(c.second, best_) == RhoOrder::Less; });
      }
    }
    if (compare_rho(rho, best_) != RhoOrder::Less) candidates_.emplace_back(g, rho);
  }

  ExtremalCertificate finish(const ClassQuery& q, Objective objective) const {
    if (scanned_ == 0) {
      throw Error(Errc::EmptyClass, std::string(q.kind == GraphClass::Trees ? "trees" : "graphs") + " of order " +
                                        std::to_string(q.n) + " with " + std::to_string(q.k) + " pendant vertices");
    }
    ExtremalCertificate c;
    c.kind = q.kind;
    c.n = q.n;
    c.k = q.k;
    c.objective = objective;
    c.scanned = scanned_;
    c.claimed = q.k >= 2 && q.k <= q.n - 2;

    // Group tied graphs by isomorphism class, each represented by its least
    // graph6 string.
    struct Entry {
      std::string graph6;
      double rho;
      const Graph* graph;
    };
    std::map<std::string, Entry> classes;
    for (const auto& [g, rho] : candidates_) {
      if (compare_rho(rho, best_) == RhoOrder::Less) continue;
      std::string code = graph6_encode(g);
      auto key = isomorphism_key(g);
      auto it = classes.find(key);
      if (it == classes.end()) {
        classes.emplace(std::move(key), Entry{std::move(code), rho, &g});
      } else if (code < it->second.graph6) {
        it->second = Entry{std::move(code), rho, &g};
      }
    }
    std::vector<const Entry*> ordered;
    for (const auto& [key, e] : classes) ordered.push_back(&e);
    std::sort(ordered.begin(), ordered.end(), [](const Entry* a, const Entry* b) { return a->graph6 < b->graph6; });

    const Entry& win = *ordered.front();
    c.winner = win.graph6;
    c.winner_rho = win.rho;
    c.winner_params = recognize_double_broom(*win.graph);
    c.winner_is_tree = win.graph->is_tree();
    c.winner_branch_vertices = branch_vertex_count(*win.graph);
    for (std::size_t i = 1; i < ordered.size(); ++i) {
      c.ties.push_back(ordered[i]->graph6);
      if (!recognize_double_broom(*ordered[i]->graph)) ++c.out_of_family_ties;
      if (!ordered[i]->graph->is_tree()) ++c.non_tree_ties;
    }
    if (!c.winner_params) {
      c.family_verdict = "non-member";
    } else if (c.out_of_family_ties > 0) {
      c.family_verdict = "ambiguous";
    } else {
      c.family_verdict = "member";
    }
    c.in_family = c.family_verdict == "member";
    return c;
  }

 private:
  std::size_t scanned_ = 0;
  double best_ = 0.0;
  std::vector<std::pair<Graph, double>> candidates_;
};

}  // namespace

std::string ExtremalCertificate::class_label() const {
  return std::string(kind == GraphClass::Trees ? "trees" : "graphs") + "(n=" + std::to_string(n) +
         ",k=" + std::to_string(k) + ")";
}

std::vector<double> evaluate_spectral_radii(std::span<const Graph> graphs, Objective objective, int threads) {
  std::vector<double> out(graphs.size());
  parallel_for_index(graphs.size(), threads, [&](std::size_t i) { out[i] = rho_of(graphs[i], objective); });
  return out;
}

std::vector<double> evaluate_spectral_radii_serial(std::span<const Graph> graphs, Objective objective) {
  std::vector<double> out;
  out.reserve(graphs.size());
  for (const auto& g : graphs) out.push_back(rho_of(g, objective));
  return out;
}

ExtremalCertificate extremal_search(const ClassQuery& query, Objective objective, const ExecPolicy& policy) {
  check_class_query(query);
  const auto start = Clock::now();
  ClassStream stream(query);
  ArgmaxReducer reducer;
  std::vector<Graph> block;
  const std::size_t block_size = std::max<std::size_t>(1, policy.block_size);
  block.reserve(block_size);
  bool exhausted = false;
  while (!exhausted) {
    block.clear();
    while (block.size() < block_size) {
      auto g = stream.next();
      if (!g) {
        exhausted = true;
        break;
      }
      block.push_back(std::move(*g));
    }
    const auto rhos = evaluate_spectral_radii(block, objective, policy.threads);
    for (std::size_t i = 0; i < block.size(); ++i) reducer.offer(block[i], rhos[i]);
  }
  auto cert = reducer.finish(query, objective);
  cert.runtime_ms = elapsed_ms(start);
  return cert;
}

ExtremalCertificate extremal_search_serial(const ClassQuery& query, Objective objective) {
  check_class_query(query);
  const auto start = Clock::now();
  ClassStream stream(query);
  ArgmaxReducer reducer;
  while (auto g = stream.next()) reducer.offer(*g, rho_of(*g, objective));
  auto cert = reducer.finish(query, objective);
  cert.runtime_ms = elapsed_ms(start);
  return cert;
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

struct LemmaInfo {
  Lemma lemma;
  std::string_view name;
  std::string_view alias;
  std::string_view claim;
  int default_max_n;
  int limit_max_n;
};

constexpr std::array<LemmaInfo, 9> kLemmas{{
    {Lemma::BranchMoveL, "branch-move-L", "",
     "moving G3 from v0 to u does not lower rho_L when the G1 sum dominates, and raises it when strictly", 10, 12},
    {Lemma::BranchMoveQ, "branch-move-Q", "",
     "moving G3 from v0 to u raises rho_Q when the G1 sum (Perron vector) is at least the G2 sum", 10, 12},
    {Lemma::StarRelocation, "star-relocation", "",
     "max(rho_L(H_1), rho_L(H_ell)) > rho_L(H)", 12, 16},
    {Lemma::PendantShiftL, "pendant-shift-L", "", "rho_L(G_{p-1,q+1}) > rho_L(G_{p,q}) for q >= p >= 1", 6, 7},
    {Lemma::PendantShiftQ, "pendant-shift-Q", "", "rho_Q(G_{p-1,q+1}) > rho_Q(G_{p,q}) for q >= p >= 1", 6, 7},
    {Lemma::EdgeAdditionL, "edge-addition-L", "", "rho_L(G+uv) <= rho_L(G)", 6, 7},
    {Lemma::EdgeAdditionQ, "edge-addition-Q", "", "rho_Q(G+uv) < rho_Q(G)", 6, 7},
    {Lemma::TransmissionBound, "transmission-bound", "nath-paul",
     "rho_L(G) >= Tr_max(G) + 1, with equality only for complete graphs", 6, 7},
    {Lemma::EdgeAdditionQPrinted, "edge-addition-Q-printed", "", "rho_Q(G+uv) > rho_Q(G)", 6, 7},
}};

const LemmaInfo& info(Lemma lemma) {
  for (const auto& i : kLemmas) {
    if (i.lemma == lemma) return i;
  }
  throw Error(Errc::UnknownLemma, "unregistered lemma");
}

enum class Verdict { Skip, Confirmed, Tie, Violation };

struct Outcome {
  Verdict verdict = Verdict::Skip;
  std::string graph6;
  std::string detail;
  double larger = 0.0;   // side claimed to be larger
  double smaller = 0.0;  // side claimed to be smaller
  bool printed_direction = false;  // edge-addition-Q: rho_Q increased
};

// Claim larger > smaller.
Outcome strict_claim(double larger, double smaller) {
  Outcome o;
  o.larger = larger;
  o.smaller = smaller;
  switch (compare_rho(larger, smaller)) {
    case RhoOrder::Greater: o.verdict = Verdict::Confirmed; break;
    case RhoOrder::Tie: o.verdict = Verdict::Tie; break;
    case RhoOrder::Less: o.verdict = Verdict::Violation; break;
  }
  return o;
}

// Claim larger >= smaller; ties confirm.
Outcome weak_claim(double larger, double smaller) {
  Outcome o = strict_claim(larger, smaller);
  if (o.verdict == Verdict::Tie) o.verdict = Verdict::Confirmed;
  return o;
}

std::vector<Graph> graph_corpus(int min_n, int max_n) {
  std::vector<Graph> out;
  for (int n = min_n; n <= max_n; ++n) {
    for (auto& g : connected_graph_classes(n)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Outcome> branch_move_outcomes(const Graph& tree, Objective objective) {
  std::vector<Outcome> out;
  const auto base = spectral_radius(tree, objective);
  const auto variant = objective == Objective::RhoL ? GraftVariant::LaplacianMinus : GraftVariant::SignlessPlus;
  const std::string code = graph6_encode(tree);
  std::map<std::pair<std::vector<Vertex>, Vertex>, double> moved_rho;
  for (const auto& d : tree_decompositions(tree)) {
    const auto report = graft_condition(tree, d, base.vector, variant);
    const bool dominated = report.rhs > report.lhs + comparison_tolerance(report.lhs, report.rhs);
    if (dominated) continue;
    auto key = std::make_pair(d.g3, d.u);
    auto it = moved_rho.find(key);
    if (it == moved_rho.end()) {
      it = moved_rho.emplace(std::move(key), rho_of(move_branch(tree, d), objective)).first;
    }
    Outcome o;
    if (objective == Objective::RhoL && !report.strict) {
      o = weak_claim(it->second, base.rho);
    } else {
      o = strict_claim(it->second, base.rho);
    }
    o.graph6 = code;
    o.detail = "v0=" + std::to_string(d.v0) + " u=" + std::to_string(d.u) + " |G3|=" + std::to_string(d.g3.size());
    out.push_back(std::move(o));
  }
  return out;
}

struct PendantShiftItem {
  const Graph* base;
  Vertex u;
  int p;
  int q;
};

Outcome pendant_shift_outcome(const PendantShiftItem& item, Objective objective) {
  const Graph gpq = attach_pendant_paths(*item.base, item.u, item.p, item.q);
  const int n0 = item.base->order();
  std::vector<Vertex> p_path, q_path;
  for (int j = 0; j < item.p; ++j) p_path.push_back(n0 + j);
  for (int j = 0; j < item.q; ++j) q_path.push_back(n0 + item.p + j);
  const Graph shifted = shift_pendant_path(gpq, item.u, p_path, q_path);
  Outcome o = strict_claim(rho_of(shifted, objective), rho_of(gpq, objective));
  o.graph6 = graph6_encode(gpq);
  o.detail = "base=" + graph6_encode(*item.base) + " u=" + std::to_string(item.u) + " p=" + std::to_string(item.p) +
             " q=" + std::to_string(item.q);
  return o;
}

struct EdgeItem {
  const Graph* graph;
  Vertex u;
  Vertex v;
};

}  // namespace

Lemma parse_lemma(std::string_view id) {
  for (const auto& i : kLemmas) {
    if (id == i.name || (!i.alias.empty() && id == i.alias)) return i.lemma;
  }
  throw Error(Errc::UnknownLemma, "unknown lemma id '" + std::string(id) + "'");
}

std::string_view lemma_name(Lemma lemma) { return info(lemma).name; }

std::span<const Lemma> all_lemmas() {
  static const std::array<Lemma, 8> lemmas = [] {
    std::array<Lemma, 8> out{};
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = kLemmas[i].lemma;
    return out;
  }();
  return lemmas;
}

int default_max_n(Lemma lemma) { return info(lemma).default_max_n; }

SweepReport sweep_lemma(Lemma lemma, const SweepBounds& bounds, const ExecPolicy& policy) {
  const auto start = Clock::now();
  const LemmaInfo& li = info(lemma);
  const int max_n = bounds.max_n > 0 ? bounds.max_n : li.default_max_n;
  if (max_n > li.limit_max_n) {
    throw Error(Errc::OutOfRange, std::string(li.name) + " sweeps are capped at n=" + std::to_string(li.limit_max_n));
  }
  SweepReport report;
  report.lemma = std::string(li.name);
  report.claim = std::string(li.claim);
  report.max_n = max_n;

  std::vector<std::vector<Outcome>> results;
  switch (lemma) {
    case Lemma::BranchMoveL:
    case Lemma::BranchMoveQ: {
      const Objective obj = lemma == Lemma::BranchMoveL ? Objective::RhoL : Objective::RhoQ;
      std::vector<Graph> trees;
      for (int n = 4; n <= max_n; ++n) {
        for (auto& t : free_trees(n)) {
          if (branch_vertex_count(t) > 0) trees.push_back(std::move(t));
        }
      }
      results.resize(trees.size());
      parallel_for_index(trees.size(), policy.threads,
                         [&](std::size_t i) { results[i] = branch_move_outcomes(trees[i], obj); });
      break;
    }
    case Lemma::StarRelocation: {
      std::vector<TripleStarPathParams> items;
      for (int ell = 3; ell + 6 <= max_n; ++ell)
        for (int i = 2; i <= ell - 1; ++i)
          for (int s1 = 1; ell + s1 + 5 <= max_n; ++s1)
            for (int si = 1; ell + s1 + si + 4 <= max_n; ++si)
              for (int sl = 1; ell + s1 + si + sl + 3 <= max_n; ++sl) items.push_back({ell, i, s1, si, sl});
      results.resize(items.size());
      parallel_for_index(items.size(), policy.threads, [&](std::size_t j) {
        const auto& p = items[j];
        const Graph h = triple_star_path(p);
        const double moved = std::max(rho_of(relocate_star(p, StarTarget::End1), Objective::RhoL),
                                      rho_of(relocate_star(p, StarTarget::EndL), Objective::RhoL));
        Outcome o = strict_claim(moved, rho_of(h, Objective::RhoL));
        o.graph6 = graph6_encode(h);
        o.detail = "ell=" + std::to_string(p.ell) + " i=" + std::to_string(p.i) + " s=(" + std::to_string(p.s1) +
                   "," + std::to_string(p.si) + "," + std::to_string(p.sl) + ")";
        results[j] = {std::move(o)};
      });
      break;
    }
    case Lemma::PendantShiftL:
    case Lemma::PendantShiftQ: {
      const Objective obj = lemma == Lemma::PendantShiftL ? Objective::RhoL : Objective::RhoQ;
      const auto corpus = graph_corpus(2, max_n);
      std::vector<PendantShiftItem> items;
      for (const auto& g : corpus)
        for (Vertex u = 0; u < g.order(); ++u)
          for (int p = 1; 2 * p <= bounds.max_path_sum; ++p)
            for (int q = p; p + q <= bounds.max_path_sum; ++q) items.push_back({&g, u, p, q});
      results.resize(items.size());
      parallel_for_index(items.size(), policy.threads,
                         [&](std::size_t j) { results[j] = {pendant_shift_outcome(items[j], obj)}; });
      report.notes.push_back("base graphs: one per isomorphism class of connected graphs, 2 <= n <= " +
                             std::to_string(max_n) + "; p + q <= " + std::to_string(bounds.max_path_sum));
      break;
    }
    case Lemma::EdgeAdditionL:
    case Lemma::EdgeAdditionQ:
    case Lemma::EdgeAdditionQPrinted: {
      const Objective obj = lemma == Lemma::EdgeAdditionL ? Objective::RhoL : Objective::RhoQ;
      const auto corpus = graph_corpus(2, max_n);
      std::vector<EdgeItem> items;
      for (const auto& g : corpus)
        for (Vertex u = 0; u < g.order(); ++u)
          for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) items.push_back({&g, u, v});
      results.resize(items.size());
      parallel_for_index(items.size(), policy.threads, [&](std::size_t j) {
        const auto& it = items[j];
        const double before = rho_of(*it.graph, obj);
        const double after = rho_of(add_edge(*it.graph, it.u, it.v), obj);
        Outcome o = lemma == Lemma::EdgeAdditionL ? weak_claim(before, after)
                    : lemma == Lemma::EdgeAdditionQ ? strict_claim(before, after)
                                                    : strict_claim(after, before);
        if (obj == Objective::RhoL && compare_rho(before, after) == RhoOrder::Tie) o.verdict = Verdict::Tie;
        o.printed_direction = compare_rho(after, before) == RhoOrder::Greater;
        o.graph6 = graph6_encode(*it.graph);
        o.detail = "added edge " + std::to_string(it.u) + "-" + std::to_string(it.v);
        results[j] = {std::move(o)};
      });
      break;
    }
    case Lemma::TransmissionBound: {
      const auto corpus = graph_corpus(2, max_n);
      results.resize(corpus.size());
      parallel_for_index(corpus.size(), policy.threads, [&](std::size_t j) {
        const Graph& g = corpus[j];
        const auto d = distance_data(g);
        Outcome o = strict_claim(rho_of(g, Objective::RhoL), static_cast<double>(d.tr_max + 1));
        // Equality is allowed for complete graphs only.
        if (o.verdict == Verdict::Tie && !g.is_complete()) o.verdict = Verdict::Violation;
        o.graph6 = graph6_encode(g);
        o.detail = g.is_complete() ? "complete" : "non-complete";
        results[j] = {std::move(o)};
      });
      break;
    }
  }

  std::size_t printed_direction = 0;
  for (const auto& batch : results) {
    for (const auto& o : batch) {
      if (o.verdict == Verdict::Skip) continue;
      ++report.instances;
      printed_direction += o.printed_direction;
      switch (o.verdict) {
        case Verdict::Confirmed: ++report.confirmed; break;
        case Verdict::Tie:
          ++report.ties;
          if (report.tie_graphs.size() < SweepReport::kMaxListedTies) report.tie_graphs.push_back(o.graph6);
          break;
        case Verdict::Violation: {
          const double gap = o.smaller - o.larger;
          report.violations.push_back({o.graph6, o.detail, o.larger, o.smaller, gap});
          report.max_violation_gap = std::max(report.max_violation_gap, gap);
          break;
        }
        case Verdict::Skip: break;
      }
    }
  }
  if (lemma == Lemma::EdgeAdditionQ) {
    report.notes.push_back("the usage direction (rho_Q decreases) is checked; the printed statement claims an increase, "
                           "which held in " + std::to_string(printed_direction) + " of " +
                           std::to_string(report.instances) + " instances");
  }
  if (lemma == Lemma::TransmissionBound) {
    report.notes.push_back("complete graphs meet the bound with equality (L_D(K_n) = nI - J); they are reported as ties");
  }
  if (lemma == Lemma::BranchMoveL || lemma == Lemma::BranchMoveQ) {
    report.notes.push_back("every decomposition of every tree with 4 <= n <= " + std::to_string(max_n) +
                           " whose graft condition holds for the tree's own eigenvector");
  }
  report.runtime_ms = elapsed_ms(start);
  return report;
}

std::vector<BroomProfileRow> report_broom_profile(int n, int k, Objective objective) {
  if (k < 2 || n - k < 2) throw Error(Errc::BadParams, "need k >= 2 and n - k >= 2");
  std::vector<BroomProfileRow> rows;
  for (int t1 = 1; 2 * t1 <= k; ++t1) {
    const int t2 = k - t1;
    rows.push_back({t1, t2, rho_of(double_broom(DoubleBroomParams::make(n, k, t1, t2)), objective), 0});
  }
  for (auto& r : rows) {
    int above = 0;
    for (const auto& other : rows) above += compare_rho(other.rho, r.rho) == RhoOrder::Greater;
    r.rank = above + 1;
  }
  return rows;
}

std::string_view objective_name(Objective objective) { return objective == Objective::RhoL ? "rhoL" : "rhoQ"; }

Objective parse_objective(std::string_view text) {
  if (text == "rhoL" || text == "L") return Objective::RhoL;
  if (text == "rhoQ" || text == "Q") return Objective::RhoQ;
  throw Error(Errc::BadParams, "objective must be rhoL or rhoQ, got '" + std::string(text) + "'");
}

}  // namespace distlap
