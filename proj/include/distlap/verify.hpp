#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distlap/eigen.hpp"
#include "distlap/enumerate.hpp"
#include "distlap/families.hpp"

namespace distlap {

inline constexpr int kSchemaVersion = 1;

enum class GraphClass { Trees, Graphs };

/// Trees of order n with k pendants, or labeled connected graphs of order n
/// with k pendants.
struct ClassQuery {
  GraphClass kind = GraphClass::Trees;
  int n = 0;
  int k = 0;
  int graph_cap = kDefaultGraphCap;
};

/// Parallel execution knobs. Results never depend on either value: work is
/// cut into fixed index blocks and reduced in block order.
struct ExecPolicy {
  int threads = 1;
  std::size_t block_size = 1024;
};

struct ExtremalCertificate {
  int schema_version = kSchemaVersion;
  GraphClass kind = GraphClass::Trees;
  int n = 0;
  int k = 0;
  Objective objective = Objective::RhoL;
  std::string winner;  // graph6, least among the tied copies of the maximum
  double winner_rho = 0.0;
  std::optional<DoubleBroomParams> winner_params;
  bool winner_is_tree = false;
  int winner_branch_vertices = 0;  // vertices of degree >= 3
  std::vector<std::string> ties;   // other isomorphism classes within tolerance, graph6
  int out_of_family_ties = 0;
  int non_tree_ties = 0;
  bool in_family = false;
  std::string family_verdict;  // "member", "non-member" or "ambiguous"
  bool claimed = false;        // family membership is asserted for this class
  std::size_t scanned = 0;
  double runtime_ms = 0.0;  // informational, never serialized

  /// Claim holds, or the class is outside the asserted range.
  bool passes() const noexcept { return !claimed || in_family; }
  std::string class_label() const;
};

/// Spectral radii of a batch, one OpenMP task per graph.
std::vector<double> evaluate_spectral_radii(std::span<const Graph> graphs, Objective objective, int threads);
/// Plain loop over the batch; reference for the parallel kernel.
std::vector<double> evaluate_spectral_radii_serial(std::span<const Graph> graphs, Objective objective);

/// Throws EmptyClass, or OutOfRange when the query exceeds enumeration caps.
ExtremalCertificate extremal_search(const ClassQuery& query, Objective objective, const ExecPolicy& policy = {});
/// One graph at a time, no blocking and no threads.
ExtremalCertificate extremal_search_serial(const ClassQuery& query, Objective objective);

/// Graft and edge-addition inequalities that can be swept over a corpus.
enum class Lemma {
  BranchMoveL,
  BranchMoveQ,
  StarRelocation,
  PendantShiftL,
  PendantShiftQ,
  EdgeAdditionL,
  EdgeAdditionQ,
  TransmissionBound,
  EdgeAdditionQPrinted,  // the increase direction as printed; expected to fail
};

/// Accepts the descriptive names ("pendant-shift-L", ...) and the short
/// numeric ids used on the command line. Throws UnknownLemma.
Lemma parse_lemma(std::string_view id);
std::string_view lemma_name(Lemma lemma);
/// Every lemma whose claim is expected to hold (EdgeAdditionQPrinted excluded).
std::span<const Lemma> all_lemmas();

struct SweepBounds {
  int max_n = 0;         // 0 selects the lemma's default corpus size
  int max_path_sum = 6;  // pendant shifts only: p + q bound
};

struct SweepViolation {
  std::string graph6;
  std::string detail;
  double claimed_larger = 0.0;
  double claimed_smaller = 0.0;
  double gap = 0.0;
};

struct SweepReport {
  int schema_version = kSchemaVersion;
  std::string lemma;
  std::string claim;
  int max_n = 0;
  std::size_t instances = 0;
  std::size_t confirmed = 0;
  std::size_t ties = 0;
  std::vector<SweepViolation> violations;
  double max_violation_gap = 0.0;
  std::vector<std::string> tie_graphs;  // first kMaxListedTies tie witnesses
  std::vector<std::string> notes;
  double runtime_ms = 0.0;

  static constexpr std::size_t kMaxListedTies = 200;
  bool consistent() const noexcept { return confirmed + ties + violations.size() == instances; }
};

int default_max_n(Lemma lemma);

/// Throws OutOfRange for bounds beyond the desk-scale caps.
SweepReport sweep_lemma(Lemma lemma, const SweepBounds& bounds = {}, const ExecPolicy& policy = {});

struct BroomProfileRow {
  int t1 = 0;
  int t2 = 0;
  double rho = 0.0;
  int rank = 0;  // 1 = largest rho; tied rows share a rank
};

/// Every T(n, k; t1, t2) with t1 <= t2, in increasing t1. Throws BadParams.
std::vector<BroomProfileRow> report_broom_profile(int n, int k, Objective objective);

std::string_view objective_name(Objective objective);
Objective parse_objective(std::string_view text);

}  // namespace distlap
