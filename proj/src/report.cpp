#include "distlap/report.hpp"

#include <cstdio>
#include <sstream>

namespace distlap {

std::string format9(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

double round9(double value) { return std::stod(format9(value)); }

nlohmann::json certificate_json(const ExtremalCertificate& c) {
  nlohmann::json j;
  j["schema_version"] = c.schema_version;
  j["class"] = c.kind == GraphClass::Trees ? "trees" : "graphs";
  j["n"] = c.n;
  j["k"] = c.k;
  j["objective"] = objective_name(c.objective);
  j["winner"] = c.winner;
  j["winner_rho"] = round9(c.winner_rho);
  if (c.winner_params) {
    j["winner_params"] = {{"n", c.winner_params->n},
                          {"k", c.winner_params->k},
                          {"t1", c.winner_params->t1},
                          {"t2", c.winner_params->t2},
                          {"ell", c.winner_params->ell}};
  } else {
    j["winner_params"] = nullptr;
  }
  j["winner_is_tree"] = c.winner_is_tree;
  j["winner_branch_vertices"] = c.winner_branch_vertices;
  j["ties"] = c.ties;
  j["out_of_family_ties"] = c.out_of_family_ties;
  j["non_tree_ties"] = c.non_tree_ties;
  j["in_family"] = c.in_family;
  j["family_verdict"] = c.family_verdict;
  j["claimed"] = c.claimed;
  j["scanned"] = c.scanned;
  return j;
}

nlohmann::json sweep_json(const SweepReport& r) {
  nlohmann::json j;
  j["schema_version"] = r.schema_version;
  j["lemma"] = r.lemma;
  j["claim"] = r.claim;
  j["max_n"] = r.max_n;
  j["instances"] = r.instances;
  j["confirmed"] = r.confirmed;
  j["ties"] = r.ties;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : r.violations) {
    j["violations"].push_back({{"graph6", v.graph6},
                               {"detail", v.detail},
                               {"claimed_larger", round9(v.claimed_larger)},
                               {"claimed_smaller", round9(v.claimed_smaller)},
                               {"gap", round9(v.gap)}});
  }
  j["max_violation_gap"] = round9(r.max_violation_gap);
  j["tie_graphs"] = r.tie_graphs;
  j["notes"] = r.notes;
  return j;
}

nlohmann::json profile_json(int n, int k, Objective objective, const std::vector<BroomProfileRow>& rows) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = n;
  j["k"] = k;
  j["objective"] = objective_name(objective);
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    j["rows"].push_back({{"t1", r.t1}, {"t2", r.t2}, {"rho", round9(r.rho)}, {"rank", r.rank}});
  }
  return j;
}

std::string certificate_csv_header() {
  return "class,n,k,objective,winner,winner_rho,t1,t2,in_family,family_verdict,claimed,ties,scanned";
}

std::string certificate_csv_row(const ExtremalCertificate& c) {
  std::ostringstream os;
  os << (c.kind == GraphClass::Trees ? "trees" : "graphs") << ',' << c.n << ',' << c.k << ','
     << objective_name(c.objective) << ',' << c.winner << ',' << format9(c.winner_rho) << ',';
  if (c.winner_params) {
    os << c.winner_params->t1 << ',' << c.winner_params->t2;
  } else {
    os << ',';
  }
  os << ',' << (c.in_family ? "true" : "false") << ',' << c.family_verdict << ',' << (c.claimed ? "true" : "false")
     << ',' << c.ties.size() << ',' << c.scanned;
  return os.str();
}

std::string certificate_text(const ExtremalCertificate& c) {
  std::ostringstream os;
  os << "class        " << c.class_label() << '\n';
  os << "objective    " << objective_name(c.objective) << '\n';
  os << "scanned      " << c.scanned << '\n';
  os << "winner       " << c.winner << '\n';
  os << "winner_rho   " << format9(c.winner_rho) << '\n';
  os << "family       " << (c.winner_params ? to_string(*c.winner_params) : std::string("none")) << '\n';
  os << "verdict      " << c.family_verdict << (c.claimed ? "" : " (membership not asserted for this k)") << '\n';
  os << "ties         " << c.ties.size() << " (out of family " << c.out_of_family_ties << ", non-tree "
     << c.non_tree_ties << ")\n";
  return os.str();
}

std::string sweep_text(const SweepReport& r) {
  std::ostringstream os;
  os << "lemma        " << r.lemma << '\n';
  os << "claim        " << r.claim << '\n';
  os << "max_n        " << r.max_n << '\n';
  os << "instances    " << r.instances << '\n';
  os << "confirmed    " << r.confirmed << '\n';
  os << "ties         " << r.ties << '\n';
  os << "violations   " << r.violations.size() << '\n';
  if (!r.violations.empty()) os << "max_gap      " << format9(r.max_violation_gap) << '\n';
  for (const auto& v : r.violations) {
    os << "  violation  " << v.graph6 << ' ' << v.detail << " larger=" << format9(v.claimed_larger)
       << " smaller=" << format9(v.claimed_smaller) << '\n';
  }
  for (const auto& n : r.notes) os << "note         " << n << '\n';
  return os.str();
}

}  // namespace distlap
