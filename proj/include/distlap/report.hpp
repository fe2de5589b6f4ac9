#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "distlap/eigen.hpp"
#include "distlap/verify.hpp"

namespace distlap {

/// Rounds to 9 significant digits, the precision of every printed number.
double round9(double value);
std::string format9(double value);

nlohmann::json certificate_json(const ExtremalCertificate& c);
nlohmann::json sweep_json(const SweepReport& r);
nlohmann::json profile_json(int n, int k, Objective objective, const std::vector<BroomProfileRow>& rows);

/// One row per (class, n, k, objective).
std::string certificate_csv_header();
std::string certificate_csv_row(const ExtremalCertificate& c);

std::string certificate_text(const ExtremalCertificate& c);
std::string sweep_text(const SweepReport& r);

}  // namespace distlap
