#ifndef K3LAMBDA_REPORT_HPP
#define K3LAMBDA_REPORT_HPP

#include "k3lambda/gkz.hpp"
#include "k3lambda/series.hpp"

#include <json.hpp>

#include <chrono>
#include <string>

namespace k3 {

using Json = nlohmann::ordered_json;

/// Canonical encoding: entries sorted by exponent, coefficients keyed by
/// the symbol basis 1, k, p, kk, kp, pp, everything as exact strings.
Json series_json(const MultiSeries& s);
Json policy_json(const TruncationPolicy& p);
Json check_json(const CheckReport& r);

struct ReportBuilder {
  Json root;
  Json checks = Json::array();
  Json timings = Json::object();
  bool all_pass = true;

  explicit ReportBuilder(const std::string& command);
  void add_config(const Json& cfg);
  void add_check(const std::string& name, const CheckReport& r, double ms);
  void add_check(const std::string& name, bool pass, const Json& details, double ms);
  void add_series(const std::string& name, const MultiSeries& s);
  /// Timings go to the JSON only on request so reports stay byte-stable.
  std::string render(bool with_timings) const;
};

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

} // namespace k3

#endif
