#include "k3lambda/report.hpp"

namespace k3 {

Json series_json(const MultiSeries& s) {
  static const char* keys[6] = {"1", "k", "p", "kk", "kp", "pp"};
  static const int kdeg[6] = {0, 1, 0, 2, 1, 0};
  static const int pdeg[6] = {0, 0, 1, 0, 1, 2};
  Json out = Json::array();
  for (const auto& [e, c] : s.terms()) {
    Json entry = Json::object();
    Json exps = Json::array();
    for (int i = 0; i < s.policy().arity; ++i) exps.push_back(e.value(i).get_str());
    entry["exp"] = exps;
    Json coef = Json::object();
    for (int k = 0; k < 6; ++k) {
      Rat v = c.part(kdeg[k], pdeg[k]);
      if (v != 0) coef[keys[k]] = v.get_str();
    }
    entry["coef"] = coef;
    out.push_back(entry);
  }
  return out;
}

Json policy_json(const TruncationPolicy& p) {
  Json out = Json::object();
  out["arity"] = p.arity;
  Json w = Json::array();
  for (int i = 0; i < p.arity; ++i) w.push_back(p.primary.weights[i]);
  out["weights"] = w;
  out["cutoff"] = p.primary.cutoff;
  if (p.window) out["window"] = *p.window;
  if (p.extra) {
    Json e = Json::object();
    Json ew = Json::array();
    for (int i = 0; i < p.arity; ++i) ew.push_back(p.extra->weights[i]);
    e["weights"] = ew;
    e["cutoff"] = p.extra->cutoff;
    out["graded"] = e;
  }
  return out;
}

Json check_json(const CheckReport& r) {
  Json out = Json::object();
  out["pass"] = r.pass;
  if (!r.failures.empty()) {
    Json f = Json::array();
    for (const auto& x : r.failures) {
      Json e = Json::object();
      e["where"] = x.where;
      e["detail"] = x.detail;
      f.push_back(e);
    }
    out["failures"] = f;
  }
  return out;
}

ReportBuilder::ReportBuilder(const std::string& command) {
  root = Json::object();
  root["schema"] = "k3lambda-report/1";
  root["command"] = command;
}

void ReportBuilder::add_config(const Json& cfg) { root["config"] = cfg; }

void ReportBuilder::add_check(const std::string& name, const CheckReport& r, double ms) {
  Json c = check_json(r);
  c["name"] = name;
  checks.push_back(c);
  all_pass &= r.pass;
  timings[name] = (long)ms;
}

void ReportBuilder::add_check(const std::string& name, bool pass, const Json& details,
                              double ms) {
  Json c = Json::object();
  c["name"] = name;
  c["pass"] = pass;
  if (!details.is_null()) c["details"] = details;
  checks.push_back(c);
  all_pass &= pass;
  timings[name] = (long)ms;
}

void ReportBuilder::add_series(const std::string& name, const MultiSeries& s) {
  if (!root.contains("series")) root["series"] = Json::object();
  Json entry = Json::object();
  entry["policy"] = policy_json(s.policy());
  entry["terms"] = series_json(s);
  root["series"][name] = entry;
}

std::string ReportBuilder::render(bool with_timings) const {
  Json out = root;
  out["checks"] = checks;
  out["pass"] = all_pass;
  if (with_timings) out["timings_ms"] = timings;
  return out.dump(2) + "\n";
}

} // namespace k3
