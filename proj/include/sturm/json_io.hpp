#pragma once

#include <json.hpp>

#include <sturm/continued_fraction.hpp>
#include <sturm/derset.hpp>
#include <sturm/quadratic.hpp>
#include <sturm/verify.hpp>

// JSON views of the report types.  Key order is fixed by insertion, so
// identical inputs serialize to identical bytes.

namespace sturm {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const DeltaOrbit& orbit, bool unicode = false) {
  ordered_json j;
  j["seed"] = orbit.seed.render(unicode);
  ordered_json elements = ordered_json::array();
  for (const MorphismName& e : orbit.elements)
    elements.push_back(e.render(unicode));
  j["elements"] = std::move(elements);
  j["preperiod"] = orbit.preperiod;
  j["period"] = orbit.period;
  ordered_json reps = ordered_json::array();
  for (const MorphismName& e : orbit.distinct_mod_f)
    reps.push_back(e.render(unicode));
  j["distinct_mod_F"] = std::move(reps);
  return j;
}

inline ordered_json to_json(const DerSetReport& report,
                            bool unicode = false) {
  ordered_json j;
  j["input"] = report.input.render(unicode);
  j["class"] = to_string(report.der_class);
  if (report.start)
    j["start"] = static_cast<int>(*report.start - '0');
  else
    j["start"] = nullptr;
  ordered_json certs = ordered_json::array();
  for (const MorphismName& c : report.certificates)
    certs.push_back(c.render(unicode));
  j["certificates"] = std::move(certs);
  j["count"] = report.count;
  if (report.preperiod)
    j["preperiod"] = *report.preperiod;
  else
    j["preperiod"] = nullptr;
  if (report.period)
    j["period"] = *report.period;
  else
    j["period"] = nullptr;
  return j;
}

inline ordered_json to_json(const VerificationReport& report,
                            bool unicode = false) {
  ordered_json j;
  if (report.subject)
    j["subject"] = report.subject->render(unicode);
  else
    j["subject"] = nullptr;
  j["passed"] = report.passed();
  j["checks_run"] = report.checks.size();
  j["failures"] = report.failures();
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : report.checks) {
    ordered_json jc;
    jc["check"] = c.check_id;
    jc["params"] = c.params;
    jc["pass"] = c.pass;
    if (!c.witness.empty()) jc["witness"] = c.witness;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  j["budget"] = report.budget;
  return j;
}

inline ordered_json to_json(const ContinuedFraction& cf) {
  ordered_json j;
  j["text"] = cf.render();
  j["preperiod"] = cf.preperiod;
  j["period"] = cf.period;
  return j;
}

}  // namespace sturm
