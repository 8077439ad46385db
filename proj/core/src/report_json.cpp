#include <cmath>
#include <string>

#include "fmt/format.h"
#include "json.hpp"
#include "trirealize/report.hpp"

namespace trirealize {

namespace {

using nlohmann::ordered_json;

ordered_json real(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::stod(fmt::format("{:.9g}", x));
}

ordered_json condition_json(const ConditionReport& report) {
  ordered_json out;
  out["condition"] = std::string(to_string(report.condition));
  out["passed"] = report.passed();
  out["violations"] = ordered_json::array();
  for (const auto& v : report.violations) {
    ordered_json item;
    item["locus"] = v.locus.name;
    item["kind"] = v.locus.kind == Locus::Kind::Triangle ? "triangle" : "vertex";
    item["residual"] = real(v.residual);
    item["detail"] = v.detail;
    out["violations"].push_back(std::move(item));
  }
  return out;
}

ordered_json params_json(const std::vector<Param>& params) {
  ordered_json out = ordered_json::object();
  for (const auto& p : params) out[p.name] = real(p.value);
  return out;
}

ordered_json report_json(const VerificationReport& report) {
  ordered_json out;
  out["scenario"] = std::string(to_string(report.scenario));
  out["trials"] = report.trials;
  out["seed"] = report.seed;
  out["tol"] = real(report.tol);
  out["stress"] = report.stress;
  out["passed_trials"] = report.passed_trials();
  out["max_deviation"] = real(report.max_deviation());
  out["results"] = ordered_json::array();
  for (const TrialResult& r : report.results) {
    ordered_json t;
    t["index"] = r.index;
    t["params"] = params_json(r.params);
    t["passed"] = r.passed;
    t["built"] = r.built;
    if (!r.error.empty()) t["error"] = r.error;
    if (r.built) {
      t["map"] = std::string(to_string(r.map_source));
      t["realizable"] = r.realizable;
      t["pairing"] = r.pairing;
      t["failed_conditions"] = r.failed_conditions;
      t["realized"] = r.realized;
      t["similarity_deviation"] = real(r.similarity_deviation);
      t["roundtrip_deviation"] = real(r.roundtrip_deviation);
      t["oracle_map_deviation"] = real(r.oracle_map_deviation);
      t["checks"] = ordered_json::array();
      for (const Check& c : r.checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["measured"] = real(c.measured);
        cj["expected"] = real(c.expected);
        cj["deviation"] = real(c.deviation);
        cj["threshold"] = real(c.threshold);
        cj["informational"] = c.informational;
        cj["passed"] = c.passed();
        t["checks"].push_back(std::move(cj));
      }
    }
    out["results"].push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::string_view to_string(MapSource source) {
  return source == MapSource::Measured ? "measured" : "closed-form";
}

std::string to_json(const Figure& figure, const Verdict& verdict) {
  ordered_json out;
  out["figure"] = figure.name();
  out["realizable"] = verdict.realizable;
  out["via"] = std::string(to_string(verdict.via));
  out["reports"] = ordered_json::array();
  for (const auto& report : verdict.reports) out["reports"].push_back(condition_json(report));
  return out.dump(2) + "\n";
}

std::string to_json(const Realization& realization, const Figure& figure) {
  ordered_json out;
  out["figure"] = figure.name();
  out["coordinates"] = ordered_json::object();
  for (VertexIndex v = 0; v < figure.vertex_count(); ++v) {
    out["coordinates"][figure.label(v)] = {real(realization.coords[v].x), real(realization.coords[v].y)};
  }
  out["max_closure_residual"] = real(realization.max_closure_residual);
  out["warnings"] = realization.warnings;
  return out.dump(2) + "\n";
}

std::string to_json(const std::vector<PatternClass>& classes) {
  ordered_json out = ordered_json::array();
  for (const auto& c : classes) {
    ordered_json item;
    item["canonical"] = c.canonical.str();
    item["signature"] = c.signature;
    item["members"] = c.members;
    out.push_back(std::move(item));
  }
  return out.dump(2) + "\n";
}

std::string to_json(const VerificationReport& report) { return report_json(report).dump(2) + "\n"; }

std::string to_json(const std::vector<VerificationReport>& reports) {
  ordered_json out = ordered_json::array();
  for (const auto& r : reports) out.push_back(report_json(r));
  return out.dump(2) + "\n";
}

}  // namespace trirealize
