#include "starring/report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace starring {

namespace {

Json literals(const FiniteStarRing& ring, const std::vector<Index>& xs) {
  Json out = Json::array();
  for (const Index x : xs) out.push_back(ring.format(x));
  return out;
}

Json timing(std::optional<double> ms) { return ms ? Json(*ms) : Json(nullptr); }

Json expr_of(const FiniteStarRing& ring) { return ring.expr() ? Json(to_string(*ring.expr())) : Json(nullptr); }

Json header(const std::string& name, const FiniteStarRing& ring, const ReportConfig& config) {
  Json j;
  j["ring"] = name;
  j["expr"] = expr_of(ring);
  j["order"] = ring.order();
  j["config"] = config_json(config);
  return j;
}

Json witness_json(const FiniteStarRing& ring, const Witness& w, bool full) {
  Json j;
  j["reason"] = w.reason;
  j["elements"] = literals(ring, w.elements);
  j["set"] = literals(ring, w.set);
  if (full) {
    Json pairs = Json::array();
    for (const auto& [x, e] : w.map) pairs.push_back(Json::array({ring.format(x), ring.format(e)}));
    j["map"] = std::move(pairs);
  } else {
    std::set<Index> targets;
    for (const auto& entry : w.map) targets.insert(entry.second);
    j["map"] = {{"size", w.map.size()}, {"targets", literals(ring, {targets.begin(), targets.end()})}};
  }
  j["generators"] = literals(ring, w.generators);
  return j;
}

}  // namespace

std::string format_seed(std::uint64_t seed) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%llX", static_cast<unsigned long long>(seed));
  return buf;
}

Json config_json(const ReportConfig& config) {
  return {{"seed", format_seed(config.seed)}, {"bound", config.bound}};
}

Json classification_json(const std::string& name, const FiniteStarRing& ring, const ClassificationReport& report,
                         const ReportConfig& config, std::optional<double> timing_ms) {
  Json j = header(name, ring, config);
  Json verdicts, witnesses;
  for (const Property p : kAllProperties) {
    const auto& v = report.at(p);
    verdicts[std::string(to_string(p))] = v.holds;
    witnesses[std::string(to_string(p))] = witness_json(ring, v.witness, config.full_witnesses);
  }
  j["verdicts"] = std::move(verdicts);
  j["witnesses"] = std::move(witnesses);
  Json violations = Json::array();
  for (const auto& v : hierarchy_violations(report)) violations.push_back(v);
  j["hierarchy_violations"] = std::move(violations);
  j["timing_ms"] = timing(timing_ms);
  return j;
}

Json verdicts_json(const std::string& name, const FiniteStarRing& ring, const std::vector<TheoremVerdict>& verdicts,
                   const ReportConfig& config, std::optional<double> total_ms) {
  Json j = header(name, ring, config);
  Json vs = Json::object(), ws = Json::object();
  std::size_t applicable = 0, failed = 0;
  for (const auto& v : verdicts) {
    vs[v.theorem_id] = {{"applicable", v.applicable}, {"passed", v.passed}, {"detail", v.detail}};
    ws[v.theorem_id] = v.counterexample;
    applicable += v.applicable;
    failed += v.failed();
  }
  j["verdicts"] = std::move(vs);
  j["witnesses"] = std::move(ws);
  j["summary"] = {{"total", verdicts.size()}, {"applicable", applicable}, {"failed", failed}};
  if (total_ms) {
    Json t;
    t["total"] = *total_ms;
    for (const auto& v : verdicts) t[v.theorem_id] = v.elapsed_ms;
    j["timing_ms"] = std::move(t);
  } else {
    j["timing_ms"] = nullptr;
  }
  return j;
}

Json validation_json(const std::string& name, const FiniteStarRing& ring, const ValidationReport& report,
                     const ReportConfig& config, std::optional<double> timing_ms) {
  Json j = header(name, ring, config);
  const auto& mode = report.mode;
  j["mode"] = {{"exhaustive", mode.exhaustive},
               {"reduced", mode.reduced},
               {"samples", mode.samples},
               {"seed", format_seed(mode.seed)}};
  Json verdicts, witnesses;
  for (const auto& a : report.axioms) {
    verdicts[std::string(to_string(a.axiom))] = a.passed;
    witnesses[std::string(to_string(a.axiom))] = {{"counterexample", literals(ring, a.counterexample)},
                                                  {"checked", a.checked}};
  }
  j["verdicts"] = std::move(verdicts);
  j["witnesses"] = std::move(witnesses);
  j["passed"] = report.passed();
  j["timing_ms"] = timing(timing_ms);
  return j;
}

Json projections_json(const std::string& name, const RingAnalysis& analysis, const ReportConfig& config,
                      std::optional<double> timing_ms) {
  const auto& ring = analysis.ring();
  Json j = header(name, ring, config);
  Json rows = Json::array();
  for (const Index e : analysis.projections()) {
    rows.push_back({{"element", ring.format(e)}, {"central", analysis.is_central(e)}});
  }
  j["count"] = analysis.projections().size();
  j["central_count"] = analysis.central_projections().size();
  j["projections"] = std::move(rows);
  j["timing_ms"] = timing(timing_ms);
  return j;
}

Json cover_json(const std::string& name, const RingAnalysis& analysis, Index x, const ReportConfig& config,
                std::optional<double> timing_ms) {
  const auto& ring = analysis.ring();
  Json j = header(name, ring, config);
  j["element"] = ring.format(x);
  const auto cert = analysis.central_cover(analysis.element(x));
  if (cert) {
    j["cover"] = cert->cover.element.to_string();
    Json fixing = Json::array();
    for (const Index h : analysis.central_projections()) {
      if (ring.mul(h, x) == x) fixing.push_back(ring.format(h));
    }
    Json minimality = Json::array();
    for (const auto& [h, hx] : cert->minimality_witnesses) {
      minimality.push_back({{"central", h.to_string()}, {"product", hx.to_string()}});
    }
    j["certificate"] = {{"fixing_central_projections", std::move(fixing)},
                        {"smaller_central_projections", std::move(minimality)}};
  } else {
    j["cover"] = nullptr;
    j["certificate"] = nullptr;
  }
  j["timing_ms"] = timing(timing_ms);
  return j;
}

UnitificationCheck check_unitification(const Subject& subject) {
  const auto& ext = subject.extension();
  UnitificationCheck c{validate_scalar_action(ext.action()), check_condition_iii(ext.action(), subject.base_analysis()),
                       is_torsion_free(ext.action()), {}};
  for (const auto& t : theorem_registry()) {
    if (t.action_level) c.verdicts.push_back(verify(t.id, subject));
  }
  return c;
}

Json unitification_json(const std::string& name, const Subject& subject, const UnitificationCheck& check,
                        const ReportConfig& config, std::optional<double> timing_ms) {
  const auto& ext = subject.extension();
  const auto& r1 = *ext.ring();
  const auto& base = *ext.base();
  Json j = header(name, r1, config);
  j["base"] = {{"ring", base.name()}, {"order", base.order()}};
  j["scalars"] = ext.scalars()->name();

  Json verdicts;
  verdicts["action_laws"] = check.laws.passed();
  verdicts["r1_axioms"] = ext.validation().passed();
  verdicts["unity"] = r1.unity() == ext.pair(base.zero(), *ext.scalars()->unity());
  verdicts["star_ideal"] = !star_ideal_violation(ext).has_value();
  verdicts["condition_iii"] = check.condition.holds;
  verdicts["torsion_free"] = check.torsion.torsion_free;
  verdicts["base_weakly_pq_baer_star"] = subject.base_report().holds(Property::kWeaklyPqBaerStar);
  verdicts["r1_pq_baer_star"] = subject.report().holds(Property::kPqBaerStar);
  j["verdicts"] = std::move(verdicts);

  Json witnesses;
  Json laws = Json::array();
  for (const auto& law : check.laws.laws) {
    if (!law.passed) laws.push_back(std::string(to_string(law.law)));
  }
  witnesses["action_laws"] = std::move(laws);
  Json bounds = Json::object();
  for (const auto& [lambda, e] : check.condition.bounds) bounds[ext.scalars()->format(lambda)] = base.format(e);
  Json cond = {{"bounds", std::move(bounds)}, {"reason", check.condition.reason}};
  cond["failure"] = check.condition.failure
                        ? Json::array({ext.scalars()->format(check.condition.failure->first),
                                       base.format(check.condition.failure->second)})
                        : Json(nullptr);
  witnesses["condition_iii"] = std::move(cond);
  witnesses["torsion_free"] = check.torsion.witness
                                  ? Json::array({ext.scalars()->format(check.torsion.witness->first),
                                                 base.format(check.torsion.witness->second)})
                                  : Json(nullptr);
  j["witnesses"] = std::move(witnesses);

  Json theorems = Json::object();
  for (const auto& v : check.verdicts) {
    theorems[v.theorem_id] = {{"applicable", v.applicable},
                              {"passed", v.passed},
                              {"detail", v.detail},
                              {"counterexample", v.counterexample}};
  }
  j["theorems"] = std::move(theorems);
  j["timing_ms"] = timing(timing_ms);
  return j;
}

Json c031_json(const std::vector<C031Row>& rows, const ReportConfig& config, std::optional<double> timing_ms) {
  Json j;
  j["config"] = config_json(config);
  Json out = Json::array();
  std::size_t disagreements = 0, skipped = 0;
  for (const auto& r : rows) {
    Json row = {{"n", r.n}, {"m", r.m}};
    row["order"] = r.skipped ? Json(nullptr) : Json(r.order);
    row["predicted"] = r.predicted;
    row["computed"] = r.computed ? Json(*r.computed) : Json(nullptr);
    row["skipped"] = r.skipped;
    out.push_back(std::move(row));
    disagreements += !r.agrees();
    skipped += r.skipped;
  }
  j["rows"] = std::move(out);
  j["summary"] = {{"rows", rows.size()}, {"skipped", skipped}, {"disagreements", disagreements}};
  j["timing_ms"] = timing(timing_ms);
  return j;
}

Json search_json(const NonunitalSearch& search, const ReportConfig& config, std::optional<double> timing_ms) {
  Json j;
  j["config"] = config_json(config);
  j["order_max"] = search.order_max;
  j["candidates"] = search.candidates;
  j["nonunital"] = search.nonunital;
  Json findings = Json::array();
  for (const auto& f : search.findings) {
    findings.push_back({{"name", f.name}, {"order", f.order}, {"members", f.members}});
  }
  j["findings"] = std::move(findings);
  j["timing_ms"] = timing(timing_ms);
  return j;
}

}  // namespace starring
