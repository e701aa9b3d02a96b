#include "sincov/report.hpp"

namespace sincov {

namespace {

Json label_list(const std::vector<std::size_t>& idx, const Labels& labels) {
  Json out = Json::array();
  for (std::size_t i : idx) out.push_back(labels.at(i));
  return out;
}

}  // namespace

Json tolerance_json(const Tolerance& tol) {
  Json j;
  j["rel"] = tol.rel;
  j["zero_tol"] = tol.zero_tol;
  j["exact"] = tol.exact;
  return j;
}

Json envelope(std::string_view command, Json input, Json result, const Tolerance& tol) {
  Json j;
  j["command"] = std::string(command);
  j["input"] = std::move(input);
  j["result"] = std::move(result);
  j["tolerance"] = tolerance_json(tol);
  j["version"] = std::string(kVersion);
  return j;
}

Json violations_json(const ViolationReport& r, const Labels& labels) {
  Json j;
  j["law"] = std::string(to_string(r.law));
  j["pass"] = r.pass;
  j["checked_triples"] = r.checked_triples;
  j["total_violations"] = r.total_violations;
  Json list = Json::array();
  for (std::size_t i = 0; i < r.violations.size() && i < kReportViolationCap; ++i) {
    const Violation& v = r.violations[i];
    Json e;
    e["x"] = labels.at(v.x);
    e["y"] = labels.at(v.y);
    e["z"] = labels.at(v.z);
    e["lhs"] = v.lhs;
    e["rhs"] = v.rhs;
    e["gap"] = v.gap;
    list.push_back(std::move(e));
  }
  j["truncated"] = r.total_violations > list.size();
  j["violations"] = std::move(list);
  return j;
}

Json audit_json(const AuditReport& r) {
  Json j;
  j["not_a_solution"] = r.not_a_solution;
  j["has_nonpositive"] = r.has_nonpositive;
  j["has_zero"] = r.has_zero;
  j["all_zero"] = r.all_zero;
  j["positive"] = r.positive;
  j["diag_min"] = r.diag_min;
  j["diag_max"] = r.diag_max;
  j["bound_c"] = r.bound_c ? Json(*r.bound_c) : Json(nullptr);
  j["lower_bound_ok"] = r.lower_bound_ok;
  j["sandwich_ok"] = r.sandwich_ok ? Json(*r.sandwich_ok) : Json(nullptr);
  j["z_property_sections"] = r.z_property_sections;
  return j;
}

Json fsp_json(const FspReport& r) {
  Json j;
  j["passes_reverse"] = r.passes_reverse;
  j["diag_in_unit_interval"] = r.diag_in_unit_interval;
  j["z_hypothesis"] = r.z_hypothesis;
  j["nonnegative"] = r.nonnegative;
  j["theorem_violation"] = r.theorem_violation;
  return j;
}

Json zero_structure_json(const ZeroStructure& s, const Labels& labels) {
  Json anchors = Json::array();
  for (const FZOutcome& o : s.outcomes) {
    Json a;
    a["a"] = labels.at(o.a);
    a["b"] = labels.at(o.b);
    a["kind"] = std::string(to_string(o.kind));
    if (o.kind == FZKind::cross) {
      a["u1"] = label_list(o.u1, labels);
      a["u2"] = label_list(o.u2, labels);
    }
    if (o.witness) a["witness"] = labels.at(*o.witness);
    anchors.push_back(std::move(a));
  }
  Json j;
  j["zero_count"] = s.zeros.pairs.size();
  j["full_zero_rows"] = s.full_zero_rows;
  j["full_zero_columns"] = s.full_zero_columns;
  j["cross_count"] = s.cross_count;
  j["violated_count"] = s.violated_count;
  j["anchors"] = std::move(anchors);
  return j;
}

Json oracle_json(std::string_view claim, const OracleResult& r, const Labels& labels) {
  Json j;
  j["claim"] = std::string(claim);
  j["verdict"] = std::string(to_string(r.verdict));
  j["detail"] = r.detail;
  j["witness"] = label_list(r.witness, labels);
  return j;
}

Json bench_json(const BenchReport& r) {
  auto timing = [](const KernelTiming& t) {
    Json j;
    j["median_s"] = t.median_s;
    j["min_s"] = t.min_s;
    j["gflops"] = t.gflops;
    return j;
  };
  Json j;
  j["n"] = r.n;
  j["reps"] = r.reps;
  j["seed"] = r.seed;
  j["plain"] = timing(r.plain);
  j["blocked"] = timing(r.blocked);
  j["identical"] = r.identical;
  return j;
}

Json cycle_json(const CycleError& e, const Labels& labels) {
  Json j;
  j["message"] = e.what();
  j["cycle"] = label_list(e.cycle(), labels);
  j["weight"] = e.weight();
  return j;
}

template <class T>
Json potential_json(const BasicPotential<T>& p, const Labels& labels) {
  Json j = Json::object();
  for (std::size_t i = 0; i < p.values.size(); ++i) j[labels.at(i)] = scalar_json(p.values[i]);
  return j;
}

template <class T>
Json quotient_json(const QuotientMap<T>& q, const Labels& labels) {
  Json class_of = Json::object();
  for (std::size_t i = 0; i < q.class_of.size(); ++i) class_of[labels.at(i)] = labels.at(q.class_of[i]);
  Json j;
  j["classes"] = q.representatives.size();
  j["representatives"] = label_list(q.representatives, labels);
  j["class_of"] = std::move(class_of);
  j["reduced"] = instance_json(q.reduced);
  return j;
}

template Json potential_json(const BasicPotential<double>&, const Labels&);
template Json potential_json(const BasicPotential<Rational>&, const Labels&);
template Json quotient_json(const QuotientMap<double>&, const Labels&);
template Json quotient_json(const QuotientMap<Rational>&, const Labels&);

}  // namespace sincov
