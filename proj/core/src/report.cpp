#include "hyperfact/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hyperfact {

namespace {

using ordered_json = nlohmann::ordered_json;

// Quarter bounds that are not integral are exact binary fractions, so a
// double carries them losslessly below 2^53; larger ones fall back to text.
ordered_json bound_json(const QuarterBound& b) {
  if (b.is_integral()) {
    const i128 v = b.numerator / 4;
    if (v >= std::numeric_limits<i64>::min() && v <= std::numeric_limits<i64>::max()) {
      return static_cast<i64>(v);
    }
    return b.to_decimal();
  }
  const i128 lim = i128{1} << 53;
  if (b.numerator > -lim && b.numerator < lim) return static_cast<double>(b.numerator) / 4.0;
  return b.to_decimal();
}

ordered_json witness_json(const Witness& w) {
  if (const auto* t = std::get_if<CloseTriple>(&w)) {
    ordered_json j;
    j["A"] = t->A;
    j["B"] = t->B;
    j["a1"] = t->a1;
    j["b1"] = t->b1;
    j["a2"] = t->a2;
    j["b2"] = t->b2;
    return j;
  }
  if (const auto* p = std::get_if<PointTriple>(&w)) {
    ordered_json pts = ordered_json::array();
    for (const auto& q : p->points) pts.push_back({q.x, q.y});
    return ordered_json{{"points", pts}};
  }
  return nullptr;
}

ordered_json case_json(const CaseRecord& c) {
  ordered_json j;
  j["N"] = c.N;
  j["statistic"] = c.statistic;
  j["bound"] = bound_json(c.bound);
  j["witness"] = witness_json(c.witness);
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

ordered_json cases_json(const std::vector<CaseRecord>& cases) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : cases) arr.push_back(case_json(c));
  return arr;
}

std::string emit_json(const SweepReport& r, const EmitOptions& opts) {
  ordered_json j;
  j["theorem"] = std::string(theorem_label(r.theorem));
  j["range"] = {r.lo, r.hi};
  j["checked_count"] = r.checked_count;
  j["violations"] = cases_json(r.violations);
  j["equality_cases"] = cases_json(r.equality_cases);
  j["informational"] = cases_json(r.informational);
  if (opts.timing) j["elapsed_ms"] = static_cast<i64>(r.elapsed.count());
  j["chunk_count"] = r.chunk_count;
  return j.dump(2) + "\n";
}

std::vector<const CaseRecord*> all_cases(const SweepReport& r) {
  std::vector<const CaseRecord*> rows;
  for (const auto* list : {&r.violations, &r.equality_cases, &r.informational}) {
    for (const auto& c : *list) rows.push_back(&c);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const CaseRecord* a, const CaseRecord* b) {
    if (a->N != b->N) return a->N < b->N;
    return static_cast<int>(a->kind) < static_cast<int>(b->kind);
  });
  return rows;
}

std::string emit_csv(const SweepReport& r) {
  std::string out = "N,statistic,bound,kind\n";
  for (const auto* c : all_cases(r)) {
    out += std::to_string(c->N) + "," + std::to_string(c->statistic) + "," + c->bound.to_decimal() +
           "," + std::string(case_kind_label(c->kind)) + "\n";
  }
  return out;
}

std::string witness_text(const Witness& w) {
  if (const auto* t = std::get_if<CloseTriple>(&w)) {
    const auto pts = t->points();
    return format_factorizations(t->N, pts) + "  (A=" + std::to_string(t->A) +
           ", B=" + std::to_string(t->B) + ", a1=" + std::to_string(t->a1) + ", b1=" +
           std::to_string(t->b1) + ", a2=" + std::to_string(t->a2) + ", b2=" + std::to_string(t->b2) +
           ")";
  }
  if (const auto* p = std::get_if<PointTriple>(&w)) return format_factorizations(p->N, p->points);
  return {};
}

std::string emit_human(const SweepReport& r, const EmitOptions& opts) {
  std::ostringstream os;
  os << "theorem " << theorem_label(r.theorem) << " over [" << r.lo << ", " << r.hi << "]\n";
  os << "  checked:       " << r.checked_count << "\n";
  os << "  violations:    " << r.violations.size() << "\n";
  os << "  equality:      " << r.equality_cases.size() << "\n";
  os << "  informational: " << r.informational.size() << "\n";
  os << "  chunks:        " << r.chunk_count << "\n";
  if (r.cubic_gap_failures != 0) os << "  cubic-gap failures: " << r.cubic_gap_failures << "\n";
  if (opts.timing) os << "  elapsed:       " << r.elapsed.count() << " ms\n";
  for (const auto* c : all_cases(r)) {
    os << case_kind_label(c->kind) << "  N=" << c->N << "  statistic=" << c->statistic
       << "  bound=" << c->bound.to_decimal() << "  " << witness_text(c->witness);
    if (!c->detail.empty()) os << "  [" << c->detail << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "human") return ReportFormat::kHuman;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected json, csv or human)");
}

std::string emit_report(const SweepReport& report, ReportFormat format, const EmitOptions& opts) {
  switch (format) {
    case ReportFormat::kJson: return emit_json(report, opts);
    case ReportFormat::kCsv: return emit_csv(report);
    case ReportFormat::kHuman: return emit_human(report, opts);
  }
  return {};
}

}  // namespace hyperfact
