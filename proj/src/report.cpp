#include "orbisurf/report.hpp"

namespace orbisurf {

namespace {

std::string format_value(const FieldValue& v, bool machine) {
  struct Visitor {
    bool machine;
    std::string operator()(const Rat& x) const { return machine ? x.str() : x.pretty(); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const mpz_class& n) const { return n.get_str(); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const std::vector<Rat>& xs) const {
      std::string out = "[";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += (*this)(xs[i]);
      }
      return out + "]";
    }
  };
  return std::visit(Visitor{machine}, v);
}

}  // namespace

bool Report::any_error() const {
  for (const auto& q : queries) {
    if (!q.ok) return true;
  }
  return false;
}

std::string render_report(const Report& report, ReportFormat format) {
  std::string out;
  if (format == ReportFormat::Machine) {
    out += "orbisurf-report = 1\nqueries = " + std::to_string(report.queries.size()) + "\n";
    for (std::size_t i = 0; i < report.queries.size(); ++i) {
      const auto& q = report.queries[i];
      out += "\n[query " + std::to_string(i + 1) + "]\n";
      out += "label = " + q.label + "\n";
      out += "command = " + q.command + "\n";
      out += std::string("status = ") + (q.ok ? "ok" : "error") + "\n";
      if (!q.ok) {
        out += "error.code = " + q.error_code + "\n";
        out += "error.message = " + q.error_message + "\n";
      }
      for (const auto& f : q.fields) out += f.key + " = " + format_value(f.value, true) + "\n";
      for (const auto& n : q.notes) out += "note = " + n + "\n";
    }
    return out;
  }
  for (const auto& q : report.queries) {
    out += q.label + ": " + q.command + "\n";
    if (!q.ok) out += "  error " + q.error_code + ": " + q.error_message + "\n";
    for (const auto& f : q.fields) out += "  " + f.key + ": " + format_value(f.value, false) + "\n";
    for (const auto& n : q.notes) out += "  note: " + n + "\n";
  }
  if (report.queries.empty()) out += "(no queries)\n";
  return out;
}

}  // namespace orbisurf
