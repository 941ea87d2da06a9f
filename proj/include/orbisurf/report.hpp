#pragma once

#include <string>
#include <variant>
#include <vector>

#include "orbisurf/rat.hpp"

namespace orbisurf {

using FieldValue = std::variant<Rat, bool, mpz_class, std::string, std::vector<Rat>>;

struct Field {
  std::string key;
  FieldValue value;
};

struct QueryReport {
  std::string label;
  std::string command;
  bool ok = true;
  std::string error_code;
  std::string error_message;
  std::vector<Field> fields;
  std::vector<std::string> notes;
};

struct Report {
  std::vector<QueryReport> queries;
  bool any_error() const;
};

enum class ReportFormat { Human, Machine };

/// Machine form: one "key = value" per line, rationals always as "a/b".
/// Human form: indented, rationals shortened. Both list the same fields in
/// the same order.
std::string render_report(const Report& report, ReportFormat format);

}  // namespace orbisurf
