#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "orbisurf/rat.hpp"

namespace orbisurf {

/// Source position (1-based). Positions never take part in equality, so a
/// rendered and reparsed scenario compares equal to the original.
struct Location {
  int line = 0;
  int column = 0;
  friend bool operator==(const Location&, const Location&) { return true; }
};

struct Value {
  enum class Kind { Number, Ident, Bool, List };
  Kind kind = Kind::Number;
  Rat number;
  std::string ident;
  bool flag = false;
  std::vector<Value> items;
  Location loc;

  static Value of(const Rat& x);
  static Value identifier(std::string name);
  static Value boolean(bool b);
  static Value list(std::vector<Value> items);

  friend bool operator==(const Value&, const Value&) = default;
};

/// Call argument; `key` is empty for positional arguments.
struct Arg {
  std::string key;
  Value value;
  friend bool operator==(const Arg&, const Arg&) = default;
};

struct Call {
  std::string name;
  std::vector<Arg> args;
  Location loc;
  friend bool operator==(const Call&, const Call&) = default;
};

/// `key = value` in [surface] / [rootstack]; `names` carries the extra words
/// of `divisor L = ...` and `crossing L M = ...`.
struct Entry {
  std::string key;
  std::vector<std::string> names;
  Value value;
  Location loc;
  friend bool operator==(const Entry&, const Entry&) = default;
};

struct Definition {
  std::string name;
  Call call;
  Location loc;
  friend bool operator==(const Definition&, const Definition&) = default;
};

struct Query {
  std::string label;  // empty when the file gives none
  Call call;
  Location loc;
  friend bool operator==(const Query&, const Query&) = default;
};

struct Scenario {
  std::vector<Entry> surface;
  std::vector<Entry> rootstack;
  std::vector<Definition> sheaves;
  std::vector<Definition> parabolics;
  std::vector<Query> queries;
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Parses and validates a scenario. Errors carry "line:column: " prefixes and
/// one of SyntaxError, UnknownKey, ForwardReference, ValidationError.
Scenario parse_scenario(std::string_view text);

/// Canonical text form; parse_scenario(render_scenario(s)) == s.
std::string render_scenario(const Scenario& s);
std::string render_value(const Value& v);
std::string render_call(const Call& c);

/// Label used in reports: the explicit label or "q<index>" (1-based).
std::string effective_label(const Scenario& s, std::size_t index);

}  // namespace orbisurf
