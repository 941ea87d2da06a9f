#include "orbisurf/scenario.hpp"

#include <cctype>
#include <sstream>

#include "orbisurf/error.hpp"
#include "orbisurf/runner.hpp"

namespace orbisurf {

Value Value::of(const Rat& x) {
  Value v;
  v.kind = Kind::Number;
  v.number = x;
  return v;
}

Value Value::identifier(std::string name) {
  Value v;
  v.kind = Kind::Ident;
  v.ident = std::move(name);
  return v;
}

Value Value::boolean(bool b) {
  Value v;
  v.kind = Kind::Bool;
  v.flag = b;
  return v;
}

Value Value::list(std::vector<Value> items) {
  Value v;
  v.kind = Kind::List;
  v.items = std::move(items);
  return v;
}

namespace {

enum class Section { None, Surface, RootStack, Sheaves, Parabolic, Queries };

[[noreturn]] void fail_at(ErrorCode code, int line, int column, const std::string& message) {
  fail(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message);
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == '\'';
}

// Recursive-descent reader over one line.
class LineReader {
public:
  LineReader(std::string_view text, int line) : s_(text), line_(line) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  Location here() const { return {line_, column()}; }

  bool peek(char c) {
    skip_space();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  bool peek_ident() {
    skip_space();
    return pos_ < s_.size() && ident_start(s_[pos_]);
  }
  std::string ident() {
    skip_space();
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) error("expected a name");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  void expect_end() {
    if (!at_end()) error("unexpected text '" + std::string(s_.substr(pos_)) + "'");
  }

  Value value() {
    skip_space();
    const Location loc = here();
    if (pos_ >= s_.size()) error("expected a value");
    const char c = s_[pos_];
    Value v;
    if (c == '[') {
      ++pos_;
      std::vector<Value> items;
      if (!accept(']')) {
        do {
          items.push_back(value());
        } while (accept(','));
        expect(']');
      }
      v = Value::list(std::move(items));
    } else if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      ++pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      const std::string_view token = s_.substr(start, pos_ - start);
      try {
        v = Value::of(Rat::parse(token));
      } catch (const Error& e) {
        fail_at(ErrorCode::SyntaxError, loc.line, loc.column, e.what());
      }
    } else if (ident_start(c)) {
      const std::string word = ident();
      if (word == "true" || word == "false") {
        v = Value::boolean(word == "true");
      } else {
        v = Value::identifier(word);
      }
    } else {
      error(std::string("unexpected character '") + c + "'");
    }
    v.loc = loc;
    return v;
  }

  Call call() {
    Call c;
    c.loc = here();
    c.name = ident();
    expect('(');
    if (!accept(')')) {
      do {
        Arg a;
        // key=value or a positional value
        const std::size_t save = pos_;
        if (peek_ident()) {
          std::string word = ident();
          if (accept('=')) {
            a.key = std::move(word);
          } else {
            pos_ = save;
          }
        }
        a.value = value();
        c.args.push_back(std::move(a));
      } while (accept(','));
      expect(')');
    }
    return c;
  }

  [[noreturn]] void error(const std::string& message) const {
    fail_at(ErrorCode::SyntaxError, line_, column(), message);
  }

private:
  std::string_view s_;
  int line_;
  std::size_t pos_ = 0;
};

Section section_named(const std::string& name, int line) {
  if (name == "surface") return Section::Surface;
  if (name == "rootstack") return Section::RootStack;
  if (name == "sheaves") return Section::Sheaves;
  if (name == "parabolic") return Section::Parabolic;
  if (name == "queries") return Section::Queries;
  fail_at(ErrorCode::UnknownKey, line, 1, "unknown section [" + name + "]");
}

std::string strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return std::string(hash == std::string_view::npos ? line : line.substr(0, hash));
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  Scenario s;
  Section section = Section::None;
  bool seen[6] = {};
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    LineReader r(line, line_no);
    if (r.at_end()) continue;
    if (r.accept('[')) {
      const std::string name = r.ident();
      r.expect(']');
      r.expect_end();
      section = section_named(name, line_no);
      auto& flag = seen[static_cast<int>(section)];
      if (flag) fail_at(ErrorCode::SyntaxError, line_no, 1, "section [" + name + "] appears twice");
      flag = true;
      continue;
    }
    switch (section) {
      case Section::None:
        r.error("statement outside of a section");
      case Section::Surface:
      case Section::RootStack: {
        Entry e;
        e.loc = r.here();
        e.key = r.ident();
        while (r.peek_ident()) e.names.push_back(r.ident());
        r.expect('=');
        e.value = r.value();
        r.expect_end();
        (section == Section::Surface ? s.surface : s.rootstack).push_back(std::move(e));
        break;
      }
      case Section::Sheaves:
      case Section::Parabolic: {
        Definition d;
        d.loc = r.here();
        d.name = r.ident();
        r.expect('=');
        d.call = r.call();
        r.expect_end();
        (section == Section::Sheaves ? s.sheaves : s.parabolics).push_back(std::move(d));
        break;
      }
      case Section::Queries: {
        Query q;
        q.loc = r.here();
        LineReader probe(line, line_no);
        const std::string first = probe.ident();
        if (probe.accept(':')) {
          q.label = first;
          r = probe;
        }
        q.call = r.call();
        r.expect_end();
        s.queries.push_back(std::move(q));
        break;
      }
    }
  }
  check_scenario(s);
  return s;
}

std::string render_value(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Number: return v.number.pretty();
    case Value::Kind::Ident: return v.ident;
    case Value::Kind::Bool: return v.flag ? "true" : "false";
    case Value::Kind::List: {
      std::string out = "[";
      for (std::size_t i = 0; i < v.items.size(); ++i) {
        if (i) out += ", ";
        out += render_value(v.items[i]);
      }
      return out + "]";
    }
  }
  return "";
}

std::string render_call(const Call& c) {
  std::string out = c.name + "(";
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    if (i) out += ", ";
    if (!c.args[i].key.empty()) out += c.args[i].key + "=";
    out += render_value(c.args[i].value);
  }
  return out + ")";
}

std::string render_scenario(const Scenario& s) {
  std::string out;
  auto entries = [&](const char* header, const std::vector<Entry>& list) {
    if (list.empty()) return;
    if (!out.empty()) out += "\n";
    out += std::string("[") + header + "]\n";
    for (const auto& e : list) {
      out += e.key;
      for (const auto& n : e.names) out += " " + n;
      out += " = " + render_value(e.value) + "\n";
    }
  };
  auto definitions = [&](const char* header, const std::vector<Definition>& list) {
    if (list.empty()) return;
    if (!out.empty()) out += "\n";
    out += std::string("[") + header + "]\n";
    for (const auto& d : list) out += d.name + " = " + render_call(d.call) + "\n";
  };
  entries("surface", s.surface);
  entries("rootstack", s.rootstack);
  definitions("sheaves", s.sheaves);
  definitions("parabolic", s.parabolics);
  if (!s.queries.empty()) {
    if (!out.empty()) out += "\n";
    out += "[queries]\n";
    for (const auto& q : s.queries) {
      if (!q.label.empty()) out += q.label + ": ";
      out += render_call(q.call) + "\n";
    }
  }
  return out;
}

std::string effective_label(const Scenario& s, std::size_t index) {
  const auto& label = s.queries.at(index).label;
  return label.empty() ? "q" + std::to_string(index + 1) : label;
}

}  // namespace orbisurf
