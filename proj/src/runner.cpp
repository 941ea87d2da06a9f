#include "orbisurf/runner.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "orbisurf/bounds.hpp"
#include "orbisurf/error.hpp"
#include "orbisurf/stability.hpp"

namespace orbisurf {

namespace {

[[noreturn]] void fail_at(ErrorCode code, const Location& loc, const std::string& message) {
  fail(code, std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + message);
}

enum class Ref { Sheaf, Parabolic, Any };

struct CallShape {
  std::vector<Ref> positional;
  bool variadic = false;  // repeats the last positional kind, at least once
  std::set<std::string> keys;
};

const std::set<std::string> kBoundsKeys = {"p", "rk", "rkXi", "Hd", "slope_terms", "Lmax", "Lmin",
                                           "mu", "mumax", "mumin", "DeltaHd2"};

std::set<std::string> with(std::set<std::string> base, std::initializer_list<const char*> more) {
  for (const char* k : more) base.insert(k);
  return base;
}

const std::map<std::string, CallShape>& constructors() {
  static const std::map<std::string, CallShape> table = {
      {"line", {{}, false, {"base", "stacky"}}},
      {"sum", {{Ref::Sheaf}, true, {}}},
      {"tensor", {{Ref::Sheaf, Ref::Sheaf}, false, {}}},
      {"twist", {{Ref::Sheaf}, false, {"base", "stacky"}}},
      {"dual", {{Ref::Sheaf}, false, {}}},
      {"frobenius", {{Ref::Sheaf}, false, {"p", "n", "literal"}}},
      {"generating", {{}, false, {}}},
      {"explicit", {{}, false, {"rank", "base", "stacky", "c2", "bands", "points"}}},
      {"from-parabolic", {{Ref::Parabolic}, false, {}}},
  };
  return table;
}

const std::map<std::string, CallShape>& parabolic_constructors() {
  static const std::map<std::string, CallShape> table = {
      {"parabolic", {{}, false, {"rank", "c1", "c2", "weights", "pieces"}}},
  };
  return table;
}

const std::map<std::string, CallShape>& commands() {
  static const std::map<std::string, CallShape> table = {
      {"chi", {{Ref::Sheaf}, false, {}}},
      {"hilbert", {{Ref::Sheaf, Ref::Sheaf}, false, {"H"}}},
      {"slope", {{Ref::Sheaf, Ref::Sheaf}, false, {"H"}}},
      {"delta", {{Ref::Sheaf}, false, {}}},
      {"bogomolov", {{Ref::Sheaf}, false, {"semistable", "strongly", "char"}}},
      {"hn", {{}, false, {"ranks", "slopes"}}},
      {"beta", {{}, false, kBoundsKeys}},
      {"alpha-bound", {{}, false, with(kBoundsKeys, {"alpha"})}},
      {"thmA1", {{}, false, {"ranks", "slopes", "DeltaHd2", "Hd", "rk", "rkXi", "Lmax", "mu", "Lmin"}}},
      {"thmA3", {{}, false, kBoundsKeys}},
      {"thmA5", {{}, false, kBoundsKeys}},
      {"xi", {{Ref::Sheaf, Ref::Sheaf}, false, {"rkXi", "Xi"}}},
      {"kplus", {{Ref::Any}, false, {"H"}}},
      {"restriction-threshold", {{}, false, kBoundsKeys}},
      {"higgs-minchar", {{}, false, {"rk", "rkXi", "Hd", "HAd1", "M", "DeltaHd2"}}},
      {"miyaoka-yau", {{}, false, {"Knef"}}},
      {"pa-slope", {{Ref::Parabolic}, false, {"H"}}},
      {"pa-chi", {{Ref::Parabolic}, false, {"m", "H"}}},
      {"thm39", {{Ref::Parabolic}, false, {}}},
      {"condition-star", {{Ref::Sheaf}, false, {}}},
      {"frobenius", {{Ref::Sheaf}, false, {"p", "n", "literal"}}},
  };
  return table;
}

// Checks argument names, arity and references; returns the shape.
const CallShape& check_call(const Call& call, const std::map<std::string, CallShape>& table, const char* what,
                            const std::set<std::string>& sheaves, const std::set<std::string>& parabolics) {
  auto it = table.find(call.name);
  if (it == table.end()) fail_at(ErrorCode::UnknownKey, call.loc, std::string("unknown ") + what + " '" + call.name + "'");
  const CallShape& shape = it->second;
  std::vector<const Value*> positional;
  std::set<std::string> keys_seen;
  for (const auto& a : call.args) {
    if (a.key.empty()) {
      positional.push_back(&a.value);
    } else {
      if (!shape.keys.count(a.key)) fail_at(ErrorCode::UnknownKey, a.value.loc, "'" + call.name + "' takes no argument '" + a.key + "'");
      if (!keys_seen.insert(a.key).second) fail_at(ErrorCode::ValidationError, a.value.loc, "argument '" + a.key + "' given twice");
    }
  }
  const std::size_t want = shape.positional.size();
  const bool arity_ok = shape.variadic ? positional.size() >= want : positional.size() == want;
  if (!arity_ok) {
    fail_at(ErrorCode::ValidationError, call.loc, "'" + call.name + "' expects " + (shape.variadic ? "at least " : "") +
                                                      std::to_string(want) + " positional argument(s)");
  }
  for (std::size_t i = 0; i < positional.size(); ++i) {
    const Ref kind = shape.positional[std::min(i, want - 1)];
    const Value& v = *positional[i];
    if (kind == Ref::Any) continue;
    if (v.kind != Value::Kind::Ident) fail_at(ErrorCode::ValidationError, v.loc, "expected a name");
    const auto& known = kind == Ref::Sheaf ? sheaves : parabolics;
    if (!known.count(v.ident)) {
      fail_at(ErrorCode::ForwardReference, v.loc, std::string(kind == Ref::Sheaf ? "sheaf" : "parabolic sheaf") + " '" +
                                                      v.ident + "' is not defined before this point");
    }
  }
  return shape;
}

Rat as_rat(const Value& v) {
  if (v.kind != Value::Kind::Number) fail_at(ErrorCode::ValidationError, v.loc, "expected a number");
  return v.number;
}

long as_long(const Value& v) {
  const Rat x = as_rat(v);
  if (!x.is_integer() || !x.num().fits_slong_p()) fail_at(ErrorCode::ValidationError, v.loc, "expected an integer");
  return x.num().get_si();
}

bool as_bool(const Value& v) {
  if (v.kind != Value::Kind::Bool) fail_at(ErrorCode::ValidationError, v.loc, "expected true or false");
  return v.flag;
}

const std::vector<Value>& as_list(const Value& v) {
  if (v.kind != Value::Kind::List) fail_at(ErrorCode::ValidationError, v.loc, "expected a list");
  return v.items;
}

std::vector<Rat> as_rats(const Value& v) {
  std::vector<Rat> out;
  for (const auto& item : as_list(v)) out.push_back(as_rat(item));
  return out;
}

std::vector<long> as_longs(const Value& v) {
  std::vector<long> out;
  for (const auto& item : as_list(v)) out.push_back(as_long(item));
  return out;
}

const std::string& as_ident(const Value& v) {
  if (v.kind != Value::Kind::Ident) fail_at(ErrorCode::ValidationError, v.loc, "expected a name");
  return v.ident;
}

std::vector<Rat> sized(const Value& v, std::size_t n, const char* what) {
  std::vector<Rat> out = as_rats(v);
  if (out.size() != n) {
    fail_at(ErrorCode::ValidationError, v.loc, std::string(what) + " needs " + std::to_string(n) + " entries");
  }
  return out;
}

class Args {
public:
  explicit Args(const Call& call) : call_(call) {
    for (const auto& a : call.args) {
      if (a.key.empty()) {
        positional_.push_back(&a.value);
      } else {
        named_[a.key] = &a.value;
      }
    }
  }
  const Value& at(std::size_t i) const { return *positional_.at(i); }
  std::size_t count() const { return positional_.size(); }
  const Value* find(const std::string& key) const {
    auto it = named_.find(key);
    return it == named_.end() ? nullptr : it->second;
  }
  const Value& need(const std::string& key) const {
    if (const Value* v = find(key)) return *v;
    fail_at(ErrorCode::MissingField, call_.loc, "'" + call_.name + "' needs argument '" + key + "'");
  }
  std::optional<Rat> rat(const std::string& key) const {
    if (const Value* v = find(key)) return as_rat(*v);
    return std::nullopt;
  }
  Rat rat_or(const std::string& key, const Rat& fallback) const { return rat(key).value_or(fallback); }
  long long_or(const std::string& key, long fallback) const {
    if (const Value* v = find(key)) return as_long(*v);
    return fallback;
  }
  bool bool_or(const std::string& key, bool fallback) const {
    if (const Value* v = find(key)) return as_bool(*v);
    return fallback;
  }

private:
  const Call& call_;
  std::vector<const Value*> positional_;
  std::map<std::string, const Value*> named_;
};

void add(QueryReport& q, std::string key, FieldValue value) { q.fields.push_back({std::move(key), std::move(value)}); }

void add_verdict(QueryReport& q, const Verdict& v, const std::string& suffix = "") {
  add(q, "holds" + suffix, v.holds);
  add(q, "residual" + suffix, v.residual);
}

class Session {
public:
  explicit Session(const Scenario& s) {
    build_surface(s);
    build_root_stack(s);
    for (const auto& d : s.parabolics) define_parabolic(d);
    for (const auto& d : s.sheaves) define_sheaf(d);
  }

  // Reference checks for query arguments, done without evaluating.
  void check_query(const Query& q) const {
    check_call(q.call, commands(), "command", sheaf_names_, parabolic_names_);
  }

  QueryReport execute(const Query& q, const std::string& label) const {
    QueryReport out;
    out.label = label;
    out.command = render_call(q.call);
    try {
      check_query(q);
      dispatch(q.call, out);
    } catch (const Error& e) {
      out.ok = false;
      out.error_code = std::string(to_string(e.code()));
      out.error_message = e.what();
      out.fields.clear();
      out.notes.clear();
    } catch (const std::logic_error& e) {
      out.ok = false;
      out.error_code = "InternalError";
      out.error_message = e.what();
      out.fields.clear();
      out.notes.clear();
    }
    return out;
  }

private:
  template <class F>
  static void located(const Location& loc, F&& body) {
    try {
      body();
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::SyntaxError:
        case ErrorCode::UnknownKey:
        case ErrorCode::ForwardReference:
        case ErrorCode::ValidationError:
          throw;
        default:
          fail_at(ErrorCode::ValidationError, loc, std::string(to_string(e.code())) + ": " + e.what());
      }
    }
  }

  void build_surface(const Scenario& s) {
    std::optional<long> rho;
    std::optional<Matrix> gram;
    std::optional<std::vector<Rat>> h, k;
    std::optional<Rat> euler;
    std::vector<std::pair<std::string, const Value*>> divisors;
    Location where{1, 1};
    for (const auto& e : s.surface) {
      if (!e.names.empty() && e.key != "divisor") fail_at(ErrorCode::SyntaxError, e.loc, "unexpected name after '" + e.key + "'");
      if (e.key == "rho") {
        rho = as_long(e.value);
        where = e.loc;
      } else if (e.key == "gram") {
        Matrix m;
        for (const auto& row : as_list(e.value)) m.push_back(as_rats(row));
        gram = std::move(m);
      } else if (e.key == "H") {
        h = as_rats(e.value);
      } else if (e.key == "K") {
        k = as_rats(e.value);
      } else if (e.key == "euler") {
        euler = as_rat(e.value);
      } else if (e.key == "divisor") {
        if (e.names.size() != 1) fail_at(ErrorCode::SyntaxError, e.loc, "expected 'divisor <name> = [...]'");
        divisors.emplace_back(e.names[0], &e.value);
      } else {
        fail_at(ErrorCode::UnknownKey, e.loc, "unknown surface key '" + e.key + "'");
      }
    }
    if (!rho || !gram || !h || !k) fail_at(ErrorCode::ValidationError, where, "surface needs rho, gram, H and K");
    std::map<std::string, DivClass> named;
    for (const auto& [name, v] : divisors) {
      if (named.count(name)) fail_at(ErrorCode::ValidationError, v->loc, "divisor '" + name + "' defined twice");
      named[name] = DivClass(sized(*v, static_cast<std::size_t>(*rho), "divisor"));
    }
    located(where, [&] {
      surface_ = SurfaceModel::build(static_cast<int>(*rho), *gram, DivClass(*h), DivClass(*k), euler, named);
    });
  }

  void build_root_stack(const Scenario& s) {
    long r = 1;
    std::vector<std::string> branch;
    RootStackModel::Crossings crossings;
    Location where{1, 1};
    for (const auto& e : s.rootstack) {
      if (e.key == "r") {
        r = as_long(e.value);
        where = e.loc;
      } else if (e.key == "branch") {
        for (const auto& item : as_list(e.value)) branch.push_back(as_ident(item));
      } else if (e.key == "crossing") {
        if (e.names.size() != 2) fail_at(ErrorCode::SyntaxError, e.loc, "expected 'crossing <A> <B> = n'");
        crossings[{e.names[0], e.names[1]}] = as_rat(e.value);
      } else {
        fail_at(ErrorCode::UnknownKey, e.loc, "unknown rootstack key '" + e.key + "'");
      }
      if (e.key != "crossing" && !e.names.empty()) fail_at(ErrorCode::SyntaxError, e.loc, "unexpected name after '" + e.key + "'");
    }
    located(where, [&] {
      rs_ = orbisurf::build_root_stack(*surface_, static_cast<int>(r), branch, crossings);
    });
  }

  StackyClass stacky_from(const Args& a) const {
    StackyClass c = rs_->zero_class();
    if (const Value* v = a.find("base")) c.base = DivClass(sized(*v, c.base.size(), "base"));
    if (const Value* v = a.find("stacky")) c.stacky = sized(*v, c.stacky.size(), "stacky");
    return c;
  }

  const OrbSheaf& sheaf(const Value& v) const { return sheaves_.at(as_ident(v)); }
  const ParabolicSheaf& parabolic(const Value& v) const { return parabolics_.at(as_ident(v)); }

  void define_parabolic(const Definition& d) {
    check_call(d.call, parabolic_constructors(), "parabolic constructor", sheaf_names_, parabolic_names_);
    if (parabolic_names_.count(d.name)) fail_at(ErrorCode::ValidationError, d.loc, "'" + d.name + "' defined twice");
    const Args a(d.call);
    ParabolicSheaf p = trivial_parabolic(*rs_, 1, DivClass::zero(surface_->rho()), Rat(0));
    p.rank = as_long(a.need("rank"));
    if (const Value* v = a.find("c1")) p.c1E = DivClass(sized(*v, p.c1E.size(), "c1"));
    p.c2E = a.rat_or("c2", Rat(0));
    if (const Value* v = a.find("weights")) p.weights = as_rats(*v);
    for (auto& row : p.pieces) row.assign(p.weights.size(), GradedPiece{});
    if (const Value* v = a.find("pieces")) {
      for (const auto& entry : as_list(*v)) {
        const auto& fields = as_list(entry);
        if (fields.size() != 4) fail_at(ErrorCode::ValidationError, entry.loc, "piece entries are [component, weight, rank, degree]");
        const std::string& comp = as_ident(fields[0]);
        const auto cit = std::find(p.components.begin(), p.components.end(), comp);
        if (cit == p.components.end()) fail_at(ErrorCode::ValidationError, fields[0].loc, "'" + comp + "' is not a branch component");
        const Rat w = as_rat(fields[1]);
        const auto wit = std::find(p.weights.begin(), p.weights.end(), w);
        if (wit == p.weights.end()) fail_at(ErrorCode::ValidationError, fields[1].loc, "weight " + w.pretty() + " is not listed in weights");
        auto& piece = p.pieces[cit - p.components.begin()][wit - p.weights.begin()];
        piece.rank += as_long(fields[2]);
        piece.degree += as_rat(fields[3]);
      }
    }
    located(d.loc, [&] {
      validate(p);
      parabolic_to_orb(rs_, p);  // surfaces denominator and component problems early
    });
    parabolics_.emplace(d.name, std::move(p));
    parabolic_names_.insert(d.name);
  }

  OrbSheaf explicit_sheaf(const Args& a) const {
    const long rank = as_long(a.need("rank"));
    const StackyClass c1 = stacky_from(a);
    const Rat c2 = a.rat_or("c2", Rat(0));
    const auto& rs = *rs_;
    const long r = rs.r();
    std::vector<CurveBands> curves(rs.branch_count(), CurveBands{std::vector<long>(r, 0), std::vector<Rat>(r)});
    std::vector<bool> given(rs.branch_count(), false);
    if (const Value* v = a.find("bands")) {
      for (const auto& entry : as_list(*v)) {
        const auto& f = as_list(entry);
        if (f.size() != 4) fail_at(ErrorCode::ValidationError, entry.loc, "band entries are [component, character, rank, degree]");
        const std::size_t l = rs.index_of(as_ident(f[0]));
        const long j = as_long(f[1]);
        if (j < 0 || j >= r) fail_at(ErrorCode::ValidationError, f[1].loc, "character must lie in 0..r-1");
        curves[l].ranks[j] += as_long(f[2]);
        curves[l].degrees[j] += as_rat(f[3]);
        given[l] = true;
      }
    }
    for (std::size_t l = 0; l < rs.branch_count(); ++l) {
      if (given[l]) continue;
      // everything in the character of the D~ coefficient
      const Rat& coeff = c1.stacky[l];
      const long j = coeff.is_integer() ? mpz_class((coeff.num() % r + r) % r).get_si() : 0;
      curves[l].ranks[j] = rank;
      curves[l].degrees[j] = Rat(r) * stacky_intersect(rs, c1, rs.root_class(l));
    }
    std::map<CrossingKey, PointBands> points;
    if (const Value* v = a.find("points")) {
      for (const auto& entry : as_list(*v)) {
        const auto& f = as_list(entry);
        if (f.size() != 5) fail_at(ErrorCode::ValidationError, entry.loc, "point entries are [A, B, j1, j2, rank]");
        std::size_t l = rs.index_of(as_ident(f[0])), m = rs.index_of(as_ident(f[1]));
        long j1 = as_long(f[2]), j2 = as_long(f[3]);
        if (l > m) {
          std::swap(l, m);
          std::swap(j1, j2);
        }
        if (j1 < 0 || j1 >= r || j2 < 0 || j2 >= r) fail_at(ErrorCode::ValidationError, entry.loc, "characters must lie in 0..r-1");
        auto& table = points[{l, m}].ranks;
        if (table.empty()) table.assign(r, std::vector<long>(r, 0));
        table[j1][j2] += as_long(f[4]);
      }
    }
    for (std::size_t l = 0; l < rs.branch_count(); ++l) {
      for (std::size_t m = l + 1; m < rs.branch_count(); ++m) {
        if (rs.crossing(l, m) > 0 && !points.count({l, m})) {
          points[{l, m}] = PointBands{monotone_coupling(curves[l].ranks, curves[m].ranks)};
        }
      }
    }
    return OrbSheaf(rs_, rank, c1, c2, std::move(curves), std::move(points));
  }

  void define_sheaf(const Definition& d) {
    check_call(d.call, constructors(), "sheaf constructor", sheaf_names_, parabolic_names_);
    if (sheaf_names_.count(d.name)) fail_at(ErrorCode::ValidationError, d.loc, "'" + d.name + "' defined twice");
    const Args a(d.call);
    const std::string& kind = d.call.name;
    std::optional<OrbSheaf> built;
    located(d.loc, [&] {
      if (kind == "line") {
        built = line_bundle(rs_, stacky_from(a));
      } else if (kind == "sum") {
        OrbSheaf acc = sheaf(a.at(0));
        for (std::size_t i = 1; i < a.count(); ++i) acc = direct_sum(acc, sheaf(a.at(i)));
        built = acc;
      } else if (kind == "tensor") {
        built = tensor(sheaf(a.at(0)), sheaf(a.at(1)));
      } else if (kind == "twist") {
        built = twist(sheaf(a.at(0)), stacky_from(a));
      } else if (kind == "dual") {
        built = dual(sheaf(a.at(0)));
      } else if (kind == "frobenius") {
        const long n = a.long_or("n", 1);
        if (n < 1) fail(ErrorCode::InvalidArgument, "Frobenius power must be positive");
        built = frobenius_pullback(sheaf(a.at(0)), as_long(a.need("p")), static_cast<unsigned>(n), a.bool_or("literal", false));
      } else if (kind == "generating") {
        built = default_generating_sheaf(rs_).sheaf();
      } else if (kind == "explicit") {
        built = explicit_sheaf(a);
      } else if (kind == "from-parabolic") {
        built = parabolic_to_orb(rs_, parabolic(a.at(0)));
      }
    });
    sheaves_.emplace(d.name, std::move(*built));
    sheaf_names_.insert(d.name);
  }

  DivClass polarization(const Args& a) const {
    if (const Value* v = a.find("H")) return DivClass(sized(*v, surface_->rho(), "H"));
    return surface_->H();
  }

  BoundsInput bounds(const Args& a, std::initializer_list<const char*> required) const {
    for (const char* key : required) a.need(key);
    BoundsInput b;
    b.p = a.long_or("p", 2);
    b.rk = a.long_or("rk", 1);
    b.rk_xi = a.rat_or("rkXi", Rat(1));
    b.hd = a.rat_or("Hd", Rat(1));
    if (const Value* v = a.find("slope_terms")) b.slope_terms = as_rats(*v);
    b.l_max = a.rat("Lmax");
    b.l_min = a.rat("Lmin");
    b.mu = a.rat("mu");
    b.mu_max = a.rat("mumax");
    b.mu_min = a.rat("mumin");
    b.delta_hd2 = a.rat_or("DeltaHd2", Rat(0));
    return b;
  }

  HNPolygon polygon(const Args& a) const { return HNPolygon(as_longs(a.need("ranks")), as_rats(a.need("slopes"))); }

  void dispatch(const Call& call, QueryReport& out) const {
    const Args a(call);
    const std::string& c = call.name;
    if (c == "chi") {
      add(out, "chi", euler_char(sheaf(a.at(0))));
    } else if (c == "hilbert") {
      const RatPoly h = modified_hilbert(sheaf(a.at(0)), GeneratingSheafData(sheaf(a.at(1))), polarization(a));
      add(out, "polynomial", h.str("m"));
      for (unsigned i = 0; i <= 2; ++i) add(out, "alpha" + std::to_string(i), hilbert_alpha(h, i));
    } else if (c == "slope") {
      const SlopeReport s = slopes(sheaf(a.at(0)), GeneratingSheafData(sheaf(a.at(1))), polarization(a));
      add(out, "mu_xi", s.mu_xi);
      add(out, "deg", s.deg);
      add(out, "mu_orb", s.mu_orb);
      add(out, "deg_xi", s.deg_xi);
    } else if (c == "delta") {
      add(out, "delta", delta(sheaf(a.at(0))));
    } else if (c == "bogomolov") {
      BogomolovContext ctx;
      ctx.semistable_claimed = a.bool_or("semistable", false);
      ctx.strongly = a.bool_or("strongly", false);
      ctx.characteristic = a.long_or("char", 0);
      add_verdict(out, bogomolov_check(sheaf(a.at(0)), ctx));
      add(out, "semistable_claimed", ctx.semistable_claimed);
      add(out, "strongly", ctx.strongly);
      add(out, "char", mpz_class(ctx.characteristic));
      out.notes.push_back(ctx.semistable_claimed
                              ? "semistability is a user-supplied hypothesis; the verdict is advisory"
                              : "no semistability claimed; the residual carries no implication");
    } else if (c == "hn") {
      add(out, "hn_sum", hn_sum(polygon(a)));
    } else if (c == "beta") {
      add(out, "beta", beta(bounds(a, {"p", "rk", "slope_terms"})));
    } else if (c == "alpha-bound") {
      const Rat bound = alpha_bound(bounds(a, {"p", "rk", "slope_terms"}));
      add(out, "bound", bound);
      if (const auto alpha = a.rat("alpha")) {
        add(out, "alpha", *alpha);
        add(out, "within_bound", *alpha <= bound);
      }
    } else if (c == "thmA1") {
      const Verdict v = thmA1_check(polygon(a), as_rat(a.need("DeltaHd2")), as_rat(a.need("Hd")),
                                    as_long(a.need("rk")), a.rat_or("rkXi", Rat(1)), as_rat(a.need("Lmax")),
                                    as_rat(a.need("mu")), as_rat(a.need("Lmin")));
      add_verdict(out, v);
    } else if (c == "thmA3") {
      const BoundsInput b = bounds(a, {"p", "rk", "slope_terms", "Hd", "DeltaHd2"});
      add_verdict(out, thmA3_check(b));
      add(out, "beta", beta(b));
    } else if (c == "thmA5") {
      const auto [first, second] = thmA5_checks(bounds(a, {"rk", "Hd", "DeltaHd2"}));
      add_verdict(out, first, "_L");
      add_verdict(out, second, "_mu");
    } else if (c == "xi") {
      const OrbSheaf& g1 = sheaf(a.at(0));
      const OrbSheaf& g2 = sheaf(a.at(1));
      Rat rk_xi(1);
      if (const Value* v = a.find("Xi")) {
        const auto it = sheaves_.find(as_ident(*v));
        if (it == sheaves_.end()) fail_at(ErrorCode::ForwardReference, v->loc, "sheaf '" + v->ident + "' is not defined");
        rk_xi = Rat(it->second.rank());
      }
      rk_xi = a.rat_or("rkXi", rk_xi);
      const StackyClass x = xi_class(g1.rank(), g1.c1(), g2.rank(), g2.c1(), rk_xi);
      add(out, "xi.base", x.base.coords);
      add(out, "xi.stacky", x.stacky);
      add(out, "xi.numeric", rs_->numeric(x).coords);
      add(out, "xi.H", stacky_intersect(*rs_, x, rs_->pullback(surface_->H())));
    } else if (c == "kplus") {
      const Value& v = a.at(0);
      const DivClass d = v.kind == Value::Kind::Ident ? surface_->divisor(v.ident)
                                                     : DivClass(sized(v, surface_->rho(), "class"));
      const DivClass h = polarization(a);
      add(out, "member", kplus_membership(*surface_, d, h));
      add(out, "square", surface_->intersect(d, d));
      add(out, "dot_H", surface_->intersect(d, h));
    } else if (c == "restriction-threshold") {
      const BoundsInput b = bounds(a, {"p", "rk", "slope_terms", "Hd", "DeltaHd2"});
      add(out, "m_min", restriction_threshold(b));
      add(out, "beta", beta(b));
    } else if (c == "higgs-minchar") {
      const HiggsBound h = higgs_min_char(as_long(a.need("rk")), a.rat_or("rkXi", Rat(1)), as_rat(a.need("Hd")),
                                          as_rat(a.need("HAd1")), as_rat(a.need("M")), as_rat(a.need("DeltaHd2")));
      add(out, "already_nonnegative", h.already_nonnegative);
      add(out, "q_min", mpz_class(h.q_min));
      add(out, "q_prime", mpz_class(h.q_prime));
    } else if (c == "miyaoka-yau") {
      const bool nef = a.bool_or("Knef", false);
      add_verdict(out, miyaoka_yau_check(*surface_));
      add(out, "K_nef_claimed", nef);
      out.notes.push_back(nef ? "K nef is a user-supplied hypothesis; the verdict is advisory"
                              : "K nef not claimed; the inequality need not hold");
    } else if (c == "pa-slope") {
      const ParabolicSlope s = parabolic_slope(parabolic(a.at(0)), *surface_, polarization(a));
      add(out, "padeg", s.padeg);
      add(out, "pamu", s.pamu);
    } else if (c == "pa-chi") {
      const RatPoly h = parabolic_euler(parabolic(a.at(0)), *surface_, polarization(a));
      const Rat m = a.rat_or("m", Rat(0));
      add(out, "polynomial", h.str("m"));
      add(out, "m", m);
      add(out, "value", h.eval(m));
    } else if (c == "thm39") {
      const ParabolicBogomolov b = thm39_check(rs_, parabolic(a.at(0)));
      add_verdict(out, b.verdict);
      add(out, "lhs", b.lhs);
      add(out, "rhs", b.rhs);
      add(out, "delta_W", b.delta_w);
      add(out, "identity", true);
    } else if (c == "condition-star") {
      const OrbSheaf& xi = sheaf(a.at(0));
      add(out, "holds", condition_star_check(xi));
      add(out, "generating", is_generating(xi));
    } else if (c == "frobenius") {
      const OrbSheaf& e = sheaf(a.at(0));
      const long p = as_long(a.need("p"));
      const long n = a.long_or("n", 1);
      if (n < 1) fail(ErrorCode::InvalidArgument, "Frobenius power must be positive");
      const bool literal = a.bool_or("literal", false);
      const OrbSheaf f = frobenius_pullback(e, p, static_cast<unsigned>(n), literal);
      add(out, "rank", mpz_class(f.rank()));
      add(out, "c1.base", f.c1().base.coords);
      add(out, "c1.stacky", f.c1().stacky);
      add(out, "c2", f.c2int());
      add(out, "delta_before", delta(e));
      add(out, "delta_after", delta(f));
      add(out, "scale", pow(Rat(p), static_cast<unsigned>(2 * n)));
      if (literal) out.notes.push_back("characters kept fixed under Frobenius (literal reading)");
    }
  }

  std::optional<SurfaceModel> surface_;
  RootStackPtr rs_;
  std::map<std::string, OrbSheaf> sheaves_;
  std::map<std::string, ParabolicSheaf> parabolics_;
  std::set<std::string> sheaf_names_;
  std::set<std::string> parabolic_names_;
};

bool selected(const RunOptions& options, const std::string& label, const std::string& command) {
  if (options.only.empty()) return true;
  return std::find(options.only.begin(), options.only.end(), label) != options.only.end() ||
         std::find(options.only.begin(), options.only.end(), command) != options.only.end();
}

}  // namespace

void check_scenario(const Scenario& s) {
  const Session session(s);
  for (const auto& q : s.queries) session.check_query(q);
}

Report run(const Scenario& s, const RunOptions& options) {
  Report report;
  const Session session(s);
  for (std::size_t i = 0; i < s.queries.size(); ++i) {
    const std::string label = effective_label(s, i);
    if (!selected(options, label, s.queries[i].call.name)) continue;
    report.queries.push_back(session.execute(s.queries[i], label));
  }
  return report;
}

std::vector<OracleLine> run_chi_oracles() {
  std::vector<OracleLine> lines;
  const SurfaceModel p2 = SurfaceModel::build(1, {{Rat(1)}}, DivClass({Rat(1)}), DivClass({Rat(-3)}), Rat(3),
                                              {{"L1", DivClass({Rat(1)})}, {"L2", DivClass({Rat(1)})}});
  for (int r : {1, 2, 3, 5}) {
    const RootStackPtr rs = orbisurf::build_root_stack(p2, r, {"L1"});
    OracleLine line{"chi(O(kD~)) on the root of order " + std::to_string(r) + " of (P2, line)", true, ""};
    for (int k = -2 * r; k <= 2 * r; ++k) {
      StackyClass c = rs->zero_class();
      c.stacky[0] = Rat(k);
      const Rat got = euler_char(line_bundle(rs, c));
      const long m = Rat(k, r).floor().get_si();
      const Rat want((m + 1) * (m + 2), 2);
      if (got != want) {
        line.pass = false;
        line.detail += " k=" + std::to_string(k) + ": got " + got.pretty() + ", want " + want.pretty() + ";";
      }
    }
    lines.push_back(std::move(line));
  }
  const RootStackPtr two = orbisurf::build_root_stack(p2, 2, {"L1", "L2"});
  const Rat chi = euler_char(structure_sheaf(two));
  lines.push_back({"chi(O) on the square root of (P2, two lines)", chi == Rat(1), "got " + chi.pretty()});
  return lines;
}

}  // namespace orbisurf
