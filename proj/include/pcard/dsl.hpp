#pragma once

// Expression language naming languages, maps, witnesses and collections:
//   expr := name "(" [expr {"," expr}] ")" | strlit | intlit | "[" [expr {"," expr}] "]"
//   strlit := '"' size ":" digits '"'

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pcard/cantor_bernstein.hpp"
#include "pcard/choice.hpp"
#include "pcard/findiff.hpp"
#include "pcard/iso_tools.hpp"
#include "pcard/ranking.hpp"

namespace pcard::dsl {

class SyntaxError : public PreconditionError {
 public:
  SyntaxError(const std::string& what, std::size_t pos)
      : PreconditionError("syntax error at " + std::to_string(pos) + ": " + what), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class TypeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

struct Expr {
  enum class Kind { Call, String, Integer, List };
  Kind kind = Kind::Call;
  std::string text;  // call name, string body or integer digits
  std::vector<Expr> args;
  std::size_t pos = 0;

  bool operator==(const Expr& o) const { return kind == o.kind && text == o.text && args == o.args; }
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse_all() {
    Expr e = expr();
    skip();
    if (i_ != src_.size()) throw SyntaxError("unexpected '" + std::string(1, src_[i_]) + "'", i_);
    return e;
  }

 private:
  void skip() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < src_.size() && src_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) {
      throw SyntaxError(std::string("expected '") + c + "'" +
                            (i_ < src_.size() ? ", found '" + std::string(1, src_[i_]) + "'" : ", found end of input"),
                        i_);
    }
  }

  std::vector<Expr> items(char close) {
    std::vector<Expr> out;
    if (eat(close)) return out;
    do out.push_back(expr());
    while (eat(','));
    expect(close);
    return out;
  }

  Expr expr() {
    skip();
    if (i_ >= src_.size()) throw SyntaxError("unexpected end of input", i_);
    Expr e;
    e.pos = i_;
    const char c = src_[i_];
    if (c == '"') {
      e.kind = Expr::Kind::String;
      const std::size_t end = src_.find('"', i_ + 1);
      if (end == std::string_view::npos) throw SyntaxError("unterminated string literal", i_);
      e.text = std::string(src_.substr(i_ + 1, end - i_ - 1));
      i_ = end + 1;
      return e;
    }
    if (c == '[') {
      ++i_;
      e.kind = Expr::Kind::List;
      e.args = items(']');
      return e;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      e.kind = Expr::Kind::Integer;
      std::size_t j = i_ + (c == '-' ? 1 : 0);
      while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
      if (j == i_ + 1 && c == '-') throw SyntaxError("expected digits after '-'", i_);
      e.text = std::string(src_.substr(i_, j - i_));
      i_ = j;
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_')) ++j;
      e.text = std::string(src_.substr(i_, j - i_));
      i_ = j;
      expect('(');
      e.args = items(')');
      return e;
    }
    throw SyntaxError("unexpected '" + std::string(1, c) + "'", i_);
  }

  std::string_view src_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline Expr parse(std::string_view text) { return detail::Parser(text).parse_all(); }

inline std::string print(const Expr& e) {
  auto join = [](const std::vector<Expr>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + print(xs[i]);
    return s;
  };
  switch (e.kind) {
    case Expr::Kind::String: return "\"" + e.text + "\"";
    case Expr::Kind::Integer: return e.text;
    case Expr::Kind::List: return "[" + join(e.args) + "]";
    case Expr::Kind::Call: return e.text + "(" + join(e.args) + ")";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Values.

struct Value;
using List = std::vector<Value>;

struct Value {
  std::variant<Nat, Str, List, Language, PartialMap, Equipollence, FiniteDiff, Collection> v;
};

inline std::string kind_name(const Value& x) {
  static const char* names[] = {"integer", "string", "list", "language", "map", "witness", "finite difference",
                                "collection"};
  return names[x.v.index()];
}

/// Display name of a value; for languages, maps and witnesses this is itself
/// an expression in the grammar wherever the constructor has one.
inline std::string describe(const Value& x) {
  struct V {
    std::string operator()(const Nat& n) const { return n.str(); }
    std::string operator()(const Str& s) const { return quoted(s); }
    std::string operator()(const List& l) const {
      std::string s = "[";
      for (std::size_t i = 0; i < l.size(); ++i) s += (i ? ", " : "") + describe(l[i]);
      return s + "]";
    }
    std::string operator()(const Language& L) const { return L.name(); }
    std::string operator()(const PartialMap& f) const { return f.name(); }
    std::string operator()(const Equipollence& E) const { return E.name; }
    std::string operator()(const FiniteDiff& d) const { return findiff_name(d); }
    std::string operator()(const Collection& c) const { return c.name(); }
  };
  return std::visit(V{}, x.v);
}

struct EvalOptions {
  std::optional<std::uint64_t> fuel;
};

namespace detail {

class Args {
 public:
  Args(std::string fn, std::vector<Value> vals, const EvalOptions& opts)
      : fn_(std::move(fn)), vals_(std::move(vals)), opts_(opts) {}

  std::size_t size() const { return vals_.size(); }
  const Value& raw(std::size_t i) const { return vals_.at(i); }
  std::string kind(std::size_t i) const { return kind_name(vals_.at(i)); }

  void arity(std::size_t n) const {
    if (vals_.size() != n) {
      throw TypeError(fn_ + "() takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s") + ", got " +
                      std::to_string(vals_.size()));
    }
  }

  template <typename T>
  const T& get(std::size_t i, const char* expected) const {
    const auto* p = std::get_if<T>(&vals_.at(i).v);
    if (!p) {
      throw TypeError(fn_ + "() argument " + std::to_string(i + 1) + ": expected " + expected + ", got " + kind(i));
    }
    return *p;
  }

  long long integer(std::size_t i) const {
    const Nat& n = get<Nat>(i, "integer");
    if (n > Nat(std::numeric_limits<long long>::max()) || n < Nat(std::numeric_limits<long long>::min())) {
      throw TypeError(fn_ + "() argument " + std::to_string(i + 1) + ": integer out of range");
    }
    return static_cast<long long>(n);
  }
  const Nat& nat(std::size_t i) const { return get<Nat>(i, "integer"); }
  Alphabet alphabet(std::size_t i) const { return Alphabet(static_cast<unsigned>(integer(i))); }
  const Str& str(std::size_t i) const { return get<Str>(i, "string"); }
  const PartialMap& map(std::size_t i) const { return get<PartialMap>(i, "map"); }
  const Equipollence& witness(std::size_t i) const { return get<Equipollence>(i, "witness"); }
  const FiniteDiff& diff(std::size_t i) const { return get<FiniteDiff>(i, "finite difference"); }

  /// Languages accept finite differences, which denote their derived language.
  Language language(std::size_t i) const {
    if (const auto* d = std::get_if<FiniteDiff>(&vals_.at(i).v)) return derived_language(*d);
    return get<Language>(i, "language");
  }

  std::vector<Str> strings(std::size_t i) const {
    const auto& l = get<List>(i, "list of strings");
    std::vector<Str> out;
    for (const auto& x : l) {
      const auto* s = std::get_if<Str>(&x.v);
      if (!s) throw TypeError(fn_ + "() argument " + std::to_string(i + 1) + ": list must hold strings, found " + kind_name(x));
      out.push_back(*s);
    }
    return out;
  }

  Polynomial polynomial(std::size_t i) const {
    const auto& l = get<List>(i, "coefficient list");
    std::vector<std::uint64_t> cs;
    for (const auto& x : l) {
      const auto* n = std::get_if<Nat>(&x.v);
      if (!n || *n < 0) throw TypeError(fn_ + "() argument " + std::to_string(i + 1) + ": coefficients must be non-negative integers");
      cs.push_back(static_cast<std::uint64_t>(*n));
    }
    return Polynomial(cs);
  }

  Language fueled(Language L) const { return opts_.fuel ? L.with_fuel(*opts_.fuel) : L; }

 private:
  std::string fn_;
  std::vector<Value> vals_;
  EvalOptions opts_;
};

using Builtin = std::function<Value(const Args&)>;

inline Value lang(const Args& a, Language L) { return Value{a.fueled(std::move(L))}; }

template <typename F>
Builtin alpha_lang(F f) {
  return [f](const Args& a) {
    a.arity(1);
    return lang(a, f(a.alphabet(0)));
  };
}

template <typename F>
Builtin alpha_map(F f) {
  return [f](const Args& a) {
    a.arity(1);
    return Value{f(a.alphabet(0))};
  };
}

template <typename F>
Builtin str_map(F f) {
  return [f](const Args& a) {
    a.arity(1);
    return Value{f(a.str(0))};
  };
}

inline const std::map<std::string, Builtin>& builtins() {
  static const std::map<std::string, Builtin> table = [] {
    std::map<std::string, Builtin> t;
    // Languages.
    t["sigma_star"] = alpha_lang(gallery::sigma_star);
    t["empty"] = alpha_lang(gallery::empty);
    t["tower_gap_A0"] = alpha_lang(gallery::tower_gap_A0);
    t["tower_gap_A1"] = alpha_lang(gallery::tower_gap_A1);
    t["dedekind"] = alpha_lang(gallery::dedekind);
    t["finite"] = [](const Args& a) {
      if (a.size() == 2) return lang(a, gallery::finite(a.alphabet(0), a.strings(1)));
      a.arity(1);
      auto xs = a.strings(0);
      if (xs.empty()) throw TypeError("finite(): an empty member list needs the alphabet size, as finite(k, [])");
      return lang(a, gallery::finite(xs.front().alphabet(), xs));
    };
    t["complement"] = [](const Args& a) {
      a.arity(1);
      return lang(a, gallery::complement(a.language(0)));
    };
    t["oplus"] = [](const Args& a) {
      a.arity(2);
      return lang(a, gallery::oplus(a.language(0), a.language(1)));
    };
    t["times"] = [](const Args& a) {
      a.arity(2);
      return lang(a, gallery::times(a.language(0), a.language(1)));
    };
    t["tagged"] = [](const Args& a) {
      a.arity(2);
      return lang(a, gallery::tagged(a.str(0), a.language(1)));
    };
    t["prefix"] = [](const Args& a) {
      a.arity(1);
      return lang(a, gallery::prefix(a.str(0)));
    };
    t["shift_set"] = [](const Args& a) {
      a.arity(2);
      return lang(a, gallery::shift_set(a.alphabet(0), a.nat(1)));
    };
    t["findiff"] = [](const Args& a) {
      a.arity(3);
      return Value{make_finite_diff(a.language(0), a.strings(1), a.strings(2))};
    };
    t["suffix_collection"] = alpha_lang(collections::suffix);
    t["doubled_collection"] = alpha_lang(collections::doubled);
    t["padded_collection"] = alpha_lang(collections::padded);
    t["constant_collection"] = alpha_lang(collections::constant);
    t["append_zero_graph"] = alpha_lang(collections::append_zero);
    t["same_length_one_graph"] = alpha_lang(collections::same_length_one);
    t["reduce_decider"] = [](const Args& a) {
      a.arity(2);
      return lang(a, decider_from_witness(a.witness(0), a.str(1)));
    };

    // Maps.
    t["identity"] = alpha_map(maps::identity);
    t["empty_map"] = alpha_map(maps::empty_map);
    t["flip"] = alpha_map(maps::flip);
    t["self_sum_forward"] = alpha_map(maps::self_sum_forward);
    t["self_sum_backward"] = alpha_map(maps::self_sum_backward);
    t["repair"] = alpha_map(maps::repair);
    t["prepend"] = str_map(maps::prepend);
    t["strip"] = str_map(maps::strip);
    t["append"] = str_map(maps::append);
    t["strip_suffix"] = str_map(maps::strip_suffix);
    t["strip_or_spin"] = str_map(maps::strip_or_spin);
    t["add"] = [](const Args& a) {
      a.arity(2);
      return Value{maps::add(a.alphabet(0), a.integer(1))};
    };
    t["convert"] = [](const Args& a) {
      a.arity(2);
      return Value{maps::convert(a.alphabet(0), a.alphabet(1))};
    };
    t["replace_first"] = [](const Args& a) {
      a.arity(2);
      const long long sym = a.integer(1);
      Alphabet al = a.alphabet(0);
      if (sym < 0 || sym >= static_cast<long long>(al.size())) throw TypeError("replace_first(): symbol out of range");
      return Value{maps::replace_first(al, static_cast<unsigned>(sym))};
    };
    t["compose_map"] = [](const Args& a) {
      a.arity(2);
      return Value{maps::compose(a.map(0), a.map(1))};
    };
    t["oplus_map"] = [](const Args& a) {
      a.arity(2);
      return Value{maps::oplus(a.map(0), a.map(1))};
    };
    t["times_map"] = [](const Args& a) {
      a.arity(2);
      return Value{maps::times(a.map(0), a.map(1))};
    };
    t["forward"] = [](const Args& a) {
      a.arity(1);
      return Value{a.witness(0).forward};
    };
    t["backward"] = [](const Args& a) {
      a.arity(1);
      return Value{a.witness(0).backward};
    };
    t["reduce"] = [](const Args& a) {
      a.arity(2);
      return Value{reduction_from_witness(a.witness(0), a.str(1))};
    };
    t["compress"] = [](const Args& a) {
      a.arity(1);
      return Value{compress_extend(a.witness(0))};
    };
    t["uniformize"] = [](const Args& a) {
      a.arity(3);
      return Value{refine_uniformize(MultiMap{a.language(0), a.polynomial(1), a.polynomial(2)})};
    };

    // Witnesses.
    t["identity_w"] = [](const Args& a) {
      a.arity(1);
      return Value{identity_witness(a.language(0))};
    };
    t["prepend_w"] = [](const Args& a) {
      a.arity(1);
      return Value{prepend_witness(a.str(0))};
    };
    t["sigma_self_sum"] = [](const Args& a) {
      a.arity(1);
      return Value{sigma_self_sum(a.alphabet(0))};
    };
    t["sigma_self_product"] = [](const Args& a) {
      a.arity(1);
      return Value{sigma_self_product(a.alphabet(0))};
    };
    t["shift"] = [](const Args& a) {
      a.arity(2);
      return Value{shift_witness(a.alphabet(0), a.integer(1))};
    };
    t["inverse"] = [](const Args& a) {
      a.arity(1);
      return Value{inverse(a.witness(0))};
    };
    t["compose"] = [](const Args& a) {
      a.arity(2);
      return Value{compose_witness(a.witness(0), a.witness(1))};
    };
    t["oplus_w"] = [](const Args& a) {
      a.arity(2);
      return Value{oplus_witness(a.witness(0), a.witness(1))};
    };
    t["times_w"] = [](const Args& a) {
      a.arity(2);
      return Value{times_witness(a.witness(0), a.witness(1))};
    };
    t["commutator"] = [](const Args& a) {
      a.arity(2);
      return Value{commutator(a.language(0), a.language(1))};
    };
    t["associator"] = [](const Args& a) {
      a.arity(3);
      return Value{associator(a.language(0), a.language(1), a.language(2))};
    };
    t["rank_witness"] = [](const Args& a) {
      a.arity(1);
      return Value{rank_witness(a.language(0))};
    };
    t["cb"] = [](const Args& a) {
      a.arity(4);
      return Value{cb_witness(make_injection_pair(a.language(2), a.language(3), a.map(0), a.map(1)), 6)};
    };
    t["transfer"] = [](const Args& a) {
      a.arity(2);
      return Value{transfer_countability(a.witness(0), a.diff(1))};
    };
    t["findiff_w"] = [](const Args& a) {
      a.arity(2);
      return Value{findiff_witness(a.diff(0), a.diff(1))};
    };
    t["iso"] = [](const Args& a) {
      a.arity(2);
      return Value{iso_from_complements(a.witness(0), a.witness(1))};
    };
    t["ghk"] = [](const Args& a) {
      a.arity(4);
      return Value{ghk_iso(a.witness(0), a.witness(1), a.witness(2), a.witness(3))};
    };
    t["cylinder"] = [](const Args& a) {
      a.arity(2);
      return Value{cylinder_witness(a.witness(0), a.witness(1))};
    };
    t["witness"] = [](const Args& a) {
      a.arity(4);
      const auto& f = a.map(0);
      const auto& g = a.map(1);
      Language A = a.language(2), B = a.language(3);
      return Value{make_equipollence("witness(" + f.name() + ", " + g.name() + ", " + A.name() + ", " + B.name() + ")",
                                     f, g, A, B)};
    };

    // Collections.
    t["collection"] = [](const Args& a) {
      a.arity(3);
      return Value{make_collection(a.language(0), a.polynomial(1), a.polynomial(2))};
    };
    return t;
  }();
  return table;
}

}  // namespace detail

inline Value evaluate(const Expr& e, const EvalOptions& opts = {}) {
  switch (e.kind) {
    case Expr::Kind::String:
      try {
        return Value{parse_str(e.text)};
      } catch (const PreconditionError& err) {
        throw SyntaxError(err.what(), e.pos);
      }
    case Expr::Kind::Integer: return Value{Nat(e.text)};
    case Expr::Kind::List: {
      List out;
      for (const auto& x : e.args) out.push_back(evaluate(x, opts));
      return Value{std::move(out)};
    }
    case Expr::Kind::Call: break;
  }
  const auto& table = detail::builtins();
  auto it = table.find(e.text);
  if (it == table.end()) throw SyntaxError("unknown name '" + e.text + "'", e.pos);
  std::vector<Value> args;
  for (const auto& x : e.args) args.push_back(evaluate(x, opts));
  return it->second(detail::Args(e.text, std::move(args), opts));
}

inline Value evaluate(std::string_view text, const EvalOptions& opts = {}) { return evaluate(parse(text), opts); }

inline std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : detail::builtins()) out.push_back(k);
  return out;
}

template <typename T>
T expect(const Value& v, const char* what, const std::string& source) {
  if constexpr (std::is_same_v<T, Language>) {
    if (const auto* d = std::get_if<FiniteDiff>(&v.v)) return derived_language(*d);
  }
  const auto* p = std::get_if<T>(&v.v);
  if (!p) throw TypeError("'" + source + "': expected " + what + ", got " + kind_name(v));
  return *p;
}

inline Language eval_language(const std::string& src, const EvalOptions& o = {}) {
  return expect<Language>(evaluate(src, o), "language", src);
}
inline PartialMap eval_map(const std::string& src, const EvalOptions& o = {}) {
  return expect<PartialMap>(evaluate(src, o), "map", src);
}
inline Equipollence eval_witness(const std::string& src, const EvalOptions& o = {}) {
  return expect<Equipollence>(evaluate(src, o), "witness", src);
}
inline FiniteDiff eval_diff(const std::string& src, const EvalOptions& o = {}) {
  return expect<FiniteDiff>(evaluate(src, o), "finite difference", src);
}
inline Collection eval_collection(const std::string& src, const EvalOptions& o = {}) {
  return expect<Collection>(evaluate(src, o), "collection", src);
}
inline Str eval_str(const std::string& src, const EvalOptions& o = {}) {
  return expect<Str>(evaluate(src, o), "string", src);
}
inline Polynomial eval_polynomial(const std::string& src) {
  Value v = evaluate(src);
  detail::Args a("polynomial", {v}, EvalOptions{});
  return a.polynomial(0);
}

}  // namespace pcard::dsl
