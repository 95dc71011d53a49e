#pragma once

// Strings over a finite alphabet, their length-lexicographic correspondence
// with the naturals, pairing, and string arithmetic.
//
// A string of length l over an alphabet of size k has rank
//   sum_{i<l} k^i + value_k(x),
// i.e. its 0-based position in the length-lex enumeration. This is bijective
// base-k numeration with digit d read as d + 1, which is what rank/unrank use.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <compare>
#include <limits>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "pcard/error.hpp"

namespace pcard {

/// Arbitrary-precision natural number. Signed storage; non-negativity is the
/// caller's invariant except where an operation documents otherwise.
using Nat = boost::multiprecision::cpp_int;

inline constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

class Alphabet {
 public:
  static constexpr unsigned kMaxSize = 36;

  explicit Alphabet(unsigned size) : size_(size) {
    if (size < 2 || size > kMaxSize) {
      throw PreconditionError("alphabet size must be in [2, 36], got " + std::to_string(size));
    }
  }

  unsigned size() const { return size_; }
  char symbol(unsigned index) const { return kDigits[index]; }

  /// Index of a symbol character, or -1 when it is not part of this alphabet.
  int index_of(char c) const {
    int pos = -1;
    if (c >= '0' && c <= '9') pos = c - '0';
    else if (c >= 'a' && c <= 'z') pos = 10 + (c - 'a');
    return pos >= 0 && static_cast<unsigned>(pos) < size_ ? pos : -1;
  }

  friend bool operator==(Alphabet, Alphabet) = default;

 private:
  unsigned size_;
};

/// A finite string over an Alphabet. Symbols are stored as their digit
/// characters ('0'..'9', 'a'..'z'), so plain character comparison agrees with
/// the symbol order.
class Str {
 public:
  explicit Str(Alphabet alphabet) : alphabet_(alphabet) {}

  Str(Alphabet alphabet, std::string symbols) : alphabet_(alphabet), symbols_(std::move(symbols)) {
    for (char c : symbols_) {
      if (alphabet_.index_of(c) < 0) {
        throw PreconditionError(std::string("symbol '") + c + "' outside alphabet of size " +
                                std::to_string(alphabet_.size()));
      }
    }
  }

  /// Skips validation; the caller guarantees every symbol is in range.
  static Str unchecked(Alphabet alphabet, std::string symbols) { return Str(alphabet, std::move(symbols), Trusted{}); }

  Alphabet alphabet() const { return alphabet_; }
  const std::string& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  unsigned at(std::size_t i) const { return static_cast<unsigned>(alphabet_.index_of(symbols_[i])); }

  bool starts_with(const Str& w) const { return symbols_.starts_with(w.symbols_); }
  bool ends_with(const Str& w) const { return symbols_.ends_with(w.symbols_); }

  Str concat(const Str& tail) const {
    require_same_alphabet(tail);
    return Str(alphabet_, symbols_ + tail.symbols_, Trusted{});
  }
  Str drop_front(std::size_t n) const { return Str(alphabet_, symbols_.substr(n), Trusted{}); }
  Str drop_back(std::size_t n) const {
    return Str(alphabet_, symbols_.substr(0, symbols_.size() - n), Trusted{});
  }
  Str take(std::size_t n) const { return Str(alphabet_, symbols_.substr(0, n), Trusted{}); }
  Str with_front(unsigned symbol) const {
    return Str(alphabet_, alphabet_.symbol(symbol) + symbols_, Trusted{});
  }

  void require_same_alphabet(const Str& other) const {
    if (alphabet_ != other.alphabet_) {
      throw PreconditionError("alphabet mismatch: " + std::to_string(alphabet_.size()) + " vs " +
                              std::to_string(other.alphabet_.size()));
    }
  }

  friend bool operator==(const Str&, const Str&) = default;

  /// Length-lexicographic order; strings over different alphabets order by
  /// alphabet size first.
  friend std::strong_ordering operator<=>(const Str& a, const Str& b) {
    if (auto c = a.alphabet_.size() <=> b.alphabet_.size(); c != 0) return c;
    if (auto c = a.symbols_.size() <=> b.symbols_.size(); c != 0) return c;
    return a.symbols_.compare(b.symbols_) <=> 0;
  }

 private:
  struct Trusted {};
  Str(Alphabet alphabet, std::string symbols, Trusted) : alphabet_(alphabet), symbols_(std::move(symbols)) {}

  Alphabet alphabet_;
  std::string symbols_;
};

/// `<alphabet-size>:<digits>`, e.g. "2:0110"; the empty string is "2:".
inline std::string format(const Str& x) { return std::to_string(x.alphabet().size()) + ":" + x.symbols(); }

inline std::ostream& operator<<(std::ostream& os, const Str& x) { return os << format(x); }

inline Str parse_str(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw PreconditionError("string literal must look like <size>:<digits>, got '" + std::string(text) + "'");
  }
  unsigned size = 0;
  for (char c : text.substr(0, colon)) {
    if (c < '0' || c > '9') throw PreconditionError("bad alphabet size in '" + std::string(text) + "'");
    size = size * 10 + static_cast<unsigned>(c - '0');
    if (size > 1000) throw PreconditionError("bad alphabet size in '" + std::string(text) + "'");
  }
  return Str(Alphabet(size), std::string(text.substr(colon + 1)));
}

/// Number of strings of length at most n: (k^(n+1) - 1) / (k - 1).
inline Nat count_upto(Alphabet a, std::size_t n) {
  Nat k = a.size();
  return (boost::multiprecision::pow(k, static_cast<unsigned>(n + 1)) - 1) / (k - 1);
}

/// Number of strings of length exactly n.
inline Nat count_exact(Alphabet a, std::size_t n) {
  return boost::multiprecision::pow(Nat(a.size()), static_cast<unsigned>(n));
}

/// 0-based position of x in the length-lex enumeration of its alphabet.
inline Nat rank(const Str& x) {
  const unsigned k = x.alphabet().size();
  // Native arithmetic while the value provably fits, then big integers.
  constexpr std::uint64_t kLimit = std::uint64_t(1) << 56;
  std::uint64_t small = 0;
  std::size_t i = 0;
  for (; i < x.size() && small < kLimit / 64; ++i) small = small * k + x.at(i) + 1;
  if (i == x.size()) return Nat(small);
  Nat r = small;
  for (; i < x.size(); ++i) {
    r *= k;
    r += x.at(i) + 1;
  }
  return r;
}

inline Str unrank(Nat n, Alphabet a) {
  if (n < 0) throw PreconditionError("unrank of a negative number");
  std::string out;
  const unsigned k = a.size();
  while (n > std::numeric_limits<std::uint64_t>::max() / 2) {
    n -= 1;
    auto d = static_cast<unsigned>(n % k);
    out.push_back(a.symbol(d));
    n /= k;
  }
  for (auto m = n.convert_to<std::uint64_t>(); m > 0;) {
    m -= 1;
    out.push_back(a.symbol(static_cast<unsigned>(m % k)));
    m /= k;
  }
  std::reverse(out.begin(), out.end());
  return Str::unchecked(a, std::move(out));
}

/// Length-lex successor, computed without big-integer arithmetic.
inline Str successor(const Str& x) {
  std::string s = x.symbols();
  const Alphabet a = x.alphabet();
  const char top = a.symbol(a.size() - 1);
  std::size_t i = s.size();
  while (i > 0 && s[i - 1] == top) {
    s[i - 1] = a.symbol(0);
    --i;
  }
  if (i == 0) {
    s.insert(s.begin(), a.symbol(0));
  } else {
    s[i - 1] = a.symbol(static_cast<unsigned>(a.index_of(s[i - 1]) + 1));
  }
  return Str::unchecked(a, std::move(s));
}

/// Cantor pairing on naturals: (a+b)(a+b+1)/2 + b.
inline Nat cantor_pair(const Nat& a, const Nat& b) {
  constexpr std::uint64_t kSmall = std::uint64_t(1) << 30;
  if (a < kSmall && b < kSmall) {
    const auto x = a.convert_to<std::uint64_t>(), y = b.convert_to<std::uint64_t>();
    return Nat((x + y) * (x + y + 1) / 2 + y);
  }
  return (a + b) * (a + b + 1) / 2 + b;
}

inline std::pair<Nat, Nat> cantor_unpair(const Nat& z) {
  if (z < 0) throw PreconditionError("cantor_unpair of a negative number");
  if (z < (std::uint64_t(1) << 58)) {
    const auto v = z.convert_to<std::uint64_t>();
    auto w = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(v) + 1.0) - 1.0) / 2.0);
    while (w * (w + 1) / 2 > v) --w;
    while ((w + 1) * (w + 2) / 2 <= v) ++w;
    const std::uint64_t b = v - w * (w + 1) / 2;
    return {Nat(w - b), Nat(b)};
  }
  Nat w = (boost::multiprecision::sqrt(Nat(8 * z + 1)) - 1) / 2;
  Nat t = w * (w + 1) / 2;
  Nat b = z - t;
  return {w - b, b};
}

inline Str pair(const Str& x, const Str& y) {
  x.require_same_alphabet(y);
  return unrank(cantor_pair(rank(x), rank(y)), x.alphabet());
}

inline std::pair<Str, Str> unpair(const Str& z) {
  auto [a, b] = cantor_unpair(rank(z));
  return {unrank(a, z.alphabet()), unrank(b, z.alphabet())};
}

inline Str convert_alphabet(const Str& x, Alphabet target) { return unrank(rank(x), target); }

/// x + n in the length-lex numbering; throws when the result would precede ε.
inline Str str_add(const Str& x, const Nat& n) {
  Nat r = rank(x) + n;
  if (r < 0) throw PreconditionError("underflow below ε");
  return unrank(r, x.alphabet());
}

/// Calls fn on every string of length at most n in length-lex order.
template <typename Fn>
void for_each_upto(Alphabet a, std::size_t n, Fn&& fn) {
  Str x(a);
  while (x.size() <= n) {
    fn(static_cast<const Str&>(x));
    x = successor(x);
  }
}

/// Calls fn on every string of length exactly n in lexicographic order.
template <typename Fn>
void for_each_of_length(Alphabet a, std::size_t n, Fn&& fn) {
  Str x(a, std::string(n, a.symbol(0)));
  while (x.size() == n) {
    fn(static_cast<const Str&>(x));
    x = successor(x);
  }
}

inline std::string to_string(const Nat& n) { return n.str(); }

}  // namespace pcard

template <>
struct std::hash<pcard::Str> {
  std::size_t operator()(const pcard::Str& x) const noexcept {
    return std::hash<std::string>{}(x.symbols()) ^ (x.alphabet().size() * 0x9e3779b97f4a7c15ULL);
  }
};
