#pragma once

// Word problem in W: ShortLex normal forms by Tits' rewriting (braid moves
// plus cancellation of adjacent equal letters), reduced expressions, and
// enumeration / counting of balls via the ShortLex automaton.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "flatrank/diagram.hpp"
#include "flatrank/error.hpp"
#include "flatrank/roots.hpp"

namespace flatrank {

using BigInt = boost::multiprecision::cpp_int;
using Word = std::vector<std::uint8_t>;

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto c : w) h = (h ^ c) * 1099511628211ULL;
    return h ^ w.size();
  }
};

/// An element of W stored as its ShortLex-least reduced word.
class Element {
 public:
  Element() = default;

  /// Wraps a word already known to be the ShortLex normal form.
  static Element from_normal_form(Word w) {
    Element e;
    e.word_ = std::move(w);
    return e;
  }

  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool identity() const { return word_.empty(); }

  friend bool operator==(const Element&, const Element&) = default;
  /// ShortLex order.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
    return a.word_ <=> b.word_;
  }

 private:
  Word word_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const { return WordHash{}(e.word()); }
};

struct WordLimits {
  int max_word_length = 64;
  std::size_t max_closure = 200'000;
};

inline Word parse_word(const CoxeterDiagram& d, const std::string& text) {
  Word w;
  std::istringstream in(text);
  for (std::string tok; in >> tok;) {
    int found = -1;
    for (Vertex v = 0; v < d.rank(); ++v)
      if (d.name(v) == tok) found = v;
    if (found < 0) throw ParseError("unknown generator '" + tok + "'");
    w.push_back(static_cast<std::uint8_t>(found));
  }
  return w;
}

inline std::string format_word(const CoxeterDiagram& d, const Word& w) {
  std::string out;
  for (auto g : w) {
    if (!out.empty()) out += ' ';
    out += d.name(g);
  }
  return out;
}

namespace detail {

inline void check_word(const CoxeterDiagram& d, const Word& w) {
  for (auto g : w)
    if (g >= d.rank()) throw DomainError("generator index out of range");
}

/// Braid-move closure of a word (no cancellations). All members have the same
/// length; for a reduced word this is the set of all its reduced expressions.
inline std::vector<Word> braid_closure(const CoxeterDiagram& d, const Word& start, std::size_t cap) {
  std::unordered_set<Word, WordHash> seen{start};
  std::vector<Word> order{start};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Word w = order[head];
    const int len = static_cast<int>(w.size());
    for (int i = 0; i + 1 < len; ++i) {
      const int a = w[i], b = w[i + 1];
      if (a == b) continue;
      const int m = d.label(a, b);
      if (m == kInfinity || i + m > len) continue;
      bool alternating = true;
      for (int j = 0; j < m && alternating; ++j) alternating = w[i + j] == (j % 2 == 0 ? a : b);
      if (!alternating) continue;
      Word v = w;
      for (int j = 0; j < m; ++j) v[i + j] = static_cast<std::uint8_t>(j % 2 == 0 ? b : a);
      if (seen.insert(v).second) {
        order.push_back(std::move(v));
        if (order.size() > cap) throw ResourceError("braid closure exceeds the configured cap");
      }
    }
  }
  return order;
}

}  // namespace detail

/// ShortLex-least reduced word equal to `w` in W.
///
/// Builds the answer letter by letter: u s is reduced unless some reduced
/// expression of u ends in s (exchange condition), in which case that letter
/// cancels. Worst-case exponential in the word length.
inline Element normal_form(const CoxeterDiagram& d, const Word& w, const WordLimits& limits = {}) {
  detail::check_word(d, w);
  if (static_cast<int>(w.size()) > limits.max_word_length)
    throw ResourceError("word length " + std::to_string(w.size()) + " exceeds the bound of " +
                        std::to_string(limits.max_word_length));
  Word u;
  for (auto s : w) {
    const auto closure = detail::braid_closure(d, u, limits.max_closure);
    const Word* cancel = nullptr;
    for (const Word& v : closure)
      if (!v.empty() && v.back() == s) {
        cancel = &v;
        break;
      }
    Word next;
    if (cancel) {
      next.assign(cancel->begin(), cancel->end() - 1);
    } else {
      next = u;
      next.push_back(s);
    }
    const auto expressions = detail::braid_closure(d, next, limits.max_closure);
    u = *std::min_element(expressions.begin(), expressions.end());
  }
  return Element::from_normal_form(std::move(u));
}

/// Product in W.
inline Element multiply(const CoxeterDiagram& d, const Element& a, const Element& b,
                        const WordLimits& limits = {}) {
  Word w = a.word();
  w.insert(w.end(), b.word().begin(), b.word().end());
  return normal_form(d, w, limits);
}

inline Element inverse(const CoxeterDiagram& d, const Element& a, const WordLimits& limits = {}) {
  Word w(a.word().rbegin(), a.word().rend());
  return normal_form(d, w, limits);
}

/// All reduced expressions of w, sorted lexicographically.
inline std::vector<Word> reduced_expressions(const CoxeterDiagram& d, const Element& w,
                                             const WordLimits& limits = {}) {
  if (w.length() > 16) throw ResourceError("reduced_expressions is capped at length 16");
  auto out = detail::braid_closure(d, w.word(), limits.max_closure);
  std::sort(out.begin(), out.end());
  return out;
}

/// Elements of length <= max_length grouped by length, each listed once in
/// ShortLex order. Throws ResourceError beyond `max_elements`.
inline std::vector<std::vector<Element>> enumerate_ball(const CoxeterDiagram& d, int max_length,
                                                        std::size_t max_elements = 2'000'000,
                                                        int length_cap = 20) {
  if (max_length < 0) throw DomainError("negative ball radius");
  if (max_length > length_cap) throw ResourceError("ball radius exceeds the configured bound");
  ShortLexAutomaton automaton(d);
  std::vector<std::vector<Element>> out(1);
  out[0].push_back(Element{});
  std::vector<std::pair<Word, int>> layer{{Word{}, automaton.start()}};
  std::size_t total = 1;
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::pair<Word, int>> next_layer;
    for (const auto& [word, state] : layer)
      for (Vertex s = 0; s < d.rank(); ++s) {
        const int to = automaton.next(state, s);
        if (to == ShortLexAutomaton::kReject) continue;
        Word w = word;
        w.push_back(static_cast<std::uint8_t>(s));
        next_layer.emplace_back(std::move(w), to);
        if (++total > max_elements) throw ResourceError("ball size exceeds the element cap");
      }
    std::sort(next_layer.begin(), next_layer.end());
    out.emplace_back();
    out.back().reserve(next_layer.size());
    for (const auto& [w, state] : next_layer) out.back().push_back(Element::from_normal_form(w));
    layer = std::move(next_layer);
  }
  return out;
}

/// Number of elements of each length 0..max_length, by dynamic programming
/// over automaton states (no elements are stored).
inline std::vector<BigInt> ball_counts(const CoxeterDiagram& d, int max_length) {
  if (max_length < 0) throw DomainError("negative ball radius");
  ShortLexAutomaton automaton(d);
  std::vector<BigInt> counts{1};
  std::map<int, BigInt> layer{{automaton.start(), 1}};
  for (int len = 1; len <= max_length; ++len) {
    std::map<int, BigInt> next_layer;
    BigInt total = 0;
    for (const auto& [state, count] : layer)
      for (Vertex s = 0; s < d.rank(); ++s) {
        const int to = automaton.next(state, s);
        if (to == ShortLexAutomaton::kReject) continue;
        next_layer[to] += count;
        total += count;
      }
    counts.push_back(total);
    layer = std::move(next_layer);
  }
  return counts;
}

}  // namespace flatrank
