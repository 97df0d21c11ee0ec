#pragma once

// Exact root arithmetic for the geometric representation of W and the
// Brink-Howlett elementary roots, which drive a finite ShortLex automaton.
//
// Scalars live in Z[zeta] with zeta = exp(i*pi/N), N the lcm of the finite
// labels >= 3, reduced modulo the cyclotomic polynomial Phi_{2N}. Equality
// and zero tests are exact; only the sign of a nonzero scalar is read off a
// floating-point evaluation.

#include <bit>
#include <complex>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "flatrank/diagram.hpp"
#include "flatrank/error.hpp"

namespace flatrank {

class CyclotomicRing {
 public:
  using Scalar = std::vector<std::int64_t>;  // coefficients of zeta^0 .. zeta^{deg-1}

  static constexpr int kMaxConductor = 5040;

  explicit CyclotomicRing(int n) : n_(n), order_(2 * n) {
    if (n < 1 || n > kMaxConductor)
      throw ResourceError("label lcm " + std::to_string(n) + " exceeds the cyclotomic cap");
    modulus_ = cyclotomic_polynomial(order_);
    degree_ = static_cast<int>(modulus_.size()) - 1;
    powers_.resize(degree_);
    const long double pi = 3.141592653589793238462643383279502884L;
    for (int k = 0; k < degree_; ++k)
      powers_[k] = std::polar(1.0L, pi * static_cast<long double>(k) / static_cast<long double>(n_));
  }

  int degree() const { return degree_; }
  int conductor() const { return n_; }

  Scalar zero() const { return Scalar(degree_, 0); }
  Scalar integer(std::int64_t v) const {
    Scalar s = zero();
    s[0] = v;
    return s;
  }

  /// 2 cos(k pi / N) = zeta^k + zeta^{-k}.
  Scalar two_cos(int k) const {
    std::vector<std::int64_t> raw(order_, 0);
    raw[((k % order_) + order_) % order_] += 1;
    raw[((-k % order_) + order_) % order_] += 1;
    return reduce(raw);
  }

  /// 2 cos(pi / m); m must divide the conductor.
  Scalar two_cos_pi_over(int m) const {
    if (n_ % m != 0) throw InternalError("label does not divide the conductor");
    return two_cos(n_ / m);
  }

  Scalar add(const Scalar& a, const Scalar& b) const {
    Scalar out(degree_);
    for (int i = 0; i < degree_; ++i) out[i] = a[i] + b[i];
    return out;
  }
  Scalar sub(const Scalar& a, const Scalar& b) const {
    Scalar out(degree_);
    for (int i = 0; i < degree_; ++i) out[i] = a[i] - b[i];
    return out;
  }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    std::vector<std::int64_t> raw(2 * degree_, 0);
    for (int i = 0; i < degree_; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < degree_; ++j) raw[i + j] += a[i] * b[j];
    }
    return reduce(raw);
  }

  static bool is_zero(const Scalar& a) {
    for (auto c : a)
      if (c != 0) return false;
    return true;
  }

  /// Sign of a real scalar: exact for zero, numerical otherwise.
  int sign(const Scalar& a) const {
    if (is_zero(a)) return 0;
    std::complex<long double> v = 0;
    for (int k = 0; k < degree_; ++k) v += static_cast<long double>(a[k]) * powers_[k];
    if (std::abs(v.real()) < 1e-12L)
      throw InternalError("nonzero cyclotomic scalar too close to zero to sign reliably");
    return v.real() > 0 ? 1 : -1;
  }

 private:
  using Poly = std::vector<std::int64_t>;

  // Phi_n via z^n - 1 = prod_{d | n} Phi_d.
  static Poly cyclotomic_polynomial(int n) {
    std::vector<Poly> phi(n + 1);
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      Poly p(d + 1, 0);
      p[0] = -1;
      p[d] = 1;
      for (int e = 1; e < d; ++e)
        if (d % e == 0) p = exact_divide(p, phi[e]);
      phi[d] = p;
    }
    return phi[n];
  }

  static Poly exact_divide(Poly num, const Poly& den) {
    const int dn = static_cast<int>(den.size()) - 1;
    Poly q(num.size() - dn, 0);
    for (int i = static_cast<int>(num.size()) - 1; i >= dn; --i) {
      const std::int64_t c = num[i];  // den is monic
      q[i - dn] = c;
      for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
  }

  Scalar reduce(std::vector<std::int64_t> raw) const {
    for (int i = static_cast<int>(raw.size()) - 1; i >= degree_; --i) {
      const std::int64_t c = raw[i];
      if (c == 0) continue;
      for (int j = 0; j <= degree_; ++j) raw[i - degree_ + j] -= c * modulus_[j];
    }
    raw.resize(degree_);
    return raw;
  }

  int n_;
  int order_;
  int degree_ = 0;
  Poly modulus_;
  std::vector<std::complex<long double>> powers_;
};

struct ScalarVectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto c : v) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ULL;
    return h;
  }
};

/// Positive elementary roots (roots that dominate no other positive root)
/// with the action of each simple reflection on them.
class ElementaryRoots {
 public:
  static constexpr std::size_t kMaxRoots = 20000;

  explicit ElementaryRoots(const CoxeterDiagram& d) : rank_(d.rank()), ring_(label_lcm(d)) {
    // c[s][t] = 2 B(alpha_s, alpha_t) = -2 cos(pi / m_st), -2 for infinity.
    form_.assign(rank_, std::vector<CyclotomicRing::Scalar>(rank_, ring_.zero()));
    for (Vertex s = 0; s < rank_; ++s)
      for (Vertex t = 0; t < rank_; ++t) {
        const int m = d.label(s, t);
        if (s == t)
          form_[s][t] = ring_.integer(2);
        else if (m == kInfinity)
          form_[s][t] = ring_.integer(-2);
        else if (m == 2)
          form_[s][t] = ring_.zero();
        else
          form_[s][t] = ring_.sub(ring_.zero(), ring_.two_cos_pi_over(m));
      }

    for (Vertex s = 0; s < rank_; ++s) {
      Root simple(rank_, ring_.zero());
      simple[s] = ring_.integer(1);
      insert(simple);
    }
    const CyclotomicRing::Scalar minus_two = ring_.integer(-2);
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      for (Vertex s = 0; s < rank_; ++s) {
        const auto x = pairing(roots_[i], s);
        // s(beta) is elementary when -1 < B(alpha_s, beta) < 0.
        if (ring_.sign(x) < 0 && ring_.sign(ring_.sub(x, minus_two)) > 0) {
          insert(reflect(roots_[i], s, x));
          if (roots_.size() > kMaxRoots) throw ResourceError("too many elementary roots");
        }
      }
    }
    action_.assign(roots_.size(), std::vector<int>(rank_, -1));
    for (std::size_t i = 0; i < roots_.size(); ++i)
      for (Vertex s = 0; s < rank_; ++s) {
        auto image = reflect(roots_[i], s, pairing(roots_[i], s));
        if (auto it = index_.find(flatten(image)); it != index_.end()) action_[i][s] = it->second;
      }
  }

  std::size_t size() const { return roots_.size(); }
  int rank() const { return rank_; }
  /// Index of the simple root alpha_s (simple roots come first).
  int simple(Vertex s) const { return s; }
  /// Index of s(root i) if it is elementary, else -1.
  int act(int root, Vertex s) const { return action_[root][s]; }

 private:
  using Root = std::vector<CyclotomicRing::Scalar>;

  static int label_lcm(const CoxeterDiagram& d) {
    long n = 1;
    for (const Edge& e : d.edges()) {
      if (e.m == kInfinity || e.m == 2) continue;
      n = std::lcm(n, static_cast<long>(e.m));
      if (n > CyclotomicRing::kMaxConductor)
        throw ResourceError("label lcm exceeds the cyclotomic cap");
    }
    return static_cast<int>(n);
  }

  CyclotomicRing::Scalar pairing(const Root& beta, Vertex s) const {
    auto acc = ring_.zero();
    for (Vertex t = 0; t < rank_; ++t)
      if (!CyclotomicRing::is_zero(beta[t]) && !CyclotomicRing::is_zero(form_[t][s]))
        acc = ring_.add(acc, ring_.mul(beta[t], form_[t][s]));
    return acc;
  }

  Root reflect(Root beta, Vertex s, const CyclotomicRing::Scalar& two_b) const {
    beta[s] = ring_.sub(beta[s], two_b);
    return beta;
  }

  std::vector<std::int64_t> flatten(const Root& r) const {
    std::vector<std::int64_t> flat;
    flat.reserve(static_cast<std::size_t>(rank_) * ring_.degree());
    for (const auto& c : r) flat.insert(flat.end(), c.begin(), c.end());
    return flat;
  }

  void insert(const Root& r) {
    auto [it, fresh] = index_.emplace(flatten(r), static_cast<int>(roots_.size()));
    if (fresh) roots_.push_back(r);
  }

  int rank_;
  CyclotomicRing ring_;
  std::vector<std::vector<CyclotomicRing::Scalar>> form_;
  std::vector<Root> roots_;
  std::unordered_map<std::vector<std::int64_t>, int, ScalarVectorHash> index_;
  std::vector<std::vector<int>> action_;
};

/// Deterministic automaton accepting exactly the ShortLex-least reduced words
/// (generator order = vertex order). A state is a set of elementary roots:
/// after reading w it holds the elementary roots of the inversion set of w^-1
/// together with the images of lexicographically smaller simple roots, which
/// block non-minimal braid rearrangements.
class ShortLexAutomaton {
 public:
  static constexpr int kReject = -1;
  static constexpr std::size_t kMaxStates = 2'000'000;

  explicit ShortLexAutomaton(const CoxeterDiagram& d) : roots_(d), words_((roots_.size() + 63) / 64) {
    intern(State(words_, 0));
  }

  int start() const { return 0; }
  int rank() const { return roots_.rank(); }
  std::size_t state_count() const { return states_.size(); }

  /// Next state after appending generator s, or kReject.
  int next(int state, Vertex s) {
    auto& row = transitions_[state];
    if (row[s] != kUnknown) return row[s];
    const State& from = states_[state];
    int result = kReject;
    if (!test(from, roots_.simple(s))) {
      State to(words_, 0);
      set(to, roots_.simple(s));
      auto push = [&](int root) {
        const int image = roots_.act(root, s);
        if (image >= 0) set(to, image);
      };
      for (std::size_t w = 0; w < from.size(); ++w)
        for (std::uint64_t bits = from[w]; bits != 0; bits &= bits - 1)
          push(static_cast<int>(w * 64 + std::countr_zero(bits)));
      for (Vertex t = 0; t < s; ++t) push(roots_.simple(t));
      result = intern(std::move(to));
    }
    transitions_[state][s] = result;
    return result;
  }

 private:
  using State = std::vector<std::uint64_t>;
  static constexpr int kUnknown = -2;

  static bool test(const State& st, int i) { return (st[i / 64] >> (i % 64)) & 1U; }
  static void set(State& st, int i) { st[i / 64] |= std::uint64_t{1} << (i % 64); }

  struct StateHash {
    std::size_t operator()(const State& st) const {
      std::size_t h = 0x9e3779b97f4a7c15ULL;
      for (auto w : st) h = (h ^ w) * 0x100000001b3ULL + (h >> 7);
      return h;
    }
  };

  int intern(State st) {
    auto [it, fresh] = ids_.emplace(st, static_cast<int>(states_.size()));
    if (fresh) {
      if (states_.size() >= kMaxStates) throw ResourceError("ShortLex automaton state cap exceeded");
      states_.push_back(std::move(st));
      transitions_.emplace_back(roots_.rank(), kUnknown);
    }
    return it->second;
  }

  ElementaryRoots roots_;
  std::size_t words_;
  std::vector<State> states_;
  std::unordered_map<State, int, StateHash> ids_;
  std::vector<std::vector<int>> transitions_;
};

}  // namespace flatrank
