#pragma once
// Truncated tensor (= completed free associative / enveloping) algebra over a
// weighted alphabet: concatenation product, Hopf structure with primitive
// generators, exp/log, and scalar power-series substitution.  Everything is
// truncated by total weight at a fixed degree D.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dk/alphabet.hpp"
#include "dk/rat.hpp"
#include "dk/series.hpp"

namespace dk {

template <class K>
class Tensor {
 public:
  Tensor() : D_(0) {}
  Tensor(AlphabetPtr alpha, int D) : alpha_(std::move(alpha)), D_(D) {
    if (D_ <= 0) throw Error("nonpositive truncation degree");
  }
  static Tensor constant(AlphabetPtr alpha, int D, const K& c) {
    Tensor t(std::move(alpha), D);
    t.add(Word{}, c);
    return t;
  }
  static Tensor gen(AlphabetPtr alpha, int D, int letter) {
    Tensor t(std::move(alpha), D);
    if (letter < 0 || letter >= t.alpha_->size()) throw Error("unknown symbol id");
    t.add(Word{letter}, K(1));
    return t;
  }

  const AlphabetPtr& alphabet() const { return alpha_; }
  int degree() const { return D_; }
  const std::map<Word, K>& terms() const { return t_; }
  bool isZero() const { return t_.empty(); }

  void add(const Word& w, const K& c) {
    if (isZeroK(c)) return;
    if (wordWeight(*alpha_, w) > D_) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
      t_.emplace(w, c);
    } else {
      it->second += c;
      if (isZeroK(it->second)) t_.erase(it);
    }
  }
  K coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? K(0) : it->second;
  }
  K constantTerm() const { return coeff(Word{}); }

  Tensor& operator+=(const Tensor& o) {
    checkSameContext(alpha_, o.alpha_);
    for (const auto& [w, c] : o.t_) add(w, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    checkSameContext(alpha_, o.alpha_);
    for (const auto& [w, c] : o.t_) add(w, -c);
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  Tensor operator-() const {
    Tensor r(alpha_, D_);
    for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
    return r;
  }
  Tensor scaled(const K& s) const {
    Tensor r(alpha_, D_);
    if (isZeroK(s)) return r;
    for (const auto& [w, c] : t_) r.add(w, c * s);
    return r;
  }

  friend Tensor operator*(const Tensor& a, const Tensor& b) {
    checkSameContext(a.alpha_, b.alpha_);
    if (a.D_ != b.D_) throw Error("truncation degree mismatch");
    Tensor r(a.alpha_, a.D_);
    for (const auto& [wa, ca] : a.t_) {
      int da = wordWeight(*a.alpha_, wa);
      for (const auto& [wb, cb] : b.t_) {
        if (da + wordWeight(*a.alpha_, wb) > a.D_) continue;
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add(w, ca * cb);
      }
    }
    return r;
  }
  Tensor& operator*=(const Tensor& o) { return *this = *this * o; }

  bool operator==(const Tensor& o) const {
    checkSameContext(alpha_, o.alpha_);
    return t_ == o.t_;
  }
  bool operator!=(const Tensor& o) const { return !(*this == o); }

  Tensor weightPart(int d) const {
    Tensor r(alpha_, D_);
    for (const auto& [w, c] : t_)
      if (wordWeight(*alpha_, w) == d) r.t_.emplace(w, c);
    return r;
  }
  int minWeight() const {  // of nonzero terms; D+1 if zero
    int m = D_ + 1;
    for (const auto& [w, c] : t_) m = std::min(m, wordWeight(*alpha_, w));
    return m;
  }

  // Antipode: S(w_1...w_k) = (-1)^k w_k...w_1.
  Tensor antipode() const {
    Tensor r(alpha_, D_);
    for (const auto& [w, c] : t_) {
      Word rev(w.rbegin(), w.rend());
      r.add(rev, (w.size() % 2 == 0) ? c : -c);
    }
    return r;
  }

  K augmentation() const { return constantTerm(); }

  Tensor exp() const {
    if (!isZeroK(constantTerm())) throw Error("exp of element with nonzero constant term");
    Tensor r = constant(alpha_, D_, K(1));
    Tensor p = constant(alpha_, D_, K(1));
    for (int k = 1; k <= D_; ++k) {
      p = p * *this;
      if (p.isZero()) break;
      r += p.scaled(K(Rat(1) / factorial(k)));
    }
    return r;
  }
  Tensor log() const {
    if (!(constantTerm() == K(1))) throw Error("log of element with constant term != 1");
    Tensor u = *this - constant(alpha_, D_, K(1));
    Tensor r(alpha_, D_);
    Tensor p = constant(alpha_, D_, K(1));
    for (int k = 1; k <= D_; ++k) {
      p = p * u;
      if (p.isZero()) break;
      r += p.scaled(K(Rat(k % 2 == 1 ? 1 : -1, k)));
    }
    return r;
  }

  std::string toString() const {
    if (t_.empty()) return "0";
    std::vector<std::pair<int, const std::pair<const Word, K>*>> order;
    for (const auto& e : t_) order.push_back({wordWeight(*alpha_, e.first), &e});
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string s;
    for (const auto& [d, e] : order) {
      if (!s.empty()) s += " + ";
      s += "(" + dk::coeffString(e->second) + ")" + (e->first.empty() ? "" : "*" + wordString(*alpha_, e->first));
    }
    return s;
  }

 private:
  static bool isZeroK(const K& c) { return c == K(0); }

  AlphabetPtr alpha_;
  int D_;
  std::map<Word, K> t_;
};

// Element of T(H) (x) T(H) at joint truncation D.
template <class K>
class Tensor2 {
 public:
  Tensor2() : D_(0) {}
  Tensor2(AlphabetPtr alpha, int D) : alpha_(std::move(alpha)), D_(D) {}

  static Tensor2 outer(const Tensor<K>& a, const Tensor<K>& b) {
    checkSameContext(a.alphabet(), b.alphabet());
    Tensor2 r(a.alphabet(), a.degree());
    for (const auto& [wa, ca] : a.terms())
      for (const auto& [wb, cb] : b.terms()) r.add(wa, wb, ca * cb);
    return r;
  }

  const AlphabetPtr& alphabet() const { return alpha_; }
  int degree() const { return D_; }
  const std::map<std::pair<Word, Word>, K>& terms() const { return t_; }
  bool isZero() const { return t_.empty(); }

  void add(const Word& a, const Word& b, const K& c) {
    if (c == K(0)) return;
    if (wordWeight(*alpha_, a) + wordWeight(*alpha_, b) > D_) return;
    auto key = std::make_pair(a, b);
    auto it = t_.find(key);
    if (it == t_.end()) {
      t_.emplace(key, c);
    } else {
      it->second += c;
      if (it->second == K(0)) t_.erase(it);
    }
  }

  Tensor2& operator+=(const Tensor2& o) {
    checkSameContext(alpha_, o.alpha_);
    for (const auto& [k, c] : o.t_) add(k.first, k.second, c);
    return *this;
  }
  Tensor2& operator-=(const Tensor2& o) {
    checkSameContext(alpha_, o.alpha_);
    for (const auto& [k, c] : o.t_) add(k.first, k.second, -c);
    return *this;
  }
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  Tensor2 scaled(const K& s) const {
    Tensor2 r(alpha_, D_);
    for (const auto& [k, c] : t_) r.add(k.first, k.second, c * s);
    return r;
  }
  bool operator==(const Tensor2& o) const {
    checkSameContext(alpha_, o.alpha_);
    return t_ == o.t_;
  }

  // Merge components: m(a (x) b) = ab, optionally applying the antipode to
  // the left component first (used by Hopf-axiom checks).
  Tensor<K> merge(bool antipodeLeft = false) const {
    Tensor<K> r(alpha_, D_);
    for (const auto& [k, c] : t_) {
      Word left = k.first;
      K cc = c;
      if (antipodeLeft) {
        std::reverse(left.begin(), left.end());
        if (k.first.size() % 2 == 1) cc = -cc;
      }
      Word w = left;
      w.insert(w.end(), k.second.begin(), k.second.end());
      r.add(w, cc);
    }
    return r;
  }

 private:
  AlphabetPtr alpha_;
  int D_;
  std::map<std::pair<Word, Word>, K> t_;
};

// Coproduct: algebra morphism with every generator primitive.  On a word it
// sums over all ways to split the letter positions into two subsequences.
template <class K>
Tensor2<K> coproduct(const Tensor<K>& a) {
  Tensor2<K> r(a.alphabet(), a.degree());
  for (const auto& [w, c] : a.terms()) {
    size_t n = w.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
      Word left, right;
      for (size_t i = 0; i < n; ++i)
        ((mask >> i) & 1 ? left : right).push_back(w[i]);
      r.add(left, right, c);
    }
  }
  return r;
}

template <class K>
bool isGroupLike(const Tensor<K>& a) {
  return !a.isZero() && coproduct(a) == Tensor2<K>::outer(a, a);
}

template <class K>
bool isPrimitive(const Tensor<K>& a) {
  Tensor2<K> d = coproduct(a);
  Tensor<K> one = Tensor<K>::constant(a.alphabet(), a.degree(), K(1));
  return d == Tensor2<K>::outer(a, one) + Tensor2<K>::outer(one, a);
}

// sum_k c_k * ell^k, truncated; ell must have zero constant term.
template <class K>
Tensor<K> substituteSeries(const ScalarSeries& f, const Tensor<K>& ell) {
  if (!(ell.constantTerm() == K(0)))
    throw Error("series substitution requires zero constant term");
  Tensor<K> r(ell.alphabet(), ell.degree());
  Tensor<K> p = Tensor<K>::constant(ell.alphabet(), ell.degree(), K(1));
  for (size_t k = 0; k < f.c.size(); ++k) {
    if (k > 0) {
      p = p * ell;
      if (p.isZero()) break;
    }
    r += p.scaled(K(f.c[k]));
  }
  return r;
}

}  // namespace dk
