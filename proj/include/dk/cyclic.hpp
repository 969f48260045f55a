#pragma once
// Trace space |T(H)|: tensor algebra modulo commutators.  Basis: necklaces,
// i.e. words up to rotation, keyed by their lexicographically minimal
// rotation.

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "dk/tensor.hpp"

namespace dk {

inline Word minimalRotation(const Word& w) {
  if (w.size() < 2) return w;
  Word best = w;
  Word cur = w;
  for (size_t i = 1; i < w.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

template <class K>
class Cyclic {
 public:
  Cyclic() : D_(0) {}
  Cyclic(AlphabetPtr alpha, int D) : alpha_(std::move(alpha)), D_(D) {}

  const AlphabetPtr& alphabet() const { return alpha_; }
  int degree() const { return D_; }
  const std::map<Word, K>& terms() const { return t_; }
  bool isZero() const { return t_.empty(); }

  void add(const Word& w, const K& c) {
    if (c == K(0)) return;
    if (wordWeight(*alpha_, w) > D_) return;
    Word n = minimalRotation(w);
    auto it = t_.find(n);
    if (it == t_.end()) {
      t_.emplace(n, c);
    } else {
      it->second += c;
      if (it->second == K(0)) t_.erase(it);
    }
  }

  Cyclic& operator+=(const Cyclic& o) {
    checkSameContext(alpha_, o.alpha_);
    for (const auto& [w, c] : o.t_) add(w, c);
    return *this;
  }
  Cyclic& operator-=(const Cyclic& o) {
    checkSameContext(alpha_, o.alpha_);
    for (const auto& [w, c] : o.t_) add(w, -c);
    return *this;
  }
  friend Cyclic operator+(Cyclic a, const Cyclic& b) { return a += b; }
  friend Cyclic operator-(Cyclic a, const Cyclic& b) { return a -= b; }
  Cyclic scaled(const K& s) const {
    Cyclic r(alpha_, D_);
    for (const auto& [w, c] : t_) r.add(w, c * s);
    return r;
  }
  bool operator==(const Cyclic& o) const {
    checkSameContext(alpha_, o.alpha_);
    return t_ == o.t_;
  }
  bool operator!=(const Cyclic& o) const { return !(*this == o); }

  Cyclic weightPart(int d) const {
    Cyclic r(alpha_, D_);
    for (const auto& [w, c] : t_)
      if (wordWeight(*alpha_, w) == d) r.t_.emplace(w, c);
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
      s += "(" + dk::coeffString(e->second) + ")*|" + wordString(*alpha_, e->first) + "|";
    }
    return s;
  }

 private:
  AlphabetPtr alpha_;
  int D_;
  std::map<Word, K> t_;
};

template <class K>
Cyclic<K> traceProject(const Tensor<K>& a) {
  Cyclic<K> r(a.alphabet(), a.degree());
  for (const auto& [w, c] : a.terms()) r.add(w, c);
  return r;
}

// |T| (x) |T|: both components traced, joint weight <= D.
template <class K>
class Cyclic2 {
 public:
  Cyclic2() : D_(0) {}
  Cyclic2(AlphabetPtr alpha, int D) : alpha_(std::move(alpha)), D_(D) {}

  bool isZero() const { return t_.empty(); }
  const std::map<std::pair<Word, Word>, K>& terms() const { return t_; }

  void add(const Word& a, const Word& b, const K& c) {
    if (c == K(0)) return;
    if (wordWeight(*alpha_, a) + wordWeight(*alpha_, b) > D_) return;
    auto key = std::make_pair(minimalRotation(a), minimalRotation(b));
    auto it = t_.find(key);
    if (it == t_.end()) {
      t_.emplace(key, c);
    } else {
      it->second += c;
      if (it->second == K(0)) t_.erase(it);
    }
  }
  Cyclic2& operator+=(const Cyclic2& o) {
    for (const auto& [k, c] : o.t_) add(k.first, k.second, c);
    return *this;
  }
  Cyclic2& operator-=(const Cyclic2& o) {
    for (const auto& [k, c] : o.t_) add(k.first, k.second, -c);
    return *this;
  }
  friend Cyclic2 operator+(Cyclic2 a, const Cyclic2& b) { return a += b; }
  friend Cyclic2 operator-(Cyclic2 a, const Cyclic2& b) { return a -= b; }
  bool operator==(const Cyclic2& o) const { return t_ == o.t_; }

 private:
  AlphabetPtr alpha_;
  int D_;
  std::map<std::pair<Word, Word>, K> t_;
};

template <class K>
Cyclic2<K> traceBoth(const Tensor2<K>& a) {
  Cyclic2<K> r(a.alphabet(), a.degree());
  for (const auto& [k, c] : a.terms()) r.add(k.first, k.second, c);
  return r;
}

}  // namespace dk
