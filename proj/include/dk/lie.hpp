#pragma once
// Truncated free Lie algebra in Lyndon coordinates, bracket and BCH, plus a
// universal-BCH evaluator and a generic evaluator of free-Lie expressions in
// arbitrary Lie algebras (used by morphism checks, action tables, and the
// symbolic genus computations).

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dk/lyndon.hpp"
#include "dk/scalar.hpp"
#include "dk/tensor.hpp"

namespace dk {

template <class K>
class Lie {
 public:
  Lie() : D_(0) {}
  Lie(AlphabetPtr alpha, int D) : alpha_(std::move(alpha)), D_(D) {
    if (D_ <= 0) throw Error("nonpositive truncation degree");
  }
  static Lie gen(AlphabetPtr alpha, int D, int letter) {
    Lie l(std::move(alpha), D);
    if (letter < 0 || letter >= l.alpha_->size()) throw Error("unknown symbol id");
    if (l.alpha_->operator[](letter).weight <= D)
      l.t_.emplace(Word{letter}, K(1));
    return l;
  }

  const AlphabetPtr& alphabet() const { return alpha_; }
  int degree() const { return D_; }
  const std::map<Word, K>& terms() const { return t_; }
  bool isZero() const { return t_.empty(); }

  // w must be a Lyndon word (internal callers guarantee it).
  void add(const Word& w, const K& c) {
    if (c == K(0)) return;
    if (wordWeight(*alpha_, w) > D_) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
      t_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second == K(0)) t_.erase(it);
    }
  }
  K coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? K(0) : it->second;
  }

  Lie& operator+=(const Lie& o) {
    checkSameContext(alpha_, o.alpha_);
    for (const auto& [w, c] : o.t_) add(w, c);
    return *this;
  }
  Lie& operator-=(const Lie& o) {
    checkSameContext(alpha_, o.alpha_);
    for (const auto& [w, c] : o.t_) add(w, -c);
    return *this;
  }
  friend Lie operator+(Lie a, const Lie& b) { return a += b; }
  friend Lie operator-(Lie a, const Lie& b) { return a -= b; }
  Lie operator-() const {
    Lie r(alpha_, D_);
    for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
    return r;
  }
  Lie scaled(const K& s) const {
    Lie r(alpha_, D_);
    if (s == K(0)) return r;
    for (const auto& [w, c] : t_) r.add(w, c * s);
    return r;
  }
  bool operator==(const Lie& o) const {
    checkSameContext(alpha_, o.alpha_);
    return t_ == o.t_;
  }
  bool operator!=(const Lie& o) const { return !(*this == o); }

  Lie weightPart(int d) const {
    Lie r(alpha_, D_);
    for (const auto& [w, c] : t_)
      if (wordWeight(*alpha_, w) == d) r.t_.emplace(w, c);
    return r;
  }
  int minWeight() const {
    int m = D_ + 1;
    for (const auto& [w, c] : t_) m = std::min(m, wordWeight(*alpha_, w));
    return m;
  }

  Tensor<K> toTensor() const {
    Tensor<K> r(alpha_, D_);
    auto sys = lyndonSystem(alpha_, D_);
    for (const auto& [w, c] : t_) {
      int idx = sys->index(w);
      if (idx < 0) throw Error("corrupt Lie element");
      for (const auto& [tw, tc] : sys->expansion(idx)) r.add(tw, c * K(tc));
    }
    return r;
  }

  static Lie fromTensor(const Tensor<K>& t) {
    Lie r(t.alphabet(), t.degree());
    auto sys = lyndonSystem(t.alphabet(), t.degree());
    // Per-weight lex elimination against standard-bracketing expansions.
    std::map<int, std::map<Word, K>> byW;
    for (const auto& [w, c] : t.terms())
      byW[wordWeight(*t.alphabet(), w)][w] = c;
    for (auto& [d, part] : byW) {
      while (!part.empty()) {
        auto it = part.begin();
        Word w0 = it->first;
        K c = it->second;
        int idx = sys->index(w0);
        if (idx < 0)
          throw Error("not a Lie element (word " +
                      wordString(*t.alphabet(), w0) + " is not Lyndon)");
        r.t_.emplace(w0, c);
        for (const auto& [w, e] : sys->expansion(idx)) {
          auto jt = part.find(w);
          K delta = c * K(e);
          if (jt == part.end()) {
            if (!(delta == K(0))) part.emplace(w, -delta);
          } else {
            jt->second -= delta;
            if (jt->second == K(0)) part.erase(jt);
          }
        }
      }
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
      s += "(" + dk::coeffString(e->second) + ")*B(" + wordString(*alpha_, e->first) + ")";
    }
    return s;
  }

 private:
  AlphabetPtr alpha_;
  int D_;
  std::map<Word, K> t_;  // Lyndon words -> nonzero coefficients
};

template <class K>
Lie<K> bracket(const Lie<K>& a, const Lie<K>& b) {
  Tensor<K> ta = a.toTensor(), tb = b.toTensor();
  return Lie<K>::fromTensor(ta * tb - tb * ta);
}

// log of the product of exponentials, re-expressed in Lyndon coordinates.
template <class K>
Lie<K> bchLie(const std::vector<Lie<K>>& args) {
  if (args.empty()) throw Error("bch of no arguments");
  Tensor<K> p = Tensor<K>::constant(args[0].alphabet(), args[0].degree(), K(1));
  for (const auto& a : args) {
    if (!(a.minWeight() >= 1)) throw Error("bch argument with constant term");
    p = p * a.toTensor().exp();
  }
  return Lie<K>::fromTensor(p.log());
}

// ---------------------------------------------------------------------------
// Universal BCH and generic free-Lie evaluation.
//
// Ops concept:
//   Elt zero() const;
//   Elt bracket(const Elt&, const Elt&) const;
//   void axpy(Elt& acc, const Rat& c, const Elt& x) const;   // acc += c*x
// ---------------------------------------------------------------------------

// The BCH element of the free Lie algebra on two weight-1 letters, truncated
// at bracket length maxLen; cached.
inline const Lie<Rat>& universalBch(int maxLen) {
  static std::mutex mu;
  static std::map<int, Lie<Rat>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(maxLen);
  if (it != cache.end()) return it->second;
  auto alpha = std::make_shared<Alphabet>();
  alpha->add({"A", Role::X, 1});
  alpha->add({"B", Role::X, 1});
  AlphabetPtr ap = alpha;
  Lie<Rat> a = Lie<Rat>::gen(ap, maxLen, 0);
  Lie<Rat> b = Lie<Rat>::gen(ap, maxLen, 1);
  return cache.emplace(maxLen, bchLie<Rat>({a, b})).first->second;
}

// Evaluate the standard bracketing of Lyndon words over a custom generator
// assignment; memoizes per word.
template <class Elt, class Ops>
class LieEvaluator {
 public:
  LieEvaluator(LyndonSystemPtr sys, std::vector<Elt> genImages, const Ops& ops)
      : sys_(std::move(sys)), gens_(std::move(genImages)), ops_(ops) {}

  const Elt& evalWord(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    Elt v = ops_.zero();
    if (w.size() == 1) {
      v = gens_.at(static_cast<size_t>(w[0]));
    } else {
      auto [u, vv] = sys_->stdFactor(w);
      v = ops_.bracket(evalWord(u), evalWord(vv));
    }
    return memo_.emplace(w, std::move(v)).first->second;
  }

  Elt eval(const Lie<Rat>& l) {
    Elt acc = ops_.zero();
    for (const auto& [w, c] : l.terms()) ops_.axpy(acc, c, evalWord(w));
    return acc;
  }

 private:
  LyndonSystemPtr sys_;
  std::vector<Elt> gens_;
  Ops ops_;
  std::map<Word, Elt> memo_;
};

// Ops of the free Lie algebra itself (generator substitutions etc.).
template <class K>
struct FreeLieOps {
  AlphabetPtr alpha;
  int D;
  using Elt = Lie<K>;
  Elt zero() const { return Elt(alpha, D); }
  Elt bracket(const Elt& a, const Elt& b) const { return dk::bracket(a, b); }
  void axpy(Elt& acc, const Rat& c, const Elt& x) const {
    acc += x.scaled(K(c));
  }
};

// bch(a,b) in any (truncated-nilpotent) Lie algebra, via the universal
// expansion up to bracket length maxLen.
template <class Elt, class Ops>
Elt bchEval(const Elt& a, const Elt& b, int maxLen, const Ops& ops) {
  const Lie<Rat>& u = universalBch(maxLen);
  LieEvaluator<Elt, Ops> ev(lyndonSystem(u.alphabet(), maxLen), {a, b}, ops);
  return ev.eval(u);
}

}  // namespace dk
