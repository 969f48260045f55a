#pragma once
// Semidirect products h ⋉ u of presented graded Lie algebras: an action table
// assigns to each generator of the outer algebra h a derivation value on each
// generator of the inner algebra u; derivations extend along standard
// bracketings, and actions of longer outer words by iterated commutators of
// derivations.  verifyActionTable checks that the table genuinely descends to
// the two quotients (outer relators act by zero, inner relator ideal is
// preserved).

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dk/presented.hpp"

namespace dk {

template <class K>
Lie<K> convertLie(const Lie<Rat>& a, int D) {
  Lie<K> r(a.alphabet(), D);
  for (const auto& [w, c] : a.terms()) r.add(w, K(c));
  return r;
}

struct ActionTable {
  Presentation outer;
  Presentation inner;
  // onGen[outer generator id][inner generator id] = value of the derivation,
  // as a free inner Lie element (reduced or not).
  std::vector<std::vector<Lie<Rat>>> onGen;
};

class Semidirect {
 public:
  template <class K>
  struct Elt {
    Lie<K> inner;
    Lie<K> outer;
    bool operator==(const Elt& o) const {
      return inner == o.inner && outer == o.outer;
    }
    bool isZero() const { return inner.isZero() && outer.isZero(); }
    std::string toString() const {
      return "(" + inner.toString() + " ; " + outer.toString() + ")";
    }
  };

  Semidirect(ActionTable table, int D)
      : t_(std::move(table)),
        D_(D),
        innerB_(std::make_shared<GradedBasis>(t_.inner, D)),
        outerB_(std::make_shared<GradedBasis>(t_.outer, D)) {
    if (static_cast<int>(t_.onGen.size()) != t_.outer.alpha->size())
      throw Error("action table: wrong outer generator count");
    for (const auto& row : t_.onGen)
      if (static_cast<int>(row.size()) != t_.inner.alpha->size())
        throw Error("action table: wrong inner generator count");
  }

  int maxDegree() const { return D_; }
  const ActionTable& table() const { return t_; }
  const GradedBasis& innerBasis() const { return *innerB_; }
  const GradedBasis& outerBasis() const { return *outerB_; }
  int dim(int d) const { return innerB_->dim(d) + outerB_->dim(d); }
  std::vector<int> dims() const {
    std::vector<int> v;
    for (int d = 1; d <= D_; ++d) v.push_back(dim(d));
    return v;
  }

  // Derivation of the outer generator og applied to a free inner Lie element
  // (whose words may be any Lyndon words); result is reduced.
  template <class K>
  Lie<K> actGen(int og, const Lie<K>& u) const {
    Lie<K> r(t_.inner.alpha, D_);
    for (const auto& [w, c] : u.terms()) {
      const Lie<Rat>& aw = actGenWord(og, w);
      if (!aw.isZero()) r += convertLie<K>(aw, D_).scaled(c);
    }
    return innerB_->reduce(r);
  }

  // Action of an outer Lie element (iterated commutators of generator
  // derivations along standard bracketings); result is reduced.
  template <class K>
  Lie<K> act(const Lie<K>& h, const Lie<K>& u) const {
    Lie<K> r(t_.inner.alpha, D_);
    for (const auto& [hw, hc] : h.terms()) r += actWordOp(hw, u).scaled(hc);
    return innerB_->reduce(r);
  }

  template <class K>
  Elt<K> zero() const {
    return Elt<K>{Lie<K>(t_.inner.alpha, D_), Lie<K>(t_.outer.alpha, D_)};
  }
  template <class K>
  Elt<K> fromInner(const Lie<K>& u) const {
    return Elt<K>{innerB_->reduce(u), Lie<K>(t_.outer.alpha, D_)};
  }
  template <class K>
  Elt<K> fromOuter(const Lie<K>& h) const {
    return Elt<K>{Lie<K>(t_.inner.alpha, D_), outerB_->reduce(h)};
  }

  template <class K>
  Elt<K> add(Elt<K> a, const Elt<K>& b) const {
    a.inner += b.inner;
    a.outer += b.outer;
    return a;
  }
  template <class K>
  Elt<K> bracket(const Elt<K>& a, const Elt<K>& b) const {
    Elt<K> r = zero<K>();
    r.inner = innerB_->reduce(dk::bracket(a.inner, b.inner)) +
              act(a.outer, b.inner) - act(b.outer, a.inner);
    r.outer = outerB_->reduce(dk::bracket(a.outer, b.outer));
    return r;
  }
  template <class K>
  Elt<K> reduce(const Elt<K>& a) const {
    return Elt<K>{innerB_->reduce(a.inner), outerB_->reduce(a.outer)};
  }

 private:
  // act of outer generator on a single inner Lyndon word, memoized.
  const Lie<Rat>& actGenWord(int og, const Word& w) const {
    auto key = std::make_pair(og, w);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Lie<Rat> v(t_.inner.alpha, D_);
    if (w.size() == 1) {
      const Lie<Rat>& raw = t_.onGen[static_cast<size_t>(og)]
                                   [static_cast<size_t>(w[0])];
      for (const auto& [ww, c] : raw.terms()) v.add(ww, c);
      v = innerB_->reduce(v);
    } else {
      auto [f, g] = innerB_->system()->stdFactor(w);
      Lie<Rat> lf(t_.inner.alpha, D_), lg(t_.inner.alpha, D_);
      lf.add(f, Rat(1));
      lg.add(g, Rat(1));
      v = innerB_->reduce(dk::bracket(actGenWord(og, f), lg) +
                          dk::bracket(lf, actGenWord(og, g)));
    }
    return memo_.emplace(key, std::move(v)).first->second;
  }

  // Operator of an outer Lyndon word via its standard bracketing:
  // [u,v] acts as act(u)act(v) - act(v)act(u).
  template <class K>
  Lie<K> actWordOp(const Word& hw, const Lie<K>& u) const {
    if (hw.size() == 1) return actGen(hw[0], u);
    auto [f, g] = outerB_->system()->stdFactor(hw);
    return actWordOp(f, actWordOp(g, u)) - actWordOp(g, actWordOp(f, u));
  }

  ActionTable t_;
  int D_;
  GradedBasisPtr innerB_;
  GradedBasisPtr outerB_;
  mutable std::map<std::pair<int, Word>, Lie<Rat>> memo_;
};

// Ops adapter for bchEval / LieEvaluator in a semidirect product.
template <class K>
struct SemidirectOps {
  const Semidirect* s;
  using Elt = Semidirect::Elt<K>;
  Elt zero() const { return s->zero<K>(); }
  Elt bracket(const Elt& a, const Elt& b) const { return s->bracket(a, b); }
  void axpy(Elt& acc, const Rat& c, const Elt& x) const {
    acc.inner += x.inner.scaled(K(c));
    acc.outer += x.outer.scaled(K(c));
  }
};

// Consistency of the action table with both presentations:
//  (1) every outer relator acts as the zero derivation on inner generators;
//  (2) every outer generator's derivation maps inner relators into the inner
//      relator ideal.
inline std::vector<std::string> verifyActionTable(const Semidirect& s) {
  std::vector<std::string> failures;
  const ActionTable& t = s.table();
  const int D = s.maxDegree();
  for (const auto& r : allRelators(t.outer, D)) {
    int wr = relatorWeight(t.outer, r);
    for (int gi = 0; gi < t.inner.alpha->size(); ++gi) {
      if (wr + (*t.inner.alpha)[gi].weight > D) continue;
      Lie<Rat> v = s.act(r, Lie<Rat>::gen(t.inner.alpha, D, gi));
      if (!v.isZero())
        failures.push_back("outer relator " + r.toString() +
                           " acts nontrivially on " +
                           (*t.inner.alpha)[gi].name + ": " + v.toString());
    }
  }
  for (int og = 0; og < t.outer.alpha->size(); ++og) {
    int wo = (*t.outer.alpha)[og].weight;
    for (const auto& r : allRelators(t.inner, D)) {
      if (wo + relatorWeight(t.inner, r) > D) continue;
      Lie<Rat> rr(t.inner.alpha, D);
      for (const auto& [w, c] : r.terms()) rr.add(w, c);
      Lie<Rat> v = s.actGen(og, rr);
      if (!v.isZero())
        failures.push_back("derivation of " + (*t.outer.alpha)[og].name +
                           " does not preserve relator " + r.toString() +
                           ": " + v.toString());
    }
  }
  return failures;
}

}  // namespace dk
