#pragma once
// Finitely presented graded Lie algebras, truncated at a fixed weight:
// generators = weighted alphabet, relators = homogeneous Lie elements,
// optional central symbols (shorthand for the relators [c, g] over all
// generators g).  The graded quotient basis is computed degree by degree via
// the ideal recursion I_d = R_d + sum_g [g, I_{d - wt(g)}] with exact sparse
// row elimination; the surviving (non-pivot) Lyndon words form the basis.

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dk/lie.hpp"
#include "dk/lyndon.hpp"
#include "dk/rowspace.hpp"

namespace dk {

struct Presentation {
  AlphabetPtr alpha;
  std::vector<Lie<Rat>> relators;  // each homogeneous
  std::vector<int> central;        // symbol ids commuting with everything
};

// Homogeneous weight of a relator; throws on inhomogeneous or zero input.
inline int relatorWeight(const Presentation& p, const Lie<Rat>& r) {
  int w = -1;
  for (const auto& [word, c] : r.terms()) {
    int d = wordWeight(*p.alpha, word);
    if (w < 0) w = d;
    if (d != w) throw Error("inhomogeneous relator: " + r.toString());
  }
  if (w < 0) throw Error("zero relator");
  return w;
}

// User relators plus the [c, g] relators induced by central symbols, up to
// weight D, in a fixed deterministic order.
inline std::vector<Lie<Rat>> allRelators(const Presentation& p, int D) {
  std::vector<Lie<Rat>> out;
  for (const auto& r : p.relators)
    if (relatorWeight(p, r) <= D) out.push_back(r);
  for (int c : p.central) {
    for (int g = 0; g < p.alpha->size(); ++g) {
      if (g == c) continue;
      const int w = (*p.alpha)[c].weight + (*p.alpha)[g].weight;
      if (w > D) continue;
      Lie<Rat> cl = Lie<Rat>::gen(p.alpha, D, c);
      Lie<Rat> gl = Lie<Rat>::gen(p.alpha, D, g);
      Lie<Rat> b = bracket(cl, gl);
      if (!b.isZero()) out.push_back(b);
    }
  }
  return out;
}

class GradedBasis {
 public:
  GradedBasis(Presentation p, int D)
      : p_(std::move(p)), D_(D), sys_(lyndonSystem(p_.alpha, D)) {
    build();
  }

  const Presentation& presentation() const { return p_; }
  int maxDegree() const { return D_; }
  const LyndonSystemPtr& system() const { return sys_; }

  int dim(int d) const {
    if (d < 1 || d > D_) return 0;
    return static_cast<int>(basis_[static_cast<size_t>(d)].size());
  }
  std::vector<int> dims() const {
    std::vector<int> v;
    for (int d = 1; d <= D_; ++d) v.push_back(dim(d));
    return v;
  }
  int totalDim() const {
    int s = 0;
    for (int d = 1; d <= D_; ++d) s += dim(d);
    return s;
  }
  // Global Lyndon indices of the degree-d basis (non-pivot columns), lex order.
  const std::vector<int>& basis(int d) const {
    return basis_.at(static_cast<size_t>(d));
  }
  Lie<Rat> basisElement(int d, int i) const {
    Lie<Rat> e(p_.alpha, D_);
    e.add(sys_->word(basis(d).at(static_cast<size_t>(i))), Rat(1));
    return e;
  }

  // Canonical representative modulo the relator ideal.
  template <class K>
  Lie<K> reduce(const Lie<K>& e) const {
    checkSameContext(p_.alpha, e.alphabet());
    std::map<int, std::map<int, K>> byW;  // degree -> global index -> coeff
    for (const auto& [w, c] : e.terms()) {
      int d = wordWeight(*p_.alpha, w);
      if (d > D_) throw Error("element exceeds truncation degree of basis");
      int idx = sys_->index(w);
      if (idx < 0) throw Error("corrupt Lie element");
      byW[d][idx] = c;
    }
    Lie<K> r(p_.alpha, D_);
    for (auto& [d, coords] : byW) {
      ideal_[static_cast<size_t>(d)].reduceCoords(coords);
      for (const auto& [idx, c] : coords) r.add(sys_->word(idx), c);
    }
    return r;
  }
  template <class K>
  bool isZeroMod(const Lie<K>& e) const {
    return reduce(e).isZero();
  }

 private:
  void build() {
    ideal_.assign(static_cast<size_t>(D_) + 1, RowSpace());
    basis_.assign(static_cast<size_t>(D_) + 1, {});
    std::map<int, std::vector<RowSpace::Row>> relRows;  // weight -> rows
    for (const auto& r : allRelators(p_, D_)) {
      RowSpace::Row row;
      for (const auto& [w, c] : r.terms()) row[sys_->index(w)] = c;
      relRows[relatorWeight(p_, r)].push_back(std::move(row));
    }
    for (int d = 1; d <= D_; ++d) {
      RowSpace& I = ideal_[static_cast<size_t>(d)];
      for (auto& row : relRows[d]) I.insert(std::move(row));
      for (int g = 0; g < p_.alpha->size(); ++g) {
        int e = (*p_.alpha)[g].weight;
        if (e >= d) continue;
        for (const auto& [pivotCol, prow] :
             ideal_[static_cast<size_t>(d - e)].pivots()) {
          RowSpace::Row acc;
          for (const auto& [col, c] : prow) {
            for (const auto& [idx, c2] : sys_->bracketGenLyndon(g, col)) {
              Rat& v = acc[idx];
              v += c * c2;
              if (v == 0) acc.erase(idx);
            }
          }
          I.insert(std::move(acc));
        }
      }
      for (int idx : sys_->byWeight(d))
        if (!I.isPivot(idx)) basis_[static_cast<size_t>(d)].push_back(idx);
    }
  }

  Presentation p_;
  int D_;
  LyndonSystemPtr sys_;
  std::vector<RowSpace> ideal_;            // per degree
  std::vector<std::vector<int>> basis_;    // per degree, global Lyndon indices
};

using GradedBasisPtr = std::shared_ptr<const GradedBasis>;

// Ops adapter: the quotient Lie algebra of a GradedBasis, for use with
// LieEvaluator / bchEval.
template <class K = Rat>
struct QuotientOps {
  const GradedBasis* b;
  using Elt = Lie<K>;
  Elt zero() const { return Elt(b->presentation().alpha, b->maxDegree()); }
  Elt bracket(const Elt& x, const Elt& y) const {
    return b->reduce(dk::bracket(x, y));
  }
  void axpy(Elt& acc, const Rat& c, const Elt& x) const {
    acc += x.scaled(K(c));
  }
};

// A map out of a presented algebra is well defined iff it kills every relator
// (including the central-symbol brackets).  `images` assigns an element of the
// target to each generator id of src; `isZero` decides vanishing in the
// target.  Returns human-readable descriptions of the violated relators.
template <class Elt, class Ops, class IsZero>
std::vector<std::string> verifyMorphism(const Presentation& src, int D,
                                        const std::vector<Elt>& images,
                                        const Ops& ops, IsZero isZero) {
  std::vector<std::string> failures;
  auto sys = lyndonSystem(src.alpha, D);
  LieEvaluator<Elt, Ops> ev(sys, images, ops);
  for (const auto& r : allRelators(src, D)) {
    Elt v = ev.eval(r);
    if (!isZero(v))
      failures.push_back("relator not killed: " + r.toString());
  }
  return failures;
}

}  // namespace dk
