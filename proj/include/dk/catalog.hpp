#pragma once
// Concrete algebra catalog: the framed Drinfeld-Kohno Lie algebras t^f_I and
// their genus-g analogues t^f_{g,I} (with the corrected last relation
// sum_a [x_i^a, y_i^a] + sum_{j!=i} t_{ij} = (g-1) t_{ii}), the operadic
// insertion at a strand, the symplectic and rescaling actions, the algebra
// u^f_{g,1..n} = L(H) + K t_{**}, the action table of t^f_{g,1..n 0} on it,
// the mutually inverse maps F and G exhibiting
//   t^f_{g,1..n * 0}  =~  u^f_{g,1..n} |x t^f_{g,1..n 0},
// and the automated verification reports for both.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dk/action.hpp"
#include "dk/presented.hpp"

namespace dk {

struct StrandSet {
  std::vector<std::string> labels;  // unique; "*" and "0" are ordinary labels
  int g = 0;
  bool framed = true;
};

inline std::string xName(const std::string& label, int a) {
  return "x[" + label + "," + std::to_string(a) + "]";
}
inline std::string yName(const std::string& label, int a) {
  return "y[" + label + "," + std::to_string(a) + "]";
}
// t symbols are stored once per unordered pair, ordered by strand position.
inline std::string tName(const StrandSet& s, int i, int j) {
  if (i > j) std::swap(i, j);
  return "t[" + s.labels[static_cast<size_t>(i)] + "," +
         s.labels[static_cast<size_t>(j)] + "]";
}

inline AlphabetPtr strandAlphabet(const StrandSet& s) {
  auto a = std::make_shared<Alphabet>();
  int n = static_cast<int>(s.labels.size());
  for (int i = 0; i < n; ++i)
    for (int aa = 1; aa <= s.g; ++aa)
      a->add({xName(s.labels[static_cast<size_t>(i)], aa), Role::X, 1});
  for (int i = 0; i < n; ++i)
    for (int aa = 1; aa <= s.g; ++aa)
      a->add({yName(s.labels[static_cast<size_t>(i)], aa), Role::Y, 1});
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) a->add({tName(s, i, j), Role::T, 2});
  return a;
}

// Presentation of t^f_{g,I} (framed) or t_{g,I} (unframed: t_{ii} = 0).
// mutateLast replaces (g-1) by g in the last relation — deliberately wrong,
// kept only as the oracle for the action-table mutation test.
inline Presentation makeTf(const StrandSet& s, bool mutateLast = false) {
  AlphabetPtr alpha = strandAlphabet(s);
  const int n = static_cast<int>(s.labels.size());
  const int g = s.g;
  const int RD = 4;  // max relator weight
  auto T = [&](int i, int j) {
    return Lie<Rat>::gen(alpha, RD, alpha->require(tName(s, i, j)));
  };
  auto X = [&](int i, int a) {
    return Lie<Rat>::gen(
        alpha, RD, alpha->require(xName(s.labels[static_cast<size_t>(i)], a)));
  };
  auto Y = [&](int i, int a) {
    return Lie<Rat>::gen(
        alpha, RD, alpha->require(yName(s.labels[static_cast<size_t>(i)], a)));
  };

  std::vector<Lie<Rat>> rel;
  auto push = [&](const Lie<Rat>& r) {
    if (!r.isZero()) rel.push_back(r);
  };

  // [t_ij, t_kl] = 0 for disjoint index pairs.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = i; k < n; ++k)
        for (int l = k; l < n; ++l) {
          if (std::make_pair(k, l) <= std::make_pair(i, j)) continue;
          if (k == i || k == j || l == i || l == j) continue;
          push(bracket(T(i, j), T(k, l)));
        }
  // [t_ij, t_ik + t_jk] = 0 for k not in {i,j}.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        push(bracket(T(i, j), T(i, k) + T(j, k)));
      }
  // [x_i^a, y_j^b] = delta_ab t_ij for i != j.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int a = 1; a <= g; ++a)
        for (int b = 1; b <= g; ++b) {
          Lie<Rat> r = bracket(X(i, a), Y(j, b));
          if (a == b) r -= T(i, j);
          push(r);
        }
    }
  // [x_i^a, x_j^b] = [y_i^a, y_j^b] = 0 for i != j.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int a = 1; a <= g; ++a)
        for (int b = 1; b <= g; ++b) {
          push(bracket(X(i, a), X(j, b)));
          push(bracket(Y(i, a), Y(j, b)));
        }
  // [x_k^a, t_ij] = [y_k^a, t_ij] = 0 for k not in {i,j}.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        for (int a = 1; a <= g; ++a) {
          push(bracket(X(k, a), T(i, j)));
          push(bracket(Y(k, a), T(i, j)));
        }
      }
  // [x_i^a + x_j^a, t_ij] = [y_i^a + y_j^a, t_ij] = 0.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int a = 1; a <= g; ++a) {
        push(bracket(X(i, a) + X(j, a), T(i, j)));
        push(bracket(Y(i, a) + Y(j, a), T(i, j)));
      }
  // sum_a [x_i^a, y_i^a] + sum_{j != i} t_ij = (g-1) t_ii.
  for (int i = 0; i < n; ++i) {
    Lie<Rat> r(alpha, RD);
    for (int a = 1; a <= g; ++a) r += bracket(X(i, a), Y(i, a));
    for (int j = 0; j < n; ++j)
      if (j != i) r += T(i, j);
    r -= T(i, i).scaled(Rat(mutateLast ? g : g - 1));
    push(r);
  }
  if (!s.framed)
    for (int i = 0; i < n; ++i) push(T(i, i));
  return Presentation{alpha, std::move(rel), {}};
}

// Genus-0 framed Drinfeld-Kohno algebra t^f_I (a special case of the above).
inline Presentation makeTfGenus0(std::vector<std::string> labels,
                                 bool framed = true) {
  return makeTf(StrandSet{std::move(labels), 0, framed});
}

// ---------------------------------------------------------------------------
// u^f_{g,1..n} = L(H) + K t_{**},  H = span{t_{j*}, x_*^a, y_*^a}.
// ---------------------------------------------------------------------------

struct UfModel {
  int g = 0, n = 0;
  Presentation p;               // no relators; t[*,*] central
  std::vector<int> xStar, yStar;  // generator ids, a = 1..g
  std::vector<int> tStar;         // ids of t[j,*], j = 1..n
  int tCenter = -1;               // id of t[*,*]

  Lie<Rat> gen(int id, int D) const { return Lie<Rat>::gen(p.alpha, D, id); }
  // omega-vec = sum_a [x_*^a, y_*^a] + sum_j t_{j*}
  Lie<Rat> omegaVec(int D) const {
    Lie<Rat> w(p.alpha, D);
    for (int a = 0; a < g; ++a)
      w += bracket(gen(xStar[static_cast<size_t>(a)], D),
                   gen(yStar[static_cast<size_t>(a)], D));
    for (int j = 0; j < n; ++j) w += gen(tStar[static_cast<size_t>(j)], D);
    return w;
  }
  // omega_* = omega-vec - (g-1) t_{**}
  Lie<Rat> omegaStar(int D) const {
    return omegaVec(D) - gen(tCenter, D).scaled(Rat(g - 1));
  }
};

inline UfModel makeUf(int g, int n) {
  UfModel m;
  m.g = g;
  m.n = n;
  auto a = std::make_shared<Alphabet>();
  for (int aa = 1; aa <= g; ++aa)
    m.xStar.push_back(a->add({xName("*", aa), Role::X, 1}));
  for (int aa = 1; aa <= g; ++aa)
    m.yStar.push_back(a->add({yName("*", aa), Role::Y, 1}));
  for (int j = 1; j <= n; ++j)
    m.tStar.push_back(a->add({"t[" + std::to_string(j) + ",*]", Role::T, 2}));
  m.tCenter = a->add({"t[*,*]", Role::Center, 2});
  m.p = Presentation{a, {}, {m.tCenter}};
  return m;
}

// ---------------------------------------------------------------------------
// The action of t^f_{g,1..n 0} on u^f_{g,1..n}.
// ---------------------------------------------------------------------------

// Strand set {1,...,n,0} of the acting algebra.
inline StrandSet outerStrands(int g, int n) {
  StrandSet s;
  for (int i = 1; i <= n; ++i) s.labels.push_back(std::to_string(i));
  s.labels.push_back("0");
  s.g = g;
  s.framed = true;
  return s;
}

// The action table: rows indexed by the generators of t^f_{g,1..n 0}, columns
// by the generators of u^f_{g,1..n}.  mutateLast propagates to the outer
// presentation only (the table itself always uses the correct omega_*).
inline ActionTable ufAction(int g, int n, bool mutateLast = false) {
  const int VD = 4;  // max weight of a table value
  StrandSet os = outerStrands(g, n);
  UfModel uf = makeUf(g, n);
  ActionTable tab;
  tab.outer = makeTf(os, mutateLast);
  tab.inner = uf.p;

  const AlphabetPtr& ia = uf.p.alpha;
  Lie<Rat> omega = uf.omegaStar(VD);
  auto TS = [&](int k) { return uf.gen(uf.tStar[static_cast<size_t>(k)], VD); };
  auto XS = [&](int b) { return uf.gen(uf.xStar[static_cast<size_t>(b)], VD); };
  auto YS = [&](int b) { return uf.gen(uf.yStar[static_cast<size_t>(b)], VD); };
  Lie<Rat> zero(ia, VD);

  const int O = tab.outer.alpha->size();
  const int I = ia->size();
  tab.onGen.assign(static_cast<size_t>(O),
                   std::vector<Lie<Rat>>(static_cast<size_t>(I), zero));
  auto setVal = [&](const std::string& z, int w, const Lie<Rat>& v) {
    tab.onGen[static_cast<size_t>(tab.outer.alpha->require(z))]
             [static_cast<size_t>(w)] = v;
  };

  // Inner generator column order: x_*^b, y_*^b (0-based b), t_{k*}, t_{**};
  // the t_{**} column is identically zero.
  for (int i = 0; i < n; ++i) {    // strand positions; label = i+1
    for (int j = i; j < n; ++j) {  // row t_ij
      std::string z = tName(os, i, j);
      for (int k = 0; k < n; ++k) {
        Lie<Rat> arg(ia, VD);
        if (i == k) arg += TS(j);
        if (j == k) arg += TS(i);
        setVal(z, uf.tStar[static_cast<size_t>(k)], bracket(TS(k), arg));
      }
    }
    {  // row t_{i0}; position of label "0" is n
      std::string z = tName(os, i, n);
      for (int k = 0; k < n; ++k) {
        Lie<Rat> arg = TS(i);
        if (i == k) arg += omega;
        setVal(z, uf.tStar[static_cast<size_t>(k)], bracket(arg, TS(k)));
      }
      for (int b = 0; b < g; ++b) {
        setVal(z, uf.xStar[static_cast<size_t>(b)], bracket(TS(i), XS(b)));
        setVal(z, uf.yStar[static_cast<size_t>(b)], bracket(TS(i), YS(b)));
      }
    }
    for (int a = 1; a <= g; ++a) {  // rows x_i^a, y_i^a
      std::string zx = xName(os.labels[static_cast<size_t>(i)], a);
      std::string zy = yName(os.labels[static_cast<size_t>(i)], a);
      setVal(zx, uf.tStar[static_cast<size_t>(i)], bracket(TS(i), XS(a - 1)));
      setVal(zy, uf.tStar[static_cast<size_t>(i)], bracket(TS(i), YS(a - 1)));
      setVal(zx, uf.yStar[static_cast<size_t>(a - 1)], TS(i));
      setVal(zy, uf.xStar[static_cast<size_t>(a - 1)], -TS(i));
    }
  }
  {  // row t_{00}
    std::string z = tName(os, n, n);
    for (int k = 0; k < n; ++k)
      setVal(z, uf.tStar[static_cast<size_t>(k)],
             bracket(TS(k), omega).scaled(Rat(2)));
    for (int b = 0; b < g; ++b) {
      setVal(z, uf.xStar[static_cast<size_t>(b)],
             bracket(XS(b), omega).scaled(Rat(2)));
      setVal(z, uf.yStar[static_cast<size_t>(b)],
             bracket(YS(b), omega).scaled(Rat(2)));
    }
  }
  for (int a = 1; a <= g; ++a) {  // rows x_0^a, y_0^a
    std::string zx = xName("0", a);
    std::string zy = yName("0", a);
    for (int k = 0; k < n; ++k) {
      setVal(zx, uf.tStar[static_cast<size_t>(k)], bracket(XS(a - 1), TS(k)));
      setVal(zy, uf.tStar[static_cast<size_t>(k)], bracket(YS(a - 1), TS(k)));
    }
    for (int b = 0; b < g; ++b) {
      setVal(zx, uf.xStar[static_cast<size_t>(b)], bracket(XS(a - 1), XS(b)));
      Lie<Rat> vxy = bracket(XS(a - 1), YS(b));
      if (a - 1 == b) vxy -= omega;
      setVal(zx, uf.yStar[static_cast<size_t>(b)], vxy);
      Lie<Rat> vyx = bracket(YS(a - 1), XS(b));
      if (a - 1 == b) vyx += omega;
      setVal(zy, uf.xStar[static_cast<size_t>(b)], vyx);
      setVal(zy, uf.yStar[static_cast<size_t>(b)], bracket(YS(a - 1), YS(b)));
    }
  }
  return tab;
}

// Check the action table at truncation D.  With mutateLast the outer
// presentation carries the wrong last relation; for g >= 1 the check then
// fails exactly on its strand-0 instance (for g = 0, n <= 1 the difference
// t_{00} acts as zero, so the mutation is invisible to the action).
inline std::vector<std::string> verifyAction(int g, int n, int D,
                                             bool mutateLast = false) {
  Semidirect s(ufAction(g, n, mutateLast), D);
  return verifyActionTable(s);
}

// ---------------------------------------------------------------------------
// The split tower t^f_{g,1..n * 0} =~ u^f_{g,1..n} |x t^f_{g,1..n 0}.
// ---------------------------------------------------------------------------

struct TowerContext {
  int g = 0, n = 0, D = 0;
  UfModel uf;
  StrandSet directS;                     // labels 1..n, *, 0
  Presentation directP;                  // t^f_{g,1..n * 0}
  std::shared_ptr<Semidirect> semi;      // u^f |x t^f_{g,1..n 0}
  std::vector<Semidirect::Elt<Rat>> gImages;  // per direct generator id
  std::vector<Lie<Rat>> fInner;          // F on inner generators (free form)
  std::vector<Lie<Rat>> fOuter;          // F on outer generators (free form)
};

inline TowerContext makeTower(int g, int n, int D) {
  TowerContext tc;
  tc.g = g;
  tc.n = n;
  tc.D = D;
  tc.uf = makeUf(g, n);
  for (int i = 1; i <= n; ++i) tc.directS.labels.push_back(std::to_string(i));
  tc.directS.labels.push_back("*");
  tc.directS.labels.push_back("0");
  tc.directS.g = g;
  tc.directS.framed = true;
  tc.directP = makeTf(tc.directS);
  tc.semi = std::make_shared<Semidirect>(ufAction(g, n), D);

  const AlphabetPtr& da = tc.directP.alpha;
  const AlphabetPtr& ia = tc.uf.p.alpha;
  const AlphabetPtr& oa = tc.semi->table().outer.alpha;
  const int STAR = n, ZERO = n + 1;  // strand positions in directS
  auto innerGen = [&](const std::string& name) {
    return Lie<Rat>::gen(ia, D, ia->require(name));
  };
  auto outerGen = [&](const std::string& name) {
    return Lie<Rat>::gen(oa, D, oa->require(name));
  };
  auto directGen = [&](const std::string& name) {
    return Lie<Rat>::gen(da, D, da->require(name));
  };
  Lie<Rat> omega = tc.uf.omegaStar(D);
  StrandSet os = outerStrands(g, n);

  // G: direct generators -> semidirect pairs (inner, outer).
  tc.gImages.assign(static_cast<size_t>(da->size()), tc.semi->zero<Rat>());
  auto setG = [&](const std::string& name, const Lie<Rat>& in,
                  const Lie<Rat>& out) {
    tc.gImages[static_cast<size_t>(da->require(name))] =
        Semidirect::Elt<Rat>{in, out};
  };
  Lie<Rat> zin(ia, D), zout(oa, D);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j)
      setG(tName(tc.directS, i, j), zin, outerGen(tName(os, i, j)));
    setG(tName(tc.directS, i, STAR),
         innerGen("t[" + std::to_string(i + 1) + ",*]"), zout);
    setG(tName(tc.directS, i, ZERO),
         -innerGen("t[" + std::to_string(i + 1) + ",*]"),
         outerGen(tName(os, i, n)));
    for (int a = 1; a <= g; ++a) {
      std::string lbl = std::to_string(i + 1);
      setG(xName(lbl, a), zin, outerGen(xName(lbl, a)));
      setG(yName(lbl, a), zin, outerGen(yName(lbl, a)));
    }
  }
  setG(tName(tc.directS, STAR, STAR), innerGen("t[*,*]"), zout);
  setG(tName(tc.directS, STAR, ZERO), -omega, zout);
  setG(tName(tc.directS, ZERO, ZERO),
       -innerGen("t[*,*]") + omega.scaled(Rat(2)), outerGen(tName(os, n, n)));
  for (int a = 1; a <= g; ++a) {
    setG(xName("*", a), innerGen(xName("*", a)), zout);
    setG(yName("*", a), innerGen(yName("*", a)), zout);
    setG(xName("0", a), -innerGen(xName("*", a)), outerGen(xName("0", a)));
    setG(yName("0", a), -innerGen(yName("*", a)), outerGen(yName("0", a)));
  }

  // F = iota + insertion of the two strands {*, 0} at strand 0.
  tc.fInner.assign(static_cast<size_t>(ia->size()), Lie<Rat>(da, D));
  for (int id = 0; id < ia->size(); ++id)
    tc.fInner[static_cast<size_t>(id)] = directGen((*ia)[id].name);
  tc.fOuter.assign(static_cast<size_t>(oa->size()), Lie<Rat>(da, D));
  auto setF = [&](const std::string& name, const Lie<Rat>& v) {
    tc.fOuter[static_cast<size_t>(oa->require(name))] = v;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j)
      setF(tName(os, i, j), directGen(tName(tc.directS, i, j)));
    setF(tName(os, i, n), directGen(tName(tc.directS, i, STAR)) +
                              directGen(tName(tc.directS, i, ZERO)));
    for (int a = 1; a <= g; ++a) {
      std::string lbl = std::to_string(i + 1);
      setF(xName(lbl, a), directGen(xName(lbl, a)));
      setF(yName(lbl, a), directGen(yName(lbl, a)));
    }
  }
  setF(tName(os, n, n),
       directGen(tName(tc.directS, STAR, STAR)) +
           directGen(tName(tc.directS, STAR, ZERO)).scaled(Rat(2)) +
           directGen(tName(tc.directS, ZERO, ZERO)));
  for (int a = 1; a <= g; ++a) {
    setF(xName("0", a), directGen(xName("*", a)) + directGen(xName("0", a)));
    setF(yName("0", a), directGen(yName("*", a)) + directGen(yName("0", a)));
  }
  return tc;
}

// Evaluate G on an element of the direct presentation (any coefficient ring).
template <class K>
Semidirect::Elt<K> applyG(const TowerContext& tc, const Lie<K>& e) {
  SemidirectOps<K> ops{tc.semi.get()};
  std::vector<Semidirect::Elt<K>> images;
  images.reserve(tc.gImages.size());
  for (const auto& im : tc.gImages)
    images.push_back(Semidirect::Elt<K>{convertLie<K>(im.inner, tc.D),
                                        convertLie<K>(im.outer, tc.D)});
  LieEvaluator<Semidirect::Elt<K>, SemidirectOps<K>> ev(
      lyndonSystem(tc.directP.alpha, tc.D), std::move(images), ops);
  Semidirect::Elt<K> acc = ops.zero();
  for (const auto& [w, c] : e.terms()) {
    const auto& v = ev.evalWord(w);
    acc.inner += v.inner.scaled(c);
    acc.outer += v.outer.scaled(c);
  }
  return tc.semi->reduce(acc);
}

// Evaluate F on a semidirect pair, landing in the given quotient basis of the
// direct presentation.
inline Lie<Rat> applyF(const TowerContext& tc, const GradedBasis& directB,
                       const Semidirect::Elt<Rat>& e) {
  QuotientOps<Rat> ops{&directB};
  LieEvaluator<Lie<Rat>, QuotientOps<Rat>> evIn(
      lyndonSystem(tc.uf.p.alpha, tc.D), tc.fInner, ops);
  LieEvaluator<Lie<Rat>, QuotientOps<Rat>> evOut(
      lyndonSystem(tc.semi->table().outer.alpha, tc.D), tc.fOuter, ops);
  return directB.reduce(evIn.eval(e.inner) + evOut.eval(e.outer));
}

struct SplitReport {
  std::vector<std::string> failures;
  std::vector<int> dimsDirect, dimsTower;
  bool ok() const { return failures.empty(); }
};

// Full split-theorem verification at truncation D:
//  (a) G kills every relator of the direct presentation;
//  (b) F kills every relator of both semidirect factors;
//  (c) F intertwines the action: F(z.w) = [F(z), F(w)] on generator pairs;
//  (d) F o G = id and G o F = id on generators, after reduction;
//  (e) per-degree dimensions of both models agree.
inline SplitReport verifySplit(int g, int n, int D) {
  SplitReport rep;
  TowerContext tc = makeTower(g, n, D);
  GradedBasis directB(tc.directP, D);
  const AlphabetPtr& da = tc.directP.alpha;
  const AlphabetPtr& ia = tc.uf.p.alpha;
  const AlphabetPtr& oa = tc.semi->table().outer.alpha;

  {  // (a)
    SemidirectOps<Rat> ops{tc.semi.get()};
    auto isZero = [&](const Semidirect::Elt<Rat>& v) {
      return tc.semi->reduce(v).isZero();
    };
    for (auto& f : verifyMorphism(tc.directP, D, tc.gImages, ops, isZero))
      rep.failures.push_back("G: " + f);
  }
  {  // (b)
    QuotientOps<Rat> ops{&directB};
    auto isZero = [&](const Lie<Rat>& v) { return directB.reduce(v).isZero(); };
    for (auto& f : verifyMorphism(tc.uf.p, D, tc.fInner, ops, isZero))
      rep.failures.push_back("F inner: " + f);
    for (auto& f :
         verifyMorphism(tc.semi->table().outer, D, tc.fOuter, ops, isZero))
      rep.failures.push_back("F outer: " + f);
  }
  {  // (c)
    QuotientOps<Rat> ops{&directB};
    LieEvaluator<Lie<Rat>, QuotientOps<Rat>> evIn(lyndonSystem(ia, D),
                                                  tc.fInner, ops);
    for (int z = 0; z < oa->size(); ++z)
      for (int w = 0; w < ia->size(); ++w) {
        if ((*oa)[z].weight + (*ia)[w].weight > D) continue;
        const Lie<Rat>& val =
            tc.semi->table().onGen[static_cast<size_t>(z)]
                                  [static_cast<size_t>(w)];
        Lie<Rat> lhs = directB.reduce(evIn.eval(val));
        Lie<Rat> rhs = directB.reduce(
            bracket(tc.fOuter[static_cast<size_t>(z)],
                    tc.fInner[static_cast<size_t>(w)]));
        if (lhs != rhs)
          rep.failures.push_back("F action mismatch at (" + (*oa)[z].name +
                                 ", " + (*ia)[w].name + ")");
      }
  }
  {  // (d)
    for (int id = 0; id < da->size(); ++id) {
      if ((*da)[id].weight > D) continue;
      Lie<Rat> gen = Lie<Rat>::gen(da, D, id);
      Lie<Rat> back = applyF(tc, directB, tc.gImages[static_cast<size_t>(id)]);
      if (back != directB.reduce(gen))
        rep.failures.push_back("F o G != id at " + (*da)[id].name);
    }
    for (int id = 0; id < ia->size(); ++id) {
      if ((*ia)[id].weight > D) continue;
      auto img = applyG(tc, tc.fInner[static_cast<size_t>(id)]);
      auto want = tc.semi->fromInner(Lie<Rat>::gen(ia, D, id));
      if (!(img == want))
        rep.failures.push_back("G o F != id at inner " + (*ia)[id].name);
    }
    for (int id = 0; id < oa->size(); ++id) {
      if ((*oa)[id].weight > D) continue;
      auto img = applyG(tc, tc.fOuter[static_cast<size_t>(id)]);
      auto want = tc.semi->fromOuter(Lie<Rat>::gen(oa, D, id));
      if (!(img == want))
        rep.failures.push_back("G o F != id at outer " + (*oa)[id].name);
    }
  }
  rep.dimsDirect = directB.dims();
  rep.dimsTower = tc.semi->dims();
  if (rep.dimsDirect != rep.dimsTower)
    rep.failures.push_back("dimension mismatch between direct and tower");
  return rep;
}

// ---------------------------------------------------------------------------
// Operadic insertion and the classical automorphisms.
// ---------------------------------------------------------------------------

// Strand set with label k replaced, in place, by the labels J.
inline StrandSet insertStrands(const StrandSet& s, const std::string& k,
                               const std::vector<std::string>& J) {
  StrandSet r;
  r.g = s.g;
  r.framed = s.framed;
  bool found = false;
  for (const auto& l : s.labels) {
    if (l == k) {
      found = true;
      for (const auto& j : J) r.labels.push_back(j);
    } else {
      for (const auto& j : J)
        if (j == l) throw Error("insertion label collision: " + l);
      r.labels.push_back(l);
    }
  }
  if (!found) throw Error("insertion strand not present: " + k);
  return r;
}

// Operadic insertion at strand k: substitute k by the set J and expand each
// t subscript additively; x_k^a -> sum_l x_l^a, likewise y.  Returns the free
// image over the target alphabet (reduce against the target basis as needed).
inline Lie<Rat> insertK(const StrandSet& s, const std::string& k,
                        const std::vector<std::string>& J, const Lie<Rat>& e,
                        int D) {
  AlphabetPtr sa = strandAlphabet(s);
  checkSameContext(sa, e.alphabet());
  StrandSet target = insertStrands(s, k, J);
  AlphabetPtr ta = strandAlphabet(target);
  const int n = static_cast<int>(s.labels.size());
  auto tpos = [&](const std::string& l) {
    for (size_t i = 0; i < target.labels.size(); ++i)
      if (target.labels[i] == l) return static_cast<int>(i);
    throw Error("missing target label " + l);
  };
  auto tgen = [&](const std::string& name) {
    return Lie<Rat>::gen(ta, D, ta->require(name));
  };

  std::vector<Lie<Rat>> images(static_cast<size_t>(sa->size()),
                               Lie<Rat>(ta, D));
  for (int i = 0; i < n; ++i) {
    const std::string& li = s.labels[static_cast<size_t>(i)];
    // Images of the strand labels: a single label or the whole set J.
    std::vector<std::string> imgI =
        (li == k) ? J : std::vector<std::string>{li};
    for (int a = 1; a <= s.g; ++a) {
      Lie<Rat> vx(ta, D), vy(ta, D);
      for (const auto& l : imgI) {
        vx += tgen(xName(l, a));
        vy += tgen(yName(l, a));
      }
      images[static_cast<size_t>(sa->require(xName(li, a)))] = vx;
      images[static_cast<size_t>(sa->require(yName(li, a)))] = vy;
    }
    for (int j = i; j < n; ++j) {
      const std::string& lj = s.labels[static_cast<size_t>(j)];
      std::vector<std::string> imgJ =
          (lj == k) ? J : std::vector<std::string>{lj};
      Lie<Rat> vt(ta, D);
      for (const auto& la : imgI)
        for (const auto& lb : imgJ)
          vt += tgen(tName(target, tpos(la), tpos(lb)));
      images[static_cast<size_t>(sa->require(tName(s, i, j)))] = vt;
    }
  }
  FreeLieOps<Rat> ops{ta, D};
  LieEvaluator<Lie<Rat>, FreeLieOps<Rat>> ev(lyndonSystem(sa, D),
                                             std::move(images), ops);
  return ev.eval(e);
}

// Symplectic substitution x_i^a -> sigma(x^a)_i, y_i^a -> sigma(y^a)_i,
// t_ij fixed.  sigma is 2g x 2g in the basis (x^1..x^g, y^1..y^g), acting on
// column vectors; it must satisfy sigma^T J sigma = J exactly.
inline Lie<Rat> applySymplectic(const StrandSet& s,
                                const std::vector<std::vector<Rat>>& sigma,
                                const Lie<Rat>& e, int D) {
  const int g = s.g;
  const int m = 2 * g;
  if (static_cast<int>(sigma.size()) != m)
    throw Error("symplectic matrix has wrong size");
  for (const auto& row : sigma)
    if (static_cast<int>(row.size()) != m)
      throw Error("symplectic matrix has wrong size");
  // J = [[0, I], [-I, 0]]; check sigma^T J sigma = J.
  auto J = [&](int r, int c) -> Rat {
    if (r < g && c == r + g) return Rat(1);
    if (r >= g && c == r - g) return Rat(-1);
    return Rat(0);
  };
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      Rat v(0);
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
          v += sigma[static_cast<size_t>(p)][static_cast<size_t>(r)] *
               J(p, q) * sigma[static_cast<size_t>(q)][static_cast<size_t>(c)];
      if (v != J(r, c)) throw Error("matrix is not symplectic");
    }

  AlphabetPtr sa = strandAlphabet(s);
  checkSameContext(sa, e.alphabet());
  std::vector<Lie<Rat>> images(static_cast<size_t>(sa->size()),
                               Lie<Rat>(sa, D));
  for (int id = 0; id < sa->size(); ++id)
    images[static_cast<size_t>(id)] = Lie<Rat>::gen(sa, D, id);
  for (size_t i = 0; i < s.labels.size(); ++i) {
    const std::string& l = s.labels[i];
    for (int a = 1; a <= g; ++a) {
      // columns a-1 (x^a) and g+a-1 (y^a) of sigma give the images
      for (int col : {a - 1, g + a - 1}) {
        Lie<Rat> v(sa, D);
        for (int b = 1; b <= g; ++b) {
          v += Lie<Rat>::gen(sa, D, sa->require(xName(l, b)))
                   .scaled(sigma[static_cast<size_t>(b - 1)]
                                [static_cast<size_t>(col)]);
          v += Lie<Rat>::gen(sa, D, sa->require(yName(l, b)))
                   .scaled(sigma[static_cast<size_t>(g + b - 1)]
                                [static_cast<size_t>(col)]);
        }
        int id = sa->require(col < g ? xName(l, col + 1)
                                     : yName(l, col - g + 1));
        images[static_cast<size_t>(id)] = v;
      }
    }
  }
  FreeLieOps<Rat> ops{sa, D};
  LieEvaluator<Lie<Rat>, FreeLieOps<Rat>> ev(lyndonSystem(sa, D),
                                             std::move(images), ops);
  return ev.eval(e);
}

// Rescaling automorphism: x -> lambda x, y -> lambda y, t -> lambda^2 t;
// equivalently each weight-d component scales by lambda^d.
template <class K>
Lie<K> rescale(const K& lambda, const Lie<K>& e) {
  Lie<K> r(e.alphabet(), e.degree());
  for (const auto& [w, c] : e.terms()) {
    K f(1);
    for (int d = 0; d < wordWeight(*e.alphabet(), w); ++d) f *= lambda;
    r.add(w, c * f);
  }
  return r;
}

}  // namespace dk
