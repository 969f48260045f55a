#pragma once
// Tangential derivations and automorphisms of the free Lie algebra on
// x_i, y_i (weight 1) and z_j (weight 2), the special elements xi, omega,
// r-bold and p^fr, the divergence 1-cocycles and their integrations, the
// KV / KRV / SolKV equation checkers, and the word-expansion plumbing.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dk/cyclic.hpp"
#include "dk/gt.hpp"  // convertTensor / wordTensor helpers
#include "dk/lie.hpp"
#include "dk/rowspace.hpp"
#include "dk/series.hpp"
#include "dk/tensor.hpp"

namespace dk {

struct KvContext {
  int g = 0, n = 0, D = 0;
  AlphabetPtr alpha;
  std::vector<int> xs, ys, zs;  // letter ids
  Lie<Rat> omega;               // sum_i [x_i,y_i] + sum_j z_j
  Lie<Rat> xi;                  // log prod_i (e^x e^y e^-x e^-y) prod_j e^z
  Cyclic<Rat> rBold;            // sum_i |r(x_i) + r(y_i)|
};

inline KvContext makeKv(int g, int n, int D) {
  KvContext c;
  c.g = g;
  c.n = n;
  c.D = D;
  auto a = std::make_shared<Alphabet>();
  for (int i = 1; i <= g; ++i)
    c.xs.push_back(a->add({"x[" + std::to_string(i) + "]", Role::X, 1}));
  for (int i = 1; i <= g; ++i)
    c.ys.push_back(a->add({"y[" + std::to_string(i) + "]", Role::Y, 1}));
  for (int j = 1; j <= n; ++j)
    c.zs.push_back(a->add({"z[" + std::to_string(j) + "]", Role::Z, 2}));
  c.alpha = a;

  c.omega = Lie<Rat>(c.alpha, D);
  for (int i = 0; i < g; ++i)
    c.omega += bracket(Lie<Rat>::gen(c.alpha, D, c.xs[i]),
                       Lie<Rat>::gen(c.alpha, D, c.ys[i]));
  for (int j = 0; j < n; ++j) c.omega += Lie<Rat>::gen(c.alpha, D, c.zs[j]);

  Tensor<Rat> p = Tensor<Rat>::constant(c.alpha, D, Rat(1));
  for (int i = 0; i < g; ++i) {
    Tensor<Rat> ex = Tensor<Rat>::gen(c.alpha, D, c.xs[i]).exp();
    Tensor<Rat> ey = Tensor<Rat>::gen(c.alpha, D, c.ys[i]).exp();
    Tensor<Rat> exi = (-Tensor<Rat>::gen(c.alpha, D, c.xs[i])).exp();
    Tensor<Rat> eyi = (-Tensor<Rat>::gen(c.alpha, D, c.ys[i])).exp();
    p = p * ex * ey * exi * eyi;
  }
  for (int j = 0; j < n; ++j)
    p = p * Tensor<Rat>::gen(c.alpha, D, c.zs[j]).exp();
  c.xi = Lie<Rat>::fromTensor(p.log());

  ScalarSeries r = rSeries(D);
  Tensor<Rat> rsum(c.alpha, D);
  for (int i = 0; i < g; ++i) {
    rsum += substituteSeries(r, Tensor<Rat>::gen(c.alpha, D, c.xs[i]));
    rsum += substituteSeries(r, Tensor<Rat>::gen(c.alpha, D, c.ys[i]));
  }
  c.rBold = traceProject(rsum);
  return c;
}

// Framing data: rotation numbers of the generating system.
struct FramingData {
  std::vector<Rat> a, b;  // size g
  std::vector<Rat> c;     // size n
};

inline void checkFraming(const KvContext& ctx, const FramingData& fr) {
  if (static_cast<int>(fr.a.size()) != ctx.g ||
      static_cast<int>(fr.b.size()) != ctx.g ||
      static_cast<int>(fr.c.size()) != ctx.n)
    throw Error("framing data size mismatch");
}

// p^fr = sum_i |a_i y_i - b_i x_i|.
inline Cyclic<Rat> pFr(const KvContext& ctx, const FramingData& fr) {
  checkFraming(ctx, fr);
  Cyclic<Rat> p(ctx.alpha, ctx.D);
  for (int i = 0; i < ctx.g; ++i) {
    p.add(Word{ctx.ys[i]}, fr.a[static_cast<size_t>(i)]);
    p.add(Word{ctx.xs[i]}, -fr.b[static_cast<size_t>(i)]);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Tangential derivations: values on x_i, y_i plus conjugators u_j with
// u(z_j) = [z_j, u_j].
// ---------------------------------------------------------------------------

struct TDer {
  std::vector<Lie<Rat>> ux, uy, conj;
  bool isZero() const {
    for (const auto& v : ux)
      if (!v.isZero()) return false;
    for (const auto& v : uy)
      if (!v.isZero()) return false;
    for (const auto& v : conj)
      if (!v.isZero()) return false;
    return true;
  }
};

inline TDer zeroTDer(const KvContext& ctx) {
  TDer u;
  u.ux.assign(static_cast<size_t>(ctx.g), Lie<Rat>(ctx.alpha, ctx.D));
  u.uy.assign(static_cast<size_t>(ctx.g), Lie<Rat>(ctx.alpha, ctx.D));
  u.conj.assign(static_cast<size_t>(ctx.n), Lie<Rat>(ctx.alpha, ctx.D));
  return u;
}

inline TDer makeTDer(const KvContext& ctx, std::vector<Lie<Rat>> ux,
                     std::vector<Lie<Rat>> uy, std::vector<Lie<Rat>> conj) {
  if (static_cast<int>(ux.size()) != ctx.g ||
      static_cast<int>(uy.size()) != ctx.g ||
      static_cast<int>(conj.size()) != ctx.n)
    throw Error("tangential derivation size mismatch");
  for (const auto& v : ux)
    if (!v.isZero() && v.minWeight() < 2)
      throw Error("tangential derivation must raise weight");
  for (const auto& v : uy)
    if (!v.isZero() && v.minWeight() < 2)
      throw Error("tangential derivation must raise weight");
  for (const auto& v : conj)
    if (!v.isZero() && v.minWeight() < 1)
      throw Error("conjugator with constant term");
  return TDer{std::move(ux), std::move(uy), std::move(conj)};
}

inline Lie<Rat> letterValue(const KvContext& ctx, const TDer& u, int letter) {
  for (int i = 0; i < ctx.g; ++i) {
    if (letter == ctx.xs[i]) return u.ux[static_cast<size_t>(i)];
    if (letter == ctx.ys[i]) return u.uy[static_cast<size_t>(i)];
  }
  for (int j = 0; j < ctx.n; ++j)
    if (letter == ctx.zs[j])
      return bracket(Lie<Rat>::gen(ctx.alpha, ctx.D, letter),
                     u.conj[static_cast<size_t>(j)]);
  throw Error("unknown letter in derivation evaluation");
}

// Application of the derivation to Lie elements (by the standard-bracketing
// recursion), tensors (Leibniz over letters) and traces.
class Derivation {
 public:
  Derivation(const KvContext& ctx, TDer u)
      : ctx_(&ctx), u_(std::move(u)), sys_(lyndonSystem(ctx.alpha, ctx.D)) {}

  const TDer& data() const { return u_; }

  Lie<Rat> apply(const Lie<Rat>& a) {
    Lie<Rat> r(ctx_->alpha, ctx_->D);
    for (const auto& [w, c] : a.terms()) r += evalWord(w).scaled(c);
    return r;
  }
  Tensor<Rat> apply(const Tensor<Rat>& a) {
    Tensor<Rat> r(ctx_->alpha, ctx_->D);
    for (const auto& [w, c] : a.terms()) {
      for (size_t i = 0; i < w.size(); ++i) {
        Word pre(w.begin(), w.begin() + static_cast<long>(i));
        Word post(w.begin() + static_cast<long>(i) + 1, w.end());
        r += wordTensor<Rat>(ctx_->alpha, ctx_->D, pre, c) *
             letterValue(*ctx_, u_, w[i]).toTensor() *
             wordTensor<Rat>(ctx_->alpha, ctx_->D, post);
      }
    }
    return r;
  }
  Cyclic<Rat> apply(const Cyclic<Rat>& a) {
    Tensor<Rat> rep(ctx_->alpha, ctx_->D);
    for (const auto& [w, c] : a.terms()) rep.add(w, c);
    return traceProject(apply(rep));
  }

 private:
  const Lie<Rat>& evalWord(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    Lie<Rat> v(ctx_->alpha, ctx_->D);
    if (w.size() == 1) {
      v = letterValue(*ctx_, u_, w[0]);
    } else {
      auto [a, b] = sys_->stdFactor(w);
      Lie<Rat> la(ctx_->alpha, ctx_->D), lb(ctx_->alpha, ctx_->D);
      la.add(a, Rat(1));
      lb.add(b, Rat(1));
      v = bracket(evalWord(a), lb) + bracket(la, evalWord(b));
    }
    return memo_.emplace(w, std::move(v)).first->second;
  }

  const KvContext* ctx_;
  TDer u_;
  LyndonSystemPtr sys_;
  std::map<Word, Lie<Rat>> memo_;
};

inline TDer tderAdd(const KvContext& ctx, const TDer& u, const TDer& v,
                    const Rat& s = Rat(1)) {
  TDer r = u;
  for (int i = 0; i < ctx.g; ++i) {
    r.ux[static_cast<size_t>(i)] += v.ux[static_cast<size_t>(i)].scaled(s);
    r.uy[static_cast<size_t>(i)] += v.uy[static_cast<size_t>(i)].scaled(s);
  }
  for (int j = 0; j < ctx.n; ++j)
    r.conj[static_cast<size_t>(j)] += v.conj[static_cast<size_t>(j)].scaled(s);
  return r;
}

inline TDer tderScale(const KvContext& ctx, const TDer& u, const Rat& s) {
  return tderAdd(ctx, zeroTDer(ctx), u, s);
}

// Bracket of tangential derivations; the conjugator of [u,v] is
// u(v_j) - v(u_j) + [u_j, v_j], which makes [u,v](z_j) = [z_j, .] hold.
inline TDer tderBracket(const KvContext& ctx, const TDer& u, const TDer& v) {
  Derivation du(ctx, u), dv(ctx, v);
  TDer r = zeroTDer(ctx);
  for (int i = 0; i < ctx.g; ++i) {
    r.ux[static_cast<size_t>(i)] = du.apply(v.ux[static_cast<size_t>(i)]) -
                                   dv.apply(u.ux[static_cast<size_t>(i)]);
    r.uy[static_cast<size_t>(i)] = du.apply(v.uy[static_cast<size_t>(i)]) -
                                   dv.apply(u.uy[static_cast<size_t>(i)]);
  }
  for (int j = 0; j < ctx.n; ++j)
    r.conj[static_cast<size_t>(j)] =
        du.apply(v.conj[static_cast<size_t>(j)]) -
        dv.apply(u.conj[static_cast<size_t>(j)]) +
        bracket(u.conj[static_cast<size_t>(j)], v.conj[static_cast<size_t>(j)]);
  return r;
}

struct TDerOps {
  const KvContext* ctx;
  using Elt = TDer;
  Elt zero() const { return zeroTDer(*ctx); }
  Elt bracket(const Elt& a, const Elt& b) const { return tderBracket(*ctx, a, b); }
  void axpy(Elt& acc, const Rat& c, const Elt& x) const {
    acc = tderAdd(*ctx, acc, x, c);
  }
};

// ---------------------------------------------------------------------------
// Tangential automorphisms, stored by logarithm.
// ---------------------------------------------------------------------------

struct TAut {
  TDer logu;
};

inline TAut tautExp(const TDer& u) { return TAut{u}; }
inline const TDer& tautLog(const TAut& G) { return G.logu; }
inline TAut tautIdentity(const KvContext& ctx) { return TAut{zeroTDer(ctx)}; }
inline TAut tautInverse(const KvContext& ctx, const TAut& G) {
  return TAut{tderScale(ctx, G.logu, Rat(-1))};
}
inline TAut tautCompose(const KvContext& ctx, const TAut& G, const TAut& H) {
  TDerOps ops{&ctx};
  return TAut{bchEval(G.logu, H.logu, ctx.D, ops)};
}

template <class Elt>
Elt tautApplyImpl(const KvContext& ctx, const TAut& G, Elt a) {
  Derivation d(ctx, G.logu);
  Elt r = a;
  Rat f = 1;
  for (int k = 1; k <= ctx.D; ++k) {
    a = d.apply(a);
    if (a.isZero()) break;
    f *= k;
    r += a.scaled(Rat(1) / f);
  }
  return r;
}
inline Lie<Rat> tautApply(const KvContext& ctx, const TAut& G, const Lie<Rat>& a) {
  return tautApplyImpl(ctx, G, a);
}
inline Tensor<Rat> tautApply(const KvContext& ctx, const TAut& G, const Tensor<Rat>& a) {
  return tautApplyImpl(ctx, G, a);
}
inline Cyclic<Rat> tautApply(const KvContext& ctx, const TAut& G, const Cyclic<Rat>& a) {
  return tautApplyImpl(ctx, G, a);
}

// The inner automorphism Ad_{e^{lambda omega}}: the derivation is
// ad_{lambda omega} on every generator, with conjugators -lambda omega.
inline TAut adExpOmega(const KvContext& ctx, const Rat& lambda) {
  TDer u = zeroTDer(ctx);
  Lie<Rat> lo = ctx.omega.scaled(lambda);
  for (int i = 0; i < ctx.g; ++i) {
    u.ux[static_cast<size_t>(i)] =
        bracket(lo, Lie<Rat>::gen(ctx.alpha, ctx.D, ctx.xs[i]));
    u.uy[static_cast<size_t>(i)] =
        bracket(lo, Lie<Rat>::gen(ctx.alpha, ctx.D, ctx.ys[i]));
  }
  for (int j = 0; j < ctx.n; ++j) u.conj[static_cast<size_t>(j)] = -lo;
  return TAut{u};
}

// ---------------------------------------------------------------------------
// Divergence cocycles and integration.
// ---------------------------------------------------------------------------

// d_w: the 1-cocycle with d_w(w') = delta_{ww'} on generators and
// d_w([a,b]) = a d_w(b) - b d_w(a), values in the tensor algebra.
class DCocycle {
 public:
  explicit DCocycle(const KvContext& ctx)
      : ctx_(&ctx), sys_(lyndonSystem(ctx.alpha, ctx.D)) {}

  Tensor<Rat> operator()(int letter, const Lie<Rat>& a) {
    Tensor<Rat> r(ctx_->alpha, ctx_->D);
    for (const auto& [w, c] : a.terms()) r += word(letter, w).scaled(c);
    return r;
  }

 private:
  const Tensor<Rat>& word(int letter, const Word& w) {
    auto key = std::make_pair(letter, w);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Tensor<Rat> v(ctx_->alpha, ctx_->D);
    if (w.size() == 1) {
      if (w[0] == letter) v.add(Word{}, Rat(1));
    } else {
      auto [a, b] = sys_->stdFactor(w);
      Lie<Rat> la(ctx_->alpha, ctx_->D), lb(ctx_->alpha, ctx_->D);
      la.add(a, Rat(1));
      lb.add(b, Rat(1));
      v = la.toTensor() * word(letter, b) - lb.toTensor() * word(letter, a);
    }
    return memo_.emplace(key, std::move(v)).first->second;
  }

  const KvContext* ctx_;
  LyndonSystemPtr sys_;
  std::map<std::pair<int, Word>, Tensor<Rat>> memo_;
};

// Single divergence sdiv_{x,y,z}(u) = sum_w |d_w u(w)|.
inline Cyclic<Rat> sdivXyz(const KvContext& ctx, const TDer& u) {
  DCocycle d(ctx);
  Cyclic<Rat> r(ctx.alpha, ctx.D);
  std::vector<int> letters;
  letters.insert(letters.end(), ctx.xs.begin(), ctx.xs.end());
  letters.insert(letters.end(), ctx.ys.begin(), ctx.ys.end());
  letters.insert(letters.end(), ctx.zs.begin(), ctx.zs.end());
  for (int w : letters) r += traceProject(d(w, letterValue(ctx, u, w)));
  return r;
}

// Integration of a linear 1-cocycle psi: Psi(e^u) = (e^u - 1)/u . psi(u),
// with u acting on the trace space through the derivation.
template <class Psi>
Cyclic<Rat> integrateCocycle(const KvContext& ctx, const Psi& psi, const TDer& u) {
  Cyclic<Rat> val = psi(u);
  Derivation d(ctx, u);
  Cyclic<Rat> r = val;
  Rat f = 1;
  for (int k = 1; k <= ctx.D; ++k) {
    val = d.apply(val);
    if (val.isZero()) break;
    f *= (k + 1);
    r += val.scaled(Rat(1) / f);
  }
  return r;
}

// b^fr(u~) = sum_j c_j |u_j| and the framed divergences.
inline Cyclic<Rat> bFr(const KvContext& ctx, const FramingData& fr, const TDer& u) {
  checkFraming(ctx, fr);
  Cyclic<Rat> r(ctx.alpha, ctx.D);
  for (int j = 0; j < ctx.n; ++j)
    r += traceProject(u.conj[static_cast<size_t>(j)].toTensor())
             .scaled(fr.c[static_cast<size_t>(j)]);
  return r;
}

inline Cyclic<Rat> sdivFrGr(const KvContext& ctx, const FramingData& fr,
                            const TDer& u) {
  return sdivXyz(ctx, u) - bFr(ctx, fr, u);
}

inline Cyclic<Rat> sdivFr(const KvContext& ctx, const FramingData& fr,
                          const TDer& u) {
  Derivation d(ctx, u);
  return sdivFrGr(ctx, fr, u) + d.apply(ctx.rBold - pFr(ctx, fr));
}

inline Cyclic<Rat> jXyz(const KvContext& ctx, const TAut& G) {
  return integrateCocycle(
      ctx, [&](const TDer& u) { return sdivXyz(ctx, u); }, G.logu);
}
inline Cyclic<Rat> cFr(const KvContext& ctx, const FramingData& fr, const TAut& G) {
  return integrateCocycle(
      ctx, [&](const TDer& u) { return bFr(ctx, fr, u); }, G.logu);
}
inline Cyclic<Rat> jFr(const KvContext& ctx, const FramingData& fr, const TAut& G) {
  return integrateCocycle(
      ctx, [&](const TDer& u) { return sdivFr(ctx, fr, u); }, G.logu);
}
inline Cyclic<Rat> jFrGr(const KvContext& ctx, const FramingData& fr, const TAut& G) {
  return integrateCocycle(
      ctx, [&](const TDer& u) { return sdivFrGr(ctx, fr, u); }, G.logu);
}

// ---------------------------------------------------------------------------
// Subspace membership in the trace space.
// ---------------------------------------------------------------------------

// Exact span of a finite list of trace vectors, with membership queries over
// necklace coordinates (inhomogeneous vectors allowed).
class TraceSpan {
 public:
  void addSpanning(const Cyclic<Rat>& v) { rows_.insert(rowOf(v)); }
  bool contains(const Cyclic<Rat>& v) const {
    RowSpace::Row r;
    for (const auto& [w, c] : v.terms()) {
      auto it = cols_.find(w);
      if (it == cols_.end()) return false;  // direction outside the span
      r.emplace(it->second, c);
    }
    return rows_.contains(std::move(r));
  }

 private:
  RowSpace::Row rowOf(const Cyclic<Rat>& v) {
    RowSpace::Row r;
    for (const auto& [w, c] : v.terms()) {
      auto it = cols_.find(w);
      if (it == cols_.end())
        it = cols_.emplace(w, static_cast<int>(cols_.size())).first;
      r.emplace(it->second, c);
    }
    return r;
  }

  std::map<Word, int> cols_;
  RowSpace rows_;
};

// | sum_j z_j K[[z_j]] + center^2 K[[center]] |, spanned by the truncations
// of |z_j^k| (k >= 1) and |center^m| (m >= 2).
inline TraceSpan kvSubspace(const KvContext& ctx, const Lie<Rat>& center) {
  TraceSpan s;
  for (int j = 0; j < ctx.n; ++j) {
    Tensor<Rat> z = Tensor<Rat>::gen(ctx.alpha, ctx.D, ctx.zs[j]);
    Tensor<Rat> p = z;
    for (int k = 1; 2 * k <= ctx.D; ++k) {
      s.addSpanning(traceProject(p));
      p = p * z;
    }
  }
  Tensor<Rat> ct = center.toTensor();
  Tensor<Rat> p = ct * ct;
  for (int m = 2; 2 * m <= ctx.D; ++m) {
    s.addSpanning(traceProject(p));
    p = p * ct;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Equation checkers.
// ---------------------------------------------------------------------------

struct KvReport {
  std::string equation;
  Lie<Rat> residue;      // first-equation defect
  Cyclic<Rat> cocycle;   // the value whose membership is tested
  bool residueZero = false;
  bool member = false;
  bool ok() const { return residueZero && member; }
  std::vector<std::string> failures() const {
    std::vector<std::string> f;
    if (!residueZero)
      f.push_back(equation + ": fixed-point residue " + residue.toString());
    if (!member)
      f.push_back(equation + ": cocycle " + cocycle.toString() +
                  " outside the admissible subspace");
    return f;
  }
};

inline KvReport checkKV(const KvContext& ctx, const FramingData& fr, const TAut& G) {
  KvReport r;
  r.equation = "KV";
  r.residue = tautApply(ctx, G, ctx.xi) - ctx.xi;
  r.residueZero = r.residue.isZero();
  r.cocycle = jFr(ctx, fr, G);
  r.member = kvSubspace(ctx, ctx.xi).contains(r.cocycle);
  return r;
}

inline KvReport checkKRV(const KvContext& ctx, const FramingData& fr, const TAut& G) {
  KvReport r;
  r.equation = "KRV";
  r.residue = tautApply(ctx, G, ctx.omega) - ctx.omega;
  r.residueZero = r.residue.isZero();
  r.cocycle = jFrGr(ctx, fr, G);
  r.member = kvSubspace(ctx, ctx.omega).contains(r.cocycle);
  return r;
}

inline KvReport checkSolKV(const KvContext& ctx, const FramingData& fr, const TAut& G) {
  KvReport r;
  r.equation = "SolKV";
  r.residue = tautApply(ctx, G, ctx.omega) - ctx.xi;
  r.residueZero = r.residue.isZero();
  r.cocycle = jFrGr(ctx, fr, G) - ctx.rBold + pFr(ctx, fr);
  r.member = kvSubspace(ctx, ctx.xi).contains(r.cocycle);
  return r;
}

// ---------------------------------------------------------------------------
// Word expansions.
// ---------------------------------------------------------------------------

// Free-group words over tokens a<i>, b<i>, g<j>; capital letters denote
// inverses.  theta_exp maps a_i -> e^{x_i}, b_i -> e^{y_i}, g_j -> e^{z_j}.
inline Tensor<Rat> thetaExp(const KvContext& ctx, const std::vector<std::string>& word) {
  Tensor<Rat> p = Tensor<Rat>::constant(ctx.alpha, ctx.D, Rat(1));
  for (const std::string& tok : word) {
    if (tok.size() < 2) throw Error("malformed word token " + tok);
    char kind = tok[0];
    bool inv = (kind >= 'A' && kind <= 'Z');
    char low = inv ? static_cast<char>(kind - 'A' + 'a') : kind;
    int idx = std::stoi(tok.substr(1)) - 1;
    const std::vector<int>* fam = nullptr;
    if (low == 'a') fam = &ctx.xs;
    else if (low == 'b') fam = &ctx.ys;
    else if (low == 'g') fam = &ctx.zs;
    else throw Error("unknown word letter " + tok);
    if (idx < 0 || idx >= static_cast<int>(fam->size()))
      throw Error("word letter index out of range: " + tok);
    Tensor<Rat> l = Tensor<Rat>::gen(ctx.alpha, ctx.D, (*fam)[static_cast<size_t>(idx)]);
    p = p * (inv ? (-l).exp() : l.exp());
  }
  return p;
}

// The boundary word prod_i a_i b_i a_i^-1 b_i^-1 prod_j g_j.
inline std::vector<std::string> boundaryWord(const KvContext& ctx) {
  std::vector<std::string> w;
  for (int i = 1; i <= ctx.g; ++i) {
    std::string s = std::to_string(i);
    w.push_back("a" + s);
    w.push_back("b" + s);
    w.push_back("A" + s);
    w.push_back("B" + s);
  }
  for (int j = 1; j <= ctx.n; ++j) w.push_back("g" + std::to_string(j));
  return w;
}

// The expansion induced by a tangential automorphism: G^{-1} o theta_exp.
inline Tensor<Rat> expansionApply(const KvContext& ctx, const TAut& G,
                                  const std::vector<std::string>& word) {
  return tautApply(ctx, tautInverse(ctx, G), thetaExp(ctx, word));
}

// An expansion is special when it sends the boundary loop to exp(omega).
inline bool checkSpecial(const KvContext& ctx, const TAut& G) {
  Tensor<Rat> v = expansionApply(ctx, G, boundaryWord(ctx));
  return v.log() == ctx.omega.toTensor();
}

inline Lie<Rat> specialResidue(const KvContext& ctx, const TAut& G) {
  Tensor<Rat> v = expansionApply(ctx, G, boundaryWord(ctx));
  return Lie<Rat>::fromTensor(v.log()) - ctx.omega;
}

}  // namespace dk
