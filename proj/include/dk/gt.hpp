#pragma once
// Graded Goldman-Turaev operations on the truncated enveloping algebra of the
// free Lie algebra on H = span{x^a, y^a (weight 1), t_j (weight 2)}, and on
// its central extension by one weight-2 symbol c ("extended" algebra below):
// the distinguished Fox pairing (diamond), the quasi-derivation xi, the inner
// Fox derivations rho_e, the one-sided quasi-derivations q_{e1,e2}, their
// combinations E and N, the bracket/cobracket constructions on group-like
// elements, and the four-term cobracket expression used by the trace-space
// identities.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "dk/cyclic.hpp"
#include "dk/lie.hpp"
#include "dk/series.hpp"
#include "dk/tensor.hpp"

namespace dk {

template <class K>
Tensor<K> convertTensor(const Tensor<Rat>& t) {
  Tensor<K> r(t.alphabet(), t.degree());
  for (const auto& [w, c] : t.terms()) r.add(w, K(c));
  return r;
}

// Single word as a tensor.
template <class K>
Tensor<K> wordTensor(const AlphabetPtr& alpha, int D, const Word& w,
                     const K& c = K(1)) {
  Tensor<K> r(alpha, D);
  r.add(w, c);
  return r;
}

struct GtContext {
  int g = 0, n = 0, D = 0;
  AlphabetPtr base;  // x[a], y[a] (weight 1), t[j] (weight 2)
  AlphabetPtr ext;   // base plus the central weight-2 symbol c[]
  int center = -1;   // id of c[] in ext; base ids coincide with ext ids
  Tensor<Rat> omega;   // sum_a [x^a,y^a] + sum_j t_j, in the base algebra
  Tensor<Rat> sOmega;  // s-series evaluated at omega, truncated
};

inline GtContext makeGt(int g, int n, int D) {
  GtContext c;
  c.g = g;
  c.n = n;
  c.D = D;
  auto b = std::make_shared<Alphabet>();
  for (int a = 1; a <= g; ++a) b->add({"x[" + std::to_string(a) + "]", Role::X, 1});
  for (int a = 1; a <= g; ++a) b->add({"y[" + std::to_string(a) + "]", Role::Y, 1});
  for (int j = 1; j <= n; ++j) b->add({"t[" + std::to_string(j) + "]", Role::T, 2});
  auto e = std::make_shared<Alphabet>(*b);
  c.center = e->add({"c[]", Role::Center, 2});
  c.base = b;
  c.ext = e;
  c.omega = Tensor<Rat>(c.base, D);
  for (int a = 1; a <= g; ++a) {
    Word xw{c.base->require("x[" + std::to_string(a) + "]")};
    Word yw{c.base->require("y[" + std::to_string(a) + "]")};
    Tensor<Rat> x = wordTensor<Rat>(c.base, D, xw);
    Tensor<Rat> y = wordTensor<Rat>(c.base, D, yw);
    c.omega += x * y - y * x;
  }
  for (int j = 1; j <= n; ++j)
    c.omega += Tensor<Rat>::gen(c.base, D, c.base->require("t[" + std::to_string(j) + "]"));
  c.sOmega = substituteSeries(sSeries(D), c.omega);
  return c;
}

// Inclusion U(L(H)) -> extended and projection back (c |-> 0).
template <class K>
Tensor<K> inclExt(const GtContext& ctx, const Tensor<K>& a) {
  checkSameContext(ctx.base, a.alphabet());
  Tensor<K> r(ctx.ext, a.degree());
  for (const auto& [w, c] : a.terms()) r.add(w, c);
  return r;
}
template <class K>
Tensor<K> projBase(const GtContext& ctx, const Tensor<K>& a) {
  checkSameContext(ctx.ext, a.alphabet());
  Tensor<K> r(ctx.base, a.degree());
  for (const auto& [w, c] : a.terms()) {
    if (std::find(w.begin(), w.end(), ctx.center) != w.end()) continue;
    r.add(w, c);
  }
  return r;
}

// The pairing on letters: x^a (.) y^a = 1, y^a (.) x^a = -1,
// t_j (.) t_j = -t_j, everything else 0.
template <class K>
Tensor<K> diamondLetter(const GtContext& ctx, int i, int j) {
  Tensor<K> r(ctx.base, ctx.D);
  const Symbol& a = (*ctx.base)[i];
  const Symbol& b = (*ctx.base)[j];
  auto idx = [](const std::string& nm) {
    return nm.substr(2, nm.size() - 3);  // the "..." of "x[...]"
  };
  if (a.role == Role::X && b.role == Role::Y && idx(a.name) == idx(b.name))
    r.add(Word{}, K(1));
  else if (a.role == Role::Y && b.role == Role::X && idx(a.name) == idx(b.name))
    r.add(Word{}, K(-1));
  else if (a.role == Role::T && b.role == Role::T && i == j)
    r.add(Word{j}, K(-1));
  return r;
}

// Fox pairing extension to words and tensors: on nonempty words
//   eta(a_1...a_m, b_1...b_k) = a_1...a_{m-1} (a_m (.) b_1) b_2...b_k,
// zero when either word is empty; bilinear otherwise.
template <class K>
Tensor<K> diamond(const GtContext& ctx, const Tensor<K>& a, const Tensor<K>& b) {
  checkSameContext(ctx.base, a.alphabet());
  checkSameContext(ctx.base, b.alphabet());
  Tensor<K> r(ctx.base, ctx.D);
  for (const auto& [wa, ca] : a.terms()) {
    if (wa.empty()) continue;
    for (const auto& [wb, cb] : b.terms()) {
      if (wb.empty()) continue;
      Tensor<K> mid = diamondLetter<K>(ctx, wa.back(), wb.front());
      if (mid.isZero()) continue;
      Word pre(wa.begin(), wa.end() - 1);
      Word post(wb.begin() + 1, wb.end());
      r += wordTensor<K>(ctx.base, ctx.D, pre, ca * cb) * mid *
           wordTensor<K>(ctx.base, ctx.D, post);
    }
  }
  return r;
}

// The quasi-derivation xi on the extended algebra, defined on a word
// z_1...z_r c^s (the central letter commutes, so every word normalizes to
// this shape) by the four-case formula; linear extension.
template <class K>
Tensor<K> xiQd(const GtContext& ctx, const Tensor<K>& a) {
  checkSameContext(ctx.ext, a.alphabet());
  Tensor<K> r(ctx.base, ctx.D);
  for (const auto& [w, c] : a.terms()) {
    Word z;
    int s = 0;
    for (int l : w) (l == ctx.center ? (void)++s : z.push_back(l));
    if (s == 0) {
      for (size_t i = 0; i + 1 < z.size(); ++i) {
        Tensor<K> mid = diamondLetter<K>(ctx, z[i], z[i + 1]);
        if (mid.isZero()) continue;
        Word pre(z.begin(), z.begin() + static_cast<long>(i));
        Word post(z.begin() + static_cast<long>(i) + 2, z.end());
        r += wordTensor<K>(ctx.base, ctx.D, pre, c) * mid *
             wordTensor<K>(ctx.base, ctx.D, post);
      }
    } else if (s == 1) {
      r.add(z, K(-2) * c);
    }  // s > 1: zero
  }
  return r;
}

// Inner Fox derivation rho_e(a, b) = (a - eps(a)) e (b - eps(b)).
template <class K>
Tensor<K> rho(const Tensor<K>& e, const Tensor<K>& a, const Tensor<K>& b) {
  Tensor<K> one = Tensor<K>::constant(a.alphabet(), a.degree(), K(1));
  return (a - one.scaled(a.augmentation())) * e *
         (b - one.scaled(b.augmentation()));
}

// Quasi-derivation q_{e1,e2} on the extended algebra, ruled by rho_{e1+e2}:
//   q(v) = (eps(x) - x) e1 + e2 (eps(x) - x), x the projection of v.
template <class K>
Tensor<K> qMap(const GtContext& ctx, const Tensor<K>& e1, const Tensor<K>& e2,
               const Tensor<K>& v) {
  Tensor<K> x = projBase(ctx, v);
  Tensor<K> d = Tensor<K>::constant(ctx.base, x.degree(), x.augmentation()) - x;
  return d * e1 + e2 * d;
}

// E = diamond + rho_{s(omega)}.
template <class K>
Tensor<K> evalE(const GtContext& ctx, const Tensor<K>& a, const Tensor<K>& b) {
  return diamond(ctx, a, b) + rho(convertTensor<K>(ctx.sOmega), a, b);
}

// A constant phi is admissible iff phi - S(phi) = 1/2 + s(omega) at
// truncation; the default choice is half of the right-hand side (which is odd
// in the primitive omega, so the antipode negates it).
struct PhiConstant {
  Tensor<Rat> phi;
};

inline Tensor<Rat> phiInvariantRhs(const GtContext& ctx) {
  return Tensor<Rat>::constant(ctx.base, ctx.D, Rat(1, 2)) + ctx.sOmega;
}

inline PhiConstant makePhi(const GtContext& ctx, Tensor<Rat> phi) {
  checkSameContext(ctx.base, phi.alphabet());
  if (phi - phi.antipode() != phiInvariantRhs(ctx))
    throw Error("phi does not satisfy phi - S(phi) = 1/2 + s(omega)");
  return PhiConstant{std::move(phi)};
}

inline PhiConstant defaultPhi(const GtContext& ctx) {
  return makePhi(ctx, phiInvariantRhs(ctx).scaled(Rat(1, 2)));
}

// N = xi + q_{phi, -S(phi) - 1/2}; a quasi-derivation ruled by E.
template <class K>
Tensor<K> evalN(const GtContext& ctx, const PhiConstant& phi, const Tensor<K>& v) {
  Tensor<K> p = convertTensor<K>(phi.phi);
  Tensor<K> e2 = -p.antipode() - Tensor<K>::constant(ctx.base, ctx.D, K(Rat(1, 2)));
  return xiQd(ctx, v) + qMap(ctx, p, e2, v);
}

// kappa(alpha, beta) = beta S(h') alpha (x) h'' with h = eta(alpha, beta) and
// Delta(h) = h' (x) h''; on group elements, where h is a combination of
// group-likes, this is the classical beta S(h) alpha (x) h placed in both
// slots.  Defined on group-like arguments.
template <class K, class Pairing>
Tensor2<K> kappaGrouplike(const GtContext& ctx, const Pairing& eta,
                          const Tensor<K>& alpha, const Tensor<K>& beta) {
  if (!isGroupLike(alpha) || !isGroupLike(beta))
    throw Error("kappa requires group-like arguments");
  Tensor<K> h = eta(alpha, beta);
  Tensor2<K> r(ctx.base, ctx.D);
  Tensor2<K> dh = coproduct(h);
  for (const auto& [k, c] : dh.terms()) {
    Tensor<K> left =
        beta * wordTensor<K>(ctx.base, ctx.D, k.first).antipode() * alpha;
    for (const auto& [lw, lc] : left.terms()) r.add(lw, k.second, lc * c);
  }
  return r;
}

// Goldman-type bracket on traces: |mult kappa(alpha, beta)|.
template <class K, class Pairing>
Cyclic<K> goldmanBracket(const GtContext& ctx, const Pairing& eta,
                         const Tensor<K>& alpha, const Tensor<K>& beta) {
  return traceProject(kappaGrouplike(ctx, eta, alpha, beta).merge());
}

// Cobracket construction on a group-like element of the extended algebra:
//   alpha S(m') (x) m''  with m = N(v) and alpha the projection of v.
template <class K>
Tensor2<K> cobracketGrouplike(const GtContext& ctx, const PhiConstant& phi,
                              const Tensor<K>& v) {
  if (!isGroupLike(v)) throw Error("cobracket requires a group-like argument");
  Tensor<K> m = evalN(ctx, phi, v);
  Tensor<K> alpha = projBase(ctx, v);
  Tensor2<K> r(ctx.base, ctx.D);
  Tensor2<K> dm = coproduct(m);
  for (const auto& [k, c] : dm.terms()) {
    Tensor<K> left = alpha * wordTensor<K>(ctx.base, ctx.D, k.first).antipode();
    for (const auto& [lw, lc] : left.terms()) r.add(lw, k.second, lc * c);
  }
  return r;
}

// The four-term trace expression
//   |X S(e') (x) e'' + X e'' (x) S(e') - S(e') (x) e'' X - e'' (x) S(e') X|
// with Delta(e) = e' (x) e''.
template <class K>
Cyclic2<K> deltaQIncl(const Tensor<K>& e, const Tensor<K>& x) {
  checkSameContext(e.alphabet(), x.alphabet());
  Cyclic2<K> r(e.alphabet(), e.degree());
  Tensor2<K> de = coproduct(e);
  for (const auto& [k, c] : de.terms()) {
    Tensor<K> s1 = wordTensor<K>(e.alphabet(), e.degree(), k.first).antipode();
    Tensor<K> t2 = wordTensor<K>(e.alphabet(), e.degree(), k.second);
    r += traceBoth(Tensor2<K>::outer(x * s1, t2).scaled(c));
    r += traceBoth(Tensor2<K>::outer(x * t2, s1).scaled(c));
    r -= traceBoth(Tensor2<K>::outer(s1, t2 * x).scaled(c));
    r -= traceBoth(Tensor2<K>::outer(t2, s1 * x).scaled(c));
  }
  return r;
}

// |1 /\ X| = |1 (x) X - X (x) 1|.
template <class K>
Cyclic2<K> wedgeOne(const Tensor<K>& x) {
  Tensor<K> one = Tensor<K>::constant(x.alphabet(), x.degree(), K(1));
  return traceBoth(Tensor2<K>::outer(one, x)) -
         traceBoth(Tensor2<K>::outer(x, one));
}

}  // namespace dk
