#pragma once
// Scalar: exact coefficient ring used throughout — a multivariate polynomial
// over the rationals in named indeterminates.  Plain rationals are the
// constant polynomials (the common case, kept on a fast path).  The
// representation is canonical (sorted monomials, no zero terms), so equality
// is structural.

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "dk/rat.hpp"

namespace dk {

// A monomial: sorted (variable id, exponent>0) pairs.
using Mono = std::vector<std::pair<int, int>>;

namespace detail {
struct VarRegistry {
  std::mutex mu;
  std::map<std::string, int> byName;
  std::vector<std::string> names;
};
inline VarRegistry& varRegistry() {
  static VarRegistry r;
  return r;
}
}  // namespace detail

inline int varId(const std::string& name) {
  auto& reg = detail::varRegistry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto it = reg.byName.find(name);
  if (it != reg.byName.end()) return it->second;
  int id = static_cast<int>(reg.names.size());
  reg.names.push_back(name);
  reg.byName.emplace(name, id);
  return id;
}

inline const std::string& varName(int id) {
  auto& reg = detail::varRegistry();
  std::lock_guard<std::mutex> lock(reg.mu);
  return reg.names.at(static_cast<size_t>(id));
}

class Scalar {
 public:
  Scalar() : c_(0) {}
  Scalar(long v) : c_(v) {}  // NOLINT: implicit by design, mirrors Rat
  Scalar(const Rat& v) : c_(v) {}

  static Scalar var(const std::string& name) {
    Scalar s;
    s.terms_[Mono{{varId(name), 1}}] = 1;
    return s;
  }

  bool isZero() const { return c_ == 0 && terms_.empty(); }
  bool isConstant() const { return terms_.empty(); }
  const Rat& rat() const {
    if (!isConstant()) throw Error("Scalar::rat on non-constant polynomial");
    return c_;
  }
  const Rat& constantTerm() const { return c_; }
  const std::map<Mono, Rat>& terms() const { return terms_; }

  Scalar& operator+=(const Scalar& o) {
    c_ += o.c_;
    for (const auto& [m, r] : o.terms_) addTerm(m, r);
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    c_ -= o.c_;
    for (const auto& [m, r] : o.terms_) addTerm(m, -r);
    return *this;
  }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  Scalar operator-() const {
    Scalar r;
    r.c_ = -c_;
    for (const auto& [m, v] : terms_) r.terms_[m] = -v;
    return r;
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    r.c_ = a.c_ * b.c_;
    if (a.c_ != 0)
      for (const auto& [m, v] : b.terms_) r.addTerm(m, a.c_ * v);
    if (b.c_ != 0)
      for (const auto& [m, v] : a.terms_) r.addTerm(m, b.c_ * v);
    for (const auto& [ma, va] : a.terms_)
      for (const auto& [mb, vb] : b.terms_) r.addTerm(mulMono(ma, mb), va * vb);
    return r;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const {
    return c_ == o.c_ && terms_ == o.terms_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const {  // arbitrary total order (for maps)
    if (c_ != o.c_) return c_ < o.c_;
    return terms_ < o.terms_;
  }

  // Substitute rational values for the given variables.
  Scalar evalPartial(const std::map<int, Rat>& vals) const {
    Scalar r(c_);
    for (const auto& [m, v] : terms_) {
      Rat coeff = v;
      Mono rest;
      for (const auto& [var, exp] : m) {
        auto it = vals.find(var);
        if (it == vals.end()) {
          rest.emplace_back(var, exp);
        } else {
          for (int e = 0; e < exp; ++e) coeff *= it->second;
        }
      }
      if (coeff == 0) continue;
      if (rest.empty())
        r.c_ += coeff;
      else
        r.addTerm(rest, coeff);
    }
    return r;
  }

  // Primitive integer form with positive leading coefficient (leading =
  // first monomial in map order, or the constant if no monomials); used to
  // compare extracted equations up to scaling.
  Scalar canonicalized() const {
    if (isZero()) return Scalar();
    mpz_class denLcm = c_.get_den();
    mpz_class numGcd = abs(c_.get_num());
    for (const auto& [m, v] : terms_) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), denLcm.get_mpz_t(), v.get_den().get_mpz_t());
      denLcm = l;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), numGcd.get_mpz_t(), v.get_num().get_mpz_t());
      numGcd = abs(g);
    }
    Rat f(denLcm, numGcd == 0 ? 1 : numGcd);
    f.canonicalize();
    Rat lead = terms_.empty() ? c_ : terms_.begin()->second;
    if (lead * f < 0) f = -f;
    Scalar r;
    r.c_ = c_ * f;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * f;
    return r;
  }

  // Does any monomial involve the given variable?
  bool uses(int var) const {
    for (const auto& [m, v] : terms_)
      for (const auto& [id, e] : m)
        if (id == var) return true;
    return false;
  }

  std::string toString() const {
    if (isZero()) return "0";
    std::string out;
    bool first = true;
    auto emit = [&](const Rat& coeff, const std::string& monoStr) {
      Rat a = abs(coeff);
      std::string piece;
      if (monoStr.empty()) {
        piece = a.get_str();
      } else if (a == 1) {
        piece = monoStr;
      } else {
        piece = a.get_str() + "*" + monoStr;
      }
      if (first) {
        out += (coeff < 0 ? "-" : "") + piece;
        first = false;
      } else {
        out += (coeff < 0 ? " - " : " + ") + piece;
      }
    };
    for (const auto& [m, v] : terms_) {
      std::string ms;
      for (const auto& [var, exp] : m) {
        if (!ms.empty()) ms += "*";
        ms += varName(var);
        if (exp > 1) ms += "^" + std::to_string(exp);
      }
      emit(v, ms);
    }
    if (c_ != 0) emit(c_, "");
    return out;
  }

 private:
  void addTerm(const Mono& m, const Rat& v) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (v != 0) terms_.emplace(m, v);
    } else {
      it->second += v;
      if (it->second == 0) terms_.erase(it);
    }
  }
  static Mono mulMono(const Mono& a, const Mono& b) {
    Mono r;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        r.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        r.push_back(b[j++]);
      } else {
        r.emplace_back(a[i].first, a[i].second + b[j].second);
        ++i, ++j;
      }
    }
    return r;
  }

  Rat c_;
  std::map<Mono, Rat> terms_;
};

inline std::string coeffString(const Scalar& s) { return s.toString(); }
inline bool isZero(const Rat& r) { return r == 0; }
inline bool isZero(const Scalar& s) { return s.isZero(); }

}  // namespace dk
