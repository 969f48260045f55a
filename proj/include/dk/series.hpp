#pragma once
// One-variable exact power series: Bernoulli numbers and the two series the
// theory needs, r(s) = log((e^s-1)/s) and s(w) = e^w/(1-e^w) + 1/w.  The
// latter's 1/w pole cancels; the series is stored directly by its regular
// coefficient list, computed from Bernoulli numbers.

#include <string>
#include <vector>

#include "dk/rat.hpp"

namespace dk {

struct ScalarSeries {
  std::string name;
  std::vector<Rat> c;  // c[k] = coefficient of the k-th power, k <= D
};

// B_0..B_n with the B_1 = -1/2 convention (sum_{j<=m} C(m+1,j) B_j = 0).
inline std::vector<Rat> bernoulli(int n) {
  std::vector<Rat> b(static_cast<size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    if (m == 0) {
      b[0] = 1;
      continue;
    }
    Rat s = 0;
    for (int j = 0; j < m; ++j) s += binomial(m + 1, j) * b[static_cast<size_t>(j)];
    b[static_cast<size_t>(m)] = -s / binomial(m + 1, m);
  }
  return b;
}

namespace detail {
inline std::vector<Rat> seriesMul(const std::vector<Rat>& a,
                                  const std::vector<Rat>& b, int D) {
  std::vector<Rat> r(static_cast<size_t>(D) + 1);
  for (int i = 0; i <= D; ++i)
    for (int j = 0; i + j <= D; ++j)
      if (i < static_cast<int>(a.size()) && j < static_cast<int>(b.size()))
        r[static_cast<size_t>(i + j)] +=
            a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
  return r;
}

// log(f) for f with constant term 1: log(1+u) = sum (-1)^{k+1} u^k / k.
inline std::vector<Rat> seriesLog(const std::vector<Rat>& f, int D) {
  std::vector<Rat> u = f;
  u[0] = 0;
  std::vector<Rat> r(static_cast<size_t>(D) + 1);
  std::vector<Rat> upow{1};  // u^0
  upow.resize(static_cast<size_t>(D) + 1);
  for (int k = 1; k <= D; ++k) {
    upow = seriesMul(upow, u, D);
    Rat sign = (k % 2 == 1) ? 1 : -1;
    for (int i = 0; i <= D; ++i) r[static_cast<size_t>(i)] += sign * upow[static_cast<size_t>(i)] / k;
  }
  return r;
}
}  // namespace detail

// r(s) = log((e^s - 1)/s) = s/2 + s^2/24 + 0*s^3 - s^4/2880 + ...
inline ScalarSeries rSeries(int D) {
  std::vector<Rat> f(static_cast<size_t>(D) + 1);
  for (int k = 0; k <= D; ++k) f[static_cast<size_t>(k)] = 1 / factorial(k + 1);
  return ScalarSeries{"r", detail::seriesLog(f, D)};
}

// s(w) = e^w/(1-e^w) + 1/w = -1/2 - w/12 + w^3/720 - ...; coefficient of w^k
// is -B_{k+1}/(k+1)! for k >= 1 and -1 - B_1 = -1/2 at k = 0.
inline ScalarSeries sSeries(int D) {
  std::vector<Rat> b = bernoulli(D + 1);
  std::vector<Rat> c(static_cast<size_t>(D) + 1);
  c[0] = Rat(-1) - b[1];
  for (int k = 1; k <= D; ++k)
    c[static_cast<size_t>(k)] = -b[static_cast<size_t>(k) + 1] / factorial(k + 1);
  return ScalarSeries{"s", c};
}

}  // namespace dk
