#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dk/framing.hpp"

using namespace dk;

namespace {

// The three displayed coefficient families, built independently of the
// solver from the indeterminates themselves.
Scalar familyT(int g, int a) {
  Scalar e = Scalar(Rat(-1)) + coeffVar("s", {a}) * Scalar(2);
  for (int b = 1; b <= g; ++b)
    e += Scalar(Rat(2)) * coeffVar("nxy", {a, b, b});
  return e;
}
Scalar familyX(int g, int a, int d) {
  Scalar e;
  for (int b = 1; b <= g; ++b) {
    e += coeffVar("l", {a, b}) * coeffVar("nxy", {a, d, b});
    e += coeffVar("m", {a, b}) *
         (coeffVar("nxx", {a, b, d}) - coeffVar("nxx", {a, d, b}));
  }
  e -= Scalar(ratFromLong(1, 2)) * coeffVar("l", {a, d});
  return e;
}
Scalar familyY(int g, int a, int d) {
  Scalar e;
  for (int b = 1; b <= g; ++b) {
    e += coeffVar("l", {a, b}) *
         (coeffVar("nyy", {a, b, d}) - coeffVar("nyy", {a, d, b}));
    e -= coeffVar("m", {a, b}) * coeffVar("nxy", {a, b, d});
  }
  e += Scalar(ratFromLong(1, 2)) * coeffVar("m", {a, d});
  return e;
}

}  // namespace

TEST_CASE("reduced doubling relation: genus 1 equations match the display") {
  FramingEquations eqs = expandReducedDg(1);
  CHECK(eqs.eqT.canonicalized() == familyT(1, 1).canonicalized());
  CHECK(eqs.eqX[0].canonicalized() == familyX(1, 1, 1).canonicalized());
  CHECK(eqs.eqY[0].canonicalized() == familyY(1, 1, 1).canonicalized());
  // ... and in fact on the nose, not just up to scaling.
  CHECK(eqs.eqT == familyT(1, 1));
  CHECK(eqs.eqX[0] == familyX(1, 1, 1));
  CHECK(eqs.eqY[0] == familyY(1, 1, 1));
  CHECK_FALSE(eqs.usesPi);
  // Framing formula: -2s^a equals 2 sum nxy - 1 modulo the t_12 equation.
  CHECK(eqs.framingS - eqs.framingNu == -eqs.eqT);
}

TEST_CASE("reduced doubling relation: genus 2 and 3, all handles") {
  for (int g : {2, 3}) {
    for (int a = 1; a <= g; ++a) {
      FramingEquations eqs = expandReducedDg(g, a);
      CHECK(eqs.eqT == familyT(g, a));
      for (int d = 1; d <= g; ++d) {
        CHECK(eqs.eqX[static_cast<size_t>(d - 1)] == familyX(g, a, d));
        CHECK(eqs.eqY[static_cast<size_t>(d - 1)] == familyY(g, a, d));
      }
      CHECK_FALSE(eqs.usesPi);
      CHECK(eqs.framingS - eqs.framingNu == -eqs.eqT);
    }
  }
}

TEST_CASE("framing value specialisations") {
  FramingEquations eqs = expandReducedDg(1);
  int sId = coeffVar("s", {1}).terms().begin()->first[0].first;
  int nuId = coeffVar("nxy", {1, 1, 1}).terms().begin()->first[0].first;
  // nu = 1/2 with the (1,1) equation gives s = 0, framing 0.
  CHECK(eqs.framingNu.evalPartial({{nuId, ratFromLong(1, 2)}}).isZero());
  CHECK(framingValue(eqs).evalPartial({{sId, Rat(0)}}).isZero());
  // s = 1/2, nu = 0 satisfies the (1,1) equation and gives framing -1.
  CHECK(eqs.eqT.evalPartial({{sId, ratFromLong(1, 2)}, {nuId, Rat(0)}}).isZero());
  CHECK(framingValue(eqs).evalPartial({{sId, ratFromLong(1, 2)}}) ==
        Scalar(Rat(-1)));
  // Generic: the quadratic form 2 sum nxy[a,bb] - 1.
  CHECK(eqs.framingNu ==
        Scalar(Rat(2)) * coeffVar("nxy", {1, 1, 1}) + Scalar(Rat(-1)));
}

TEST_CASE("genus-1 rigidity: nu = 1/2, s = 0") {
  Genus1Report rep = solveGenus1();
  CHECK(rep.factorsOk);
  CHECK(rep.nu == ratFromLong(1, 2));
  CHECK(rep.s == Rat(0));
  CHECK(rep.residuesZero);
  for (const Scalar& r : rep.residues) CHECK(r.isZero());
  CHECK(rep.framingAtSolution.isZero());
  CHECK(rep.ok());

  // Without the nondegeneracy hypothesis the bracket equations are vacuous.
  Genus1Report degen = solveGenus1(true);
  CHECK(degen.degenerate);
  CHECK_FALSE(degen.ok());
}

TEST_CASE("B-generator path: swapped roles give the mirrored computation") {
  FramingEquations eqs = expandReducedDg(1, 1, true);
  // Exchanging the x and y roles flips the sign of the basic pairing, so the
  // families come back with nu |-> -nu (nu now multiplies [y, x]).
  Scalar lam = coeffVar("l", {1, 1});
  Scalar mu = coeffVar("m", {1, 1});
  Scalar nu = coeffVar("nxy", {1, 1, 1});
  Scalar half(ratFromLong(1, 2));
  CHECK(eqs.eqT ==
        coeffVar("s", {1}) * Scalar(2) - Scalar(Rat(2)) * nu + Scalar(Rat(-1)));
  CHECK(eqs.eqX[0] == -(lam * (nu + half)));
  CHECK(eqs.eqY[0] == mu * (nu + half));
  CHECK(eqs.framingS - eqs.framingNu == -eqs.eqT);
  CHECK_FALSE(eqs.usesPi);
  Genus1Report rep = solveGenus1(false, true);
  CHECK(rep.ok());
  CHECK(rep.nu == ratFromLong(-1, 2));
  CHECK(rep.s == Rat(0));
  CHECK(rep.framingAtSolution.isZero());

  // Error paths.
  CHECK_THROWS(expandReducedDg(0));
  CHECK_THROWS(expandReducedDg(2, 3));
}
