#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace apolar;
using apolar_test::dual;
using apolar_test::ring;

namespace {

const Field Q = Field::rationals();

DualForm random_dual(const VariableSet& vars, int degree, std::mt19937_64& rng,
                     int max_terms = 4) {
  MonomialIndex idx(vars, degree);
  DualForm f(vars, Q);
  int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < terms; ++t) {
    long c = static_cast<long>(rng() % 5) - 2;
    f.add_term(idx.at(rng() % idx.size()), Scalar::integer(c, Q));
  }
  return f;
}

RingElement random_ring(const VariableSet& vars, int degree,
                        std::mt19937_64& rng) {
  MonomialIndex idx(vars, degree);
  RingElement f(vars, Q);
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    long c = static_cast<long>(rng() % 5) - 2;
    f.add_term(idx.at(rng() % idx.size()), Scalar::integer(c, Q));
  }
  return f;
}

}  // namespace

TEST_CASE("divided power multiplication carries binomial coefficients") {
  VariableSet xy = VariableSet::make({"X", "Y"});
  DualForm x2 = dual(xy, "X^[2]"), x3 = dual(xy, "X^[3]");
  CHECK(dp_multiply(x2, x3) == dual(xy, "10X^[5]"));

  DualForm one = DualForm::monomial(xy, {0, 0}, Scalar::one(Q));
  DualForm f = dual(xy, "3X^[2]Y - X Y^[2]");
  CHECK(dp_multiply(one, f) == f);

  CHECK(dp_multiply(dual(xy, "X"), dual(xy, "Y")) == dual(xy, "XY"));
}

TEST_CASE("contraction shifts exponents and keeps coefficients") {
  VariableSet xy = VariableSet::make({"X", "Y"});
  CHECK(contract(ring(xy, "x^[2]"), dual(xy, "X^[8]Y^[2]")) ==
        dual(xy, "X^[6]Y^[2]"));

  VariableSet wz = VariableSet::make({"W", "Z"});
  CHECK(contract(ring(wz, "z^[9]"), dual(wz, "WZ^[9]")) == dual(wz, "W"));

  CHECK(contract(ring(xy, "x^[2]"), dual(xy, "X")).is_zero());
}

TEST_CASE("shift_up raises one exponent and inverts contraction") {
  VariableSet v = apolar_test::wxyz();
  CHECK(shift_up(dual(v, "X^[6]Y^[2]"), 1) == dual(v, "X^[7]Y^[2]"));

  DualForm g = dual(v, "X^[6]Y^[2]+XY^[3]Z^[4]+YZ^[7]");
  DualForm g2 = shift_up(shift_up(g, 1), 1);
  CHECK(g2 == dual(v, "X^[8]Y^[2]+X^[3]Y^[3]Z^[4]+X^[2]YZ^[7]"));

  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    DualForm f = random_dual(v, 2 + static_cast<int>(rng() % 5), rng);
    std::size_t var = rng() % v.count();
    CHECK(contract(RingElement::variable(v, var, Q), shift_up(f, var)) == f);
  }
}

TEST_CASE("ring multiplication is the plain polynomial product") {
  VariableSet v = apolar_test::wyz();
  CHECK(ring_multiply(ring(v, "y^[2]"), ring(v, "y")) == ring(v, "y^[3]"));
  CHECK(ring_multiply(ring(v, "wz - y^[2]"), ring(v, "y")) ==
        ring(v, "wyz - y^[3]"));
  RingElement one = RingElement::monomial(v, {0, 0, 0}, Scalar::one(Q));
  RingElement f = ring(v, "wz^[2] - 3y^[3]");
  CHECK(ring_multiply(f, one) == f);
}

TEST_CASE("monomial bases come in the canonical order") {
  VariableSet v = apolar_test::wyz();
  MonomialIndex d1(v, 1);
  REQUIRE(d1.size() == 3);
  CHECK(d1.at(0) == Exponent{1, 0, 0});
  CHECK(d1.at(1) == Exponent{0, 1, 0});
  CHECK(d1.at(2) == Exponent{0, 0, 1});

  VariableSet yz2 = apolar_test::yz();
  MonomialIndex d2(yz2, 2);
  REQUIRE(d2.size() == 3);
  CHECK(d2.at(0) == Exponent{2, 0});
  CHECK(d2.at(1) == Exponent{1, 1});
  CHECK(d2.at(2) == Exponent{0, 2});

  CHECK(monomial_basis(v, 0) == std::vector<Exponent>{{0, 0, 0}});
}

TEST_CASE("variable degrees") {
  VariableSet v = apolar_test::yz();
  DualForm f = dual(v, "Y^[4]Z^[10]+Y^[3]Z^[11]");
  CHECK(deg_in_var(f, 0) == 4);
  CHECK(deg_in_var(f, 1) == 11);
  CHECK(max_deg(f) == 14);

  VariableSet wz = VariableSet::make({"W", "Z"});
  CHECK(deg_in_var(dual(wz, "WZ^[13]"), 1) == 13);
  CHECK(deg_in_var(dual(wz, "WZ^[13]"), 0) == 1);

  DualForm zero(v, Q);
  CHECK_THROWS_AS(deg_in_var(zero, 0), Error);
  CHECK_THROWS_AS(max_deg(zero), Error);
}

TEST_CASE("contraction is a module action") {
  VariableSet v = apolar_test::wyz();
  std::mt19937_64 rng(17);
  for (int i = 0; i < 80; ++i) {
    RingElement f = random_ring(v, 1 + static_cast<int>(rng() % 2), rng);
    RingElement g = random_ring(v, 1 + static_cast<int>(rng() % 2), rng);
    DualForm F = random_dual(v, 3 + static_cast<int>(rng() % 4), rng);
    CHECK(contract(ring_multiply(f, g), F) == contract(f, contract(g, F)));
  }
}

TEST_CASE("dp multiplication is commutative and associative") {
  VariableSet v = apolar_test::yz();
  std::mt19937_64 rng(29);
  for (int i = 0; i < 60; ++i) {
    DualForm a = random_dual(v, 1 + static_cast<int>(rng() % 3), rng, 2);
    DualForm b = random_dual(v, 1 + static_cast<int>(rng() % 3), rng, 2);
    DualForm c = random_dual(v, 1 + static_cast<int>(rng() % 3), rng, 2);
    CHECK(dp_multiply(a, b) == dp_multiply(b, a));
    CHECK(dp_multiply(dp_multiply(a, b), c) ==
          dp_multiply(a, dp_multiply(b, c)));
  }
}

TEST_CASE("monomial duality pairing") {
  VariableSet v = apolar_test::wyz();
  MonomialIndex idx(v, 3);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) {
      RingElement m = RingElement::monomial(v, idx.at(i), Scalar::one(Q));
      DualForm M = DualForm::monomial(v, idx.at(k), Scalar::one(Q));
      DualForm paired = contract(m, M);
      if (i == k)
        CHECK(paired == DualForm::monomial(v, Exponent(3, 0), Scalar::one(Q)));
      else
        CHECK(paired.is_zero());
    }
}

TEST_CASE("contraction lowers total degree exactly") {
  VariableSet v = apolar_test::wyz();
  std::mt19937_64 rng(31);
  for (int i = 0; i < 60; ++i) {
    int df = 1 + static_cast<int>(rng() % 3);
    int dF = 2 + static_cast<int>(rng() % 5);
    RingElement f = random_ring(v, df, rng);
    DualForm F = random_dual(v, dF, rng);
    DualForm c = contract(f, F);
    if (f.is_zero() || F.is_zero() || c.is_zero()) continue;
    CHECK(c.degree() == dF - df);
  }
}
