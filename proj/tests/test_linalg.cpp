#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "apolar/linalg.hpp"
#include "oracle_bareiss.hpp"

using namespace apolar;

namespace {

const Field Q = Field::rationals();

ExactMatrix mat(const std::vector<std::vector<long>>& rows, const Field& f) {
  ExactMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), f);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.set(i, j, Scalar::integer(rows[i][j], f));
  return m;
}

std::vector<Scalar> vec(const std::vector<long>& v, const Field& f) {
  std::vector<Scalar> out;
  for (long x : v) out.push_back(Scalar::integer(x, f));
  return out;
}

bool is_zero_vec(const std::vector<Scalar>& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("scalar arithmetic over Q stays reduced") {
  Scalar a = Scalar::rational(1, 3);
  Scalar b = Scalar::rational(2, 6);
  CHECK(a == b);
  CHECK((a + b) == Scalar::rational(2, 3));
  CHECK((a * Scalar::integer(3)) == Scalar::one(Q));
  CHECK((a - a).is_zero());
  CHECK(Scalar::rational(-4, -8) == Scalar::rational(1, 2));
  CHECK_THROWS_AS(Scalar::rational(1, 0), Error);
  CHECK_THROWS_AS(Scalar::one(Q) / Scalar::zero(Q), Error);
}

TEST_CASE("scalar arithmetic over a prime field") {
  Field fp = Field::prime(65537);
  Scalar a = Scalar::integer(65536, fp);
  CHECK((a + Scalar::one(fp)).is_zero());
  CHECK((a * a) == Scalar::one(fp));  // (-1)^2
  Scalar inv7 = Scalar::integer(7, fp).inverse();
  CHECK((inv7 * Scalar::integer(7, fp)).is_one());
  CHECK_THROWS_AS(Field::prime(15), Error);
  CHECK_THROWS_AS((void)Scalar::integer(1, fp).rat(), Error);
}

TEST_CASE("mixed field descriptors are rejected") {
  Field fp = Field::prime(17);
  Scalar a = Scalar::one(Q), b = Scalar::one(fp);
  CHECK_THROWS_AS(a + b, FieldMismatchError);
  ExactMatrix m(1, 1, Q);
  CHECK_THROWS_AS(m.set(0, 0, b), FieldMismatchError);
}

TEST_CASE("rref of a permutation matrix") {
  RrefResult r = rref(mat({{0, 1}, {1, 0}}, Q));
  CHECK(r.rank == 2);
  CHECK(r.matrix == ExactMatrix::identity(2, Q));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref of dependent rows") {
  RrefResult r = rref(mat({{1, 2}, {2, 4}}, Q));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref of proportional rational rows") {
  ExactMatrix m(2, 2, Q);
  m.set(0, 0, Scalar::rational(1, 2));
  m.set(0, 1, Scalar::rational(1, 3));
  m.set(1, 0, Scalar::rational(1, 4));
  m.set(1, 1, Scalar::rational(1, 6));
  CHECK(rref(m).rank == 1);
}

TEST_CASE("kernel of identity, zero, and a rank-one row") {
  CHECK(kernel_basis(ExactMatrix::identity(3, Q)).dim() == 0);
  CHECK(kernel_basis(ExactMatrix(2, 3, Q)).dim() == 3);

  Subspace k = kernel_basis(mat({{1, 1, 0}}, Q));
  CHECK(k.dim() == 2);
  CHECK(k.contains(vec({1, -1, 0}, Q)));
  // echelon normalization: basis rows (1,-1,0) and (0,0,1)
  CHECK(k.pivots() == std::vector<std::size_t>{0, 2});
  CHECK(k.basis()[0] == vec({1, -1, 0}, Q));
  CHECK(k.basis()[1] == vec({0, 0, 1}, Q));
}

TEST_CASE("solve: unique, underdetermined, inconsistent") {
  SolveResult r1 = solve(ExactMatrix::identity(2, Q), vec({3, 5}, Q));
  CHECK(r1.consistent);
  CHECK(r1.particular == vec({3, 5}, Q));
  CHECK(r1.kernel.dim() == 0);

  SolveResult r2 = solve(mat({{1, 1}}, Q), vec({2}, Q));
  CHECK(r2.consistent);
  CHECK(r2.particular == vec({2, 0}, Q));
  CHECK(r2.kernel.dim() == 1);

  SolveResult r3 = solve(mat({{1}, {1}}, Q), vec({0, 1}, Q));
  CHECK(!r3.consistent);

  CHECK_THROWS_AS(solve(mat({{1}}, Q), vec({1, 2}, Q)), DimensionError);
}

TEST_CASE("in_span") {
  Subspace s = Subspace::from_rows({vec({1, 1}, Q)}, 2, Q);
  CHECK(in_span(vec({2, 2}, Q), s));
  CHECK(!in_span(vec({1, 0}, Q), s));
  CHECK(in_span(vec({17, -4}, Q), Subspace::full(2, Q)));
  CHECK_THROWS_AS(in_span(vec({1, 0, 0}, Q), s), DimensionError);
}

TEST_CASE("subspace sums") {
  Subspace e1 = Subspace::from_rows({vec({1, 0, 0}, Q)}, 3, Q);
  Subspace e2 = Subspace::from_rows({vec({0, 1, 0}, Q)}, 3, Q);
  Subspace e12 = Subspace::from_rows({vec({1, 1, 0}, Q)}, 3, Q);
  CHECK(subspace_sum(e1, e2).dim() == 2);
  CHECK(subspace_sum(e1, e1) == e1);
  CHECK(subspace_sum(e1, e12).dim() == 2);
  CHECK(subspace_sum(e1, e12) == subspace_sum(e1, e2));
  CHECK_THROWS_AS(subspace_sum(e1, Subspace::from_rows({vec({1, 0}, Q)}, 2, Q)),
                  DimensionError);
}

TEST_CASE("randomized invariants: rank, kernel, idempotence, span test") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 60; ++iter) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    ExactMatrix m(rows, cols, Q);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m.set(i, j,
              Scalar::integer(static_cast<long>(rng() % 7) - 3, Q));

    RrefResult r = rref(m);
    Subspace k = kernel_basis(m);
    CHECK(r.rank + k.dim() == cols);
    for (const auto& v : k.basis()) CHECK(is_zero_vec(m.apply(v)));
    CHECK(rref(r.matrix).matrix == r.matrix);

    // in_span agrees with the rank test
    std::vector<Scalar> probe;
    for (std::size_t j = 0; j < cols; ++j)
      probe.push_back(Scalar::integer(static_cast<long>(rng() % 5) - 2, Q));
    Subspace rowspace = Subspace::from_rows(
        [&] {
          std::vector<std::vector<Scalar>> rs;
          for (std::size_t i = 0; i < rows; ++i) rs.push_back(m.row(i));
          return rs;
        }(),
        cols, Q);
    std::vector<std::vector<Scalar>> appended;
    for (std::size_t i = 0; i < rows; ++i) appended.push_back(m.row(i));
    appended.push_back(probe);
    Subspace grown = Subspace::from_rows(appended, cols, Q);
    CHECK(in_span(probe, rowspace) == (grown.dim() == rowspace.dim()));
  }
}

TEST_CASE("ranks over F_p match ranks over Q for small integer matrices") {
  Field fp = Field::prime(65537);
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 40; ++iter) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    ExactMatrix mq(rows, cols, Q), mp(rows, cols, fp);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        long v = static_cast<long>(rng() % 9) - 4;
        mq.set(i, j, Scalar::integer(v, Q));
        mp.set(i, j, Scalar::integer(v, fp));
      }
    CHECK(rref(mq).rank == rref(mp).rank);
  }
}

TEST_CASE("fraction-free oracle agrees with the default elimination") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 60; ++iter) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    ExactMatrix m(rows, cols, Q);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        long num = static_cast<long>(rng() % 11) - 5;
        long den = 1 + static_cast<long>(rng() % 3);
        m.set(i, j, Scalar::rational(num, den));
      }
    apolar_oracle::BareissResult oracle = apolar_oracle::bareiss_rank_kernel(m);
    RrefResult r = rref(m);
    Subspace k = kernel_basis(m);
    CHECK(oracle.rank == r.rank);
    CHECK(oracle.kernel.size() == k.dim());
    for (const auto& kv : oracle.kernel) {
      std::vector<Scalar> v;
      for (const auto& q : kv) v.push_back(Scalar::from_mpq(q));
      CHECK(is_zero_vec(m.apply(v)));
      CHECK(k.contains(v));
    }
  }
}
