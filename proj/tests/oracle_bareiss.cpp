#include "oracle_bareiss.hpp"

#include <stdexcept>

namespace apolar_oracle {

BareissResult bareiss_rank_kernel(const apolar::ExactMatrix& m) {
  if (!m.field().is_rational())
    throw std::invalid_argument("bareiss oracle works over the rationals");

  const std::size_t rows = m.rows(), cols = m.cols();

  // scale each row to integers
  std::vector<std::vector<mpz_class>> a(rows,
                                        std::vector<mpz_class>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = m.at(i, j).rat();
      mpz_class den = q.get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = m.at(i, j).rat();
      a[i][j] = q.get_num() * (lcm / q.get_den());
    }
  }

  // fraction-free elimination: after step k every entry is divisible by
  // the previous pivot, and that division keeps the entries integer
  BareissResult out;
  mpz_class prev_pivot = 1;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t sel = lead;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[lead]);
    for (std::size_t i = lead + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = a[lead][col] * a[i][j] - a[i][col] * a[lead][j];
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
        a[i][j] = q;
      }
      a[i][col] = 0;
    }
    prev_pivot = a[lead][col];
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = out.pivots.size();

  // kernel by back-substitution on the integer echelon matrix
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : out.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(cols, 0);
    v[f] = 1;
    for (std::size_t ri = out.rank; ri-- > 0;) {
      std::size_t pc = out.pivots[ri];
      mpq_class acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (a[ri][j] != 0) acc += mpq_class(a[ri][j]) * v[j];
      v[pc] = -acc / mpq_class(a[ri][pc]);
      v[pc].canonicalize();
    }
    out.kernel.push_back(std::move(v));
  }
  return out;
}

}  // namespace apolar_oracle
