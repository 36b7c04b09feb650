#ifndef APOLAR_TESTS_ORACLE_BAREISS_HPP
#define APOLAR_TESTS_ORACLE_BAREISS_HPP

#include <vector>

#include <gmpxx.h>

#include "apolar/linalg.hpp"

namespace apolar_oracle {

/// Independent fraction-free (Bareiss) elimination over the rationals:
/// rows are scaled to integers, eliminated with exact integer division,
/// and the kernel is assembled by back-substitution on the integer
/// echelon matrix. Test-tree only; shares no elimination code with the
/// library's plain-fraction rref.
struct BareissResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  std::vector<std::vector<mpq_class>> kernel;
};

BareissResult bareiss_rank_kernel(const apolar::ExactMatrix& m);

}  // namespace apolar_oracle

#endif
