#ifndef APOLAR_APOLARITY_HPP
#define APOLAR_APOLARITY_HPP

#include <utility>
#include <vector>

#include "apolar/inverse_system.hpp"

namespace apolar {

/// Matrix of the contraction pairing R_d x R*_{j-d} -> k against F: rows
/// are indexed by degree-d ring monomials, columns by degree-(j-d) dual
/// monomials, and entry (r, c) is the coefficient of the column monomial in
/// (row monomial) o F. ann(F)_d is the left kernel.
struct CatalecticantMatrix {
  int d = 0;
  int j = 0;
  std::vector<Exponent> row_monomials;
  std::vector<Exponent> col_monomials;
  ExactMatrix m{0, 0, Field::rationals()};
};

CatalecticantMatrix catalecticant(const DualForm& F, int d);

/// ann(F)_d as a subspace of degree-d ring coefficient vectors; the full
/// space for d > deg F.
Subspace ann_degree(const DualForm& F, int d);

/// Materialized ann(F)_d for d = 0..max_degree, with the dimension
/// bookkeeping dim I_d + H(d) = dim R_d asserted.
struct GradedIdealSlices {
  VariableSet vars;
  int max_degree = 0;
  std::vector<Subspace> slice;  // index = degree
};

GradedIdealSlices ann_slices(const DualForm& F, int max_degree);

/// H(d) = rank of the degree-d catalecticant, for d = 0..j.
std::vector<std::size_t> hilbert_function(const DualForm& F);

/// Symmetry and shape checks for the Hilbert function of R/ann F.
struct SanityReport {
  std::vector<std::size_t> hilbert;
  bool symmetric = false;   // H(d) == H(j-d) for all d
  bool socle_one = false;   // H(0) == 1
  bool paper_shape = false; // H begins 1, n+1, 1+C(n+1,2) (truncated for small j)
  std::size_t dim_i2 = 0;   // dim ann(F)_2
  bool n_quadrics = false;  // dim_i2 == n
};

SanityReport gorenstein_sanity(const DualForm& F);

/// The two generators of the principal system of a binary form: ann(G) in
/// k[y, z] is a complete intersection cut by forms of degrees d1 <= d2 with
/// d1 + d2 = deg G + 2.
std::pair<RingElement, RingElement> binary_apolarity_pair(const DualForm& G);

}  // namespace apolar

#endif
