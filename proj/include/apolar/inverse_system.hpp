#ifndef APOLAR_INVERSE_SYSTEM_HPP
#define APOLAR_INVERSE_SYSTEM_HPP

#include <map>
#include <memory>
#include <vector>

#include "apolar/forms.hpp"

namespace apolar {

/// Per-degree minimal generator counts of a graded ideal plus their total.
struct NuTable {
  std::vector<std::size_t> nu;  // index = degree, 0-based
  std::size_t mu = 0;
};

/// The R-submodule of the divided power algebra generated by a list of
/// homogeneous socle forms, worked with degree by degree.
///
/// For generators F_1..F_k the graded piece is
///     V_d = sum_k R_{deg F_k - d} o F_k  (contraction),
/// and V_d is exactly the orthogonal complement of ann(F_1..F_k)_d under
/// the coefficientwise pairing of R_d with its dual monomial basis. All the
/// graded data of the annihilator comes out of these small spans:
///
///   * dim ann_d            = dim R_d - dim V_d,
///   * Hilbert function     H(d) = dim V_d,
///   * generator counts     nu_d = dim U_d - dim V_d, where
///     U_d = { M : x_i o M in V_{d-1} for all i } is the complement of
///     R_1 * ann_{d-1}.
///
/// U_d is solved as a linear system in the small coordinates of V_{d-1}
/// (a candidate M is determined by its first contractions), which keeps
/// every computation polynomial in dim V rather than dim R_d.
class InverseSystem {
 public:
  InverseSystem(const VariableSet& vars, std::vector<DualForm> generators);

  const VariableSet& vars() const { return vars_; }
  const Field& field() const { return field_; }
  int top_degree() const { return top_; }

  const MonomialIndex& index(int d);

  /// V_d as a reduced-echelon subspace of the degree-d dual coordinates.
  const Subspace& slice(int d);

  /// Hilbert function of R/ann at degree d.
  std::size_t h(int d) { return slice(d).dim(); }

  /// H(0..top_degree).
  std::vector<std::size_t> hilbert();

  /// Minimal generator count of ann in degree d (d >= 1).
  std::size_t nu(int d);

  /// nu for degrees 0..max_degree plus the total.
  NuTable generator_counts(int max_degree);

  /// (R_1 * ann_{d-1})^perp, materialized in degree-d dual coordinates.
  Subspace u_space(int d);

  /// ann_d in reduced-echelon form (full space above the top degree).
  Subspace ann_slice(int d);

 private:
  /// Row space of the U_d constraint system; rank is all nu needs.
  SpanBuilder u_system_rows(int d);

  VariableSet vars_;
  Field field_;
  std::vector<DualForm> gens_;
  int top_;
  std::map<int, Subspace> slices_;
  std::map<int, std::shared_ptr<MonomialIndex>> indices_;
};

}  // namespace apolar

#endif
