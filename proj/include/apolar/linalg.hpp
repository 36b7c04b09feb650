#ifndef APOLAR_LINALG_HPP
#define APOLAR_LINALG_HPP

#include <cstddef>
#include <vector>

#include "apolar/scalar.hpp"

namespace apolar {

/// Dense row-major matrix over one field. All entries share the field
/// descriptor; storing a scalar from a different field throws.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols, const Field& f);

  static ExactMatrix identity(std::size_t n, const Field& f);
  static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows,
                               std::size_t cols, const Field& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);

  std::vector<Scalar> row(std::size_t i) const;
  ExactMatrix transpose() const;

  /// m * v for a column vector v.
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  bool operator==(const ExactMatrix& o) const;

 private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  ExactMatrix matrix;
  std::vector<std::size_t> pivots;
  std::size_t rank;
};

/// Reduced row echelon form with deterministic pivoting: first nonzero
/// entry in column order, no magnitude-based row swaps.
RrefResult rref(const ExactMatrix& m);

/// Incremental builder for the reduced-echelon basis of a row span.
/// Rows are inserted one at a time; the invariant that the stored rows form
/// an RREF matrix (pivot columns strictly increasing, pivot entries 1,
/// pivot columns zero elsewhere) is maintained throughout.
class SpanBuilder {
 public:
  SpanBuilder(std::size_t ambient, const Field& f);

  /// Reduce v against the current rows and absorb the residual if nonzero.
  /// Returns true when the dimension grew.
  bool insert(std::vector<Scalar> v);

  /// Canonical residual of v modulo the current span (zero iff v is in it).
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;

  bool contains(const std::vector<Scalar>& v) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const Field& field() const { return field_; }
  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t ambient_;
  Field field_;
  std::vector<std::vector<Scalar>> rows_;  // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

/// A linear subspace of k^ambient presented by its unique reduced-echelon
/// row basis.
class Subspace {
 public:
  Subspace(std::size_t ambient, const Field& f);  // zero subspace

  static Subspace from_rows(const std::vector<std::vector<Scalar>>& rows,
                            std::size_t ambient, const Field& f);
  static Subspace from_span(SpanBuilder&& b);
  static Subspace full(std::size_t ambient, const Field& f);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const Field& field() const { return field_; }
  const std::vector<std::vector<Scalar>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  ExactMatrix basis_matrix() const;

  bool contains(const std::vector<Scalar>& v) const;
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;

  bool operator==(const Subspace& o) const;

 private:
  std::size_t ambient_;
  Field field_;
  std::vector<std::vector<Scalar>> basis_;
  std::vector<std::size_t> pivots_;
};

/// Right null space { v : m v = 0 } in reduced-echelon presentation.
Subspace kernel_basis(const ExactMatrix& m);

/// True iff v lies in the row space of s.
bool in_span(const std::vector<Scalar>& v, const Subspace& s);

/// Row-space sum, again in reduced-echelon presentation.
Subspace subspace_sum(const Subspace& a, const Subspace& b);

struct SolveResult {
  bool consistent = false;
  std::vector<Scalar> particular;  // empty when inconsistent
  Subspace kernel;
};

/// Solve m x = b exactly; on success returns one particular solution (free
/// coordinates set to zero) together with the full kernel of m.
SolveResult solve(const ExactMatrix& m, const std::vector<Scalar>& b);

}  // namespace apolar

#endif
