#include "apolar/linalg.hpp"

#include <algorithm>

namespace apolar {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f),
      data_(rows * cols, Scalar::zero(f)) {}

ExactMatrix ExactMatrix::identity(std::size_t n, const Field& f) {
  ExactMatrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

ExactMatrix ExactMatrix::from_rows(
    const std::vector<std::vector<Scalar>>& rows, std::size_t cols,
    const Field& f) {
  ExactMatrix m(rows.size(), cols, f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw DimensionError("row length does not match column count");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

const Scalar& ExactMatrix::at(std::size_t i, std::size_t j) const {
  return data_[i * cols_ + j];
}

void ExactMatrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (v.field() != field_)
    throw FieldMismatchError("matrix over " + field_.str() +
                             " cannot hold a scalar from " + v.field().str());
  data_[i * cols_ + j] = v;
}

std::vector<Scalar> ExactMatrix::row(std::size_t i) const {
  return std::vector<Scalar>(data_.begin() + i * cols_,
                             data_.begin() + (i + 1) * cols_);
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

std::vector<Scalar> ExactMatrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw DimensionError("vector length != column count");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      Scalar t = at(i, j);
      t *= v[j];
      out[i] += t;
    }
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ &&
         data_ == o.data_;
}

RrefResult rref(const ExactMatrix& m) {
  ExactMatrix r = m;
  const std::size_t nr = r.rows(), nc = r.cols();
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(nr);
  for (std::size_t i = 0; i < nr; ++i) rows.push_back(r.row(i));

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < nc && lead < nr; ++col) {
    std::size_t sel = lead;
    while (sel < nr && rows[sel][col].is_zero()) ++sel;
    if (sel == nr) continue;
    std::swap(rows[sel], rows[lead]);
    Scalar inv = rows[lead][col].inverse();
    for (std::size_t j = col; j < nc; ++j) rows[lead][j] *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == lead || rows[i][col].is_zero()) continue;
      Scalar factor = rows[i][col];
      for (std::size_t j = col; j < nc; ++j)
        rows[i][j].submul(factor, rows[lead][j]);
    }
    pivots.push_back(col);
    ++lead;
  }

  ExactMatrix out(nr, nc, m.field());
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out.set(i, j, rows[i][j]);
  const std::size_t rank = pivots.size();
  return RrefResult{std::move(out), std::move(pivots), rank};
}

SpanBuilder::SpanBuilder(std::size_t ambient, const Field& f)
    : ambient_(ambient), field_(f) {}

std::vector<Scalar> SpanBuilder::reduce(std::vector<Scalar> v) const {
  if (v.size() != ambient_) throw DimensionError("reduce: ambient mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar& c = v[pivots_[k]];
    if (c.is_zero()) continue;
    Scalar factor = c;
    const auto& row = rows_[k];
    for (std::size_t j = pivots_[k]; j < ambient_; ++j)
      v[j].submul(factor, row[j]);
  }
  return v;
}

bool SpanBuilder::contains(const std::vector<Scalar>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

bool SpanBuilder::insert(std::vector<Scalar> v) {
  v = reduce(std::move(v));
  std::size_t lead = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!v[j].is_zero()) {
      lead = j;
      break;
    }
  if (lead == ambient_) return false;
  Scalar inv = v[lead].inverse();
  for (std::size_t j = lead; j < ambient_; ++j) v[j] *= inv;
  // back-eliminate the new pivot column from the existing rows
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Scalar c = rows_[k][lead];
    if (c.is_zero()) continue;
    for (std::size_t j = lead; j < ambient_; ++j)
      rows_[k][j].submul(c, v[j]);
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
  pivots_.insert(it, lead);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

Subspace::Subspace(std::size_t ambient, const Field& f)
    : ambient_(ambient), field_(f) {}

Subspace Subspace::from_rows(const std::vector<std::vector<Scalar>>& rows,
                             std::size_t ambient, const Field& f) {
  SpanBuilder b(ambient, f);
  for (const auto& r : rows) b.insert(r);
  return from_span(std::move(b));
}

Subspace Subspace::from_span(SpanBuilder&& b) {
  Subspace s(b.ambient(), b.field());
  s.basis_ = b.rows();
  s.pivots_ = b.pivots();
  return s;
}

Subspace Subspace::full(std::size_t ambient, const Field& f) {
  SpanBuilder b(ambient, f);
  for (std::size_t i = 0; i < ambient; ++i) {
    std::vector<Scalar> e(ambient, Scalar::zero(f));
    e[i] = Scalar::one(f);
    b.insert(std::move(e));
  }
  Subspace s(ambient, f);
  s.basis_ = b.rows();
  s.pivots_ = b.pivots();
  return s;
}

ExactMatrix Subspace::basis_matrix() const {
  return ExactMatrix::from_rows(basis_, ambient_, field_);
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

std::vector<Scalar> Subspace::reduce(std::vector<Scalar> v) const {
  if (v.size() != ambient_)
    throw DimensionError("vector length != ambient dimension");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar& c = v[pivots_[k]];
    if (c.is_zero()) continue;
    Scalar factor = c;
    for (std::size_t j = pivots_[k]; j < ambient_; ++j)
      v[j].submul(factor, basis_[k][j]);
  }
  return v;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
}

Subspace kernel_basis(const ExactMatrix& m) {
  RrefResult r = rref(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;

  SpanBuilder b(nc, m.field());
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(nc, Scalar::zero(m.field()));
    v[f] = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.rank; ++i)
      v[r.pivots[i]] = -r.matrix.at(i, f);
    b.insert(std::move(v));
  }
  Subspace s = Subspace::from_span(std::move(b));
  if (s.dim() != nc - r.rank)
    throw InternalError("kernel dimension disagrees with rank");
  return s;
}

bool in_span(const std::vector<Scalar>& v, const Subspace& s) {
  return s.contains(v);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw DimensionError("subspace sum: ambient mismatch");
  SpanBuilder builder(a.ambient(), a.dim() ? a.field() : b.field());
  for (const auto& r : a.basis()) builder.insert(r);
  for (const auto& r : b.basis()) builder.insert(r);
  return Subspace::from_span(std::move(builder));
}

SolveResult solve(const ExactMatrix& m, const std::vector<Scalar>& b) {
  if (b.size() != m.rows())
    throw DimensionError("right-hand side length != row count");
  ExactMatrix aug(m.rows(), m.cols() + 1, m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, m.cols(), b[i]);
  }
  RrefResult r = rref(aug);

  SolveResult out{false, {}, kernel_basis(m)};
  for (std::size_t p : r.pivots)
    if (p == m.cols()) return out;  // pivot in the augmented column
  out.consistent = true;
  out.particular.assign(m.cols(), Scalar::zero(m.field()));
  for (std::size_t i = 0; i < r.rank; ++i)
    out.particular[r.pivots[i]] = r.matrix.at(i, m.cols());
  return out;
}

}  // namespace apolar
