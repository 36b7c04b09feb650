#include "apolar/inverse_system.hpp"

#include <algorithm>

namespace apolar {

InverseSystem::InverseSystem(const VariableSet& vars,
                             std::vector<DualForm> generators)
    : vars_(vars), field_(Field::rationals()), top_(0) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.vars() != vars_)
      throw Error("variable-mismatch", "generator over a different ring");
    if (!g.is_homogeneous())
      throw Error("inhomogeneous", "inverse system generators must be forms");
    gens_.push_back(std::move(g));
  }
  if (gens_.empty())
    throw Error("zero-form", "inverse system needs a nonzero generator");
  field_ = gens_.front().field();
  for (const auto& g : gens_) {
    if (g.field() != field_)
      throw FieldMismatchError("generators from different fields");
    top_ = std::max(top_, g.degree());
  }
}

const MonomialIndex& InverseSystem::index(int d) {
  auto it = indices_.find(d);
  if (it == indices_.end())
    it = indices_.emplace(d, std::make_shared<MonomialIndex>(vars_, d)).first;
  return *it->second;
}

const Subspace& InverseSystem::slice(int d) {
  auto it = slices_.find(d);
  if (it != slices_.end()) return it->second;

  const MonomialIndex& idx = index(d);
  SpanBuilder span(idx.size(), field_);
  for (const auto& gen : gens_) {
    int shift = gen.degree() - d;
    if (shift < 0) continue;
    for (const Exponent& m : monomial_basis(vars_, shift)) {
      std::vector<Scalar> v(idx.size(), Scalar::zero(field_));
      bool nonzero = false;
      for (const auto& [e, c] : gen.terms()) {
        Exponent target(e.size());
        bool ok = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
          target[i] = e[i] - m[i];
          if (target[i] < 0) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        v[idx.position(target)] += c;
        nonzero = true;
      }
      if (nonzero) span.insert(std::move(v));
    }
  }
  return slices_.emplace(d, Subspace::from_span(std::move(span)))
      .first->second;
}

std::vector<std::size_t> InverseSystem::hilbert() {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(top_) + 1);
  for (int d = 0; d <= top_; ++d) out.push_back(h(d));
  return out;
}

SpanBuilder InverseSystem::u_system_rows(int d) {
  const std::size_t nvar = vars_.count();
  const Subspace& prev = slice(d - 1);
  const std::size_t hp = prev.dim();
  const std::size_t unknowns = nvar * hp;
  SpanBuilder rows(unknowns, field_);
  if (hp == 0) return rows;

  const MonomialIndex& idx = index(d);
  const MonomialIndex& idx_prev = index(d - 1);
  const auto& basis = prev.basis();
  // rank of the full system never exceeds unknowns - dim V_d (the lift of
  // V_d always solves it), so reaching that bound ends the scan early
  const std::size_t target = unknowns - h(d);

  Exponent lowered;
  for (std::size_t t = 0; t < idx.size() && rows.dim() < target; ++t) {
    const Exponent& e = idx.at(t);
    std::size_t first = e.size();
    std::size_t first_pos = 0;
    for (std::size_t i = 0; i < e.size() && rows.dim() < target; ++i) {
      if (e[i] == 0) continue;
      lowered = e;
      lowered[i] -= 1;
      std::size_t pos = idx_prev.position(lowered);
      if (first == e.size()) {
        first = i;
        first_pos = pos;
        continue;
      }
      std::vector<Scalar> row(unknowns, Scalar::zero(field_));
      bool nonzero = false;
      for (std::size_t s = 0; s < hp; ++s) {
        const Scalar& a = basis[s][first_pos];
        const Scalar& b = basis[s][pos];
        if (!a.is_zero()) {
          row[first * hp + s] = a;
          nonzero = true;
        }
        if (!b.is_zero()) {
          row[i * hp + s] = -b;
          nonzero = true;
        }
      }
      if (nonzero) rows.insert(std::move(row));
    }
  }
  return rows;
}

std::size_t InverseSystem::nu(int d) {
  if (d < 1) throw Error("bad-degree", "generator counts start at degree 1");
  const std::size_t hp = slice(d - 1).dim();
  if (hp == 0) {
    if (h(d) != 0) throw InternalError("graded slice jumped from zero");
    return 0;
  }
  SpanBuilder rows = u_system_rows(d);
  const std::size_t unknowns = vars_.count() * hp;
  const std::size_t dim_u = unknowns - rows.dim();
  const std::size_t hd = h(d);
  if (dim_u < hd) throw InternalError("U_d smaller than V_d");
  return dim_u - hd;
}

NuTable InverseSystem::generator_counts(int max_degree) {
  NuTable t;
  t.nu.assign(static_cast<std::size_t>(max_degree) + 1, 0);
  for (int d = 1; d <= max_degree; ++d) {
    t.nu[static_cast<std::size_t>(d)] = nu(d);
    t.mu += t.nu[static_cast<std::size_t>(d)];
  }
  return t;
}

Subspace InverseSystem::u_space(int d) {
  if (d < 1) throw Error("bad-degree", "U spaces start at degree 1");
  const MonomialIndex& idx = index(d);
  const Subspace& prev = slice(d - 1);
  const std::size_t hp = prev.dim();
  if (hp == 0) return Subspace(idx.size(), field_);

  const std::size_t nvar = vars_.count();
  SpanBuilder rows = u_system_rows(d);
  ExactMatrix system =
      ExactMatrix::from_rows(rows.rows(), nvar * hp, field_);
  Subspace coords = kernel_basis(system);

  const MonomialIndex& idx_prev = index(d - 1);
  const auto& basis = prev.basis();
  SpanBuilder out(idx.size(), field_);
  for (const auto& a : coords.basis()) {
    std::vector<Scalar> m(idx.size(), Scalar::zero(field_));
    for (std::size_t t = 0; t < idx.size(); ++t) {
      const Exponent& e = idx.at(t);
      std::size_t i = 0;
      while (e[i] == 0) ++i;
      Exponent lowered = e;
      lowered[i] -= 1;
      std::size_t pos = idx_prev.position(lowered);
      Scalar value = Scalar::zero(field_);
      for (std::size_t s = 0; s < hp; ++s) {
        Scalar term = a[i * hp + s];
        term *= basis[s][pos];
        value += term;
      }
      m[t] = value;
    }
    out.insert(std::move(m));
  }
  return Subspace::from_span(std::move(out));
}

Subspace InverseSystem::ann_slice(int d) {
  const MonomialIndex& idx = index(d);
  if (d > top_) return Subspace::full(idx.size(), field_);
  return kernel_basis(slice(d).basis_matrix());
}

}  // namespace apolar
