#include "apolar/apolarity.hpp"

namespace apolar {

CatalecticantMatrix catalecticant(const DualForm& F, int d) {
  if (F.is_zero()) throw Error("zero-form", "catalecticant of zero");
  if (!F.is_homogeneous())
    throw Error("inhomogeneous", "catalecticant needs a homogeneous form");
  int j = F.degree();
  if (d < 0 || d > j)
    throw Error("bad-degree", "catalecticant degree outside 0..j");

  CatalecticantMatrix cat;
  cat.d = d;
  cat.j = j;
  cat.row_monomials = monomial_basis(F.vars(), d);
  cat.col_monomials = monomial_basis(F.vars(), j - d);
  MonomialIndex cols(F.vars(), j - d);
  ExactMatrix m(cat.row_monomials.size(), cols.size(), F.field());
  for (std::size_t r = 0; r < cat.row_monomials.size(); ++r) {
    const Exponent& mon = cat.row_monomials[r];
    for (const auto& [e, c] : F.terms()) {
      Exponent target(e.size());
      bool ok = true;
      for (std::size_t i = 0; i < e.size(); ++i) {
        target[i] = e[i] - mon[i];
        if (target[i] < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      Scalar v = m.at(r, cols.position(target));
      v += c;
      m.set(r, cols.position(target), v);
    }
  }
  cat.m = std::move(m);
  return cat;
}

Subspace ann_degree(const DualForm& F, int d) {
  if (F.is_zero()) throw Error("zero-form", "annihilator of zero");
  int j = F.degree();
  if (d < 0) throw Error("bad-degree", "negative degree");
  if (d > j) {
    MonomialIndex idx(F.vars(), d);
    return Subspace::full(idx.size(), F.field());
  }
  // left kernel of the catalecticant
  return kernel_basis(catalecticant(F, d).m.transpose());
}

GradedIdealSlices ann_slices(const DualForm& F, int max_degree) {
  GradedIdealSlices out{F.vars(), max_degree, {}};
  InverseSystem sys(F.vars(), {F});
  for (int d = 0; d <= max_degree; ++d) {
    Subspace s = ann_degree(F, d);
    if (s.dim() + sys.h(d) != sys.index(d).size())
      throw InternalError("slice dimension bookkeeping failed");
    out.slice.push_back(std::move(s));
  }
  return out;
}

std::vector<std::size_t> hilbert_function(const DualForm& F) {
  if (F.is_zero()) throw Error("zero-form", "Hilbert function of zero");
  InverseSystem sys(F.vars(), {F});
  return sys.hilbert();
}

SanityReport gorenstein_sanity(const DualForm& F) {
  SanityReport rep;
  rep.hilbert = hilbert_function(F);
  int j = F.degree();
  std::size_t n = F.vars().n();

  rep.symmetric = true;
  for (int d = 0; d <= j; ++d)
    if (rep.hilbert[static_cast<std::size_t>(d)] !=
        rep.hilbert[static_cast<std::size_t>(j - d)])
      rep.symmetric = false;
  rep.socle_one = rep.hilbert[0] == 1;

  // expected start of the sequence: 1, n+1, 1 + C(n+1, 2)
  rep.paper_shape = true;
  auto expected = [&](int d) -> std::size_t {
    if (d == 0) return 1;
    if (d == 1) return n + 1;
    return 1 + (n + 1) * n / 2;
  };
  for (int d = 0; d <= 2 && d <= j - d; ++d)
    if (rep.hilbert[static_cast<std::size_t>(d)] != expected(d))
      rep.paper_shape = false;

  if (j >= 2) {
    MonomialIndex idx2(F.vars(), 2);
    rep.dim_i2 = idx2.size() - rep.hilbert[2];
    rep.n_quadrics = rep.dim_i2 == n;
  }
  return rep;
}

std::pair<RingElement, RingElement> binary_apolarity_pair(const DualForm& G) {
  if (G.is_zero()) throw Error("zero-form", "binary pair of the zero form");
  if (G.vars().count() != 2)
    throw Error("bad-variables", "binary pair needs exactly two variables");
  if (!G.is_homogeneous())
    throw Error("inhomogeneous", "binary pair needs a homogeneous form");

  const int e = G.degree();
  const Field& k = G.field();
  const VariableSet& vars = G.vars();
  InverseSystem sys(vars, {G});

  std::vector<RingElement> gens;
  std::vector<std::vector<Scalar>> prev_rows;  // ann slice one degree down
  for (int d = 1; d <= e + 2 && gens.size() < 2; ++d) {
    MonomialIndex idx(vars, d);
    // grow the ideal generated so far into degree d
    SpanBuilder grown(idx.size(), k);
    if (d > 1) {
      MonomialIndex idx_prev(vars, d - 1);
      for (const auto& row : prev_rows) {
        for (std::size_t v = 0; v < vars.count(); ++v) {
          std::vector<Scalar> shifted(idx.size(), Scalar::zero(k));
          for (std::size_t t = 0; t < row.size(); ++t) {
            if (row[t].is_zero()) continue;
            Exponent ex = idx_prev.at(t);
            ex[v] += 1;
            shifted[idx.position(ex)] = row[t];
          }
          grown.insert(std::move(shifted));
        }
      }
    }
    Subspace ann = sys.ann_slice(d);
    for (const auto& row : ann.basis()) {
      auto residue = grown.reduce(row);
      bool zero = true;
      for (const auto& s : residue)
        if (!s.is_zero()) {
          zero = false;
          break;
        }
      if (zero) continue;
      // canonical new generator: residue, renormalized to leading 1
      std::size_t lead = 0;
      while (residue[lead].is_zero()) ++lead;
      Scalar inv = residue[lead].inverse();
      for (auto& s : residue) s *= inv;
      gens.push_back(ring_from_vector(vars, k, idx, residue));
      grown.insert(std::move(residue));
      if (gens.size() == 2) break;
    }
    prev_rows = ann.basis();
  }

  if (gens.size() != 2)
    throw InternalError("binary annihilator did not yield two generators");
  if (gens[0].degree() + gens[1].degree() != e + 2)
    throw InternalError("binary generator degrees do not sum to deg G + 2");
  return {gens[0], gens[1]};
}

}  // namespace apolar
