#include "apolar/ideal.hpp"

#include <algorithm>

namespace apolar {

namespace {

std::vector<std::size_t> identity_map(std::size_t from, std::size_t count) {
  std::vector<std::size_t> m(count);
  for (std::size_t i = 0; i < count; ++i) m[i] = from + i;
  return m;
}

/// G and the socle duals of J, rewritten over R'.
std::vector<DualForm> j_socle_forms(const NormalForm& nf,
                                    const VariableSet& rvars) {
  const std::vector<std::size_t> keep = identity_map(1, rvars.count());
  std::vector<DualForm> gens;
  if (!nf.G.is_zero()) gens.push_back(restrict_to(nf.G, rvars, keep));
  if (nf.shape == ShapeTag::WZ) {
    Exponent e(rvars.count(), 0);
    e[rvars.z_index()] = nf.j - 1;
    gens.push_back(
        DualForm::monomial(rvars, e, Scalar::one(nf.F.field())));
  }
  return gens;
}

bool all_zero(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

/// <f, S> = 0 for every basis row of S?
bool pairs_to_zero(const std::vector<Scalar>& f, const Subspace& s) {
  for (const auto& row : s.basis()) {
    Scalar acc = Scalar::zero(f.empty() ? Field::rationals() : f[0].field());
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (f[k].is_zero() || row[k].is_zero()) continue;
      Scalar t = f[k];
      t *= row[k];
      acc += t;
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace

NuTable minimal_generator_counts(const GradedIdealSlices& slices) {
  const VariableSet& vars = slices.vars;
  const Field k =
      slices.slice.empty() ? Field::rationals() : slices.slice[0].field();
  NuTable t;
  t.nu.assign(slices.slice.size(), 0);
  for (std::size_t d = 1; d < slices.slice.size(); ++d) {
    MonomialIndex idx(vars, static_cast<int>(d));
    MonomialIndex idx_prev(vars, static_cast<int>(d) - 1);
    SpanBuilder grown(idx.size(), k);
    for (const auto& row : slices.slice[d - 1].basis()) {
      for (std::size_t v = 0; v < vars.count(); ++v) {
        std::vector<Scalar> shifted(idx.size(), Scalar::zero(k));
        for (std::size_t p = 0; p < row.size(); ++p) {
          if (row[p].is_zero()) continue;
          Exponent e = idx_prev.at(p);
          e[v] += 1;
          shifted[idx.position(e)] = row[p];
        }
        grown.insert(std::move(shifted));
      }
    }
    std::size_t dim_d = slices.slice[d].dim();
    if (grown.dim() > dim_d)
      throw InternalError("R_1 I_{d-1} exceeds I_d");
    t.nu[d] = dim_d - grown.dim();
    t.mu += t.nu[d];
  }
  if (!t.nu.empty() && t.nu.back() != 0)
    throw InternalError("generators at the truncation degree; bound too low");
  return t;
}

GradedIdealSlices ideal_slices_from_generators(
    const std::vector<RingElement>& gens, const VariableSet& vars,
    const Field& field, int max_degree) {
  GradedIdealSlices out{vars, max_degree, {}};
  std::vector<std::vector<Scalar>> prev;
  for (int d = 0; d <= max_degree; ++d) {
    MonomialIndex idx(vars, d);
    SpanBuilder span(idx.size(), field);
    if (d > 0) {
      MonomialIndex idx_prev(vars, d - 1);
      for (const auto& row : prev) {
        for (std::size_t v = 0; v < vars.count(); ++v) {
          std::vector<Scalar> shifted(idx.size(), Scalar::zero(field));
          for (std::size_t p = 0; p < row.size(); ++p) {
            if (row[p].is_zero()) continue;
            Exponent e = idx_prev.at(p);
            e[v] += 1;
            shifted[idx.position(e)] = row[p];
          }
          span.insert(std::move(shifted));
        }
      }
    }
    for (const auto& g : gens)
      if (!g.is_zero() && g.degree() == d)
        span.insert(coeff_vector(g, idx));
    out.slice.push_back(Subspace::from_span(std::move(span)));
    prev = out.slice.back().basis();
  }
  return out;
}

JModule compute_J(const NormalForm& nf, int degree_bound) {
  VariableSet rvars = nf.F.vars().without_w();
  std::vector<DualForm> gens = j_socle_forms(nf, rvars);
  if (gens.empty())
    throw ValidationError("zero-part", "J of a form with no content");
  InverseSystem sys(rvars, std::move(gens));
  int bound = degree_bound >= 0 ? degree_bound : nf.j + 2;

  JModule jm{rvars, std::move(sys), {}, {}, bound};
  for (int d = 0; d <= nf.j; ++d) jm.hilbert.push_back(jm.system.h(d));
  jm.nu = jm.system.generator_counts(bound);
  // J is Artinian with socle degree <= j, so generators stop by j+1; the
  // trailing degrees of the table must be empty
  for (std::size_t d = static_cast<std::size_t>(nf.j) + 2;
       d < jm.nu.nu.size(); ++d)
    if (jm.nu.nu[d] != 0)
      throw InternalError("J gained generators beyond the stable range");
  return jm;
}

BetaG find_beta_g(const NormalForm& nf) {
  const VariableSet rvars = nf.F.vars().without_w();
  const Field& k = nf.F.field();
  const std::vector<std::size_t> keep = identity_map(1, rvars.count());
  if (nf.G.is_zero())
    throw ValidationError("structure",
                          "no distinguished generator: G vanishes");
  DualForm g_dual = restrict_to(nf.G, rvars, keep);

  const int j = nf.j;
  const std::size_t zi = rvars.z_index();

  auto try_beta = [&](int beta) -> std::optional<RingElement> {
    const int dg = beta + 1;  // degree of g
    MonomialIndex cols(rvars, dg);

    // rows: target coordinates of g o G (degree j - dg), then of
    // g o Z^[j-1] (degree j - 1 - dg) for the WZ shape
    const int dG = j - dg;
    MonomialIndex rows_g(rvars, dG);
    const int dZ = nf.shape == ShapeTag::WZ ? j - 1 - dg : -1;
    std::optional<MonomialIndex> rows_z;
    if (dZ >= 0) rows_z.emplace(rvars, dZ);

    std::size_t nrows = rows_g.size() + (rows_z ? rows_z->size() : 0);
    ExactMatrix system(nrows, cols.size(), k);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      RingElement m = RingElement::monomial(rvars, cols.at(c), Scalar::one(k));
      DualForm mg = contract(m, g_dual);
      for (const auto& [e, coeff] : mg.terms())
        system.set(rows_g.position(e), c, coeff);
      if (rows_z) {
        const Exponent& me = cols.at(c);
        // m o Z^[j-1] is a pure Z power exactly when m is one
        bool pure_z = true;
        for (std::size_t i = 0; i < me.size(); ++i)
          if (i != zi && me[i] != 0) pure_z = false;
        if (pure_z) {
          Exponent target(rvars.count(), 0);
          target[zi] = j - 1 - me[zi];
          system.set(rows_g.size() + rows_z->position(target), c,
                     Scalar::one(k));
        }
      }
    }

    std::vector<Scalar> rhs(nrows, Scalar::zero(k));
    Exponent target(rvars.count(), 0);
    target[zi] = dG;
    rhs[rows_g.position(target)] = nf.w_coeff;

    SolveResult res = solve(system, rhs);
    if (!res.consistent) return std::nullopt;
    // canonical g: particular solution reduced against the echelon basis
    // of the kernel, which is exactly J_{beta+1}
    std::vector<Scalar> canonical = res.kernel.reduce(res.particular);
    return ring_from_vector(rvars, k, cols, canonical);
  };

  if (nf.shape == ShapeTag::WZ) {
    for (int beta = 1; beta <= j - 1; ++beta)
      if (auto g = try_beta(beta)) return BetaG{beta, std::move(*g)};
    throw ValidationError("structure",
                          "no beta <= j-1 admits w z^beta - g in the ideal");
  }
  // W shape: w^t o F = c W^[j-t] cannot be cancelled by any g in R' when
  // t < j, so the distinguished generator sits at t = j with g o G = c
  if (auto g = try_beta(j - 1)) return BetaG{j, std::move(*g)};
  throw ValidationError("structure", "W-shape solve failed: G vanishes");
}

RCount count_r(const NormalForm& nf, JModule& jm, const RingElement& g) {
  const VariableSet& rvars = jm.rvars;
  const Field& k = nf.F.field();
  const int d = g.degree() + 1;
  MonomialIndex idx(rvars, d);
  const Subspace& v_slice = jm.system.slice(d);
  Subspace u_slice = jm.system.u_space(d);

  RCount out;
  // x_i for 1 <= i <= n-1 are the R' variables other than z
  for (std::size_t i = 0; i + 1 < rvars.count(); ++i) {
    RingElement gxi = ring_multiply(g, RingElement::variable(rvars, i, k));
    std::vector<Scalar> vec = coeff_vector(gxi, idx);
    if (!pairs_to_zero(vec, v_slice))
      throw ValidationError("not-normal-form",
                            "g x_i does not lie in J; the input violates "
                            "the structure hypotheses");
    bool in_nj = pairs_to_zero(vec, u_slice);
    out.gx_minimal.push_back(!in_nj);
    if (!in_nj) ++out.r;
  }
  return out;
}

std::vector<long> hilbert_difference(const IdealProfile& profile) {
  std::vector<long> diff;
  diff.reserve(profile.hilbert_ri.size());
  for (std::size_t d = 0; d < profile.hilbert_ri.size(); ++d)
    diff.push_back(static_cast<long>(profile.hilbert_ri[d]) -
                   static_cast<long>(profile.hilbert_rj[d]));
  return diff;
}

bool unimodal(const std::vector<std::size_t>& h) {
  if (h.empty()) throw Error("bad-degree", "unimodal of an empty sequence");
  std::size_t i = 1;
  while (i < h.size() && h[i] >= h[i - 1]) ++i;
  while (i < h.size() && h[i] <= h[i - 1]) ++i;
  return i == h.size();
}

Analysis analyze(const NormalForm& nf) {
  const DualForm& F = nf.F;
  const VariableSet& vars = F.vars();
  const std::size_t n = vars.n();
  std::vector<std::string> findings = nf.findings;

  InverseSystem isys(vars, {F});
  IdealProfile profile;
  profile.j = nf.j;
  profile.var_count = vars.count();
  profile.shape = nf.shape;
  profile.hilbert_ri = isys.hilbert();

  NuTable nu_i = isys.generator_counts(nf.j + 2);
  if (nu_i.nu.back() != 0)
    throw InternalError("generators of I beyond degree j+1");
  profile.nu_i = nu_i.nu;
  profile.mu_i = nu_i.mu;

  MonomialIndex idx2(vars, 2);
  profile.dim_i2 = idx2.size() - profile.hilbert_ri[2];
  profile.i2_pattern = nf.i2_pattern;

  SanityReport sanity = gorenstein_sanity(F);
  profile.paper_shape = sanity.paper_shape && sanity.symmetric;
  if (!sanity.symmetric)
    findings.push_back("Hilbert function of R/I is not symmetric");

  BetaG bg = find_beta_g(nf);
  int bound = std::max(nf.j + 2, 2 * bg.beta + 2);
  JModule jm = compute_J(nf, bound);
  profile.hilbert_rj = jm.hilbert;
  profile.nu_j = jm.nu.nu;
  profile.mu_j = jm.nu.mu;

  RCount rc = count_r(nf, jm, bg.g);

  GenericityVerdict verdict{bg.beta, bg.g,   rc.r, profile.mu_i,
                            profile.mu_j,    n,    false,
                            rc.gx_minimal,   false};
  if (nf.shape == ShapeTag::W) {
    // the W shape is generic by the structure theory; r plays no role
    verdict.r = 0;
    verdict.generic = true;
    verdict.identity_ok = profile.mu_i == profile.mu_j + n + 1;
    if (rc.r != 0)
      findings.push_back(
          "W-shape input with g x_i minimal in J; reported, not counted");
  } else {
    verdict.generic = rc.r == 0;
    verdict.identity_ok = profile.mu_i == profile.mu_j + n + 1 - rc.r;
  }

  if (!verdict.identity_ok) {
    if (profile.i2_pattern && profile.paper_shape)
      throw InternalError("count identity mu(I) = mu(J) + n + 1 - r failed");
    findings.push_back(
        "count identity mu(I) = mu(J) + n + 1 - r does not hold; the "
        "standing hypotheses fail for this input");
  }

  // the two genericity routes must agree whenever the identity holds
  bool by_counts = profile.mu_i == profile.mu_j + n + 1;
  if (verdict.identity_ok && by_counts != verdict.generic)
    throw InternalError("genericity routes disagree");

  std::vector<long> diff = hilbert_difference(profile);
  bool pattern_ok = true;
  for (std::size_t d = 0; d < diff.size(); ++d) {
    long expected =
        (d >= 1 && d <= static_cast<std::size_t>(verdict.beta)) ? 1 : 0;
    if (diff[d] != expected) pattern_ok = false;
  }
  bool unimodal_j = unimodal(profile.hilbert_rj);
  return Analysis{nf,         profile,    verdict, std::move(diff),
                  pattern_ok, unimodal_j, std::move(findings)};
}

}  // namespace apolar
