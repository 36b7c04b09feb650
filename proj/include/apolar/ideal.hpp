#ifndef APOLAR_IDEAL_HPP
#define APOLAR_IDEAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "apolar/form_io.hpp"

namespace apolar {

/// Literal per-degree generator count: nu_d = dim I_d - dim(R_1 I_{d-1}),
/// computed from materialized slices. The last listed degree must come out
/// zero, otherwise the truncation was too low and an internal error is
/// raised. Kept as the slow, independent route; the analysis pipeline
/// derives the same numbers through InverseSystem.
NuTable minimal_generator_counts(const GradedIdealSlices& slices);

/// Graded slices of an ideal given by generators (for ideal-equality
/// checks): slice(d) = sum over generators g of R_{d - deg g} * g.
GradedIdealSlices ideal_slices_from_generators(
    const std::vector<RingElement>& gens, const VariableSet& vars,
    const Field& field, int max_degree);

/// The contraction module of J = I cap R' over R' = k[x_1..x_n]: for the
/// WZ shape J = ann(G, Z^[j-1]), for the W shape J = ann(G).
struct JModule {
  VariableSet rvars;          // R'
  InverseSystem system;       // slices of the inverse system of J
  std::vector<std::size_t> hilbert;  // H_{R'/J}(0..j)
  NuTable nu;                 // generator counts through the degree bound
  int degree_bound = 0;
};

JModule compute_J(const NormalForm& nf, int degree_bound = -1);

/// The distinguished generator w z^beta - g (or w^j - g for the W shape):
/// beta is the least exponent admitting g in R'_{beta+1} with
/// g o G = c_W Z^[j-beta-1] and g o Z^[j-1] = 0. g is canonical: the
/// particular solution fully reduced against the echelon basis of
/// J_{beta+1}.
struct BetaG {
  int beta = 0;
  RingElement g;  // over R'
};

BetaG find_beta_g(const NormalForm& nf);

/// Remark-style count: r = #{ i < n : g x_i is a minimal generator of J }.
struct RCount {
  std::size_t r = 0;
  std::vector<bool> gx_minimal;  // position i-1 holds the flag for x_i
};

RCount count_r(const NormalForm& nf, JModule& jm, const RingElement& g);

/// Everything the structure theory attaches to one normal form.
struct IdealProfile {
  int j = 0;
  std::size_t var_count = 0;  // n+1
  ShapeTag shape = ShapeTag::WZ;
  std::vector<std::size_t> hilbert_ri;  // 0..j
  std::vector<std::size_t> hilbert_rj;  // 0..j
  std::vector<std::size_t> nu_i;        // 0..j+2
  std::vector<std::size_t> nu_j;        // 0..degree bound
  std::size_t mu_i = 0;
  std::size_t mu_j = 0;
  std::size_t dim_i2 = 0;
  bool i2_pattern = false;
  bool paper_shape = false;
};

struct GenericityVerdict {
  int beta = 0;
  RingElement g;
  std::size_t r = 0;
  std::size_t mu_i = 0;
  std::size_t mu_j = 0;
  std::size_t n = 0;
  bool generic = false;
  std::vector<bool> gx_minimal;
  bool identity_ok = false;  // mu(I) == mu(J) + n + 1 - r
};

struct Analysis {
  NormalForm nf;
  IdealProfile profile;
  GenericityVerdict verdict;
  std::vector<long> hilbert_diff;  // H_{R/I} - H_{R'/J}, degrees 0..j
  bool diff_pattern_ok = false;    // ones exactly on degrees 1..beta
  bool unimodal_j = false;
  std::vector<std::string> findings;
};

/// Full pipeline on a validated normal form. When the standing hypotheses
/// hold (expected quadric space and Hilbert shape) a violated count
/// identity is an internal error; without them it is reported as a finding.
Analysis analyze(const NormalForm& nf);

/// Difference H_{R/I}(d) - H_{R'/J}(d) for d = 0..j.
std::vector<long> hilbert_difference(const IdealProfile& profile);

/// True when the sequence weakly rises then weakly falls.
bool unimodal(const std::vector<std::size_t>& h);

}  // namespace apolar

#endif
