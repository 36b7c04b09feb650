#ifndef APOLAR_THEOREMS_HPP
#define APOLAR_THEOREMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apolar/ideal.hpp"

namespace apolar {

/// One X-power stratum of a four-variable form: X^[a] times a form in Y, Z.
struct Block {
  int a = 0;
  DualForm g;  // over the (Y, Z) subset
};

/// F = G_0(Y,Z) + X^[a_1] G_1 + ... + X^[a_l] G_l + c W Z^[j-1], stratified
/// by the X exponent, with the degree bookkeeping of the structure results.
struct FormDecomposition {
  int j = 0;
  DualForm g0;            // over (Y, Z)
  int p = 0;              // deg_Y G_0
  int q = 0;              // j - p (Z partner of the top term)
  int m = 0;              // Y-spread: G_0 runs Y^[p] down to Y^[p-m]
  std::vector<Scalar> c;  // c[t] = coefficient of Y^[p-t] Z^[q+t], t = 0..m
  std::vector<Block> blocks;  // ascending a
  bool some_pure_z = false;   // a stratum contains a pure Z power
  bool y_divides_top = false; // Y divides the top block
  Scalar w_coeff;
  VariableSet vars;  // the four declared variables
  VariableSet yz;    // the (Y, Z) subset
};

/// Stratify a validated four-variable WZ-shape form. Errors when there is
/// no X-free part (c_p would vanish).
FormDecomposition decompose(const NormalForm& nf);

/// Rebuild F from its decomposition (used as a self-check; decompose
/// asserts the round trip).
DualForm reassemble(const FormDecomposition& dec);

enum class Prediction { Generic, NotGeneric, NoClaim, PropertyHolds };
enum class Observation { Generic, NotGeneric, PropertyHeld, PropertyViolated };

std::string prediction_name(Prediction p);
std::string observation_name(Observation o);

/// Outcome of one mechanical check: which hypotheses failed, what the
/// result predicts under them, and what the computation observed.
/// `consistent` is true whenever the prediction is no-claim.
struct TheoremReport {
  std::string theorem;
  bool applicable = false;
  std::vector<std::string> failed_hypotheses;
  Prediction prediction = Prediction::NoClaim;
  std::optional<Observation> observed;
  bool consistent = true;
  std::vector<std::string> notes;
};

/// Shift lift: F' = X_t G + c W Z^[j]. If ann F is generic, so is ann F'.
/// t is the full-variable index of one of x_1..x_{n-1}.
TheoremReport check_restrict(const NormalForm& nf, std::size_t t);

/// Low-degree slices of ann G_0 for a binary G_0 with top Y-degree p and
/// p < deg G_0 - p: through degree deg G_0 - p they are exactly the
/// multiples of y^{p+1}.
TheoremReport check_lem0(const DualForm& g0);

/// Necessary condition: generic forces a_1 <= p or p <= max deg_Y G_i.
TheoremReport check_th0(const NormalForm& nf);

/// Single-block characterization: with deg_X F > deg G_1 >= deg_Y G_0,
/// generic holds exactly when deg_Y G_1 = p.
TheoremReport check_thm1(const NormalForm& nf);

/// Multi-block necessary condition: with j - a_l < a_1, Y not dividing the
/// top block and deg_Y G_i < p below it, generic forces deg_Y G_l = p.
TheoremReport check_tm2(const NormalForm& nf);

/// Multi-block sufficient condition (the converse under extra exponent
/// conditions on the lower blocks).
TheoremReport check_tm2_converse(const NormalForm& nf);

/// Difference pattern of the two Hilbert functions: ones exactly in
/// degrees 1..beta.
TheoremReport check_hilb(const NormalForm& nf);

/// Unimodality of H_{R'/J}.
TheoremReport check_unimodal(const NormalForm& nf);

/// Shape parameters for deterministic random forms in normal form.
struct FormShape {
  std::size_t n = 3;  // ring variables beside w: 2 -> (W,Y,Z), 3 -> (W,X,Y,Z)
  int j = 0;
  int p = 0;
  int q = -1;  // optional; must equal j - p when nonnegative
  int m = 0;   // G_0 runs from Y^[p] down to Y^[p-m]; m <= p - 2
  std::vector<int> block_exps;        // ascending X exponents (n == 3)
  int max_block_terms = 3;
  long coeff_range = 2;               // coefficients drawn from 1..range
  bool signed_coeffs = false;
  bool force_pure_z = true;           // last block gets a pure Z power
  std::optional<int> top_block_ydeg;  // force deg_Y of the last block
};

/// Deterministic pseudo-random normal form for the given shape; the same
/// seed always yields the same form. Infeasible shapes are rejected.
DualForm random_form(const FormShape& shape, std::uint64_t seed,
                     const Field& field = Field::rationals());

}  // namespace apolar

#endif
