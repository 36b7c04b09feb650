#ifndef APOLAR_FORM_IO_HPP
#define APOLAR_FORM_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "apolar/apolarity.hpp"

namespace apolar {

enum class ShapeTag { W, WZ };

std::string shape_name(ShapeTag s);

/// A validated normal form F = G + c W Z^[j-1] (WZ shape) or
/// F = G + c W^[j] (W shape), with G free of W.
struct NormalForm {
  ShapeTag shape;
  DualForm F;      // as analyzed (after optional auto-normalization)
  DualForm G;      // F minus the socle term, still over the full variables
  Scalar w_coeff;  // coefficient of the socle term
  int j = 0;       // socle degree
  bool i2_pattern = false;  // ann(F)_2 is exactly the expected quadric space
  std::vector<std::string> findings;
};

/// Structural validation of a parsed form. Checks: homogeneous, j >= 2,
/// exactly one W-term of shape W^[j] or W Z^[j-1], and (WZ shape) no term
/// of G equal to a single variable times Z^[j-1]. With `auto_normalize`
/// such terms are absorbed into W (the substitution W -> W + L) instead of
/// raising an error. The I_2 pattern is reported, not enforced.
NormalForm validate_normal_form(const DualForm& F, bool auto_normalize = false);

/// One form plus its file-level metadata and optional expected values.
struct FormDocument {
  VariableSet vars;
  Field field;
  std::string form_text;
  DualForm form;
  std::string label;
  std::string note;
  std::optional<long> expect_mu_i;
  std::optional<long> expect_mu_j;
  std::optional<bool> expect_generic;
  /// Entry whose recorded verdict is disputed in its source; expected
  /// values are reported for information instead of hard-checked.
  bool informational = false;
};

/// Parse one form in bracket notation over declared variables:
///   form  := sign? term (sign term)*
///   term  := coeff? factor+        (a '.' after the coefficient is ignored)
///   coeff := integer ('/' integer)?
///   factor:= varname ('^[' uint ']')?
/// Repeated variables inside a term add exponents; duplicate monomials
/// across terms sum coefficients.
DualForm parse_form(const std::string& text, const VariableSet& vars,
                    const Field& field);

/// Canonical rendering in the same bracket notation (graded order, within a
/// degree lexicographically from the first declared variable).
std::string render_form(const DualForm& F);

/// Parse a full form document:
///   vars: W X Y Z
///   socle: Z          (optional; defaults to the last variable)
///   field: Q          (or p=<prime>; optional, defaults to Q)
///   form: <text>
///   label:, note:, expect.muI:, expect.muJ:, expect.generic: (optional)
/// '#' starts a comment line.
FormDocument parse_document(const std::string& content);
FormDocument load_form_file(const std::string& path);

/// The built-in example corpus with the expected values recorded for each
/// entry. Entries with `informational` set carry a disputed verdict note.
const std::vector<FormDocument>& corpus();

}  // namespace apolar

#endif
