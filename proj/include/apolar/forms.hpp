#ifndef APOLAR_FORMS_HPP
#define APOLAR_FORMS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apolar/linalg.hpp"
#include "apolar/variables.hpp"

namespace apolar {

namespace detail {

/// Shared term storage for ring- and dual-side elements: a map from
/// exponent vectors to nonzero coefficients, kept in canonical order.
class Poly {
 public:
  Poly(const VariableSet& vars, const Field& f) : vars_(vars), field_(f) {}

  const VariableSet& vars() const { return vars_; }
  const Field& field() const { return field_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponent, Scalar, GrlexBefore>& terms() const {
    return terms_;
  }

  const Scalar coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Scalar& c);

  bool is_homogeneous() const;
  /// Common total degree; requires a nonzero homogeneous element.
  int degree() const;
  int max_total_degree() const;
  int degree_in(std::size_t var) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  void scale(const Scalar& c);

  bool operator==(const Poly& o) const;

 private:
  VariableSet vars_;
  Field field_;
  std::map<Exponent, Scalar, GrlexBefore> terms_;
};

}  // namespace detail

class RingElement;

/// Element of the divided power algebra R* = k_DP[W, X_1..X_n]: the form F,
/// its blocks, and intermediate contraction results.
class DualForm {
 public:
  DualForm(const VariableSet& vars, const Field& f) : p_(vars, f) {}

  static DualForm monomial(const VariableSet& vars, const Exponent& e,
                           const Scalar& c);

  const VariableSet& vars() const { return p_.vars(); }
  const Field& field() const { return p_.field(); }
  bool is_zero() const { return p_.is_zero(); }
  std::size_t term_count() const { return p_.term_count(); }
  const std::map<Exponent, Scalar, GrlexBefore>& terms() const {
    return p_.terms();
  }
  const Scalar coefficient(const Exponent& e) const {
    return p_.coefficient(e);
  }
  void add_term(const Exponent& e, const Scalar& c) { p_.add_term(e, c); }

  bool is_homogeneous() const { return p_.is_homogeneous(); }
  int degree() const { return p_.degree(); }

  DualForm& operator+=(const DualForm& o);
  DualForm& operator-=(const DualForm& o);
  DualForm operator+(const DualForm& o) const;
  DualForm operator-(const DualForm& o) const;
  void scale(const Scalar& c) { p_.scale(c); }

  bool operator==(const DualForm& o) const { return p_ == o.p_; }
  bool operator!=(const DualForm& o) const { return !(*this == o); }

  std::string str() const;

  const detail::Poly& poly() const { return p_; }

 private:
  detail::Poly p_;
};

/// Element of the polynomial ring R = k[w, x_1..x_n]: ideal members, g,
/// generator representatives.
class RingElement {
 public:
  RingElement(const VariableSet& vars, const Field& f) : p_(vars, f) {}

  static RingElement monomial(const VariableSet& vars, const Exponent& e,
                              const Scalar& c);
  static RingElement variable(const VariableSet& vars, std::size_t i,
                              const Field& f);

  const VariableSet& vars() const { return p_.vars(); }
  const Field& field() const { return p_.field(); }
  bool is_zero() const { return p_.is_zero(); }
  std::size_t term_count() const { return p_.term_count(); }
  const std::map<Exponent, Scalar, GrlexBefore>& terms() const {
    return p_.terms();
  }
  const Scalar coefficient(const Exponent& e) const {
    return p_.coefficient(e);
  }
  void add_term(const Exponent& e, const Scalar& c) { p_.add_term(e, c); }

  bool is_homogeneous() const { return p_.is_homogeneous(); }
  int degree() const { return p_.degree(); }

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  void scale(const Scalar& c) { p_.scale(c); }

  bool operator==(const RingElement& o) const { return p_ == o.p_; }
  bool operator!=(const RingElement& o) const { return !(*this == o); }

  std::string str() const;

  const detail::Poly& poly() const { return p_; }

 private:
  detail::Poly p_;
};

/// Divided power product: X^[a] X^[b] = C(a+b, a) X^[a+b] in each variable,
/// extended bilinearly.
DualForm dp_multiply(const DualForm& f, const DualForm& g);

/// Contraction (apolarity action): x^a acts on X^[b] by X^[b-a] when b >= a
/// and by zero otherwise, per variable, coefficients preserved.
DualForm contract(const RingElement& f, const DualForm& F);

/// Exponent up-shift in one variable, coefficients kept. Inverse of
/// contraction by that variable: contract(v, shift_up(F, v)) == F.
DualForm shift_up(const DualForm& F, std::size_t var);

/// Ordinary commutative polynomial product on the ring side.
RingElement ring_multiply(const RingElement& f, const RingElement& g);

/// Highest exponent of one variable over all terms; errors on zero input.
int deg_in_var(const DualForm& F, std::size_t var);
int deg_in_var(const RingElement& f, std::size_t var);
/// Largest total degree over all terms; errors on zero input.
int max_deg(const DualForm& F);

/// Dense coefficient vector with respect to a degree basis. Terms of other
/// degrees are rejected.
std::vector<Scalar> coeff_vector(const DualForm& F, const MonomialIndex& idx);
std::vector<Scalar> coeff_vector(const RingElement& f,
                                 const MonomialIndex& idx);
DualForm dual_from_vector(const VariableSet& vars, const Field& f,
                          const MonomialIndex& idx,
                          const std::vector<Scalar>& v);
RingElement ring_from_vector(const VariableSet& vars, const Field& f,
                             const MonomialIndex& idx,
                             const std::vector<Scalar>& v);

/// Rewrite an element over a sub-variable-set into a larger one; `at[i]`
/// gives the index in `bigger` of the i-th small variable.
RingElement embed(const RingElement& f, const VariableSet& bigger,
                  const std::vector<std::size_t>& at);
DualForm embed(const DualForm& f, const VariableSet& bigger,
               const std::vector<std::size_t>& at);

/// Inverse of embed: rewrite over the smaller set, with `from[i]` the index
/// in f's variables of the i-th small variable. Errors if f involves a
/// dropped variable.
RingElement restrict_to(const RingElement& f, const VariableSet& smaller,
                        const std::vector<std::size_t>& from);
DualForm restrict_to(const DualForm& f, const VariableSet& smaller,
                     const std::vector<std::size_t>& from);

}  // namespace apolar

#endif
