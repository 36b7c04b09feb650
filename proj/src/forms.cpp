#include "apolar/forms.hpp"

#include <sstream>

namespace apolar {

namespace detail {

const Scalar Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Poly::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != vars_.count())
    throw DimensionError("exponent length != variable count");
  if (c.field() != field_)
    throw FieldMismatchError("coefficient from a different field");
  for (int x : e)
    if (x < 0) throw Error("bad-exponent", "negative exponent");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

int Poly::degree() const {
  if (terms_.empty()) throw Error("zero-form", "degree of the zero element");
  if (!is_homogeneous())
    throw Error("inhomogeneous", "degree of an inhomogeneous element");
  return total_degree(terms_.begin()->first);
}

int Poly::max_total_degree() const {
  if (terms_.empty()) throw Error("zero-form", "degree of the zero element");
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

int Poly::degree_in(std::size_t var) const {
  if (terms_.empty())
    throw Error("zero-form", "variable degree of the zero element");
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

Poly& Poly::operator+=(const Poly& o) {
  if (vars_ != o.vars_) throw Error("variable-mismatch", "variable sets differ");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (vars_ != o.vars_) throw Error("variable-mismatch", "variable sets differ");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

void Poly::scale(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
}

bool Poly::operator==(const Poly& o) const {
  return vars_ == o.vars_ && field_ == o.field_ && terms_ == o.terms_;
}

namespace {

std::string render(const Poly& p, bool dual_side) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Scalar coeff = c;
    bool negative = false;
    if (coeff.field().is_rational() && sgn(coeff.rat()) < 0) {
      negative = true;
      coeff = -coeff;
    }
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    bool constant_term = total_degree(e) == 0;
    if (!coeff.is_one() || constant_term) {
      os << coeff.str();
      if (!constant_term && coeff.field().is_rational() &&
          coeff.rat().get_den() != 1)
        os << " ";
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (dual_side ? p.vars().dual_name(i) : p.vars().ring_name(i));
      if (e[i] > 1) {
        if (dual_side)
          os << "^[" << e[i] << "]";
        else
          os << "^" << e[i];
      }
    }
  }
  return os.str();
}

}  // namespace

}  // namespace detail

DualForm DualForm::monomial(const VariableSet& vars, const Exponent& e,
                            const Scalar& c) {
  DualForm f(vars, c.field());
  f.add_term(e, c);
  return f;
}

DualForm& DualForm::operator+=(const DualForm& o) {
  p_ += o.p_;
  return *this;
}

DualForm& DualForm::operator-=(const DualForm& o) {
  p_ -= o.p_;
  return *this;
}

DualForm DualForm::operator+(const DualForm& o) const {
  DualForm r(*this);
  r += o;
  return r;
}

DualForm DualForm::operator-(const DualForm& o) const {
  DualForm r(*this);
  r -= o;
  return r;
}

std::string DualForm::str() const { return detail::render(p_, true); }

RingElement RingElement::monomial(const VariableSet& vars, const Exponent& e,
                                  const Scalar& c) {
  RingElement f(vars, c.field());
  f.add_term(e, c);
  return f;
}

RingElement RingElement::variable(const VariableSet& vars, std::size_t i,
                                  const Field& f) {
  Exponent e(vars.count(), 0);
  e.at(i) = 1;
  return monomial(vars, e, Scalar::one(f));
}

RingElement& RingElement::operator+=(const RingElement& o) {
  p_ += o.p_;
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  p_ -= o.p_;
  return *this;
}

RingElement RingElement::operator+(const RingElement& o) const {
  RingElement r(*this);
  r += o;
  return r;
}

RingElement RingElement::operator-(const RingElement& o) const {
  RingElement r(*this);
  r -= o;
  return r;
}

std::string RingElement::str() const { return detail::render(p_, false); }

DualForm dp_multiply(const DualForm& f, const DualForm& g) {
  if (f.vars() != g.vars())
    throw Error("variable-mismatch", "dp_multiply over different variables");
  if (f.field() != g.field())
    throw FieldMismatchError("dp_multiply over different fields");
  DualForm out(f.vars(), f.field());
  for (const auto& [ea, ca] : f.terms()) {
    for (const auto& [eb, cb] : g.terms()) {
      Exponent e(ea.size());
      mpz_class binom = 1;
      for (std::size_t i = 0; i < ea.size(); ++i) {
        e[i] = ea[i] + eb[i];
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(e[i]),
                     static_cast<unsigned long>(ea[i]));
        binom *= b;
      }
      Scalar c = ca;
      c *= cb;
      c *= Scalar::from_mpz(binom, f.field());
      out.add_term(e, c);
    }
  }
  return out;
}

DualForm contract(const RingElement& f, const DualForm& F) {
  if (f.vars() != F.vars())
    throw Error("variable-mismatch", "contract over different variables");
  if (f.field() != F.field())
    throw FieldMismatchError("contract over different fields");
  DualForm out(F.vars(), F.field());
  for (const auto& [ea, ca] : f.terms()) {
    for (const auto& [eb, cb] : F.terms()) {
      Exponent e(eb.size());
      bool ok = true;
      for (std::size_t i = 0; i < eb.size(); ++i) {
        e[i] = eb[i] - ea[i];
        if (e[i] < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      Scalar c = ca;
      c *= cb;
      out.add_term(e, c);
    }
  }
  return out;
}

DualForm shift_up(const DualForm& F, std::size_t var) {
  DualForm out(F.vars(), F.field());
  for (const auto& [e, c] : F.terms()) {
    Exponent shifted = e;
    shifted.at(var) += 1;
    out.add_term(shifted, c);
  }
  return out;
}

RingElement ring_multiply(const RingElement& f, const RingElement& g) {
  if (f.vars() != g.vars())
    throw Error("variable-mismatch", "ring_multiply over different variables");
  if (f.field() != g.field())
    throw FieldMismatchError("ring_multiply over different fields");
  RingElement out(f.vars(), f.field());
  for (const auto& [ea, ca] : f.terms()) {
    for (const auto& [eb, cb] : g.terms()) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] = ea[i] + eb[i];
      Scalar c = ca;
      c *= cb;
      out.add_term(e, c);
    }
  }
  return out;
}

int deg_in_var(const DualForm& F, std::size_t var) {
  return F.poly().degree_in(var);
}

int deg_in_var(const RingElement& f, std::size_t var) {
  return f.poly().degree_in(var);
}

int max_deg(const DualForm& F) { return F.poly().max_total_degree(); }

namespace {

template <typename T>
std::vector<Scalar> coeff_vector_impl(const T& F, const MonomialIndex& idx) {
  std::vector<Scalar> v(idx.size(), Scalar::zero(F.field()));
  for (const auto& [e, c] : F.terms()) {
    std::size_t pos = idx.position(e);
    if (pos == idx.size())
      throw DimensionError("term outside the basis degree");
    v[pos] = c;
  }
  return v;
}

}  // namespace

std::vector<Scalar> coeff_vector(const DualForm& F, const MonomialIndex& idx) {
  return coeff_vector_impl(F, idx);
}

std::vector<Scalar> coeff_vector(const RingElement& f,
                                 const MonomialIndex& idx) {
  return coeff_vector_impl(f, idx);
}

DualForm dual_from_vector(const VariableSet& vars, const Field& f,
                          const MonomialIndex& idx,
                          const std::vector<Scalar>& v) {
  if (v.size() != idx.size()) throw DimensionError("vector/basis mismatch");
  DualForm out(vars, f);
  for (std::size_t i = 0; i < v.size(); ++i) out.add_term(idx.at(i), v[i]);
  return out;
}

RingElement ring_from_vector(const VariableSet& vars, const Field& f,
                             const MonomialIndex& idx,
                             const std::vector<Scalar>& v) {
  if (v.size() != idx.size()) throw DimensionError("vector/basis mismatch");
  RingElement out(vars, f);
  for (std::size_t i = 0; i < v.size(); ++i) out.add_term(idx.at(i), v[i]);
  return out;
}

namespace {

Exponent embed_exponent(const Exponent& e, std::size_t target_count,
                        const std::vector<std::size_t>& at) {
  Exponent big(target_count, 0);
  for (std::size_t i = 0; i < e.size(); ++i) big.at(at.at(i)) = e[i];
  return big;
}

}  // namespace

RingElement embed(const RingElement& f, const VariableSet& bigger,
                  const std::vector<std::size_t>& at) {
  RingElement out(bigger, f.field());
  for (const auto& [e, c] : f.terms())
    out.add_term(embed_exponent(e, bigger.count(), at), c);
  return out;
}

DualForm embed(const DualForm& f, const VariableSet& bigger,
               const std::vector<std::size_t>& at) {
  DualForm out(bigger, f.field());
  for (const auto& [e, c] : f.terms())
    out.add_term(embed_exponent(e, bigger.count(), at), c);
  return out;
}

namespace {

Exponent restrict_exponent(const Exponent& e, std::size_t small_count,
                           const std::vector<std::size_t>& from) {
  Exponent small(small_count, 0);
  std::vector<bool> kept(e.size(), false);
  for (std::size_t i = 0; i < small_count; ++i) {
    small[i] = e.at(from.at(i));
    kept[from[i]] = true;
  }
  for (std::size_t i = 0; i < e.size(); ++i)
    if (!kept[i] && e[i] != 0)
      throw Error("variable-mismatch",
                  "element involves a variable outside the subring");
  return small;
}

}  // namespace

RingElement restrict_to(const RingElement& f, const VariableSet& smaller,
                        const std::vector<std::size_t>& from) {
  RingElement out(smaller, f.field());
  for (const auto& [e, c] : f.terms())
    out.add_term(restrict_exponent(e, smaller.count(), from), c);
  return out;
}

DualForm restrict_to(const DualForm& f, const VariableSet& smaller,
                     const std::vector<std::size_t>& from) {
  DualForm out(smaller, f.field());
  for (const auto& [e, c] : f.terms())
    out.add_term(restrict_exponent(e, smaller.count(), from), c);
  return out;
}

}  // namespace apolar
