#ifndef APOLAR_VARIABLES_HPP
#define APOLAR_VARIABLES_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "apolar/errors.hpp"

namespace apolar {

/// Exponent vector, one nonnegative entry per variable.
using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// Canonical monomial order: by total degree, then lexicographically with
/// the first declared variable most significant. grlex_before(a, b) is true
/// when a comes before b in a canonical basis listing, i.e. listings run
/// through each degree from the lexicographically largest monomial down.
bool grlex_before(const Exponent& a, const Exponent& b);

struct GrlexBefore {
  bool operator()(const Exponent& a, const Exponent& b) const {
    return grlex_before(a, b);
  }
};

/// Ordered variable names for a ring/dual pair. The dual side carries the
/// declared (uppercase, by convention) names; the ring side uses their
/// lowercase counterparts. The first variable is the distinguished w/W and
/// the last is z/Z of the normal-form logic.
class VariableSet {
 public:
  static VariableSet make(std::vector<std::string> dual_names);

  std::size_t count() const { return impl_->dual.size(); }
  std::size_t n() const { return count() - 1; }

  const std::string& dual_name(std::size_t i) const { return impl_->dual[i]; }
  const std::string& ring_name(std::size_t i) const { return impl_->ring[i]; }
  const std::vector<std::string>& dual_names() const { return impl_->dual; }

  std::size_t w_index() const { return 0; }
  std::size_t z_index() const { return count() - 1; }

  /// Index of a declared dual (or ring) name; count() when absent.
  std::size_t index_of_dual(const std::string& name) const;

  /// The subring k[x_1..x_n] obtained by dropping w/W.
  VariableSet without_w() const;
  /// An arbitrary sub-selection, keeping the given indices in order.
  VariableSet subset(const std::vector<std::size_t>& keep) const;

  bool operator==(const VariableSet& o) const {
    return impl_ == o.impl_ || impl_->dual == o.impl_->dual;
  }
  bool operator!=(const VariableSet& o) const { return !(*this == o); }

 private:
  struct Impl {
    std::vector<std::string> dual;
    std::vector<std::string> ring;
  };
  explicit VariableSet(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// All exponent vectors of total degree d over the variable set, in the
/// canonical listing order. When `restrict_to` is nonempty only those
/// variable indices may carry nonzero exponents.
std::vector<Exponent> monomial_basis(
    const VariableSet& vars, int degree,
    const std::vector<std::size_t>& restrict_to = {});

/// Basis listing of one degree plus a position lookup.
class MonomialIndex {
 public:
  MonomialIndex(const VariableSet& vars, int degree,
                const std::vector<std::size_t>& restrict_to = {});

  std::size_t size() const { return list_.size(); }
  const Exponent& at(std::size_t i) const { return list_[i]; }
  const std::vector<Exponent>& list() const { return list_; }

  /// Position of e in the listing; size() when absent.
  std::size_t position(const Exponent& e) const;

 private:
  std::vector<Exponent> list_;
  std::map<Exponent, std::size_t> pos_;
};

}  // namespace apolar

#endif
