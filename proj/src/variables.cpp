#include "apolar/variables.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace apolar {

int total_degree(const Exponent& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool grlex_before(const Exponent& a, const Exponent& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // within a degree, lexicographically larger first
  return a > b;
}

VariableSet VariableSet::make(std::vector<std::string> dual_names) {
  if (dual_names.size() < 2)
    throw Error("bad-variables", "need at least two variables");
  std::set<std::string> seen;
  for (const auto& name : dual_names) {
    if (name.empty()) throw Error("bad-variables", "empty variable name");
    if (!seen.insert(name).second)
      throw Error("bad-variables", "duplicate variable name '" + name + "'");
  }
  auto impl = std::make_shared<Impl>();
  impl->dual = std::move(dual_names);
  impl->ring.reserve(impl->dual.size());
  for (const auto& name : impl->dual) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    impl->ring.push_back(lower);
  }
  return VariableSet(std::move(impl));
}

std::size_t VariableSet::index_of_dual(const std::string& name) const {
  for (std::size_t i = 0; i < count(); ++i)
    if (impl_->dual[i] == name) return i;
  return count();
}

VariableSet VariableSet::without_w() const {
  std::vector<std::string> names(impl_->dual.begin() + 1, impl_->dual.end());
  return make(std::move(names));
}

VariableSet VariableSet::subset(const std::vector<std::size_t>& keep) const {
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (std::size_t i : keep) names.push_back(impl_->dual.at(i));
  return make(std::move(names));
}

namespace {

void enumerate(std::size_t slot, int remaining,
               const std::vector<std::size_t>& active, Exponent& current,
               std::vector<Exponent>& out) {
  if (slot + 1 == active.size()) {
    current[active[slot]] = remaining;
    out.push_back(current);
    current[active[slot]] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[active[slot]] = e;
    enumerate(slot + 1, remaining - e, active, current, out);
  }
  current[active[slot]] = 0;
}

}  // namespace

std::vector<Exponent> monomial_basis(
    const VariableSet& vars, int degree,
    const std::vector<std::size_t>& restrict_to) {
  if (degree < 0) throw Error("bad-degree", "negative degree");
  std::vector<std::size_t> active = restrict_to;
  if (active.empty())
    for (std::size_t i = 0; i < vars.count(); ++i) active.push_back(i);

  std::vector<Exponent> out;
  Exponent current(vars.count(), 0);
  if (degree == 0) {
    out.push_back(current);
    return out;
  }
  if (active.empty()) return out;
  enumerate(0, degree, active, current, out);
  return out;
}

MonomialIndex::MonomialIndex(const VariableSet& vars, int degree,
                             const std::vector<std::size_t>& restrict_to)
    : list_(monomial_basis(vars, degree, restrict_to)) {
  for (std::size_t i = 0; i < list_.size(); ++i) pos_.emplace(list_[i], i);
}

std::size_t MonomialIndex::position(const Exponent& e) const {
  auto it = pos_.find(e);
  return it == pos_.end() ? size() : it->second;
}

}  // namespace apolar
