#ifndef APOLAR_TESTS_TEST_UTIL_HPP
#define APOLAR_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <cctype>
#include <string>

#include "apolar/form_io.hpp"

namespace apolar_test {

inline apolar::VariableSet wxyz() {
  return apolar::VariableSet::make({"W", "X", "Y", "Z"});
}

inline apolar::VariableSet wyz() {
  return apolar::VariableSet::make({"W", "Y", "Z"});
}

inline apolar::VariableSet yz() {
  return apolar::VariableSet::make({"Y", "Z"});
}

inline apolar::DualForm dual(
    const apolar::VariableSet& vars, const std::string& text,
    const apolar::Field& f = apolar::Field::rationals()) {
  return apolar::parse_form(text, vars, f);
}

/// Ring elements written in lowercase: "wz^[2] - y^[2]" etc. The text is
/// uppercased and parsed with the dual grammar, then re-tagged.
inline apolar::RingElement ring(
    const apolar::VariableSet& vars, std::string text,
    const apolar::Field& f = apolar::Field::rationals()) {
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  apolar::DualForm parsed = apolar::parse_form(text, vars, f);
  apolar::RingElement out(vars, f);
  for (const auto& [e, c] : parsed.terms()) out.add_term(e, c);
  return out;
}

}  // namespace apolar_test

#endif
