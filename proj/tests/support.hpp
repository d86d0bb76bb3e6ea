#pragma once

#include <string_view>

#include "psi/parse.hpp"

namespace psi::test {

inline Type T(std::string_view text) { return parse_type(text); }
inline Term R(std::string_view text, const Context& ctx = {}) {
  return parse_term(text, ctx);
}

}  // namespace psi::test
