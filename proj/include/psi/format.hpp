#pragma once

#include <string>

#include "psi/term.hpp"
#include "psi/type.hpp"

namespace psi {

/// Minimal-parentheses concrete syntax. Machine-generated fresh names are
/// shown as parseable names that do not clash with the rest of the text.
std::string format(const Type& a);
std::string format(const Term& r);

/// format(r) followed by a `where` clause annotating its free variables, so
/// the text parses back without any extra context.
std::string format_standalone(const Term& r);

std::string format(const Context& ctx);

}  // namespace psi
