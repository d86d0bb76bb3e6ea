#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psi/term.hpp"
#include "psi/type.hpp"

namespace psi {

enum class TypeErrorKind {
  UnboundVariable,
  AnnotationMismatch,
  NotAnArrow,
  NotAConjunction,
  NotAUniversal,
  EscapingTypeVariable,
  ProjectionTypeNotPresent,
};

std::string to_string(TypeErrorKind kind);

/// Path of child indices from the root to the failing subterm
/// (0 = body/function/left, 1 = argument/right).
using TermPath = std::vector<int>;

std::string to_string(const TermPath& path);

class TypeError : public std::runtime_error {
 public:
  TypeError(TypeErrorKind kind, TermPath path, const std::string& detail);

  TypeErrorKind kind() const { return kind_; }
  const TermPath& path() const { return path_; }
  const std::string& detail() const { return detail_; }

 private:
  TypeErrorKind kind_;
  TermPath path_;
  std::string detail_;
};

/// Closed: every free variable needs a context binding. Open: free
/// variables not in the context are typed by their own annotation.
enum class Scope { Closed, Open };

struct Judgment {
  Context ctx;
  Term term;
  Type type;
};

/// Synthesizes a type for `r`; any other type of `r` is isomorphic to it.
/// Throws TypeError.
Type synthesize(const Context& ctx, const Term& r, Scope scope = Scope::Open);

/// As synthesize, but returns nothing instead of throwing.
std::optional<Type> try_synthesize(const Context& ctx, const Term& r);
std::optional<Type> try_synthesize(const Term& r);

Judgment judge(const Context& ctx, const Term& r, Scope scope = Scope::Open);

/// True iff `r` synthesizes a type isomorphic to `a`. Throws TypeError.
bool check(const Context& ctx, const Term& r, const Type& a,
           Scope scope = Scope::Open);

}  // namespace psi
