#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "psi/term.hpp"
#include "psi/type.hpp"

namespace psi {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Types:  forall X. T  |  T -> T (right assoc)  |  T /\ T  |  (T)
/// `/\` binds tighter than `->`; `forall` extends as far right as possible.
Type parse_type(std::string_view text);

/// Terms:  lam x : T . t  |  tlam X . t  |  t t  |  t [T]  |  < t , t >
///         |  pi [T] t  |  (t), optionally followed by
///         `where x : T, y : U` annotating free variables.
/// Free variables must be annotated by `ctx` or the where clause.
Term parse_term(std::string_view text, const Context& ctx = {});

/// Bindings  x : T, y : U
Context parse_context(std::string_view text);

/// A `.psi` source file:
///
///   -- comment
///   ctx g : A -> B, r : A
///   def apply = (lam f : A -> B . lam x : A . f x) <g, r>
///   expect apply : B
///   expect apply => g r
///
/// `ctx` directives accumulate and apply to every later declaration.
struct Declaration {
  std::string name;
  Context ctx;
  Term term;
  int line;
};

struct Expectation {
  enum class Kind { HasType, ReducesTo };

  std::string name;
  Kind kind;
  std::optional<Type> type;  // HasType
  std::optional<Term> term;  // ReducesTo
  int line;
};

struct SourceFile {
  std::vector<Declaration> declarations;
  std::vector<Expectation> expectations;
  std::string text;

  const Declaration* find(const std::string& name) const;
};

SourceFile parse_source(std::string_view text);
SourceFile load_source(const std::string& path);

}  // namespace psi
