#pragma once

#include <map>
#include <set>
#include <string>

#include "psi/type.hpp"

namespace psi {

/// Church-style term tree. Every variable occurrence carries its annotation.
///
///   x^A | lam x^A. r | r s | <r, s> | pi_A(r) | tlam X. r | r [A]
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Lam, App, Pair, Proj, TLam, TApp };

  static Term var(TermVar name, Type ann);
  static Term lam(TermVar name, Type ann, Term body);
  static Term app(Term fun, Term arg);
  static Term pair(Term left, Term right);
  static Term proj(Type at, Term of);
  static Term tlam(TypeVar binder, Term body);
  static Term tapp(Term fun, Type at);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_lam() const { return kind() == Kind::Lam; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_pair() const { return kind() == Kind::Pair; }
  bool is_proj() const { return kind() == Kind::Proj; }
  bool is_tlam() const { return kind() == Kind::TLam; }
  bool is_tapp() const { return kind() == Kind::TApp; }

  /// Var / Lam term variable, or the TLam type binder.
  const std::string& name() const;
  /// Var and Lam annotation, Proj index, TApp argument.
  const Type& type() const;
  /// Lam/TLam/Proj body, App/TApp function, Pair left.
  const Term& first() const;
  /// App argument, Pair right.
  const Term& second() const;

  const Term& body() const { return first(); }
  const Term& fun() const { return first(); }
  const Term& arg() const { return second(); }
  const Term& left() const { return first(); }
  const Term& right() const { return second(); }

  std::size_t size() const;
  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  Term() = default;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind;
  std::string name;
  Type type;
  Term a;
  Term b;
  std::size_t size;
};

inline Term::Kind Term::kind() const { return node_->kind; }
inline const std::string& Term::name() const { return node_->name; }
inline const Type& Term::type() const { return node_->type; }
inline const Term& Term::first() const { return node_->a; }
inline const Term& Term::second() const { return node_->b; }
inline std::size_t Term::size() const { return node_->size; }

/// Typing context: at most one binding per variable.
using Context = std::map<TermVar, Type>;

std::set<TypeVar> free_type_vars(const Term& r);
std::set<TypeVar> free_type_vars(const Context& ctx);

/// Free term variables with the annotation of their first occurrence.
std::map<TermVar, Type> free_vars(const Term& r);
bool occurs_free(const TermVar& x, const Term& r);

/// Capture-avoiding [x := s] r.
Term subst_term(const Term& r, const TermVar& x, const Term& s);

/// Capture-avoiding [X := b] r on every annotation and type argument.
Term subst_type(const Term& r, const TypeVar& x, const Type& b);

/// Renames free occurrences of x to y, keeping each occurrence's annotation.
Term rename_var(const Term& r, const TermVar& x, const TermVar& y);

}  // namespace psi
