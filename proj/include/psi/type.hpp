#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace psi {

/// Type variables are plain identifiers; names produced by fresh_name()
/// contain a '#' and can never come out of the parser.
using TypeVar = std::string;
using TermVar = std::string;

/// Returns a globally unique name derived from `base`.
std::string fresh_name(const std::string& base);

/// True for names minted by fresh_name().
bool is_fresh_name(const std::string& name);

/// The part of a name before any fresh-name suffix.
std::string base_name(const std::string& name);

/// Immutable type tree:  X | A -> B | A /\ B | forall X. A
class Type {
 public:
  enum class Kind : std::uint8_t { Var, Arrow, Conj, Forall };

  static Type var(TypeVar name);
  static Type arrow(Type dom, Type cod);
  static Type conj(Type left, Type right);
  static Type forall(TypeVar binder, Type body);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_arrow() const { return kind() == Kind::Arrow; }
  bool is_conj() const { return kind() == Kind::Conj; }
  bool is_forall() const { return kind() == Kind::Forall; }

  /// Variable name, or the binder of a Forall.
  const TypeVar& name() const;
  /// Domain of an Arrow, left side of a Conj.
  const Type& left() const;
  /// Codomain of an Arrow, right side of a Conj.
  const Type& right() const;
  /// Body of a Forall.
  const Type& body() const;

  /// Number of constructors, variables included.
  std::size_t size() const;

  bool same_node(const Type& other) const { return node_ == other.node_; }

  /// Exact structural equality (names included, no alpha).
  friend bool operator==(const Type& a, const Type& b);

 private:
  friend class Term;
  struct Node;
  Type() = default;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Type::Node {
  Kind kind;
  TypeVar name;
  Type a;
  Type b;
  std::size_t size;
};

inline Type::Kind Type::kind() const { return node_->kind; }
inline const TypeVar& Type::name() const { return node_->name; }
inline const Type& Type::left() const { return node_->a; }
inline const Type& Type::right() const { return node_->b; }
inline const Type& Type::body() const { return node_->a; }
inline std::size_t Type::size() const { return node_->size; }

std::set<TypeVar> free_type_vars(const Type& a);
bool occurs_free(const TypeVar& x, const Type& a);

/// Capture-avoiding [x := b] a.
Type subst_type(const Type& a, const TypeVar& x, const Type& b);

/// Renames a Forall's binder to `fresh` throughout its body.
Type rename_binder(const Type& forall, const TypeVar& fresh);

/// forall X1 ... Xn. body
Type forall_all(const std::vector<TypeVar>& binders, Type body);

}  // namespace psi
