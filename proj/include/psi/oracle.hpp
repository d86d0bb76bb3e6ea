#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "psi/type.hpp"

namespace psi {

/// Brute-force isomorphism oracle. Works on its own nameless representation
/// and rewrites with the six axioms directly, so it shares no code with the
/// canonical-form engine.
///
/// Axioms, each usable in both directions at any position:
///   A /\ B                 ==  B /\ A
///   A /\ (B /\ C)          ==  (A /\ B) /\ C
///   A -> (B /\ C)          ==  (A -> B) /\ (A -> C)
///   (A /\ B) -> C          ==  A -> B -> C
///   forall X. (A -> B)     ==  A -> forall X. B        if X not free in A
///   forall X. (A /\ B)     ==  (forall X. A) /\ (forall X. B)

inline constexpr std::size_t kDefaultOracleBudget = 50000;

/// Nameless serialization: equal iff the types are alpha-equivalent.
std::string oracle_key(const Type& a);

/// Types one axiom step away from `a`, bound variables named Z0, Z1, ...
std::vector<Type> oracle_steps(const Type& a);

struct OracleClosure {
  std::vector<std::string> members;  // nameless keys, BFS order
  bool closed;                       // false when the budget stopped BFS
};

/// Every type reachable from `a` by axiom steps, up to `budget` members.
OracleClosure oracle_closure(const Type& a,
                             std::size_t budget = kDefaultOracleBudget);

struct OracleVerdict {
  bool related;
  bool closed;          // search space exhausted (a "no" is then definite)
  std::size_t visited;
};

OracleVerdict iso_oracle(const Type& a, const Type& b,
                         std::size_t budget = kDefaultOracleBudget);

/// All types over `free_vars` with at most `max_size` constructors,
/// variables included. Bound variables are named Z0, Z1, ... by depth.
std::vector<Type> enumerate_types(const std::vector<TypeVar>& free_vars,
                                  std::size_t max_size);

}  // namespace psi
