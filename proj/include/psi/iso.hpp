#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "psi/type.hpp"

namespace psi {

struct Prime;

/// Canonical form of a type: the sorted, nonempty multiset of its prime
/// factors. Two types are isomorphic iff their CanonTypes are equal.
struct CanonType {
  std::vector<Prime> primes;
};

/// A prime factor forall X1..Xk. (arg -> head), or forall X1..Xk. head when
/// `arg` is absent. Bound variables are numbered by absolute binder depth;
/// a head is either such a depth or a free variable name. Depth numbers sort
/// before any free name.
struct Prime {
  using Head = std::variant<std::uint32_t, TypeVar>;

  std::uint32_t prefix = 0;
  Head head;
  std::optional<CanonType> arg;
};

std::strong_ordering operator<=>(const CanonType& a, const CanonType& b);
std::strong_ordering operator<=>(const Prime& a, const Prime& b);
bool operator==(const CanonType& a, const CanonType& b);
bool operator==(const Prime& a, const Prime& b);

std::string to_string(const CanonType& c);

/// Prime factors of `a`, each denoted as a type of shape
/// forall X1..Xk. (C -> Y) or forall X1..Xk. Y, in canonical order.
std::vector<Type> prime_factors(const Type& a);

/// Splits a prime denotation into its prefix, optional argument and head.
struct PrimeView {
  std::vector<TypeVar> prefix;
  std::optional<Type> arg;
  TypeVar head;
};
PrimeView view_prime(const Type& prime);

CanonType canonicalize(const Type& a);

bool types_isomorphic(const Type& a, const Type& b);

/// Right-nested conjunction of `members` sorted by canonical form.
/// Throws std::invalid_argument on an empty list.
Type conjunction_of(std::vector<Type> members);

/// B such that t == a /\ B, with B nonempty.
std::optional<Type> conj_residual(const Type& t, const Type& a);

/// B such that t == s -> B.
std::optional<Type> arrow_residual(const Type& t, const Type& s);

/// (X, C) such that t == forall X. C, X fresh.
struct ForallSplit {
  TypeVar binder;
  Type body;
};
std::optional<ForallSplit> forall_strip(const Type& t);

}  // namespace psi
