#pragma once

#include <cstdint>
#include <string>

#include "psi/term.hpp"
#include "psi/type.hpp"

namespace psi {

/// Alpha-canonical form: bound variables renamed by binder depth, so two
/// inputs are alpha-equivalent iff their trees (and keys) are identical.
/// Binder order is kept, so forall X. forall Y. A and forall Y. forall X. A
/// stay distinct.
template <typename T>
struct AlphaCanonical {
  T tree;
  std::string key;
  std::uint64_t digest;
};

AlphaCanonical<Type> alpha_canonical(const Type& a);
AlphaCanonical<Term> alpha_canonical(const Term& r);

/// Canonical serialization only (cheaper than building the tree).
std::string alpha_key(const Type& a);
std::string alpha_key(const Term& r);

std::uint64_t digest_of(const std::string& key);

bool alpha_equal(const Type& a, const Type& b);
bool alpha_equal(const Term& r, const Term& s);

}  // namespace psi
