#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "psi/term.hpp"
#include "psi/type.hpp"

namespace psi {

/// Random type with at most `max_size` constructors over `free_vars`.
/// Quantifiers appear with probability `forall_bias` per inner node.
Type random_type(std::mt19937_64& rng, std::size_t max_size,
                 const std::vector<TypeVar>& free_vars,
                 double forall_bias = 0.2);

struct GeneratedTerm {
  Context ctx;
  Term term;
  Type goal;  // the type the generator aimed for; the term has a type == goal
};

/// Deterministic in (size, seed). The result has at most `size` nodes and
/// type-checks under `ctx`. Generation runs the typing rules backwards from
/// a random goal and mixes in beta redexes, projections of pairs, type
/// abstractions and type applications. About 30% of applications pass a
/// pair or a curried pair of arguments.
GeneratedTerm gen_typed_term(std::size_t size, std::uint64_t seed);

/// A generated pair <r, s> with both components well typed.
GeneratedTerm gen_typed_pair(std::size_t size, std::uint64_t seed);

}  // namespace psi
