#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>

#include "psi/normalize.hpp"
#include "psi/rewrite.hpp"

namespace psi {

/// Number of pair constructors outside any argument position.
std::uint64_t measure_P(const Term& r);
/// Termination measure, invariant under equivalence.
std::uint64_t measure_M(const Term& r);

struct MeasurePair {
  std::uint64_t m;
  std::uint64_t p;
  friend bool operator==(const MeasurePair&, const MeasurePair&) = default;
};
MeasurePair measures(const Term& r);

/// Length of the longest reduction from `r`, or nothing when a budget was hit.
std::optional<std::size_t> longest_reduction(
    const Term& r, std::size_t class_budget,
    std::size_t graph_budget = kDefaultGraphBudget);
std::optional<std::size_t> longest_reduction(const Term& r);

/// Shapes of terms equivalent to a pair <r, s>.
enum class PairShape {
  Pair,     // <u, v>
  Lam,      // lam x^A. a  with a equivalent to a pair
  App,      // a v         with a equivalent to a pair
  TLam,     // tlam X. a   with a equivalent to a pair
  TApp,     // a [A]       with a equivalent to a pair
  Unknown,  // no shape confirmed and some class hit its budget
  Violation,
};
std::string to_string(PairShape shape);

/// For PairShape::Pair: which decomposition matched.
///   'c': u ~ r and v ~ s, or swapped
///   'b': one side absorbs part of the other component
///   'a': both sides are pairs mixing parts of r and s
struct PairClassification {
  PairShape shape;
  char subcase = 0;
};

/// Classifies members of the class of <r, s>. Subterm classes are cached,
/// so reuse one classifier across the members of a class.
class PairClassifier {
 public:
  PairClassifier(const Term& r, const Term& s, std::size_t budget);

  PairClassification classify(const Term& t);

 private:
  const EquivClass& class_of(const Term& t);
  bool pair_case_b(const Term& u, const Term& v, const EquivClass& r,
                   const Term& s);
  PairClassification classify_pair(const Term& u, const Term& v);

  Term r_;
  Term s_;
  std::size_t budget_;
  std::unordered_map<std::string, EquivClass> cache_;
  bool incomplete_ = false;
};

PairClassification pair_shape_classify(const Term& t, const Term& r,
                                       const Term& s, std::size_t budget);

}  // namespace psi
