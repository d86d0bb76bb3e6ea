#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "psi/term.hpp"

namespace psi {

/// The eleven structural equivalence schemas and the three reductions.
enum class Rule {
  Comm,
  Asso,
  DistLam,
  DistApp,
  Curry,
  PCommTLamLam,   // tlam X. lam x^A. r  <->  lam x^A. tlam X. r
  PCommTAppLam,   // (lam x^A. r)[B]     <->  lam x^A. r[B]
  PDistTLamPair,  // tlam X. <r, s>      <->  <tlam X. r, tlam X. s>
  PDistTAppPair,  // <r, s>[A]           <->  <r[A], s[A]>
  PDistTLamProj,  // pi_{forall X.A}(tlam X. r)  <->  tlam X. pi_A(r)
  PDistTAppProj,  // (pi_{forall X.B} r)[A]     <->  pi_{[X:=A]B}(r[A])
  BetaLam,
  BetaTLam,
  Proj,
};

inline constexpr Rule kEquivRules[] = {
    Rule::Comm,          Rule::Asso,          Rule::DistLam,
    Rule::DistApp,       Rule::Curry,         Rule::PCommTLamLam,
    Rule::PCommTAppLam,  Rule::PDistTLamPair, Rule::PDistTAppPair,
    Rule::PDistTLamProj, Rule::PDistTAppProj,
};
inline constexpr Rule kReductionRules[] = {Rule::BetaLam, Rule::BetaTLam,
                                           Rule::Proj};

std::string to_string(Rule rule);
bool is_reduction(Rule rule);

/// One rewrite of a term. `reversed` marks a right-to-left use of an
/// equivalence schema as written above.
struct Rewrite {
  Rule rule;
  bool reversed;
  Term term;
};

/// All terms one equivalence step away, at every position, both directions.
std::vector<Rewrite> equiv_neighbors(const Term& r);

/// All one-step reductions, at every position. Reductions are type guarded:
/// beta fires when the argument's type is isomorphic to the binder's
/// annotation, pi when the left component's type is isomorphic to the index.
std::vector<Rewrite> head_reduce(const Term& r);

/// Default member budget for class exploration; the PSI_DEFAULT_BUDGET
/// environment variable overrides it.
std::size_t default_class_budget();

/// Equivalence class explored breadth first from `members[0]`, deduplicated
/// modulo alpha.
class EquivClass {
 public:
  const std::vector<Term>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  /// False when the budget stopped exploration before closure.
  bool exhausted() const { return exhausted_; }
  std::size_t budget() const { return budget_; }

  const std::string& key(std::size_t i) const { return keys_[i]; }
  std::optional<std::size_t> find(const Term& t) const;
  std::optional<std::size_t> find_key(const std::string& key) const;
  bool contains(const Term& t) const { return find(t).has_value(); }

  /// Least alpha key among members; identifies the class when exhausted.
  const std::string& representative_key() const;

  /// Equivalence chain members[0], ..., members[i].
  std::vector<Term> witness(std::size_t i) const;

 private:
  friend EquivClass equiv_class(const Term& r, std::size_t budget);

  std::vector<Term> members_;
  std::vector<std::string> keys_;
  std::vector<std::size_t> parent_;
  std::unordered_map<std::string, std::size_t> index_;
  bool exhausted_ = true;
  std::size_t budget_ = 0;
};

EquivClass equiv_class(const Term& r, std::size_t budget);
EquivClass equiv_class(const Term& r);

/// A reduct of some member of a class.
struct Reduct {
  Term term;
  Rule rule;
  std::size_t member;  // index of the reduced member in the class
};

struct StepResult {
  EquivClass cls;
  std::vector<Reduct> reducts;  // deduplicated modulo alpha
};

/// Reducts of every member of `cls`.
std::vector<Reduct> reducts_of(const EquivClass& cls);

StepResult reduce_step(const Term& r, std::size_t budget);
StepResult reduce_step(const Term& r);

enum class Tri { True, False, Unknown };
std::string to_string(Tri t);

/// Membership of `s` in the equivalence class of `r`.
Tri term_equiv(const Term& r, const Term& s, std::size_t budget);
Tri term_equiv(const Term& r, const Term& s);

}  // namespace psi
