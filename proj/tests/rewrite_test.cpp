#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

#include "psi/alpha.hpp"
#include "psi/format.hpp"
#include "psi/generator.hpp"
#include "psi/iso.hpp"
#include "psi/measures.hpp"
#include "psi/normalize.hpp"
#include "psi/rewrite.hpp"
#include "psi/typecheck.hpp"
#include "schemas.hpp"
#include "support.hpp"

namespace psi {
namespace {

using test::R;
using test::T;

bool contains(const std::vector<Rewrite>& rs, const Term& t) {
  return std::any_of(rs.begin(), rs.end(),
                     [&](const Rewrite& r) { return alpha_equal(r.term, t); });
}

bool contains(const std::vector<Reduct>& rs, const Term& t) {
  return std::any_of(rs.begin(), rs.end(),
                     [&](const Reduct& r) { return alpha_equal(r.term, t); });
}

TEST(EquivNeighbors, Examples) {
  auto n = equiv_neighbors(R("<x, y> where x : X, y : Y"));
  ASSERT_EQ(n.size(), 1u);
  EXPECT_TRUE(alpha_equal(n[0].term, R("<y, x> where x : X, y : Y")));
  EXPECT_EQ(n[0].rule, Rule::Comm);

  EXPECT_TRUE(contains(
      equiv_neighbors(R("f <s, t> where f : X /\\ Y -> Z, s : X, t : Y")),
      R("f s t where f : X /\\ Y -> Z, s : X, t : Y")));

  EXPECT_TRUE(contains(
      equiv_neighbors(R("lam x : A . <u, v> where u : B, v : C")),
      R("<lam x : A . u, lam x : A . v> where u : B, v : C")));

  EXPECT_TRUE(equiv_neighbors(R("x where x : X")).empty());
}

TEST(EquivNeighbors, EverySchemaFiresForward) {
  for (const auto& s : test::schema_instances()) {
    if (is_reduction(s.rule)) continue;
    Term t = R(s.text);
    auto n = equiv_neighbors(t);
    EXPECT_TRUE(std::any_of(n.begin(), n.end(),
                            [&](const Rewrite& r) { return r.rule == s.rule; }))
        << to_string(s.rule);
  }
}

TEST(EquivNeighbors, EveryStepIsReversible) {
  for (const auto& s : test::schema_instances()) {
    if (is_reduction(s.rule)) continue;
    Term t = R(s.text);
    for (const auto& n : equiv_neighbors(t))
      EXPECT_TRUE(contains(equiv_neighbors(n.term), t))
          << to_string(n.rule) << ": " << format(t) << " -> " << format(n.term);
  }
}

TEST(EquivNeighbors, DistLamMergesAlphaEqualBinders) {
  Term t = R("<lam x : A . u, lam y : A . v> where u : B, v : C");
  EXPECT_TRUE(contains(equiv_neighbors(t),
                       R("lam z : A . <u, v> where u : B, v : C")));
  // Different annotations do not merge.
  Term s = R("<lam x : A . u, lam y : B . v> where u : B, v : C");
  for (const auto& n : equiv_neighbors(s)) EXPECT_NE(n.rule, Rule::DistLam);
}

TEST(EquivNeighbors, DistLamReverseAvoidsCapture) {
  // <lam x. x, lam y. x>: merging under x would capture the free x.
  Term t = R("<lam x : A . x, lam y : A . x> where x : B");
  for (const auto& n : equiv_neighbors(t)) {
    if (n.rule != Rule::DistLam) continue;
    EXPECT_EQ(free_vars(n.term), free_vars(t)) << format(n.term);
    EXPECT_TRUE(types_isomorphic(*try_synthesize(n.term), *try_synthesize(t)));
  }
}

TEST(EquivNeighbors, QuantifierCommutationSideCondition) {
  // X occurs in the annotation, so the quantifier cannot move inside.
  Term t = R("tlam X . lam x : X . x");
  for (const auto& n : equiv_neighbors(t))
    EXPECT_NE(n.rule, Rule::PCommTLamLam) << format(n.term);
}

TEST(EquivNeighbors, ProjectionUnderTypeApplicationBothWays) {
  Term fwd = R("(pi [forall W. W] <z, w>) [X] "
               "where z : forall W. W, w : forall W. W -> W");
  Term back = R("pi [X] (<z, w> [X]) "
                "where z : forall W. W, w : forall W. W -> W");
  EXPECT_TRUE(contains(equiv_neighbors(fwd), back));
  EXPECT_TRUE(contains(equiv_neighbors(back), fwd));
}

TEST(EquivClass, Examples) {
  EXPECT_EQ(equiv_class(R("x where x : X")).size(), 1u);
  EXPECT_EQ(equiv_class(R("<x, y> where x : X, y : Y")).size(), 2u);

  Term t = R("lam x : X . <y, z> where y : Y, z : Z");
  EquivClass cls = equiv_class(t);
  EXPECT_TRUE(cls.exhausted());
  EXPECT_EQ(cls.size(), 4u);
  for (const char* m :
       {"lam x : X . <z, y>", "<lam x : X . y, lam x : X . z>",
        "<lam x : X . z, lam x : X . y>"})
    EXPECT_TRUE(cls.contains(R(std::string(m) + " where y : Y, z : Z"))) << m;
}

TEST(EquivClass, WitnessChainsAreSteps) {
  EquivClass cls = equiv_class(
      R("f <a, <b, c>> where f : X /\\ Y /\\ Z -> W, a : X, b : Y, c : Z"));
  for (std::size_t i = 0; i < cls.size(); ++i) {
    auto chain = cls.witness(i);
    ASSERT_FALSE(chain.empty());
    EXPECT_TRUE(alpha_equal(chain.front(), cls.members()[0]));
    EXPECT_TRUE(alpha_equal(chain.back(), cls.members()[i]));
    for (std::size_t k = 1; k < chain.size(); ++k)
      EXPECT_TRUE(contains(equiv_neighbors(chain[k - 1]), chain[k]));
  }
}

TEST(EquivClass, BudgetStopsExploration) {
  Term t = R("<<a, b>, <c, d>> where a : X, b : Y, c : Z, d : W");
  EquivClass full = equiv_class(t);
  ASSERT_TRUE(full.exhausted());
  ASSERT_GT(full.size(), 3u);
  EquivClass small = equiv_class(t, 3);
  EXPECT_FALSE(small.exhausted());
  EXPECT_EQ(small.size(), 3u);
  EXPECT_EQ(term_equiv(t, full.members().back(), 3), Tri::Unknown);
}

TEST(EquivClass, DefaultBudgetFromEnvironment) {
  ::setenv("PSI_DEFAULT_BUDGET", "17", 1);
  EXPECT_EQ(default_class_budget(), 17u);
  ::setenv("PSI_DEFAULT_BUDGET", "nonsense", 1);
  EXPECT_EQ(default_class_budget(), 10000u);
  ::unsetenv("PSI_DEFAULT_BUDGET");
  EXPECT_EQ(default_class_budget(), 10000u);
}

TEST(HeadReduce, Examples) {
  auto r = head_reduce(
      R("(lam x : X /\\ Y . x) <a, b> where a : X, b : Y"));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].rule, Rule::BetaLam);
  EXPECT_TRUE(alpha_equal(r[0].term, R("<a, b> where a : X, b : Y")));

  EXPECT_TRUE(
      head_reduce(R("(lam x : X . u) <a, b> where u : Z, a : X, b : Y"))
          .empty());

  r = head_reduce(R("pi [X] <x1, x2> where x1 : X, x2 : X"));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(alpha_equal(r[0].term, R("x1 where x1 : X")));
}

TEST(HeadReduce, GuardsUseIsomorphism) {
  auto r = head_reduce(
      R("(lam x : X /\\ Y . x) c where c : Y /\\ X"));
  ASSERT_EQ(r.size(), 1u);
  r = head_reduce(R("pi [X /\\ Y] <c, d> where c : Y /\\ X, d : Z"));
  ASSERT_EQ(r.size(), 1u);
}

TEST(HeadReduce, EverySchemaFires) {
  for (const auto& s : test::schema_instances()) {
    if (!is_reduction(s.rule)) continue;
    auto r = head_reduce(R(s.text));
    EXPECT_TRUE(std::any_of(r.begin(), r.end(),
                            [&](const Rewrite& w) { return w.rule == s.rule; }))
        << to_string(s.rule);
  }
}

TEST(ReduceStep, Examples) {
  const char* ctx = " where g : X -> Y, r : X";
  auto step = reduce_step(
      R(std::string("(lam f : X -> Y . lam x : X . f x) <g, r>") + ctx));
  EXPECT_TRUE(contains(step.reducts,
                       R(std::string("(lam x : X . g x) r") + ctx)));

  step = reduce_step(R("pi [X] <x1, x2> where x1 : X, x2 : X"));
  EXPECT_EQ(step.reducts.size(), 2u);
  EXPECT_TRUE(contains(step.reducts, R("x1 where x1 : X")));
  EXPECT_TRUE(contains(step.reducts, R("x2 where x2 : X")));

  EXPECT_TRUE(reduce_step(R("x where x : X")).reducts.empty());
}

TEST(Normalize, Examples) {
  auto one = [](const std::string& text) {
    auto traces = normalize(R(text), Strategy::Exhaustive);
    EXPECT_EQ(traces.size(), 1u) << text;
    EXPECT_TRUE(traces.at(0).exhaustive);
    return traces.at(0).result;
  };
  const char* gr = " where g : X -> Y, r : X";
  EXPECT_EQ(term_equiv(one(std::string("(lam f : X -> Y . lam x : X . f x) <g, r>") + gr),
                       R(std::string("g r") + gr)),
            Tri::True);
  EXPECT_EQ(term_equiv(one(std::string("(lam f : X -> Y . lam x : X . f x) r g") + gr),
                       R(std::string("g r") + gr)),
            Tri::True);
  EXPECT_EQ(term_equiv(one(std::string("(lam z : (X -> Y) /\\ X . "
                                       "(pi [X -> Y] z) (pi [X] z)) g r") + gr),
                       R(std::string("g r") + gr)),
            Tri::True);
  EXPECT_EQ(term_equiv(one("(pi [forall X. X -> X] (tlam X . "
                           "<lam x : X . x, r>)) [A] where r : A"),
                       R("lam x : A . x")),
            Tri::True);

  auto traces = normalize(R("x where x : X"), Strategy::Deterministic);
  ASSERT_EQ(traces.size(), 1u);
  EXPECT_TRUE(traces[0].steps.empty());
  EXPECT_TRUE(alpha_equal(traces[0].result, R("x where x : X")));
}

TEST(Normalize, TraceStepsAreReductions) {
  Term t = R("(lam z : (X -> Y) /\\ X . (pi [X -> Y] z) (pi [X] z)) g r "
             "where g : X -> Y, r : X");
  for (Strategy s : {Strategy::Deterministic, Strategy::Exhaustive}) {
    for (const auto& trace : normalize(t, s)) {
      EXPECT_EQ(trace.steps.size(), 3u);
      Term at = trace.input;
      for (const auto& step : trace.steps) {
        EXPECT_TRUE(alpha_equal(step.from, at));
        EXPECT_TRUE(is_reduction(step.rule));
        ASSERT_FALSE(step.witness.empty());
        EXPECT_TRUE(alpha_equal(step.witness.front(), step.from));
        for (std::size_t k = 1; k < step.witness.size(); ++k)
          EXPECT_TRUE(contains(equiv_neighbors(step.witness[k - 1]),
                               step.witness[k]));
        auto r = head_reduce(step.witness.back());
        EXPECT_TRUE(std::any_of(r.begin(), r.end(), [&](const Rewrite& w) {
          return w.rule == step.rule && alpha_equal(w.term, step.to);
        }));
        at = step.to;
      }
      EXPECT_TRUE(alpha_equal(at, trace.result));
    }
  }
}

TEST(Normalize, NonDeterministicProjection) {
  auto traces = normalize(R("pi [X] <x1, x2> where x1 : X, x2 : X"),
                          Strategy::Exhaustive);
  ASSERT_EQ(traces.size(), 2u);
  auto det = normalize(R("pi [X] <x1, x2> where x1 : X, x2 : X"),
                       Strategy::Deterministic);
  ASSERT_EQ(det.size(), 1u);
  EXPECT_TRUE(alpha_equal(det[0].result, R("x1 where x1 : X")));
}

TEST(Normalize, DeterminizedProjection) {
  auto traces = normalize(
      R("(pi [B -> A] <lam x : B . r, lam x : C . s>) t "
        "where r : A, s : A, t : B"),
      Strategy::Exhaustive);
  ASSERT_EQ(traces.size(), 1u);
  EXPECT_EQ(term_equiv(traces[0].result, R("r where r : A")), Tri::True);
}

TEST(TermEquiv, Examples) {
  EXPECT_EQ(term_equiv(R("<r, s> where r : X, s : Y"),
                       R("<s, r> where r : X, s : Y")),
            Tri::True);
  EXPECT_EQ(term_equiv(R("f <s, t> where f : X /\\ Y -> Z, s : X, t : Y"),
                       R("f s t where f : X /\\ Y -> Z, s : X, t : Y")),
            Tri::True);
  EXPECT_EQ(term_equiv(R("x where x : X"), R("y where y : X")), Tri::False);
}

// ---- properties ------------------------------------------------------------

TEST(RewriteProperty, SubjectReductionPerSchema) {
  for (const auto& s : test::schema_instances()) {
    Term t = R(s.text);
    Type a = synthesize({}, t);
    auto steps = is_reduction(s.rule) ? head_reduce(t) : equiv_neighbors(t);
    for (const auto& w : steps) {
      auto b = try_synthesize(w.term);
      ASSERT_TRUE(b) << to_string(w.rule) << ": " << format(w.term);
      EXPECT_TRUE(types_isomorphic(a, *b)) << to_string(w.rule);
    }
  }
}

TEST(RewriteProperty, SubjectReductionOnGeneratedTerms) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Term t = gen_typed_term(10, seed).term;
    Type a = synthesize({}, t);
    for (const auto& w : equiv_neighbors(t)) {
      auto b = try_synthesize(w.term);
      ASSERT_TRUE(b) << to_string(w.rule) << ": " << format(t) << " -> "
                     << format(w.term);
      EXPECT_TRUE(types_isomorphic(a, *b)) << format(w.term);
    }
    for (const auto& r : reduce_step(t).reducts) {
      auto b = try_synthesize(r.term);
      ASSERT_TRUE(b) << to_string(r.rule) << ": " << format(r.term);
      EXPECT_TRUE(types_isomorphic(a, *b)) << format(r.term);
    }
  }
}

TEST(RewriteProperty, StepsAreSymmetricOnGeneratedTerms) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Term t = gen_typed_term(8, seed).term;
    for (const auto& w : equiv_neighbors(t))
      EXPECT_TRUE(contains(equiv_neighbors(w.term), t))
          << to_string(w.rule) << ": " << format(t) << " -> "
          << format(w.term);
  }
}

TEST(RewriteProperty, MeasuresInvariantAlongSteps) {
  for (const auto& s : test::schema_instances()) {
    if (is_reduction(s.rule)) continue;
    Term t = R(s.text);
    for (const auto& w : equiv_neighbors(t))
      EXPECT_EQ(measures(w.term), measures(t)) << to_string(w.rule);
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Term t = gen_typed_term(10, seed).term;
    for (const auto& w : equiv_neighbors(t))
      EXPECT_EQ(measures(w.term), measures(t))
          << to_string(w.rule) << ": " << format(t);
  }
}

TEST(RewriteProperty, PairReductsStayPairs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = gen_typed_pair(8, seed);
    const Term& r = g.term.left();
    const Term& s = g.term.right();
    // Each component either reduces or stays put (up to equivalence).
    std::vector<Term> lefts{r};
    std::vector<Term> rights{s};
    for (const auto& x : reduce_step(r).reducts) lefts.push_back(x.term);
    for (const auto& y : reduce_step(s).reducts) rights.push_back(y.term);
    for (const auto& red : reduce_step(g.term).reducts) {
      bool found = false;
      for (std::size_t i = 0; i < lefts.size() && !found; ++i)
        for (std::size_t j = 0; j < rights.size() && !found; ++j)
          if ((i || j) && term_equiv(red.term, Term::pair(lefts[i], rights[j]),
                                     2000) == Tri::True)
            found = true;
      EXPECT_TRUE(found) << format(g.term) << " -> " << format(red.term);
    }
  }
}

}  // namespace
}  // namespace psi
