#include <gtest/gtest.h>

#include "psi/format.hpp"
#include "psi/generator.hpp"
#include "psi/measures.hpp"
#include "support.hpp"

namespace psi {
namespace {

using test::R;

TEST(MeasureP, Examples) {
  EXPECT_EQ(measure_P(R("x where x : X")), 0u);
  EXPECT_EQ(measure_P(R("<x, y> where x : X, y : Y")), 1u);
  EXPECT_EQ(measure_P(R("lam x : A . <y, z> where y : Y, z : Z")), 1u);
  // Arguments do not count.
  EXPECT_EQ(measure_P(R("f <y, z> where f : Y /\\ Z -> W, y : Y, z : Z")), 0u);
  EXPECT_EQ(measure_P(R("<f, g> y where f : Y -> W, g : Y -> V, y : Y")), 1u);
}

TEST(MeasureM, Examples) {
  EXPECT_EQ(measure_M(R("x where x : X")), 1u);
  EXPECT_EQ(measure_M(R("<x, y> where x : X, y : Y")), 2u);
  EXPECT_EQ(measure_M(R("lam x : X . <y, z> where y : Y, z : Z")), 4u);
  EXPECT_EQ(measure_M(R("<lam x : X . y, lam x : X . z> where y : Y, z : Z")),
            4u);
  // M(rs) = M(r) + M(s) + P(r) M(s)
  EXPECT_EQ(measure_M(R("<f, g> y where f : Y -> W, g : Y -> V, y : Y")), 4u);
  EXPECT_EQ(measure_M(R("<f y, g y> where f : Y -> W, g : Y -> V, y : Y")),
            4u);
}

TEST(Measures, AtLeastOne) {
  for (std::uint64_t seed = 0; seed < 200; ++seed)
    EXPECT_GE(measure_M(gen_typed_term(10, seed).term), 1u);
}

// M strictly decreases into every immediate subterm.
void expect_decreasing(const Term& t) {
  std::uint64_t m = measure_M(t);
  switch (t.kind()) {
    case Term::Kind::Var:
      return;
    case Term::Kind::Lam:
    case Term::Kind::Proj:
    case Term::Kind::TLam:
      EXPECT_GT(m, measure_M(t.body())) << format(t);
      expect_decreasing(t.body());
      return;
    case Term::Kind::TApp:
      EXPECT_GT(m, measure_M(t.fun())) << format(t);
      expect_decreasing(t.fun());
      return;
    case Term::Kind::App:
      EXPECT_GT(m, measure_M(t.fun())) << format(t);
      EXPECT_GT(m, measure_M(t.arg())) << format(t);
      expect_decreasing(t.fun());
      expect_decreasing(t.arg());
      return;
    case Term::Kind::Pair:
      EXPECT_GT(m, measure_M(t.left())) << format(t);
      EXPECT_GT(m, measure_M(t.right())) << format(t);
      expect_decreasing(t.left());
      expect_decreasing(t.right());
      return;
  }
}

TEST(MeasureProperty, StrictlyDecreasingIntoSubterms) {
  for (std::uint64_t seed = 0; seed < 500; ++seed)
    expect_decreasing(gen_typed_term(10, seed).term);
}

TEST(MeasureProperty, ConstantAcrossClasses) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Term t = gen_typed_term(8, seed).term;
    MeasurePair mp = measures(t);
    EquivClass cls = equiv_class(t, 2000);
    for (const auto& m : cls.members())
      EXPECT_EQ(measures(m), mp) << format(t) << "  ~  " << format(m);
  }
}

TEST(LongestReduction, Examples) {
  EXPECT_EQ(longest_reduction(R("x where x : X")), 0u);
  EXPECT_EQ(longest_reduction(R("(lam x : X . x) y where y : X")), 1u);
  EXPECT_EQ(longest_reduction(
                R("(lam z : (X -> Y) /\\ X . (pi [X -> Y] z) (pi [X] z)) g r "
                  "where g : X -> Y, r : X")),
            3u);
}

TEST(LongestReduction, UnknownWhenBudgetHit) {
  Term t = R("(lam z : (X -> Y) /\\ X . (pi [X -> Y] z) (pi [X] z)) g r "
             "where g : X -> Y, r : X");
  EXPECT_EQ(longest_reduction(t, 2), std::nullopt);
}

TEST(PairShape, Examples) {
  Term x = R("x where x : X");
  Term y = R("y where y : Y");
  auto c = pair_shape_classify(Term::pair(y, x), x, y, 1000);
  EXPECT_EQ(c.shape, PairShape::Pair);
  EXPECT_EQ(c.subcase, 'c');
  c = pair_shape_classify(Term::pair(x, y), x, y, 1000);
  EXPECT_EQ(c.shape, PairShape::Pair);
  EXPECT_EQ(c.subcase, 'c');

  Term u = R("lam x : X . u where u : U");
  Term v = R("lam x : X . v where v : V");
  c = pair_shape_classify(R("lam x : X . <u, v> where u : U, v : V"), u, v,
                          1000);
  EXPECT_EQ(c.shape, PairShape::Lam);
}

TEST(PairShape, AssociatedComponents) {
  Term a = R("a where a : X");
  Term bc = R("<b, c> where b : Y, c : Z");
  auto c = pair_shape_classify(R("<<a, b>, c> where a : X, b : Y, c : Z"), a,
                               bc, 1000);
  EXPECT_EQ(c.shape, PairShape::Pair);
  EXPECT_NE(c.subcase, 'c');
}

TEST(PairShape, ApplicationAndTypeApplication) {
  Term f = R("f a where f : X -> Y, a : X");
  Term g = R("g a where g : X -> Z, a : X");
  EXPECT_EQ(pair_shape_classify(
                R("<f, g> a where f : X -> Y, g : X -> Z, a : X"), f, g, 1000)
                .shape,
            PairShape::App);
  Term z = R("z [X] where z : forall W. W");
  Term w = R("w [X] where w : forall W. W -> W");
  EXPECT_EQ(pair_shape_classify(
                R("<z, w> [X] where z : forall W. W, w : forall W. W -> W"), z,
                w, 1000)
                .shape,
            PairShape::TApp);
}

TEST(PairShapeProperty, GeneratedPairsNeverViolate) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = gen_typed_pair(8, seed);
    PairClassifier classifier(g.term.left(), g.term.right(), 2000);
    EquivClass cls = equiv_class(g.term, 2000);
    for (const auto& m : cls.members()) {
      auto c = classifier.classify(m);
      EXPECT_NE(c.shape, PairShape::Violation)
          << format(g.term) << "  ~  " << format(m);
    }
  }
}

}  // namespace
}  // namespace psi
