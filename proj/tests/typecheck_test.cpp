#include <gtest/gtest.h>

#include "psi/format.hpp"
#include "psi/generator.hpp"
#include "psi/iso.hpp"
#include "psi/rewrite.hpp"
#include "psi/typecheck.hpp"
#include "support.hpp"

namespace psi {
namespace {

using test::R;
using test::T;

TypeErrorKind error_of(const Context& ctx, const Term& r,
                       Scope scope = Scope::Open) {
  try {
    synthesize(ctx, r, scope);
  } catch (const TypeError& e) {
    return e.kind();
  }
  ADD_FAILURE() << format(r) << " type-checked";
  return TypeErrorKind::UnboundVariable;
}

TEST(Synthesize, ApplicationToAPair) {
  Context ctx{{"g", T("X -> Y")}, {"r", T("X")}};
  Term t = R("(lam f : X -> Y . lam x : X . f x) <g, r>", ctx);
  EXPECT_TRUE(types_isomorphic(synthesize(ctx, t, Scope::Closed), T("Y")));
}

TEST(Synthesize, ProjectionOfAnAbstraction) {
  Context ctx{{"u", T("Y")}, {"v", T("Z")}};
  Term t = R("pi [X -> Y] (lam x : X . <u, v>)", ctx);
  EXPECT_TRUE(types_isomorphic(synthesize(ctx, t), T("X -> Y")));
}

TEST(Synthesize, ProjectionReturnsTheIndex) {
  Term t = R("pi [Y /\\ X] <<a, b>, c> where a : X, b : Y, c : Z");
  EXPECT_EQ(synthesize({}, t), T("Y /\\ X"));
}

TEST(Synthesize, PolymorphicTerms) {
  EXPECT_TRUE(types_isomorphic(
      synthesize({}, R("(tlam X . lam x : A . lam f : A -> X . f x) r "
                       "where r : A")),
      T("forall X. (A -> X) -> X")));
  EXPECT_TRUE(types_isomorphic(
      synthesize({}, R("pi [forall X. X -> X] (tlam X . <lam x : X . x, r>) "
                       "where r : A")),
      T("forall X. X -> X")));
  EXPECT_EQ(synthesize({}, R("(tlam X . lam x : X . x) [A /\\ B]")),
            T("A /\\ B -> A /\\ B"));
}

TEST(Synthesize, ResidualsAbsorbIsomorphisms) {
  // Arguments in either order, or as a pair.
  Term f = R("f where f : X -> Y -> Z");
  Term a = R("a where a : X");
  Term b = R("b where b : Y");
  EXPECT_EQ(synthesize({}, Term::app(Term::app(f, b), a)), T("Z"));
  EXPECT_EQ(synthesize({}, Term::app(f, Term::pair(b, a))), T("Z"));
  // Type application through a commuted quantifier.
  EXPECT_TRUE(types_isomorphic(synthesize({}, R("g [W] where g : Y -> forall X. X")),
                               T("Y -> W")));
}

TEST(Synthesize, UnboundVariableInClosedMode) {
  Term t = R("x where x : X");
  EXPECT_EQ(error_of({}, t, Scope::Closed), TypeErrorKind::UnboundVariable);
  EXPECT_EQ(synthesize({}, t, Scope::Open), T("X"));
}

TEST(Synthesize, AnnotationMismatch) {
  Context ctx{{"x", T("Y")}};
  EXPECT_EQ(error_of(ctx, Term::var("x", T("X"))),
            TypeErrorKind::AnnotationMismatch);
  // Isomorphic annotations are accepted.
  Context iso{{"x", T("X /\\ Y")}};
  EXPECT_NO_THROW(synthesize(iso, Term::var("x", T("Y /\\ X"))));
}

TEST(Synthesize, ConflictingFreeAnnotations) {
  Term t = Term::pair(Term::var("x", T("X")), Term::var("x", T("Y")));
  EXPECT_EQ(error_of({}, t), TypeErrorKind::AnnotationMismatch);
}

TEST(Synthesize, NotAnArrow) {
  EXPECT_EQ(error_of({}, R("a b where a : X, b : Y")),
            TypeErrorKind::NotAnArrow);
  EXPECT_EQ(error_of({}, R("f b where f : X -> Y, b : Y")),
            TypeErrorKind::NotAnArrow);
}

TEST(Synthesize, NotAConjunction) {
  EXPECT_EQ(error_of({}, R("pi [X] a where a : X")),
            TypeErrorKind::NotAConjunction);
}

TEST(Synthesize, ProjectionTypeNotPresent) {
  EXPECT_EQ(error_of({}, R("pi [Z] <a, b> where a : X, b : Y")),
            TypeErrorKind::ProjectionTypeNotPresent);
}

TEST(Synthesize, NotAUniversal) {
  EXPECT_EQ(error_of({}, R("a [Y] where a : X")),
            TypeErrorKind::NotAUniversal);
}

TEST(Synthesize, EscapingTypeVariable) {
  Context ctx{{"x", T("X")}};
  EXPECT_EQ(error_of(ctx, R("tlam X . x", ctx)),
            TypeErrorKind::EscapingTypeVariable);
  EXPECT_EQ(error_of({}, R("tlam X . x where x : X")),
            TypeErrorKind::EscapingTypeVariable);
  // Bound term variables do not count.
  EXPECT_NO_THROW(synthesize({}, R("tlam X . lam x : X . x")));
}

TEST(Synthesize, ErrorPathPointsAtInnermostSubterm) {
  try {
    synthesize({}, R("<c, lam x : X . a b> where a : X, b : Y, c : Z"));
    FAIL();
  } catch (const TypeError& e) {
    EXPECT_EQ(e.path(), (TermPath{1, 0}));
    EXPECT_EQ(to_string(e.path()), "1.0");
  }
}

TEST(Check, Examples) {
  Term abs = R("lam f : X -> Y . lam x : X . f x");
  EXPECT_TRUE(check({}, abs, T("(X -> Y) /\\ X -> Y")));
  EXPECT_TRUE(check({}, R("x where x : X"), T("X")));
  EXPECT_FALSE(check({}, R("x where x : X"), T("Y")));
  EXPECT_THROW(check({}, R("a b where a : X, b : Y"), T("X")), TypeError);
}

TEST(Judge, CarriesTheDerivedContext) {
  Judgment j = judge({}, R("f a where f : X -> Y, a : X"));
  EXPECT_EQ(j.type, T("Y"));
}

// ---- properties over generated terms ---------------------------------------

TEST(TypingProperty, GeneratedTermsCheckAgainstTheirGoal) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = gen_typed_term(10, seed);
    Type t = synthesize(g.ctx, g.term, Scope::Closed);
    EXPECT_TRUE(types_isomorphic(t, g.goal)) << format(g.term);
    EXPECT_TRUE(check(g.ctx, g.term, t));
  }
}

TEST(TypingProperty, UnicityAcrossEquivalenceClass) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto g = gen_typed_term(8, seed);
    Type t = synthesize({}, g.term);
    EquivClass cls = equiv_class(g.term, 2000);
    for (const auto& m : cls.members()) {
      auto u = try_synthesize(m);
      ASSERT_TRUE(u) << format(g.term) << "  ~  " << format(m);
      EXPECT_TRUE(types_isomorphic(t, *u))
          << format(g.term) << "  ~  " << format(m);
    }
  }
}

TEST(TypingProperty, TermSubstitutionPreservesTypes) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    auto g = gen_typed_term(10, seed);
    Type a = synthesize({}, g.term);
    for (const auto& [x, b] : free_vars(g.term)) {
      // Any closed-enough term of type b will do; build one from the
      // generator's pool by wrapping a fresh variable.
      Term s = Term::app(Term::var("k" + std::to_string(seed), Type::arrow(T("Q"), b)),
                         Term::var("q", T("Q")));
      Type out = synthesize({}, subst_term(g.term, x, s));
      EXPECT_TRUE(types_isomorphic(out, a)) << format(g.term) << " [" << x
                                            << " := " << format(s) << "]";
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(TypingProperty, TypeSubstitutionPreservesTypes) {
  std::mt19937_64 rng(5);
  const std::vector<TypeVar> pool{"X", "Y"};
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = gen_typed_term(10, seed);
    Type a = synthesize({}, g.term);
    Type b = random_type(rng, 4, pool);
    for (const TypeVar& v : {"X", "Y", "Z"}) {
      Type out = synthesize({}, subst_type(g.term, v, b));
      EXPECT_TRUE(types_isomorphic(out, subst_type(a, v, b)))
          << format(g.term) << " [" << v << " := " << format(b) << "]";
    }
  }
}

}  // namespace
}  // namespace psi
