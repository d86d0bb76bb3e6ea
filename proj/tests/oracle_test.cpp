#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "psi/format.hpp"
#include "psi/iso.hpp"
#include "psi/oracle.hpp"
#include "support.hpp"

namespace psi {
namespace {

using test::T;

TEST(Oracle, Examples) {
  EXPECT_TRUE(iso_oracle(T("X /\\ Y"), T("Y /\\ X")).related);
  EXPECT_TRUE(iso_oracle(T("forall X. Y -> X"), T("Y -> forall X. X")).related);

  auto v = iso_oracle(T("X"), T("Y"));
  EXPECT_FALSE(v.related);
  EXPECT_TRUE(v.closed);
  EXPECT_EQ(v.visited, 1u);
}

TEST(Oracle, AlphaInvariantKeys) {
  EXPECT_EQ(oracle_key(T("forall X. X -> Y")), oracle_key(T("forall Q. Q -> Y")));
  EXPECT_NE(oracle_key(T("forall X. X -> Y")), oracle_key(T("forall Y. Y -> Y")));
}

TEST(Oracle, SideConditionRespected) {
  auto v = iso_oracle(T("forall X. X -> X"), T("X -> forall X. X"));
  EXPECT_FALSE(v.related);
  EXPECT_TRUE(v.closed);
}

TEST(Oracle, SwapIsNotAnAxiom) {
  auto v = iso_oracle(T("forall X. forall Y. X -> Y -> X"),
                      T("forall Y. forall X. X -> Y -> X"));
  EXPECT_FALSE(v.related);
  EXPECT_TRUE(v.closed);
}

TEST(Oracle, BudgetIsReported) {
  Type a = T("X -> (Y /\\ X) /\\ (X /\\ Y)");
  auto full = oracle_closure(a);
  ASSERT_TRUE(full.closed);
  ASSERT_GT(full.members.size(), 4u);
  auto cut = oracle_closure(a, 4);
  EXPECT_FALSE(cut.closed);
  EXPECT_EQ(cut.members.size(), 4u);
}

TEST(Oracle, StepsAreSymmetric) {
  for (const auto& a : enumerate_types({"X", "Y"}, 5))
    for (const auto& b : oracle_steps(a)) {
      bool back = false;
      for (const auto& c : oracle_steps(b))
        back = back || oracle_key(c) == oracle_key(a);
      EXPECT_TRUE(back) << format(a) << " -> " << format(b);
    }
}

TEST(Universe, Size) {
  // Binary trees with 2 free variables plus de Bruijn leaves under binders.
  EXPECT_EQ(enumerate_types({"X", "Y"}, 1).size(), 2u);
  EXPECT_EQ(enumerate_types({"X", "Y"}, 2).size(), 2u + 3u);
  EXPECT_EQ(enumerate_types({"X", "Y"}, 7).size(), 5939u);
}

TEST(Universe, DistinctUpToAlpha) {
  std::set<std::string> keys;
  for (const auto& a : enumerate_types({"X", "Y"}, 6))
    EXPECT_TRUE(keys.insert(oracle_key(a)).second) << format(a);
}

// Agreement on the universe up to size 5, every pair.
TEST(UniverseProperty, OracleAgreesOnSmallTypes) {
  auto universe = enumerate_types({"X", "Y"}, 5);
  std::map<std::string, std::size_t> cls;
  for (std::size_t i = 0; i < universe.size(); ++i)
    cls.emplace(oracle_key(universe[i]), i);
  for (std::size_t i = 0; i < universe.size(); ++i) {
    auto c = oracle_closure(universe[i]);
    ASSERT_TRUE(c.closed);
    for (std::size_t j = 0; j < universe.size(); ++j) {
      bool oracle = false;
      for (const auto& k : c.members) {
        auto it = cls.find(k);
        oracle = oracle || (it != cls.end() && it->second == j);
      }
      EXPECT_EQ(types_isomorphic(universe[i], universe[j]), oracle)
          << format(universe[i]) << "  vs  " << format(universe[j]);
    }
  }
}

}  // namespace
}  // namespace psi
