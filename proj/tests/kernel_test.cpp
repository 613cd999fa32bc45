#include "support/generators.h"
#include "support/oracles.h"

#include "pasp/pasp.h"

#include <gtest/gtest.h>

using namespace pasp;
using namespace pasp::kernel;
using pasp::testing::Gen;

namespace {

const Literal a(0), b(1), c(2);

Program load_simple() { return parse_program("0.8: a. 0.6: -b :- a. 0.7: c :- a, -b. 0.9: d :- d."); }

Distribution random_distribution(Gen& g, const Base& base) {
  const auto values = pasp::testing::quarters();
  std::vector<Certainty> t(base.world_count());
  for (auto& x : t) x = g.pick(values);
  return Distribution(base, t);
}

}  // namespace

TEST(Base, MapsAtomsToPositions) {
  const Base base({5, 2, 9});
  EXPECT_EQ(base.size(), 3u);
  EXPECT_EQ(base.world_count(), 8u);
  EXPECT_EQ(base.position(2), 1u);
  EXPECT_FALSE(base.position(3).has_value());
  const std::vector<AtomId> in{5, 9};
  EXPECT_EQ(base.world_of(in).bits, 0b101u);
}

TEST(Base, RejectsDuplicatesUnknownAtomsAndOversize) {
  EXPECT_THROW(Base({1, 1}), Error);
  EXPECT_THROW(Base::first(2).mask(Clause{Literal(4)}), Error);
  EXPECT_THROW(Base::first(5, 4), CapExceeded);
  EXPECT_NO_THROW(Base::first(4, 4));
}

TEST(Base, OfCollectsClauseAtoms) {
  const std::vector<Clause> cs{Clause{Literal(3), Literal(1, true)}, Clause{Literal(7)}};
  EXPECT_EQ(Base::of(cs).atoms(), (std::vector<AtomId>{1, 3, 7}));
}

TEST(Distribution, CapLowersOnly) {
  Distribution pi(Base::first(1));
  EXPECT_TRUE(pi.cap(World{1}, Certainty::half()));
  EXPECT_FALSE(pi.cap(World{1}, Certainty::one()));
  EXPECT_EQ(pi[World{1}], Certainty::half());
  EXPECT_TRUE(pi.is_normalized());
  pi.set(World{0}, Certainty::zero());
  pi.set(World{1}, Certainty::zero());
  EXPECT_TRUE(pi.is_vacuous());
  EXPECT_EQ(pi.height(), Certainty::zero());
}

TEST(Distribution, TableSizeMustMatch) {
  EXPECT_THROW(Distribution(Base::first(2), std::vector<Certainty>(3)), Error);
}

TEST(Measures, TautologyAndBottom) {
  Gen g(11);
  const Base base = Base::first(3);
  for (int i = 0; i < 100; ++i) {
    const Distribution pi = random_distribution(g, base);
    EXPECT_EQ(necessity(pi, Clause{a, ~a}), Certainty::one());
    EXPECT_EQ(necessity(pi, Clause::bottom()), pi.height().complement());
    EXPECT_EQ(possibility(pi, {}), pi.height());
  }
}

TEST(Measures, AgreeWithDefinitionOnRandomDistributions) {
  Gen g(12);
  const Base base = Base::first(3);
  for (int i = 0; i < 300; ++i) {
    const Distribution pi = random_distribution(g, base);
    const std::vector<Clause> cnf{pasp::testing::random_clause(g, 3, 3, 0.5),
                                  pasp::testing::random_clause(g, 3, 3, 0.5)};
    EXPECT_EQ(possibility(pi, cnf), oracle::possibility(pi.table(), cnf));
    EXPECT_EQ(necessity_of_cnf(pi, cnf), oracle::necessity_cnf(pi.table(), cnf));
    EXPECT_EQ(necessity(pi, cnf[0]), oracle::necessity(pi.table(), cnf[0]));
  }
}

TEST(Measures, NecessityIsMonotoneInEntailment) {
  Gen g(13);
  const Base base = Base::first(3);
  for (int i = 0; i < 200; ++i) {
    const Distribution pi = random_distribution(g, base);
    const Clause small = pasp::testing::random_clause(g, 3, 2, 0.4);
    const Clause large = small.merged(Clause{pasp::testing::random_literal(g, 3, 0.4)});
    EXPECT_LE(necessity(pi, small), necessity(pi, large));
  }
}

TEST(Specificity, PointwiseOrder) {
  const Base base = Base::first(1);
  const Distribution high(base, {Certainty::one(), Certainty::one()});
  const Distribution low(base, {Certainty::one(), Certainty::half()});
  const Distribution other(base, {Certainty::half(), Certainty::one()});
  EXPECT_EQ(compare_specificity(high, low), Specificity::greater);
  EXPECT_EQ(compare_specificity(low, high), Specificity::less);
  EXPECT_EQ(compare_specificity(low, low), Specificity::equal);
  EXPECT_EQ(compare_specificity(low, other), Specificity::incomparable);
  EXPECT_THROW(compare_specificity(low, Distribution(Base::first(2))), Error);
}

TEST(LeastSpecific, IsTheGreatestModelOfTheValuation) {
  Gen g(14);
  const Base base = Base::first(2);
  const auto grid = pasp::testing::quarters();
  for (int i = 0; i < 40; ++i) {
    Valuation v(ValuationMode::clausal);
    for (int k = g.range(0, 3); k > 0; --k)
      v.set(pasp::testing::random_clause(g, 2, 2, 0.5), g.pick(grid));
    const Distribution pi = least_specific(v, base);
    auto model = [&](const oracle::Table& t) {
      for (const auto& [key, value] : v.entries())
        if (oracle::necessity(t, key) < value) return false;
      return true;
    };
    const auto maximal = oracle::maximal_tables(2, grid, model);
    ASSERT_EQ(maximal.size(), 1u);
    EXPECT_EQ(pi.table(), maximal.front());
  }
}

TEST(LeastSpecific, EntailmentMatchesMeasure) {
  Valuation v(ValuationMode::clausal);
  v.set(Clause{a, b}, Certainty(7, 10));
  v.set(Clause{~b}, Certainty(2, 10));
  const Base base = Base::first(2);
  EXPECT_TRUE(entails(v, Clause{a}, Certainty(2, 10), base));
  EXPECT_FALSE(entails(v, Clause{a}, Certainty(3, 10), base));
  EXPECT_TRUE(entails(v, Clause{a, b}, Certainty(7, 10), base));
}

TEST(ClauseEntailment, TruthTable) {
  const std::vector<Clause> premises{Clause{a, b}, Clause{~a}};
  EXPECT_TRUE(clause_entailment(premises, Clause{b}));
  EXPECT_FALSE(clause_entailment(premises, Clause{a}));
  EXPECT_TRUE(clause_entailment(premises, Clause{c, ~c}));
  const std::vector<Clause> contradictory{Clause{a}, Clause{~a}};
  EXPECT_TRUE(clause_entailment(contradictory, Clause::bottom()));
  EXPECT_THROW(clause_entailment(premises, Clause{Literal(40)}, 2), CapExceeded);
}

namespace {

Distribution worked_table() {
  const Program p = load_simple();
  return newsem::simple_answer_set(p).distribution;
}

}  // namespace

TEST(Satisfaction, WorldsAndClauses) {
  const Base base = Base::first(2);
  EXPECT_TRUE(satisfies(base, World{0b01}, Clause{a, b}));
  EXPECT_TRUE(satisfies(base, World{0}, Clause{~a}));
  EXPECT_FALSE(satisfies(base, World{0b10}, Clause{a, ~b}));
}

TEST(Measures, ValuesOnTheWorkedTable) {
  const Distribution pi = worked_table();
  const std::vector<Clause> just_b{Clause{b}};
  EXPECT_EQ(possibility(pi, just_b), Certainty(4, 10));
  EXPECT_EQ(necessity(pi, Clause{a}), Certainty(8, 10));
  EXPECT_EQ(necessity(pi, Clause{~b}), Certainty(6, 10));
  EXPECT_EQ(necessity(pi, Clause{Literal(3)}), Certainty::zero());
  const Distribution vacuous(Base::first(2), Certainty::zero());
  EXPECT_EQ(possibility(vacuous, just_b), Certainty::zero());
  EXPECT_EQ(possibility(Distribution(Base::first(2)), {}), Certainty::one());
}

TEST(Specificity, ConstantDistributions) {
  const Distribution top(Base::first(2));
  const Distribution bottom(Base::first(2), Certainty::zero());
  EXPECT_EQ(compare_specificity(top, bottom), Specificity::greater);
  EXPECT_EQ(compare_specificity(top, top), Specificity::equal);
}

TEST(LeastSpecific, ClausalTable) {
  Valuation v(ValuationMode::clausal);
  v.set(Clause{a, b, c}, Certainty::one());
  v.set(Clause{~b}, Certainty::one());
  const Distribution pi = least_specific(v, Base::first(3));
  for (unsigned w = 0; w < 8; ++w) {
    const bool has_b = (w & 0b010) != 0;
    const bool model = !has_b && (w & 0b101) != 0;
    EXPECT_EQ(pi[World{w}], model ? Certainty::one() : Certainty::zero()) << w;
  }
  EXPECT_EQ(least_specific(Valuation(), Base::first(2)), Distribution(Base::first(2)));
  Valuation contradictory;
  contradictory.set(a, Certainty::one());
  contradictory.set(~a, Certainty::one());
  EXPECT_TRUE(least_specific(contradictory, Base::first(1)).is_vacuous());
}
