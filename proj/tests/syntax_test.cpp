#include "support/fixtures.h"
#include "support/generators.h"

#include "pasp/pasp.h"

#include <gtest/gtest.h>

using namespace pasp;
using namespace pasp::testing;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse_program(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return ParseError(0, 0, "");
}

}  // namespace

TEST(Parser, WeightsDefaultToOne) {
  const Program p = parse_program("0.8: a.\n1/4: -b :- a.\nc :- a, -b.\n");
  ASSERT_EQ(p.rules().size(), 3u);
  EXPECT_EQ(p.rules()[0].weight, Certainty(8, 10));
  EXPECT_EQ(p.rules()[1].weight, Certainty(1, 4));
  EXPECT_EQ(p.rules()[2].weight, Certainty::one());
  EXPECT_EQ(p.mode(), ProgramMode::literal);
  EXPECT_EQ(p.kind(), ProgramKind::simple);
  EXPECT_EQ(p.rules()[1].rule.head, Clause{Literal(1, true)});
}

TEST(Parser, CommentsAndWhitespace) {
  const Program p = parse_program("% header\n  a. % trailing\n\n b :- a.");
  EXPECT_EQ(p.rules().size(), 2u);
  EXPECT_TRUE(parse_program("% only a comment").rules().empty());
  EXPECT_TRUE(parse_program("").rules().empty());
}

TEST(Parser, DoubleNegationCancels) {
  const Program p = parse_program("--a.");
  EXPECT_EQ(p.rules()[0].rule.head, Clause{Literal(0)});
}

TEST(Parser, StrongAndWeakDisjunction) {
  const Program s = parse_program("a ; b. c :- not d.");
  EXPECT_EQ(s.mode(), ProgramMode::literal);
  EXPECT_EQ(s.kind(), ProgramKind::disjunctive);
  const Program w = parse_program("a | b. c :- not (a | d), b.");
  EXPECT_EQ(w.mode(), ProgramMode::clausal);
  EXPECT_EQ(w.kind(), ProgramKind::clausal);
  EXPECT_EQ(w.rules()[1].rule.body[0].clause.size(), 2u);
  EXPECT_TRUE(w.rules()[1].rule.body[0].naf);
  EXPECT_EQ(parse_program("a | b. c :- (a | b).").kind(), ProgramKind::positive_clausal);
}

TEST(Parser, Constraints) {
  const Program p = parse_program(":- a, not b.\na.");
  EXPECT_TRUE(p.rules()[0].rule.is_constraint());
  EXPECT_TRUE(p.has_constraints());
  EXPECT_TRUE(p.has_naf());
}

TEST(Parser, KindsOfLiteralPrograms) {
  EXPECT_EQ(parse_program("a. b :- a.").kind(), ProgramKind::definite);
  EXPECT_EQ(parse_program("a. -b :- a.").kind(), ProgramKind::simple);
  EXPECT_EQ(parse_program("a :- not b.").kind(), ProgramKind::normal);
  EXPECT_EQ(classify(parse_program("a ; b :- c.").rules()[0].rule, ProgramMode::literal),
            RuleKind::strong_disjunctive);
}

TEST(Parser, ErrorsCarryPositions) {
  auto e = parse_error("a.\nb :- c");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_NE(e.message().find("expected"), std::string::npos);

  e = parse_error("a ; b.\nc | d.");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 3u);
  EXPECT_NE(e.message().find("cannot mix"), std::string::npos);

  e = parse_error("0: a.");
  EXPECT_EQ(e.column(), 1u);
  EXPECT_NE(e.message().find("weight must be in (0,1]"), std::string::npos);
  EXPECT_NE(parse_error("1.5: a.").message().find("weight must be in (0,1]"), std::string::npos);

  EXPECT_EQ(parse_program("a :- not (b | c).").mode(), ProgramMode::clausal);
  e = parse_error("a ; b.\nc :- not (a | b).");
  EXPECT_EQ(e.line(), 2u);

  e = parse_error("a | b.\nc :- a | b.");
  EXPECT_NE(e.message().find("parenthesized"), std::string::npos);

  e = parse_error("a :- b $ c.");
  EXPECT_EQ(e.column(), 8u);

  EXPECT_NO_THROW(parse_program("a | b.\nc :- (a | b)."));
}

TEST(Parser, RejectsMalformedStatements) {
  for (const char* bad : {"a", ":- .", "a :- .", "a :- b,.", "(a).", "a ; ; b.", "- .", "a :- not.", "0.5 a."})
    EXPECT_THROW(parse_program(bad), ParseError) << bad;
}

TEST(Query, ClauseAndLevel) {
  SymbolTable s;
  s.intern("a");
  Query q = parse_query("a | -b @ 0.7", s);
  EXPECT_EQ(q.clause.size(), 2u);
  EXPECT_EQ(q.level, Certainty(7, 10));
  EXPECT_EQ(s.size(), 2u);
  q = parse_query("a", s);
  EXPECT_FALSE(q.level.has_value());
  EXPECT_THROW(parse_query("a @ 2", s), ParseError);
  EXPECT_THROW(parse_query("a b", s), ParseError);
  EXPECT_THROW(parse_query("", s), ParseError);
}

TEST(Program, AddValidatesRules) {
  Program p;
  const AtomId a = p.atom("a");
  EXPECT_THROW(p.add(Rule{Clause{Literal(a)}, {}}, Certainty::zero()), Error);
  EXPECT_THROW(p.add(Rule{Clause{Literal(5)}, {}}), Error);
  EXPECT_THROW(p.add(Rule{Clause{Literal(a)}, {BodyItem{Clause{}, false}}}), Error);
  EXPECT_THROW(p.add(Rule{Clause{Literal(a)}, {BodyItem{Clause{Literal(a), Literal(a, true)}, false}}}), Error);
}

TEST(Program, DerivedSets) {
  const Program p = parse_program("0.7: a | b. 0.2: -b. d :- not (a | c). e :- not c.");
  EXPECT_EQ(p.herbrand().size(), 5u);
  EXPECT_EQ(p.heads().size(), 4u);
  EXPECT_EQ(p.naf_clauses().size(), 2u);
  EXPECT_FALSE(p.crisp());
  EXPECT_TRUE(p.has_classical_negation());
  EXPECT_EQ(cert_plus(p), (std::vector<Certainty>{Certainty(0), Certainty(2, 10), Certainty(3, 10),
                                                 Certainty(1, 2), Certainty(7, 10), Certainty(8, 10), Certainty(1)}));
}

TEST(Reduct, LambdaCut) {
  const Program p = parse_program("0.3: a. 0.6: b. c.");
  EXPECT_EQ(lambda_cut(p, Certainty(1, 2)).size(), 2u);
  EXPECT_EQ(lambda_cut(p, Certainty(3, 10)).size(), 3u);
  EXPECT_EQ(lambda_cut(p, Certainty::one()).size(), 1u);
}

TEST(Reduct, GelfondLifschitz) {
  const Program p = parse_program("0.5: a :- not b. c :- a, not -d. :- not a.");
  const Program r = gl_reduct(p, {Literal(*p.symbols().find("b"))});
  ASSERT_EQ(r.rules().size(), 2u);
  EXPECT_FALSE(r.has_naf());
  EXPECT_EQ(r.rules()[0].weight, Certainty::one());
  EXPECT_EQ(r.rules()[0].rule.body.size(), 1u);
}

TEST(CertPlus, ClosedUnderComplement) {
  Gen g(31);
  for (int i = 0; i < 200; ++i) {
    ShapeOptions o;
    o.weights = {Certainty(1, 10), Certainty(1, 3), Certainty(2, 5), Certainty(3, 4), Certainty::one()};
    const Program p = random_literal_program(g, o);
    const auto grid = cert_plus(p);
    EXPECT_TRUE(std::is_sorted(grid.begin(), grid.end()));
    for (const Certainty& c : grid) EXPECT_TRUE(std::binary_search(grid.begin(), grid.end(), c.complement()));
    for (const Certainty& w : p.weights()) EXPECT_TRUE(std::binary_search(grid.begin(), grid.end(), w));
    EXPECT_TRUE(std::binary_search(grid.begin(), grid.end(), Certainty::half()));
  }
}

TEST(Printer, FormatsRulesAndValuations) {
  const Program p = parse_program("0.25: a | -b :- (c | d), not e.\n:- a.");
  EXPECT_EQ(format(p), "0.25: a | -b :- (c | d), not e.\n:- a.\n");
  Valuation v(ValuationMode::clausal);
  v.set(clause(p, "a | -b"), Certainty(1, 2));
  v.set(clause(p, "c"), Certainty(1, 3));
  EXPECT_EQ(format(v, p.symbols()), "{(a | -b)^0.5, c^1/3}");
  EXPECT_EQ(format(Clause::bottom(), p.symbols()), "#false");
  EXPECT_EQ(format(Interpretation{Literal(0), Literal(1, true)}, p.symbols()), "{a, -b}");
}

namespace {

void expect_round_trip(const Program& p) {
  const std::string text = format(p);
  const Program back = parse_program(text);
  EXPECT_EQ(format(back), text);
  EXPECT_EQ(back.mode(), p.mode()) << text;
  ASSERT_EQ(back.rules().size(), p.rules().size());
  for (std::size_t i = 0; i < p.rules().size(); ++i) {
    EXPECT_EQ(back.rules()[i].weight, p.rules()[i].weight);
    EXPECT_EQ(format(back.rules()[i], back.symbols(), back.mode()), format(p.rules()[i], p.symbols(), p.mode()));
  }
}

}  // namespace

TEST(RoundTrip, RandomLiteralPrograms) {
  Gen g(32);
  ShapeOptions o;
  o.atoms = 4;
  o.max_rules = 6;
  o.max_head = 3;
  o.naf = 0.3;
  o.constraint = 0.1;
  o.weights = {Certainty(1, 10), Certainty(1, 3), Certainty(1), Certainty(7, 8)};
  for (int i = 0; i < 300; ++i) {
    Program p = random_literal_program(g, o);
    expect_round_trip(p);
  }
}

TEST(RoundTrip, RandomClausalPrograms) {
  Gen g(33);
  ClausalOptions o;
  o.atoms = 4;
  o.max_rules = 5;
  o.naf = 0.3;
  o.constraint = 0.1;
  o.weights = {Certainty(1, 5), Certainty(1), Certainty(2, 3)};
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    Program p = random_clausal_program(g, o);
    // the clausal mode is only visible in the text through a '|'
    Rule forced{Clause{Literal(0), Literal(1, true)}, {}};
    p.add(forced);
    expect_round_trip(p);
    ++checked;
  }
  EXPECT_EQ(checked, 400);
}

TEST(RoundTrip, DataFiles) {
  for (const char* f : {"airport.pasp", "simple.pasp", "scada.pasp", "strong.pasp", "reduct.pasp", "clausal.pasp"})
    expect_round_trip(load(f));
}

TEST(Parser, AirportAndNafClause) {
  const Program airport = load("airport.pasp");
  ASSERT_EQ(airport.rules().size(), 2u);
  EXPECT_EQ(airport.kind(), ProgramKind::normal);
  EXPECT_EQ(airport.rules()[0].weight, Certainty(1, 10));
  EXPECT_EQ(airport.rules()[1].weight, Certainty::one());
  const Program s = parse_program("a ; b.");
  EXPECT_EQ(s.kind(), ProgramKind::disjunctive);
  EXPECT_EQ(s.rules()[0].weight, Certainty::one());
  const Program c = parse_program("0.8: e :- not (a | b | c).");
  EXPECT_EQ(c.mode(), ProgramMode::clausal);
  ASSERT_EQ(c.rules()[0].rule.body.size(), 1u);
  EXPECT_TRUE(c.rules()[0].rule.body[0].naf);
  EXPECT_EQ(c.rules()[0].rule.body[0].clause.size(), 3u);
}

TEST(CertPlus, SmallPrograms) {
  EXPECT_EQ(cert_plus(load("airport.pasp")), (std::vector<Certainty>{Certainty(0), Certainty(1, 10), Certainty(1, 2),
                                                                    Certainty(9, 10), Certainty(1)}));
  EXPECT_EQ(cert_plus(load("choice.pasp")), (std::vector<Certainty>{Certainty(0), Certainty(1, 2), Certainty(1)}));
  EXPECT_EQ(cert_plus(parse_program("0.7: a. 0.2: b.")),
            (std::vector<Certainty>{Certainty(0), Certainty(2, 10), Certainty(3, 10), Certainty(1, 2),
                                    Certainty(7, 10), Certainty(8, 10), Certainty(1)}));
}

TEST(Reduct, LambdaCutBounds) {
  const Program p = parse_program("0.7: a. 0.2: b.");
  EXPECT_EQ(lambda_cut(p, Certainty(4, 10)), std::vector<Rule>{p.rules()[0].rule});
  EXPECT_TRUE(lambda_cut(p, Certainty(71, 100)).empty());
  EXPECT_EQ(lambda_cut(p, Certainty(2, 10)).size(), 2u);
}

TEST(Reduct, GelfondLifschitzExamples) {
  const Program airport = load("airport.pasp");
  const Program r = gl_reduct(airport, interpretation(airport, {"invalid"}));
  EXPECT_EQ(format(r), "0.1: invalid.\n");
  const Program positive = parse_program("a. b :- a.");
  EXPECT_EQ(gl_reduct(positive, interpretation(positive, {"a"})), positive);
  const Program self = load("extras.pasp");
  EXPECT_EQ(format(gl_reduct(self, {})), "a.\n");
}

TEST(Reduct, ClausalReductExamples) {
  const Program positive = parse_program("0.5: a | b. c :- (a | b).");
  Valuation v(ValuationMode::clausal);
  v.set(clause(positive, "a | b"), Certainty::half());
  EXPECT_EQ(clausal_reduct(positive, v), positive);
  const Program blocked = parse_program("x :- not (t | u). t.");
  Valuation w(ValuationMode::clausal);
  w.set(clause(blocked, "t"), Certainty::one());
  EXPECT_EQ(format(clausal_reduct(blocked, w)), "t.\n");
}
