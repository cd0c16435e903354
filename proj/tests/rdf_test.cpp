#include <gtest/gtest.h>

#include "support.hpp"

using namespace httpld;
using testsupport::Random;

namespace {

const Term s = Term::iri("http://example.org/s");
const Term p = Term::iri("http://example.org/p");
const Term o = Term::literal("o");

}  // namespace

TEST(Term, IriRejectsEmptyAndWhitespace) {
  EXPECT_THROW(Term::iri(""), Error);
  EXPECT_THROW(Term::iri("http://a b"), Error);
  EXPECT_THROW(Term::iri("http://a<b"), Error);
  EXPECT_NO_THROW(Term::iri("urn:x:%20"));
}

TEST(Term, BlankLabelRules) {
  EXPECT_NO_THROW(Term::blank("b1"));
  EXPECT_NO_THROW(Term::blank("a.b-c_d"));
  EXPECT_THROW(Term::blank(""), Error);
  EXPECT_THROW(Term::blank("-x"), Error);
  EXPECT_THROW(Term::blank("x."), Error);
  EXPECT_THROW(Term::blank("a b"), Error);
}

TEST(Term, LanguageLiteralHasLangStringDatatype) {
  Term t = Term::lang_literal("chat", "fr");
  EXPECT_EQ(t.language(), "fr");
  EXPECT_EQ(t.datatype(), std::string(rdf_lang_string));
  EXPECT_THROW(Term::lang_literal("x", "not a tag"), Error);
}

TEST(Term, EqualityIsSyntactic) {
  EXPECT_NE(Term::literal("01", std::string(xsd::integer)), Term::literal("1", std::string(xsd::integer)));
  EXPECT_NE(Term::literal("1"), Term::integer(1));
  EXPECT_EQ(Term::integer(1), Term::literal("1", std::string(xsd::integer)));
  EXPECT_NE(Term::iri("urn:x:a"), Term::blank("a"));
}

TEST(Triple, RejectsLiteralSubjectAndNonIriPredicate) {
  EXPECT_THROW(Triple(o, p, o), Error);
  EXPECT_THROW(Triple(s, Term::blank("b"), o), Error);
  EXPECT_THROW(Triple(s, o, o), Error);
}

TEST(Graph, InsertIsIdempotent) {
  Graph g;
  g = insert(g, Triple(s, p, o));
  EXPECT_EQ(g.size(), 1u);
  g = insert(g, Triple(s, p, o));
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.contains(Triple(s, p, o)));
}

TEST(Graph, MatchRespectsEveryBoundPosition) {
  Random rnd(7);
  for (int round = 0; round < 50; ++round) {
    Graph g = rnd.graph(30);
    std::vector<Triple> all(g.begin(), g.end());
    EXPECT_EQ(match(g, std::nullopt, std::nullopt, std::nullopt).size(), g.size());
    for (const auto& t : all) {
      for (int mask = 0; mask < 8; ++mask) {
        std::optional<Term> qs = mask & 1 ? std::optional<Term>(t.subject()) : std::nullopt;
        std::optional<Term> qp = mask & 2 ? std::optional<Term>(t.predicate()) : std::nullopt;
        std::optional<Term> qo = mask & 4 ? std::optional<Term>(t.object()) : std::nullopt;
        auto got = match(g, qs, qp, qo);
        std::size_t expected = 0;
        for (const auto& u : all) {
          if ((!qs || u.subject() == *qs) && (!qp || u.predicate() == *qp) && (!qo || u.object() == *qo)) {
            ++expected;
            EXPECT_NE(std::find(got.begin(), got.end(), u), got.end());
          }
        }
        EXPECT_EQ(got.size(), expected);
        if (mask == 7) {
          EXPECT_EQ(got.size(), 1u);
        }
      }
    }
  }
}

TEST(Graph, MatchOnEmptyGraph) {
  Graph g;
  EXPECT_TRUE(match(g, s, std::nullopt, std::nullopt).empty());
}

TEST(Graph, LiftedRegistarHasTwoRespEdges) {
  Dataset d = testsupport::lift_fixture("registar.http");
  EXPECT_EQ(match(d.default_graph(), std::nullopt, vocab::resp, std::nullopt).size(), 2u);
}

TEST(Dataset, GraphNamesAreKeysAndLiteralNamesRejected) {
  Dataset d;
  d.graph(Term::iri("urn:g")).add(s, p, o);
  d.graph(Term::iri("urn:g")).add(s, p, Term::literal("x"));
  EXPECT_EQ(d.named_graphs().size(), 1u);
  EXPECT_EQ(d.quad_count(), 2u);
  EXPECT_THROW(d.graph(o), Error);
  EXPECT_EQ(d.find_graph(Term::iri("urn:none")), nullptr);
}

TEST(Path, StarWithoutEdgesIsReflexive) {
  Graph g;
  g.add(s, p, o);
  auto x = Term::iri("http://example.org/x");
  EXPECT_EQ(eval_path(g, x, PathExpr::star(PathExpr::pred(p))), std::set<Term>{x});
}

TEST(Path, CollectionMembersViaRestStarFirst) {
  Graph g = parse_turtle("@prefix ex: <http://example.org/> . ex:s ex:l (1 2 3) .");
  auto head = g.object(Term::iri("http://example.org/s"), Term::iri("http://example.org/l"));
  ASSERT_TRUE(head);
  auto path = PathExpr::seq(PathExpr::star(PathExpr::pred(rdf_term("rest"))), PathExpr::pred(rdf_term("first")));
  std::set<Term> expected;
  // manual walk of first/rest
  for (Term cur = *head; cur != rdf_term("nil"); cur = *g.object(cur, rdf_term("rest")))
    expected.insert(*g.object(cur, rdf_term("first")));
  EXPECT_EQ(expected.size(), 3u);
  EXPECT_EQ(eval_path(g, *head, path), expected);
}

TEST(Path, RegistarBodyIds) {
  Dataset d = testsupport::lift_fixture("registar_turtle.http");
  ASSERT_EQ(d.named_graphs().size(), 1u);
  const Graph& body = d.named_graphs().begin()->second;
  auto path = PathExpr::seq(PathExpr::pred(Term::iri("http://example.org/ns#ids")),
                            PathExpr::seq(PathExpr::star(PathExpr::pred(rdf_term("rest"))),
                                          PathExpr::pred(rdf_term("first"))));
  std::set<Term> expected;
  for (int v : {14, 35, 28, 6, 22}) expected.insert(Term::integer(v));
  EXPECT_EQ(eval_path(body, Term::iri("http://example.org:8080/reg/x8344"), path), expected);
}

TEST(Path, StarTerminatesOnCyclesAndContainsStart) {
  Random rnd(11);
  for (int round = 0; round < 200; ++round) {
    Graph g = rnd.graph(30);
    Term pred = rnd.iri();
    // add a cycle through the predicate to stress termination
    g.add(Term::blank("c1"), pred, Term::blank("c2"));
    g.add(Term::blank("c2"), pred, Term::blank("c1"));
    for (const auto& t : g) {
      auto reach = eval_path(g, t.subject(), PathExpr::star(PathExpr::pred(pred)));
      EXPECT_TRUE(reach.count(t.subject()));
    }
  }
}

TEST(Isomorphism, IdentityRenamingAndLiteralDifference) {
  Graph a = parse_turtle("_:x <urn:p> _:y . _:y <urn:p> \"v\" .");
  Graph b = parse_turtle("_:k <urn:p> _:m . _:m <urn:p> \"v\" .");
  Graph c = parse_turtle("_:k <urn:p> _:m . _:m <urn:p> \"w\" .");
  EXPECT_TRUE(isomorphic(a, a));
  EXPECT_TRUE(isomorphic(a, b));
  EXPECT_FALSE(isomorphic(a, c));
}

TEST(Isomorphism, RegularStructuresNeedBacktracking) {
  // two 3-cycles vs one 6-cycle: same degree everywhere
  Graph two = parse_turtle(
      "_:a <urn:p> _:b . _:b <urn:p> _:c . _:c <urn:p> _:a . _:d <urn:p> _:e . _:e <urn:p> _:f . _:f <urn:p> _:d .");
  Graph six = parse_turtle(
      "_:a <urn:p> _:b . _:b <urn:p> _:c . _:c <urn:p> _:d . _:d <urn:p> _:e . _:e <urn:p> _:f . _:f <urn:p> _:a .");
  EXPECT_FALSE(isomorphic(two, six));
  Graph two_again = parse_turtle(
      "_:u <urn:p> _:v . _:v <urn:p> _:w . _:w <urn:p> _:u . _:x <urn:p> _:y . _:y <urn:p> _:z . _:z <urn:p> _:x .");
  EXPECT_TRUE(isomorphic(two, two_again));
}

TEST(Isomorphism, GraphNamesTakePartInTheMapping) {
  Dataset a = parse_trig("_:g { <urn:s> <urn:p> _:x . } _:x <urn:q> _:g .");
  Dataset b = parse_trig("_:h { <urn:s> <urn:p> _:y . } _:y <urn:q> _:h .");
  Dataset c = parse_trig("_:h { <urn:s> <urn:p> _:y . } _:z <urn:q> _:h .");
  EXPECT_TRUE(isomorphic(a, b));
  EXPECT_FALSE(isomorphic(a, c));
}

TEST(Isomorphism, EquivalenceOnRandomCorpus) {
  Random rnd(23);
  for (int round = 0; round < 100; ++round) {
    Dataset a = rnd.dataset();
    Dataset b = testsupport::relabel(a, rnd.engine());
    Dataset c = testsupport::relabel(b, rnd.engine());
    EXPECT_TRUE(isomorphic(a, a));
    EXPECT_TRUE(isomorphic(a, b));
    EXPECT_TRUE(isomorphic(b, a));
    EXPECT_TRUE(isomorphic(b, c));
    EXPECT_TRUE(isomorphic(a, c));
    // dropping one triple breaks it
    if (!a.default_graph().empty()) {
      Dataset d = b;
      d.default_graph().erase(*d.default_graph().begin());
      EXPECT_FALSE(isomorphic(a, d));
    }
  }
}
