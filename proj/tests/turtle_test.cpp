#include <gtest/gtest.h>

#include "support.hpp"

using namespace httpld;
using testsupport::Random;

TEST(TurtleParse, CollectionExpandsToFirstRestChain) {
  Graph g = parse_turtle("@prefix : <http://example.org/> .\n:foo :ids (1 2 3) .");
  EXPECT_EQ(g.size(), 7u);
  EXPECT_EQ(g.match(std::nullopt, rdf_term("first"), std::nullopt).size(), 3u);
  EXPECT_EQ(g.match(std::nullopt, rdf_term("rest"), std::nullopt).size(), 3u);
  EXPECT_EQ(g.match(std::nullopt, rdf_term("rest"), rdf_term("nil")).size(), 1u);
}

TEST(TurtleParse, EmptyCollectionIsNil) {
  Graph g = parse_turtle("<urn:s> <urn:p> () .");
  EXPECT_TRUE(g.contains(Triple(Term::iri("urn:s"), Term::iri("urn:p"), rdf_term("nil"))));
}

TEST(TurtleParse, TypedDateLiteralInTrigBlock) {
  Dataset d = parse_trig(
      "@prefix : <http://example.org/> .\n"
      "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
      ":B {\n    :foo :ids (1 2 3) ;\n         :date \"2003-02-10\"^^xsd:date .\n}\n");
  const Graph* b = d.find_graph(Term::iri("http://example.org/B"));
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->size(), 8u);
  auto date = b->object(Term::iri("http://example.org/foo"), Term::iri("http://example.org/date"));
  ASSERT_TRUE(date);
  EXPECT_EQ(date->value(), "2003-02-10");
  EXPECT_EQ(date->datatype(), std::string(xsd::date));
  EXPECT_TRUE(d.default_graph().empty());
}

TEST(TurtleParse, NumbersBooleansAndKeywordA) {
  Graph g = parse_turtle(
      "@prefix ex: <http://example.org/> .\nex:s a ex:C ; ex:i -5 ; ex:d 1.50 ; ex:e 1e3 ; ex:b true , false .");
  Term s = Term::iri("http://example.org/s");
  EXPECT_TRUE(g.contains(Triple(s, rdf_term("type"), Term::iri("http://example.org/C"))));
  EXPECT_EQ(*g.object(s, Term::iri("http://example.org/i")), Term::literal("-5", std::string(xsd::integer)));
  EXPECT_EQ(*g.object(s, Term::iri("http://example.org/d")), Term::literal("1.50", std::string(xsd::decimal)));
  EXPECT_EQ(*g.object(s, Term::iri("http://example.org/e")), Term::literal("1e3", std::string(xsd::double_)));
  EXPECT_EQ(g.objects(s, Term::iri("http://example.org/b")).size(), 2u);
}

TEST(TurtleParse, StringsEscapesAndLanguageTags) {
  Graph g = parse_turtle(
      "<urn:s> <urn:p> \"a\\\"b\\n\\u00e9\" , 'single' , \"\"\"long\n\"quoted\" text\"\"\" , \"chat\"@fr .");
  auto list = g.objects(Term::iri("urn:s"), Term::iri("urn:p"));
  std::set<Term> objs(list.begin(), list.end());
  EXPECT_TRUE(objs.count(Term::literal("a\"b\n\xC3\xA9")));
  EXPECT_TRUE(objs.count(Term::literal("single")));
  EXPECT_TRUE(objs.count(Term::literal("long\n\"quoted\" text")));
  EXPECT_TRUE(objs.count(Term::lang_literal("chat", "fr")));
}

TEST(TurtleParse, BracketedBlankNodes) {
  Graph g = parse_turtle("<urn:s> <urn:p> [ <urn:q> 1 ; <urn:r> [] ] . [] <urn:p> 2 . [ <urn:q> 3 ] .");
  EXPECT_EQ(g.size(), 5u);
}

TEST(TurtleParse, SparqlStylePrefixAndComments) {
  Graph g = parse_turtle("# leading comment\nPREFIX ex: <http://example.org/>\nex:a ex:b ex:c . # trailing\n");
  EXPECT_EQ(g.size(), 1u);
}

TEST(TurtleParse, ErrorsCarryPosition) {
  try {
    parse_turtle("<urn:a> <urn:b>");
    FAIL() << "expected a syntax error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  try {
    parse_turtle("<urn:a> <urn:b> <urn:c> .\n\n<urn:a> ex:b <urn:c> .");
    FAIL() << "expected an unknown prefix error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("ex"), std::string::npos);
  }
  EXPECT_THROW(parse_turtle("<urn:a> <urn:b> \"open ."), ParseError);
  EXPECT_THROW(parse_turtle("<urn:a> <urn:b> (1 2 ."), ParseError);
  EXPECT_THROW(parse_turtle("\"lit\" <urn:b> <urn:c> ."), ParseError);
  EXPECT_THROW(parse_turtle("<urn:a> { <urn:a> <urn:b> <urn:c> . }"), ParseError);
  EXPECT_THROW(parse_trig("<urn:g> { <urn:a> <urn:b> <urn:c> . "), ParseError);
}

TEST(TurtleParse, ExplicitLabelsDoNotCollideWithGenerated) {
  Graph g = parse_turtle("_:genid1 <urn:p> [ <urn:q> 1 ] . _:genid2 <urn:p> [] .");
  std::set<Term> blanks;
  for (const auto& t : g) {
    if (t.subject().is_blank()) blanks.insert(t.subject());
    if (t.object().is_blank()) blanks.insert(t.object());
  }
  EXPECT_EQ(blanks.size(), 4u);
}

TEST(TurtleSerialize, EmptyGraph) {
  EXPECT_EQ(serialize_turtle(Graph{}, {}), "");
}

TEST(TurtleSerialize, OneTripleWithKnownPrefix) {
  Graph g;
  g.add(Term::iri("http://w3id.org/http#q"), vocab::mthd_prop, vocab::mthd("GET"));
  PrefixMap prefixes{{"", "http://w3id.org/http#"}, {"mthd", "http://w3id.org/http/mthd#"}};
  std::string text = serialize_turtle(g, prefixes);
  EXPECT_EQ(text,
            "@prefix : <http://w3id.org/http#> .\n@prefix mthd: <http://w3id.org/http/mthd#> .\n\n"
            ":q :mthd mthd:GET .\n");
}

TEST(TurtleSerialize, RenderTermForms) {
  PrefixMap prefixes = vocab::standard_prefixes();
  EXPECT_EQ(render_term(Term::integer(201), prefixes), "201");
  EXPECT_EQ(render_term(Term::literal("5"), prefixes), "\"5\"");
  EXPECT_EQ(render_term(Term::lang_literal("x", "en"), prefixes), "\"x\"@en");
  EXPECT_EQ(render_term(Term::literal("2003-02-10", std::string(xsd::date)), prefixes), "\"2003-02-10\"^^xsd:date");
  EXPECT_EQ(render_term(vocab::sc("Created"), prefixes), "sc:Created");
  EXPECT_EQ(render_term(vocab::content_type, prefixes), "hds:content-type");
  EXPECT_EQ(render_term(Term::iri("http://w3id.org/http#a.b"), prefixes), "<http://w3id.org/http#a.b>");
  EXPECT_EQ(render_term(Term::blank("q1"), prefixes), "_:q1");
}

TEST(TurtleSerialize, RegistarRoundTripAndDeterminism) {
  Dataset d = testsupport::lift_fixture("registar_turtle.http");
  std::string first = serialize_trig(d, vocab::standard_prefixes());
  std::string second = serialize_trig(d, vocab::standard_prefixes());
  EXPECT_EQ(first, second);
  EXPECT_TRUE(isomorphic(parse_trig(first), d));
}

TEST(TurtleSerialize, RandomGraphsRoundTrip) {
  Random rnd(101);
  PrefixMap prefixes = vocab::standard_prefixes();
  prefixes["ex"] = "http://example.org/ns#";
  for (int round = 0; round < 300; ++round) {
    Graph g = rnd.graph();
    std::string text = serialize_turtle(g, round % 2 ? prefixes : PrefixMap{});
    Graph back = parse_turtle(text);
    ASSERT_TRUE(isomorphic(g, back)) << text;
    EXPECT_EQ(text, serialize_turtle(g, round % 2 ? prefixes : PrefixMap{}));
  }
}

TEST(TurtleSerialize, RandomDatasetsRoundTrip) {
  Random rnd(202);
  for (int round = 0; round < 200; ++round) {
    Dataset d = rnd.dataset();
    std::string text = serialize_trig(d, vocab::standard_prefixes());
    ASSERT_TRUE(isomorphic(d, parse_trig(text))) << text;
  }
}

TEST(ParseTerm, PrefixedAndFull) {
  PrefixMap prefixes = vocab::standard_prefixes();
  EXPECT_EQ(parse_term("sc:OK", prefixes), vocab::sc("OK"));
  EXPECT_EQ(parse_term("<urn:x>", prefixes), Term::iri("urn:x"));
  EXPECT_EQ(parse_term("_:q2", prefixes), Term::blank("q2"));
  EXPECT_EQ(parse_term("200", prefixes), Term::integer(200));
  EXPECT_THROW(parse_term("nope:x", prefixes), ParseError);
}
