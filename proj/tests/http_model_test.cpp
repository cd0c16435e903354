#include <gtest/gtest.h>

#include "support.hpp"

using namespace httpld;

namespace {

Request get(const std::string& url) { return Request{Method("GET"), parse_uri(url), {}, std::nullopt, "1.1"}; }

}  // namespace

TEST(StatusClass, ExhaustiveRanges) {
  for (int code = 0; code <= 999; ++code) {
    auto c = status_class(code);
    std::optional<StatusClass> expected;
    if (code >= 100 && code <= 199) expected = StatusClass::Informational;
    if (code >= 200 && code <= 299) expected = StatusClass::Successful;
    if (code >= 300 && code <= 399) expected = StatusClass::Redirection;
    if (code >= 400 && code <= 499) expected = StatusClass::ClientError;
    if (code >= 500 && code <= 599) expected = StatusClass::ServerError;
    EXPECT_EQ(c, expected) << code;
    EXPECT_EQ(is_interim(code), expected == StatusClass::Informational) << code;
  }
  EXPECT_EQ(status_class(201), StatusClass::Successful);
  EXPECT_FALSE(status_class(99));
}

TEST(StatusClass, InterimExamples) {
  EXPECT_TRUE(is_interim(100));
  EXPECT_FALSE(is_interim(201));
  EXPECT_FALSE(is_interim(599));
  EXPECT_TRUE(is_interim(Response(103)));
}

TEST(StandardStatus, NamesAgreeWithEmbeddedOntology) {
  Graph onto = embedded_ontology();
  std::map<std::string, int> from_ontology;
  for (const auto& t : onto.match(std::nullopt, vocab::statusCodeNumber, std::nullopt)) {
    const std::string& iri = t.subject().value();
    ASSERT_EQ(iri.rfind(vocab::sc_ns, 0), 0u) << iri;
    from_ontology[iri.substr(vocab::sc_ns.size())] = std::stoi(t.object().value());
  }
  EXPECT_EQ(from_ontology.size(), standard_statuses.size());
  for (const auto& [name, code] : from_ontology) {
    EXPECT_EQ(standard_status_name(code), std::optional<std::string>(name));
    EXPECT_EQ(standard_status_code(name), std::optional<int>(code));
  }
}

TEST(StandardStatus, Examples) {
  EXPECT_EQ(standard_status_name(201), std::optional<std::string>("Created"));
  EXPECT_EQ(standard_status_name(200), std::optional<std::string>("OK"));
  EXPECT_EQ(standard_status_name(302), std::optional<std::string>("Found"));
  EXPECT_EQ(standard_status_name(226), std::optional<std::string>("IMUsed"));
  EXPECT_EQ(standard_status_name(506), std::optional<std::string>("VariantAlsoNegotiates"));
  EXPECT_FALSE(standard_status_name(299));
  EXPECT_FALSE(standard_status_code("Teapot"));
}

TEST(StandardStatus, NameIsInjective) {
  std::set<int> codes;
  std::set<std::string_view> names;
  for (const auto& s : standard_statuses) {
    EXPECT_TRUE(codes.insert(s.code).second) << s.code;
    EXPECT_TRUE(names.insert(s.name).second) << s.name;
  }
}

TEST(Method, TokensAndStandardSet) {
  EXPECT_TRUE(Method("PATCH").is_standard());
  EXPECT_FALSE(Method("PURGE").is_standard());
  EXPECT_THROW(Method(""), Error);
  EXPECT_THROW(Method("PO ST"), Error);
  EXPECT_THROW(Method("GET/"), Error);
  EXPECT_EQ(standard_methods.size(), 9u);
}

TEST(Headers, CaseInsensitiveLookupFirstWins) {
  Headers h{Header("Host", "example.org:8080"), Header("X-A", "1"), Header("x-a", "2")};
  EXPECT_EQ(header_value(h, "host"), std::optional<std::string>("example.org:8080"));
  EXPECT_EQ(header_value(h, "X-A"), std::optional<std::string>("1"));
  EXPECT_FALSE(header_value({}, "Location"));
  EXPECT_THROW(Header("Bad Name", "x"), Error);
}

TEST(Response, CodeRange) {
  EXPECT_NO_THROW(Response(0));
  EXPECT_NO_THROW(Response(999));
  EXPECT_THROW(Response(1000), Error);
  EXPECT_THROW(Response(-1), Error);
}

TEST(Interaction, InterimThenSingleFinal) {
  Interaction i(get("http://a/"));
  i.add_response(Response(100));
  i.add_response(Response(103));
  i.add_response(Response(200));
  EXPECT_EQ(i.interim_responses().size(), 2u);
  ASSERT_TRUE(i.final_response());
  EXPECT_EQ(i.final_response()->status_code(), 200);
  EXPECT_EQ(i.response_count(), 3u);
  EXPECT_THROW(i.add_response(Response(204)), Error);
  EXPECT_THROW(i.add_response(Response(100)), Error);
}

TEST(Body, RdfMediaTypes) {
  EXPECT_TRUE(is_rdf_media_type("text/turtle"));
  EXPECT_TRUE(is_rdf_media_type("Text/Turtle; charset=utf-8"));
  EXPECT_TRUE(is_rdf_media_type("application/trig"));
  EXPECT_FALSE(is_rdf_media_type("application/json"));
  EXPECT_FALSE(is_rdf_media_type("application/ld+json"));
}
