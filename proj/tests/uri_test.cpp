#include <gtest/gtest.h>

#include <cctype>

#include "support.hpp"

using namespace httpld;
using testsupport::Random;

namespace {

// Reference encoder for application/x-www-form-urlencoded: unreserved kept,
// space as '+', everything else %XX.
std::string form_encode(const std::string& s) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '.' || c == '_' || c == '~') {
      out += static_cast<char>(c);
    } else if (c == ' ') {
      out += '+';
    } else {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 15];
    }
  }
  return out;
}

}  // namespace

TEST(ParseUri, RfcExampleComponents) {
  UriParts u = parse_uri("http://example.com:8042/over/there?name=ferret#nose");
  EXPECT_EQ(u.scheme, "http");
  EXPECT_EQ(u.authority, "example.com:8042");
  EXPECT_EQ(u.path, "/over/there");
  EXPECT_EQ(u.query, std::optional<std::string>("name=ferret"));
  EXPECT_EQ(u.fragment, std::optional<std::string>("nose"));
  ASSERT_EQ(u.params.size(), 1u);
  EXPECT_EQ(u.params[0].name, "name");
  EXPECT_EQ(u.params[0].value, "ferret");
}

TEST(ParseUri, RegistarRequestUri) {
  UriParts u = parse_uri("http://example.org:8080/reg?count=5");
  EXPECT_EQ(u.path, "/reg");
  EXPECT_EQ(u.query, std::optional<std::string>("count=5"));
  EXPECT_FALSE(u.fragment);
}

TEST(ParseUri, EmptyQueryAndFragmentAreDistinctFromAbsent) {
  UriParts u = parse_uri("http://a/?#");
  EXPECT_EQ(u.query, std::optional<std::string>(""));
  EXPECT_EQ(u.fragment, std::optional<std::string>(""));
  EXPECT_EQ(recompose(u), "http://a/?#");
  UriParts v = parse_uri("http://a");
  EXPECT_EQ(v.path, "");
  EXPECT_FALSE(v.query);
}

TEST(ParseUri, Malformed) {
  EXPECT_THROW(parse_uri("ftp//x"), ParseError);
  EXPECT_THROW(parse_uri(""), ParseError);
  EXPECT_THROW(parse_uri("http://a b/"), ParseError);
  EXPECT_THROW(parse_uri("1http://a/"), ParseError);
  EXPECT_THROW(parse_uri("ht_tp://a/"), ParseError);
  EXPECT_THROW(parse_uri("mailto:x@y"), ParseError);
  EXPECT_THROW(parse_uri("http://a/?x=%G1"), DecodeError);
}

TEST(QueryParams, Examples) {
  auto params = decode_query_params("age=54&id=XPZIJ4");
  ASSERT_EQ(params.size(), 2u);
  EXPECT_EQ(params[0].name, "age");
  EXPECT_EQ(params[0].value, "54");
  EXPECT_EQ(params[1].name, "id");
  EXPECT_EQ(params[1].value, "XPZIJ4");
  EXPECT_TRUE(decode_query_params("").empty());
  auto decoded = decode_query_params("a%20b=c+d");
  ASSERT_EQ(decoded.size(), 1u);
  EXPECT_EQ(decoded[0].name, "a b");
  EXPECT_EQ(decoded[0].value, "c d");
}

TEST(QueryParams, DuplicatesKeptAndMissingValueIsEmpty) {
  auto params = decode_query_params("a=1&&a=2&flag&=v");
  ASSERT_EQ(params.size(), 4u);
  EXPECT_EQ(params[1].value, "2");
  EXPECT_EQ(params[2].name, "flag");
  EXPECT_EQ(params[2].value, "");
  EXPECT_EQ(params[3].name, "");
  EXPECT_EQ(params[3].value, "v");
}

TEST(QueryParams, BadEscapesReportOffset) {
  try {
    decode_query_params("ok=1&x=%G1");
    FAIL();
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.offset(), 7u);
  }
  try {
    decode_query_params("x=%A");
    FAIL();
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(QueryParams, EncodeDecodeRoundTrip) {
  Random rnd(5);
  for (int round = 0; round < 500; ++round) {
    std::vector<QueryParam> pairs;
    int n = rnd.range(0, 5);
    for (int i = 0; i < n; ++i) pairs.push_back({rnd.text() + "k", rnd.text()});
    std::string query;
    for (const auto& p : pairs) {
      if (!query.empty()) query += '&';
      query += form_encode(p.name) + "=" + form_encode(p.value);
    }
    auto back = decode_query_params(query);
    ASSERT_EQ(back.size(), pairs.size()) << query;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      EXPECT_EQ(back[i].name, pairs[i].name);
      EXPECT_EQ(back[i].value, pairs[i].value);
    }
  }
}

TEST(QueryParams, PercentFreeInputNeverThrows) {
  Random rnd(6);
  for (int round = 0; round < 500; ++round) {
    std::string q = rnd.from("ab=&+;/?:@ 1", 0, 20);
    EXPECT_NO_THROW(decode_query_params(q)) << q;
  }
}

TEST(IdRes, StripsQueryAndFragment) {
  EXPECT_EQ(id_res(parse_uri("http://example.org:8080/reg/x8344")), "http://example.org:8080/reg/x8344");
  EXPECT_EQ(id_res(parse_uri("http://example.org:8080/reg?count=5")), "http://example.org:8080/reg");
  EXPECT_EQ(id_res(parse_uri("http://a/b#frag")), "http://a/b");
}

TEST(EffectiveRequestUri, Forms) {
  UriParts u = effective_request_uri("/reg?count=5", std::string("example.org:8080"), "http");
  EXPECT_EQ(recompose(u), recompose(parse_uri("http://example.org:8080/reg?count=5")));
  EXPECT_EQ(recompose(effective_request_uri("http://example.com/x", std::nullopt, "http")), "http://example.com/x");
  EXPECT_THROW(effective_request_uri("/x", std::nullopt, "http"), ParseError);
  EXPECT_THROW(effective_request_uri("*", std::string("h"), "http"), ParseError);
  EXPECT_THROW(effective_request_uri("example.com:443", std::string("h"), "http"), ParseError);
  EXPECT_THROW(effective_request_uri("/x", std::string("h"), "ftp"), Error);
}

TEST(EffectiveRequestUri, OriginFormKeepsQueryVerbatim) {
  Random rnd(8);
  for (int round = 0; round < 300; ++round) {
    UriParts sample = parse_uri(rnd.uri());
    std::string target = sample.path.empty() ? "/" : sample.path;
    if (sample.path.empty() || sample.path.front() != '/') target = "/" + sample.path;
    std::optional<std::string> query;
    if (rnd.chance(70)) {
      query = sample.query.value_or("q=1");
      target += "?" + *query;
    }
    UriParts u = effective_request_uri(target, std::string("example.org"), "https");
    EXPECT_EQ(u.query, query);
    EXPECT_EQ(u.authority, "example.org");
  }
}

TEST(Recompose, IdentityOnRandomCorpus) {
  Random rnd(9);
  for (int round = 0; round < 500; ++round) {
    std::string text = rnd.uri();
    UriParts u = parse_uri(text);
    EXPECT_EQ(recompose(u), text);
    EXPECT_EQ(id_res(u).find_first_of("?#"), std::string::npos) << text;
  }
}

TEST(PercentEncode, KeepsOnlyUnreserved) {
  EXPECT_EQ(percent_encode("http://a/b?c=d"), "http%3A%2F%2Fa%2Fb%3Fc%3Dd");
  EXPECT_EQ(percent_encode("A-z_0.~"), "A-z_0.~");
  EXPECT_EQ(percent_encode("\xC3\xA9"), "%C3%A9");
}
