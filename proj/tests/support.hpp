#pragma once

// Shared fixtures and random generators for the test binaries.

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "httpld/httpld.hpp"

namespace testsupport {

using namespace httpld;

inline std::string fixture_path(const std::string& name) { return std::string(HTTPLD_FIXTURES) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream f(fixture_path(name), std::ios::binary);
  if (!f) throw std::runtime_error("missing fixture " + name);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

inline Dataset lift_fixture(const std::string& name, const LiftOptions& options = {}) {
  std::string text = read_fixture(name);
  Conversation c = name.size() > 4 && name.substr(name.size() - 4) == ".har" ? load_har(text) : load_transcript(text);
  return lift_conversation(c, options);
}

inline Dataset golden() { return parse_trig(read_fixture("registar.trig")); }

/// Same dataset with every blank label replaced by a fresh one, in a
/// scrambled order.
inline Dataset relabel(const Dataset& d, std::mt19937& rng) {
  std::vector<Term> blanks;
  auto collect = [&](const Term& t) {
    if (t.is_blank()) blanks.push_back(t);
  };
  auto scan = [&](const Graph& g) {
    for (const auto& t : g) {
      collect(t.subject());
      collect(t.object());
    }
  };
  scan(d.default_graph());
  for (const auto& [name, g] : d.named_graphs()) {
    collect(name);
    scan(g);
  }
  std::sort(blanks.begin(), blanks.end());
  blanks.erase(std::unique(blanks.begin(), blanks.end()), blanks.end());
  std::vector<std::size_t> perm(blanks.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<Term, Term> map;
  for (std::size_t i = 0; i < blanks.size(); ++i) map.emplace(blanks[i], Term::blank("z" + std::to_string(perm[i])));
  auto m = [&](const Term& t) { return t.is_blank() ? map.at(t) : t; };
  Dataset out;
  for (const auto& t : d.default_graph()) out.default_graph().add(m(t.subject()), t.predicate(), m(t.object()));
  for (const auto& [name, g] : d.named_graphs()) {
    Graph& target = out.graph(m(name));
    for (const auto& t : g) target.add(m(t.subject()), t.predicate(), m(t.object()));
  }
  return out;
}

class Random {
 public:
  explicit Random(unsigned seed) : rng_(seed) {}

  std::mt19937& engine() { return rng_; }
  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(int percent) { return range(0, 99) < percent; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(range(0, static_cast<int>(v.size()) - 1))];
  }

  std::string from(std::string_view alphabet, int lo, int hi) {
    std::string s;
    int n = range(lo, hi);
    for (int i = 0; i < n; ++i) s += alphabet[static_cast<std::size_t>(range(0, static_cast<int>(alphabet.size()) - 1))];
    return s;
  }

  /// Lexical forms covering escapes, quotes, newlines and multi-byte UTF-8.
  std::string text() {
    static const std::vector<std::string> pieces = {
        "a", "Z", "0", " ", "\"", "'", "\\", "\n", "\r", "\t", "#", "@", "^", "<", ">", "{", "}", "\xC3\xA9",
        "\xE2\x82\xAC", "\xF0\x9F\x98\x80", "\"\"\"", "x y", ".", ";", ","};
    std::string s;
    int n = range(0, 8);
    for (int i = 0; i < n; ++i) s += pick(pieces);
    return s;
  }

  Term iri() {
    static const std::vector<std::string> bases = {
        "http://w3id.org/http#", "http://w3id.org/http/sc#", "http://example.org/ns#", "http://example.org/",
        "urn:x-test:", "http://example.org/a/b?c=d#"};
    std::string local = from("abcxyzABC019_-.%~", 0, 6);
    return Term::iri(pick(bases) + local);
  }

  Term blank(int pool) { return Term::blank("n" + std::to_string(range(0, pool))); }

  Term literal() {
    switch (range(0, 7)) {
      case 0: return Term::literal(text());
      case 1: return Term::lang_literal(text(), pick(std::vector<std::string>{"en", "fr", "en-GB", "de-CH-1996"}));
      case 2: return Term::integer(range(-100000, 100000));
      case 3: return Term::literal(from("0123456789", 1, 4) + "." + from("0123456789", 1, 3), std::string(xsd::decimal));
      case 4: return Term::literal(range(0, 1) ? "true" : "false", std::string(xsd::boolean));
      case 5: return Term::literal("2003-02-" + std::to_string(range(10, 28)), std::string(xsd::date));
      case 6: return Term::literal(text(), "http://example.org/dt#" + from("abc", 1, 3));
      default: return Term::literal(from("0123456789", 1, 3) + "e" + from("0123456789", 1, 2), std::string(xsd::double_));
    }
  }

  Graph graph(int max_triples = 25) {
    Graph g;
    int pool = range(0, 6);
    int n = range(0, max_triples);
    for (int i = 0; i < n; ++i) {
      Term s = chance(40) ? blank(pool) : iri();
      Term p = chance(15) ? rdf_term("type") : iri();
      Term o = chance(30) ? literal() : (chance(40) ? blank(pool) : iri());
      g.add(s, p, o);
    }
    if (chance(20)) {
      Term head = Term::blank("list" + std::to_string(range(0, 3)));
      g.add(iri(), iri(), head);
      int len = range(1, 4);
      Term cur = head;
      for (int i = 0; i < len; ++i) {
        g.add(cur, rdf_term("first"), literal());
        Term next = i + 1 == len ? rdf_term("nil") : Term::blank(cur.value() + "x");
        g.add(cur, rdf_term("rest"), next);
        cur = next;
      }
    }
    return g;
  }

  Dataset dataset() {
    Dataset d;
    d.default_graph() = graph();
    int graphs = range(0, 3);
    for (int i = 0; i < graphs; ++i) {
      Term name = chance(50) ? iri() : Term::blank("g" + std::to_string(i));
      Graph g = graph(10);
      if (!g.empty()) d.graph(name).merge(g);
    }
    return d;
  }

  /// Absolute URI text built from RFC 3986 pieces, with valid percent escapes.
  std::string uri() {
    static constexpr std::string_view unreserved = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789-._~";
    static const std::vector<std::string> escapes = {"%20", "%2F", "%3F", "%C3%A9", "%25", "%7e"};
    auto chunk = [&](std::string_view extra, int lo, int hi) {
      std::string s;
      int n = range(lo, hi);
      for (int i = 0; i < n; ++i) {
        if (chance(10))
          s += pick(escapes);
        else if (!extra.empty() && chance(15))
          s += extra[static_cast<std::size_t>(range(0, static_cast<int>(extra.size()) - 1))];
        else
          s += unreserved[static_cast<std::size_t>(range(0, static_cast<int>(unreserved.size()) - 1))];
      }
      return s;
    };
    std::string out = pick(std::vector<std::string>{"http", "https", "ftp", "urn+x", "a.b-c"}) + "://";
    if (chance(20)) out += chunk("", 1, 5) + "@";
    out += chunk("", 1, 10);
    if (chance(40)) out += ":" + std::to_string(range(1, 65535));
    int segments = range(0, 4);
    for (int i = 0; i < segments; ++i) out += "/" + chunk("!$&'()*+,;=:@", 0, 6);
    if (chance(60)) {
      out += "?";
      int params = range(0, 4);
      for (int i = 0; i < params; ++i) {
        if (i) out += "&";
        out += chunk("+!$'()*,;:@/?", 0, 5);
        if (chance(80)) out += "=" + chunk("+=!$'()*,;:@/?", 0, 6);
      }
    }
    if (chance(30)) out += "#" + chunk("!$&'()*+,;=:@/?", 0, 6);
    return out;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace testsupport
