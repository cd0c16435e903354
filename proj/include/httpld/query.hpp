#pragma once

// Competency questions as fixed graph-pattern operations. Results come back in
// a stable order (sorted by Turtle rendering) so output is reproducible.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "httpld/error.hpp"
#include "httpld/rdf.hpp"
#include "httpld/turtle.hpp"
#include "httpld/vocab.hpp"

namespace httpld {

using Binding = std::map<std::string, Term>;

namespace detail {

inline std::string binding_key(const Binding& b) {
  std::string key;
  for (const auto& [var, value] : b) {
    key += var;
    key += '=';
    key += render_term(value);
    key += '\x1f';
  }
  return key;
}

inline void sort_bindings(std::vector<Binding>& rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Binding& a, const Binding& b) { return binding_key(a) < binding_key(b); });
}

inline std::optional<Term> integer_value(const Term& t) {
  if (!t.is_literal() || !is_integer_lexical(t.value())) return std::nullopt;
  return Term::integer(std::stoll(t.value()));
}

/// Items of the RDF collection starting at `head`, in order. Stops on cycles.
inline std::vector<Term> collection_items(const Graph& g, Term head) {
  static const Term first = rdf_term("first");
  static const Term rest = rdf_term("rest");
  static const Term nil = rdf_term("nil");
  std::vector<Term> items;
  std::set<Term> seen;
  while (head != nil && seen.insert(head).second) {
    auto value = g.object(head, first);
    if (!value) break;
    items.push_back(*value);
    auto next = g.object(head, rest);
    if (!next) break;
    head = *next;
  }
  return items;
}

inline bool is_collection(const Graph& g, const Term& t) {
  return t == rdf_term("nil") || g.object(t, rdf_term("first")).has_value();
}

}  // namespace detail

/// CQ1: media type of every message that has a body. Variables m, mt.
inline std::vector<Binding> cq1_media_types(const Dataset& d) {
  const Graph& g = d.default_graph();
  std::vector<Binding> rows;
  for (const auto& t : g.match(std::nullopt, vocab::content_type, std::nullopt)) {
    if (g.object(t.subject(), vocab::body)) rows.push_back({{"m", t.subject()}, {"mt", t.object()}});
  }
  detail::sort_bindings(rows);
  return rows;
}

/// CQ2: status code of each response, per request. Variables q, status.
inline std::vector<Binding> cq2_interaction_status(const Dataset& d) {
  const Graph& g = d.default_graph();
  std::vector<Binding> rows;
  for (const auto& t : g.match(std::nullopt, vocab::resp, std::nullopt)) {
    for (const auto& status : g.objects(t.object(), vocab::sc_prop))
      for (const auto& n : g.objects(status, vocab::statusCodeNumber))
        if (auto code = detail::integer_value(n)) rows.push_back({{"q", t.subject()}, {"status", *code}});
  }
  detail::sort_bindings(rows);
  return rows;
}

/// CQ3: Location targets of responses. Variable next; one row per solution.
inline std::vector<Binding> cq3_locations(const Dataset& d) {
  const Graph& g = d.default_graph();
  std::vector<Binding> rows;
  for (const auto& t : g.match(std::nullopt, vocab::resp, std::nullopt))
    for (const auto& next : g.objects(t.object(), vocab::location)) rows.push_back({{"next", next}});
  detail::sort_bindings(rows);
  return rows;
}

/// CQ4: final status of every request whose URI is the Location target of a
/// response. Variable status.
inline std::vector<Binding> cq4_conversation_status(const Dataset& d) {
  const Graph& g = d.default_graph();
  std::vector<Binding> rows;
  for (const auto& t : g.match(std::nullopt, vocab::resp, std::nullopt)) {
    for (const auto& next : g.objects(t.object(), vocab::location)) {
      for (const auto& q : g.subjects(vocab::uri, next)) {
        for (const auto& r : g.objects(q, vocab::resp)) {
          if (g.contains(Triple(r, vocab::type, vocab::InterimResponse))) continue;
          for (const auto& status : g.objects(r, vocab::sc_prop))
            for (const auto& n : g.objects(status, vocab::statusCodeNumber))
              if (auto code = detail::integer_value(n)) rows.push_back({{"status", *code}});
        }
      }
    }
  }
  detail::sort_bindings(rows);
  return rows;
}

/// CQ5: does a response to `request` declare a Content-Type that overlaps one
/// of the request's Accept media ranges? Plain substring containment both
/// ways; false when either side is missing.
inline bool cq5_negotiation(const Dataset& d, const Term& request) {
  const Graph& g = d.default_graph();
  for (const auto& accept : g.objects(request, vocab::accept))
    for (const auto& range : g.objects(accept, vocab::media_type))
      for (const auto& r : g.objects(request, vocab::resp))
        for (const auto& ct : g.objects(r, vocab::content_type)) {
          const std::string& a = range.value();
          const std::string& b = ct.value();
          if (a.find(b) != std::string::npos || b.find(a) != std::string::npos) return true;
        }
  return false;
}

/// CQ6: values of `prop` inside RDF bodies, with collections flattened in
/// list order.
inline std::vector<Term> cq6_body_values(const Dataset& d, const Term& prop) {
  const Graph& g = d.default_graph();
  std::set<Term> graphs;
  for (const auto& t : g.match(std::nullopt, vocab::body, std::nullopt))
    for (const auto& name : g.objects(t.object(), vocab::about)) graphs.insert(name);
  std::vector<Term> out;
  for (const auto& name : graphs) {
    const Graph* body = d.find_graph(name);
    if (!body) continue;
    for (const auto& t : body->match(std::nullopt, prop, std::nullopt)) {
      if (detail::is_collection(*body, t.object())) {
        for (auto& item : detail::collection_items(*body, t.object())) out.push_back(std::move(item));
      } else {
        out.push_back(t.object());
      }
    }
  }
  return out;
}

/// CQ7: values of the query parameter `name` across all request URIs.
inline std::vector<Term> cq7_query_param(const Dataset& d, std::string_view name) {
  const Graph& g = d.default_graph();
  std::vector<Term> out;
  std::set<Term> uris;
  for (const auto& q : g.subjects(vocab::type, vocab::Request))
    for (const auto& u : g.objects(q, vocab::uri)) uris.insert(u);
  for (const auto& u : uris)
    for (const auto& p : g.objects(u, vocab::queryParams)) {
      bool named = false;
      for (const auto& n : g.objects(p, vocab::paramName))
        if (n.is_literal() && n.value() == name) named = true;
      if (!named) continue;
      for (const auto& v : g.objects(p, vocab::paramValue)) out.push_back(v);
    }
  std::stable_sort(out.begin(), out.end(),
                   [](const Term& a, const Term& b) { return render_term(a) < render_term(b); });
  return out;
}

}  // namespace httpld
