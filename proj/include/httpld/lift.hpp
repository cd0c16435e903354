#pragma once

// Lifting HTTP interactions into RDF datasets following the HTTP interaction
// ontology. Header property chains (Location, Content-Type, Accept) are
// materialized here so queries need no reasoner; RDF bodies become named
// graphs linked through cnt:about.

#include <map>
#include <set>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "httpld/http_model.hpp"
#include "httpld/rdf.hpp"
#include "httpld/uri.hpp"
#include "httpld/vocab.hpp"

namespace httpld {

struct LiftOptions {
  /// When set, message nodes become IRIs `base + "q1"`, `base + "r1"`, ... and
  /// URI nodes live under `base + "uri/"`. Otherwise messages are blank nodes.
  std::optional<std::string> base_iri;
};

inline constexpr std::string_view default_uri_node_base = "urn:x-httpld:uri:";

/// Resolves a Location value against the request URI. Absolute URIs and
/// absolute-path references are supported; anything else yields nullopt.
inline std::optional<UriParts> resolve_reference(std::string_view value, const UriParts* request_uri) {
  value = detail::trim(value);
  if (value.size() >= 2 && value.front() == '<' && value.back() == '>') value = value.substr(1, value.size() - 2);
  if (value.empty()) return std::nullopt;
  try {
    if (value.find("://") != std::string_view::npos) return parse_uri(value);
    if (value.front() == '/' && (value.size() == 1 || value[1] != '/') && request_uri) {
      return parse_uri(request_uri->scheme + "://" + request_uri->authority + std::string(value));
    }
  } catch (const Error&) {
  }
  return std::nullopt;
}

/// Stateful lifting run. Labels come from per-kind monotonic counters, so the
/// same input always produces the same dataset. URI nodes are shared across
/// the whole run.
class Lifter {
 public:
  explicit Lifter(LiftOptions options = {}) : options_(std::move(options)) {}

  /// Continues lifting into `existing`; its blank labels are never reused.
  Lifter(LiftOptions options, Dataset existing) : options_(std::move(options)), dataset_(std::move(existing)) {
    auto reserve = [&](const Term& t) {
      if (t.is_blank()) reserved_.insert(t.value());
    };
    auto scan = [&](const Graph& g) {
      for (const auto& t : g) {
        reserve(t.subject());
        reserve(t.object());
      }
    };
    scan(dataset_.default_graph());
    for (const auto& [name, g] : dataset_.named_graphs()) {
      reserve(name);
      scan(g);
    }
  }

  const Dataset& dataset() const noexcept { return dataset_; }
  Dataset take() { return std::move(dataset_); }
  /// Problems that did not stop lifting, e.g. unresolvable Location values.
  const std::vector<std::string>& notes() const noexcept { return notes_; }

  Term uri_node_for(const UriParts& u) const {
    std::string base = options_.base_iri ? *options_.base_iri + "uri/" : std::string(default_uri_node_base);
    return Term::iri(base + percent_encode(recompose(u)));
  }

  /// Node of the URI; its description triples are added on first sight only.
  Term lift_uri(const UriParts& u) {
    Term node = uri_node_for(u);
    if (!lifted_uris_.insert(node).second) return node;
    add(node, vocab::type, vocab::URI);
    add(node, vocab::scheme, Term::literal(u.scheme));
    add(node, vocab::authority, Term::literal(u.authority));
    add(node, vocab::path, Term::literal(u.path));
    if (u.query) add(node, vocab::query, Term::literal(*u.query));
    if (u.fragment) add(node, vocab::fragment, Term::literal(*u.fragment));
    add(node, vocab::idRes, Term::literal(id_res(u)));
    for (const auto& p : u.params) {
      Term param = fresh("p");
      add(node, vocab::queryParams, param);
      add(param, vocab::type, vocab::QueryParam);
      add(param, vocab::paramName, Term::literal(p.name));
      add(param, vocab::paramValue, Term::literal(p.value));
    }
    return node;
  }

  void lift_header(const Header& h, const Term& msg, const UriParts* request_uri) {
    Term node = fresh("h");
    add(msg, vocab::hdr, node);
    add(node, vocab::type, vocab::Header);
    add(node, vocab::hdrName, Term::literal(h.name()));
    add(node, vocab::hdrValue, Term::literal(h.value()));

    if (h.is("Location")) {
      add(node, vocab::type, vocab::LocationHeader);
      add(node, vocab::isLocationHeader, node);
      if (auto target = resolve_reference(h.value(), request_uri)) {
        Term uri = lift_uri(*target);
        add(node, vocab::link, uri);
        add(msg, vocab::location, uri);
      } else {
        notes_.push_back("unresolvable Location value '" + h.value() + "'");
      }
    } else if (h.is("Content-Type")) {
      add(node, vocab::type, vocab::ContentTypeHeader);
      add(msg, vocab::content_type, Term::literal(std::string(detail::trim(h.value()))));
    } else if (h.is("Accept")) {
      add(node, vocab::type, vocab::AcceptHeader);
      Term accept = fresh("a");
      add(msg, vocab::accept, accept);
      std::string_view rest = h.value();
      while (!rest.empty()) {
        std::size_t comma = rest.find(',');
        auto range = detail::trim(rest.substr(0, comma));
        if (!range.empty()) add(accept, vocab::media_type, Term::literal(std::string(range)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
    }
  }

  void lift_body(const Body& b, const Term& msg) {
    Term content = fresh("c");
    add(msg, vocab::body, content);
    add(content, vocab::type, vocab::Content);
    if (!b.rdf) return;
    add(content, vocab::type, vocab::ContentAsRDF);
    Term name = msg.is_iri() ? Term::iri(msg.value() + "/body-graph") : fresh("g");
    Graph& target = dataset_.graph(name);
    std::map<Term, Term> relabel;
    auto map_term = [&](const Term& t) {
      if (!t.is_blank()) return t;
      auto it = relabel.find(t);
      if (it == relabel.end()) it = relabel.emplace(t, fresh("b")).first;
      return it->second;
    };
    for (const auto& t : *b.rdf) target.add(map_term(t.subject()), t.predicate(), map_term(t.object()));
    add(name, vocab::type, vocab::SdGraph);
    add(content, vocab::about, name);
  }

  /// Lifts one interaction and returns the request node.
  Term lift_interaction(const Interaction& i) {
    const Request& req = i.request();
    Term q = message_node("q");
    add(q, vocab::type, vocab::Request);
    if (req.method.is_standard()) {
      Term m = vocab::mthd(req.method.name());
      add(q, vocab::mthd_prop, m);
      add(m, vocab::methodName, Term::literal(req.method.name()));
    } else {
      Term m = fresh("m");
      add(q, vocab::mthd_prop, m);
      add(m, vocab::type, vocab::Method);
      add(m, vocab::methodName, Term::literal(req.method.name()));
    }
    add(q, vocab::uri, lift_uri(req.uri));
    if (req.http_version) add(q, vocab::httpVersion, Term::literal(*req.http_version));
    for (const auto& h : req.headers) lift_header(h, q, &req.uri);
    if (req.body) lift_body(*req.body, q);

    for (const auto& r : i.interim_responses()) lift_response(r, q, req.uri);
    if (i.final_response()) lift_response(*i.final_response(), q, req.uri);
    return q;
  }

  void lift_conversation(const Conversation& c) {
    for (const auto& i : c.interactions) lift_interaction(i);
  }

 private:
  void add(const Term& s, const Term& p, const Term& o) { dataset_.default_graph().add(s, p, o); }

  Term fresh(const std::string& kind) {
    std::string label;
    do {
      label = kind + std::to_string(++counters_[kind]);
    } while (reserved_.count(label));
    return Term::blank(label);
  }

  Term message_node(const std::string& kind) {
    if (!options_.base_iri) return fresh(kind);
    return Term::iri(*options_.base_iri + kind + std::to_string(++counters_[kind]));
  }

  void lift_response(const Response& r, const Term& q, const UriParts& request_uri) {
    Term node = message_node("r");
    add(q, vocab::resp, node);
    add(node, vocab::type, vocab::Response);
    add(node, vocab::type, is_interim(r) ? vocab::InterimResponse : vocab::FinalResponse);
    Term number = Term::integer(r.status_code());
    if (auto name = standard_status_name(r.status_code())) {
      Term status = vocab::sc(*name);
      add(node, vocab::sc_prop, status);
      add(status, vocab::statusCodeNumber, number);
    } else {
      Term status = fresh("s");
      add(node, vocab::sc_prop, status);
      add(status, vocab::type, vocab::StatusCode);
      add(status, vocab::statusCodeNumber, number);
    }
    if (r.http_version()) add(node, vocab::httpVersion, Term::literal(*r.http_version()));
    for (const auto& h : r.headers()) lift_header(h, node, &request_uri);
    if (r.body()) lift_body(*r.body(), node);
  }

  LiftOptions options_;
  Dataset dataset_;
  std::map<std::string, std::size_t> counters_;
  std::set<Term> lifted_uris_;
  std::set<std::string> reserved_;
  std::vector<std::string> notes_;
};

struct LiftedUri {
  Term node;
  Graph triples;
};

inline LiftedUri lift_uri(const UriParts& u, const LiftOptions& options = {}) {
  Lifter lifter(options);
  Term node = lifter.lift_uri(u);
  return {node, lifter.dataset().default_graph()};
}

/// Triples describing one header of `msg`. Location references resolve
/// against `request_uri` when given.
inline Graph lift_header(const Header& h, const Term& msg, const UriParts* request_uri = nullptr,
                         const LiftOptions& options = {}) {
  Lifter lifter(options);
  lifter.lift_header(h, msg, request_uri);
  return lifter.dataset().default_graph();
}

/// Adds the content node for `b` (and its named graph, for RDF bodies) to
/// `dataset`.
inline Dataset lift_body(const Body& b, const Term& msg, Dataset dataset) {
  Lifter lifter({}, std::move(dataset));
  lifter.lift_body(b, msg);
  return lifter.take();
}

inline Dataset lift_interaction(const Interaction& i, const LiftOptions& options = {}) {
  Lifter lifter(options);
  lifter.lift_interaction(i);
  return lifter.take();
}

/// Lifts every interaction in one run; equal absolute URIs share one node.
inline Dataset lift_conversation(const Conversation& c, const LiftOptions& options = {}) {
  Lifter lifter(options);
  lifter.lift_conversation(c);
  return lifter.take();
}

}  // namespace httpld
