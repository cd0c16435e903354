#pragma once

// Minimal in-memory RDF model: terms, triples, graphs, datasets with named
// graphs, triple-pattern matching and property-path evaluation.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "httpld/error.hpp"

namespace httpld {

namespace ns {
inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view owl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view sd = "http://www.w3.org/ns/sparql-service-description#";
}  // namespace ns

namespace detail {
inline std::string cat(std::string_view a, std::string_view b) {
  std::string out;
  out.reserve(a.size() + b.size());
  out.append(a).append(b);
  return out;
}

inline bool is_ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ascii_alnum(char c) { return is_ascii_alpha(c) || is_ascii_digit(c); }
}  // namespace detail

namespace xsd {
inline const std::string string = detail::cat(ns::xsd, "string");
inline const std::string integer = detail::cat(ns::xsd, "integer");
inline const std::string decimal = detail::cat(ns::xsd, "decimal");
inline const std::string double_ = detail::cat(ns::xsd, "double");
inline const std::string boolean = detail::cat(ns::xsd, "boolean");
inline const std::string date = detail::cat(ns::xsd, "date");
}  // namespace xsd

inline const std::string rdf_lang_string = detail::cat(ns::rdf, "langString");

enum class TermKind : std::uint8_t { Iri, BlankNode, Literal };

/// An RDF term. Equality is syntactic: "01"^^xsd:integer != "1"^^xsd:integer.
class Term {
 public:
  static Term iri(std::string text) {
    if (text.empty()) throw Error("IRI must not be empty");
    for (unsigned char c : text) {
      if (c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' ||
          c == '^' || c == '`' || c == '\\')
        throw Error("IRI contains an illegal character: " + text);
    }
    return Term(TermKind::Iri, std::move(text), {}, {});
  }

  static Term blank(std::string label) {
    if (!valid_blank_label(label)) throw Error("invalid blank node label: '" + label + "'");
    return Term(TermKind::BlankNode, std::move(label), {}, {});
  }

  static Term literal(std::string lexical, std::string datatype = xsd::string) {
    if (datatype == rdf_lang_string) throw Error("language-tagged literal requires a tag");
    (void)iri(datatype);
    return Term(TermKind::Literal, std::move(lexical), std::move(datatype), {});
  }

  static Term lang_literal(std::string lexical, std::string language) {
    if (!valid_language_tag(language)) throw Error("invalid language tag: '" + language + "'");
    return Term(TermKind::Literal, std::move(lexical), rdf_lang_string, std::move(language));
  }

  static Term integer(long long value) { return literal(std::to_string(value), xsd::integer); }

  TermKind kind() const noexcept { return kind_; }
  bool is_iri() const noexcept { return kind_ == TermKind::Iri; }
  bool is_blank() const noexcept { return kind_ == TermKind::BlankNode; }
  bool is_literal() const noexcept { return kind_ == TermKind::Literal; }

  /// IRI text, blank node label, or literal lexical form.
  const std::string& value() const noexcept { return value_; }
  /// Empty for non-literals.
  const std::string& datatype() const noexcept { return datatype_; }
  /// Empty unless the literal is language-tagged.
  const std::string& language() const noexcept { return language_; }

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;

  static bool valid_blank_label(std::string_view label) {
    if (label.empty()) return false;
    if (label.front() == '-' || label.front() == '.' || label.back() == '.') return false;
    for (char c : label) {
      if (!detail::is_ascii_alnum(c) && c != '_' && c != '-' && c != '.') return false;
    }
    return true;
  }

  static bool valid_language_tag(std::string_view tag) {
    if (tag.empty()) return false;
    bool first_part = true;
    std::size_t run = 0;
    for (char c : tag) {
      if (c == '-') {
        if (run == 0) return false;
        first_part = false;
        run = 0;
        continue;
      }
      if (first_part ? !detail::is_ascii_alpha(c) : !detail::is_ascii_alnum(c)) return false;
      ++run;
    }
    return run > 0;
  }

 private:
  Term(TermKind kind, std::string value, std::string datatype, std::string language)
      : kind_(kind),
        value_(std::move(value)),
        datatype_(std::move(datatype)),
        language_(std::move(language)) {}

  TermKind kind_;
  std::string value_;
  std::string datatype_;
  std::string language_;
};

inline Term rdf_term(std::string_view local) { return Term::iri(detail::cat(ns::rdf, local)); }

/// Subject is an IRI or blank node; predicate is an IRI.
class Triple {
 public:
  Triple(Term subject, Term predicate, Term object)
      : subject_(std::move(subject)), predicate_(std::move(predicate)), object_(std::move(object)) {
    if (subject_.is_literal()) throw Error("triple subject must not be a literal");
    if (!predicate_.is_iri()) throw Error("triple predicate must be an IRI");
  }

  const Term& subject() const noexcept { return subject_; }
  const Term& predicate() const noexcept { return predicate_; }
  const Term& object() const noexcept { return object_; }

  auto operator<=>(const Triple&) const = default;
  bool operator==(const Triple&) const = default;

 private:
  Term subject_;
  Term predicate_;
  Term object_;
};

namespace detail {
struct SubjectKey {
  const Term& subject;
};
struct SubjectPredicateKey {
  const Term& subject;
  const Term& predicate;
};

struct TripleOrder {
  using is_transparent = void;
  bool operator()(const Triple& a, const Triple& b) const { return a < b; }
  bool operator()(const Triple& a, const SubjectKey& k) const { return a.subject() < k.subject; }
  bool operator()(const SubjectKey& k, const Triple& a) const { return k.subject < a.subject(); }
  bool operator()(const Triple& a, const SubjectPredicateKey& k) const {
    return std::tie(a.subject(), a.predicate()) < std::tie(k.subject, k.predicate);
  }
  bool operator()(const SubjectPredicateKey& k, const Triple& a) const {
    return std::tie(k.subject, k.predicate) < std::tie(a.subject(), a.predicate());
  }
};
}  // namespace detail

/// A duplicate-free set of triples ordered by (subject, predicate, object).
class Graph {
 public:
  using Set = std::set<Triple, detail::TripleOrder>;
  using const_iterator = Set::const_iterator;

  Graph() = default;
  Graph(std::initializer_list<Triple> triples) : triples_(triples) {}

  /// Returns false when the triple was already present.
  bool add(Triple t) { return triples_.insert(std::move(t)).second; }
  bool add(Term s, Term p, Term o) { return add(Triple(std::move(s), std::move(p), std::move(o))); }
  bool erase(const Triple& t) { return triples_.erase(t) > 0; }
  void merge(const Graph& other) { triples_.insert(other.begin(), other.end()); }

  bool contains(const Triple& t) const { return triples_.count(t) > 0; }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  const_iterator begin() const noexcept { return triples_.begin(); }
  const_iterator end() const noexcept { return triples_.end(); }

  /// Triples agreeing with every bound position, in graph order.
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const {
    std::vector<Triple> out;
    auto keep = [&](const Triple& t) {
      if (p && t.predicate() != *p) return;
      if (o && t.object() != *o) return;
      out.push_back(t);
    };
    if (s && p) {
      auto [lo, hi] = triples_.equal_range(detail::SubjectPredicateKey{*s, *p});
      for (auto it = lo; it != hi; ++it) keep(*it);
    } else if (s) {
      auto [lo, hi] = triples_.equal_range(detail::SubjectKey{*s});
      for (auto it = lo; it != hi; ++it) keep(*it);
    } else {
      for (const auto& t : triples_) keep(t);
    }
    return out;
  }

  /// Objects of (s, p, ?o).
  std::vector<Term> objects(const Term& s, const Term& p) const {
    std::vector<Term> out;
    auto [lo, hi] = triples_.equal_range(detail::SubjectPredicateKey{s, p});
    for (auto it = lo; it != hi; ++it) out.push_back(it->object());
    return out;
  }

  std::optional<Term> object(const Term& s, const Term& p) const {
    auto it = triples_.lower_bound(detail::SubjectPredicateKey{s, p});
    if (it == triples_.end() || it->subject() != s || it->predicate() != p) return std::nullopt;
    return it->object();
  }

  /// Subjects of (?s, p, o), deduplicated and ordered.
  std::set<Term> subjects(const Term& p, const Term& o) const {
    std::set<Term> out;
    for (const auto& t : triples_)
      if (t.predicate() == p && t.object() == o) out.insert(t.subject());
    return out;
  }

  bool operator==(const Graph& other) const { return triples_ == other.triples_; }

 private:
  Set triples_;
};

/// Functional insert: returns a copy of `graph` that contains `triple`.
inline Graph insert(Graph graph, Triple triple) {
  graph.add(std::move(triple));
  return graph;
}

inline std::vector<Triple> match(const Graph& graph, const std::optional<Term>& s,
                                 const std::optional<Term>& p, const std::optional<Term>& o) {
  return graph.match(s, p, o);
}

/// A default graph plus named graphs. Blank node labels are scoped to the
/// whole dataset.
class Dataset {
 public:
  Graph& default_graph() noexcept { return default_; }
  const Graph& default_graph() const noexcept { return default_; }
  const std::map<Term, Graph>& named_graphs() const noexcept { return named_; }

  /// The named graph called `name`, created empty on first access.
  Graph& graph(const Term& name) {
    if (name.is_literal()) throw Error("graph name must be an IRI or blank node");
    return named_[name];
  }

  const Graph* find_graph(const Term& name) const {
    auto it = named_.find(name);
    return it == named_.end() ? nullptr : &it->second;
  }

  bool erase_graph(const Term& name) { return named_.erase(name) > 0; }

  std::size_t quad_count() const noexcept {
    std::size_t n = default_.size();
    for (const auto& [_, g] : named_) n += g.size();
    return n;
  }

  bool operator==(const Dataset&) const = default;

 private:
  Graph default_;
  std::map<Term, Graph> named_;
};

/// Property path: a predicate, a sequence, or zero-or-more repetition.
class PathExpr {
 public:
  struct Pred {
    Term iri;
  };
  struct Seq {
    std::shared_ptr<const PathExpr> first, second;
  };
  struct Star {
    std::shared_ptr<const PathExpr> inner;
  };

  static PathExpr pred(Term iri) {
    if (!iri.is_iri()) throw Error("path predicate must be an IRI");
    return PathExpr(Pred{std::move(iri)});
  }
  static PathExpr seq(PathExpr a, PathExpr b) {
    return PathExpr(Seq{std::make_shared<const PathExpr>(std::move(a)),
                        std::make_shared<const PathExpr>(std::move(b))});
  }
  static PathExpr star(PathExpr inner) {
    return PathExpr(Star{std::make_shared<const PathExpr>(std::move(inner))});
  }

  const std::variant<Pred, Seq, Star>& node() const noexcept { return node_; }

 private:
  explicit PathExpr(std::variant<Pred, Seq, Star> node) : node_(std::move(node)) {}
  std::variant<Pred, Seq, Star> node_;
};

/// Terms reachable from `start` along `path`. Star is reflexive and stops on
/// revisits, so cyclic graphs terminate.
inline std::set<Term> eval_path(const Graph& graph, const Term& start, const PathExpr& path) {
  std::set<Term> out;
  if (const auto* p = std::get_if<PathExpr::Pred>(&path.node())) {
    for (auto& o : graph.objects(start, p->iri)) out.insert(std::move(o));
  } else if (const auto* s = std::get_if<PathExpr::Seq>(&path.node())) {
    for (const auto& mid : eval_path(graph, start, *s->first)) {
      auto rest = eval_path(graph, mid, *s->second);
      out.insert(rest.begin(), rest.end());
    }
  } else {
    const auto& inner = *std::get<PathExpr::Star>(path.node()).inner;
    std::vector<Term> frontier{start};
    out.insert(start);
    while (!frontier.empty()) {
      Term cur = std::move(frontier.back());
      frontier.pop_back();
      for (const auto& next : eval_path(graph, cur, inner)) {
        if (out.insert(next).second) frontier.push_back(next);
      }
    }
  }
  return out;
}

}  // namespace httpld
