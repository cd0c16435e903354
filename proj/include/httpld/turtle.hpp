#pragma once

// Turtle / TriG reader and writer for the subset used by lifted HTTP
// datasets and the vendored ontology: prefix directives, IRIs, prefixed
// names, labeled and anonymous blank nodes, collections, string / numeric /
// boolean literals with datatypes and language tags, `a`, `;` and `,`
// continuations, and TriG graph blocks. No base-IRI resolution.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "httpld/error.hpp"
#include "httpld/rdf.hpp"

namespace httpld {

/// Prefix label (without ':') to namespace IRI.
using PrefixMap = std::map<std::string, std::string>;

namespace detail {

inline void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

inline bool is_name_char(char c) {
  return is_ascii_alnum(c) || c == '_' || c == '-' || static_cast<unsigned char>(c) >= 0x80;
}

// Local names the writer is willing to emit in prefixed form. Deliberately
// narrower than the grammar so the reader always takes them back verbatim.
inline bool is_safe_local_name(std::string_view local) {
  if (local.empty()) return true;
  if (!(is_ascii_alnum(local.front()) || local.front() == '_')) return false;
  return std::all_of(local.begin(), local.end(),
                     [](char c) { return is_ascii_alnum(c) || c == '_' || c == '-'; });
}

inline bool is_integer_lexical(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), is_ascii_digit);
}

class TurtleReader {
 public:
  TurtleReader(std::string_view text, bool trig, PrefixMap prefixes = {})
      : src_(text), trig_(trig), prefixes_(std::move(prefixes)) {}

  Dataset read_document() {
    skip_ws();
    while (!at_end()) {
      statement();
      skip_ws();
    }
    return std::move(dataset_);
  }

  Term read_single_term() {
    skip_ws();
    Term t = object();
    skip_ws();
    if (!at_end()) fail("unexpected trailing input after term");
    if (!dataset_.default_graph().empty()) fail("term must not introduce triples");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void skip_ws() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool keyword_ahead(std::string_view kw) const {
    if (src_.size() - pos_ < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      char a = src_[pos_ + i];
      if (a >= 'a' && a <= 'z') a = static_cast<char>(a - 'a' + 'A');
      if (a != kw[i]) return false;
    }
    char next = peek(kw.size());
    return !(is_name_char(next) || next == ':');
  }

  void statement() {
    char c = peek();
    if (c == '@') {
      directive();
      return;
    }
    if (keyword_ahead("PREFIX")) {
      pos_ += 6;
      prefix_body(false);
      return;
    }
    if (keyword_ahead("BASE")) fail("base directives are not supported");
    if (trig_ && keyword_ahead("GRAPH")) {
      pos_ += 5;
      skip_ws();
      Term name = graph_label();
      wrapped_graph(name);
      return;
    }
    if (trig_ && c == '{') {
      wrapped_graph(std::nullopt);
      return;
    }
    if (c == '[') {
      // Either "[] { ... }" in TriG, an anonymous subject, or a property list subject.
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (peek() == ']') {
        ++pos_;
        skip_ws();
        Term node = fresh_blank();
        if (trig_ && peek() == '{') {
          wrapped_graph(node);
          return;
        }
        predicate_object_list(node);
        expect('.');
        return;
      }
      pos_ = save;
      Term node = blank_property_list();
      skip_ws();
      if (peek() != '.') predicate_object_list(node);
      expect('.');
      return;
    }
    Term subj = subject();
    skip_ws();
    if (trig_ && peek() == '{') {
      if (subj.is_literal()) fail("graph name must be an IRI or blank node");
      wrapped_graph(subj);
      return;
    }
    predicate_object_list(subj);
    expect('.');
  }

  void directive() {
    ++pos_;  // '@'
    if (src_.compare(pos_, 6, "prefix") == 0) {
      pos_ += 6;
      prefix_body(true);
    } else if (src_.compare(pos_, 4, "base") == 0) {
      fail("base directives are not supported");
    } else {
      fail("unknown directive");
    }
  }

  void prefix_body(bool needs_dot) {
    skip_ws();
    std::string label;
    while (!at_end() && peek() != ':') {
      char c = peek();
      if (!(is_name_char(c) || c == '.')) fail("invalid prefix label");
      label += c;
      ++pos_;
    }
    if (at_end()) fail("expected ':' in prefix declaration");
    if (!label.empty() && (!is_ascii_alpha(label.front()) || label.back() == '.'))
      fail("invalid prefix label");
    ++pos_;
    skip_ws();
    if (peek() != '<') fail("expected IRI in prefix declaration");
    prefixes_[label] = iriref();
    if (needs_dot) expect('.');
  }

  void wrapped_graph(std::optional<Term> name) {
    if (!trig_) fail("graph blocks are only allowed in TriG");
    expect('{');
    Graph* saved = current_;
    current_ = name ? &dataset_.graph(*name) : &dataset_.default_graph();
    skip_ws();
    while (peek() != '}') {
      if (at_end()) fail("unterminated graph block");
      bool property_list = false;
      Term subj = peek() == '[' ? bracket_subject(&property_list) : subject();
      skip_ws();
      if (!property_list || (peek() != '.' && peek() != '}')) predicate_object_list(subj);
      skip_ws();
      if (peek() == '.') {
        ++pos_;
        skip_ws();
      } else if (peek() != '}') {
        fail("expected '.' or '}'");
      }
    }
    ++pos_;
    current_ = saved;
  }

  Term bracket_subject(bool* property_list = nullptr) {
    std::size_t save = pos_;
    ++pos_;
    skip_ws();
    if (peek() == ']') {
      ++pos_;
      return fresh_blank();
    }
    pos_ = save;
    if (property_list) *property_list = true;
    return blank_property_list();
  }

  Term graph_label() {
    char c = peek();
    if (c == '<') return Term::iri(iriref());
    if (c == '_' && peek(1) == ':') return labeled_blank();
    if (c == '[') {
      ++pos_;
      skip_ws();
      if (peek() != ']') fail("expected ']'");
      ++pos_;
      return fresh_blank();
    }
    return prefixed_name();
  }

  Term subject() {
    char c = peek();
    if (c == '<') return Term::iri(iriref());
    if (c == '_' && peek(1) == ':') return labeled_blank();
    if (c == '(') return collection();
    if (c == '[') return bracket_subject();
    if (is_ascii_alpha(c) || c == ':' || static_cast<unsigned char>(c) >= 0x80)
      return prefixed_name();
    fail("expected subject");
  }

  Term verb() {
    skip_ws();
    if (peek() == 'a') {
      char n = peek(1);
      if (!(is_name_char(n) || n == ':' || n == '.')) {
        ++pos_;
        return rdf_term("type");
      }
    }
    char c = peek();
    if (c == '<') return Term::iri(iriref());
    if (is_ascii_alpha(c) || c == ':' || static_cast<unsigned char>(c) >= 0x80)
      return prefixed_name();
    fail("expected predicate");
  }

  void predicate_object_list(const Term& subj) {
    for (;;) {
      Term pred = verb();
      object_list(subj, pred);
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        ++pos_;
        skip_ws();
      }
      char c = peek();
      if (c == '.' || c == ']' || c == '}' || at_end()) return;
    }
  }

  void object_list(const Term& subj, const Term& pred) {
    for (;;) {
      skip_ws();
      Term obj = object();
      emit(subj, pred, std::move(obj));
      skip_ws();
      if (peek() != ',') return;
      ++pos_;
    }
  }

  void emit(const Term& s, const Term& p, Term o) {
    Graph& g = current_ ? *current_ : dataset_.default_graph();
    g.add(Triple(s, p, std::move(o)));
  }

  Term object() {
    char c = peek();
    if (c == '<') return Term::iri(iriref());
    if (c == '_' && peek(1) == ':') return labeled_blank();
    if (c == '(') return collection();
    if (c == '[') return bracket_subject();
    if (c == '"' || c == '\'') return string_literal();
    if (is_ascii_digit(c) || c == '+' || c == '-' || (c == '.' && is_ascii_digit(peek(1))))
      return numeric_literal();
    if (keyword_ahead("TRUE") && src_.compare(pos_, 4, "true") == 0) {
      pos_ += 4;
      return Term::literal("true", xsd::boolean);
    }
    if (keyword_ahead("FALSE") && src_.compare(pos_, 5, "false") == 0) {
      pos_ += 5;
      return Term::literal("false", xsd::boolean);
    }
    if (is_ascii_alpha(c) || c == ':' || static_cast<unsigned char>(c) >= 0x80)
      return prefixed_name();
    if (at_end()) fail("unexpected end of input, expected object");
    fail("expected object");
  }

  Term blank_property_list() {
    ++pos_;  // '['
    Term node = fresh_blank();
    predicate_object_list(node);
    expect(']');
    return node;
  }

  Term collection() {
    ++pos_;  // '('
    std::vector<Term> items;
    skip_ws();
    while (peek() != ')') {
      if (at_end()) fail("unterminated collection");
      items.push_back(object());
      skip_ws();
    }
    ++pos_;
    if (items.empty()) return rdf_term("nil");
    std::vector<Term> cells;
    cells.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) cells.push_back(fresh_blank());
    for (std::size_t i = 0; i < items.size(); ++i) {
      emit(cells[i], rdf_term("first"), items[i]);
      emit(cells[i], rdf_term("rest"), i + 1 < items.size() ? cells[i + 1] : rdf_term("nil"));
    }
    return cells.front();
  }

  std::uint32_t hex_escape(int digits) {
    std::uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      char h = peek();
      int v;
      if (h >= '0' && h <= '9') v = h - '0';
      else if (h >= 'a' && h <= 'f') v = h - 'a' + 10;
      else if (h >= 'A' && h <= 'F') v = h - 'A' + 10;
      else fail("invalid unicode escape");
      cp = cp * 16 + static_cast<std::uint32_t>(v);
      ++pos_;
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("invalid code point in escape");
    return cp;
  }

  std::string iriref() {
    ++pos_;  // '<'
    std::string out;
    for (;;) {
      if (at_end()) fail("unterminated IRI");
      char c = peek();
      if (c == '>') {
        ++pos_;
        break;
      }
      if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' ||
          c == '|' || c == '^' || c == '`')
        fail("illegal character in IRI");
      if (c == '\\') {
        ++pos_;
        char e = peek();
        ++pos_;
        if (e == 'u') append_utf8(out, hex_escape(4));
        else if (e == 'U') append_utf8(out, hex_escape(8));
        else fail("invalid escape in IRI");
        continue;
      }
      out += c;
      ++pos_;
    }
    if (out.empty()) fail("empty IRI (relative references are not supported)");
    return out;
  }

  Term prefixed_name() {
    std::size_t start = pos_;
    std::string prefix;
    while (!at_end() && peek() != ':') {
      char c = peek();
      if (!(is_name_char(c) || c == '.')) {
        pos_ = start;
        fail("expected prefixed name");
      }
      prefix += c;
      ++pos_;
    }
    if (at_end()) fail("expected ':' in prefixed name");
    ++pos_;
    std::string local;
    for (;;) {
      char c = peek();
      if (is_name_char(c) || c == ':' || c == '.') {
        local += c;
        ++pos_;
      } else if (c == '%' && std::isxdigit(static_cast<unsigned char>(peek(1))) &&
                 std::isxdigit(static_cast<unsigned char>(peek(2)))) {
        local.append(src_.substr(pos_, 3));
        pos_ += 3;
      } else if (c == '\\' && pos_ + 1 < src_.size()) {
        local += peek(1);
        pos_ += 2;
      } else {
        break;
      }
    }
    while (!local.empty() && local.back() == '.') {
      local.pop_back();
      --pos_;
    }
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) {
      pos_ = start;
      fail("unknown prefix '" + prefix + ":'");
    }
    return Term::iri(it->second + local);
  }

  Term labeled_blank() {
    pos_ += 2;
    std::string label;
    while (!at_end() && (is_ascii_alnum(peek()) || peek() == '_' || peek() == '-' || peek() == '.'))
      label += src_[pos_++];
    while (!label.empty() && label.back() == '.') {
      label.pop_back();
      --pos_;
    }
    if (label.empty()) fail("empty blank node label");
    auto it = explicit_labels_.find(label);
    if (it != explicit_labels_.end()) return Term::blank(it->second);
    std::string actual = used_labels_.count(label) ? fresh_label() : label;
    used_labels_.insert(actual);
    explicit_labels_.emplace(label, actual);
    return Term::blank(actual);
  }

  std::string fresh_label() {
    std::string label;
    do {
      label = "genid" + std::to_string(++fresh_counter_);
    } while (used_labels_.count(label) || explicit_labels_.count(label));
    used_labels_.insert(label);
    return label;
  }

  Term fresh_blank() { return Term::blank(fresh_label()); }

  Term string_literal() {
    char q = peek();
    bool long_form = peek(1) == q && peek(2) == q;
    pos_ += long_form ? 3 : 1;
    std::string lexical;
    for (;;) {
      if (at_end()) fail("unterminated string literal");
      char c = peek();
      if (long_form) {
        if (c == q && peek(1) == q && peek(2) == q) {
          pos_ += 3;
          break;
        }
      } else if (c == q) {
        ++pos_;
        break;
      } else if (c == '\n' || c == '\r') {
        fail("unterminated string literal");
      }
      if (c == '\\') {
        ++pos_;
        char e = peek();
        ++pos_;
        switch (e) {
          case 't': lexical += '\t'; break;
          case 'b': lexical += '\b'; break;
          case 'n': lexical += '\n'; break;
          case 'r': lexical += '\r'; break;
          case 'f': lexical += '\f'; break;
          case '"': lexical += '"'; break;
          case '\'': lexical += '\''; break;
          case '\\': lexical += '\\'; break;
          case 'u': append_utf8(lexical, hex_escape(4)); break;
          case 'U': append_utf8(lexical, hex_escape(8)); break;
          default: fail("invalid escape sequence in string");
        }
        continue;
      }
      lexical += c;
      ++pos_;
    }
    if (peek() == '@') {
      ++pos_;
      std::string tag;
      while (!at_end() && (is_ascii_alnum(peek()) || peek() == '-')) tag += src_[pos_++];
      if (!Term::valid_language_tag(tag)) fail("invalid language tag");
      return Term::lang_literal(std::move(lexical), std::move(tag));
    }
    if (peek() == '^' && peek(1) == '^') {
      pos_ += 2;
      Term dt = peek() == '<' ? Term::iri(iriref()) : prefixed_name();
      return Term::literal(std::move(lexical), dt.value());
    }
    return Term::literal(std::move(lexical));
  }

  Term numeric_literal() {
    std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    std::size_t digits = 0;
    while (is_ascii_digit(peek())) {
      ++pos_;
      ++digits;
    }
    bool decimal = false;
    if (peek() == '.' && is_ascii_digit(peek(1))) {
      decimal = true;
      ++pos_;
      while (is_ascii_digit(peek())) {
        ++pos_;
        ++digits;
      }
    }
    bool exponent = false;
    if ((peek() == 'e' || peek() == 'E') && digits > 0) {
      std::size_t save = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (is_ascii_digit(peek())) {
        exponent = true;
        while (is_ascii_digit(peek())) ++pos_;
      } else {
        pos_ = save;
      }
    }
    if (digits == 0) {
      pos_ = start;
      fail("invalid numeric literal");
    }
    std::string lexical(src_.substr(start, pos_ - start));
    const std::string& dt = exponent ? xsd::double_ : decimal ? xsd::decimal : xsd::integer;
    return Term::literal(std::move(lexical), dt);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  bool trig_;
  PrefixMap prefixes_;
  Dataset dataset_;
  Graph* current_ = nullptr;
  std::map<std::string, std::string> explicit_labels_;
  std::set<std::string> used_labels_;
  std::size_t fresh_counter_ = 0;
};

}  // namespace detail

/// Parses Turtle. Graph blocks are rejected.
inline Graph parse_turtle(std::string_view text) {
  Dataset ds = detail::TurtleReader(text, false).read_document();
  return ds.default_graph();
}

/// Parses TriG. Top-level triples and `{ ... }` blocks go to the default graph.
inline Dataset parse_trig(std::string_view text) {
  return detail::TurtleReader(text, true).read_document();
}

/// Parses one term written in Turtle syntax, e.g. `<http://x>`, `_:q1`,
/// `sc:Created` or `"5"`.
inline Term parse_term(std::string_view text, const PrefixMap& prefixes = {}) {
  return detail::TurtleReader(text, false, prefixes).read_single_term();
}

inline std::string escape_string(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20 || c == 0x7F) {
          static constexpr char hex[] = "0123456789ABCDEF";
          out += "\\u00";
          out += hex[(c >> 4) & 0xF];
          out += hex[c & 0xF];
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

inline std::string render_iri(const std::string& iri, const PrefixMap& prefixes) {
  const std::string* best_prefix = nullptr;
  std::size_t best_len = 0;
  for (const auto& [label, ns] : prefixes) {
    if (ns.size() >= best_len && iri.size() >= ns.size() && iri.compare(0, ns.size(), ns) == 0 &&
        detail::is_safe_local_name(std::string_view(iri).substr(ns.size()))) {
      if (!best_prefix || ns.size() > best_len) {
        best_prefix = &label;
        best_len = ns.size();
      }
    }
  }
  if (best_prefix) return *best_prefix + ":" + iri.substr(best_len);
  return "<" + iri + ">";
}

/// Turtle rendering of a single term.
inline std::string render_term(const Term& t, const PrefixMap& prefixes = {}) {
  switch (t.kind()) {
    case TermKind::Iri: return render_iri(t.value(), prefixes);
    case TermKind::BlankNode: return "_:" + t.value();
    case TermKind::Literal: break;
  }
  if (t.datatype() == xsd::integer && detail::is_integer_lexical(t.value())) return t.value();
  if (t.datatype() == xsd::boolean && (t.value() == "true" || t.value() == "false"))
    return t.value();
  std::string out = escape_string(t.value());
  if (!t.language().empty()) return out + "@" + t.language();
  if (t.datatype() != xsd::string) out += "^^" + render_iri(t.datatype(), prefixes);
  return out;
}

namespace detail {

inline std::string prefix_header(const PrefixMap& prefixes) {
  std::string out;
  for (const auto& [label, ns] : prefixes) out += "@prefix " + label + ": <" + ns + "> .\n";
  return out;
}

inline void write_triples(std::string& out, const Graph& graph, const PrefixMap& prefixes,
                          std::string_view indent) {
  const Term type = rdf_term("type");
  std::vector<std::tuple<std::string, std::string, std::string>> rows;
  rows.reserve(graph.size());
  for (const auto& t : graph) {
    rows.emplace_back(render_term(t.subject(), prefixes),
                      t.predicate() == type ? "a" : render_term(t.predicate(), prefixes),
                      render_term(t.object(), prefixes));
  }
  std::sort(rows.begin(), rows.end());
  for (std::size_t i = 0; i < rows.size();) {
    const auto& subj = std::get<0>(rows[i]);
    out.append(indent).append(subj);
    bool first_pred = true;
    while (i < rows.size() && std::get<0>(rows[i]) == subj) {
      const auto& pred = std::get<1>(rows[i]);
      if (!first_pred) out.append(" ;\n").append(indent).append("    ");
      else out += ' ';
      first_pred = false;
      out += pred;
      bool first_obj = true;
      while (i < rows.size() && std::get<0>(rows[i]) == subj && std::get<1>(rows[i]) == pred) {
        out += first_obj ? " " : " , ";
        first_obj = false;
        out += std::get<2>(rows[i]);
        ++i;
      }
    }
    out += " .\n";
  }
}

}  // namespace detail

/// Deterministic Turtle: prefix header, then statements grouped by subject in
/// lexicographic order of rendered (subject, predicate, object).
inline std::string serialize_turtle(const Graph& graph, const PrefixMap& prefixes) {
  std::string out = detail::prefix_header(prefixes);
  if (!graph.empty()) {
    if (!out.empty()) out += '\n';
    detail::write_triples(out, graph, prefixes, "");
  }
  return out;
}

/// Deterministic TriG: default graph statements first, then named graphs
/// ordered by rendered name.
inline std::string serialize_trig(const Dataset& dataset, const PrefixMap& prefixes) {
  std::string out = detail::prefix_header(prefixes);
  if (!dataset.default_graph().empty()) {
    if (!out.empty()) out += '\n';
    detail::write_triples(out, dataset.default_graph(), prefixes, "");
  }
  std::vector<std::pair<std::string, const Graph*>> named;
  for (const auto& [name, g] : dataset.named_graphs())
    named.emplace_back(render_term(name, prefixes), &g);
  std::sort(named.begin(), named.end());
  for (const auto& [name, g] : named) {
    if (!out.empty()) out += '\n';
    out += name + " {\n";
    detail::write_triples(out, *g, prefixes, "    ");
    out += "}\n";
  }
  return out;
}

}  // namespace httpld
