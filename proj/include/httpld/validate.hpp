#pragma once

// Closed-world conformance checks over lifted datasets. Each rule encodes one
// ontology axiom or protocol requirement procedurally; absence of facts is
// reported, which open-world OWL reasoning cannot do.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "httpld/error.hpp"
#include "httpld/http_model.hpp"
#include "httpld/rdf.hpp"
#include "httpld/turtle.hpp"
#include "httpld/vocab.hpp"

namespace httpld {

enum class Severity { Violation, Warning };

inline std::string_view to_string(Severity s) { return s == Severity::Violation ? "violation" : "warning"; }

struct Finding {
  std::string rule_id;
  Severity severity;
  Term focus;
  std::string message;
};

struct ValidationReport {
  std::vector<Finding> findings;
  std::vector<std::string> checked_rules;

  bool passed() const { return findings.empty(); }
  std::size_t violation_count() const {
    return static_cast<std::size_t>(std::count_if(findings.begin(), findings.end(),
                                                  [](const Finding& f) { return f.severity == Severity::Violation; }));
  }
};

struct RuleInfo {
  std::string_view id;
  std::string_view title;
  std::string_view description;
};

inline constexpr std::array<RuleInfo, 10> rule_registry = {{
    {"R1", "functional properties",
     "Each node has at most one value for :mthd, :uri, :sc, :body, :link and :statusCodeNumber; "
     "the ontology declares them owl:FunctionalProperty (a message has at most one body, a request one "
     "method and one effective URI, a response one status)."},
    {"R2", "request completeness",
     "Every :Request must have a method (:mthd) and an effective request URI (:uri)."},
    {"R3", "response completeness",
     "Every :Response must have a status (:sc), and every status must carry a 3-digit :statusCodeNumber."},
    {"R4", "status code sanity",
     "A status code number outside 100-599 has no status class (warning). A standard sc: individual used "
     "with a number other than its own is a violation; so is a number that is not an integer in 0-999."},
    {"R5", "single final response",
     "A request may receive several interim (1xx) responses but only one final response; interim and "
     "final responses are disjoint classes."},
    {"R6", "content type with body",
     "A message that has a body must declare its media type with a Content-Type header (hds:content-type)."},
    {"R7", "HEAD without body",
     "Responses to a HEAD request must not carry a body."},
    {"R8", "content negotiation",
     "When the request has an Accept header, the response Content-Type should match one of its media "
     "ranges (substring containment either way, */* and type/* wildcards). Reported as a warning."},
    {"R9", "method token",
     "A :methodName must be a non-empty HTTP token (no whitespace or separators)."},
    {"R10", "location well-formed",
     "A Location header must lift to a URI (:link); its value must be an absolute URI or an "
     "absolute-path reference."},
}};

/// Human-readable description of a rule.
inline std::string explain(std::string_view rule_id) {
  for (const auto& r : rule_registry) {
    if (r.id == rule_id) return std::string(r.id) + " (" + std::string(r.title) + "): " + std::string(r.description);
  }
  throw Error("unknown rule id: " + std::string(rule_id));
}

namespace detail {

inline int rule_index(std::string_view id) {
  for (std::size_t i = 0; i < rule_registry.size(); ++i)
    if (rule_registry[i].id == id) return static_cast<int>(i);
  return static_cast<int>(rule_registry.size());
}

class Checker {
 public:
  explicit Checker(const Graph& g) : g_(g) {}

  std::vector<Finding> run() {
    functional_properties();
    request_completeness();
    response_completeness();
    status_codes();
    single_final();
    content_type_with_body();
    head_without_body();
    content_negotiation();
    method_tokens();
    locations();
    std::stable_sort(out_.begin(), out_.end(), [](const Finding& a, const Finding& b) {
      int ia = rule_index(a.rule_id), ib = rule_index(b.rule_id);
      if (ia != ib) return ia < ib;
      return render_term(a.focus) < render_term(b.focus);
    });
    return std::move(out_);
  }

 private:
  void report(std::string_view rule, Severity sev, const Term& focus, std::string msg) {
    out_.push_back({std::string(rule), sev, focus, std::move(msg)});
  }

  std::set<Term> typed(const Term& cls) const { return g_.subjects(vocab::type, cls); }
  bool has(const Term& s, const Term& p) const { return g_.object(s, p).has_value(); }
  bool is_a(const Term& s, const Term& cls) const { return g_.contains(Triple(s, vocab::type, cls)); }

  void functional_properties() {
    for (const auto& p : {vocab::mthd_prop, vocab::uri, vocab::sc_prop, vocab::body, vocab::link,
                          vocab::statusCodeNumber}) {
      std::map<Term, std::size_t> counts;
      for (const auto& t : g_.match(std::nullopt, p, std::nullopt)) ++counts[t.subject()];
      for (const auto& [s, n] : counts) {
        if (n > 1)
          report("R1", Severity::Violation, s,
                 render_term(p, vocab::standard_prefixes()) + " has " + std::to_string(n) + " values");
      }
    }
  }

  void request_completeness() {
    for (const auto& q : typed(vocab::Request)) {
      if (!has(q, vocab::mthd_prop)) report("R2", Severity::Violation, q, "request has no method");
      if (!has(q, vocab::uri)) report("R2", Severity::Violation, q, "request has no effective URI");
    }
  }

  void response_completeness() {
    for (const auto& r : typed(vocab::Response)) {
      auto statuses = g_.objects(r, vocab::sc_prop);
      if (statuses.empty()) report("R3", Severity::Violation, r, "response has no status");
      for (const auto& s : statuses) {
        if (!has(s, vocab::statusCodeNumber))
          report("R3", Severity::Violation, s, "status has no status code number");
      }
    }
  }

  void status_codes() {
    for (const auto& t : g_.match(std::nullopt, vocab::statusCodeNumber, std::nullopt)) {
      const Term& status = t.subject();
      const Term& lit = t.object();
      if (!lit.is_literal() || !is_integer_lexical(lit.value()) || lit.value().size() > 4) {
        report("R4", Severity::Violation, status, "status code number is not an integer: " + render_term(lit));
        continue;
      }
      int code = std::stoi(lit.value());
      if (code < 0 || code > 999) {
        report("R4", Severity::Violation, status, "status code number has more than 3 digits");
        continue;
      }
      if (status.is_iri() && status.value().rfind(vocab::sc_ns, 0) == 0) {
        auto local = std::string_view(status.value()).substr(vocab::sc_ns.size());
        if (auto expected = standard_status_code(local); expected && *expected != code) {
          report("R4", Severity::Violation, status,
                 "sc:" + std::string(local) + " denotes " + std::to_string(*expected) + ", not " +
                     std::to_string(code));
          continue;
        }
      }
      if (!status_class(code))
        report("R4", Severity::Warning, status, "status code " + std::to_string(code) + " has no status class");
    }
  }

  void single_final() {
    std::map<Term, std::size_t> finals;
    for (const auto& t : g_.match(std::nullopt, vocab::resp, std::nullopt)) {
      if (!is_a(t.object(), vocab::InterimResponse)) ++finals[t.subject()];
    }
    for (const auto& [q, n] : finals) {
      if (n > 1) report("R5", Severity::Violation, q, "request has " + std::to_string(n) + " final responses");
    }
    for (const auto& r : typed(vocab::InterimResponse)) {
      if (is_a(r, vocab::FinalResponse))
        report("R5", Severity::Violation, r, "response is both interim and final");
    }
  }

  void content_type_with_body() {
    std::set<Term> messages;
    for (const auto& t : g_.match(std::nullopt, vocab::body, std::nullopt)) messages.insert(t.subject());
    for (const auto& m : messages) {
      if (!has(m, vocab::content_type))
        report("R6", Severity::Violation, m, "message has a body but no Content-Type");
    }
  }

  bool is_head(const Term& method) const {
    if (method == vocab::mthd("HEAD")) return true;
    for (const auto& name : g_.objects(method, vocab::methodName))
      if (name.value() == "HEAD") return true;
    return false;
  }

  void head_without_body() {
    for (const auto& t : g_.match(std::nullopt, vocab::resp, std::nullopt)) {
      const Term& r = t.object();
      if (!has(r, vocab::body)) continue;
      for (const auto& m : g_.objects(t.subject(), vocab::mthd_prop)) {
        if (is_head(m)) {
          report("R7", Severity::Violation, r, "response to a HEAD request has a body");
          break;
        }
      }
    }
  }

  static bool range_matches(std::string_view range, std::string_view content_type) {
    auto essence = [](std::string_view s) { return trim(s.substr(0, s.find(';'))); };
    auto r = essence(range);
    if (r == "*/*") return true;
    if (r.size() > 2 && r.substr(r.size() - 2) == "/*") {
      auto prefix = r.substr(0, r.size() - 1);
      auto ct = essence(content_type);
      if (ct.size() >= prefix.size() && iequals(ct.substr(0, prefix.size()), prefix)) return true;
    }
    return range.find(content_type) != std::string_view::npos ||
           content_type.find(range) != std::string_view::npos;
  }

  void content_negotiation() {
    for (const auto& t : g_.match(std::nullopt, vocab::resp, std::nullopt)) {
      const Term& q = t.subject();
      const Term& r = t.object();
      auto accepts = g_.objects(q, vocab::accept);
      auto types = g_.objects(r, vocab::content_type);
      if (accepts.empty() || types.empty()) continue;
      bool matched = false;
      for (const auto& a : accepts)
        for (const auto& range : g_.objects(a, vocab::media_type))
          for (const auto& ct : types)
            if (range_matches(range.value(), ct.value())) matched = true;
      if (!matched)
        report("R8", Severity::Warning, r, "Content-Type matches no media range of the request's Accept header");
    }
  }

  void method_tokens() {
    for (const auto& t : g_.match(std::nullopt, vocab::methodName, std::nullopt)) {
      const Term& name = t.object();
      if (!name.is_literal() || !is_token(name.value()))
        report("R9", Severity::Violation, t.subject(), "method name " + render_term(name) + " is not a token");
    }
  }

  void locations() {
    for (const auto& t : g_.match(std::nullopt, vocab::hdrName, std::nullopt)) {
      if (!t.object().is_literal() || !iequals(t.object().value(), "Location")) continue;
      if (!has(t.subject(), vocab::link))
        report("R10", Severity::Violation, t.subject(), "Location header value does not lift to a URI");
    }
  }

  const Graph& g_;
  std::vector<Finding> out_;
};

}  // namespace detail

/// Runs every rule over the default graph of `dataset`.
inline ValidationReport validate(const Dataset& dataset) {
  ValidationReport report;
  report.findings = detail::Checker(dataset.default_graph()).run();
  for (const auto& r : rule_registry) report.checked_rules.emplace_back(r.id);
  return report;
}

/// One line per finding: severity, rule, focus node and message, tab-separated.
inline std::string format_report_tsv(const ValidationReport& report, const PrefixMap& prefixes = {}) {
  std::string out;
  for (const auto& f : report.findings) {
    out += std::string(to_string(f.severity)) + "\t" + f.rule_id + "\t" + render_term(f.focus, prefixes) + "\t" +
           f.message + "\n";
  }
  return out;
}

inline std::string format_report_text(const ValidationReport& report, const PrefixMap& prefixes = {}) {
  std::string out;
  for (const auto& f : report.findings) {
    out += std::string(to_string(f.severity)) + " " + f.rule_id + " " + render_term(f.focus, prefixes) + ": " +
           f.message + "\n";
  }
  std::size_t violations = report.violation_count();
  out += std::to_string(report.checked_rules.size()) + " rules checked, " + std::to_string(violations) +
         " violation(s), " + std::to_string(report.findings.size() - violations) + " warning(s)\n";
  return out;
}

}  // namespace httpld
