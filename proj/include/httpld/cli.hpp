#pragma once

// Command-line front end: lift, validate, query, ontology. Exit codes are
// 0 (success), 1 (conformance violations, validate only) and 2 (bad input or
// invocation).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "httpld/error.hpp"
#include "httpld/ingest.hpp"
#include "httpld/lift.hpp"
#include "httpld/ontology.hpp"
#include "httpld/query.hpp"
#include "httpld/turtle.hpp"
#include "httpld/validate.hpp"
#include "httpld/vocab.hpp"

namespace httpld::cli {

enum ExitCode : int { ok = 0, violations = 1, failure = 2 };

struct Config {
  std::string input_path = "-";
  std::string input_format;  // transcript | har | trig; empty means infer
  std::optional<std::string> base_iri;
  std::optional<std::string> out_path;
  std::string report = "text";
  std::string syntax = "trig";
  int cq = 0;
  std::string name;
  std::string prop;
  std::string request;
  std::string explain_rule;
  bool extensions = false;
};

namespace detail {

inline std::string infer_format(const std::string& path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".har")) return "har";
  if (ends_with(".trig") || ends_with(".ttl")) return "trig";
  return "transcript";
}

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

inline Dataset load_dataset(const Config& cfg, std::istream& in, std::ostream& err) {
  std::string text = read_input(cfg.input_path, in);
  std::string format = cfg.input_format.empty() ? infer_format(cfg.input_path) : cfg.input_format;
  if (format == "trig") return parse_trig(text);
  Conversation conv = format == "har" ? load_har(text) : load_transcript(text);
  Lifter lifter(LiftOptions{cfg.base_iri});
  lifter.lift_conversation(conv);
  for (const auto& note : lifter.notes()) err << "note: " << note << "\n";
  return lifter.take();
}

inline void emit(const Config& cfg, const std::string& text, std::ostream& out) {
  if (!cfg.out_path) {
    out << text;
    return;
  }
  std::ofstream f(*cfg.out_path, std::ios::binary);
  if (!f) throw Error("cannot write " + *cfg.out_path);
  f << text;
}

inline std::string row(const Binding& b, std::initializer_list<const char*> vars, const PrefixMap& prefixes) {
  std::string line;
  for (const char* v : vars) {
    if (!line.empty()) line += '\t';
    line += render_term(b.at(v), prefixes);
  }
  return line + "\n";
}

inline int cmd_lift(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  Dataset d = load_dataset(cfg, in, err);
  auto prefixes = vocab::standard_prefixes();
  if (cfg.syntax == "turtle") {
    if (!d.named_graphs().empty()) err << "note: Turtle output omits " << d.named_graphs().size() << " body graph(s)\n";
    emit(cfg, serialize_turtle(d.default_graph(), prefixes), out);
  } else {
    emit(cfg, serialize_trig(d, prefixes), out);
  }
  return ok;
}

inline int cmd_validate(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  if (!cfg.explain_rule.empty()) {
    out << explain(cfg.explain_rule) << "\n";
    return ok;
  }
  Dataset d = load_dataset(cfg, in, err);
  ValidationReport report = validate(d);
  auto prefixes = vocab::standard_prefixes();
  emit(cfg, cfg.report == "tsv" ? format_report_tsv(report, prefixes) : format_report_text(report, prefixes), out);
  return report.violation_count() == 0 ? ok : violations;
}

inline int cmd_query(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  if (cfg.cq < 1 || cfg.cq > 7) {
    err << "error: competency question must be 1-7, got " << cfg.cq << "\n";
    return failure;
  }
  if (cfg.cq == 6 && cfg.prop.empty()) {
    err << "error: query 6 needs --prop\n";
    return failure;
  }
  if (cfg.cq == 7 && cfg.name.empty()) {
    err << "error: query 7 needs --name\n";
    return failure;
  }
  auto prefixes = vocab::standard_prefixes();
  std::optional<Term> request;
  std::optional<Term> prop;
  if (cfg.cq == 5 && !cfg.request.empty()) request = parse_term(cfg.request, prefixes);
  if (cfg.cq == 6) prop = parse_term(cfg.prop, prefixes);

  Dataset d = load_dataset(cfg, in, err);
  std::string text;
  switch (cfg.cq) {
    case 1:
      for (const auto& b : cq1_media_types(d)) text += row(b, {"m", "mt"}, prefixes);
      break;
    case 2:
      for (const auto& b : cq2_interaction_status(d)) text += row(b, {"q", "status"}, prefixes);
      break;
    case 3:
      for (const auto& b : cq3_locations(d)) text += row(b, {"next"}, prefixes);
      break;
    case 4:
      for (const auto& b : cq4_conversation_status(d)) text += row(b, {"status"}, prefixes);
      break;
    case 5:
      if (request) {
        text = cq5_negotiation(d, *request) ? "true\n" : "false\n";
      } else {
        for (const auto& q : d.default_graph().subjects(vocab::type, vocab::Request))
          text += render_term(q, prefixes) + "\t" + (cq5_negotiation(d, q) ? "true" : "false") + "\n";
      }
      break;
    case 6:
      for (const auto& t : cq6_body_values(d, *prop)) text += render_term(t, prefixes) + "\n";
      break;
    case 7:
      for (const auto& t : cq7_query_param(d, cfg.name)) text += render_term(t, prefixes) + "\n";
      break;
  }
  emit(cfg, text, out);
  return ok;
}

inline int cmd_ontology(const Config& cfg, std::ostream& out) {
  emit(cfg, ontology_text(cfg.extensions), out);
  return ok;
}

}  // namespace detail

/// Runs the tool. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Lift HTTP traffic to RDF, validate it and answer competency questions", "httpld"};
  app.require_subcommand(1);

  auto add_input_options = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.input_format, "Input format")
        ->check(CLI::IsMember({"transcript", "har", "trig"}));
    sub->add_option("--base", cfg.base_iri, "Base IRI for message and URI nodes");
    sub->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
    sub->add_option("input", cfg.input_path, "Input file, or - for stdin");
  };

  auto* lift = app.add_subcommand("lift", "Lift a transcript or HAR file to TriG");
  add_input_options(lift);
  lift->add_option("--syntax", cfg.syntax, "Output syntax")->check(CLI::IsMember({"trig", "turtle"}));

  auto* val = app.add_subcommand("validate", "Check lifted traffic against the conformance rules");
  add_input_options(val);
  val->add_option("--report", cfg.report, "Report format")->check(CLI::IsMember({"text", "tsv"}));
  val->add_option("--explain", cfg.explain_rule, "Describe one rule and exit");

  auto* query = app.add_subcommand("query", "Answer a competency question (1-7)");
  query->add_option("cq", cfg.cq, "Competency question number")->required();
  add_input_options(query);
  query->add_option("--name", cfg.name, "Query parameter name (7)");
  query->add_option("--prop", cfg.prop, "Body property, IRI or prefixed name (6)");
  query->add_option("--request", cfg.request, "Request node (5)");

  auto* onto = app.add_subcommand("ontology", "Print the embedded ontology");
  onto->add_flag("--extensions", cfg.extensions, "Append the header extension declarations");
  onto->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : failure;
  }

  try {
    if (lift->parsed()) return detail::cmd_lift(cfg, in, out, err);
    if (val->parsed()) return detail::cmd_validate(cfg, in, out, err);
    if (query->parsed()) return detail::cmd_query(cfg, in, out, err);
    return detail::cmd_ontology(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }
}

}  // namespace httpld::cli
