// Lifts the registar conversation, then asks where the created resource
// lives and what its final status was.

#include <iostream>

#include "httpld/httpld.hpp"

int main() {
  constexpr std::string_view transcript =
      "POST /reg?count=5 HTTP/1.1\n"
      "Host: example.org:8080\n"
      "---\n"
      "201 Created HTTP/1.1\n"
      "Location: /reg/x8344\n"
      "---\n"
      "GET /reg/x8344 HTTP/1.1\n"
      "Host: example.org:8080\n"
      "Accept: text/turtle\n"
      "---\n"
      "200 OK HTTP/1.1\n"
      "Content-Type: text/turtle\n"
      "\n"
      "<http://example.org:8080/reg/x8344> <http://example.org/ns#ids> (14 35 28 6 22) .\n";

  auto conversation = httpld::load_transcript(transcript);
  auto dataset = httpld::lift_conversation(conversation, {"http://example.org/log/"});
  auto prefixes = httpld::vocab::standard_prefixes();

  for (const auto& b : httpld::cq3_locations(dataset))
    std::cout << "created: " << httpld::render_term(b.at("next"), prefixes) << "\n";
  for (const auto& b : httpld::cq4_conversation_status(dataset))
    std::cout << "dereferenced with status " << b.at("status").value() << "\n";
  std::cout << "ids:";
  for (const auto& v : httpld::cq6_body_values(dataset, httpld::Term::iri("http://example.org/ns#ids")))
    std::cout << " " << v.value();
  std::cout << "\n";

  auto report = httpld::validate(dataset);
  std::cout << httpld::format_report_text(report, prefixes);
  return report.passed() ? 0 : 1;
}
