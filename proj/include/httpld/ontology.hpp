#pragma once

#include <string>
#include <string_view>

#include "httpld/ontology_ttl.hpp"
#include "httpld/rdf.hpp"
#include "httpld/turtle.hpp"

namespace httpld {

/// Declarations for the header terms used by lifting that the ontology does
/// not define. Same shape as the Location header terms.
inline constexpr std::string_view ontology_extensions_turtle = R"ttl(
## ------------------------------- ##
## Header extensions (Content-Type, ##
## Accept).                         ##
## ------------------------------- ##

hds:ContentTypeHeader a owl:Class ;
    rdfs:label "Content-Type header"@en ;
    rdfs:subClassOf :Header ;
    owl:equivalentClass [
        owl:intersectionOf (:Header [
                a owl:Restriction ;
                owl:onProperty :hdrName ;
                owl:hasValue "Content-Type" ;
                ])] .

hds:content-type a owl:DatatypeProperty ;
    rdfs:label "content type"@en ;
    rdfs:comment "The media type declared by the Content-Type header of a message."@en ;
    rdfs:domain :Message ;
    rdfs:range rdfs:Literal .

hds:AcceptHeader a owl:Class ;
    rdfs:label "Accept header"@en ;
    rdfs:subClassOf :Header ;
    owl:equivalentClass [
        owl:intersectionOf (:Header [
                a owl:Restriction ;
                owl:onProperty :hdrName ;
                owl:hasValue "Accept" ;
                ])] .

hds:accept a owl:ObjectProperty ;
    rdfs:label "accept"@en ;
    rdfs:comment "The media ranges declared by the Accept header of a request."@en ;
    rdfs:domain :Request .

hds:media-type a owl:DatatypeProperty ;
    rdfs:label "media type"@en ;
    rdfs:comment "One media range of an Accept header."@en ;
    rdfs:range rdfs:Literal .
)ttl";

/// Ontology text, optionally followed by the extension declarations.
inline std::string ontology_text(bool with_extensions = false) {
  std::string out(ontology_turtle);
  if (with_extensions) out += ontology_extensions_turtle;
  return out;
}

/// The vendored ontology as a graph. Parsed once; callers get a copy.
inline Graph embedded_ontology(bool with_extensions = false) {
  static const Graph base = parse_turtle(ontology_turtle);
  static const Graph extended = parse_turtle(ontology_text(true));
  return with_extensions ? extended : base;
}

}  // namespace httpld
