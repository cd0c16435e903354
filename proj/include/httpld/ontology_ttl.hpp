#pragma once

// The HTTP interaction ontology (Turtle), vendored verbatim. Term IRIs,
// method individuals and status-code individuals are read from here.

#include <string_view>

namespace httpld {

inline constexpr std::string_view ontology_turtle = R"ttl(@prefix : <http://w3id.org/http#> .
@prefix mthd: <http://w3id.org/http/mthd#> .
@prefix sc: <http://w3id.org/http/sc#> .
@prefix hds: <http://w3id.org/http/headers#> .
@prefix cnt: <http://w3id.org/http/content#> .

@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix sd: <http://www.w3.org/ns/sparql-service-description#> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .

: a owl:Ontology ;
    rdfs:label "HTTP Ontology"@en ;
    rdfs:comment "A namespace for describing HTTP interactions"@en .

## --------- ##
## Messages. ##
## --------- ##

:Message a owl:Class, owl:AllDisjointClasses ;
    rdfs:label "Message"@en ;
    rdfs:comment "An HTTP message."@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    owl:members (:Request :Response) ;
    rdfs:subClassOf [
        owl:intersectionOf ([
                a owl:Restriction ;
                owl:onProperty :body ;
                owl:allValuesFrom cnt:Content ;
                ] [
                a owl:Restriction ;
                owl:onProperty :hdr ;
                owl:allValuesFrom :Header;
                ])] .

:Request a owl:Class ;
    rdfs:label "Request"@en ;
    rdfs:comment "An HTTP request."@en ;
    rdfs:subClassOf [
        owl:intersectionOf (:Message [
                a owl:Restriction ;
                owl:onProperty :mthd ;
                owl:someValuesFrom :Method ;
                ] [
                a owl:Restriction ;
                owl:onProperty :uri ;
                owl:someValuesFrom :URI;
                ])] ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> .

:Response a owl:Class, owl:AllDisjointClasses ;
    rdfs:label "Response"@en ;
    rdfs:comment "An HTTP response."@en ;
    owl:members (:InterimResponse :FinalResponse) ;
    rdfs:subClassOf [
        owl:intersectionOf (:Message [
                a owl:Restriction ;
                owl:onProperty :sc ;
                owl:someValuesFrom :StatusCode ;
                ])] .

:InterimResponse a owl:Class ;
    rdfs:label "Interim"@en ;
    rdfs:subClassOf :Response, [
        a owl:Restriction ;
        owl:onProperty :sc ;
        owl:someValuesFrom sc:Informational ;
        ] ;
    rdfs:comment "An interim response."@en .

:FinalResponse a owl:Class ;
    rdfs:label "Final"@en ;
    rdfs:subClassOf :Response, [ owl:complementOf :InterimResponse ] ;
    rdfs:comment "A final response."@en .

:resp a owl:ObjectProperty ;
    rdfs:label "response"@en ;
    rdfs:comment "The HTTP response sent in answer to an HTTP request."@en ;
    rdfs:domain :Request ;
    rdfs:range :Response .

## ------- ##
## Method. ##
## ------- ##

:Method a owl:Class ;
    rdfs:label "Method"@en ;
    rdfs:comment "The HTTP method used for the request."@en ;
    owl:equivalentClass [
        a owl:Restriction ;
        owl:onProperty :methodName ;
        owl:someValuesFrom :notEmptyToken ] .

:mthd a owl:ObjectProperty, owl:FunctionalProperty ;
    rdfs:label "method"@en ;
    rdfs:comment "The HTTP method used for the HTTP request."@en ;
    rdfs:domain :Request ;
    rdfs:range :Method .

:methodName a owl:DatatypeProperty, owl:FunctionalProperty ;
    rdfs:label "method name"@en ;
    rdfs:comment "The HTTP method name used for the HTTP request."@en ;
    rdfs:domain :Method ;
    rdfs:range :notEmptyToken .

:notEmptyToken a rdfs:Datatype ;
    rdfs:label "Non-empty token"@en ;
    rdfs:comment "A token with at least one character" ;
    owl:equivalentClass [
        a rdfs:Datatype ;
        owl:onDatatype xsd:token ;
        owl:withRestrictions ([ xsd:minLength 1])] .

mthd:GET a :Method ;
    rdfs:label "GET" ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231#section-4.3.1> ;
    :methodName "GET" .

mthd:HEAD a :Method  ;
    rdfs:label "HEAD" ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231#section-4.3.2> ;
    :methodName "HEAD" .

mthd:POST a :Method  ;
    rdfs:label "POST" ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231#section-4.3.3> ;
    :methodName "POST" .

mthd:PUT a :Method  ;
    rdfs:label "PUT" ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231#section-4.3.4> ;
    :methodName "PUT" .

mthd:DELETE a :Method  ;
    rdfs:label "DELETE" ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231#section-4.3.5> ;
    :methodName "DELETE" .

mthd:CONNECT a :Method  ;
    rdfs:label "CONNECT" ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231#section-4.3.6> ;
    :methodName "CONNECT" .

mthd:OPTIONS a :Method  ;
    rdfs:label "OPTIONS" ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231#section-4.3.7> ;
    :methodName "OPTIONS" .

mthd:TRACE a :Method  ;
    rdfs:label "TRACE" ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231#section-4.3.8> ;
    :methodName "TRACE" .

mthd:PATCH a :Method  ;
    rdfs:label "PATCH" ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc5789> ;
    :methodName "PATCH" .

## ---- ##
## URI. ##
## ---- ##

:uri a owl:ObjectProperty, owl:FunctionalProperty ;
    rdfs:label "uri" ;
    rdfs:comment "Effective request URI" ;
    rdfs:domain :Request ;
    rdfs:range :URI .

:URI a owl:Class ;
    rdfs:label "URI description" ;
    rdfs:comment
    "A semantic description of the syntactic parts composing a URI."@en .

:scheme a owl:DatatypeProperty, owl:FunctionalProperty ;
    rdfs:label "scheme"@en ;
    rdfs:domain :URI ;
    rdfs:comment "The scheme part of an URI."@en .

:authority a owl:DatatypeProperty, owl:FunctionalProperty ;
    rdfs:label "authority"@en ;
    rdfs:domain :URI ;
    rdfs:comment "The authority part of an URI."@en .

:path a owl:DatatypeProperty, owl:FunctionalProperty ;
    rdfs:label "path"@en ;
    rdfs:domain :URI ;
    rdfs:comment "The path part of an URI."@en .

:query a owl:DatatypeProperty, owl:FunctionalProperty ;
    rdfs:label "query"@en ;
    rdfs:domain :URI ;
    rdfs:comment "The query part of an URI."@en .

:fragment a owl:DatatypeProperty, owl:FunctionalProperty ;
    rdfs:label "fragment"@en ;
    rdfs:domain :URI ;
    rdfs:comment "The fragment part of an URI."@en .

:idRes a owl:DatatypeProperty, owl:FunctionalProperty ;
    rdfs:label "resource"@en ;
    rdfs:comment "Everything except the query part"@en ;
    rdfs:domain :URI .

## -------- ##
## Headers. ##
## -------- ##

:Header a owl:Class ;
    rdfs:label "Header"@en ;
    rdfs:comment "A header in an HTTP message."@en ;
    rdfs:subClassOf [
        a owl:Restriction ;
        owl:onProperty :hdrName ;
        owl:someValuesFrom rdfs:Literal
        ] , [
        a owl:Restriction ;
        owl:onProperty :hdrValue ;
        owl:someValuesFrom rdfs:Literal
        ] .

:hdrName a owl:DatatypeProperty, owl:FunctionalProperty ;
    rdfs:label "header name"@en ;
    rdfs:comment "The name of an HTTP message header."@en ;
    rdfs:domain :Header ;
    rdfs:range rdfs:Literal .

:hdrValue a owl:DatatypeProperty, owl:FunctionalProperty ;
    rdfs:label "header value"@en ;
    rdfs:comment "The value of an HTTP message header."@en ;
    rdfs:domain :Header ;
    rdfs:range rdfs:Literal .

:hdr a owl:ObjectProperty ;
    rdfs:label "header"@en ;
    rdfs:comment "The headers in an HTTP message."@en ;
    rdfs:domain :Message ;
    rdfs:range :Header .

### Location Header property

hds:isLocationHeader a owl:ObjectProperty, owl:ReflexiveProperty ;
    rdfs:label "location header?" ;
    rdfs:domain :Header ;
    rdfs:range :Header .

:link a owl:ObjectProperty, owl:FunctionalProperty .

hds:LocationHeader a owl:Class ;
    rdfs:subClassOf [
        a owl:Restriction ;
        owl:onProperty hds:isLocationHeader ;
        owl:hasSelf true
        ] , [
        a owl:Restriction ;
        owl:onProperty :link ;
        owl:someValuesFrom :URI ;
        ] ;
    owl:equivalentClass [
        owl:intersectionOf (:Header [
                a owl:Restriction ;
                owl:onProperty :hdrName ;
                owl:hasValue "Location" ;
                ])] .

hds:location a owl:ObjectProperty ;
    rdfs:label "location" ;
    rdfs:domain :Response ;
    rdfs:range :URI ;
    owl:propertyChainAxiom (:hdr hds:isLocationHeader :link) .

## ----------------- ##
## Query parameters. ##
## ----------------- ##

:QueryParam a owl:Class ;
    rdfs:comment "A parameter for a part of a header value."@en ;
    rdfs:label "Query Parameter"@en .

:paramName a owl:DatatypeProperty, owl:FunctionalProperty ;
    rdfs:label "parameter name"@en ;
    rdfs:comment "The name of a query parameter."@en ;
    rdfs:domain :QueryParam ;
    rdfs:range rdfs:Literal .

:paramValue a owl:DatatypeProperty, owl:FunctionalProperty ;
    rdfs:label "parameter value"@en ;
    rdfs:comment "The literal value of a query parameter."@en ;
    rdfs:domain :QueryParam ;
    rdfs:range rdfs:Literal .

:queryParams a owl:ObjectProperty ;
    rdfs:label "query parameters"@en ;
    rdfs:comment "The parameters found in the query string part of a URL."@en ;
    rdfs:domain :URI ;
    rdfs:range :QueryParam .

## -------- ##
## Content. ##
## -------- ##

cnt:Content a owl:Class ;
    rdfs:label "Content"@en ;
    rdfs:comment
    "Representation of a content which can associated to various formats."@en .

sd:Graph a rdfs:Class ;
    rdfs:label "Graph"@en ;
    rdfs:comment
    "An instance of sd:Graph represents the description of an RDF graph."@en .

cnt:about a owl:ObjectProperty ;
    rdfs:label "graph"@en ;
    rdfs:comment "A property associating an RDF content with its RDF graph"@en ;
    rdfs:domain cnt:ContentAsRDF ;
    rdfs:range sd:Graph .

cnt:ContentAsRDF a owl:Class ;
    rdfs:label "RDF Content"@en ;
    rdfs:comment "RDF Content embedded in the body of an HTTP message"@en ;
    rdfs:subClassOf cnt:Content ;
    owl:equivalentClass [
        a owl:Restriction ;
        owl:onProperty cnt:about ;
        owl:cardinality 1 ] .

:body a owl:ObjectProperty, owl:FunctionalProperty ;
    rdfs:label "body"@en ;
    rdfs:comment "The entity body of an HTTP message."@en ;
    rdfs:domain :Message ;
    rdfs:range cnt:Content .

## ------------ ##
## Status codes ##
## ------------ ##

:StatusCode a owl:Class ;
    rdfs:label "Status code"@en ;
    owl:equivalentClass [
        a owl:Restriction ;
        owl:onProperty :statusCodeNumber ;
        owl:someValuesFrom :threeDigit ;
        ] ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231#section-6> ;
    rdfs:comment "The status code of an HTTP response."@en .

:sc a owl:ObjectProperty, owl:FunctionalProperty ;
    rdfs:label "status code"@en ;
    rdfs:domain :Response ;
    rdfs:range :StatusCode ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231#section-6> ;
    rdfs:comment "The status code of an HTTP response."@en .

:threeDigit a rdfs:Datatype ;
    rdfs:label "3-digit integer"@en ;
    rdfs:comment "A positive integer consisting in three digit" ;
    owl:equivalentClass [
        a rdfs:Datatype ;
        owl:onDatatype xsd:nonNegativeInteger ;
        owl:withRestrictions ([ xsd:maxInclusive 999])] .

:statusCodeNumber a owl:DatatypeProperty, owl:FunctionalProperty ;
    rdfs:label "status code number"@en ;
    rdfs:domain :StatusCode ;
    rdfs:range :threeDigit ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231#section-6> ;
    rdfs:comment "The status code number."@en .

sc:Informational a owl:Class ;
    owl:equivalentClass [ owl:intersectionOf (:StatusCode [
                a owl:Restriction ;
                owl:onProperty :statusCodeNumber ;
                owl:someValuesFrom [
                    a rdfs:Datatype ;
                    owl:onDatatype xsd:integer ;
                    owl:withRestrictions ([ xsd:minInclusive 100] [ xsd:maxInclusive 199])]])
        ] ;
    rdfs:label "Informational"@en ;
    rdfs:comment "A status code starting with 1, denoting Status an informational response"@en .

sc:Successful a owl:Class ;
    owl:equivalentClass [ owl:intersectionOf (:StatusCode [
                a owl:Restriction ;
                owl:onProperty :statusCodeNumber ;
                owl:someValuesFrom [
                    a rdfs:Datatype ;
                    owl:onDatatype xsd:integer ;
                    owl:withRestrictions ([ xsd:minInclusive 200] [ xsd:maxInclusive 299])]])
        ] ;
    rdfs:label "Successful"@en ;
    rdfs:comment "A status code starting with 2, denoting a successful interaction"@en .

sc:Redirection a owl:Class ;
    owl:equivalentClass [ owl:intersectionOf (:StatusCode [
                a owl:Restriction ;
                owl:onProperty :statusCodeNumber ;
                owl:someValuesFrom [
                    a rdfs:Datatype ;
                    owl:onDatatype xsd:integer ;
                    owl:withRestrictions ([ xsd:minInclusive 300] [ xsd:maxInclusive 399])]])
        ] ;
    rdfs:label "Redirection"@en ;
    rdfs:comment "A status code starting with 3"@en .

sc:ClientError a owl:Class ;
    owl:equivalentClass [ owl:intersectionOf (:StatusCode [
                a owl:Restriction ;
                owl:onProperty :statusCodeNumber ;
                owl:someValuesFrom [
                    a rdfs:Datatype ;
                    owl:onDatatype xsd:integer ;
                    owl:withRestrictions ([ xsd:minInclusive 400] [ xsd:maxInclusive 499])]])
        ] ;
    rdfs:label "Client Error"@en ;
    rdfs:comment "A status code starting with 4"@en .

sc:ServerError a owl:Class ;
    owl:equivalentClass [ owl:intersectionOf (:StatusCode [
                a owl:Restriction ;
                owl:onProperty :statusCodeNumber ;
                owl:someValuesFrom [
                    a rdfs:Datatype ;
                    owl:onDatatype xsd:integer ;
                    owl:withRestrictions ([ xsd:minInclusive 500] [ xsd:maxInclusive 599])]])
        ] ;
    rdfs:label "Server Error"@en ;
    rdfs:comment "A status code starting with 5"@en .

## Entities

sc:Accepted a :StatusCode ;
    rdfs:label "Accepted"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 202 .

sc:BadGateway a :StatusCode ;
    rdfs:label "Bad Gateway"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 502 .

sc:BadRequest a :StatusCode ;
    rdfs:label "Bad Request"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 400 .

sc:Conflict a :StatusCode ;
    rdfs:label "Conflict"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 409 .

sc:Continue a :StatusCode ;
    rdfs:label "Continue"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 100 .

sc:Created a :StatusCode ;
    rdfs:label "Created"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 201 .

sc:ExpectationFailed a :StatusCode ;
    rdfs:label "Expectation Failed"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 417 .

sc:FailedDependency a :StatusCode ;
    rdfs:label "Failed Dependency"@en ;
    rdfs:isDefinedBy <http://www.ietf.org/rfc/rfc4918.txt> ;
    :statusCodeNumber 424 .

sc:Forbidden a :StatusCode ;
    rdfs:label "Forbidden"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 403 .

sc:Found a :StatusCode ;
    rdfs:label "Found"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 302 .

sc:GatewayTimeout a :StatusCode ;
    rdfs:label "Gateway Timeout"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 504 .

sc:Gone a :StatusCode ;
    rdfs:label "Gone"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 410 .

sc:HTTPVersionNotSupported a :StatusCode ;
    rdfs:label "HTTP Version Not Supported"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 505 .

sc:IMUsed a :StatusCode ;
    rdfs:label "IM Used"@en ;
    rdfs:isDefinedBy <http://www.ietf.org/rfc/rfc3229.txt> ;
    :statusCodeNumber 226 .

sc:InsufficientStorage a :StatusCode ;
    rdfs:label "Insufficient Storage"@en ;
    rdfs:isDefinedBy <http://www.ietf.org/rfc/rfc4918.txt> ;
    :statusCodeNumber 507 .

sc:InternalServerError a :StatusCode ;
    rdfs:label "Internal Server Error"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 500 .

sc:LengthRequired a :StatusCode ;
    rdfs:label "Length Required"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 411 .

sc:Locked a :StatusCode ;
    rdfs:label "Locked"@en ;
    rdfs:isDefinedBy <http://www.ietf.org/rfc/rfc4918.txt> ;
    :statusCodeNumber 423 .

sc:MethodNotAllowed a :StatusCode ;
    rdfs:label "Method Not Allowed"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 405 .

sc:MovedPermanently a :StatusCode ;
    rdfs:label "Moved Permanently"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 301 .

sc:MultiStatus a :StatusCode ;
    rdfs:label "Multi-Status"@en ;
    rdfs:isDefinedBy <http://www.ietf.org/rfc/rfc4918.txt> ;
    :statusCodeNumber 207 .

sc:MultipleChoices a :StatusCode ;
    rdfs:label "Multiple Choices"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 300 .

sc:NoContent a :StatusCode ;
    rdfs:label "No Content"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 204 .

sc:NonAuthoritativeInformation a :StatusCode ;
    rdfs:label "Non-Authoritative Information"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 203 .

sc:NotAcceptable a :StatusCode ;
    rdfs:label "Not Acceptable"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 406 .

sc:NotExtended a :StatusCode ;
    rdfs:label "Not Extended"@en ;
    rdfs:isDefinedBy <http://www.ietf.org/rfc/rfc2774.txt> ;
    :statusCodeNumber 510 .

sc:NotFound a :StatusCode ;
    rdfs:label "Not Found"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 404 .

sc:NotImplemented a :StatusCode ;
    rdfs:label "Not Implemented"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 501 .

sc:NotModified a :StatusCode ;
    rdfs:label "Not Modified"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 304 .

sc:OK a :StatusCode ;
    rdfs:label "OK"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 200 .

sc:PartialContent a :StatusCode ;
    rdfs:label "Partial Content"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 206 .

sc:PaymentRequired a :StatusCode ;
    rdfs:label "Payment Required"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 402 .

sc:PreconditionFailed a :StatusCode ;
    rdfs:label "Precondition Failed"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 412 .

sc:Processing a :StatusCode ;
    rdfs:label "Processing"@en ;
    rdfs:isDefinedBy <http://www.ietf.org/rfc/rfc2518.txt> ;
    :statusCodeNumber 102 .

sc:ProxyAuthenticationRequired a :StatusCode ;
    rdfs:label "Proxy Authentication Required"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 407 .

sc:RequestEntityTooLarge a :StatusCode ;
    rdfs:label "Request Entity Too Large"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 413 .

sc:RequestTimeout a :StatusCode ;
    rdfs:label "Request Timeout"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 408 .

sc:RequestURITooLong a :StatusCode ;
    rdfs:label "Request-URI Too Long"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 414 .

sc:RequestedRangeNotSatisfiable a :StatusCode ;
    rdfs:label "Requested Range Not Satisfiable"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 416 .

sc:Reserved a :StatusCode ;
    rdfs:label "(Reserved)"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 306 .

sc:ResetContent a :StatusCode ;
    rdfs:label "Reset Content"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 205 .

sc:SeeOther a :StatusCode ;
    rdfs:label "See Other"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 303 .

sc:ServiceUnavailable a :StatusCode ;
    rdfs:label "Service Unavailable"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 503 .

sc:SwitchingProtocols a :StatusCode ;
    rdfs:label "Switching Protocols"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 101 .

sc:TemporaryRedirect a :StatusCode ;
    rdfs:label "Temporary Redirect"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 307 .

sc:Unauthorized a :StatusCode ;
    rdfs:label "Unauthorized"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 401 .

sc:UnprocessableEntity a :StatusCode ;
    rdfs:label "Unprocessable Entity"@en ;
    rdfs:isDefinedBy <http://www.ietf.org/rfc/rfc4918.txt> ;
    :statusCodeNumber 422 .

sc:UnsupportedMediaType a :StatusCode ;
    rdfs:label "Unsupported Media Type"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 415 .

sc:UpgradeRequired a :StatusCode ;
    rdfs:label "Upgrade Required"@en ;
    rdfs:isDefinedBy <http://www.ietf.org/rfc/rfc2817.txt> ;
    :statusCodeNumber 426 .

sc:UseProxy a :StatusCode ;
    rdfs:label "Use Proxy"@en ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> ;
    :statusCodeNumber 305 .

sc:VariantAlsoNegotiates a :StatusCode ;
    rdfs:label "Variant Also Negotiates (Experimental)"@en ;
    rdfs:isDefinedBy <http://www.ietf.org/rfc/rfc2295.txt> ;
    :statusCodeNumber 506 .

## ----- ##
## Misc. ##
## ----- ##

:httpVersion a owl:DatatypeProperty ;
    rdfs:label "http version"@en ;
    rdfs:comment "The HTTP version of an HTTP message."@en ;
    rdfs:domain :Message ;
    rdfs:range rdfs:Literal ;
    rdfs:isDefinedBy <http://tools.ietf.org/rfc/rfc7231> .
)ttl";

}  // namespace httpld
