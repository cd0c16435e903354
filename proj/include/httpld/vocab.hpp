#pragma once

// IRIs of the HTTP interaction ontology plus the header extension terms
// (hds:content-type, hds:accept, hds:media-type and their header classes).

#include <array>
#include <set>
#include <string>
#include <string_view>

#include "httpld/rdf.hpp"
#include "httpld/turtle.hpp"

namespace httpld::vocab {

inline constexpr std::string_view http_ns = "http://w3id.org/http#";
inline constexpr std::string_view mthd_ns = "http://w3id.org/http/mthd#";
inline constexpr std::string_view sc_ns = "http://w3id.org/http/sc#";
inline constexpr std::string_view hds_ns = "http://w3id.org/http/headers#";
inline constexpr std::string_view cnt_ns = "http://w3id.org/http/content#";

inline Term http(std::string_view local) { return Term::iri(detail::cat(http_ns, local)); }
inline Term mthd(std::string_view local) { return Term::iri(detail::cat(mthd_ns, local)); }
inline Term sc(std::string_view local) { return Term::iri(detail::cat(sc_ns, local)); }
inline Term hds(std::string_view local) { return Term::iri(detail::cat(hds_ns, local)); }
inline Term cnt(std::string_view local) { return Term::iri(detail::cat(cnt_ns, local)); }

// classes
inline const Term Message = http("Message");
inline const Term Request = http("Request");
inline const Term Response = http("Response");
inline const Term InterimResponse = http("InterimResponse");
inline const Term FinalResponse = http("FinalResponse");
inline const Term Method = http("Method");
inline const Term URI = http("URI");
inline const Term Header = http("Header");
inline const Term QueryParam = http("QueryParam");
inline const Term StatusCode = http("StatusCode");
inline const Term Content = cnt("Content");
inline const Term ContentAsRDF = cnt("ContentAsRDF");
inline const Term SdGraph = Term::iri(detail::cat(ns::sd, "Graph"));
inline const Term LocationHeader = hds("LocationHeader");

// properties
inline const Term resp = http("resp");
inline const Term mthd_prop = http("mthd");
inline const Term methodName = http("methodName");
inline const Term uri = http("uri");
inline const Term scheme = http("scheme");
inline const Term authority = http("authority");
inline const Term path = http("path");
inline const Term query = http("query");
inline const Term fragment = http("fragment");
inline const Term idRes = http("idRes");
inline const Term queryParams = http("queryParams");
inline const Term paramName = http("paramName");
inline const Term paramValue = http("paramValue");
inline const Term hdr = http("hdr");
inline const Term hdrName = http("hdrName");
inline const Term hdrValue = http("hdrValue");
inline const Term link = http("link");
inline const Term isLocationHeader = hds("isLocationHeader");
inline const Term location = hds("location");
inline const Term body = http("body");
inline const Term about = cnt("about");
inline const Term sc_prop = http("sc");
inline const Term statusCodeNumber = http("statusCodeNumber");
inline const Term httpVersion = http("httpVersion");
inline const Term type = rdf_term("type");

// extension terms, minted after the Location pattern
inline const Term ContentTypeHeader = hds("ContentTypeHeader");
inline const Term content_type = hds("content-type");
inline const Term AcceptHeader = hds("AcceptHeader");
inline const Term accept = hds("accept");
inline const Term media_type = hds("media-type");

inline const std::set<Term>& extension_terms() {
  static const std::set<Term> terms{ContentTypeHeader, content_type, AcceptHeader, accept, media_type};
  return terms;
}

/// The prefix table emitted with every serialization.
inline PrefixMap standard_prefixes() {
  return {
      {"", std::string(http_ns)},       {"mthd", std::string(mthd_ns)}, {"sc", std::string(sc_ns)},
      {"hds", std::string(hds_ns)},     {"cnt", std::string(cnt_ns)},   {"rdf", std::string(ns::rdf)},
      {"rdfs", std::string(ns::rdfs)},  {"owl", std::string(ns::owl)},  {"xsd", std::string(ns::xsd)},
      {"sd", std::string(ns::sd)},
  };
}

}  // namespace httpld::vocab
