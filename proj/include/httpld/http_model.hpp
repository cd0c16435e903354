#pragma once

// Protocol-level model of HTTP/1.1 messages: methods, headers, bodies,
// requests, responses, status classes, interactions and conversations.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "httpld/error.hpp"
#include "httpld/rdf.hpp"
#include "httpld/uri.hpp"

namespace httpld {

namespace detail {
inline bool is_tchar(char c) {
  if (is_ascii_alnum(c)) return true;
  switch (c) {
    case '!': case '#': case '$': case '%': case '&': case '\'': case '*': case '+':
    case '-': case '.': case '^': case '_': case '`': case '|': case '~':
      return true;
    default:
      return false;
  }
}

inline char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

inline bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) { return ascii_lower(x) == ascii_lower(y); });
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}
}  // namespace detail

/// RFC 7230 token: one or more tchars.
inline bool is_token(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), detail::is_tchar);
}

inline constexpr std::array<std::string_view, 9> standard_methods = {
    "GET", "HEAD", "POST", "PUT", "DELETE", "CONNECT", "OPTIONS", "TRACE", "PATCH"};

class Method {
 public:
  explicit Method(std::string name) : name_(std::move(name)) {
    if (!is_token(name_)) throw Error("method must be a non-empty token: '" + name_ + "'");
  }

  const std::string& name() const noexcept { return name_; }

  /// One of the nine standard methods (method names are case-sensitive).
  bool is_standard() const {
    return std::find(standard_methods.begin(), standard_methods.end(), name_) != standard_methods.end();
  }

  bool operator==(const Method&) const = default;

 private:
  std::string name_;
};

/// Header names compare case-insensitively; the original spelling is kept.
class Header {
 public:
  Header(std::string name, std::string value) : name_(std::move(name)), value_(std::move(value)) {
    if (!is_token(name_)) throw Error("header name must be a non-empty token: '" + name_ + "'");
  }

  const std::string& name() const noexcept { return name_; }
  const std::string& value() const noexcept { return value_; }
  bool is(std::string_view name) const { return detail::iequals(name_, name); }

  bool operator==(const Header&) const = default;

 private:
  std::string name_;
  std::string value_;
};

using Headers = std::vector<Header>;

/// First header named `name` (case-insensitive).
inline std::optional<std::string> header_value(const Headers& headers, std::string_view name) {
  for (const auto& h : headers)
    if (h.is(name)) return h.value();
  return std::nullopt;
}

/// Media types whose bodies are read into an RDF graph.
inline bool is_rdf_media_type(std::string_view media_type) {
  auto essence = detail::trim(media_type.substr(0, media_type.find(';')));
  return detail::iequals(essence, "text/turtle") || detail::iequals(essence, "application/trig");
}

struct Body {
  std::optional<std::string> media_type;  // Content-Type value, parameters kept
  std::string octets;
  std::optional<Graph> rdf;  // only for RDF media types

  bool operator==(const Body&) const = default;
};

struct Request {
  Method method;
  UriParts uri;
  Headers headers;
  std::optional<Body> body;
  std::optional<std::string> http_version;  // e.g. "1.1"

  bool operator==(const Request&) const = default;
};

class Response {
 public:
  explicit Response(int status_code, Headers headers = {}, std::optional<Body> body = std::nullopt,
                    std::optional<std::string> http_version = std::nullopt, std::string reason = {})
      : status_code_(status_code),
        headers_(std::move(headers)),
        body_(std::move(body)),
        http_version_(std::move(http_version)),
        reason_(std::move(reason)) {
    if (status_code < 0 || status_code > 999) throw Error("status code must have at most 3 digits");
  }

  int status_code() const noexcept { return status_code_; }
  const Headers& headers() const noexcept { return headers_; }
  Headers& headers() noexcept { return headers_; }
  const std::optional<Body>& body() const noexcept { return body_; }
  std::optional<Body>& body() noexcept { return body_; }
  const std::optional<std::string>& http_version() const noexcept { return http_version_; }
  const std::string& reason() const noexcept { return reason_; }

  bool operator==(const Response&) const = default;

 private:
  int status_code_;
  Headers headers_;
  std::optional<Body> body_;
  std::optional<std::string> http_version_;
  std::string reason_;
};

enum class StatusClass { Informational, Successful, Redirection, ClientError, ServerError };

inline std::string_view to_string(StatusClass c) {
  switch (c) {
    case StatusClass::Informational: return "Informational";
    case StatusClass::Successful: return "Successful";
    case StatusClass::Redirection: return "Redirection";
    case StatusClass::ClientError: return "ClientError";
    case StatusClass::ServerError: return "ServerError";
  }
  return "";
}

/// Class of a 3-digit status code; none outside 100..599.
inline std::optional<StatusClass> status_class(int code) {
  if (code < 0 || code > 999) throw Error("status code out of range [0, 999]: " + std::to_string(code));
  switch (code / 100) {
    case 1: return StatusClass::Informational;
    case 2: return StatusClass::Successful;
    case 3: return StatusClass::Redirection;
    case 4: return StatusClass::ClientError;
    case 5: return StatusClass::ServerError;
    default: return std::nullopt;
  }
}

inline bool is_interim(int code) { return status_class(code) == StatusClass::Informational; }
inline bool is_interim(const Response& r) { return is_interim(r.status_code()); }

struct StandardStatus {
  int code;
  std::string_view name;
};

/// The status code individuals of the ontology, ordered by local name.
inline constexpr std::array<StandardStatus, 51> standard_statuses = {{
    {202, "Accepted"},
    {502, "BadGateway"},
    {400, "BadRequest"},
    {409, "Conflict"},
    {100, "Continue"},
    {201, "Created"},
    {417, "ExpectationFailed"},
    {424, "FailedDependency"},
    {403, "Forbidden"},
    {302, "Found"},
    {504, "GatewayTimeout"},
    {410, "Gone"},
    {505, "HTTPVersionNotSupported"},
    {226, "IMUsed"},
    {507, "InsufficientStorage"},
    {500, "InternalServerError"},
    {411, "LengthRequired"},
    {423, "Locked"},
    {405, "MethodNotAllowed"},
    {301, "MovedPermanently"},
    {207, "MultiStatus"},
    {300, "MultipleChoices"},
    {204, "NoContent"},
    {203, "NonAuthoritativeInformation"},
    {406, "NotAcceptable"},
    {510, "NotExtended"},
    {404, "NotFound"},
    {501, "NotImplemented"},
    {304, "NotModified"},
    {200, "OK"},
    {206, "PartialContent"},
    {402, "PaymentRequired"},
    {412, "PreconditionFailed"},
    {102, "Processing"},
    {407, "ProxyAuthenticationRequired"},
    {413, "RequestEntityTooLarge"},
    {408, "RequestTimeout"},
    {414, "RequestURITooLong"},
    {416, "RequestedRangeNotSatisfiable"},
    {306, "Reserved"},
    {205, "ResetContent"},
    {303, "SeeOther"},
    {503, "ServiceUnavailable"},
    {101, "SwitchingProtocols"},
    {307, "TemporaryRedirect"},
    {401, "Unauthorized"},
    {422, "UnprocessableEntity"},
    {415, "UnsupportedMediaType"},
    {426, "UpgradeRequired"},
    {305, "UseProxy"},
    {506, "VariantAlsoNegotiates"},
}};

inline std::optional<std::string> standard_status_name(int code) {
  for (const auto& s : standard_statuses)
    if (s.code == code) return std::string(s.name);
  return std::nullopt;
}

inline std::optional<int> standard_status_code(std::string_view name) {
  for (const auto& s : standard_statuses)
    if (s.name == name) return s.code;
  return std::nullopt;
}

/// A request, its interim (1xx) responses in order, and at most one final
/// response.
class Interaction {
 public:
  explicit Interaction(Request request) : request_(std::move(request)) {}

  /// Appends a response. Rejects a second final response and any response
  /// after the final one.
  void add_response(Response r) {
    if (final_) throw Error("interaction already has a final response");
    if (is_interim(r)) {
      interim_.push_back(std::move(r));
    } else {
      final_ = std::move(r);
    }
  }

  const Request& request() const noexcept { return request_; }
  Request& request() noexcept { return request_; }
  const std::vector<Response>& interim_responses() const noexcept { return interim_; }
  const std::optional<Response>& final_response() const noexcept { return final_; }
  std::optional<Response>& final_response() noexcept { return final_; }

  std::size_t response_count() const noexcept { return interim_.size() + (final_ ? 1 : 0); }

 private:
  Request request_;
  std::vector<Response> interim_;
  std::optional<Response> final_;
};

/// Interactions in the wire order of their requests.
struct Conversation {
  std::vector<Interaction> interactions;
};

}  // namespace httpld
