#pragma once

// URI decomposition (RFC 3986 generic syntax, "scheme://" form),
// application/x-www-form-urlencoded query decoding, and effective request
// URI computation from request targets (RFC 7230 effective request URI).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "httpld/error.hpp"
#include "httpld/rdf.hpp"

namespace httpld {

struct QueryParam {
  std::string name;
  std::string value;

  bool operator==(const QueryParam&) const = default;
};

struct UriParts {
  std::string scheme;
  std::string authority;
  std::string path;
  std::optional<std::string> query;     // raw, undecoded
  std::optional<std::string> fragment;
  std::vector<QueryParam> params;       // decoded from query, wire order

  bool operator==(const UriParts&) const = default;
};

namespace detail {
inline int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// `base` is the offset of `text` inside the full query, for error reporting.
inline std::string form_decode(std::string_view text, std::size_t base) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '+') {
      out += ' ';
    } else if (c == '%') {
      if (i + 2 >= text.size())
        throw DecodeError("truncated percent escape", base + i);
      int hi = hex_value(text[i + 1]);
      int lo = hex_value(text[i + 2]);
      if (hi < 0 || lo < 0) throw DecodeError("malformed percent escape", base + i);
      out += static_cast<char>(hi * 16 + lo);
      i += 2;
    } else {
      out += c;
    }
  }
  return out;
}
}  // namespace detail

/// Splits on '&' then on the first '='. '+' becomes a space and %XX escapes
/// are decoded in both names and values. Empty segments are skipped.
inline std::vector<QueryParam> decode_query_params(std::string_view query) {
  std::vector<QueryParam> out;
  std::size_t start = 0;
  while (start <= query.size()) {
    std::size_t amp = query.find('&', start);
    if (amp == std::string_view::npos) amp = query.size();
    std::string_view segment = query.substr(start, amp - start);
    if (!segment.empty()) {
      std::size_t eq = segment.find('=');
      if (eq == std::string_view::npos) {
        out.push_back({detail::form_decode(segment, start), {}});
      } else {
        out.push_back({detail::form_decode(segment.substr(0, eq), start),
                       detail::form_decode(segment.substr(eq + 1), start + eq + 1)});
      }
    }
    start = amp + 1;
  }
  return out;
}

/// Parses an absolute URI of the form scheme "://" authority path ["?" query]
/// ["#" fragment]. The components partition the input exactly.
inline UriParts parse_uri(std::string_view text) {
  if (text.empty()) throw ParseError("empty URI");
  for (unsigned char c : text) {
    if (c <= 0x20 || c == 0x7F) throw ParseError("URI contains whitespace or control characters");
  }
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) throw ParseError("URI has no scheme");
  std::string_view scheme = text.substr(0, colon);
  if (!detail::is_ascii_alpha(scheme.front())) throw ParseError("URI scheme must start with a letter");
  for (char c : scheme) {
    if (!(detail::is_ascii_alnum(c) || c == '+' || c == '-' || c == '.'))
      throw ParseError("illegal character in URI scheme");
  }
  if (text.substr(colon + 1, 2) != "//") throw ParseError("expected '//' after URI scheme");

  UriParts u;
  u.scheme = std::string(scheme);
  std::string_view rest = text.substr(colon + 3);

  std::size_t auth_end = rest.find_first_of("/?#");
  if (auth_end == std::string_view::npos) auth_end = rest.size();
  u.authority = std::string(rest.substr(0, auth_end));
  rest.remove_prefix(auth_end);

  std::size_t path_end = rest.find_first_of("?#");
  if (path_end == std::string_view::npos) path_end = rest.size();
  u.path = std::string(rest.substr(0, path_end));
  rest.remove_prefix(path_end);

  if (!rest.empty() && rest.front() == '?') {
    std::size_t q_end = rest.find('#');
    if (q_end == std::string_view::npos) q_end = rest.size();
    u.query = std::string(rest.substr(1, q_end - 1));
    rest.remove_prefix(q_end);
  }
  if (!rest.empty() && rest.front() == '#') u.fragment = std::string(rest.substr(1));

  if (u.query) u.params = decode_query_params(*u.query);
  return u;
}

inline std::string recompose(const UriParts& u) {
  std::string out = u.scheme + "://" + u.authority + u.path;
  if (u.query) out += "?" + *u.query;
  if (u.fragment) out += "#" + *u.fragment;
  return out;
}

/// Identifies the resource: the URI with both query and fragment removed.
inline std::string id_res(const UriParts& u) { return u.scheme + "://" + u.authority + u.path; }

/// Absolute URI for a request-target. Origin-form ("/path?q") needs the Host
/// header; absolute-form is parsed as is; authority-form and asterisk-form
/// are rejected.
inline UriParts effective_request_uri(std::string_view target, const std::optional<std::string>& host,
                                      std::string_view scheme) {
  if (scheme != "http" && scheme != "https") throw Error("scheme must be http or https");
  if (target.empty()) throw ParseError("empty request-target");
  if (target.front() == '/') {
    if (!host || host->empty()) throw ParseError("origin-form request-target requires a Host header");
    std::string absolute(scheme);
    absolute += "://";
    absolute += *host;
    absolute += target;
    return parse_uri(absolute);
  }
  if (target == "*") throw ParseError("asterisk-form request-target is not supported");
  if (target.find("://") != std::string_view::npos) return parse_uri(target);
  throw ParseError("authority-form request-target is not supported");
}

/// Percent-encodes every octet outside the RFC 3986 unreserved set.
inline std::string percent_encode(std::string_view text) {
  static constexpr char hex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(text.size() * 3);
  for (char c : text) {
    if (detail::is_ascii_alnum(c) || c == '-' || c == '.' || c == '_' || c == '~') {
      out += c;
    } else {
      auto b = static_cast<unsigned char>(c);
      out += '%';
      out += hex[b >> 4];
      out += hex[b & 0xF];
    }
  }
  return out;
}

}  // namespace httpld
