#pragma once

// Reading concrete HTTP/1.1 traffic: raw request/response messages, the
// `---`-separated transcript format, and HAR 1.2 archives.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "httpld/error.hpp"
#include "httpld/http_model.hpp"
#include "httpld/turtle.hpp"
#include "httpld/uri.hpp"

namespace httpld {

namespace detail {

struct MessageParts {
  std::string_view start_line;
  Headers headers;
  std::string_view rest;  // everything after the blank line
};

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

inline MessageParts split_message(std::string_view raw) {
  std::size_t crlf = raw.find("\r\n\r\n");
  std::size_t lf = raw.find("\n\n");
  std::string_view head;
  std::string_view rest;
  if (crlf == std::string_view::npos && lf == std::string_view::npos) {
    head = raw;
  } else if (lf == std::string_view::npos || (crlf != std::string_view::npos && crlf < lf)) {
    head = raw.substr(0, crlf);
    rest = raw.substr(crlf + 4);
  } else {
    head = raw.substr(0, lf);
    rest = raw.substr(lf + 2);
  }

  MessageParts parts;
  parts.rest = rest;
  bool first = true;
  std::size_t start = 0;
  while (start <= head.size()) {
    std::size_t nl = head.find('\n', start);
    if (nl == std::string_view::npos) nl = head.size();
    std::string_view line = strip_cr(head.substr(start, nl - start));
    start = nl + 1;
    if (first) {
      parts.start_line = line;
      first = false;
      continue;
    }
    if (line.empty()) continue;
    if (line.front() == ' ' || line.front() == '\t')
      throw ParseError("obsolete header line folding is not supported");
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("header line without ':': " + std::string(line));
    std::string_view name = line.substr(0, colon);
    if (!is_token(name)) throw ParseError("invalid header name: '" + std::string(name) + "'");
    parts.headers.emplace_back(std::string(name), std::string(trim(line.substr(colon + 1))));
  }
  if (parts.start_line.empty()) throw ParseError("missing start line");
  return parts;
}

inline std::optional<std::string> http_version_of(std::string_view token) {
  if (token.size() < 5 || !iequals(token.substr(0, 5), "HTTP/")) return std::nullopt;
  return std::string(token.substr(5));
}

}  // namespace detail

/// Builds a body, parsing it into a graph when the media type is an RDF
/// syntax. Unparseable RDF is kept as opaque octets.
inline Body make_body(std::string octets, std::optional<std::string> media_type) {
  Body b{std::move(media_type), std::move(octets), std::nullopt};
  if (b.media_type && is_rdf_media_type(*b.media_type)) {
    try {
      auto essence = detail::trim(std::string_view(*b.media_type).substr(0, b.media_type->find(';')));
      if (detail::iequals(essence, "text/turtle")) {
        b.rdf = parse_turtle(b.octets);
      } else {
        Dataset ds = parse_trig(b.octets);
        Graph merged = ds.default_graph();
        for (const auto& [_, g] : ds.named_graphs()) merged.merge(g);
        b.rdf = std::move(merged);
      }
    } catch (const Error&) {
      b.rdf.reset();
    }
  }
  return b;
}

namespace detail {

inline std::optional<Body> read_body(const Headers& headers, std::string_view rest) {
  if (auto te = header_value(headers, "Transfer-Encoding")) {
    std::string lowered;
    for (char c : *te) lowered += ascii_lower(c);
    if (lowered.find("chunked") != std::string::npos)
      throw ParseError("chunked transfer-coding is not supported");
  }
  std::string_view octets = rest;
  if (auto cl = header_value(headers, "Content-Length")) {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(cl->data(), cl->data() + cl->size(), n);
    if (ec != std::errc() || ptr != cl->data() + cl->size()) throw ParseError("invalid Content-Length");
    if (n > rest.size()) throw ParseError("body is shorter than Content-Length");
    octets = rest.substr(0, n);
  }
  if (octets.empty()) return std::nullopt;
  return make_body(std::string(octets), header_value(headers, "Content-Type"));
}

inline bool looks_like_status_line(std::string_view line) {
  auto tokens = split_ws(line);
  if (tokens.empty()) return false;
  if (http_version_of(tokens.front())) return true;
  return tokens.size() >= 2 && http_version_of(tokens.back()) &&
         std::all_of(tokens.front().begin(), tokens.front().end(), is_ascii_digit);
}

}  // namespace detail

/// Parses "METHOD target HTTP/x.y" + headers + optional body. CRLF or LF line
/// endings. The effective URI uses the Host header for origin-form targets.
inline Request parse_http_request(std::string_view raw, std::string_view scheme = "http") {
  auto parts = detail::split_message(raw);
  auto tokens = detail::split_ws(parts.start_line);
  if (tokens.size() != 3) throw ParseError("request-line must have 3 parts: '" + std::string(parts.start_line) + "'");
  auto version = detail::http_version_of(tokens[2]);
  if (!version) throw ParseError("request-line does not end with an HTTP version");
  if (!is_token(tokens[0])) throw ParseError("invalid method token");
  UriParts uri = effective_request_uri(tokens[1], header_value(parts.headers, "Host"), scheme);
  auto body = detail::read_body(parts.headers, parts.rest);
  return Request{Method(std::string(tokens[0])), std::move(uri), std::move(parts.headers), std::move(body),
                 std::move(version)};
}

/// Parses a response. Accepts both "HTTP/1.1 201 Created" and the
/// version-last rendering "201 Created HTTP/1.1".
inline Response parse_http_response(std::string_view raw) {
  auto parts = detail::split_message(raw);
  auto tokens = detail::split_ws(parts.start_line);
  if (tokens.size() < 2) throw ParseError("status-line is too short: '" + std::string(parts.start_line) + "'");

  std::optional<std::string> version;
  std::string_view code;
  std::string reason;
  auto join = [](auto first, auto last) {
    std::string out;
    for (auto it = first; it != last; ++it) {
      if (!out.empty()) out += ' ';
      out.append(*it);
    }
    return out;
  };
  if ((version = detail::http_version_of(tokens.front()))) {
    code = tokens[1];
    reason = join(tokens.begin() + 2, tokens.end());
  } else if ((version = detail::http_version_of(tokens.back()))) {
    code = tokens.front();
    reason = join(tokens.begin() + 1, tokens.end() - 1);
  } else {
    throw ParseError("status-line has no HTTP version");
  }

  if (!std::all_of(code.begin(), code.end(), detail::is_ascii_digit))
    throw ParseError("non-numeric status code: '" + std::string(code) + "'");
  if (code.size() > 3) throw ParseError("status code has more than 3 digits: '" + std::string(code) + "'");
  if (code.size() < 3) throw ParseError("status code must be 3 digits: '" + std::string(code) + "'");
  int value = (code[0] - '0') * 100 + (code[1] - '0') * 10 + (code[2] - '0');

  auto body = detail::read_body(parts.headers, parts.rest);
  return Response(value, std::move(parts.headers), std::move(body), std::move(version), std::move(reason));
}

/// Wire form of a request (RFC order). Origin-form target when the Host
/// header reproduces the URI, absolute-form otherwise.
inline std::string to_wire(const Request& r) {
  auto host = header_value(r.headers, "Host");
  bool origin_form = host && *host == r.uri.authority && r.uri.scheme == "http" && !r.uri.path.empty() &&
                     r.uri.path.front() == '/' && !r.uri.fragment;
  std::string target = origin_form ? r.uri.path + (r.uri.query ? "?" + *r.uri.query : "") : recompose(r.uri);
  std::string out = r.method.name() + " " + target + " HTTP/" + r.http_version.value_or("1.1") + "\r\n";
  for (const auto& h : r.headers) out += h.name() + ": " + h.value() + "\r\n";
  out += "\r\n";
  if (r.body) out += r.body->octets;
  return out;
}

inline std::string to_wire(const Response& r) {
  char code[4];
  std::snprintf(code, sizeof code, "%03d", r.status_code());
  std::string reason = r.reason();
  if (reason.empty()) reason = standard_status_name(r.status_code()).value_or("");
  std::string out = "HTTP/" + r.http_version().value_or("1.1") + " " + code;
  if (!reason.empty()) out += " " + reason;
  out += "\r\n";
  for (const auto& h : r.headers()) out += h.name() + ": " + h.value() + "\r\n";
  out += "\r\n";
  if (r.body()) out += r.body()->octets;
  return out;
}

namespace detail {

inline std::vector<std::string_view> transcript_blocks(std::string_view text) {
  std::vector<std::string_view> blocks;
  std::vector<std::string_view> lines;  // with terminators
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    std::size_t end = nl == std::string_view::npos ? text.size() : nl + 1;
    lines.push_back(text.substr(start, end - start));
    start = end;
  }
  auto content = [](std::string_view line) {
    if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
    return strip_cr(line);
  };
  auto flush = [&](std::size_t first, std::size_t last) {  // [first, last)
    while (first < last && content(lines[first]).empty()) ++first;
    while (last > first && content(lines[last - 1]).empty()) --last;
    if (first == last) return;
    const char* begin = lines[first].data();
    std::string_view tail = content(lines[last - 1]);
    const char* end = tail.data() + tail.size();
    blocks.emplace_back(begin, static_cast<std::size_t>(end - begin));
  };
  std::size_t block_start = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (content(lines[i]) == "---") {
      flush(block_start, i);
      block_start = i + 1;
    }
  }
  flush(block_start, lines.size());
  return blocks;
}

}  // namespace detail

/// Reads the transcript format: raw HTTP/1.1 messages separated by lines
/// containing exactly `---`. Each request opens an interaction; 1xx
/// responses are interim; the first other response closes the interaction.
inline Conversation load_transcript(std::string_view text) {
  Conversation conv;
  bool open = false;
  std::size_t index = 0;
  for (auto block : detail::transcript_blocks(text)) {
    ++index;
    std::string_view first_line = block.substr(0, block.find('\n'));
    try {
      if (detail::looks_like_status_line(detail::strip_cr(first_line))) {
        if (conv.interactions.empty()) throw ParseError("response before any request");
        if (!open) throw ParseError("second final response for one request");
        Response r = parse_http_response(block);
        bool interim = is_interim(r);
        conv.interactions.back().add_response(std::move(r));
        if (!interim) open = false;
      } else {
        conv.interactions.emplace_back(parse_http_request(block));
        open = true;
      }
    } catch (const ParseError& e) {
      throw ParseError("transcript message " + std::to_string(index) + ": " + e.what());
    } catch (const Error& e) {
      throw ParseError("transcript message " + std::to_string(index) + ": " + e.what());
    }
  }
  return conv;
}

inline std::string base64_decode(std::string_view in) {
  auto value = [](char c) -> int {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+' || c == '-') return 62;
    if (c == '/' || c == '_') return 63;
    return -1;
  };
  std::string out;
  unsigned buffer = 0;
  int bits = 0;
  for (char c : in) {
    if (c == '=' || c == '\r' || c == '\n' || c == ' ') continue;
    int v = value(c);
    if (v < 0) throw ParseError("invalid base64 content");
    buffer = (buffer << 6) | static_cast<unsigned>(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out += static_cast<char>((buffer >> bits) & 0xFF);
    }
  }
  return out;
}

namespace detail {

inline Headers har_headers(const nlohmann::json& list) {
  Headers out;
  if (!list.is_array()) return out;
  for (const auto& h : list) {
    std::string name = h.value("name", "");
    if (name.empty() || name.front() == ':') continue;  // HTTP/2 pseudo-headers
    out.emplace_back(std::move(name), h.value("value", ""));
  }
  return out;
}

inline std::optional<std::string> har_version(const nlohmann::json& msg) {
  auto it = msg.find("httpVersion");
  if (it == msg.end() || !it->is_string()) return std::nullopt;
  std::string v = it->get<std::string>();
  if (auto stripped = http_version_of(v)) return stripped;
  return v.empty() ? std::nullopt : std::optional<std::string>(v);
}

}  // namespace detail

/// Reads `log.entries[*]` of a HAR 1.2 archive; one interaction per entry,
/// ordered by startedDateTime then file order.
inline Conversation load_har(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("not a HAR document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("log") || !doc["log"].is_object() || !doc["log"].contains("entries") ||
      !doc["log"]["entries"].is_array())
    throw ParseError("not a HAR document: missing log.entries");

  std::vector<const json*> entries;
  for (const auto& e : doc["log"]["entries"]) entries.push_back(&e);
  std::stable_sort(entries.begin(), entries.end(), [](const json* a, const json* b) {
    return a->value("startedDateTime", "") < b->value("startedDateTime", "");
  });

  Conversation conv;
  std::size_t index = 0;
  for (const json* entry : entries) {
    ++index;
    auto where = "HAR entry " + std::to_string(index) + ": ";
    if (!entry->is_object() || !entry->contains("request") || !entry->contains("response"))
      throw ParseError(where + "missing request or response");
    const json& req = (*entry)["request"];
    const json& resp = (*entry)["response"];
    if (!req.contains("method") || !req["method"].is_string() || !req.contains("url") || !req["url"].is_string())
      throw ParseError(where + "missing method or url");
    if (!resp.contains("status") || !resp["status"].is_number_integer())
      throw ParseError(where + "missing status");

    try {
      Headers req_headers = detail::har_headers(req.value("headers", json::array()));
      std::optional<Body> req_body;
      if (req.contains("postData") && req["postData"].is_object()) {
        const json& pd = req["postData"];
        std::string octets = pd.value("text", "");
        if (!octets.empty()) {
          auto mt = header_value(req_headers, "Content-Type");
          if (!mt && pd.contains("mimeType")) mt = pd.value("mimeType", "");
          req_body = make_body(std::move(octets), mt);
        }
      }
      Request request{Method(req["method"].get<std::string>()), parse_uri(req["url"].get<std::string>()),
                      std::move(req_headers), std::move(req_body), detail::har_version(req)};

      Headers resp_headers = detail::har_headers(resp.value("headers", json::array()));
      std::optional<Body> resp_body;
      if (resp.contains("content") && resp["content"].is_object()) {
        const json& content = resp["content"];
        std::string octets = content.value("text", "");
        if (content.value("encoding", "") == "base64") octets = base64_decode(octets);
        if (!octets.empty()) {
          auto mt = header_value(resp_headers, "Content-Type");
          if (!mt && content.contains("mimeType")) mt = content.value("mimeType", "");
          resp_body = make_body(std::move(octets), mt);
        }
      }
      int status = resp["status"].get<int>();
      Response response(status, std::move(resp_headers), std::move(resp_body), detail::har_version(resp),
                        resp.value("statusText", ""));

      Interaction interaction(std::move(request));
      interaction.add_response(std::move(response));
      conv.interactions.push_back(std::move(interaction));
    } catch (const json::exception& e) {
      throw ParseError(where + e.what());
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    } catch (const Error& e) {
      throw ParseError(where + e.what());
    }
  }
  return conv;
}

}  // namespace httpld
