#pragma once

// Blank-node aware isomorphism for graphs and datasets: colour refinement
// over blank-node neighbourhoods, then backtracking within colour classes.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "httpld/rdf.hpp"

namespace httpld {

namespace detail {

struct Quad {
  Term s, p, o;
  std::optional<Term> g;

  auto operator<=>(const Quad&) const = default;
  bool operator==(const Quad&) const = default;

  template <typename F>
  void for_each_term(F&& f) const {
    f(s);
    f(p);
    f(o);
    if (g) f(*g);
  }

  bool has_blank() const {
    return s.is_blank() || o.is_blank() || (g && g->is_blank());
  }
};

inline std::vector<Quad> to_quads(const Dataset& ds) {
  std::vector<Quad> out;
  for (const auto& t : ds.default_graph()) out.push_back({t.subject(), t.predicate(), t.object(), {}});
  for (const auto& [name, g] : ds.named_graphs())
    for (const auto& t : g) out.push_back({t.subject(), t.predicate(), t.object(), name});
  return out;
}

class QuadMatcher {
 public:
  QuadMatcher(std::vector<Quad> a, std::vector<Quad> b) : a_(std::move(a)), b_(std::move(b)) {}

  bool run() {
    if (a_.size() != b_.size()) return false;

    std::set<Quad> ground_a, ground_b;
    for (const auto& q : a_) if (!q.has_blank()) ground_a.insert(q);
    for (const auto& q : b_) if (!q.has_blank()) ground_b.insert(q);
    if (ground_a != ground_b) return false;

    collect_blanks(a_, blanks_a_, occurrences_a_);
    collect_blanks(b_, blanks_b_, occurrences_b_);
    if (blanks_a_.size() != blanks_b_.size()) return false;
    if (blanks_a_.empty()) return true;

    refine_colours();
    if (histogram(colour_a_) != histogram(colour_b_)) return false;

    b_set_.insert(b_.begin(), b_.end());

    std::map<int, std::vector<Term>> class_b;
    for (const auto& [node, c] : colour_b_) class_b[c].push_back(node);
    std::vector<Term> order(blanks_a_.begin(), blanks_a_.end());
    std::stable_sort(order.begin(), order.end(), [&](const Term& x, const Term& y) {
      return class_b[colour_a_[x]].size() < class_b[colour_a_[y]].size();
    });
    return assign(order, 0, class_b);
  }

 private:
  static void collect_blanks(const std::vector<Quad>& quads, std::set<Term>& blanks,
                             std::map<Term, std::vector<std::size_t>>& occ) {
    for (std::size_t i = 0; i < quads.size(); ++i) {
      std::set<Term> seen;
      quads[i].for_each_term([&](const Term& t) {
        if (t.is_blank() && seen.insert(t).second) {
          blanks.insert(t);
          occ[t].push_back(i);
        }
      });
    }
  }

  static std::map<int, std::size_t> histogram(const std::map<Term, int>& colours) {
    std::map<int, std::size_t> h;
    for (const auto& [_, c] : colours) ++h[c];
    return h;
  }

  static std::string encode(const Term& t, const Term& self, const std::map<Term, int>& colours) {
    if (t.is_blank()) return t == self ? "@" : "#" + std::to_string(colours.at(t));
    return std::to_string(static_cast<int>(t.kind())) + t.value() + '\x1f' + t.datatype() +
           '\x1f' + t.language();
  }

  static std::string signature(const Quad& q, const Term& self, const std::map<Term, int>& colours) {
    std::string sig;
    q.for_each_term([&](const Term& t) {
      sig += encode(t, self, colours);
      sig += '\x1e';
    });
    if (!q.g) sig += "<default>";
    return sig;
  }

  void refine_round(const std::vector<Quad>& quads, const std::map<Term, std::vector<std::size_t>>& occ,
                    const std::map<Term, int>& prev, std::map<Term, int>& next,
                    std::map<std::string, int>& dict) {
    for (const auto& [node, indexes] : occ) {
      std::vector<std::string> parts;
      parts.reserve(indexes.size());
      for (std::size_t i : indexes) parts.push_back(signature(quads[i], node, prev));
      std::sort(parts.begin(), parts.end());
      std::string key = std::to_string(prev.at(node)) + '\x1d';
      for (const auto& p : parts) key += p + '\x1d';
      auto [it, inserted] = dict.emplace(std::move(key), static_cast<int>(dict.size()));
      next[node] = it->second;
    }
  }

  void refine_colours() {
    for (const auto& b : blanks_a_) colour_a_[b] = 0;
    for (const auto& b : blanks_b_) colour_b_[b] = 0;
    std::size_t distinct = 1;
    for (std::size_t round = 0; round <= blanks_a_.size(); ++round) {
      std::map<std::string, int> dict;
      std::map<Term, int> next_a, next_b;
      refine_round(a_, occurrences_a_, colour_a_, next_a, dict);
      refine_round(b_, occurrences_b_, colour_b_, next_b, dict);
      colour_a_ = std::move(next_a);
      colour_b_ = std::move(next_b);
      if (dict.size() == distinct) break;
      distinct = dict.size();
    }
  }

  Term image(const Term& t) const {
    if (!t.is_blank()) return t;
    return mapping_.at(t);
  }

  bool consistent(const Term& node) const {
    for (std::size_t i : occurrences_a_.at(node)) {
      const Quad& q = a_[i];
      bool complete = true;
      q.for_each_term([&](const Term& t) {
        if (t.is_blank() && !mapping_.count(t)) complete = false;
      });
      if (!complete) continue;
      Quad mapped{image(q.s), q.p, image(q.o), q.g ? std::optional<Term>(image(*q.g)) : std::nullopt};
      if (!b_set_.count(mapped)) return false;
    }
    return true;
  }

  bool assign(const std::vector<Term>& order, std::size_t k,
              const std::map<int, std::vector<Term>>& class_b) {
    if (k == order.size()) return true;
    const Term& node = order[k];
    for (const auto& candidate : class_b.at(colour_a_.at(node))) {
      if (used_.count(candidate)) continue;
      mapping_.emplace(node, candidate);
      used_.insert(candidate);
      if (consistent(node) && assign(order, k + 1, class_b)) return true;
      mapping_.erase(node);
      used_.erase(candidate);
    }
    return false;
  }

  std::vector<Quad> a_, b_;
  std::set<Quad> b_set_;
  std::set<Term> blanks_a_, blanks_b_;
  std::map<Term, std::vector<std::size_t>> occurrences_a_, occurrences_b_;
  std::map<Term, int> colour_a_, colour_b_;
  std::map<Term, Term> mapping_;
  std::set<Term> used_;
};

}  // namespace detail

/// True iff a bijection between blank nodes maps `a` exactly onto `b`.
inline bool isomorphic(const Dataset& a, const Dataset& b) {
  return detail::QuadMatcher(detail::to_quads(a), detail::to_quads(b)).run();
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  Dataset da, db;
  da.default_graph() = a;
  db.default_graph() = b;
  return isomorphic(da, db);
}

}  // namespace httpld
