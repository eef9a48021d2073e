#pragma once

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tollgrid/network.hpp"

namespace tollgrid {

// Network description files are plain text with three sections:
//
//   nodes:
//     A B C
//   links:
//     1  A B  a=9 gamma=1 beta=1 m=3 mu=0.3333333333333333
//   od_pairs:
//     AB  A B  demand_h=7.5 demand_a=4.5
//
// '#' starts a comment.  Node ids may share the section header line.  A link
// takes exactly one of M= or mu=; with mu given, M = m/mu.

namespace detail {

inline std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

inline std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

inline double parse_num(const std::string& field, const std::string& text) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw Error("");
    return v;
  } catch (...) {
    throw Error("field " + field + ": not a number: '" + text + "'");
  }
}

struct KvList {
  std::vector<std::pair<std::string, std::string>> kv;

  std::optional<std::string> get(const std::string& key) const {
    for (const auto& [k, v] : kv)
      if (k == key) return v;
    return std::nullopt;
  }

  double num(const std::string& context, const std::string& key) const {
    auto v = get(key);
    if (!v) throw Error(context + ": missing field " + key);
    return parse_num(context + "." + key, *v);
  }
};

inline KvList parse_kv(const std::string& context, const std::vector<std::string>& toks,
                       std::size_t from) {
  KvList out;
  for (std::size_t i = from; i < toks.size(); ++i) {
    auto eq = toks[i].find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(context + ": expected key=value, got '" + toks[i] + "'");
    out.kv.emplace_back(toks[i].substr(0, eq), toks[i].substr(eq + 1));
  }
  return out;
}

}  // namespace detail

/// Parses a network description document.  Throws Error on malformed input
/// or on any Network invariant violation.
inline Network parse_network(const std::string& text) {
  using namespace detail;
  std::vector<std::string> nodes;
  std::vector<Link> links;
  std::vector<OdPair> ods;
  enum class Section { none, nodes, links, ods } section = Section::none;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto toks = tokens(strip_comment(raw));
    if (toks.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);

    if (toks[0] == "nodes:" || toks[0] == "links:" || toks[0] == "od_pairs:") {
      section = toks[0] == "nodes:" ? Section::nodes
                : toks[0] == "links:" ? Section::links
                                      : Section::ods;
      toks.erase(toks.begin());
      if (toks.empty()) continue;
      if (section != Section::nodes)
        throw Error(where + ": records must start on their own line");
    }

    switch (section) {
      case Section::none:
        throw Error(where + ": content before any section header");
      case Section::nodes:
        for (auto& t : toks) nodes.push_back(t);
        break;
      case Section::links: {
        if (toks.size() < 3) throw Error(where + ": link needs id, tail, head");
        Link l;
        l.id = toks[0];
        l.tail = toks[1];
        l.head = toks[2];
        auto kv = parse_kv("link " + l.id, toks, 3);
        l.a = kv.num("link " + l.id, "a");
        l.gamma = kv.num("link " + l.id, "gamma");
        double beta = kv.num("link " + l.id, "beta");
        if (beta != static_cast<int>(beta))
          throw Error("link " + l.id + ": field beta must be a positive integer");
        l.beta = static_cast<int>(beta);
        l.m = kv.num("link " + l.id, "m");
        const bool has_M = kv.get("M").has_value();
        const bool has_mu = kv.get("mu").has_value();
        if (has_M == has_mu)
          throw Error("link " + l.id + ": give exactly one of M or mu");
        if (has_M) {
          l.M = kv.num("link " + l.id, "M");
        } else {
          double mu = kv.num("link " + l.id, "mu");
          if (!(mu > 0.0) || mu > 1.0)
            throw Error("link " + l.id + ": field mu must be in (0, 1]");
          l.M = l.m / mu;
        }
        links.push_back(std::move(l));
        break;
      }
      case Section::ods: {
        if (toks.size() < 3) throw Error(where + ": od pair needs id, origin, destination");
        OdPair w;
        w.id = toks[0];
        w.origin = toks[1];
        w.destination = toks[2];
        auto kv = parse_kv("od pair " + w.id, toks, 3);
        w.demand_h = kv.num("od pair " + w.id, "demand_h");
        w.demand_a = kv.num("od pair " + w.id, "demand_a");
        ods.push_back(std::move(w));
        break;
      }
    }
  }
  return Network(std::move(nodes), std::move(links), std::move(ods));
}

/// Loads and validates a network description file.
inline Network load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open network file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str());
}

}  // namespace tollgrid
