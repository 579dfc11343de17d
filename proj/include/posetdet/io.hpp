#pragma once

// JSON readers for poset and digraph files.
//
//   poset:   {"labels": [...], "covers": [[i, j], ...],
//             "F": {"entries": [[a, b, v], ...]}, "G": ..., "f": ...}
//   digraph: {"vertices": n, "arcs": [[u, v, w], ...], "sources": [...], "sinks": [...]}
//
// A value is an integer (JSON number or decimal string) or a coefficient list
// in ascending degree, which makes it a polynomial in q. The incidence keys
// are optional.

#include <cstddef>
#include <fstream>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "posetdet/errors.hpp"
#include "posetdet/lgv.hpp"
#include "posetdet/poset.hpp"
#include "posetdet/ring.hpp"

namespace posetdet {

using json = nlohmann::json;

namespace detail {

inline Integer parse_integer(const json& v) {
  if (v.is_number_integer()) return Integer(v.get<long long>());
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>());
    } catch (const std::exception&) {
      throw InputError("not an integer: " + v.dump());
    }
  }
  throw InputError("expected an integer, got " + v.dump());
}

inline RingValue parse_value(const json& v) {
  if (v.is_array()) {
    std::vector<Integer> c;
    for (const auto& x : v) c.push_back(parse_integer(x));
    return Polynomial(std::move(c));
  }
  return parse_integer(v);
}

inline std::size_t parse_index(const json& v, std::size_t bound, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0 || static_cast<std::size_t>(v.get<long long>()) >= bound) {
    throw InputError(std::string(what) + ": index out of range: " + v.dump());
  }
  return static_cast<std::size_t>(v.get<long long>());
}

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace detail

struct PosetFile {
  Poset poset;
  std::optional<IncidenceFunction> big_f;
  std::optional<IncidenceFunction> big_g;
  std::optional<IncidenceFunction> f;
};

inline IncidenceFunction parse_incidence(const json& doc, const Poset& p) {
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
    throw InputError("incidence function needs an \"entries\" array");
  }
  std::vector<std::tuple<std::size_t, std::size_t, RingValue>> entries;
  for (const auto& e : doc["entries"]) {
    if (!e.is_array() || e.size() != 3) throw InputError("incidence entry must be [a, b, value]");
    entries.emplace_back(detail::parse_index(e[0], p.size(), "incidence"),
                         detail::parse_index(e[1], p.size(), "incidence"), detail::parse_value(e[2]));
  }
  const RingTag tag = entries.empty() ? RingTag::integer : std::get<2>(entries.front()).tag();
  IncidenceFunction out(p, tag);
  for (auto& [a, b, v] : entries) out.set(a, b, std::move(v));
  return out;
}

inline PosetFile parse_poset(const json& doc) {
  if (!doc.is_object() || !doc.contains("labels") || !doc["labels"].is_array()) {
    throw InputError("poset file needs a \"labels\" array");
  }
  std::vector<std::string> labels;
  for (const auto& l : doc["labels"]) labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
  const std::size_t n = labels.size();
  if (n == 0) throw InputError("poset file has no elements");
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array()) throw InputError("\"covers\" must be an array");
    for (const auto& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2) throw InputError("cover must be [i, j]");
      covers.emplace_back(detail::parse_index(c[0], n, "cover"), detail::parse_index(c[1], n, "cover"));
    }
  }
  PosetFile out{poset_from_covers(n, covers, std::move(labels)), {}, {}, {}};
  if (doc.contains("F")) out.big_f = parse_incidence(doc["F"], out.poset);
  if (doc.contains("G")) out.big_g = parse_incidence(doc["G"], out.poset);
  if (doc.contains("f")) out.f = parse_incidence(doc["f"], out.poset);
  return out;
}

inline PosetFile load_poset(const std::string& path) { return parse_poset(detail::load_json(path)); }

inline WeightedDigraph parse_digraph(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_number_integer() ||
      doc["vertices"].get<long long>() < 0) {
    throw InputError("digraph file needs a nonnegative \"vertices\" count");
  }
  const auto n = static_cast<std::size_t>(doc["vertices"].get<long long>());
  std::vector<std::tuple<std::size_t, std::size_t, RingValue>> arcs;
  if (doc.contains("arcs")) {
    for (const auto& a : doc["arcs"]) {
      if (!a.is_array() || a.size() != 3) throw InputError("arc must be [u, v, weight]");
      arcs.emplace_back(detail::parse_index(a[0], n, "arc"), detail::parse_index(a[1], n, "arc"),
                        detail::parse_value(a[2]));
    }
  }
  const RingTag tag = arcs.empty() ? RingTag::integer : std::get<2>(arcs.front()).tag();
  WeightedDigraph d(n, tag);
  for (auto& [u, v, w] : arcs) d.add_arc(u, v, std::move(w));
  auto indices = [&](const char* key) {
    std::vector<std::size_t> out;
    if (!doc.contains(key) || !doc[key].is_array()) throw InputError(std::string("digraph file needs \"") + key + "\"");
    for (const auto& v : doc[key]) out.push_back(detail::parse_index(v, n, key));
    return out;
  };
  auto sources = indices("sources");
  auto sinks = indices("sinks");
  for (std::size_t v : sources) d.set_layer(v, Layer::source);
  for (std::size_t v : sinks) d.set_layer(v, Layer::sink);
  d.set_terminals(std::move(sources), std::move(sinks));
  return d;
}

inline WeightedDigraph load_digraph(const std::string& path) { return parse_digraph(detail::load_json(path)); }

}  // namespace posetdet
