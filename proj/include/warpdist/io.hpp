#pragma once

// File formats: whitespace-separated string files (with an optional compact
// "a*3" run form) and JSON metric definitions.

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "warpdist/metric.hpp"
#include "warpdist/tree.hpp"

namespace warpdist::io {

using nlohmann::json;

/// Splits on whitespace; "tok*k" expands to k copies of tok. A token that
/// merely contains '*' without a positive count suffix is kept verbatim.
inline std::vector<std::string> read_tokens(std::istream& in) {
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    const auto star = tok.rfind('*');
    if (star != std::string::npos && star > 0 && star + 1 < tok.size()) {
      const std::string count = tok.substr(star + 1);
      if (count.find_first_not_of("0123456789") == std::string::npos) {
        const unsigned long k = std::stoul(count);
        if (k == 0) throw std::invalid_argument("run count must be positive in '" + tok + "'");
        out.insert(out.end(), k, tok.substr(0, star));
        continue;
      }
    }
    out.push_back(tok);
  }
  return out;
}

inline std::vector<std::string> read_token_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open string file '" + path + "'");
  return read_tokens(in);
}

inline double parse_real(const std::string& tok) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0') throw std::invalid_argument("not a number: '" + tok + "'");
  if (!std::isfinite(v) || errno == ERANGE) throw std::invalid_argument("real letters must be finite: '" + tok + "'");
  return v;
}

inline std::vector<double> parse_reals(const std::vector<std::string>& tokens) {
  std::vector<double> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(parse_real(t));
  return out;
}

/// Interns every token; unknown tokens grow the alphabet.
inline std::vector<Symbol> intern_all(Alphabet& alphabet, const std::vector<std::string>& tokens) {
  std::vector<Symbol> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(alphabet.intern(t));
  return out;
}

/// Maps tokens of a closed alphabet; unknown tokens are input errors.
inline std::vector<Symbol> lookup_all(const Alphabet& alphabet, const std::vector<std::string>& tokens) {
  std::vector<Symbol> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(alphabet.at(t));
  return out;
}

enum class MetricKind { Hamming, Real, Table, Tree };

/// A metric definition as read from JSON. Hamming definitions without an
/// alphabet are open: letters are added as strings are read.
struct MetricSpec {
  MetricKind kind = MetricKind::Hamming;
  Alphabet alphabet;
  bool open_alphabet = false;
  Cost unit = 1.0;
  std::optional<std::string> null_token;
  std::optional<TableMetric> table;
  std::optional<WellSeparatedTree> tree;
  std::vector<std::string> warnings;
};

inline std::string token_of(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  throw std::invalid_argument("alphabet entries must be strings or numbers");
}

inline Cost number_of(const json& v, const char* what) {
  if (!v.is_number()) throw std::invalid_argument(std::string(what) + " must be a number");
  const Cost c = v.get<Cost>();
  if (!std::isfinite(c)) throw std::invalid_argument(std::string(what) + " must be finite");
  return c;
}

inline std::string describe_violations(const std::vector<MetricViolation>& v, const Alphabet& a) {
  std::ostringstream os;
  os << v.size() << " metric axiom violation(s); first: " << v.front().describe();
  if (v.front().a < a.size()) os << " (letter '" << a.token(v.front().a) << "')";
  return os.str();
}

inline WellSeparatedTree parse_tree(const json& j, Alphabet& alphabet) {
  if (!j.contains("nodes") || !j["nodes"].is_array() || j["nodes"].empty())
    throw std::invalid_argument("tree metric needs a non-empty \"nodes\" array");
  const auto& nodes = j["nodes"];
  for (const auto& node : nodes) {
    if (!node.is_object() || !node.contains("id")) throw std::invalid_argument("tree node without an id");
    const auto id = token_of(node["id"]);
    if (alphabet.find(id)) throw std::invalid_argument("duplicate tree node id '" + id + "'");
    alphabet.intern(id);
  }
  std::vector<Symbol> parent(nodes.size());
  std::vector<Cost> weight(nodes.size(), 0.0);
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    const auto& node = nodes[v];
    if (!node.contains("parent") || node["parent"].is_null()) {
      parent[v] = static_cast<Symbol>(v);
      continue;
    }
    const auto p = alphabet.find(token_of(node["parent"]));
    if (!p) throw std::invalid_argument("tree node '" + alphabet.token(static_cast<Symbol>(v)) + "' has an unknown parent");
    parent[v] = *p;
    if (*p != v) {
      if (!node.contains("weight")) throw std::invalid_argument("tree edge without a weight");
      weight[v] = number_of(node["weight"], "tree edge weight");
    }
  }
  const double c = j.contains("depth_constant") ? number_of(j["depth_constant"], "depth_constant")
                                                 : WellSeparatedTree::kDefaultDepthConstant;
  return WellSeparatedTree(std::move(parent), std::move(weight), c);
}

/// Parses and validates a metric definition; all failures are
/// std::invalid_argument.
inline MetricSpec parse_metric(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw std::invalid_argument("metric definition needs a string \"kind\"");
  const auto kind = j["kind"].get<std::string>();
  MetricSpec spec;
  if (j.contains("null") && !j["null"].is_null()) spec.null_token = token_of(j["null"]);

  if (kind == "hamming") {
    spec.kind = MetricKind::Hamming;
    if (j.contains("unit")) spec.unit = number_of(j["unit"], "hamming unit");
    if (!(spec.unit > 0.0)) throw std::invalid_argument("hamming unit must be positive");
    if (j.contains("alphabet")) {
      if (!j["alphabet"].is_array()) throw std::invalid_argument("\"alphabet\" must be an array");
      for (const auto& t : j["alphabet"]) {
        const auto tok = token_of(t);
        if (spec.alphabet.find(tok)) throw std::invalid_argument("duplicate letter '" + tok + "'");
        spec.alphabet.intern(tok);
      }
    } else {
      spec.open_alphabet = true;
    }
    // The null is one more letter at unit distance from every other.
    if (spec.null_token && !spec.open_alphabet) spec.alphabet.intern(*spec.null_token);
  } else if (kind == "real") {
    spec.kind = MetricKind::Real;
    if (spec.null_token) (void)parse_real(*spec.null_token);
  } else if (kind == "table") {
    spec.kind = MetricKind::Table;
    if (!j.contains("alphabet") || !j["alphabet"].is_array())
      throw std::invalid_argument("table metric needs an \"alphabet\" array");
    for (const auto& t : j["alphabet"]) {
      const auto tok = token_of(t);
      if (spec.alphabet.find(tok)) throw std::invalid_argument("duplicate letter '" + tok + "'");
      spec.alphabet.intern(tok);
    }
    const std::size_t n = spec.alphabet.size();
    if (!j.contains("distances") || !j["distances"].is_array() || j["distances"].size() != n)
      throw std::invalid_argument("table metric needs an n-by-n \"distances\" array");
    std::vector<Cost> flat;
    flat.reserve(n * n);
    for (const auto& row : j["distances"]) {
      if (!row.is_array() || row.size() != n) throw std::invalid_argument("distance rows must have n entries");
      for (const auto& v : row) flat.push_back(number_of(v, "distance"));
    }
    spec.table.emplace(n, std::move(flat));
    const auto violations = validate_metric(*spec.table);
    if (!violations.empty()) throw std::invalid_argument(describe_violations(violations, spec.alphabet));
    if (spec.null_token && !spec.alphabet.find(*spec.null_token))
      throw std::invalid_argument("null letter '" + *spec.null_token + "' is not in the alphabet");
  } else if (kind == "tree") {
    spec.kind = MetricKind::Tree;
    spec.tree.emplace(parse_tree(j, spec.alphabet));
    if (!spec.tree->depth_within_bound())
      spec.warnings.push_back("tree depth " + std::to_string(spec.tree->max_depth()) +
                              " exceeds the logarithmic depth bound; computations may be slow");
    if (spec.null_token && !spec.alphabet.find(*spec.null_token))
      throw std::invalid_argument("null letter '" + *spec.null_token + "' is not a tree node");
  } else {
    throw std::invalid_argument("unknown metric kind '" + kind + "'");
  }
  return spec;
}

inline MetricSpec load_metric_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open metric file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("metric file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_metric(j);
}

/// Tree in the same JSON format `parse_tree` reads. `name` gives each node's id.
template <class Name>
json tree_to_json(const WellSeparatedTree& t, Name&& name) {
  json nodes = json::array();
  for (std::size_t v = 0; v < t.size(); ++v) {
    const auto s = static_cast<Symbol>(v);
    json node{{"id", name(s)}, {"parent", name(t.parent(s))}};
    if (s != t.root()) node["weight"] = t.parent_weight(s);
    nodes.push_back(std::move(node));
  }
  return json{{"kind", "tree"}, {"nodes", std::move(nodes)}, {"depth_constant", t.depth_constant()}};
}

}  // namespace warpdist::io
