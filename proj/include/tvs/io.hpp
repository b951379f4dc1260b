#pragma once

// Text formats: edge lists, labeling documents (JSON) and Graphviz DOT.
//
// Edge list:
//     # comment
//     n 3
//     0 1
//     1 2
//
// Labeling document: a JSON object with keys family (optional), n, s,
// edge_labels, vertex_labels, weights, is_irregular, bounds. Weights,
// irregularity and bounds are always recomputed from the graph when a
// document is made; the values stored in a parsed document are not trusted.

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tvs/bounds.hpp"
#include "tvs/constructors.hpp"
#include "tvs/families.hpp"
#include "tvs/graph.hpp"

namespace tvs {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what,
             std::optional<GraphErrorKind> kind = std::nullopt)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line), kind_(kind) {}

  std::size_t line() const noexcept { return line_; }
  std::optional<GraphErrorKind> kind() const noexcept { return kind_; }

 private:
  std::size_t line_;
  std::optional<GraphErrorKind> kind_;
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline std::optional<std::size_t> parse_index(const std::string& tok) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return std::nullopt;
  }
  try {
    return static_cast<std::size_t>(std::stoull(tok));
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::set<std::pair<vertex_t, vertex_t>> seen;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto toks = detail::split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;

    if (!n) {
      if (toks.size() != 2 || toks[0] != "n") throw ParseError(lineno, "expected header 'n <count>'");
      n = detail::parse_index(toks[1]);
      if (!n) throw ParseError(lineno, "bad vertex count '" + toks[1] + "'");
      if (*n == 0) throw ParseError(lineno, "graph has no vertices");
      continue;
    }
    if (toks.size() != 2) throw ParseError(lineno, "expected edge 'u v'");
    const auto u = detail::parse_index(toks[0]);
    const auto v = detail::parse_index(toks[1]);
    if (!u || !v) throw ParseError(lineno, "bad vertex index");
    if (*u >= *n || *v >= *n) {
      throw ParseError(lineno, "vertex index out of range for n=" + std::to_string(*n),
                       GraphErrorKind::index_out_of_range);
    }
    if (*u == *v) throw ParseError(lineno, "self-loop at vertex " + toks[0], GraphErrorKind::self_loop);
    if (!seen.insert(std::minmax(*u, *v)).second) {
      throw ParseError(lineno, "duplicate edge " + toks[0] + " " + toks[1],
                       GraphErrorKind::duplicate_edge);
    }
    edges.push_back({*u, *v});
  }
  if (!n) throw ParseError(lineno, "missing header 'n <count>'");
  return build_graph(*n, edges);
}

inline std::string emit_edge_list(const Graph& g, std::string_view comment = {}) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

struct LabelingDocument {
  std::optional<FamilySpec> family;
  std::size_t n = 0;
  label_t s = 0;
  std::vector<label_t> edge_labels;
  std::vector<label_t> vertex_labels;
  std::vector<label_t> weights;
  bool is_irregular = false;
  std::optional<BoundReport> bounds;

  TotalLabeling labeling() const { return {vertex_labels, edge_labels, s}; }
};

inline LabelingDocument make_document(const Graph& g, const TotalLabeling& lab,
                                      std::optional<FamilySpec> family = std::nullopt) {
  LabelingDocument doc;
  doc.family = std::move(family);
  doc.n = g.order();
  doc.s = lab.s;
  doc.edge_labels = lab.edge_labels;
  doc.vertex_labels = lab.vertex_labels;
  doc.weights = weight_profile(g, lab).weights;
  doc.is_irregular = verify(g, lab).is_irregular;
  if (g.order() > 0 && !g.has_isolated_vertex()) doc.bounds = bounds(g);
  return doc;
}

namespace detail {

template <typename T>
void write_array(std::ostream& out, const std::vector<T>& xs) {
  out << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
  out << ']';
}

}  // namespace detail

/// Fixed key order and layout so emitted documents diff cleanly.
inline std::string emit_document(const LabelingDocument& doc) {
  std::ostringstream out;
  out << "{\n";
  if (doc.family) {
    out << "  \"family\": {\"name\": \"" << family_name(doc.family->family) << "\", ";
    if (doc.family->family == Family::two_regular) {
      out << "\"lengths\": ";
      detail::write_array(out, doc.family->lengths);
    } else {
      out << "\"n\": " << doc.family->n;
    }
    out << "},\n";
  }
  out << "  \"n\": " << doc.n << ",\n";
  out << "  \"s\": " << doc.s << ",\n";
  out << "  \"edge_labels\": ";
  detail::write_array(out, doc.edge_labels);
  out << ",\n  \"vertex_labels\": ";
  detail::write_array(out, doc.vertex_labels);
  out << ",\n  \"weights\": ";
  detail::write_array(out, doc.weights);
  out << ",\n  \"is_irregular\": " << (doc.is_irregular ? "true" : "false") << ",\n";
  out << "  \"bounds\": ";
  if (doc.bounds) {
    out << "{\"baca\": " << doc.bounds->baca_bound
        << ", \"degree_count\": " << doc.bounds->degree_count_bound << "}";
  } else {
    out << "null";
  }
  out << "\n}\n";
  return out.str();
}

inline std::string emit_labeling(const ConstructionCertificate& cert) {
  return emit_document(make_document(cert.graph, cert.labeling, cert.family));
}

/// Reads a labeling document. Only structure is checked here; call
/// make_document against the graph to recompute derived fields.
inline LabelingDocument parse_labeling_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!j.is_object() || !j.contains(key)) throw ParseError(0, std::string("missing key '") + key + "'");
    return j.at(key);
  };
  LabelingDocument doc;
  try {
    if (j.is_object() && j.contains("family") && !j.at("family").is_null()) {
      const auto& f = j.at("family");
      const Family fam = parse_family(f.at("name").get<std::string>());
      if (fam == Family::two_regular) {
        doc.family = FamilySpec::two_regular(f.at("lengths").get<std::vector<std::size_t>>());
      } else {
        doc.family = FamilySpec::of(fam, f.at("n").get<std::size_t>());
      }
    }
    doc.n = need("n").get<std::size_t>();
    doc.s = need("s").get<label_t>();
    doc.edge_labels = need("edge_labels").get<std::vector<label_t>>();
    doc.vertex_labels = need("vertex_labels").get<std::vector<label_t>>();
    if (j.contains("weights")) doc.weights = j.at("weights").get<std::vector<label_t>>();
    if (j.contains("is_irregular")) doc.is_irregular = j.at("is_irregular").get<bool>();
    if (j.contains("bounds") && !j.at("bounds").is_null()) {
      const auto& b = j.at("bounds");
      const label_t baca = b.at("baca").get<label_t>();
      const label_t dc = b.at("degree_count").get<label_t>();
      doc.bounds = BoundReport{baca, dc, std::max(baca, dc), 0};
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad labeling document: ") + e.what());
  } catch (const SpecError& e) {
    throw ParseError(0, e.what());
  }
  if (doc.vertex_labels.size() != doc.n) {
    throw ParseError(0, "vertex_labels has " + std::to_string(doc.vertex_labels.size()) +
                            " entries for n=" + std::to_string(doc.n));
  }
  return doc;
}

/// Graphviz DOT with "λ=x / wt=w" on each vertex and the edge label on each
/// edge. Pass roles to mark the center vertex of wheels, helms and
/// friendship graphs.
inline std::string emit_dot(const Graph& g, const TotalLabeling& lab,
                            std::span<const VertexRole> roles = {}) {
  const WeightProfile p = weight_profile(g, lab);
  std::ostringstream out;
  out << "graph tvs {\n";
  for (vertex_t v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << v << "\\nλ=" << lab.vertex_labels[v] << " / wt=" << p.weights[v]
        << "\"";
    if (v < roles.size() && roles[v].role == Role::center) out << ", shape=doublecircle, xlabel=\"center\"";
    out << "];\n";
  }
  for (std::size_t e = 0; e < g.size(); ++e) {
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v << " [label=\"" << lab.edge_labels[e] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tvs
