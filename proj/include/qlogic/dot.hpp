#pragma once

// Graphviz and TSV renderings.

#include <ostream>
#include <sstream>
#include <string>

#include "frames.hpp"
#include "lattice.hpp"
#include "report.hpp"

namespace qlogic {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline void dot_nodes(std::ostream& out, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) out << "  n" << i << " [label=" << dot_quote(labels[i]) << "];\n";
}

}  // namespace detail

/// Covering pairs (a, b): a < b with nothing strictly between.
inline std::vector<std::pair<Element, Element>> covering_pairs(const FiniteOrtholattice& lat) {
  std::vector<std::pair<Element, Element>> out;
  const auto n = static_cast<Element>(lat.size());
  for (Element a = 0; a < n; ++a)
    for_each_bit(lat.up[a] & ~bit(a), [&](Element b) {
      const Mask between = (lat.up[a] & lat.down(b)) & ~(bit(a) | bit(b));
      if (between == 0) out.emplace_back(a, b);
    });
  return out;
}

/// Hasse diagram, bottom to top.
inline std::string emit_dot(const FiniteOrtholattice& lat) {
  std::ostringstream out;
  out << "digraph " << detail::dot_quote(lat.name) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  detail::dot_nodes(out, lat.names);
  for (auto [a, b] : covering_pairs(lat)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

/// Orthogonality as undirected dashed edges; the accessibility relation,
/// if any, as directed edges without loops.
inline std::string emit_dot(const OrthoFrame& f, const std::vector<Mask>& rel = {}) {
  std::ostringstream out;
  out << "digraph " << detail::dot_quote(f.name) << " {\n";
  detail::dot_nodes(out, f.labels);
  const auto m = static_cast<Element>(f.size());
  for (Element p = 0; p < m; ++p)
    for_each_bit(f.perp[p], [&](Element q) {
      if (p < q) out << "  n" << p << " -> n" << q << " [dir=none, style=dashed];\n";
    });
  for (Element p = 0; p < static_cast<Element>(rel.size()); ++p)
    for_each_bit(rel[p] & ~bit(p), [&](Element q) { out << "  n" << p << " -> n" << q << ";\n"; });
  out << "}\n";
  return out.str();
}

inline std::string emit_dot(const MonadicOrthoFrame& mf) { return emit_dot(mf.frame, mf.rel); }

/// Witness elements by name, comma separated.
inline std::string format_witness(const Violation& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    if (i) out += ",";
    const auto w = v.witness[i];
    out += (w >= 0 && static_cast<std::size_t>(w) < names.size()) ? names[w] : std::to_string(w);
  }
  return out;
}

/// One line per violation, `subject rule witness detail`, or a single
/// `subject pass` line.
inline std::string emit_tsv(const CheckReport& rep, const std::vector<std::string>& names) {
  std::ostringstream out;
  if (rep.passed()) {
    out << rep.subject << "\tpass\t\t\n";
    return out.str();
  }
  for (const auto& v : rep.violations) {
    out << rep.subject << "\t" << v.rule << "\t" << format_witness(v, names) << "\t" << v.detail << "\n";
  }
  return out.str();
}

}  // namespace qlogic
