#pragma once

// The `.alg` text format.
//
//   # comment to end of line
//   algebra NAME
//   kind ol|oml|qia|bqia|mqia|qma|frame|mframe
//   elements e1 ... en
//   order a<b ...          (lattice kinds; any generating pairs)
//   ocomp a:b ...          (lattice kinds; pairs are symmetric)
//   zero e                 (magma kinds)
//   table
//   row e : v1 ... vn      (one per element, columns in declared order)
//   exists a:b ...         (qma)   / diamond a:b ... (mqia)
//   points p1 ... pm       (frame kinds, instead of elements)
//   perp a b               (frame kinds, one ordered pair per line)
//   rel a b                (mframe)
//
// Comment lines before `algebra` are kept as the document header.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "frames.hpp"
#include "lattice.hpp"
#include "monadic.hpp"
#include "quasi_implication.hpp"

namespace qlogic {

enum class DocKind { Ol, Oml, Qia, Bqia, Mqia, Qma, Frame, Mframe };

inline std::string_view to_string(DocKind k) {
  switch (k) {
    case DocKind::Ol: return "ol";
    case DocKind::Oml: return "oml";
    case DocKind::Qia: return "qia";
    case DocKind::Bqia: return "bqia";
    case DocKind::Mqia: return "mqia";
    case DocKind::Qma: return "qma";
    case DocKind::Frame: return "frame";
    case DocKind::Mframe: return "mframe";
  }
  return "?";
}

inline std::optional<DocKind> parse_kind(std::string_view s) {
  for (auto k : {DocKind::Ol, DocKind::Oml, DocKind::Qia, DocKind::Bqia, DocKind::Mqia, DocKind::Qma,
                 DocKind::Frame, DocKind::Mframe})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

inline bool is_lattice_kind(DocKind k) { return k == DocKind::Ol || k == DocKind::Oml || k == DocKind::Qma; }
inline bool is_magma_kind(DocKind k) { return k == DocKind::Qia || k == DocKind::Bqia || k == DocKind::Mqia; }
inline bool is_frame_kind(DocKind k) { return k == DocKind::Frame || k == DocKind::Mframe; }

struct AlgebraDocument {
  std::vector<std::string> header;
  std::string name;
  DocKind kind = DocKind::Oml;
  std::vector<std::string> elements;
  std::vector<std::pair<Element, Element>> order;
  std::vector<Element> ocomp;
  std::optional<Element> zero;
  std::vector<Element> table;
  std::vector<Element> unary;  // exists or diamond; identity when absent
  std::vector<std::string> points;
  std::vector<std::pair<Element, Element>> perp;
  std::vector<std::pair<Element, Element>> rel;
};

namespace detail {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

inline const std::vector<std::string_view>& keywords() {
  static const std::vector<std::string_view> k{"algebra", "kind", "elements", "order",  "ocomp", "zero", "table",
                                               "row",     "exists", "diamond", "points", "perp",  "rel"};
  return k;
}

inline bool is_keyword(std::string_view s) {
  const auto& k = keywords();
  return std::find(k.begin(), k.end(), s) != k.end();
}

[[noreturn]] inline void fail_at(Errc code, const Token& t, const std::string& msg) {
  throw Error(code, "line " + std::to_string(t.line) + ", column " + std::to_string(t.col) + ": " + msg);
}

class TokenStream {
 public:
  explicit TokenStream(std::string_view text, std::vector<std::string>& header) {
    int line = 1;
    bool seen_token = false;
    std::size_t i = 0;
    int col = 1;
    while (i < text.size()) {
      const char c = text[i];
      if (c == '\n') {
        ++line;
        col = 1;
        ++i;
      } else if (c == '#') {
        std::size_t end = text.find('\n', i);
        if (end == std::string_view::npos) end = text.size();
        if (!seen_token) {
          std::string_view body = text.substr(i + 1, end - i - 1);
          if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
          while (!body.empty() && (body.back() == '\r' || body.back() == ' ')) body.remove_suffix(1);
          header.emplace_back(body);
        }
        col += static_cast<int>(end - i);
        i = end;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col;
        ++i;
      } else {
        const std::size_t start = i;
        const int start_col = col;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') {
          ++i;
          ++col;
        }
        tokens_.push_back({std::string(text.substr(start, i - start)), line, start_col});
        seen_token = true;
      }
    }
    eof_.line = line;
    eof_.col = col;
  }

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return done() ? eof_ : tokens_[pos_]; }
  bool at(std::string_view kw) const { return !done() && tokens_[pos_].text == kw; }
  Token next() {
    if (done()) fail_at(Errc::ParseError, eof_, "unexpected end of input");
    return tokens_[pos_++];
  }
  /// Tokens up to the next keyword.
  std::vector<Token> until_keyword() {
    std::vector<Token> out;
    while (!done() && !is_keyword(tokens_[pos_].text)) out.push_back(tokens_[pos_++]);
    return out;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Token eof_;
};

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

class NameTable {
 public:
  void declare(const Token& t) {
    if (is_keyword(t.text)) fail_at(Errc::ParseError, t, "'" + t.text + "' is a reserved word");
    if (t.text.find_first_of(":<") != std::string::npos)
      fail_at(Errc::ParseError, t, "names may not contain ':' or '<'");
    if (index_.count(t.text)) fail_at(Errc::DuplicateElement, t, "'" + t.text + "' declared twice");
    index_.emplace(t.text, static_cast<Element>(names_.size()));
    names_.push_back(t.text);
  }
  Element lookup(const Token& t, const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) fail_at(Errc::UnknownElement, t, "undeclared name '" + name + "'");
    return it->second;
  }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

 private:
  std::map<std::string, Element> index_;
  std::vector<std::string> names_;
};

inline void expect_keyword(TokenStream& ts, std::string_view kw) {
  if (!ts.at(kw)) fail_at(Errc::MissingSection, ts.peek(), "expected section '" + std::string(kw) + "'");
  ts.next();
}

/// Parses `a:b` tokens into a full map; unspecified entries default to identity.
inline std::vector<Element> parse_unary(const std::vector<Token>& toks, const NameTable& names) {
  std::vector<Element> map(names.size());
  std::vector<bool> set(names.size(), false);
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<Element>(i);
  for (const auto& t : toks) {
    const auto parts = split(t.text, ':');
    if (parts.size() != 2) fail_at(Errc::ParseError, t, "expected a:b, got '" + t.text + "'");
    const Element a = names.lookup(t, parts[0]), b = names.lookup(t, parts[1]);
    if (set[a] && map[a] != b) fail_at(Errc::ParseError, t, "conflicting image for '" + parts[0] + "'");
    map[a] = b;
    set[a] = true;
  }
  return map;
}

}  // namespace detail

/// Parses one document. Throws ParseError (with line and column),
/// UnknownElement, DuplicateElement or MissingSection.
inline AlgebraDocument parse_algebra(std::string_view text) {
  using namespace detail;
  AlgebraDocument doc;
  TokenStream ts(text, doc.header);

  expect_keyword(ts, "algebra");
  {
    const Token t = ts.next();
    if (is_keyword(t.text)) fail_at(Errc::ParseError, t, "missing algebra name");
    doc.name = t.text;
  }
  expect_keyword(ts, "kind");
  {
    const Token t = ts.next();
    auto k = parse_kind(t.text);
    if (!k) fail_at(Errc::ParseError, t, "unknown kind '" + t.text + "'");
    doc.kind = *k;
  }

  NameTable names;
  if (is_frame_kind(doc.kind)) {
    expect_keyword(ts, "points");
    for (const auto& t : ts.until_keyword()) names.declare(t);
    doc.points = names.names();
    while (ts.at("perp") || ts.at("rel")) {
      const Token kw = ts.next();
      if (kw.text == "rel" && doc.kind != DocKind::Mframe)
        fail_at(Errc::ParseError, kw, "'rel' is only allowed in mframe documents");
      const auto args = ts.until_keyword();
      if (args.size() != 2) fail_at(Errc::ParseError, kw, "'" + kw.text + "' takes exactly two points");
      const std::pair pr{names.lookup(args[0], args[0].text), names.lookup(args[1], args[1].text)};
      (kw.text == "perp" ? doc.perp : doc.rel).push_back(pr);
    }
  } else {
    expect_keyword(ts, "elements");
    for (const auto& t : ts.until_keyword()) names.declare(t);
    if (names.size() == 0) fail_at(Errc::MissingSection, ts.peek(), "no elements declared");
    doc.elements = names.names();
    const std::size_t n = names.size();

    if (is_lattice_kind(doc.kind)) {
      expect_keyword(ts, "order");
      for (const auto& t : ts.until_keyword()) {
        const auto parts = split(t.text, '<');
        if (parts.size() < 2) fail_at(Errc::ParseError, t, "expected a<b, got '" + t.text + "'");
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
          doc.order.emplace_back(names.lookup(t, parts[i]), names.lookup(t, parts[i + 1]));
      }
      expect_keyword(ts, "ocomp");
      doc.ocomp.assign(n, -1);
      for (const auto& t : ts.until_keyword()) {
        const auto parts = split(t.text, ':');
        if (parts.size() != 2) fail_at(Errc::ParseError, t, "expected a:b, got '" + t.text + "'");
        const Element a = names.lookup(t, parts[0]), b = names.lookup(t, parts[1]);
        if ((doc.ocomp[a] >= 0 && doc.ocomp[a] != b) || (doc.ocomp[b] >= 0 && doc.ocomp[b] != a))
          fail_at(Errc::ParseError, t, "conflicting complement for '" + t.text + "'");
        doc.ocomp[a] = b;
        doc.ocomp[b] = a;
      }
      for (std::size_t a = 0; a < n; ++a)
        if (doc.ocomp[a] < 0)
          fail_at(Errc::ParseError, ts.peek(), "element '" + doc.elements[a] + "' has no complement");
      if (doc.kind == DocKind::Qma) {
        doc.unary = UnaryOp::identity(n).map;
        if (ts.at("exists")) {
          ts.next();
          doc.unary = parse_unary(ts.until_keyword(), names);
        }
      }
    } else {
      if (ts.at("zero")) {
        ts.next();
        const Token t = ts.next();
        doc.zero = names.lookup(t, t.text);
      } else if (doc.kind != DocKind::Qia) {
        fail_at(Errc::MissingSection, ts.peek(), "expected section 'zero'");
      }
      expect_keyword(ts, "table");
      doc.table.assign(n * n, -1);
      std::vector<bool> seen(n, false);
      for (std::size_t r = 0; r < n; ++r) {
        if (!ts.at("row")) fail_at(Errc::MissingSection, ts.peek(), "expected " + std::to_string(n) + " table rows");
        ts.next();
        const Token head = ts.next();
        const Element a = names.lookup(head, head.text);
        if (seen[a]) fail_at(Errc::ParseError, head, "row '" + head.text + "' given twice");
        seen[a] = true;
        const Token colon = ts.next();
        if (colon.text != ":") fail_at(Errc::ParseError, colon, "expected ':' after row name");
        const auto vals = ts.until_keyword();
        if (vals.size() != n)
          fail_at(Errc::ParseError, head, "row '" + head.text + "' has " + std::to_string(vals.size()) +
                                              " entries, expected " + std::to_string(n));
        for (std::size_t c = 0; c < n; ++c) doc.table[a * n + c] = names.lookup(vals[c], vals[c].text);
      }
      if (doc.kind == DocKind::Mqia) {
        doc.unary = UnaryOp::identity(n).map;
        if (ts.at("diamond")) {
          ts.next();
          doc.unary = parse_unary(ts.until_keyword(), names);
        }
      }
    }
  }
  if (!ts.done()) fail_at(Errc::ParseError, ts.peek(), "unexpected '" + ts.peek().text + "'");
  return doc;
}

/// Canonical text: fixed section order, covering pairs for the order,
/// each complement pair once, one table row per line, single spaces and a
/// trailing newline.
inline std::string serialize_algebra(const AlgebraDocument& doc) {
  std::ostringstream out;
  for (const auto& h : doc.header) out << "#" << (h.empty() ? "" : " ") << h << "\n";
  out << "algebra " << doc.name << "\n";
  out << "kind " << to_string(doc.kind) << "\n";
  auto pair_list = [&](const std::vector<std::string>& names, const std::vector<Element>& map) {
    for (std::size_t a = 0; a < map.size(); ++a) out << (a ? " " : "") << names[a] << ":" << names[map[a]];
  };

  if (is_frame_kind(doc.kind)) {
    out << "points";
    for (const auto& p : doc.points) out << " " << p;
    out << "\n";
    auto rows = [&](const char* kw, const std::vector<std::pair<Element, Element>>& pairs) {
      auto sorted = pairs;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (auto [a, b] : sorted) out << kw << " " << doc.points[a] << " " << doc.points[b] << "\n";
    };
    rows("perp", doc.perp);
    if (doc.kind == DocKind::Mframe) rows("rel", doc.rel);
    return out.str();
  }

  const auto& names = doc.elements;
  const std::size_t n = names.size();
  out << "elements";
  for (const auto& e : names) out << " " << e;
  out << "\n";
  if (is_lattice_kind(doc.kind)) {
    std::vector<Mask> up(n, 0);
    for (auto [a, b] : doc.order) up[a] |= bit(b);
    up = reflexive_transitive_closure(std::move(up));
    out << "order";
    for (Element a = 0; a < static_cast<Element>(n); ++a)
      for (Element b = 0; b < static_cast<Element>(n); ++b) {
        if (a == b || !has(up[a], b) || has(up[b], a)) continue;
        bool cover = true;
        for (Element c = 0; cover && c < static_cast<Element>(n); ++c)
          if (c != a && c != b && has(up[a], c) && has(up[c], b) && !has(up[c], a) && !has(up[b], c))
            cover = false;
        if (cover) out << " " << names[a] << "<" << names[b];
      }
    out << "\nocomp";
    for (Element a = 0; a < static_cast<Element>(n); ++a)
      if (doc.ocomp[a] >= a) out << " " << names[a] << ":" << names[doc.ocomp[a]];
    out << "\n";
    if (doc.kind == DocKind::Qma) {
      out << "exists ";
      pair_list(names, doc.unary);
      out << "\n";
    }
  } else {
    if (doc.zero) out << "zero " << names[*doc.zero] << "\n";
    out << "table\n";
    for (std::size_t a = 0; a < n; ++a) {
      out << "row " << names[a] << " :";
      for (std::size_t b = 0; b < n; ++b) out << " " << names[doc.table[a * n + b]];
      out << "\n";
    }
    if (doc.kind == DocKind::Mqia) {
      out << "diamond ";
      pair_list(names, doc.unary);
      out << "\n";
    }
  }
  return out.str();
}

// Documents <-> structures. Loaders validate under the kind's checker and
// throw InvalidStructure (or the checker's own error) before returning.

inline void require_kind(const AlgebraDocument& doc, std::initializer_list<DocKind> kinds) {
  if (std::find(kinds.begin(), kinds.end(), doc.kind) == kinds.end())
    throw Error(Errc::KindMismatch, "document '" + doc.name + "' has kind " + std::string(to_string(doc.kind)));
}

/// Unvalidated lattice candidate from an ol/oml/qma document.
inline FiniteOrtholattice lattice_candidate(const AlgebraDocument& doc) {
  require_kind(doc, {DocKind::Ol, DocKind::Oml, DocKind::Qma});
  return make_ortholattice(doc.elements, doc.order, doc.ocomp, doc.name);
}

inline FiniteOrtholattice load_ortholattice(const AlgebraDocument& doc) {
  auto lat = validate_ortholattice(lattice_candidate(doc));
  if (doc.kind != DocKind::Ol) lat = validate_orthomodular(std::move(lat));
  return lat;
}

inline FiniteMagma magma_of(const AlgebraDocument& doc) {
  require_kind(doc, {DocKind::Qia, DocKind::Bqia, DocKind::Mqia});
  FiniteMagma m;
  m.name = doc.name;
  m.names = doc.elements;
  m.table = doc.table;
  return m;
}

inline BoundedQIA load_bqia(const AlgebraDocument& doc) {
  require_kind(doc, {DocKind::Bqia, DocKind::Mqia});
  return make_bounded_qia(magma_of(doc), *doc.zero);
}

inline QuantumMonadicAlgebra load_qma(const AlgebraDocument& doc) {
  require_kind(doc, {DocKind::Qma});
  return make_qma(load_ortholattice(doc), UnaryOp{doc.unary});
}

inline MonadicQIA load_mqia(const AlgebraDocument& doc) {
  require_kind(doc, {DocKind::Mqia});
  return make_mqia(load_bqia(doc), UnaryOp{doc.unary});
}

inline OrthoFrame frame_of(const AlgebraDocument& doc) {
  require_kind(doc, {DocKind::Frame, DocKind::Mframe});
  OrthoFrame f;
  f.name = doc.name;
  f.labels = doc.points;
  f.perp.assign(doc.points.size(), 0);
  for (auto [a, b] : doc.perp) f.perp[a] |= bit(b);
  return f;
}

inline MonadicOrthoFrame mframe_of(const AlgebraDocument& doc) {
  require_kind(doc, {DocKind::Mframe});
  MonadicOrthoFrame mf{frame_of(doc), std::vector<Mask>(doc.points.size(), 0)};
  for (auto [a, b] : doc.rel) mf.rel[a] |= bit(b);
  return mf;
}

inline std::vector<std::string> provenance_header(const Provenance& p) {
  if (p.empty()) return {};
  return {"derived-from: " + p.source + " via " + p.operation};
}

inline AlgebraDocument to_document(const FiniteOrtholattice& lat, DocKind kind = DocKind::Oml) {
  AlgebraDocument doc;
  doc.header = provenance_header(lat.provenance);
  doc.name = lat.name;
  doc.kind = kind;
  doc.elements = lat.names;
  for (Element a = 0; a < static_cast<Element>(lat.size()); ++a)
    for_each_bit(lat.up[a], [&](Element b) {
      if (a != b) doc.order.emplace_back(a, b);
    });
  doc.ocomp = lat.ocomp;
  return doc;
}

inline AlgebraDocument to_document(const BoundedQIA& a) {
  AlgebraDocument doc;
  doc.header = provenance_header(a.magma.provenance);
  doc.name = a.magma.name;
  doc.kind = DocKind::Bqia;
  doc.elements = a.magma.names;
  doc.zero = a.zero;
  doc.table = a.magma.table;
  return doc;
}

inline AlgebraDocument to_document(const QuantumMonadicAlgebra& q) {
  auto doc = to_document(q.lat, DocKind::Qma);
  doc.unary = q.exists.map;
  return doc;
}

inline AlgebraDocument to_document(const MonadicQIA& m) {
  auto doc = to_document(m.qia);
  doc.kind = DocKind::Mqia;
  doc.unary = m.diamond.map;
  return doc;
}

inline AlgebraDocument to_document(const OrthoFrame& f) {
  AlgebraDocument doc;
  doc.header = provenance_header(f.provenance);
  doc.name = f.name;
  doc.kind = DocKind::Frame;
  doc.points = f.labels;
  for (Element p = 0; p < static_cast<Element>(f.size()); ++p)
    for_each_bit(f.perp[p], [&](Element q) { doc.perp.emplace_back(p, q); });
  return doc;
}

inline AlgebraDocument to_document(const MonadicOrthoFrame& mf) {
  auto doc = to_document(mf.frame);
  doc.kind = DocKind::Mframe;
  for (Element p = 0; p < static_cast<Element>(mf.size()); ++p)
    for_each_bit(mf.rel[p], [&](Element q) { doc.rel.emplace_back(p, q); });
  return doc;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline AlgebraDocument load_document(const std::filesystem::path& path) {
  try {
    return parse_algebra(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.filename().string() + ": " + e.what());
  }
}

/// Every `.alg` file in a directory, sorted by file name.
inline std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".alg") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qlogic
