#pragma once

// Command-line front end. Exit codes: 0 all checks passed, 1 a check
// failed, 2 usage or parse error, 3 size cap exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qlogic.hpp"

namespace qlogic {

namespace cli {

enum ExitCode { kPassed = 0, kFailed = 1, kUsage = 2, kTooLarge = 3 };

struct Section {
  std::string label;
  CheckReport report;
  std::vector<std::string> names;
  bool informational = false;  // shown, but does not affect the exit code
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string format = "text";
  bool quiet = false;
  unsigned workers = 1;
  CheckOptions opts;
};

inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::UnknownElement:
    case Errc::DuplicateElement:
    case Errc::MissingSection:
    case Errc::KindMismatch: return kUsage;
    case Errc::TooLarge: return kTooLarge;
    default: return kFailed;
  }
}

/// Prints the sections and returns the exit code they imply.
inline int print_sections(Context& ctx, const std::string& subject, const std::vector<Section>& secs) {
  bool ok = true;
  for (const auto& s : secs)
    if (!s.informational && !s.report.passed()) ok = false;
  if (ctx.format == "tsv") {
    for (const auto& s : secs) {
      CheckReport r = s.report;
      r.subject = subject + ":" + s.label;
      ctx.out << emit_tsv(r, s.names);
    }
    return ok ? kPassed : kFailed;
  }
  auto& out = ctx.out;
  for (const auto& s : secs) {
    if (ctx.quiet && s.report.passed()) continue;
    out << "  " << s.label << ": " << (s.report.passed() ? "passed" : (s.informational ? "no" : "FAILED"));
    if (s.report.degenerate) out << " (degenerate)";
    out << "\n";
    for (const auto& v : s.report.violations) {
      out << "    " << v.rule;
      if (!v.witness.empty()) out << " at (" << format_witness(v, s.names) << ")";
      if (!v.detail.empty()) out << ": " << v.detail;
      out << "\n";
    }
    if (!ctx.quiet)
      for (const auto& note : s.report.notes) out << "    note: " << note << "\n";
  }
  out << subject << ": " << (ok ? "all checks passed" : "check failed") << "\n";
  return ok ? kPassed : kFailed;
}

inline CheckReport equality_report(const std::string& rule, bool equal, const std::string& detail) {
  CheckReport r;
  if (!equal) r.violations.push_back({rule, {}, detail});
  return r;
}

/// Shared tail for lattice-based documents once orthomodularity holds.
inline void oml_derived(Context& ctx, const FiniteOrtholattice& lat, std::vector<Section>& secs) {
  const auto a = oml_to_bqia(lat);
  secs.push_back({"sasaki bounded QIA", check_bounded_qia(a.magma, a.zero, ctx.opts), lat.names});
  secs.push_back({"derived laws", check_derived_laws(a, ctx.opts), lat.names});
  secs.push_back({"round trip", equality_report("roundtrip.oml", same_structure(bqia_to_oml(a), lat),
                                                "bqia_to_oml(oml_to_bqia(L)) differs from L"),
                  lat.names});
}

inline void bqia_derived(Context& ctx, const BoundedQIA& a, std::vector<Section>& secs) {
  secs.push_back({"derived laws", check_derived_laws(a, ctx.opts), a.names()});
  const auto lat = bqia_to_oml(a);
  secs.push_back({"induced orthomodular lattice", check_orthomodular(lat, ctx.opts), a.names()});
  secs.push_back({"round trip", equality_report("roundtrip.bqia", same_structure(oml_to_bqia(lat), a),
                                                "oml_to_bqia(bqia_to_oml(A)) differs from A"),
                  a.names()});
}

inline int cmd_check(Context& ctx, const std::string& path) {
  const auto doc = load_document(path);
  std::vector<Section> secs;
  const auto& names = is_frame_kind(doc.kind) ? doc.points : doc.elements;
  auto done = [&] {
    if (ctx.format == "text" && !ctx.quiet)
      ctx.out << doc.name << " (" << to_string(doc.kind) << ", " << names.size()
              << (is_frame_kind(doc.kind) ? " point" : " element") << (names.size() == 1 ? "" : "s") << ")\n";
    return print_sections(ctx, doc.name, secs);
  };
  auto failed = [&] { return !secs.back().report.passed(); };

  if (ctx.format == "dot") {
    if (is_lattice_kind(doc.kind)) ctx.out << emit_dot(validate_ortholattice(lattice_candidate(doc)));
    else if (doc.kind == DocKind::Frame) ctx.out << emit_dot(frame_of(doc));
    else if (doc.kind == DocKind::Mframe) ctx.out << emit_dot(mframe_of(doc));
    else if (doc.kind == DocKind::Qia) throw Error(Errc::KindMismatch, "no diagram for an unbounded qia");
    else ctx.out << emit_dot(bqia_to_oml(load_bqia(doc)));
    return kPassed;
  }

  switch (doc.kind) {
    case DocKind::Ol:
    case DocKind::Oml:
    case DocKind::Qma: {
      auto lat = lattice_candidate(doc);
      secs.push_back({"ortholattice", check_ortholattice(lat, ctx.opts), names});
      if (failed()) return done();
      secs.push_back({"orthomodular", check_orthomodular(lat, ctx.opts), names, doc.kind == DocKind::Ol});
      if (doc.kind == DocKind::Ol || failed()) return done();
      oml_derived(ctx, lat, secs);
      if (doc.kind == DocKind::Qma) {
        const UnaryOp e{doc.unary};
        secs.push_back({"quantifier", check_quantifier(lat, e, QuantifierMode::QuantumMonadic, ctx.opts), names});
        if (failed()) return done();
        const QuantumMonadicAlgebra q{lat, e};
        const auto m = qma_to_mqia(q);
        secs.push_back({"monadic QIA", check_mqia(m, ctx.opts), names});
        secs.push_back({"monadic round trip", equality_report("roundtrip.qma", same_structure(mqia_to_qma(m), q),
                                                              "mqia_to_qma(qma_to_mqia(Q)) differs from Q"),
                        names});
      }
      return done();
    }
    case DocKind::Qia:
    case DocKind::Bqia:
    case DocKind::Mqia: {
      const auto m = magma_of(doc);
      check_magma_shape(m);
      if (!doc.zero) {
        secs.push_back({"quasi-implication algebra", check_qia(m, ctx.opts), names});
        return done();
      }
      secs.push_back({"bounded quasi-implication algebra", check_bounded_qia(m, *doc.zero, ctx.opts), names});
      if (failed()) return done();
      BoundedQIA a;
      a.magma = m;
      a.zero = *doc.zero;
      a.one = m.op(0, 0);
      bqia_derived(ctx, a, secs);
      if (doc.kind == DocKind::Mqia) {
        const UnaryOp d{doc.unary};
        secs.push_back({"monadic QIA", check_mqia(a, d, ctx.opts), names});
        if (failed()) return done();
        const MonadicQIA mq{a, d};
        const auto q = mqia_to_qma(mq);
        secs.push_back({"quantum monadic algebra", check_quantifier(q, ctx.opts), names});
        secs.push_back({"monadic round trip", equality_report("roundtrip.mqia", same_structure(qma_to_mqia(q), mq),
                                                              "qma_to_mqia(mqia_to_qma(M)) differs from M"),
                        names});
      }
      return done();
    }
    case DocKind::Frame:
    case DocKind::Mframe: {
      auto f = frame_of(doc);
      check_frame_shape(f);
      if (doc.kind == DocKind::Frame) {
        secs.push_back({"orthoframe", check_orthoframe(f, ctx.opts), names});
        if (failed()) return done();
        const auto b = bi_ortho_lattice(f);
        secs.push_back({"B(X) orthomodular", check_orthomodular(b.lattice, ctx.opts), b.lattice.names, true});
        secs.back().report.notes.insert(secs.back().report.notes.begin(),
                                        std::to_string(b.closed.size()) + " bi-orthogonally closed sets");
        return done();
      }
      const auto mf = mframe_of(doc);
      secs.push_back({"monadic orthoframe", check_monadic_orthoframe(mf, ctx.opts), names});
      if (failed()) return done();
      const auto b = bi_ortho_lattice(mf);
      secs.push_back({"exists_R on B(X)",
                      check_quantifier(b.lattice, *b.exists_r, QuantifierMode::MonadicOrtholattice, ctx.opts),
                      b.lattice.names});
      secs.back().report.notes.insert(secs.back().report.notes.begin(),
                                      std::to_string(b.closed.size()) + " bi-orthogonally closed sets");
      return done();
    }
  }
  return done();
}

inline BoundedQIA bqia_from(const AlgebraDocument& doc) {
  switch (doc.kind) {
    case DocKind::Bqia:
    case DocKind::Mqia: return load_bqia(doc);
    case DocKind::Ol: return oml_to_bqia(validate_ortholattice(lattice_candidate(doc)));
    case DocKind::Oml:
    case DocKind::Qma: return oml_to_bqia(load_ortholattice(doc));
    default: throw Error(Errc::KindMismatch, "'" + doc.name + "' is not a bounded algebra");
  }
}

inline FiniteOrtholattice oml_from(const AlgebraDocument& doc) {
  switch (doc.kind) {
    case DocKind::Oml:
    case DocKind::Qma: return load_ortholattice(doc);
    case DocKind::Bqia:
    case DocKind::Mqia: return bqia_to_oml(load_bqia(doc));
    default: throw Error(Errc::KindMismatch, "'" + doc.name + "' is not orthomodular by kind");
  }
}

inline QuantumMonadicAlgebra qma_from(const AlgebraDocument& doc) {
  if (doc.kind == DocKind::Qma) return load_qma(doc);
  if (doc.kind == DocKind::Mqia) return mqia_to_qma(load_mqia(doc));
  throw Error(Errc::KindMismatch, "'" + doc.name + "' is not a monadic algebra");
}

inline MonadicQIA mqia_from(const AlgebraDocument& doc) {
  if (doc.kind == DocKind::Mqia) return load_mqia(doc);
  if (doc.kind == DocKind::Qma) return qma_to_mqia(load_qma(doc));
  throw Error(Errc::KindMismatch, "'" + doc.name + "' is not a monadic algebra");
}

/// Re-parses serialized output and validates it under its kind.
inline void self_check(const std::string& text) {
  try {
    const auto doc = parse_algebra(text);
    switch (doc.kind) {
      case DocKind::Ol: validate_ortholattice(lattice_candidate(doc)); break;
      case DocKind::Oml: load_ortholattice(doc); break;
      case DocKind::Qma: load_qma(doc); break;
      case DocKind::Bqia: load_bqia(doc); break;
      case DocKind::Mqia: load_mqia(doc); break;
      case DocKind::Qia: {
        auto m = magma_of(doc);
        check_magma_shape(m);
        if (!check_qia(m).passed()) throw Error(Errc::InvalidStructure, "not a qia");
        break;
      }
      case DocKind::Frame: {
        auto f = frame_of(doc);
        check_frame_shape(f);
        if (!check_orthoframe(f).passed()) throw Error(Errc::InvalidStructure, "not an orthoframe");
        break;
      }
      case DocKind::Mframe: {
        auto mf = mframe_of(doc);
        check_frame_shape(mf.frame);
        if (!check_monadic_orthoframe(mf).passed()) throw Error(Errc::InvalidStructure, "not a monadic orthoframe");
        break;
      }
    }
  } catch (const Error& e) {
    throw Error(Errc::InternalInconsistency, std::string("output does not re-validate: ") + e.what());
  }
}

inline void emit_document(Context& ctx, AlgebraDocument doc, const std::string& source, const std::string& op) {
  doc.header = {"derived-from: " + source + " via " + op};
  const auto text = serialize_algebra(doc);
  self_check(text);
  ctx.out << text;
}

inline int cmd_convert(Context& ctx, const std::string& path, const std::string& to) {
  const auto doc = load_document(path);
  AlgebraDocument result;
  std::string op;
  if (to == "bqia") {
    const auto a = bqia_from(doc);
    result = to_document(a);
    op = is_magma_kind(doc.kind) ? "identity" : "oml_to_bqia";
    if (ctx.format == "dot") {
      ctx.out << emit_dot(bqia_to_oml(a));
      return kPassed;
    }
  } else if (to == "oml") {
    const auto lat = oml_from(doc);
    result = to_document(lat, DocKind::Oml);
    op = is_magma_kind(doc.kind) ? "bqia_to_oml" : "identity";
    if (ctx.format == "dot") {
      ctx.out << emit_dot(lat);
      return kPassed;
    }
  } else if (to == "qma") {
    const auto q = qma_from(doc);
    result = to_document(q);
    op = doc.kind == DocKind::Mqia ? "mqia_to_qma" : "identity";
    if (ctx.format == "dot") {
      ctx.out << emit_dot(q.lat);
      return kPassed;
    }
  } else {
    const auto m = mqia_from(doc);
    result = to_document(m);
    op = doc.kind == DocKind::Qma ? "qma_to_mqia" : "identity";
    if (ctx.format == "dot") {
      ctx.out << emit_dot(bqia_to_oml(m.qia));
      return kPassed;
    }
  }
  result.name = doc.name;
  emit_document(ctx, result, doc.name, op);
  return kPassed;
}

inline Construction parse_construction(const std::string& s) {
  return s == "maclaren" ? Construction::MacLaren : Construction::Goldblatt;
}

inline int cmd_frame(Context& ctx, const std::string& path, const std::string& construction, bool monadic) {
  const auto doc = load_document(path);
  const auto c = parse_construction(construction);
  const std::string op = std::string(monadic ? "monadic_" : "") + construction + "_frame";
  if (monadic) {
    const auto m = mqia_from(doc);
    const auto mf = c == Construction::MacLaren ? monadic_maclaren_frame(m) : monadic_goldblatt_frame(m);
    if (ctx.format == "dot") ctx.out << emit_dot(mf);
    else emit_document(ctx, to_document(mf), doc.name, op);
  } else {
    const auto a = bqia_from(doc);
    const auto f = c == Construction::MacLaren ? maclaren_frame(a) : goldblatt_frame(a);
    if (ctx.format == "dot") ctx.out << emit_dot(f);
    else emit_document(ctx, to_document(f), doc.name, op);
  }
  return kPassed;
}

inline int cmd_complete(Context& ctx, const std::string& path, const std::string& construction, bool monadic) {
  const auto doc = load_document(path);
  const auto c = parse_construction(construction);
  const auto rep = monadic ? embedding(mqia_from(doc), c, ctx.opts) : embedding(bqia_from(doc), c, ctx.opts);
  if (ctx.format == "dot") {
    ctx.out << emit_dot(rep.completion.lattice);
    return rep.report.passed() ? kPassed : kFailed;
  }
  std::vector<Section> secs{{"embedding into B(" + rep.frame.frame.name + ")", rep.report, doc.elements}};
  if (ctx.format == "tsv") return print_sections(ctx, doc.name, secs);
  if (!ctx.quiet)
    ctx.out << doc.name << ": " << rep.frame.size() << " points, " << rep.completion.closed.size()
            << " closed sets\n";
  const int code = print_sections(ctx, doc.name, secs);
  const std::string via = c == Construction::MacLaren ? "ψ" : "φ";
  if (code == kPassed)
    ctx.out << "B(X) ≅ source via " << via << (monadic ? "; ∃_R commutes" : "") << "\n";
  else
    ctx.out << "B(X) ≇ source via " << via << "\n";
  return code;
}

inline std::string format_map(const std::vector<Element>& h, const std::vector<std::string>& src,
                              const std::vector<std::string>& dst) {
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i) out += (i ? "," : "") + src[i] + ":" + dst[h[i]];
  return out;
}

inline int cmd_enumerate(Context& ctx, const std::string& kind, int size, const std::string& algebra) {
  std::vector<AlgebraDocument> docs;
  std::string summary;
  if (kind == "quantifier") {
    if (algebra.empty()) throw Error(Errc::MissingSection, "--kind quantifier needs --algebra FILE");
    const auto doc = load_document(algebra);
    const auto lat = oml_from(doc);
    if (size >= 0 && static_cast<std::size_t>(size) != lat.size())
      throw Error(Errc::KindMismatch, "--size " + std::to_string(size) + " does not match '" + doc.name + "'");
    const auto qs = enumerate_quantifiers(lat);
    int i = 0;
    for (const auto& e : qs) {
      auto d = to_document(QuantumMonadicAlgebra{lat, e});
      d.name = doc.name + "_q" + std::to_string(++i);
      d.header.clear();
      docs.push_back(std::move(d));
    }
    summary = std::to_string(qs.size()) + " quantifiers on " + doc.name;
  } else {
    if (size < 1) throw Error(Errc::MissingSection, "--size N is required");
    const auto n = static_cast<std::size_t>(size);
    if (kind == "oml") {
      const auto res = enumerate_oml(n, ctx.workers);
      for (const auto& lat : res.representatives) docs.push_back(to_document(lat, DocKind::Oml));
      summary = std::to_string(res.representatives.size()) + " orthomodular lattices of size " +
                std::to_string(n) + " (" + std::to_string(res.total_labeled) + " labelled)";
    } else {
      const auto res = enumerate_bqia(n);
      for (const auto& a : res.representatives) docs.push_back(to_document(a));
      summary = std::to_string(res.representatives.size()) + " bounded QIAs of size " + std::to_string(n) + " (" +
                std::to_string(res.total_labeled) + " labelled)";
    }
  }
  if (ctx.quiet) {
    ctx.out << docs.size() << "\n";
    return kPassed;
  }
  if (ctx.format == "tsv") {
    for (const auto& d : docs) ctx.out << d.name << "\t" << to_string(d.kind) << "\t" << d.elements.size() << "\n";
    return kPassed;
  }
  if (ctx.format == "dot") {
    for (const auto& d : docs) {
      if (is_lattice_kind(d.kind)) ctx.out << emit_dot(validate_ortholattice(lattice_candidate(d)));
      else ctx.out << emit_dot(bqia_to_oml(load_bqia(d)));
    }
    return kPassed;
  }
  ctx.out << "# " << summary << "\n";
  for (const auto& d : docs) ctx.out << "\n" << serialize_algebra(d);
  return kPassed;
}

inline std::vector<Element> parse_map(const std::string& text, const std::vector<std::string>& src,
                                      const std::vector<std::string>& dst) {
  std::vector<Element> h(src.size(), -1);
  auto index = [](const std::vector<std::string>& names, const std::string& s) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw Error(Errc::UnknownElement, "unknown element '" + s + "' in --map");
    return static_cast<Element>(it - names.begin());
  };
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(Errc::ParseError, "--map entries must look like a:b");
    const Element a = index(src, item.substr(0, colon));
    const Element b = index(dst, item.substr(colon + 1));
    if (h[a] >= 0 && h[a] != b) throw Error(Errc::ParseError, "conflicting --map images for '" + src[a] + "'");
    h[a] = b;
  }
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] < 0) throw Error(Errc::ParseError, "--map gives no image for '" + src[i] + "'");
  return h;
}

inline int cmd_hom(Context& ctx, const std::string& src_path, const std::string& dst_path, const std::string& map,
                   const std::string& kind) {
  const auto sdoc = load_document(src_path);
  const auto ddoc = load_document(dst_path);
  const auto sq = qma_from(sdoc), dq = qma_from(ddoc);
  const auto sm = mqia_from(sdoc), dm = mqia_from(ddoc);
  const auto& sn = sq.lat.names;
  const auto& dn = dq.lat.names;
  const bool want_qma = kind != "mqia", want_mqia = kind != "qma";
  const std::string subject = sdoc.name + "->" + ddoc.name;

  if (!map.empty()) {
    const auto h = parse_map(map, sn, dn);
    std::vector<Section> secs;
    if (want_qma) secs.push_back({"qma homomorphism", check_qma_homomorphism(sq, dq, h, ctx.opts), sn});
    if (want_mqia) secs.push_back({"mqia homomorphism", check_mqia_homomorphism(sm, dm, h, ctx.opts), sn});
    if (secs.size() == 2 && secs[0].report.passed() != secs[1].report.passed())
      throw Error(Errc::InternalInconsistency, "qma and mqia verdicts disagree on " + format_map(h, sn, dn));
    if (ctx.format == "text" && !ctx.quiet) ctx.out << subject << ": " << format_map(h, sn, dn) << "\n";
    return print_sections(ctx, subject, secs);
  }

  HomSearchOptions hopts;
  hopts.workers = ctx.workers;
  const auto res = hom_correspondence(sq, dq, hopts);
  if (ctx.format == "tsv") {
    if (want_qma)
      for (const auto& h : res.qma_homs) ctx.out << subject << "\tqma\t" << format_map(h, sn, dn) << "\n";
    if (want_mqia)
      for (const auto& h : res.mqia_homs) ctx.out << subject << "\tmqia\t" << format_map(h, sn, dn) << "\n";
    CheckReport r = res.report;
    r.subject = subject + ":correspondence";
    ctx.out << emit_tsv(r, sn);
    return r.passed() ? kPassed : kFailed;
  }
  ctx.out << subject << ": " << res.maps_checked << " maps checked\n";
  auto list = [&](const char* label, const std::vector<std::vector<Element>>& homs) {
    ctx.out << "  " << label << " homomorphisms: " << homs.size() << "\n";
    if (!ctx.quiet)
      for (const auto& h : homs) ctx.out << "    " << format_map(h, sn, dn) << "\n";
  };
  if (want_qma) list("qma", res.qma_homs);
  if (want_mqia) list("mqia", res.mqia_homs);
  std::vector<Section> secs{{"correspondence", res.report, sn}};
  return print_sections(ctx, subject, secs);
}

}  // namespace cli

/// Runs one invocation; `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite orthomodular lattices, quasi-implication algebras and their frames", "qlogic"};
  app.require_subcommand(1);
  std::string format = "text";
  bool quiet = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "dot", "tsv"}));
  app.add_flag("--quiet", quiet, "Print verdicts only");

  std::string file, file2, to, construction, kind, algebra, map, hom_kind = "both";
  int size = -1;
  bool all_witnesses = false, monadic = false, all_maps = false;

  auto* check = app.add_subcommand("check", "Validate a document under its kind");
  check->add_option("file", file, "Algebra file")->required();
  check->add_flag("--all-witnesses", all_witnesses, "Report every violation, not just the first per rule");

  auto* convert = app.add_subcommand("convert", "Convert between lattice and implication forms");
  convert->add_option("file", file, "Algebra file")->required();
  convert->add_option("--to", to, "Target kind")->required()->check(CLI::IsMember({"oml", "bqia", "qma", "mqia"}));

  const std::vector<std::string> constructions{"maclaren", "goldblatt"};
  auto* frame = app.add_subcommand("frame", "Build the MacLaren or Goldblatt frame");
  frame->add_option("file", file, "Algebra file")->required();
  frame->add_option("--construction", construction, "Frame construction")
      ->required()->check(CLI::IsMember(constructions));
  frame->add_flag("--monadic", monadic, "Add the relation R from the quantifier");

  auto* complete = app.add_subcommand("complete", "Build B(X) and check the embedding");
  complete->add_option("file", file, "Algebra file")->required();
  complete->add_option("--construction", construction, "Frame construction")
      ->required()->check(CLI::IsMember(constructions));
  complete->add_flag("--monadic", monadic, "Also check exists_R against the quantifier");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate structures up to isomorphism");
  enumerate->add_option("--kind", kind, "Structure to enumerate")
      ->required()->check(CLI::IsMember({"oml", "bqia", "quantifier"}));
  enumerate->add_option("--size", size, "Number of elements");
  enumerate->add_option("--algebra", algebra, "OML file whose quantifiers are listed");

  auto* hom = app.add_subcommand("hom", "Check homomorphisms between monadic algebras");
  hom->add_option("src", file, "Source algebra file")->required();
  hom->add_option("dst", file2, "Target algebra file")->required();
  auto* all_opt = hom->add_flag("--all", all_maps, "Check every set map (default)");
  auto* map_opt = hom->add_option("--map", map, "Explicit map a:b,...");
  all_opt->excludes(map_opt);
  hom->add_option("--kind", hom_kind, "Which homomorphism notion to check")
      ->check(CLI::IsMember({"qma", "mqia", "both"}));

  for (auto* sub : {check, convert, frame, complete, enumerate, hom}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? cli::kPassed : cli::kUsage;
  }

  CheckOptions opts;
  if (all_witnesses) opts.witnesses = WitnessMode::All;
  cli::Context ctx{out, err, format, quiet, workers_from_env(), opts};

  try {
    if (check->parsed()) return cli::cmd_check(ctx, file);
    if (convert->parsed()) return cli::cmd_convert(ctx, file, to);
    if (frame->parsed()) return cli::cmd_frame(ctx, file, construction, monadic);
    if (complete->parsed()) return cli::cmd_complete(ctx, file, construction, monadic);
    if (enumerate->parsed()) return cli::cmd_enumerate(ctx, kind, size, algebra);
    if (hom->parsed()) return cli::cmd_hom(ctx, file, file2, map, hom_kind);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return cli::exit_code_for(e.code());
  }
  return cli::kUsage;
}

}  // namespace qlogic
