#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "qlogic/cli.hpp"
#include "qlogic/qlogic.hpp"

using namespace qlogic;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<AlgebraDocument> corpus_documents() {
  std::vector<AlgebraDocument> out;
  for (const auto& p : corpus_files(QLOGIC_CORPUS_DIR)) out.push_back(load_document(p));
  return out;
}

// Every corpus document that denotes an orthomodular structure, as a BQIA.
std::vector<BoundedQIA> corpus_bqias() {
  std::vector<BoundedQIA> out;
  for (const auto& doc : corpus_documents()) {
    if (doc.kind == DocKind::Ol) continue;
    if (is_lattice_kind(doc.kind)) out.push_back(oml_to_bqia(load_ortholattice(doc)));
    else if (is_magma_kind(doc.kind) && doc.zero) out.push_back(load_bqia(doc));
  }
  return out;
}

std::vector<FiniteOrtholattice> corpus_omls() {
  std::vector<FiniteOrtholattice> out;
  for (const auto& a : corpus_bqias()) out.push_back(bqia_to_oml(a));
  return out;
}

std::vector<MonadicQIA> corpus_mqias() {
  std::vector<MonadicQIA> out;
  for (const auto& doc : corpus_documents()) {
    if (doc.kind == DocKind::Qma) out.push_back(qma_to_mqia(load_qma(doc)));
    if (doc.kind == DocKind::Mqia) out.push_back(load_mqia(doc));
  }
  return out;
}

Outcome mo2_golden_table() {
  Outcome o;
  std::ostringstream out, err;
  const int code = run_cli({"convert", std::string(QLOGIC_CORPUS_DIR) + "/mo2.alg", "--to", "bqia"}, out, err);
  o.require(code == 0, "convert exited " + std::to_string(code) + ": " + err.str());
  if (!o.ok) return o;
  const auto doc = parse_algebra(out.str());
  const std::vector<std::string> expected_rows{
      "1 x' x' x' x' 1", "x 1 x x x 1", "y' y' 1 y' y' 1", "y y y 1 y 1", "1 1 1 1 1 1", "x x' y y' 0 1"};
  const std::vector<std::string> order{"x", "x'", "y", "y'", "0", "1"};
  o.require(doc.elements == order, "element order differs");
  if (!o.ok) return o;
  int matched = 0;
  for (std::size_t r = 0; r < 6; ++r) {
    std::string row;
    for (std::size_t c = 0; c < 6; ++c) row += (c ? " " : "") + doc.elements[doc.table[r * 6 + c]];
    o.require(row == expected_rows[r], "row " + order[r] + " is '" + row + "'");
    matched += row == expected_rows[r] ? 6 : 0;
  }
  o.detail = o.ok ? std::to_string(matched) + "/36 entries match" : o.detail;
  return o;
}

Outcome non_boolean_witness() {
  Outcome o;
  const auto mo2 = make_mo(2);
  const auto a = oml_to_bqia(mo2);
  const Element x = mo2.at("x"), y = mo2.at("y");
  o.require(a.op(a.op(x, y), y) == x, "(x.y).y != x");
  o.require(a.op(a.op(y, x), x) == y, "(y.x).x != y");
  o.require(!is_quasi_commutative(a.magma), "quasi-commutativity holds");
  if (o.ok) o.detail = "(x.y).y = x, (y.x).x = y";
  return o;
}

Outcome benzene_control() {
  Outcome o;
  auto bz = make_benzene();
  o.require(check_ortholattice(bz).passed(), "not an ortholattice");
  const auto rep = check_orthomodular(bz);
  for (auto rule : {"orthomodular.quasi-equation", "orthomodular.kernel", "orthomodular.identity",
                    "orthomodular.no-benzene"})
    o.require(rep.failed(rule), std::string(rule) + " passed");
  o.require(find_benzene_sublattice(bz).has_value(), "no hexagon found");
  for (const auto& lat : corpus_omls()) o.require(!find_benzene_sublattice(lat), "hexagon in " + lat.name);
  if (o.ok) o.detail = "4/4 characterizations reject, hexagon witness found";
  return o;
}

Outcome round_trip_sweep() {
  Outcome o;
  std::vector<FiniteOrtholattice> omls = corpus_omls();
  for (std::size_t n = 1; n <= 8; ++n)
    for (auto& lat : enumerate_oml(n).representatives) omls.push_back(lat);
  for (const auto& lat : omls) {
    const auto a = oml_to_bqia(lat);
    o.require(check_bounded_qia(a.magma, a.zero).passed(), lat.name + " fails bounded QIA check");
    o.require(same_structure(bqia_to_oml(a), lat), lat.name + " does not round trip");
  }
  std::size_t bqias = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& a : enumerate_bqia(n).representatives) {
      ++bqias;
      o.require(same_structure(oml_to_bqia(bqia_to_oml(a)), a), a.magma.name + " does not round trip");
    }
  if (o.ok) o.detail = std::to_string(omls.size()) + " OMLs, " + std::to_string(bqias) + " BQIAs";
  return o;
}

Outcome derived_laws() {
  Outcome o;
  const auto all = corpus_bqias();
  for (const auto& a : all) {
    const auto rep = check_derived_laws(a);
    o.require(rep.passed(), a.magma.name + ": " + (rep.passed() ? "" : rep.violations.front().rule));
  }
  if (o.ok) o.detail = std::to_string(all.size()) + " corpus algebras";
  return o;
}

Outcome frame_checks() {
  Outcome o;
  const auto all = corpus_bqias();
  for (const auto& a : all) {
    o.require(check_orthoframe(maclaren_frame(a)).passed(), "MacLaren frame of " + a.magma.name);
    o.require(check_orthoframe(goldblatt_frame(a)).passed(), "Goldblatt frame of " + a.magma.name);
    o.require(enumerate_proper_filters(a).size() == oracle_filter_count(a), "filter count of " + a.magma.name);
  }
  const auto mo2 = oracle_filter_count(oml_to_bqia(make_mo(2)));
  const auto b4 = oracle_filter_count(oml_to_bqia(make_boolean(2)));
  o.require(mo2 == 5, "MO2 has " + std::to_string(mo2) + " proper filters");
  o.require(b4 == 3, "2x2 Boolean has " + std::to_string(b4) + " proper filters");
  if (o.ok) o.detail = std::to_string(all.size()) + " algebras, MO2 -> 5, 2x2 -> 3";
  return o;
}

Outcome completions() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& a : corpus_bqias()) {
    if (a.size() > 8) continue;
    const auto lat = bqia_to_oml(a);
    for (auto c : {Construction::MacLaren, Construction::Goldblatt}) {
      const auto e = embedding(a, c);
      const auto iso = find_isomorphism(e.completion.lattice, lat);
      o.require(e.report.passed() && iso.has_value(),
                std::string(to_string(c)) + " completion of " + a.magma.name);
      ++checked;
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " completions isomorphic";
  return o;
}

Outcome monadic_conversions() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& lat : corpus_omls()) {
    if (lat.size() > 8) continue;
    const auto n = static_cast<Element>(lat.size());
    for (const auto& e : enumerate_quantifiers(lat)) {
      ++pairs;
      const QuantumMonadicAlgebra q{lat, e};
      const auto m = qma_to_mqia(q);
      o.require(check_mqia(m).passed(), "check_mqia on " + lat.name);
      o.require(same_structure(mqia_to_qma(m), q), "mqia_to_qma does not invert on " + lat.name);
      for (Element x = 0; x < n; ++x) {
        o.require(m.diamond(m.diamond(x)) == m.diamond(x), "diamond not idempotent on " + lat.name);
        for (Element y = 0; y < n; ++y)
          if (m.qia.precedes(x, y))
            o.require(m.qia.precedes(m.diamond(x), m.diamond(y)), "diamond not monotone on " + lat.name);
      }
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " (OML, quantifier) pairs";
  return o;
}

Outcome monadic_frames() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& m : corpus_mqias()) {
    const auto& a = m.qia;
    const auto mac = monadic_maclaren_frame(m);
    o.require(check_monadic_orthoframe(mac).passed(), "monadic MacLaren frame of " + a.magma.name);
    o.require(check_monadic_orthoframe(monadic_goldblatt_frame(m)).passed(),
              "monadic Goldblatt frame of " + a.magma.name);
    const auto pts = nonzero_elements(a);
    for (std::size_t p = 0; p < pts.size(); ++p) {
      const Element dx0 = a.op(m.diamond(pts[p]), a.zero);
      Mask expected = 0;
      for (std::size_t q = 0; q < pts.size(); ++q)
        if (a.op(pts[q], dx0) == a.one) expected |= bit(static_cast<Element>(q));
      const auto perp = perp_of(mac.frame, PointSet(mac.rel[p]));
      o.require(perp.bits() == expected, "R[{x}] perp mismatch in " + a.magma.name);
      Mask image = 0;
      for (std::size_t w = 0; w < pts.size(); ++w)
        if (has(perp.bits(), static_cast<Element>(w))) image |= mac.rel[w];
      const Element bound = m.diamond(dx0);
      for (std::size_t z = 0; z < pts.size(); ++z)
        if (has(image, static_cast<Element>(z)))
          o.require(a.op(pts[z], bound) == a.one, "R[R[{x}] perp] bound fails in " + a.magma.name);
    }
    for (auto c : {Construction::MacLaren, Construction::Goldblatt}) {
      const auto e = embedding(m, c);
      o.require(e.report.passed(), std::string(to_string(c)) + " embedding of " + a.magma.name);
      o.require(e.completion.exists_r.has_value() &&
                    check_quantifier(e.completion.lattice, *e.completion.exists_r).passed(),
                "exists_R is not a quantifier for " + a.magma.name);
      ++checked;
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " monadic frames";
  return o;
}

Outcome category_isomorphism() {
  Outcome o;
  std::vector<QuantumMonadicAlgebra> qmas;
  for (const auto& m : corpus_mqias())
    if (m.qia.size() <= 6) qmas.push_back(mqia_to_qma(m));
  HomSearchOptions opts;
  opts.workers = workers_from_env();
  std::uint64_t maps = 0, homs = 0;
  for (const auto& s : qmas)
    for (const auto& t : qmas) {
      const auto res = hom_correspondence(s, t, opts);
      o.require(res.report.passed() && res.qma_homs == res.mqia_homs,
                "discrepancy between " + s.lat.name + " and " + t.lat.name);
      maps += res.maps_checked;
      homs += res.qma_homs.size();
    }
  if (o.ok)
    o.detail = std::to_string(qmas.size() * qmas.size()) + " pairs, " + std::to_string(maps) + " maps, " +
               std::to_string(homs) + " homomorphisms, 0 discrepancies";
  return o;
}

Outcome enumeration_agreement() {
  Outcome o;
  std::string counts;
  const auto mo2 = oml_to_bqia(make_mo(2));
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto q = enumerate_bqia(n);
    const auto l = enumerate_oml(n);
    const auto again = enumerate_bqia(n);
    o.require(q.representatives.size() == l.representatives.size(), "counts differ at n=" + std::to_string(n));
    o.require(q.representatives.size() == again.representatives.size(), "unstable at n=" + std::to_string(n));
    for (std::size_t i = 0; i < std::min(q.representatives.size(), again.representatives.size()); ++i)
      o.require(same_structure(q.representatives[i], again.representatives[i]), "unstable at n=" + std::to_string(n));
    std::vector<bool> hit(l.representatives.size(), false);
    for (const auto& a : q.representatives) {
      const auto lat = bqia_to_oml(a);
      for (std::size_t j = 0; j < hit.size(); ++j)
        if (!hit[j] && find_isomorphism(lat, l.representatives[j])) {
          hit[j] = true;
          break;
        }
    }
    o.require(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }),
              "conversion is not a bijection at n=" + std::to_string(n));
    if (n == 3 || n == 5) o.require(q.representatives.empty(), "nonempty at n=" + std::to_string(n));
    if (n == 6) {
      bool found = false;
      for (const auto& a : q.representatives) {
        const auto iso = find_isomorphism(bqia_to_oml(mo2), bqia_to_oml(a));
        if (!iso) continue;
        bool same = true;
        for (Element x = 0; x < 6; ++x)
          for (Element y = 0; y < 6; ++y) same = same && (*iso)[mo2.op(x, y)] == a.op((*iso)[x], (*iso)[y]);
        found = found || same;
      }
      o.require(found, "MO2 table missing at n=6");
    }
    counts += (n > 1 ? "," : "") + std::to_string(q.representatives.size());
  }
  if (o.ok) o.detail = "counts " + counts;
  return o;
}

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "MO2 golden table", 1, mo2_golden_table},
      {2, "non-Boolean witness", 1, non_boolean_witness},
      {3, "Benzene control", 1, benzene_control},
      {4, "round-trip sweep", 60, round_trip_sweep},
      {5, "derived-law suite", 10, derived_laws},
      {6, "orthoframes and filters", 10, frame_checks},
      {7, "completion checks", 60, completions},
      {8, "monadic conversions", 60, monadic_conversions},
      {9, "monadic frames", 120, monadic_frames},
      {10, "category isomorphism", 120, category_isomorphism},
      {11, "enumeration oracle agreement", 300, enumeration_agreement},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_s) {
      o.ok = false;
      o.detail += " (exceeded time limit)";
    }
    failures += !o.ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title << " - " << o.detail << " ("
         << secs << " s, limit " << c.limit_s << " s)";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all 11 criteria passed") << std::endl;
  return failures ? 1 : 0;
}
