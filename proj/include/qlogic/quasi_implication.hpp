#pragma once

// Magmas and bounded quasi-implication algebras, and the two conversions
// between bounded quasi-implication algebras and orthomodular lattices.

#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "report.hpp"

namespace qlogic {

/// A carrier with a binary operation given by its Cayley table (row-major).
struct FiniteMagma {
  std::string name;
  std::vector<std::string> names;
  std::vector<Element> table;
  Provenance provenance;

  std::size_t size() const { return names.size(); }
  Element op(Element a, Element b) const { return table[a * size() + b]; }

  Element at(const std::string& label) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == label) return static_cast<Element>(i);
    throw Error(Errc::NoSuchElement, "no element named '" + label + "'");
  }
};

inline std::uint64_t structure_hash(const FiniteMagma& m) { return table_hash(m.table); }

/// A quasi-implication algebra with a designated zero (0.x = 1 for all x).
/// `one` is derived from the diagonal.
struct BoundedQIA {
  FiniteMagma magma;
  Element zero = 0;
  Element one = 0;

  std::size_t size() const { return magma.size(); }
  const std::vector<std::string>& names() const { return magma.names; }
  Element op(Element a, Element b) const { return magma.op(a, b); }

  bool precedes(Element a, Element b) const { return op(a, b) == one; }
  Element complement(Element a) const { return op(a, zero); }
  /// ((a.b).(b.a)).a
  Element join(Element a, Element b) const { return op(op(op(a, b), op(b, a)), a); }
  /// (a* + b*)*
  Element meet(Element a, Element b) const {
    return complement(join(complement(a), complement(b)));
  }
  /// ((a.b).(a.0)).0, equal to meet() on every valid algebra.
  Element meet_shortcut(Element a, Element b) const {
    return op(op(op(a, b), op(a, zero)), zero);
  }
};

inline bool same_structure(const BoundedQIA& a, const BoundedQIA& b) {
  return a.magma.names == b.magma.names && a.magma.table == b.magma.table && a.zero == b.zero &&
         a.one == b.one;
}

inline void check_magma_shape(const FiniteMagma& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(Errc::SizeMismatch, "empty carrier");
  if (n > kMaxSize) throw Error(Errc::TooLarge, "magma larger than 64 elements");
  if (m.table.size() != n * n) throw Error(Errc::SizeMismatch, "Cayley table is not n x n");
  for (Element v : m.table)
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw Error(Errc::NoSuchElement, "Cayley table entry out of range");
}

/// Checks the three quasi-implication axioms
///   q1: (x.y).x = x
///   q2: (x.y).(x.z) = (y.x).(y.z)
///   q3: ((x.y).(y.x)).x = ((y.x).(x.y)).y
/// in that order, stopping after the first failing axiom unless full_scan.
/// On success also confirms x.(x.y) = x.y and x.x = y.y; a failure there
/// throws InternalInconsistency.
inline CheckReport check_qia(const FiniteMagma& m, const CheckOptions& opts = {}) {
  check_magma_shape(m);
  CheckReport rep;
  rep.subject = "quasi-implication algebra";
  const auto n = static_cast<Element>(m.size());

  {
    RuleRecorder r(rep, opts, "q1");
    bool more = true;
    for (Element x = 0; more && x < n; ++x)
      for (Element y = 0; more && y < n; ++y)
        if (m.op(m.op(x, y), x) != x) more = r.add({x, y});
  }
  if (!rep.passed() && !opts.full_scan) return rep;
  {
    RuleRecorder r(rep, opts, "q2");
    bool more = true;
    for (Element x = 0; more && x < n; ++x)
      for (Element y = 0; more && y < n; ++y) {
        const Element xy = m.op(x, y), yx = m.op(y, x);
        for (Element z = 0; more && z < n; ++z)
          if (m.op(xy, m.op(x, z)) != m.op(yx, m.op(y, z))) more = r.add({x, y, z});
      }
  }
  if (!rep.passed() && !opts.full_scan) return rep;
  {
    RuleRecorder r(rep, opts, "q3");
    bool more = true;
    for (Element x = 0; more && x < n; ++x)
      for (Element y = 0; more && y < n; ++y) {
        const Element xy = m.op(x, y), yx = m.op(y, x);
        if (m.op(m.op(xy, yx), x) != m.op(m.op(yx, xy), y)) more = r.add({x, y});
      }
  }
  if (!rep.passed()) return rep;

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (m.op(x, m.op(x, y)) != m.op(x, y))
        throw Error(Errc::InternalInconsistency, "x.(x.y) = x.y fails on a quasi-implication algebra");
      if (m.op(x, x) != m.op(y, y))
        throw Error(Errc::InternalInconsistency, "x.x = y.y fails on a quasi-implication algebra");
    }
  rep.notes.push_back("derived: x.(x.y) = x.y holds");
  rep.notes.push_back("derived: x.x = y.y holds");
  if (n == 1) {
    rep.degenerate = true;
    rep.notes.push_back("degenerate: one-element algebra (0 = 1)");
  }
  return rep;
}

/// Checks that `zero` bounds the algebra from below: 0.a = 1 for all a, with
/// 1 taken from table[0][0] and cross-checked against the diagonal.
/// Throws NoSuchElement for an out-of-range zero.
inline CheckReport check_bounded_qia(const FiniteMagma& m, Element zero, const CheckOptions& opts = {}) {
  check_magma_shape(m);
  const auto n = static_cast<Element>(m.size());
  if (zero < 0 || zero >= n) throw Error(Errc::NoSuchElement, "zero out of range");
  CheckReport rep = check_qia(m, opts);
  rep.subject = "bounded quasi-implication algebra";
  if (!rep.passed() && !opts.full_scan) return rep;

  const Element one = m.op(0, 0);
  {
    RuleRecorder r(rep, opts, "one.well-defined");
    for (Element a = 0; a < n; ++a)
      if (m.op(a, a) != one && !r.add({a})) break;
  }
  {
    RuleRecorder r(rep, opts, "bounded.zero");
    for (Element a = 0; a < n; ++a)
      if (m.op(zero, a) != one && !r.add({zero, a})) break;
  }
  if (rep.passed()) rep.notes.push_back("derived: zero is the least element");
  return rep;
}

/// Validates and packages a bounded quasi-implication algebra; throws
/// InvalidStructure on failure.
inline BoundedQIA make_bounded_qia(FiniteMagma m, Element zero) {
  auto rep = check_bounded_qia(m, zero);
  if (!rep.passed())
    throw Error(Errc::InvalidStructure,
                "'" + m.name + "' is not a bounded quasi-implication algebra (" +
                    rep.violations.front().rule + ")");
  BoundedQIA a;
  a.one = m.op(0, 0);
  a.zero = zero;
  a.magma = std::move(m);
  return a;
}

/// a <= b iff a.b = 1, as bit rows.
inline std::vector<Mask> induced_order(const BoundedQIA& a) {
  const auto n = static_cast<Element>(a.size());
  std::vector<Mask> up(n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (a.precedes(x, y)) up[x] |= bit(y);
  return up;
}

/// Orthomodular lattice on the same carrier: complement x.0, join
/// ((x.y).(y.x)).x, meet (x* + y*)*. Re-validates the result and confirms
/// the meet shortcut ((x.y).(x.0)).0; any failure throws
/// ConversionInconsistency.
inline FiniteOrtholattice bqia_to_oml(const BoundedQIA& a) {
  const auto n = static_cast<Element>(a.size());
  FiniteOrtholattice lat;
  lat.name = a.magma.name;
  lat.names = a.magma.names;
  lat.up = induced_order(a);
  lat.ocomp.resize(n);
  lat.meet.resize(static_cast<std::size_t>(n) * n);
  lat.join.resize(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x) {
    lat.ocomp[x] = a.complement(x);
    for (Element y = 0; y < n; ++y) {
      lat.meet[x * n + y] = a.meet(x, y);
      lat.join[x * n + y] = a.join(x, y);
      if (a.meet(x, y) != a.meet_shortcut(x, y))
        throw Error(Errc::ConversionInconsistency, "meet shortcut disagrees with (x* + y*)*");
    }
  }
  lat.provenance = {a.magma.name, "bqia_to_oml", structure_hash(a.magma)};
  const auto ol = check_ortholattice(lat);
  if (!ol.passed())
    throw Error(Errc::ConversionInconsistency, "induced structure fails " + ol.violations.front().rule);
  const auto oml = check_orthomodular(lat);
  if (!oml.passed())
    throw Error(Errc::ConversionInconsistency, "induced lattice fails " + oml.violations.front().rule);
  if (lat.bot != a.zero || lat.top != a.one)
    throw Error(Errc::ConversionInconsistency, "induced bounds differ from zero/one");
  return lat;
}

/// Sasaki implication table of an orthomodular lattice, with zero = bottom.
/// Throws NotOrthomodular (naming the failing rule and witness) otherwise.
inline BoundedQIA oml_to_bqia(const FiniteOrtholattice& lat) {
  const auto oml = check_orthomodular(lat);
  if (!oml.passed()) {
    const auto& v = oml.violations.front();
    std::string w;
    for (Element e : v.witness) w += (w.empty() ? "" : ",") + lat.names[e];
    throw Error(Errc::NotOrthomodular, "'" + lat.name + "' fails " + v.rule + " at (" + w + ")");
  }
  const auto n = static_cast<Element>(lat.size());
  FiniteMagma m;
  m.name = lat.name;
  m.names = lat.names;
  m.table.resize(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) m.table[x * n + y] = sasaki(lat, x, y);
  m.provenance = {lat.name, "oml_to_bqia", structure_hash(lat)};
  const auto rep = check_bounded_qia(m, lat.bot);
  if (!rep.passed())
    throw Error(Errc::ConversionInconsistency,
                "Sasaki table fails " + rep.violations.front().rule);
  BoundedQIA a;
  a.magma = std::move(m);
  a.zero = lat.bot;
  a.one = lat.top;
  if (a.op(0, 0) != lat.top) throw Error(Errc::ConversionInconsistency, "x.x differs from top");
  return a;
}

/// Laws every bounded QIA satisfies, checked over all tuples: 1.x = x,
/// x.1 = 1, x.(x.y) = x.y, x.x = y.y, (x.0).0 = x, the two meet formulas
/// agree with the greatest lower bound under the induced order, and
/// x* + (x (.) y) = x.y.
inline CheckReport check_derived_laws(const BoundedQIA& a, const CheckOptions& opts = {}) {
  CheckReport rep;
  rep.subject = a.magma.name;
  const auto n = static_cast<Element>(a.size());
  auto scan1 = [&](const char* rule, auto&& holds) {
    RuleRecorder r(rep, opts, rule);
    for (Element x = 0; x < n; ++x)
      if (!holds(x) && !r.add({x})) return;
  };
  auto scan2 = [&](const char* rule, auto&& holds) {
    RuleRecorder r(rep, opts, rule);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (!holds(x, y) && !r.add({x, y})) return;
  };
  scan1("law.one-left", [&](Element x) { return a.op(a.one, x) == x; });
  scan1("law.one-right", [&](Element x) { return a.op(x, a.one) == a.one; });
  scan1("law.double-complement", [&](Element x) { return a.complement(a.complement(x)) == x; });
  scan2("law.contraction", [&](Element x, Element y) { return a.op(x, a.op(x, y)) == a.op(x, y); });
  scan2("law.diagonal", [&](Element x, Element y) { return a.op(x, x) == a.op(y, y); });
  auto glb = [&](Element x, Element y) {
    Element best = -1;
    for (Element z = 0; z < n; ++z) {
      if (!a.precedes(z, x) || !a.precedes(z, y)) continue;
      if (best < 0 || a.precedes(best, z)) best = z;
    }
    for (Element z = 0; z < n; ++z)
      if (a.precedes(z, x) && a.precedes(z, y) && !a.precedes(z, best)) return Element{-1};
    return best;
  };
  scan2("law.meet", [&](Element x, Element y) {
    const Element m = glb(x, y);
    return m >= 0 && a.meet(x, y) == m && a.meet_shortcut(x, y) == m;
  });
  scan2("law.sasaki", [&](Element x, Element y) {
    return a.join(a.complement(x), a.meet(x, y)) == a.op(x, y);
  });
  return rep;
}

/// Classical implication a' v b as a magma: the implication reduct of a
/// Boolean algebra.
inline FiniteMagma classical_implication_magma(const FiniteOrtholattice& lat) {
  const auto n = static_cast<Element>(lat.size());
  FiniteMagma m;
  m.name = lat.name;
  m.names = lat.names;
  m.table.resize(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      m.table[x * n + y] = implication_polynomial(lat, Implication::Classical, x, y);
  return m;
}

/// (x.y).y = (y.x).x for all x, y.
inline bool is_quasi_commutative(const FiniteMagma& m) {
  const auto n = static_cast<Element>(m.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (m.op(m.op(x, y), y) != m.op(m.op(y, x), x)) return false;
  return true;
}

/// Recognizer for implication algebras: (x.y).x = x, (x.y).y = (y.x).x and
/// x.(y.z) = y.(x.z).
inline bool is_boolean_implication_algebra(const FiniteMagma& m) {
  const auto n = static_cast<Element>(m.size());
  if (!is_quasi_commutative(m)) return false;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (m.op(m.op(x, y), x) != x) return false;
      for (Element z = 0; z < n; ++z)
        if (m.op(x, m.op(y, z)) != m.op(y, m.op(x, z))) return false;
    }
  return true;
}

}  // namespace qlogic
