#pragma once

// Quantifiers on orthomodular lattices, monadic quasi-implication algebras,
// the conversions between the two, and homomorphisms in both settings.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "parallel.hpp"
#include "quasi_implication.hpp"
#include "report.hpp"

namespace qlogic {

/// A total self-map of a carrier: quantifiers, diamonds and hom candidates.
struct UnaryOp {
  std::vector<Element> map;

  Element operator()(Element a) const { return map[a]; }
  std::size_t size() const { return map.size(); }

  static UnaryOp identity(std::size_t n) {
    UnaryOp u;
    u.map.resize(n);
    for (std::size_t i = 0; i < n; ++i) u.map[i] = static_cast<Element>(i);
    return u;
  }

  friend bool operator==(const UnaryOp&, const UnaryOp&) = default;
  friend auto operator<=>(const UnaryOp&, const UnaryOp&) = default;
};

/// 0 -> 0, everything else -> 1.
inline UnaryOp simple_operator(std::size_t n, Element zero, Element one) {
  UnaryOp u;
  u.map.assign(n, one);
  u.map[zero] = zero;
  return u;
}

struct QuantumMonadicAlgebra {
  FiniteOrtholattice lat;
  UnaryOp exists;

  std::size_t size() const { return lat.size(); }
};

struct MonadicQIA {
  BoundedQIA qia;
  UnaryOp diamond;

  std::size_t size() const { return qia.size(); }
};

inline bool same_structure(const QuantumMonadicAlgebra& a, const QuantumMonadicAlgebra& b) {
  return same_structure(a.lat, b.lat) && a.exists == b.exists;
}

inline bool same_structure(const MonadicQIA& a, const MonadicQIA& b) {
  return same_structure(a.qia, b.qia) && a.diamond == b.diamond;
}

inline void check_unary_shape(std::size_t n, const UnaryOp& u) {
  if (u.size() != n) throw Error(Errc::SizeMismatch, "unary operator does not cover the carrier");
  for (Element v : u.map)
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw Error(Errc::NoSuchElement, "unary operator value out of range");
}

enum class QuantifierMode { MonadicOrtholattice, QuantumMonadic };

/// Quantifier axioms: exists 0 = 0; a <= exists a; exists(a v b) = exists a v
/// exists b; exists exists a = exists a; exists (exists a)' = (exists a)'.
/// In QuantumMonadic mode the lattice must also be orthomodular. When the
/// axioms hold, confirms the closed elements form a sub-ortholattice
/// (InternalInconsistency otherwise).
inline CheckReport check_quantifier(const FiniteOrtholattice& lat, const UnaryOp& e,
                                    QuantifierMode mode = QuantifierMode::QuantumMonadic,
                                    const CheckOptions& opts = {}) {
  check_unary_shape(lat.size(), e);
  CheckReport rep;
  rep.subject = mode == QuantifierMode::QuantumMonadic ? "quantum monadic algebra" : "monadic ortholattice";
  const auto n = static_cast<Element>(lat.size());

  if (mode == QuantifierMode::QuantumMonadic) {
    const auto oml = check_orthomodular(lat);
    if (!oml.passed()) {
      RuleRecorder r(rep, opts, "qma.orthomodular");
      r.add(oml.violations.front().witness, oml.violations.front().rule);
    }
  }
  {
    RuleRecorder r(rep, opts, "exists.normal");
    if (e(lat.bot) != lat.bot) r.add({lat.bot});
  }
  {
    RuleRecorder r(rep, opts, "exists.extensive");
    for (Element a = 0; a < n; ++a)
      if (!lat.leq(a, e(a)) && !r.add({a})) break;
  }
  {
    RuleRecorder r(rep, opts, "exists.additive");
    bool more = true;
    for (Element a = 0; more && a < n; ++a)
      for (Element b = 0; more && b < n; ++b)
        if (e(lat.join_of(a, b)) != lat.join_of(e(a), e(b))) more = r.add({a, b});
  }
  {
    RuleRecorder r(rep, opts, "exists.idempotent");
    for (Element a = 0; a < n; ++a)
      if (e(e(a)) != e(a) && !r.add({a})) break;
  }
  {
    RuleRecorder r(rep, opts, "exists.closed-complement");
    for (Element a = 0; a < n; ++a)
      if (e(lat.perp(e(a))) != lat.perp(e(a)) && !r.add({a})) break;
  }
  if (!rep.passed()) return rep;

  Mask closed = 0;
  for (Element a = 0; a < n; ++a)
    if (e(a) == a) closed |= bit(a);
  bool sub = has(closed, lat.bot) && has(closed, lat.top);
  for_each_bit(closed, [&](Element a) {
    sub = sub && has(closed, lat.perp(a));
    for_each_bit(closed, [&](Element b) {
      sub = sub && has(closed, lat.meet_of(a, b)) && has(closed, lat.join_of(a, b));
    });
  });
  if (!sub) throw Error(Errc::InternalInconsistency, "closed elements of a quantifier are not a sub-ortholattice");
  rep.notes.push_back("derived: closed elements form a sub-ortholattice");
  return rep;
}

inline CheckReport check_quantifier(const QuantumMonadicAlgebra& q, const CheckOptions& opts = {}) {
  return check_quantifier(q.lat, q.exists, QuantifierMode::QuantumMonadic, opts);
}

/// Diamond axioms on a bounded quasi-implication algebra:
///   closure:            dd x . d x = 1 and x . d x = 1
///   closed-complement:  d(d x . 0) = d x . 0, and normal: d 0 = 0
///   additive:           d(((x.0).(y.0)).x) = ((d x.0).(d y.0)).d x
/// On success confirms d is idempotent and monotone for the induced order.
inline CheckReport check_mqia(const BoundedQIA& a, const UnaryOp& d, const CheckOptions& opts = {}) {
  check_unary_shape(a.size(), d);
  CheckReport rep;
  rep.subject = "monadic quasi-implication algebra";
  const auto n = static_cast<Element>(a.size());
  const Element zero = a.zero, one = a.one;
  {
    RuleRecorder r(rep, opts, "diamond.closure");
    for (Element x = 0; x < n; ++x)
      if (a.op(d(d(x)), d(x)) != one && !r.add({x})) break;
  }
  {
    RuleRecorder r(rep, opts, "diamond.extensive");
    for (Element x = 0; x < n; ++x)
      if (a.op(x, d(x)) != one && !r.add({x})) break;
  }
  {
    RuleRecorder r(rep, opts, "diamond.closed-complement");
    for (Element x = 0; x < n; ++x) {
      const Element c = a.op(d(x), zero);
      if (d(c) != c && !r.add({x})) break;
    }
  }
  {
    RuleRecorder r(rep, opts, "diamond.normal");
    if (d(zero) != zero) r.add({zero});
  }
  {
    RuleRecorder r(rep, opts, "diamond.additive");
    bool more = true;
    for (Element x = 0; more && x < n; ++x)
      for (Element y = 0; more && y < n; ++y) {
        const Element lhs = d(a.op(a.op(a.op(x, zero), a.op(y, zero)), x));
        const Element rhs = a.op(a.op(a.op(d(x), zero), a.op(d(y), zero)), d(x));
        if (lhs != rhs) more = r.add({x, y});
      }
  }
  if (!rep.passed()) return rep;

  for (Element x = 0; x < n; ++x) {
    if (d(d(x)) != d(x)) throw Error(Errc::InternalInconsistency, "diamond is not idempotent");
    for (Element y = 0; y < n; ++y)
      if (a.precedes(x, y) && !a.precedes(d(x), d(y)))
        throw Error(Errc::InternalInconsistency, "diamond is not monotone");
  }
  rep.notes.push_back("derived: diamond is idempotent");
  rep.notes.push_back("derived: diamond is monotone");
  return rep;
}

inline CheckReport check_mqia(const MonadicQIA& m, const CheckOptions& opts = {}) {
  return check_mqia(m.qia, m.diamond, opts);
}

inline QuantumMonadicAlgebra make_qma(FiniteOrtholattice lat, UnaryOp exists) {
  QuantumMonadicAlgebra q{std::move(lat), std::move(exists)};
  const auto rep = check_quantifier(q);
  if (!rep.passed())
    throw Error(Errc::InvalidStructure, "not a quantum monadic algebra (" + rep.violations.front().rule + ")");
  return q;
}

inline MonadicQIA make_mqia(BoundedQIA qia, UnaryOp diamond) {
  MonadicQIA m{std::move(qia), std::move(diamond)};
  const auto rep = check_mqia(m);
  if (!rep.passed())
    throw Error(Errc::InvalidStructure,
                "not a monadic quasi-implication algebra (" + rep.violations.front().rule + ")");
  return m;
}

/// Sasaki magma of the lattice with the quantifier reused as diamond.
inline MonadicQIA qma_to_mqia(const QuantumMonadicAlgebra& q) {
  if (!check_quantifier(q).passed()) throw Error(Errc::InvalidStructure, "qma_to_mqia needs a valid QMA");
  MonadicQIA m{oml_to_bqia(q.lat), q.exists};
  for (Element a = 0; a < static_cast<Element>(q.size()); ++a)
    if (m.qia.op(a, m.qia.zero) != q.lat.perp(a))
      throw Error(Errc::ConversionInconsistency, "a.0 differs from the orthocomplement");
  const auto rep = check_mqia(m);
  if (!rep.passed())
    throw Error(Errc::ConversionInconsistency, "converted algebra fails " + rep.violations.front().rule);
  return m;
}

/// Induced orthomodular lattice with the diamond reused as quantifier.
inline QuantumMonadicAlgebra mqia_to_qma(const MonadicQIA& m) {
  if (!check_mqia(m).passed()) throw Error(Errc::InvalidStructure, "mqia_to_qma needs a valid MQIA");
  QuantumMonadicAlgebra q{bqia_to_oml(m.qia), m.diamond};
  const auto n = static_cast<Element>(m.size());
  const auto& d = m.diamond;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (d(m.qia.join(a, b)) != m.qia.join(d(a), d(b)))
        throw Error(Errc::ConversionInconsistency, "diamond is not additive over the induced join");
  const auto rep = check_quantifier(q);
  if (!rep.passed())
    throw Error(Errc::ConversionInconsistency, "converted algebra fails " + rep.violations.front().rule);
  return q;
}

/// forall a = (exists a')'
inline Element forall_dual(const QuantumMonadicAlgebra& q, Element a) {
  return q.lat.perp(q.exists(q.lat.perp(a)));
}

inline UnaryOp forall_map(const QuantumMonadicAlgebra& q) {
  UnaryOp u;
  u.map.resize(q.size());
  for (std::size_t a = 0; a < q.size(); ++a) u.map[a] = forall_dual(q, static_cast<Element>(a));
  return u;
}

/// Searches for a, b with exists(a ^ exists b) != exists a ^ exists b, an
/// equation that holds in monadic Boolean algebras but can fail here.
inline std::optional<std::pair<Element, Element>> find_exists_meet_counterexample(
    const QuantumMonadicAlgebra& q) {
  const auto& lat = q.lat;
  const auto& e = q.exists;
  const auto n = static_cast<Element>(q.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (e(lat.meet_of(a, e(b))) != lat.meet_of(e(a), e(b))) return std::pair{a, b};
  return std::nullopt;
}

// Homomorphisms.

inline void check_map_shape(std::size_t src_n, std::size_t dst_n, const std::vector<Element>& map) {
  if (map.size() != src_n) throw Error(Errc::SizeMismatch, "map does not cover the source carrier");
  for (Element v : map)
    if (v < 0 || static_cast<std::size_t>(v) >= dst_n)
      throw Error(Errc::NoSuchElement, "map value outside the target carrier");
}

/// Bounded-lattice homomorphism preserving complements and the quantifier.
inline CheckReport check_qma_homomorphism(const QuantumMonadicAlgebra& src, const QuantumMonadicAlgebra& dst,
                                          const std::vector<Element>& h, const CheckOptions& opts = {}) {
  check_map_shape(src.size(), dst.size(), h);
  CheckReport rep;
  rep.subject = "qma homomorphism";
  const auto& s = src.lat;
  const auto& t = dst.lat;
  const auto n = static_cast<Element>(src.size());
  {
    RuleRecorder r(rep, opts, "hom.bottom");
    if (h[s.bot] != t.bot) r.add({s.bot});
  }
  {
    RuleRecorder r(rep, opts, "hom.top");
    if (h[s.top] != t.top) r.add({s.top});
  }
  {
    RuleRecorder r(rep, opts, "hom.meet");
    bool more = true;
    for (Element a = 0; more && a < n; ++a)
      for (Element b = 0; more && b < n; ++b)
        if (h[s.meet_of(a, b)] != t.meet_of(h[a], h[b])) more = r.add({a, b});
  }
  {
    RuleRecorder r(rep, opts, "hom.join");
    bool more = true;
    for (Element a = 0; more && a < n; ++a)
      for (Element b = 0; more && b < n; ++b)
        if (h[s.join_of(a, b)] != t.join_of(h[a], h[b])) more = r.add({a, b});
  }
  {
    RuleRecorder r(rep, opts, "hom.complement");
    for (Element a = 0; a < n; ++a)
      if (h[s.perp(a)] != t.perp(h[a]) && !r.add({a})) break;
  }
  {
    RuleRecorder r(rep, opts, "hom.exists");
    for (Element a = 0; a < n; ++a)
      if (h[src.exists(a)] != dst.exists(h[a]) && !r.add({a})) break;
  }
  return rep;
}

/// Preserves the product, zero and diamond; top preservation follows.
inline CheckReport check_mqia_homomorphism(const MonadicQIA& src, const MonadicQIA& dst,
                                           const std::vector<Element>& h, const CheckOptions& opts = {}) {
  check_map_shape(src.size(), dst.size(), h);
  CheckReport rep;
  rep.subject = "mqia homomorphism";
  const auto n = static_cast<Element>(src.size());
  {
    RuleRecorder r(rep, opts, "hom.product");
    bool more = true;
    for (Element a = 0; more && a < n; ++a)
      for (Element b = 0; more && b < n; ++b)
        if (h[src.qia.op(a, b)] != dst.qia.op(h[a], h[b])) more = r.add({a, b});
  }
  {
    RuleRecorder r(rep, opts, "hom.zero");
    if (h[src.qia.zero] != dst.qia.zero) r.add({src.qia.zero});
  }
  {
    RuleRecorder r(rep, opts, "hom.diamond");
    for (Element a = 0; a < n; ++a)
      if (h[src.diamond(a)] != dst.diamond(h[a]) && !r.add({a})) break;
  }
  if (rep.passed()) {
    if (h[src.qia.one] != dst.qia.one)
      throw Error(Errc::InternalInconsistency, "homomorphism does not preserve one");
    rep.notes.push_back("derived: h(1) = 1'");
  }
  return rep;
}

enum class HomKind { Qma, Mqia };

using MonadicStructure = std::variant<QuantumMonadicAlgebra, MonadicQIA>;

struct HomCandidate {
  const MonadicStructure* src = nullptr;
  const MonadicStructure* dst = nullptr;
  std::vector<Element> map;
};

/// Dispatches on `kind`; throws KindMismatch when the structures are not of
/// that kind.
inline CheckReport check_homomorphism(const HomCandidate& h, HomKind kind, const CheckOptions& opts = {}) {
  if (!h.src || !h.dst) throw Error(Errc::KindMismatch, "homomorphism candidate without structures");
  if (kind == HomKind::Qma) {
    const auto* s = std::get_if<QuantumMonadicAlgebra>(h.src);
    const auto* d = std::get_if<QuantumMonadicAlgebra>(h.dst);
    if (!s || !d) throw Error(Errc::KindMismatch, "qma homomorphism requested between non-QMA structures");
    return check_qma_homomorphism(*s, *d, h.map, opts);
  }
  const auto* s = std::get_if<MonadicQIA>(h.src);
  const auto* d = std::get_if<MonadicQIA>(h.dst);
  if (!s || !d) throw Error(Errc::KindMismatch, "mqia homomorphism requested between non-MQIA structures");
  return check_mqia_homomorphism(*s, *d, h.map, opts);
}

namespace detail {

inline bool is_qma_hom(const QuantumMonadicAlgebra& src, const QuantumMonadicAlgebra& dst,
                       const std::vector<Element>& h) {
  const auto& s = src.lat;
  const auto& t = dst.lat;
  if (h[s.bot] != t.bot || h[s.top] != t.top) return false;
  const auto n = static_cast<Element>(src.size());
  for (Element a = 0; a < n; ++a) {
    if (h[s.perp(a)] != t.perp(h[a]) || h[src.exists(a)] != dst.exists(h[a])) return false;
    for (Element b = 0; b < n; ++b)
      if (h[s.meet_of(a, b)] != t.meet_of(h[a], h[b]) || h[s.join_of(a, b)] != t.join_of(h[a], h[b]))
        return false;
  }
  return true;
}

inline bool is_mqia_hom(const MonadicQIA& src, const MonadicQIA& dst, const std::vector<Element>& h) {
  if (h[src.qia.zero] != dst.qia.zero) return false;
  const auto n = static_cast<Element>(src.size());
  for (Element a = 0; a < n; ++a) {
    if (h[src.diamond(a)] != dst.diamond(h[a])) return false;
    for (Element b = 0; b < n; ++b)
      if (h[src.qia.op(a, b)] != dst.qia.op(h[a], h[b])) return false;
  }
  return true;
}

}  // namespace detail

struct HomSearchOptions {
  unsigned workers = 1;
  std::uint64_t max_maps = 100'000'000;
  /// When set, only these maps are examined instead of all set maps.
  std::optional<std::vector<std::vector<Element>>> candidates;
};

struct HomCorrespondence {
  CheckReport report;
  std::uint64_t maps_checked = 0;
  std::vector<std::vector<Element>> qma_homs;   // sorted
  std::vector<std::vector<Element>> mqia_homs;  // sorted
};

/// For every set map h: src -> dst, h is a QMA homomorphism iff it is an
/// MQIA homomorphism between the converted algebras. Each disagreement is a
/// "correspondence" violation. Throws TooLarge when dst^src exceeds the cap.
inline HomCorrespondence hom_correspondence(const QuantumMonadicAlgebra& src, const QuantumMonadicAlgebra& dst,
                                            const HomSearchOptions& opts = {}) {
  const auto src_m = qma_to_mqia(src);
  const auto dst_m = qma_to_mqia(dst);
  const std::size_t sn = src.size(), dn = dst.size();

  HomCorrespondence out;
  out.report.subject = "hom correspondence";
  struct Slice {
    std::vector<std::vector<Element>> qma, mqia, discrepancies;
    std::uint64_t checked = 0;
  };
  auto classify = [&](const std::vector<Element>& h, Slice& slice) {
    const bool q = detail::is_qma_hom(src, dst, h);
    const bool m = detail::is_mqia_hom(src_m, dst_m, h);
    if (q) slice.qma.push_back(h);
    if (m) slice.mqia.push_back(h);
    if (q != m) slice.discrepancies.push_back(h);
    ++slice.checked;
  };

  std::vector<Slice> slices;
  if (opts.candidates) {
    for (const auto& h : *opts.candidates) check_map_shape(sn, dn, h);
    slices.resize(opts.candidates->size());
    detail::parallel_for(slices.size(), opts.workers,
                         [&](std::size_t i) { classify((*opts.candidates)[i], slices[i]); });
  } else {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < sn; ++i) {
      total *= dn;
      if (total > opts.max_maps)
        throw Error(Errc::TooLarge, "set maps " + std::to_string(dn) + "^" + std::to_string(sn) +
                                        " exceed the cap of " + std::to_string(opts.max_maps));
    }
    // Partition by the image of the first element.
    slices.resize(dn);
    detail::parallel_for(dn, opts.workers, [&](std::size_t first) {
      std::vector<Element> h(sn, 0);
      h[0] = static_cast<Element>(first);
      while (true) {
        classify(h, slices[first]);
        std::size_t i = sn;
        while (i > 1) {
          --i;
          if (++h[i] < static_cast<Element>(dn)) break;
          h[i] = 0;
          if (i == 1) return;
        }
        if (sn <= 1) return;
      }
    });
  }
  for (auto& s : slices) {
    out.maps_checked += s.checked;
    for (auto& h : s.qma) out.qma_homs.push_back(std::move(h));
    for (auto& h : s.mqia) out.mqia_homs.push_back(std::move(h));
    for (auto& h : s.discrepancies) out.report.violations.push_back({"correspondence", h, {}});
  }
  std::sort(out.qma_homs.begin(), out.qma_homs.end());
  std::sort(out.mqia_homs.begin(), out.mqia_homs.end());
  std::sort(out.report.violations.begin(), out.report.violations.end(),
            [](const Violation& a, const Violation& b) { return a.witness < b.witness; });
  return out;
}

}  // namespace qlogic
