#pragma once

// Orthoframes and monadic orthoframes, the lattice of bi-orthogonally closed
// sets, the MacLaren and Goldblatt constructions from (monadic) bounded
// quasi-implication algebras, and the embeddings of an algebra into the
// completion of its frame.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "monadic.hpp"
#include "quasi_implication.hpp"
#include "report.hpp"

namespace qlogic {

/// Points with an orthogonality relation; perp[p] holds every q with p _|_ q.
struct OrthoFrame {
  std::string name;
  std::vector<std::string> labels;
  std::vector<Mask> perp;
  Provenance provenance;

  std::size_t size() const { return labels.size(); }
  PointSet all() const { return PointSet::all(size()); }
  bool orthogonal(Element p, Element q) const { return has(perp[p], q); }
};

/// Orthoframe with an accessibility relation; rel[p] is R[{p}].
struct MonadicOrthoFrame {
  OrthoFrame frame;
  std::vector<Mask> rel;

  std::size_t size() const { return frame.size(); }
  PointSet image(PointSet u) const { return PointSet(relational_image(rel, u.bits())); }
};

/// Set of algebra elements.
struct Filter {
  Mask elements = 0;

  bool contains(Element x) const { return has(elements, x); }
  std::vector<Element> sorted() const { return elements_of(elements); }
  friend bool operator==(Filter, Filter) = default;
};

inline std::string format_set(const std::vector<std::string>& labels, Mask m) {
  std::string out = "{";
  bool first = true;
  for_each_bit(m, [&](Element i) {
    out += (first ? "" : ",") + labels[i];
    first = false;
  });
  return out + "}";
}

inline void check_frame_shape(const OrthoFrame& f) {
  if (f.size() > kMaxSize) throw Error(Errc::TooLarge, "frames are capped at 64 points");
  if (f.perp.size() != f.size()) throw Error(Errc::SizeMismatch, "perp matrix does not match point count");
  for (Mask row : f.perp)
    if ((row & ~full_mask(f.size())) != 0) throw Error(Errc::SizeMismatch, "perp row out of range");
}

/// Irreflexive and symmetric.
inline CheckReport check_orthoframe(const OrthoFrame& f, const CheckOptions& opts = {}) {
  check_frame_shape(f);
  CheckReport rep;
  rep.subject = "orthoframe";
  const auto m = static_cast<Element>(f.size());
  {
    RuleRecorder r(rep, opts, "perp.irreflexive");
    for (Element p = 0; p < m; ++p)
      if (f.orthogonal(p, p) && !r.add({p})) break;
  }
  {
    RuleRecorder r(rep, opts, "perp.symmetric");
    bool more = true;
    for (Element p = 0; more && p < m; ++p)
      for (Element q = 0; more && q < m; ++q)
        if (f.orthogonal(p, q) && !f.orthogonal(q, p)) more = r.add({p, q});
  }
  if (m == 0) {
    rep.degenerate = true;
    rep.notes.push_back("degenerate: empty frame");
  }
  return rep;
}

/// Points orthogonal to every point of u.
inline PointSet perp_of(const OrthoFrame& f, PointSet u) {
  if ((u.bits() & ~full_mask(f.size())) != 0) throw Error(Errc::NoSuchElement, "point set out of range");
  Mask out = 0;
  for (std::size_t x = 0; x < f.size(); ++x)
    if ((u.bits() & ~f.perp[x]) == 0) out |= bit(static_cast<Element>(x));
  return PointSet(out);
}

inline PointSet biorthogonal_closure(const OrthoFrame& f, PointSet u) { return perp_of(f, perp_of(f, u)); }

/// R[U] closed twice under orthogonality.
inline PointSet exists_R(const MonadicOrthoFrame& mf, PointSet u) {
  return biorthogonal_closure(mf.frame, mf.image(u));
}

/// The bi-orthogonally closed sets in ascending bit order (so the empty set
/// comes first and the whole frame last), packaged as an ortholattice with
/// meet = intersection, join = (U u V)'' and complement U'.
struct BiorthoLattice {
  std::vector<PointSet> closed;
  FiniteOrtholattice lattice;
  std::optional<UnaryOp> exists_r;

  std::optional<Element> index_of(PointSet u) const {
    auto it = std::lower_bound(closed.begin(), closed.end(), u);
    if (it == closed.end() || *it != u) return std::nullopt;
    return static_cast<Element>(it - closed.begin());
  }
};

enum class ClosureStrategy { Auto, Exhaustive, Seeded };

struct ClosureOptions {
  ClosureStrategy strategy = ClosureStrategy::Auto;
  std::size_t exhaustive_limit = 20;
  std::size_t max_closed_sets = std::size_t{1} << 20;
};

inline std::vector<PointSet> closed_sets(const OrthoFrame& f, const ClosureOptions& opts = {}) {
  check_frame_shape(f);
  const std::size_t m = f.size();
  auto strategy = opts.strategy;
  if (strategy == ClosureStrategy::Auto)
    strategy = m <= opts.exhaustive_limit ? ClosureStrategy::Exhaustive : ClosureStrategy::Seeded;

  std::vector<PointSet> out;
  if (strategy == ClosureStrategy::Exhaustive) {
    if (m > opts.exhaustive_limit)
      throw Error(Errc::TooLarge, "exhaustive closure scan capped at " + std::to_string(opts.exhaustive_limit) +
                                      " points");
    for (Mask u = 0; u <= full_mask(m); ++u) {
      if (biorthogonal_closure(f, PointSet(u)).bits() == u) out.emplace_back(u);
      if (out.size() > opts.max_closed_sets) throw Error(Errc::TooLarge, "too many closed sets");
    }
    return out;
  }
  // Every closed set is an intersection of sets {p}'.
  std::set<Mask> family{full_mask(m)};
  std::vector<Mask> work{full_mask(m)};
  std::vector<Mask> seeds;
  for (std::size_t p = 0; p < m; ++p) seeds.push_back(perp_of(f, PointSet::single(static_cast<Element>(p))).bits());
  while (!work.empty()) {
    const Mask s = work.back();
    work.pop_back();
    for (Mask seed : seeds) {
      const Mask next = s & seed;
      if (family.insert(next).second) {
        if (family.size() > opts.max_closed_sets) throw Error(Errc::TooLarge, "too many closed sets");
        work.push_back(next);
      }
    }
  }
  for (Mask u : family) out.emplace_back(u);
  return out;
}

/// Builds B(X) and validates it as an ortholattice.
inline BiorthoLattice bi_ortho_lattice(const OrthoFrame& f, const ClosureOptions& opts = {}) {
  BiorthoLattice b;
  b.closed = closed_sets(f, opts);
  const auto k = static_cast<Element>(b.closed.size());
  if (static_cast<std::size_t>(k) > kMaxSize) throw Error(Errc::TooLarge, "B(X) larger than 64 elements");
  auto idx = [&](PointSet u) {
    auto i = b.index_of(u);
    if (!i) throw Error(Errc::InternalInconsistency, "closed-set operation left B(X)");
    return *i;
  };
  auto& lat = b.lattice;
  lat.name = "B(" + f.name + ")";
  lat.names.reserve(k);
  lat.up.assign(k, 0);
  lat.ocomp.resize(k);
  lat.meet.resize(static_cast<std::size_t>(k) * k);
  lat.join.resize(static_cast<std::size_t>(k) * k);
  for (Element i = 0; i < k; ++i) {
    const PointSet u = b.closed[i];
    lat.names.push_back(format_set(f.labels, u.bits()));
    lat.ocomp[i] = idx(perp_of(f, u));
    for (Element j = 0; j < k; ++j) {
      const PointSet v = b.closed[j];
      if (u.subset_of(v)) lat.up[i] |= bit(j);
      lat.meet[i * k + j] = idx(u & v);
      lat.join[i * k + j] = idx(biorthogonal_closure(f, u | v));
    }
  }
  const auto rep = check_ortholattice(lat);
  if (!rep.passed())
    throw Error(Errc::InternalInconsistency, "B(X) fails " + rep.violations.front().rule);
  return b;
}

/// B(X) of a monadic frame, with exists_R tabulated over the closed sets.
inline BiorthoLattice bi_ortho_lattice(const MonadicOrthoFrame& mf, const ClosureOptions& opts = {}) {
  auto b = bi_ortho_lattice(mf.frame, opts);
  UnaryOp e;
  for (PointSet u : b.closed) {
    auto i = b.index_of(exists_R(mf, u));
    if (!i) throw Error(Errc::InternalInconsistency, "exists_R left B(X)");
    e.map.push_back(*i);
  }
  b.exists_r = std::move(e);
  return b;
}

/// Orthoframe axioms plus: R reflexive, R transitive, and for every point p,
/// R[R[{p}]'] is contained in R[{p}]'.
inline CheckReport check_monadic_orthoframe(const MonadicOrthoFrame& mf, const CheckOptions& opts = {}) {
  CheckReport rep = check_orthoframe(mf.frame, opts);
  rep.subject = "monadic orthoframe";
  const auto m = static_cast<Element>(mf.size());
  if (mf.rel.size() != mf.size()) throw Error(Errc::SizeMismatch, "rel matrix does not match point count");
  for (Mask row : mf.rel)
    if ((row & ~full_mask(mf.size())) != 0) throw Error(Errc::SizeMismatch, "rel row out of range");
  {
    RuleRecorder r(rep, opts, "rel.reflexive");
    for (Element p = 0; p < m; ++p)
      if (!has(mf.rel[p], p) && !r.add({p})) break;
  }
  {
    RuleRecorder r(rep, opts, "rel.transitive");
    bool more = true;
    for (Element p = 0; more && p < m; ++p)
      for_each_bit(mf.rel[p], [&](Element q) {
        for_each_bit(mf.rel[q], [&](Element s) {
          if (more && !has(mf.rel[p], s)) more = r.add({p, q, s});
        });
      });
  }
  {
    RuleRecorder r(rep, opts, "rel.perp-closed");
    for (Element p = 0; p < m; ++p) {
      const PointSet orth = perp_of(mf.frame, PointSet(mf.rel[p]));
      if (!mf.image(orth).subset_of(orth) && !r.add({p})) break;
    }
  }
  if (rep.passed()) {
    for (Element p = 0; p < m; ++p) {
      const PointSet orth = perp_of(mf.frame, PointSet(mf.rel[p]));
      if (mf.image(orth) != orth)
        throw Error(Errc::InternalInconsistency, "R[R[{p}]'] differs from R[{p}]' on a reflexive frame");
    }
    rep.notes.push_back("derived: R[R[{p}]'] = R[{p}]' for every point");
  }
  return rep;
}

// Constructions from bounded quasi-implication algebras.

inline std::vector<Element> nonzero_elements(const BoundedQIA& a) {
  std::vector<Element> out;
  for (Element x = 0; x < static_cast<Element>(a.size()); ++x)
    if (x != a.zero) out.push_back(x);
  return out;
}

/// Points are the nonzero elements; x _|_ y iff x.(y.0) = 1.
inline OrthoFrame maclaren_frame(const BoundedQIA& a) {
  const auto pts = nonzero_elements(a);
  OrthoFrame f;
  f.name = "maclaren(" + a.magma.name + ")";
  f.provenance = {a.magma.name, "maclaren_frame", structure_hash(a.magma)};
  f.perp.assign(pts.size(), 0);
  for (std::size_t p = 0; p < pts.size(); ++p) {
    f.labels.push_back(a.names()[pts[p]]);
    for (std::size_t q = 0; q < pts.size(); ++q)
      if (a.op(pts[p], a.complement(pts[q])) == a.one) f.perp[p] |= bit(static_cast<Element>(q));
  }
  if (!check_orthoframe(f).passed())
    throw Error(Errc::ConversionInconsistency, "MacLaren frame is not an orthoframe");
  return f;
}

/// Non-empty, upward closed for x.y = 1 and closed under ((x.y).(x.0)).0.
inline bool is_filter(const BoundedQIA& a, Mask s) {
  if (s == 0) return false;
  const auto n = static_cast<Element>(a.size());
  bool ok = true;
  for_each_bit(s, [&](Element x) {
    for (Element y = 0; ok && y < n; ++y)
      if (a.precedes(x, y) && !has(s, y)) ok = false;
    for_each_bit(s, [&](Element y) {
      if (ok && !has(s, a.meet_shortcut(x, y))) ok = false;
    });
  });
  return ok;
}

/// Smallest filter containing `seed`.
inline Filter generate_filter(const BoundedQIA& a, Mask seed) {
  const auto n = static_cast<Element>(a.size());
  Mask s = seed;
  while (true) {
    Mask next = s;
    for_each_bit(s, [&](Element x) {
      for (Element y = 0; y < n; ++y)
        if (a.precedes(x, y)) next |= bit(y);
      for_each_bit(s, [&](Element y) { next |= bit(a.meet_shortcut(x, y)); });
    });
    if (next == s) return Filter{s};
    s = next;
  }
}

inline bool filter_less(Filter a, Filter b) { return a.sorted() < b.sorted(); }

struct FilterOptions {
  std::size_t max_filters = kMaxSize;
};

/// Proper filters, sorted by their element lists. Starts from principal
/// filters and closes the family under joins of pairs (the filter generated
/// by a union) until nothing new and proper appears.
inline std::vector<Filter> enumerate_proper_filters(const BoundedQIA& a, const FilterOptions& opts = {}) {
  std::vector<Mask> found;
  std::set<Mask> seen;
  auto add = [&](Filter f) {
    if (f.contains(a.zero) || !seen.insert(f.elements).second) return;
    found.push_back(f.elements);
    if (found.size() > opts.max_filters)
      throw Error(Errc::TooLarge, "more than " + std::to_string(opts.max_filters) + " proper filters");
  };
  for (Element x = 0; x < static_cast<Element>(a.size()); ++x) add(generate_filter(a, bit(x)));
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(generate_filter(a, found[i] | found[j]));
  std::vector<Filter> out;
  for (Mask m : found) out.push_back(Filter{m});
  std::sort(out.begin(), out.end(), filter_less);
  return out;
}

/// Points are the proper filters; alpha _|_ beta iff some x in alpha has
/// x.0 in beta.
inline OrthoFrame goldblatt_frame(const BoundedQIA& a, const std::vector<Filter>& filters) {
  OrthoFrame f;
  f.name = "goldblatt(" + a.magma.name + ")";
  f.provenance = {a.magma.name, "goldblatt_frame", structure_hash(a.magma)};
  f.perp.assign(filters.size(), 0);
  for (std::size_t p = 0; p < filters.size(); ++p) {
    f.labels.push_back(format_set(a.names(), filters[p].elements));
    for (std::size_t q = 0; q < filters.size(); ++q) {
      bool orth = false;
      for_each_bit(filters[p].elements, [&](Element x) { orth = orth || filters[q].contains(a.complement(x)); });
      if (orth) f.perp[p] |= bit(static_cast<Element>(q));
    }
  }
  // Same relation through the induced lattice complement.
  const auto lat = bqia_to_oml(a);
  for (std::size_t p = 0; p < filters.size(); ++p)
    for (std::size_t q = 0; q < filters.size(); ++q) {
      bool orth = false;
      for_each_bit(filters[p].elements, [&](Element x) { orth = orth || filters[q].contains(lat.perp(x)); });
      if (orth != f.orthogonal(static_cast<Element>(p), static_cast<Element>(q)))
        throw Error(Errc::ConversionInconsistency, "Goldblatt relation differs from its lattice form");
    }
  if (!check_orthoframe(f).passed())
    throw Error(Errc::ConversionInconsistency, "Goldblatt frame is not an orthoframe");
  return f;
}

inline OrthoFrame goldblatt_frame(const BoundedQIA& a) {
  return goldblatt_frame(a, enumerate_proper_filters(a));
}

/// MacLaren frame with x R y iff y.(diamond x) = 1.
inline MonadicOrthoFrame monadic_maclaren_frame(const MonadicQIA& m) {
  const auto& a = m.qia;
  const auto& d = m.diamond;
  MonadicOrthoFrame mf{maclaren_frame(a), {}};
  const auto pts = nonzero_elements(a);
  mf.rel.assign(pts.size(), 0);
  for (std::size_t p = 0; p < pts.size(); ++p)
    for (std::size_t q = 0; q < pts.size(); ++q)
      if (a.op(pts[q], d(pts[p])) == a.one) mf.rel[p] |= bit(static_cast<Element>(q));
  // R[{x}]' = { y != 0 : y.(diamond x . 0) = 1 }
  for (std::size_t p = 0; p < pts.size(); ++p) {
    Mask expected = 0;
    for (std::size_t q = 0; q < pts.size(); ++q)
      if (a.op(pts[q], a.complement(d(pts[p]))) == a.one) expected |= bit(static_cast<Element>(q));
    if (perp_of(mf.frame, PointSet(mf.rel[p])).bits() != expected)
      throw Error(Errc::ConversionInconsistency, "R[{x}]' differs from its closed form at " + a.names()[pts[p]]);
  }
  if (!check_monadic_orthoframe(mf).passed())
    throw Error(Errc::ConversionInconsistency, "monadic MacLaren frame is not a monadic orthoframe");
  return mf;
}

/// Goldblatt frame with alpha R beta iff diamond[alpha] is contained in beta.
inline MonadicOrthoFrame monadic_goldblatt_frame(const MonadicQIA& m) {
  const auto& a = m.qia;
  const auto& d = m.diamond;
  const auto filters = enumerate_proper_filters(a);
  MonadicOrthoFrame mf{goldblatt_frame(a, filters), {}};
  const std::size_t k = filters.size();
  mf.rel.assign(k, 0);
  std::vector<Mask> image(k, 0);
  for (std::size_t p = 0; p < k; ++p) {
    for_each_bit(filters[p].elements, [&](Element x) { image[p] |= bit(d(x)); });
    for (std::size_t q = 0; q < k; ++q)
      if ((image[p] & ~filters[q].elements) == 0) mf.rel[p] |= bit(static_cast<Element>(q));
  }
  // R[{alpha}]' = { beta : diamond x . 0 in beta for some x in alpha }
  for (std::size_t p = 0; p < k; ++p) {
    Mask expected = 0;
    for (std::size_t q = 0; q < k; ++q)
      for_each_bit(filters[p].elements, [&](Element x) {
        if (filters[q].contains(a.complement(d(x)))) expected |= bit(static_cast<Element>(q));
      });
    if (perp_of(mf.frame, PointSet(mf.rel[p])).bits() != expected)
      throw Error(Errc::ConversionInconsistency,
                  "R[{alpha}]' differs from its closed form at " + mf.frame.labels[p]);
  }
  if (!check_monadic_orthoframe(mf).passed())
    throw Error(Errc::ConversionInconsistency, "monadic Goldblatt frame is not a monadic orthoframe");
  return mf;
}

// Embeddings into the completion.

enum class Construction { MacLaren, Goldblatt };

inline std::string_view to_string(Construction c) {
  return c == Construction::MacLaren ? "maclaren" : "goldblatt";
}

struct EmbeddingReport {
  Construction construction = Construction::MacLaren;
  bool monadic = false;
  MonadicOrthoFrame frame;  // rel is empty unless monadic
  BiorthoLattice completion;
  std::vector<PointSet> image;  // per algebra element
  std::optional<std::vector<Element>> isomorphism;
  bool completion_orthomodular = false;
  CheckReport report;
};

namespace detail {

inline EmbeddingReport embed(const BoundedQIA& a, const UnaryOp* diamond, Construction c,
                             const CheckOptions& opts) {
  EmbeddingReport out;
  out.construction = c;
  out.monadic = diamond != nullptr;
  out.report.subject = std::string(c == Construction::MacLaren ? "psi" : "phi") + " embedding";
  const auto n = static_cast<Element>(a.size());

  std::vector<Filter> filters;
  if (c == Construction::MacLaren) {
    if (diamond) out.frame = monadic_maclaren_frame(MonadicQIA{a, *diamond});
    else out.frame.frame = maclaren_frame(a);
    const auto pts = nonzero_elements(a);
    for (Element x = 0; x < n; ++x) {
      PointSet s;
      for (std::size_t p = 0; p < pts.size(); ++p)
        if (a.precedes(pts[p], x)) s.insert(static_cast<Element>(p));
      out.image.push_back(s);
    }
  } else {
    filters = enumerate_proper_filters(a);
    if (diamond) out.frame = monadic_goldblatt_frame(MonadicQIA{a, *diamond});
    else out.frame.frame = goldblatt_frame(a, filters);
    for (Element x = 0; x < n; ++x) {
      PointSet s;
      for (std::size_t p = 0; p < filters.size(); ++p)
        if (filters[p].contains(x)) s.insert(static_cast<Element>(p));
      out.image.push_back(s);
    }
  }
  out.completion = diamond ? bi_ortho_lattice(out.frame) : bi_ortho_lattice(out.frame.frame);
  const auto& f = out.frame.frame;
  const auto& img = out.image;
  auto& rep = out.report;

  {
    RuleRecorder r(rep, opts, "embed.closed");
    for (Element x = 0; x < n; ++x)
      if (biorthogonal_closure(f, img[x]) != img[x] && !r.add({x})) break;
  }
  {
    RuleRecorder r(rep, opts, "embed.injective");
    bool more = true;
    for (Element x = 0; more && x < n; ++x)
      for (Element y = x + 1; more && y < n; ++y)
        if (img[x] == img[y]) more = r.add({x, y});
  }
  {
    RuleRecorder r(rep, opts, "embed.meet");
    bool more = true;
    for (Element x = 0; more && x < n; ++x)
      for (Element y = 0; more && y < n; ++y)
        if (img[a.meet(x, y)] != (img[x] & img[y])) more = r.add({x, y});
  }
  {
    RuleRecorder r(rep, opts, "embed.join");
    bool more = true;
    for (Element x = 0; more && x < n; ++x)
      for (Element y = 0; more && y < n; ++y)
        if (img[a.join(x, y)] != biorthogonal_closure(f, img[x] | img[y])) more = r.add({x, y});
  }
  {
    RuleRecorder r(rep, opts, "embed.complement");
    for (Element x = 0; x < n; ++x)
      if (img[a.complement(x)] != perp_of(f, img[x]) && !r.add({x})) break;
  }
  if (diamond) {
    RuleRecorder r(rep, opts, "embed.diamond");
    for (Element x = 0; x < n; ++x)
      if (img[(*diamond)(x)] != exists_R(out.frame, img[x]) && !r.add({x})) break;
    const auto q = check_quantifier(out.completion.lattice, *out.completion.exists_r,
                                    QuantifierMode::MonadicOrtholattice);
    RuleRecorder rq(rep, opts, "completion.quantifier");
    if (!q.passed()) rq.add(q.violations.front().witness, q.violations.front().rule);
  }
  {
    RuleRecorder r(rep, opts, "embed.surjective");
    Mask hit = 0;
    for (Element x = 0; x < n; ++x)
      if (auto i = out.completion.index_of(img[x])) hit |= bit(*i);
    for (Element i = 0; i < static_cast<Element>(out.completion.closed.size()); ++i)
      if (!has(hit, i) && !r.add({i}, out.completion.lattice.names[i])) break;
  }

  const auto source = bqia_to_oml(a);
  out.isomorphism = find_isomorphism(source, out.completion.lattice);
  {
    RuleRecorder r(rep, opts, "embed.isomorphism");
    if (!out.isomorphism) {
      r.add({}, "no isomorphism between the algebra and B(X)");
    } else if (rep.passed()) {
      std::vector<Element> via(n);
      for (Element x = 0; x < n; ++x) via[x] = *out.completion.index_of(img[x]);
      if (!is_isomorphism(source, out.completion.lattice, via)) r.add({}, "embedding map is not an isomorphism");
    }
  }
  out.completion_orthomodular = check_orthomodular(out.completion.lattice).passed();
  rep.notes.push_back(std::string("B(X) orthomodular: ") + (out.completion_orthomodular ? "yes" : "no"));
  return out;
}

}  // namespace detail

/// psi(x) = nonzero y below x (MacLaren) or phi(x) = proper filters
/// containing x (Goldblatt), with checks that the images are closed, the map
/// is injective, preserves meet/join/complement, is onto B(X), and that
/// find_isomorphism confirms B(X) is isomorphic to the induced lattice.
inline EmbeddingReport embedding(const BoundedQIA& a, Construction c, const CheckOptions& opts = {}) {
  return detail::embed(a, nullptr, c, opts);
}

/// Monadic variant: additionally checks image(diamond x) = exists_R image(x)
/// and that exists_R is a quantifier on B(X).
inline EmbeddingReport embedding(const MonadicQIA& m, Construction c, const CheckOptions& opts = {}) {
  return detail::embed(m.qia, &m.diamond, c, opts);
}

}  // namespace qlogic
