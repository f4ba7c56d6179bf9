#pragma once

// Finite ortholattices and orthomodular lattices: validation, implication
// polynomials, Benzene-ring search and isomorphism search.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "report.hpp"

namespace qlogic {

/// A finite lattice with an orthocomplementation. Elements are indices into
/// `names` in declaration order. `up[a]` holds every b with a <= b.
/// `meet` and `join` are row-major n*n tables; they may be left empty on a
/// candidate and are filled in by check_ortholattice.
struct FiniteOrtholattice {
  std::string name;
  std::vector<std::string> names;
  std::vector<Mask> up;
  std::vector<Element> meet;
  std::vector<Element> join;
  std::vector<Element> ocomp;
  Element bot = 0;
  Element top = 0;
  Provenance provenance;

  std::size_t size() const { return names.size(); }
  bool degenerate() const { return names.size() == 1; }

  bool leq(Element a, Element b) const { return has(up[a], b); }
  Element meet_of(Element a, Element b) const { return meet[a * size() + b]; }
  Element join_of(Element a, Element b) const { return join[a * size() + b]; }
  Element perp(Element a) const { return ocomp[a]; }

  Mask all() const { return full_mask(size()); }

  Mask down(Element a) const {
    Mask out = 0;
    for (std::size_t b = 0; b < size(); ++b)
      if (has(up[b], a)) out |= bit(static_cast<Element>(b));
    return out;
  }

  std::optional<Element> find(const std::string& label) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == label) return static_cast<Element>(i);
    return std::nullopt;
  }

  /// Index of a named element; throws NoSuchElement.
  Element at(const std::string& label) const {
    if (auto i = find(label)) return *i;
    throw Error(Errc::NoSuchElement, "no element named '" + label + "'");
  }
};

/// Structural equality: same carrier, order, tables and bounds.
inline bool same_structure(const FiniteOrtholattice& a, const FiniteOrtholattice& b) {
  return a.names == b.names && a.up == b.up && a.meet == b.meet && a.join == b.join &&
         a.ocomp == b.ocomp && a.bot == b.bot && a.top == b.top;
}

inline std::uint64_t structure_hash(const FiniteOrtholattice& lat) {
  return table_hash(lat.ocomp, table_hash(lat.up));
}

/// Builds a candidate from generating order pairs (a <= b); the closure is
/// taken during validation.
inline FiniteOrtholattice make_ortholattice(std::vector<std::string> names,
                                            const std::vector<std::pair<Element, Element>>& order,
                                            std::vector<Element> ocomp, std::string name = {}) {
  FiniteOrtholattice lat;
  lat.name = std::move(name);
  const std::size_t n = names.size();
  lat.names = std::move(names);
  lat.up.assign(n, 0);
  for (auto [a, b] : order) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      throw Error(Errc::NoSuchElement, "order pair out of range");
    lat.up[a] |= bit(b);
  }
  lat.ocomp = std::move(ocomp);
  return lat;
}

namespace detail {

inline std::vector<Mask> downsets(const std::vector<Mask>& up) {
  std::vector<Mask> down(up.size(), 0);
  for (std::size_t a = 0; a < up.size(); ++a)
    for_each_bit(up[a], [&](Element b) { down[b] |= bit(static_cast<Element>(a)); });
  return down;
}

/// Greatest element of `lower` that lies above every element of `lower`.
inline std::optional<Element> greatest_in(Mask candidates, const std::vector<Mask>& down) {
  std::optional<Element> found;
  for_each_bit(candidates, [&](Element g) {
    if (!found && (candidates & ~down[g]) == 0) found = g;
  });
  return found;
}

}  // namespace detail

/// Validates bounded-lattice structure and the orthocomplement laws. Closes
/// the order reflexively and transitively, and fills meet/join tables and
/// bot/top when they are absent. Throws SizeMismatch when arrays disagree and
/// NotALattice (naming the pair) when some pair lacks a meet or join.
inline CheckReport check_ortholattice(FiniteOrtholattice& lat, const CheckOptions& opts = {}) {
  CheckReport rep;
  rep.subject = "ortholattice";
  const std::size_t n = lat.size();
  if (n == 0) throw Error(Errc::SizeMismatch, "empty carrier");
  if (n > kMaxSize) throw Error(Errc::TooLarge, "ortholattice larger than 64 elements");
  if (lat.up.size() != n || lat.ocomp.size() != n)
    throw Error(Errc::SizeMismatch, "order/ocomp arrays do not match element count");
  if ((!lat.meet.empty() && lat.meet.size() != n * n) ||
      (!lat.join.empty() && lat.join.size() != n * n))
    throw Error(Errc::SizeMismatch, "meet/join tables do not match element count");
  if (lat.meet.empty() != lat.join.empty())
    throw Error(Errc::SizeMismatch, "meet and join tables must be given together");
  for (std::size_t a = 0; a < n; ++a) {
    if ((lat.up[a] & ~full_mask(n)) != 0) throw Error(Errc::SizeMismatch, "order row out of range");
    if (lat.ocomp[a] < 0 || static_cast<std::size_t>(lat.ocomp[a]) >= n)
      throw Error(Errc::NoSuchElement, "ocomp entry out of range for '" + lat.names[a] + "'");
  }
  for (std::size_t i = 0; i < lat.meet.size(); ++i) {
    if (lat.meet[i] < 0 || static_cast<std::size_t>(lat.meet[i]) >= n ||
        lat.join[i] < 0 || static_cast<std::size_t>(lat.join[i]) >= n)
      throw Error(Errc::NoSuchElement, "meet/join table entry out of range");
  }

  lat.up = reflexive_transitive_closure(std::move(lat.up));
  {
    RuleRecorder r(rep, opts, "order.antisymmetric");
    bool more = true;
    for (Element a = 0; more && a < static_cast<Element>(n); ++a)
      for (Element b = a + 1; more && b < static_cast<Element>(n); ++b)
        if (lat.leq(a, b) && lat.leq(b, a)) more = r.add({a, b});
    if (r.any()) return rep;  // tables are meaningless without a partial order
  }

  const auto down = detail::downsets(lat.up);
  const bool derive = lat.meet.empty();
  if (derive) {
    lat.meet.assign(n * n, 0);
    lat.join.assign(n * n, 0);
  }
  RuleRecorder meet_rule(rep, opts, "lattice.meet");
  RuleRecorder join_rule(rep, opts, "lattice.join");
  bool meet_more = true, join_more = true;
  for (Element a = 0; a < static_cast<Element>(n); ++a) {
    for (Element b = 0; b < static_cast<Element>(n); ++b) {
      const Mask lower = down[a] & down[b];
      const Mask upper = lat.up[a] & lat.up[b];
      const auto glb = detail::greatest_in(lower, down);
      const auto lub = detail::greatest_in(upper, lat.up);  // least: everything in upper is above it
      if (!glb || !lub) {
        if (derive) {
          throw Error(Errc::NotALattice, "pair (" + lat.names[a] + ", " + lat.names[b] + ") has no " +
                                             (glb ? "join" : "meet"));
        }
      }
      if (derive) {
        lat.meet[a * n + b] = *glb;
        lat.join[a * n + b] = *lub;
        continue;
      }
      if (meet_more && (!glb || lat.meet_of(a, b) != *glb)) meet_more = meet_rule.add({a, b});
      if (join_more && (!lub || lat.join_of(a, b) != *lub)) join_more = join_rule.add({a, b});
    }
  }
  if (!rep.passed()) return rep;

  // Bounds: the meet/join of the whole carrier.
  Element bot = 0, top = 0;
  for (Element a = 1; a < static_cast<Element>(n); ++a) {
    bot = lat.meet_of(bot, a);
    top = lat.join_of(top, a);
  }
  lat.bot = bot;
  lat.top = top;

  const auto in = [n](Element x) { return x < static_cast<Element>(n); };
  {
    RuleRecorder r(rep, opts, "complement.meet");
    for (Element a = 0; in(a); ++a)
      if (lat.meet_of(a, lat.perp(a)) != bot && !r.add({a})) break;
  }
  {
    RuleRecorder r(rep, opts, "complement.join");
    for (Element a = 0; in(a); ++a)
      if (lat.join_of(a, lat.perp(a)) != top && !r.add({a})) break;
  }
  {
    RuleRecorder r(rep, opts, "complement.antitone");
    bool more = true;
    for (Element a = 0; more && in(a); ++a)
      for (Element b = 0; more && in(b); ++b)
        if (lat.leq(a, b) && !lat.leq(lat.perp(b), lat.perp(a))) more = r.add({a, b});
  }
  {
    RuleRecorder r(rep, opts, "complement.involution");
    for (Element a = 0; in(a); ++a)
      if (lat.perp(lat.perp(a)) != a && !r.add({a})) break;
  }
  if (n == 1) {
    rep.degenerate = true;
    rep.notes.push_back("degenerate: one-element algebra (0 = 1)");
  }
  return rep;
}

enum class Implication { Classical, Sasaki, Dishkant, Kalmbach };

/// Value of an implication polynomial on a validated ortholattice.
inline Element implication_polynomial(const FiniteOrtholattice& lat, Implication kind, Element a,
                                      Element b) {
  const auto n = static_cast<Element>(lat.size());
  if (a < 0 || b < 0 || a >= n || b >= n) throw Error(Errc::NoSuchElement, "operand out of range");
  const Element na = lat.perp(a), nb = lat.perp(b);
  switch (kind) {
    case Implication::Classical: return lat.join_of(na, b);
    case Implication::Sasaki: return lat.join_of(na, lat.meet_of(a, b));
    case Implication::Dishkant: return lat.join_of(lat.meet_of(na, nb), b);
    case Implication::Kalmbach:
      return lat.join_of(lat.join_of(lat.meet_of(a, b), lat.meet_of(na, b)), lat.meet_of(na, nb));
  }
  return b;
}

inline Element sasaki(const FiniteOrtholattice& lat, Element a, Element b) {
  return lat.join_of(lat.perp(a), lat.meet_of(a, b));
}

/// Six elements forming a Benzene ring: bottom, y, x, x', y', top with y < x.
struct SublatticeWitness {
  Element bottom, y, x, x_perp, y_perp, top;

  std::vector<Element> elements() const { return {bottom, y, x, x_perp, y_perp, top}; }
};

/// Exhaustive search over pairs 0 < y < x < 1 whose six elements together
/// with complements are closed under meet and join.
inline std::optional<SublatticeWitness> find_benzene_sublattice(const FiniteOrtholattice& lat) {
  const auto n = static_cast<Element>(lat.size());
  if (n < 6) return std::nullopt;
  for (Element x = 0; x < n; ++x) {
    if (x == lat.bot || x == lat.top) continue;
    for (Element y = 0; y < n; ++y) {
      if (y == x || y == lat.bot || !lat.leq(y, x)) continue;
      const SublatticeWitness w{lat.bot, y, x, lat.perp(x), lat.perp(y), lat.top};
      const auto six = w.elements();
      Mask members = 0;
      for (Element e : six) members |= bit(e);
      if (popcount(members) != 6) continue;
      bool closed = true;
      for (Element a : six)
        for (Element b : six)
          closed = closed && has(members, lat.meet_of(a, b)) && has(members, lat.join_of(a, b));
      if (closed) return w;
    }
  }
  return std::nullopt;
}

/// Runs four equivalent characterizations of orthomodularity and requires
/// them to agree: the quasi-equation, the kernel condition, the identity
/// x v y = x v (x' ^ (x v y)), and absence of a Benzene sub-ortholattice.
/// Throws InconsistentCharacterizations if they disagree.
inline CheckReport check_orthomodular(const FiniteOrtholattice& lat, const CheckOptions& opts = {}) {
  if (lat.meet.size() != lat.size() * lat.size())
    throw Error(Errc::InvalidStructure, "check_orthomodular needs a validated ortholattice");
  CheckReport rep;
  rep.subject = "orthomodular lattice";
  const auto n = static_cast<Element>(lat.size());

  RuleRecorder quasi(rep, opts, "orthomodular.quasi-equation");
  for (Element x = 0, more = 1; more && x < n; ++x)
    for (Element y = 0; more && y < n; ++y)
      if (lat.leq(x, y) && lat.join_of(x, lat.meet_of(lat.perp(x), y)) != y) more = quasi.add({x, y});

  RuleRecorder kernel(rep, opts, "orthomodular.kernel");
  for (Element x = 0, more = 1; more && x < n; ++x)
    for (Element y = 0; more && y < n; ++y)
      if (x != y && lat.leq(x, y) && lat.meet_of(lat.perp(x), y) == lat.bot) more = kernel.add({x, y});

  RuleRecorder identity(rep, opts, "orthomodular.identity");
  for (Element x = 0, more = 1; more && x < n; ++x)
    for (Element y = 0; more && y < n; ++y) {
      const Element xy = lat.join_of(x, y);
      if (lat.join_of(x, lat.meet_of(lat.perp(x), xy)) != xy) more = identity.add({x, y});
    }

  RuleRecorder benzene(rep, opts, "orthomodular.no-benzene");
  if (auto w = find_benzene_sublattice(lat)) benzene.add(w->elements());

  const bool verdicts[] = {quasi.any(), kernel.any(), identity.any(), benzene.any()};
  if (!std::all_of(std::begin(verdicts), std::end(verdicts), [&](bool v) { return v == verdicts[0]; }))
    throw Error(Errc::InconsistentCharacterizations,
                "orthomodularity characterizations disagree on '" + lat.name + "'");
  return rep;
}

/// Validates a candidate and returns it; throws InvalidStructure otherwise.
inline FiniteOrtholattice validate_ortholattice(FiniteOrtholattice lat) {
  auto rep = check_ortholattice(lat);
  if (!rep.passed()) {
    const auto& v = rep.violations.front();
    throw Error(Errc::InvalidStructure, "'" + lat.name + "' is not an ortholattice (" + v.rule + ")");
  }
  return lat;
}

inline FiniteOrtholattice validate_orthomodular(FiniteOrtholattice lat) {
  lat = validate_ortholattice(std::move(lat));
  auto rep = check_orthomodular(lat);
  if (!rep.passed())
    throw Error(Errc::NotOrthomodular,
                "'" + lat.name + "' fails " + rep.violations.front().rule);
  return lat;
}

/// True iff `map` is a bijection a -> b preserving and reflecting order and
/// commuting with the complements (bounds follow).
inline bool is_isomorphism(const FiniteOrtholattice& a, const FiniteOrtholattice& b,
                           const std::vector<Element>& map) {
  const std::size_t n = a.size();
  if (b.size() != n || map.size() != n) return false;
  Mask seen = 0;
  for (Element m : map) {
    if (m < 0 || static_cast<std::size_t>(m) >= n || has(seen, m)) return false;
    seen |= bit(m);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (map[a.ocomp[i]] != b.ocomp[map[i]]) return false;
    for (std::size_t j = 0; j < n; ++j)
      if (a.leq(i, j) != b.leq(map[i], map[j])) return false;
  }
  return map[a.bot] == b.bot && map[a.top] == b.top;
}

/// Lexicographically least isomorphism of ortholattices, by backtracking with
/// up/down-set size invariants.
inline std::optional<std::vector<Element>> find_isomorphism(const FiniteOrtholattice& a,
                                                            const FiniteOrtholattice& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  const auto down_a = detail::downsets(a.up);
  const auto down_b = detail::downsets(b.up);
  auto signature = [](const std::vector<Mask>& up, const std::vector<Mask>& down, std::size_t i) {
    return std::pair{popcount(up[i]), popcount(down[i])};
  };
  std::vector<std::pair<int, int>> sig_a(n), sig_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    sig_a[i] = signature(a.up, down_a, i);
    sig_b[i] = signature(b.up, down_b, i);
  }
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<Element> map(n, -1);
  Mask used = 0;
  auto consistent = [&](std::size_t i, Element c) {
    if (sig_a[i] != sig_b[c]) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (map[j] < 0) continue;
      if (a.leq(i, j) != b.leq(c, map[j]) || a.leq(j, i) != b.leq(map[j], c)) return false;
    }
    const Element oi = a.ocomp[i];
    if (static_cast<std::size_t>(oi) == i) return b.ocomp[c] == c;
    if (map[oi] >= 0) return map[oi] == b.ocomp[c];
    return !has(used, b.ocomp[c]) && b.ocomp[c] != c;
  };
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    if (map[i] >= 0) return self(self, i + 1);  // forced by a complement
    for (Element c = 0; c < static_cast<Element>(n); ++c) {
      if (has(used, c) || !consistent(i, c)) continue;
      const Element oi = a.ocomp[i];
      const bool pair = static_cast<std::size_t>(oi) != i;
      map[i] = c;
      used |= bit(c);
      if (pair) {
        map[oi] = b.ocomp[c];
        used |= bit(b.ocomp[c]);
      }
      // The forced partner must also respect the order.
      bool ok = true;
      if (pair) {
        const Element partner = b.ocomp[c];
        for (std::size_t j = 0; ok && j < n; ++j) {
          if (map[j] < 0 || j == static_cast<std::size_t>(oi)) continue;
          ok = a.leq(oi, j) == b.leq(partner, map[j]) && a.leq(j, oi) == b.leq(map[j], partner);
        }
      }
      if (ok && self(self, i + 1)) return true;
      if (pair) {
        used &= ~bit(map[oi]);
        map[oi] = -1;
      }
      used &= ~bit(c);
      map[i] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  if (!is_isomorphism(a, b, map)) throw Error(Errc::InternalInconsistency, "isomorphism search");
  return map;
}

// Standard small lattices.

/// Boolean algebra with 2^atoms elements; element i is the subset with bit mask i.
inline FiniteOrtholattice make_boolean(int atoms) {
  if (atoms < 0 || atoms > 6) throw Error(Errc::TooLarge, "boolean algebra capped at 64 elements");
  const int n = 1 << atoms;
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    if (i == 0) names[i] = "0";
    else if (i == n - 1) names[i] = "1";
    else
      for (int k = 0; k < atoms; ++k)
        if (i & (1 << k)) names[i] += static_cast<char>('a' + k);
  }
  std::vector<std::pair<Element, Element>> order;
  std::vector<Element> ocomp(n);
  for (int i = 0; i < n; ++i) {
    ocomp[i] = (n - 1) ^ i;
    for (int j = 0; j < n; ++j)
      if ((i & j) == i) order.emplace_back(i, j);
  }
  return validate_ortholattice(
      make_ortholattice(names, order, ocomp, "boolean" + std::to_string(n)));
}

/// MO_k: k complementary pairs of atoms between 0 and 1, declared as
/// x x' y y' ... 0 1.
inline FiniteOrtholattice make_mo(int pairs) {
  static constexpr std::array<const char*, 8> atom_names{"x", "y", "z", "w", "u", "v", "s", "t"};
  if (pairs < 1 || pairs > static_cast<int>(atom_names.size()))
    throw Error(Errc::TooLarge, "MO_k supported for 1 <= k <= 8");
  const int n = 2 * pairs + 2;
  const Element zero = n - 2, one = n - 1;
  std::vector<std::string> names;
  std::vector<Element> ocomp(n);
  std::vector<std::pair<Element, Element>> order;
  for (int k = 0; k < pairs; ++k) {
    names.push_back(atom_names[k]);
    names.push_back(std::string(atom_names[k]) + "'");
    ocomp[2 * k] = 2 * k + 1;
    ocomp[2 * k + 1] = 2 * k;
  }
  names.push_back("0");
  names.push_back("1");
  ocomp[zero] = one;
  ocomp[one] = zero;
  for (Element a = 0; a < zero; ++a) {
    order.emplace_back(zero, a);
    order.emplace_back(a, one);
  }
  order.emplace_back(zero, one);
  return validate_ortholattice(make_ortholattice(names, order, ocomp, "MO" + std::to_string(pairs)));
}

/// The hexagon O6, declared as 0 y x x' y' 1 with y < x and x' < y'.
inline FiniteOrtholattice make_benzene() {
  std::vector<std::string> names{"0", "y", "x", "x'", "y'", "1"};
  std::vector<std::pair<Element, Element>> order{{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}};
  return validate_ortholattice(make_ortholattice(names, order, {5, 4, 3, 2, 1, 0}, "O6"));
}

}  // namespace qlogic
