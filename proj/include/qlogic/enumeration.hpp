#pragma once

// Exhaustive generation of small ortholattices, orthomodular lattices,
// bounded quasi-implication algebras and quantifiers, up to isomorphism.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "frames.hpp"
#include "lattice.hpp"
#include "monadic.hpp"
#include "parallel.hpp"
#include "quasi_implication.hpp"

namespace qlogic {

template <class Structure>
struct EnumerationResult {
  std::string kind;
  std::size_t size = 0;
  std::vector<Structure> representatives;  // pairwise non-isomorphic, sorted by canonical code
  std::uint64_t total_labeled = 0;         // labelled structures found before reduction
  bool degenerate = false;
};

inline constexpr std::size_t kMaxLatticeEnumeration = 10;
inline constexpr std::size_t kMaxBqiaEnumeration = 6;
inline constexpr std::size_t kMaxQuantifierEnumeration = 12;
inline constexpr std::size_t kMaxFilterOracle = 16;

namespace detail {

/// Element names for the normalized labelling 0, a, a', b, b', ..., 1.
inline std::vector<std::string> paired_names(std::size_t n) {
  std::vector<std::string> names{"0"};
  for (std::size_t k = 0; 2 * k + 2 < n; ++k) {
    const std::string base(1, static_cast<char>('a' + k));
    names.push_back(base);
    names.push_back(base + "'");
  }
  names.push_back("1");
  return names;
}

/// Meet and join tables of a partial order, or nullopt if it is not a lattice.
inline bool lattice_tables(const std::vector<Mask>& up, std::vector<Element>& meet, std::vector<Element>& join) {
  const std::size_t n = up.size();
  const auto down = downsets(up);
  meet.assign(n * n, 0);
  join.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const auto g = greatest_in(down[a] & down[b], down);
      const auto l = greatest_in(up[a] & up[b], up);
      if (!g || !l) return false;
      meet[a * n + b] = meet[b * n + a] = *g;
      join[a * n + b] = join[b * n + a] = *l;
    }
  return true;
}

inline bool quick_orthomodular(const FiniteOrtholattice& lat) {
  const auto n = static_cast<Element>(lat.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (lat.leq(x, y) && lat.join_of(x, lat.meet_of(lat.perp(x), y)) != y) return false;
  return true;
}

/// Relabelling of the normalized form: permute complement pairs and swap
/// within pairs; 0 and 1 stay fixed.
inline std::vector<std::vector<Element>> pair_relabellings(std::size_t n) {
  const std::size_t k = (n - 2) / 2;
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<Element>> out;
  do {
    for (std::uint32_t swaps = 0; swaps < (1u << k); ++swaps) {
      std::vector<Element> perm(n);
      perm[0] = 0;
      perm[n - 1] = static_cast<Element>(n - 1);
      for (std::size_t p = 0; p < k; ++p) {
        const bool s = (swaps >> p) & 1u;
        const auto target = static_cast<Element>(2 * order[p]);
        perm[2 * p + 1] = target + 1 + s;
        perm[2 * p + 2] = target + 2 - s;
      }
      out.push_back(std::move(perm));
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

inline std::vector<Mask> relabel_order(const std::vector<Mask>& up, const std::vector<Element>& perm) {
  std::vector<Mask> out(up.size(), 0);
  for (std::size_t a = 0; a < up.size(); ++a)
    for_each_bit(up[a], [&](Element b) { out[perm[a]] |= bit(perm[b]); });
  return out;
}

}  // namespace detail

/// All ortholattices (or only orthomodular ones) with n elements up to
/// isomorphism. Works in the normalized labelling where 0 and 1 are the
/// first and last elements and complements sit in adjacent pairs; the order
/// among middle elements is backtracked one complement-symmetric pair of
/// comparabilities at a time, then validated.
inline EnumerationResult<FiniteOrtholattice> enumerate_ortholattices(std::size_t n, bool orthomodular_only,
                                                                     unsigned workers = 1) {
  if (n == 0) throw Error(Errc::SizeMismatch, "lattices need at least one element");
  if (n > kMaxLatticeEnumeration)
    throw Error(Errc::TooLarge, "lattice enumeration capped at " + std::to_string(kMaxLatticeEnumeration));
  EnumerationResult<FiniteOrtholattice> res;
  res.kind = orthomodular_only ? "oml" : "ol";
  res.size = n;
  if (n == 1) {
    res.degenerate = true;
    res.total_labeled = 1;
    res.representatives.push_back(validate_ortholattice(make_ortholattice({"0"}, {}, {0}, "oml1")));
    return res;
  }
  if (n % 2 == 1) return res;  // complements pair up everything but a degenerate 0 = 1

  const auto names = detail::paired_names(n);
  std::vector<Element> ocomp(n);
  ocomp[0] = static_cast<Element>(n - 1);
  ocomp[n - 1] = 0;
  for (std::size_t i = 1; i + 1 < n; i += 2) {
    ocomp[i] = static_cast<Element>(i + 1);
    ocomp[i + 1] = static_cast<Element>(i);
  }
  // One variable per orbit {i<j} ~ {j', i'} of non-complementary middle pairs.
  struct Var {
    Element i, j;
  };
  std::vector<Var> vars;
  for (Element i = 1; i + 1 < static_cast<Element>(n); ++i)
    for (Element j = i + 1; j + 1 < static_cast<Element>(n); ++j) {
      if (ocomp[i] == j) continue;
      const Element pi = std::min(ocomp[i], ocomp[j]);
      const Element pj = std::max(ocomp[i], ocomp[j]);
      if (std::pair{i, j} < std::pair{pi, pj}) vars.push_back({i, j});
    }

  const auto base_up = [&] {
    std::vector<Mask> up(n, 0);
    for (std::size_t a = 0; a < n; ++a) up[a] = bit(static_cast<Element>(a)) | bit(static_cast<Element>(n - 1));
    up[0] = full_mask(n);
    return up;
  }();
  const auto relabellings = detail::pair_relabellings(n);

  using Code = std::vector<Mask>;
  struct Slice {
    std::map<Code, FiniteOrtholattice> found;
    std::uint64_t labelled = 0;
  };
  const std::size_t top_values = vars.empty() ? 1 : 3;
  std::vector<Slice> slices(top_values);

  auto leaf = [&](const std::vector<Mask>& up, Slice& slice) {
    if (reflexive_transitive_closure(up) != up) return;
    FiniteOrtholattice lat;
    lat.names = names;
    lat.up = up;
    lat.ocomp = ocomp;
    if (!detail::lattice_tables(up, lat.meet, lat.join)) return;
    lat.bot = 0;
    lat.top = static_cast<Element>(n - 1);
    for (std::size_t a = 0; a < n; ++a) {
      if (lat.meet_of(a, ocomp[a]) != 0 || lat.join_of(a, ocomp[a]) != lat.top) return;
    }
    if (orthomodular_only && !detail::quick_orthomodular(lat)) return;
    ++slice.labelled;
    Code best;
    for (const auto& perm : relabellings) {
      auto code = detail::relabel_order(up, perm);
      if (best.empty() || code < best) best = std::move(code);
    }
    if (slice.found.count(best)) return;
    auto canon = make_ortholattice(names, {}, ocomp);
    canon.up = best;
    slice.found.emplace(best, std::move(canon));
  };

  auto set_var = [&](std::vector<Mask>& up, const Var& v, int value) {
    const Element pi = ocomp[v.i], pj = ocomp[v.j];
    if (value == 1) {  // i < j, hence j' < i'
      up[v.i] |= bit(v.j);
      up[pj] |= bit(pi);
    } else if (value == 2) {
      up[v.j] |= bit(v.i);
      up[pi] |= bit(pj);
    }
  };

  detail::parallel_for(top_values, workers, [&](std::size_t first) {
    std::vector<Mask> up = base_up;
    if (!vars.empty()) set_var(up, vars[0], static_cast<int>(first));
    auto rec = [&](auto&& self, std::size_t k, std::vector<Mask> cur) -> void {
      if (k == vars.size()) {
        leaf(cur, slices[first]);
        return;
      }
      for (int value = 0; value < 3; ++value) {
        auto next = cur;
        set_var(next, vars[k], value);
        self(self, k + 1, std::move(next));
      }
    };
    rec(rec, vars.empty() ? 0 : 1, up);
  });

  std::map<Code, FiniteOrtholattice> merged;
  for (auto& s : slices) {
    res.total_labeled += s.labelled;
    for (auto& [code, lat] : s.found) merged.emplace(code, std::move(lat));
  }
  int counter = 0;
  for (auto& [code, lat] : merged) {
    lat.name = res.kind + std::to_string(n) + "_" + std::to_string(counter++);
    res.representatives.push_back(validate_ortholattice(std::move(lat)));
  }
  return res;
}

/// All orthomodular lattices with n <= 10 elements up to isomorphism.
inline EnumerationResult<FiniteOrtholattice> enumerate_oml(std::size_t n, unsigned workers = 1) {
  return enumerate_ortholattices(n, true, workers);
}

namespace detail {

/// Relabels zero -> 0, one -> n-1 and takes the least table over all
/// orderings of the remaining elements.
inline std::pair<std::vector<Element>, BoundedQIA> canonical_bqia(const BoundedQIA& a) {
  const std::size_t n = a.size();
  if (n > kMaxLatticeEnumeration) throw Error(Errc::TooLarge, "canonical form capped at 10 elements");
  if (n == 1) return {a.magma.table, a};
  std::vector<Element> middle;
  for (Element x = 0; x < static_cast<Element>(n); ++x)
    if (x != a.zero && x != a.one) middle.push_back(x);
  std::vector<Element> order(middle.size());
  std::iota(order.begin(), order.end(), 1);
  std::vector<Element> best;
  std::vector<Element> perm(n);
  do {
    perm[a.zero] = 0;
    perm[a.one] = static_cast<Element>(n - 1);
    for (std::size_t k = 0; k < middle.size(); ++k) perm[middle[k]] = order[k];
    std::vector<Element> code(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) code[perm[x] * n + perm[y]] = perm[a.op(x, y)];
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(order.begin(), order.end()));
  BoundedQIA out;
  out.magma.table = best;
  out.magma.names = paired_names(n);
  out.zero = 0;
  out.one = static_cast<Element>(n - 1);
  return {best, out};
}

}  // namespace detail

/// All bounded quasi-implication algebras with n <= 6 elements up to
/// isomorphism, by Cayley-table backtracking with zero = 0 and one = n-1.
/// Partial tables are pruned with q1 and its consequences before q2/q3.
/// The result is cross-checked against the Sasaki tables of
/// enumerate_oml(n); a mismatch throws InternalInconsistency.
inline EnumerationResult<BoundedQIA> enumerate_bqia(std::size_t n) {
  if (n == 0) throw Error(Errc::SizeMismatch, "algebras need at least one element");
  if (n > kMaxBqiaEnumeration)
    throw Error(Errc::TooLarge, "bqia enumeration capped at " + std::to_string(kMaxBqiaEnumeration));
  EnumerationResult<BoundedQIA> res;
  res.kind = "bqia";
  res.size = n;
  std::map<std::vector<Element>, BoundedQIA> found;

  if (n == 1) {
    res.degenerate = true;
    BoundedQIA a;
    a.magma.names = {"0"};
    a.magma.table = {0};
    found.emplace(a.magma.table, a);
    res.total_labeled = 1;
  } else {
    const auto N = static_cast<Element>(n);
    const Element one = N - 1;
    std::vector<Element> t(n * n, -1);
    auto at = [&](Element x, Element y) -> Element& { return t[x * N + y]; };
    for (Element x = 0; x < N; ++x) {
      at(0, x) = one;
      at(x, x) = one;
      at(x, one) = one;
      at(one, x) = x;
    }
    std::vector<std::pair<Element, Element>> cells;
    for (Element x = 1; x < one; ++x)
      for (Element y = 0; y < one; ++y)
        if (y != x) cells.emplace_back(x, y);

    auto get = [&](Element x, Element y) { return (x < 0 || y < 0) ? -1 : at(x, y); };
    // Every instance whose values are already known must hold.
    auto consistent = [&]() {
      for (Element x = 0; x < N; ++x) {
        const Element xc = at(x, 0);
        if (xc >= 0) {
          const Element back = at(xc, 0);
          if (back >= 0 && back != x) return false;  // (x.0).0 = x
        }
        for (Element y = 0; y < N; ++y) {
          const Element xy = at(x, y);
          if (xy < 0) continue;
          const Element q1 = at(xy, x);
          if (q1 >= 0 && q1 != x) return false;
          const Element l = at(x, xy);
          if (l >= 0 && l != xy) return false;
          const Element yx = at(y, x);
          if (yx < 0) continue;
          if (xy == one && yx == one && x != y) return false;
          const Element a = get(get(xy, yx), x), b = get(get(yx, xy), y);
          if (a >= 0 && b >= 0 && a != b) return false;
          for (Element z = 0; z < N; ++z) {
            const Element l2 = get(xy, at(x, z)), r2 = get(yx, at(y, z));
            if (l2 >= 0 && r2 >= 0 && l2 != r2) return false;
          }
        }
      }
      return true;
    };

    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == cells.size()) {
        FiniteMagma m;
        m.names = detail::paired_names(n);
        m.table = t;
        if (!check_bounded_qia(m, 0).passed()) return;
        ++res.total_labeled;
        auto a = make_bounded_qia(std::move(m), 0);
        auto [code, canon] = detail::canonical_bqia(a);
        found.emplace(std::move(code), std::move(canon));
        return;
      }
      const auto [x, y] = cells[k];
      for (Element v = 0; v < N; ++v) {
        at(x, y) = v;
        if (consistent()) self(self, k + 1);
      }
      at(x, y) = -1;
    };
    rec(rec, 0);
  }

  int counter = 0;
  for (auto& [code, a] : found) {
    a.magma.name = "bqia" + std::to_string(n) + "_" + std::to_string(counter++);
    res.representatives.push_back(std::move(a));
  }

  // Cross-check against the lattice side.
  const auto omls = enumerate_oml(n);
  if (omls.representatives.size() != res.representatives.size())
    throw Error(Errc::InternalInconsistency, "bqia and oml counts differ at n = " + std::to_string(n));
  for (const auto& lat : omls.representatives) {
    auto code = detail::canonical_bqia(oml_to_bqia(lat)).first;
    if (!found.count(code))
      throw Error(Errc::InternalInconsistency, "Sasaki table of " + lat.name + " missing from bqia enumeration");
  }
  return res;
}

/// Every quantifier on an orthomodular lattice with n <= 12 elements, in
/// lexicographic order of the image tuple. Candidates come from the
/// complement-closed subsets that are sublattices (the possible sets of
/// closed elements); each induced closure map is then checked in full.
inline std::vector<UnaryOp> enumerate_quantifiers(const FiniteOrtholattice& lat) {
  const std::size_t n = lat.size();
  if (n > kMaxQuantifierEnumeration)
    throw Error(Errc::TooLarge, "quantifier enumeration capped at " + std::to_string(kMaxQuantifierEnumeration));
  if (!check_orthomodular(lat).passed()) throw Error(Errc::NotOrthomodular, "'" + lat.name + "' is not orthomodular");

  std::vector<Element> reps;  // one element per complement pair, excluding bounds
  for (Element a = 0; a < static_cast<Element>(n); ++a)
    if (a != lat.bot && a != lat.top && a < lat.perp(a)) reps.push_back(a);

  std::vector<UnaryOp> out;
  for (std::uint32_t pick = 0; pick < (1u << reps.size()); ++pick) {
    Mask closed = bit(lat.bot) | bit(lat.top);
    for (std::size_t k = 0; k < reps.size(); ++k)
      if ((pick >> k) & 1u) closed |= bit(reps[k]) | bit(lat.perp(reps[k]));
    bool sublattice = true;
    for_each_bit(closed, [&](Element a) {
      for_each_bit(closed, [&](Element b) {
        sublattice = sublattice && has(closed, lat.meet_of(a, b)) && has(closed, lat.join_of(a, b));
      });
    });
    if (!sublattice) continue;
    UnaryOp e;
    e.map.resize(n);
    for (Element a = 0; a < static_cast<Element>(n); ++a) {
      Element least = lat.top;
      for_each_bit(closed & lat.up[a], [&](Element c) { least = lat.meet_of(least, c); });
      e.map[a] = least;
    }
    if (check_quantifier(lat, e).passed()) out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Counts proper filters by testing every subset of the carrier.
inline std::uint64_t oracle_filter_count(const BoundedQIA& a) {
  const std::size_t n = a.size();
  if (n > kMaxFilterOracle)
    throw Error(Errc::TooLarge, "filter oracle capped at " + std::to_string(kMaxFilterOracle) + " elements");
  std::uint64_t count = 0;
  for (Mask s = 1; s <= full_mask(n); ++s)
    if (!has(s, a.zero) && is_filter(a, s)) ++count;
  return count;
}

}  // namespace qlogic
