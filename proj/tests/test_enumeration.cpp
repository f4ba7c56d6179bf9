#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"

using namespace qlogic;

namespace {

// Ortholattices on n <= 6 elements straight from the definitions: bottom 0,
// top n-1, complement pairs (1,2), (3,4); every relation among the middle
// elements is tried. Classes are counted by brute-force relabelling.
std::pair<int, int> naive_ortholattice_classes(int n) {
  if (n == 1) return {1, 1};
  if (n % 2) return {0, 0};
  const int m = n - 2;
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<Element> oc(n);
  oc[0] = n - 1;
  oc[n - 1] = 0;
  for (int i = 1; i <= m; i += 2) {
    oc[i] = i + 1;
    oc[i + 1] = i;
  }
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i);

  std::vector<FiniteOrtholattice> found;
  for (std::uint32_t rel = 0; rel < (1u << slots.size()); ++rel) {
    std::vector<std::pair<Element, Element>> order;
    for (int i = 0; i < n; ++i) {
      order.emplace_back(0, i);
      order.emplace_back(i, n - 1);
      order.emplace_back(i, i);
    }
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((rel >> s) & 1u) order.push_back(slots[s]);
    auto lat = make_ortholattice(names, order, oc);
    // Only relations that are already transitive, so each order is seen once.
    if (reflexive_transitive_closure(lat.up) != lat.up) continue;
    try {
      if (!check_ortholattice(lat).passed()) continue;
    } catch (const Error&) {
      continue;
    }
    bool fresh = true;
    for (const auto& seen : found) {
      std::vector<Element> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        if (is_isomorphism(seen, lat, perm)) {
          fresh = false;
          break;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!fresh) break;
    }
    if (fresh) found.push_back(lat);
  }
  int oml = 0;
  for (const auto& lat : found) oml += oracle::orthomodular(lat);
  return {static_cast<int>(found.size()), oml};
}

std::size_t labelled_variants(const BoundedQIA& a) {
  const std::size_t n = a.size();
  if (n <= 2) return 1;
  std::vector<Element> mid(n - 2);
  std::iota(mid.begin(), mid.end(), 1);
  std::set<std::vector<Element>> tables;
  do {
    std::vector<Element> perm(n);
    perm[0] = 0;
    perm[n - 1] = static_cast<Element>(n - 1);
    for (std::size_t k = 0; k < mid.size(); ++k) perm[k + 1] = mid[k];
    std::vector<Element> t(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) t[perm[x] * n + perm[y]] = perm[a.op(x, y)];
    tables.insert(t);
  } while (std::next_permutation(mid.begin(), mid.end()));
  return tables.size();
}

}  // namespace

TEST(Enumeration, SmallOrtholatticesMatchNaiveSearch) {
  for (int n = 1; n <= 6; ++n) {
    const auto [ol, oml] = naive_ortholattice_classes(n);
    EXPECT_EQ(enumerate_ortholattices(n, false).representatives.size(), static_cast<std::size_t>(ol)) << n;
    EXPECT_EQ(enumerate_oml(n).representatives.size(), static_cast<std::size_t>(oml)) << n;
  }
}

TEST(Enumeration, OMLCountsAreStable) {
  const std::vector<std::size_t> expected{1, 1, 0, 1, 0, 1, 0, 2, 0, 2};
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto res = enumerate_oml(n);
    EXPECT_EQ(res.representatives.size(), expected[n - 1]) << n;
    EXPECT_EQ(res.degenerate, n == 1);
    for (const auto& lat : res.representatives) {
      EXPECT_TRUE(check_orthomodular(lat).passed());
      EXPECT_TRUE(oracle::orthomodular(lat));
    }
    for (std::size_t i = 0; i < res.representatives.size(); ++i)
      for (std::size_t j = i + 1; j < res.representatives.size(); ++j)
        EXPECT_FALSE(find_isomorphism(res.representatives[i], res.representatives[j]).has_value());
  }
}

TEST(Enumeration, KnownLatticesAppear) {
  auto appears = [](const FiniteOrtholattice& target) {
    for (const auto& lat : enumerate_oml(target.size()).representatives)
      if (find_isomorphism(lat, target)) return true;
    return false;
  };
  EXPECT_TRUE(appears(make_mo(2)));
  EXPECT_TRUE(appears(make_mo(3)));
  EXPECT_TRUE(appears(make_boolean(3)));
  EXPECT_TRUE(appears(make_mo(4)));
  bool benzene = false;
  for (const auto& lat : enumerate_ortholattices(6, false).representatives)
    benzene = benzene || find_isomorphism(lat, make_benzene()).has_value();
  EXPECT_TRUE(benzene);
}

TEST(Enumeration, IndependentOfWorkersAndRuns) {
  for (std::size_t n : {8u, 10u}) {
    const auto a = enumerate_ortholattices(n, false, 1);
    const auto b = enumerate_ortholattices(n, false, 4);
    const auto c = enumerate_ortholattices(n, false, 1);
    ASSERT_EQ(a.representatives.size(), b.representatives.size());
    for (std::size_t i = 0; i < a.representatives.size(); ++i) {
      EXPECT_TRUE(same_structure(a.representatives[i], b.representatives[i]));
      EXPECT_TRUE(same_structure(a.representatives[i], c.representatives[i]));
      EXPECT_EQ(a.representatives[i].name, b.representatives[i].name);
    }
    EXPECT_EQ(a.total_labeled, b.total_labeled);
  }
}

TEST(Enumeration, BqiaMatchesOMLCounts) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto q = enumerate_bqia(n);
    const auto l = enumerate_oml(n);
    ASSERT_EQ(q.representatives.size(), l.representatives.size()) << n;
    for (const auto& a : q.representatives) {
      EXPECT_TRUE(check_bounded_qia(a.magma, a.zero).passed());
      const auto lat = bqia_to_oml(a);
      EXPECT_TRUE(same_structure(oml_to_bqia(lat), a));
      bool matched = false;
      for (const auto& r : l.representatives) matched = matched || find_isomorphism(lat, r).has_value();
      EXPECT_TRUE(matched);
    }
  }
  EXPECT_TRUE(enumerate_bqia(3).representatives.empty());
  EXPECT_TRUE(enumerate_bqia(5).representatives.empty());
  EXPECT_TRUE(enumerate_bqia(1).degenerate);
}

TEST(Enumeration, BqiaTablesOfKnownAlgebras) {
  const auto two = enumerate_bqia(2);
  ASSERT_EQ(two.representatives.size(), 1u);
  EXPECT_EQ(two.representatives[0].magma.table, (std::vector<Element>{1, 1, 0, 1}));

  const auto four = enumerate_bqia(4);
  ASSERT_EQ(four.representatives.size(), 1u);
  EXPECT_TRUE(find_isomorphism(bqia_to_oml(four.representatives[0]), make_boolean(2)).has_value());

  const auto six = enumerate_bqia(6);
  ASSERT_EQ(six.representatives.size(), 1u);
  const auto mo2 = oml_to_bqia(oracle::corpus_lattice("mo2.alg"));
  const auto iso = find_isomorphism(bqia_to_oml(mo2), bqia_to_oml(six.representatives[0]));
  ASSERT_TRUE(iso.has_value());
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y)
      EXPECT_EQ((*iso)[mo2.op(x, y)], six.representatives[0].op((*iso)[x], (*iso)[y]));
}

TEST(Enumeration, LabelledCountsMatchRelabelling) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto res = enumerate_bqia(n);
    std::size_t total = 0;
    for (const auto& a : res.representatives) total += labelled_variants(a);
    EXPECT_EQ(res.total_labeled, total) << n;
  }
}

TEST(Enumeration, SizeCaps) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InternalInconsistency;
  };
  EXPECT_EQ(code_of([] { enumerate_oml(12); }), Errc::TooLarge);
  EXPECT_EQ(code_of([] { enumerate_bqia(7); }), Errc::TooLarge);
  EXPECT_EQ(code_of([] { enumerate_quantifiers(make_mo(6)); }), Errc::TooLarge);
  EXPECT_EQ(code_of([] { oracle_filter_count(oml_to_bqia(make_mo(8))); }), Errc::TooLarge);
  EXPECT_EQ(code_of([] { enumerate_quantifiers(make_benzene()); }), Errc::NotOrthomodular);
}
