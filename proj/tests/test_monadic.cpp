#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"

using namespace qlogic;

namespace {

std::vector<std::vector<Element>> maps_of(const std::vector<UnaryOp>& ops) {
  std::vector<std::vector<Element>> out;
  for (const auto& u : ops) out.push_back(u.map);
  return out;
}

QuantumMonadicAlgebra mo2_with_closed_x() {
  const auto mo2 = make_mo(2);
  UnaryOp e;
  for (Element a = 0; a < 6; ++a) {
    const bool closed = a == mo2.at("x") || a == mo2.at("x'") || a == mo2.bot || a == mo2.top;
    e.map.push_back(closed ? a : mo2.top);
  }
  return make_qma(mo2, e);
}

}  // namespace

TEST(Quantifier, EnumerationMatchesExhaustiveOracle) {
  for (const auto& lat : {make_boolean(0), make_boolean(1), make_boolean(2), make_mo(2), make_benzene()}) {
    if (!oracle::orthomodular(lat)) {
      EXPECT_THROW(enumerate_quantifiers(lat), Error);
      continue;
    }
    const auto got = maps_of(enumerate_quantifiers(lat));
    EXPECT_EQ(got, oracle::all_quantifiers(lat)) << lat.name;
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
  }
}

TEST(Quantifier, TwoElementHasOnlyTheIdentity) {
  const auto qs = enumerate_quantifiers(make_boolean(1));
  ASSERT_EQ(qs.size(), 1u);
  EXPECT_EQ(qs[0], UnaryOp::identity(2));
  EXPECT_EQ(qs[0], simple_operator(2, 0, 1));
}

TEST(Quantifier, MO2ListContainsKnownQuantifiers) {
  const auto mo2 = make_mo(2);
  const auto qs = enumerate_quantifiers(mo2);
  auto contains = [&](const UnaryOp& u) { return std::find(qs.begin(), qs.end(), u) != qs.end(); };
  EXPECT_TRUE(contains(UnaryOp::identity(6)));
  EXPECT_TRUE(contains(simple_operator(6, mo2.bot, mo2.top)));
  const auto q = mo2_with_closed_x();
  EXPECT_TRUE(contains(q.exists));
  EXPECT_EQ(q.exists(mo2.at("y")), mo2.top);
  EXPECT_EQ(q.exists(mo2.at("y'")), mo2.top);
}

TEST(Quantifier, ClosedSetsAreSubalgebras) {
  for (const auto& lat : {make_mo(2), make_mo(3), make_boolean(3)})
    for (const auto& e : enumerate_quantifiers(lat)) {
      std::vector<Element> closed;
      for (Element a = 0; a < static_cast<Element>(lat.size()); ++a)
        if (e(a) == a) closed.push_back(a);
      auto in = [&](Element a) { return std::find(closed.begin(), closed.end(), a) != closed.end(); };
      for (Element a : closed) {
        EXPECT_TRUE(in(lat.perp(a)));
        for (Element b : closed) {
          EXPECT_TRUE(in(oracle::glb(lat, a, b)));
          EXPECT_TRUE(in(oracle::lub(lat, a, b)));
        }
      }
    }
}

TEST(Quantifier, ViolationsAreReported) {
  const auto mo2 = make_mo(2);
  auto e = UnaryOp::identity(6);
  e.map[mo2.at("x")] = mo2.at("y");
  const auto rep = check_quantifier(mo2, e);
  EXPECT_TRUE(rep.failed("exists.extensive"));
  auto zero_up = UnaryOp::identity(6);
  zero_up.map[mo2.bot] = mo2.top;
  EXPECT_TRUE(check_quantifier(mo2, zero_up).failed("exists.normal"));
  EXPECT_THROW(make_qma(mo2, zero_up), Error);
  EXPECT_THROW(check_quantifier(mo2, UnaryOp::identity(4)), Error);
}

TEST(Quantifier, BenzeneIsOnlyAMonadicOrtholattice) {
  const auto bz = make_benzene();
  const auto id = UnaryOp::identity(6);
  EXPECT_TRUE(check_quantifier(bz, id, QuantifierMode::QuantumMonadic).failed("qma.orthomodular"));
  EXPECT_TRUE(check_quantifier(bz, id, QuantifierMode::MonadicOrtholattice).passed());
}

TEST(Quantifier, UniversalDual) {
  const auto mo2 = make_mo(2);
  const QuantumMonadicAlgebra q{mo2, simple_operator(6, mo2.bot, mo2.top)};
  const auto all = forall_map(q);
  for (Element a = 0; a < 6; ++a) EXPECT_EQ(all(a), a == mo2.top ? mo2.top : mo2.bot);
  const auto q2 = mo2_with_closed_x();
  EXPECT_EQ(forall_dual(q2, mo2.at("x")), mo2.at("x"));
  EXPECT_EQ(forall_dual(q2, mo2.at("y")), mo2.bot);
}

TEST(Quantifier, ExistsOfMeetProbe) {
  // Bundled QMAs use the identity and the simple quantifier; neither breaks
  // the equation. The quantifier closing {0, x, x', 1} does.
  for (auto file : {"mo2_qma.alg", "mo2_qma_identity.alg"})
    EXPECT_FALSE(find_exists_meet_counterexample(load_qma(load_document(oracle::corpus_path(file)))).has_value());
  const auto q = mo2_with_closed_x();
  const auto hit = find_exists_meet_counterexample(q);
  ASSERT_TRUE(hit.has_value());
  const auto [a, b] = *hit;
  EXPECT_NE(q.exists(q.lat.meet_of(a, q.exists(b))), q.lat.meet_of(q.exists(a), q.exists(b)));
}

TEST(Quantifier, SasakiJoinIdentityOnEveryOML) {
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto& lat : enumerate_oml(n).representatives) {
      const auto ln = static_cast<Element>(n);
      for (Element x = 0; x < ln; ++x)
        for (Element y = 0; y < ln; ++y)
          ASSERT_EQ(sasaki(lat, sasaki(lat, lat.perp(x), lat.perp(y)), x), oracle::lub(lat, x, y)) << lat.name;
    }
}

TEST(MonadicQIA, ConversionsInvertEachOther) {
  for (const auto& lat : {make_boolean(1), make_boolean(2), make_boolean(3), make_mo(2), make_mo(3)})
    for (const auto& e : enumerate_quantifiers(lat)) {
      const QuantumMonadicAlgebra q{lat, e};
      const auto m = qma_to_mqia(q);
      const auto rep = check_mqia(m);
      EXPECT_TRUE(rep.passed());
      EXPECT_TRUE(same_structure(mqia_to_qma(m), q));
      EXPECT_TRUE(same_structure(qma_to_mqia(mqia_to_qma(m)), m));
      for (Element x = 0; x < static_cast<Element>(lat.size()); ++x) {
        EXPECT_EQ(m.diamond(m.diamond(x)), m.diamond(x));
        for (Element y = 0; y < static_cast<Element>(lat.size()); ++y)
          if (m.qia.precedes(x, y)) {
            EXPECT_TRUE(m.qia.precedes(m.diamond(x), m.diamond(y)));
          }
      }
    }
}

TEST(MonadicQIA, ViolationsAreReported) {
  const auto a = oml_to_bqia(make_mo(2));
  auto d = UnaryOp::identity(6);
  d.map[a.zero] = a.one;
  EXPECT_TRUE(check_mqia(a, d).failed("diamond.normal"));
  auto shrink = UnaryOp::identity(6);
  shrink.map[a.one] = a.zero;
  EXPECT_TRUE(check_mqia(a, shrink).failed("diamond.extensive"));
  EXPECT_THROW(make_mqia(a, shrink), Error);
}

TEST(MonadicQIA, CorpusDocumentsAgreeWithConversions) {
  const auto mq = load_mqia(load_document(oracle::corpus_path("mo2_mqia.alg")));
  const auto q = load_qma(load_document(oracle::corpus_path("mo2_qma.alg")));
  EXPECT_TRUE(same_structure(qma_to_mqia(q), mq));
  EXPECT_TRUE(same_structure(mqia_to_qma(mq), q));
}

TEST(Homomorphism, CountsMatchOracle) {
  const auto mo2 = make_mo(2);
  const std::vector<QuantumMonadicAlgebra> algebras{
      {mo2, UnaryOp::identity(6)}, {mo2, simple_operator(6, mo2.bot, mo2.top)}, mo2_with_closed_x(),
      {make_boolean(2), UnaryOp::identity(4)}, {make_boolean(1), UnaryOp::identity(2)}};
  for (const auto& s : algebras)
    for (const auto& t : algebras) {
      const auto res = hom_correspondence(s, t);
      EXPECT_TRUE(res.report.passed());
      EXPECT_EQ(res.qma_homs.size(), oracle::qma_hom_count(s.lat, s.exists.map, t.lat, t.exists.map));
      EXPECT_EQ(res.qma_homs, res.mqia_homs);
    }
}

TEST(Homomorphism, IndependentOfWorkerCount) {
  const auto mo2 = make_mo(2);
  const QuantumMonadicAlgebra s{mo2, UnaryOp::identity(6)};
  const QuantumMonadicAlgebra t{mo2, UnaryOp::identity(6)};
  HomSearchOptions one, four;
  four.workers = 4;
  const auto a = hom_correspondence(s, t, one);
  const auto b = hom_correspondence(s, t, four);
  EXPECT_EQ(a.qma_homs, b.qma_homs);
  EXPECT_EQ(a.mqia_homs, b.mqia_homs);
  EXPECT_EQ(a.maps_checked, 46656u);
  EXPECT_EQ(b.maps_checked, 46656u);
  EXPECT_EQ(a.qma_homs.size(), 8u);  // the automorphisms
}

TEST(Homomorphism, ExplicitMapsAndKinds) {
  const auto mo2 = make_mo(2);
  const QuantumMonadicAlgebra q{mo2, UnaryOp::identity(6)};
  const auto m = qma_to_mqia(q);
  const std::vector<Element> swap{2, 3, 0, 1, 4, 5};
  EXPECT_TRUE(check_qma_homomorphism(q, q, swap).passed());
  EXPECT_TRUE(check_mqia_homomorphism(m, m, swap).passed());
  const std::vector<Element> collapse{4, 4, 4, 4, 4, 5};
  EXPECT_TRUE(check_qma_homomorphism(q, q, collapse).failed("hom.join"));
  EXPECT_FALSE(check_mqia_homomorphism(m, m, collapse).passed());

  const MonadicStructure sq = q, sm = m;
  EXPECT_TRUE(check_homomorphism({&sq, &sq, swap}, HomKind::Qma).passed());
  EXPECT_TRUE(check_homomorphism({&sm, &sm, swap}, HomKind::Mqia).passed());
  EXPECT_THROW(check_homomorphism({&sq, &sm, swap}, HomKind::Qma), Error);
  EXPECT_THROW(check_qma_homomorphism(q, q, {0, 1}), Error);

  HomSearchOptions cands;
  cands.candidates = std::vector<std::vector<Element>>{swap, collapse};
  const auto res = hom_correspondence(q, q, cands);
  EXPECT_EQ(res.maps_checked, 2u);
  EXPECT_EQ(res.qma_homs, std::vector<std::vector<Element>>{swap});
}

TEST(Homomorphism, SubalgebraInclusion) {
  const auto b4 = make_boolean(2);
  const auto mo2 = make_mo(2);
  const QuantumMonadicAlgebra sub{b4, UnaryOp::identity(4)}, big{mo2, UnaryOp::identity(6)};
  std::vector<Element> inc(4);
  inc[b4.bot] = mo2.bot;
  inc[b4.top] = mo2.top;
  inc[b4.at("a")] = mo2.at("x");
  inc[b4.at("b")] = mo2.at("x'");
  EXPECT_TRUE(check_qma_homomorphism(sub, big, inc).passed());
  EXPECT_TRUE(check_mqia_homomorphism(qma_to_mqia(sub), qma_to_mqia(big), inc).passed());
}

TEST(Homomorphism, SizeCap) {
  const auto mo3 = make_mo(3);
  const QuantumMonadicAlgebra q{mo3, UnaryOp::identity(8)};
  HomSearchOptions opts;
  opts.max_maps = 1000;
  try {
    hom_correspondence(q, q, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}
