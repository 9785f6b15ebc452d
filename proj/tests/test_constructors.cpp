#include <gtest/gtest.h>

#include "corpus.hpp"
#include "freerep/freerep.hpp"

using namespace freerep;

namespace {

std::size_t count_of_order(const Group& g, std::size_t k) {
  std::size_t c = 0;
  for (Element x = 0; x < g.order(); ++x) c += g.element_order(x) == k;
  return c;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ParseError;  // sentinel: nothing thrown
}

}  // namespace

TEST(Cyclic, Basics) {
  EXPECT_EQ(cyclic(1).order(), 1u);
  EXPECT_TRUE(is_cyclic(whole_group(cyclic(30))));
  EXPECT_EQ(kind_of([] { cyclic(0); }), ErrorKind::BadParams);
}

TEST(Dihedral, Basics) {
  auto d3 = dihedral(3);
  EXPECT_EQ(d3.order(), 6u);
  EXPECT_EQ(involutions(d3).size(), 3u);
  EXPECT_EQ(involutions(dihedral(4)).size(), 5u);
  EXPECT_EQ(kind_of([] { dihedral(1); }), ErrorKind::BadParams);
}

TEST(GeneralizedQuaternion, Q8) {
  auto q8 = generalized_quaternion(8);
  EXPECT_EQ(involutions(q8).size(), 1u);
  EXPECT_EQ(count_of_order(q8, 4), 6u);
}

TEST(GeneralizedQuaternion, Q16HasCyclicSubgroupOfIndexTwo) {
  auto q16 = generalized_quaternion(16);
  EXPECT_EQ(involutions(q16).size(), 1u);
  bool found = false;
  for (auto& c : cyclic_subgroups(q16)) found = found || c.index() == 2;
  EXPECT_TRUE(found);
}

TEST(GeneralizedQuaternion, ContainsSmallerQuaternionSubgroups) {
  for (std::size_t size : {16u, 32u, 64u}) {
    auto g = generalized_quaternion(size);
    for (std::size_t j = 8; j <= size; j *= 2) {
      bool found = false;
      for (auto& h : all_subgroups(g))
        if (h.order() == j && is_isomorphic(as_group(h).group, generalized_quaternion(j))) {
          found = true;
          break;
        }
      EXPECT_TRUE(found) << size << " " << j;
    }
  }
}

TEST(GeneralizedQuaternion, BadSizes) {
  EXPECT_EQ(kind_of([] { generalized_quaternion(4); }), ErrorKind::BadSize);
  EXPECT_EQ(kind_of([] { generalized_quaternion(24); }), ErrorKind::BadSize);
}

TEST(GeneralizedQuaternion, MatchesUnitQuaternionModel) {
  for (std::size_t k = 3; k <= 6; ++k) {
    const std::size_t size = std::size_t{1} << k;
    EXPECT_TRUE(is_isomorphic(generalized_quaternion(size), binary_dihedral_quaternions(size / 4).group)) << size;
  }
}

TEST(Semidirect, Order21) {
  auto g = semidirect_cyclic({7, 3, 2});
  EXPECT_EQ(g.order(), 21u);
  EXPECT_FALSE(g.is_abelian());
  EXPECT_EQ(commutator_subgroup(g).order(), 7u);
}

TEST(Semidirect, TrivialActionIsCyclic) {
  for (auto [m, n] : {std::pair{5, 3}, std::pair{7, 4}, std::pair{9, 2}}) {
    auto g = semidirect_cyclic({m, n, 1});
    EXPECT_TRUE(g.is_abelian());
    EXPECT_TRUE(is_isomorphic(g, cyclic(static_cast<std::size_t>(m * n))));
  }
}

TEST(Semidirect, Order63) {
  auto g = semidirect_cyclic({7, 9, 2});
  EXPECT_EQ(g.order(), 63u);
  EXPECT_EQ(mcc_subgroup(g).order(), 21u);
}

TEST(Semidirect, InvalidParametersNamed) {
  try {
    semidirect_cyclic({6, 4, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadParams);
    EXPECT_NE(e.detail().find("gcd(m, n)"), std::string::npos);
  }
  try {
    semidirect_cyclic({7, 3, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(e.detail().find("r^n"), std::string::npos);
  }
  EXPECT_EQ(kind_of([] { semidirect_cyclic({7, 3, 7}); }), ErrorKind::BadParams);
}

TEST(Semidirect, NegativeRIsReadModM) {
  EXPECT_TRUE(is_isomorphic(semidirect_cyclic({7, 2, -1}), dihedral(7)));
}

TEST(Semidirect, InverseActionGivesIsomorphicGroup) {
  for (auto& p : corpus::semidirect_params(120, true)) {
    auto inv = inverse_mod(p.r, p.m);
    EXPECT_TRUE(is_isomorphic(semidirect_cyclic(p), semidirect_cyclic({p.m, p.n, inv}))) << corpus::sd_name(p);
  }
}

TEST(SL2, Orders) {
  auto s2 = sl2(2);
  EXPECT_EQ(s2.order(), 6u);
  EXPECT_EQ(involutions(s2).size(), 3u);
  EXPECT_TRUE(is_isomorphic(s2, dihedral(3)));
  EXPECT_EQ(sl2(3).order(), 24u);
  EXPECT_TRUE(is_isomorphic(sl2(3), binary_tetrahedral_quaternions().group));
  auto s5 = sl2(5);
  EXPECT_EQ(s5.order(), 120u);
  EXPECT_TRUE(is_perfect(s5));
  EXPECT_EQ(kind_of([] { sl2(9); }), ErrorKind::BadParams);
}

TEST(SL2, SylowCycloidalWithNoncyclicTwoSylow) {
  for (std::int64_t p : {3, 5, 7, 11}) {
    auto g = sl2(p);
    auto profile = sylow_profile(g);
    EXPECT_TRUE(is_sylow_cycloidal(profile)) << p;
    EXPECT_FALSE(is_cyclic(sylow_subgroup(g, 2))) << p;
  }
}

TEST(BinaryPolyhedral, Orders) {
  EXPECT_EQ(binary_tetrahedral().order(), 24u);
  EXPECT_EQ(binary_octahedral().order(), 48u);
  EXPECT_EQ(binary_icosahedral().order(), 120u);
  EXPECT_EQ(binary_dihedral(7).order(), 28u);
  EXPECT_EQ(binary_polyhedral(BinaryKind::BinaryDihedral, 5).order(), 20u);
}

TEST(BinaryPolyhedral, TwoDTwoIsQ8) {
  auto iso = is_isomorphic(binary_dihedral(2), generalized_quaternion(8));
  ASSERT_TRUE(iso);
  EXPECT_TRUE(iso->verify());
}

TEST(BinaryPolyhedral, TwoO) {
  auto g = binary_octahedral();
  EXPECT_EQ(count_of_order(g, 3), 8u);
  std::vector<Subgroup> index2;
  for (auto& h : all_subgroups(g))
    if (h.index() == 2) index2.push_back(h);
  ASSERT_EQ(index2.size(), 1u);
  EXPECT_TRUE(is_isomorphic(as_group(index2[0]).group, binary_tetrahedral()));
}

TEST(BinaryPolyhedral, TwoTHasFourNonNormalSubgroupsOfOrderThree) {
  auto g = binary_tetrahedral();
  std::size_t threes = 0;
  for (auto& c : cyclic_subgroups(g))
    if (c.order() == 3) {
      ++threes;
      EXPECT_FALSE(is_normal(c));
    }
  EXPECT_EQ(threes, 4u);
}

TEST(BinaryPolyhedral, IcosahedralQuaternionsMatchSL25) {
  EXPECT_TRUE(is_isomorphic(binary_icosahedral_quaternions().group, sl2(5)));
}

TEST(DirectProduct, Basics) {
  auto g = direct_product(cyclic(4), cyclic(6));
  EXPECT_EQ(g.order(), 24u);
  EXPECT_TRUE(g.is_abelian());
  EXPECT_FALSE(is_cyclic(whole_group(g)));
  EXPECT_TRUE(is_cyclic(whole_group(direct_product(cyclic(4), cyclic(9)))));
}

TEST(Constructors, EveryCorpusGroupIsValid) {
  for (auto& [name, g] : corpus::groups(200)) {
    SCOPED_TRACE(name);
    ASSERT_TRUE(g.valid());
    // round trip through the raw table re-runs full validation
    std::vector<Element> t(g.table().begin(), g.table().end());
    EXPECT_NO_THROW(group_from_table(std::move(t), g.order(), {}, name));
  }
}
