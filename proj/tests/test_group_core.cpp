#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "corpus.hpp"
#include "freerep/freerep.hpp"

using namespace freerep;

namespace {

std::size_t count_of_order(const Group& g, std::size_t k) {
  std::size_t c = 0;
  for (Element x = 0; x < g.order(); ++x) c += g.element_order(x) == k;
  return c;
}

// S3 as permutations of {0,1,2}, listed in lexicographic order.
Group s3_oracle() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return build_group(
      [perms](Element a, Element b) {
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        return static_cast<Element>(std::find(perms.begin(), perms.end(), c) - perms.begin());
      },
      6, {}, "S3");
}

Element by_label(const Group& g, const std::string& label) {
  for (Element x = 0; x < g.order(); ++x)
    if (g.name(x) == label) return x;
  throw std::runtime_error("no element " + label);
}

}  // namespace

TEST(Group, TrivialOracle) {
  auto g = build_group([](Element, Element) { return Element{0}; }, 1);
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.element_order(0), 1u);
}

TEST(Group, AdditionModFive) {
  auto g = build_group([](Element a, Element b) { return static_cast<Element>((a + b) % 5); }, 5);
  for (Element x = 1; x < 5; ++x) EXPECT_EQ(g.element_order(x), 5u);
}

TEST(Group, PermutationsOfThree) {
  auto g = s3_oracle();
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(count_of_order(g, 3), 2u);
  EXPECT_EQ(count_of_order(g, 2), 3u);
}

TEST(Group, IdentityRelocatedToZero) {
  // Z/3 with the identity stored at index 2.
  auto g = build_group([](Element a, Element b) { return static_cast<Element>((a + b + 1) % 3); }, 3);
  for (Element x = 0; x < 3; ++x) {
    EXPECT_EQ(g.mul(0, x), x);
    EXPECT_EQ(g.mul(x, 0), x);
  }
}

TEST(Group, RejectsNonGroups) {
  // subtraction mod 3 is not associative
  EXPECT_THROW(build_group([](Element a, Element b) { return static_cast<Element>((a + 3 - b) % 3); }, 3), Error);
  // no identity
  EXPECT_THROW(build_group([](Element, Element) { return Element{1}; }, 2), Error);
  try {
    build_group([](Element a, Element b) { return static_cast<Element>((a + 3 - b) % 3); }, 3);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAGroup);
  }
}

TEST(Group, CapIsEnforced) {
  Limits small;
  small.group_order = 10;
  try {
    cyclic(11, small);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(Group, SampledAssociativityAboveThreshold) {
  Limits l;
  l.full_associativity = 16;
  auto g = cyclic(40, l);
  EXPECT_EQ(g.order(), 40u);
  // A table that is a Latin square with identity but not associative is
  // caught by the full check.
  std::vector<Element> t{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  EXPECT_THROW(group_from_table(t, 5, {}, "latin"), Error);
}

TEST(Group, ElementOrders) {
  auto c12 = cyclic(12);
  EXPECT_EQ(c12.element_order(0), 1u);
  EXPECT_EQ(c12.element_order(1), 12u);
  auto q16 = generalized_quaternion(16);
  EXPECT_EQ(q16.element_order(by_label(q16, "R")), 8u);
}

TEST(Subgroup, Generated) {
  auto q8 = generalized_quaternion(8);
  EXPECT_TRUE(subgroup_generated(q8, std::span<const Element>{}).is_trivial());
  EXPECT_TRUE(subgroup_generated(q8, {by_label(q8, "R"), by_label(q8, "T")}).is_whole());
  auto g = semidirect_cyclic({7, 3, 2});
  std::vector<Element> threes;
  for (Element x = 0; x < g.order(); ++x)
    if (g.element_order(x) == 3) threes.push_back(x);
  auto c1 = subgroup_generated(g, {threes[0]});
  Element other = 0;
  for (auto y : threes)
    if (!c1.contains(y)) other = y;
  ASSERT_NE(other, 0u);
  EXPECT_EQ(subgroup_generated(g, {threes[0], other}).order(), 21u);
}

TEST(Subgroup, VerifiedRejectsNonSubgroups) {
  auto g = cyclic(6);
  EXPECT_THROW(Subgroup::verified(g, {1, 2}), Error);
  EXPECT_THROW(Subgroup::verified(g, {0, 1}), Error);
  EXPECT_EQ(Subgroup::verified(g, {0, 2, 4}).order(), 3u);
}

TEST(Subgroup, Enumeration) {
  for (std::size_t p : {2u, 3u, 5u, 7u, 11u}) EXPECT_EQ(all_subgroups(cyclic(p)).size(), 2u);
  auto q8 = all_subgroups(generalized_quaternion(8));
  EXPECT_EQ(q8.size(), 6u);
  std::map<std::size_t, int> orders;
  for (auto& h : q8) ++orders[h.order()];
  EXPECT_EQ(orders, (std::map<std::size_t, int>{{1, 1}, {2, 1}, {4, 3}, {8, 1}}));
  auto c33 = all_subgroups(direct_product(cyclic(3), cyclic(3)));
  EXPECT_EQ(c33.size(), 6u);
}

TEST(Subgroup, EnumerationCap) {
  Limits l;
  l.subgroup_enumeration = 5;
  EXPECT_THROW(all_subgroups(direct_product(cyclic(3), cyclic(3)), l), Error);
}

TEST(Sylow, Examples) {
  EXPECT_EQ(sylow_subgroup(cyclic(6), 2).order(), 2u);
  auto s = sylow_subgroup(sl2(3), 2);
  EXPECT_EQ(s.order(), 8u);
  EXPECT_TRUE(is_isomorphic(as_group(s).group, generalized_quaternion(8)));
  EXPECT_EQ(sylow_subgroup(sl2(5), 5).order(), 5u);
}

TEST(Structure, CenterAndCommutators) {
  auto c = cyclic(10);
  EXPECT_TRUE(center(c).is_whole());
  EXPECT_TRUE(commutator_subgroup(c).is_trivial());
  EXPECT_TRUE(is_solvable(c));
  auto q8 = generalized_quaternion(8);
  EXPECT_EQ(center(q8).order(), 2u);
  EXPECT_EQ(commutator_subgroup(q8).order(), 2u);
  EXPECT_TRUE(is_solvable(q8));
  auto sl = sl2(5);
  EXPECT_TRUE(is_perfect(sl));
  EXPECT_FALSE(is_solvable(sl));
  auto normals = normal_subgroups(sl);
  ASSERT_EQ(normals.size(), 3u);
  sort_subgroups(normals);
  EXPECT_EQ(normals[0].order(), 1u);
  EXPECT_EQ(normals[1].order(), 2u);
  EXPECT_EQ(normals[2].order(), 120u);
}

TEST(Structure, Quotients) {
  auto q8 = generalized_quaternion(8);
  auto [trivial, p0] = quotient_group(q8, whole_group(q8));
  EXPECT_EQ(trivial.order(), 1u);
  auto [v4, p1] = quotient_group(q8, center(q8));
  EXPECT_EQ(v4.order(), 4u);
  EXPECT_EQ(count_of_order(v4, 4), 0u);
  auto sl = sl2(5);
  auto [psl, p2] = quotient_group(sl, center(sl));
  EXPECT_EQ(psl.order(), 60u);
  EXPECT_EQ(normal_subgroups(psl).size(), 2u);
  EXPECT_THROW(quotient_group(dihedral(3), subgroup_generated(dihedral(3), {3})), Error);
}

TEST(Isomorphism, Examples) {
  EXPECT_FALSE(is_isomorphic(cyclic(4), direct_product(cyclic(2), cyclic(2))));
  // Q8 x| C3 with the generator cycling i -> j -> k.
  auto q8 = generalized_quaternion(8);
  const Element i = by_label(q8, "R"), j = by_label(q8, "T"), k = q8.mul(i, j);
  std::vector<Element> alpha(8);
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 2; ++b) alpha[a + 4 * b] = q8.mul(q8.power(j, a), q8.power(k, b));
  auto act = [&](Element x, Element c) {
    for (Element t = 0; t < c; ++t) x = alpha[x];
    return x;
  };
  auto t2 = build_group(
      [&](Element x, Element y) {
        Element q1 = x % 8, c1 = x / 8, q2 = y % 8, c2 = y / 8;
        return static_cast<Element>(q8.mul(q1, act(q2, c1)) + 8 * ((c1 + c2) % 3));
      },
      24);
  auto iso = is_isomorphic(sl2(3), t2);
  ASSERT_TRUE(iso);
  EXPECT_TRUE(iso->verify());
  EXPECT_TRUE(iso->is_bijective());
  auto units = binary_dihedral_quaternions(4).group;
  auto iso16 = is_isomorphic(generalized_quaternion(16), units);
  ASSERT_TRUE(iso16);
  EXPECT_TRUE(iso16->verify());
}

TEST(Roots, Examples) {
  const Element id = 0;
  std::span<const Element> one(&id, 1);
  auto g = dihedral(4);
  EXPECT_EQ(count_nth_roots(g, one, g.order()), g.order());
  EXPECT_EQ(count_nth_roots(s3_oracle(), one, 2), 4u);
  EXPECT_EQ(count_nth_roots(generalized_quaternion(8), one, 2), 2u);
  const Element r = 1;
  EXPECT_THROW(count_nth_roots(dihedral(3), std::span<const Element>(&r, 1), 2), Error);
}

// --- Properties over the corpus ------------------------------------------------

class CorpusProperties : public ::testing::Test {
 protected:
  static const std::vector<corpus::Entry>& groups() {
    static const auto g = corpus::groups(96);
    return g;
  }
};

TEST_F(CorpusProperties, LagrangeAndSylowCount) {
  for (auto& [name, g] : groups()) {
    SCOPED_TRACE(name);
    for (auto p : prime_factors(g.order())) {
      auto s = sylow_subgroup(g, p);
      auto pk = s.order();
      EXPECT_EQ(g.order() % pk, 0u);
      EXPECT_NE((g.order() / pk) % p, 0u);
      auto t = conjugates(s).size();
      EXPECT_EQ(t % p, 1 % p);
      EXPECT_EQ((g.order() / pk) % t, 0u);
    }
  }
}

TEST_F(CorpusProperties, Frobenius) {
  for (auto& [name, g] : groups()) {
    SCOPED_TRACE(name);
    const Element id = 0;
    for (auto n : divisors(g.order())) EXPECT_EQ(count_nth_roots(g, std::span<const Element>(&id, 1), n) % n, 0u);
    // strengthened form on each conjugacy class C
    for (auto& cls : conjugacy_classes(g))
      for (auto n : divisors(g.order()))
        EXPECT_EQ(count_nth_roots(g, cls, n) % std::gcd(n * cls.size(), g.order()), 0u);
  }
}

TEST_F(CorpusProperties, PGroupFacts) {
  for (auto& [name, g] : groups()) {
    auto primes = prime_factors(g.order());
    if (primes.size() != 1) continue;
    SCOPED_TRACE(name);
    const auto p = primes.front();
    EXPECT_FALSE(center(g).is_trivial());
    for (auto& h : all_subgroups(g))
      if (h.index() == p) {
        EXPECT_TRUE(is_normal(h));
      }
  }
}

TEST_F(CorpusProperties, OddPGroupWithUniqueSubgroupOfOrderPIsCyclic) {
  for (auto& [name, g] : groups()) {
    for (auto p : prime_factors(g.order())) {
      if (p == 2) continue;
      auto s = sylow_subgroup(g, p);
      auto sg = as_group(s).group;
      std::size_t order_p = 0;
      for (auto& c : cyclic_subgroups(sg)) order_p += c.order() == p;
      if (order_p == 1) {
        EXPECT_TRUE(is_cyclic(whole_group(sg))) << name;
      }
    }
  }
}

TEST_F(CorpusProperties, QuotientProjection) {
  for (auto& [name, g] : groups()) {
    if (g.order() > 48) continue;
    SCOPED_TRACE(name);
    for (auto& n : normal_subgroups(g)) {
      auto [q, proj] = quotient_group(g, n);
      EXPECT_TRUE(proj.verify());
      EXPECT_TRUE(proj.kernel() == n);
      EXPECT_EQ(q.order() * n.order(), g.order());
    }
  }
}

TEST_F(CorpusProperties, IsomorphismReflexiveAndSymmetric) {
  const auto& gs = groups();
  for (std::size_t a = 0; a < gs.size(); a += 7) {
    auto self = is_isomorphic(gs[a].group, gs[a].group);
    ASSERT_TRUE(self) << gs[a].name;
    EXPECT_TRUE(self->verify());
    for (std::size_t b = a + 1; b < gs.size(); b += 5) {
      if (gs[a].group.order() != gs[b].group.order()) continue;
      auto ab = is_isomorphic(gs[a].group, gs[b].group);
      auto ba = is_isomorphic(gs[b].group, gs[a].group);
      EXPECT_EQ(ab.has_value(), ba.has_value()) << gs[a].name << " " << gs[b].name;
      if (ab) {
        EXPECT_TRUE(ab->verify() && ab->is_bijective());
      }
    }
  }
}

TEST(Cancellation, DeadlineInterruptsWork) {
  CancelToken token;
  token.cancel();
  try {
    normal_subgroups(sl2(5), &token);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Cancelled);
  }
}
