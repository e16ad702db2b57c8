#include <gtest/gtest.h>

#include "grpbounds/bitset.hpp"
#include "grpbounds/build.hpp"
#include "grpbounds/group.hpp"
#include "grpbounds/perm.hpp"
#include "oracles.hpp"

using namespace grpbounds;

TEST(Perm, IdentityAndValidation) {
  Perm id(4);
  EXPECT_TRUE(id.is_identity());
  EXPECT_EQ(id.order(), 1U);
  EXPECT_THROW(Perm(0), InvalidArgument);
  EXPECT_THROW(Perm(std::vector<Point>{0, 0, 1}), InvalidArgument);
  EXPECT_THROW(Perm(std::vector<Point>{0, 3}), InvalidArgument);
}

TEST(Perm, ComposeAppliesRightFactorFirst) {
  const Perm a = Perm::from_cycles(3, {{0, 1}});
  const Perm b = Perm::from_cycles(3, {{1, 2}});
  const Perm ab = compose(a, b);
  for (Point x = 0; x < 3; ++x) EXPECT_EQ(ab(x), a(b(x)));
  EXPECT_NE(compose(a, b), compose(b, a));
}

TEST(Perm, OrderIsLcmOfCycleLengths) {
  EXPECT_EQ(Perm::from_cycles(5, {{0, 1}, {2, 3, 4}}).order(), 6U);
  EXPECT_EQ(Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}}).order(), 6U);
}

TEST(Perm, InverseAndDegreeMismatch) {
  const Perm p = Perm::from_cycles(4, {{0, 1, 2, 3}});
  EXPECT_TRUE(compose(p, p.inverse()).is_identity());
  EXPECT_THROW(compose(p, Perm(3)), DegreeMismatch);
}

TEST(Bitset, BasicOperations) {
  Bitset a(130), b(130);
  a.set(0);
  a.set(64);
  a.set(129);
  b.set(64);
  EXPECT_EQ(a.count(), 3U);
  EXPECT_TRUE(b.is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_EQ(a.intersection_count(b), 1U);
  EXPECT_EQ(a.to_vector(), (std::vector<std::uint32_t>{0, 64, 129}));
  b |= a;
  EXPECT_EQ(a, b);
  b.reset(0);
  EXPECT_NE(a, b);
  EXPECT_EQ(BitsetHash{}(a), BitsetHash{}(a));
}

TEST(Group, EnumerationBasics) {
  const Group s3 = Group::enumerate({Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})});
  EXPECT_EQ(s3.order(), 6U);
  EXPECT_TRUE(s3.element(kIdentity).is_identity());
  EXPECT_FALSE(s3.is_abelian());
  for (ElementId a = 0; a < s3.order(); ++a) {
    EXPECT_EQ(s3.mul(a, s3.inv(a)), kIdentity);
    EXPECT_EQ(s3.element_order(a), oracle::order_of(s3, a));
    EXPECT_EQ(s3.find(s3.element(a)), a);
    for (ElementId b = 0; b < s3.order(); ++b) {
      EXPECT_EQ(s3.element(s3.mul(a, b)), compose(s3.element(a), s3.element(b)));
    }
  }
}

TEST(Group, CapIsEnforced) {
  EXPECT_THROW(cyclic(10, 9), CapExceeded);
  EXPECT_EQ(cyclic(10, 10).order(), 10U);
}

TEST(Group, PowersAndCommutators) {
  const Group g = dihedral(16);
  for (ElementId a = 0; a < g.order(); ++a) {
    EXPECT_EQ(g.pow(a, static_cast<std::int64_t>(g.element_order(a))), kIdentity);
    EXPECT_EQ(g.pow(a, -1), g.inv(a));
    EXPECT_EQ(g.pow(a, 3), g.mul(g.mul(a, a), a));
    for (ElementId b = 0; b < g.order(); ++b) {
      EXPECT_EQ(g.commutator(a, b), g.mul(g.inv(a), g.conjugate(a, b)));
    }
  }
}

TEST(Group, LargeGroupWithoutTableMatchesComposition) {
  const Group g = elementary_abelian(3, 7);  // 2187 > table limit
  EXPECT_EQ(g.order(), 2187U);
  EXPECT_TRUE(g.is_abelian());
  for (ElementId a = 0; a < g.order(); a += 97) {
    for (ElementId b = 0; b < g.order(); b += 89) {
      EXPECT_EQ(g.element(g.mul(a, b)), compose(g.element(a), g.element(b)));
    }
  }
}

TEST(Group, CommutatorExpansionIdentityOnAllTriples) {
  for (const Group& g : {dihedral(8), dihedral(12), Group::enumerate({Perm::from_cycles(4, {{0, 1}}),
                                                                       Perm::from_cycles(4, {{0, 1, 2, 3}})})}) {
    for (ElementId x = 0; x < g.order(); ++x) {
      for (ElementId y = 0; y < g.order(); ++y) {
        for (ElementId z = 0; z < g.order(); ++z) {
          const ElementId lhs = g.commutator(g.mul(x, z), y);
          const ElementId rhs =
              g.mul(g.mul(g.commutator(z, g.commutator(y, x)), g.commutator(x, y)), g.commutator(z, y));
          ASSERT_EQ(lhs, rhs);
        }
      }
    }
  }
}
