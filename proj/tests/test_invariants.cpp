#include <gtest/gtest.h>

#include "grpbounds/build.hpp"
#include "grpbounds/catalog.hpp"
#include "grpbounds/invariants.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace grpbounds;
using testing_support::record;

TEST(Arithmetic, DivisorsAndPrimePowers) {
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(prime_power_base(243), 3U);
  EXPECT_EQ(prime_power_base(64), 2U);
  EXPECT_EQ(prime_power_base(7), 7U);
  EXPECT_FALSE(prime_power_base(12).has_value());
  EXPECT_FALSE(prime_power_base(1).has_value());
}

TEST(Exponent, Examples) {
  EXPECT_EQ(exponent(cyclic(6)), 6U);
  EXPECT_EQ(exponent(to_group(record("6.1"))), 6U);
  EXPECT_EQ(exponent(wreath(cyclic(3), cyclic(3))), 9U);
  EXPECT_EQ(exponent(to_group(record("1.1"))), 1U);
}

TEST(GeneratorExponent, Examples) {
  EXPECT_EQ(generator_exponent(cyclic(12)), 12U);
  EXPECT_EQ(generator_exponent(wreath(cyclic(3), cyclic(3))), 3U);
  EXPECT_EQ(generator_exponent(dihedral(16)), 2U);
  EXPECT_EQ(generator_exponent(to_group(record("1.1"))), 1U);
  EXPECT_EQ(generator_exponent(to_group(record("8.4"))), 4U);  // Q8
}

TEST(GeneratorExponent, MatchesSubsetOracleUpToOrder24) {
  for (const auto& rec : testing_support::small_between(1, 24)) {
    const Group g = to_group(rec);
    const auto ge = generator_exponent(g);
    EXPECT_EQ(ge, oracle::ge_by_subsets(g)) << rec.id;
    EXPECT_EQ(exponent(g) % ge, 0U) << rec.id;
  }
}

TEST(Derived, Examples) {
  EXPECT_TRUE(derived_subgroup(cyclic(10)).is_trivial());
  EXPECT_EQ(derived_subgroup(to_group(record("6.1"))).order(), 3U);
  const Group d16 = dihedral(16);
  const SubgroupSet d = derived_subgroup(d16);
  EXPECT_EQ(d.order(), 4U);
  EXPECT_EQ(exponent(d), 4U);  // cyclic
}

TEST(LowerCentralSeries, Examples) {
  const auto abelian = lower_central_series(cyclic(6));
  ASSERT_EQ(abelian.size(), 2U);
  EXPECT_TRUE(abelian.back().is_trivial());

  const auto s3 = lower_central_series(to_group(record("6.1")));
  ASSERT_EQ(s3.size(), 3U);  // S3 > A3 = A3
  EXPECT_EQ(s3[1].order(), 3U);
  EXPECT_EQ(s3[2].order(), 3U);

  const auto d16 = lower_central_series(dihedral(16));
  std::vector<std::size_t> orders;
  for (const auto& h : d16) orders.push_back(h.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{16, 4, 2, 1}));
}

TEST(LowerCentralSeries, MatchesOracle) {
  for (const auto& rec : testing_support::small_between(1, 32)) {
    const Group g = to_group(rec);
    const auto lib = lower_central_series(g);
    const auto ref = oracle::lower_central(g, oracle::whole(g));
    ASSERT_EQ(lib.size(), ref.size()) << rec.id;
    for (std::size_t i = 0; i < lib.size(); ++i) EXPECT_EQ(lib[i].order(), oracle::count(ref[i])) << rec.id;
  }
}

TEST(NilpotencyClass, Examples) {
  EXPECT_EQ(nilpotency_class(cyclic(2)), 1);
  EXPECT_EQ(nilpotency_class(to_group(record("1.1"))), 0);
  EXPECT_EQ(nilpotency_class(wreath(cyclic(3), cyclic(3))), 3);
  EXPECT_EQ(nilpotency_class(dihedral(16)), 3);
  EXPECT_FALSE(nilpotency_class(to_group(record("6.1"))).has_value());
  EXPECT_TRUE(is_nilpotent(whole_group(direct_product(cyclic(4), to_group(record("8.4"))))));
  EXPECT_FALSE(is_nilpotent(whole_group(to_group(record("12.3")))));
}

TEST(Solvable, Examples) {
  EXPECT_TRUE(is_solvable(dihedral(16)));
  EXPECT_TRUE(is_solvable(to_group(record("6.1"))));
  EXPECT_TRUE(is_solvable(to_group(record("24.12"))));
  EXPECT_FALSE(is_solvable(to_group(record("60.5"))));
}

TEST(Regular, Examples) {
  EXPECT_TRUE(is_regular(cyclic(8), 2));
  EXPECT_TRUE(is_regular(elementary_abelian(3, 3), 3));
  EXPECT_FALSE(is_regular(dihedral(8), 2));
  EXPECT_THROW(is_regular(cyclic(6), 2), InvalidArgument);
  EXPECT_THROW(is_regular(cyclic(9), 2), InvalidArgument);
  for (const auto& rec : testing_support::small_between(27, 27)) {
    EXPECT_TRUE(is_regular(to_group(rec), 3)) << rec.id;
  }
}

TEST(WeightCommutators, Examples) {
  const Group d16 = dihedral(16);
  EXPECT_TRUE(weight_commutator_subgroup(d16, 1).is_whole());
  EXPECT_TRUE(weight_commutator_subgroup(cyclic(9), 2).is_trivial());
  const auto lcs = lower_central_series(d16);
  for (int i = 2; i <= 4; ++i) {
    const auto w = weight_commutator_subgroup(d16, i);
    const auto& gi = i - 1 < static_cast<int>(lcs.size()) ? lcs[static_cast<std::size_t>(i - 1)] : lcs.back();
    EXPECT_TRUE(w.is_subgroup_of(gi)) << i;
  }
}

TEST(WeightCommutators, ContainedInLowerCentralTerms) {
  for (const auto& rec : testing_support::small_between(16, 16)) {
    const Group g = to_group(rec);
    const auto lcs = lower_central_series(g);
    for (int i = 1; i <= 4; ++i) {
      const auto& gi = lcs[std::min<std::size_t>(static_cast<std::size_t>(i - 1), lcs.size() - 1)];
      EXPECT_TRUE(weight_commutator_subgroup(g, i).is_subgroup_of(gi)) << rec.id << " weight " << i;
    }
  }
}

TEST(HallClassTwo, PowerOfProduct) {
  for (const auto& id : {"8.3", "8.4", "16.3", "27.3", "32.2"}) {
    const Group g = to_group(record(id));
    ASSERT_LE(nilpotency_class(g).value(), 2) << id;
    for (ElementId a = 0; a < g.order(); ++a) {
      for (ElementId b = 0; b < g.order(); ++b) {
        for (std::int64_t n = 2; n <= 8; ++n) {
          const ElementId lhs = g.pow(g.mul(a, b), n);
          const ElementId rhs = g.mul(g.mul(g.pow(a, n), g.pow(b, n)), g.pow(g.commutator(b, a), n * (n - 1) / 2));
          ASSERT_EQ(lhs, rhs) << id;
        }
      }
    }
  }
}

TEST(InvariantReport, Dihedral16) {
  const auto rep = invariant_report(dihedral(16));
  EXPECT_EQ(rep.order, 16U);
  EXPECT_EQ(rep.exponent, 8U);
  EXPECT_EQ(rep.generator_exponent, 2U);
  EXPECT_EQ(rep.nilpotency_class, 3);
  EXPECT_TRUE(rep.is_nilpotent);
  EXPECT_TRUE(rep.is_solvable);
  EXPECT_EQ(rep.prime, 2U);
  EXPECT_EQ(rep.is_regular, false);
  EXPECT_EQ(rep.exp_derived, 4U);
}

TEST(InvariantReport, NonPrimePower) {
  const auto rep = invariant_report(to_group(record("6.1")));
  EXPECT_FALSE(rep.is_nilpotent);
  EXPECT_FALSE(rep.nilpotency_class.has_value());
  EXPECT_FALSE(rep.prime.has_value());
  EXPECT_FALSE(rep.is_regular.has_value());
}
