#include "spoilkit/data/split.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "testutil.hpp"

using namespace spoilkit;
using testutil::make_manifest;
using testutil::random_manifest;

namespace {

std::map<std::string, int> class_counts(const Manifest& m, const std::vector<std::string>& ids,
                                        const std::string& target) {
  std::map<std::string, const ImageRecord*> by_id;
  for (const auto& r : m.records) by_id[r.id] = &r;
  std::map<std::string, int> counts;
  for (const auto& id : ids) counts[by_id.at(id)->labels.of(target)]++;
  return counts;
}

}  // namespace

TEST(Split, ExactProportionalAllocation) {
  const auto m = make_manifest({{"A", 70}, {"B", 30}});
  const auto plan = split_train_test(m, 0.8, "bmac_category", 0);
  const auto train = class_counts(m, plan.train_ids, "bmac_category");
  const auto test = class_counts(m, plan.test_ids, "bmac_category");
  EXPECT_EQ(train.at("A"), 56);
  EXPECT_EQ(train.at("B"), 24);
  EXPECT_EQ(test.at("A"), 14);
  EXPECT_EQ(test.at("B"), 6);
}

TEST(Split, DegenerateRatioRejected) {
  const auto m = make_manifest({{"A", 10}});
  EXPECT_THROW(split_train_test(m, 1.0, "bmac_category", 0), Error);
  EXPECT_THROW(split_train_test(m, 0.0, "bmac_category", 0), Error);
}

TEST(Split, DeterministicPerSeed) {
  const auto m = make_manifest({{"A", 33}, {"B", 21}, {"C", 8}});
  const auto p1 = split_train_test(m, 0.8, "plasticity", 42);
  const auto p2 = split_train_test(m, 0.8, "plasticity", 42);
  EXPECT_EQ(to_json(p1).dump(), to_json(p2).dump());
  const auto p3 = split_train_test(m, 0.8, "plasticity", 43);
  EXPECT_NE(to_json(p1).dump(), to_json(p3).dump());
}

TEST(Split, SingleSampleClassRejectedByName) {
  const auto m = make_manifest({{"A", 10}, {"Rare", 1}});
  try {
    split_train_test(m, 0.8, "bmac_category", 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientClassSamples);
    EXPECT_NE(std::string(e.what()).find("Rare"), std::string::npos);
  }
}

TEST(Folds, ExactDivisibilityGivesUniformFolds) {
  const auto m = make_manifest({{"A", 13}, {"B", 12}});  // train side: 10 A + 10 B
  const auto split = split_train_test(m, 0.8, "bmac_category", 1);
  ASSERT_EQ(split.train_ids.size(), 20u);
  const auto folds = make_folds(m, split, 5, 1);
  ASSERT_EQ(folds.folds.size(), 5u);
  for (const auto& f : folds.folds) {
    const auto counts = class_counts(m, f.val_ids, "bmac_category");
    EXPECT_EQ(counts.at("A"), 2);
    EXPECT_EQ(counts.at("B"), 2);
    EXPECT_EQ(f.train_ids.size() + f.val_ids.size(), split.train_ids.size());
  }
}

TEST(Folds, ValidationSetsPartitionTrainSet) {
  const auto m = make_manifest({{"A", 26}, {"B", 19}, {"C", 11}});
  const auto split = split_train_test(m, 0.8, "bmac_category", 9);
  const auto folds = make_folds(m, split, 5, 9);
  std::set<std::string> seen;
  std::size_t total = 0;
  for (const auto& f : folds.folds) {
    for (const auto& id : f.val_ids) {
      EXPECT_TRUE(seen.insert(id).second) << "id in two validation sets";
      ++total;
    }
    // No leakage between a fold's train and validation parts.
    std::set<std::string> fold_train(f.train_ids.begin(), f.train_ids.end());
    for (const auto& id : f.val_ids) EXPECT_FALSE(fold_train.count(id));
  }
  EXPECT_EQ(total, split.train_ids.size());
  const std::set<std::string> train(split.train_ids.begin(), split.train_ids.end());
  EXPECT_EQ(seen, train);
}

TEST(Folds, UnbalancedClassesStayWithinOneSample) {
  // Train side ends up 13 A, 7 B by construction below.
  const auto m = make_manifest({{"A", 16}, {"B", 9}});
  auto split = split_train_test(m, 0.8, "bmac_category", 3);
  auto counts = class_counts(m, split.train_ids, "bmac_category");
  ASSERT_EQ(counts.at("A"), 13);
  ASSERT_EQ(counts.at("B"), 7);
  const auto folds = make_folds(m, split, 5, 3);
  for (const auto& f : folds.folds) {
    const auto val = class_counts(m, f.val_ids, "bmac_category");
    EXPECT_GE(val.at("A"), 2);
    EXPECT_LE(val.at("A"), 3);
    EXPECT_GE(val.at("B"), 1);
    EXPECT_LE(val.at("B"), 2);
  }
}

TEST(Folds, TooFewSamplesPerClassRejected) {
  const auto m = make_manifest({{"A", 30}, {"B", 5}});  // train B count 4 < k
  const auto split = split_train_test(m, 0.8, "bmac_category", 0);
  try {
    make_folds(m, split, 5, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientClassSamples);
  }
}

TEST(SplitFolds, PropertySweepOverRandomManifests) {
  Rng rng(20240809);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_manifest(rng, 2, 6, 7, 60);
    const std::uint64_t seed = rng.next_u64();
    const auto split = split_train_test(m, 0.8, "bmac_category", seed);

    // Partition + disjointness.
    std::set<std::string> train(split.train_ids.begin(), split.train_ids.end());
    std::set<std::string> test(split.test_ids.begin(), split.test_ids.end());
    ASSERT_EQ(train.size(), split.train_ids.size());
    ASSERT_EQ(test.size(), split.test_ids.size());
    for (const auto& id : test) ASSERT_FALSE(train.count(id));
    ASSERT_EQ(train.size() + test.size(), m.records.size());

    // Per-class proportionality within one sample of the exact allocation.
    const auto total_counts = class_counts(m, [&] {
      std::vector<std::string> all;
      for (const auto& r : m.records) all.push_back(r.id);
      return all;
    }(), "bmac_category");
    const auto train_counts = class_counts(m, split.train_ids, "bmac_category");
    for (const auto& [cls, n] : total_counts) {
      const double exact = 0.8 * n;
      const int got = train_counts.count(cls) ? train_counts.at(cls) : 0;
      ASSERT_GE(got, static_cast<int>(std::floor(exact)) - 1);
      ASSERT_LE(got, static_cast<int>(std::ceil(exact)) + 1);
      ASSERT_GE(got, 1);
      ASSERT_LE(got, n - 1);
    }

    // Bitwise reproducibility.
    const auto split2 = split_train_test(m, 0.8, "bmac_category", seed);
    ASSERT_EQ(to_json(split), to_json(split2));

    // Folds: partition of train set, per-class balance within one sample.
    const int k = 5;
    bool feasible = true;
    for (const auto& [cls, n] : train_counts) feasible &= n >= k;
    if (!feasible) continue;
    const auto folds = make_folds(m, split, k, seed ^ 0x5eedf01d);
    std::set<std::string> all_val;
    for (const auto& f : folds.folds) {
      const auto val = class_counts(m, f.val_ids, "bmac_category");
      for (const auto& [cls, n] : train_counts) {
        const int v = val.count(cls) ? val.at(cls) : 0;
        ASSERT_GE(v, n / k);
        ASSERT_LE(v, n / k + 1);
      }
      for (const auto& id : f.val_ids) ASSERT_TRUE(all_val.insert(id).second);
    }
    ASSERT_EQ(all_val.size(), split.train_ids.size());
    const auto folds2 = make_folds(m, split, k, seed ^ 0x5eedf01d);
    ASSERT_EQ(to_json(folds), to_json(folds2));
  }
}

TEST(SplitFolds, JsonRoundTrip) {
  const auto m = make_manifest({{"A", 12}, {"B", 9}});
  const auto split = split_train_test(m, 0.8, "fabric_structure", 17);
  const auto split2 = split_plan_from_json(to_json(split));
  EXPECT_EQ(split.train_ids, split2.train_ids);
  EXPECT_EQ(split.test_ids, split2.test_ids);
  EXPECT_EQ(split.target, split2.target);
  EXPECT_EQ(split.seed, split2.seed);

  const auto folds = make_folds(m, split, 3, 17);
  const auto folds2 = fold_plan_from_json(to_json(folds));
  ASSERT_EQ(folds.folds.size(), folds2.folds.size());
  for (std::size_t f = 0; f < folds.folds.size(); ++f) {
    EXPECT_EQ(folds.folds[f].train_ids, folds2.folds[f].train_ids);
    EXPECT_EQ(folds.folds[f].val_ids, folds2.folds[f].val_ids);
  }
}
