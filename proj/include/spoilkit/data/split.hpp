#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "spoilkit/core/error.hpp"
#include "spoilkit/core/rng.hpp"
#include "spoilkit/data/manifest.hpp"

namespace spoilkit {

struct SplitPlan {
  std::vector<std::string> train_ids;
  std::vector<std::string> test_ids;
  std::string target;  // stratification target
  double ratio = 0.8;
  std::uint64_t seed = 0;
};

struct Fold {
  std::vector<std::string> train_ids;
  std::vector<std::string> val_ids;
};

struct FoldPlan {
  std::vector<Fold> folds;
  std::string target;
  std::uint64_t seed = 0;
};

namespace detail {

// Class -> ids, in vocabulary order followed by manifest order, so the
// allocation is a pure function of (manifest order, seed).
inline std::vector<std::pair<std::string, std::vector<std::string>>> group_by_class(
    const Manifest& m, const std::vector<std::string>& ids, const std::string& target) {
  const auto& vocab = m.vocabulary(target);
  std::map<std::string, const ImageRecord*> by_id;
  for (const auto& r : m.records) by_id[r.id] = &r;
  std::vector<std::pair<std::string, std::vector<std::string>>> groups;
  for (const auto& cls : vocab) groups.emplace_back(cls, std::vector<std::string>{});
  for (const auto& id : ids) {
    auto it = by_id.find(id);
    if (it == by_id.end())
      throw Error(ErrorKind::UnknownLabel, "id '" + id + "' not present in manifest");
    const std::string& cls = it->second->labels.of(target);
    for (auto& g : groups)
      if (g.first == cls) {
        g.second.push_back(id);
        break;
      }
  }
  std::erase_if(groups, [](const auto& g) { return g.second.empty(); });
  return groups;
}

}  // namespace detail

// Stratified train/test split. Per-class train counts follow the exact
// proportional allocation with largest-remainder rounding towards a total of
// round(ratio * N); every class keeps at least one sample on each side.
inline SplitPlan split_train_test(const Manifest& m, double ratio, const std::string& target,
                                  std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0))
    throw Error(ErrorKind::ConfigError,
                "train ratio must be in (0,1); got " + std::to_string(ratio));
  std::vector<std::string> all_ids;
  for (const auto& r : m.records) all_ids.push_back(r.id);
  auto groups = detail::group_by_class(m, all_ids, target);
  if (groups.empty()) throw Error(ErrorKind::InsufficientClassSamples, "manifest has no records");
  for (const auto& [cls, ids] : groups)
    if (ids.size() < 2)
      throw Error(ErrorKind::InsufficientClassSamples,
                  "class '" + cls + "' of target '" + target + "' has " +
                      std::to_string(ids.size()) + " sample(s); need at least 2");

  const std::size_t total = all_ids.size();
  const auto total_train =
      static_cast<std::size_t>(std::llround(ratio * static_cast<double>(total)));

  // Largest-remainder allocation.
  std::vector<std::size_t> want(groups.size());
  std::vector<double> remainder(groups.size());
  std::size_t allocated = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const double exact = ratio * static_cast<double>(groups[g].second.size());
    want[g] = static_cast<std::size_t>(std::floor(exact));
    remainder[g] = exact - std::floor(exact);
    allocated += want[g];
  }
  std::vector<std::size_t> order(groups.size());
  for (std::size_t g = 0; g < order.size(); ++g) order[g] = g;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t i = 0; i < order.size() && allocated < total_train; ++i) {
    ++want[order[i]];
    ++allocated;
  }
  for (std::size_t g = 0; g < groups.size(); ++g)
    want[g] = std::clamp<std::size_t>(want[g], 1, groups[g].second.size() - 1);

  SplitPlan plan;
  plan.target = target;
  plan.ratio = ratio;
  plan.seed = seed;
  Rng rng(seed);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    auto ids = groups[g].second;
    rng.shuffle(ids);
    for (std::size_t i = 0; i < ids.size(); ++i)
      (i < want[g] ? plan.train_ids : plan.test_ids).push_back(ids[i]);
  }
  return plan;
}

// Stratified k-fold plan over the split's train ids: per class, ids are
// shuffled and dealt round-robin, so per-fold class counts differ by at most
// one sample. Validation sets partition the train set.
inline FoldPlan make_folds(const Manifest& m, const SplitPlan& split, int k,
                           const std::string& target, std::uint64_t seed) {
  if (k < 2) throw Error(ErrorKind::ConfigError, "fold count must be at least 2");
  auto groups = detail::group_by_class(m, split.train_ids, target);
  for (const auto& [cls, ids] : groups)
    if (ids.size() < static_cast<std::size_t>(k))
      throw Error(ErrorKind::InsufficientClassSamples,
                  "class '" + cls + "' has " + std::to_string(ids.size()) +
                      " train sample(s); need at least " + std::to_string(k));

  FoldPlan plan;
  plan.target = target;
  plan.seed = seed;
  plan.folds.resize(static_cast<std::size_t>(k));
  Rng rng(seed);
  std::vector<std::vector<std::string>> val(static_cast<std::size_t>(k));
  for (auto& [cls, ids] : groups) {
    rng.shuffle(ids);
    for (std::size_t i = 0; i < ids.size(); ++i)
      val[i % static_cast<std::size_t>(k)].push_back(ids[i]);
  }
  for (std::size_t f = 0; f < val.size(); ++f) {
    std::set<std::string> in_val(val[f].begin(), val[f].end());
    plan.folds[f].val_ids = val[f];
    for (const auto& id : split.train_ids)
      if (!in_val.count(id)) plan.folds[f].train_ids.push_back(id);
  }
  return plan;
}

inline FoldPlan make_folds(const Manifest& m, const SplitPlan& split, int k, std::uint64_t seed) {
  return make_folds(m, split, k, split.target, seed);
}

// --- JSON round trip, used to persist plans for exact replay ---------------

inline nlohmann::json to_json(const SplitPlan& p) {
  return {{"target", p.target}, {"ratio", p.ratio}, {"seed", p.seed},
          {"train", p.train_ids}, {"test", p.test_ids}};
}

inline SplitPlan split_plan_from_json(const nlohmann::json& j) {
  SplitPlan p;
  p.target = j.at("target").get<std::string>();
  p.ratio = j.at("ratio").get<double>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.train_ids = j.at("train").get<std::vector<std::string>>();
  p.test_ids = j.at("test").get<std::vector<std::string>>();
  return p;
}

inline nlohmann::json to_json(const FoldPlan& p) {
  nlohmann::json folds = nlohmann::json::array();
  for (const auto& f : p.folds) folds.push_back({{"train", f.train_ids}, {"val", f.val_ids}});
  return {{"target", p.target}, {"seed", p.seed}, {"folds", folds}};
}

inline FoldPlan fold_plan_from_json(const nlohmann::json& j) {
  FoldPlan p;
  p.target = j.at("target").get<std::string>();
  p.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& f : j.at("folds")) {
    Fold fold;
    fold.train_ids = f.at("train").get<std::vector<std::string>>();
    fold.val_ids = f.at("val").get<std::vector<std::string>>();
    p.folds.push_back(std::move(fold));
  }
  return p;
}

}  // namespace spoilkit
