#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spoilkit/core/error.hpp"

namespace spoilkit {

// C x C count matrix; rows are true classes, columns are predicted classes.
class ConfusionMatrix {
 public:
  ConfusionMatrix(std::vector<std::string> vocabulary)
      : vocab_(std::move(vocabulary)), counts_(vocab_.size() * vocab_.size(), 0) {
    for (std::size_t i = 0; i < vocab_.size(); ++i) index_[vocab_[i]] = i;
    if (index_.size() != vocab_.size())
      throw Error(ErrorKind::ConfigError, "duplicate class in vocabulary");
  }

  static ConfusionMatrix from_labels(std::span<const std::string> predicted,
                                     std::span<const std::string> truth,
                                     std::vector<std::string> vocabulary) {
    if (predicted.size() != truth.size())
      throw Error(ErrorKind::LengthMismatch,
                  std::to_string(predicted.size()) + " predictions vs " +
                      std::to_string(truth.size()) + " true labels");
    ConfusionMatrix cm(std::move(vocabulary));
    for (std::size_t i = 0; i < truth.size(); ++i) cm.count(predicted[i], truth[i]);
    return cm;
  }

  void count(const std::string& predicted, const std::string& truth) {
    counts_[size() * class_index(truth) + class_index(predicted)] += 1;
  }

  std::size_t size() const { return vocab_.size(); }
  const std::vector<std::string>& vocabulary() const { return vocab_; }

  std::size_t class_index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
      throw Error(ErrorKind::UnknownLabel, "label '" + label + "' not in vocabulary");
    return it->second;
  }

  std::int64_t at(std::size_t true_class, std::size_t predicted_class) const {
    return counts_[size() * true_class + predicted_class];
  }
  std::int64_t& at(std::size_t true_class, std::size_t predicted_class) {
    return counts_[size() * true_class + predicted_class];
  }

  std::int64_t total() const {
    std::int64_t t = 0;
    for (auto v : counts_) t += v;
    return t;
  }

  // One-vs-rest reductions.
  std::int64_t true_positives(std::size_t c) const { return at(c, c); }
  std::int64_t false_positives(std::size_t c) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < size(); ++i)
      if (i != c) s += at(i, c);
    return s;
  }
  std::int64_t false_negatives(std::size_t c) const {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < size(); ++j)
      if (j != c) s += at(c, j);
    return s;
  }
  std::int64_t true_negatives(std::size_t c) const {
    return total() - true_positives(c) - false_positives(c) - false_negatives(c);
  }
  std::int64_t true_count(std::size_t c) const { return true_positives(c) + false_negatives(c); }

 private:
  std::vector<std::string> vocab_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::int64_t> counts_;
};

inline double overall_accuracy(const ConfusionMatrix& cm) {
  const std::int64_t total = cm.total();
  if (total == 0) throw Error(ErrorKind::EmptyMatrix, "no counted samples");
  std::int64_t diag = 0;
  for (std::size_t c = 0; c < cm.size(); ++c) diag += cm.at(c, c);
  return static_cast<double>(diag) / static_cast<double>(total);
}

// How "per-class accuracy" is reduced inside the mean-per-class-accuracy
// metric. Recall (diagonal over true-class total) is the balanced-accuracy
// reading and the default; OneVsRest includes true negatives.
enum class PerClassAccuracy { Recall, OneVsRest };

inline double mpca(const ConfusionMatrix& cm, PerClassAccuracy mode = PerClassAccuracy::Recall) {
  if (cm.total() == 0) throw Error(ErrorKind::EmptyMatrix, "no counted samples");
  double sum = 0.0;
  for (std::size_t c = 0; c < cm.size(); ++c) {
    const std::int64_t truth = cm.true_count(c);
    if (truth == 0)
      throw Error(ErrorKind::AbsentClass, "class '" + cm.vocabulary()[c] + "' has no true samples");
    if (mode == PerClassAccuracy::Recall) {
      sum += static_cast<double>(cm.true_positives(c)) / static_cast<double>(truth);
    } else {
      sum += static_cast<double>(cm.true_positives(c) + cm.true_negatives(c)) /
             static_cast<double>(cm.total());
    }
  }
  return sum / static_cast<double>(cm.size());
}

struct PrecisionRecall {
  // Precision is undefined when the class is never predicted (TP+FP = 0);
  // reported as absent rather than coerced to zero.
  std::optional<double> precision;
  double recall = 0.0;
};

inline PrecisionRecall precision_recall(const ConfusionMatrix& cm, const std::string& cls) {
  const std::size_t c = cm.class_index(cls);
  PrecisionRecall pr;
  const std::int64_t tp = cm.true_positives(c);
  const std::int64_t fp = cm.false_positives(c);
  const std::int64_t fn = cm.false_negatives(c);
  if (tp + fp > 0) pr.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  pr.recall = (tp + fn > 0) ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
  return pr;
}

struct MetricsReport {
  std::vector<std::string> vocabulary;
  double overall_accuracy = 0.0;
  double mpca = 0.0;
  std::vector<std::optional<double>> precision;  // per class
  std::vector<double> recall;                    // per class
  std::vector<std::int64_t> true_counts;         // per class
};

inline MetricsReport make_report(const ConfusionMatrix& cm,
                                 PerClassAccuracy mode = PerClassAccuracy::Recall) {
  MetricsReport r;
  r.vocabulary = cm.vocabulary();
  r.overall_accuracy = overall_accuracy(cm);
  r.mpca = mpca(cm, mode);
  for (std::size_t c = 0; c < cm.size(); ++c) {
    const auto pr = precision_recall(cm, cm.vocabulary()[c]);
    r.precision.push_back(pr.precision);
    r.recall.push_back(pr.recall);
    r.true_counts.push_back(cm.true_count(c));
  }
  return r;
}

struct AggregateStat {
  double mean = 0.0;
  double stddev = 0.0;        // sample standard deviation (n-1)
  std::size_t n_defined = 0;  // observations that went into the stat
};

inline AggregateStat aggregate_values(std::span<const double> values) {
  AggregateStat s;
  s.n_defined = values.size();
  if (values.empty()) return s;
  for (double v : values) s.mean += v;
  s.mean /= static_cast<double>(values.size());
  if (values.size() >= 2) {
    double acc = 0.0;
    for (double v : values) acc += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(acc / static_cast<double>(values.size() - 1));
  }
  return s;
}

struct AggregateReport {
  std::vector<std::string> vocabulary;
  AggregateStat overall_accuracy;
  AggregateStat mpca;
  std::vector<AggregateStat> precision;  // undefined entries excluded, n_defined records how many
  std::vector<AggregateStat> recall;
  std::vector<double> fold_overall_accuracy;  // per-fold series kept for significance tests
  std::vector<double> fold_mpca;
};

// Mean and sample standard deviation of each metric across the per-fold
// reports. Undefined precisions are excluded from their class aggregate.
inline AggregateReport aggregate(std::span<const MetricsReport> reports) {
  if (reports.size() < 2)
    throw Error(ErrorKind::TooFewReports,
                "need at least 2 reports, got " + std::to_string(reports.size()));
  const auto& vocab = reports.front().vocabulary;
  for (const auto& r : reports)
    if (r.vocabulary != vocab)
      throw Error(ErrorKind::LengthMismatch, "reports disagree on class vocabulary");

  AggregateReport agg;
  agg.vocabulary = vocab;
  for (const auto& r : reports) {
    agg.fold_overall_accuracy.push_back(r.overall_accuracy);
    agg.fold_mpca.push_back(r.mpca);
  }
  agg.overall_accuracy = aggregate_values(agg.fold_overall_accuracy);
  agg.mpca = aggregate_values(agg.fold_mpca);
  for (std::size_t c = 0; c < vocab.size(); ++c) {
    std::vector<double> prec, rec;
    for (const auto& r : reports) {
      if (r.precision[c].has_value()) prec.push_back(*r.precision[c]);
      rec.push_back(r.recall[c]);
    }
    agg.precision.push_back(aggregate_values(prec));
    agg.recall.push_back(aggregate_values(rec));
  }
  return agg;
}

}  // namespace spoilkit
