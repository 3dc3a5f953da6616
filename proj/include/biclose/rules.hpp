// Copyright 2026 The biclose Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Quantitative class association rules built from biclusters of a labeled
// matrix, their frequent-pattern metrics, and the two selection stages:
// a confidence/lift relevance filter and a greedy selection that keeps the
// class-restricted row coverage of its input.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "biclose/bicluster.hpp"
#include "biclose/datamodel.hpp"
#include "biclose/error.hpp"

namespace biclose {

// Attribute `column` restricted to the closed range [lo, hi].
struct QuantItem {
  ColIndex column = 0;
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double v) const { return v >= lo && v <= hi; }
};

struct Qcar {
  std::vector<QuantItem> antecedent;
  std::string consequent;
  Bicluster source;
};

struct MetricBundle {
  std::size_t support = 0;             // sup(antecedent => class)
  std::size_t antecedent_support = 0;  // sup(antecedent)
  std::size_t class_support = 0;       // sup(class)
  std::size_t rows = 0;                // n
  double rsup = 0.0;
  double confidence = 0.0;
  double completeness = 0.0;
  double lift = 0.0;
  double leverage = 0.0;
};

struct ScoredRule {
  Qcar rule;
  MetricBundle metrics;
};

// Most frequent label over `rows`; ties go to the lexicographically
// smallest label.
inline std::string majority_label(const MixedMatrix& matrix, std::span<const RowIndex> rows) {
  if (!matrix.has_labels()) throw DataError("dataset has no class labels");
  std::map<std::string, std::size_t> counts;
  for (RowIndex i : rows) ++counts[matrix.labels()[i]];
  std::string best;
  std::size_t best_count = 0;
  for (const auto& [label, count] : counts) {
    if (count > best_count) {
      best = label;
      best_count = count;
    }
  }
  return best;
}

inline Qcar build_qcar(const Bicluster& b, const MixedMatrix& matrix) {
  if (!matrix.has_labels()) throw DataError("cannot build class association rules: dataset has no class labels");
  if (b.extent.empty()) throw std::invalid_argument("build_qcar: empty extent");
  Qcar q;
  q.source = b;
  q.consequent = majority_label(matrix, b.extent);
  q.antecedent.reserve(b.intent.size());
  for (ColIndex j : b.intent) {
    const auto col = matrix.column(j);
    QuantItem item{j, col[b.extent.front()], col[b.extent.front()]};
    for (RowIndex i : b.extent) {
      item.lo = std::min(item.lo, col[i]);
      item.hi = std::max(item.hi, col[i]);
    }
    q.antecedent.push_back(item);
  }
  return q;
}

// Rows of the whole matrix that satisfy every item of the antecedent. A row
// with a missing cell in any antecedent column does not match.
inline RowSet antecedent_rows(const Qcar& q, const MixedMatrix& matrix) {
  RowSet out;
  for (RowIndex i = 0; i < matrix.rows(); ++i) {
    const bool match = std::all_of(q.antecedent.begin(), q.antecedent.end(), [&](const QuantItem& item) {
      return !matrix.is_missing(i, item.column) && item.contains(matrix.value(i, item.column));
    });
    if (match) out.push_back(i);
  }
  return out;
}

inline MetricBundle compute_metrics(const Qcar& q, const MixedMatrix& matrix) {
  if (!matrix.has_labels()) throw DataError("dataset has no class labels");
  const auto& labels = matrix.labels();
  MetricBundle mb;
  mb.rows = matrix.rows();
  for (RowIndex i = 0; i < matrix.rows(); ++i) {
    if (labels[i] == q.consequent) ++mb.class_support;
  }
  for (RowIndex i : antecedent_rows(q, matrix)) {
    ++mb.antecedent_support;
    if (labels[i] == q.consequent) ++mb.support;
  }
  const double n = static_cast<double>(mb.rows);
  const double sup = static_cast<double>(mb.support);
  const double sup_a = static_cast<double>(mb.antecedent_support);
  const double sup_c = static_cast<double>(mb.class_support);
  mb.rsup = n > 0 ? sup / n : 0.0;
  mb.confidence = sup_a > 0 ? sup / sup_a : 0.0;
  mb.completeness = sup_c > 0 ? sup / sup_c : 0.0;
  mb.lift = (sup_a > 0 && sup_c > 0) ? (sup * n) / (sup_a * sup_c) : 0.0;
  mb.leverage = n > 0 ? mb.rsup - (sup_a / n) * (sup_c / n) : 0.0;
  return mb;
}

inline std::vector<ScoredRule> score_biclusters(const std::vector<Bicluster>& biclusters, const MixedMatrix& matrix) {
  std::vector<ScoredRule> out;
  out.reserve(biclusters.size());
  for (const auto& b : biclusters) {
    Qcar q = build_qcar(b, matrix);
    MetricBundle mb = compute_metrics(q, matrix);
    out.push_back(ScoredRule{std::move(q), mb});
  }
  return out;
}

enum class Threshold { Inclusive, Exclusive };

// Absorbs the rounding of ratios such as 6/5 - 1 against 0.2.
inline constexpr double kThresholdSlack = 1e-9;

inline bool is_relevant(const MetricBundle& mb, double min_conf, double min_lift_distance,
                        Threshold mode = Threshold::Inclusive) {
  const double distance = std::abs(mb.lift - 1.0);
  if (mode == Threshold::Inclusive) {
    return mb.confidence >= min_conf - kThresholdSlack && distance >= min_lift_distance - kThresholdSlack;
  }
  return mb.confidence > min_conf + kThresholdSlack && distance > min_lift_distance + kThresholdSlack;
}

inline std::vector<ScoredRule> filter_relevance(const std::vector<ScoredRule>& rules, double min_conf,
                                                double min_lift_distance, Threshold mode = Threshold::Inclusive) {
  std::vector<ScoredRule> out;
  for (const auto& r : rules) {
    if (is_relevant(r.metrics, min_conf, min_lift_distance, mode)) out.push_back(r);
  }
  return out;
}

namespace rules_detail {

class RowBits {
 public:
  explicit RowBits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void merge(const RowBits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  std::size_t count_union(const RowBits& o) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) c += static_cast<std::size_t>(std::popcount(words_[w] | o.words_[w]));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Extent rows whose label equals the rule's consequent.
inline RowBits class_rows(const Qcar& q, const MixedMatrix& matrix) {
  RowBits bits(matrix.rows());
  for (RowIndex i : q.source.extent) {
    if (matrix.labels()[i] == q.consequent) bits.set(i);
  }
  return bits;
}

}  // namespace rules_detail

struct Coverage {
  double rows = 0.0;     // fraction of all n rows
  double columns = 0.0;  // fraction of all m columns
  std::size_t covered_rows = 0;
  std::size_t covered_columns = 0;
};

// Row coverage counts, for each rule, only the extent rows of the class the
// rule predicts; column coverage is the union of intents.
inline Coverage row_coverage(const std::vector<ScoredRule>& rules, const MixedMatrix& matrix) {
  Coverage cov;
  if (rules.empty()) return cov;
  rules_detail::RowBits rows(matrix.rows());
  std::vector<std::uint8_t> cols(matrix.cols(), 0);
  for (const auto& r : rules) {
    rows.merge(rules_detail::class_rows(r.rule, matrix));
    for (ColIndex j : r.rule.source.intent) cols[j] = 1;
  }
  cov.covered_rows = rows.count();
  cov.covered_columns = static_cast<std::size_t>(std::count(cols.begin(), cols.end(), 1));
  cov.rows = matrix.rows() ? static_cast<double>(cov.covered_rows) / static_cast<double>(matrix.rows()) : 0.0;
  cov.columns = matrix.cols() ? static_cast<double>(cov.covered_columns) / static_cast<double>(matrix.cols()) : 0.0;
  return cov;
}

// Greedy selection: repeatedly take the rule whose class rows enlarge the
// selection's coverage the most (ties: smaller intent, then input order)
// until the selection covers every row its input covers.
inline std::vector<ScoredRule> greedy_select(const std::vector<ScoredRule>& rules, const MixedMatrix& matrix) {
  using rules_detail::RowBits;
  std::vector<RowBits> bits;
  bits.reserve(rules.size());
  RowBits target(matrix.rows());
  for (const auto& r : rules) {
    bits.push_back(rules_detail::class_rows(r.rule, matrix));
    target.merge(bits.back());
  }
  const std::size_t goal = target.count();

  std::vector<ScoredRule> out;
  std::vector<std::uint8_t> taken(rules.size(), 0);
  RowBits covered(matrix.rows());
  std::size_t have = 0;
  while (have < goal) {
    std::size_t best = rules.size();
    std::size_t best_cover = 0;
    for (std::size_t k = 0; k < rules.size(); ++k) {
      if (taken[k]) continue;
      const std::size_t c = covered.count_union(bits[k]);
      if (best == rules.size() || c > best_cover ||
          (c == best_cover && rules[k].rule.source.intent.size() < rules[best].rule.source.intent.size())) {
        best = k;
        best_cover = c;
      }
    }
    if (best == rules.size() || best_cover == have) break;  // unreachable for consistent inputs
    taken[best] = 1;
    covered.merge(bits[best]);
    have = best_cover;
    out.push_back(rules[best]);
  }
  return out;
}

inline std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s(buf);
  if (s.rfind("-0.", 0) == 0 && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

inline std::string render_antecedent(const Qcar& q, const MixedMatrix& matrix) {
  std::string out;
  for (std::size_t k = 0; k < q.antecedent.size(); ++k) {
    if (k) out += ", ";
    const auto& item = q.antecedent[k];
    out += decode_interval(matrix, item.column, item.lo, item.hi);
  }
  return out;
}

// "urinePushing{yes}, micturitionPain{yes} ⇒ 1  comp=0.83 conf=1.00 lift=2.03 lev=0.21"
inline std::string render_rule(const ScoredRule& r, const MixedMatrix& matrix) {
  return render_antecedent(r.rule, matrix) + " ⇒ " + r.rule.consequent +
         "  comp=" + format_fixed(r.metrics.completeness, 2) + " conf=" + format_fixed(r.metrics.confidence, 2) +
         " lift=" + format_fixed(r.metrics.lift, 2) + " lev=" + format_fixed(r.metrics.leverage, 2);
}

}  // namespace biclose
