#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mrag::core {

// Metric names in the reporting column order.
const std::vector<std::string>& metric_names();

// One question's scores. nullopt marks an undefined metric (empty
// keypoint bucket, 0/0 precision, judge unavailable); undefined values
// are excluded from aggregation.
struct QuestionMetrics {
    std::optional<double> recall_t;
    std::optional<double> recall_v;
    std::optional<double> recall_all;
    std::optional<double> precision;
    std::optional<double> f1;
    std::optional<double> rouge_l;
    std::optional<double> st_cos;
    std::optional<double> likert;
    std::optional<double> fact_cov;
    std::optional<double> vis_use;
    std::optional<double> ling_prec;

    std::optional<double> get(const std::string& metric) const;
    void set(const std::string& metric, std::optional<double> value);
};

// Mean over the defined values of one metric in one group; n is the
// number of defined values (the reported denominator).
struct MetricAggregate {
    std::optional<double> mean;
    int n = 0;
};

using GroupAggregates = std::map<std::string, MetricAggregate>;

struct ModalityCounts {
    int matched = 0;
    int total = 0;
};

struct ReportAggregates {
    GroupAggregates overall;
    std::map<std::string, GroupAggregates> by_hop;    // "single" / "multi"
    std::map<std::string, GroupAggregates> by_slice;  // query slice names
};

struct MetricReport {
    std::map<std::string, QuestionMetrics> per_question;  // keyed by question_id
    std::optional<ReportAggregates> aggregates;           // absent for empty reports
    ModalityCounts text_counts;
    ModalityCounts video_counts;
};

// Recomputes group means from per-question values; groups come from the
// provided (question_id -> hop/slice name) maps. Empty groups are dropped.
ReportAggregates aggregate_metrics(const std::map<std::string, QuestionMetrics>& per_question,
                                   const std::map<std::string, std::string>& hop_of,
                                   const std::map<std::string, std::string>& slice_of);

// Deterministic JSON; save rejects NaN/inf or out-of-range values before
// writing. load(save(r)) re-serializes to identical bytes.
std::string serialize_report(const MetricReport& report);
void save_report(const MetricReport& report, const std::string& path);
MetricReport load_report(const std::string& path);

}  // namespace mrag::core
