#include "mrag/core/report.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "mrag/errors.hpp"

namespace mrag::core {

using nlohmann::json;

const std::vector<std::string>& metric_names() {
    static const std::vector<std::string> names = {
        "recall_t", "recall_v", "recall_all", "precision", "f1",  "rouge_l",
        "st_cos",   "likert",   "fact_cov",   "vis_use",   "ling_prec"};
    return names;
}

std::optional<double> QuestionMetrics::get(const std::string& metric) const {
    if (metric == "recall_t") return recall_t;
    if (metric == "recall_v") return recall_v;
    if (metric == "recall_all") return recall_all;
    if (metric == "precision") return precision;
    if (metric == "f1") return f1;
    if (metric == "rouge_l") return rouge_l;
    if (metric == "st_cos") return st_cos;
    if (metric == "likert") return likert;
    if (metric == "fact_cov") return fact_cov;
    if (metric == "vis_use") return vis_use;
    if (metric == "ling_prec") return ling_prec;
    throw ValidationError("unknown metric: " + metric);
}

void QuestionMetrics::set(const std::string& metric, std::optional<double> value) {
    if (metric == "recall_t") recall_t = value;
    else if (metric == "recall_v") recall_v = value;
    else if (metric == "recall_all") recall_all = value;
    else if (metric == "precision") precision = value;
    else if (metric == "f1") f1 = value;
    else if (metric == "rouge_l") rouge_l = value;
    else if (metric == "st_cos") st_cos = value;
    else if (metric == "likert") likert = value;
    else if (metric == "fact_cov") fact_cov = value;
    else if (metric == "vis_use") vis_use = value;
    else if (metric == "ling_prec") ling_prec = value;
    else throw ValidationError("unknown metric: " + metric);
}

namespace {

// [0,1] for the automatic metrics, [1,5] for the judge scores.
std::pair<double, double> metric_range(const std::string& metric) {
    if (metric == "likert" || metric == "fact_cov" || metric == "vis_use" ||
        metric == "ling_prec")
        return {1.0, 5.0};
    if (metric == "st_cos") return {-1.0, 1.0};
    return {0.0, 1.0};
}

void check_value(const std::string& ctx, const std::string& metric,
                 const std::optional<double>& v) {
    if (!v) return;
    if (!std::isfinite(*v))
        throw ValidationError(ctx + ": metric " + metric + " is not finite");
    auto [lo, hi] = metric_range(metric);
    if (*v < lo || *v > hi)
        throw ValidationError(ctx + ": metric " + metric + " outside [" +
                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

json metrics_to_json(const QuestionMetrics& m) {
    json j = json::object();
    for (const auto& name : metric_names()) {
        auto v = m.get(name);
        j[name] = v ? json(*v) : json(nullptr);
    }
    return j;
}

QuestionMetrics metrics_from_json(const json& j) {
    QuestionMetrics m;
    for (const auto& name : metric_names()) {
        if (j.contains(name) && !j.at(name).is_null()) m.set(name, j.at(name).get<double>());
    }
    return m;
}

json group_to_json(const GroupAggregates& g) {
    json j = json::object();
    for (const auto& [metric, agg] : g) {
        j[metric] = json{{"mean", agg.mean ? json(*agg.mean) : json(nullptr)}, {"n", agg.n}};
    }
    return j;
}

GroupAggregates group_from_json(const json& j) {
    GroupAggregates g;
    for (const auto& [metric, val] : j.items()) {
        MetricAggregate agg;
        if (!val.at("mean").is_null()) agg.mean = val.at("mean").get<double>();
        agg.n = val.at("n").get<int>();
        g[metric] = agg;
    }
    return g;
}

}  // namespace

ReportAggregates aggregate_metrics(const std::map<std::string, QuestionMetrics>& per_question,
                                   const std::map<std::string, std::string>& hop_of,
                                   const std::map<std::string, std::string>& slice_of) {
    auto aggregate_group = [&](const std::vector<const QuestionMetrics*>& members) {
        GroupAggregates g;
        for (const auto& metric : metric_names()) {
            MetricAggregate agg;
            double sum = 0.0;
            for (const auto* m : members) {
                if (auto v = m->get(metric)) {
                    sum += *v;
                    agg.n += 1;
                }
            }
            if (agg.n > 0) agg.mean = sum / agg.n;
            g[metric] = agg;
        }
        return g;
    };

    std::vector<const QuestionMetrics*> all;
    std::map<std::string, std::vector<const QuestionMetrics*>> hop_groups;
    std::map<std::string, std::vector<const QuestionMetrics*>> slice_groups;
    for (const auto& [qid, m] : per_question) {
        all.push_back(&m);
        if (auto it = hop_of.find(qid); it != hop_of.end()) hop_groups[it->second].push_back(&m);
        if (auto it = slice_of.find(qid); it != slice_of.end())
            slice_groups[it->second].push_back(&m);
    }

    ReportAggregates out;
    out.overall = aggregate_group(all);
    for (const auto& [name, members] : hop_groups) out.by_hop[name] = aggregate_group(members);
    for (const auto& [name, members] : slice_groups)
        out.by_slice[name] = aggregate_group(members);
    return out;
}

std::string serialize_report(const MetricReport& report) {
    for (const auto& [qid, m] : report.per_question) {
        for (const auto& name : metric_names()) check_value("question " + qid, name, m.get(name));
    }

    json per_question = json::object();
    for (const auto& [qid, m] : report.per_question) per_question[qid] = metrics_to_json(m);

    json j;
    j["per_question"] = per_question;
    if (report.aggregates) {
        json agg;
        agg["overall"] = group_to_json(report.aggregates->overall);
        json by_hop = json::object();
        for (const auto& [name, g] : report.aggregates->by_hop) by_hop[name] = group_to_json(g);
        agg["by_hop"] = by_hop;
        json by_slice = json::object();
        for (const auto& [name, g] : report.aggregates->by_slice)
            by_slice[name] = group_to_json(g);
        agg["by_slice"] = by_slice;
        j["aggregates"] = agg;
    }
    j["counts"] = json{
        {"text", {{"matched", report.text_counts.matched}, {"total", report.text_counts.total}}},
        {"video",
         {{"matched", report.video_counts.matched}, {"total", report.video_counts.total}}}};
    return j.dump(2) + "\n";
}

void save_report(const MetricReport& report, const std::string& path) {
    std::string body = serialize_report(report);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write report: " + path);
    out << body;
}

MetricReport load_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("report not found: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError("report " + path + ": invalid JSON: " + e.what());
    }

    MetricReport report;
    for (const auto& [qid, m] : j.at("per_question").items())
        report.per_question[qid] = metrics_from_json(m);
    if (j.contains("aggregates")) {
        ReportAggregates agg;
        agg.overall = group_from_json(j.at("aggregates").at("overall"));
        for (const auto& [name, g] : j.at("aggregates").at("by_hop").items())
            agg.by_hop[name] = group_from_json(g);
        for (const auto& [name, g] : j.at("aggregates").at("by_slice").items())
            agg.by_slice[name] = group_from_json(g);
        report.aggregates = std::move(agg);
    }
    const auto& counts = j.at("counts");
    report.text_counts = {counts.at("text").at("matched").get<int>(),
                          counts.at("text").at("total").get<int>()};
    report.video_counts = {counts.at("video").at("matched").get<int>(),
                           counts.at("video").at("total").get<int>()};
    return report;
}

}  // namespace mrag::core
