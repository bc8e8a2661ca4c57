#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qexp/retrieval.hpp"
#include "qexp/trec.hpp"

namespace qexp {

/// Per topic, documents in rank order (rank 1 first).
using RankedRun = std::map<std::string, std::vector<ScoredDoc>>;
using RelevantSets = std::map<std::string, std::set<std::string>>;
using PrCurve = std::array<double, 11>;

/// Relevant iff grade >= threshold. The default 2 treats partially relevant
/// (grade 1) judgements as irrelevant. Topics appear even when no document
/// passes the threshold. Throws InvalidArgument for threshold < 1.
RelevantSets binarize_qrels(const std::vector<QrelEntry>& qrels, int threshold = 2);

/// Sum of precision at each relevant retrieved rank, over |relevant|.
/// Throws InvalidArgument when `relevant` is empty.
double average_precision(std::span<const std::string> ranked, const std::set<std::string>& relevant);

/// Precision at rank R = |relevant|; ranks past the end of the run count as
/// non-relevant.
double r_precision(std::span<const std::string> ranked, const std::set<std::string>& relevant);

/// Interpolated precision at recall 0.0, 0.1, ..., 1.0: the maximum
/// precision at any rank whose recall is >= the level.
PrCurve interpolated_pr_11pt(std::span<const std::string> ranked,
                             const std::set<std::string>& relevant);

struct TopicEvaluation {
    std::string topic_id;
    std::size_t num_relevant = 0;
    std::size_t num_retrieved = 0;
    std::size_t num_relevant_retrieved = 0;
    double average_precision = 0.0;
    double r_precision = 0.0;
    PrCurve pr{};
};

struct EvalReport {
    std::vector<TopicEvaluation> topics;
    double mean_average_precision = 0.0;
    double mean_r_precision = 0.0;
    PrCurve mean_pr{};
    /// Mean over the 11 interpolated points of mean_pr.
    double mean_interpolated_precision = 0.0;
    std::vector<std::string> warnings;
};

/// Evaluates the topics present in both the run and the judgements that have
/// at least one relevant document; other run topics are skipped with a
/// warning. Throws InvalidArgument when nothing is left to evaluate.
EvalReport evaluate_run(const RankedRun& run, const std::vector<QrelEntry>& qrels,
                        int threshold = 2);

/// Tab-separated "metric<TAB>topic<TAB>value" lines, per topic then "all".
std::string format_report(const EvalReport& report);

/// Eleven "recall<TAB>precision" lines for the topic-averaged curve.
std::string format_pr_table(const PrCurve& curve);

/// trec_eval run lines: "topic Q0 doc rank score tag", rank from 1.
std::string format_run(const RankedRun& run, std::string_view tag);

/// Reads a trec_eval run. Documents are ordered by the rank column. Throws
/// ParseError (line number) on malformed lines and DuplicateIdError when a
/// document repeats within a topic.
RankedRun parse_run(std::string_view source);

}  // namespace qexp
