#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qexp/index.hpp"
#include "qexp/relatedness.hpp"
#include "qexp/retrieval.hpp"
#include "qexp/text.hpp"

namespace qexp {

struct ExpansionCandidate {
    std::string stem;
    std::string surface;
    double dfr_weight = 0.0;

    bool operator==(const ExpansionCandidate&) const = default;
};

enum class SelectionMode {
    Ewc,  ///< gate on wnp > 0 and coll > 0, threshold the combined measure
    Esa,  ///< threshold the ESA cosine only
};

struct SelectionConfig {
    double t1 = 0.67;
    double t2 = 0.12;
    SelectionMode mode = SelectionMode::Ewc;
    std::size_t num_candidates = 10;
    std::size_t num_feedback_docs = 3;
    EwcParams ewc;

    /// Throws InvalidArgument when a field is out of range.
    void validate() const;
};

/// Default t2 per mode: 0.12 for EWC, 0.08 for ESA.
double default_t2(SelectionMode mode);

/// Bo1 weight of a term seen `pooled_tf` times in the feedback documents:
///   tf_x * log2((1 + Pn) / Pn) + log2(1 + Pn), Pn = cf / N.
double bo1_weight(double pooled_tf, double collection_frequency, double num_docs);

/// Pools the top `num_feedback_docs` documents of `first_pass`, scores every
/// pooled term that is not an original query stem with Bo1 and returns the
/// best `num_candidates`, strongest first (ties by stem). Each candidate
/// carries its most frequent surface form in the pool.
std::vector<ExpansionCandidate> extract_candidates(const InvertedIndex& index,
                                                   const std::vector<ScoredDoc>& first_pass,
                                                   const AnalyzedText& query,
                                                   const SelectionConfig& config);

/// 1 when the pair passes the gates of the configured mode, else 0.
int pair_score(const RelatednessValues& values, const SelectionConfig& config);

struct TermDecision {
    ExpansionCandidate candidate;
    std::vector<RelatednessValues> values;  ///< one per query word
    std::vector<int> pair_scores;
    double mean_score = 0.0;
    int weight = 0;
};

/// Evaluates the selection rule for one candidate against the N query
/// words: weight 1 iff sum(pair_score) / N > t1. Throws InvalidArgument
/// when there are no query words.
TermDecision decide_term(const RelatednessSource& source, const SelectionConfig& config,
                         const ExpansionCandidate& candidate,
                         const std::vector<std::string>& query_words);

int term_weight(const RelatednessSource& source, const SelectionConfig& config,
                std::string_view candidate_surface, const std::vector<std::string>& query_words);

/// Candidates with weight 1, in their original (Bo1) order.
std::vector<ExpansionCandidate> select_terms(const std::vector<ExpansionCandidate>& candidates,
                                             const std::vector<std::string>& query_words,
                                             const RelatednessSource& source,
                                             const SelectionConfig& config);

/// Full decision record for every candidate, for trace output.
std::vector<TermDecision> trace_selection(const std::vector<ExpansionCandidate>& candidates,
                                          const std::vector<std::string>& query_words,
                                          const RelatednessSource& source,
                                          const SelectionConfig& config);

/// Surface words of the distinct query stems, in query order.
std::vector<std::string> query_words(const AnalyzedText& query);

/// Original tokens followed by the selected stems not already present.
AnalyzedText expand_query(const AnalyzedText& query,
                          const std::vector<ExpansionCandidate>& selected);

/// Tab-separated trace header and one line per decision.
std::string trace_header();
std::string format_trace_line(std::string_view topic_id, const TermDecision& decision,
                              bool selected);

}  // namespace qexp
