#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qexp/index.hpp"
#include "qexp/text.hpp"

namespace qexp {

struct ScoredDoc {
    std::string doc_id;
    double score = 0.0;

    bool operator==(const ScoredDoc&) const = default;
};

/// Descending score, then ascending doc id.
bool ranks_before(const ScoredDoc& a, const ScoredDoc& b);

/// Robertson-normalised TF-IDF: qtf * tf / (tf + k * dl / avgdl) * ln(1 + N / df).
struct TfIdfParams {
    double k = 1.2;
};

struct Bm25Params {
    double k1 = 1.2;
    double b = 0.75;
    double k3 = 8.0;
};

/// DFR InL2: inverse document frequency with Laplace after-effect and
/// normalisation 2, tfn = tf * log2(1 + c * avgdl / dl).
struct Inl2Params {
    double c = 1.0;
};

using RetrievalModel = std::variant<TfIdfParams, Bm25Params, Inl2Params>;

/// Parses "tfidf", "bm25" or "inl2" (case-insensitive) with default params.
RetrievalModel model_from_name(std::string_view name);
std::string model_name(const RetrievalModel& model);

/// Throws InvalidArgument when a parameter is outside its declared range.
void validate(const RetrievalModel& model);

/// A query term with its frequency in the query.
struct QueryTerm {
    std::string term;
    std::uint32_t qtf = 1;
};

/// Collapses repeated stems, keeping first-occurrence order.
std::vector<QueryTerm> query_terms(const AnalyzedText& query);

double score_tfidf(const InvertedIndex& index, const std::vector<QueryTerm>& query,
                   DocOrdinal doc, const TfIdfParams& params = {});
double score_bm25(const InvertedIndex& index, const std::vector<QueryTerm>& query,
                  DocOrdinal doc, const Bm25Params& params = {});
double score_inl2(const InvertedIndex& index, const std::vector<QueryTerm>& query,
                  DocOrdinal doc, const Inl2Params& params = {});
double score(const InvertedIndex& index, const std::vector<QueryTerm>& query, DocOrdinal doc,
             const RetrievalModel& model);

/// Top-k documents with a positive score, ordered by ranks_before().
/// Term-at-a-time accumulation over postings; an empty query returns [].
std::vector<ScoredDoc> search(const InvertedIndex& index, const AnalyzedText& query,
                              const RetrievalModel& model, std::size_t k);

}  // namespace qexp
