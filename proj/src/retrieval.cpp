#include "qexp/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "qexp/errors.hpp"

namespace qexp {

namespace {

// Collection-level inputs shared by every per-term contribution.
struct TermContext {
    double tf;
    double dl;
    double df;
    double num_docs;
    double avgdl;
    double qtf;
};

double contribution(const TermContext& c, const TfIdfParams& p)
{
    const double tf_part = c.tf / (c.tf + p.k * c.dl / c.avgdl);
    return c.qtf * tf_part * std::log(1.0 + c.num_docs / c.df);
}

double contribution(const TermContext& c, const Bm25Params& p)
{
    const double idf = std::max(0.0, std::log((c.num_docs - c.df + 0.5) / (c.df + 0.5)));
    const double tf_part = ((p.k1 + 1.0) * c.tf) / (p.k1 * ((1.0 - p.b) + p.b * c.dl / c.avgdl) + c.tf);
    const double qtf_part = ((p.k3 + 1.0) * c.qtf) / (p.k3 + c.qtf);
    return idf * tf_part * qtf_part;
}

double contribution(const TermContext& c, const Inl2Params& p)
{
    const double tfn = c.tf * std::log2(1.0 + p.c * c.avgdl / c.dl);
    return c.qtf * (tfn / (tfn + 1.0)) * std::log2((c.num_docs + 1.0) / (c.df + 0.5));
}

template <typename Params>
double score_with(const InvertedIndex& index, const std::vector<QueryTerm>& query, DocOrdinal doc,
                  const Params& params)
{
    double total = 0.0;
    const double dl = static_cast<double>(index.doc(doc).length);
    for (const auto& q : query) {
        const auto id = index.term_id(q.term);
        if (!id) {
            continue;
        }
        const auto tf = index.term_frequency(*id, doc);
        if (tf == 0) {
            continue;
        }
        total += contribution(TermContext{static_cast<double>(tf), dl,
                                          static_cast<double>(index.term(*id).df),
                                          static_cast<double>(index.num_docs()),
                                          index.avg_doc_length(), static_cast<double>(q.qtf)},
                              params);
    }
    return total;
}

bool finite_nonnegative(double v)
{
    return std::isfinite(v) && v >= 0.0;
}

}  // namespace

bool ranks_before(const ScoredDoc& a, const ScoredDoc& b)
{
    if (a.score != b.score) {
        return a.score > b.score;
    }
    return a.doc_id < b.doc_id;
}

RetrievalModel model_from_name(std::string_view name)
{
    const auto lower = to_lower(name);
    if (lower == "tfidf" || lower == "tf_idf" || lower == "tf-idf") {
        return TfIdfParams{};
    }
    if (lower == "bm25") {
        return Bm25Params{};
    }
    if (lower == "inl2") {
        return Inl2Params{};
    }
    throw InvalidArgument("unknown retrieval model: " + std::string(name));
}

std::string model_name(const RetrievalModel& model)
{
    struct Namer {
        std::string operator()(const TfIdfParams&) const { return "tfidf"; }
        std::string operator()(const Bm25Params&) const { return "bm25"; }
        std::string operator()(const Inl2Params&) const { return "inl2"; }
    };
    return std::visit(Namer{}, model);
}

void validate(const RetrievalModel& model)
{
    if (const auto* p = std::get_if<TfIdfParams>(&model)) {
        if (!std::isfinite(p->k) || p->k <= 0.0) {
            throw InvalidArgument("tfidf k must be > 0");
        }
    } else if (const auto* p = std::get_if<Bm25Params>(&model)) {
        if (!std::isfinite(p->k1) || p->k1 <= 0.0) {
            throw InvalidArgument("bm25 k1 must be > 0");
        }
        if (!(p->b >= 0.0 && p->b <= 1.0)) {
            throw InvalidArgument("bm25 b must lie in [0, 1]");
        }
        if (!finite_nonnegative(p->k3)) {
            throw InvalidArgument("bm25 k3 must be >= 0");
        }
    } else if (const auto* p = std::get_if<Inl2Params>(&model)) {
        if (!std::isfinite(p->c) || p->c <= 0.0) {
            throw InvalidArgument("inl2 c must be > 0");
        }
    }
}

std::vector<QueryTerm> query_terms(const AnalyzedText& query)
{
    std::vector<QueryTerm> terms;
    std::unordered_map<std::string, std::size_t> position;
    for (const auto& token : query.tokens) {
        const auto [it, inserted] = position.emplace(token, terms.size());
        if (inserted) {
            terms.push_back(QueryTerm{token, 1});
        } else {
            ++terms[it->second].qtf;
        }
    }
    return terms;
}

double score_tfidf(const InvertedIndex& index, const std::vector<QueryTerm>& query,
                   DocOrdinal doc, const TfIdfParams& params)
{
    return score_with(index, query, doc, params);
}

double score_bm25(const InvertedIndex& index, const std::vector<QueryTerm>& query,
                  DocOrdinal doc, const Bm25Params& params)
{
    return score_with(index, query, doc, params);
}

double score_inl2(const InvertedIndex& index, const std::vector<QueryTerm>& query,
                  DocOrdinal doc, const Inl2Params& params)
{
    return score_with(index, query, doc, params);
}

double score(const InvertedIndex& index, const std::vector<QueryTerm>& query, DocOrdinal doc,
             const RetrievalModel& model)
{
    return std::visit([&](const auto& params) { return score_with(index, query, doc, params); },
                      model);
}

std::vector<ScoredDoc> search(const InvertedIndex& index, const AnalyzedText& query,
                              const RetrievalModel& model, std::size_t k)
{
    if (k == 0) {
        throw InvalidArgument("search cutoff k must be >= 1");
    }
    const auto terms = query_terms(query);
    if (terms.empty() || index.num_docs() == 0) {
        return {};
    }

    std::vector<double> accumulators(index.num_docs(), 0.0);
    std::vector<DocOrdinal> touched;
    std::vector<char> seen(index.num_docs(), 0);
    const double num_docs = static_cast<double>(index.num_docs());
    const double avgdl = index.avg_doc_length();

    std::visit(
        [&](const auto& params) {
            for (const auto& q : terms) {
                const auto id = index.term_id(q.term);
                if (!id) {
                    continue;
                }
                const double df = static_cast<double>(index.term(*id).df);
                for (const auto& p : index.postings(*id)) {
                    const TermContext ctx{static_cast<double>(p.tf),
                                          static_cast<double>(index.doc(p.doc).length),
                                          df,
                                          num_docs,
                                          avgdl,
                                          static_cast<double>(q.qtf)};
                    accumulators[p.doc] += contribution(ctx, params);
                    if (seen[p.doc] == 0) {
                        seen[p.doc] = 1;
                        touched.push_back(p.doc);
                    }
                }
            }
        },
        model);

    std::vector<ScoredDoc> results;
    results.reserve(touched.size());
    for (const auto doc : touched) {
        if (accumulators[doc] > 0.0) {
            results.push_back(ScoredDoc{index.doc(doc).doc_id, accumulators[doc]});
        }
    }
    const auto cutoff = std::min(k, results.size());
    std::partial_sort(results.begin(), results.begin() + static_cast<std::ptrdiff_t>(cutoff),
                      results.end(), ranks_before);
    results.resize(cutoff);
    return results;
}

}  // namespace qexp
