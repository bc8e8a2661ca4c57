#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qexp/eval.hpp"
#include "qexp/expansion.hpp"
#include "qexp/index.hpp"
#include "qexp/relatedness.hpp"
#include "qexp/retrieval.hpp"
#include "qexp/trec.hpp"

namespace qexp {

enum class RunMode {
    Baseline,  ///< first-pass retrieval only
    Esa,       ///< expansion terms selected by ESA cosine
    Ewc,       ///< expansion terms selected by the combined measure
    All,       ///< every extracted candidate appended, no selection
};

RunMode run_mode_from_name(std::string_view name);
std::string run_mode_name(RunMode mode);

struct PipelineOptions {
    RetrievalModel model = TfIdfParams{};
    std::size_t depth = 1000;
    SelectionConfig selection;
};

struct TopicOutcome {
    std::string topic_id;
    AnalyzedText query;
    AnalyzedText expanded;
    std::vector<ExpansionCandidate> candidates;
    std::vector<TermDecision> decisions;
    std::vector<ExpansionCandidate> selected;
    std::vector<ScoredDoc> results;
};

struct RunOutput {
    RankedRun run;
    std::vector<TopicOutcome> topics;

    /// Tab-separated expansion trace (header plus one line per candidate).
    [[nodiscard]] std::string trace() const;
};

/// Runs every topic through analysis, first-pass retrieval and, unless the
/// mode is Baseline, candidate extraction, selection, expansion and a second
/// retrieval. Topics are processed and reported in input order. `source` may
/// be null only for Baseline and All.
RunOutput run_topics(const InvertedIndex& index, const std::vector<Topic>& topics,
                     const Stoplist& stoplist, RunMode mode, const PipelineOptions& options,
                     const RelatednessSource* source);

/// Memoises another source's measurements per ordered word pair. Not
/// thread-safe.
class CachedRelatedness final : public RelatednessSource {
  public:
    explicit CachedRelatedness(const RelatednessSource& inner) : m_inner(inner) {}

    [[nodiscard]] RelatednessValues measure(std::string_view w1,
                                            std::string_view w2) const override;

  private:
    const RelatednessSource& m_inner;
    mutable std::unordered_map<std::string, RelatednessValues> m_cache;
};

std::vector<RawDocument> load_documents(const std::filesystem::path& path);
std::vector<Topic> load_topics(const std::filesystem::path& path);
std::vector<QrelEntry> load_qrels(const std::filesystem::path& path);

/// Builds the relatedness model from a concept corpus, a WordNet database
/// directory and a collocation corpus (all TREC document files except the
/// WordNet directory).
std::shared_ptr<RelatednessModel> load_relatedness(const std::filesystem::path& concepts,
                                                   const std::filesystem::path& wordnet_dir,
                                                   const std::filesystem::path& collocations,
                                                   const Stoplist& stoplist,
                                                   const EwcParams& params);

}  // namespace qexp
