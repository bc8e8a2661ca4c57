#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qexp/pipeline.hpp"

namespace qexp::cli {

/// Every tunable of an experiment. Loaded from a key = value file and
/// overridable on the command line.
struct PipelineConfig {
    std::filesystem::path corpus;
    std::filesystem::path topics;
    std::filesystem::path qrels;
    std::filesystem::path concepts;
    std::filesystem::path wordnet;
    std::filesystem::path collocations;  ///< defaults to `corpus`
    std::filesystem::path stopwords;     ///< empty: bundled list
    std::filesystem::path index;         ///< defaults to <output>/index.bin
    std::filesystem::path output = ".";

    std::string model = "tfidf";
    TfIdfParams tfidf;
    Bm25Params bm25;
    Inl2Params inl2;
    std::size_t depth = 1000;

    double t1 = 0.67;
    std::optional<double> t2;  ///< unset: 0.12 for ewc, 0.08 for esa
    std::size_t candidates = 10;
    std::size_t feedback_docs = 3;
    EwcParams ewc;

    int relevance_threshold = 2;
    std::string run_tag;
    bool force = false;
    bool warnings_as_errors = false;

    [[nodiscard]] RetrievalModel retrieval_model() const;
    [[nodiscard]] RetrievalModel retrieval_model(const std::string& name) const;
    [[nodiscard]] SelectionConfig selection(RunMode mode) const;
    [[nodiscard]] PipelineOptions pipeline_options(RunMode mode) const;
    [[nodiscard]] std::filesystem::path index_path() const;
    [[nodiscard]] std::filesystem::path collocation_path() const;
    [[nodiscard]] Stoplist stoplist() const;
};

/// Exit codes: 0 success, 1 error, 2 warnings raised with warnings_as_errors.
int cmd_index(const PipelineConfig& config, std::ostream& out, std::ostream& err);
int cmd_run(const PipelineConfig& config, RunMode mode, std::ostream& out, std::ostream& err);
int cmd_eval(const std::filesystem::path& run_file, const PipelineConfig& config,
             const std::optional<std::filesystem::path>& pr_table, std::ostream& out,
             std::ostream& err);
int cmd_relatedness(const PipelineConfig& config, const std::string& w1, const std::string& w2,
                    std::ostream& out, std::ostream& err);
int cmd_sweep(const PipelineConfig& config, RunMode mode, const std::vector<double>& t1_values,
              const std::vector<double>& t2_values, const std::vector<std::string>& models,
              std::ostream& out, std::ostream& err);

}  // namespace qexp::cli
