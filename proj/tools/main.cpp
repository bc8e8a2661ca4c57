#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli.hpp"

namespace {

void add_pipeline_options(CLI::App& app, qexp::cli::PipelineConfig& c, std::optional<double>& t2)
{
    app.add_option("--corpus", c.corpus, "TREC document collection");
    app.add_option("--topics", c.topics, "TREC topic file");
    app.add_option("--qrels", c.qrels, "trec_eval relevance judgements");
    app.add_option("--concepts", c.concepts, "concept corpus for ESA (TREC documents)");
    app.add_option("--wordnet", c.wordnet, "WordNet 3.x database directory");
    app.add_option("--collocations", c.collocations, "collocation corpus (default: corpus)");
    app.add_option("--stopwords", c.stopwords, "stopword file (default: bundled list)");
    app.add_option("--index", c.index, "index file (default: <output>/index.bin)");
    app.add_option("--output", c.output, "output directory")->capture_default_str();

    app.add_option("--model", c.model, "retrieval model: tfidf, bm25 or inl2")->capture_default_str();
    app.add_option("--tfidf-k", c.tfidf.k)->capture_default_str();
    app.add_option("--bm25-k1", c.bm25.k1)->capture_default_str();
    app.add_option("--bm25-b", c.bm25.b)->capture_default_str();
    app.add_option("--bm25-k3", c.bm25.k3)->capture_default_str();
    app.add_option("--inl2-c", c.inl2.c)->capture_default_str();
    app.add_option("--depth", c.depth, "documents retrieved per topic")->capture_default_str();

    app.add_option("--t1", c.t1, "mean pair-score threshold")->capture_default_str();
    app.add_option("--t2", t2, "pair threshold (default 0.12 ewc, 0.08 esa)");
    app.add_option("--candidates", c.candidates, "expansion candidates per topic")
        ->capture_default_str();
    app.add_option("--feedback-docs", c.feedback_docs, "pseudo-relevant documents per topic")
        ->capture_default_str();
    app.add_option("--lambda-wnp", c.ewc.lambda_wnp)->capture_default_str();
    app.add_option("--lambda-coll", c.ewc.lambda_coll)->capture_default_str();
    app.add_option("--xi", c.ewc.xi)->capture_default_str();

    app.add_option("--relevance-threshold", c.relevance_threshold,
                   "minimum qrels grade counted as relevant")
        ->capture_default_str();
    app.add_option("--run-tag", c.run_tag, "tag written in the last run-file column");
    app.add_flag("--force", c.force, "overwrite an existing index");
    app.add_flag("--warnings-as-errors", c.warnings_as_errors, "exit with status 2 on warnings");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Query expansion experiments: indexing, retrieval, term selection, evaluation"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key = value configuration file");

    qexp::cli::PipelineConfig config;
    std::optional<double> t2;
    add_pipeline_options(app, config, t2);

    auto* index_cmd = app.add_subcommand("index", "build and save the inverted index");

    std::string run_mode = "baseline";
    auto* run_cmd = app.add_subcommand("run", "retrieve all topics, optionally with expansion");
    run_cmd->add_option("mode", run_mode, "baseline, esa, ewc or all")->capture_default_str();

    std::string run_file;
    std::optional<std::string> pr_file;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a run file against the qrels");
    eval_cmd->add_option("run", run_file, "trec_eval run file")->required();
    eval_cmd->add_option("--pr", pr_file, "write the 11-point recall/precision table here");

    std::string w1;
    std::string w2;
    auto* rel_cmd = app.add_subcommand("relatedness", "print the relatedness measures for a word pair");
    rel_cmd->add_option("w1", w1)->required();
    rel_cmd->add_option("w2", w2)->required();

    std::string sweep_mode = "ewc";
    std::vector<double> t1_values = {0.5, 0.65, 0.67, 0.69, 0.75};
    std::vector<double> t2_values = {0.07, 0.08, 0.09, 0.1, 0.11, 0.12, 0.13, 0.15};
    std::vector<std::string> models = {"inl2", "tfidf", "bm25"};
    auto* sweep_cmd = app.add_subcommand("sweep", "grid over (t1, t2) for each retrieval model");
    sweep_cmd->add_option("mode", sweep_mode, "esa or ewc")->capture_default_str();
    sweep_cmd->add_option("--t1-values", t1_values)->delimiter(',')->capture_default_str();
    sweep_cmd->add_option("--t2-values", t2_values)->delimiter(',')->capture_default_str();
    sweep_cmd->add_option("--models", models)->delimiter(',')->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    config.t2 = t2;

    try {
        if (*index_cmd) {
            return qexp::cli::cmd_index(config, std::cout, std::cerr);
        }
        if (*run_cmd) {
            return qexp::cli::cmd_run(config, qexp::run_mode_from_name(run_mode), std::cout,
                                      std::cerr);
        }
        if (*eval_cmd) {
            std::optional<std::filesystem::path> pr;
            if (pr_file) {
                pr = *pr_file;
            }
            return qexp::cli::cmd_eval(run_file, config, pr, std::cout, std::cerr);
        }
        if (*rel_cmd) {
            return qexp::cli::cmd_relatedness(config, w1, w2, std::cout, std::cerr);
        }
        if (*sweep_cmd) {
            return qexp::cli::cmd_sweep(config, qexp::run_mode_from_name(sweep_mode), t1_values,
                                        t2_values, models, std::cout, std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
