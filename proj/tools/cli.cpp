#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qexp/errors.hpp"

namespace qexp::cli {

namespace fs = std::filesystem;

namespace {

std::string fixed(double v, int decimals)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

void require_path(const fs::path& path, const std::string& what, const std::string& key)
{
    if (path.empty()) {
        throw InvalidArgument("missing resource: " + what + " (set '" + key + "')");
    }
    if (!fs::exists(path)) {
        throw IoError("missing resource: " + what + " not found at " + path.string());
    }
}

void write_text(const fs::path& path, const std::string& content)
{
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << content;
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

std::shared_ptr<RelatednessModel> relatedness_resources(const PipelineConfig& config,
                                                        const Stoplist& stoplist)
{
    require_path(config.concepts, "concept corpus", "concepts");
    require_path(config.wordnet, "WordNet directory", "wordnet");
    require_path(config.collocation_path(), "collocation corpus", "collocations");
    return load_relatedness(config.concepts, config.wordnet, config.collocation_path(), stoplist,
                            config.ewc);
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& body)
{
    try {
        return body();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int finish(const std::vector<std::string>& warnings, const PipelineConfig& config, std::ostream& err)
{
    for (const auto& w : warnings) {
        err << "warning: " << w << '\n';
    }
    return (!warnings.empty() && config.warnings_as_errors) ? 2 : 0;
}

}  // namespace

RetrievalModel PipelineConfig::retrieval_model() const
{
    return retrieval_model(model);
}

RetrievalModel PipelineConfig::retrieval_model(const std::string& name) const
{
    auto chosen = model_from_name(name);
    if (std::holds_alternative<TfIdfParams>(chosen)) {
        chosen = tfidf;
    } else if (std::holds_alternative<Bm25Params>(chosen)) {
        chosen = bm25;
    } else {
        chosen = inl2;
    }
    validate(chosen);
    return chosen;
}

SelectionConfig PipelineConfig::selection(RunMode mode) const
{
    SelectionConfig s;
    s.mode = mode == RunMode::Esa ? SelectionMode::Esa : SelectionMode::Ewc;
    s.t1 = t1;
    s.t2 = t2.value_or(default_t2(s.mode));
    s.num_candidates = candidates;
    s.num_feedback_docs = feedback_docs;
    s.ewc = ewc;
    return s;
}

PipelineOptions PipelineConfig::pipeline_options(RunMode mode) const
{
    return PipelineOptions{retrieval_model(), depth, selection(mode)};
}

fs::path PipelineConfig::index_path() const
{
    return index.empty() ? output / "index.bin" : index;
}

fs::path PipelineConfig::collocation_path() const
{
    return collocations.empty() ? corpus : collocations;
}

Stoplist PipelineConfig::stoplist() const
{
    return stopwords.empty() ? default_stoplist() : Stoplist::load(stopwords);
}

int cmd_index(const PipelineConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        require_path(config.corpus, "document corpus", "corpus");
        const auto target = config.index_path();
        if (fs::exists(target) && !config.force) {
            throw IoError("refusing to overwrite existing index " + target.string() +
                          " (pass --force to rebuild)");
        }
        const auto index = InvertedIndex::build(load_documents(config.corpus), config.stoplist());
        if (target.has_parent_path()) {
            fs::create_directories(target.parent_path());
        }
        index.save(target);
        out << "num_docs\t" << index.num_docs() << '\n';
        out << "num_terms\t" << index.num_terms() << '\n';
        out << "total_tokens\t" << index.total_tokens() << '\n';
        out << "avg_doc_length\t" << fixed(index.avg_doc_length(), 4) << '\n';
        out << "index\t" << target.string() << '\n';
        return 0;
    });
}

int cmd_run(const PipelineConfig& config, RunMode mode, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const auto index_file = config.index_path();
        if (!fs::exists(index_file)) {
            throw IoError("index not built: " + index_file.string() + " (run 'qexp index' first)");
        }
        require_path(config.topics, "topic file", "topics");
        const auto stoplist = config.stoplist();
        const auto options = config.pipeline_options(mode);
        std::shared_ptr<RelatednessModel> relatedness;
        if (mode == RunMode::Esa || mode == RunMode::Ewc) {
            relatedness = relatedness_resources(config, stoplist);
        }
        const auto index = InvertedIndex::load(index_file);
        const auto topics = load_topics(config.topics);
        const auto result = run_topics(index, topics, stoplist, mode, options, relatedness.get());

        const auto name = run_mode_name(mode);
        const auto tag = config.run_tag.empty() ? "qexp-" + name + "-" + model_name(options.model)
                                                : config.run_tag;
        const auto run_file = config.output / (name + ".run");
        const auto trace_file = config.output / (name + ".trace.tsv");
        write_text(run_file, format_run(result.run, tag));
        write_text(trace_file, result.trace());

        std::size_t expanded_topics = 0;
        std::size_t added_terms = 0;
        for (const auto& t : result.topics) {
            if (!t.selected.empty()) {
                ++expanded_topics;
            }
            added_terms += t.expanded.size() - t.query.size();
        }
        out << "mode\t" << name << '\n';
        out << "model\t" << model_name(options.model) << '\n';
        out << "topics\t" << result.topics.size() << '\n';
        out << "expanded_topics\t" << expanded_topics << '\n';
        out << "added_terms\t" << added_terms << '\n';
        out << "run\t" << run_file.string() << '\n';
        out << "trace\t" << trace_file.string() << '\n';
        return 0;
    });
}

int cmd_eval(const fs::path& run_file, const PipelineConfig& config,
             const std::optional<fs::path>& pr_table, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        require_path(run_file, "run file", "run");
        require_path(config.qrels, "qrels file", "qrels");
        const auto run = parse_run(read_file(run_file));
        const auto report = evaluate_run(run, load_qrels(config.qrels), config.relevance_threshold);
        out << format_report(report);
        if (pr_table) {
            write_text(*pr_table, format_pr_table(report.mean_pr));
        }
        return finish(report.warnings, config, err);
    });
}

int cmd_relatedness(const PipelineConfig& config, const std::string& w1, const std::string& w2,
                    std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const auto model = relatedness_resources(config, config.stoplist());
        const auto v = model->measure(w1, w2);
        out << "esa\t" << fixed(v.esa, 6) << '\n';
        out << "wnp\t" << fixed(v.wnp, 6) << '\n';
        out << "coll\t" << fixed(v.coll, 6) << '\n';
        out << "ewc\t" << fixed(v.ewc, 6) << '\n';
        return 0;
    });
}

int cmd_sweep(const PipelineConfig& config, RunMode mode, const std::vector<double>& t1_values,
              const std::vector<double>& t2_values, const std::vector<std::string>& models,
              std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        if (mode != RunMode::Esa && mode != RunMode::Ewc) {
            throw InvalidArgument("sweep mode must be esa or ewc");
        }
        if (t1_values.empty() || t2_values.empty() || models.empty()) {
            throw InvalidArgument("sweep needs at least one t1, t2 and model");
        }
        const auto index_file = config.index_path();
        if (!fs::exists(index_file)) {
            throw IoError("index not built: " + index_file.string() + " (run 'qexp index' first)");
        }
        require_path(config.topics, "topic file", "topics");
        require_path(config.qrels, "qrels file", "qrels");
        const auto stoplist = config.stoplist();
        const auto relatedness = relatedness_resources(config, stoplist);
        const CachedRelatedness cached(*relatedness);
        const auto index = InvertedIndex::load(index_file);
        const auto topics = load_topics(config.topics);
        const auto qrels = load_qrels(config.qrels);

        std::vector<std::string> warnings;
        auto evaluate = [&](const RankedRun& run) {
            auto report = evaluate_run(run, qrels, config.relevance_threshold);
            warnings.insert(warnings.end(), report.warnings.begin(), report.warnings.end());
            return std::make_pair(report.mean_average_precision, report.mean_r_precision);
        };

        out << "t1\tt2";
        for (const auto& m : models) {
            out << '\t' << m << "_map\t" << m << "_rprec";
        }
        out << '\n';
        for (const double t1 : t1_values) {
            for (const double t2 : t2_values) {
                out << fixed(t1, 2) << '\t' << fixed(t2, 2);
                for (const auto& m : models) {
                    auto options = config.pipeline_options(mode);
                    options.model = config.retrieval_model(m);
                    options.selection.t1 = t1;
                    options.selection.t2 = t2;
                    const auto result = run_topics(index, topics, stoplist, mode, options, &cached);
                    const auto [map, rprec] = evaluate(result.run);
                    out << '\t' << fixed(map, 4) << '\t' << fixed(rprec, 4);
                }
                out << '\n';
            }
        }
        out << "system\tsystem";
        for (const auto& m : models) {
            auto options = config.pipeline_options(RunMode::Baseline);
            options.model = config.retrieval_model(m);
            const auto result = run_topics(index, topics, stoplist, RunMode::Baseline, options, nullptr);
            const auto [map, rprec] = evaluate(result.run);
            out << '\t' << fixed(map, 4) << '\t' << fixed(rprec, 4);
        }
        out << '\n';
        // one warning per distinct message
        std::sort(warnings.begin(), warnings.end());
        warnings.erase(std::unique(warnings.begin(), warnings.end()), warnings.end());
        return finish(warnings, config, err);
    });
}

}  // namespace qexp::cli
