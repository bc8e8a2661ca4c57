#include "qexp/pipeline.hpp"

#include "qexp/errors.hpp"

namespace qexp {

RunMode run_mode_from_name(std::string_view name)
{
    const auto lower = to_lower(name);
    if (lower == "baseline") {
        return RunMode::Baseline;
    }
    if (lower == "esa") {
        return RunMode::Esa;
    }
    if (lower == "ewc") {
        return RunMode::Ewc;
    }
    if (lower == "all") {
        return RunMode::All;
    }
    throw InvalidArgument("unknown run mode: " + std::string(name));
}

std::string run_mode_name(RunMode mode)
{
    switch (mode) {
    case RunMode::Baseline:
        return "baseline";
    case RunMode::Esa:
        return "esa";
    case RunMode::Ewc:
        return "ewc";
    case RunMode::All:
        return "all";
    }
    return "unknown";
}

std::string RunOutput::trace() const
{
    std::string out = trace_header() + '\n';
    for (const auto& topic : topics) {
        std::size_t next_selected = 0;
        for (const auto& decision : topic.decisions) {
            const bool selected = next_selected < topic.selected.size() &&
                                  topic.selected[next_selected].stem == decision.candidate.stem;
            if (selected) {
                ++next_selected;
            }
            out += format_trace_line(topic.topic_id, decision, selected);
            out += '\n';
        }
    }
    return out;
}

RunOutput run_topics(const InvertedIndex& index, const std::vector<Topic>& topics,
                     const Stoplist& stoplist, RunMode mode, const PipelineOptions& options,
                     const RelatednessSource* source)
{
    validate(options.model);
    if (options.depth == 0) {
        throw InvalidArgument("retrieval depth must be >= 1");
    }
    SelectionConfig selection = options.selection;
    if (mode == RunMode::Esa) {
        selection.mode = SelectionMode::Esa;
    } else if (mode == RunMode::Ewc) {
        selection.mode = SelectionMode::Ewc;
    }
    if (mode != RunMode::Baseline) {
        selection.validate();
    }
    if ((mode == RunMode::Esa || mode == RunMode::Ewc) && source == nullptr) {
        throw InvalidArgument("run mode " + run_mode_name(mode) + " needs relatedness resources");
    }

    RunOutput output;
    for (const auto& topic : topics) {
        TopicOutcome outcome;
        outcome.topic_id = topic.topic_id;
        outcome.query = analyze(topic.title, stoplist);
        outcome.expanded = outcome.query;
        auto results = search(index, outcome.query, options.model, options.depth);

        if (mode != RunMode::Baseline && !outcome.query.empty() && !results.empty()) {
            outcome.candidates = extract_candidates(index, results, outcome.query, selection);
            if (mode == RunMode::All) {
                outcome.selected = outcome.candidates;
            } else {
                const auto words = query_words(outcome.query);
                outcome.decisions = trace_selection(outcome.candidates, words, *source, selection);
                for (const auto& d : outcome.decisions) {
                    if (d.weight == 1) {
                        outcome.selected.push_back(d.candidate);
                    }
                }
            }
            if (!outcome.selected.empty()) {
                outcome.expanded = expand_query(outcome.query, outcome.selected);
                results = search(index, outcome.expanded, options.model, options.depth);
            }
        }
        outcome.results = results;
        output.run[topic.topic_id] = std::move(results);
        output.topics.push_back(std::move(outcome));
    }
    return output;
}

RelatednessValues CachedRelatedness::measure(std::string_view w1, std::string_view w2) const
{
    std::string key(w1);
    key.push_back('\0');
    key.append(w2);
    const auto it = m_cache.find(key);
    if (it != m_cache.end()) {
        return it->second;
    }
    const auto values = m_inner.measure(w1, w2);
    m_cache.emplace(std::move(key), values);
    return values;
}

std::vector<RawDocument> load_documents(const std::filesystem::path& path)
{
    try {
        return parse_trec_documents(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), e.location_kind(), e.position());
    }
}

std::vector<Topic> load_topics(const std::filesystem::path& path)
{
    try {
        return parse_topics(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), e.location_kind(), e.position());
    }
}

std::vector<QrelEntry> load_qrels(const std::filesystem::path& path)
{
    try {
        return parse_qrels(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), e.location_kind(), e.position());
    }
}

std::shared_ptr<RelatednessModel> load_relatedness(const std::filesystem::path& concepts,
                                                   const std::filesystem::path& wordnet_dir,
                                                   const std::filesystem::path& collocations,
                                                   const Stoplist& stoplist,
                                                   const EwcParams& params)
{
    auto space = std::make_shared<const ConceptSpace>(
        ConceptSpace::build(load_documents(concepts), stoplist));
    auto graph = std::make_shared<const TaxonomyGraph>(TaxonomyGraph::load_wordnet(wordnet_dir));
    auto table = std::make_shared<const CollocationTable>(
        CollocationTable::build(load_documents(collocations), stoplist));
    return std::make_shared<RelatednessModel>(std::move(space), std::move(graph), std::move(table),
                                              params);
}

}  // namespace qexp
