#include "qexp/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "qexp/errors.hpp"

namespace qexp {

namespace {

std::string fixed(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

template <typename T, typename Fn>
std::string join(const std::vector<T>& items, Fn&& format)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += format(items[i]);
    }
    return out;
}

}  // namespace

void SelectionConfig::validate() const
{
    if (!(t1 >= 0.0 && t1 <= 1.0)) {
        throw InvalidArgument("t1 must lie in [0, 1]");
    }
    if (!(std::isfinite(t2) && t2 >= 0.0)) {
        throw InvalidArgument("t2 must be >= 0");
    }
    if (num_candidates < 1) {
        throw InvalidArgument("num_candidates must be >= 1");
    }
    if (num_feedback_docs < 1) {
        throw InvalidArgument("num_feedback_docs must be >= 1");
    }
    ewc.validate();
}

double default_t2(SelectionMode mode)
{
    return mode == SelectionMode::Ewc ? 0.12 : 0.08;
}

double bo1_weight(double pooled_tf, double collection_frequency, double num_docs)
{
    const double pn = collection_frequency / num_docs;
    return pooled_tf * std::log2((1.0 + pn) / pn) + std::log2(1.0 + pn);
}

std::vector<ExpansionCandidate> extract_candidates(const InvertedIndex& index,
                                                   const std::vector<ScoredDoc>& first_pass,
                                                   const AnalyzedText& query,
                                                   const SelectionConfig& config)
{
    const auto pool_size = std::min(config.num_feedback_docs, first_pass.size());
    std::map<TermId, std::uint64_t> pooled_tf;
    std::map<TermId, std::map<std::string, std::uint64_t>> surfaces;
    for (std::size_t i = 0; i < pool_size; ++i) {
        const auto ordinal = index.ordinal_of(first_pass[i].doc_id);
        if (!ordinal) {
            throw InvalidArgument("feedback document not in index: " + first_pass[i].doc_id);
        }
        for (const auto& entry : index.doc_terms(*ordinal)) {
            pooled_tf[entry.term] += entry.tf;
        }
        for (const auto& s : index.doc_surfaces(*ordinal)) {
            surfaces[s.term][s.surface] += s.count;
        }
    }

    const std::unordered_set<std::string> excluded(query.tokens.begin(), query.tokens.end());
    const double num_docs = static_cast<double>(index.num_docs());
    std::vector<ExpansionCandidate> candidates;
    for (const auto& [term, tf] : pooled_tf) {
        const auto& stats = index.term(term);
        if (excluded.contains(stats.term)) {
            continue;
        }
        // most frequent surface form; std::map order breaks ties alphabetically
        const auto& forms = surfaces.at(term);
        const auto best = std::max_element(forms.begin(), forms.end(), [](const auto& a, const auto& b) {
            return a.second < b.second;
        });
        candidates.push_back(ExpansionCandidate{
            stats.term, best->first,
            bo1_weight(static_cast<double>(tf), static_cast<double>(stats.cf), num_docs)});
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const ExpansionCandidate& a, const ExpansionCandidate& b) {
                  if (a.dfr_weight != b.dfr_weight) {
                      return a.dfr_weight > b.dfr_weight;
                  }
                  return a.stem < b.stem;
              });
    if (candidates.size() > config.num_candidates) {
        candidates.resize(config.num_candidates);
    }
    return candidates;
}

int pair_score(const RelatednessValues& values, const SelectionConfig& config)
{
    if (config.mode == SelectionMode::Esa) {
        return values.esa > config.t2 ? 1 : 0;
    }
    return (values.wnp > 0.0 && values.coll > 0.0 && values.ewc > config.t2) ? 1 : 0;
}

TermDecision decide_term(const RelatednessSource& source, const SelectionConfig& config,
                         const ExpansionCandidate& candidate,
                         const std::vector<std::string>& query_words)
{
    if (query_words.empty()) {
        throw InvalidArgument("cannot expand an empty query");
    }
    TermDecision decision;
    decision.candidate = candidate;
    int sum = 0;
    for (const auto& word : query_words) {
        const auto values = source.measure(candidate.surface, word);
        const int s = pair_score(values, config);
        decision.values.push_back(values);
        decision.pair_scores.push_back(s);
        sum += s;
    }
    decision.mean_score = static_cast<double>(sum) / static_cast<double>(query_words.size());
    decision.weight = decision.mean_score > config.t1 ? 1 : 0;
    return decision;
}

int term_weight(const RelatednessSource& source, const SelectionConfig& config,
                std::string_view candidate_surface, const std::vector<std::string>& query_words)
{
    const ExpansionCandidate candidate{std::string(candidate_surface),
                                       std::string(candidate_surface), 0.0};
    return decide_term(source, config, candidate, query_words).weight;
}

std::vector<TermDecision> trace_selection(const std::vector<ExpansionCandidate>& candidates,
                                          const std::vector<std::string>& query_words,
                                          const RelatednessSource& source,
                                          const SelectionConfig& config)
{
    std::vector<TermDecision> decisions;
    decisions.reserve(candidates.size());
    for (const auto& candidate : candidates) {
        decisions.push_back(decide_term(source, config, candidate, query_words));
    }
    return decisions;
}

std::vector<ExpansionCandidate> select_terms(const std::vector<ExpansionCandidate>& candidates,
                                             const std::vector<std::string>& query_words,
                                             const RelatednessSource& source,
                                             const SelectionConfig& config)
{
    std::vector<ExpansionCandidate> selected;
    if (candidates.empty()) {
        return selected;
    }
    for (const auto& decision : trace_selection(candidates, query_words, source, config)) {
        if (decision.weight == 1) {
            selected.push_back(decision.candidate);
        }
    }
    return selected;
}

std::vector<std::string> query_words(const AnalyzedText& query)
{
    std::vector<std::string> words;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < query.tokens.size(); ++i) {
        if (seen.insert(query.tokens[i]).second) {
            words.push_back(query.surfaces[i]);
        }
    }
    return words;
}

AnalyzedText expand_query(const AnalyzedText& query,
                          const std::vector<ExpansionCandidate>& selected)
{
    AnalyzedText expanded = query;
    std::unordered_set<std::string> present(query.tokens.begin(), query.tokens.end());
    for (const auto& candidate : selected) {
        if (present.insert(candidate.stem).second) {
            expanded.tokens.push_back(candidate.stem);
            expanded.surfaces.push_back(candidate.surface);
        }
    }
    return expanded;
}

std::string trace_header()
{
    return "topic\tstem\tsurface\tdfr_weight\tesa\twnp\tcoll\tewc\tpair_scores\tweight\tselected";
}

std::string format_trace_line(std::string_view topic_id, const TermDecision& decision,
                              bool selected)
{
    const auto& v = decision.values;
    std::string line(topic_id);
    line += '\t' + decision.candidate.stem;
    line += '\t' + decision.candidate.surface;
    line += '\t' + fixed(decision.candidate.dfr_weight);
    line += '\t' + join(v, [](const RelatednessValues& x) { return fixed(x.esa); });
    line += '\t' + join(v, [](const RelatednessValues& x) { return fixed(x.wnp); });
    line += '\t' + join(v, [](const RelatednessValues& x) { return fixed(x.coll); });
    line += '\t' + join(v, [](const RelatednessValues& x) { return fixed(x.ewc); });
    line += '\t' + join(decision.pair_scores, [](int s) { return std::to_string(s); });
    line += '\t' + std::to_string(decision.weight);
    line += '\t' + std::string(selected ? "1" : "0");
    return line;
}

}  // namespace qexp
