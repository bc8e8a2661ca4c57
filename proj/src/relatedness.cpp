#include "qexp/relatedness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "qexp/errors.hpp"

namespace qexp {

ConceptVector::ConceptVector(std::vector<ConceptWeight> entries) : m_entries(std::move(entries))
{
    std::sort(m_entries.begin(), m_entries.end(),
              [](const ConceptWeight& a, const ConceptWeight& b) { return a.concept_id < b.concept_id; });
    double sum = 0.0;
    for (const auto& e : m_entries) {
        sum += e.weight * e.weight;
    }
    m_norm = std::sqrt(sum);
}

double cosine(const ConceptVector& a, const ConceptVector& b)
{
    if (a.norm() == 0.0 || b.norm() == 0.0) {
        return 0.0;
    }
    const auto& x = a.entries();
    const auto& y = b.entries();
    double dot = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].concept_id < y[j].concept_id) {
            ++i;
        } else if (y[j].concept_id < x[i].concept_id) {
            ++j;
        } else {
            dot += x[i].weight * y[j].weight;
            ++i;
            ++j;
        }
    }
    return std::clamp(dot / (a.norm() * b.norm()), 0.0, 1.0);
}

ConceptSpace ConceptSpace::build(const std::vector<RawDocument>& concepts, const Stoplist& stoplist)
{
    if (concepts.empty()) {
        throw InvalidArgument("concept space needs at least one concept document");
    }
    ConceptSpace space;
    space.m_stoplist = stoplist;
    space.m_num_concepts = concepts.size();

    std::map<std::string, std::vector<std::pair<ConceptId, std::uint32_t>>> occurrences;
    for (std::size_t c = 0; c < concepts.size(); ++c) {
        std::map<std::string, std::uint32_t> tf;
        for (const auto& token : analyze(concepts[c].text, stoplist).tokens) {
            ++tf[token];
        }
        for (const auto& [word, count] : tf) {
            occurrences[word].emplace_back(static_cast<ConceptId>(c), count);
        }
    }

    const double n = static_cast<double>(concepts.size());
    for (const auto& [word, list] : occurrences) {
        const double idf = std::log(n / static_cast<double>(list.size()));
        if (idf <= 0.0) {
            continue;
        }
        std::vector<ConceptWeight> entries;
        entries.reserve(list.size());
        for (const auto& [concept_id, count] : list) {
            entries.push_back(ConceptWeight{concept_id, static_cast<double>(count) * idf});
        }
        space.m_vectors.emplace(word, ConceptVector(std::move(entries)));
    }
    return space;
}

const ConceptVector* ConceptSpace::vector_for(std::string_view word) const
{
    const auto key = analyze_word(word, m_stoplist);
    if (key.empty()) {
        return nullptr;
    }
    const auto it = m_vectors.find(key);
    return it == m_vectors.end() ? nullptr : &it->second;
}

double ConceptSpace::relatedness(std::string_view w1, std::string_view w2) const
{
    const auto* a = vector_for(w1);
    const auto* b = vector_for(w2);
    if (a == nullptr || b == nullptr || a->norm() == 0.0 || b->norm() == 0.0) {
        return 0.0;
    }
    if (a == b) {
        return 1.0;
    }
    return cosine(*a, *b);
}

std::string CollocationTable::bigram_key(std::string_view first, std::string_view second)
{
    std::string key;
    key.reserve(first.size() + second.size() + 1);
    key.append(first);
    key.push_back('\0');
    key.append(second);
    return key;
}

CollocationTable CollocationTable::build(const std::vector<RawDocument>& docs,
                                         const Stoplist& stoplist)
{
    CollocationTable table;
    table.m_stoplist = stoplist;
    for (const auto& doc : docs) {
        const auto tokens = analyze(doc.text, stoplist).tokens;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            table.add_unigram(tokens[i]);
            if (i + 1 < tokens.size()) {
                table.add_bigram(tokens[i], tokens[i + 1]);
            }
        }
    }
    return table;
}

void CollocationTable::add_unigram(const std::string& key, std::uint64_t count)
{
    m_unigrams[key] += count;
}

void CollocationTable::add_bigram(const std::string& first, const std::string& second,
                                  std::uint64_t count)
{
    m_bigrams[bigram_key(first, second)] += count;
}

std::uint64_t CollocationTable::unigram(std::string_view key) const
{
    const auto it = m_unigrams.find(std::string(key));
    return it == m_unigrams.end() ? 0 : it->second;
}

std::uint64_t CollocationTable::bigram(std::string_view first, std::string_view second) const
{
    const auto it = m_bigrams.find(bigram_key(first, second));
    return it == m_bigrams.end() ? 0 : it->second;
}

CollocationTable::PairCounts CollocationTable::counts(std::string_view w1, std::string_view w2) const
{
    const auto a = analyze_word(w1, m_stoplist);
    const auto b = analyze_word(w2, m_stoplist);
    if (a.empty() || b.empty()) {
        return {};
    }
    return PairCounts{unigram(a), unigram(b), bigram(a, b), bigram(b, a)};
}

double collocation_index(const CollocationTable::PairCounts& counts, double xi)
{
    const double denom = static_cast<double>(counts.f1) + static_cast<double>(counts.f2);
    if (denom == 0.0) {
        return 0.0;
    }
    return 2.0 * static_cast<double>(counts.f12) / denom +
           xi * (2.0 * static_cast<double>(counts.f21) / denom);
}

double collocation_index(const CollocationTable& table, std::string_view w1, std::string_view w2,
                         double xi)
{
    return collocation_index(table.counts(w1, w2), xi);
}

void EwcParams::validate() const
{
    for (const double v : {lambda_wnp, lambda_coll, xi}) {
        if (!std::isfinite(v) || v < 0.0) {
            throw InvalidArgument("EWC constants must be finite and non-negative");
        }
    }
}

double ewc_combine(double esa, double wnp, double coll, const EwcParams& params)
{
    const double alpha = 1.0 + params.lambda_wnp * wnp;
    const double gamma = 1.0 + params.lambda_coll * coll;
    return esa * alpha * gamma;
}

RelatednessValues ewc_relatedness(const ConceptSpace& space, const TaxonomyGraph& graph,
                                  const CollocationTable& table, const EwcParams& params,
                                  std::string_view w1, std::string_view w2)
{
    RelatednessValues v;
    v.esa = space.relatedness(w1, w2);
    v.wnp = graph.path_similarity(w1, w2);
    v.coll = collocation_index(table, w1, w2, params.xi);
    v.ewc = ewc_combine(v.esa, v.wnp, v.coll, params);
    return v;
}

RelatednessModel::RelatednessModel(std::shared_ptr<const ConceptSpace> space,
                                   std::shared_ptr<const TaxonomyGraph> graph,
                                   std::shared_ptr<const CollocationTable> table, EwcParams params)
    : m_space(std::move(space)), m_graph(std::move(graph)), m_table(std::move(table)),
      m_params(params)
{
    if (!m_space || !m_graph || !m_table) {
        throw InvalidArgument("relatedness model needs a concept space, taxonomy and collocation table");
    }
    m_params.validate();
}

RelatednessValues RelatednessModel::measure(std::string_view w1, std::string_view w2) const
{
    return ewc_relatedness(*m_space, *m_graph, *m_table, m_params, w1, w2);
}

}  // namespace qexp
