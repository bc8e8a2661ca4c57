#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qexp/taxonomy.hpp"
#include "qexp/text.hpp"
#include "qexp/trec.hpp"

namespace qexp {

using ConceptId = std::uint32_t;

struct ConceptWeight {
    ConceptId concept_id = 0;
    double weight = 0.0;
};

/// Sparse word representation over concept documents, sorted by concept id.
class ConceptVector {
  public:
    ConceptVector() = default;
    explicit ConceptVector(std::vector<ConceptWeight> entries);

    [[nodiscard]] const std::vector<ConceptWeight>& entries() const noexcept { return m_entries; }
    [[nodiscard]] double norm() const noexcept { return m_norm; }

  private:
    std::vector<ConceptWeight> m_entries;
    double m_norm = 0.0;
};

double cosine(const ConceptVector& a, const ConceptVector& b);

/// Explicit semantic analysis space: each word is a TF-IDF vector over the
/// concept documents, weight(w, c) = tf(w, c) * ln(num_concepts / df(w)).
/// Words are keyed by their analysed stem; lookups take surface words.
class ConceptSpace {
  public:
    /// Throws InvalidArgument on an empty concept set.
    static ConceptSpace build(const std::vector<RawDocument>& concepts, const Stoplist& stoplist);

    [[nodiscard]] std::size_t num_concepts() const noexcept { return m_num_concepts; }
    [[nodiscard]] std::size_t vocabulary_size() const noexcept { return m_vectors.size(); }

    /// nullptr for out-of-vocabulary words.
    [[nodiscard]] const ConceptVector* vector_for(std::string_view word) const;

    /// Cosine of the two concept vectors in [0, 1]; 0 when either is OOV.
    [[nodiscard]] double relatedness(std::string_view w1, std::string_view w2) const;

  private:
    Stoplist m_stoplist;
    std::size_t m_num_concepts = 0;
    std::unordered_map<std::string, ConceptVector> m_vectors;
};

/// Unigram and ordered adjacent-bigram counts over analysed tokens.
class CollocationTable {
  public:
    /// Bigrams never cross document boundaries.
    static CollocationTable build(const std::vector<RawDocument>& docs, const Stoplist& stoplist);

    /// Direct counting interface over already-normalised keys.
    void add_unigram(const std::string& key, std::uint64_t count = 1);
    void add_bigram(const std::string& first, const std::string& second, std::uint64_t count = 1);

    [[nodiscard]] std::uint64_t unigram(std::string_view key) const;
    [[nodiscard]] std::uint64_t bigram(std::string_view first, std::string_view second) const;
    [[nodiscard]] std::size_t num_unigrams() const noexcept { return m_unigrams.size(); }
    [[nodiscard]] std::size_t num_bigrams() const noexcept { return m_bigrams.size(); }
    [[nodiscard]] bool empty() const noexcept { return m_unigrams.empty(); }

    struct PairCounts {
        std::uint64_t f1 = 0;
        std::uint64_t f2 = 0;
        std::uint64_t f12 = 0;
        std::uint64_t f21 = 0;
    };

    /// Counts for two surface words, normalised with the table's stoplist.
    [[nodiscard]] PairCounts counts(std::string_view w1, std::string_view w2) const;

  private:
    static std::string bigram_key(std::string_view first, std::string_view second);

    Stoplist m_stoplist;
    std::unordered_map<std::string, std::uint64_t> m_unigrams;
    std::unordered_map<std::string, std::uint64_t> m_bigrams;
};

/// Mixed collocation index:
///   2 f(w1 w2) / (f(w1) + f(w2)) + xi * 2 f(w2 w1) / (f(w1) + f(w2)),
/// 0 when f(w1) + f(w2) = 0.
double collocation_index(const CollocationTable::PairCounts& counts, double xi);
double collocation_index(const CollocationTable& table, std::string_view w1, std::string_view w2,
                         double xi);

struct EwcParams {
    double lambda_wnp = 5.16;
    double lambda_coll = 48.7;
    double xi = 0.55;

    /// Throws InvalidArgument unless every field is finite and >= 0.
    void validate() const;
};

/// esa * (1 + lambda_wnp * wnp) * (1 + lambda_coll * coll)
double ewc_combine(double esa, double wnp, double coll, const EwcParams& params);

struct RelatednessValues {
    double esa = 0.0;
    double wnp = 0.0;
    double coll = 0.0;
    double ewc = 0.0;
};

/// Anything able to report the component measures for a word pair.
class RelatednessSource {
  public:
    virtual ~RelatednessSource() = default;
    [[nodiscard]] virtual RelatednessValues measure(std::string_view w1,
                                                    std::string_view w2) const = 0;
};

RelatednessValues ewc_relatedness(const ConceptSpace& space, const TaxonomyGraph& graph,
                                  const CollocationTable& table, const EwcParams& params,
                                  std::string_view w1, std::string_view w2);

/// The three knowledge sources bundled behind RelatednessSource.
class RelatednessModel final : public RelatednessSource {
  public:
    RelatednessModel(std::shared_ptr<const ConceptSpace> space,
                     std::shared_ptr<const TaxonomyGraph> graph,
                     std::shared_ptr<const CollocationTable> table, EwcParams params = {});

    [[nodiscard]] RelatednessValues measure(std::string_view w1,
                                            std::string_view w2) const override;

    [[nodiscard]] const EwcParams& params() const noexcept { return m_params; }
    [[nodiscard]] const ConceptSpace& space() const noexcept { return *m_space; }
    [[nodiscard]] const TaxonomyGraph& graph() const noexcept { return *m_graph; }
    [[nodiscard]] const CollocationTable& table() const noexcept { return *m_table; }

  private:
    std::shared_ptr<const ConceptSpace> m_space;
    std::shared_ptr<const TaxonomyGraph> m_graph;
    std::shared_ptr<const CollocationTable> m_table;
    EwcParams m_params;
};

}  // namespace qexp
