#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qexp/text.hpp"
#include "qexp/trec.hpp"

namespace qexp {

using DocOrdinal = std::uint32_t;
using TermId = std::uint32_t;

struct Posting {
    DocOrdinal doc = 0;
    std::uint32_t tf = 0;

    bool operator==(const Posting&) const = default;
};

struct TermStats {
    std::string term;
    std::uint64_t df = 0;
    std::uint64_t cf = 0;
};

struct DocEntry {
    std::string doc_id;
    std::uint64_t length = 0;
};

struct TermFrequency {
    TermId term = 0;
    std::uint32_t tf = 0;

    bool operator==(const TermFrequency&) const = default;
};

/// One (stem, surface form) pair occurring in a document.
struct SurfaceCount {
    TermId term = 0;
    std::string surface;
    std::uint32_t count = 0;

    bool operator==(const SurfaceCount&) const = default;
};

/// Immutable in-memory inverted index. Terms are analysed stems kept in
/// lexicographic order, so term ids are stable for a given input. Besides
/// postings it keeps a forward view of each document (term frequencies and
/// surface forms) for pseudo-relevance feedback.
class InvertedIndex {
  public:
    InvertedIndex() = default;

    static InvertedIndex build(const std::vector<RawDocument>& docs, const Stoplist& stoplist);

    [[nodiscard]] std::size_t num_docs() const noexcept { return m_docs.size(); }
    [[nodiscard]] std::size_t num_terms() const noexcept { return m_terms.size(); }
    [[nodiscard]] std::uint64_t total_tokens() const noexcept { return m_total_tokens; }
    [[nodiscard]] double avg_doc_length() const noexcept;

    [[nodiscard]] std::optional<TermId> term_id(std::string_view term) const;
    [[nodiscard]] const TermStats& term(TermId id) const { return m_terms.at(id); }
    [[nodiscard]] std::span<const TermStats> terms() const noexcept { return m_terms; }

    /// Sorted by doc ordinal; empty for unseen terms.
    [[nodiscard]] std::span<const Posting> postings(std::string_view term) const;
    [[nodiscard]] std::span<const Posting> postings(TermId id) const { return m_postings.at(id); }

    /// Term frequency of `term` in `doc`, 0 when absent.
    [[nodiscard]] std::uint32_t term_frequency(TermId term, DocOrdinal doc) const;

    [[nodiscard]] const DocEntry& doc(DocOrdinal ordinal) const { return m_docs.at(ordinal); }
    [[nodiscard]] std::optional<DocOrdinal> ordinal_of(std::string_view doc_id) const;

    /// Forward view: (term, tf) pairs sorted by term id.
    [[nodiscard]] std::span<const TermFrequency> doc_terms(DocOrdinal ordinal) const
    {
        return m_forward.at(ordinal);
    }
    /// Surface forms per term, sorted by (term id, surface).
    [[nodiscard]] std::span<const SurfaceCount> doc_surfaces(DocOrdinal ordinal) const
    {
        return m_surfaces.at(ordinal);
    }

    void save(const std::filesystem::path& path) const;
    static InvertedIndex load(const std::filesystem::path& path);

    bool operator==(const InvertedIndex& other) const;

  private:
    void rebuild_lookups();

    std::vector<TermStats> m_terms;
    std::vector<std::vector<Posting>> m_postings;
    std::vector<DocEntry> m_docs;
    std::vector<std::vector<TermFrequency>> m_forward;
    std::vector<std::vector<SurfaceCount>> m_surfaces;
    std::uint64_t m_total_tokens = 0;

    std::unordered_map<std::string, TermId> m_term_lookup;
    std::unordered_map<std::string, DocOrdinal> m_doc_lookup;
};

}  // namespace qexp
