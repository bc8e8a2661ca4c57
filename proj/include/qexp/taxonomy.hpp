#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qexp {

using SynsetId = std::uint32_t;

/// Undirected synset graph built from hypernym/hyponym links, plus the
/// word -> synsets lexicon. The graph is kept simple: self-loops and
/// repeated edges are dropped on insertion.
class TaxonomyGraph {
  public:
    /// Returns the id registered for `key`, creating the node if needed.
    SynsetId add_synset(const std::string& key);
    void add_word(std::string_view word, SynsetId synset);
    void add_edge(SynsetId a, SynsetId b);

    [[nodiscard]] std::size_t num_synsets() const noexcept { return m_adjacency.size(); }
    [[nodiscard]] std::size_t num_edges() const noexcept { return m_num_edges; }
    [[nodiscard]] std::size_t num_words() const noexcept { return m_lexicon.size(); }
    [[nodiscard]] std::optional<SynsetId> find_synset(const std::string& key) const;
    [[nodiscard]] const std::vector<SynsetId>& neighbours(SynsetId id) const
    {
        return m_adjacency.at(id);
    }

    /// Synsets of a surface word. Exact (lowercased) lemma first; if there is
    /// none, the inflectional detachment rules WordNet's morphy uses are
    /// tried and the synsets of every resulting lemma are returned.
    [[nodiscard]] std::vector<SynsetId> synsets_of(std::string_view word) const;

    /// Shortest undirected edge count between any synset of w1 and any of
    /// w2, or nullopt when either word is unknown or no path exists.
    [[nodiscard]] std::optional<std::size_t> distance(std::string_view w1, std::string_view w2) const;

    /// 1 / (1 + distance), 0 when there is no path.
    [[nodiscard]] double path_similarity(std::string_view w1, std::string_view w2) const;

    /// Reads a WordNet 3.x database directory (index.{noun,verb,adj,adv}
    /// and data.{noun,verb,adj,adv}); missing parts of speech are skipped.
    /// Only '@' (hypernym) and '~' (hyponym) pointers become edges.
    static TaxonomyGraph load_wordnet(const std::filesystem::path& directory);

  private:
    [[nodiscard]] const std::vector<SynsetId>* exact(const std::string& lemma) const;

    std::unordered_map<std::string, SynsetId> m_keys;
    std::vector<std::vector<SynsetId>> m_adjacency;
    std::unordered_map<std::string, std::vector<SynsetId>> m_lexicon;
    std::size_t m_num_edges = 0;
};

}  // namespace qexp
