#include "qexp/taxonomy.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <fstream>
#include <sstream>
#include <utility>

#include "qexp/errors.hpp"
#include "qexp/text.hpp"

namespace qexp {

namespace {

// WordNet morphy detachment rules for nouns, verbs and adjectives.
constexpr std::array<std::pair<std::string_view, std::string_view>, 18> kDetachments = {{
    {"s", ""},    {"ses", "s"}, {"xes", "x"},  {"zes", "z"},  {"ches", "ch"},
    {"shes", "sh"}, {"men", "man"}, {"ies", "y"}, {"es", "e"},  {"es", ""},
    {"ed", "e"},  {"ed", ""},   {"ing", "e"},  {"ing", ""},  {"er", ""},
    {"est", ""},  {"er", "e"},  {"est", "e"},
}};

std::string lemma_key(std::string_view word)
{
    auto lemma = to_lower(word);
    std::replace(lemma.begin(), lemma.end(), ' ', '_');
    return lemma;
}

char normalise_pos(char pos)
{
    return pos == 's' ? 'a' : pos;
}

std::string synset_key(char pos, std::string_view offset)
{
    std::string key;
    key.push_back(normalise_pos(pos));
    key.push_back(':');
    key.append(offset);
    return key;
}

// Adjective lemmas in data files may carry a syntactic marker: "big(a)".
std::string strip_adjective_marker(std::string word)
{
    const auto paren = word.find('(');
    if (paren != std::string::npos) {
        word.resize(paren);
    }
    return word;
}

struct PosFiles {
    std::string_view suffix;
    char pos;
};

constexpr std::array<PosFiles, 4> kPosFiles = {{
    {"noun", 'n'},
    {"verb", 'v'},
    {"adj", 'a'},
    {"adv", 'r'},
}};

// WordNet database files open with a license block of lines indented by spaces.
bool is_license_line(const std::string& line)
{
    return line.empty() || line.front() == ' ';
}

}  // namespace

SynsetId TaxonomyGraph::add_synset(const std::string& key)
{
    const auto [it, inserted] = m_keys.emplace(key, static_cast<SynsetId>(m_adjacency.size()));
    if (inserted) {
        m_adjacency.emplace_back();
    }
    return it->second;
}

std::optional<SynsetId> TaxonomyGraph::find_synset(const std::string& key) const
{
    const auto it = m_keys.find(key);
    if (it == m_keys.end()) {
        return std::nullopt;
    }
    return it->second;
}

void TaxonomyGraph::add_word(std::string_view word, SynsetId synset)
{
    if (synset >= m_adjacency.size()) {
        throw InvalidArgument("unknown synset id " + std::to_string(synset));
    }
    auto& list = m_lexicon[lemma_key(word)];
    if (std::find(list.begin(), list.end(), synset) == list.end()) {
        list.push_back(synset);
    }
}

void TaxonomyGraph::add_edge(SynsetId a, SynsetId b)
{
    if (a >= m_adjacency.size() || b >= m_adjacency.size()) {
        throw InvalidArgument("edge references unknown synset");
    }
    if (a == b) {
        return;
    }
    auto& from_a = m_adjacency[a];
    if (std::find(from_a.begin(), from_a.end(), b) != from_a.end()) {
        return;
    }
    from_a.push_back(b);
    m_adjacency[b].push_back(a);
    ++m_num_edges;
}

const std::vector<SynsetId>* TaxonomyGraph::exact(const std::string& lemma) const
{
    const auto it = m_lexicon.find(lemma);
    return it == m_lexicon.end() ? nullptr : &it->second;
}

std::vector<SynsetId> TaxonomyGraph::synsets_of(std::string_view word) const
{
    const auto lemma = lemma_key(word);
    if (lemma.empty()) {
        return {};
    }
    if (const auto* found = exact(lemma)) {
        return *found;
    }
    std::vector<SynsetId> result;
    for (const auto& [suffix, replacement] : kDetachments) {
        if (lemma.size() <= suffix.size() || !lemma.ends_with(suffix)) {
            continue;
        }
        auto base = lemma.substr(0, lemma.size() - suffix.size());
        base += replacement;
        if (const auto* found = exact(base)) {
            for (const auto id : *found) {
                if (std::find(result.begin(), result.end(), id) == result.end()) {
                    result.push_back(id);
                }
            }
        }
    }
    return result;
}

std::optional<std::size_t> TaxonomyGraph::distance(std::string_view w1, std::string_view w2) const
{
    const auto sources = synsets_of(w1);
    const auto targets = synsets_of(w2);
    if (sources.empty() || targets.empty()) {
        return std::nullopt;
    }
    std::vector<char> is_target(m_adjacency.size(), 0);
    for (const auto t : targets) {
        is_target[t] = 1;
    }
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(m_adjacency.size(), kUnvisited);
    std::deque<SynsetId> frontier;
    for (const auto s : sources) {
        if (is_target[s] != 0) {
            return 0;
        }
        dist[s] = 0;
        frontier.push_back(s);
    }
    while (!frontier.empty()) {
        const auto node = frontier.front();
        frontier.pop_front();
        for (const auto next : m_adjacency[node]) {
            if (dist[next] != kUnvisited) {
                continue;
            }
            dist[next] = dist[node] + 1;
            if (is_target[next] != 0) {
                return dist[next];
            }
            frontier.push_back(next);
        }
    }
    return std::nullopt;
}

double TaxonomyGraph::path_similarity(std::string_view w1, std::string_view w2) const
{
    const auto d = distance(w1, w2);
    if (!d) {
        return 0.0;
    }
    return 1.0 / (1.0 + static_cast<double>(*d));
}

TaxonomyGraph TaxonomyGraph::load_wordnet(const std::filesystem::path& directory)
{
    if (!std::filesystem::is_directory(directory)) {
        throw IoError("WordNet directory not found: " + directory.string());
    }
    TaxonomyGraph graph;
    bool any_file = false;
    std::vector<std::pair<SynsetId, std::string>> pending_edges;

    for (const auto& [suffix, pos] : kPosFiles) {
        const auto data_path = directory / ("data." + std::string(suffix));
        std::ifstream data(data_path);
        if (data) {
            any_file = true;
            std::string line;
            std::size_t line_no = 0;
            while (std::getline(data, line)) {
                ++line_no;
                if (is_license_line(line)) {
                    continue;
                }
                const auto bar = line.find('|');
                std::istringstream fields(line.substr(0, bar));
                std::string offset, lex_filenum, ss_type, word_count_hex;
                if (!(fields >> offset >> lex_filenum >> ss_type >> word_count_hex)) {
                    throw ParseError(data_path.string() + ":" + std::to_string(line_no) +
                                         ": malformed synset line",
                                     ParseError::Location::Line, line_no);
                }
                const auto id = graph.add_synset(synset_key(pos, offset));
                const auto word_count = std::stoul(word_count_hex, nullptr, 16);
                for (unsigned long w = 0; w < word_count; ++w) {
                    std::string word, lex_id;
                    if (!(fields >> word >> lex_id)) {
                        throw ParseError(data_path.string() + ":" + std::to_string(line_no) +
                                             ": truncated word list",
                                         ParseError::Location::Line, line_no);
                    }
                    graph.add_word(strip_adjective_marker(word), id);
                }
                std::size_t pointer_count = 0;
                if (!(fields >> pointer_count)) {
                    throw ParseError(data_path.string() + ":" + std::to_string(line_no) +
                                         ": missing pointer count",
                                     ParseError::Location::Line, line_no);
                }
                for (std::size_t p = 0; p < pointer_count; ++p) {
                    std::string symbol, target_offset, target_pos, source_target;
                    if (!(fields >> symbol >> target_offset >> target_pos >> source_target) ||
                        target_pos.empty()) {
                        throw ParseError(data_path.string() + ":" + std::to_string(line_no) +
                                             ": truncated pointer list",
                                         ParseError::Location::Line, line_no);
                    }
                    if (symbol == "@" || symbol == "~") {
                        pending_edges.emplace_back(id, synset_key(target_pos.front(), target_offset));
                    }
                }
            }
        }

        const auto index_path = directory / ("index." + std::string(suffix));
        std::ifstream index(index_path);
        if (index) {
            any_file = true;
            std::string line;
            while (std::getline(index, line)) {
                if (is_license_line(line)) {
                    continue;
                }
                std::istringstream fields(line);
                std::string lemma, lemma_pos;
                std::size_t synset_count = 0;
                std::size_t pointer_count = 0;
                if (!(fields >> lemma >> lemma_pos >> synset_count >> pointer_count)) {
                    continue;
                }
                std::string skip;
                for (std::size_t p = 0; p < pointer_count; ++p) {
                    fields >> skip;
                }
                fields >> skip >> skip;  // sense_cnt, tagsense_cnt
                for (std::size_t s = 0; s < synset_count; ++s) {
                    std::string offset;
                    if (!(fields >> offset)) {
                        break;
                    }
                    graph.add_word(lemma, graph.add_synset(synset_key(pos, offset)));
                }
            }
        }
    }
    if (!any_file) {
        throw IoError("no WordNet database files in " + directory.string());
    }
    for (const auto& [from, target_key] : pending_edges) {
        graph.add_edge(from, graph.add_synset(target_key));
    }
    return graph;
}

}  // namespace qexp
