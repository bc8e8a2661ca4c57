#include "qexp/index.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <type_traits>
#include <fstream>
#include <map>
#include <utility>

#include "qexp/errors.hpp"

namespace qexp {

namespace {

constexpr std::array<char, 8> kMagic = {'Q', 'E', 'X', 'P', 'I', 'D', 'X', '\0'};
constexpr std::uint32_t kFormatVersion = 1;

class Writer {
  public:
    explicit Writer(std::ostream& out) : m_out(out) {}

    template <typename T>
    void pod(T value)
    {
        static_assert(std::is_trivially_copyable_v<T>);
        m_out.write(reinterpret_cast<const char*>(&value), sizeof(T));
    }

    void str(const std::string& s)
    {
        pod(static_cast<std::uint32_t>(s.size()));
        m_out.write(s.data(), static_cast<std::streamsize>(s.size()));
    }

  private:
    std::ostream& m_out;
};

class Reader {
  public:
    Reader(std::istream& in, std::string path) : m_in(in), m_path(std::move(path)) {}

    template <typename T>
    T pod()
    {
        T value{};
        m_in.read(reinterpret_cast<char*>(&value), sizeof(T));
        check();
        return value;
    }

    std::string str()
    {
        const auto size = pod<std::uint32_t>();
        std::string s(size, '\0');
        m_in.read(s.data(), size);
        check();
        return s;
    }

  private:
    void check()
    {
        if (!m_in) {
            throw IoError("truncated index file: " + m_path);
        }
    }

    std::istream& m_in;
    std::string m_path;
};

}  // namespace

InvertedIndex InvertedIndex::build(const std::vector<RawDocument>& docs, const Stoplist& stoplist)
{
    InvertedIndex index;
    std::vector<std::map<std::string, std::uint32_t>> doc_tf(docs.size());
    std::vector<std::map<std::pair<std::string, std::string>, std::uint32_t>> doc_surface(
        docs.size());
    std::map<std::string, TermId> vocabulary;

    index.m_docs.reserve(docs.size());
    for (std::size_t i = 0; i < docs.size(); ++i) {
        if (index.m_doc_lookup.contains(docs[i].doc_id)) {
            throw DuplicateIdError(docs[i].doc_id);
        }
        index.m_doc_lookup.emplace(docs[i].doc_id, static_cast<DocOrdinal>(i));
        const auto analyzed = analyze(docs[i].text, stoplist);
        for (std::size_t t = 0; t < analyzed.tokens.size(); ++t) {
            ++doc_tf[i][analyzed.tokens[t]];
            ++doc_surface[i][{analyzed.tokens[t], analyzed.surfaces[t]}];
            vocabulary.emplace(analyzed.tokens[t], 0);
        }
        index.m_docs.push_back(DocEntry{docs[i].doc_id, analyzed.tokens.size()});
        index.m_total_tokens += analyzed.tokens.size();
    }

    TermId next = 0;
    index.m_terms.reserve(vocabulary.size());
    for (auto& [term, id] : vocabulary) {
        id = next++;
        index.m_terms.push_back(TermStats{term, 0, 0});
    }
    index.m_postings.resize(vocabulary.size());
    index.m_forward.resize(docs.size());
    index.m_surfaces.resize(docs.size());

    for (std::size_t i = 0; i < docs.size(); ++i) {
        const auto ordinal = static_cast<DocOrdinal>(i);
        for (const auto& [term, tf] : doc_tf[i]) {
            const TermId id = vocabulary.at(term);
            index.m_postings[id].push_back(Posting{ordinal, tf});
            index.m_terms[id].df += 1;
            index.m_terms[id].cf += tf;
            index.m_forward[i].push_back(TermFrequency{id, tf});
        }
        for (const auto& [key, count] : doc_surface[i]) {
            index.m_surfaces[i].push_back(SurfaceCount{vocabulary.at(key.first), key.second, count});
        }
    }
    for (const auto& [term, id] : vocabulary) {
        index.m_term_lookup.emplace(term, id);
    }
    return index;
}

double InvertedIndex::avg_doc_length() const noexcept
{
    if (m_docs.empty()) {
        return 0.0;
    }
    return static_cast<double>(m_total_tokens) / static_cast<double>(m_docs.size());
}

std::optional<TermId> InvertedIndex::term_id(std::string_view term) const
{
    const auto it = m_term_lookup.find(std::string(term));
    if (it == m_term_lookup.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::span<const Posting> InvertedIndex::postings(std::string_view term) const
{
    const auto id = term_id(term);
    if (!id) {
        return {};
    }
    return m_postings[*id];
}

std::uint32_t InvertedIndex::term_frequency(TermId term, DocOrdinal doc) const
{
    const auto& list = m_postings.at(term);
    const auto it = std::lower_bound(list.begin(), list.end(), doc,
                                     [](const Posting& p, DocOrdinal d) { return p.doc < d; });
    if (it == list.end() || it->doc != doc) {
        return 0;
    }
    return it->tf;
}

std::optional<DocOrdinal> InvertedIndex::ordinal_of(std::string_view doc_id) const
{
    const auto it = m_doc_lookup.find(std::string(doc_id));
    if (it == m_doc_lookup.end()) {
        return std::nullopt;
    }
    return it->second;
}

void InvertedIndex::rebuild_lookups()
{
    m_term_lookup.clear();
    m_doc_lookup.clear();
    for (std::size_t i = 0; i < m_terms.size(); ++i) {
        m_term_lookup.emplace(m_terms[i].term, static_cast<TermId>(i));
    }
    for (std::size_t i = 0; i < m_docs.size(); ++i) {
        m_doc_lookup.emplace(m_docs[i].doc_id, static_cast<DocOrdinal>(i));
    }
}

void InvertedIndex::save(const std::filesystem::path& path) const
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write index file: " + path.string());
    }
    out.write(kMagic.data(), kMagic.size());
    Writer w(out);
    w.pod(kFormatVersion);
    w.pod(static_cast<std::uint64_t>(m_terms.size()));
    for (std::size_t t = 0; t < m_terms.size(); ++t) {
        w.str(m_terms[t].term);
        w.pod(m_terms[t].df);
        w.pod(m_terms[t].cf);
        for (const auto& p : m_postings[t]) {
            w.pod(p.doc);
            w.pod(p.tf);
        }
    }
    w.pod(static_cast<std::uint64_t>(m_docs.size()));
    for (std::size_t d = 0; d < m_docs.size(); ++d) {
        w.str(m_docs[d].doc_id);
        w.pod(m_docs[d].length);
        w.pod(static_cast<std::uint32_t>(m_forward[d].size()));
        for (const auto& f : m_forward[d]) {
            w.pod(f.term);
            w.pod(f.tf);
        }
        w.pod(static_cast<std::uint32_t>(m_surfaces[d].size()));
        for (const auto& s : m_surfaces[d]) {
            w.pod(s.term);
            w.str(s.surface);
            w.pod(s.count);
        }
    }
    w.pod(m_total_tokens);
    if (!out) {
        throw IoError("failed writing index file: " + path.string());
    }
}

InvertedIndex InvertedIndex::load(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open index file: " + path.string());
    }
    std::array<char, 8> magic{};
    in.read(magic.data(), magic.size());
    if (!in || magic != kMagic) {
        throw IoError("not an index file: " + path.string());
    }
    Reader r(in, path.string());
    const auto version = r.pod<std::uint32_t>();
    if (version != kFormatVersion) {
        throw IoError("unsupported index format version " + std::to_string(version) + ": " +
                      path.string());
    }

    InvertedIndex index;
    const auto num_terms = r.pod<std::uint64_t>();
    index.m_terms.resize(num_terms);
    index.m_postings.resize(num_terms);
    for (std::uint64_t t = 0; t < num_terms; ++t) {
        auto& stats = index.m_terms[t];
        stats.term = r.str();
        stats.df = r.pod<std::uint64_t>();
        stats.cf = r.pod<std::uint64_t>();
        index.m_postings[t].resize(stats.df);
        for (auto& p : index.m_postings[t]) {
            p.doc = r.pod<DocOrdinal>();
            p.tf = r.pod<std::uint32_t>();
        }
    }
    const auto num_docs = r.pod<std::uint64_t>();
    index.m_docs.resize(num_docs);
    index.m_forward.resize(num_docs);
    index.m_surfaces.resize(num_docs);
    for (std::uint64_t d = 0; d < num_docs; ++d) {
        index.m_docs[d].doc_id = r.str();
        index.m_docs[d].length = r.pod<std::uint64_t>();
        index.m_forward[d].resize(r.pod<std::uint32_t>());
        for (auto& f : index.m_forward[d]) {
            f.term = r.pod<TermId>();
            f.tf = r.pod<std::uint32_t>();
        }
        index.m_surfaces[d].resize(r.pod<std::uint32_t>());
        for (auto& s : index.m_surfaces[d]) {
            s.term = r.pod<TermId>();
            s.surface = r.str();
            s.count = r.pod<std::uint32_t>();
        }
    }
    index.m_total_tokens = r.pod<std::uint64_t>();
    index.rebuild_lookups();
    return index;
}

bool InvertedIndex::operator==(const InvertedIndex& other) const
{
    auto same_terms = std::equal(m_terms.begin(), m_terms.end(), other.m_terms.begin(),
                                 other.m_terms.end(), [](const TermStats& a, const TermStats& b) {
                                     return a.term == b.term && a.df == b.df && a.cf == b.cf;
                                 });
    auto same_docs = std::equal(m_docs.begin(), m_docs.end(), other.m_docs.begin(),
                                other.m_docs.end(), [](const DocEntry& a, const DocEntry& b) {
                                    return a.doc_id == b.doc_id && a.length == b.length;
                                });
    return same_terms && same_docs && m_postings == other.m_postings &&
           m_forward == other.m_forward && m_surfaces == other.m_surfaces &&
           m_total_tokens == other.m_total_tokens;
}

}  // namespace qexp
