#include "qexp/text.hpp"

#include <fstream>

#include "qexp/errors.hpp"
#include "qexp/porter.hpp"

namespace qexp {

namespace {

bool is_ascii_alnum(char c)
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

char ascii_lower(char c)
{
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

}  // namespace

Stoplist::Stoplist(std::initializer_list<std::string> words)
    : m_words(words.begin(), words.end())
{}

Stoplist::Stoplist(std::vector<std::string> words)
{
    for (auto& w : words) {
        m_words.insert(to_lower(w));
    }
}

Stoplist Stoplist::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open stopword file: " + path.string());
    }
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        words.push_back(line.substr(first));
    }
    return Stoplist(std::move(words));
}

bool Stoplist::contains(std::string_view lowercase_word) const
{
    return m_words.find(std::string(lowercase_word)) != m_words.end();
}

std::string to_lower(std::string_view s)
{
    std::string out(s);
    for (auto& c : out) {
        c = ascii_lower(c);
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view text)
{
    std::vector<std::string> tokens;
    std::string current;
    for (const char c : text) {
        if (is_ascii_alnum(c)) {
            current.push_back(ascii_lower(c));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) {
        tokens.push_back(std::move(current));
    }
    return tokens;
}

AnalyzedText analyze(std::string_view text, const Stoplist& stoplist)
{
    AnalyzedText out;
    for (auto& word : tokenize(text)) {
        if (stoplist.contains(word)) {
            continue;
        }
        out.tokens.push_back(porter_stem(word));
        out.surfaces.push_back(std::move(word));
    }
    return out;
}

std::string analyze_word(std::string_view word, const Stoplist& stoplist)
{
    const auto analyzed = analyze(word, stoplist);
    if (analyzed.tokens.size() != 1) {
        return {};
    }
    return analyzed.tokens.front();
}

}  // namespace qexp
