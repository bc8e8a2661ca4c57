#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace qexp {

/// A set of lowercase words removed before stemming.
class Stoplist {
  public:
    Stoplist() = default;
    Stoplist(std::initializer_list<std::string> words);
    explicit Stoplist(std::vector<std::string> words);

    /// One word per line; blank lines and lines starting with '#' are ignored.
    static Stoplist load(const std::filesystem::path& path);

    [[nodiscard]] bool contains(std::string_view lowercase_word) const;
    [[nodiscard]] std::size_t size() const noexcept { return m_words.size(); }

  private:
    std::unordered_set<std::string> m_words;
};

/// The stopword list bundled with the library (data/stopwords.txt).
Stoplist default_stoplist();

/// Stemmed tokens with the lowercase surface word each was derived from.
struct AnalyzedText {
    std::vector<std::string> tokens;
    std::vector<std::string> surfaces;

    [[nodiscard]] bool empty() const noexcept { return tokens.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return tokens.size(); }
    bool operator==(const AnalyzedText&) const = default;
};

/// Splits on every non-alphanumeric byte and lowercases. Bytes outside ASCII
/// count as separators.
std::vector<std::string> tokenize(std::string_view text);

/// tokenize -> drop stopwords -> Porter stem.
AnalyzedText analyze(std::string_view text, const Stoplist& stoplist);

/// Normalises a single word the same way analyze() does. Returns an empty
/// string when the word is a stopword or yields anything other than exactly
/// one token.
std::string analyze_word(std::string_view word, const Stoplist& stoplist);

std::string to_lower(std::string_view s);

}  // namespace qexp
