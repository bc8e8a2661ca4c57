#include "qexp/text.hpp"

#include <sstream>

namespace qexp {

namespace {

constexpr const char* kBundledStopwords =
#include "qexp/default_stopwords.inc"
    ;

}  // namespace

Stoplist default_stoplist()
{
    std::vector<std::string> words;
    std::istringstream in(kBundledStopwords);
    for (std::string word; in >> word;) {
        words.push_back(word);
    }
    return Stoplist(std::move(words));
}

}  // namespace qexp
