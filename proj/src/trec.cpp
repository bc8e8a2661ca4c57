#include "qexp/trec.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "qexp/errors.hpp"

namespace qexp {

namespace {

constexpr std::string_view kWhitespace = " \t\r\n\f\v";

char upper(char c)
{
    return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
}

bool equals_ci(std::string_view a, std::string_view b)
{
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (upper(a[i]) != upper(b[i])) {
            return false;
        }
    }
    return true;
}

std::size_t find_ci(std::string_view haystack, std::string_view needle, std::size_t from)
{
    if (needle.size() > haystack.size()) {
        return std::string_view::npos;
    }
    for (std::size_t i = from; i + needle.size() <= haystack.size(); ++i) {
        if (equals_ci(haystack.substr(i, needle.size()), needle)) {
            return i;
        }
    }
    return std::string_view::npos;
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(kWhitespace);
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(kWhitespace);
    return s.substr(first, last - first + 1);
}

std::string collapse_whitespace(std::string_view s)
{
    std::string out;
    bool pending_space = false;
    for (const char c : trim(s)) {
        if (kWhitespace.find(c) != std::string_view::npos) {
            pending_space = true;
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(c);
    }
    return out;
}

std::string decode_entities(std::string_view s)
{
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '&') {
            const auto rest = s.substr(i);
            if (rest.starts_with("&amp;")) {
                out.push_back('&');
                i += 4;
                continue;
            }
            if (rest.starts_with("&lt;")) {
                out.push_back('<');
                i += 3;
                continue;
            }
            if (rest.starts_with("&gt;")) {
                out.push_back('>');
                i += 3;
                continue;
            }
        }
        out.push_back(s[i]);
    }
    return out;
}

std::string encode_entities(std::string_view s)
{
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        default:
            out.push_back(c);
        }
    }
    return out;
}

// Replaces markup inside a field with spaces so adjacent words stay apart.
std::string strip_tags(std::string_view s)
{
    std::string out;
    out.reserve(s.size());
    bool in_tag = false;
    for (const char c : s) {
        if (c == '<') {
            in_tag = true;
            out.push_back(' ');
        } else if (c == '>' && in_tag) {
            in_tag = false;
        } else if (!in_tag) {
            out.push_back(c);
        }
    }
    return out;
}

struct Tag {
    std::string_view name;
    bool closing = false;
    std::size_t begin = 0;  // offset of '<'
    std::size_t end = 0;    // one past '>'
};

// Reads the tag starting at source[lt] == '<'.
Tag read_tag(std::string_view source, std::size_t lt)
{
    const auto gt = source.find('>', lt);
    if (gt == std::string_view::npos) {
        throw ParseError("unterminated tag at byte " + std::to_string(lt),
                         ParseError::Location::ByteOffset, lt);
    }
    Tag tag;
    tag.begin = lt;
    tag.end = gt + 1;
    auto inner = source.substr(lt + 1, gt - lt - 1);
    if (!inner.empty() && inner.front() == '/') {
        tag.closing = true;
        inner.remove_prefix(1);
    }
    const auto name_end = inner.find_first_of(kWhitespace);
    tag.name = name_end == std::string_view::npos ? inner : inner.substr(0, name_end);
    return tag;
}

}  // namespace

std::vector<RawDocument> parse_trec_documents(std::string_view source)
{
    std::vector<RawDocument> docs;
    std::unordered_set<std::string> seen;
    std::size_t pos = 0;
    while (true) {
        const auto lt = source.find('<', pos);
        if (lt == std::string_view::npos) {
            break;
        }
        const Tag doc_tag = read_tag(source, lt);
        pos = doc_tag.end;
        if (doc_tag.closing || !equals_ci(doc_tag.name, "DOC")) {
            continue;
        }
        const auto close = find_ci(source, "</DOC>", doc_tag.end);
        if (close == std::string_view::npos) {
            throw ParseError("unclosed <DOC> at byte " + std::to_string(lt),
                             ParseError::Location::ByteOffset, lt);
        }

        std::string doc_id;
        bool have_docno = false;
        std::string text;
        std::size_t cursor = doc_tag.end;
        while (true) {
            const auto field_lt = source.find('<', cursor);
            if (field_lt == std::string_view::npos || field_lt >= close) {
                break;
            }
            const Tag field = read_tag(source, field_lt);
            if (field.closing) {
                cursor = field.end;
                continue;
            }
            const std::string closing = "</" + std::string(field.name) + ">";
            const auto field_close = find_ci(source, closing, field.end);
            if (field_close == std::string_view::npos || field_close > close) {
                throw ParseError("unclosed <" + std::string(field.name) + "> at byte " +
                                     std::to_string(field_lt),
                                 ParseError::Location::ByteOffset, field_lt);
            }
            const auto content = source.substr(field.end, field_close - field.end);
            if (equals_ci(field.name, "DOCNO")) {
                doc_id = decode_entities(trim(strip_tags(content)));
                have_docno = true;
            } else {
                const auto value = decode_entities(trim(strip_tags(content)));
                if (!value.empty()) {
                    if (!text.empty()) {
                        text.push_back(' ');
                    }
                    text += value;
                }
            }
            cursor = field_close + closing.size();
        }
        if (!have_docno || doc_id.empty()) {
            throw ParseError("<DOC> at byte " + std::to_string(lt) + " has no DOCNO",
                             ParseError::Location::ByteOffset, lt);
        }
        if (!seen.insert(doc_id).second) {
            throw DuplicateIdError(doc_id);
        }
        docs.push_back(RawDocument{std::move(doc_id), std::move(text)});
        pos = close + 6;
    }
    return docs;
}

std::string serialize_trec_documents(const std::vector<RawDocument>& docs)
{
    std::string out;
    for (const auto& doc : docs) {
        out += "<DOC>\n<DOCNO>";
        out += encode_entities(doc.doc_id);
        out += "</DOCNO>\n<TEXT>\n";
        out += encode_entities(doc.text);
        out += "\n</TEXT>\n</DOC>\n";
    }
    return out;
}

std::vector<Topic> parse_topics(std::string_view source)
{
    std::vector<Topic> topics;
    std::size_t pos = 0;
    while (true) {
        const auto open = find_ci(source, "<top>", pos);
        if (open == std::string_view::npos) {
            break;
        }
        const auto close = find_ci(source, "</top>", open);
        if (close == std::string_view::npos) {
            throw ParseError("unclosed <top> at byte " + std::to_string(open),
                             ParseError::Location::ByteOffset, open);
        }
        const auto block = source.substr(open, close - open);

        // Element value runs to the next tag, closed or not.
        auto element_value = [&](std::string_view tag) -> std::pair<bool, std::string> {
            const auto at = find_ci(block, tag, 0);
            if (at == std::string_view::npos) {
                return {false, {}};
            }
            const auto start = at + tag.size();
            const auto stop = block.find('<', start);
            const auto raw = block.substr(start, stop == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : stop - start);
            return {true, collapse_whitespace(decode_entities(raw))};
        };

        auto [has_num, number] = element_value("<num>");
        if (has_num) {
            const auto colon = number.find(':');
            if (colon != std::string::npos && find_ci(number, "number", 0) == 0) {
                number = std::string(trim(std::string_view(number).substr(colon + 1)));
            }
        }
        if (number.empty()) {
            throw ParseError("topic at byte " + std::to_string(open) + " has no <num>",
                             ParseError::Location::ByteOffset, open);
        }
        auto [has_title, title] = element_value("<title>");
        if (!has_title || title.empty()) {
            throw ParseError("topic " + number + ": missing title",
                             ParseError::Location::ByteOffset, open);
        }
        topics.push_back(Topic{std::move(number), std::move(title)});
        pos = close + 6;
    }
    return topics;
}

std::vector<QrelEntry> parse_qrels(std::string_view source)
{
    std::vector<QrelEntry> entries;
    std::set<std::pair<std::string, std::string>> seen;
    std::istringstream in{std::string(source)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::vector<std::string> parts;
        for (std::string f; fields >> f;) {
            parts.push_back(std::move(f));
        }
        if (parts.empty()) {
            continue;
        }
        if (parts.size() != 4) {
            throw ParseError("qrels line " + std::to_string(line_no) + ": expected 4 fields, got " +
                                 std::to_string(parts.size()),
                             ParseError::Location::Line, line_no);
        }
        int grade = 0;
        const auto& g = parts[3];
        const auto [ptr, ec] = std::from_chars(g.data(), g.data() + g.size(), grade);
        if (ec != std::errc{} || ptr != g.data() + g.size() || grade < 0) {
            throw ParseError("qrels line " + std::to_string(line_no) + ": invalid grade '" + g + "'",
                             ParseError::Location::Line, line_no);
        }
        if (!seen.emplace(parts[0], parts[2]).second) {
            throw DuplicateIdError(parts[0] + "/" + parts[2]);
        }
        entries.push_back(QrelEntry{parts[0], parts[2], grade});
    }
    return entries;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace qexp
