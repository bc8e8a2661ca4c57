#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace qexp {

struct RawDocument {
    std::string doc_id;
    std::string text;

    bool operator==(const RawDocument&) const = default;
};

struct Topic {
    std::string topic_id;
    std::string title;

    bool operator==(const Topic&) const = default;
};

struct QrelEntry {
    std::string topic_id;
    std::string doc_id;
    int grade = 0;

    bool operator==(const QrelEntry&) const = default;
};

/// Parses <DOC> elements. Every child element other than <DOCNO> is an
/// indexable field; its content (with nested tags removed and the entities
/// &amp; &lt; &gt; decoded) is trimmed and the fields are joined with a
/// single space. Tag names are matched case-insensitively.
///
/// Throws ParseError (byte offset) on an unclosed DOC or missing DOCNO and
/// DuplicateIdError on a repeated DOCNO.
std::vector<RawDocument> parse_trec_documents(std::string_view source);

/// Writes documents in the format parse_trec_documents() reads, one <TEXT>
/// field per document.
std::string serialize_trec_documents(const std::vector<RawDocument>& docs);

/// Parses <top> blocks, reading <num> (an optional "Number:" prefix is
/// dropped) and <title>. Closing tags for num and title are optional, as in
/// TREC topic files. Throws ParseError naming the topic number when a title
/// is missing or empty.
std::vector<Topic> parse_topics(std::string_view source);

/// trec_eval qrels: "topic_id iteration doc_id grade" per line. Throws
/// ParseError (line number) on a wrong field count or a non-integer or
/// negative grade, and DuplicateIdError on a repeated (topic, doc) pair.
std::vector<QrelEntry> parse_qrels(std::string_view source);

std::string read_file(const std::filesystem::path& path);

}  // namespace qexp
