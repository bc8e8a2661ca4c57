#include "qexp/eval.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <unordered_set>

#include "qexp/errors.hpp"

namespace qexp {

namespace {

std::string fixed(double v, int decimals = 4)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

void require_relevant(const std::set<std::string>& relevant)
{
    if (relevant.empty()) {
        throw InvalidArgument("metric undefined for a topic with no relevant documents");
    }
}

std::vector<std::string> doc_ids(const std::vector<ScoredDoc>& docs)
{
    std::vector<std::string> ids;
    ids.reserve(docs.size());
    for (const auto& d : docs) {
        ids.push_back(d.doc_id);
    }
    return ids;
}

}  // namespace

RelevantSets binarize_qrels(const std::vector<QrelEntry>& qrels, int threshold)
{
    if (threshold < 1) {
        throw InvalidArgument("relevance threshold must be >= 1");
    }
    RelevantSets sets;
    for (const auto& q : qrels) {
        auto& set = sets[q.topic_id];
        if (q.grade >= threshold) {
            set.insert(q.doc_id);
        }
    }
    return sets;
}

double average_precision(std::span<const std::string> ranked, const std::set<std::string>& relevant)
{
    require_relevant(relevant);
    double sum = 0.0;
    std::size_t found = 0;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        if (relevant.contains(ranked[i])) {
            ++found;
            sum += static_cast<double>(found) / static_cast<double>(i + 1);
        }
    }
    return sum / static_cast<double>(relevant.size());
}

double r_precision(std::span<const std::string> ranked, const std::set<std::string>& relevant)
{
    require_relevant(relevant);
    const auto r = relevant.size();
    const auto depth = std::min(r, ranked.size());
    std::size_t found = 0;
    for (std::size_t i = 0; i < depth; ++i) {
        if (relevant.contains(ranked[i])) {
            ++found;
        }
    }
    return static_cast<double>(found) / static_cast<double>(r);
}

PrCurve interpolated_pr_11pt(std::span<const std::string> ranked,
                             const std::set<std::string>& relevant)
{
    require_relevant(relevant);
    const auto r = relevant.size();
    PrCurve curve{};
    std::size_t found = 0;
    // Precision peaks at the ranks of relevant documents, so those suffice.
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        if (!relevant.contains(ranked[i])) {
            continue;
        }
        ++found;
        const double precision = static_cast<double>(found) / static_cast<double>(i + 1);
        for (std::size_t level = 0; level < curve.size(); ++level) {
            // recall found / r >= level / 10, compared exactly
            if (found * 10 >= level * r) {
                curve[level] = std::max(curve[level], precision);
            }
        }
    }
    return curve;
}

EvalReport evaluate_run(const RankedRun& run, const std::vector<QrelEntry>& qrels, int threshold)
{
    const auto relevant = binarize_qrels(qrels, threshold);
    EvalReport report;
    for (const auto& [topic, docs] : run) {
        const auto it = relevant.find(topic);
        if (it == relevant.end()) {
            report.warnings.push_back("topic " + topic + " has no judgements; skipped");
            continue;
        }
        if (it->second.empty()) {
            report.warnings.push_back("topic " + topic + " has no relevant documents; skipped");
            continue;
        }
        const auto ids = doc_ids(docs);
        TopicEvaluation eval;
        eval.topic_id = topic;
        eval.num_relevant = it->second.size();
        eval.num_retrieved = ids.size();
        eval.num_relevant_retrieved = static_cast<std::size_t>(
            std::count_if(ids.begin(), ids.end(), [&](const std::string& id) {
                return it->second.contains(id);
            }));
        eval.average_precision = average_precision(ids, it->second);
        eval.r_precision = r_precision(ids, it->second);
        eval.pr = interpolated_pr_11pt(ids, it->second);
        report.topics.push_back(std::move(eval));
    }
    if (report.topics.empty()) {
        throw InvalidArgument("no run topic has relevance judgements with a relevant document");
    }
    const double n = static_cast<double>(report.topics.size());
    for (const auto& t : report.topics) {
        report.mean_average_precision += t.average_precision;
        report.mean_r_precision += t.r_precision;
        for (std::size_t i = 0; i < t.pr.size(); ++i) {
            report.mean_pr[i] += t.pr[i];
        }
    }
    report.mean_average_precision /= n;
    report.mean_r_precision /= n;
    double sum_points = 0.0;
    for (auto& p : report.mean_pr) {
        p /= n;
        sum_points += p;
    }
    report.mean_interpolated_precision = sum_points / static_cast<double>(report.mean_pr.size());
    return report;
}

std::string format_report(const EvalReport& report)
{
    std::ostringstream out;
    for (const auto& t : report.topics) {
        out << "num_rel\t" << t.topic_id << '\t' << t.num_relevant << '\n';
        out << "num_ret\t" << t.topic_id << '\t' << t.num_retrieved << '\n';
        out << "num_rel_ret\t" << t.topic_id << '\t' << t.num_relevant_retrieved << '\n';
        out << "ap\t" << t.topic_id << '\t' << fixed(t.average_precision) << '\n';
        out << "R-prec\t" << t.topic_id << '\t' << fixed(t.r_precision) << '\n';
    }
    out << "num_q\tall\t" << report.topics.size() << '\n';
    out << "map\tall\t" << fixed(report.mean_average_precision) << '\n';
    out << "R-prec\tall\t" << fixed(report.mean_r_precision) << '\n';
    out << "11pt_avg\tall\t" << fixed(report.mean_interpolated_precision) << '\n';
    for (std::size_t i = 0; i < report.mean_pr.size(); ++i) {
        out << "iprec_at_recall_" << fixed(static_cast<double>(i) / 10.0, 2) << "\tall\t"
            << fixed(report.mean_pr[i]) << '\n';
    }
    return out.str();
}

std::string format_pr_table(const PrCurve& curve)
{
    std::string out;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        out += fixed(static_cast<double>(i) / 10.0, 1) + '\t' + fixed(curve[i]) + '\n';
    }
    return out;
}

std::string format_run(const RankedRun& run, std::string_view tag)
{
    std::string out;
    for (const auto& [topic, docs] : run) {
        for (std::size_t i = 0; i < docs.size(); ++i) {
            out += topic;
            out += " Q0 ";
            out += docs[i].doc_id;
            out += ' ';
            out += std::to_string(i + 1);
            out += ' ';
            out += fixed(docs[i].score, 6);
            out += ' ';
            out += tag;
            out += '\n';
        }
    }
    return out;
}

RankedRun parse_run(std::string_view source)
{
    struct Line {
        long rank;
        ScoredDoc doc;
    };
    std::map<std::string, std::vector<Line>> by_topic;
    std::map<std::string, std::unordered_set<std::string>> seen;
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
        if (parts.size() != 6) {
            throw ParseError("run line " + std::to_string(line_no) + ": expected 6 fields, got " +
                                 std::to_string(parts.size()),
                             ParseError::Location::Line, line_no);
        }
        long rank = 0;
        double score = 0.0;
        const auto& r = parts[3];
        const auto& s = parts[4];
        const auto rank_result = std::from_chars(r.data(), r.data() + r.size(), rank);
        const auto score_result = std::from_chars(s.data(), s.data() + s.size(), score);
        if (rank_result.ec != std::errc{} || rank_result.ptr != r.data() + r.size() ||
            score_result.ec != std::errc{} || score_result.ptr != s.data() + s.size()) {
            throw ParseError("run line " + std::to_string(line_no) + ": bad rank or score",
                             ParseError::Location::Line, line_no);
        }
        if (!seen[parts[0]].insert(parts[2]).second) {
            throw DuplicateIdError(parts[0] + "/" + parts[2]);
        }
        by_topic[parts[0]].push_back(Line{rank, ScoredDoc{parts[2], score}});
    }
    RankedRun run;
    for (auto& [topic, lines] : by_topic) {
        std::stable_sort(lines.begin(), lines.end(),
                         [](const Line& a, const Line& b) { return a.rank < b.rank; });
        auto& docs = run[topic];
        for (auto& l : lines) {
            docs.push_back(std::move(l.doc));
        }
    }
    return run;
}

}  // namespace qexp
