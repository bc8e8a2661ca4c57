#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "qexp/errors.hpp"
#include "qexp/eval.hpp"

using namespace qexp;

namespace {

using Docs = std::vector<std::string>;

std::map<std::pair<std::string, std::string>, double> expected_fixture()
{
    std::ifstream in(std::string(QEXP_FIXTURE_DIR) + "/eval/expected.tsv");
    REQUIRE(in.good());
    std::map<std::pair<std::string, std::string>, double> out;
    std::string metric, topic;
    double value = 0;
    while (in >> metric >> topic >> value) {
        out[{metric, topic}] = value;
    }
    return out;
}

RankedRun ranked(const std::map<std::string, Docs>& docs)
{
    RankedRun run;
    for (const auto& [topic, list] : docs) {
        double score = static_cast<double>(list.size());
        for (const auto& d : list) {
            run[topic].push_back({d, score--});
        }
    }
    return run;
}

}  // namespace

TEST_CASE("metrics: crafted values")
{
    const std::set<std::string> rel = {"a", "c"};
    CHECK(average_precision(Docs{"a", "b", "c"}, rel) == doctest::Approx(0.8333333333).epsilon(1e-9));
    CHECK(std::abs(average_precision(Docs{"a", "b", "c"}, rel) - 5.0 / 6.0) <= 1e-12);
    CHECK(r_precision(Docs{"a", "b", "c"}, rel) == 0.5);
    CHECK(average_precision(Docs{"a", "c", "b"}, rel) == 1.0);
    CHECK(r_precision(Docs{"c", "a"}, rel) == 1.0);
    CHECK(average_precision(Docs{"x", "y"}, rel) == 0.0);
    CHECK(r_precision(Docs{"a"}, rel) == 0.5);  // run shorter than R

    const auto one = interpolated_pr_11pt(Docs{"a", "x"}, {"a"});
    for (double p : one) {
        CHECK(p == 1.0);
    }
    for (double p : interpolated_pr_11pt(Docs{"x"}, {"a"})) {
        CHECK(p == 0.0);
    }
    const auto curve = interpolated_pr_11pt(Docs{"x", "a", "y", "c"}, rel);
    const auto want = oracle::interpolated_pr(Docs{"x", "a", "y", "c"}, rel);
    for (std::size_t i = 0; i < 11; ++i) {
        CHECK(std::abs(curve[i] - want[i]) <= 1e-12);
    }
    CHECK(curve[0] == 0.5);
    CHECK(curve[10] == 0.5);

    CHECK_THROWS_AS(average_precision(Docs{"a"}, {}), InvalidArgument);
    CHECK_THROWS_AS(r_precision(Docs{"a"}, {}), InvalidArgument);
    CHECK_THROWS_AS(interpolated_pr_11pt(Docs{"a"}, {}), InvalidArgument);
}

TEST_CASE("metrics: binarised judgements")
{
    const std::vector<QrelEntry> q = {{"1", "a", 2}, {"1", "b", 1}, {"1", "c", 0}, {"2", "d", 1}};
    const auto strict = binarize_qrels(q);
    CHECK(strict.at("1") == std::set<std::string>{"a"});
    CHECK(strict.at("2").empty());
    const auto lenient = binarize_qrels(q, 1);
    CHECK(lenient.at("1") == std::set<std::string>{"a", "b"});
    CHECK(lenient.at("2") == std::set<std::string>{"d"});
    CHECK_THROWS_AS(binarize_qrels(q, 0), InvalidArgument);
}

TEST_CASE("metrics: bundled fixture against checked-in expectations")
{
    const auto dir = std::string(QEXP_FIXTURE_DIR) + "/eval/";
    const auto run = parse_run(read_file(dir + "run.txt"));
    const auto qrels = parse_qrels(read_file(dir + "qrels.txt"));
    const auto report = evaluate_run(run, qrels);
    const auto expected = expected_fixture();

    REQUIRE(report.topics.size() == 3);
    for (const auto& t : report.topics) {
        CHECK(std::abs(t.average_precision - expected.at({"ap", t.topic_id})) <= 1e-9);
        CHECK(std::abs(t.r_precision - expected.at({"R-prec", t.topic_id})) <= 1e-9);
    }
    CHECK(std::abs(report.mean_average_precision - expected.at({"map", "all"})) <= 1e-9);
    CHECK(std::abs(report.mean_r_precision - expected.at({"R-prec", "all"})) <= 1e-9);
    for (std::size_t i = 0; i < 11; ++i) {
        char key[32];
        std::snprintf(key, sizeof key, "iprec_at_recall_%.1f", static_cast<double>(i) / 10.0);
        CHECK(std::abs(report.mean_pr[i] - expected.at({key, "all"})) <= 1e-9);
    }
    // 104 has no judgements, 105 only a partially relevant one
    REQUIRE(report.warnings.size() == 2);
    CHECK(report.warnings[0].find("104") != std::string::npos);
    CHECK(report.warnings[1].find("105") != std::string::npos);

    // the run file lists topic 103 out of rank order
    CHECK(run.at("103")[0].doc_id == "n");
}

TEST_CASE("metrics: crafted three-topic run equals the second implementation")
{
    const auto run = ranked({{"1", {"a", "b", "c", "d"}}, {"2", {"e", "f"}}, {"3", {"g", "h", "i"}}});
    const std::vector<QrelEntry> qrels = {{"1", "b", 2}, {"1", "d", 2}, {"1", "z", 2},
                                          {"2", "e", 2}, {"3", "i", 2}, {"3", "g", 1}};
    const auto report = evaluate_run(run, qrels);
    const auto rel = binarize_qrels(qrels);
    double map = 0;
    for (const auto& t : report.topics) {
        Docs docs;
        for (const auto& d : run.at(t.topic_id)) {
            docs.push_back(d.doc_id);
        }
        const double ap = oracle::average_precision(docs, rel.at(t.topic_id));
        CHECK(std::abs(t.average_precision - ap) <= 1e-9);
        CHECK(std::abs(t.r_precision - oracle::r_precision(docs, rel.at(t.topic_id))) <= 1e-9);
        map += ap;
    }
    CHECK(std::abs(report.mean_average_precision - map / 3) <= 1e-9);
    CHECK(report.warnings.empty());
}

TEST_CASE("metrics: perfect run")
{
    const auto report = evaluate_run(ranked({{"1", {"a", "b"}}}), {{"1", "a", 2}, {"1", "b", 2}});
    CHECK(report.mean_average_precision == 1.0);
    CHECK(report.mean_r_precision == 1.0);
    CHECK(report.mean_interpolated_precision == 1.0);
}

TEST_CASE("metrics: nothing to evaluate")
{
    CHECK_THROWS_AS(evaluate_run(ranked({{"1", {"a"}}}), {{"2", "a", 2}}), InvalidArgument);
    CHECK_THROWS_AS(evaluate_run({}, {{"2", "a", 2}}), InvalidArgument);
}

TEST_CASE("metrics: random runs agree with the oracle and keep their invariants")
{
    std::mt19937 rng(67);
    for (int round = 0; round < 1000; ++round) {
        const std::size_t pool = 1 + rng() % 40;
        Docs docs;
        for (std::size_t i = 0; i < pool; ++i) {
            docs.push_back("d" + std::to_string(i));
        }
        std::shuffle(docs.begin(), docs.end(), rng);
        std::set<std::string> rel;
        for (std::size_t i = 0, n = 1 + rng() % pool; i < n; ++i) {
            rel.insert("d" + std::to_string(rng() % (pool + 5)));  // some never retrieved
        }
        docs.resize(rng() % (pool + 1));

        const double ap = average_precision(docs, rel);
        const double rp = r_precision(docs, rel);
        const auto curve = interpolated_pr_11pt(docs, rel);
        CHECK(std::abs(ap - oracle::average_precision(docs, rel)) <= 1e-9);
        CHECK(std::abs(rp - oracle::r_precision(docs, rel)) <= 1e-9);
        const auto want = oracle::interpolated_pr(docs, rel);
        for (std::size_t i = 0; i < 11; ++i) {
            CHECK(std::abs(curve[i] - want[i]) <= 1e-9);
            CHECK(curve[i] >= 0.0);
            CHECK(curve[i] <= 1.0);
            if (i > 0) {
                CHECK(curve[i] <= curve[i - 1]);
            }
        }
        CHECK(ap >= 0.0);
        CHECK(ap <= 1.0);
        CHECK(rp >= 0.0);
        CHECK(rp <= 1.0);

        // permuting non-relevant documents after the last relevant hit keeps AP
        std::size_t last = 0;
        for (std::size_t i = 0; i < docs.size(); ++i) {
            if (rel.contains(docs[i])) {
                last = i + 1;
            }
        }
        auto permuted = docs;
        std::shuffle(permuted.begin() + static_cast<std::ptrdiff_t>(last), permuted.end(), rng);
        CHECK(average_precision(permuted, rel) == ap);
    }
}

TEST_CASE("run files: format and parse")
{
    const auto run = ranked({{"2", {"x", "y"}}, {"1", {"z"}}});
    const auto text = format_run(run, "tag");
    CHECK(text == "1 Q0 z 1 1.000000 tag\n2 Q0 x 1 2.000000 tag\n2 Q0 y 2 1.000000 tag\n");
    const auto back = parse_run(text);
    CHECK(back == run);
    CHECK(parse_run("").empty());
    CHECK_THROWS_AS(parse_run("1 Q0 z 1 1.0\n"), ParseError);
    CHECK_THROWS_AS(parse_run("1 Q0 z one 1.0 t\n"), ParseError);
    CHECK_THROWS_AS(parse_run("1 Q0 z 1 1.0 t\n1 Q0 z 2 0.5 t\n"), DuplicateIdError);
}

TEST_CASE("reports: text layout")
{
    const auto report = evaluate_run(ranked({{"1", {"a", "b"}}}), {{"1", "b", 2}});
    const auto text = format_report(report);
    CHECK(text.find("ap\t1\t0.5000\n") != std::string::npos);
    CHECK(text.find("map\tall\t0.5000\n") != std::string::npos);
    CHECK(text.find("iprec_at_recall_1.00\tall\t0.5000\n") != std::string::npos);
    const auto pr = format_pr_table(report.mean_pr);
    CHECK(std::count(pr.begin(), pr.end(), '\n') == 11);
    CHECK(pr.rfind("1.0\t0.5000\n") == pr.size() - 11);
}
