#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qexp/errors.hpp"
#include "qexp/expansion.hpp"

using namespace qexp;

namespace {

const Stoplist kNoStop{};

ExpansionCandidate cand(const std::string& word)
{
    return {word, word, 1.0};
}

std::vector<std::string> stems(const std::vector<ExpansionCandidate>& cs)
{
    std::vector<std::string> out;
    for (const auto& c : cs) {
        out.push_back(c.stem);
    }
    return out;
}

/// Random measure table over candidate/query words with a fair share of
/// zero components and values near the thresholds.
oracle::MeasureTable random_table(std::mt19937& rng, const std::vector<std::string>& cands,
                                  const std::vector<std::string>& query, const EwcParams& params)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> small(0.0, 0.2);
    oracle::MeasureTable table;
    table.params = params;
    for (const auto& c : cands) {
        for (const auto& q : query) {
            if (unit(rng) < 0.1) {
                continue;  // unknown pair: all zeros
            }
            const double esa = small(rng);
            const double wnp = unit(rng) < 0.3 ? 0.0 : unit(rng);
            const double coll = unit(rng) < 0.3 ? 0.0 : small(rng) / 10;
            table.set(c, q, esa, wnp, coll);
        }
    }
    return table;
}

}  // namespace

TEST_CASE("bo1: hand substitution on a two-document pool")
{
    // N = 4; pool = A, B; "arm" tf 3 in the pool, cf 4
    const auto index = InvertedIndex::build({{"A", "robot arm arm hand"},
                                             {"B", "robot arm leg"},
                                             {"C", "arm eye"},
                                             {"D", "foot"}},
                                            kNoStop);
    const std::vector<ScoredDoc> first_pass = {{"A", 2.0}, {"B", 1.0}, {"C", 0.5}};
    SelectionConfig cfg;
    cfg.num_feedback_docs = 2;
    const auto query = analyze("robot", kNoStop);
    const auto cs = extract_candidates(index, first_pass, query, cfg);

    auto bo1 = [](double tfx, double cf, double n) {
        const double pn = cf / n;
        return tfx * std::log2((1 + pn) / pn) + std::log2(1 + pn);
    };
    std::map<std::string, double> got;
    for (const auto& c : cs) {
        got[c.stem] = c.dfr_weight;
    }
    CHECK(got.size() == 3);  // arm, hand, leg; robot excluded, eye/foot not pooled
    CHECK(got.at("arm") == doctest::Approx(bo1(3, 4, 4)).epsilon(1e-12));
    CHECK(got.at("hand") == doctest::Approx(bo1(1, 1, 4)).epsilon(1e-12));
    CHECK(got.at("leg") == doctest::Approx(bo1(1, 1, 4)).epsilon(1e-12));
    CHECK(bo1_weight(3, 4, 4) == doctest::Approx(bo1(3, 4, 4)).epsilon(1e-15));
    CHECK(stems(cs) == std::vector<std::string>{"arm", "hand", "leg"});
}

TEST_CASE("candidates: limits, ordering and surfaces")
{
    std::vector<RawDocument> docs;
    std::string text = "robot";
    for (int i = 0; i < 15; ++i) {
        text += " w" + std::to_string(i);
    }
    docs.push_back({"A", text + " computers computers computing"});
    docs.push_back({"B", "robot computed"});
    docs.push_back({"C", "unrelated"});
    docs.push_back({"D", "robot other"});
    const auto index = InvertedIndex::build(docs, kNoStop);
    const auto query = analyze("robot", kNoStop);
    const auto first_pass = search(index, query, TfIdfParams{}, 10);
    REQUIRE(first_pass.size() == 3);

    SelectionConfig cfg;
    const auto cs = extract_candidates(index, first_pass, query, cfg);
    CHECK(cs.size() == 10);
    for (std::size_t i = 1; i < cs.size(); ++i) {
        CHECK(cs[i - 1].dfr_weight >= cs[i].dfr_weight);
        CHECK(std::isfinite(cs[i].dfr_weight));
    }
    CHECK(cs[0].stem == "comput");
    CHECK(cs[0].surface == "computers");
    for (const auto& c : cs) {
        CHECK(c.stem != "robot");
        CHECK(c.stem != "unrel");
    }

    cfg.num_feedback_docs = 50;  // more than retrieved: use what there is
    CHECK_NOTHROW(extract_candidates(index, first_pass, query, cfg));
    CHECK(extract_candidates(index, {}, query, cfg).empty());
}

TEST_CASE("pair score: gates and thresholds")
{
    SelectionConfig cfg;
    const EwcParams p;
    auto values = [&](double esa, double wnp, double coll) {
        return RelatednessValues{esa, wnp, coll, ewc_combine(esa, wnp, coll, p)};
    };
    CHECK(pair_score(values(0.9, 0.0, 0.5), cfg) == 0);
    CHECK(pair_score(values(0.9, 0.5, 0.0), cfg) == 0);
    CHECK(pair_score(values(0.1, 0.5, 0.01), cfg) == 1);  // ewc ~ 0.532 > 0.12
    CHECK(pair_score(values(0.01, 0.1, 0.001), cfg) == 0);

    cfg.mode = SelectionMode::Esa;
    cfg.t2 = 0.08;
    CHECK(pair_score(values(0.05, 1.0, 1.0), cfg) == 0);
    CHECK(pair_score(values(0.09, 0.0, 0.0), cfg) == 1);
    CHECK(pair_score(values(0.08, 0.0, 0.0), cfg) == 0);  // strict
}

TEST_CASE("term weight: mean over the N query words against t1")
{
    oracle::MeasureTable table;
    table.set("human", "robot", 0.1, 0.5, 0.01);
    table.set("human", "arm", 0.1, 0.5, 0.01);
    SelectionConfig cfg;  // t1 = 0.67, t2 = 0.12

    CHECK(term_weight(table, cfg, "human", {"robot"}) == 1);
    CHECK(term_weight(table, cfg, "human", {"robot", "arm"}) == 1);
    // 2 of 3 pass: 2/3 = 0.6667 is not above 0.67
    CHECK(term_weight(table, cfg, "human", {"robot", "arm", "leg"}) == 0);
    cfg.t1 = 0.66;
    CHECK(term_weight(table, cfg, "human", {"robot", "arm", "leg"}) == 1);
    CHECK(term_weight(table, cfg, "nothing", {"robot", "arm"}) == 0);
    CHECK_THROWS_AS(term_weight(table, cfg, "human", {}), InvalidArgument);
}

TEST_CASE("selection: decision record")
{
    oracle::MeasureTable table;
    table.set("human", "robot", 0.1, 0.5, 0.01);
    table.set("human", "arm", 0.1, 0.0, 0.01);
    const auto d = decide_term(table, SelectionConfig{}, cand("human"), {"robot", "arm"});
    CHECK(d.pair_scores == std::vector<int>{1, 0});
    CHECK(d.mean_score == 0.5);
    CHECK(d.weight == 0);
    CHECK(d.values.size() == 2);
    CHECK(std::abs(d.values[0].ewc - 0.1 * 3.58 * 1.487) <= 1e-12);

    const auto line = format_trace_line("0001", d, false);
    CHECK(line.find("0001\thuman\thuman\t1.000000\t0.100000,0.100000\t0.500000,0.000000") == 0);
    CHECK(line.find("\t1,0\t0\t0") != std::string::npos);
    const auto header = trace_header();
    CHECK(std::count(header.begin(), header.end(), '\t') == std::count(line.begin(), line.end(), '\t'));
}

TEST_CASE("selection: equals direct rule evaluation on random fixtures")
{
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int round = 0; round < 500; ++round) {
        std::vector<std::string> cands;
        std::vector<ExpansionCandidate> candidates;
        for (std::size_t i = 0, n = rng() % 11; i < n; ++i) {
            cands.push_back("c" + std::to_string(i));
            candidates.push_back(cand(cands.back()));
        }
        std::vector<std::string> query;
        for (std::size_t i = 0, n = 1 + rng() % 5; i < n; ++i) {
            query.push_back("q" + std::to_string(i));
        }
        SelectionConfig cfg;
        cfg.mode = unit(rng) < 0.5 ? SelectionMode::Ewc : SelectionMode::Esa;
        cfg.t1 = std::vector<double>{0.0, 0.3, 0.5, 0.65, 0.67, 0.69, 0.75, 0.99}[rng() % 8];
        cfg.t2 = unit(rng) * 0.3;
        const auto table = random_table(rng, cands, query, cfg.ewc);
        CHECK(stems(select_terms(candidates, query, table, cfg)) ==
              oracle::select(cands, query, table, cfg));
    }
}

TEST_CASE("selection: subset and monotone in t1 and t2")
{
    std::mt19937 rng(61);
    for (int round = 0; round < 100; ++round) {
        std::vector<std::string> cands;
        std::vector<ExpansionCandidate> candidates;
        for (int i = 0; i < 10; ++i) {
            cands.push_back("c" + std::to_string(i));
            candidates.push_back(cand(cands.back()));
        }
        const std::vector<std::string> query = {"q0", "q1", "q2"};
        SelectionConfig cfg;
        const auto table = random_table(rng, cands, query, cfg.ewc);
        std::size_t previous = SIZE_MAX;
        for (double t2 = 0.0; t2 <= 0.3; t2 += 0.01) {
            cfg.t2 = t2;
            const auto selected = select_terms(candidates, query, table, cfg);
            CHECK(selected.size() <= previous);
            CHECK(selected.size() <= cfg.num_candidates);
            previous = selected.size();
        }
        cfg.t2 = 0.12;
        previous = SIZE_MAX;
        for (double t1 = 0.0; t1 < 1.0; t1 += 0.05) {
            cfg.t1 = t1;
            const auto selected = select_terms(candidates, query, table, cfg);
            CHECK(selected.size() <= previous);
            previous = selected.size();
        }
    }
}

TEST_CASE("selection: out-of-vocabulary words never pass the gates")
{
    auto space = std::make_shared<const ConceptSpace>(
        ConceptSpace::build({{"C1", "robot human"}, {"C2", "robot"}, {"C3", "x"}}, kNoStop));
    auto graph = std::make_shared<const TaxonomyGraph>();
    auto table = std::make_shared<const CollocationTable>(
        CollocationTable::build({{"A", "human robot"}}, kNoStop));
    const RelatednessModel model(space, graph, table);
    SelectionConfig cfg;
    cfg.t1 = 0.0;
    cfg.t2 = 0.0;
    CHECK(term_weight(model, cfg, "human", {"robot"}) == 0);  // nothing in WordNet
    cfg.mode = SelectionMode::Esa;
    CHECK(term_weight(model, cfg, "human", {"robot"}) == 1);
}

TEST_CASE("selection: config validation")
{
    SelectionConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.t1 = 1.5;
    CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
    cfg = {};
    cfg.t2 = -0.1;
    CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
    cfg = {};
    cfg.num_candidates = 0;
    CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
    cfg = {};
    cfg.num_feedback_docs = 0;
    CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
    CHECK(default_t2(SelectionMode::Ewc) == 0.12);
    CHECK(default_t2(SelectionMode::Esa) == 0.08);
}

TEST_CASE("expand_query")
{
    const auto query = analyze("robot", kNoStop);
    CHECK(expand_query(query, {}) == query);
    const auto expanded = expand_query(query, {{"human", "humans", 2.0}, {"robot", "robots", 1.0}});
    CHECK(expanded.tokens == std::vector<std::string>{"robot", "human"});
    CHECK(expanded.surfaces == std::vector<std::string>{"robot", "humans"});
}

TEST_CASE("query_words keeps the first surface of each stem")
{
    const auto q = analyze("Computers computing robot", kNoStop);
    CHECK(query_words(q) == std::vector<std::string>{"computers", "robot"});
}
