#include "doctest.h"
#include "oracles.hpp"
#include "qexp/errors.hpp"
#include "qexp/pipeline.hpp"

using namespace qexp;

namespace {

const std::filesystem::path kSynthetic = std::filesystem::path(QEXP_DATA_DIR) / "synthetic";

struct Synthetic {
    Stoplist stoplist = default_stoplist();
    InvertedIndex index;
    std::vector<Topic> topics;
    std::vector<QrelEntry> qrels;
    std::shared_ptr<RelatednessModel> relatedness;

    Synthetic()
    {
        index = InvertedIndex::build(load_documents(kSynthetic / "corpus.trec"), stoplist);
        topics = load_topics(kSynthetic / "topics.trec");
        qrels = load_qrels(kSynthetic / "qrels.txt");
        relatedness = load_relatedness(kSynthetic / "concepts.trec", kSynthetic / "wordnet",
                                       kSynthetic / "corpus.trec", stoplist, EwcParams{});
    }
};

const Synthetic& synthetic()
{
    static const Synthetic s;
    return s;
}

}  // namespace

TEST_CASE("pipeline: run mode names")
{
    for (const auto mode : {RunMode::Baseline, RunMode::Esa, RunMode::Ewc, RunMode::All}) {
        CHECK(run_mode_from_name(run_mode_name(mode)) == mode);
    }
    CHECK(run_mode_from_name("EWC") == RunMode::Ewc);
    CHECK_THROWS_AS(run_mode_from_name("rocchio"), InvalidArgument);
}

TEST_CASE("pipeline: baseline equals direct search")
{
    const auto& s = synthetic();
    const PipelineOptions options{Bm25Params{}, 50, {}};
    const auto out = run_topics(s.index, s.topics, s.stoplist, RunMode::Baseline, options, nullptr);
    REQUIRE(out.topics.size() == s.topics.size());
    for (std::size_t i = 0; i < s.topics.size(); ++i) {
        const auto& topic = s.topics[i];
        CHECK(out.topics[i].topic_id == topic.topic_id);
        CHECK(out.topics[i].candidates.empty());
        CHECK(out.run.at(topic.topic_id) ==
              search(s.index, analyze(topic.title, s.stoplist), Bm25Params{}, 50));
    }
    CHECK(out.trace() == trace_header() + "\n");
}

TEST_CASE("pipeline: selection that admits nothing reproduces the baseline")
{
    const auto& s = synthetic();
    PipelineOptions options{TfIdfParams{}, 1000, {}};
    options.selection.t1 = 1.0;  // a mean of pair scores is never above 1
    const auto base = run_topics(s.index, s.topics, s.stoplist, RunMode::Baseline, options, nullptr);
    const auto ewc = run_topics(s.index, s.topics, s.stoplist, RunMode::Ewc, options,
                                s.relatedness.get());
    CHECK(ewc.run == base.run);
    for (const auto& t : ewc.topics) {
        CHECK(t.selected.empty());
        CHECK(t.decisions.size() == t.candidates.size());
        CHECK(t.expanded == t.query);
    }
}

TEST_CASE("pipeline: expansion modes on the synthetic topics")
{
    const auto& s = synthetic();
    const PipelineOptions options{Bm25Params{}, 1000, {}};
    const auto ewc =
        run_topics(s.index, s.topics, s.stoplist, RunMode::Ewc, options, s.relatedness.get());
    const auto all = run_topics(s.index, s.topics, s.stoplist, RunMode::All, options, nullptr);
    for (std::size_t i = 0; i < s.topics.size(); ++i) {
        const auto& t = ewc.topics[i];
        CHECK(t.candidates.size() == 10);
        CHECK(t.selected.size() <= t.candidates.size());
        CHECK(t.expanded.size() == t.query.size() + t.selected.size());
        CHECK(all.topics[i].selected == all.topics[i].candidates);
        CHECK(all.topics[i].decisions.empty());
    }
    // the first topic is "Ocean pollution": the synonym and the hyponym are picked
    const auto& first = ewc.topics[0];
    std::vector<std::string> selected;
    for (const auto& c : first.selected) {
        selected.push_back(c.surface);
    }
    std::sort(selected.begin(), selected.end());
    CHECK(selected == std::vector<std::string>{"sea", "smog"});

    // trace: header plus one line per decision
    std::size_t decisions = 0;
    for (const auto& t : ewc.topics) {
        decisions += t.decisions.size();
    }
    const auto trace = ewc.trace();
    CHECK(static_cast<std::size_t>(std::count(trace.begin(), trace.end(), '\n')) == decisions + 1);
}

TEST_CASE("pipeline: repeated runs are identical")
{
    const auto& s = synthetic();
    const PipelineOptions options{Inl2Params{}, 1000, {}};
    const auto a = run_topics(s.index, s.topics, s.stoplist, RunMode::Ewc, options, s.relatedness.get());
    const auto b = run_topics(s.index, s.topics, s.stoplist, RunMode::Ewc, options, s.relatedness.get());
    CHECK(format_run(a.run, "t") == format_run(b.run, "t"));
    CHECK(a.trace() == b.trace());
}

TEST_CASE("pipeline: argument checks")
{
    const auto& s = synthetic();
    PipelineOptions options;
    CHECK_THROWS_AS(run_topics(s.index, s.topics, s.stoplist, RunMode::Ewc, options, nullptr),
                    InvalidArgument);
    CHECK_THROWS_AS(run_topics(s.index, s.topics, s.stoplist, RunMode::Esa, options, nullptr),
                    InvalidArgument);
    options.depth = 0;
    CHECK_THROWS_AS(run_topics(s.index, s.topics, s.stoplist, RunMode::Baseline, options, nullptr),
                    InvalidArgument);
    options.depth = 10;
    options.selection.num_candidates = 0;
    CHECK_THROWS_AS(run_topics(s.index, s.topics, s.stoplist, RunMode::All, options, nullptr),
                    InvalidArgument);
}

TEST_CASE("pipeline: topics whose title is all stopwords retrieve nothing")
{
    const auto& s = synthetic();
    const std::vector<Topic> topics = {{"0099", "the of and"}};
    const auto out = run_topics(s.index, topics, s.stoplist, RunMode::Ewc, PipelineOptions{},
                                s.relatedness.get());
    CHECK(out.run.at("0099").empty());
    CHECK(out.topics[0].candidates.empty());
}

TEST_CASE("pipeline: cached relatedness returns the inner values")
{
    const auto& s = synthetic();
    const CachedRelatedness cached(*s.relatedness);
    for (int round = 0; round < 2; ++round) {
        const auto v = cached.measure("ocean", "sea");
        const auto w = s.relatedness->measure("ocean", "sea");
        CHECK(v.esa == w.esa);
        CHECK(v.wnp == w.wnp);
        CHECK(v.coll == w.coll);
        CHECK(v.ewc == w.ewc);
    }
    CHECK(cached.measure("sea", "ocean").coll == s.relatedness->measure("sea", "ocean").coll);
}

TEST_CASE("pipeline: loaders prefix the file name to parse errors")
{
    const auto dir = oracle::scratch_dir("loaders");
    {
        std::ofstream out(dir / "bad.qrels");
        out << "1 0 a x\n";
    }
    try {
        (void)load_qrels(dir / "bad.qrels");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("bad.qrels") != std::string::npos);
        CHECK(e.position() == 1);
    }
    CHECK_THROWS_AS(load_documents(dir / "missing.trec"), IoError);
}
