#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "qexp/errors.hpp"

using namespace qexp;
using namespace qexp::cli;

namespace {

const std::filesystem::path kSynthetic = std::filesystem::path(QEXP_DATA_DIR) / "synthetic";

PipelineConfig synthetic_config(const std::string& name)
{
    PipelineConfig c;
    c.corpus = kSynthetic / "corpus.trec";
    c.topics = kSynthetic / "topics.trec";
    c.qrels = kSynthetic / "qrels.txt";
    c.concepts = kSynthetic / "concepts.trec";
    c.wordnet = kSynthetic / "wordnet";
    c.output = oracle::scratch_dir("cli-" + name);
    c.model = "bm25";
    return c;
}

std::map<std::string, std::string> key_values(const std::string& text)
{
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string key, value;
    while (in >> key >> value) {
        out[key] = value;
    }
    return out;
}

}  // namespace

TEST_CASE("cli: index reports statistics and refuses to overwrite")
{
    const auto config = synthetic_config("index");
    std::ostringstream out, err;
    REQUIRE(cmd_index(config, out, err) == 0);
    const auto stats = key_values(out.str());
    const auto index =
        InvertedIndex::build(load_documents(config.corpus), default_stoplist());
    CHECK(stats.at("num_docs") == std::to_string(index.num_docs()));
    CHECK(stats.at("num_terms") == std::to_string(index.num_terms()));
    CHECK(stats.at("total_tokens") == std::to_string(index.total_tokens()));
    CHECK(InvertedIndex::load(config.index_path()) == index);

    std::ostringstream out2, err2;
    CHECK(cmd_index(config, out2, err2) == 1);
    CHECK(err2.str().find("--force") != std::string::npos);

    auto forced = config;
    forced.force = true;
    CHECK(cmd_index(forced, out2, err2) == 0);
}

TEST_CASE("cli: missing inputs")
{
    auto config = synthetic_config("missing");
    config.corpus = config.output / "nope.trec";
    std::ostringstream out, err;
    CHECK(cmd_index(config, out, err) == 1);
    CHECK(err.str().find("nope.trec") != std::string::npos);

    config = synthetic_config("missing");
    CHECK(cmd_run(config, RunMode::Baseline, out, err) == 1);  // no index yet
    CHECK(err.str().find("qexp index") != std::string::npos);
}

TEST_CASE("cli: run writes the run file and trace; eval scores it")
{
    const auto config = synthetic_config("run");
    std::ostringstream out, err;
    REQUIRE(cmd_index(config, out, err) == 0);

    std::ostringstream run_out;
    REQUIRE(cmd_run(config, RunMode::Ewc, run_out, err) == 0);
    const auto summary = key_values(run_out.str());
    CHECK(summary.at("mode") == "ewc");
    CHECK(summary.at("topics") == "10");
    const auto run_text = read_file(config.output / "ewc.run");
    CHECK(run_text.rfind("0001 Q0 ", 0) == 0);
    CHECK(run_text.find(" qexp-ewc-bm25\n") != std::string::npos);
    CHECK(read_file(config.output / "ewc.trace.tsv").rfind(trace_header(), 0) == 0);

    std::ostringstream eval_out, eval_err;
    const auto pr = config.output / "ewc.pr.tsv";
    REQUIRE(cmd_eval(config.output / "ewc.run", config, pr, eval_out, eval_err) == 0);
    CHECK(eval_err.str().empty());
    const auto report = evaluate_run(parse_run(run_text), load_qrels(config.qrels));
    CHECK(eval_out.str() == format_report(report));
    CHECK(read_file(pr) == format_pr_table(report.mean_pr));
}

TEST_CASE("cli: eval on the bundled fixture")
{
    auto config = synthetic_config("eval");
    config.qrels = std::filesystem::path(QEXP_FIXTURE_DIR) / "eval" / "qrels.txt";
    std::ostringstream out, err;
    CHECK(cmd_eval(std::filesystem::path(QEXP_FIXTURE_DIR) / "eval" / "run.txt", config,
                   std::nullopt, out, err) == 0);
    CHECK(out.str().find("map\tall\t0.4722\n") != std::string::npos);
    CHECK(out.str().find("ap\t101\t0.8333\n") != std::string::npos);
    CHECK(err.str().find("104") != std::string::npos);
    CHECK(err.str().find("105") != std::string::npos);

    config.warnings_as_errors = true;
    std::ostringstream out2, err2;
    CHECK(cmd_eval(std::filesystem::path(QEXP_FIXTURE_DIR) / "eval" / "run.txt", config,
                   std::nullopt, out2, err2) == 2);
}

TEST_CASE("cli: relatedness")
{
    const auto config = synthetic_config("relatedness");
    std::ostringstream out, err;
    REQUIRE(cmd_relatedness(config, "ocean", "ocean", out, err) == 0);
    CHECK(key_values(out.str()).at("esa") == "1.000000");

    std::ostringstream oov;
    REQUIRE(cmd_relatedness(config, "griffin", "unicorn", oov, err) == 0);
    CHECK(oov.str() == "esa\t0.000000\nwnp\t0.000000\ncoll\t0.000000\newc\t0.000000\n");

    // chained oracle: every component recomputed from the loaded sources
    const auto model = load_relatedness(config.concepts, config.wordnet, config.corpus,
                                        default_stoplist(), EwcParams{});
    const auto v = model->measure("sea", "pollution");
    std::ostringstream pair;
    REQUIRE(cmd_relatedness(config, "sea", "pollution", pair, err) == 0);
    const auto kv = key_values(pair.str());
    CHECK(std::stod(kv.at("wnp")) == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
    CHECK(std::stod(kv.at("ewc")) ==
          doctest::Approx(v.esa * (1 + 5.16 * v.wnp) * (1 + 48.7 * v.coll)).epsilon(1e-6));

    auto missing = config;
    missing.wordnet.clear();
    std::ostringstream e1;
    CHECK(cmd_relatedness(missing, "a", "b", out, e1) == 1);
    CHECK(e1.str().find("WordNet") != std::string::npos);
    missing = config;
    missing.concepts = config.output / "none.trec";
    std::ostringstream e2;
    CHECK(cmd_relatedness(missing, "a", "b", out, e2) == 1);
    CHECK(e2.str().find("concept corpus") != std::string::npos);
}

TEST_CASE("cli: sweep emits a threshold grid")
{
    const auto config = synthetic_config("sweep");
    std::ostringstream out, err;
    REQUIRE(cmd_index(config, out, err) == 0);
    std::ostringstream grid;
    REQUIRE(cmd_sweep(config, RunMode::Ewc, {0.5, 0.67}, {0.08, 0.12}, {"tfidf", "bm25"}, grid,
                      err) == 0);
    const auto text = grid.str();
    CHECK(text.rfind("t1\tt2\ttfidf_map\ttfidf_rprec\tbm25_map\tbm25_rprec\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);
    CHECK(text.find("\nsystem\tsystem\t") != std::string::npos);
    CHECK(text.find("\n0.67\t0.12\t") != std::string::npos);

    CHECK(cmd_sweep(config, RunMode::Baseline, {0.5}, {0.1}, {"bm25"}, grid, err) == 1);
    CHECK(cmd_sweep(config, RunMode::Ewc, {}, {0.1}, {"bm25"}, grid, err) == 1);
    CHECK(cmd_sweep(config, RunMode::Ewc, {0.5}, {0.1}, {"lm"}, grid, err) == 1);
}

TEST_CASE("cli: configuration helpers")
{
    PipelineConfig c;
    CHECK(c.selection(RunMode::Ewc).t2 == 0.12);
    CHECK(c.selection(RunMode::Esa).t2 == 0.08);
    CHECK(c.selection(RunMode::Esa).mode == SelectionMode::Esa);
    c.t2 = 0.2;
    CHECK(c.selection(RunMode::Esa).t2 == 0.2);
    c.bm25.k1 = 2.0;
    CHECK(std::get<Bm25Params>(c.retrieval_model("bm25")).k1 == 2.0);
    CHECK(c.index_path() == std::filesystem::path(".") / "index.bin");
    c.corpus = "x.trec";
    CHECK(c.collocation_path() == "x.trec");
    c.bm25.b = 3;
    CHECK_THROWS_AS((void)c.retrieval_model("bm25"), InvalidArgument);
}
