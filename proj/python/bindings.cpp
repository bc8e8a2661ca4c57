#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "qexp/errors.hpp"
#include "qexp/pipeline.hpp"
#include "qexp/porter.hpp"

namespace py = pybind11;
using namespace qexp;

namespace {

RetrievalModel make_model(const std::string& name, const py::kwargs& params)
{
    auto model = model_from_name(name);
    auto get = [&](const char* key, double fallback) {
        return params.contains(key) ? params[key].cast<double>() : fallback;
    };
    if (auto* p = std::get_if<TfIdfParams>(&model)) {
        p->k = get("k", p->k);
    } else if (auto* p = std::get_if<Bm25Params>(&model)) {
        p->k1 = get("k1", p->k1);
        p->b = get("b", p->b);
        p->k3 = get("k3", p->k3);
    } else if (auto* p = std::get_if<Inl2Params>(&model)) {
        p->c = get("c", p->c);
    }
    validate(model);
    return model;
}

Stoplist stoplist_or_default(const std::optional<std::vector<std::string>>& words)
{
    return words ? Stoplist(*words) : default_stoplist();
}

py::list to_pairs(const std::vector<ScoredDoc>& docs)
{
    py::list out;
    for (const auto& d : docs) {
        out.append(py::make_tuple(d.doc_id, d.score));
    }
    return out;
}

RankedRun from_pairs(const std::map<std::string, std::vector<std::pair<std::string, double>>>& run)
{
    RankedRun out;
    for (const auto& [topic, docs] : run) {
        for (const auto& [doc, score] : docs) {
            out[topic].push_back({doc, score});
        }
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Indexing, retrieval, term selection and evaluation for query expansion experiments";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DuplicateIdError>(m, "DuplicateIdError", PyExc_ValueError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    m.def("stem", [](const std::string& word) { return porter_stem(word); }, py::arg("word"));
    m.def(
        "analyze",
        [](const std::string& text, const std::optional<std::vector<std::string>>& stopwords) {
            return analyze(text, stoplist_or_default(stopwords)).tokens;
        },
        py::arg("text"), py::arg("stopwords") = py::none());

    py::class_<RawDocument>(m, "Document")
        .def(py::init<std::string, std::string>(), py::arg("doc_id"), py::arg("text"))
        .def_readwrite("doc_id", &RawDocument::doc_id)
        .def_readwrite("text", &RawDocument::text)
        .def("__repr__", [](const RawDocument& d) { return "Document(" + d.doc_id + ")"; });
    py::class_<Topic>(m, "Topic")
        .def_readonly("topic_id", &Topic::topic_id)
        .def_readonly("title", &Topic::title);
    py::class_<QrelEntry>(m, "Qrel")
        .def(py::init<std::string, std::string, int>(), py::arg("topic_id"), py::arg("doc_id"),
             py::arg("grade"))
        .def_readonly("topic_id", &QrelEntry::topic_id)
        .def_readonly("doc_id", &QrelEntry::doc_id)
        .def_readonly("grade", &QrelEntry::grade);

    m.def("parse_documents", [](const std::string& s) { return parse_trec_documents(s); });
    m.def("parse_topics", [](const std::string& s) { return parse_topics(s); });
    m.def("parse_qrels", [](const std::string& s) { return parse_qrels(s); });
    m.def("load_documents", &load_documents);
    m.def("load_topics", &load_topics);
    m.def("load_qrels", &load_qrels);

    py::class_<InvertedIndex>(m, "Index")
        .def_static(
            "build",
            [](const std::vector<RawDocument>& docs,
               const std::optional<std::vector<std::string>>& stopwords) {
                return InvertedIndex::build(docs, stoplist_or_default(stopwords));
            },
            py::arg("docs"), py::arg("stopwords") = py::none())
        .def_static("load", &InvertedIndex::load)
        .def("save", &InvertedIndex::save)
        .def_property_readonly("num_docs", &InvertedIndex::num_docs)
        .def_property_readonly("num_terms", &InvertedIndex::num_terms)
        .def_property_readonly("total_tokens", &InvertedIndex::total_tokens)
        .def_property_readonly("avg_doc_length", &InvertedIndex::avg_doc_length)
        .def("stats",
             [](const InvertedIndex& index, const std::string& term) -> py::object {
                 const auto id = index.term_id(term);
                 if (!id) {
                     return py::none();
                 }
                 const auto& s = index.term(*id);
                 return py::make_tuple(s.df, s.cf);
             })
        .def("postings",
             [](const InvertedIndex& index, const std::string& term) {
                 std::vector<std::pair<std::string, std::uint32_t>> out;
                 for (const auto& p : index.postings(term)) {
                     out.emplace_back(index.doc(p.doc).doc_id, p.tf);
                 }
                 return out;
             })
        .def(
            "search",
            [](const InvertedIndex& index, const std::string& query, const std::string& model,
               std::size_t k, const std::optional<std::vector<std::string>>& stopwords,
               const py::kwargs& params) {
                const auto analysed = analyze(query, stoplist_or_default(stopwords));
                return to_pairs(search(index, analysed, make_model(model, params), k));
            },
            py::arg("query"), py::arg("model") = "bm25", py::arg("k") = 1000,
            py::arg("stopwords") = py::none());

    py::class_<RelatednessValues>(m, "Relatedness")
        .def_readonly("esa", &RelatednessValues::esa)
        .def_readonly("wnp", &RelatednessValues::wnp)
        .def_readonly("coll", &RelatednessValues::coll)
        .def_readonly("ewc", &RelatednessValues::ewc)
        .def("__repr__", [](const RelatednessValues& v) {
            return "Relatedness(esa=" + std::to_string(v.esa) + ", wnp=" + std::to_string(v.wnp) +
                   ", coll=" + std::to_string(v.coll) + ", ewc=" + std::to_string(v.ewc) + ")";
        });

    py::class_<RelatednessModel, std::shared_ptr<RelatednessModel>>(m, "RelatednessModel")
        .def_static(
            "load",
            [](const std::filesystem::path& concepts, const std::filesystem::path& wordnet,
               const std::filesystem::path& collocations, double lambda_wnp, double lambda_coll,
               double xi) {
                const EwcParams params{lambda_wnp, lambda_coll, xi};
                params.validate();
                return load_relatedness(concepts, wordnet, collocations, default_stoplist(), params);
            },
            py::arg("concepts"), py::arg("wordnet"), py::arg("collocations"),
            py::arg("lambda_wnp") = 5.16, py::arg("lambda_coll") = 48.7, py::arg("xi") = 0.55)
        .def("measure", &RelatednessModel::measure, py::arg("w1"), py::arg("w2"));

    m.def("collocation_index",
          [](std::uint64_t f1, std::uint64_t f2, std::uint64_t f12, std::uint64_t f21, double xi) {
              return collocation_index(CollocationTable::PairCounts{f1, f2, f12, f21}, xi);
          },
          py::arg("f1"), py::arg("f2"), py::arg("f12"), py::arg("f21"), py::arg("xi") = 0.55);
    m.def(
        "ewc",
        [](double esa, double wnp, double coll, double lambda_wnp, double lambda_coll) {
            return ewc_combine(esa, wnp, coll, EwcParams{lambda_wnp, lambda_coll, 0.55});
        },
        py::arg("esa"), py::arg("wnp"), py::arg("coll"), py::arg("lambda_wnp") = 5.16,
        py::arg("lambda_coll") = 48.7);
    m.def("bo1_weight", &bo1_weight, py::arg("pooled_tf"), py::arg("cf"), py::arg("num_docs"));

    m.def(
        "run",
        [](const InvertedIndex& index, const std::vector<Topic>& topics, const std::string& mode,
           const std::string& model, std::optional<std::shared_ptr<RelatednessModel>> relatedness,
           double t1, std::optional<double> t2, std::size_t candidates, std::size_t feedback_docs,
           std::size_t depth) {
            const auto run_mode = run_mode_from_name(mode);
            PipelineOptions options;
            options.model = make_model(model, py::kwargs());
            options.depth = depth;
            options.selection.mode =
                run_mode == RunMode::Esa ? SelectionMode::Esa : SelectionMode::Ewc;
            options.selection.t1 = t1;
            options.selection.t2 = t2.value_or(default_t2(options.selection.mode));
            options.selection.num_candidates = candidates;
            options.selection.num_feedback_docs = feedback_docs;
            if (relatedness && *relatedness) {
                options.selection.ewc = (*relatedness)->params();
            }
            const RelatednessSource* source =
                relatedness && *relatedness ? relatedness->get() : nullptr;
            const auto out = run_topics(index, topics, default_stoplist(), run_mode, options, source);
            py::dict run;
            for (const auto& [topic, docs] : out.run) {
                run[py::str(topic)] = to_pairs(docs);
            }
            py::dict expansions;
            for (const auto& t : out.topics) {
                std::vector<std::string> words;
                for (const auto& c : t.selected) {
                    words.push_back(c.surface);
                }
                expansions[py::str(t.topic_id)] = words;
            }
            return py::make_tuple(run, expansions);
        },
        py::arg("index"), py::arg("topics"), py::arg("mode") = "baseline",
        py::arg("model") = "bm25", py::arg("relatedness") = py::none(), py::arg("t1") = 0.67,
        py::arg("t2") = py::none(), py::arg("candidates") = 10, py::arg("feedback_docs") = 3,
        py::arg("depth") = 1000);

    m.def("average_precision",
          [](const std::vector<std::string>& ranked, const std::set<std::string>& relevant) {
              return average_precision(ranked, relevant);
          });
    m.def("r_precision",
          [](const std::vector<std::string>& ranked, const std::set<std::string>& relevant) {
              return r_precision(ranked, relevant);
          });
    m.def("interpolated_pr",
          [](const std::vector<std::string>& ranked, const std::set<std::string>& relevant) {
              return interpolated_pr_11pt(ranked, relevant);
          });
    m.def(
        "evaluate",
        [](const std::map<std::string, std::vector<std::pair<std::string, double>>>& run,
           const std::vector<QrelEntry>& qrels, int threshold) {
            const auto report = evaluate_run(from_pairs(run), qrels, threshold);
            py::dict out;
            out["map"] = report.mean_average_precision;
            out["r_precision"] = report.mean_r_precision;
            out["pr"] = report.mean_pr;
            py::dict per_topic;
            for (const auto& t : report.topics) {
                per_topic[py::str(t.topic_id)] = py::make_tuple(t.average_precision, t.r_precision);
            }
            out["topics"] = per_topic;
            out["warnings"] = report.warnings;
            return out;
        },
        py::arg("run"), py::arg("qrels"), py::arg("threshold") = 2);
}
