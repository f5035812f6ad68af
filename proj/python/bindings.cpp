#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "errlens/answer.hpp"
#include "errlens/doc_baseline.hpp"
#include "errlens/gestalt.hpp"
#include "errlens/knowledge.hpp"
#include "errlens/pipeline.hpp"
#include "errlens/query.hpp"
#include "errlens/summarizer.hpp"
#include "errlens/text.hpp"
#include "errlens/traceback.hpp"

namespace py = pybind11;
using namespace errlens;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Python error message enhancement engine";

    py::register_exception<NotAnError>(m, "NotAnError", PyExc_ValueError);
    py::register_exception<EmptyQuery>(m, "EmptyQuery", PyExc_ValueError);
    py::register_exception<UnknownKind>(m, "UnknownKind", PyExc_KeyError);
    py::register_exception<MalformedTable>(m, "MalformedTable", PyExc_ValueError);
    py::register_exception<TransportError>(m, "TransportError", PyExc_RuntimeError);

    py::class_<ErrorKind>(m, "ErrorKind")
        .def(py::init(&ErrorKind::from_token), py::arg("token"))
        .def_property_readonly("token", &ErrorKind::token)
        .def_property_readonly("known", [](const ErrorKind& k) { return !k.is(KindTag::Other); })
        .def("__eq__", [](const ErrorKind& a, const ErrorKind& b) { return a == b; })
        .def("__repr__", [](const ErrorKind& k) { return "ErrorKind('" + k.token() + "')"; });

    py::class_<ParsedError>(m, "ParsedError")
        .def_readonly("kind", &ParsedError::kind)
        .def_readonly("description", &ParsedError::description)
        .def_readonly("file", &ParsedError::file)
        .def_readonly("line_number", &ParsedError::line_number)
        .def_readonly("offending_line", &ParsedError::offending_line)
        .def_readonly("caret_column", &ParsedError::caret_column)
        .def_readonly("imports", &ParsedError::imports)
        .def_readonly("source_line", &ParsedError::source_line);

    m.def(
        "parse_traceback",
        [](const std::string& stderr_text, const std::filesystem::path& source_path, const std::string& source_text) {
            return parse_traceback(RawCapture{stderr_text, source_path, source_text});
        },
        py::arg("stderr_text"), py::arg("source_path") = std::filesystem::path(), py::arg("source_text") = "");

    py::class_<KnowledgeTables>(m, "KnowledgeTables")
        .def_property_readonly("keywords", [](const KnowledgeTables& kb) { return kb.catalogue.keywords; })
        .def_property_readonly("builtins", [](const KnowledgeTables& kb) { return kb.catalogue.builtins; });
    m.def("load_tables", &load_tables, py::arg("data_dir"));
    m.def("default_data_dir", &default_data_dir);

    py::class_<SearchQuery>(m, "SearchQuery")
        .def_readonly("text", &SearchQuery::text)
        .def_readonly("tag", &SearchQuery::tag)
        .def_readonly("min_answers", &SearchQuery::min_answers)
        .def_readonly("page_size", &SearchQuery::page_size);

    py::class_<QueryPlan>(m, "QueryPlan")
        .def_readonly("query", &QueryPlan::query)
        .def_property_readonly("mistake",
                               [](const QueryPlan& p) -> std::optional<std::string> {
                                   if (!p.mistake) return std::nullopt;
                                   return std::string(mistake_name(*p.mistake));
                               })
        .def_readonly("typo_correction", &QueryPlan::typo_correction);
    m.def("build_query", &build_query, py::arg("error"), py::arg("kb"));
    m.def("plan_query", &plan_query, py::arg("error"), py::arg("kb"));

    m.def(
        "gestalt_ratio",
        [](const std::string& a, const std::string& b) {
            const SimilarityRatio r = gestalt_ratio(a, b);
            return py::make_tuple(r.numerator, r.denominator);
        },
        py::arg("a"), py::arg("b"), "Ratio as an unreduced (numerator, denominator) pair.");
    m.def("fix_typo", &fix_typo, py::arg("word"), py::arg("kb"), py::arg("cutoff") = kTypoCutoff);

    m.def(
        "luhn_summarize",
        [](const std::vector<std::string>& sentences, int max_sentences) {
            SummaryConfig cfg;
            cfg.max_sentences = max_sentences;
            cfg.min_sentences_to_summarize = std::max(cfg.min_sentences_to_summarize, max_sentences + 1);
            return luhn_summarize(sentences, cfg);
        },
        py::arg("sentences"), py::arg("max_sentences") = 4);
    m.def("clean_format", &clean_format, py::arg("text"));
    m.def("split_sentences", &split_sentences, py::arg("text"));
    m.def(
        "split_answer",
        [](const std::string& body_html) {
            AnswerRecord record;
            record.body_html = body_html;
            const AnswerParts parts = split_answer(record);
            return py::make_tuple(parts.sentences, parts.code_blocks);
        },
        py::arg("body_html"));

    py::class_<EnhancedMessage>(m, "EnhancedMessage")
        .def_readonly("sentences", &EnhancedMessage::sentences)
        .def_readonly("code_example", &EnhancedMessage::code_example)
        .def_readonly("source_answer_id", &EnhancedMessage::source_answer_id)
        .def_readonly("source_url", &EnhancedMessage::source_url)
        .def_readonly("offending_line", &EnhancedMessage::offending_line)
        .def("render", &render_plain);
    m.def("doc_message", &doc_message, py::arg("kind"), py::arg("kb"));

    m.def(
        "enhance",
        [](const std::string& stderr_text, const KnowledgeTables& kb, std::optional<std::filesystem::path> fixtures,
           const std::string& source) {
            PipelineOptions options;
            if (source == "doc") {
                options.source = Source::Documentation;
            } else if (source != "so") {
                throw py::value_error("source must be 'so' or 'doc'");
            }
            std::unique_ptr<Transport> transport;
            if (options.source == Source::StackOverflow) {
                if (fixtures) {
                    transport = std::make_unique<FixtureTransport>(*fixtures);
                } else {
                    transport = std::make_unique<LiveTransport>(LiveTransport::options_from_environment());
                }
            }
            PipelineResult result;
            {
                py::gil_scoped_release release;
                result = enhance(RawCapture{stderr_text, {}, {}}, kb, transport.get(), options);
            }
            return py::make_tuple(result.message, result.note, render_structured(result));
        },
        py::arg("stderr_text"), py::arg("kb"), py::arg("fixtures") = std::nullopt, py::arg("source") = "so",
        "Returns (message or None, note, structured JSON).");
}
