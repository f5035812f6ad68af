#include <gtest/gtest.h>

#include <regex>

#include "errlens/traceback.hpp"
#include "support.hpp"

using namespace errlens;
using errlens::testing::kCorpusDir;
using errlens::testing::read_file;

namespace {

RawCapture corpus_capture(const std::string& script) {
    const auto stem = std::filesystem::path(script).stem().string();
    const auto path = kCorpusDir / "scripts" / script;
    return RawCapture{read_file(kCorpusDir / "captures" / (stem + ".stderr")), path, read_file(path)};
}

}  // namespace

TEST(Traceback, ClassifiesEveryCorpusCapture) {
    const auto manifest = errlens::testing::read_tsv(kCorpusDir / "manifest.tsv");
    ASSERT_GE(manifest.size(), 21u);
    for (const auto& row : manifest) {
        SCOPED_TRACE(row[0]);
        const ParsedError err = parse_traceback(corpus_capture(row[0]));
        EXPECT_EQ(err.kind.token(), row[1]);
        EXPECT_TRUE(std::regex_match(err.description, std::regex(row[2]))) << err.description;
        EXPECT_GT(err.line_number, 0u);
        EXPECT_FALSE(err.offending_line.empty());
    }
}

TEST(Traceback, RuntimeErrorFields) {
    const ParsedError err = parse_traceback(corpus_capture("type_list_not_callable.py"));
    EXPECT_TRUE(err.kind.is(KindTag::TypeError));
    EXPECT_EQ(err.description, "'list' object is not callable");
    EXPECT_EQ(err.offending_line, "new_list = list(dict.fromkeys(list))");
    EXPECT_EQ(err.line_number, 2u);
    EXPECT_EQ(err.source_line, err.offending_line);
    EXPECT_FALSE(err.caret_column.has_value());
}

TEST(Traceback, SyntaxErrorCaretIsRelativeToTheStrippedLine) {
    const ParsedError err = parse_traceback(corpus_capture("syntax_invalid_syntax.py"));
    EXPECT_EQ(err.offending_line, "whle x < 3:");
    ASSERT_TRUE(err.caret_column.has_value());
    EXPECT_EQ(*err.caret_column, 5u);
}

TEST(Traceback, DeepestFrameInTheUsersScriptWins) {
    const ParsedError err = parse_traceback(corpus_capture("nested_frames.py"));
    EXPECT_EQ(err.line_number, 6u);
    EXPECT_EQ(err.offending_line, "return [int(v) for v in values]");
}

TEST(Traceback, FrameOutsideTheScriptIsSkipped) {
    const std::string text =
        "Traceback (most recent call last):\n"
        "  File \"/tmp/app.py\", line 4, in <module>\n"
        "    json.loads(raw)\n"
        "  File \"/usr/lib/python3.10/json/__init__.py\", line 346, in loads\n"
        "    return _default_decoder.decode(s)\n"
        "json.decoder.JSONDecodeError: Expecting value: line 1 column 1 (char 0)\n";
    const ParsedError err = parse_traceback(RawCapture{text, "/tmp/app.py", ""});
    EXPECT_EQ(err.kind.token(), "json.decoder.JSONDecodeError");
    EXPECT_EQ(err.line_number, 4u);
    EXPECT_EQ(err.offending_line, "json.loads(raw)");
}

TEST(Traceback, ChainedTracebacksReportTheLastException) {
    const ParsedError err = parse_traceback(corpus_capture("chained_exception.py"));
    EXPECT_TRUE(err.kind.is(KindTag::ValueError));
    EXPECT_EQ(err.line_number, 5u);
}

TEST(Traceback, KindWithoutDescription) {
    const ParsedError err = parse_traceback(RawCapture{"Traceback (most recent call last):\n"
                                                       "  File \"x.py\", line 1, in <module>\n"
                                                       "    raise KeyboardInterrupt\n"
                                                       "KeyboardInterrupt\n",
                                                       "x.py", ""});
    EXPECT_EQ(err.kind.token(), "KeyboardInterrupt");
    EXPECT_EQ(err.description, "");
}

TEST(Traceback, OutputWithoutAnErrorIsRejected) {
    EXPECT_THROW(parse_traceback(RawCapture{"", {}, ""}), NotAnError);
    EXPECT_THROW(parse_traceback(RawCapture{"hello world\n42\n", {}, ""}), NotAnError);
}

TEST(Traceback, WindowsLineEndings) {
    const ParsedError err = parse_traceback(RawCapture{"Traceback (most recent call last):\r\n"
                                                       "  File \"x.py\", line 2, in <module>\r\n"
                                                       "    1/0\r\n"
                                                       "ZeroDivisionError: division by zero\r\n",
                                                       "x.py", ""});
    EXPECT_EQ(err.description, "division by zero");
    EXPECT_EQ(err.offending_line, "1/0");
}

// Expected lists were tokenized by hand from the source below.
TEST(Imports, HandTokenizedOracle) {
    const std::string source =
        "import os\n"
        "import sys, json as j\n"
        "from collections import defaultdict\n"
        "from os.path import join  # trailing comment\n"
        "import numpy.linalg as la; import re\n"
        "# import commented_out\n"
        "x = 'import not_a_module'\n"
        "from . import sibling\n"
        "from .pkg import thing\n"
        "    import nested\n"
        "important = 1\n"
        "import os\n";
    const std::vector<std::string> expected = {"os", "sys", "json", "collections", "os.path",
                                               "numpy.linalg", "re", "pkg", "nested"};
    EXPECT_EQ(extract_imports(source), expected);
}

TEST(QuotedWords, InOrder) {
    EXPECT_EQ(extract_quoted_words("'module' object has no attribute 'Number'"),
              (std::vector<std::string>{"module", "Number"}));
    EXPECT_TRUE(extract_quoted_words("division by zero").empty());
    EXPECT_EQ(extract_quoted_words("name 'x' and 'unclosed"), std::vector<std::string>{"x"});
}
