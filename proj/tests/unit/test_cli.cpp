#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "errlens/app.hpp"
#include "errlens/process.hpp"
#include "support.hpp"

using namespace errlens;
using errlens::testing::kCliPath;
using errlens::testing::kCorpusDir;
using errlens::testing::kSoFixtures;

namespace {

std::filesystem::path script(const std::string& stem) { return kCorpusDir / "scripts" / (stem + ".py"); }

CliOptions run_options(const std::filesystem::path& path) {
    CliOptions opts;
    opts.script = path;
    opts.fixtures = kSoFixtures;
    return opts;
}

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run_in_process(const CliOptions& opts) {
    std::ostringstream out, err;
    const int status = run_file(opts, out, err);
    return {status, out.str(), err.str()};
}

std::filesystem::path write_script(const std::string& name, const std::string& body) {
    const auto dir = errlens::testing::scratch_dir("scripts-" + name);
    const auto path = dir / (name + ".py");
    std::ofstream(path) << body;
    return path;
}

std::string plain_python_stderr(const std::filesystem::path& path) {
    return run_child({resolve_interpreter(std::nullopt).string(), path.string()}, {}, {}).stderr_text;
}

}  // namespace

TEST(Cli, ElseIfRunAppendsTheEnhancedBlock) {
    const Outcome o = run_in_process(run_options(script("syntax_else_if")));
    const std::string original = plain_python_stderr(script("syntax_else_if"));
    EXPECT_EQ(o.status, 1);
    ASSERT_TRUE(o.err.starts_with(original));
    const std::string rest = o.err.substr(original.size());
    ASSERT_TRUE(rest.starts_with("---- enhanced ----\n")) << rest;
    const auto elif = rest.find("\"else if\" is spelled \"elif\"");
    const auto code = rest.find("    elif a == '2':");
    ASSERT_NE(elif, std::string::npos);
    ASSERT_NE(code, std::string::npos);
    EXPECT_LT(elif, code);
    EXPECT_TRUE(rest.ends_with("source: https://stackoverflow.com/a/2395167\n"));
}

TEST(Cli, CleanScriptPassesThrough) {
    const Outcome o = run_in_process(run_options(write_script("clean", "print(42)\n")));
    EXPECT_EQ(o.status, 0);
    EXPECT_EQ(o.out, "42\n");
    EXPECT_EQ(o.err, "");
}

TEST(Cli, ExitStatusIsTheChilds) {
    EXPECT_EQ(run_in_process(run_options(write_script("exit3", "import sys\nsys.exit(3)\n"))).status, 3);
    const Outcome killed = run_in_process(run_options(write_script("kill", "import os, signal\nos.kill(os.getpid(), signal.SIGKILL)\n")));
    EXPECT_EQ(killed.status, 128 + 9);
    const Outcome empty = run_in_process(run_options(write_script("raise", "raise SystemExit('bye')\n")));
    EXPECT_EQ(empty.status, 1);
    EXPECT_EQ(empty.err.find("---- enhanced ----"), std::string::npos);
}

TEST(Cli, ScriptArgumentsAndStdoutOrder) {
    auto opts = run_options(write_script("args", "import sys\nprint(sys.argv[1:])\nprint('more')\n"));
    opts.script_args = {"--flag", "x y"};
    const Outcome o = run_in_process(opts);
    EXPECT_EQ(o.out, "['--flag', 'x y']\nmore\n");
}

TEST(Cli, DocSource) {
    auto opts = run_options(script("indentation_expected_block"));
    opts.source = Source::Documentation;
    const Outcome o = run_in_process(opts);
    EXPECT_NE(o.err.find("---- enhanced ----\nBase class for syntax errors related to incorrect indentation."),
              std::string::npos);
}

TEST(Cli, UnreachableHostDegrades) {
    const auto cache = errlens::testing::scratch_dir("unreachable-cache");
    ::setenv("ERRLENS_API_URL", "http://127.0.0.1:9", 1);
    CliOptions opts;
    opts.script = script("type_list_not_callable");
    opts.cache_dir = cache;
    const Outcome o = run_in_process(opts);
    ::unsetenv("ERRLENS_API_URL");
    const std::string original = plain_python_stderr(opts.script);
    EXPECT_EQ(o.status, 1);
    ASSERT_TRUE(o.err.starts_with(original));
    const std::string note = o.err.substr(original.size());
    EXPECT_TRUE(note.starts_with("errlens: "));
    EXPECT_EQ(std::count(note.begin(), note.end(), '\n'), 1);
    EXPECT_EQ(note.find("enhanced"), std::string::npos);
}

TEST(Cli, MissingScriptAndInterpreter) {
    EXPECT_THROW(run_in_process(run_options("/nonexistent/script.py")), ScriptNotFound);
    auto opts = run_options(script("zero_division"));
    opts.interpreter = "/nonexistent/python";
    EXPECT_THROW(run_in_process(opts), InterpreterNotFound);
    opts.interpreter.reset();
    opts.fixtures = "/nonexistent/fixtures";
    EXPECT_THROW(run_in_process(opts), std::invalid_argument);
}

TEST(Cli, PipeMode) {
    CliOptions opts;
    opts.mode = CliOptions::Mode::Pipe;
    opts.fixtures = kSoFixtures;
    std::istringstream in(errlens::testing::read_file(kCorpusDir / "captures" / "type_list_not_callable.stderr"));
    std::ostringstream out, err;
    EXPECT_EQ(enhance_stdin(opts, in, out, err), 0);
    EXPECT_NE(out.str().find("Don't use tuple, list or other special names as a variable name."), std::string::npos);
    EXPECT_EQ(out.str().find("Traceback"), std::string::npos);

    std::istringstream empty("");
    std::ostringstream out2, err2;
    EXPECT_EQ(enhance_stdin(opts, empty, out2, err2), 1);
    EXPECT_EQ(out2.str(), "");
}

TEST(Cli, BinaryRunsAreByteIdentical) {
    const std::vector<std::string> argv = {kCliPath.string(), "run", script("syntax_else_if").string(), "--fixtures",
                                           kSoFixtures.string()};
    const ChildResult first = run_child(argv, {}, {});
    const ChildResult second = run_child(argv, {}, {});
    EXPECT_EQ(first.status, 1);
    EXPECT_EQ(first.stderr_text, second.stderr_text);
    EXPECT_EQ(first.stdout_text, second.stdout_text);
    EXPECT_NE(first.stderr_text.find("---- enhanced ----"), std::string::npos);
}

TEST(Cli, BinaryStructuredPipe) {
    const auto path = errlens::testing::scratch_dir("structured") / "tb.txt";
    std::ofstream(path) << errlens::testing::read_file(kCorpusDir / "captures" / "syntax_else_if.stderr");
    const ChildResult r = run_child({"/bin/sh", "-c",
                                     "'" + kCliPath.string() + "' pipe --output structured --fixtures '" +
                                         kSoFixtures.string() + "' < '" + path.string() + "'"},
                                    {}, {});
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(r.stdout_text.starts_with("{\"code\":"));
    EXPECT_EQ(std::count(r.stdout_text.begin(), r.stdout_text.end(), '\n'), 1);
    EXPECT_NE(r.stdout_text.find("\"selection_reason\":\"Accepted\""), std::string::npos);
}

TEST(Cli, BinaryRejectsBadFlags) {
    EXPECT_NE(run_child({kCliPath.string(), "pipe", "--max-sentences", "0"}, {}, {}).status, 0);
    EXPECT_NE(run_child({kCliPath.string(), "pipe", "--source", "web"}, {}, {}).status, 0);
    EXPECT_NE(run_child({kCliPath.string()}, {}, {}).status, 0);
}
