#include "errlens/app.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>

#include "errlens/process.hpp"

namespace errlens {
namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::unique_ptr<Transport> make_transport(const CliOptions& opts) {
    if (opts.fixtures) return std::make_unique<FixtureTransport>(*opts.fixtures);
    return std::make_unique<LiveTransport>();
}

PipelineOptions pipeline_options(const CliOptions& opts) {
    PipelineOptions p;
    p.source = opts.source;
    p.summary = summary_config(opts);
    if (!opts.fixtures) {
        if (auto dir = resolve_cache_dir(opts)) {
            p.cache = CacheOptions{*dir, opts.ttl_seconds, {}};
        }
    }
    return p;
}

PipelineResult run_pipeline(const CliOptions& opts, const RawCapture& capture) {
    const KnowledgeTables kb = load_tables(opts.data_dir ? *opts.data_dir : default_data_dir());
    std::unique_ptr<Transport> transport;
    if (opts.source == Source::StackOverflow) transport = make_transport(opts);
    return enhance(capture, kb, transport.get(), pipeline_options(opts));
}

void write_message(const CliOptions& opts, const PipelineResult& result, std::ostream& out) {
    if (opts.output == OutputFormat::Structured) {
        out << render_structured(result);
    } else {
        out << render_plain(*result.message);
    }
}

}  // namespace

void CliOptions::validate() const {
    if (max_sentences < 1) throw std::invalid_argument("--max-sentences must be at least 1");
    if (ttl_seconds < 0) throw std::invalid_argument("--ttl must be non-negative");
    if (fixtures && !std::filesystem::is_directory(*fixtures)) {
        throw std::invalid_argument("fixture directory does not exist: " + fixtures->string());
    }
}

std::optional<std::filesystem::path> resolve_cache_dir(const CliOptions& opts) {
    if (opts.cache_dir) return opts.cache_dir;
    if (const char* env = std::getenv("ERRLENS_CACHE_DIR"); env && *env) return std::filesystem::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "errlens";
    if (const char* home = std::getenv("HOME"); home && *home) {
        return std::filesystem::path(home) / ".cache" / "errlens";
    }
    return std::nullopt;
}

SummaryConfig summary_config(const CliOptions& opts) {
    SummaryConfig cfg;
    cfg.max_sentences = opts.max_sentences;
    cfg.min_sentences_to_summarize = std::max(cfg.min_sentences_to_summarize, opts.max_sentences + 1);
    return cfg;
}

int run_file(const CliOptions& opts, std::ostream& out, std::ostream& err) {
    opts.validate();
    if (!std::filesystem::is_regular_file(opts.script)) throw ScriptNotFound(opts.script);
    const auto interpreter = resolve_interpreter(opts.interpreter);

    std::vector<std::string> argv = {interpreter.string(), opts.script.string()};
    argv.insert(argv.end(), opts.script_args.begin(), opts.script_args.end());
    const ChildResult child = run_child(
        argv,
        [&](std::string_view chunk) { out.write(chunk.data(), static_cast<std::streamsize>(chunk.size())).flush(); },
        [&](std::string_view chunk) { err.write(chunk.data(), static_cast<std::streamsize>(chunk.size())).flush(); });

    if (child.status == 0) return 0;

    const RawCapture capture{child.stderr_text, opts.script, slurp(opts.script)};
    PipelineResult result;
    try {
        result = run_pipeline(opts, capture);
    } catch (const std::exception& e) {
        err << "errlens: " << e.what() << "\n";
        return child.status;
    }
    if (!result.message) {
        err << "errlens: " << result.note << "\n";
        return child.status;
    }
    err << kEnhancedDelimiter << "\n";
    write_message(opts, result, err);
    err.flush();
    return child.status;
}

int enhance_stdin(const CliOptions& opts, std::istream& in, std::ostream& out, std::ostream& err) {
    opts.validate();
    RawCapture capture;
    capture.stderr_text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    try {
        const ParsedError first = parse_traceback(capture);
        if (!first.file.empty() && std::filesystem::is_regular_file(first.file)) {
            capture.source_path = first.file;
            capture.source_text = slurp(first.file);
        }
    } catch (const NotAnError&) {
        return 1;
    }

    PipelineResult result;
    try {
        result = run_pipeline(opts, capture);
    } catch (const std::exception& e) {
        err << "errlens: " << e.what() << "\n";
        return 1;
    }
    if (!result.message) {
        err << "errlens: " << result.note << "\n";
        return 1;
    }
    write_message(opts, result, out);
    return 0;
}

}  // namespace errlens
