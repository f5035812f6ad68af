#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "errlens/app.hpp"
#include "errlens/process.hpp"

int main(int argc, char** argv) {
    using errlens::CliOptions;
    CliOptions opts;
    std::string script;

    CLI::App app{"Explain Python errors with a summarized community answer"};
    app.require_subcommand(1);

    const std::map<std::string, errlens::Source> sources = {{"so", errlens::Source::StackOverflow},
                                                            {"doc", errlens::Source::Documentation}};
    const std::map<std::string, errlens::OutputFormat> formats = {{"plain", errlens::OutputFormat::Plain},
                                                                  {"structured", errlens::OutputFormat::Structured}};
    std::string fixtures, cache_dir, interpreter, data_dir;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--source", opts.source, "so or doc")->transform(CLI::CheckedTransformer(sources));
        sub->add_option("--fixtures", fixtures, "Serve API responses from a recorded fixture directory");
        sub->add_option("--cache-dir", cache_dir, "Response cache directory");
        sub->add_option("--ttl", opts.ttl_seconds, "Cache lifetime in seconds")->check(CLI::NonNegativeNumber);
        sub->add_option("--max-sentences", opts.max_sentences, "Summary length")->check(CLI::PositiveNumber);
        sub->add_option("--output", opts.output, "plain or structured")->transform(CLI::CheckedTransformer(formats));
        sub->add_option("--interpreter", interpreter, "Python interpreter");
        sub->add_option("--data-dir", data_dir, "Knowledge table directory");
    };

    CLI::App* run = app.add_subcommand("run", "Run a script and explain its error");
    run->add_option("script", script, "Script to run")->required();
    run->add_option("args", opts.script_args, "Script arguments");
    run->allow_extras(false);
    add_common(run);

    CLI::App* pipe = app.add_subcommand("pipe", "Explain a traceback read from standard input");
    add_common(pipe);

    CLI11_PARSE(app, argc, argv);

    if (!fixtures.empty()) opts.fixtures = fixtures;
    if (!cache_dir.empty()) opts.cache_dir = cache_dir;
    if (!interpreter.empty()) opts.interpreter = interpreter;
    if (!data_dir.empty()) opts.data_dir = data_dir;

    try {
        if (*run) {
            opts.mode = CliOptions::Mode::Run;
            opts.script = script;
            return errlens::run_file(opts, std::cout, std::cerr);
        }
        opts.mode = CliOptions::Mode::Pipe;
        return errlens::enhance_stdin(opts, std::cin, std::cout, std::cerr);
    } catch (const errlens::ScriptNotFound& e) {
        std::cerr << "errlens: " << e.what() << "\n";
        return 2;
    } catch (const errlens::InterpreterNotFound& e) {
        std::cerr << "errlens: " << e.what() << "\n";
        return 127;
    } catch (const std::exception& e) {
        std::cerr << "errlens: " << e.what() << "\n";
        return 2;
    }
}
