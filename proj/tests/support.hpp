#pragma once

#include <filesystem>
#include <fstream>
#include <iterator>
#include <unistd.h>
#include <stdexcept>
#include <string>
#include <vector>

#include "errlens/knowledge.hpp"

namespace errlens::testing {

inline const std::filesystem::path kSourceDir = ERRLENS_SOURCE_DIR;
inline const std::filesystem::path kDataDir = kSourceDir / "data";
inline const std::filesystem::path kCorpusDir = kSourceDir / "corpus";
inline const std::filesystem::path kFixtureDir = kSourceDir / "tests" / "fixtures";
inline const std::filesystem::path kSoFixtures = kFixtureDir / "so";
inline const std::filesystem::path kCliPath = ERRLENS_CLI_PATH;

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Rows of a tab-separated file, skipping blank lines and '#' comments.
inline std::vector<std::vector<std::string>> read_tsv(const std::filesystem::path& path) {
    std::vector<std::vector<std::string>> rows;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (;;) {
            const auto tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

inline const KnowledgeTables& tables() {
    static const KnowledgeTables kb = load_tables(kDataDir);
    return kb;
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() /
               ("errlens-" + tag + "-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace errlens::testing
