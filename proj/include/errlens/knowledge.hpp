#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace errlens {

struct SyntaxEntry {
    std::string token;
    int language_count = 1;
};

/// One concept of the syntax-across-languages snapshot, e.g. "else_if".
struct SyntaxRow {
    std::string concept_id;
    std::vector<SyntaxEntry> entries;

    /// Highest language_count; ties go to the lexicographically smaller token.
    const SyntaxEntry& top() const;
};

class SyntaxTable {
public:
    SyntaxTable() = default;
    explicit SyntaxTable(std::vector<SyntaxRow> rows);

    const std::vector<SyntaxRow>& rows() const noexcept { return rows_; }
    /// Row holding `token`; when several rows do, the first one in file order.
    const SyntaxRow* find_row(std::string_view token) const;

private:
    std::vector<SyntaxRow> rows_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct VerbEntry {
    std::string verb;
    long frequency = 1;
};

struct SynonymEntry {
    std::string synonym;
    double similarity = 1.0;
};

struct KeywordCatalogue {
    std::vector<std::string> keywords;  // sorted
    std::vector<std::string> builtins;  // sorted
    bool contains(std::string_view word) const;
};

struct KnowledgeTables {
    SyntaxTable syntax;
    std::map<std::string, VerbEntry, std::less<>> verbs;
    std::map<std::string, SynonymEntry, std::less<>> synonyms;
    KeywordCatalogue catalogue;
    std::map<std::string, std::string, std::less<>> datatypes;
    /// Keyed by exception type token.
    std::map<std::string, std::string, std::less<>> doc_excerpts;
};

class MalformedTable : public std::runtime_error {
public:
    MalformedTable(std::filesystem::path file, std::size_t line, const std::string& what);

    const std::filesystem::path& file() const noexcept { return file_; }
    /// 1-based line of the offending record; 0 for whole-file problems.
    std::size_t line() const noexcept { return line_; }

private:
    std::filesystem::path file_;
    std::size_t line_;
};

/// Loads and validates the six TSV tables from `data_dir`.
KnowledgeTables load_tables(const std::filesystem::path& data_dir);

/// $ERRLENS_DATA_DIR if set, else the directory configured at build time.
std::filesystem::path default_data_dir();

}  // namespace errlens
