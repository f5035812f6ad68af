#include "errlens/knowledge.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "errlens/error_kind.hpp"
#include "text_util.hpp"

#ifndef ERRLENS_DEFAULT_DATA_DIR
#define ERRLENS_DEFAULT_DATA_DIR "data"
#endif

namespace errlens {
namespace {

struct Record {
    std::size_t line;
    std::vector<std::string> fields;
};

std::vector<Record> read_tsv(const std::filesystem::path& file, std::size_t columns) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw MalformedTable(file, 0, "cannot open table");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    if (starts_with(text, "\xEF\xBB\xBF")) {
        text.erase(0, 3);
    }

    std::vector<Record> records;
    std::size_t number = 0;
    for (const std::string& line : split_lines(text)) {
        ++number;
        if (trim(line).empty() || line.front() == '#') {
            continue;
        }
        std::vector<std::string> fields;
        for (std::string_view field : split(line, '\t')) {
            fields.emplace_back(field);
        }
        if (fields.size() != columns) {
            throw MalformedTable(file, number,
                                 "expected " + std::to_string(columns) + " fields, found " +
                                     std::to_string(fields.size()));
        }
        for (const std::string& field : fields) {
            if (field.empty()) {
                throw MalformedTable(file, number, "empty field");
            }
        }
        records.push_back(Record{number, std::move(fields)});
    }
    return records;
}

long parse_positive(const std::filesystem::path& file, const Record& record, const std::string& field) {
    long value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || value < 1) {
        throw MalformedTable(file, record.line, "expected a positive integer, found '" + field + "'");
    }
    return value;
}

bool is_lower_token(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return !is_space(c) && !(c >= 'A' && c <= 'Z'); });
}

SyntaxTable load_syntax(const std::filesystem::path& file) {
    std::vector<SyntaxRow> rows;
    std::unordered_map<std::string, std::size_t> by_concept;
    for (const Record& record : read_tsv(file, 3)) {
        const std::string& concept_id = record.fields[0];
        auto [it, inserted] = by_concept.emplace(concept_id, rows.size());
        if (inserted) {
            rows.push_back(SyntaxRow{concept_id, {}});
        }
        SyntaxRow& row = rows[it->second];
        const std::string& token = record.fields[1];
        const bool duplicate = std::any_of(row.entries.begin(), row.entries.end(),
                                           [&](const SyntaxEntry& e) { return e.token == token; });
        if (duplicate) {
            throw MalformedTable(file, record.line, "duplicate token '" + token + "' in row " + concept_id);
        }
        const long count = parse_positive(file, record, record.fields[2]);
        row.entries.push_back(SyntaxEntry{token, static_cast<int>(count)});
    }
    return SyntaxTable(std::move(rows));
}

}  // namespace

MalformedTable::MalformedTable(std::filesystem::path file, std::size_t line, const std::string& what)
    : std::runtime_error(file.string() + ":" + std::to_string(line) + ": " + what),
      file_(std::move(file)),
      line_(line) {}

const SyntaxEntry& SyntaxRow::top() const {
    return *std::min_element(entries.begin(), entries.end(), [](const SyntaxEntry& a, const SyntaxEntry& b) {
        if (a.language_count != b.language_count) {
            return a.language_count > b.language_count;
        }
        return a.token < b.token;
    });
}

SyntaxTable::SyntaxTable(std::vector<SyntaxRow> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (const SyntaxEntry& entry : rows_[i].entries) {
            index_.emplace(entry.token, i);  // first row wins
        }
    }
}

const SyntaxRow* SyntaxTable::find_row(std::string_view token) const {
    const auto it = index_.find(std::string(token));
    return it == index_.end() ? nullptr : &rows_[it->second];
}

bool KeywordCatalogue::contains(std::string_view word) const {
    return std::binary_search(keywords.begin(), keywords.end(), word) ||
           std::binary_search(builtins.begin(), builtins.end(), word);
}

KnowledgeTables load_tables(const std::filesystem::path& data_dir) {
    KnowledgeTables kb;
    kb.syntax = load_syntax(data_dir / "syntax_table.tsv");

    {
        const auto file = data_dir / "verbs.tsv";
        for (const Record& r : read_tsv(file, 3)) {
            if (!is_lower_token(r.fields[0]) || !is_lower_token(r.fields[1])) {
                throw MalformedTable(file, r.line, "word and verb must be single lowercase tokens");
            }
            const long freq = parse_positive(file, r, r.fields[2]);
            if (!kb.verbs.emplace(r.fields[0], VerbEntry{r.fields[1], freq}).second) {
                throw MalformedTable(file, r.line, "duplicate word '" + r.fields[0] + "'");
            }
        }
    }
    {
        const auto file = data_dir / "synonyms.tsv";
        for (const Record& r : read_tsv(file, 3)) {
            if (!is_lower_token(r.fields[0])) {
                throw MalformedTable(file, r.line, "word must be a lowercase token");
            }
            if (r.fields[0] == r.fields[1]) {
                throw MalformedTable(file, r.line, "synonym equals its word");
            }
            double similarity = 0;
            const auto& s = r.fields[2];
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), similarity);
            if (ec != std::errc() || ptr != s.data() + s.size() || !(similarity > 0.0 && similarity <= 1.0)) {
                throw MalformedTable(file, r.line, "similarity must lie in (0, 1]");
            }
            if (!kb.synonyms.emplace(r.fields[0], SynonymEntry{r.fields[1], similarity}).second) {
                throw MalformedTable(file, r.line, "duplicate word '" + r.fields[0] + "'");
            }
        }
    }
    {
        const auto file = data_dir / "keywords.tsv";
        for (const Record& r : read_tsv(file, 2)) {
            if (r.fields[1] == "keyword") {
                kb.catalogue.keywords.push_back(r.fields[0]);
            } else if (r.fields[1] == "builtin") {
                kb.catalogue.builtins.push_back(r.fields[0]);
            } else {
                throw MalformedTable(file, r.line, "class must be 'keyword' or 'builtin'");
            }
        }
        std::sort(kb.catalogue.keywords.begin(), kb.catalogue.keywords.end());
        std::sort(kb.catalogue.builtins.begin(), kb.catalogue.builtins.end());
        for (const std::string& k : kb.catalogue.keywords) {
            if (std::binary_search(kb.catalogue.builtins.begin(), kb.catalogue.builtins.end(), k)) {
                throw MalformedTable(file, 0, "'" + k + "' is listed as both keyword and builtin");
            }
        }
    }
    {
        const auto file = data_dir / "datatypes.tsv";
        for (const Record& r : read_tsv(file, 2)) {
            if (r.fields[0] != "int" && r.fields[0] != "bool" && r.fields[0] != "str" && r.fields[0] != "dict") {
                throw MalformedTable(file, r.line, "unexpected datatype '" + r.fields[0] + "'");
            }
            if (!kb.datatypes.emplace(r.fields[0], r.fields[1]).second) {
                throw MalformedTable(file, r.line, "duplicate datatype '" + r.fields[0] + "'");
            }
        }
        if (kb.datatypes.size() != 4) {
            throw MalformedTable(file, 0, "expected entries for int, bool, str and dict");
        }
    }
    {
        const auto file = data_dir / "doc_excerpts.tsv";
        for (const Record& r : read_tsv(file, 2)) {
            const std::string& text = r.fields[1];
            for (std::string_view banned :
                 {"http://", "https://", "<a ", "Changed in version", "New in version", "Deprecated since version"}) {
                if (text.find(banned) != std::string::npos) {
                    throw MalformedTable(file, r.line, "excerpt contains '" + std::string(banned) + "'");
                }
            }
            if (!kb.doc_excerpts.emplace(r.fields[0], text).second) {
                throw MalformedTable(file, r.line, "duplicate excerpt for '" + r.fields[0] + "'");
            }
        }
        for (KindTag tag : kKnownKinds) {
            if (!kb.doc_excerpts.contains(kind_name(tag))) {
                throw MalformedTable(file, 0, "missing excerpt for " + std::string(kind_name(tag)));
            }
        }
    }
    return kb;
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("ERRLENS_DATA_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return ERRLENS_DEFAULT_DATA_DIR;
}

}  // namespace errlens
