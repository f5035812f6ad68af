#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "errlens/knowledge.hpp"
#include "errlens/traceback.hpp"

namespace errlens {

enum class SortOrder { Relevance };

/// A question search plus its fixed retrieval constraints.
struct SearchQuery {
    std::string text;
    std::string tag = "python";
    int min_answers = 1;
    SortOrder sort = SortOrder::Relevance;
    int page_size = 10;

    friend bool operator==(const SearchQuery&, const SearchQuery&) = default;
};

enum class MistakeClass {
    MismatchedQuotes,
    MismatchedBrackets,
    ForLoopSyntax,
    WhileLoopSyntax,
    ConditionalSyntax,
};

std::string_view mistake_name(MistakeClass mistake);
/// Search term used in place of the raw SyntaxError text.
std::string_view mistake_query_term(MistakeClass mistake);

/// Query plus what was learned while building it.
struct QueryPlan {
    SearchQuery query;
    std::optional<MistakeClass> mistake;
    /// Catalogue word suggested for a misspelled identifier on the error line.
    std::optional<std::string> typo_correction;
};

class EmptyQuery : public std::runtime_error {
public:
    EmptyQuery() : std::runtime_error("query construction produced no text") {}
};

std::string reformulate_word(std::string_view word, const KnowledgeTables& kb);
std::optional<std::string> associate_verb(std::string_view word, const KnowledgeTables& kb);
std::string map_datatype(std::string_view word, const KnowledgeTables& kb);
std::string apply_synonym(std::string_view word, const KnowledgeTables& kb);

std::optional<MistakeClass> detect_common_syntax_mistake(const ParsedError& err);

inline constexpr double kTypoCutoff = 0.6;

/// Closest keyword or builtin whose gestalt ratio with `word` is >= cutoff.
/// Throws std::invalid_argument unless 0 < cutoff <= 1.
std::optional<std::string> fix_typo(std::string_view word, const KnowledgeTables& kb, double cutoff = kTypoCutoff);

/// Per-kind query rules. Throws EmptyQuery if the chosen rule yields nothing.
QueryPlan build_query(const ParsedError& err, const KnowledgeTables& kb);

/// `<kind>: <description>`, or just the kind when there is no description.
SearchQuery type_and_description_query(const ParsedError& err);

/// build_query, falling back to type_and_description_query on EmptyQuery.
QueryPlan plan_query(const ParsedError& err, const KnowledgeTables& kb);

}  // namespace errlens
