#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errlens/answer.hpp"

namespace errlens {

struct EnhancedMessage {
    std::vector<std::string> sentences;
    std::optional<std::string> code_example;
    /// Absent for documentation messages.
    std::optional<std::int64_t> source_answer_id;
    std::string source_url;
    std::optional<std::string> offending_line;
};

/// A small English stopword list (articles, pronouns, auxiliaries, common
/// prepositions and conjunctions).
const std::set<std::string, std::less<>>& default_stopwords();

struct SummaryConfig {
    int max_sentences = 4;
    int min_sentences_to_summarize = 5;
    std::set<std::string, std::less<>> stopwords = default_stopwords();
    int significance_window = 4;
    int min_word_frequency = 2;

    /// Throws std::invalid_argument when the invariants do not hold.
    void validate() const;
};

/// Lowercased word tokens with stopwords removed. Words are runs of ASCII
/// letters, digits and underscores, optionally joined by inner apostrophes.
std::vector<std::string> luhn_tokens(std::string_view sentence, const SummaryConfig& cfg);

struct LuhnScore {
    long significant = 0;
    long span = 1;
    friend bool operator<(const LuhnScore& a, const LuhnScore& b) {
        return a.significant * a.significant * b.span < b.significant * b.significant * a.span;
    }
    double value() const { return static_cast<double>(significant * significant) / static_cast<double>(span); }
};

/// Best cluster score of every sentence.
std::vector<LuhnScore> luhn_scores(const std::vector<std::string>& sentences, const SummaryConfig& cfg);

std::vector<std::string> luhn_summarize(const std::vector<std::string>& sentences, const SummaryConfig& cfg = {});

/// Decodes entities until nothing changes, collapses whitespace runs inside
/// each line and trims every line.
std::string clean_format(std::string_view text);

/// Drops blank leading and trailing lines and trailing blanks on each line;
/// indentation is kept.
std::string clean_code(std::string_view code);

EnhancedMessage assemble(const CustomizedAnswer& custom, const SelectedAnswer& selected,
                         const SummaryConfig& cfg = {});

}  // namespace errlens
