#include "errlens/summarizer.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "errlens/text.hpp"
#include "text_util.hpp"

namespace errlens {

const std::set<std::string, std::less<>>& default_stopwords() {
    static const std::set<std::string, std::less<>> words = {
        "a",       "about",  "above", "after",  "again",  "against", "all",     "am",     "an",     "and",
        "any",     "are",    "as",    "at",     "be",     "because", "been",    "before", "being",  "below",
        "between", "both",   "but",   "by",     "can",    "could",   "did",     "do",     "does",   "doing",
        "down",    "during", "each",  "few",    "for",    "from",    "further", "had",    "has",    "have",
        "having",  "he",     "her",   "here",   "hers",   "herself", "him",     "himself", "his",   "how",
        "i",       "if",     "in",    "into",   "is",     "it",      "its",     "itself", "just",   "me",
        "more",    "most",   "my",    "myself", "no",     "nor",     "not",     "now",    "of",     "off",
        "on",      "once",   "only",  "or",     "other",  "our",     "ours",    "out",    "over",   "own",
        "same",    "she",    "should", "so",    "some",   "such",    "than",    "that",   "the",    "their",
        "theirs",  "them",   "then",  "there",  "these",  "they",    "this",    "those",  "through", "to",
        "too",     "under",  "until", "up",     "very",   "was",     "we",      "were",   "what",   "when",
        "where",   "which",  "while", "who",    "whom",   "why",     "will",    "with",   "would",  "you",
        "your",    "yours",  "yourself", "it's", "don't", "i'm",     "you're",  "that's", "there's", "can't",
    };
    return words;
}

void SummaryConfig::validate() const {
    if (max_sentences < 1) throw std::invalid_argument("max_sentences must be at least 1");
    if (min_sentences_to_summarize <= max_sentences) {
        throw std::invalid_argument("min_sentences_to_summarize must exceed max_sentences");
    }
    if (significance_window < 0) throw std::invalid_argument("significance_window must be non-negative");
    if (min_word_frequency < 1) throw std::invalid_argument("min_word_frequency must be at least 1");
}

std::vector<std::string> luhn_tokens(std::string_view sentence, const SummaryConfig& cfg) {
    const auto word_char = [](char c) { return is_alpha(c) || is_digit(c) || c == '_'; };
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < sentence.size()) {
        if (!word_char(sentence[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < sentence.size()) {
            if (word_char(sentence[j])) {
                ++j;
            } else if (sentence[j] == '\'' && j + 1 < sentence.size() && word_char(sentence[j + 1])) {
                j += 2;
            } else {
                break;
            }
        }
        std::string token = to_lower(sentence.substr(i, j - i));
        if (!cfg.stopwords.contains(token)) tokens.push_back(std::move(token));
        i = j;
    }
    return tokens;
}

std::vector<LuhnScore> luhn_scores(const std::vector<std::string>& sentences, const SummaryConfig& cfg) {
    std::vector<std::vector<std::string>> tokenized;
    std::map<std::string, int, std::less<>> frequency;
    for (const std::string& s : sentences) {
        tokenized.push_back(luhn_tokens(s, cfg));
        for (const std::string& t : tokenized.back()) ++frequency[t];
    }

    std::vector<LuhnScore> scores;
    for (const auto& tokens : tokenized) {
        std::vector<long> positions;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (frequency[tokens[i]] >= cfg.min_word_frequency) positions.push_back(static_cast<long>(i));
        }
        LuhnScore best{0, 1};
        std::size_t start = 0;
        while (start < positions.size()) {
            std::size_t end = start;
            while (end + 1 < positions.size() && positions[end + 1] - positions[end] - 1 <= cfg.significance_window) {
                ++end;
            }
            // any run of consecutive significant words inside the cluster qualifies
            for (std::size_t a = start; a <= end; ++a) {
                for (std::size_t b = a; b <= end; ++b) {
                    const LuhnScore run{static_cast<long>(b - a + 1), positions[b] - positions[a] + 1};
                    if (best < run) best = run;
                }
            }
            start = end + 1;
        }
        scores.push_back(best);
    }
    return scores;
}

std::vector<std::string> luhn_summarize(const std::vector<std::string>& sentences, const SummaryConfig& cfg) {
    cfg.validate();
    if (static_cast<int>(sentences.size()) < cfg.min_sentences_to_summarize) {
        return sentences;
    }
    const std::vector<LuhnScore> scores = luhn_scores(sentences, cfg);
    std::vector<std::size_t> order(sentences.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[b] < scores[a]; });
    order.resize(static_cast<std::size_t>(cfg.max_sentences));
    std::sort(order.begin(), order.end());

    std::vector<std::string> out;
    for (std::size_t i : order) out.push_back(sentences[i]);
    return out;
}

std::string clean_format(std::string_view text) {
    std::string decoded(text);
    for (;;) {
        std::string next = decode_entities(decoded);
        if (next == decoded) break;
        decoded = std::move(next);
    }
    std::vector<std::string> lines;
    for (std::string_view line : split(decoded, '\n')) {
        lines.push_back(collapse_whitespace(line));
    }
    return join(lines, "\n");
}

std::string clean_code(std::string_view code) {
    std::vector<std::string> lines;
    for (std::string_view line : split_lines(code)) {
        lines.emplace_back(trim_right(line));
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    auto first = std::find_if(lines.begin(), lines.end(), [](const std::string& l) { return !l.empty(); });
    lines.erase(lines.begin(), first);
    return join(lines, "\n");
}

EnhancedMessage assemble(const CustomizedAnswer& custom, const SelectedAnswer& selected, const SummaryConfig& cfg) {
    EnhancedMessage msg;
    for (const std::string& s : luhn_summarize(custom.sentences, cfg)) {
        msg.sentences.push_back(clean_format(s));
    }
    if (!custom.code_blocks.empty()) {
        msg.code_example = clean_code(custom.code_blocks.front());
    }
    msg.source_answer_id = selected.record.answer_id;
    msg.source_url = "https://stackoverflow.com/a/" + std::to_string(selected.record.answer_id);
    msg.offending_line = custom.display_offending_line;
    return msg;
}

}  // namespace errlens
