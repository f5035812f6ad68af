#include "errlens/answer.hpp"

#include <algorithm>
#include <array>
#include <regex>
#include <tuple>

#include "errlens/text.hpp"
#include "text_util.hpp"

namespace errlens {
namespace {

constexpr std::array<std::string_view, 24> kBlockTags = {
    "p",  "div", "br", "li",  "ul", "ol", "h1", "h2",  "h3",    "h4", "h5",    "h6",
    "hr", "tr",  "td", "th", "table", "blockquote", "dl", "dt", "dd", "section", "article", "img",
};

bool is_block_tag(std::string_view name) {
    return std::find(kBlockTags.begin(), kBlockTags.end(), name) != kBlockTags.end();
}

struct Tag {
    std::string name;
    bool closing = false;
};

Tag parse_tag(std::string_view inner) {
    Tag tag;
    inner = trim(inner);
    if (!inner.empty() && inner.front() == '/') {
        tag.closing = true;
        inner.remove_prefix(1);
    }
    std::size_t n = 0;
    while (n < inner.size() && (is_alpha(inner[n]) || is_digit(inner[n]))) {
        ++n;
    }
    tag.name = to_lower(inner.substr(0, n));
    return tag;
}

// Splits a block into lines, each keeping its '\n' so joins are lossless.
std::vector<std::string> lines_with_endings(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        end = end == std::string_view::npos ? text.size() : end + 1;
        lines.emplace_back(text.substr(start, end - start));
        start = end;
    }
    return lines;
}

std::string_view without_ending(std::string_view line) {
    if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

bool is_caret_marker(std::string_view line) {
    line = trim(line);
    return !line.empty() && line.find_first_not_of("^~ ") == std::string_view::npos &&
           line.find('^') != std::string_view::npos;
}

std::optional<std::string_view> arrow_marked(std::string_view line) {
    static const std::regex arrow(R"(^\s*-+>\s?(.*)$)");
    std::match_results<std::string_view::const_iterator> m;
    if (std::regex_match(line.begin(), line.end(), m, arrow)) {
        return std::string_view(&*m[1].first, static_cast<std::size_t>(m[1].length()));
    }
    return std::nullopt;
}

std::string escape_regex(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (std::string_view(R"(\^$.|?*+()[]{})").find(c) != std::string_view::npos) out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string_view selection_reason_name(SelectionReason reason) {
    return reason == SelectionReason::Accepted ? "Accepted" : "TopScore";
}

std::optional<SelectedAnswer> select_answer(std::span<const ThreadSummary> threads, const AnswerIndex& answers) {
    std::vector<const ThreadSummary*> ordered;
    for (const ThreadSummary& t : threads) ordered.push_back(&t);
    std::stable_sort(ordered.begin(), ordered.end(), [](const ThreadSummary* a, const ThreadSummary* b) {
        return a->relevance_rank < b->relevance_rank;
    });

    std::optional<SelectedAnswer> best;
    for (const ThreadSummary* thread : ordered) {
        const auto it = answers.find(thread->question_id);
        if (it == answers.end()) {
            continue;
        }
        for (const AnswerRecord& answer : it->second) {
            if (answer.accepted) {
                return SelectedAnswer{answer, thread->relevance_rank, SelectionReason::Accepted};
            }
            if (answer.score <= 0) {
                continue;
            }
            const auto key = [](const AnswerRecord& a, int rank) { return std::tuple(-a.score, rank, a.answer_id); };
            if (!best || key(answer, thread->relevance_rank) < key(best->record, best->thread_rank)) {
                best = SelectedAnswer{answer, thread->relevance_rank, SelectionReason::TopScore};
            }
        }
    }
    return best;
}

AnswerParts split_answer(const AnswerRecord& record) {
    const std::string_view html = record.body_html;
    AnswerParts parts;
    std::vector<std::string> paragraphs(1);
    std::string code;
    bool in_pre = false;

    const auto paragraph_break = [&] {
        if (!trim(paragraphs.back()).empty()) paragraphs.emplace_back();
    };

    std::size_t i = 0;
    while (i < html.size()) {
        if (html.substr(i, 4) == "<!--") {
            const auto end = html.find("-->", i + 4);
            i = end == std::string_view::npos ? html.size() : end + 3;
            continue;
        }
        if (html[i] == '<') {
            const auto close = html.find('>', i + 1);
            const Tag tag = close == std::string_view::npos ? Tag{} : parse_tag(html.substr(i + 1, close - i - 1));
            if (!tag.name.empty()) {
                if (tag.name == "pre") {
                    if (!tag.closing && !in_pre) {
                        in_pre = true;
                        code.clear();
                        paragraph_break();
                    } else if (tag.closing && in_pre) {
                        in_pre = false;
                        std::string block = decode_entities(code);
                        if (!trim(block).empty()) parts.code_blocks.push_back(std::move(block));
                    }
                } else if (in_pre) {
                    if (tag.name == "br") code += '\n';
                } else if (is_block_tag(tag.name)) {
                    paragraph_break();
                }
                i = close + 1;
                continue;
            }
        }
        (in_pre ? code : paragraphs.back()) += html[i];
        ++i;
    }
    if (in_pre) {
        std::string block = decode_entities(code);
        if (!trim(block).empty()) parts.code_blocks.push_back(std::move(block));
    }

    for (const std::string& paragraph : paragraphs) {
        for (std::string& sentence : split_sentences(decode_entities(paragraph))) {
            parts.sentences.push_back(std::move(sentence));
        }
    }
    if (parts.sentences.empty() && parts.code_blocks.empty()) {
        throw UnparseableBody();
    }
    return parts;
}

bool is_error_message_line(std::string_view line, const ErrorKind& user_kind) {
    static const std::regex generic(R"(^\s*\w*Error(: .*)?$)");
    line = without_ending(line);
    if (std::regex_match(line.begin(), line.end(), generic)) {
        return true;
    }
    const std::regex own("^\\s*" + escape_regex(user_kind.token()) + "(: .*)?$");
    return std::regex_match(line.begin(), line.end(), own);
}

CustomizedAnswer customize(AnswerParts answer, const ParsedError& err, const std::optional<std::string>& typo) {
    CustomizedAnswer out;
    std::string replacement = err.kind.token();
    if (!err.description.empty()) {
        replacement += ": " + err.description;
    }

    std::vector<std::string> flagged;
    for (std::string& block : answer.code_blocks) {
        std::vector<std::string> lines = lines_with_endings(block);
        for (std::size_t i = 0; i < lines.size(); ++i) {
            const std::string_view body = without_ending(lines[i]);
            if (i + 1 < lines.size() && is_caret_marker(without_ending(lines[i + 1])) && !is_caret_marker(body)) {
                flagged.emplace_back(trim(body));
            } else if (auto marked = arrow_marked(body)) {
                flagged.emplace_back(trim(*marked));
            }
            if (!is_error_message_line(body, err.kind)) {
                continue;
            }
            const std::size_t indent = body.find_first_not_of(" \t");
            const std::string ending(std::string_view(lines[i]).substr(body.size()));
            lines[i] = std::string(body.substr(0, indent)) + replacement + ending;
            ++out.substitutions_made;
        }
        std::string rebuilt;
        for (const std::string& line : lines) rebuilt += line;
        out.code_blocks.push_back(std::move(rebuilt));
    }

    if (err.kind.is(KindTag::SyntaxError) && err.caret_column && *err.caret_column >= err.offending_line.size() &&
        flagged.size() == 1) {
        out.display_offending_line = flagged.front();
    }

    if (typo) {
        out.typo_suggestion = "Did you mean '" + *typo + "'?";
        out.sentences.push_back(*out.typo_suggestion);
    }
    for (std::string& s : answer.sentences) out.sentences.push_back(std::move(s));
    return out;
}

}  // namespace errlens
