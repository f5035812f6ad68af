#include "errlens/query.hpp"

#include <algorithm>
#include <regex>
#include <vector>

#include "errlens/gestalt.hpp"
#include "text_util.hpp"

namespace errlens {
namespace {

std::string letters_only(std::string_view s) {
    std::string out;
    std::copy_if(s.begin(), s.end(), std::back_inserter(out), is_alpha);
    return out;
}

void push_unique(std::vector<std::string>& list, std::string value) {
    if (!value.empty() && std::find(list.begin(), list.end(), value) == list.end()) {
        list.push_back(std::move(value));
    }
}

struct LineScan {
    bool unterminated_string = false;
    bool brackets_unbalanced = false;
    std::string code;  // the line with string contents and comments blanked out
};

// Tracks string literals so quotes and brackets inside them are ignored.
LineScan scan_line(std::string_view line) {
    LineScan scan;
    std::vector<char> stack;
    char quote = 0;
    bool triple = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quote != 0) {
            if (c == '\\') {
                ++i;
                continue;
            }
            if (c != quote) {
                continue;
            }
            if (!triple) {
                quote = 0;
                scan.code += c;
            } else if (line.substr(i, 3) == std::string(3, quote)) {
                quote = 0;
                triple = false;
                i += 2;
                scan.code += c;
            }
            continue;
        }
        if (c == '#') {
            break;
        }
        if (c == '"' || c == '\'') {
            quote = c;
            triple = line.substr(i, 3) == std::string(3, c);
            if (triple) {
                i += 2;
            }
            scan.code += c;
            continue;
        }
        scan.code += c;
        if (c == '(' || c == '[' || c == '{') {
            stack.push_back(c);
        } else if (c == ')' || c == ']' || c == '}') {
            const char open = c == ')' ? '(' : c == ']' ? '[' : '{';
            if (stack.empty() || stack.back() != open) {
                scan.brackets_unbalanced = true;
            } else {
                stack.pop_back();
            }
        }
    }
    // An open triple-quoted string may legitimately continue on the next line.
    scan.unterminated_string = quote != 0 && !triple;
    if (!stack.empty()) {
        scan.brackets_unbalanced = true;
    }
    return scan;
}

bool has_terminal_colon(std::string_view code) { return ends_with(trim_right(code), ":"); }

bool has_word(std::string_view code, std::string_view word) {
    std::size_t pos = 0;
    while ((pos = code.find(word, pos)) != std::string_view::npos) {
        const bool left = pos == 0 || !is_ident_char(code[pos - 1]);
        const bool right = pos + word.size() == code.size() || !is_ident_char(code[pos + word.size()]);
        if (left && right) {
            return true;
        }
        pos += word.size();
    }
    return false;
}

std::vector<std::string> identifiers(std::string_view code) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < code.size();) {
        if (is_ident_start(code[i]) && (i == 0 || !is_ident_char(code[i - 1]))) {
            std::size_t j = i;
            while (j < code.size() && is_ident_char(code[j])) {
                ++j;
            }
            out.emplace_back(code.substr(i, j - i));
            i = j;
        } else {
            ++i;
        }
    }
    return out;
}

std::string_view error_line_of(const ParsedError& err) {
    return err.offending_line.empty() ? std::string_view(err.source_line) : std::string_view(err.offending_line);
}

// Identifiers shorter than this are left alone: one- and two-letter names
// are almost always user variables and match short builtins like `id`.
constexpr std::size_t kMinTypoLength = 3;

}  // namespace

std::string_view mistake_name(MistakeClass mistake) {
    switch (mistake) {
        case MistakeClass::MismatchedQuotes: return "MismatchedQuotes";
        case MistakeClass::MismatchedBrackets: return "MismatchedBrackets";
        case MistakeClass::ForLoopSyntax: return "ForLoopSyntax";
        case MistakeClass::WhileLoopSyntax: return "WhileLoopSyntax";
        case MistakeClass::ConditionalSyntax: return "ConditionalSyntax";
    }
    return "";
}

std::string_view mistake_query_term(MistakeClass mistake) {
    switch (mistake) {
        case MistakeClass::MismatchedQuotes: return "quotation marks";
        case MistakeClass::MismatchedBrackets: return "bracket meanings";
        case MistakeClass::ForLoopSyntax: return "for loop";
        case MistakeClass::WhileLoopSyntax: return "while loop";
        case MistakeClass::ConditionalSyntax: return "else if syntax";
    }
    return "";
}

std::string reformulate_word(std::string_view word, const KnowledgeTables& kb) {
    const SyntaxRow* row = kb.syntax.find_row(word);
    if (row == nullptr) {
        return std::string(word);
    }
    std::string replacement = letters_only(row->top().token);
    return replacement.empty() ? std::string(word) : replacement;
}

std::optional<std::string> associate_verb(std::string_view word, const KnowledgeTables& kb) {
    const auto it = kb.verbs.find(to_lower(word));
    if (it == kb.verbs.end()) {
        return std::nullopt;
    }
    return it->second.verb;
}

std::string map_datatype(std::string_view word, const KnowledgeTables& kb) {
    const auto it = kb.datatypes.find(word);
    return it == kb.datatypes.end() ? std::string(word) : it->second;
}

std::string apply_synonym(std::string_view word, const KnowledgeTables& kb) {
    const auto it = kb.synonyms.find(to_lower(word));
    return it == kb.synonyms.end() ? std::string(word) : it->second.synonym;
}

std::optional<MistakeClass> detect_common_syntax_mistake(const ParsedError& err) {
    if (!err.kind.is(KindTag::SyntaxError)) {
        return std::nullopt;
    }
    const std::string_view line = trim(error_line_of(err));
    if (line.empty()) {
        return std::nullopt;
    }
    const LineScan scan = scan_line(line);
    if (scan.unterminated_string) {
        return MistakeClass::MismatchedQuotes;
    }
    if (scan.brackets_unbalanced) {
        return MistakeClass::MismatchedBrackets;
    }
    const std::string_view code = trim(scan.code);
    const bool colon = has_terminal_colon(code);
    if (starts_with_word(code, "for") && (!colon || !has_word(code, "in"))) {
        return MistakeClass::ForLoopSyntax;
    }
    if (starts_with_word(code, "while") && !colon) {
        return MistakeClass::WhileLoopSyntax;
    }
    static const std::regex else_if(R"(\belse\s+if\b)");
    const std::string code_str(code);
    if (std::regex_search(code_str, else_if)) {
        return MistakeClass::ConditionalSyntax;
    }
    if ((starts_with_word(code, "if") || starts_with_word(code, "elif") || starts_with_word(code, "else")) && !colon) {
        return MistakeClass::ConditionalSyntax;
    }
    return std::nullopt;
}

std::optional<std::string> fix_typo(std::string_view word, const KnowledgeTables& kb, double cutoff) {
    if (!(cutoff > 0.0 && cutoff <= 1.0)) {
        throw std::invalid_argument("typo cutoff must lie in (0, 1]");
    }
    const std::string* best = nullptr;
    SimilarityRatio best_ratio;
    // keywords are scanned first and each list is sorted, so a strict '>' keeps
    // the keywords-then-lexicographic tie order
    for (const auto* list : {&kb.catalogue.keywords, &kb.catalogue.builtins}) {
        for (const std::string& candidate : *list) {
            const SimilarityRatio ratio = gestalt_ratio(word, candidate);
            if (ratio.value() < cutoff) {
                continue;
            }
            const bool better = best == nullptr || ratio.numerator * best_ratio.denominator >
                                                       best_ratio.numerator * ratio.denominator;
            if (better) {
                best = &candidate;
                best_ratio = ratio;
            }
        }
    }
    if (best == nullptr) {
        return std::nullopt;
    }
    return *best;
}

SearchQuery type_and_description_query(const ParsedError& err) {
    SearchQuery query;
    query.text = err.kind.token();
    if (!err.description.empty()) {
        query.text += ": " + err.description;
    }
    return query;
}

QueryPlan build_query(const ParsedError& err, const KnowledgeTables& kb) {
    QueryPlan plan;
    std::string& text = plan.query.text;
    const std::string& kind = err.kind.token();

    switch (err.kind.tag()) {
        case KindTag::AttributeError:
        case KindTag::NameError: {
            std::vector<std::string> words;
            std::vector<std::string> verbs;
            for (const std::string& quoted : extract_quoted_words(err.description)) {
                if (quoted.empty()) {
                    continue;
                }
                std::string word = apply_synonym(map_datatype(reformulate_word(quoted, kb), kb), kb);
                if (auto verb = associate_verb(word, kb)) {
                    push_unique(verbs, *verb);
                }
                push_unique(words, std::move(word));
            }
            std::vector<std::string> terms{kind};
            terms.insert(terms.end(), words.begin(), words.end());
            terms.insert(terms.end(), verbs.begin(), verbs.end());
            text = join(terms, " ");
            break;
        }
        case KindTag::SyntaxError: {
            plan.mistake = detect_common_syntax_mistake(err);
            const LineScan scan = scan_line(trim(error_line_of(err)));
            for (const std::string& token : identifiers(scan.code)) {
                if (token.size() < kMinTypoLength || kb.catalogue.contains(token)) {
                    continue;
                }
                if (auto fixed = fix_typo(token, kb)) {
                    plan.typo_correction = std::move(fixed);
                    break;
                }
            }
            text = plan.mistake ? std::string(mistake_query_term(*plan.mistake)) : "SyntaxError: invalid syntax";
            break;
        }
        case KindTag::TypeError:
            if (err.description.find("the first argument must be callable") != std::string::npos) {
                text = "must have first callable argument";
            } else if (err.description.find("not all arguments converted during string formatting") !=
                       std::string::npos) {
                text = err.description;
            } else {
                text = type_and_description_query(err).text;
            }
            break;
        case KindTag::IndentationError:
        case KindTag::TabError:
            text = err.description;
            break;
        case KindTag::KeyError:
            text = kind;
            break;
        default:
            text = type_and_description_query(err).text;
            break;
    }

    std::replace(text.begin(), text.end(), '\n', ' ');
    text = std::string(trim(text));
    if (text.empty()) {
        throw EmptyQuery();
    }
    return plan;
}

QueryPlan plan_query(const ParsedError& err, const KnowledgeTables& kb) {
    try {
        return build_query(err, kb);
    } catch (const EmptyQuery&) {
        QueryPlan plan;
        plan.query = type_and_description_query(err);
        return plan;
    }
}

}  // namespace errlens
