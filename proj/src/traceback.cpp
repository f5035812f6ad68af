#include "errlens/traceback.hpp"

#include <algorithm>
#include <regex>
#include <unordered_set>

#include "text_util.hpp"

namespace errlens {
namespace {

struct Frame {
    std::string file;
    std::size_t line = 0;
    std::size_t first_body_line = 0;  // index of the line right after the frame header
};

bool looks_like_exception_token(std::string_view token) {
    if (ErrorKind::from_token(token).tag() != KindTag::Other) {
        return true;
    }
    const auto last_dot = token.rfind('.');
    const std::string_view leaf = last_dot == std::string_view::npos ? token : token.substr(last_dot + 1);
    for (std::string_view suffix : {"Error", "Exception", "Warning", "Interrupt", "Exit", "Iteration"}) {
        if (ends_with(leaf, suffix)) {
            return true;
        }
    }
    return false;
}

bool is_chain_separator(std::string_view line) {
    return starts_with(line, "During handling of the above exception") ||
           starts_with(line, "The above exception was the direct cause");
}

bool is_caret_line(std::string_view line) {
    bool has_caret = false;
    for (char c : line) {
        if (c == '^') {
            has_caret = true;
        } else if (c != ' ' && c != '~' && c != '\t') {
            return false;
        }
    }
    return has_caret;
}

bool same_source(const std::filesystem::path& frame_file, const std::filesystem::path& source) {
    if (source.empty()) {
        return false;
    }
    const auto frame_norm = frame_file.lexically_normal();
    const auto source_norm = source.lexically_normal();
    if (frame_norm == source_norm) {
        return true;
    }
    if (source_norm.is_relative()) {
        const std::string frame_str = frame_norm.generic_string();
        const std::string source_str = source_norm.generic_string();
        if (ends_with(frame_str, "/" + source_str)) {
            return true;
        }
    }
    std::error_code ec_a;
    std::error_code ec_b;
    const auto a = std::filesystem::weakly_canonical(frame_file, ec_a);
    const auto b = std::filesystem::weakly_canonical(source, ec_b);
    return !ec_a && !ec_b && a == b;
}

std::string_view strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool is_dotted_name(std::string_view name) {
    if (name.empty() || !(is_ident_start(name.front()))) {
        return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) { return is_ident_char(c) || c == '.'; });
}

}  // namespace

ParsedError parse_traceback(const RawCapture& capture) {
    const std::vector<std::string> lines = split_lines(capture.stderr_text);

    static const std::regex final_line(R"(^([A-Za-z_][A-Za-z0-9_.]*)(?:(:)(?: (.*))?)?$)");
    static const std::regex frame_line(R"f(^\s*File "(.*)", line (\d+)(?:, in .*)?$)f");

    std::optional<std::size_t> error_index;
    std::smatch match;
    for (std::size_t i = lines.size(); i-- > 0;) {
        const std::string& line = lines[i];
        if (line.empty() || line.front() == ' ' || line.front() == '\t') {
            continue;
        }
        if (!std::regex_match(line, match, final_line)) {
            continue;
        }
        const std::string token = match[1].str();
        const bool has_frames = std::any_of(lines.begin(), lines.begin() + static_cast<std::ptrdiff_t>(i),
                                            [](const std::string& l) { return starts_with(trim_left(l), "File \""); });
        if (looks_like_exception_token(token) || (has_frames && match[2].matched)) {
            error_index = i;
            break;
        }
    }
    if (!error_index) {
        throw NotAnError();
    }

    ParsedError parsed;
    {
        std::regex_match(lines[*error_index], match, final_line);
        parsed.kind = ErrorKind::from_token(match[1].str());
        parsed.description = match[3].matched ? match[3].str() : std::string();
    }

    // Only the final block of a chained traceback is considered.
    std::size_t block_start = 0;
    for (std::size_t i = 0; i < *error_index; ++i) {
        if (is_chain_separator(lines[i])) {
            block_start = i + 1;
        }
    }

    std::vector<Frame> frames;
    for (std::size_t i = block_start; i < *error_index; ++i) {
        if (std::regex_match(lines[i], match, frame_line)) {
            frames.push_back(Frame{match[1].str(), std::stoul(match[2].str()), i + 1});
        }
    }

    const Frame* chosen = nullptr;
    for (const Frame& frame : frames) {
        if (same_source(frame.file, capture.source_path)) {
            chosen = &frame;
        }
    }
    if (chosen == nullptr && !frames.empty()) {
        chosen = &frames.back();
    }

    if (chosen == nullptr) {
        parsed.file = capture.source_path;
    } else {
        parsed.file = chosen->file;
        parsed.line_number = chosen->line;
        const std::size_t body = chosen->first_body_line;
        if (body < *error_index && !std::regex_match(lines[body], frame_line) && !is_caret_line(lines[body]) &&
            !lines[body].empty() && (lines[body].front() == ' ' || lines[body].front() == '\t')) {
            const std::string& printed = lines[body];
            const std::size_t indent = printed.find_first_not_of(" \t");
            parsed.offending_line = std::string(trim_right(std::string_view(printed).substr(indent)));
            for (std::size_t j = body + 1; j < *error_index && j <= body + 2; ++j) {
                if (!is_caret_line(lines[j])) {
                    continue;
                }
                const std::size_t caret = lines[j].find('^');
                const std::size_t column = caret > indent ? caret - indent : 0;
                parsed.caret_column = std::min(column, parsed.offending_line.size() + 1);
                break;
            }
        }
    }

    if (!capture.source_text.empty() && parsed.line_number > 0 && same_source(parsed.file, capture.source_path)) {
        const std::vector<std::string> source_lines = split_lines(capture.source_text);
        if (parsed.line_number <= source_lines.size()) {
            parsed.source_line = std::string(trim(source_lines[parsed.line_number - 1]));
        }
    }

    parsed.imports = extract_imports(capture.source_text);
    return parsed;
}

std::vector<std::string> extract_imports(std::string_view source_text) {
    std::vector<std::string> modules;
    std::unordered_set<std::string> seen;
    const auto add = [&](std::string_view name) {
        while (!name.empty() && name.front() == '.') {
            name.remove_prefix(1);
        }
        if (!is_dotted_name(name)) {
            return;
        }
        if (seen.emplace(name).second) {
            modules.emplace_back(name);
        }
    };

    for (const std::string& raw_line : split_lines(source_text)) {
        for (std::string_view statement : split(strip_comment(raw_line), ';')) {
            statement = trim(statement);
            if (starts_with_word(statement, "import")) {
                for (std::string_view item : split(statement.substr(6), ',')) {
                    item = trim(item);
                    // `a.b as c` keeps `a.b`
                    const auto space = item.find_first_of(" \t");
                    add(trim(item.substr(0, space)));
                }
            } else if (starts_with_word(statement, "from")) {
                std::string_view rest = trim(statement.substr(4));
                const auto space = rest.find_first_of(" \t");
                if (space == std::string_view::npos) {
                    continue;
                }
                if (!starts_with_word(trim(rest.substr(space)), "import")) {
                    continue;
                }
                add(rest.substr(0, space));
            }
        }
    }
    return modules;
}

std::vector<std::string> extract_quoted_words(std::string_view description) {
    std::vector<std::string> words;
    std::size_t pos = 0;
    while (true) {
        const auto open = description.find('\'', pos);
        if (open == std::string_view::npos) {
            break;
        }
        const auto close = description.find('\'', open + 1);
        if (close == std::string_view::npos) {
            break;
        }
        words.emplace_back(description.substr(open + 1, close - open - 1));
        pos = close + 1;
    }
    return words;
}

}  // namespace errlens
