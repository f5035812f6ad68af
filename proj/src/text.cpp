#include "errlens/text.hpp"

#include <array>
#include <charconv>
#include <cstdint>

#include "text_util.hpp"

namespace errlens {
namespace {

struct NamedEntity {
    std::string_view name;
    std::string_view utf8;
};

constexpr std::array<NamedEntity, 24> kNamedEntities = {{
    {"amp", "&"},        {"lt", "<"},          {"gt", ">"},          {"quot", "\""},
    {"apos", "'"},       {"nbsp", " "},        {"#39", "'"},         {"hellip", "\xE2\x80\xA6"},
    {"mdash", "\xE2\x80\x94"}, {"ndash", "\xE2\x80\x93"}, {"lsquo", "\xE2\x80\x98"}, {"rsquo", "\xE2\x80\x99"},
    {"ldquo", "\xE2\x80\x9C"}, {"rdquo", "\xE2\x80\x9D"}, {"copy", "\xC2\xA9"},   {"reg", "\xC2\xAE"},
    {"times", "\xC3\x97"},     {"divide", "\xC3\xB7"},    {"laquo", "\xC2\xAB"},  {"raquo", "\xC2\xBB"},
    {"middot", "\xC2\xB7"},    {"deg", "\xC2\xB0"},       {"rarr", "\xE2\x86\x92"}, {"larr", "\xE2\x86\x90"},
}};

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

bool decode_numeric(std::string_view body, std::string& out) {
    if (body.size() < 2 || body[0] != '#') {
        return false;
    }
    int base = 10;
    std::string_view digits = body.substr(1);
    if (digits.front() == 'x' || digits.front() == 'X') {
        base = 16;
        digits.remove_prefix(1);
    }
    std::uint32_t cp = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), cp, base);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || cp == 0 || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
        return false;
    }
    if (cp == 0xA0) {
        cp = ' ';
    }
    append_utf8(out, cp);
    return true;
}

constexpr std::array<std::string_view, 12> kAbbreviations = {
    "e.g.", "i.e.", "etc.", "vs.", "cf.", "approx.", "Mr.", "Mrs.", "Dr.", "Ms.", "St.", "eg.",
};

bool ends_with_abbreviation(std::string_view text_up_to_period) {
    for (std::string_view abbr : kAbbreviations) {
        if (!ends_with(text_up_to_period, abbr)) {
            continue;
        }
        const std::size_t start = text_up_to_period.size() - abbr.size();
        if (start == 0 || !is_alpha(text_up_to_period[start - 1])) {
            return true;
        }
    }
    return false;
}

}  // namespace

std::string decode_entities(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '&') {
            out += text[i++];
            continue;
        }
        const auto semi = text.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 12) {
            out += text[i++];
            continue;
        }
        const std::string_view body = text.substr(i + 1, semi - i - 1);
        bool decoded = false;
        for (const NamedEntity& entity : kNamedEntities) {
            if (entity.name == body) {
                out += entity.utf8;
                decoded = true;
                break;
            }
        }
        if (!decoded) {
            decoded = decode_numeric(body, out);
        }
        if (decoded) {
            i = semi + 1;
        } else {
            out += text[i++];
        }
    }
    return out;
}

std::string collapse_whitespace(std::string_view text) {
    std::string out;
    bool pending_space = false;
    for (char c : text) {
        if (is_space(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out += ' ';
            pending_space = false;
        }
        out += c;
    }
    return out;
}

std::vector<std::string> split_sentences(std::string_view text) {
    const std::string flat = collapse_whitespace(text);
    std::vector<std::string> sentences;
    std::size_t start = 0;
    for (std::size_t i = 0; i < flat.size(); ++i) {
        const char c = flat[i];
        if (c != '.' && c != '!' && c != '?') {
            continue;
        }
        // sentence-final punctuation may be followed by closing quotes/brackets
        std::size_t end = i + 1;
        while (end < flat.size() && (flat[end] == '"' || flat[end] == '\'' || flat[end] == ')')) {
            ++end;
        }
        if (end < flat.size() && flat[end] != ' ') {
            continue;
        }
        if (c == '.') {
            const std::string_view upto(flat.data(), i + 1);
            if ((i > 0 && flat[i - 1] == '.') || ends_with_abbreviation(upto)) {
                continue;
            }
        }
        const std::string_view sentence = trim(std::string_view(flat).substr(start, end - start));
        if (!sentence.empty()) {
            sentences.emplace_back(sentence);
        }
        start = end;
        i = end - 1;
    }
    const std::string_view tail = trim(std::string_view(flat).substr(std::min(start, flat.size())));
    if (!tail.empty()) {
        sentences.emplace_back(tail);
    }
    return sentences;
}

}  // namespace errlens
