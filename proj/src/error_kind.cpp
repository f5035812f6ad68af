#include "errlens/error_kind.hpp"

#include <stdexcept>

namespace errlens {

std::string_view kind_name(KindTag tag) {
    switch (tag) {
        case KindTag::AttributeError: return "AttributeError";
        case KindTag::NameError: return "NameError";
        case KindTag::SyntaxError: return "SyntaxError";
        case KindTag::TypeError: return "TypeError";
        case KindTag::IndentationError: return "IndentationError";
        case KindTag::TabError: return "TabError";
        case KindTag::KeyError: return "KeyError";
        case KindTag::ImportError: return "ImportError";
        case KindTag::IndexError: return "IndexError";
        case KindTag::ValueError: return "ValueError";
        case KindTag::ZeroDivisionError: return "ZeroDivisionError";
        case KindTag::Other: return "Other";
    }
    return "Other";
}

ErrorKind ErrorKind::from_token(std::string_view token) {
    if (token.empty()) {
        throw std::invalid_argument("error kind token must not be empty");
    }
    for (KindTag tag : kKnownKinds) {
        if (kind_name(tag) == token) {
            return ErrorKind(tag, std::string(token));
        }
    }
    return ErrorKind(KindTag::Other, std::string(token));
}

}  // namespace errlens
