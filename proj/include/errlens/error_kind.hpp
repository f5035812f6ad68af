#pragma once

#include <array>
#include <string>
#include <string_view>

namespace errlens {

enum class KindTag {
    AttributeError,
    NameError,
    SyntaxError,
    TypeError,
    IndentationError,
    TabError,
    KeyError,
    ImportError,
    IndexError,
    ValueError,
    ZeroDivisionError,
    Other,
};

/// Every tag except Other, in declaration order.
inline constexpr std::array<KindTag, 11> kKnownKinds = {
    KindTag::AttributeError,   KindTag::NameError, KindTag::SyntaxError, KindTag::TypeError,
    KindTag::IndentationError, KindTag::TabError,  KindTag::KeyError,    KindTag::ImportError,
    KindTag::IndexError,       KindTag::ValueError, KindTag::ZeroDivisionError,
};

std::string_view kind_name(KindTag tag);

/// The exception type reported on the last line of a traceback. Known types
/// get their own tag; anything else is Other and keeps the literal token.
class ErrorKind {
public:
    /// Throws std::invalid_argument for an empty token.
    static ErrorKind from_token(std::string_view token);

    KindTag tag() const noexcept { return tag_; }
    const std::string& token() const noexcept { return token_; }
    bool is(KindTag tag) const noexcept { return tag_ == tag; }

    friend bool operator==(const ErrorKind&, const ErrorKind&) = default;

private:
    ErrorKind(KindTag tag, std::string token) : tag_(tag), token_(std::move(token)) {}

    KindTag tag_;
    std::string token_;
};

}  // namespace errlens
