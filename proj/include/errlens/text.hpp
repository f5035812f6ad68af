#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace errlens {

/// Decodes named (&gt; &lt; &amp; &quot; &apos; &nbsp; ...) and numeric
/// (&#62; &#x3E;) character references. Unknown or malformed references are
/// left as written. A single pass; see clean_format for repeated decoding.
std::string decode_entities(std::string_view text);

/// Splits prose on '.', '!' or '?' followed by whitespace. Abbreviations such
/// as "e.g." and "i.e." and ellipses do not end a sentence. Sentences are
/// trimmed; empty ones are dropped.
std::vector<std::string> split_sentences(std::string_view text);

/// Replaces every run of whitespace with one space and trims the ends.
std::string collapse_whitespace(std::string_view text);

}  // namespace errlens
