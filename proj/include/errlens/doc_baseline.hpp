#pragma once

#include <stdexcept>
#include <string>

#include "errlens/error_kind.hpp"
#include "errlens/knowledge.hpp"
#include "errlens/summarizer.hpp"

namespace errlens {

class UnknownKind : public std::runtime_error {
public:
    explicit UnknownKind(const std::string& token)
        : std::runtime_error("no documentation excerpt for " + token) {}
};

/// The bundled excerpt for `kind`, sentence-split and not summarized.
EnhancedMessage doc_message(const ErrorKind& kind, const KnowledgeTables& kb);

}  // namespace errlens
