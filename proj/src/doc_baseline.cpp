#include "errlens/doc_baseline.hpp"

#include "errlens/text.hpp"

namespace errlens {

EnhancedMessage doc_message(const ErrorKind& kind, const KnowledgeTables& kb) {
    const auto it = kb.doc_excerpts.find(kind.token());
    if (it == kb.doc_excerpts.end()) {
        throw UnknownKind(kind.token());
    }
    EnhancedMessage msg;
    msg.sentences = split_sentences(it->second);
    msg.source_url = "https://docs.python.org/3/library/exceptions.html#" + kind.token();
    return msg;
}

}  // namespace errlens
