#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "discourse/document.hpp"
#include "discourse/head_rules.hpp"

namespace discourse {

using Json = nlohmann::ordered_json;

/// One JSON Lines record: the raw object (kept so unknown fields survive a
/// round trip) and the document built from it.
struct DocumentRecord {
  Json raw;
  Document document;
};

/// Builds a document from
/// {"doc_id", "sentences": [{"tokens": [{"form", "pos"}], "parse", "paragraph_start"}],
///  "edus"?: [[start, end], ...], "rst"?: ".dis text"}.
/// EDU spans are half-open document token offsets. Throws DataError.
Document document_from_json(const Json& j, const HeadRuleTable& rules = HeadRuleTable::standard(),
                            const WarningSink& warn = {});

/// Inverse of document_from_json.
Json document_to_json(const Document& doc);

Json edus_to_json(std::span<const Edu> edus);

/// Reads every non-blank line of `in`. Malformed JSON is a ParseError
/// carrying the line number.
std::vector<DocumentRecord> read_jsonl(std::istream& in, const HeadRuleTable& rules = HeadRuleTable::standard(),
                                       const WarningSink& warn = {});

void write_jsonl(std::ostream& out, const Json& record);

}  // namespace discourse
