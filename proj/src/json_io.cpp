#include "discourse/json_io.hpp"

#include <istream>
#include <ostream>

#include "discourse/errors.hpp"
#include "discourse/treebank_io.hpp"

namespace discourse {

namespace {

const Json& member(const Json& j, const char* key, const std::string& id) {
  auto it = j.find(key);
  if (it == j.end()) throw DataError(id, std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

Document document_from_json(const Json& j, const HeadRuleTable& rules, const WarningSink& warn) {
  std::string id;
  try {
    if (!j.is_object()) throw InputError("record is not a JSON object");
    id = member(j, "doc_id", "").get<std::string>();
    std::vector<Sentence> sentences;
    int offset = 0;
    int index = 0;
    for (const auto& js : member(j, "sentences", id)) {
      std::vector<RawToken> tokens;
      for (const auto& jt : member(js, "tokens", id))
        tokens.push_back({member(jt, "form", id).get<std::string>(), jt.value("pos", std::string())});
      SyntaxTree tree = read_ptb(member(js, "parse", id).get<std::string>());
      const bool para = js.value("paragraph_start", false);
      WarningSink sentence_warn;
      if (warn)
        sentence_warn = [&](std::string_view msg) {
          warn("document '" + id + "' sentence " + std::to_string(index) + ": " + std::string(msg));
        };
      auto s = make_sentence(std::move(tokens), std::move(tree), para, offset, rules, sentence_warn);
      offset += s.size();
      sentences.push_back(std::move(s));
      ++index;
    }
    Document doc = make_document(id, std::move(sentences));
    if (auto it = j.find("edus"); it != j.end() && !it->is_null()) {
      std::vector<Span> spans;
      for (const auto& e : *it) {
        if (!e.is_array() || e.size() != 2) throw InputError("EDU spans must be [start, end] pairs");
        spans.push_back({e[0].get<int>(), e[1].get<int>()});
      }
      doc.edus = make_edus(doc, spans);
    }
    if (auto it = j.find("rst"); it != j.end() && !it->is_null()) doc.rst = it->get<std::string>();
    return doc;
  } catch (const DataError&) {
    throw;
  } catch (const Error& e) {
    throw DataError(id, e.what());
  } catch (const nlohmann::json::exception& e) {
    throw DataError(id, std::string("bad document JSON: ") + e.what());
  }
}

Json edus_to_json(std::span<const Edu> edus) {
  Json out = Json::array();
  for (const auto& e : edus) out.push_back({e.tokens.lo, e.tokens.hi});
  return out;
}

Json document_to_json(const Document& doc) {
  Json j;
  j["doc_id"] = doc.id;
  Json sentences = Json::array();
  for (const auto& s : doc.sentences) {
    Json js;
    Json tokens = Json::array();
    for (const auto& t : s.tokens) tokens.push_back({{"form", t.form}, {"pos", t.pos}});
    js["tokens"] = std::move(tokens);
    js["parse"] = s.parse.to_string();
    js["paragraph_start"] = s.paragraph_start;
    sentences.push_back(std::move(js));
  }
  j["sentences"] = std::move(sentences);
  if (doc.edus) j["edus"] = edus_to_json(*doc.edus);
  if (doc.rst) j["rst"] = *doc.rst;
  return j;
}

std::vector<DocumentRecord> read_jsonl(std::istream& in, const HeadRuleTable& rules, const WarningSink& warn) {
  std::vector<DocumentRecord> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what(), number, static_cast<int>(e.byte));
    }
    Document doc = document_from_json(j, rules, warn);
    out.push_back({std::move(j), std::move(doc)});
  }
  return out;
}

void write_jsonl(std::ostream& out, const Json& record) { out << record.dump() << '\n'; }

}  // namespace discourse
