#include <gtest/gtest.h>

#include <sstream>

#include "discourse/errors.hpp"
#include "discourse/json_io.hpp"
#include "synthetic.hpp"

using namespace discourse;

TEST(JsonIo, RoundTripsSyntheticDocuments) {
  support::Rng rng(1);
  for (int i = 0; i < 10; ++i) {
    const auto doc = support::synthetic_document(rng, "doc" + std::to_string(i)).document;
    const Json j = document_to_json(doc);
    const Document back = document_from_json(j);
    EXPECT_EQ(back.id, doc.id);
    EXPECT_EQ(back.num_tokens(), doc.num_tokens());
    EXPECT_EQ(*back.edus, *doc.edus);
    EXPECT_EQ(*back.rst, *doc.rst);
    EXPECT_EQ(document_to_json(back), j);
  }
}

TEST(JsonIo, JsonlKeepsUnknownFields) {
  std::istringstream in(
      R"J({"doc_id":"a","extra":7,"sentences":[{"tokens":[{"form":"Hi","pos":"UH"}],"parse":"(INTJ (UH Hi))","paragraph_start":true}]})J"
      "\n\n");
  const auto recs = read_jsonl(in);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].raw["extra"], 7);
  EXPECT_FALSE(recs[0].document.edus.has_value());
  std::ostringstream out;
  write_jsonl(out, recs[0].raw);
  EXPECT_EQ(out.str().find("\"doc_id\":\"a\",\"extra\":7"), 1u);
}

TEST(JsonIo, ErrorsCarryLineOrDocument) {
  std::istringstream bad_json("{\"doc_id\": }\n");
  EXPECT_THROW(read_jsonl(bad_json), ParseError);
  std::istringstream bad_doc(R"J({"doc_id":"z","sentences":[{"tokens":[{"form":"a","pos":"DT"}],"parse":"(NP (DT a) (NN b))"}]})J");
  try {
    read_jsonl(bad_doc);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_EQ(e.document_id(), "z");
  }
  std::istringstream bad_edus(
      R"J({"doc_id":"y","edus":[[0,2]],"sentences":[{"tokens":[{"form":"a","pos":"DT"}],"parse":"(NP (DT a))"}]})J");
  EXPECT_THROW(read_jsonl(bad_edus), DataError);
}
