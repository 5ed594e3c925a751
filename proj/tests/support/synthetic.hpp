#pragma once

#include <string>
#include <vector>

#include "discourse/document.hpp"
#include "discourse/rst_parser.hpp"
#include "discourse/rst_tree.hpp"
#include "random_trees.hpp"

namespace discourse::support {

/// Generated document with gold EDUs and a gold `.dis` tree.
///
/// Sentences are built from "DT NN VBD NNS" clauses joined by connectives;
/// the token after every comma starts a new EDU. Sentence trees depend only on
/// the connective ("because" -> explanation, "although" -> concession,
/// "he said" -> attribution, "and" -> list). Sentences in a paragraph hang off
/// the first one as elaborations, paragraphs form a textual-organization list.
struct SyntheticDocument {
  Document document;
  RstNode tree;  // n-ary, fine-grained labels, with leaf text
};

SyntheticDocument synthetic_document(Rng& rng, std::string id);

/// Same grammar with exactly `num_edus` EDUs.
SyntheticDocument synthetic_document_with_edus(Rng& rng, std::string id, int num_edus);

std::vector<SyntheticDocument> synthetic_corpus(Rng& rng, int count, const std::string& prefix);

/// Collapsed, binarized gold tree of `doc` (referenced, not copied).
ParserExample parser_example(const SyntheticDocument& doc);

std::vector<ParserExample> parser_examples(const std::vector<SyntheticDocument>& docs);

}  // namespace discourse::support
