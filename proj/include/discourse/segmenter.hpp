#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "discourse/crf.hpp"
#include "discourse/document.hpp"

namespace discourse {

enum class SegTag { begin = 0, inside = 1 };

inline constexpr std::string_view kBeginTag = "B-EDU";
inline constexpr std::string_view kInsideTag = "C-EDU";

std::vector<std::string> segmentation_tags();

/// Feature strings for token `position`. Word/POS features for the tokens at
/// offsets -2..+2 and, for each of those tokens that has a successor, label +
/// head word / head POS of: the lowest common ancestor with the successor, its
/// children containing the token and the successor, its parent and its right
/// sibling. Every string is prefixed `<template>[<offset>]=`.
std::vector<std::string> segment_features(const Sentence& sentence, int position);

/// Per-sentence gold tags derived from EDU starts.
std::vector<std::vector<SegTag>> edus_to_tags(const Document& doc, std::span<const Edu> edus);

/// Inverse of edus_to_tags; position 0 of each sentence always begins an EDU.
std::vector<Edu> tags_to_edus(const Document& doc, const std::vector<std::vector<SegTag>>& tags);

/// Per-sentence training sequences; interns features into `vocab`.
std::vector<TaggedSequence> segmentation_sequences(std::span<const Document> corpus, FeatureVocabulary& vocab);

/// Trains the l2 CRF tagger on documents with gold EDUs.
CrfModel train_segmenter(std::span<const Document> corpus, double c, const OptimizerOptions& options = {});

/// Viterbi-tags each sentence and forces a boundary at every sentence start.
std::vector<Edu> segment(const Document& doc, const CrfModel& model);

}  // namespace discourse
