#include "discourse/segmenter.hpp"

#include "discourse/errors.hpp"

namespace discourse {

std::vector<std::string> segmentation_tags() { return {std::string(kBeginTag), std::string(kInsideTag)}; }

std::vector<std::string> segment_features(const Sentence& sentence, int position) {
  const int n = sentence.size();
  if (position < 0 || position >= n) throw InputError("segment feature position out of range");
  const auto& tree = sentence.parse;
  std::vector<std::string> out;
  out.reserve(64);
  out.emplace_back("bias");

  auto node_features = [&](const char* name, const std::string& off, int node) {
    if (node < 0) return;
    const auto& nd = tree.node(node);
    const auto& head = sentence.tokens[nd.head_token];
    out.push_back(std::string(name) + ".w[" + off + "]=" + nd.label + "|" + lowercase(head.form));
    out.push_back(std::string(name) + ".p[" + off + "]=" + nd.label + "|" + head.pos);
  };

  for (int o = -2; o <= 2; ++o) {
    const int t = position + o;
    if (t < 0 || t >= n) continue;
    const std::string off = std::to_string(o);
    out.push_back("w[" + off + "]=" + lowercase(sentence.tokens[t].form));
    out.push_back("p[" + off + "]=" + sentence.tokens[t].pos);
    if (t + 1 >= n) continue;

    const int np = tree.common_ancestor(t, t + 1);
    int left_child = -1;
    int right_child = -1;
    for (int c : tree.node(np).children) {
      if (tree.node(c).span.contains(t)) left_child = c;
      if (tree.node(c).span.contains(t + 1)) right_child = c;
    }
    node_features("np", off, np);
    node_features("npl", off, left_child);
    node_features("npr", off, right_child);
    node_features("npp", off, tree.node(np).parent);
    node_features("nps", off, tree.right_sibling(np));
  }
  return out;
}

std::vector<std::vector<SegTag>> edus_to_tags(const Document& doc, std::span<const Edu> edus) {
  std::vector<std::vector<SegTag>> tags;
  for (const auto& s : doc.sentences) tags.emplace_back(s.size(), SegTag::inside);
  for (const auto& e : edus) {
    const int si = doc.sentence_of(e.tokens.lo);
    const auto& s = doc.sentences[si];
    if (!s.document_span().contains(e.tokens))
      throw DataError(doc.id, "EDU " + std::to_string(e.index) + " crosses a sentence boundary");
    tags[si][e.tokens.lo - s.offset] = SegTag::begin;
  }
  return tags;
}

std::vector<Edu> tags_to_edus(const Document& doc, const std::vector<std::vector<SegTag>>& tags) {
  if (tags.size() != doc.sentences.size()) throw InputError("tag sequences do not match sentences");
  std::vector<Span> spans;
  for (size_t si = 0; si < doc.sentences.size(); ++si) {
    const auto& s = doc.sentences[si];
    if (static_cast<int>(tags[si].size()) != s.size()) throw InputError("tag sequence length differs from sentence");
    int start = 0;
    for (int i = 1; i < s.size(); ++i) {
      if (tags[si][i] == SegTag::begin) {
        spans.push_back({s.offset + start, s.offset + i});
        start = i;
      }
    }
    spans.push_back({s.offset + start, s.offset + s.size()});
  }
  return make_edus(doc, spans);
}

std::vector<TaggedSequence> segmentation_sequences(std::span<const Document> corpus, FeatureVocabulary& vocab) {
  std::vector<TaggedSequence> data;
  for (const auto& doc : corpus) {
    if (!doc.edus) throw DataError(doc.id, "no gold EDUs for segmenter training");
    auto tags = edus_to_tags(doc, *doc.edus);
    for (size_t si = 0; si < doc.sentences.size(); ++si) {
      const auto& s = doc.sentences[si];
      TaggedSequence seq;
      for (int i = 0; i < s.size(); ++i) {
        seq.positions.push_back(make_binary_vector(segment_features(s, i), vocab));
        seq.tags.push_back(static_cast<int>(tags[si][i]));
      }
      data.push_back(std::move(seq));
    }
  }
  return data;
}

CrfModel train_segmenter(std::span<const Document> corpus, double c, const OptimizerOptions& options) {
  FeatureVocabulary vocab;
  auto data = segmentation_sequences(corpus, vocab);
  return train_crf(segmentation_tags(), std::move(vocab), data, c, options);
}

std::vector<Edu> segment(const Document& doc, const CrfModel& model) {
  if (model.tags() != segmentation_tags()) throw InputError("model is not a segmentation model (tags must be B-EDU, C-EDU)");
  std::vector<std::vector<SegTag>> tags;
  for (const auto& s : doc.sentences) {
    if (s.parse.empty()) throw DataError(doc.id, "sentence without a parse");
    std::vector<FeatureVector> seq;
    seq.reserve(s.size());
    for (int i = 0; i < s.size(); ++i) seq.push_back(lookup_binary_vector(segment_features(s, i), model.features()));
    auto path = crf_viterbi(model, seq);
    std::vector<SegTag> st;
    st.reserve(path.size());
    for (int y : path) st.push_back(static_cast<SegTag>(y));
    st[0] = SegTag::begin;
    tags.push_back(std::move(st));
  }
  return tags_to_edus(doc, tags);
}

}  // namespace discourse
