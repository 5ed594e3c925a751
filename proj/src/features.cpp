#include "discourse/features.hpp"

#include <algorithm>

namespace discourse {
namespace {

std::string clean(std::string_view name) {
  std::string out(name);
  for (auto& ch : out)
    if (ch == '\t' || ch == '\n' || ch == '\r') ch = '_';
  return out;
}

FeatureVector finish(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  FeatureVector v;
  v.entries.reserve(ids.size());
  for (int id : ids) v.entries.emplace_back(id, 1.0);
  return v;
}

}  // namespace

int FeatureVocabulary::intern(std::string_view name) {
  std::string key = clean(name);
  auto [it, inserted] = ids_.try_emplace(key, size());
  if (inserted) names_.push_back(std::move(key));
  return it->second;
}

std::optional<int> FeatureVocabulary::find(std::string_view name) const {
  auto it = ids_.find(clean(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

FeatureVector make_binary_vector(std::span<const std::string> names, FeatureVocabulary& vocab) {
  std::vector<int> ids;
  ids.reserve(names.size());
  for (const auto& n : names) ids.push_back(vocab.intern(n));
  return finish(std::move(ids));
}

FeatureVector lookup_binary_vector(std::span<const std::string> names, const FeatureVocabulary& vocab) {
  std::vector<int> ids;
  ids.reserve(names.size());
  for (const auto& n : names)
    if (auto id = vocab.find(n)) ids.push_back(*id);
  return finish(std::move(ids));
}

}  // namespace discourse
