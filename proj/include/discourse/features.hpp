#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace discourse {

/// Sparse feature vector: (feature id, value) pairs sorted by id, no zeros.
struct FeatureVector {
  std::vector<std::pair<int, double>> entries;

  bool empty() const noexcept { return entries.empty(); }
  size_t size() const noexcept { return entries.size(); }
  auto begin() const noexcept { return entries.begin(); }
  auto end() const noexcept { return entries.end(); }

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

/// String -> id interning in first-seen order. Tabs and newlines in names are
/// replaced by '_' so every name fits on one model-file field.
class FeatureVocabulary {
 public:
  int intern(std::string_view name);
  std::optional<int> find(std::string_view name) const;
  const std::string& name(int id) const { return names_.at(id); }
  int size() const noexcept { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  std::unordered_map<std::string, int> ids_;
  std::vector<std::string> names_;
};

/// Binary vector over `names`, interning unseen names.
FeatureVector make_binary_vector(std::span<const std::string> names, FeatureVocabulary& vocab);

/// Binary vector over `names`; names missing from `vocab` are dropped.
FeatureVector lookup_binary_vector(std::span<const std::string> names, const FeatureVocabulary& vocab);

}  // namespace discourse
