#include "discourse/model_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "discourse/errors.hpp"

namespace discourse {
namespace {

constexpr const char* kMagic = "#discourse-model";
constexpr const char* kTransition = "__TRANS__";

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

double parse_double(const std::string& s, int line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad number '" + s + "'", line, 1);
  return value;
}

struct Header {
  std::string kind;
  double c = 0.0;
  std::vector<std::string> labels;
};

void write_header(std::ostream& out, const char* kind, double c, const std::vector<std::string>& labels) {
  out << kMagic << '\t' << kModelFormatVersion << '\n';
  out << "kind\t" << kind << '\n';
  out << "c\t" << format_double(c) << '\n';
  out << "labels";
  for (const auto& l : labels) out << '\t' << l;
  out << '\n';
}

Header read_header(std::istream& in, const std::string& expected_kind, int& line_no) {
  std::string line;
  auto next = [&]() -> std::vector<std::string> {
    if (!std::getline(in, line)) throw ParseError("truncated model header", line_no + 1, 1);
    ++line_no;
    return split_tabs(line);
  };
  auto magic = next();
  if (magic.size() != 2 || magic[0] != kMagic) throw ParseError("not a discourse model file", line_no, 1);
  if (magic[1] != std::to_string(kModelFormatVersion))
    throw ParseError("unsupported model format version " + magic[1], line_no, 1);
  Header h;
  auto kind = next();
  if (kind.size() != 2 || kind[0] != "kind") throw ParseError("expected kind line", line_no, 1);
  h.kind = kind[1];
  if (h.kind != expected_kind)
    throw ParseError("model kind is " + h.kind + ", expected " + expected_kind, line_no, 1);
  auto c = next();
  if (c.size() != 2 || c[0] != "c") throw ParseError("expected c line", line_no, 1);
  h.c = parse_double(c[1], line_no);
  auto labels = next();
  if (labels.size() < 2 || labels[0] != "labels") throw ParseError("expected labels line", line_no, 1);
  h.labels.assign(labels.begin() + 1, labels.end());
  return h;
}

std::unordered_map<std::string, int> index_labels(const std::vector<std::string>& labels) {
  std::unordered_map<std::string, int> idx;
  for (size_t i = 0; i < labels.size(); ++i) idx.emplace(labels[i], static_cast<int>(i));
  return idx;
}

template <class Fn>
void read_weight_lines(std::istream& in, int& line_no, Fn&& fn) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    if (fields.size() != 3) throw ParseError("weight line needs three tab-separated fields", line_no, 1);
    fn(fields[0], fields[1], parse_double(fields[2], line_no));
  }
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write model file " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read model file " + path.string());
  return in;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

void save_model(std::ostream& out, const CrfModel& model) {
  write_header(out, "crf", model.c(), model.tags());
  const auto& tags = model.tags();
  for (int f = 0; f < model.num_features(); ++f)
    for (int y = 0; y < model.num_tags(); ++y) {
      const double w = model.emission(f, y);
      if (w != 0.0) out << model.features().name(f) << '\t' << tags[y] << '\t' << format_double(w) << '\n';
    }
  for (int p = 0; p < model.num_tags(); ++p)
    for (int y = 0; y < model.num_tags(); ++y) {
      const double w = model.transition(p, y);
      if (w != 0.0) out << kTransition << '\t' << tags[p] << '|' << tags[y] << '\t' << format_double(w) << '\n';
    }
}

void save_model(std::ostream& out, const MaxentModel& model) {
  write_header(out, "maxent", model.c(), model.classes());
  for (int f = 0; f < model.num_features(); ++f)
    for (const auto& e : model.row(f))
      out << model.features().name(f) << '\t' << model.classes()[e.label] << '\t' << format_double(e.weight) << '\n';
}

void save_model(const std::filesystem::path& path, const CrfModel& model) {
  auto out = open_out(path);
  save_model(out, model);
}

void save_model(const std::filesystem::path& path, const MaxentModel& model) {
  auto out = open_out(path);
  save_model(out, model);
}

CrfModel load_crf_model(std::istream& in) {
  int line_no = 0;
  Header h = read_header(in, "crf", line_no);
  auto tag_index = index_labels(h.labels);
  auto tag_of = [&](const std::string& t) {
    auto it = tag_index.find(t);
    if (it == tag_index.end()) throw ParseError("unknown tag '" + t + "'", line_no, 1);
    return it->second;
  };
  struct Pending {
    int feature;
    int tag;
    double w;
  };
  FeatureVocabulary vocab;
  std::vector<Pending> emissions;
  std::vector<std::pair<std::pair<int, int>, double>> transitions;
  read_weight_lines(in, line_no, [&](const std::string& feat, const std::string& label, double w) {
    if (feat == kTransition) {
      auto bar = label.find('|');
      if (bar == std::string::npos) throw ParseError("transition needs from|to", line_no, 1);
      transitions.push_back({{tag_of(label.substr(0, bar)), tag_of(label.substr(bar + 1))}, w});
    } else {
      emissions.push_back({vocab.intern(feat), tag_of(label), w});
    }
  });
  CrfModel model(h.labels, std::move(vocab), h.c);
  std::vector<double> weights(model.weights().begin(), model.weights().end());
  for (const auto& e : emissions) weights[model.emission_index(e.feature, e.tag)] = e.w;
  for (const auto& [pair, w] : transitions) weights[model.transition_index(pair.first, pair.second)] = w;
  model.set_weights(std::move(weights));
  return model;
}

MaxentModel load_maxent_model(std::istream& in) {
  int line_no = 0;
  Header h = read_header(in, "maxent", line_no);
  auto class_index = index_labels(h.labels);
  FeatureVocabulary vocab;
  std::vector<double> dense;
  const size_t K = h.labels.size();
  read_weight_lines(in, line_no, [&](const std::string& feat, const std::string& label, double w) {
    auto it = class_index.find(label);
    if (it == class_index.end()) throw ParseError("unknown class '" + label + "'", line_no, 1);
    const int f = vocab.intern(feat);
    if (dense.size() < (static_cast<size_t>(f) + 1) * K) dense.resize((static_cast<size_t>(f) + 1) * K, 0.0);
    dense[f * K + it->second] = w;
  });
  return MaxentModel(h.labels, std::move(vocab), dense, h.c);
}

CrfModel load_crf_model(const std::filesystem::path& path) {
  auto in = open_in(path);
  return load_crf_model(in);
}

MaxentModel load_maxent_model(const std::filesystem::path& path) {
  auto in = open_in(path);
  return load_maxent_model(in);
}

}  // namespace discourse
