#include "discourse/rst_parser.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "discourse/errors.hpp"

namespace discourse {

ParserInstances parser_instances(std::span<const ParserExample> corpus) {
  ParserInstances out;
  std::vector<std::vector<Action>> oracles;
  std::set<std::string> seen;
  for (const auto& ex : corpus) {
    const std::string& id = ex.document->id;
    if (count_leaves(ex.gold) != static_cast<int>(ex.edus.size()))
      throw DataError(id, "gold tree has " + std::to_string(count_leaves(ex.gold)) + " leaves but the document has " +
                              std::to_string(ex.edus.size()) + " EDUs");
    try {
      oracles.push_back(oracle_actions(ex.gold));
    } catch (const Error& e) {
      throw DataError(id, std::string("oracle failed: ") + e.what());
    }
    for (const auto& a : oracles.back()) seen.insert(a.to_string());
  }
  out.classes.assign(seen.begin(), seen.end());
  std::map<std::string, int> index;
  for (size_t i = 0; i < out.classes.size(); ++i) index[out.classes[i]] = static_cast<int>(i);

  for (size_t d = 0; d < corpus.size(); ++d) {
    const auto& ex = corpus[d];
    const auto ctx = make_parse_context(*ex.document, ex.edus);
    try {
      auto state = ParserState::initial(static_cast<int>(ex.edus.size()));
      for (const auto& a : oracles[d]) {
        const auto names = parse_feature_names(state, ctx);
        out.instances.push_back({make_binary_vector(names, out.vocab), index.at(a.to_string())});
        state = state.apply(a);
      }
    } catch (const DataError&) {
      throw;
    } catch (const Error& e) {
      throw DataError(ex.document->id, std::string("oracle replay failed: ") + e.what());
    }
  }
  return out;
}

MaxentModel train_parser(std::span<const ParserExample> corpus, double c, const OptimizerOptions& options) {
  auto data = parser_instances(corpus);
  if (data.instances.empty()) throw InputError("parser training corpus is empty");
  return train_maxent(std::move(data.classes), std::move(data.vocab), data.instances, c, options);
}

RstParser::RstParser(MaxentModel model) : model_(std::move(model)) {
  inventory_.reserve(model_.classes().size());
  for (const auto& c : model_.classes()) inventory_.push_back(Action::parse(c));
}

std::vector<double> RstParser::action_log_probabilities(const ParserState& state, const ParseContext& ctx) const {
  return model_.log_probabilities(extract_parse_features(state, ctx, model_.features()));
}

namespace {

void check_input(std::span<const Edu> edus) {
  if (edus.empty()) throw InputError("cannot parse a document without EDUs");
}

}  // namespace

ParseResult RstParser::parse_greedy(const Document& doc, std::span<const Edu> edus) const {
  check_input(edus);
  const auto ctx = make_parse_context(doc, edus);
  auto state = ParserState::initial(static_cast<int>(edus.size()));
  ParseResult result;
  while (!state.is_terminal()) {
    const auto lp = action_log_probabilities(state, ctx);
    int best = -1;
    for (int i = 0; i < static_cast<int>(inventory_.size()); ++i)
      if (state.is_legal(inventory_[i]) && (best < 0 || lp[i] > lp[best])) best = i;
    if (best < 0) throw Error("no legal action in state: " + state.summary());
    result.score += lp[best];
    result.actions.push_back(inventory_[best]);
    state = state.apply(inventory_[best]);
  }
  result.tree = to_rst_node(state.stack_item(0));
  return result;
}

namespace {

struct Hypothesis {
  ParserState state;
  double score = 0.0;
  std::vector<int> actions;
};

bool better(const Hypothesis& a, const Hypothesis& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.actions < b.actions;
}

}  // namespace

std::vector<ParseResult> RstParser::parse_kbest(const Document& doc, std::span<const Edu> edus, int beam,
                                                int k) const {
  if (beam < 1 || k < 1) throw InputError("beam and k must be positive");
  if (k > beam) throw InputError("k (" + std::to_string(k) + ") exceeds the beam size (" + std::to_string(beam) + ")");
  check_input(edus);
  const auto ctx = make_parse_context(doc, edus);

  std::vector<Hypothesis> active{{ParserState::initial(static_cast<int>(edus.size())), 0.0, {}}};
  std::vector<Hypothesis> finished;
  if (active.front().state.is_terminal()) finished = std::move(active);

  while (!active.empty()) {
    std::vector<Hypothesis> next;
    for (const auto& h : active) {
      const auto lp = action_log_probabilities(h.state, ctx);
      for (int i = 0; i < static_cast<int>(inventory_.size()); ++i) {
        if (!h.state.is_legal(inventory_[i])) continue;
        Hypothesis c{h.state.apply(inventory_[i]), h.score + lp[i], h.actions};
        c.actions.push_back(i);
        next.push_back(std::move(c));
      }
    }
    if (next.empty() && finished.empty()) throw Error("beam search found no legal action");
    std::sort(next.begin(), next.end(), better);
    if (static_cast<int>(next.size()) > beam) next.resize(beam);

    active.clear();
    for (auto& h : next) {
      if (h.state.is_terminal())
        finished.push_back(std::move(h));
      else
        active.push_back(std::move(h));
    }
    std::sort(finished.begin(), finished.end(), better);
    if (static_cast<int>(finished.size()) > k) finished.resize(k);
    // Log-probabilities are never positive, so an active hypothesis already
    // below the k-th finished score cannot overtake it.
    if (static_cast<int>(finished.size()) == k) {
      const double bound = finished.back().score;
      std::erase_if(active, [&](const Hypothesis& h) { return h.score < bound; });
    }
  }

  std::vector<ParseResult> out;
  for (const auto& h : finished) {
    ParseResult r;
    r.tree = to_rst_node(h.state.stack_item(0));
    r.score = h.score;
    for (int i : h.actions) r.actions.push_back(inventory_[i]);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace discourse
