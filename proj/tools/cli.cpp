#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "discourse/bench.hpp"
#include "discourse/errors.hpp"
#include "discourse/evaluation.hpp"
#include "discourse/grid_search.hpp"
#include "discourse/json_io.hpp"
#include "discourse/model_io.hpp"
#include "discourse/rst_parser.hpp"
#include "discourse/segmenter.hpp"
#include "discourse/treebank_io.hpp"

namespace discourse::cli {
namespace {

namespace fs = std::filesystem;

// Bad flag values; exits 2 like a CLI11 parse failure.
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string in = "-";
  std::string out = "-";
  std::string gold;
  std::string model;
  std::string seg_model;
  std::string dev;
  std::string report;
  std::string head_rules;
  std::string relation_map;
  std::string task;
  std::vector<std::string> layers;
  double c = 1.0;
  int beam = 1;
  int k = 1;
  int threads = 1;
  int repeat = 3;
  std::optional<int> lo;
  std::optional<int> hi;
  bool actions = false;
};

struct Context {
  const RunConfig& cfg;
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  HeadRuleTable rules;
  RelationMap relations;
};

fs::path model_path(const std::string& p) {
  fs::path path(p);
  if (path.is_relative())
    if (const char* dir = std::getenv("DISCOURSE_MODEL_DIR"); dir != nullptr && *dir != '\0') return fs::path(dir) / path;
  return path;
}

std::vector<DocumentRecord> read_documents(Context& ctx, const std::string& path) {
  WarningSink warn = [&](std::string_view msg) { ctx.err << "warning: " << msg << '\n'; };
  if (path == "-") return read_jsonl(ctx.in, ctx.rules, warn);
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  return read_jsonl(f, ctx.rules, warn);
}

void write_text(Context& ctx, const std::string& path, const std::string& text) {
  if (path == "-") {
    ctx.out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

void write_records(Context& ctx, const std::vector<DocumentRecord>& records) {
  std::ostringstream s;
  for (const auto& r : records) write_jsonl(s, r.raw);
  write_text(ctx, ctx.cfg.out, s.str());
}

/// Runs fn(i) for i in [0, n) on up to `threads` workers. Results are written
/// by index, so output order never depends on scheduling. The exception of
/// the lowest failing index is rethrown.
void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  threads = std::max(1, std::min(threads, n));
  std::vector<std::exception_ptr> errors(n);
  if (threads == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i; (i = next++) < n;) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

const std::vector<Edu>& gold_edus(const Document& doc) {
  if (!doc.edus) throw DataError(doc.id, "document has no 'edus'");
  return *doc.edus;
}

/// Gold tree as the parser and scorer see it: labels collapsed, binarized.
RstNode prepared_tree(const Document& doc, const RelationMap& map) {
  if (!doc.rst) throw DataError(doc.id, "document has no 'rst' tree");
  try {
    RstNode tree = binarize(collapse_labels(read_dis(*doc.rst), map));
    validate(tree);
    const int n = static_cast<int>(gold_edus(doc).size());
    if (count_leaves(tree) != n)
      throw DataError(doc.id, "tree has " + std::to_string(count_leaves(tree)) + " leaves but the document has " +
                                  std::to_string(n) + " EDUs");
    return tree;
  } catch (const DataError&) {
    throw;
  } catch (const Error& e) {
    throw DataError(doc.id, e.what());
  }
}

void attach_text(RstNode& node, const Document& doc, std::span<const Edu> edus) {
  if (node.is_leaf()) {
    const Edu& e = edus[node.leaf];
    const Sentence& s = doc.sentences[e.sentence];
    std::string text;
    for (int t = e.tokens.lo; t < e.tokens.hi; ++t) {
      if (!text.empty()) text += ' ';
      text += s.tokens[t - s.offset].form;
    }
    node.text = std::move(text);
    return;
  }
  for (auto& c : node.children) attach_text(c, doc, edus);
}

std::string render_tree(RstNode binary, const Document& doc, std::span<const Edu> edus) {
  RstNode tree = debinarize(binary);
  attach_text(tree, doc, edus);
  return write_dis(tree);
}

Json prf_json(const PRF& r) {
  return {{"p", r.precision},
          {"r", r.recall},
          {"f1", r.f1},
          {"counts", {{"tp", r.true_positives}, {"predicted", r.predicted}, {"gold", r.gold}}}};
}

std::string prf_row(std::string_view name, const PRF& r) {
  std::ostringstream s;
  s << std::left << std::setw(12) << name << std::right << std::fixed << std::setprecision(4) << std::setw(10)
    << r.precision << std::setw(10) << r.recall << std::setw(10) << r.f1 << "  " << r.true_positives << '/'
    << r.predicted << '/' << r.gold << '\n';
  return s.str();
}

const std::string kTableHeader = "layer                P         R        F1  tp/pred/gold\n";

void write_report(Context& ctx, const Json& j) {
  if (ctx.cfg.report.empty()) return;
  std::ofstream f(ctx.cfg.report);
  if (!f) throw InputError("cannot write '" + ctx.cfg.report + "'");
  f << j.dump(2) << '\n';
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required");
}

// ---------------------------------------------------------------------------
// Segmentation

std::vector<Document> documents_with_edus(std::vector<DocumentRecord>& records) {
  std::vector<Document> docs;
  docs.reserve(records.size());
  for (auto& r : records) {
    gold_edus(r.document);
    docs.push_back(std::move(r.document));
  }
  return docs;
}

CrfModel load_segmenter(const std::string& path) {
  auto model = load_crf_model(model_path(path));
  if (model.tags() != segmentation_tags()) throw InputError("'" + path + "' is not a segmentation model");
  return model;
}

int cmd_seg_train(Context& ctx) {
  require(ctx.cfg.model, "--model");
  auto records = read_documents(ctx, ctx.cfg.in);
  auto docs = documents_with_edus(records);
  auto model = train_segmenter(docs, ctx.cfg.c);
  save_model(model_path(ctx.cfg.model), model);
  return 0;
}

int cmd_seg(Context& ctx) {
  require(ctx.cfg.model, "--model");
  const auto model = load_segmenter(ctx.cfg.model);
  auto records = read_documents(ctx, ctx.cfg.in);
  parallel_for(static_cast<int>(records.size()), ctx.cfg.threads, [&](int i) {
    auto& r = records[i];
    r.raw["edus"] = edus_to_json(segment(r.document, model));
  });
  write_records(ctx, records);
  return 0;
}

PRF segmentation_score(const std::vector<Document>& gold, const std::vector<std::vector<Edu>>& predicted) {
  std::vector<std::vector<SegTag>> g, p;
  for (size_t d = 0; d < gold.size(); ++d) {
    auto gt = edus_to_tags(gold[d], gold_edus(gold[d]));
    auto pt = edus_to_tags(gold[d], predicted[d]);
    g.insert(g.end(), gt.begin(), gt.end());
    p.insert(p.end(), pt.begin(), pt.end());
  }
  return segmentation_prf(g, p);
}

void check_aligned(const std::vector<DocumentRecord>& gold, const std::vector<DocumentRecord>& pred) {
  if (gold.size() != pred.size())
    throw InputError("gold has " + std::to_string(gold.size()) + " documents but the prediction has " +
                     std::to_string(pred.size()));
  for (size_t i = 0; i < gold.size(); ++i) {
    if (gold[i].document.id != pred[i].document.id)
      throw DataError(gold[i].document.id, "prediction line " + std::to_string(i + 1) + " is document '" +
                                               pred[i].document.id + "'");
    if (gold[i].document.num_tokens() != pred[i].document.num_tokens())
      throw DataError(gold[i].document.id, "token counts differ between gold and prediction");
  }
}

int cmd_eval_seg(Context& ctx) {
  require(ctx.cfg.gold, "--gold");
  auto gold = read_documents(ctx, ctx.cfg.gold);
  auto pred = read_documents(ctx, ctx.cfg.in);
  check_aligned(gold, pred);
  std::vector<Document> docs;
  std::vector<std::vector<Edu>> predicted;
  for (size_t i = 0; i < gold.size(); ++i) {
    predicted.push_back(gold_edus(pred[i].document));
    docs.push_back(std::move(gold[i].document));
  }
  const PRF r = segmentation_score(docs, predicted);
  write_text(ctx, ctx.cfg.out, kTableHeader + prf_row("B-EDU", r));
  write_report(ctx, {{"b-edu", prf_json(r)}});
  return 0;
}

// ---------------------------------------------------------------------------
// Parsing

std::vector<ParserExample> parser_examples(Context& ctx, const std::vector<DocumentRecord>& records) {
  std::vector<ParserExample> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back({&r.document, gold_edus(r.document), prepared_tree(r.document, ctx.relations)});
  return out;
}

int cmd_parse_train(Context& ctx) {
  require(ctx.cfg.model, "--model");
  auto records = read_documents(ctx, ctx.cfg.in);
  const auto examples = parser_examples(ctx, records);
  auto model = train_parser(examples, ctx.cfg.c);
  save_model(model_path(ctx.cfg.model), model);
  return 0;
}

std::vector<Edu> edus_for_parsing(const Document& doc, const CrfModel* segmenter) {
  if (doc.edus) return *doc.edus;
  if (segmenter == nullptr) throw DataError(doc.id, "document has no 'edus'; pass --seg-model to segment it");
  return segment(doc, *segmenter);
}

int cmd_parse(Context& ctx) {
  require(ctx.cfg.model, "--model");
  const RstParser parser(load_maxent_model(model_path(ctx.cfg.model)));
  std::optional<CrfModel> segmenter;
  if (!ctx.cfg.seg_model.empty()) segmenter = load_segmenter(ctx.cfg.seg_model);
  auto records = read_documents(ctx, ctx.cfg.in);
  parallel_for(static_cast<int>(records.size()), ctx.cfg.threads, [&](int i) {
    auto& r = records[i];
    const Document& doc = r.document;
    const bool had_edus = doc.edus.has_value();
    const auto edus = edus_for_parsing(doc, segmenter ? &*segmenter : nullptr);
    try {
      std::vector<ParseResult> results;
      if (ctx.cfg.beam == 1 && ctx.cfg.k == 1)
        results.push_back(parser.parse_greedy(doc, edus));
      else
        results = parser.parse_kbest(doc, edus, ctx.cfg.beam, ctx.cfg.k);
      if (!had_edus) r.raw["edus"] = edus_to_json(edus);
      r.raw["rst"] = render_tree(results.front().tree, doc, edus);
      if (ctx.cfg.actions) {
        Json a = Json::array();
        for (const auto& act : results.front().actions) a.push_back(act.to_string());
        r.raw["actions"] = std::move(a);
      }
      if (ctx.cfg.k > 1) {
        Json kbest = Json::array();
        for (const auto& res : results)
          kbest.push_back({{"score", res.score}, {"rst", render_tree(res.tree, doc, edus)}});
        r.raw["kbest"] = std::move(kbest);
      }
    } catch (const DataError&) {
      throw;
    } catch (const Error& e) {
      throw DataError(doc.id, e.what());
    }
  });
  write_records(ctx, records);
  return 0;
}

int cmd_oracle(Context& ctx) {
  auto records = read_documents(ctx, ctx.cfg.in);
  for (auto& r : records) {
    const RstNode tree = prepared_tree(r.document, ctx.relations);
    Json a = Json::array();
    try {
      for (const auto& act : oracle_actions(tree)) a.push_back(act.to_string());
    } catch (const Error& e) {
      throw DataError(r.document.id, e.what());
    }
    r.raw["actions"] = std::move(a);
  }
  write_records(ctx, records);
  return 0;
}

std::vector<Layer> selected_layers(const RunConfig& cfg) {
  if (cfg.layers.empty()) return {Layer::span, Layer::nuclearity, Layer::relation};
  std::vector<Layer> out;
  for (const auto& l : cfg.layers) {
    try {
      out.push_back(parse_layer(l));
    } catch (const InputError& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

int cmd_eval_parse(Context& ctx) {
  require(ctx.cfg.gold, "--gold");
  const auto layers = selected_layers(ctx.cfg);
  auto gold = read_documents(ctx, ctx.cfg.gold);
  auto pred = read_documents(ctx, ctx.cfg.in);
  check_aligned(gold, pred);
  std::vector<RstNode> g, p;
  std::vector<std::string> ids;
  for (size_t i = 0; i < gold.size(); ++i) {
    g.push_back(prepared_tree(gold[i].document, ctx.relations));
    p.push_back(prepared_tree(pred[i].document, ctx.relations));
    ids.push_back(gold[i].document.id);
  }
  std::string table = kTableHeader;
  Json report = Json::object();
  for (Layer layer : layers) {
    const PRF r = parseval_prf(g, p, layer, ids);
    table += prf_row(to_string(layer), r);
    report[std::string(to_string(layer))] = prf_json(r);
  }
  write_text(ctx, ctx.cfg.out, table);
  write_report(ctx, report);
  return 0;
}

// ---------------------------------------------------------------------------
// Grid search

int cmd_grid_search(Context& ctx) {
  require(ctx.cfg.dev, "--dev");
  require(ctx.cfg.model, "--model");
  const bool seg = ctx.cfg.task == "seg";
  if (!seg && ctx.cfg.task != "parse") throw UsageError("--task must be 'seg' or 'parse'");
  const int lo = ctx.cfg.lo.value_or(seg ? -6 : -4);
  const int hi = ctx.cfg.hi.value_or(seg ? 6 : 4);
  if (lo > hi) throw UsageError("--lo must not exceed --hi");

  auto train_records = read_documents(ctx, ctx.cfg.in);
  auto dev_records = read_documents(ctx, ctx.cfg.dev);
  std::ostringstream table;
  Json report;
  auto emit = [&](const auto& result, const std::string& metric) {
    table << "c" << std::setw(14) << metric << '\n';
    Json rows = Json::array();
    for (const auto& pt : result.table) {
      table << std::left << std::setw(10) << format_double(pt.c) << std::right << std::fixed << std::setprecision(4)
            << std::setw(8) << pt.score << '\n';
      rows.push_back({{"c", pt.c}, {metric, pt.score}});
    }
    table << "best c " << format_double(result.best_c) << '\n';
    report = {{"metric", metric}, {"best_c", result.best_c}, {"grid", rows}};
  };

  if (seg) {
    const auto train = documents_with_edus(train_records);
    const auto dev = documents_with_edus(dev_records);
    auto result = grid_search(
        GridSpec::powers_of_two(lo, hi, "b-edu-f1"), [&](double c) { return train_segmenter(train, c); },
        [&](const CrfModel& m) {
          std::vector<std::vector<Edu>> predicted(dev.size());
          parallel_for(static_cast<int>(dev.size()), ctx.cfg.threads,
                       [&](int i) { predicted[i] = segment(dev[i], m); });
          return segmentation_score(dev, predicted).f1;
        });
    save_model(model_path(ctx.cfg.model), result.best_model);
    emit(result, "b-edu-f1");
  } else {
    const auto train = parser_examples(ctx, train_records);
    const auto dev = parser_examples(ctx, dev_records);
    std::vector<RstNode> gold;
    for (const auto& ex : dev) gold.push_back(ex.gold);
    auto result = grid_search(
        GridSpec::powers_of_two(lo, hi, "relation-f1"), [&](double c) { return train_parser(train, c); },
        [&](const MaxentModel& m) {
          const RstParser parser(m);
          std::vector<RstNode> predicted(dev.size());
          parallel_for(static_cast<int>(dev.size()), ctx.cfg.threads,
                       [&](int i) { predicted[i] = parser.parse_greedy(*dev[i].document, dev[i].edus).tree; });
          return parseval_prf(gold, predicted, Layer::relation).f1;
        });
    save_model(model_path(ctx.cfg.model), result.best_model);
    emit(result, "relation-f1");
  }
  write_text(ctx, ctx.cfg.out, table.str());
  write_report(ctx, report);
  return 0;
}

// ---------------------------------------------------------------------------
// Benchmark

int cmd_bench(Context& ctx) {
  require(ctx.cfg.model, "--model");
  const RstParser parser(load_maxent_model(model_path(ctx.cfg.model)));
  std::optional<CrfModel> segmenter;
  if (!ctx.cfg.seg_model.empty()) segmenter = load_segmenter(ctx.cfg.seg_model);
  const auto records = read_documents(ctx, ctx.cfg.in);

  auto run_one = [&](const Document& doc) {
    const auto edus = segmenter ? segment(doc, *segmenter) : gold_edus(doc);
    if (ctx.cfg.beam == 1 && ctx.cfg.k == 1)
      parser.parse_greedy(doc, edus);
    else
      parser.parse_kbest(doc, edus, ctx.cfg.beam, ctx.cfg.k);
  };
  for (const auto& r : records) run_one(r.document);  // warm-up

  std::vector<double> seconds, sizes;
  Json docs = Json::array();
  for (const auto& r : records) {
    const double t = median_seconds([&] { run_one(r.document); }, ctx.cfg.repeat);
    const double n = static_cast<double>(segmenter ? segment(r.document, *segmenter).size() : gold_edus(r.document).size());
    seconds.push_back(t);
    sizes.push_back(n);
    docs.push_back({{"doc_id", r.document.id}, {"edus", n}, {"seconds", t}});
  }
  const TimingStats s = summarize_timings(seconds, sizes);
  std::ostringstream text;
  text << "documents " << s.count << '\n';
  if (s.count > 0) {
    text << std::setprecision(4) << "mean = " << s.mean << " s, S.D. = " << s.sd << " s, min. = " << s.min
         << " s, max. = " << s.max << " s\n"
         << "time ~ " << s.slope << " * EDUs + " << s.intercept << " (R^2 = " << s.r2 << ")\n";
  }
  write_text(ctx, ctx.cfg.out, text.str());
  write_report(ctx, {{"count", s.count},
                     {"mean", s.mean},
                     {"sd", s.sd},
                     {"min", s.min},
                     {"max", s.max},
                     {"slope", s.slope},
                     {"intercept", s.intercept},
                     {"r2", s.r2},
                     {"documents", docs}});
  return 0;
}

// ---------------------------------------------------------------------------

const char* kEvalParseHelp =
    "Scores predicted trees against gold trees (RST-Parseval, pooled over documents).\n"
    "Both sides are read from 'rst', relations collapsed and trees binarized before scoring.\n"
    "Every node except the root is a span, leaves included.";

void add_common(CLI::App* app, RunConfig& cfg) {
  app->add_option("--head-rules", cfg.head_rules, "Head-rule table (default: built in)");
  app->add_option("--relation-map", cfg.relation_map, "Relation class map (default: built in)");
}

void add_in(CLI::App* app, RunConfig& cfg) { app->add_option("--in", cfg.in, "Input JSONL, '-' for stdin"); }
void add_out(CLI::App* app, RunConfig& cfg) { app->add_option("--out", cfg.out, "Output, '-' for stdout"); }
void add_threads(CLI::App* app, RunConfig& cfg) {
  app->add_option("--threads", cfg.threads, "Worker threads (documents)")->check(CLI::PositiveNumber);
}
void add_decoding(CLI::App* app, RunConfig& cfg) {
  app->add_option("--beam", cfg.beam, "Beam size")->check(CLI::PositiveNumber);
  app->add_option("--k", cfg.k, "Number of parses")->check(CLI::PositiveNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Discourse segmentation and RST parsing", "discourse"};
  app.require_subcommand(1);

  auto* seg_train = app.add_subcommand("seg-train", "Train the EDU segmenter (l2 CRF)");
  add_in(seg_train, cfg);
  seg_train->add_option("--model", cfg.model, "Model file to write")->required();
  seg_train->add_option("--c", cfg.c, "Inverse regularization strength")->check(CLI::PositiveNumber);

  auto* seg = app.add_subcommand("seg", "Fill in 'edus' with the segmenter");
  add_in(seg, cfg);
  add_out(seg, cfg);
  add_threads(seg, cfg);
  seg->add_option("--model", cfg.model, "Segmenter model")->required();

  auto* parse_train = app.add_subcommand("parse-train", "Train the shift-reduce parser (l1 logistic regression)");
  add_in(parse_train, cfg);
  parse_train->add_option("--model", cfg.model, "Model file to write")->required();
  parse_train->add_option("--c", cfg.c, "Inverse regularization strength")->check(CLI::PositiveNumber);

  auto* parse = app.add_subcommand("parse", "Add 'rst' (.dis text) to every document");
  add_in(parse, cfg);
  add_out(parse, cfg);
  add_threads(parse, cfg);
  add_decoding(parse, cfg);
  parse->add_option("--model", cfg.model, "Parser model")->required();
  parse->add_option("--seg-model", cfg.seg_model, "Segmenter for documents without 'edus'");
  parse->add_flag("--actions", cfg.actions, "Also write the action sequence");

  auto* oracle = app.add_subcommand("oracle", "Add the gold action sequence as 'actions'");
  add_in(oracle, cfg);
  add_out(oracle, cfg);

  auto* eval_seg = app.add_subcommand("eval-seg", "B-EDU precision/recall/F1 (first token of each sentence skipped)");
  add_in(eval_seg, cfg);
  add_out(eval_seg, cfg);
  eval_seg->add_option("--gold", cfg.gold, "Gold JSONL")->required();
  eval_seg->add_option("--report", cfg.report, "Also write a JSON report");

  auto* eval_parse = app.add_subcommand("eval-parse", kEvalParseHelp);
  add_in(eval_parse, cfg);
  add_out(eval_parse, cfg);
  eval_parse->add_option("--gold", cfg.gold, "Gold JSONL")->required();
  eval_parse->add_option("--layer", cfg.layers, "span, nuclearity or relation (default: all)");
  eval_parse->add_option("--report", cfg.report, "Also write a JSON report");

  auto* grid = app.add_subcommand("grid-search", "Pick c on a development set and save the best model");
  add_in(grid, cfg);
  add_out(grid, cfg);
  add_threads(grid, cfg);
  grid->add_option("--task", cfg.task, "seg (c = 2^-6..2^6, B-EDU F1) or parse (c = 2^-4..2^4, relation F1)")
      ->required();
  grid->add_option("--dev", cfg.dev, "Development JSONL")->required();
  grid->add_option("--model", cfg.model, "Where to save the best model")->required();
  grid->add_option("--lo", cfg.lo, "Smallest exponent of two");
  grid->add_option("--hi", cfg.hi, "Largest exponent of two");
  grid->add_option("--report", cfg.report, "Also write a JSON report");

  auto* bench = app.add_subcommand("bench", "Per-document parsing time (after one warm-up pass)");
  add_in(bench, cfg);
  add_out(bench, cfg);
  add_decoding(bench, cfg);
  bench->add_option("--model", cfg.model, "Parser model")->required();
  bench->add_option("--seg-model", cfg.seg_model, "Also time segmentation with this model");
  bench->add_option("--repeat", cfg.repeat, "Timed runs per document (median kept)")->check(CLI::PositiveNumber);
  bench->add_option("--report", cfg.report, "Also write a JSON report");

  for (auto* sub : app.get_subcommands({})) add_common(sub, cfg);

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cfg.k > cfg.beam) throw UsageError("--k must not exceed --beam");
    Context ctx{cfg, in, out, err, {}, {}};
    ctx.rules = cfg.head_rules.empty() ? HeadRuleTable::standard() : HeadRuleTable::load(cfg.head_rules);
    ctx.relations = cfg.relation_map.empty() ? RelationMap::standard() : RelationMap::load(cfg.relation_map);

    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "seg-train") return cmd_seg_train(ctx);
    if (name == "seg") return cmd_seg(ctx);
    if (name == "parse-train") return cmd_parse_train(ctx);
    if (name == "parse") return cmd_parse(ctx);
    if (name == "oracle") return cmd_oracle(ctx);
    if (name == "eval-seg") return cmd_eval_seg(ctx);
    if (name == "eval-parse") return cmd_eval_parse(ctx);
    if (name == "grid-search") return cmd_grid_search(ctx);
    if (name == "bench") return cmd_bench(ctx);
    throw UsageError("unknown command " + name);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace discourse::cli
