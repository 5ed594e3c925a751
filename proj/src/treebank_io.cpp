#include "discourse/treebank_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "discourse/document.hpp"
#include "discourse/errors.hpp"
#include "embedded_data.hpp"

namespace discourse {
namespace {

// ---------------------------------------------------------------------------
// S-expression scanning shared by the .dis and PTB readers.

enum class Tok { open, close, atom, text, end };

struct Lexeme {
  Tok kind = Tok::end;
  std::string value;
  int line = 1;
  int column = 1;
};

class Scanner {
 public:
  Scanner(std::string_view text, bool dis_text) : text_(text), dis_text_(dis_text) { advance(); }

  const Lexeme& peek() const { return current_; }
  Lexeme take() {
    Lexeme out = current_;
    advance();
    return out;
  }
  /// Lexeme after the current one, without consuming anything.
  Lexeme peek_second() const {
    Scanner copy = *this;
    copy.advance();
    return copy.current_;
  }

  [[noreturn]] void fail(const std::string& what, const Lexeme& at) const {
    throw ParseError(what, at.line, at.column);
  }

  Lexeme expect(Tok kind, const char* what) {
    if (current_.kind != kind) fail(std::string("expected ") + what, current_);
    return take();
  }

 private:
  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) bump();
    current_ = Lexeme{Tok::end, {}, line_, column_};
    if (pos_ >= text_.size()) return;
    const char ch = text_[pos_];
    if (ch == '(') {
      current_.kind = Tok::open;
      bump();
      return;
    }
    if (ch == ')') {
      current_.kind = Tok::close;
      bump();
      return;
    }
    if (dis_text_ && text_.compare(pos_, 2, "_!") == 0) {
      bump();
      bump();
      const auto close = text_.find("_!", pos_);
      if (close == std::string_view::npos) fail("unterminated _!text_!", current_);
      current_.kind = Tok::text;
      current_.value = std::string(text_.substr(pos_, close - pos_));
      while (pos_ < close + 2) bump();
      return;
    }
    current_.kind = Tok::atom;
    const size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')')
      bump();
    current_.value = std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  bool dis_text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Lexeme current_;
};

int to_int(const Lexeme& lx, const Scanner& sc) {
  int value = 0;
  std::istringstream in(lx.value);
  if (!(in >> value) || !in.eof()) sc.fail("expected an integer, got '" + lx.value + "'", lx);
  return value;
}

// ---------------------------------------------------------------------------
// .dis

struct DisNode {
  std::string type;  // Root / Nucleus / Satellite
  std::optional<std::pair<int, int>> span;
  std::optional<int> leaf;
  std::optional<std::string> rel2par;
  std::optional<std::string> text;
  std::vector<DisNode> children;
  Lexeme where;
};

bool is_dis_attribute(const std::string& s) {
  return s == "span" || s == "leaf" || s == "rel2par" || s == "text";
}

DisNode read_dis_node(Scanner& sc) {
  DisNode node;
  node.where = sc.expect(Tok::open, "'('");
  auto type = sc.expect(Tok::atom, "node type");
  if (type.value != "Root" && type.value != "Nucleus" && type.value != "Satellite")
    sc.fail("unknown node type '" + type.value + "'", type);
  node.type = type.value;
  while (sc.peek().kind == Tok::open) {
    auto head = sc.peek_second();
    if (head.kind == Tok::atom && is_dis_attribute(head.value)) {
      sc.take();
      sc.take();
      if (head.value == "span") {
        int a = to_int(sc.expect(Tok::atom, "span start"), sc);
        int b = to_int(sc.expect(Tok::atom, "span end"), sc);
        node.span = {a, b};
      } else if (head.value == "leaf") {
        node.leaf = to_int(sc.expect(Tok::atom, "leaf number"), sc);
      } else if (head.value == "rel2par") {
        node.rel2par = sc.expect(Tok::atom, "relation").value;
      } else {
        node.text = sc.peek().kind == Tok::text ? sc.take().value : std::string();
      }
      sc.expect(Tok::close, "')' closing attribute");
    } else {
      node.children.push_back(read_dis_node(sc));
    }
  }
  sc.expect(Tok::close, "')' closing node");
  return node;
}

RstNode convert_dis(const DisNode& d, bool is_root, int& next_leaf, const Scanner& sc) {
  if (is_root != (d.type == "Root"))
    sc.fail(is_root ? "tree must start with Root" : "Root inside the tree", d.where);
  std::optional<RstLabel> label;
  if (!is_root) {
    if (!d.rel2par) sc.fail("node without rel2par", d.where);
    label = RstLabel{d.type == "Nucleus" ? Nuclearity::nucleus : Nuclearity::satellite, *d.rel2par};
  }
  if (d.children.empty()) {
    if (!d.leaf) sc.fail("leaf node without (leaf n)", d.where);
    if (*d.leaf != next_leaf)
      sc.fail("leaf " + std::to_string(*d.leaf) + " where leaf " + std::to_string(next_leaf) +
                  " was expected",
              d.where);
    ++next_leaf;
    RstNode leaf = RstNode::make_leaf(*d.leaf - 1, std::move(label));
    leaf.text = d.text.value_or("");
    return leaf;
  }
  if (d.leaf) sc.fail("(leaf n) on a node with children", d.where);
  if (!d.span) sc.fail("internal node without (span a b)", d.where);
  auto [a, b] = *d.span;
  if (a != next_leaf || b < a) sc.fail("span " + std::to_string(a) + "-" + std::to_string(b) + " does not tile its parent", d.where);
  std::vector<RstNode> children;
  for (const auto& c : d.children) {
    const int start = next_leaf;
    const int first = c.leaf ? *c.leaf : (c.span ? c.span->first : -1);
    if (first != start)
      sc.fail("child spans do not tile parent span " + std::to_string(a) + "-" + std::to_string(b), c.where);
    children.push_back(convert_dis(c, false, next_leaf, sc));
    if (next_leaf - 1 > b)
      sc.fail("child spans do not tile parent span " + std::to_string(a) + "-" + std::to_string(b), c.where);
  }
  if (next_leaf - 1 != b)
    sc.fail("child spans do not tile parent span " + std::to_string(a) + "-" + std::to_string(b), d.where);
  return RstNode::make_internal(std::move(label), std::move(children));
}

void write_dis_node(const RstNode& n, int indent, std::string& out) {
  out.append(indent, ' ');
  out += "( ";
  out += n.is_root() ? "Root" : (n.label->nuclearity == Nuclearity::nucleus ? "Nucleus" : "Satellite");
  if (n.is_leaf()) {
    out += " (leaf " + std::to_string(n.leaf + 1) + ")";
  } else {
    out += " (span " + std::to_string(n.edus.lo + 1) + " " + std::to_string(n.edus.hi) + ")";
  }
  if (n.label) out += " (rel2par " + n.label->relation + ")";
  if (n.is_leaf()) {
    out += " (text _!" + n.text + "_!) )\n";
    return;
  }
  out += '\n';
  for (const auto& c : n.children) write_dis_node(c, indent + 2, out);
  out.append(indent, ' ');
  out += ")\n";
}

// ---------------------------------------------------------------------------
// PTB

std::string strip_function_tags(const std::string& label) {
  if (label.empty() || label[0] == '-') return label;
  auto cut = label.find_first_of("-=", 1);
  return cut == std::string::npos ? label : label.substr(0, cut);
}

std::optional<SyntaxTree::Builder> read_ptb_node(Scanner& sc) {
  sc.expect(Tok::open, "'('");
  SyntaxTree::Builder node;
  if (sc.peek().kind == Tok::atom) node.label = sc.take().value;
  if (sc.peek().kind == Tok::atom) {
    node.word = sc.take().value;
    sc.expect(Tok::close, "')' closing preterminal");
    if (node.label == "-NONE-") return std::nullopt;
    if (node.label.empty()) sc.fail("preterminal without a tag", sc.peek());
    return node;
  }
  if (sc.peek().kind != Tok::open) sc.fail("expected '(' or a word", sc.peek());
  while (sc.peek().kind == Tok::open) {
    if (auto child = read_ptb_node(sc)) node.children.push_back(std::move(*child));
  }
  sc.expect(Tok::close, "')' closing constituent");
  if (node.children.empty()) return std::nullopt;
  node.label = strip_function_tags(node.label);
  return node;
}

}  // namespace

RstNode read_dis(std::string_view text) {
  Scanner sc(text, true);
  if (sc.peek().kind == Tok::end) sc.fail("empty .dis input", sc.peek());
  DisNode root = read_dis_node(sc);
  if (sc.peek().kind != Tok::end) sc.fail("trailing content after tree", sc.peek());
  int next_leaf = 1;
  if (root.children.empty() && root.leaf && *root.leaf != 1) sc.fail("single leaf must be leaf 1", root.where);
  return convert_dis(root, true, next_leaf, sc);
}

std::string write_dis(const RstNode& tree) {
  std::string out;
  write_dis_node(tree, 0, out);
  return out;
}

SyntaxTree read_ptb(std::string_view text) {
  Scanner sc(text, false);
  if (sc.peek().kind == Tok::end) throw ParseError("empty PTB input", 1, 1);
  const Lexeme start = sc.peek();
  auto root = read_ptb_node(sc);
  if (sc.peek().kind != Tok::end) sc.fail("trailing content after tree", sc.peek());
  if (!root) sc.fail("tree has an empty yield after removing empty elements", start);
  while (root->label.empty() && root->children.size() == 1) {
    auto child = std::move(root->children.front());
    root = std::move(child);
  }
  if (root->label.empty()) root->label = "ROOT";
  return SyntaxTree(*root);
}

// ---------------------------------------------------------------------------
// Relation collapsing

RelationMap RelationMap::parse(std::string_view text) {
  RelationMap map;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::set<std::string> classes;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string fine, coarse, extra;
    if (!(fields >> fine)) continue;
    if (!(fields >> coarse) || (fields >> extra))
      throw ParseError("relation map line needs exactly fine<TAB>coarse", line_no, 1);
    map.table_[lowercase(fine)] = lowercase(coarse);
    classes.insert(lowercase(coarse));
  }
  if (static_cast<int>(classes.size()) != kNumClasses)
    throw ParseError("relation map defines " + std::to_string(classes.size()) + " classes, expected " +
                         std::to_string(kNumClasses),
                     line_no, 1);
  map.classes_.assign(classes.begin(), classes.end());
  return map;
}

RelationMap RelationMap::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open relation map " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const RelationMap& RelationMap::standard() {
  static const RelationMap map = parse(embedded::relation_map);
  return map;
}

const std::string* RelationMap::find(const std::string& key) const {
  auto it = table_.find(key);
  return it == table_.end() ? nullptr : &it->second;
}

std::string collapse_relation(std::string_view fine, const RelationMap& map) {
  std::string key = lowercase(fine);
  if (key == "span" || key == "root") return key;
  for (int strips = 0; strips < 3; ++strips) {
    if (const auto* coarse = map.find(key)) return *coarse;
    const bool suffixed = key.size() > 2 && key[key.size() - 2] == '-' &&
                          (key.back() == 'e' || key.back() == 'n' || key.back() == 's');
    if (!suffixed) break;
    key.resize(key.size() - 2);
  }
  throw MappingError("unknown relation label '" + std::string(fine) + "'");
}

RstNode collapse_labels(RstNode tree, const RelationMap& map) {
  if (tree.label) tree.label->relation = collapse_relation(tree.label->relation, map);
  for (auto& c : tree.children) c = collapse_labels(std::move(c), map);
  return tree;
}

// ---------------------------------------------------------------------------
// Binarization

namespace {

bool has_nucleus(const std::vector<RstNode>& cs, size_t lo, size_t hi) {
  for (size_t i = lo; i < hi; ++i)
    if (cs[i].label && cs[i].label->nuclearity == Nuclearity::nucleus) return true;
  return false;
}

RstNode synthesize(std::vector<RstNode>& cs, size_t lo, size_t hi);

std::vector<RstNode> pair_up(std::vector<RstNode>& cs, size_t lo, size_t hi) {
  if (hi - lo == 2) return {std::move(cs[lo]), std::move(cs[lo + 1])};
  if (has_nucleus(cs, lo + 1, hi)) {
    RstNode first = std::move(cs[lo]);
    return {std::move(first), synthesize(cs, lo + 1, hi)};
  }
  RstNode rest = synthesize(cs, lo, hi - 1);
  return {std::move(rest), std::move(cs[hi - 1])};
}

RstNode synthesize(std::vector<RstNode>& cs, size_t lo, size_t hi) {
  if (hi - lo == 1) return std::move(cs[lo]);
  std::string relation;
  for (size_t i = lo; i < hi; ++i) {
    if (cs[i].label->nuclearity == Nuclearity::nucleus) {
      relation = cs[i].label->relation;
      break;
    }
  }
  return RstNode::make_internal(RstLabel{Nuclearity::nucleus, relation}, pair_up(cs, lo, hi), true);
}

}  // namespace

RstNode binarize(const RstNode& tree) {
  if (tree.is_leaf()) return tree;
  std::vector<RstNode> children;
  children.reserve(tree.children.size());
  for (const auto& c : tree.children) {
    if (!c.label) throw StructureError("non-root node without a label at " + to_string(c.edus));
    children.push_back(binarize(c));
  }
  if (children.size() >= 2 && !has_nucleus(children, 0, children.size()))
    throw StructureError("node " + to_string(tree.edus) + " has " + std::to_string(children.size()) +
                         " children and no nucleus");
  RstNode out = tree;
  if (children.size() > 2) {
    out.children = pair_up(children, 0, children.size());
  } else {
    out.children = std::move(children);
  }
  return out;
}

RstNode debinarize(const RstNode& tree) {
  RstNode out = tree;
  if (tree.is_leaf()) {
    out.synthetic = false;
    return out;
  }
  out.children.clear();
  for (const auto& c : tree.children) {
    RstNode d = debinarize(c);
    if (c.synthetic && !c.is_leaf()) {
      for (auto& g : d.children) out.children.push_back(std::move(g));
    } else {
      out.children.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace discourse
