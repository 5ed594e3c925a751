#include "discourse/transition.hpp"

#include "discourse/errors.hpp"

namespace discourse {

std::string ChildLabel::to_string() const {
  std::string s = label.to_string();
  if (synthetic) s += '*';
  return s;
}

ChildLabel ChildLabel::parse(std::string_view s) {
  ChildLabel out;
  if (!s.empty() && s.back() == '*') {
    out.synthetic = true;
    s.remove_suffix(1);
  }
  out.label = RstLabel::parse(s);
  if (out.label.relation.find_first_of(",:*") != std::string::npos)
    throw InputError("relation '" + out.label.relation + "' contains a reserved character");
  return out;
}

std::string Action::to_string() const {
  switch (kind) {
    case Kind::shift:
      return "S";
    case Kind::unary_reduce:
      return "U:" + left.to_string();
    case Kind::binary_reduce:
      return "B:" + left.to_string() + "," + right.to_string();
  }
  return {};
}

Action Action::parse(std::string_view s) {
  if (s == "S") return shift();
  if (s.size() > 2 && s.substr(0, 2) == "U:") return unary(ChildLabel::parse(s.substr(2)));
  if (s.size() > 2 && s.substr(0, 2) == "B:") {
    auto body = s.substr(2);
    auto comma = body.find(',');
    if (comma == std::string_view::npos) throw InputError("binary action '" + std::string(s) + "' needs two labels");
    auto a = binary(ChildLabel::parse(body.substr(0, comma)), ChildLabel::parse(body.substr(comma + 1)));
    if (a.left.label.nuclearity == Nuclearity::satellite && a.right.label.nuclearity == Nuclearity::satellite)
      throw InputError("binary action '" + std::string(s) + "' has two satellites");
    return a;
  }
  throw InputError("malformed action '" + std::string(s) + "'");
}

ParserState ParserState::initial(int num_edus) {
  if (num_edus < 1) throw InputError("a parse needs at least one EDU");
  ParserState s;
  s.total_ = num_edus;
  return s;
}

SubtreePtr ParserState::stack_item(int k) const {
  const Cell* cell = top_.get();
  for (int i = 0; i < k && cell != nullptr; ++i) cell = cell->below.get();
  return cell ? cell->item : nullptr;
}

bool ParserState::is_legal(const Action& a) const {
  switch (a.kind) {
    case Action::Kind::shift:
      return !queue_empty();
    case Action::Kind::unary_reduce:
      return depth() >= 1 && !(prev_ && prev_->kind == Action::Kind::unary_reduce);
    case Action::Kind::binary_reduce:
      return depth() >= 2 && !(a.left.label.nuclearity == Nuclearity::satellite &&
                               a.right.label.nuclearity == Nuclearity::satellite);
  }
  return false;
}

std::string ParserState::summary() const {
  return "stack depth " + std::to_string(depth()) + ", queue " + std::to_string(queue_front_) + "/" +
         std::to_string(total_) + ", previous " + (prev_ ? prev_->to_string() : std::string("none"));
}

namespace {

SubtreePtr relabel(const SubtreePtr& item, const ChildLabel& l) {
  auto copy = std::make_shared<Subtree>(*item);
  copy->label = l.label;
  copy->synthetic = l.synthetic;
  return copy;
}

}  // namespace

ParserState ParserState::apply(const Action& a) const {
  if (!is_legal(a)) throw TransitionError("illegal action " + a.to_string() + " with " + summary());
  ParserState next = *this;
  next.prev_ = a;
  switch (a.kind) {
    case Action::Kind::shift: {
      auto leaf = std::make_shared<Subtree>();
      leaf->leaf = queue_front_;
      leaf->edus = {queue_front_, queue_front_ + 1};
      leaf->head_edu = queue_front_;
      next.top_ = std::make_shared<Cell>(Cell{std::move(leaf), top_, depth() + 1});
      ++next.queue_front_;
      break;
    }
    case Action::Kind::unary_reduce: {
      auto parent = std::make_shared<Subtree>();
      parent->left = relabel(top_->item, a.left);
      parent->edus = parent->left->edus;
      parent->head_edu = parent->left->head_edu;
      next.top_ = std::make_shared<Cell>(Cell{std::move(parent), top_->below, top_->depth});
      break;
    }
    case Action::Kind::binary_reduce: {
      const Cell* below = top_->below.get();
      auto parent = std::make_shared<Subtree>();
      parent->left = relabel(below->item, a.left);
      parent->right = relabel(top_->item, a.right);
      parent->edus = {parent->left->edus.lo, parent->right->edus.hi};
      parent->head_edu = a.left.label.nuclearity == Nuclearity::nucleus ? parent->left->head_edu
                                                                        : parent->right->head_edu;
      next.top_ = std::make_shared<Cell>(Cell{std::move(parent), below->below, below->depth});
      break;
    }
  }
  return next;
}

std::vector<Action> legal_actions(const ParserState& state, std::span<const Action> inventory) {
  std::vector<Action> out;
  for (const auto& a : inventory)
    if (state.is_legal(a)) out.push_back(a);
  return out;
}

namespace {

ChildLabel child_label(const RstNode& n) {
  if (!n.label) throw InputError("node " + to_string(n.edus) + " below the root has no label");
  return ChildLabel{*n.label, n.synthetic};
}

void oracle_visit(const RstNode& n, std::vector<Action>& out) {
  if (n.is_leaf()) {
    out.push_back(Action::shift());
    return;
  }
  if (n.children.size() > 2)
    throw InputError("oracle needs a binary tree; node " + to_string(n.edus) + " has " +
                     std::to_string(n.children.size()) + " children");
  for (const auto& c : n.children) oracle_visit(c, out);
  if (n.children.size() == 1) {
    if (n.children[0].children.size() == 1)
      throw InputError("unary chain at " + to_string(n.edus) + " cannot be derived");
    out.push_back(Action::unary(child_label(n.children[0])));
  } else {
    auto l = child_label(n.children[0]);
    auto r = child_label(n.children[1]);
    if (l.label.nuclearity == Nuclearity::satellite && r.label.nuclearity == Nuclearity::satellite)
      throw InputError("node " + to_string(n.edus) + " has two satellite children");
    out.push_back(Action::binary(std::move(l), std::move(r)));
  }
}

}  // namespace

std::vector<Action> oracle_actions(const RstNode& gold) {
  std::vector<Action> out;
  oracle_visit(gold, out);
  return out;
}

RstNode to_rst_node(const SubtreePtr& tree) {
  RstNode n;
  if (tree->is_leaf()) {
    n = RstNode::make_leaf(tree->leaf, tree->label);
  } else {
    std::vector<RstNode> children;
    children.push_back(to_rst_node(tree->left));
    if (tree->right) children.push_back(to_rst_node(tree->right));
    n = RstNode::make_internal(tree->label, std::move(children));
  }
  n.synthetic = tree->synthetic;
  return n;
}

RstNode replay_actions(int num_edus, std::span<const Action> actions) {
  auto state = ParserState::initial(num_edus);
  for (const auto& a : actions) state = state.apply(a);
  if (!state.is_terminal()) throw TransitionError("action sequence ends in a non-terminal state: " + state.summary());
  return to_rst_node(state.stack_item(0));
}

}  // namespace discourse
