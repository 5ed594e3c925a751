#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "discourse/rst_tree.hpp"

namespace discourse {

/// Label a reduce assigns to one child; `synthetic` marks a binarization node.
/// Serialized `nucleus:list` or `nucleus:list*`.
struct ChildLabel {
  RstLabel label;
  bool synthetic = false;

  std::string to_string() const;
  static ChildLabel parse(std::string_view s);

  friend bool operator==(const ChildLabel&, const ChildLabel&) = default;
};

/// Shift-reduce action. Serialized `S`, `U:<nuc>:<rel>`, `B:<nuc>:<rel>,<nuc>:<rel>`.
struct Action {
  enum class Kind { shift, unary_reduce, binary_reduce };

  Kind kind = Kind::shift;
  ChildLabel left;   // unary: the only child
  ChildLabel right;  // binary only

  static Action shift() { return {}; }
  static Action unary(ChildLabel child) { return {Kind::unary_reduce, std::move(child), {}}; }
  static Action binary(ChildLabel l, ChildLabel r) { return {Kind::binary_reduce, std::move(l), std::move(r)}; }

  std::string to_string() const;
  /// Throws InputError on malformed text or a satellite/satellite pair.
  static Action parse(std::string_view s);

  friend bool operator==(const Action&, const Action&) = default;
};

/// Partial discourse tree on the parser stack. Immutable and shared between
/// states; relabeling copies only the top node.
struct Subtree {
  std::optional<RstLabel> label;
  bool synthetic = false;
  std::shared_ptr<const Subtree> left;
  std::shared_ptr<const Subtree> right;  // null for unary nodes and leaves
  int leaf = -1;
  Span edus;
  int head_edu = -1;  // leftmost nucleus descendant, recursively

  bool is_leaf() const noexcept { return left == nullptr; }
  bool is_unary() const noexcept { return left != nullptr && right == nullptr; }
};

using SubtreePtr = std::shared_ptr<const Subtree>;

/// Persistent parser configuration: applying an action returns a new state
/// and leaves the original untouched.
class ParserState {
 public:
  static ParserState initial(int num_edus);

  int depth() const noexcept { return top_ ? top_->depth : 0; }
  /// k-th stack item from the top (0 = top), or null past the bottom.
  SubtreePtr stack_item(int k) const;
  int queue_front() const noexcept { return queue_front_; }
  int total_edus() const noexcept { return total_; }
  bool queue_empty() const noexcept { return queue_front_ >= total_; }
  const std::optional<Action>& prev_action() const noexcept { return prev_; }
  /// Single subtree on the stack and nothing left to shift.
  bool is_terminal() const noexcept { return queue_empty() && depth() == 1; }

  bool is_legal(const Action& a) const;
  /// Throws TransitionError if `a` is illegal here.
  ParserState apply(const Action& a) const;
  std::string summary() const;

 private:
  struct Cell {
    SubtreePtr item;
    std::shared_ptr<const Cell> below;
    int depth;
  };

  std::shared_ptr<const Cell> top_;
  int queue_front_ = 0;
  int total_ = 0;
  std::optional<Action> prev_;
};

/// Actions from `inventory` that are legal in `state`, in inventory order.
std::vector<Action> legal_actions(const ParserState& state, std::span<const Action> inventory);

inline ParserState apply_action(const ParserState& state, const Action& action) { return state.apply(action); }

/// Post-order action sequence that rebuilds `gold` (binary, root unlabeled).
/// Throws InputError on n-ary nodes, missing labels or unary chains.
std::vector<Action> oracle_actions(const RstNode& gold);

/// Converts a finished stack item to an RstNode with an unlabeled root.
RstNode to_rst_node(const SubtreePtr& tree);

/// Replays `actions` from the initial state; the state must end terminal.
RstNode replay_actions(int num_edus, std::span<const Action> actions);

}  // namespace discourse
