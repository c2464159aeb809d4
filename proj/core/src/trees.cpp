#include "imbalance/trees.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace imbalance {

namespace {

// Binary increment of a codeword; canonical codes never overflow.
void increment(std::string& code) {
  for (auto it = code.rbegin(); it != code.rend(); ++it) {
    if (*it == '0') {
      *it = '1';
      return;
    }
    *it = '0';
  }
  code.insert(code.begin(), '1');
}

}  // namespace

CodeTree::CodeTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw Error(ErrorCode::MalformedTree, "a tree needs a root");
  const auto count = static_cast<std::int32_t>(nodes_.size());
  std::vector<bool> seen(nodes_.size(), false);
  seen[0] = true;
  std::vector<std::int32_t> stack{0};
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Node node = nodes_[static_cast<std::size_t>(stack.back())];
    stack.pop_back();
    for (const std::int32_t child : {node.left, node.right}) {
      if (child == kNone) continue;
      if (child < 0 || child >= count) {
        throw Error(ErrorCode::MalformedTree, "child index " + std::to_string(child) +
                                                  " out of range");
      }
      if (seen[static_cast<std::size_t>(child)]) {
        throw Error(ErrorCode::MalformedTree,
                    "node " + std::to_string(child) + " is reached twice");
      }
      seen[static_cast<std::size_t>(child)] = true;
      ++reached;
      stack.push_back(child);
    }
  }
  if (reached != nodes_.size()) {
    throw Error(ErrorCode::MalformedTree, std::to_string(nodes_.size() - reached) +
                                              " node(s) unreachable from the root");
  }
}

CodeTree CodeTree::from_codewords(const std::vector<std::string>& codewords) {
  std::vector<Node> nodes(1);
  std::vector<bool> terminal(1, false);
  for (const std::string& word : codewords) {
    std::size_t at = 0;
    if (terminal[at]) throw Error(ErrorCode::MalformedTree, "codewords are not prefix-free");
    for (const char bit : word) {
      if (bit != '0' && bit != '1') {
        throw Error(ErrorCode::MalformedTree, "codeword '" + word + "' is not binary");
      }
      std::int32_t child = bit == '0' ? nodes[at].left : nodes[at].right;
      if (child == kNone) {
        child = static_cast<std::int32_t>(nodes.size());
        (bit == '0' ? nodes[at].left : nodes[at].right) = child;
        nodes.emplace_back();
        terminal.push_back(false);
      }
      at = static_cast<std::size_t>(child);
      if (terminal[at]) throw Error(ErrorCode::MalformedTree, "codewords are not prefix-free");
    }
    if (!nodes[at].is_leaf()) {
      throw Error(ErrorCode::MalformedTree, "codewords are not prefix-free");
    }
    terminal[at] = true;
  }
  return CodeTree(std::move(nodes));
}

std::vector<std::string> CodeTree::codewords() const {
  std::vector<std::string> out;
  std::function<void(std::size_t, std::string&)> walk = [&](std::size_t at, std::string& path) {
    const Node& node = nodes_[at];
    if (node.is_leaf()) {
      out.push_back(path);
      return;
    }
    if (node.left != kNone) {
      path.push_back('0');
      walk(static_cast<std::size_t>(node.left), path);
      path.pop_back();
    }
    if (node.right != kNone) {
      path.push_back('1');
      walk(static_cast<std::size_t>(node.right), path);
      path.pop_back();
    }
  };
  std::string path;
  walk(0, path);
  return out;
}

std::vector<std::string> canonical_code(const PathLengthSequence& l) {
  std::vector<std::string> out;
  out.reserve(l.size());
  std::string code(l.first(), '0');
  out.push_back(code);
  for (std::size_t i = 1; i < l.size(); ++i) {
    increment(code);
    code.append(l.components()[i] - l.components()[i - 1], '0');
    out.push_back(code);
  }
  return out;
}

CodeTree tree_from_sequence(const PathLengthSequence& l) {
  return CodeTree::from_codewords(canonical_code(l));
}

PathLengthSequence sequence_from_tree(const CodeTree& tree) {
  for (std::size_t i = 0; i < tree.nodes().size(); ++i) {
    const CodeTree::Node& node = tree.nodes()[i];
    if ((node.left == CodeTree::kNone) != (node.right == CodeTree::kNone)) {
      throw Error(ErrorCode::MalformedTree, "node " + std::to_string(i) + " has a single child");
    }
  }
  std::vector<std::int64_t> depths;
  for (const std::string& word : tree.codewords()) {
    depths.push_back(static_cast<std::int64_t>(word.size()));
  }
  std::sort(depths.begin(), depths.end());
  return PathLengthSequence::validate(depths);
}

std::size_t nodes_within_depth(const PathLengthSequence& l, std::size_t depth) {
  std::set<std::string> prefixes;
  for (const std::string& word : canonical_code(l)) {
    const std::size_t reach = std::min(word.size(), depth);
    for (std::size_t len = 0; len <= reach; ++len) prefixes.insert(word.substr(0, len));
  }
  return prefixes.size();
}

std::uint64_t sum_components(const PathLengthSequence& l) { return l.sum(); }

std::string tree_dot(const CodeTree& tree) {
  std::ostringstream out;
  out << "digraph code_tree {\n";
  out << "  node [fontname=\"monospace\"];\n";
  std::function<void(std::size_t, const std::string&)> walk = [&](std::size_t at,
                                                                   const std::string& path) {
    const CodeTree::Node& node = tree.nodes()[at];
    if (node.is_leaf()) {
      out << "  t" << at << " [shape=box, label=\"" << (path.empty() ? "ε" : path)
          << " (d=" << path.size() << ")\"];\n";
      return;
    }
    out << "  t" << at << " [shape=point, label=\"\"];\n";
    if (node.left != CodeTree::kNone) {
      out << "  t" << at << " -> t" << node.left << " [label=\"0\"];\n";
      walk(static_cast<std::size_t>(node.left), path + '0');
    }
    if (node.right != CodeTree::kNone) {
      out << "  t" << at << " -> t" << node.right << " [label=\"1\"];\n";
      walk(static_cast<std::size_t>(node.right), path + '1');
    }
  };
  walk(0, "");
  out << "}\n";
  return out.str();
}

std::string tree_ascii(const CodeTree& tree) {
  std::ostringstream out;
  std::function<void(std::size_t, const std::string&, const std::string&)> walk =
      [&](std::size_t at, const std::string& path, const std::string& indent) {
        const CodeTree::Node& node = tree.nodes()[at];
        out << indent;
        if (node.is_leaf()) {
          out << (path.empty() ? "leaf" : path) << " (d=" << path.size() << ")\n";
          return;
        }
        out << (path.empty() ? "*" : path + " *") << '\n';
        if (node.left != CodeTree::kNone) {
          walk(static_cast<std::size_t>(node.left), path + '0', indent + "  ");
        }
        if (node.right != CodeTree::kNone) {
          walk(static_cast<std::size_t>(node.right), path + '1', indent + "  ");
        }
      };
  walk(0, "", "");
  return out.str();
}

}  // namespace imbalance
