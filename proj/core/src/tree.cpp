#include "treelang/tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "treelang/dyck.hpp"

namespace treelang {

namespace {

// Depth-first visit order with leftmost-child-first; empty result on cycles
// or out-of-range indices.
std::vector<int> dfs_order(const std::vector<std::vector<int>>& children) {
  const int n = static_cast<int>(children.size());
  std::vector<int> order;
  order.reserve(n);
  std::vector<std::pair<int, std::size_t>> stack;
  std::vector<char> seen(n, 0);
  stack.emplace_back(0, 0);
  seen[0] = 1;
  order.push_back(0);
  while (!stack.empty()) {
    auto& [v, idx] = stack.back();
    if (idx == children[v].size()) {
      stack.pop_back();
      continue;
    }
    int c = children[v][idx++];
    if (c < 0 || c >= n || seen[c]) return {};
    seen[c] = 1;
    order.push_back(c);
    stack.emplace_back(c, 0);
  }
  return order;
}

}  // namespace

bool validate(const std::vector<int>& parent,
              const std::vector<std::vector<int>>& children) {
  const int n = static_cast<int>(parent.size());
  if (n == 0 || children.size() != parent.size()) return false;
  if (parent[0] != PlanarTree::kRootSentinel) return false;
  for (int v = 1; v < n; ++v) {
    if (parent[v] < 0 || parent[v] >= n || parent[v] == v) return false;
  }
  // children consistent with parent
  std::size_t total = 0;
  for (int v = 0; v < n; ++v) {
    for (int c : children[v]) {
      if (c <= 0 || c >= n || parent[c] != v) return false;
    }
    total += children[v].size();
  }
  if (total != static_cast<std::size_t>(n - 1)) return false;
  // connected, acyclic, and the stored numbering is its own DFS numbering
  std::vector<int> order = dfs_order(children);
  if (static_cast<int>(order.size()) != n) return false;
  for (int v = 0; v < n; ++v) {
    if (order[v] != v) return false;
  }
  return true;
}

PlanarTree PlanarTree::from_parents(std::vector<int> parent) {
  std::vector<std::vector<int>> children(parent.size());
  for (int v = 1; v < static_cast<int>(parent.size()); ++v) {
    if (parent[v] < 0 || parent[v] >= static_cast<int>(parent.size())) {
      throw std::invalid_argument("parent index out of range");
    }
    children[parent[v]].push_back(v);
  }
  return from_parts(std::move(parent), std::move(children));
}

PlanarTree PlanarTree::from_parts(std::vector<int> parent,
                                  std::vector<std::vector<int>> children) {
  if (!validate(parent, children)) {
    throw std::invalid_argument("not a depth-first numbered planar tree");
  }
  PlanarTree t;
  t.parent_ = std::move(parent);
  t.children_ = std::move(children);
  return t;
}

PlanarTree PlanarTree::single_vertex() {
  return from_parents({kRootSentinel});
}

TreeBuilder::TreeBuilder() { reset(); }

void TreeBuilder::reset() {
  tree_.parent_.assign(1, PlanarTree::kRootSentinel);
  tree_.children_.resize(1);
  tree_.children_[0].clear();
  cursor_ = 0;
}

void TreeBuilder::push_child() {
  int v = static_cast<int>(tree_.parent_.size());
  tree_.parent_.push_back(cursor_);
  tree_.children_[cursor_].push_back(v);
  tree_.children_.emplace_back();
  cursor_ = v;
}

void TreeBuilder::ascend() {
  if (cursor_ == 0) throw std::logic_error("ascend above root");
  cursor_ = tree_.parent_[cursor_];
}

void TreeBuilder::undo_push_child() {
  if (cursor_ != static_cast<int>(tree_.parent_.size()) - 1 ||
      !tree_.children_[cursor_].empty()) {
    throw std::logic_error("cursor is not the last childless vertex");
  }
  int parent = tree_.parent_[cursor_];
  tree_.parent_.pop_back();
  tree_.children_.pop_back();
  tree_.children_[parent].pop_back();
  cursor_ = parent;
}

void TreeBuilder::descend(int child) {
  if (child <= 0 || child >= static_cast<int>(tree_.parent_.size()) ||
      tree_.parent_[child] != cursor_) {
    throw std::logic_error("not a child of the cursor");
  }
  cursor_ = child;
}

std::vector<int> degree_sequence(const PlanarTree& tree) {
  std::vector<int> deg(tree.n_vertices());
  for (int v = 0; v < tree.n_vertices(); ++v) {
    deg[v] = static_cast<int>(tree.children(v).size()) + (v == 0 ? 0 : 1);
  }
  return deg;
}

std::int64_t star_norm(const PlanarTree& tree) {
  std::int64_t total = 0;
  for (int v = 0; v < tree.n_vertices(); ++v) {
    std::int64_t d = static_cast<std::int64_t>(tree.children(v).size()) +
                     (v == 0 ? 0 : 1);
    total += d * (d - 1) / 2;
  }
  return total;
}

int leaf_count(const PlanarTree& tree) {
  if (tree.n_vertices() == 1) return 1;
  int leaves = 0;
  for (int v = 0; v < tree.n_vertices(); ++v) {
    int d = static_cast<int>(tree.children(v).size()) + (v == 0 ? 0 : 1);
    if (d == 1) ++leaves;
  }
  return leaves;
}

std::int64_t subtree_count(const PlanarTree& tree) {
  const int n = tree.n_vertices();
  // f[v] = subtrees rooted at v; children carry larger indices, so a single
  // descending sweep is a post-order evaluation.
  thread_local std::vector<std::int64_t> f;
  f.assign(n, 1);
  std::int64_t total = 0;
  for (int v = n - 1; v >= 0; --v) {
    for (int c : tree.children(v)) f[v] *= 1 + f[c];
    total += f[v];
  }
  return total;
}

namespace {

std::string ahu_code(int v, int parent,
                     const std::vector<std::vector<int>>& adj) {
  std::vector<std::string> parts;
  for (int c : adj[v]) {
    if (c != parent) parts.push_back(ahu_code(c, v, adj));
  }
  std::sort(parts.begin(), parts.end());
  std::string code = "(";
  for (const auto& p : parts) code += p;
  code += ")";
  return code;
}

std::vector<std::vector<int>> adjacency(const PlanarTree& tree) {
  std::vector<std::vector<int>> adj(tree.n_vertices());
  for (int v = 1; v < tree.n_vertices(); ++v) {
    adj[v].push_back(tree.parent(v));
    adj[tree.parent(v)].push_back(v);
  }
  return adj;
}

}  // namespace

TreeCanonicalForm canonical_rooted(const PlanarTree& tree) {
  return ahu_code(0, -1, adjacency(tree));
}

TreeCanonicalForm canonical_unrooted(const PlanarTree& tree) {
  auto adj = adjacency(tree);
  TreeCanonicalForm best;
  for (int r = 0; r < tree.n_vertices(); ++r) {
    TreeCanonicalForm code = ahu_code(r, -1, adj);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

PlanarTree parse_tree(const std::string& text) {
  if (text.find(',') != std::string::npos || text == "-") {
    std::vector<int> parent;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok == "-" || tok == "root") {
        parent.push_back(PlanarTree::kRootSentinel);
      } else {
        parent.push_back(std::stoi(tok));
      }
    }
    if (parent.empty() || parent[0] != PlanarTree::kRootSentinel) {
      throw std::invalid_argument("parent sequence must start with '-'");
    }
    return PlanarTree::from_parents(std::move(parent));
  }
  return dyck_to_planar_tree(parse_dyck(text));
}

std::string format_parents(const PlanarTree& tree) {
  std::string out = "-";
  for (int v = 1; v < tree.n_vertices(); ++v) {
    out += ',';
    out += std::to_string(tree.parent(v));
  }
  return out;
}

}  // namespace treelang
