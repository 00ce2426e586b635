#include "braidtrees/trees.hpp"

#include <algorithm>
#include <utility>

namespace braidtrees {

namespace {

void require_degree(int n) {
  if (n < 0) throw DomainError("shape degree must be non-negative");
}

template <class Shape>
void sort_by_key(std::vector<Shape>& shapes) {
  std::sort(shapes.begin(), shapes.end(), [](const Shape& a, const Shape& b) {
    return canonical_key(a) < canonical_key(b);
  });
}

template <class Shape>
void guard_count(const std::vector<Shape>& shapes) {
  if (shapes.size() > max_terms())
    throw LimitError("shape enumeration exceeds the expansion cap (" +
                     std::to_string(max_terms()) + ")");
}

}  // namespace

// ---------------------------------------------------------------- binary

const BinTree& BinTree::left() const {
  if (!node_) throw DomainError("the leaf has no subtrees");
  return node_->left;
}

const BinTree& BinTree::right() const {
  if (!node_) throw DomainError("the leaf has no subtrees");
  return node_->right;
}

bool BinTree::operator==(const BinTree& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  if (node_->degree != o.node_->degree) return false;
  return node_->left == o.node_->left && node_->right == o.node_->right;
}

BinTree graft(const BinTree& l, const BinTree& r) {
  BinTree t;
  t.node_ = std::make_shared<const detail::BinNode>(
      detail::BinNode{l, r, l.degree() + r.degree() + 1});
  return t;
}

std::string canonical_key(const BinTree& t) {
  if (t.is_leaf()) return "|";
  return "(" + canonical_key(t.left()) + " * " + canonical_key(t.right()) + ")";
}

// ---------------------------------------------------------------- rooted

RootedTree::RootedTree()
    : node_(std::make_shared<const detail::RTNode>(detail::RTNode{{}, 1})) {}

bool RootedTree::operator==(const RootedTree& o) const {
  if (node_ == o.node_) return true;
  if (node_->size != o.node_->size) return false;
  if (node_->children.size() != o.node_->children.size()) return false;
  for (std::size_t i = 0; i < node_->children.size(); ++i)
    if (node_->children[i] != o.node_->children[i]) return false;
  return true;
}

int Forest::size() const {
  int total = 0;
  for (const RootedTree& t : trees) total += t.size();
  return total;
}

bool Forest::operator==(const Forest& o) const {
  if (trees.size() != o.trees.size()) return false;
  for (std::size_t i = 0; i < trees.size(); ++i)
    if (trees[i] != o.trees[i]) return false;
  return true;
}

RootedTree bplus(const Forest& f) {
  RootedTree t;
  t.node_ = std::make_shared<const detail::RTNode>(
      detail::RTNode{f.trees, f.size() + 1});
  return t;
}

std::string canonical_key(const RootedTree& t) {
  std::string out = "*";
  if (!t.children().empty()) {
    out += "(";
    for (std::size_t i = 0; i < t.children().size(); ++i) {
      if (i) out += " ";
      out += canonical_key(t.children()[i]);
    }
    out += ")";
  }
  return out;
}

std::string canonical_key(const Forest& f) {
  if (f.trees.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i) out += " ";
    out += canonical_key(f.trees[i]);
  }
  return out;
}

// ---------------------------------------------------------------- angular

const std::vector<AngTree>& AngTree::branches() const {
  if (!node_) throw DomainError("the leaf has no branches");
  return node_->branches;
}

bool AngTree::operator==(const AngTree& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  if (node_->angles != o.node_->angles) return false;
  if (node_->branches.size() != o.node_->branches.size()) return false;
  for (std::size_t i = 0; i < node_->branches.size(); ++i)
    if (node_->branches[i] != o.node_->branches[i]) return false;
  return true;
}

AngTree angular(std::vector<AngTree> branches) {
  if (branches.size() < 2)
    throw DomainError("an internal vertex needs at least two branches");
  int total = static_cast<int>(branches.size()) - 1;
  for (const AngTree& b : branches) total += b.angles();
  AngTree t;
  t.node_ = std::make_shared<const detail::AngNode>(
      detail::AngNode{std::move(branches), total});
  return t;
}

std::string canonical_key(const AngTree& t) {
  if (t.is_leaf()) return "|";
  std::string out = "[";
  const auto& branches = t.branches();
  for (std::size_t i = 0; i < branches.size(); ++i) {
    if (i) out += " * ";
    out += canonical_key(branches[i]);
  }
  out += "]";
  return out;
}

bool is_lush(const AngTree& t) {
  if (t.is_leaf()) return true;
  const auto& branches = t.branches();
  for (std::size_t i = 0; i < branches.size(); ++i) {
    if (i > 0 && i + 1 < branches.size() && branches[i].is_leaf()) return false;
    if (!is_lush(branches[i])) return false;
  }
  return true;
}

int lush_depth(const AngTree& t) {
  if (t.is_leaf()) return 0;
  int deepest = 0;
  for (const AngTree& b : t.branches())
    if (!b.is_leaf()) deepest = std::max(deepest, lush_depth(b));
  return 1 + deepest;
}

// ------------------------------------------------------------------ cuts

std::vector<BinCut> binary_cuts(const BinTree& t) {
  if (t.is_leaf()) return {BinCut{{}, BinTree(), {}}};
  std::vector<BinCut> result;
  const int left_degree = t.left().degree();
  const std::vector<BinCut> left_cuts = binary_cuts(t.left());
  const std::vector<BinCut> right_cuts = binary_cuts(t.right());
  for (const BinCut& cl : left_cuts)
    for (const BinCut& cr : right_cuts) {
      BinCut c;
      c.parts = cl.parts;
      c.parts.insert(c.parts.end(), cr.parts.begin(), cr.parts.end());
      c.quotient = graft(cl.quotient, cr.quotient);
      c.positions = cl.positions;
      for (int p : cr.positions) c.positions.push_back(p + left_degree + 1);
      result.push_back(std::move(c));
    }
  BinCut full;
  full.parts = {t};
  for (int p = 1; p <= t.degree(); ++p) full.positions.push_back(p);
  result.push_back(std::move(full));
  return result;
}

namespace {

// Cuts of a single rooted tree; the quotient forest is empty exactly
// for the full cut.  Positions are relative to the tree's own preorder.
std::vector<ForestCut> tree_cuts(const RootedTree& t) {
  std::vector<ForestCut> acc = {ForestCut{Forest(), Forest(), {}}};
  int offset = 1;  // the root occupies position 1
  for (const RootedTree& child : t.children()) {
    const std::vector<ForestCut> child_cuts = tree_cuts(child);
    std::vector<ForestCut> next;
    for (const ForestCut& a : acc)
      for (const ForestCut& k : child_cuts) {
        ForestCut c;
        c.parts.trees = a.parts.trees;
        c.parts.trees.insert(c.parts.trees.end(), k.parts.trees.begin(),
                             k.parts.trees.end());
        c.quotient.trees = a.quotient.trees;
        c.quotient.trees.insert(c.quotient.trees.end(),
                                k.quotient.trees.begin(),
                                k.quotient.trees.end());
        c.positions = a.positions;
        for (int p : k.positions) c.positions.push_back(p + offset);
        next.push_back(std::move(c));
      }
    offset += child.size();
    acc = std::move(next);
  }
  std::vector<ForestCut> result;
  for (ForestCut& a : acc) {
    // The surviving child quotients hang under the kept root.
    ForestCut c;
    c.parts = std::move(a.parts);
    c.quotient = Forest({bplus(a.quotient)});
    c.positions = std::move(a.positions);
    result.push_back(std::move(c));
  }
  ForestCut full;
  full.parts = Forest({t});
  for (int p = 1; p <= t.size(); ++p) full.positions.push_back(p);
  result.push_back(std::move(full));
  return result;
}

}  // namespace

std::vector<ForestCut> forest_cuts(const Forest& f) {
  std::vector<ForestCut> acc = {ForestCut{Forest(), Forest(), {}}};
  int offset = 0;
  for (const RootedTree& tree : f.trees) {
    const std::vector<ForestCut> per_tree = tree_cuts(tree);
    std::vector<ForestCut> next;
    for (const ForestCut& a : acc)
      for (const ForestCut& k : per_tree) {
        ForestCut c;
        c.parts.trees = a.parts.trees;
        c.parts.trees.insert(c.parts.trees.end(), k.parts.trees.begin(),
                             k.parts.trees.end());
        c.quotient.trees = a.quotient.trees;
        c.quotient.trees.insert(c.quotient.trees.end(),
                                k.quotient.trees.begin(),
                                k.quotient.trees.end());
        c.positions = a.positions;
        for (int p : k.positions) c.positions.push_back(p + offset);
        next.push_back(std::move(c));
      }
    offset += tree.size();
    acc = std::move(next);
  }
  return acc;
}

std::vector<AngCut> angular_cuts(const AngTree& t) {
  if (t.is_leaf()) return {AngCut{{}, AngTree(), {}}};
  std::vector<AngCut> acc = {AngCut{{}, AngTree(), {}}};
  // Reuse `positions` during accumulation; branch quotients are
  // collected through a parallel vector.
  std::vector<std::vector<AngTree>> acc_branches = {{}};
  int offset = 0;
  const auto& branches = t.branches();
  for (std::size_t i = 0; i < branches.size(); ++i) {
    if (i > 0) ++offset;  // the root's own angle before this branch
    std::vector<AngCut> next;
    std::vector<std::vector<AngTree>> next_branches;
    auto branch_cuts = angular_cuts(branches[i]);
    for (std::size_t a = 0; a < acc.size(); ++a)
      for (const AngCut& k : branch_cuts) {
        AngCut c;
        c.parts = acc[a].parts;
        c.parts.insert(c.parts.end(), k.parts.begin(), k.parts.end());
        c.positions = acc[a].positions;
        for (int p : k.positions) c.positions.push_back(p + offset);
        std::vector<AngTree> bq = acc_branches[a];
        bq.push_back(k.quotient);
        next.push_back(std::move(c));
        next_branches.push_back(std::move(bq));
      }
    offset += branches[i].angles();
    acc = std::move(next);
    acc_branches = std::move(next_branches);
  }
  std::vector<AngCut> result;
  for (std::size_t a = 0; a < acc.size(); ++a) {
    AngCut c = std::move(acc[a]);
    c.quotient = angular(std::move(acc_branches[a]));
    result.push_back(std::move(c));
  }
  AngCut full;
  full.parts = {t};
  full.quotient = AngTree();
  for (int p = 1; p <= t.angles(); ++p) full.positions.push_back(p);
  result.push_back(std::move(full));
  return result;
}

// ----------------------------------------------------------- enumeration

const std::vector<BinTree>& binary_shapes(int n) {
  require_degree(n);
  static std::vector<std::vector<BinTree>> cache = {{BinTree()}};
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    std::vector<BinTree> level;
    for (int i = 0; i < m; ++i)
      for (const BinTree& l : cache[i])
        for (const BinTree& r : cache[m - 1 - i]) level.push_back(graft(l, r));
    guard_count(level);
    sort_by_key(level);
    cache.push_back(std::move(level));
  }
  return cache[n];
}

const std::vector<Forest>& forest_shapes(int n) {
  require_degree(n);
  static std::vector<std::vector<Forest>> cache = {{Forest()}};
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    std::vector<Forest> level;
    // Split off the first tree (k vertices), then the rest.
    for (int k = 1; k <= m; ++k)
      for (const RootedTree& first : rooted_tree_shapes(k))
        for (const Forest& rest : cache[m - k]) {
          std::vector<RootedTree> trees = {first};
          trees.insert(trees.end(), rest.trees.begin(), rest.trees.end());
          level.push_back(Forest(std::move(trees)));
        }
    guard_count(level);
    sort_by_key(level);
    cache.push_back(std::move(level));
  }
  return cache[n];
}

const std::vector<RootedTree>& rooted_tree_shapes(int n) {
  if (n < 1) throw DomainError("a rooted tree has at least one vertex");
  static std::vector<std::vector<RootedTree>> cache = {{}};
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    std::vector<RootedTree> level;
    for (const Forest& f : forest_shapes(m - 1)) level.push_back(bplus(f));
    guard_count(level);
    sort_by_key(level);
    cache.push_back(std::move(level));
  }
  return cache[n];
}

namespace {

// All branch lists with r branches and the given total degree.
void branch_lists(int r, int total, std::vector<AngTree>& current,
                  std::vector<AngTree>& out_roots) {
  if (r == 1) {
    for (const AngTree& b : angular_shapes(total)) {
      current.push_back(b);
      out_roots.push_back(angular(current));
      current.pop_back();
    }
    return;
  }
  for (int d = 0; d <= total; ++d)
    for (const AngTree& b : angular_shapes(d)) {
      current.push_back(b);
      branch_lists(r - 1, total - d, current, out_roots);
      current.pop_back();
    }
}

}  // namespace

const std::vector<AngTree>& angular_shapes(int n) {
  require_degree(n);
  static std::vector<std::vector<AngTree>> cache = {{AngTree()}};
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    std::vector<AngTree> level;
    // Root arity r = k + 1 where k >= 1 angles belong to the root.
    for (int r = 2; r <= m + 1; ++r) {
      std::vector<AngTree> current;
      branch_lists(r, m - (r - 1), current, level);
    }
    guard_count(level);
    sort_by_key(level);
    cache.push_back(std::move(level));
  }
  return cache[n];
}

const std::vector<AngTree>& lush_shapes(int n) {
  require_degree(n);
  static std::vector<std::vector<AngTree>> cache;
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    std::vector<AngTree> level;
    for (const AngTree& t : angular_shapes(m))
      if (is_lush(t)) level.push_back(t);
    cache.push_back(std::move(level));
  }
  return cache[n];
}

}  // namespace braidtrees
