#pragma once

// The three families of planar tree shapes and their combinatorics.
//
//  * BinTree: planar binary trees.  Degree = number of internal
//    vertices; a decoration slot sits at each internal vertex, read in
//    left-to-right (in-order) traversal.
//  * RootedTree / Forest: planar rooted trees with a slot at every
//    vertex, read in preorder (root first, then children left to
//    right); forests read their trees left to right.
//  * AngTree: planar trees whose internal vertices have at least two
//    branches, with a slot in every angle between consecutive
//    branches, read left to right (branch, angle, branch, ...).
//
// In every family a subtree occupies a contiguous run of slot
// positions, which is what makes the cut enumeration below compatible
// with block braidings.
//
// Cuts: a cut removes a descendant-closed set of internal vertices,
// i.e. a disjoint union of complete subtrees.  The removed subtrees
// are listed left to right; the quotient is what remains (for angular
// trees the removed subtrees collapse to leaves, so arities are
// preserved).  Every cut records the slot positions it removes.

#include <memory>
#include <string>
#include <vector>

#include "braidtrees/rational.hpp"

namespace braidtrees {

namespace detail {
struct BinNode;
struct RTNode;
struct AngNode;
}  // namespace detail

struct Forest;

class BinTree {
 public:
  BinTree() = default;  // the leaf
  bool is_leaf() const { return !node_; }
  int degree() const;
  const BinTree& left() const;
  const BinTree& right() const;
  bool operator==(const BinTree& o) const;
  bool operator!=(const BinTree& o) const { return !(*this == o); }

  friend BinTree graft(const BinTree& l, const BinTree& r);

 private:
  std::shared_ptr<const detail::BinNode> node_;
};

// The tree with a new root whose subtrees are l and r.
BinTree graft(const BinTree& l, const BinTree& r);
std::string canonical_key(const BinTree& t);

class RootedTree {
 public:
  RootedTree();  // a single vertex
  int size() const;
  const std::vector<RootedTree>& children() const;
  bool operator==(const RootedTree& o) const;
  bool operator!=(const RootedTree& o) const { return !(*this == o); }

  friend RootedTree bplus(const Forest& f);

 private:
  std::shared_ptr<const detail::RTNode> node_;
};

struct Forest {
  std::vector<RootedTree> trees;
  Forest() = default;
  explicit Forest(std::vector<RootedTree> t) : trees(std::move(t)) {}
  int size() const;
  bool operator==(const Forest& o) const;
  bool operator!=(const Forest& o) const { return !(*this == o); }
};

// The tree with a new root over all trees of the forest.
RootedTree bplus(const Forest& f);
std::string canonical_key(const RootedTree& t);
std::string canonical_key(const Forest& f);

class AngTree {
 public:
  AngTree() = default;  // the leaf
  bool is_leaf() const { return !node_; }
  int angles() const;
  const std::vector<AngTree>& branches() const;
  bool operator==(const AngTree& o) const;
  bool operator!=(const AngTree& o) const { return !(*this == o); }

  friend AngTree angular(std::vector<AngTree> branches);

 private:
  std::shared_ptr<const detail::AngNode> node_;
};

// The tree with a new root whose branches are given (at least two).
AngTree angular(std::vector<AngTree> branches);
std::string canonical_key(const AngTree& t);

namespace detail {
struct BinNode {
  BinTree left;
  BinTree right;
  int degree;
};
struct RTNode {
  std::vector<RootedTree> children;
  int size;
};
struct AngNode {
  std::vector<AngTree> branches;
  int angles;
};
}  // namespace detail

inline int BinTree::degree() const { return node_ ? node_->degree : 0; }
inline int RootedTree::size() const { return node_->size; }
inline const std::vector<RootedTree>& RootedTree::children() const {
  return node_->children;
}
inline int AngTree::angles() const { return node_ ? node_->angles : 0; }

// A tree is lush when no vertex has a leaf in an interior branch slot
// (the first and last branch of a vertex may be leaves).
bool is_lush(const AngTree& t);
// Nesting depth of non-leaf branching: 0 for the leaf, otherwise one
// more than the deepest non-leaf branch.
int lush_depth(const AngTree& t);

struct BinCut {
  std::vector<BinTree> parts;  // removed subtrees, left to right
  BinTree quotient;
  std::vector<int> positions;  // removed slot positions, 1-based, ascending
};
std::vector<BinCut> binary_cuts(const BinTree& t);

struct ForestCut {
  Forest parts;
  Forest quotient;
  std::vector<int> positions;
};
std::vector<ForestCut> forest_cuts(const Forest& f);

struct AngCut {
  std::vector<AngTree> parts;
  AngTree quotient;
  std::vector<int> positions;
};
std::vector<AngCut> angular_cuts(const AngTree& t);

// All shapes of the given degree, sorted by canonical key, cached.
const std::vector<BinTree>& binary_shapes(int n);
const std::vector<RootedTree>& rooted_tree_shapes(int n);  // n >= 1
const std::vector<Forest>& forest_shapes(int n);
const std::vector<AngTree>& angular_shapes(int n);
const std::vector<AngTree>& lush_shapes(int n);

}  // namespace braidtrees
