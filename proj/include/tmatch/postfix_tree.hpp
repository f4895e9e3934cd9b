#pragma once

#include <string>
#include <vector>

#include "tmatch/errors.hpp"

namespace tmatch {

// Full binary tree with `delta` leaves in left-to-right order (a valid
// postfix order), depth <= ceil(log2(delta)). Node ids are arena-local;
// global_id() adds the arena offset so ids of distinct trees never clash.
struct PostfixTree {
    struct Node {
        int parent = -1;  // local id, -1 for the root
        int left = -1;
        int right = -1;
        int depth = 0;
    };

    int delta = 1;
    int owner = -1;      // vertex this tree belongs to
    int id_offset = 0;   // global id = id_offset + local id
    std::vector<Node> nodes;  // nodes[0] is the root
    std::vector<int> leaves;  // local ids; leaves[i-1] is leaf i

    int node_count() const { return static_cast<int>(nodes.size()); }
    bool is_leaf(int local) const { return nodes[static_cast<size_t>(local)].left < 0; }
    int global_id(int local) const { return id_offset + local; }
};

// Canonical shape: ceil(delta/2) leaves left, floor(delta/2) right,
// recursively. Deterministic for a given (delta, owner, id_offset).
PostfixTree build_tree(int delta, int owner, int id_offset);

int ceil_log2(int x);  // ceil(log2(x)), 0 for x = 1

// Global node ids from the root to leaf i, inclusive.
std::vector<int> root_leaf_path(const PostfixTree& tree, int leaf_index);

struct Separator {
    int a = 1;
    int b = 1;
    std::vector<int> nodes;  // global ids, sorted
};

// The neighborhood of the union of root-to-leaf paths of leaves outside
// [a,b]. Requires a proper sub-interval of [1,delta] with a = 1 or
// b = delta; throws std::invalid_argument otherwise.
Separator separator(const PostfixTree& tree, int a, int b);

// One line per node: "id depth parent kind" (kind is root/inner/leaf).
std::string dump(const PostfixTree& tree);

}  // namespace tmatch
