#include "tmatch/postfix_tree.hpp"

#include <algorithm>
#include <sstream>

namespace tmatch {

int ceil_log2(int x) {
    int log = 0;
    int pow = 1;
    while (pow < x) {
        pow *= 2;
        ++log;
    }
    return log;
}

namespace {

// Builds the subtree carrying `count` leaves, returns its local root id.
int build_rec(PostfixTree& t, int count, int depth) {
    int id = static_cast<int>(t.nodes.size());
    t.nodes.push_back(PostfixTree::Node{-1, -1, -1, depth});
    if (count == 1) {
        t.leaves.push_back(id);
        return id;
    }
    int left = build_rec(t, (count + 1) / 2, depth + 1);
    int right = build_rec(t, count / 2, depth + 1);
    t.nodes[static_cast<size_t>(id)].left = left;
    t.nodes[static_cast<size_t>(id)].right = right;
    t.nodes[static_cast<size_t>(left)].parent = id;
    t.nodes[static_cast<size_t>(right)].parent = id;
    return id;
}

}  // namespace

PostfixTree build_tree(int delta, int owner, int id_offset) {
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    PostfixTree t;
    t.delta = delta;
    t.owner = owner;
    t.id_offset = id_offset;
    t.nodes.reserve(static_cast<size_t>(2 * delta - 1));
    build_rec(t, delta, 0);
    return t;
}

std::vector<int> root_leaf_path(const PostfixTree& tree, int leaf_index) {
    if (leaf_index < 1 || leaf_index > tree.delta)
        throw std::invalid_argument("leaf index out of range");
    std::vector<int> path;
    int v = tree.leaves[static_cast<size_t>(leaf_index - 1)];
    while (v >= 0) {
        path.push_back(tree.global_id(v));
        v = tree.nodes[static_cast<size_t>(v)].parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

Separator separator(const PostfixTree& tree, int a, int b) {
    if (tree.delta < 2) throw std::invalid_argument("separators need delta >= 2");
    if (a < 1 || b > tree.delta || a > b)
        throw std::invalid_argument("interval out of range");
    if (a == 1 && b == tree.delta)
        throw std::invalid_argument("interval must be a proper sub-interval");
    if (a != 1 && b != tree.delta)
        throw std::invalid_argument("interval must touch an end (a=1 or b=delta)");

    std::vector<char> marked(tree.nodes.size(), 0);
    for (int i = 1; i <= tree.delta; ++i) {
        if (i >= a && i <= b) continue;
        int v = tree.leaves[static_cast<size_t>(i - 1)];
        while (v >= 0 && !marked[static_cast<size_t>(v)]) {
            marked[static_cast<size_t>(v)] = 1;
            v = tree.nodes[static_cast<size_t>(v)].parent;
        }
    }
    Separator s{a, b, {}};
    for (int v = 0; v < tree.node_count(); ++v) {
        if (marked[static_cast<size_t>(v)]) continue;
        const auto& node = tree.nodes[static_cast<size_t>(v)];
        bool touches = (node.parent >= 0 && marked[static_cast<size_t>(node.parent)]) ||
                       (node.left >= 0 && marked[static_cast<size_t>(node.left)]) ||
                       (node.right >= 0 && marked[static_cast<size_t>(node.right)]);
        if (touches) s.nodes.push_back(tree.global_id(v));
    }
    std::sort(s.nodes.begin(), s.nodes.end());
    return s;
}

std::string dump(const PostfixTree& tree) {
    std::ostringstream out;
    for (int v = 0; v < tree.node_count(); ++v) {
        const auto& node = tree.nodes[static_cast<size_t>(v)];
        const char* kind = node.parent < 0 ? "root" : (node.left < 0 ? "leaf" : "inner");
        int parent = node.parent < 0 ? -1 : tree.global_id(node.parent);
        out << tree.global_id(v) << ' ' << node.depth << ' ' << parent << ' ' << kind << '\n';
    }
    return out.str();
}

}  // namespace tmatch
