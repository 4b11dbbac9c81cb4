#pragma once

#include <vector>

#include "kconn/comm_graph.hpp"
#include "kconn/relocation.hpp"

namespace kconn {

// Blocks (maximal biconnected components, bridges included as two-vertex
// blocks) and articulation vertices of a connected graph, plus the bipartite
// tree adjacency between them.
struct BlockCutTree {
    std::vector<std::vector<int>> blocks;      // each sorted; blocks sorted by content
    std::vector<int> cut_vertices;             // sorted
    std::vector<std::vector<int>> block_cuts;  // per block: its cut vertices
    std::vector<std::vector<int>> cut_blocks;  // per cut vertex (same order): block ids

    bool is_cut(int v) const;
};

// Throws std::invalid_argument when the graph is disconnected.
BlockCutTree block_cut_tree(const CommGraph& graph);

// Net-Builder: contract the k+1 robots nearest the centroid into a clique by
// scaling them toward the centroid, then walk the remaining robots inward
// (nearest first) until each sees at least k already-placed robots.
RestorationPlan net_builder(const Instance& instance, int k);

// Block Translation (2-connectivity only): repeatedly translate a leaf block
// of the block-cut tree toward its cut vertex until a second attachment edge
// to the rest of the graph forms, merging blocks, until one block remains.
RestorationPlan block_translation(const Instance& instance);

}  // namespace kconn
