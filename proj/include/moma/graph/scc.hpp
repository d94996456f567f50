#pragma once

#include <cstdint>
#include <vector>

namespace moma {

// Directed graph in compressed adjacency form.
struct Digraph {
    std::vector<std::size_t> offsets{0};
    std::vector<std::uint32_t> targets;

    [[nodiscard]] std::size_t num_nodes() const { return offsets.size() - 1; }
    void add_node() { offsets.push_back(targets.size()); }
    void add_edge(std::uint32_t target) {
        targets.push_back(target);
        offsets.back() = targets.size();
    }
};

struct SccDecomposition {
    // Component index per node; kNoComponent for nodes excluded from the decomposition.
    std::vector<std::uint32_t> component;
    std::size_t count = 0;
    static constexpr std::uint32_t kNoComponent = 0xffffffffu;
};

// Tarjan's algorithm, iterative. Components are numbered in reverse topological order, so
// component 0 has no edges to other components. Only nodes with active[node] are considered
// when active is nonempty.
[[nodiscard]] SccDecomposition strongly_connected_components(const Digraph& g, const std::vector<bool>& active = {});

// Components without edges leaving them.
[[nodiscard]] std::vector<bool> bottom_components(const Digraph& g, const SccDecomposition& scc);

}  // namespace moma
