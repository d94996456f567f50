#include "moma/graph/scc.hpp"

#include <algorithm>

namespace moma {

SccDecomposition strongly_connected_components(const Digraph& g, const std::vector<bool>& active) {
    constexpr std::uint32_t kUnvisited = SccDecomposition::kNoComponent;
    std::size_t n = g.num_nodes();
    SccDecomposition result;
    result.component.assign(n, SccDecomposition::kNoComponent);
    std::vector<std::uint32_t> index(n, kUnvisited);
    std::vector<std::uint32_t> lowlink(n, 0);
    std::vector<bool> onStack(n, false);
    std::vector<std::uint32_t> stack;
    // (node, next edge position)
    std::vector<std::pair<std::uint32_t, std::size_t>> callStack;
    std::uint32_t counter = 0;
    auto isActive = [&](std::uint32_t v) { return active.empty() || active[v]; };

    for (std::uint32_t root = 0; root < n; ++root) {
        if (!isActive(root) || index[root] != kUnvisited) {
            continue;
        }
        callStack.emplace_back(root, g.offsets[root]);
        index[root] = lowlink[root] = counter++;
        stack.push_back(root);
        onStack[root] = true;
        while (!callStack.empty()) {
            auto& [v, pos] = callStack.back();
            if (pos < g.offsets[v + 1]) {
                std::uint32_t w = g.targets[pos++];
                if (!isActive(w)) {
                    continue;
                }
                if (index[w] == kUnvisited) {
                    index[w] = lowlink[w] = counter++;
                    stack.push_back(w);
                    onStack[w] = true;
                    callStack.emplace_back(w, g.offsets[w]);
                } else if (onStack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
                continue;
            }
            std::uint32_t finished = v;
            callStack.pop_back();
            if (!callStack.empty()) {
                std::uint32_t parent = callStack.back().first;
                lowlink[parent] = std::min(lowlink[parent], lowlink[finished]);
            }
            if (lowlink[finished] == index[finished]) {
                auto id = static_cast<std::uint32_t>(result.count++);
                std::uint32_t w = 0;
                do {
                    w = stack.back();
                    stack.pop_back();
                    onStack[w] = false;
                    result.component[w] = id;
                } while (w != finished);
            }
        }
    }
    return result;
}

std::vector<bool> bottom_components(const Digraph& g, const SccDecomposition& scc) {
    std::vector<bool> bottom(scc.count, true);
    for (std::size_t v = 0; v < g.num_nodes(); ++v) {
        std::uint32_t cv = scc.component[v];
        if (cv == SccDecomposition::kNoComponent) {
            continue;
        }
        for (std::size_t e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
            std::uint32_t cw = scc.component[g.targets[e]];
            if (cw != cv) {
                bottom[cv] = false;
            }
        }
    }
    return bottom;
}

}  // namespace moma
