#include "crdyn/condensation.hpp"

#include <algorithm>

namespace crdyn {

Condensation condense(const FiniteRelation& g) {
    const std::size_t n = g.size();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> found; // in reverse topological order
    std::size_t next_index = 0;

    // iterative Tarjan
    struct Frame {
        std::size_t v;
        std::size_t child;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unset) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& f = call.back();
            const auto& succ = g.successors(f.v);
            if (f.child < succ.size()) {
                std::size_t w = succ[f.child++];
                if (index[w] == unset) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            std::size_t v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<std::size_t> c;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    c.push_back(w);
                } while (w != v);
                std::sort(c.begin(), c.end());
                found.push_back(std::move(c));
            }
        }
    }

    Condensation out;
    const std::size_t k = found.size();
    out.members.resize(k);
    for (std::size_t i = 0; i < k; ++i) out.members[i] = std::move(found[k - 1 - i]);
    out.scc_of.assign(n, 0);
    for (std::size_t c = 0; c < k; ++c)
        for (auto v : out.members[c]) out.scc_of[v] = c;
    out.dag_succ.assign(k, {});
    out.live.assign(k, false);
    for (const auto& [a, b] : g.edges()) {
        std::size_t ca = out.scc_of[a], cb = out.scc_of[b];
        if (ca == cb)
            out.live[ca] = true;
        else
            out.dag_succ[ca].push_back(cb);
    }
    for (auto& s : out.dag_succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    return out;
}

std::vector<bool> reachable_components(const Condensation& c, std::size_t from) {
    std::vector<bool> seen(c.count(), false);
    seen[from] = true;
    // ids are topologically ordered, so one forward sweep suffices
    for (std::size_t i = from; i < c.count(); ++i) {
        if (!seen[i]) continue;
        for (auto j : c.dag_succ[i]) seen[j] = true;
    }
    return seen;
}

} // namespace crdyn
