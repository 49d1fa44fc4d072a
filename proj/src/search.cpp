#include "longknot/search.hpp"

#include "longknot/gauss_code.hpp"
#include "longknot/moves.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

namespace longknot {

namespace {

std::string state_key(const LongGaussDiagram& d) { return serialize(d); }

struct Node {
    LongGaussDiagram diagram;
    std::size_t parent = 0;
    std::optional<MoveEvent> via;
};

struct Child {
    MoveEvent via;
    LongGaussDiagram diagram;
    std::string key;
};

std::vector<Child> expand(const LongGaussDiagram& d, const SearchOptions& options) {
    MoveKindSet kinds = MoveKindSet::reducing();
    if (d.arrow_count() + 1 <= options.max_arrows) kinds.insert(MoveKind::R1Add);
    if (d.arrow_count() + 2 <= options.max_arrows) kinds.insert(MoveKind::R2Add);
    if (options.band_pass) kinds.insert(MoveKind::BandPass);
    std::vector<Child> out;
    for (MoveEvent& e : enumerate_moves(d, kinds)) {
        LongGaussDiagram next = apply(d, e);
        std::string key = state_key(next);
        out.push_back(Child{std::move(e), std::move(next), std::move(key)});
    }
    return out;
}

std::vector<MoveEvent> path_to(const std::vector<Node>& nodes, std::size_t index) {
    std::vector<MoveEvent> path;
    for (std::size_t i = index; nodes[i].via; i = nodes[i].parent) path.push_back(*nodes[i].via);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

SearchResult search_equivalence(const LongGaussDiagram& a, const LongGaussDiagram& b,
                                const SearchOptions& options) {
    if (options.max_arrows == 0 && (a.arrow_count() > 0 || b.arrow_count() > 0)) {
        return SearchResult{};
    }
    const std::string target = state_key(b);
    SearchResult result;
    std::vector<Node> nodes{Node{a, 0, std::nullopt}};
    std::unordered_set<std::string> visited{state_key(a)};
    result.states_visited = 1;

    auto finish = [&](std::size_t index) {
        std::vector<MoveEvent> path = path_to(nodes, index);
        LongGaussDiagram end = a;
        for (const MoveEvent& e : path) end = apply(end, e);
        if (state_key(end) != target) throw std::logic_error("search path failed replay");
        result.path = std::move(path);
        return result;
    };
    if (visited.contains(target)) return finish(0);
    if (a.arrow_count() > options.max_arrows) return result;

    const unsigned threads =
        options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::size_t> frontier{0};
    for (std::size_t depth = 0; depth < options.max_steps && !frontier.empty(); ++depth) {
        std::vector<std::vector<Child>> children(frontier.size());
        auto work = [&](std::size_t from, std::size_t to) {
            for (std::size_t i = from; i < to; ++i) {
                children[i] = expand(nodes[frontier[i]].diagram, options);
            }
        };
        const std::size_t workers = std::min<std::size_t>(threads, frontier.size());
        if (workers <= 1) {
            work(0, frontier.size());
        } else {
            std::vector<std::jthread> pool;
            const std::size_t chunk = (frontier.size() + workers - 1) / workers;
            for (std::size_t from = 0; from < frontier.size(); from += chunk) {
                pool.emplace_back(work, from, std::min(frontier.size(), from + chunk));
            }
        }
        // Merge in frontier order so results do not depend on scheduling.
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            for (Child& c : children[i]) {
                if (!visited.insert(c.key).second) continue;
                nodes.push_back(Node{std::move(c.diagram), frontier[i], std::move(c.via)});
                ++result.states_visited;
                if (c.key == target) return finish(nodes.size() - 1);
                next.push_back(nodes.size() - 1);
                if (result.states_visited >= options.max_states) {
                    result.truncated = true;
                    return result;
                }
            }
        }
        frontier = std::move(next);
    }
    return result;
}

std::optional<std::vector<MoveEvent>> bounded_equivalence(const LongGaussDiagram& a,
                                                          const LongGaussDiagram& b,
                                                          std::size_t max_arrows,
                                                          std::size_t max_steps) {
    SearchOptions options;
    options.max_arrows = max_arrows;
    options.max_steps = max_steps;
    return search_equivalence(a, b, options).path;
}

}  // namespace longknot
