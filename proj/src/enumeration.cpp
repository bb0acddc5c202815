#include "alphaspectra/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "alphaspectra/parallel.hpp"
#include "alphaspectra/structure.hpp"

namespace alphaspectra {

namespace {

int clamp_budget(long v, int hard_cap) {
    return static_cast<int>(std::clamp(v, 1L, static_cast<long>(hard_cap)));
}

}  // namespace

EnumBudget EnumBudget::from_env() {
    EnumBudget b;
    const char* env = std::getenv("ALPHA_SPECTRA_BUDGET");
    if (!env || !*env) return b;
    std::string s(env);
    auto read_int = [](const std::string& t) { return std::strtol(t.c_str(), nullptr, 10); };
    if (s.find('=') == std::string::npos) {
        long v = read_int(s);
        if (v > 0) {
            b.max_n_trees = clamp_budget(v, 16);
            b.max_n_graphs = clamp_budget(v, 8);
        }
        return b;
    }
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item.rfind("trees=", 0) == 0) b.max_n_trees = clamp_budget(read_int(item.substr(6)), 16);
        if (item.rfind("graphs=", 0) == 0) b.max_n_graphs = clamp_budget(read_int(item.substr(7)), 8);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return b;
}

std::vector<Graph> all_trees(int n, const EnumBudget& budget) {
    if (n < 1) throw std::invalid_argument("all_trees: n >= 1 required");
    if (n > budget.max_n_trees) throw std::out_of_range("all_trees: n over budget");
    std::vector<Graph> level{Graph(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::set<std::string> codes;
        for (const Graph& t : level)
            for (int v = 0; v < t.n(); ++v)
                codes.insert(canonical_code(t.attach_path(v, 1)).bytes);
        level.clear();
        level.reserve(codes.size());
        for (const auto& code : codes) level.push_back(graph6_decode(code));
    }
    return level;
}

std::vector<Graph> all_connected_graphs(int n, const EnumBudget& budget, int jobs) {
    if (n < 1) throw std::invalid_argument("all_connected_graphs: n >= 1 required");
    if (n > budget.max_n_graphs) throw std::out_of_range("all_connected_graphs: n over budget");
    if (n == 1) return {Graph(1, {})};

    int bits = n * (n - 1) / 2;
    std::uint32_t total = 1u << bits;

    // Chunked scan; per-chunk code sets merge into one sorted union, so the
    // output does not depend on the thread count.
    constexpr std::uint32_t kChunk = 1u << 14;
    std::size_t chunks = (total + kChunk - 1) / kChunk;
    auto scan_chunk = [&](std::size_t c) {
        std::set<std::string> local;
        std::uint32_t adj[8];
        std::uint32_t lo = static_cast<std::uint32_t>(c) * kChunk;
        std::uint32_t hi = std::min(total, lo + kChunk);
        for (std::uint32_t mask = lo; mask < hi; ++mask) {
            std::fill(adj, adj + n, 0u);
            int bit = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i, ++bit)
                    if (mask >> bit & 1u) {
                        adj[i] |= 1u << j;
                        adj[j] |= 1u << i;
                    }
            std::uint32_t seen = 1, frontier = 1;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                std::uint32_t add = adj[v] & ~seen;
                seen |= add;
                frontier |= add;
            }
            if (seen != (1u << n) - 1) continue;
            local.insert(canonical_code_from_masks({adj, static_cast<std::size_t>(n)}, n));
        }
        return local;
    };
    auto partials = parallel_map<std::set<std::string>>(chunks, scan_chunk, jobs);

    std::set<std::string> codes;
    for (auto& part : partials) codes.merge(part);
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (const auto& code : codes) out.push_back(graph6_decode(code));
    return out;
}

std::vector<Graph> trees_with_matching(int n, int k, const EnumBudget& budget) {
    if (k < 1 || k > n / 2) throw std::invalid_argument("trees_with_matching: need 1 <= k <= n/2");
    std::vector<Graph> out;
    for (const Graph& t : cached_trees(n, budget))
        if (matching_number(t).size == k) out.push_back(t);
    return out;
}

std::vector<Graph> graphs_with_cut_vertices(int n, int k, const EnumBudget& budget, int jobs) {
    if (k < 0 || (n >= 2 && k > n - 2) || (n == 1 && k != 0))
        throw std::invalid_argument("graphs_with_cut_vertices: k out of range");
    std::vector<Graph> out;
    for (const Graph& g : cached_connected_graphs(n, budget, jobs))
        if (count_cut_vertices(g) == k) out.push_back(g);
    return out;
}

const std::vector<Graph>& cached_trees(int n, const EnumBudget& budget) {
    static std::mutex mtx;
    static std::map<int, std::vector<Graph>> cache;
    std::scoped_lock lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, all_trees(n, budget)).first;
    return it->second;
}

const std::vector<Graph>& cached_connected_graphs(int n, const EnumBudget& budget, int jobs) {
    static std::mutex mtx;
    static std::map<int, std::vector<Graph>> cache;
    std::scoped_lock lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, all_connected_graphs(n, budget, jobs)).first;
    return it->second;
}

}  // namespace alphaspectra
