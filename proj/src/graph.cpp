#include "graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace joints {

namespace {

int popcount_words(const std::uint64_t* w, std::size_t count) {
    int total = 0;
    for (std::size_t i = 0; i < count; ++i) total += std::popcount(w[i]);
    return total;
}

}  // namespace

Graph::Graph(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::check_pair(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
        throw std::invalid_argument("loop edge (" + std::to_string(u) + "," + std::to_string(u) + ")");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    mut_row(u)[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    mut_row(v)[static_cast<std::size_t>(u) >> 6] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    mut_row(u)[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    mut_row(v)[static_cast<std::size_t>(u) >> 6] &= ~(std::uint64_t{1} << (u & 63));
}

void Graph::toggle_edge(int u, int v) {
    check_pair(u, v);
    mut_row(u)[static_cast<std::size_t>(v) >> 6] ^= std::uint64_t{1} << (v & 63);
    mut_row(v)[static_cast<std::size_t>(u) >> 6] ^= std::uint64_t{1} << (u & 63);
}

std::uint64_t Graph::edge_count() const {
    std::uint64_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::uint64_t>(degree(v));
    return twice / 2;
}

int Graph::degree(int v) const {
    return popcount_words(row(v), words_);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> result;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) result.emplace_back(u, v);
    return result;
}

int PartSizes::total() const {
    return std::accumulate(sizes.begin(), sizes.end(), 0);
}

bool PartSizes::balanced() const {
    if (sizes.empty()) return true;
    auto [mn, mx] = std::minmax_element(sizes.begin(), sizes.end());
    return *mx - *mn <= 1;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> s = vertices;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    Graph h(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

void common_neighborhood_mask(const Graph& g, int u, int v, std::uint64_t* out) {
    const std::uint64_t* ru = g.row(u);
    const std::uint64_t* rv = g.row(v);
    for (std::size_t i = 0; i < g.words_per_row(); ++i) out[i] = ru[i] & rv[i];
    out[static_cast<std::size_t>(u) >> 6] &= ~(std::uint64_t{1} << (u & 63));
    out[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::vector<int> common_neighborhood(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("common_neighborhood: u == v");
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
        throw std::invalid_argument("common_neighborhood: vertex out of range");
    std::vector<std::uint64_t> mask(g.words_per_row());
    common_neighborhood_mask(g, u, v, mask.data());
    std::vector<int> result;
    for (int w = 0; w < g.order(); ++w)
        if ((mask[static_cast<std::size_t>(w) >> 6] >> (w & 63)) & 1u) result.push_back(w);
    return result;
}

std::optional<PartSizes> complete_multipartite_decomposition(const Graph& g) {
    const int n = g.order();
    // Components of the complement, each required to be a complement-clique,
    // i.e. an independent set of G that is completely non-adjacent only inside.
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> groups;
    for (int start = 0; start < n; ++start) {
        if (comp[static_cast<std::size_t>(start)] != -1) continue;
        const int id = static_cast<int>(groups.size());
        groups.emplace_back();
        std::vector<int> stack{start};
        comp[static_cast<std::size_t>(start)] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            groups[static_cast<std::size_t>(id)].push_back(u);
            for (int v = 0; v < n; ++v) {
                if (v == u || g.has_edge(u, v)) continue;  // complement edge = non-edge of G
                if (comp[static_cast<std::size_t>(v)] == -1) {
                    comp[static_cast<std::size_t>(v)] = id;
                    stack.push_back(v);
                }
            }
        }
    }
    // Complete multipartite iff every pair inside a component is a non-edge of G.
    for (const auto& group : groups)
        for (std::size_t i = 0; i < group.size(); ++i)
            for (std::size_t j = i + 1; j < group.size(); ++j)
                if (g.has_edge(group[i], group[j])) return std::nullopt;
    PartSizes parts;
    parts.sizes.reserve(groups.size());
    for (const auto& group : groups) parts.sizes.push_back(static_cast<int>(group.size()));
    std::sort(parts.sizes.begin(), parts.sizes.end(), std::greater<int>());
    return parts;
}

bool is_turan(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("is_turan: r must be positive");
    auto parts = complete_multipartite_decomposition(g);
    if (!parts) return false;
    return parts->parts() == std::min(r, g.order()) && parts->balanced();
}

}  // namespace joints
