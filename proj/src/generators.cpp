#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace joints {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix64(s);
}

std::uint64_t Rng::next() {
    // xoshiro256**
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

std::uint64_t Rng::derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0xa0761d6478bd642fULL * (index + 1));
    return splitmix64(s);
}

PartSizes turan_part_sizes(int n, int r) {
    if (n < 0) throw std::invalid_argument("turan_part_sizes: negative order");
    if (r < 1) throw std::invalid_argument("turan_part_sizes: r must be positive");
    const int parts = std::min(n, r);
    PartSizes result;
    if (parts == 0) return result;
    const int q = n / r;
    const int rem = n % r;
    for (int i = 0; i < parts; ++i) result.sizes.push_back(i < rem ? q + 1 : q);
    // n < r leaves `parts` ones; otherwise rem parts of size q+1 then q's.
    return result;
}

Graph complete_multipartite(const PartSizes& parts) {
    for (int s : parts.sizes)
        if (s < 1) throw std::invalid_argument("complete_multipartite: part sizes must be positive");
    std::vector<int> sorted = parts.sizes;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    const int n = std::accumulate(sorted.begin(), sorted.end(), 0);
    Graph g(n);
    // Contiguous blocks, largest parts first.
    std::vector<int> start;
    int acc = 0;
    for (int s : sorted) {
        start.push_back(acc);
        acc += s;
    }
    for (std::size_t a = 0; a < sorted.size(); ++a)
        for (std::size_t b = a + 1; b < sorted.size(); ++b)
            for (int u = start[a]; u < start[a] + sorted[a]; ++u)
                for (int v = start[b]; v < start[b] + sorted[b]; ++v) g.add_edge(u, v);
    return g;
}

Graph turan(int n, int r) {
    return complete_multipartite(turan_part_sizes(n, r));
}

Graph turan_plus_edge(int n, int r) {
    PartSizes parts = turan_part_sizes(n, r);
    if (parts.sizes.empty() || parts.sizes.front() < 2)
        throw std::invalid_argument("turan_plus_edge: no part of size >= 2 (n <= r)");
    Graph g = turan(n, r);
    // First block is a largest part; join its two lowest labels.
    g.add_edge(0, 1);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph random_graph(int n, const RandomSpec& spec) {
    Rng rng(spec.seed);
    if (const auto* gnp = std::get_if<GnpModel>(&spec.model)) {
        if (gnp->p < 0 || gnp->p > 1) throw std::invalid_argument("gnp: p must lie in [0,1]");
        if (!gnp->p.get_num().fits_ulong_p() || !gnp->p.get_den().fits_ulong_p())
            throw std::invalid_argument("gnp: p numerator/denominator too large");
        const std::uint64_t num = gnp->p.get_num().get_ui();
        const std::uint64_t den = gnp->p.get_den().get_ui();
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(den) < num) g.add_edge(u, v);
        return g;
    }
    const auto& gnm = std::get<GnmModel>(spec.model);
    const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (static_cast<std::uint64_t>(n) - 1) / 2;
    if (n == 0 && gnm.m == 0) return Graph(0);
    if (gnm.m > max_edges) throw std::invalid_argument("gnm: m exceeds n(n-1)/2");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(max_edges);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    // Partial Fisher-Yates: the first m entries are a uniform m-subset.
    for (std::uint64_t i = 0; i < gnm.m; ++i) {
        std::uint64_t j = i + rng.below(max_edges - i);
        std::swap(pairs[i], pairs[j]);
    }
    Graph g(n);
    for (std::uint64_t i = 0; i < gnm.m; ++i) g.add_edge(pairs[i].first, pairs[i].second);
    return g;
}

std::uint64_t labeled_graph_count(int n) {
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    // Mask bit order matches the upper-triangle row-major pair order.
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1u) g.add_edge(u, v);
    return g;
}

void all_labeled_graphs(int n, const std::function<void(std::uint64_t, const Graph&)>& fn) {
    if (n < 0) throw std::invalid_argument("all_labeled_graphs: negative order");
    if (n > kMaxExhaustiveOrder)
        throw std::invalid_argument("all_labeled_graphs: refusing n = " + std::to_string(n) +
                                    " > " + std::to_string(kMaxExhaustiveOrder));
    const std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) fn(mask, graph_from_edge_mask(n, mask));
}

}  // namespace joints
