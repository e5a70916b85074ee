#include "cliques.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace joints {

namespace {

struct BitRows {
    int n = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> bits;

    const std::uint64_t* row(int v) const { return bits.data() + static_cast<std::size_t>(v) * words; }
    std::uint64_t* mut_row(int v) { return bits.data() + static_cast<std::size_t>(v) * words; }
};

int popcount_words(const std::uint64_t* w, std::size_t count) {
    int total = 0;
    for (std::size_t i = 0; i < count; ++i) total += std::popcount(w[i]);
    return total;
}

void set_bit(std::uint64_t* w, int i) {
    w[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
}

template <typename Fn>
void for_each_bit(const std::uint64_t* w, std::size_t words, Fn&& fn) {
    for (std::size_t i = 0; i < words; ++i) {
        std::uint64_t word = w[i];
        while (word) {
            const int b = std::countr_zero(word);
            word &= word - 1;
            fn(static_cast<int>(i * 64) + b);
        }
    }
}

// Rows restricted to strictly-later vertices of some fixed ordering.
BitRows later_rows_by_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.order();
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
    BitRows rows{n, (static_cast<std::size_t>(n) + 63) / 64, {}};
    rows.bits.assign(static_cast<std::size_t>(n) * rows.words, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) {
                const int pu = pos[static_cast<std::size_t>(u)];
                const int pv = pos[static_cast<std::size_t>(v)];
                set_bit(rows.mut_row(std::min(pu, pv)), std::max(pu, pv));
            }
    return rows;
}

// Rows restricted to strictly-larger labels; used when counting inside an
// arbitrary candidate mask in label space.
BitRows later_rows_by_label(const Graph& g) {
    const int n = g.order();
    BitRows rows{n, g.words_per_row(), {}};
    rows.bits.assign(static_cast<std::size_t>(n) * rows.words, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) set_bit(rows.mut_row(u), v);
    return rows;
}

// Number of s-cliques whose vertices all lie in `cand`, where `later`
// holds forward neighborhoods of a fixed ordering. scratch must provide
// (s+1) rows of `words` each.
mpz_class count_in_candidates(const BitRows& later, const std::uint64_t* cand, int s,
                              std::vector<std::uint64_t>& scratch, int depth) {
    if (s == 0) return 1;
    if (s == 1) return popcount_words(cand, later.words);
    mpz_class total = 0;
    if (s == 2) {
        // Leaf level: sum of forward-degree restrictions, word-parallel.
        unsigned long long acc = 0;
        for_each_bit(cand, later.words, [&](int p) {
            const std::uint64_t* lp = later.row(p);
            for (std::size_t i = 0; i < later.words; ++i)
                acc += static_cast<unsigned>(std::popcount(cand[i] & lp[i]));
        });
        total = static_cast<unsigned long>(acc);
        return total;
    }
    std::uint64_t* next = scratch.data() + static_cast<std::size_t>(depth) * later.words;
    for_each_bit(cand, later.words, [&](int p) {
        const std::uint64_t* lp = later.row(p);
        bool any = false;
        for (std::size_t i = 0; i < later.words; ++i) {
            next[i] = cand[i] & lp[i];
            any |= next[i] != 0;
        }
        if (any) total += count_in_candidates(later, next, s - 1, scratch, depth + 1);
    });
    return total;
}

void full_mask(std::vector<std::uint64_t>& mask, int n, std::size_t words) {
    mask.assign(words, 0);
    for (int i = 0; i < n; ++i) set_bit(mask.data(), i);
}

}  // namespace

std::vector<int> degeneracy_order(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(n) + 1);
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        buckets[static_cast<std::size_t>(deg[static_cast<std::size_t>(v)])].push_back(v);
    }
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    int floor = 0;
    for (int step = 0; step < n; ++step) {
        while (floor <= n && buckets[static_cast<std::size_t>(floor)].empty()) ++floor;
        int v = -1;
        auto& bucket = buckets[static_cast<std::size_t>(floor)];
        while (!bucket.empty()) {
            int cand = bucket.back();
            bucket.pop_back();
            if (!removed[static_cast<std::size_t>(cand)] && deg[static_cast<std::size_t>(cand)] == floor) {
                v = cand;
                break;
            }
        }
        if (v == -1) {
            --step;  // bucket held only stale entries; rescan
            continue;
        }
        removed[static_cast<std::size_t>(v)] = true;
        order.push_back(v);
        for (int u = 0; u < n; ++u)
            if (!removed[static_cast<std::size_t>(u)] && g.has_edge(v, u)) {
                int& d = deg[static_cast<std::size_t>(u)];
                --d;
                buckets[static_cast<std::size_t>(d)].push_back(u);
                if (d < floor) floor = d;
            }
    }
    return order;
}

mpz_class count_cliques(const Graph& g, int r, unsigned threads) {
    const int n = g.order();
    if (r < 0) throw std::invalid_argument("count_cliques: negative order");
    if (r == 0) return 1;
    if (r > n) return 0;
    if (r == 1) return n;
    const BitRows later = later_rows_by_order(g, degeneracy_order(g));
    std::vector<std::uint64_t> all;
    full_mask(all, n, later.words);

    auto count_range = [&](int begin, int end) {
        std::vector<std::uint64_t> scratch(static_cast<std::size_t>(r + 1) * later.words);
        std::uint64_t* cand = scratch.data() + static_cast<std::size_t>(r) * later.words;
        mpz_class local = 0;
        if (r == 2) {
            unsigned long long acc = 0;
            for (int p = begin; p < end; ++p) acc += static_cast<unsigned long long>(popcount_words(later.row(p), later.words));
            local = static_cast<unsigned long>(acc);
            return local;
        }
        for (int p = begin; p < end; ++p) {
            const std::uint64_t* lp = later.row(p);
            bool any = false;
            for (std::size_t i = 0; i < later.words; ++i) {
                cand[i] = all[i] & lp[i];
                any |= cand[i] != 0;
            }
            if (any) local += count_in_candidates(later, cand, r - 1, scratch, 0);
        }
        return local;
    };

    if (threads <= 1) return count_range(0, n);
    const int t = static_cast<int>(std::min<unsigned>(threads, static_cast<unsigned>(std::max(n, 1))));
    std::vector<mpz_class> partial(static_cast<std::size_t>(t));
    std::vector<std::thread> pool;
    for (int i = 0; i < t; ++i)
        pool.emplace_back([&, i] {
            const int begin = static_cast<int>(static_cast<long long>(n) * i / t);
            const int end = static_cast<int>(static_cast<long long>(n) * (i + 1) / t);
            partial[static_cast<std::size_t>(i)] = count_range(begin, end);
        });
    for (auto& th : pool) th.join();
    mpz_class total = 0;
    for (const auto& p : partial) total += p;
    return total;
}

CliqueVector clique_vector(const Graph& g) {
    const int n = g.order();
    CliqueVector kv;
    kv.counts.push_back(1);
    if (n == 0) return kv;
    kv.counts.push_back(n);
    const BitRows later = later_rows_by_order(g, degeneracy_order(g));
    std::vector<std::uint64_t> all;
    full_mask(all, n, later.words);

    std::vector<std::uint64_t> scratch(static_cast<std::size_t>(n + 1) * later.words);
    auto rec = [&](auto&& self, const std::uint64_t* cand, int depth) -> void {
        const int ext = popcount_words(cand, later.words);
        if (ext == 0) return;
        if (static_cast<int>(kv.counts.size()) <= depth + 1) kv.counts.emplace_back(0);
        if (depth >= 1) kv.counts[static_cast<std::size_t>(depth) + 1] += ext;
        std::uint64_t* next = scratch.data() + static_cast<std::size_t>(depth) * later.words;
        for_each_bit(cand, later.words, [&](int p) {
            const std::uint64_t* lp = later.row(p);
            bool any = false;
            for (std::size_t i = 0; i < later.words; ++i) {
                next[i] = cand[i] & lp[i];
                any |= next[i] != 0;
            }
            if (any) self(self, next, depth + 1);
        });
    };
    rec(rec, all.data(), 0);
    return kv;
}

mpz_class edge_clique_count(const Graph& g, int u, int v, int r) {
    if (r < 2) throw std::invalid_argument("edge_clique_count: order must be >= 2");
    if (u == v || u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v))
        throw std::invalid_argument("edge_clique_count: {u,v} is not an edge");
    if (r == 2) return 1;
    std::vector<std::uint64_t> cand(g.words_per_row());
    common_neighborhood_mask(g, u, v, cand.data());
    if (r == 3) return popcount_words(cand.data(), cand.size());
    const BitRows later = later_rows_by_label(g);
    std::vector<std::uint64_t> scratch(static_cast<std::size_t>(r) * later.words);
    return count_in_candidates(later, cand.data(), r - 2, scratch, 0);
}

JointWitness joint_size(const Graph& g, int r, unsigned threads) {
    if (r < 3)
        throw std::invalid_argument(
            "joint_size: r must be >= 3 (js_2 is a single edge and is left undefined)");
    const int n = g.order();
    JointWitness best;
    best.order = r;
    if (n < r) return best;

    const bool need_later = r > 3;
    const BitRows later = need_later ? later_rows_by_label(g) : BitRows{n, g.words_per_row(), {}};
    const std::size_t words = g.words_per_row();

    auto scan_range = [&](int ubegin, int uend) {
        JointWitness local;
        local.order = r;
        std::vector<std::uint64_t> cand(words);
        std::vector<std::uint64_t> scratch(static_cast<std::size_t>(std::max(r, 1)) * words);
        for (int u = ubegin; u < uend; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (!g.has_edge(u, v)) continue;
                common_neighborhood_mask(g, u, v, cand.data());
                mpz_class c;
                if (r == 3)
                    c = popcount_words(cand.data(), words);
                else
                    c = count_in_candidates(later, cand.data(), r - 2, scratch, 0);
                if (c > local.size || (c == local.size && c > 0 && !local.edge)) {
                    local.size = c;
                    local.edge = {u, v};
                }
            }
        }
        return local;
    };

    const unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max(n, 1))));
    if (t == 1) {
        best = scan_range(0, n);
    } else {
        std::vector<JointWitness> partial(t);
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < t; ++i)
            pool.emplace_back([&, i] {
                const int begin = static_cast<int>(static_cast<long long>(n) * i / t);
                const int end = static_cast<int>(static_cast<long long>(n) * (i + 1) / t);
                partial[i] = scan_range(begin, end);
            });
        for (auto& th : pool) th.join();
        // Merge in ascending chunk order; strict > keeps the lexicographically
        // first witness among maxima.
        for (const auto& p : partial)
            if (p.size > best.size || (p.size == best.size && p.size > 0 && !best.edge)) {
                best.size = p.size;
                best.edge = p.edge;
            }
    }
    if (best.size == 0) best.edge.reset();
    return best;
}

}  // namespace joints
