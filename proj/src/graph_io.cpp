#include "graph_io.hpp"

#include <cctype>
#include <sstream>

namespace joints {

namespace {

constexpr int kGraph6Min = 63;
constexpr int kGraph6Max = 126;
constexpr int kLongHeaderMax = 258047;  // 2^18 - 1

[[noreturn]] void fail_at(std::size_t offset, const std::string& what) {
    throw ParseError("graph6 parse error at byte offset " + std::to_string(offset) + ": " + what);
}

}  // namespace

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kLongHeaderMax)
        throw std::invalid_argument("write_graph6: order exceeds " + std::to_string(kLongHeaderMax));
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kGraph6Min + n));
    } else {
        out.push_back(static_cast<char>(kGraph6Max));
        out.push_back(static_cast<char>(kGraph6Min + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kGraph6Min + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kGraph6Min + (n & 63)));
    }
    int group = 0;
    int filled = 0;
    // Column-major upper triangle: bit (i, j) for j = 1..n-1, i = 0..j-1.
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kGraph6Min + group));
                group = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>(kGraph6Min + (group << (6 - filled))));
    return out;
}

Graph parse_graph6(const std::string& line) {
    std::size_t pos = 0;
    auto need = [&](std::size_t offset) -> int {
        if (offset >= line.size()) fail_at(offset, "unexpected end of input");
        const unsigned char c = static_cast<unsigned char>(line[offset]);
        if (c < kGraph6Min || c > kGraph6Max)
            fail_at(offset, "byte out of graph6 range 63..126");
        return c - kGraph6Min;
    };
    if (line.empty()) fail_at(0, "empty input");
    int n;
    if (static_cast<unsigned char>(line[0]) == kGraph6Max) {
        if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == kGraph6Max)
            fail_at(1, "8-byte header (n > 258047) not supported");
        n = (need(1) << 12) | (need(2) << 6) | need(3);
        if (n <= 62) fail_at(0, "long header used for n <= 62");
        pos = 4;
    } else {
        n = need(0);
        pos = 1;
    }
    Graph g(n);
    const long bits_needed = static_cast<long>(n) * (n - 1) / 2;
    long bit = 0;
    int j = 1, i = 0;
    while (bit < bits_needed) {
        const int group = need(pos);
        for (int b = 5; b >= 0 && bit < bits_needed; --b, ++bit) {
            if ((group >> b) & 1) g.add_edge(i, j);
            if (++i == j) {
                ++j;
                i = 0;
            }
        }
        // Remaining low bits of the final group must be zero padding.
        if (bit == bits_needed) {
            const int pad_bits = static_cast<int>((6 - bits_needed % 6) % 6);
            if (pad_bits > 0 && (group & ((1 << pad_bits) - 1)) != 0)
                fail_at(pos, "nonzero padding bits");
        }
        ++pos;
    }
    if (pos < line.size()) fail_at(pos, "trailing bytes after graph body");
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        if (n < 0) {
            long value;
            if (!(fields >> value)) {
                std::string tail;
                if (fields.clear(), fields.str(line), fields >> tail)
                    throw ParseError("edge list parse error, line " + std::to_string(line_no) +
                                     ": expected vertex count");
                continue;  // blank or comment-only line before the header
            }
            std::string extra;
            if (fields >> extra)
                throw ParseError("edge list parse error, line " + std::to_string(line_no) +
                                 ": header must be a single integer");
            if (value < 0)
                throw ParseError("edge list parse error, line " + std::to_string(line_no) +
                                 ": negative vertex count");
            n = static_cast<int>(value);
            continue;
        }
        long u, v;
        if (!(fields >> u)) continue;  // blank line
        std::string extra;
        if (!(fields >> v) || (fields >> extra))
            throw ParseError("edge list parse error, line " + std::to_string(line_no) +
                             ": expected \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge list parse error, line " + std::to_string(line_no) +
                             ": endpoint out of range 0.." + std::to_string(n - 1));
        if (u == v)
            throw ParseError("edge list parse error, line " + std::to_string(line_no) + ": loop edge");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("edge list parse error: missing vertex-count header line");
    return Graph::from_edges(n, edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph parse_graph_auto(const std::string& text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '\n' || c == '\r' || c == ' ' || c == '\t') continue;
        if (c == '#') {
            const std::size_t eol = text.find('\n', i);
            if (eol == std::string::npos) break;
            i = eol;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_edge_list(text);
        // graph6 payload: take the first nonblank line.
        std::size_t eol = text.find('\n', i);
        std::string line = text.substr(i, eol == std::string::npos ? std::string::npos : eol - i);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        return parse_graph6(line);
    }
    throw ParseError("empty graph input");
}

}  // namespace joints
