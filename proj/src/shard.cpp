#include "ptf/shard.hpp"

#include <algorithm>

namespace ptf {

std::string Shard::label() const {
    std::string out = "S(" + std::to_string(i) + "," + std::to_string(j) + ",{";
    bool first = true;
    for (int v = i + 1; v < j; ++v) {
        if (!((s >> (v - 1)) & 1u)) continue;
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    out += "})";
    return out;
}

bool forces(const Shard& a, const Shard& b) {
    if (a == b) return false;  // strict order
    if (!(b.i <= a.i && a.i < a.j && a.j <= b.j)) return false;
    return a.s == (b.s & a.open_interval_bits());
}

std::vector<Shard> shard_poset(int n) {
    std::vector<Shard> out;
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Shard probe(i, j, 0, n);
            const std::uint32_t open = probe.open_interval_bits();
            // iterate all submasks of the open interval
            std::uint32_t s = 0;
            while (true) {
                out.emplace_back(i, j, s, n);
                if (s == open) break;
                s = (s - open) & open;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string arc_diagram(const Shard& sh) {
    const int width = 2 * sh.n - 1;
    std::string above(width, ' '), mid(width, ' '), below(width, ' ');
    for (int v = 1; v <= sh.n; ++v) {
        const int col = 2 * (v - 1);
        if (v == sh.i || v == sh.j)
            mid[col] = '*';
        else
            mid[col] = 'o';
        if (v > sh.i && v < sh.j) {
            if ((sh.s >> (v - 1)) & 1u)
                above[col] = '-';
            else
                below[col] = '-';
        }
    }
    auto rtrim = [](std::string& s) {
        while (!s.empty() && s.back() == ' ') s.pop_back();
    };
    rtrim(above);
    rtrim(mid);
    rtrim(below);
    return above + "\n" + mid + "\n" + below + "\n";
}

}  // namespace ptf
