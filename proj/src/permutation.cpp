#include "ptf/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace ptf {

Permutation::Permutation(std::vector<int> w) : word(std::move(w)) {
    std::vector<bool> seen(word.size() + 1, false);
    for (int v : word) {
        if (v < 1 || v > n() || seen[v])
            throw std::invalid_argument("not a permutation of [n]");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::from_string(const std::string& digits) {
    std::vector<int> w;
    for (char c : digits) w.push_back(c - '0');
    return Permutation(std::move(w));
}

Permutation Permutation::adjacent_swap(int k) const {
    if (k < 1 || k >= n()) throw std::out_of_range("swap position out of range");
    Permutation q = *this;
    std::swap(q.word[k - 1], q.word[k]);
    return q;
}

Permutation Permutation::reversed() const {
    Permutation q = *this;
    std::reverse(q.word.begin(), q.word.end());
    return q;
}

std::string Permutation::str() const {
    std::string s;
    for (int v : word) s += static_cast<char>('0' + v);
    return s;
}

std::vector<std::pair<int, int>> inversion_set(const Permutation& p) {
    std::vector<std::pair<int, int>> inv;
    for (int i = 0; i < p.n(); ++i)
        for (int j = i + 1; j < p.n(); ++j)
            if (p.word[i] > p.word[j]) inv.emplace_back(p.word[i], p.word[j]);
    std::sort(inv.begin(), inv.end());
    return inv;
}

int pair_index(int a, int b, int n) {
    // pairs (a, b), 1 <= a < b <= n, listed a-major
    return (a - 1) * n - (a * (a + 1)) / 2 + b - 1;
}

std::uint64_t inversion_bits(const Permutation& p) {
    std::uint64_t bits = 0;
    for (int i = 0; i < p.n(); ++i)
        for (int j = i + 1; j < p.n(); ++j)
            if (p.word[i] > p.word[j])
                bits |= 1ull << pair_index(p.word[j], p.word[i], p.n());
    return bits;
}

bool weak_leq(const Permutation& p, const Permutation& q) {
    if (p.n() != q.n()) throw std::invalid_argument("size mismatch");
    const std::uint64_t ip = inversion_bits(p), iq = inversion_bits(q);
    return (ip & ~iq) == 0;
}

Shard cover_shard(const Permutation& p, int k) {
    if (k < 1 || k >= p.n()) throw std::out_of_range("position out of range");
    const int a = std::min(p.at(k), p.at(k + 1));
    const int b = std::max(p.at(k), p.at(k + 1));
    std::uint32_t s = 0;
    for (int pos = 1; pos < k; ++pos) {
        const int v = p.at(pos);
        if (a < v && v < b) s |= 1u << (v - 1);
    }
    return Shard(a, b, s, p.n());
}

std::vector<Subset> chamber_rays(const Permutation& p) {
    std::vector<Subset> rays;
    Subset prefix(0, p.n());
    for (int k = 1; k < p.n(); ++k) {
        prefix.bits |= 1u << (p.at(k) - 1);
        rays.push_back(prefix);
    }
    return rays;
}

std::vector<long> direction_alpha(int n) {
    std::vector<long> a(n);
    for (int i = 1; i <= n; ++i) a[i - 1] = 2 * i - n - 1;
    return a;
}

PermTable::PermTable(int n) : n_(n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        perms_.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

std::size_t PermTable::index_of(const Permutation& p) const {
    // Lehmer code gives the lexicographic rank directly.
    std::size_t rank = 0;
    std::size_t fact = 1;
    for (int i = 2; i <= n_; ++i) fact *= i;
    for (int i = 0; i < n_; ++i) {
        fact /= (n_ - i);
        int smaller = 0;
        for (int j = i + 1; j < n_; ++j)
            if (p.word[j] < p.word[i]) ++smaller;
        rank += smaller * fact;
    }
    return rank;
}

}  // namespace ptf
