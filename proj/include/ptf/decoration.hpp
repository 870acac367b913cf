#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptf/subset.hpp"

namespace ptf {

// Node decoration word over {o, d, u, x}:
//   o = none, d = down (split children), u = up (split parents),
//   x = updown (both).
struct Decoration {
    std::string letters;

    Decoration() = default;
    explicit Decoration(std::string s) : letters(std::move(s)) {
        for (char c : letters)
            if (c != 'o' && c != 'd' && c != 'u' && c != 'x')
                throw std::invalid_argument("decoration letters must be o|d|u|x");
        if (letters.empty()) throw std::invalid_argument("empty decoration");
    }

    int n() const { return static_cast<int>(letters.size()); }
    char at(int k) const { return letters[k - 1]; }

    bool in_minus(int k) const { return at(k) == 'd' || at(k) == 'x'; }  // delta^-
    bool in_plus(int k) const { return at(k) == 'u' || at(k) == 'x'; }   // delta^+

    Subset minus_set() const {
        Subset s(0, n());
        for (int k = 1; k <= n(); ++k)
            if (in_minus(k)) s.bits |= 1u << (k - 1);
        return s;
    }
    Subset plus_set() const {
        Subset s(0, n());
        for (int k = 1; k <= n(); ++k)
            if (in_plus(k)) s.bits |= 1u << (k - 1);
        return s;
    }

    // d <-> u swap; the decoration map of the antipodal involution.
    Decoration antipodal() const {
        Decoration out = *this;
        for (char& c : out.letters) {
            if (c == 'd') c = 'u';
            else if (c == 'u') c = 'd';
        }
        return out;
    }

    bool operator==(const Decoration& o) const { return letters == o.letters; }
    bool operator!=(const Decoration& o) const { return !(*this == o); }
    bool operator<(const Decoration& o) const { return letters < o.letters; }
};

// Letter order o < {d, u} < x (d and u incomparable).
inline bool letter_refines(char a, char b) {
    if (a == b) return true;
    if (a == 'o') return true;
    if (b == 'x') return true;
    return false;
}

// Coordinatewise refinement: finer decorations give finer congruences.
inline bool refines(const Decoration& a, const Decoration& b) {
    if (a.n() != b.n()) return false;
    for (int k = 1; k <= a.n(); ++k)
        if (!letter_refines(a.at(k), b.at(k))) return false;
    return true;
}

// The boundary letters never matter: every fan, congruence and counting
// quantity depends on positions 2..n-1 only. Canonicalizing them to 'o'
// gives the cache key for decoration sweeps.
inline Decoration middle_canonical(const Decoration& d) {
    Decoration out = d;
    if (out.n() >= 1) out.letters.front() = 'o';
    if (out.n() >= 2) out.letters.back() = 'o';
    return out;
}

inline std::vector<Decoration> all_decorations(int n) {
    std::vector<Decoration> out;
    const char alphabet[4] = {'o', 'd', 'u', 'x'};
    std::string w(n, 'o');
    std::vector<int> idx(n, 0);
    while (true) {
        out.push_back(Decoration(w));
        int k = n - 1;
        while (k >= 0 && idx[k] == 3) {
            idx[k] = 0;
            w[k] = alphabet[0];
            --k;
        }
        if (k < 0) break;
        ++idx[k];
        w[k] = alphabet[idx[k]];
    }
    return out;
}

}  // namespace ptf
