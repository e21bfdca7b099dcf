// Tri-degree bookkeeping for graded commutative algebras of local forms.
//
// Every object carries a triple (h, v, g): horizontal form degree, vertical
// form degree, and ghost number.  Two homogeneous elements a, b commute up to
// the Koszul sign (-1)^{h_a h_b + (v_a+g_a)(v_b+g_b)}; the same pairing
// governs the graded Leibniz rule and graded commutators of derivations.

#pragma once

#include <string>

namespace gstar {

struct Tridegree {
    int h = 0;  // horizontal form degree
    int v = 0;  // vertical form degree
    int g = 0;  // ghost number (may be negative)

    int total() const { return h + v + g; }
    int parity() const { return ((h + v + g) % 2 + 2) % 2; }

    friend Tridegree operator+(const Tridegree& a, const Tridegree& b) {
        return {a.h + b.h, a.v + b.v, a.g + b.g};
    }
    friend Tridegree operator-(const Tridegree& a, const Tridegree& b) {
        return {a.h - b.h, a.v - b.v, a.g - b.g};
    }
    friend bool operator==(const Tridegree& a, const Tridegree& b) {
        return a.h == b.h && a.v == b.v && a.g == b.g;
    }
    friend bool operator!=(const Tridegree& a, const Tridegree& b) { return !(a == b); }

    std::string str() const {
        return "(" + std::to_string(h) + "," + std::to_string(v) + "," + std::to_string(g) + ")";
    }
};

// Koszul pairing exponent mod 2: h_a h_b + (v_a+g_a)(v_b+g_b).
inline int koszul_pair(const Tridegree& a, const Tridegree& b) {
    long long e = (long long)a.h * b.h + (long long)(a.v + a.g) * (b.v + b.g);
    return (int)((e % 2 + 2) % 2);
}

// Sign (+1/-1) picked up when transposing a past b.
inline int koszul_sign(const Tridegree& a, const Tridegree& b) {
    return koszul_pair(a, b) ? -1 : 1;
}

}  // namespace gstar
