#include "geored/overlap.hpp"

#include <algorithm>
#include <stdexcept>

namespace geored {

std::size_t hamming_distance(const Assignment& a, const Assignment& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

Rational overlap(const Assignment& a, const Assignment& b) {
    if (a.empty()) throw std::invalid_argument("overlap: empty witnesses");
    return Rational(static_cast<long long>(hamming_distance(a, b)),
                    static_cast<long long>(a.size()));
}

Rational overlap_mod_negation(const Assignment& a, const Assignment& b, const Involution& inv) {
    if (a.empty()) throw std::invalid_argument("overlap: empty witnesses");
    std::size_t plain = hamming_distance(a, b);
    std::size_t flipped = hamming_distance(inv.apply(a), b);
    return Rational(static_cast<long long>(std::min(plain, flipped)),
                    static_cast<long long>(a.size()));
}

} // namespace geored
