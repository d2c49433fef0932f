#pragma once

#include <cstddef>

#include "geored/rational.hpp"
#include "geored/types.hpp"

namespace geored {

std::size_t hamming_distance(const Assignment& a, const Assignment& b);

/// Normalized Hamming distance between two witnesses of equal length, as an
/// exact rational in [0,1].
Rational overlap(const Assignment& a, const Assignment& b);

/// Overlap on the quotient by a global value negation: the smaller of
/// d_H(a,b) and d_H(inv(a),b), normalized. Well defined on negation classes
/// because the involution preserves Hamming distance.
Rational overlap_mod_negation(const Assignment& a, const Assignment& b, const Involution& inv);

} // namespace geored
