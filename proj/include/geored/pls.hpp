#pragma once

#include <cstdint>
#include <vector>

#include "geored/csp.hpp"
#include "geored/types.hpp"

namespace geored {

/// All single-flip neighbors of a boolean assignment, ascending by flipped
/// index.
std::vector<Assignment> neighbors(const Assignment& a);

/// True iff no single flip strictly increases the MAX-SAT weight.
bool is_local_max(const CspInstance& weighted, const Assignment& a);

/// A path through candidate-witness space: the start assignment plus the
/// index flipped at each step.
struct PathWitness {
    Assignment start;
    std::vector<int> flips;

    /// States tau_0 .. tau_d' along the path.
    std::vector<Assignment> states() const;

    friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

/// Search-problem instance asking for an augmenting path of length at most
/// d from the start candidate to a local maximum of the weighted formula.
struct AStarInstance {
    CspInstance base; // weighted-maxsat
    Assignment start;
    int bound = 1;

    void validate() const;
    friend bool operator==(const AStarInstance&, const AStarInstance&) = default;
};

/// Checks the three augmenting-path conditions: the path starts at the
/// instance start, every step flips one variable and strictly increases the
/// weight, and the final state is a local maximum. The length must not
/// exceed the bound.
bool is_augmenting_path(const AStarInstance& instance, const PathWitness& w);

/// All augmenting paths of the instance, found by exhaustive search over
/// strictly improving flip sequences. Lexicographic by flip sequence.
std::vector<PathWitness> exhaustive_augmenting_paths(const AStarInstance& instance);

/// Placement of flip events inside encoding blocks: variable v occupies a
/// start position in 0..2n+1 and each block holds n+1 circularly
/// consecutive ones from that position.
struct FlipPositionMap {
    int source_vars = 0;              // n
    std::vector<int> position;        // -1 for variables without a position

    int block_length() const { return 2 * source_vars + 2; }
    int ones_per_block() const { return source_vars + 1; }

    /// The layout used by the SAT to MAX-SAT* reduction: variable x_j at
    /// position j, its shadow b_j offset by n+1 (mod 2n+2), the gate
    /// variable unplaced.
    static FlipPositionMap maxsatstar_layout(int n);
};

/// Fixed-length bit-block encoding of a path's flip sequence.
struct PathEncoding {
    int block_length = 0;
    std::vector<std::vector<Value>> blocks; // each entry 0/1, block_length wide

    /// Flat 0/1 string padded with all-zero blocks up to total_blocks.
    Assignment padded_bits(int total_blocks) const;

    friend bool operator==(const PathEncoding&, const PathEncoding&) = default;
};

PathEncoding encode_path(const PathWitness& w, const FlipPositionMap& order);

/// Inverse of encode_path; throws std::invalid_argument when a block does
/// not consist of exactly n+1 circularly consecutive ones or its start
/// position maps to no variable. Trailing all-zero padding blocks are
/// accepted and dropped.
PathWitness decode_path(const Assignment& bits, const Assignment& start,
                        const FlipPositionMap& order);

} // namespace geored
