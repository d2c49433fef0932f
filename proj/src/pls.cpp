#include "geored/pls.hpp"

#include <algorithm>
#include <stdexcept>

namespace geored {

std::vector<Assignment> neighbors(const Assignment& a) {
    std::vector<Assignment> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Assignment b = a;
        b[i] = Value(1 - b[i]);
        out.push_back(std::move(b));
    }
    return out;
}

bool is_local_max(const CspInstance& weighted, const Assignment& a) {
    std::uint64_t here = maxsat_weight(weighted, a);
    Assignment b = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        b[i] = Value(1 - b[i]);
        if (maxsat_weight(weighted, b) > here) return false;
        b[i] = Value(1 - b[i]);
    }
    return true;
}

std::vector<Assignment> PathWitness::states() const {
    std::vector<Assignment> out;
    out.reserve(flips.size() + 1);
    out.push_back(start);
    Assignment cur = start;
    for (int f : flips) {
        if (f < 0 || std::size_t(f) >= cur.size())
            throw std::invalid_argument("path flip index out of range");
        cur[f] = Value(1 - cur[f]);
        out.push_back(cur);
    }
    return out;
}

void AStarInstance::validate() const {
    base.validate();
    if (base.kind != InstanceKind::weighted_maxsat)
        throw std::invalid_argument("A* instance base must be weighted-maxsat");
    if (start.size() != std::size_t(base.n))
        throw std::invalid_argument("A* instance start length mismatch");
    if (bound < 1) throw std::invalid_argument("A* instance bound must be at least 1");
}

bool is_augmenting_path(const AStarInstance& instance, const PathWitness& w) {
    if (w.start != instance.start) return false;
    if (int(w.flips.size()) > instance.bound) return false;
    for (int f : w.flips)
        if (f < 0 || f >= instance.base.n) return false;
    auto states = w.states();
    std::uint64_t prev = maxsat_weight(instance.base, states[0]);
    for (std::size_t i = 1; i < states.size(); ++i) {
        std::uint64_t cur = maxsat_weight(instance.base, states[i]);
        if (cur <= prev) return false;
        prev = cur;
    }
    return is_local_max(instance.base, states.back());
}

namespace {

void path_search(const AStarInstance& instance, Assignment& state, std::uint64_t weight,
                 std::vector<int>& flips, std::vector<PathWitness>& out) {
    if (is_local_max(instance.base, state)) {
        out.push_back(PathWitness{instance.start, flips});
        // a local maximum has no strictly improving neighbor: stop here
        return;
    }
    if (int(flips.size()) == instance.bound) return;
    for (int v = 0; v < instance.base.n; ++v) {
        state[v] = Value(1 - state[v]);
        std::uint64_t next = maxsat_weight(instance.base, state);
        if (next > weight) {
            flips.push_back(v);
            path_search(instance, state, next, flips, out);
            flips.pop_back();
        }
        state[v] = Value(1 - state[v]);
    }
}

} // namespace

std::vector<PathWitness> exhaustive_augmenting_paths(const AStarInstance& instance) {
    instance.validate();
    std::vector<PathWitness> out;
    Assignment state = instance.start;
    std::vector<int> flips;
    path_search(instance, state, maxsat_weight(instance.base, state), flips, out);
    return out;
}

FlipPositionMap FlipPositionMap::maxsatstar_layout(int n) {
    FlipPositionMap map;
    map.source_vars = n;
    map.position.assign(2 * n + 1, -1);
    for (int j = 0; j < n; ++j) {
        map.position[j] = j;                              // x_{j+1}
        map.position[n + j] = (j + n + 1) % (2 * n + 2);  // b_{j+1}
    }
    return map;
}

PathEncoding encode_path(const PathWitness& w, const FlipPositionMap& order) {
    PathEncoding enc;
    enc.block_length = order.block_length();
    for (int f : w.flips) {
        if (f < 0 || std::size_t(f) >= order.position.size() || order.position[f] < 0)
            throw std::invalid_argument("encode_path: flipped variable has no position");
        int start = order.position[f];
        std::vector<Value> block(enc.block_length, 0);
        for (int i = 0; i <= order.source_vars; ++i)
            block[(start + i) % enc.block_length] = 1;
        enc.blocks.push_back(std::move(block));
    }
    return enc;
}

Assignment PathEncoding::padded_bits(int total_blocks) const {
    if (total_blocks < int(blocks.size()))
        throw std::invalid_argument("padded_bits: path longer than the padded length");
    Assignment out;
    out.reserve(std::size_t(total_blocks) * block_length);
    for (const auto& block : blocks) out.insert(out.end(), block.begin(), block.end());
    out.resize(std::size_t(total_blocks) * block_length, 0);
    return out;
}

PathWitness decode_path(const Assignment& bits, const Assignment& start,
                        const FlipPositionMap& order) {
    int len = order.block_length();
    if (len == 0 || bits.size() % len != 0)
        throw std::invalid_argument("decode_path: bit length is not a multiple of the block length");
    PathWitness w;
    w.start = start;
    bool in_padding = false;
    for (std::size_t off = 0; off < bits.size(); off += len) {
        int ones = 0;
        for (int i = 0; i < len; ++i) ones += bits[off + i];
        if (ones == 0) { in_padding = true; continue; }
        if (in_padding)
            throw std::invalid_argument("decode_path: flip block after padding");
        if (ones != order.ones_per_block())
            throw std::invalid_argument("decode_path: block does not hold n+1 ones");
        // the run starts at the position whose predecessor is 0
        int start_pos = -1;
        for (int i = 0; i < len; ++i) {
            if (bits[off + i] == 1 && bits[off + (i + len - 1) % len] == 0) {
                if (start_pos >= 0)
                    throw std::invalid_argument("decode_path: ones are not circularly consecutive");
                start_pos = i;
            }
        }
        if (start_pos < 0) throw std::invalid_argument("decode_path: malformed block");
        int var = -1;
        for (std::size_t v = 0; v < order.position.size(); ++v) {
            if (order.position[v] == start_pos) { var = int(v); break; }
        }
        if (var < 0) throw std::invalid_argument("decode_path: block start maps to no variable");
        w.flips.push_back(var);
    }
    return w;
}

} // namespace geored
