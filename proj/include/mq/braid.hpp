#pragma once

#include <string>
#include <vector>

#include "mq/core.hpp"

// Colored braids. Strands run top to bottom; positive letter +i is sigma_i
// (strand at position i passes under the strand at position i+1), negative
// letter -i is its inverse. Words read top to bottom and induced maps
// compose left to right.

namespace mq {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ColoredBraid {
    int strands = 1;
    std::vector<int> word;       // letters g with 1 <= |g| <= strands-1
    std::vector<int> topColors;  // length strands, values in {1..k}
};

struct PermutationInfo {
    std::vector<int> perm;                  // perm[i-1] = image of position i (1-based values)
    std::vector<std::vector<int>> cycles;   // cycle decomposition, each cycle sorted from min
    std::vector<int> bottomColors;
};

// Grammar: strands=<n> word=<signed ints, comma separated, may be empty> colors=<ints>
// Colors must lie in {1..maxColor} when maxColor > 0.
ColoredBraid parseBraid(const std::string& spec, int maxColor = 0);
std::string formatBraid(const ColoredBraid& b);

PermutationInfo permutationInfo(const ColoredBraid& b);

// A braid whose colors are constant on every permutation cycle, so the
// closure is a well-defined colored link.
struct ClosableBraid {
    ColoredBraid braid;
};

// Throws ValidationError naming the offending cycle when not closable.
ClosableBraid checkClosable(const ColoredBraid& b);

// Markov move 2: t . b . t^-1. t's bottom colors must equal b's top colors.
ClosableBraid conjugate(const ClosableBraid& b, const ColoredBraid& t);

// Markov move 1: append sigma_n^{+-1} on n+1 strands, new strand colored
// like strand n.
ClosableBraid stabilize(const ClosableBraid& b, int sign);

// Disjoint juxtaposition: b1 beside b2 on n+m strands.
ClosableBraid juxtapose(const ClosableBraid& b1, const ClosableBraid& b2);

ColoredBraid inverseBraid(const ColoredBraid& b);

}  // namespace mq
