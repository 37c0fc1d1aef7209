#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mq/braid.hpp"
#include "mq/core.hpp"
#include "mq/diagram.hpp"

// Coloring sets computed two independent ways: fixed points of the braid
// action on X^n, and constraint solving on diagram arcs.

namespace mq {

struct ColoringSet {
    std::vector<std::string> variables;       // arc ids or strand positions ("1".."n")
    std::uint64_t count = 0;
    std::vector<std::vector<int>> solutions;  // lexicographically sorted
    bool solutionsComplete = true;            // false once the listing cap was hit

    std::string serialize() const;            // "count N" + "solution v1,...,vm" lines
};

struct CountOptions {
    std::uint64_t listCap = 1'000'000;     // solutions kept explicitly up to this
    std::uint64_t enumerationCap = 10'000'000;  // |X|^n above this routes through the CSP
    int workers = 0;                       // 0: take MQ_WORKERS env var, else 1
    bool listSolutions = true;
};

// One pass of the colored-braid action on a tuple. Color bookkeeping is
// level by level: the operation subscript at each letter comes from the
// color tuple at that level, which the letter then permutes.
std::vector<int> braidAction(const ColoredBraid& b, const MultiQuandle& q, std::vector<int> x);

// Fixed points of the braid action: |result| equals the coloring count of
// the closure.
ColoringSet countColoringsBraid(const ClosableBraid& b, const MultiQuandle& q,
                                const CountOptions& opts = {});

// All arc colorings satisfying every crossing relation, by worklist
// propagation plus fail-first backtracking. Exact and exhaustive.
ColoringSet countColoringsDiagram(const ColoredDiagram& d, const MultiQuandle& q,
                                  const CountOptions& opts = {});

// Generators = arcs, one relation per crossing:
//   underOut = underIn |>_{color(over)}^{sign} over
struct Relation {
    std::string lhs;    // underOut arc
    std::string in;     // underIn arc
    std::string over;   // over arc
    int op = 1;         // operation subscript = color of the over component
    int sign = 1;       // +1 plain, -1 inverse
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Relation> relations;

    std::string serialize() const;  // "f = e |>3 a" style, one relation per line
};

Presentation extractPresentation(const ColoredDiagram& d);

struct DisjointUnionResult {
    std::uint64_t lhs = 0;  // fixed points of the juxtaposed braid
    std::uint64_t rhs = 0;  // product of the individual counts
    bool equal = false;
};

DisjointUnionResult disjointUnionCheck(const ClosableBraid& b1, const ClosableBraid& b2,
                                       const MultiQuandle& q, const CountOptions& opts = {});

}  // namespace mq
