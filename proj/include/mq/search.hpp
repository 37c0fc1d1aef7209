#pragma once

#include <string>
#include <vector>

#include "mq/core.hpp"

// Enumeration of small quandles and their assembly into multi-quandles.

namespace mq {

// Refuses order > 6 unless overrideCap is set; beyond that the tree is
// astronomically large. Output is sorted (lexicographic on entries) so
// runs are deterministic regardless of worker count.
std::vector<OperationTable> enumerateQuandles(int order, bool upToIsomorphism = false,
                                              bool overrideCap = false, int workers = 0);

// Lexicographically least table under simultaneous relabeling of the
// carrier (exhaustive over all order! permutations).
OperationTable canonicalQuandle(const OperationTable& t);

// All k-tuples (with repetition) of the given same-order tables whose
// every ordered pair is cross-distributive. Each result passes validate.
std::vector<MultiQuandle> assembleMultiQuandles(const std::vector<OperationTable>& tables, int k);

// Runs the search and writes one mq v1 file per multi-quandle into dir
// (q00001.mq, ...) plus a manifest.txt with the counts. Returns the
// number of multi-quandles written.
long writeSearchCorpus(const std::string& dir, int order, int k, bool upToIsomorphism,
                       bool overrideCap = false, int workers = 0);

}  // namespace mq
