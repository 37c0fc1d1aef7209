#pragma once

#include <sstream>
#include <string>

#include "mq/core.hpp"

// The order-5 3-quandle all the pinned counts refer to, and its printed
// inverse tables (used to check invert() entry for entry).

inline const char* kMXText =
    "mq v1\n"
    "order 5\n"
    "k 3\n"
    "op 1\n"
    "1 4 5 5 4\n3 2 2 3 3\n2 3 3 2 2\n5 5 1 4 1\n4 1 4 1 5\n"
    "op 2\n"
    "1 1 1 5 4\n3 2 2 3 3\n2 3 3 2 2\n5 4 4 4 1\n4 5 5 1 5\n"
    "op 3\n"
    "1 4 5 1 1\n2 2 2 2 2\n3 3 3 3 3\n4 5 1 4 4\n5 1 4 5 5\n";

inline const int kMXInverse[3][25] = {
    {1, 5, 4, 5, 4,
     3, 2, 2, 3, 3,
     2, 3, 3, 2, 2,
     5, 1, 5, 4, 1,
     4, 4, 1, 1, 5},
    {1, 1, 1, 5, 4,
     3, 2, 2, 3, 3,
     2, 3, 3, 2, 2,
     5, 4, 4, 4, 1,
     4, 5, 5, 1, 5},
    {1, 5, 4, 1, 1,
     2, 2, 2, 2, 2,
     3, 3, 3, 3, 3,
     4, 1, 5, 4, 4,
     5, 4, 1, 5, 5}};

inline mq::MultiQuandle loadMX() {
    std::istringstream in(kMXText);
    return mq::parseQuandle(in);
}
