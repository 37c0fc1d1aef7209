#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "common.hpp"
#include "doctest.h"
#include "mq/braid.hpp"

using namespace mq;

TEST_CASE("the braid grammar parses strands, word, and colors") {
    ColoredBraid b = parseBraid("strands=3 word=-1,-1,2,2 colors=1,2,3");
    CHECK(b.strands == 3);
    CHECK(b.word == std::vector<int>{-1, -1, 2, 2});
    CHECK(b.topColors == std::vector<int>{1, 2, 3});
}

TEST_CASE("the empty word is legal") {
    ColoredBraid b = parseBraid("strands=2 word= colors=1,1");
    CHECK(b.word.empty());
}

TEST_CASE("format then parse is the identity") {
    ColoredBraid b = parseBraid("strands=4 word=3,-2,1 colors=2,1,1,3");
    ColoredBraid b2 = parseBraid(formatBraid(b));
    CHECK(b2.strands == b.strands);
    CHECK(b2.word == b.word);
    CHECK(b2.topColors == b.topColors);
}

TEST_CASE("bad specs are rejected with ParseError") {
    CHECK_THROWS_AS(parseBraid("strands=1 word=1 colors=1"), ParseError);
    CHECK_THROWS_AS(parseBraid("strands=3 word=3 colors=1,1,1"), ParseError);   // letter 3 needs 4 strands
    CHECK_THROWS_AS(parseBraid("strands=3 word=0 colors=1,1,1"), ParseError);   // zero letter
    CHECK_THROWS_AS(parseBraid("strands=3 word=1 colors=1,1"), ParseError);     // color count
    CHECK_THROWS_AS(parseBraid("strands=2 word=1"), ParseError);                // missing colors
    CHECK_NOTHROW(parseBraid("word=1 strands=2 colors=1,1"));                  // key order is free
    CHECK_THROWS_AS(parseBraid("strands=2 word=1 colors=1,4", 3), ParseError);  // color cap
    CHECK_NOTHROW(parseBraid("strands=2 word=1 colors=1,4"));                   // no cap given
}

TEST_CASE("permutation, cycles, and bottom colors of a word") {
    // sigma_1 on 3 strands: positions 1 and 2 swap, 3 fixed
    PermutationInfo info = permutationInfo(parseBraid("strands=3 word=1 colors=1,2,3"));
    CHECK(info.perm == std::vector<int>{2, 1, 3});
    CHECK(info.cycles == std::vector<std::vector<int>>{{1, 2}, {3}});
    // the strand starting at 1 (color 1) ends at position 2
    CHECK(info.bottomColors == std::vector<int>{2, 1, 3});

    // a 3-cycle, stored in traversal order from its smallest element
    info = permutationInfo(parseBraid("strands=3 word=1,2 colors=1,1,1"));
    CHECK(info.perm == std::vector<int>{3, 1, 2});
    CHECK(info.cycles == std::vector<std::vector<int>>{{1, 3, 2}});
}

TEST_CASE("closability means colors are constant on permutation cycles") {
    CHECK_NOTHROW(checkClosable(parseBraid("strands=2 word=1,1 colors=2,2")));
    CHECK_NOTHROW(checkClosable(parseBraid("strands=3 word= colors=1,2,3")));
    CHECK_THROWS_AS(checkClosable(parseBraid("strands=2 word=1 colors=1,2")), ValidationError);
    CHECK_THROWS_AS(checkClosable(parseBraid("strands=3 word=1,2 colors=1,1,2")), ValidationError);
}

TEST_CASE("conjugation sandwiches the word and keeps closability") {
    ClosableBraid b = checkClosable(parseBraid("strands=2 word=1,1 colors=2,2"));
    ColoredBraid t = parseBraid("strands=2 word=1 colors=2,2");
    ClosableBraid c = conjugate(b, t);
    CHECK(c.braid.word == std::vector<int>{1, 1, 1, -1});
    CHECK(c.braid.topColors == b.braid.topColors);

    // interface mismatch: t's bottom colors must equal b's top colors
    ColoredBraid bad = parseBraid("strands=2 word=1 colors=1,2");
    CHECK_THROWS_AS(conjugate(b, bad), ValidationError);
}

TEST_CASE("stabilization appends sigma_n^(+-1) on one more strand") {
    ClosableBraid b = checkClosable(parseBraid("strands=2 word=1,1 colors=3,3"));
    ClosableBraid up = stabilize(b, 1);
    CHECK(up.braid.strands == 3);
    CHECK(up.braid.word == std::vector<int>{1, 1, 2});
    CHECK(up.braid.topColors == std::vector<int>{3, 3, 3});
    ClosableBraid down = stabilize(b, -1);
    CHECK(down.braid.word == std::vector<int>{1, 1, -2});
    CHECK_THROWS_AS(stabilize(b, 0), StructuralError);
}

TEST_CASE("juxtaposition shifts the second word past the first braid") {
    ClosableBraid b1 = checkClosable(parseBraid("strands=2 word=1,1 colors=1,1"));
    ClosableBraid b2 = checkClosable(parseBraid("strands=3 word=-2,1,-1 colors=2,2,2"));
    ClosableBraid j = juxtapose(b1, b2);
    CHECK(j.braid.strands == 5);
    CHECK(j.braid.word == std::vector<int>{1, 1, -4, 3, -3});
    CHECK(j.braid.topColors == std::vector<int>{1, 1, 2, 2, 2});
}

TEST_CASE("the inverse braid reverses and negates the word") {
    ColoredBraid b = parseBraid("strands=3 word=1,-2,2 colors=1,1,1");
    ColoredBraid inv = inverseBraid(b);
    CHECK(inv.word == std::vector<int>{-2, 2, -1});
    // inverse of the inverse is the original
    CHECK(inverseBraid(inv).word == b.word);
}
