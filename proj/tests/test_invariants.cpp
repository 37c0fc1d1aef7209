#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <sstream>

#include "common.hpp"
#include "doctest.h"
#include "mq/diagram.hpp"
#include "mq/invariants.hpp"

using namespace mq;

namespace {

ClosableBraid braid(const std::string& spec) { return checkClosable(parseBraid(spec)); }

// Exhaustive reference count: try every arc assignment against every
// crossing relation. Only usable when order^arcs is tiny.
std::uint64_t bruteForceCount(const ColoredDiagram& d, const MultiQuandle& q) {
    auto arcs = d.arcOrder();
    const int m = static_cast<int>(arcs.size());
    std::vector<int> x(m, 1);
    std::uint64_t count = 0;
    while (true) {
        auto value = [&](const std::string& a) {
            for (int i = 0; i < m; ++i)
                if (arcs[i] == a) return x[i];
            throw StructuralError("unknown arc " + a);
        };
        bool ok = true;
        for (const auto& c : d.crossings) {
            int op = d.colorOfArc(c.over);
            int in = value(c.underIn), over = value(c.over);
            int out = c.sign > 0 ? q.apply(op, in, over) : q.applyInv(op, in, over);
            if (out != value(c.underOut)) { ok = false; break; }
        }
        if (ok) ++count;
        int i = 0;
        while (i < m && x[i] == q.order()) x[i++] = 1;
        if (i == m) break;
        ++x[i];
    }
    return count;
}

}  // namespace

TEST_CASE("the empty word acts as the identity") {
    MultiQuandle q = loadMX();
    ColoredBraid b;
    b.strands = 3;
    b.topColors = {1, 2, 3};
    for (int x1 = 1; x1 <= 5; ++x1)
        for (int x2 = 1; x2 <= 5; ++x2) {
            std::vector<int> x = {x1, x2, 3};
            CHECK(braidAction(b, q, x) == x);
        }
}

TEST_CASE("one positive letter maps (x1,x2) to (x2, x1 |>_v2 x2)") {
    MultiQuandle q = loadMX();
    ColoredBraid b = parseBraid("strands=2 word=1 colors=2,3");
    CHECK(braidAction(b, q, {1, 2}) == std::vector<int>{2, 4});  // 1 |>_3 2 = 4
    for (int x1 = 1; x1 <= 5; ++x1)
        for (int x2 = 1; x2 <= 5; ++x2)
            CHECK(braidAction(b, q, {x1, x2}) ==
                  std::vector<int>{x2, q.apply(3, x1, x2)});
}

TEST_CASE("a letter followed by its inverse acts as the identity") {
    MultiQuandle q = loadMX();
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> pickColor(1, 3), pickVal(1, 5), pickGen(1, 2);
    for (int trial = 0; trial < 50; ++trial) {
        int g = pickGen(rng);
        ColoredBraid b;
        b.strands = 3;
        b.word = {g, -g};
        b.topColors = {pickColor(rng), pickColor(rng), pickColor(rng)};
        std::vector<int> x = {pickVal(rng), pickVal(rng), pickVal(rng)};
        CHECK(braidAction(b, q, x) == x);
    }
}

TEST_CASE("closure of the trivial 1-braid has |X| colorings") {
    MultiQuandle q = loadMX();
    ColoringSet s = countColoringsBraid(braid("strands=1 word= colors=2"), q);
    CHECK(s.count == 5);
    CHECK(s.solutions.size() == 5);
    CHECK(s.solutionsComplete);
}

TEST_CASE("reference counts for the two-generator examples") {
    MultiQuandle q = loadMX();
    CHECK(countColoringsBraid(braid("strands=3 word=-1,-1,2,2 colors=1,2,3"), q).count == 23);
    CHECK(countColoringsBraid(braid("strands=3 word=-1,-1,2,2 colors=1,3,2"), q).count == 29);
}

TEST_CASE("reference count for the six-crossing three-component diagram") {
    MultiQuandle q = loadMX();
    ColoredDiagram d = parseDiagramFile("fixtures/borromean.diag");
    ColoringSet s = countColoringsDiagram(d, q);
    CHECK(s.count == 71);
    CHECK(bruteForceCount(d, q) == 71);
}

TEST_CASE("braid engine, diagram engine, and brute force agree") {
    MultiQuandle q = loadMX();
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> pickN(2, 3), pickLen(1, 4), pickColor(1, 3), coin(0, 1);
    int checked = 0;
    while (checked < 40) {
        int n = pickN(rng);
        ColoredBraid raw;
        raw.strands = n;
        std::uniform_int_distribution<int> pickGen(1, n - 1);
        int len = pickLen(rng);
        for (int i = 0; i < len; ++i) raw.word.push_back(pickGen(rng) * (coin(rng) ? 1 : -1));
        raw.topColors.assign(n, 1);
        for (const auto& cyc : permutationInfo(raw).cycles) {
            int c = pickColor(rng);
            for (int s : cyc) raw.topColors[s - 1] = c;
        }
        ClosableBraid b = checkClosable(raw);
        ++checked;

        ColoredDiagram d = closureDiagram(b);
        std::uint64_t viaBraid = countColoringsBraid(b, q).count;
        CHECK(viaBraid == countColoringsDiagram(d, q).count);
        if (std::pow(5.0, static_cast<double>(d.arcOrder().size())) < 2e7)
            CHECK(viaBraid == bruteForceCount(d, q));
    }
}

TEST_CASE("listed braid solutions are fixed points, sorted, and complete") {
    MultiQuandle q = loadMX();
    ClosableBraid b = braid("strands=3 word=-1,-1,2,2 colors=1,2,3");
    ColoringSet s = countColoringsBraid(b, q);
    CHECK(s.variables == std::vector<std::string>{"1", "2", "3"});
    CHECK(s.solutions.size() == s.count);
    CHECK(std::is_sorted(s.solutions.begin(), s.solutions.end()));
    for (const auto& x : s.solutions) CHECK(braidAction(b.braid, q, x) == x);
}

TEST_CASE("listed diagram solutions satisfy every crossing") {
    MultiQuandle q = loadMX();
    ColoredDiagram d = parseDiagramFile("fixtures/borromean.diag");
    ColoringSet s = countColoringsDiagram(d, q);
    CHECK(s.variables == d.arcOrder());
    CHECK(s.solutions.size() == s.count);
    auto arcs = d.arcOrder();
    for (const auto& x : s.solutions) {
        auto value = [&](const std::string& a) {
            for (size_t i = 0; i < arcs.size(); ++i)
                if (arcs[i] == a) return x[i];
            return -1;
        };
        for (const auto& c : d.crossings) {
            int op = d.colorOfArc(c.over);
            int out = c.sign > 0 ? q.apply(op, value(c.underIn), value(c.over))
                                 : q.applyInv(op, value(c.underIn), value(c.over));
            CHECK(out == value(c.underOut));
        }
    }
}

TEST_CASE("the listing cap truncates solutions but not the count") {
    MultiQuandle q = loadMX();
    CountOptions opts;
    opts.listCap = 4;
    ColoringSet s = countColoringsBraid(braid("strands=3 word=-1,-1,2,2 colors=1,2,3"), q, opts);
    CHECK(s.count == 23);
    CHECK(s.solutions.empty());  // a partial listing is dropped, not returned
    CHECK_FALSE(s.solutionsComplete);
    CHECK(s.serialize().find("count 23") == 0);
}

TEST_CASE("worker count does not change results") {
    MultiQuandle q = loadMX();
    ClosableBraid b = braid("strands=3 word=-1,-1,2,2 colors=1,3,2");
    CountOptions one, four;
    one.workers = 1;
    four.workers = 4;
    ColoringSet a = countColoringsBraid(b, q, one);
    ColoringSet c = countColoringsBraid(b, q, four);
    CHECK(a.count == c.count);
    CHECK(a.solutions == c.solutions);
}

TEST_CASE("large state spaces route through the diagram solver and still agree") {
    MultiQuandle q = loadMX();
    ClosableBraid b = braid("strands=3 word=-1,-1,2,2 colors=1,2,3");
    CountOptions opts;
    opts.enumerationCap = 10;  // 5^3 exceeds this, forcing the fallback
    CHECK(countColoringsBraid(b, q, opts).count == 23);
}

TEST_CASE("presentations have one generator per arc, one relation per crossing") {
    ColoredDiagram d = parseDiagramFile("fixtures/borromean.diag");
    Presentation p = extractPresentation(d);
    CHECK(p.generators == std::vector<std::string>{"a", "b", "c", "d", "e", "f"});
    CHECK(p.relations.size() == 6);
    const Relation& r = p.relations[0];
    CHECK(r.lhs == "b");
    CHECK(r.in == "a");
    CHECK(r.over == "c");
    CHECK(r.op == 2);
    CHECK(r.sign == 1);
    std::string text = p.serialize();
    CHECK(text.find("b = a |>2 c") != std::string::npos);
}

TEST_CASE("disjoint unions multiply coloring counts") {
    MultiQuandle q = loadMX();
    ClosableBraid u = braid("strands=1 word= colors=2");
    DisjointUnionResult pinned =
        disjointUnionCheck(braid("strands=3 word=-1,-1,2,2 colors=1,2,3"), u, q);
    CHECK(pinned.equal);
    CHECK(pinned.lhs == 115);  // 23 * 5
    CHECK(pinned.rhs == 115);

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pickLen(0, 4), pickColor(1, 3), coin(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        ColoredBraid raw[2];
        for (auto& r : raw) {
            r.strands = 2;
            int len = pickLen(rng);
            for (int i = 0; i < len; ++i) r.word.push_back(coin(rng) ? 1 : -1);
            r.topColors.assign(2, 1);
            for (const auto& cyc : permutationInfo(r).cycles) {
                int c = pickColor(rng);
                for (int s : cyc) r.topColors[s - 1] = c;
            }
        }
        DisjointUnionResult res =
            disjointUnionCheck(checkClosable(raw[0]), checkClosable(raw[1]), q);
        CHECK(res.equal);
        CHECK(res.lhs == res.rhs);
    }
}

TEST_CASE("coloring sets serialize as a count line plus solution lines") {
    MultiQuandle q = loadMX();
    ColoringSet s = countColoringsBraid(braid("strands=1 word= colors=1"), q);
    std::string text = s.serialize();
    CHECK(text.find("count 5") == 0);
    CHECK(text.find("solution 1") != std::string::npos);
    CHECK(text.find("solution 5") != std::string::npos);
}
