#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <sstream>
#include <vector>

#include "common.hpp"
#include "doctest.h"
#include "mq/core.hpp"

using namespace mq;

namespace {

OperationTable trivialTable(int n) {
    std::vector<int> e(n * n);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) e[(x - 1) * n + (y - 1)] = x;
    return OperationTable(n, std::move(e));
}

// independent brute-force quandle axiom check (used as the oracle below)
bool isQuandleTable(const OperationTable& t) {
    int n = t.order;
    for (int x = 1; x <= n; ++x)
        if (t.at(x, x) != x) return false;
    for (int y = 1; y <= n; ++y) {
        std::vector<char> hit(n + 1, 0);
        for (int x = 1; x <= n; ++x) hit[t.at(x, y)] = 1;
        for (int v = 1; v <= n; ++v)
            if (!hit[v]) return false;
    }
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z)
                if (t.at(t.at(x, y), z) != t.at(t.at(x, z), t.at(y, z))) return false;
    return true;
}

std::vector<OperationTable> allOrder3Quandles() {
    std::vector<OperationTable> out;
    std::vector<int> e(9);
    for (long code = 0; code < 19683; ++code) {
        long r = code;
        for (int i = 0; i < 9; ++i) { e[i] = static_cast<int>(r % 3) + 1; r /= 3; }
        OperationTable t(3, e);
        if (isQuandleTable(t)) out.push_back(t);
    }
    return out;
}

}  // namespace

TEST_CASE("the order-5 3-quandle validates and exposes order and colors") {
    MultiQuandle q = loadMX();
    CHECK(q.order() == 5);
    CHECK(q.colors() == 3);
    AxiomReport r = validate(q.tables());
    CHECK(r.valid);
    CHECK(r.violations.empty());
}

TEST_CASE("derived inverses match the printed inverse tables entry for entry") {
    MultiQuandle q = loadMX();
    std::vector<OperationTable> inv = invert(q);
    REQUIRE(inv.size() == 3);
    for (int i = 0; i < 3; ++i)
        for (int x = 1; x <= 5; ++x)
            for (int y = 1; y <= 5; ++y)
                CHECK(inv[i].at(x, y) == kMXInverse[i][(x - 1) * 5 + (y - 1)]);
}

TEST_CASE("inverse tables actually invert column-wise") {
    MultiQuandle q = loadMX();
    for (int i = 1; i <= q.colors(); ++i)
        for (int x = 1; x <= q.order(); ++x)
            for (int y = 1; y <= q.order(); ++y) {
                CHECK(q.applyInv(i, q.apply(i, x, y), y) == x);
                CHECK(q.apply(i, q.applyInv(i, x, y), y) == x);
            }
}

TEST_CASE("mixed identities relating ops and their inverses hold") {
    MultiQuandle q = loadMX();
    AxiomReport r = checkDerivedIdentities(q);
    CHECK(r.valid);
}

TEST_CASE("trivial tables form a multi-quandle at any k") {
    std::vector<OperationTable> ts(3, trivialTable(4));
    MultiQuandle q(ts);
    CHECK(q.order() == 4);
    CHECK(q.colors() == 3);
}

TEST_CASE("idempotency violations are reported with witnesses") {
    OperationTable t = trivialTable(3);
    t.set(2, 2, 1);  // also breaks column 2's bijectivity
    AxiomReport r = validate({t});
    CHECK_FALSE(r.valid);
    bool sawIdem = false;
    for (const auto& v : r.violations)
        if (v.axiom == "idempotency" && v.witness[0] == 2) sawIdem = true;
    CHECK(sawIdem);
}

TEST_CASE("bijectivity violations are reported") {
    OperationTable t = trivialTable(3);
    t.set(2, 1, 1);  // column 1 now hits 1 twice and never 2
    AxiomReport r = validate({t});
    CHECK_FALSE(r.valid);
    bool sawBij = false;
    for (const auto& v : r.violations)
        if (v.axiom == "bijectivity") sawBij = true;
    CHECK(sawBij);
}

TEST_CASE("a cross-distributivity failure between two valid quandles is reported") {
    // brute-force search over order-3 quandle pairs for a violating pair
    auto all = allOrder3Quandles();
    bool foundPair = false;
    for (const auto& a : all) {
        for (const auto& b : all) {
            bool cross = true;
            for (int x = 1; x <= 3 && cross; ++x)
                for (int y = 1; y <= 3 && cross; ++y)
                    for (int z = 1; z <= 3; ++z)
                        if (b.at(a.at(x, y), z) != a.at(b.at(x, z), b.at(y, z))) {
                            cross = false;
                            break;
                        }
            if (cross) continue;
            foundPair = true;
            AxiomReport r = validate({a, b});
            CHECK_FALSE(r.valid);
            bool sawCross = false;
            for (const auto& v : r.violations)
                if (v.axiom == "cross-dist") sawCross = true;
            CHECK(sawCross);
            CHECK_THROWS_AS(MultiQuandle({a, b}), ValidationError);
            break;
        }
        if (foundPair) break;
    }
    CHECK(foundPair);
}

TEST_CASE("the violation list respects the cap and flags truncation") {
    std::vector<int> e(25);
    for (int i = 0; i < 25; ++i) e[i] = 1 + i % 5;
    OperationTable t(5, e);
    AxiomReport r = validate({t}, 3);
    CHECK_FALSE(r.valid);
    CHECK(r.truncated);
    CHECK(r.violations.size() == 3);
}

TEST_CASE("structural problems throw instead of reporting violations") {
    CHECK_THROWS_AS(OperationTable(3, std::vector<int>{1, 2}), StructuralError);
    CHECK_THROWS_AS(OperationTable(2, std::vector<int>{1, 2, 3, 0}), StructuralError);
    OperationTable a = trivialTable(2), b = trivialTable(3);
    CHECK_THROWS_AS(validate({a, b}), StructuralError);
    CHECK_THROWS_AS(validate({}), StructuralError);
}

TEST_CASE("alexander multi-quandles satisfy all axioms") {
    MultiQuandle q = alexanderMultiQuandle(5, {2, 3, 4});
    CHECK(q.order() == 5);
    CHECK(q.colors() == 3);
    CHECK(validate(q.tables()).valid);
    // x |>_i y = t_i x + (1 - t_i) y, re-indexed to {1..5}
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            CHECK(q.apply(1, x + 1, y + 1) == (2 * x + (1 - 2 + 10) * y) % 5 + 1);
    CHECK_THROWS_AS(alexanderMultiQuandle(4, {2}), StructuralError);  // 2 not a unit mod 4
    CHECK_THROWS_AS(alexanderMultiQuandle(6, {3}), StructuralError);
}

TEST_CASE("conjugation diquandles on cyclic groups agree with their affine form") {
    MultiQuandle q = conjugationDiquandle(7, 2, 3);
    CHECK(q.order() == 7);
    CHECK(q.colors() == 2);
    CHECK(validate(q.tables()).valid);
    for (int x = 0; x < 7; ++x)
        for (int y = 0; y < 7; ++y)
            CHECK(q.apply(2, x + 1, y + 1) == (3 * x + (1 - 3 + 14) * y) % 7 + 1);
}

TEST_CASE("serialize then parse is the identity") {
    MultiQuandle q = loadMX();
    std::string text = serializeQuandle(q);
    std::istringstream in(text);
    MultiQuandle q2 = parseQuandle(in);
    CHECK(q == q2);
}

TEST_CASE("a wrong inv block is rejected at parse time") {
    // correct inv blocks parse; corrupting one entry is rejected
    std::ostringstream good;
    good << kMXText;
    for (int i = 0; i < 3; ++i) {
        good << "inv " << i + 1 << "\n";
        for (int x = 0; x < 5; ++x) {
            for (int y = 0; y < 5; ++y) good << (y ? " " : "") << kMXInverse[i][5 * x + y];
            good << "\n";
        }
    }
    {
        std::istringstream in(good.str());
        CHECK(parseQuandle(in).order() == 5);
    }
    std::string bad = good.str();
    auto pos = bad.find("inv 2");
    pos = bad.find('\n', pos) + 1;  // first row of inv 2: "1 1 1 5 4"
    bad[pos] = '2';
    std::istringstream in(bad);
    CHECK_THROWS_AS(parseQuandle(in), ValidationError);
}

TEST_CASE("parser rejects malformed headers and bad entries") {
    auto reject = [](const std::string& s) {
        std::istringstream in(s);
        CHECK_THROWS_AS(parseQuandle(in), StructuralError);
    };
    reject("mq v2\norder 1\nk 1\nop 1\n1\n");
    reject("mq v1\norder 0\nk 1\nop 1\n1\n");
    reject("mq v1\norder 2\nk 1\nop 1\n1 2\n2 9\n");
    reject("mq v1\norder 2\nk 1\nop 2\n1 1\n2 2\n");
}

TEST_CASE("comments and blank lines are ignored by the parser") {
    std::string text = std::string("# header comment\n\n") + kMXText;
    std::istringstream in(text);
    CHECK(parseQuandle(in).order() == 5);
}
