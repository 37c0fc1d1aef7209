#include "mq/core.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace mq {

OperationTable::OperationTable(int n, std::vector<int> e) : order(n), entries(std::move(e)) {
    if (n <= 0) throw StructuralError("table order must be positive");
    if (static_cast<int>(entries.size()) != n * n)
        throw StructuralError("table has " + std::to_string(entries.size()) + " entries, expected " +
                              std::to_string(n * n));
    for (int v : entries)
        if (v < 1 || v > n)
            throw StructuralError("table entry " + std::to_string(v) + " out of range 1.." + std::to_string(n));
}

OperationTable OperationTable::inverted() const {
    OperationTable inv(order, std::vector<int>(entries.size(), 1));
    for (int y = 1; y <= order; ++y)
        for (int x = 1; x <= order; ++x) inv.set(at(x, y), y, x);
    return inv;
}

namespace {

struct Reporter {
    AxiomReport& report;
    int cap;
    void add(AxiomViolation v) {
        report.valid = false;
        if (static_cast<int>(report.violations.size()) < cap)
            report.violations.push_back(std::move(v));
        else
            report.truncated = true;
    }
};

void sortViolations(AxiomReport& r) {
    std::sort(r.violations.begin(), r.violations.end(), [](const AxiomViolation& a, const AxiomViolation& b) {
        return std::tie(a.axiom, a.i, a.j, a.witness) < std::tie(b.axiom, b.i, b.j, b.witness);
    });
}

}  // namespace

AxiomReport validate(const std::vector<OperationTable>& tables, int violationCap) {
    if (tables.empty()) throw StructuralError("need at least one operation table");
    const int n = tables[0].order;
    for (const auto& t : tables) {
        if (t.order != n) throw StructuralError("operation tables have mismatched orders");
        if (static_cast<int>(t.entries.size()) != n * n) throw StructuralError("malformed table");
        for (int v : t.entries)
            if (v < 1 || v > n) throw StructuralError("table entry out of range");
    }
    const int k = static_cast<int>(tables.size());
    AxiomReport report;
    Reporter out{report, violationCap};

    for (int i = 1; i <= k; ++i) {
        const auto& t = tables[i - 1];
        for (int x = 1; x <= n; ++x)
            if (t.at(x, x) != x) out.add({"idempotency", i, 0, {x, 0, 0}});
        for (int y = 1; y <= n; ++y) {
            std::vector<bool> seen(n + 1, false);
            for (int x = 1; x <= n; ++x) seen[t.at(x, y)] = true;
            if (std::find(seen.begin() + 1, seen.end(), false) != seen.end())
                out.add({"bijectivity", i, 0, {0, y, 0}});
        }
    }
    // Self-distributivity (i == j) and cross-distributivity (i != j) share
    // the same shape: (x |>_i y) |>_j z = (x |>_j z) |>_i (y |>_j z).
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            for (int x = 1; x <= n; ++x)
                for (int y = 1; y <= n; ++y)
                    for (int z = 1; z <= n; ++z) {
                        int lhs = tables[j - 1].at(tables[i - 1].at(x, y), z);
                        int rhs = tables[i - 1].at(tables[j - 1].at(x, z), tables[j - 1].at(y, z));
                        if (lhs != rhs)
                            out.add({i == j ? "self-dist" : "cross-dist", i, j, {x, y, z}});
                    }
    sortViolations(report);
    return report;
}

MultiQuandle::MultiQuandle(std::vector<OperationTable> tables) : tables_(std::move(tables)) {
    AxiomReport r = validate(tables_);
    if (!r.valid) {
        std::ostringstream msg;
        msg << "not a multi-quandle:";
        for (const auto& v : r.violations) {
            msg << " [" << v.axiom << " i=" << v.i;
            if (v.j) msg << " j=" << v.j;
            msg << " (" << v.witness[0] << "," << v.witness[1] << "," << v.witness[2] << ")]";
            if (&v - r.violations.data() >= 4) { msg << " ..."; break; }
        }
        throw ValidationError(msg.str());
    }
    order_ = tables_[0].order;
    k_ = static_cast<int>(tables_.size());
    inverses_.reserve(tables_.size());
    for (const auto& t : tables_) inverses_.push_back(t.inverted());
}

std::vector<OperationTable> invert(const MultiQuandle& q) { return q.inverseTables(); }

AxiomReport checkDerivedIdentities(const MultiQuandle& q, int violationCap) {
    const int n = q.order(), k = q.colors();
    AxiomReport report;
    Reporter out{report, violationCap};
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            for (int x = 1; x <= n; ++x)
                for (int y = 1; y <= n; ++y)
                    for (int z = 1; z <= n; ++z) {
                        // (x |>_i y) |>_j^-1 z = (x |>_j^-1 z) |>_i (y |>_j^-1 z)
                        if (q.applyInv(j, q.apply(i, x, y), z) !=
                            q.apply(i, q.applyInv(j, x, z), q.applyInv(j, y, z)))
                            out.add({"mixed-1", i, j, {x, y, z}});
                        // (x |>_i^-1 y) |>_j z = (x |>_j z) |>_i^-1 (y |>_j z)
                        if (q.apply(j, q.applyInv(i, x, y), z) !=
                            q.applyInv(i, q.apply(j, x, z), q.apply(j, y, z)))
                            out.add({"mixed-2", i, j, {x, y, z}});
                        // (x |>_i^-1 y) |>_j^-1 z = (x |>_j^-1 z) |>_i^-1 (y |>_j^-1 z)
                        if (q.applyInv(j, q.applyInv(i, x, y), z) !=
                            q.applyInv(i, q.applyInv(j, x, z), q.applyInv(j, y, z)))
                            out.add({"mixed-3", i, j, {x, y, z}});
                    }
    sortViolations(report);
    return report;
}

namespace {

int mod(long long a, int m) {
    long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

MultiQuandle alexanderMultiQuandle(int modulus, const std::vector<int>& ts) {
    if (modulus < 2) throw StructuralError("modulus must be >= 2");
    if (ts.empty()) throw StructuralError("need at least one t value");
    std::vector<OperationTable> tables;
    for (int t : ts) {
        if (std::gcd(mod(t, modulus), modulus) != 1)
            throw StructuralError("t = " + std::to_string(t) + " is not a unit mod " + std::to_string(modulus));
        OperationTable tab(modulus, std::vector<int>(modulus * modulus, 1));
        for (int x = 0; x < modulus; ++x)
            for (int y = 0; y < modulus; ++y)
                tab.set(x + 1, y + 1, mod(static_cast<long long>(t) * x + static_cast<long long>(1 - t) * y, modulus) + 1);
        tables.push_back(std::move(tab));
    }
    return MultiQuandle(std::move(tables));
}

MultiQuandle conjugationDiquandle(int cyclicOrder, int u1, int u2) {
    // For Z_m the conjugation formula sigma(y)^-1 sigma(x) y collapses,
    // written additively, to u x + (1-u) y: the Alexander form.
    return alexanderMultiQuandle(cyclicOrder, {u1, u2});
}

namespace {

std::string readLine(std::istream& in, int& lineNo) {
    std::string line;
    while (std::getline(in, line)) {
        ++lineNo;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        auto last = line.find_last_not_of(" \t\r");
        return line.substr(first, last - first + 1);
    }
    return {};
}

[[noreturn]] void parseFail(int lineNo, const std::string& what) {
    throw StructuralError("quandle file line " + std::to_string(lineNo) + ": " + what);
}

}  // namespace

MultiQuandle parseQuandle(std::istream& in) {
    int lineNo = 0;
    if (readLine(in, lineNo) != "mq v1") parseFail(lineNo, "expected header 'mq v1'");

    auto expectKeyInt = [&](const std::string& key) {
        std::istringstream ls(readLine(in, lineNo));
        std::string word;
        int value = 0;
        if (!(ls >> word >> value) || word != key || value < 1)
            parseFail(lineNo, "expected '" + key + " <positive int>'");
        return value;
    };
    const int n = expectKeyInt("order");
    const int k = expectKeyInt("k");

    auto readBlock = [&](const std::string& kind, int index) {
        std::istringstream hdr(readLine(in, lineNo));
        std::string word;
        int idx = 0;
        if (!(hdr >> word >> idx) || word != kind || idx != index)
            parseFail(lineNo, "expected '" + kind + " " + std::to_string(index) + "'");
        std::vector<int> entries;
        entries.reserve(n * n);
        for (int row = 0; row < n; ++row) {
            std::istringstream ls(readLine(in, lineNo));
            int v;
            for (int col = 0; col < n; ++col) {
                if (!(ls >> v) || v < 1 || v > n) parseFail(lineNo, "bad table row");
                entries.push_back(v);
            }
            if (ls >> v) parseFail(lineNo, "too many entries in row");
        }
        return OperationTable(n, std::move(entries));
    };

    std::vector<OperationTable> tables;
    for (int i = 1; i <= k; ++i) tables.push_back(readBlock("op", i));
    MultiQuandle q(std::move(tables));

    // Optional inverse blocks are cross-check input only.
    std::string rest;
    std::streampos mark = in.tellg();
    if (!readLine(in, lineNo).empty()) {
        in.seekg(mark);
        lineNo -= 1;
        for (int i = 1; i <= k; ++i) {
            OperationTable inv = readBlock("inv", i);
            if (inv != q.inverseTables()[i - 1])
                throw ValidationError("inv block " + std::to_string(i) +
                                      " does not match the derived inverse table");
        }
    }
    return q;
}

MultiQuandle parseQuandleFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open " + path);
    return parseQuandle(in);
}

std::string serializeQuandle(const MultiQuandle& q) {
    std::ostringstream out;
    out << "mq v1\norder " << q.order() << "\nk " << q.colors() << "\n";
    for (int i = 1; i <= q.colors(); ++i) {
        out << "op " << i << "\n";
        const auto& t = q.tables()[i - 1];
        for (int x = 1; x <= q.order(); ++x) {
            for (int y = 1; y <= q.order(); ++y) out << (y > 1 ? " " : "") << t.at(x, y);
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace mq
