#include "mq/search.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <thread>

namespace mq {

namespace {

int resolveWorkers(int workers) {
    if (workers > 0) return workers;
    if (const char* env = std::getenv("MQ_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// columns are permutations of {1..n}; column y additionally fixes y
std::vector<std::vector<int>> columnCandidates(int n, int y) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        if (p[y - 1] == y) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

struct Backtracker {
    int n;
    std::vector<std::vector<std::vector<int>>> candidates;  // per column
    std::vector<const std::vector<int>*> cols;               // assigned columns
    std::vector<OperationTable> found;

    explicit Backtracker(int order) : n(order) {
        for (int y = 1; y <= n; ++y) candidates.push_back(columnCandidates(n, y));
        cols.assign(n, nullptr);
    }

    int op(int x, int y) const { return (*cols[y - 1])[x - 1]; }

    // self-distributivity constraints that become checkable once column m
    // is in place: (x|>a)|>b = (x|>b)|>(a|>b) with max(a, b, a|>b) = m
    bool consistent(int m) const {
        for (int a = 1; a <= m; ++a)
            for (int b = 1; b <= m; ++b) {
                int ab = op(a, b);
                if (ab > m) continue;
                if (a != m && b != m && ab != m) continue;
                for (int x = 1; x <= n; ++x)
                    if (op(op(x, a), b) != op(op(x, b), ab)) return false;
            }
        return true;
    }

    void extend(int m) {
        if (m > n) {
            std::vector<int> entries(n * n);
            for (int x = 1; x <= n; ++x)
                for (int y = 1; y <= n; ++y) entries[(x - 1) * n + (y - 1)] = op(x, y);
            found.emplace_back(n, std::move(entries));
            return;
        }
        for (const auto& cand : candidates[m - 1]) {
            cols[m - 1] = &cand;
            if (consistent(m)) extend(m + 1);
        }
        cols[m - 1] = nullptr;
    }
};

}  // namespace

OperationTable canonicalQuandle(const OperationTable& t) {
    const int n = t.order;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    OperationTable best = t;
    do {
        std::vector<int> entries(n * n);
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y)
                entries[(p[x - 1] - 1) * n + (p[y - 1] - 1)] = p[t.at(x, y) - 1];
        if (entries < best.entries) best = OperationTable(n, std::move(entries));
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

std::vector<OperationTable> enumerateQuandles(int order, bool upToIsomorphism, bool overrideCap,
                                              int workers) {
    if (order < 1) throw StructuralError("order must be positive");
    if (order > 6 && !overrideCap)
        throw StructuralError("order " + std::to_string(order) +
                              " exceeds the search cap of 6 (pass the override to force)");

    const int nw = std::min(resolveWorkers(workers),
                            static_cast<int>(columnCandidates(order, 1).size()));
    std::vector<std::vector<OperationTable>> parts(nw);
    std::vector<std::thread> pool;
    for (int w = 0; w < nw; ++w)
        pool.emplace_back([&, w] {
            Backtracker bt(order);
            // strided split of the first column's subtrees
            auto firstCol = bt.candidates[0];
            bt.candidates[0].clear();
            for (size_t i = w; i < firstCol.size(); i += nw)
                bt.candidates[0].push_back(firstCol[i]);
            bt.extend(1);
            parts[w] = std::move(bt.found);
        });
    for (auto& th : pool) th.join();

    std::vector<OperationTable> all;
    for (auto& p : parts)
        for (auto& t : p) all.push_back(std::move(t));
    if (upToIsomorphism) {
        std::vector<OperationTable> reps;
        for (const auto& t : all)
            if (canonicalQuandle(t) == t) reps.push_back(t);
        all = std::move(reps);
    }
    std::sort(all.begin(), all.end(),
              [](const OperationTable& a, const OperationTable& b) { return a.entries < b.entries; });
    return all;
}

std::vector<MultiQuandle> assembleMultiQuandles(const std::vector<OperationTable>& tables, int k) {
    if (k < 1) throw StructuralError("k must be positive");
    if (tables.empty()) return {};
    const int n = tables[0].order;
    for (const auto& t : tables)
        if (t.order != n) throw StructuralError("assembly inputs must share one order");

    const int m = static_cast<int>(tables.size());
    std::vector<std::vector<char>> comp(m, std::vector<char>(m, 1));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const OperationTable &A = tables[a], &B = tables[b];
            for (int x = 1; x <= n && comp[a][b]; ++x)
                for (int y = 1; y <= n && comp[a][b]; ++y)
                    for (int z = 1; z <= n; ++z)
                        if (B.at(A.at(x, y), z) != A.at(B.at(x, z), B.at(y, z))) {
                            comp[a][b] = 0;
                            break;
                        }
        }

    std::vector<MultiQuandle> out;
    std::vector<int> idx(k, 0);
    for (;;) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            for (int j = 0; j < k; ++j)
                if (i != j && !comp[idx[i]][idx[j]]) { ok = false; break; }
        if (ok) {
            std::vector<OperationTable> chosen;
            for (int i = 0; i < k; ++i) chosen.push_back(tables[idx[i]]);
            out.emplace_back(std::move(chosen));
        }
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == m - 1) idx[pos--] = 0;
        if (pos < 0) break;
        ++idx[pos];
    }
    return out;
}

long writeSearchCorpus(const std::string& dir, int order, int k, bool upToIsomorphism,
                       bool overrideCap, int workers) {
    auto tables = enumerateQuandles(order, upToIsomorphism, overrideCap, workers);
    auto assembled = assembleMultiQuandles(tables, k);
    std::filesystem::create_directories(dir);
    long count = 0;
    for (const auto& q : assembled) {
        char name[32];
        std::snprintf(name, sizeof name, "q%05ld.mq", ++count);
        std::ofstream out(std::filesystem::path(dir) / name);
        out << serializeQuandle(q);
    }
    std::ofstream mf(std::filesystem::path(dir) / "manifest.txt");
    mf << "order " << order << "\nk " << k << "\nmode "
       << (upToIsomorphism ? "up-to-isomorphism" : "all-labeled") << "\nquandles "
       << tables.size() << "\nmulti-quandles " << count << "\n";
    return count;
}

}  // namespace mq
