#include "mq/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

namespace mq {

std::string ColoringSet::serialize() const {
    std::ostringstream out;
    out << "count " << count << "\n";
    if (!solutionsComplete) {
        out << "# solution listing capped; only the count is exact\n";
        return out.str();
    }
    for (const auto& sol : solutions) {
        out << "solution ";
        for (size_t i = 0; i < sol.size(); ++i) out << (i ? "," : "") << sol[i];
        out << "\n";
    }
    return out.str();
}

std::vector<int> braidAction(const ColoredBraid& b, const MultiQuandle& q, std::vector<int> x) {
    if (static_cast<int>(x.size()) != b.strands) throw StructuralError("tuple length != strand count");
    for (int v : x)
        if (v < 1 || v > q.order()) throw StructuralError("tuple entry out of quandle range");
    for (int c : b.topColors)
        if (c > q.colors()) throw StructuralError("braid color exceeds quandle color count");
    std::vector<int> v = b.topColors;
    for (int g : b.word) {
        int i = std::abs(g) - 1;
        if (g > 0) {
            int a = x[i], c = x[i + 1];
            x[i] = c;
            x[i + 1] = q.apply(v[i + 1], a, c);
        } else {
            int a = x[i], c = x[i + 1];
            x[i] = q.applyInv(v[i], c, a);
            x[i + 1] = a;
        }
        std::swap(v[i], v[i + 1]);
    }
    return x;
}

namespace {

int resolveWorkers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("MQ_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

// Flattened braid action over the index space {0..n^strands-1}, used by the
// enumeration engine. Deterministic regardless of partitioning.
struct BraidEnumerator {
    const ColoredBraid& b;
    const MultiQuandle& q;

    bool isFixed(std::vector<int>& scratch, std::uint64_t index) const {
        const int n = q.order();
        std::uint64_t rest = index;
        for (int i = 0; i < b.strands; ++i) {
            scratch[i] = static_cast<int>(rest % n) + 1;
            rest /= n;
        }
        std::vector<int> image = braidAction(b, q, scratch);
        return image == scratch;
    }
};

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

void sortSolutions(ColoringSet& set) {
    std::sort(set.solutions.begin(), set.solutions.end());
}

}  // namespace

ColoringSet countColoringsBraid(const ClosableBraid& cb, const MultiQuandle& q,
                                const CountOptions& opts) {
    const ColoredBraid& b = cb.braid;
    const int n = b.strands;
    ColoringSet result;
    for (int p = 1; p <= n; ++p) result.variables.push_back(std::to_string(p));

    const double spaceLog = n * std::log(static_cast<double>(q.order()));
    if (spaceLog > std::log(static_cast<double>(opts.enumerationCap))) {
        // Too large to enumerate: solve the closure diagram by constraint
        // propagation and project solutions onto the top arcs.
        std::vector<std::string> topArcs;
        ColoredDiagram d = closureDiagram(cb, &topArcs);
        ColoringSet ds = countColoringsDiagram(d, q, opts);
        result.count = ds.count;
        result.solutionsComplete = ds.solutionsComplete;
        if (ds.solutionsComplete && opts.listSolutions) {
            std::map<std::string, int> arcIndex;
            for (size_t i = 0; i < ds.variables.size(); ++i) arcIndex[ds.variables[i]] = static_cast<int>(i);
            for (const auto& sol : ds.solutions) {
                std::vector<int> tuple(n);
                for (int p = 0; p < n; ++p) tuple[p] = sol[arcIndex.at(topArcs[p])];
                result.solutions.push_back(std::move(tuple));
            }
            sortSolutions(result);
        }
        return result;
    }

    const std::uint64_t total = ipow(q.order(), n);
    const int workers = std::min<std::uint64_t>(resolveWorkers(opts.workers), total ? total : 1);
    BraidEnumerator en{b, q};

    std::vector<std::uint64_t> counts(workers, 0);
    std::vector<std::vector<std::uint64_t>> hits(workers);
    auto run = [&](int w) {
        std::vector<int> scratch(n);
        const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
        for (std::uint64_t idx = lo; idx < hi; ++idx)
            if (en.isFixed(scratch, idx)) {
                ++counts[w];
                if (opts.listSolutions && hits[w].size() < opts.listCap) hits[w].push_back(idx);
            }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    for (int w = 0; w < workers; ++w) result.count += counts[w];
    if (opts.listSolutions && result.count <= opts.listCap) {
        for (int w = 0; w < workers; ++w)
            for (std::uint64_t idx : hits[w]) {
                std::vector<int> tuple(n);
                std::uint64_t rest = idx;
                for (int i = 0; i < n; ++i) {
                    tuple[i] = static_cast<int>(rest % q.order()) + 1;
                    rest /= q.order();
                }
                result.solutions.push_back(std::move(tuple));
            }
        sortSolutions(result);
    } else if (opts.listSolutions) {
        result.solutionsComplete = false;
    }
    return result;
}

// ------------------------------------------------------------- diagram CSP

namespace {

struct CSPCrossing {
    int over, in, out;  // variable indices
    int op;             // operation subscript
    int sign;
};

struct DiagramSolver {
    const MultiQuandle& q;
    std::vector<CSPCrossing> crossings;
    std::vector<std::vector<int>> touching;  // variable -> crossing indices
    int nvars;

    std::vector<int> value;      // 0 = unassigned
    std::uint64_t count = 0;
    std::vector<std::vector<int>>* sink = nullptr;
    std::uint64_t listCap = 0;
    bool capped = false;

    int forcedValue(const CSPCrossing& c) const {
        // out from (in, over), in from (out, over); sign swaps table and inverse
        if (value[c.in] && value[c.over])
            return c.sign > 0 ? q.apply(c.op, value[c.in], value[c.over])
                              : q.applyInv(c.op, value[c.in], value[c.over]);
        return 0;
    }

    bool propagate(std::vector<int>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& c : crossings) {
                int vin = value[c.in], vover = value[c.over], vout = value[c.out];
                if (vover) {
                    int want = 0, target = -1;
                    if (vin) {
                        want = c.sign > 0 ? q.apply(c.op, vin, vover) : q.applyInv(c.op, vin, vover);
                        target = c.out;
                    } else if (vout) {
                        want = c.sign > 0 ? q.applyInv(c.op, vout, vover) : q.apply(c.op, vout, vover);
                        target = c.in;
                    }
                    if (target >= 0) {
                        if (value[target] == 0) {
                            value[target] = want;
                            trail.push_back(target);
                            changed = true;
                        } else if (value[target] != want) {
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    }

    // candidate count for branching: values of `var` consistent with every
    // crossing whose other two arcs are assigned
    int domainSize(int var, int* firstOk) const {
        int n = q.order(), cnt = 0;
        for (int v = 1; v <= n; ++v) {
            bool ok = true;
            for (int ci : touching[var]) {
                const auto& c = crossings[ci];
                int vin = c.in == var ? v : value[c.in];
                int vover = c.over == var ? v : value[c.over];
                int vout = c.out == var ? v : value[c.out];
                if (vin && vover && vout) {
                    int want = c.sign > 0 ? q.apply(c.op, vin, vover) : q.applyInv(c.op, vin, vover);
                    if (want != vout) { ok = false; break; }
                }
            }
            if (ok) {
                if (cnt == 0 && firstOk) *firstOk = v;
                ++cnt;
            }
        }
        return cnt;
    }

    void solve() {
        std::vector<int> trail;
        if (!propagate(trail)) {
            for (int v : trail) value[v] = 0;
            return;
        }
        int branchVar = -1, branchSize = q.order() + 1;
        for (int v = 0; v < nvars; ++v) {
            if (value[v]) continue;
            int sz = domainSize(v, nullptr);
            if (sz < branchSize) { branchSize = sz; branchVar = v; }
        }
        if (branchVar < 0) {
            ++count;
            if (sink && count <= listCap) sink->push_back(value);
            else if (sink && count > listCap) capped = true;
        } else {
            for (int v = 1; v <= q.order(); ++v) {
                value[branchVar] = v;
                solve();
            }
            value[branchVar] = 0;
        }
        for (int v : trail) value[v] = 0;
    }
};

}  // namespace

ColoringSet countColoringsDiagram(const ColoredDiagram& d, const MultiQuandle& q,
                                  const CountOptions& opts) {
    d.check();
    ColoringSet result;
    result.variables = d.arcOrder();
    std::map<std::string, int> index;
    for (size_t i = 0; i < result.variables.size(); ++i)
        index[result.variables[i]] = static_cast<int>(i);

    DiagramSolver solver{q, {}, {}, static_cast<int>(result.variables.size())};
    for (const auto& c : d.crossings) {
        int op = d.colorOfArc(c.over);
        if (op > q.colors())
            throw StructuralError("diagram color " + std::to_string(op) + " exceeds quandle colors");
        solver.crossings.push_back({index[c.over], index[c.underIn], index[c.underOut], op, c.sign});
    }
    solver.touching.assign(solver.nvars, {});
    for (int ci = 0; ci < static_cast<int>(solver.crossings.size()); ++ci) {
        const auto& c = solver.crossings[ci];
        for (int var : {c.over, c.in, c.out}) solver.touching[var].push_back(ci);
    }
    solver.value.assign(solver.nvars, 0);
    solver.listCap = opts.listCap;
    solver.sink = opts.listSolutions ? &result.solutions : nullptr;
    solver.solve();
    result.count = solver.count;
    if (solver.capped) {
        result.solutions.clear();
        result.solutionsComplete = false;
    } else {
        std::sort(result.solutions.begin(), result.solutions.end());
    }
    return result;
}

std::string Presentation::serialize() const {
    std::ostringstream out;
    for (const auto& g : generators) out << "gen " << g << "\n";
    for (const auto& r : relations)
        out << r.lhs << " = " << r.in << " |>" << r.op << (r.sign < 0 ? "^-1" : "") << " " << r.over
            << "\n";
    return out.str();
}

Presentation extractPresentation(const ColoredDiagram& d) {
    d.check();
    Presentation p;
    p.generators = d.arcOrder();
    for (const auto& c : d.crossings)
        p.relations.push_back({c.underOut, c.underIn, c.over, d.colorOfArc(c.over), c.sign});
    return p;
}

DisjointUnionResult disjointUnionCheck(const ClosableBraid& b1, const ClosableBraid& b2,
                                       const MultiQuandle& q, const CountOptions& opts) {
    CountOptions countOnly = opts;
    countOnly.listSolutions = false;
    DisjointUnionResult r;
    r.lhs = countColoringsBraid(juxtapose(b1, b2), q, countOnly).count;
    r.rhs = countColoringsBraid(b1, q, countOnly).count * countColoringsBraid(b2, q, countOnly).count;
    r.equal = r.lhs == r.rhs;
    return r;
}

}  // namespace mq
