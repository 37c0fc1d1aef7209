#include "mq/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace mq {

std::vector<std::string> ColoredDiagram::arcOrder() const {
    std::vector<std::string> order;
    for (const auto& comp : components)
        for (const auto& a : comp.arcs) order.push_back(a);
    return order;
}

int ColoredDiagram::colorOfArc(const std::string& arc) const {
    for (const auto& comp : components)
        for (const auto& a : comp.arcs)
            if (a == arc) return comp.color;
    throw StructuralError("unknown arc '" + arc + "'");
}

void ColoredDiagram::check() const {
    std::set<std::string> seen;
    for (const auto& comp : components) {
        if (comp.arcs.empty()) throw StructuralError("component " + comp.id + " has no arcs");
        if (comp.color < 1) throw StructuralError("component " + comp.id + " has bad color");
        for (const auto& a : comp.arcs)
            if (!seen.insert(a).second)
                throw StructuralError("arc '" + a + "' appears in more than one place");
    }
    std::map<std::string, int> inCount, outCount;
    for (const auto& c : crossings) {
        for (const auto* a : {&c.over, &c.underIn, &c.underOut})
            if (!seen.count(*a)) throw StructuralError("crossing references unknown arc '" + *a + "'");
        if (c.sign != 1 && c.sign != -1) throw StructuralError("crossing sign must be +1 or -1");
        if (++inCount[c.underIn] > 1)
            throw StructuralError("arc '" + c.underIn + "' is underIn of two crossings");
        if (++outCount[c.underOut] > 1)
            throw StructuralError("arc '" + c.underOut + "' is underOut of two crossings");
        // underIn -> underOut must be consecutive on the component cycle
        bool ok = false;
        for (const auto& comp : components) {
            for (size_t i = 0; i < comp.arcs.size(); ++i) {
                const auto& next = comp.arcs[(i + 1) % comp.arcs.size()];
                if (comp.arcs[i] == c.underIn && next == c.underOut) ok = true;
            }
        }
        if (!ok)
            throw StructuralError("crossing under arcs '" + c.underIn + "' -> '" + c.underOut +
                                  "' are not consecutive");
    }
}

namespace {

std::string stripComment(const std::string& line) {
    auto hash = line.find('#');
    std::string s = hash == std::string::npos ? line : line.substr(0, hash);
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string nextContentLine(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        std::string s = stripComment(line);
        if (!s.empty()) return s;
    }
    return {};
}

std::vector<std::string> splitCommas(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

}  // namespace

ColoredDiagram parseDiagram(std::istream& in) {
    if (nextContentLine(in) != "diag v1") throw ParseError("expected header 'diag v1'");
    std::istringstream hdr(nextContentLine(in));
    std::string kw;
    int ncomp = 0;
    if (!(hdr >> kw >> ncomp) || kw != "components" || ncomp < 1)
        throw ParseError("expected 'components <m>'");
    ColoredDiagram d;
    for (int i = 0; i < ncomp; ++i) {
        std::istringstream ls(nextContentLine(in));
        DiagramComponent comp;
        std::string kwc, kwa, arcs;
        if (!(ls >> kw >> comp.id >> kwc >> comp.color >> kwa >> arcs) || kw != "component" ||
            kwc != "color" || kwa != "arcs")
            throw ParseError("expected 'component <id> color <c> arcs <a1,...>'");
        comp.arcs = splitCommas(arcs);
        d.components.push_back(std::move(comp));
    }
    std::istringstream xhdr(nextContentLine(in));
    int ncross = 0;
    if (!(xhdr >> kw >> ncross) || kw != "crossings" || ncross < 0)
        throw ParseError("expected 'crossings <r>'");
    for (int i = 0; i < ncross; ++i) {
        std::istringstream ls(nextContentLine(in));
        std::string x, signTok, overTok, inTok, outTok;
        if (!(ls >> x >> signTok >> overTok >> inTok >> outTok) || x != "x" ||
            (signTok != "+" && signTok != "-"))
            throw ParseError("expected 'x <+|-> over=<arc> in=<arc> out=<arc>'");
        auto field = [](const std::string& tok, const std::string& key) {
            if (tok.rfind(key + "=", 0) != 0) throw ParseError("expected '" + key + "=' in crossing line");
            return tok.substr(key.size() + 1);
        };
        Crossing c;
        c.sign = signTok == "+" ? 1 : -1;
        c.over = field(overTok, "over");
        c.underIn = field(inTok, "in");
        c.underOut = field(outTok, "out");
        d.crossings.push_back(std::move(c));
    }
    d.check();
    return d;
}

ColoredDiagram parseDiagramFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open " + path);
    return parseDiagram(in);
}

std::string serializeDiagram(const ColoredDiagram& d) {
    std::ostringstream out;
    out << "diag v1\ncomponents " << d.components.size() << "\n";
    for (const auto& comp : d.components) {
        out << "component " << comp.id << " color " << comp.color << " arcs ";
        for (size_t i = 0; i < comp.arcs.size(); ++i) out << (i ? "," : "") << comp.arcs[i];
        out << "\n";
    }
    out << "crossings " << d.crossings.size() << "\n";
    for (const auto& c : d.crossings)
        out << "x " << (c.sign > 0 ? "+" : "-") << " over=" << c.over << " in=" << c.underIn
            << " out=" << c.underOut << "\n";
    return out.str();
}

// ---------------------------------------------------------------- PD codes

namespace {

struct PDTerm {
    std::array<int, 4> e;  // a,b,c,d counterclockwise from incoming under edge
};

std::vector<PDTerm> parsePDTerms(const std::string& text) {
    std::vector<PDTerm> terms;
    size_t pos = 0;
    while (true) {
        size_t x = text.find('X', pos);
        if (x == std::string::npos) break;
        size_t open = text.find('[', x);
        size_t close = text.find(']', x);
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw ParseError("malformed PD term near position " + std::to_string(x));
        auto nums = splitCommas(text.substr(open + 1, close - open - 1));
        if (nums.size() != 4) throw ParseError("PD term must have 4 edge labels");
        PDTerm t;
        for (int i = 0; i < 4; ++i) {
            try {
                t.e[i] = std::stoi(nums[i]);
            } catch (const std::exception&) {
                throw ParseError("bad PD edge label '" + nums[i] + "'");
            }
            if (t.e[i] < 1) throw ParseError("PD edge labels must be positive");
        }
        terms.push_back(t);
        pos = close + 1;
    }
    if (terms.empty()) throw ParseError("no X[...] terms in PD code");
    return terms;
}

}  // namespace

ColoredDiagram fromPDCode(const std::string& pdText, const std::vector<int>& componentColors) {
    auto terms = parsePDTerms(pdText);
    const int nEdges = 2 * static_cast<int>(terms.size());

    std::vector<int> uses(nEdges + 1, 0);
    for (const auto& t : terms)
        for (int e : t.e) {
            if (e > nEdges) throw ParseError("PD edge label " + std::to_string(e) + " exceeds 2*crossings");
            ++uses[e];
        }
    for (int e = 1; e <= nEdges; ++e)
        if (uses[e] != 2)
            throw ParseError("PD edge " + std::to_string(e) + " appears " + std::to_string(uses[e]) +
                             " times, expected 2");

    // Components are consecutive label intervals. Two labels e, e+1 lie on
    // the same component exactly when some crossing pairs them (as under or
    // over edges), since the passage between them is such a crossing.
    std::set<std::pair<int, int>> paired;
    for (const auto& t : terms) {
        paired.emplace(std::min(t.e[0], t.e[2]), std::max(t.e[0], t.e[2]));
        paired.emplace(std::min(t.e[1], t.e[3]), std::max(t.e[1], t.e[3]));
    }
    std::vector<int> succ(nEdges + 1, 0), compStart(nEdges + 1, 0);
    for (int s = 1; s <= nEdges;) {
        int t = s;
        while (t < nEdges && paired.count({t, t + 1})) ++t;
        for (int e = s; e <= t; ++e) {
            succ[e] = e < t ? e + 1 : s;
            compStart[e] = s;
        }
        s = t + 1;
    }

    // Each component has one strand slot per edge (the passage out of it).
    // Under passages claim their slot directly; over passages are oriented
    // by elimination. A two-edge component crossing over at both of its
    // passages is genuinely ambiguous; the first such crossing in the text
    // is read as the passage out of the smaller edge.
    std::vector<char> slotUsed(nEdges + 1, 0);
    auto claim = [&](int slot) {
        if (slotUsed[slot])
            throw ParseError("PD edge " + std::to_string(slot) + " has two successors");
        slotUsed[slot] = 1;
    };
    std::vector<int> overFrom(terms.size(), 0);  // over-in edge per crossing
    for (const auto& t : terms) {
        if (succ[t.e[0]] != t.e[2])
            throw ParseError("PD under edges " + std::to_string(t.e[0]) + "," +
                             std::to_string(t.e[2]) + " are not consecutive");
        claim(t.e[0]);
    }
    for (size_t ci = 0; ci < terms.size(); ++ci) {
        int b = terms[ci].e[1], d = terms[ci].e[3];
        if (compStart[b] != compStart[d])
            throw ParseError("PD over edges " + std::to_string(b) + "," + std::to_string(d) +
                             " lie on different components");
        bool bd = succ[b] == d, db = succ[d] == b;
        if (!bd && !db)
            throw ParseError("PD over edges " + std::to_string(b) + "," + std::to_string(d) +
                             " are not consecutive");
        if (bd && db) continue;  // both orientations fit; settled below
        overFrom[ci] = bd ? b : d;
        claim(overFrom[ci]);
    }
    for (size_t ci = 0; ci < terms.size(); ++ci) {
        if (overFrom[ci]) continue;
        int b = terms[ci].e[1], d = terms[ci].e[3];
        int lo = std::min(b, d), hi = std::max(b, d);
        overFrom[ci] = slotUsed[lo] ? hi : lo;
        claim(overFrom[ci]);
    }

    // break the strand after each incoming under edge
    std::vector<bool> breakAfter(nEdges + 1, false);
    for (const auto& t : terms) breakAfter[t.e[0]] = true;

    // components = cycles of succ, ordered by smallest edge
    std::vector<int> arcOf(nEdges + 1, -1), compOf(nEdges + 1, -1);
    ColoredDiagram d;
    std::vector<bool> visited(nEdges + 1, false);
    int arcCounter = 0;
    for (int start = 1; start <= nEdges; ++start) {
        if (visited[start]) continue;
        DiagramComponent comp;
        int compIdx = static_cast<int>(d.components.size());
        comp.id = "c" + std::to_string(compIdx + 1);
        // begin the walk right after an under-pass so arcs are whole
        int anchor = start;
        for (int e = start;; e = succ[e]) {
            if (breakAfter[e]) { anchor = succ[e]; break; }
            if (succ[e] == start) break;  // never goes under
        }
        int e = anchor;
        bool freshArc = true;
        do {
            visited[e] = true;
            compOf[e] = compIdx;
            if (freshArc) {
                comp.arcs.push_back("a" + std::to_string(++arcCounter));
                freshArc = false;
            }
            arcOf[e] = arcCounter;
            if (breakAfter[e]) freshArc = true;
            e = succ[e];
        } while (e != anchor);
        d.components.push_back(std::move(comp));
    }
    if (componentColors.size() != d.components.size())
        throw StructuralError("PD code has " + std::to_string(d.components.size()) +
                              " components but " + std::to_string(componentColors.size()) +
                              " colors were given");
    for (size_t i = 0; i < d.components.size(); ++i) {
        if (componentColors[i] < 1) throw StructuralError("component colors must be >= 1");
        d.components[i].color = componentColors[i];
    }

    for (size_t ci = 0; ci < terms.size(); ++ci) {
        const auto& [e] = terms[ci];
        Crossing c;
        c.underIn = "a" + std::to_string(arcOf[e[0]]);
        c.underOut = "a" + std::to_string(arcOf[e[2]]);
        c.over = "a" + std::to_string(arcOf[e[1]]);
        if (arcOf[e[1]] != arcOf[e[3]])
            throw ParseError("PD over edges " + std::to_string(e[1]) + "," + std::to_string(e[3]) +
                             " land on different arcs");
        // CCW slots from incoming under edge: b sits east, d west.
        // Over running d->b (west to east) makes the frame positive.
        c.sign = overFrom[ci] == e[3] ? 1 : -1;
        d.crossings.push_back(std::move(c));
    }
    d.check();
    return d;
}

std::string pdCodeOfClosure(const ClosableBraid& cb, std::vector<int>* componentColors) {
    const ColoredBraid& b = cb.braid;
    const int n = b.strands;
    const int L = static_cast<int>(b.word.size());
    if (L == 0) throw StructuralError("closure of the empty word has no crossings; no PD code");
    {
        std::vector<char> touched(n, 0);
        for (int g : b.word) touched[std::abs(g) - 1] = touched[std::abs(g)] = 1;
        for (char t : touched)
            if (!t) throw StructuralError("a strand avoids every crossing; no PD code");
    }

    // Follow each component downward through the braid and around the
    // closure, cutting one edge per crossing passage.
    struct Passage {
        int letter;
        bool under;
    };
    std::vector<int> perm(n);  // top position -> bottom position
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int g : b.word) std::swap(perm[std::abs(g) - 1], perm[std::abs(g)]);

    struct Slot {  // per crossing, filled as edges are numbered
        int sign;
        int underIn = 0, underOut = 0, overIn = 0, overOut = 0;
    };
    std::vector<Slot> slots(L);
    for (int t = 0; t < L; ++t) slots[t].sign = b.word[t] > 0 ? 1 : -1;

    std::vector<char> started(n, 0);
    std::vector<int> componentColor;
    int nextEdge = 1;
    for (int start = 0; start < n; ++start) {
        if (started[start]) continue;
        componentColor.push_back(b.topColors[start]);
        std::vector<Passage> passages;
        int p = start;
        do {
            started[p] = 1;
            for (int t = 0; t < L; ++t) {
                int i = std::abs(b.word[t]) - 1;
                if (p == i || p == i + 1) {
                    bool entersLeft = (p == i);
                    bool under = (b.word[t] > 0) == entersLeft;
                    passages.push_back({t, under});
                    p = entersLeft ? i + 1 : i;
                }
            }
        } while (p != start);
        // edge j runs from passage j to passage j+1 (cyclically)
        const int m = static_cast<int>(passages.size());
        // A two-edge component that crosses over at both passages reads back
        // ambiguously; match the parser by letting the textually earlier
        // crossing exit the smaller edge.
        if (m == 2 && !passages[0].under && !passages[1].under &&
            passages[0].letter < passages[1].letter)
            std::swap(passages[0], passages[1]);
        int firstEdge = nextEdge;
        for (int j = 0; j < m; ++j) {
            int in = (j == 0) ? firstEdge + m - 1 : nextEdge - 1;
            int out = nextEdge++;
            Slot& s = slots[passages[j].letter];
            if (passages[j].under) { s.underIn = in; s.underOut = out; }
            else                   { s.overIn = in;  s.overOut = out; }
        }
    }

    std::ostringstream out;
    for (int t = 0; t < L; ++t) {
        const Slot& s = slots[t];
        int bslot = s.sign > 0 ? s.overOut : s.overIn;
        int dslot = s.sign > 0 ? s.overIn : s.overOut;
        out << (t ? " " : "") << "X[" << s.underIn << "," << bslot << "," << s.underOut << ","
            << dslot << "]";
    }
    if (componentColors) *componentColors = componentColor;
    return out.str();
}

// ------------------------------------------------------------ braid closure

namespace {

struct TokenUF {
    std::vector<int> parent;
    int make() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void merge(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ColoredDiagram closureDiagram(const ClosableBraid& cb, std::vector<std::string>* topArcs) {
    const ColoredBraid& b = cb.braid;
    const int n = b.strands;

    TokenUF uf;
    std::vector<int> arcAt(n);          // current arc token per position
    std::vector<int> strandAt(n);       // strand identity per position
    for (int p = 0; p < n; ++p) {
        arcAt[p] = uf.make();
        strandAt[p] = p + 1;
    }
    struct TokCrossing { int sign, over, in, out; };
    std::vector<TokCrossing> tcross;
    // per strand, the under-pass events in order: (crossing index)
    std::vector<std::vector<int>> underEvents(n + 1);

    for (int g : b.word) {
        int idx = std::abs(g) - 1;
        if (g > 0) {
            int t = uf.make();
            tcross.push_back({+1, arcAt[idx + 1], arcAt[idx], t});
            underEvents[strandAt[idx]].push_back(static_cast<int>(tcross.size()) - 1);
            arcAt[idx] = arcAt[idx + 1];
            arcAt[idx + 1] = t;
        } else {
            int t = uf.make();
            tcross.push_back({-1, arcAt[idx], arcAt[idx + 1], t});
            underEvents[strandAt[idx + 1]].push_back(static_cast<int>(tcross.size()) - 1);
            arcAt[idx + 1] = arcAt[idx];
            arcAt[idx] = t;
        }
        std::swap(strandAt[idx], strandAt[idx + 1]);
    }
    // close up: bottom of position p joins top of position p
    for (int p = 0; p < n; ++p) uf.merge(arcAt[p], p);

    PermutationInfo info = permutationInfo(b);

    // name arcs in component traversal order
    std::map<int, std::string> name;
    ColoredDiagram d;
    int arcCounter = 0;
    auto nameOf = [&](int tok) -> std::string& { return name[uf.find(tok)]; };
    for (const auto& cycle : info.cycles) {
        DiagramComponent comp;
        comp.id = "c" + std::to_string(d.components.size() + 1);
        comp.color = b.topColors[cycle[0] - 1];
        for (int s : cycle) {
            // arcs met along strand s: its top arc, then one per under-pass
            int topTok = uf.find(s - 1);
            if (nameOf(topTok).empty()) {
                nameOf(topTok) = "a" + std::to_string(++arcCounter);
                comp.arcs.push_back(nameOf(topTok));
            }
            for (int ci : underEvents[s]) {
                int tok = uf.find(tcross[ci].out);
                if (nameOf(tok).empty()) {
                    nameOf(tok) = "a" + std::to_string(++arcCounter);
                    comp.arcs.push_back(nameOf(tok));
                }
            }
        }
        d.components.push_back(std::move(comp));
    }
    for (const auto& tc : tcross)
        d.crossings.push_back({tc.sign, name[uf.find(tc.over)], name[uf.find(tc.in)], name[uf.find(tc.out)]});
    if (topArcs) {
        topArcs->clear();
        for (int p = 0; p < n; ++p) topArcs->push_back(name[uf.find(p)]);
    }
    d.check();
    return d;
}

// ------------------------------------------------------- Reidemeister moves

namespace {

std::string freshArcId(const ColoredDiagram& d, int& counter) {
    std::set<std::string> used;
    for (const auto& comp : d.components)
        for (const auto& a : comp.arcs) used.insert(a);
    std::string id;
    do {
        id = "m" + std::to_string(++counter);
    } while (used.count(id));
    return id;
}

DiagramComponent& componentOf(ColoredDiagram& d, const std::string& arc) {
    for (auto& comp : d.components)
        for (const auto& a : comp.arcs)
            if (a == arc) return comp;
    throw StructuralError("unknown arc '" + arc + "'");
}

void renameArc(ColoredDiagram& d, const std::string& from, const std::string& to) {
    for (auto& c : d.crossings) {
        if (c.over == from) c.over = to;
        if (c.underIn == from) c.underIn = to;
        if (c.underOut == from) c.underOut = to;
    }
    for (auto& comp : d.components)
        for (auto& a : comp.arcs)
            if (a == from) a = to;
}

// Split arc `a` just before its end boundary; the tail becomes a fresh arc.
// Returns the tail arc id. The crossing currently consuming `a` as underIn
// is rewired to the tail; over references stay on `a`.
std::string splitArcAtEnd(ColoredDiagram& d, const std::string& a, int& counter) {
    std::string tail = freshArcId(d, counter);
    auto& comp = componentOf(d, a);
    auto it = std::find(comp.arcs.begin(), comp.arcs.end(), a);
    comp.arcs.insert(it + 1, tail);
    for (auto& c : d.crossings)
        if (c.underIn == a) c.underIn = tail;
    return tail;
}

bool isCrossingFree(const ColoredDiagram& d, const std::string& a) {
    for (const auto& c : d.crossings)
        if (c.underIn == a || c.underOut == a) return false;
    return true;
}

}  // namespace

ColoredDiagram applyReidemeister(const ColoredDiagram& din, Move move, const MoveSite& site) {
    ColoredDiagram d = din;
    int counter = 0;

    switch (move) {
        case Move::R1Plus:
        case Move::R1Minus: {
            int sign = move == Move::R1Plus ? 1 : -1;
            const std::string& a = site.arc;
            componentOf(d, a);  // existence check
            if (isCrossingFree(d, a)) {
                // a crossing-free circle stays a single arc through one kink
                d.crossings.push_back({sign, a, a, a});
            } else {
                std::string tail = splitArcAtEnd(d, a, counter);
                d.crossings.push_back({sign, a, a, tail});
            }
            break;
        }
        case Move::R1Undo: {
            if (site.crossing < 0 || site.crossing >= static_cast<int>(d.crossings.size()))
                throw StructuralError("R1 undo: bad crossing index");
            Crossing c = d.crossings[site.crossing];
            d.crossings.erase(d.crossings.begin() + site.crossing);
            if (c.underIn == c.underOut) {
                if (c.over != c.underIn) throw StructuralError("R1 undo: crossing is not a kink");
            } else if (c.over == c.underIn || c.over == c.underOut) {
                // merge the two halves of the kinked arc
                const std::string keep = c.underIn, drop = c.underOut;
                auto& comp = componentOf(d, drop);
                comp.arcs.erase(std::find(comp.arcs.begin(), comp.arcs.end(), drop));
                renameArc(d, drop, keep);
            } else {
                throw StructuralError("R1 undo: crossing is not a kink");
            }
            break;
        }
        case Move::R2: {
            const std::string& u = site.arc;
            const std::string& o = site.overArc;
            if (u == o) throw StructuralError("R2: cannot push an arc under itself");
            componentOf(d, o);
            if (isCrossingFree(d, u)) {
                std::string mid = freshArcId(d, counter);
                auto& comp = componentOf(d, u);
                auto it = std::find(comp.arcs.begin(), comp.arcs.end(), u);
                comp.arcs.insert(it + 1, mid);
                d.crossings.push_back({+1, o, u, mid});
                d.crossings.push_back({-1, o, mid, u});
            } else {
                std::string tail = splitArcAtEnd(d, u, counter);
                std::string mid = freshArcId(d, counter);
                auto& comp = componentOf(d, u);
                auto it = std::find(comp.arcs.begin(), comp.arcs.end(), u);
                comp.arcs.insert(it + 1, mid);  // order: u, mid, tail
                d.crossings.push_back({+1, o, u, mid});
                d.crossings.push_back({-1, o, mid, tail});
            }
            break;
        }
        case Move::R2Undo: {
            if (site.crossing < 0 || site.crossing >= static_cast<int>(d.crossings.size()))
                throw StructuralError("R2 undo: bad crossing index");
            const Crossing p = d.crossings[site.crossing];
            int qIdx = -1;
            for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i) {
                const Crossing& q = d.crossings[i];
                if (i != site.crossing && q.over == p.over && q.sign == -p.sign &&
                    q.underIn == p.underOut) {
                    qIdx = i;
                    break;
                }
            }
            if (qIdx < 0) throw StructuralError("R2 undo: no matching opposite crossing");
            const Crossing q = d.crossings[qIdx];
            const std::string mid = p.underOut;
            for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i)
                if (i != site.crossing && i != qIdx && d.crossings[i].over == mid)
                    throw StructuralError("R2 undo: middle arc is an over arc elsewhere");
            // remove both crossings (higher index first)
            d.crossings.erase(d.crossings.begin() + std::max(site.crossing, qIdx));
            d.crossings.erase(d.crossings.begin() + std::min(site.crossing, qIdx));
            auto& comp = componentOf(d, mid);
            comp.arcs.erase(std::find(comp.arcs.begin(), comp.arcs.end(), mid));
            renameArc(d, mid, p.underIn);
            if (q.underOut != p.underIn) {
                comp.arcs.erase(std::find(comp.arcs.begin(), comp.arcs.end(), q.underOut));
                renameArc(d, q.underOut, p.underIn);
            }
            break;
        }
        case Move::R3: {
            auto bad = [&](int i) { return i < 0 || i >= static_cast<int>(d.crossings.size()); };
            if (bad(site.crossing) || bad(site.crossingQ) || bad(site.crossingR))
                throw StructuralError("R3: bad crossing index");
            Crossing& p = d.crossings[site.crossing];
            Crossing& q = d.crossings[site.crossingQ];
            Crossing& r = d.crossings[site.crossingR];
            if (p.sign != 1 || q.sign != 1 || r.sign != 1)
                throw StructuralError("R3: implemented pattern needs all-positive crossings");
            if (p.underOut != q.underIn || q.over != r.over || p.over != r.underIn)
                throw StructuralError("R3: crossings do not form the triangle pattern");
            p.over = q.over;
            q.over = r.underOut;
            break;
        }
    }
    d.check();
    return d;
}

std::vector<MoveSite> findR1UndoSites(const ColoredDiagram& d) {
    std::vector<MoveSite> sites;
    for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i) {
        const Crossing& c = d.crossings[i];
        if (c.underIn == c.underOut ? c.over == c.underIn
                                    : (c.over == c.underIn || c.over == c.underOut)) {
            MoveSite s;
            s.crossing = i;
            sites.push_back(s);
        }
    }
    return sites;
}

std::vector<MoveSite> findR2UndoSites(const ColoredDiagram& d) {
    std::vector<MoveSite> sites;
    for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i) {
        const Crossing& p = d.crossings[i];
        for (int j = 0; j < static_cast<int>(d.crossings.size()); ++j) {
            if (i == j) continue;
            const Crossing& q = d.crossings[j];
            if (q.over != p.over || q.sign != -p.sign || q.underIn != p.underOut) continue;
            bool midIsOver = false;
            for (int t = 0; t < static_cast<int>(d.crossings.size()); ++t)
                if (t != i && t != j && d.crossings[t].over == p.underOut) midIsOver = true;
            if (midIsOver) continue;
            MoveSite s;
            s.crossing = i;
            sites.push_back(s);
        }
    }
    return sites;
}

std::vector<MoveSite> findR3Sites(const ColoredDiagram& d) {
    std::vector<MoveSite> sites;
    const int m = static_cast<int>(d.crossings.size());
    for (int pi = 0; pi < m; ++pi) {
        const Crossing& p = d.crossings[pi];
        if (p.sign != 1) continue;
        for (int qi = 0; qi < m; ++qi) {
            if (qi == pi) continue;
            const Crossing& q = d.crossings[qi];
            if (q.sign != 1 || p.underOut != q.underIn) continue;
            for (int ri = 0; ri < m; ++ri) {
                if (ri == pi || ri == qi) continue;
                const Crossing& r = d.crossings[ri];
                if (r.sign != 1 || q.over != r.over || p.over != r.underIn) continue;
                MoveSite s;
                s.crossing = pi;
                s.crossingQ = qi;
                s.crossingR = ri;
                sites.push_back(s);
            }
        }
    }
    return sites;
}

}  // namespace mq
