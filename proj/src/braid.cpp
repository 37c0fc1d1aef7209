#include "mq/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mq {

namespace {

std::vector<int> parseIntList(const std::string& s, const std::string& field) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + item + "' in " + field);
        }
    }
    return out;
}

}  // namespace

ColoredBraid parseBraid(const std::string& spec, int maxColor) {
    std::istringstream in(spec);
    std::string tok;
    std::string strandsStr, wordStr, colorsStr;
    bool haveStrands = false, haveWord = false, haveColors = false;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value, got '" + tok + "'");
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "strands") { strandsStr = val; haveStrands = true; }
        else if (key == "word") { wordStr = val; haveWord = true; }
        else if (key == "colors") { colorsStr = val; haveColors = true; }
        else throw ParseError("unknown braid field '" + key + "'");
    }
    if (!haveStrands || !haveWord || !haveColors)
        throw ParseError("braid spec needs strands=, word= and colors=");

    ColoredBraid b;
    try {
        b.strands = std::stoi(strandsStr);
    } catch (const std::exception&) {
        throw ParseError("bad strand count '" + strandsStr + "'");
    }
    if (b.strands < 1) throw ParseError("strand count must be positive");
    b.word = parseIntList(wordStr, "word");
    for (size_t pos = 0; pos < b.word.size(); ++pos) {
        int g = b.word[pos];
        if (g == 0 || std::abs(g) > b.strands - 1)
            throw ParseError("word letter " + std::to_string(g) + " at position " + std::to_string(pos + 1) +
                             " out of range for " + std::to_string(b.strands) + " strands");
    }
    b.topColors = parseIntList(colorsStr, "colors");
    if (static_cast<int>(b.topColors.size()) != b.strands)
        throw ParseError("expected " + std::to_string(b.strands) + " colors, got " +
                         std::to_string(b.topColors.size()));
    for (size_t pos = 0; pos < b.topColors.size(); ++pos) {
        int c = b.topColors[pos];
        if (c < 1 || (maxColor > 0 && c > maxColor))
            throw ParseError("color " + std::to_string(c) + " at position " + std::to_string(pos + 1) +
                             " out of range");
    }
    return b;
}

std::string formatBraid(const ColoredBraid& b) {
    std::ostringstream out;
    out << "strands=" << b.strands << " word=";
    for (size_t i = 0; i < b.word.size(); ++i) out << (i ? "," : "") << b.word[i];
    out << " colors=";
    for (size_t i = 0; i < b.topColors.size(); ++i) out << (i ? "," : "") << b.topColors[i];
    return out.str();
}

PermutationInfo permutationInfo(const ColoredBraid& b) {
    const int n = b.strands;
    // track[p-1] = strand currently at position p (strands named by top position)
    std::vector<int> track(n);
    std::iota(track.begin(), track.end(), 1);
    for (int g : b.word) {
        int i = std::abs(g);
        std::swap(track[i - 1], track[i]);
    }
    PermutationInfo info;
    info.perm.assign(n, 0);
    for (int p = 1; p <= n; ++p) info.perm[track[p - 1] - 1] = p;
    info.bottomColors.assign(n, 0);
    for (int p = 1; p <= n; ++p) info.bottomColors[p - 1] = b.topColors[track[p - 1] - 1];

    std::vector<bool> seen(n, false);
    for (int s = 1; s <= n; ++s) {
        if (seen[s - 1]) continue;
        std::vector<int> cycle;
        for (int cur = s; !seen[cur - 1]; cur = info.perm[cur - 1]) {
            seen[cur - 1] = true;
            cycle.push_back(cur);
        }
        info.cycles.push_back(std::move(cycle));
    }
    return info;
}

ClosableBraid checkClosable(const ColoredBraid& b) {
    PermutationInfo info = permutationInfo(b);
    for (const auto& cycle : info.cycles) {
        int c0 = b.topColors[cycle[0] - 1];
        for (int s : cycle)
            if (b.topColors[s - 1] != c0) {
                std::ostringstream msg;
                msg << "braid is not closable: cycle {";
                for (size_t i = 0; i < cycle.size(); ++i) msg << (i ? "," : "") << cycle[i];
                msg << "} carries colors {";
                std::vector<int> cs;
                for (int t : cycle) cs.push_back(b.topColors[t - 1]);
                std::sort(cs.begin(), cs.end());
                cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
                for (size_t i = 0; i < cs.size(); ++i) msg << (i ? "," : "") << cs[i];
                msg << "}";
                throw ValidationError(msg.str());
            }
    }
    return ClosableBraid{b};
}

ColoredBraid inverseBraid(const ColoredBraid& b) {
    ColoredBraid inv;
    inv.strands = b.strands;
    inv.topColors = permutationInfo(b).bottomColors;
    inv.word.reserve(b.word.size());
    for (auto it = b.word.rbegin(); it != b.word.rend(); ++it) inv.word.push_back(-*it);
    return inv;
}

ClosableBraid conjugate(const ClosableBraid& b, const ColoredBraid& t) {
    if (t.strands != b.braid.strands) throw ValidationError("conjugator strand count mismatch");
    if (permutationInfo(t).bottomColors != b.braid.topColors)
        throw ValidationError("conjugator bottom colors do not match braid colors");
    ColoredBraid out;
    out.strands = b.braid.strands;
    out.topColors = t.topColors;
    out.word = t.word;
    out.word.insert(out.word.end(), b.braid.word.begin(), b.braid.word.end());
    ColoredBraid tinv = inverseBraid(t);
    out.word.insert(out.word.end(), tinv.word.begin(), tinv.word.end());
    return checkClosable(out);
}

ClosableBraid stabilize(const ClosableBraid& b, int sign) {
    if (sign != 1 && sign != -1) throw StructuralError("stabilization sign must be +1 or -1");
    const int n = b.braid.strands;
    ColoredBraid out;
    out.strands = n + 1;
    out.topColors = b.braid.topColors;
    out.topColors.push_back(b.braid.topColors[n - 1]);  // v'(n+1) = v(n)
    out.word = b.braid.word;
    out.word.push_back(sign * n);
    return checkClosable(out);
}

ClosableBraid juxtapose(const ClosableBraid& b1, const ClosableBraid& b2) {
    const int n = b1.braid.strands;
    ColoredBraid out;
    out.strands = n + b2.braid.strands;
    out.topColors = b1.braid.topColors;
    out.topColors.insert(out.topColors.end(), b2.braid.topColors.begin(), b2.braid.topColors.end());
    out.word = b1.braid.word;
    for (int g : b2.braid.word) out.word.push_back(g > 0 ? g + n : g - n);
    return checkClosable(out);
}

}  // namespace mq
