// mq: finite multi-quandle calculator and colored-link coloring counter.
#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mq/braid.hpp"
#include "mq/core.hpp"
#include "mq/diagram.hpp"
#include "mq/invariants.hpp"
#include "mq/search.hpp"
#include "mq/toric.hpp"

namespace fs = std::filesystem;
using namespace mq;

namespace {

constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;

struct MathFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

MultiQuandle loadQuandle(const std::string& path) {
    try {
        return parseQuandleFile(path);
    } catch (const ValidationError& e) {
        throw MathFailure(std::string("invalid quandle file ") + path + ": " + e.what());
    }
}

std::vector<int> parseIntList(const std::string& s) {
    std::vector<int> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw ParseError("empty entry in list '" + s + "'");
        out.push_back(std::stoi(tok));
    }
    return out;
}

// ------------------------------------------------------------------- fuzz

ColoredBraid randomColoredBraid(std::mt19937& rng, int k, int minStrands = 2, int maxStrands = 4,
                                int maxLen = 6) {
    std::uniform_int_distribution<int> pickN(minStrands, maxStrands);
    int n = pickN(rng);
    std::uniform_int_distribution<int> pickLen(0, maxLen);
    std::uniform_int_distribution<int> pickGen(1, n - 1), coin(0, 1), pickColor(1, k);
    ColoredBraid b;
    b.strands = n;
    int len = pickLen(rng);
    for (int i = 0; i < len; ++i) b.word.push_back(pickGen(rng) * (coin(rng) ? 1 : -1));
    b.topColors.assign(n, 1);
    // color per permutation cycle so the braid closes to a colored link
    PermutationInfo info = permutationInfo(b);
    for (const auto& cyc : info.cycles) {
        int c = pickColor(rng);
        for (int s : cyc) b.topColors[s - 1] = c;
    }
    return b;
}

int runMarkovFuzz(const std::string& quandleFile, int iters, unsigned seed) {
    MultiQuandle q = loadQuandle(quandleFile);
    std::mt19937 rng(seed);
    CountOptions opts;
    opts.listSolutions = false;
    for (int it = 0; it < iters; ++it) {
        ClosableBraid b = checkClosable(randomColoredBraid(rng, q.colors()));
        std::uint64_t before = countColoringsBraid(b, q, opts).count;
        std::uniform_int_distribution<int> pickMove(0, 2);
        int mv = pickMove(rng);
        ClosableBraid after = b;
        std::string what;
        if (mv == 0) {
            ColoredBraid t =
                randomColoredBraid(rng, q.colors(), b.braid.strands, b.braid.strands, 3);
            // choose t's top colors so that its bottom colors equal b's
            PermutationInfo info = permutationInfo(t);
            for (int i = 1; i <= t.strands; ++i)
                t.topColors[i - 1] = b.braid.topColors[info.perm[i - 1] - 1];
            after = conjugate(b, t);
            what = "conjugate by " + formatBraid(t);
        } else {
            int sign = mv == 1 ? 1 : -1;
            after = stabilize(b, sign);
            what = sign > 0 ? "stabilize +" : "stabilize -";
        }
        std::uint64_t post = countColoringsBraid(after, q, opts).count;
        if (post != before) {
            std::cout << "FAIL iter " << it << ": " << formatBraid(b.braid) << " count " << before
                      << " != " << post << " after " << what << "\n";
            return kExitMath;
        }
    }
    std::cout << "ok: " << iters << " Markov moves preserved the coloring count\n";
    return 0;
}

int runReidFuzz(const std::string& quandleFile, int iters, unsigned seed) {
    MultiQuandle q = loadQuandle(quandleFile);
    std::mt19937 rng(seed);
    CountOptions opts;
    opts.listSolutions = false;
    int applied = 0;
    for (int it = 0; it < iters; ++it) {
        ClosableBraid b = checkClosable(randomColoredBraid(rng, q.colors()));
        ColoredDiagram d = closureDiagram(b);
        std::uint64_t before = countColoringsDiagram(d, q, opts).count;
        std::uniform_int_distribution<int> pickMove(0, 5);
        auto arcs = d.arcOrder();
        std::uniform_int_distribution<size_t> pickArc(0, arcs.size() - 1);
        Move move{};
        MoveSite site;
        switch (pickMove(rng)) {
            case 0: move = Move::R1Plus; site.arc = arcs[pickArc(rng)]; break;
            case 1: move = Move::R1Minus; site.arc = arcs[pickArc(rng)]; break;
            case 2: {
                move = Move::R2;
                site.arc = arcs[pickArc(rng)];
                site.overArc = arcs[pickArc(rng)];
                if (site.arc == site.overArc) continue;
                break;
            }
            case 3: {
                move = Move::R1Undo;
                auto sites = findR1UndoSites(d);
                if (sites.empty()) continue;
                site = sites[std::uniform_int_distribution<size_t>(0, sites.size() - 1)(rng)];
                break;
            }
            case 4: {
                move = Move::R2Undo;
                auto sites = findR2UndoSites(d);
                if (sites.empty()) continue;
                site = sites[std::uniform_int_distribution<size_t>(0, sites.size() - 1)(rng)];
                break;
            }
            default: {
                move = Move::R3;
                auto sites = findR3Sites(d);
                if (sites.empty()) continue;
                site = sites[std::uniform_int_distribution<size_t>(0, sites.size() - 1)(rng)];
                break;
            }
        }
        ColoredDiagram moved = applyReidemeister(d, move, site);
        std::uint64_t post = countColoringsDiagram(moved, q, opts).count;
        ++applied;
        if (post != before) {
            std::cout << "FAIL iter " << it << ": count " << before << " != " << post
                      << " after move on " << formatBraid(b.braid) << "\n";
            return kExitMath;
        }
    }
    std::cout << "ok: " << applied << "/" << iters
              << " Reidemeister applications preserved the coloring count\n";
    return 0;
}

// ---------------------------------------------------------------- regress

// fixture conventions: '#' lines are comments everywhere; regression
// expectations live in '# expect ...' comments; .pd and .braid fixtures
// carry their payload in plain content lines (see README)
std::vector<std::vector<std::string>> expectLines(const fs::path& p) {
    std::ifstream in(p);
    std::vector<std::vector<std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a >> b) || a != "#" || b != "expect") continue;
        std::vector<std::string> words;
        std::string w;
        while (ls >> w) words.push_back(w);
        out.push_back(words);
    }
    return out;
}

std::vector<std::string> contentLines(const fs::path& p) {
    std::ifstream in(p);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        std::string s = hash == std::string::npos ? line : line.substr(0, hash);
        auto first = s.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = s.find_last_not_of(" \t\r");
        out.push_back(s.substr(first, last - first + 1));
    }
    return out;
}

int runRegress(const std::string& dir) {
    std::vector<fs::path> files;
    if (fs::is_directory(dir))
        for (const auto& e : fs::directory_iterator(dir))
            if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cerr << "regress: no fixture files in '" << dir << "'\n";
        return kExitUsage;
    }

    // the quandle every counting fixture refers to
    fs::path quandlePath;
    for (const auto& f : files)
        if (f.extension() == ".mq" && (quandlePath.empty() || f.filename() == "mx.mq"))
            quandlePath = f;
    if (quandlePath.empty()) {
        std::cerr << "regress: no .mq quandle file in '" << dir << "'\n";
        return kExitUsage;
    }

    bool allPass = true;
    auto report = [&](const fs::path& f, bool pass, const std::string& detail) {
        std::cout << (pass ? "PASS " : "FAIL ") << f.filename().string()
                  << (detail.empty() ? "" : ": " + detail) << "\n";
        if (!pass) allPass = false;
    };

    MultiQuandle q = loadQuandle(quandlePath.string());
    CountOptions opts;
    opts.listSolutions = false;

    for (const auto& f : files) {
        std::string ext = f.extension().string();
        try {
            if (ext == ".mq") {
                MultiQuandle fq = loadQuandle(f.string());
                report(f, true,
                       "valid " + std::to_string(fq.colors()) + "-quandle, order " +
                           std::to_string(fq.order()) + ", inverse tables cross-checked");
            } else if (ext == ".braid") {
                auto lines = contentLines(f);
                if (lines.size() != 1) throw ParseError("braid fixture needs one spec line");
                ClosableBraid b = checkClosable(parseBraid(lines[0], q.colors()));
                std::uint64_t got = countColoringsBraid(b, q, opts).count;
                bool any = false, pass = true;
                for (const auto& e : expectLines(f))
                    if (e.size() == 2 && e[0] == "count") {
                        any = true;
                        if (got != std::stoull(e[1])) {
                            report(f, false,
                                   "expected count " + e[1] + ", computed " + std::to_string(got));
                            pass = false;
                        }
                    }
                if (!any) throw ParseError("braid fixture has no '# expect count <N>' line");
                if (pass) report(f, true, "count " + std::to_string(got));
            } else if (ext == ".diag") {
                ColoredDiagram d = parseDiagramFile(f.string());
                std::uint64_t got = countColoringsDiagram(d, q, opts).count;
                bool any = false, pass = true;
                for (const auto& e : expectLines(f))
                    if (e.size() == 2 && e[0] == "count") {
                        any = true;
                        if (got != std::stoull(e[1])) {
                            report(f, false,
                                   "expected count " + e[1] + ", computed " + std::to_string(got));
                            pass = false;
                        }
                    }
                if (!any) throw ParseError("diagram fixture has no '# expect count <N>' line");
                if (pass) report(f, true, "count " + std::to_string(got));
            } else if (ext == ".pd") {
                auto lines = contentLines(f);
                if (lines.empty()) throw ParseError("pd fixture needs a PD code line");
                std::string code = lines[0];
                std::vector<std::uint64_t> expected, computed;
                for (size_t i = 1; i < lines.size(); ++i) {
                    std::istringstream ls(lines[i]);
                    std::string kw, colorsTok, expectKw;
                    std::uint64_t want;
                    if (!(ls >> kw >> colorsTok >> expectKw >> want) || kw != "coloring" ||
                        expectKw != "expect")
                        throw ParseError("expected 'coloring <c1,...,cm> expect <N>'");
                    ColoredDiagram d = fromPDCode(code, parseIntList(colorsTok));
                    expected.push_back(want);
                    computed.push_back(countColoringsDiagram(d, q, opts).count);
                }
                if (expected.empty()) throw ParseError("pd fixture lists no colorings");
                // component labels in published figures are not recoverable
                // from a PD code, so the comparison is by count multiset
                auto se = expected, sc = computed;
                std::sort(se.begin(), se.end());
                std::sort(sc.begin(), sc.end());
                if (se == sc) {
                    std::ostringstream msg;
                    msg << expected.size() << " colorings, count multiset matches";
                    report(f, true, msg.str());
                } else {
                    size_t i = 0;
                    while (i < se.size() && se[i] == sc[i]) ++i;
                    report(f, false,
                           "count multiset mismatch at sorted position " + std::to_string(i) +
                               ": expected " + std::to_string(se[i]) + ", computed " +
                               std::to_string(i < sc.size() ? sc[i] : 0));
                }
            } else if (ext == ".toric") {
                ToricAffineSystem sys = parseToricFile(f.string());
                ToricSolution sol = solveToric(sys);
                bool any = false, pass = true;
                for (const auto& e : expectLines(f)) {
                    any = true;
                    std::ostringstream got;
                    if (sol.nonempty)
                        got << "nonempty dim " << sol.dimension << " components " << sol.components;
                    else
                        got << "empty";
                    std::ostringstream want;
                    for (size_t i = 0; i < e.size(); ++i) want << (i ? " " : "") << e[i];
                    if (got.str() != want.str()) {
                        report(f, false, "expected '" + want.str() + "', computed '" + got.str() + "'");
                        pass = false;
                    }
                }
                if (!any) throw ParseError("toric fixture has no '# expect ...' line");
                if (pass)
                    report(f, true,
                           sol.nonempty ? "dim " + std::to_string(sol.dimension) + ", " +
                                              sol.components.str() + " components"
                                        : "empty");
            }
        } catch (const std::exception& e) {
            report(f, false, e.what());
        }
    }
    return allPass ? 0 : kExitMath;
}

// ------------------------------------------------------------------ count

int runCount(const std::string& quandleFile, const std::string& braidSpec,
             const std::string& diagFile, const std::string& pdCode, const std::string& colors,
             bool listSolutions) {
    MultiQuandle q = loadQuandle(quandleFile);
    CountOptions opts;
    opts.listSolutions = listSolutions;
    ColoringSet cs;
    if (!braidSpec.empty()) {
        cs = countColoringsBraid(checkClosable(parseBraid(braidSpec, q.colors())), q, opts);
    } else if (!diagFile.empty()) {
        cs = countColoringsDiagram(parseDiagramFile(diagFile), q, opts);
    } else {
        cs = countColoringsDiagram(fromPDCode(pdCode, parseIntList(colors)), q, opts);
    }
    if (listSolutions)
        std::cout << cs.serialize();
    else
        std::cout << "count " << cs.count << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite multi-quandle calculator: validation, coloring counts, braid and "
                 "diagram moves, torus solving, small-order search"};
    app.require_subcommand(1);

    std::string file, quandleFile, braidSpec, diagFile, pdCode, colors, inputTuple, outDir;
    bool listSolutions = false, iso = false, force = false;
    int iters = 100, order = 3, kOps = 2;
    unsigned seed = 1;

    auto* vcmd = app.add_subcommand("validate", "check the multi-quandle axioms of an mq file");
    vcmd->add_option("file", file)->required();

    auto* icmd = app.add_subcommand("invert", "print the inverse operation tables of an mq file");
    icmd->add_option("file", file)->required();

    auto* ccmd = app.add_subcommand("count", "count colorings of a braid closure, diagram, or PD code");
    ccmd->add_option("--quandle", quandleFile)->required();
    ccmd->add_option("--braid", braidSpec);
    ccmd->add_option("--diagram", diagFile);
    ccmd->add_option("--pd", pdCode);
    ccmd->add_option("--colors", colors);
    ccmd->add_flag("--list-solutions", listSolutions);

    auto* acmd = app.add_subcommand("action", "apply the colored braid action to a tuple");
    acmd->add_option("--quandle", quandleFile)->required();
    acmd->add_option("--braid", braidSpec)->required();
    acmd->add_option("--input", inputTuple)->required();

    auto* mcmd = app.add_subcommand("markov-fuzz", "randomized Markov-move count invariance check");
    mcmd->add_option("--quandle", quandleFile)->required();
    mcmd->add_option("--iters", iters);
    mcmd->add_option("--seed", seed);

    auto* rcmd = app.add_subcommand("reid-fuzz", "randomized Reidemeister count invariance check");
    rcmd->add_option("--quandle", quandleFile)->required();
    rcmd->add_option("--iters", iters);
    rcmd->add_option("--seed", seed);

    auto* scmd = app.add_subcommand("search", "enumerate multi-quandles of a given order");
    scmd->add_option("--order", order)->required();
    scmd->add_option("--k", kOps)->required();
    scmd->add_flag("--iso", iso, "emit one representative per isomorphism class");
    scmd->add_flag("--force", force, "lift the order cap of 6");
    scmd->add_option("--out", outDir)->required();

    auto* tcmd = app.add_subcommand("toric", "solve an integer-affine system on the torus");
    tcmd->add_option("file", file)->required();
    int verifySamples = 0;
    tcmd->add_option("--verify", verifySamples, "re-check the solution at N sampled points");

    auto* gcmd = app.add_subcommand("regress", "recompute and compare a fixture directory");
    gcmd->add_option("dir", outDir)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (vcmd->parsed()) {
            MultiQuandle q = loadQuandle(file);
            std::cout << "valid " << q.colors() << "-quandle, order " << q.order() << "\n";
            return 0;
        }
        if (icmd->parsed()) {
            MultiQuandle q = loadQuandle(file);
            for (int i = 1; i <= q.colors(); ++i) {
                std::cout << "inv " << i << "\n";
                const OperationTable& t = q.inverseTables()[i - 1];
                for (int x = 1; x <= q.order(); ++x) {
                    for (int y = 1; y <= q.order(); ++y)
                        std::cout << (y > 1 ? " " : "") << t.at(x, y);
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (ccmd->parsed()) {
            int sources = !braidSpec.empty() + !diagFile.empty() + !pdCode.empty();
            if (sources != 1) {
                std::cerr << "count: give exactly one of --braid, --diagram, --pd\n";
                return kExitUsage;
            }
            if (!pdCode.empty() && colors.empty()) {
                std::cerr << "count: --pd requires --colors\n";
                return kExitUsage;
            }
            return runCount(quandleFile, braidSpec, diagFile, pdCode, colors, listSolutions);
        }
        if (acmd->parsed()) {
            MultiQuandle q = loadQuandle(quandleFile);
            ColoredBraid b = parseBraid(braidSpec, q.colors());
            std::vector<int> x = parseIntList(inputTuple);
            std::vector<int> y = braidAction(b, q, x);
            for (size_t i = 0; i < y.size(); ++i) std::cout << (i ? "," : "") << y[i];
            std::cout << "\n";
            return 0;
        }
        if (mcmd->parsed()) return runMarkovFuzz(quandleFile, iters, seed);
        if (rcmd->parsed()) return runReidFuzz(quandleFile, iters, seed);
        if (scmd->parsed()) {
            long n = writeSearchCorpus(outDir, order, kOps, iso, force);
            std::cout << "wrote " << n << " multi-quandles to " << outDir << "\n";
            return 0;
        }
        if (tcmd->parsed()) {
            ToricAffineSystem sys = parseToricFile(file);
            ToricSolution sol = solveToric(sys);
            if (sol.nonempty)
                std::cout << "nonempty dim=" << sol.dimension << " components=" << sol.components
                          << "\n";
            else
                std::cout << "empty\n";
            if (verifySamples > 0) {
                if (!sampleVerify(sys, sol, verifySamples))
                    throw MathFailure("sampled verification failed");
                std::cout << "verified at " << verifySamples << " sampled points\n";
            }
            return 0;
        }
        if (gcmd->parsed()) return runRegress(outDir);
    } catch (const MathFailure& e) {
        std::cerr << e.what() << "\n";
        return kExitMath;
    } catch (const ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitMath;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const StructuralError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
