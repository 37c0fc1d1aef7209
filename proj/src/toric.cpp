#include "mq/toric.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mq {

AffineCircleQuandle::AffineCircleQuandle(std::vector<int> t) : ts(std::move(t)) {
    if (ts.empty()) throw StructuralError("circle quandle needs at least one operation");
    for (int v : ts)
        if (v != 1 && v != -1)
            throw StructuralError("circle quandle parameters must be +1 or -1");
}

// ----------------------------------------------------------------- Smith NF

namespace {

using Mat = std::vector<std::vector<Int>>;

Mat identity(int n) {
    Mat m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

void rowOp(Mat& A, Mat& U, int dst, int src, const Int& q) {
    for (size_t j = 0; j < A[dst].size(); ++j) A[dst][j] -= q * A[src][j];
    for (size_t j = 0; j < U[dst].size(); ++j) U[dst][j] -= q * U[src][j];
}

void colOp(Mat& A, Mat& V, int dst, int src, const Int& q) {
    for (auto& row : A) row[dst] -= q * row[src];
    for (auto& row : V) row[dst] -= q * row[src];
}

void swapRows(Mat& A, Mat& U, int a, int b) {
    std::swap(A[a], A[b]);
    std::swap(U[a], U[b]);
}

void swapCols(Mat& A, Mat& V, int a, int b) {
    for (auto& row : A) std::swap(row[a], row[b]);
    for (auto& row : V) std::swap(row[a], row[b]);
}

}  // namespace

SmithResult smithNormalForm(Mat A) {
    const int m = static_cast<int>(A.size());
    const int n = m ? static_cast<int>(A[0].size()) : 0;
    SmithResult res;
    res.U = identity(m);
    res.V = identity(n);

    for (int t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // smallest nonzero entry of the working submatrix to (t,t)
            int pi = -1, pj = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j)
                    if (A[i][j] != 0 &&
                        (pi < 0 || abs(A[i][j]) < abs(A[pi][pj]))) { pi = i; pj = j; }
            if (pi < 0) { pi = -2; break; }
            if (pi != t) swapRows(A, res.U, pi, t);
            if (pj != t) swapCols(A, res.V, pj, t);

            bool dirty = false;
            for (int i = t + 1; i < m; ++i)
                if (A[i][t] != 0) {
                    rowOp(A, res.U, i, t, A[i][t] / A[t][t]);
                    if (A[i][t] != 0) dirty = true;
                }
            for (int j = t + 1; j < n; ++j)
                if (A[t][j] != 0) {
                    colOp(A, res.V, j, t, A[t][j] / A[t][t]);
                    if (A[t][j] != 0) dirty = true;
                }
            if (dirty) continue;
            // pivot must divide the rest of the submatrix for the chain d1|d2|...
            bool fixed = false;
            for (int i = t + 1; i < m && !fixed; ++i)
                for (int j = t + 1; j < n && !fixed; ++j)
                    if (A[i][j] % A[t][t] != 0) {
                        rowOp(A, res.U, t, i, Int(-1));  // row_t += row_i
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (A[t][t] == 0) break;
        if (A[t][t] < 0) {
            for (int j = 0; j < n; ++j) A[t][j] = -A[t][j];
            for (int j = 0; j < m; ++j) res.U[t][j] = -res.U[t][j];
        }
        res.divisors.push_back(A[t][t]);
        ++res.rank;
    }
    res.D = std::move(A);
    return res;
}

// --------------------------------------------------------------- encoding

namespace {

struct AngleForm {
    std::vector<Int> coef;
    Rat cst;
};

AngleForm circleOp(int t, const AngleForm& x, const AngleForm& y) {
    // theta |>_t phi = t*theta + (1-t)*phi; for t=+-1 the inverse is itself
    AngleForm out;
    out.coef.resize(x.coef.size());
    for (size_t i = 0; i < x.coef.size(); ++i) out.coef[i] = Int(t) * x.coef[i] + Int(1 - t) * y.coef[i];
    out.cst = Rat(t) * x.cst + Rat(1 - t) * y.cst;
    return out;
}

}  // namespace

ToricAffineSystem encodeBraidFixedPoints(const ClosableBraid& cb, const AffineCircleQuandle& q) {
    const ColoredBraid& b = cb.braid;
    const int n = b.strands;
    for (int c : b.topColors)
        if (c > q.colors()) throw StructuralError("braid color exceeds circle quandle colors");

    std::vector<AngleForm> x(n);
    for (int i = 0; i < n; ++i) {
        x[i].coef.assign(n, 0);
        x[i].coef[i] = 1;
    }
    std::vector<int> v = b.topColors;
    for (int g : b.word) {
        int i = std::abs(g) - 1;
        if (g > 0) {
            AngleForm a = x[i];
            x[i] = x[i + 1];
            x[i + 1] = circleOp(q.ts[v[i + 1] - 1], a, x[i + 1]);
        } else {
            AngleForm a = x[i];
            x[i] = circleOp(q.ts[v[i] - 1], x[i + 1], a);
            x[i + 1] = a;
        }
        std::swap(v[i], v[i + 1]);
    }
    ToricAffineSystem sys;
    sys.nvars = n;
    for (int j = 0; j < n; ++j) {
        ToricRow row;
        row.coeffs = x[j].coef;
        row.coeffs[j] -= 1;
        row.rhs = -x[j].cst;
        sys.rows.push_back(std::move(row));
    }
    return sys;
}

// ----------------------------------------------------------------- solving

namespace {

bool isInteger(const Rat& r) { return denominator(r) == 1; }

std::vector<Rat> transformRhs(const SmithResult& snf, const ToricAffineSystem& sys) {
    std::vector<Rat> s(sys.rows.size(), Rat(0));
    for (size_t i = 0; i < sys.rows.size(); ++i)
        for (size_t j = 0; j < sys.rows.size(); ++j)
            s[i] += Rat(snf.U[i][j]) * sys.rows[j].rhs;
    return s;
}

Mat coefficientMatrix(const ToricAffineSystem& sys) {
    Mat A;
    for (const auto& row : sys.rows) {
        if (static_cast<int>(row.coeffs.size()) != sys.nvars)
            throw StructuralError("toric row width does not match nvars");
        A.push_back(row.coeffs);
    }
    return A;
}

}  // namespace

ToricSolution solveToric(const ToricAffineSystem& sys) {
    if (sys.nvars < 0) throw StructuralError("negative nvars");
    ToricSolution sol;
    if (sys.rows.empty()) {
        sol.nonempty = true;
        sol.dimension = sys.nvars;
        sol.components = 1;
        return sol;
    }
    SmithResult snf = smithNormalForm(coefficientMatrix(sys));
    std::vector<Rat> s = transformRhs(snf, sys);
    // rows past the rank are zero rows: they constrain nothing unless their
    // transformed right-hand side falls off the integer lattice
    for (size_t i = snf.rank; i < s.size(); ++i)
        if (!isInteger(s[i])) return sol;  // empty
    sol.nonempty = true;
    sol.dimension = sys.nvars - snf.rank;
    sol.components = 1;
    for (const Int& d : snf.divisors) sol.components *= d;
    return sol;
}

bool sampleVerify(const ToricAffineSystem& sys, const ToricSolution& sol, int samples,
                  unsigned seed) {
    std::mt19937 rng(seed);
    if (sys.rows.empty()) return sol.nonempty && sol.dimension == sys.nvars;

    SmithResult snf = smithNormalForm(coefficientMatrix(sys));
    std::vector<Rat> s = transformRhs(snf, sys);

    auto rowResidualIsInteger = [&](const std::vector<Rat>& u, size_t ri) {
        Rat acc = -sys.rows[ri].rhs;
        for (int j = 0; j < sys.nvars; ++j) acc += Rat(sys.rows[ri].coeffs[j]) * u[j];
        return isInteger(acc);
    };

    for (int iter = 0; iter < samples; ++iter) {
        // a rational point of a random claimed component
        std::vector<Rat> y(sys.nvars, Rat(0));
        for (int i = 0; i < snf.rank; ++i) {
            Int d = snf.divisors[i];
            std::uniform_int_distribution<long long> pick(0, static_cast<long long>(d) - 1);
            y[i] = (s[i] + pick(rng)) / Rat(d);
        }
        for (int i = snf.rank; i < sys.nvars; ++i) {
            std::uniform_int_distribution<int> num(0, 15), den(1, 16);
            y[i] = Rat(num(rng), den(rng));
        }
        std::vector<Rat> u(sys.nvars, Rat(0));
        for (int i = 0; i < sys.nvars; ++i)
            for (int j = 0; j < sys.nvars; ++j) u[i] += Rat(snf.V[i][j]) * y[j];

        bool satisfies = true;
        for (size_t ri = 0; ri < sys.rows.size(); ++ri)
            if (!rowResidualIsInteger(u, ri)) satisfies = false;
        if (satisfies != sol.nonempty) return false;

        if (sol.nonempty && sol.dimension < sys.nvars) {
            // perturbing off the component must break at least one row
            int ri = -1, j = -1;
            for (size_t r = 0; r < sys.rows.size() && ri < 0; ++r)
                for (int c = 0; c < sys.nvars; ++c)
                    if (sys.rows[r].coeffs[c] != 0) { ri = static_cast<int>(r); j = c; break; }
            if (ri < 0) return false;  // a cut-down claim needs a cutting row
            std::vector<Rat> up = u;
            up[j] += Rat(1, 2 * abs(sys.rows[ri].coeffs[j]));
            bool broke = false;
            for (size_t r = 0; r < sys.rows.size(); ++r)
                if (!rowResidualIsInteger(up, r)) broke = true;
            if (!broke) return false;
        }
    }
    return true;
}

// --------------------------------------------------------------------- io

namespace {

std::string nextLine(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        std::string s = hash == std::string::npos ? line : line.substr(0, hash);
        auto first = s.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = s.find_last_not_of(" \t\r");
        return s.substr(first, last - first + 1);
    }
    return {};
}

}  // namespace

ToricAffineSystem parseToric(std::istream& in) {
    if (nextLine(in) != "toric v1") throw ParseError("expected header 'toric v1'");
    std::istringstream hdr(nextLine(in));
    std::string kw;
    int n = 0;
    if (!(hdr >> kw >> n) || kw != "vars" || n < 1) throw ParseError("expected 'vars <n>'");
    ToricAffineSystem sys;
    sys.nvars = n;
    for (std::string line = nextLine(in); !line.empty(); line = nextLine(in)) {
        std::istringstream ls(line);
        if (!(ls >> kw) || kw != "eq") throw ParseError("expected 'eq c1 ... cn = p/q'");
        ToricRow row;
        for (int i = 0; i < n; ++i) {
            long long c;
            if (!(ls >> c)) throw ParseError("toric row needs " + std::to_string(n) + " coefficients");
            row.coeffs.push_back(Int(c));
        }
        std::string eq, frac;
        if (!(ls >> eq >> frac) || eq != "=") throw ParseError("toric row needs '= p/q'");
        auto slash = frac.find('/');
        try {
            if (slash == std::string::npos)
                row.rhs = Rat(Int(frac));
            else
                row.rhs = Rat(Int(frac.substr(0, slash)), Int(frac.substr(slash + 1)));
        } catch (const std::exception&) {
            throw ParseError("bad rational '" + frac + "'");
        }
        if (denominator(row.rhs) < 0 || (slash != std::string::npos && Int(frac.substr(slash + 1)) <= 0))
            throw ParseError("rhs denominator must be positive");
        sys.rows.push_back(std::move(row));
    }
    return sys;
}

ToricAffineSystem parseToricFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open " + path);
    return parseToric(in);
}

std::string serializeToric(const ToricAffineSystem& sys) {
    std::ostringstream out;
    out << "toric v1\nvars " << sys.nvars << "\n";
    for (const auto& row : sys.rows) {
        out << "eq";
        for (const auto& c : row.coeffs) out << " " << c;
        out << " = " << numerator(row.rhs) << "/" << denominator(row.rhs) << "\n";
    }
    return out.str();
}

}  // namespace mq
