#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "mq/braid.hpp"

// Exact solving of integer-affine fixed-point systems on the torus
// (R/2piZ)^n. Angles are rationals times 2pi throughout; no floating point.

namespace mq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// theta |>_i phi = t_i theta + (1 - t_i) phi with t_i in {+1,-1}:
// t=+1 is the trivial operation, t=-1 the reflection 2 phi - theta.
// Other integer t would not be invertible on the circle.
struct AffineCircleQuandle {
    std::vector<int> ts;

    explicit AffineCircleQuandle(std::vector<int> t);
    int colors() const { return static_cast<int>(ts.size()); }
};

struct ToricRow {
    std::vector<Int> coeffs;  // length nvars
    Rat rhs;                  // fraction of a full turn: sum c_i theta_i = 2pi*rhs (mod 2pi)
};

struct ToricAffineSystem {
    int nvars = 0;
    std::vector<ToricRow> rows;
};

struct ToricSolution {
    bool nonempty = false;
    int dimension = 0;   // defined when nonempty
    Int components = 0;  // defined when nonempty
};

// Smith normal form U*A*V = D with U, V unimodular and the diagonal
// divisibility chain d1 | d2 | ... All entries exact.
struct SmithResult {
    std::vector<std::vector<Int>> U, D, V;
    int rank = 0;
    std::vector<Int> divisors;  // the nonzero diagonal, positive
};

SmithResult smithNormalForm(std::vector<std::vector<Int>> A);

// Pushes affine angle forms through the braid action; one row per strand
// from the fixed-point condition.
ToricAffineSystem encodeBraidFixedPoints(const ClosableBraid& b, const AffineCircleQuandle& q);

// Solvable iff every zero row of D has integral transformed right-hand
// side. dimension = nvars - rank; components = product of the divisors.
ToricSolution solveToric(const ToricAffineSystem& sys);

// Draws rational points from the claimed components and re-checks every
// row; when dimension < nvars also checks that perturbed points fail.
bool sampleVerify(const ToricAffineSystem& sys, const ToricSolution& sol, int samples,
                  unsigned seed = 12345);

// "toric v1" text format.
ToricAffineSystem parseToric(std::istream& in);
ToricAffineSystem parseToricFile(const std::string& path);
std::string serializeToric(const ToricAffineSystem& sys);

}  // namespace mq
