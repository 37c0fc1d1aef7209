#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

// Finite multi-quandles as explicit operation tables.
//
// The carrier is always {1..n}; constructors over Z_m re-index
// {0..m-1} -> {1..m} so tables compare entry-for-entry with printed
// presentation matrices.

namespace mq {

// Malformed input (bad dimensions, out-of-range entries, unparsable text).
// Distinct from axiom violations, which are reported, not thrown.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quandle file or spec string that fails validation.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One binary operation on {1..n}, stored row-major: at(x,y) = x |> y.
struct OperationTable {
    int order = 0;
    std::vector<int> entries;  // order*order values in {1..order}

    OperationTable() = default;
    OperationTable(int n, std::vector<int> e);

    int at(int x, int y) const { return entries[(x - 1) * order + (y - 1)]; }
    void set(int x, int y, int v) { entries[(x - 1) * order + (y - 1)] = v; }

    // Column-wise inverse: result.at(x |> y, y) == x.
    OperationTable inverted() const;

    bool operator==(const OperationTable&) const = default;
};

struct AxiomViolation {
    std::string axiom;          // "idempotency" | "bijectivity" | "self-dist" | "cross-dist" | "inverse"
    int i = 0, j = 0;           // operation indices (j = 0 when not applicable)
    std::array<int, 3> witness{};  // (x,y,z); unused trailing slots are 0

    bool operator==(const AxiomViolation&) const = default;
};

struct AxiomReport {
    bool valid = true;
    bool truncated = false;     // hit the violation cap
    std::vector<AxiomViolation> violations;
};

// Exhaustive axiom check over k tables: idempotency, column bijectivity,
// self-distributivity per table and cross-distributivity per ordered pair.
// O(k^2 n^3). Structural problems (mismatched orders, bad entries) throw.
AxiomReport validate(const std::vector<OperationTable>& tables, int violationCap = 100);

class MultiQuandle {
  public:
    // Validates; throws ValidationError (message lists the first violations)
    // if the tables do not form a multi-quandle. Inverse tables are derived.
    explicit MultiQuandle(std::vector<OperationTable> tables);

    int order() const { return order_; }
    int colors() const { return k_; }

    int apply(int i, int x, int y) const { return tables_[i - 1].at(x, y); }
    int applyInv(int i, int x, int y) const { return inverses_[i - 1].at(x, y); }

    const std::vector<OperationTable>& tables() const { return tables_; }
    const std::vector<OperationTable>& inverseTables() const { return inverses_; }

    bool operator==(const MultiQuandle& o) const { return tables_ == o.tables_; }

  private:
    int order_ = 0;
    int k_ = 0;
    std::vector<OperationTable> tables_;
    std::vector<OperationTable> inverses_;
};

// Derived inverse tables of a validated multi-quandle (column-inverse of each op).
std::vector<OperationTable> invert(const MultiQuandle& q);

// Checks the three mixed identities relating |>_i and |>_j^-1 over all
// x,y,z,i,j. Always valid for a true multi-quandle; exists as a self-test.
AxiomReport checkDerivedIdentities(const MultiQuandle& q, int violationCap = 100);

// x |>_i y = t_i x + (1 - t_i) y over Z_m, re-indexed to {1..m}.
// Every t_i must be a unit mod m.
MultiQuandle alexanderMultiQuandle(int modulus, const std::vector<int>& ts);

// Conjugation diquandle on the cyclic group Z_m with automorphisms
// x -> u_i x: additively x |>_i y = u_i x + (1 - u_i) y mod m.
MultiQuandle conjugationDiquandle(int cyclicOrder, int u1, int u2);

// "mq v1" text format. Optional `inv <i>` blocks are cross-checked against
// the derived inverses and rejected on mismatch.
MultiQuandle parseQuandle(std::istream& in);
MultiQuandle parseQuandleFile(const std::string& path);
std::string serializeQuandle(const MultiQuandle& q);

}  // namespace mq
