#pragma once

#include "hautus/poly.hpp"

#include <string>
#include <vector>

namespace hautus {

// Dense l x k matrix over Q[d1..dn]. Entries are mutable during assembly;
// the analysis layer treats constructed matrices as immutable values.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols, int nvars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }

    const Poly& at(int i, int j) const;
    Poly& at(int i, int j);

    std::vector<Poly> row(int i) const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.nvars_ == b.nvars_ &&
               a.entries_ == b.entries_;
    }

private:
    int rows_ = 0, cols_ = 0, nvars_ = 0;
    std::vector<Poly> entries_;
};

// All r x r minors with their defining index sets, enumerated with both the
// row sets and the column sets in lexicographic order (rows outer).
struct MinorSet {
    struct Entry {
        std::vector<int> rows;
        std::vector<int> cols;
        Poly value;
    };
    int size = 0;
    std::vector<Entry> entries;

    std::vector<Poly> nonzero_values() const;
    bool all_zero() const;
};

// Fraction-free (Bareiss) determinant; requires a square matrix. Exact
// divisions are guaranteed by the algorithm and enforced.
Poly determinant(const PolyMatrix& m);

// r >= 1 and r <= min(rows, cols).
MinorSet minors(const PolyMatrix& m, int r);

// Rank over the fraction field Q(d1..dn), via fraction-free elimination.
int rank_over_fraction_field(const PolyMatrix& m);

struct EvaluatedMatrix {
    std::vector<std::vector<Rational>> entries;
    int rank = 0;
};

// Entrywise evaluation at a rational point plus the exact rank there.
EvaluatedMatrix eval_matrix(const PolyMatrix& m, const std::vector<Rational>& point);

// ---- text format ----
//
//   # comment
//   vars: 3
//   0; -d3; d2
//   d3; 0; -d1
//
// Blank lines and '#' comments are ignored anywhere. Entries use the
// polynomial grammar; rows must all have the same number of entries.
PolyMatrix parse_matrix_text(const std::string& text);
PolyMatrix parse_matrix_file(const std::string& path);
std::string format_matrix(const PolyMatrix& m);

} // namespace hautus
