#include "hautus/polymatrix.hpp"

#include "hautus/errors.hpp"

#include <stdexcept>

namespace hautus {

PolyMatrix::PolyMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars),
      entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Poly(nvars)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("PolyMatrix: empty shape");
    if (nvars < 0) throw std::invalid_argument("PolyMatrix: negative variable count");
}

const Poly& PolyMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::invalid_argument("PolyMatrix::at: index out of range");
    return entries_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

Poly& PolyMatrix::at(int i, int j) {
    return const_cast<Poly&>(static_cast<const PolyMatrix&>(*this).at(i, j));
}

std::vector<Poly> PolyMatrix::row(int i) const {
    std::vector<Poly> r;
    r.reserve(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
}

std::vector<Poly> MinorSet::nonzero_values() const {
    std::vector<Poly> vs;
    for (const auto& e : entries)
        if (!e.value.is_zero()) vs.push_back(e.value);
    return vs;
}

bool MinorSet::all_zero() const { return nonzero_values().empty(); }

Poly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const int n = m.rows();
    const int nv = m.nvars();
    if (n == 1) return m.at(0, 0);

    std::vector<std::vector<Poly>> a(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)] = m.row(i);

    int sign = 1;
    Poly prev = Poly::constant(nv, 1);
    for (int k = 0; k + 1 < n; ++k) {
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return Poly::zero(nv); // column of zeros below: singular
            std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(swap_row)]);
            sign = -sign;
        }
        const Poly& pivot = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly num = pivot * a[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                           a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                               a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                auto q = num.try_divide(prev);
                if (!q) throw invariant_violation("determinant: Bareiss division not exact");
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(*q);
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(k)] = Poly::zero(nv);
        }
        prev = pivot;
    }
    Poly det = a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    return sign < 0 ? -det : det;
}

namespace {

// first size-r subset of 0..total-1, in place; returns false when exhausted
bool first_combination(std::vector<int>& c, int r) {
    c.resize(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) c[static_cast<size_t>(i)] = i;
    return true;
}

bool next_combination(std::vector<int>& c, int total) {
    const int r = static_cast<int>(c.size());
    for (int i = r - 1; i >= 0; --i) {
        if (c[static_cast<size_t>(i)] < total - r + i) {
            ++c[static_cast<size_t>(i)];
            for (int j = i + 1; j < r; ++j)
                c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

MinorSet minors(const PolyMatrix& m, int r) {
    if (r < 1 || r > std::min(m.rows(), m.cols()))
        throw std::invalid_argument("minors: size out of range");
    MinorSet out;
    out.size = r;
    std::vector<int> rs, cs;
    first_combination(rs, r);
    do {
        first_combination(cs, r);
        do {
            PolyMatrix sub(r, r, m.nvars());
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    sub.at(i, j) = m.at(rs[static_cast<size_t>(i)], cs[static_cast<size_t>(j)]);
            out.entries.push_back({rs, cs, determinant(sub)});
        } while (next_combination(cs, m.cols()));
    } while (next_combination(rs, m.rows()));
    return out;
}

int rank_over_fraction_field(const PolyMatrix& m) {
    std::vector<std::vector<Poly>> a(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) a[static_cast<size_t>(i)] = m.row(i);

    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (!a[static_cast<size_t>(i)][static_cast<size_t>(col)].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<size_t>(rank)], a[static_cast<size_t>(pivot)]);
        const auto& prow = a[static_cast<size_t>(rank)];
        for (int i = rank + 1; i < m.rows(); ++i) {
            auto& irow = a[static_cast<size_t>(i)];
            if (irow[static_cast<size_t>(col)].is_zero()) continue;
            const Poly f = irow[static_cast<size_t>(col)];
            for (int j = 0; j < m.cols(); ++j)
                irow[static_cast<size_t>(j)] =
                    prow[static_cast<size_t>(col)] * irow[static_cast<size_t>(j)] -
                    f * prow[static_cast<size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

EvaluatedMatrix eval_matrix(const PolyMatrix& m, const std::vector<Rational>& point) {
    EvaluatedMatrix out;
    out.entries.assign(static_cast<size_t>(m.rows()),
                       std::vector<Rational>(static_cast<size_t>(m.cols()), Rational(0)));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j).eval(point);

    auto a = out.entries; // eliminate on a copy
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<size_t>(rank)], a[static_cast<size_t>(pivot)]);
        const Rational pv = a[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (int i = rank + 1; i < m.rows(); ++i) {
            const Rational f = a[static_cast<size_t>(i)][static_cast<size_t>(col)] / pv;
            if (f == 0) continue;
            for (int j = col; j < m.cols(); ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * a[static_cast<size_t>(rank)][static_cast<size_t>(j)];
        }
        ++rank;
    }
    out.rank = rank;
    return out;
}

} // namespace hautus
