#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hautus {

// A power product d1^e1 * ... * dn^en, stored as its exponent vector.
// The number of variables is fixed by the vector length; all operations
// require equal lengths.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : exps_(static_cast<size_t>(nvars), 0) {
        if (nvars < 0) throw std::invalid_argument("Monomial: negative variable count");
    }
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
        for (int e : exps_)
            if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
    }

    int nvars() const { return static_cast<int>(exps_.size()); }
    int exponent(int v) const { return exps_.at(static_cast<size_t>(v)); }
    const std::vector<int>& exponents() const { return exps_; }

    int total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
    }

    Monomial times(const Monomial& o) const {
        check_same(o);
        Monomial r = *this;
        for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        check_same(o);
        for (size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    // this / o; requires o.divides(*this).
    Monomial divided_by(const Monomial& o) const {
        check_same(o);
        Monomial r = *this;
        for (size_t i = 0; i < exps_.size(); ++i) {
            r.exps_[i] -= o.exps_[i];
            if (r.exps_[i] < 0) throw std::invalid_argument("Monomial: inexact division");
        }
        return r;
    }

    Monomial lcm_with(const Monomial& o) const {
        check_same(o);
        Monomial r = *this;
        for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], o.exps_[i]);
        return r;
    }

    Monomial gcd_with(const Monomial& o) const {
        check_same(o);
        Monomial r = *this;
        for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::min(r.exps_[i], o.exps_[i]);
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        check_same(o);
        for (size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0 && o.exps_[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    void check_same(const Monomial& o) const {
        if (exps_.size() != o.exps_.size())
            throw std::invalid_argument("Monomial: mismatched variable counts");
    }

    std::vector<int> exps_;
};

// Three-way comparisons; return <0, 0, >0 like strcmp.
//
// degrevlex: higher total degree wins; ties broken by the *smaller* exponent
// in the last position where they differ.
inline int degrevlex_cmp(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    for (size_t i = ea.size(); i-- > 0;) {
        if (ea[i] != eb[i]) return ea[i] > eb[i] ? -1 : 1;
    }
    return 0;
}

inline int lex_cmp(const Monomial& a, const Monomial& b) {
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    for (size_t i = 0; i < ea.size(); ++i) {
        if (ea[i] != eb[i]) return ea[i] < eb[i] ? -1 : 1;
    }
    return 0;
}

// Term orders for Groebner computations. block(m) compares the first m
// variables lexicographically and breaks ties by degrevlex on the rest
// (the classic elimination order).
struct MonomialOrder {
    enum class Kind { degrevlex, lex, block };

    Kind kind = Kind::degrevlex;
    int split = 0; // block only: number of leading variables in the lex block

    static MonomialOrder degrevlex() { return {Kind::degrevlex, 0}; }
    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder block(int split) { return {Kind::block, split}; }

    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind) {
        case Kind::degrevlex: return degrevlex_cmp(a, b);
        case Kind::lex: return lex_cmp(a, b);
        case Kind::block: {
            const auto& ea = a.exponents();
            const auto& eb = b.exponents();
            int m = std::min<int>(split, static_cast<int>(ea.size()));
            for (int i = 0; i < m; ++i)
                if (ea[i] != eb[i]) return ea[i] < eb[i] ? -1 : 1;
            std::vector<int> ra(ea.begin() + m, ea.end());
            std::vector<int> rb(eb.begin() + m, eb.end());
            return degrevlex_cmp(Monomial(std::move(ra)), Monomial(std::move(rb)));
        }
        }
        return 0;
    }
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    friend bool operator==(const MonomialOrder& x, const MonomialOrder& y) {
        return x.kind == y.kind && (x.kind != Kind::block || x.split == y.split);
    }
};

} // namespace hautus
