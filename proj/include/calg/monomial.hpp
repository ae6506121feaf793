#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "calg/errors.hpp"

namespace calg {

enum class MonomialOrder { degrevlex, lex, deglex };

enum class Ordering { less = -1, equal = 0, greater = 1 };

// Exponent vector with cached total degree. All variables have weight 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps)
        : exp_(std::move(exps)), deg_(std::accumulate(exp_.begin(), exp_.end(), 0)) {
        for (int e : exp_)
            if (e < 0) throw StructuralError("negative exponent in monomial");
    }
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial variable(int nvars, int i, int power = 1) {
        std::vector<int> e(nvars, 0);
        e[i] = power;
        return Monomial(std::move(e));
    }

    int nvars() const { return static_cast<int>(exp_.size()); }
    int degree() const { return deg_; }
    int exponent(int i) const { return exp_[i]; }
    const std::vector<int>& exponents() const { return exp_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        check_compatible(o);
        std::vector<int> e(exp_.size());
        for (size_t i = 0; i < exp_.size(); ++i) e[i] = exp_[i] + o.exp_[i];
        return Monomial(std::move(e));
    }

    bool divides(const Monomial& o) const {
        check_compatible(o);
        for (size_t i = 0; i < exp_.size(); ++i)
            if (exp_[i] > o.exp_[i]) return false;
        return true;
    }

    // this / o; caller must ensure o.divides(*this).
    Monomial divide_by(const Monomial& o) const {
        check_compatible(o);
        std::vector<int> e(exp_.size());
        for (size_t i = 0; i < exp_.size(); ++i) {
            e[i] = exp_[i] - o.exp_[i];
            if (e[i] < 0) throw StructuralError("monomial division with remainder");
        }
        return Monomial(std::move(e));
    }

    Monomial lcm_with(const Monomial& o) const {
        check_compatible(o);
        std::vector<int> e(exp_.size());
        for (size_t i = 0; i < exp_.size(); ++i) e[i] = std::max(exp_[i], o.exp_[i]);
        return Monomial(std::move(e));
    }

    Monomial gcd_with(const Monomial& o) const {
        check_compatible(o);
        std::vector<int> e(exp_.size());
        for (size_t i = 0; i < exp_.size(); ++i) e[i] = std::min(exp_[i], o.exp_[i]);
        return Monomial(std::move(e));
    }

    bool coprime_with(const Monomial& o) const {
        check_compatible(o);
        for (size_t i = 0; i < exp_.size(); ++i)
            if (exp_[i] > 0 && o.exp_[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
    bool operator!=(const Monomial& o) const { return exp_ != o.exp_; }

private:
    void check_compatible(const Monomial& o) const {
        if (exp_.size() != o.exp_.size())
            throw StructuralError("monomials have mismatched variable counts");
    }

    std::vector<int> exp_;
    int deg_ = 0;
};

// Total order on monomials of a common ring. degrevlex and deglex refine
// total degree; lex is purely lexicographic with the first variable largest.
inline Ordering compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder order) {
    if (a.nvars() != b.nvars())
        throw StructuralError("compare_monomials: mismatched variable counts");
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    switch (order) {
    case MonomialOrder::lex:
        for (int i = 0; i < a.nvars(); ++i) {
            if (ea[i] != eb[i]) return ea[i] > eb[i] ? Ordering::greater : Ordering::less;
        }
        return Ordering::equal;
    case MonomialOrder::deglex:
        if (a.degree() != b.degree())
            return a.degree() > b.degree() ? Ordering::greater : Ordering::less;
        for (int i = 0; i < a.nvars(); ++i) {
            if (ea[i] != eb[i]) return ea[i] > eb[i] ? Ordering::greater : Ordering::less;
        }
        return Ordering::equal;
    case MonomialOrder::degrevlex:
        if (a.degree() != b.degree())
            return a.degree() > b.degree() ? Ordering::greater : Ordering::less;
        for (int i = a.nvars() - 1; i >= 0; --i) {
            if (ea[i] != eb[i]) return ea[i] < eb[i] ? Ordering::greater : Ordering::less;
        }
        return Ordering::equal;
    }
    throw StructuralError("unknown monomial order");
}

inline bool monomial_greater(const Monomial& a, const Monomial& b, MonomialOrder order) {
    return compare_monomials(a, b, order) == Ordering::greater;
}

} // namespace calg
