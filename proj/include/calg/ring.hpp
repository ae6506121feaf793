#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "calg/errors.hpp"
#include "calg/monomial.hpp"

namespace calg {

// Standard-graded polynomial ring over the rationals with a fixed monomial
// order. Every variable has weight 1.
class PolyRing {
public:
    PolyRing(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::degrevlex)
        : vars_(std::move(vars)), order_(order) {
        if (vars_.empty()) throw StructuralError("a polynomial ring needs at least one variable");
        std::set<std::string> seen(vars_.begin(), vars_.end());
        if (seen.size() != vars_.size())
            throw StructuralError("duplicate variable name in ring declaration");
    }

    int nvars() const { return static_cast<int>(vars_.size()); }
    MonomialOrder order() const { return order_; }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& variable(int i) const { return vars_[i]; }

    int variable_index(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const PolyRing& o) const { return vars_ == o.vars_ && order_ == o.order_; }
    bool operator!=(const PolyRing& o) const { return !(*this == o); }

private:
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::vector<std::string> vars,
                         MonomialOrder order = MonomialOrder::degrevlex) {
    return std::make_shared<const PolyRing>(std::move(vars), order);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return;
    if (!a || !b || *a != *b) throw StructuralError("operands live in different rings");
}

} // namespace calg
