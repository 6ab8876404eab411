#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "symchev/monomial.hpp"

namespace symchev {

// Variable names plus an integer grading (default weight 1 per variable).
class PolyRing {
  public:
    explicit PolyRing(std::vector<std::string> vars, std::vector<int> weights = {});

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::string& var(int i) const { return vars_[i]; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& weights() const { return weights_; }
    bool standard_graded() const { return standard_; }

    int var_index(const std::string& name) const;  // -1 if unknown

    MonomialOrder grevlex() const { return grevlex_order(weights_); }
    MonomialOrder lex() const { return lex_order(nvars()); }

    bool same(const PolyRing& o) const { return vars_ == o.vars_ && weights_ == o.weights_; }

    std::string describe() const;

  private:
    std::vector<std::string> vars_;
    std::vector<int> weights_;
    std::map<std::string, int> index_;
    bool standard_ = true;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars, std::vector<int> weights = {});

// x1..xn then y1..yn, or custom base names; used by the symplectic double.
RingPtr make_double_ring(const std::vector<std::string>& v_names);

}  // namespace symchev
