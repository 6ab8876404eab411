#include "symchev/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace symchev {

PolyRing::PolyRing(std::vector<std::string> vars, std::vector<int> weights)
    : vars_(std::move(vars)), weights_(std::move(weights)) {
    if (weights_.empty()) weights_.assign(vars_.size(), 1);
    if (weights_.size() != vars_.size()) throw std::invalid_argument("PolyRing: weights/vars size mismatch");
    for (int w : weights_) {
        if (w <= 0) throw std::invalid_argument("PolyRing: weights must be positive");
        if (w != 1) standard_ = false;
    }
    for (int i = 0; i < static_cast<int>(vars_.size()); ++i) {
        if (vars_[i].empty()) throw std::invalid_argument("PolyRing: empty variable name");
        if (!index_.emplace(vars_[i], i).second)
            throw std::invalid_argument("PolyRing: duplicate variable '" + vars_[i] + "'");
    }
}

int PolyRing::var_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

std::string PolyRing::describe() const {
    std::ostringstream os;
    os << "Q[";
    for (int i = 0; i < nvars(); ++i) {
        os << (i ? "," : "") << vars_[i];
        if (weights_[i] != 1) os << "(" << weights_[i] << ")";
    }
    os << "]";
    return os.str();
}

RingPtr make_ring(std::vector<std::string> vars, std::vector<int> weights) {
    return std::make_shared<PolyRing>(std::move(vars), std::move(weights));
}

RingPtr make_double_ring(const std::vector<std::string>& v_names) {
    std::vector<std::string> vars = v_names;
    for (const auto& v : v_names) vars.push_back("y" + v.substr(v.size() > 1 && v[0] == 'x' ? 1 : 0));
    return make_ring(std::move(vars));
}

}  // namespace symchev
