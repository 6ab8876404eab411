#include "symchev/rational.hpp"

namespace symchev {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty");
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_from_string: bad rational '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace symchev
