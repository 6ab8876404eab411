#include "symchev/cache.hpp"

#include <fstream>
#include <sstream>

namespace symchev {

namespace {

std::string order_line(const MonomialOrder& o) { return o.describe(); }

// One text line per basis element keeps diffs and determinism checks easy.
std::string render(const GroebnerBasis& gb, const Ideal& input) {
    std::ostringstream os;
    os << "symchev-gb v1\n";
    os << "key " << input.canonical_key() << "\n";
    os << "order " << order_line(gb.order) << "\n";
    os << "basis " << gb.basis.size() << "\n";
    for (const auto& p : gb.basis) os << p.to_string() << "\n";
    return os.str();
}

}  // namespace

std::string serialize_order(const MonomialOrder& o) { return order_line(o); }

GbCache::GbCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path GbCache::path_for(const std::string& fingerprint) const {
    return dir_ / ("gb-" + fingerprint + ".txt");
}

std::optional<GroebnerBasis> GbCache::lookup(const std::string& fingerprint, const Ideal& input,
                                             const MonomialOrder& order) {
    std::lock_guard<std::mutex> lock(mu_);
    std::ifstream in(path_for(fingerprint));
    if (!in) {
        ++misses_;
        return std::nullopt;
    }
    std::string line;
    if (!std::getline(in, line) || line != "symchev-gb v1") {
        ++misses_;
        return std::nullopt;
    }
    if (!std::getline(in, line) || line != "key " + input.canonical_key()) {
        ++misses_;
        return std::nullopt;
    }
    if (!std::getline(in, line) || line != "order " + order_line(order)) {
        ++misses_;
        return std::nullopt;
    }
    std::size_t count = 0;
    if (!std::getline(in, line) || line.rfind("basis ", 0) != 0) {
        ++misses_;
        return std::nullopt;
    }
    count = std::stoul(line.substr(6));
    GroebnerBasis gb;
    gb.ring = input.ring;
    gb.order = order;
    gb.fingerprint = fingerprint;
    for (std::size_t k = 0; k < count; ++k) {
        if (!std::getline(in, line)) {
            ++misses_;
            return std::nullopt;
        }
        gb.basis.push_back(parse_poly(line, input.ring));
    }
    ++hits_;
    return gb;
}

void GbCache::store(const GroebnerBasis& gb, const Ideal& input) {
    std::lock_guard<std::mutex> lock(mu_);
    std::filesystem::path tmp = path_for(gb.fingerprint);
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << render(gb, input);
    }
    std::filesystem::rename(tmp, path_for(gb.fingerprint));
}

}  // namespace symchev
