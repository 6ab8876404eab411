#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

#include "symchev/groebner.hpp"

namespace symchev {

// On-disk store for reduced Groebner bases, keyed by a content hash of
// (ring, order, canonical generator list). Files embed the full canonical
// key, so a hash collision degrades to a recomputation, never a wrong basis.
// Cache hits reproduce the computed basis bit-identically because the
// serialization is the canonical printed form.
class GbCache {
  public:
    explicit GbCache(std::filesystem::path dir);

    std::optional<GroebnerBasis> lookup(const std::string& fingerprint, const Ideal& input,
                                        const MonomialOrder& order);
    void store(const GroebnerBasis& gb, const Ideal& input);

    const std::filesystem::path& dir() const { return dir_; }
    int hits() const { return hits_; }
    int misses() const { return misses_; }

  private:
    std::filesystem::path dir_;
    std::mutex mu_;
    int hits_ = 0;
    int misses_ = 0;

    std::filesystem::path path_for(const std::string& fingerprint) const;
};

std::string serialize_order(const MonomialOrder& o);

}  // namespace symchev
