#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ips/format.hpp"

namespace ips::test {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline PointSet load_corpus(const std::string& name) {
    return parse_set(read_file(std::string(IPS_CORPUS_DIR) + "/" + name + ".ips"));
}

// Deterministic generator shared by the property tests; independent of the
// standard library's distribution implementations.
struct SplitMix {
    std::uint64_t state;
    explicit SplitMix(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Uniform bit length in [1, max_bits], then a uniform value of that
    // length; exercises all magnitudes instead of only the top band.
    Integer integer_with_bits_up_to(unsigned max_bits) {
        unsigned bits = 1 + static_cast<unsigned>(below(max_bits));
        Integer v = 0;
        for (unsigned got = 0; got < bits; got += 64) {
            v <<= 64;
            v |= next();
        }
        unsigned excess = ((bits + 63) / 64) * 64 - bits;
        v >>= excess;
        boost::multiprecision::bit_set(v, bits - 1);  // pin the requested length
        return v;
    }
};

}  // namespace ips::test
