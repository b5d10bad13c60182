#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace uite {

// FNV-1a, 64-bit. Content fingerprints for manifests and config hashes;
// not a cryptographic hash.
inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xCBF29CE484222325ULL) {
    for (unsigned char c : bytes) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v);

}  // namespace uite
