#pragma once

#include <cstdint>
#include <vector>

#include "ildpc/parity_check.hpp"

namespace ildpc::testing {

/// The [7,4] Hamming parity-check matrix used as a fixture throughout:
///   1 1 1 0 1 0 0
///   1 0 1 1 0 1 0
///   1 1 0 1 0 0 1
inline ParityCheckMatrix hamming74() {
    std::vector<std::vector<std::uint32_t>> rows = {
        {0, 1, 2, 4},
        {0, 2, 3, 5},
        {0, 1, 3, 6},
    };
    return ParityCheckMatrix(3, 7, std::move(rows));
}

/// All 16 codewords of hamming74() by brute-force null-space enumeration.
inline std::vector<std::vector<std::uint8_t>> hamming74_codebook() {
    const ParityCheckMatrix H = hamming74();
    std::vector<std::vector<std::uint8_t>> book;
    for (int w = 0; w < 128; ++w) {
        std::vector<std::uint8_t> word(7);
        for (int i = 0; i < 7; ++i) word[static_cast<std::size_t>(i)] = (w >> i) & 1;
        if (H.syndrome_is_zero(word)) book.push_back(word);
    }
    return book;
}

}  // namespace ildpc::testing
