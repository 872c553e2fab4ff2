#pragma once

#include <string>

#include "cbc/batch_code.hpp"

namespace fixtures {

// Reference matrices, transcribed row by row.
inline const char* kTall =
    "6 4\n"
    "1001\n"
    "1100\n"
    "1110\n"
    "1111\n"
    "0111\n"
    "0011\n";

inline const char* kMaxK =
    "6 7\n"
    "1001111\n"
    "1100111\n"
    "1110011\n"
    "1111001\n"
    "0111101\n"
    "0011111\n";

inline const char* kLargeN =
    "4 8\n"
    "11100010\n"
    "10011011\n"
    "01010111\n"
    "00101101\n";

inline cbc::BatchCode tall() { return cbc::parse_matrix(kTall); }
inline cbc::BatchCode max_k() { return cbc::parse_matrix(kMaxK); }
inline cbc::BatchCode large_n() { return cbc::parse_matrix(kLargeN); }

}  // namespace fixtures
