#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kasami/bitvector.hpp"

namespace kasami::gf2 {

/// Rank over GF(2) of rows packed into 64-bit masks.
std::size_t rank(std::vector<std::uint64_t> rows);

/// Rank over GF(2) of bit-vector rows of equal length.
std::size_t rank(std::vector<BitVector> rows);

/// Basis of the left kernel { v : sum_i v_i rows[i] = 0 }, each v packed as a
/// mask over row indices (at most 64 rows).
std::vector<std::uint64_t> left_kernel(const std::vector<BitVector>& rows);

}  // namespace kasami::gf2
