#include "kasami/gf2.hpp"

#include <bit>
#include <utility>

#include "kasami/error.hpp"

namespace kasami::gf2 {

std::size_t rank(std::vector<std::uint64_t> rows) {
  std::size_t r = 0;
  for (int bit = 63; bit >= 0; --bit) {
    const std::uint64_t mask = std::uint64_t{1} << bit;
    std::size_t pivot = r;
    while (pivot < rows.size() && !(rows[pivot] & mask)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && (rows[i] & mask)) rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

namespace {

// Gaussian elimination that also tracks which original rows were combined.
struct Eliminated {
  std::vector<BitVector> rows;
  std::vector<std::uint64_t> combos;
  std::size_t rank = 0;
};

Eliminated eliminate(std::vector<BitVector> rows) {
  if (rows.size() > 64) throw KasamiError(Errc::InvalidInput, "at most 64 rows supported");
  Eliminated e;
  e.combos.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) e.combos[i] = std::uint64_t{1} << i;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && !rows[pivot].test(c)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    std::swap(e.combos[r], e.combos[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].test(c)) {
        rows[i] ^= rows[r];
        e.combos[i] ^= e.combos[r];
      }
    }
    ++r;
  }
  e.rank = r;
  e.rows = std::move(rows);
  return e;
}

}  // namespace

std::size_t rank(std::vector<BitVector> rows) { return eliminate(std::move(rows)).rank; }

std::vector<std::uint64_t> left_kernel(const std::vector<BitVector>& rows) {
  auto e = eliminate(rows);
  // Rows that reduced to zero record kernel vectors; they are independent.
  return {e.combos.begin() + static_cast<std::ptrdiff_t>(e.rank), e.combos.end()};
}

}  // namespace kasami::gf2
