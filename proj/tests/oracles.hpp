#pragma once

// Slow, table-free reference computations used only by the tests. Nothing here
// touches the library's log/exp tables or packed kernels.

#include <cstdint>
#include <vector>

namespace oracle {

inline int degree(std::uint64_t p) {
  int d = -1;
  while (p) {
    p >>= 1;
    ++d;
  }
  return d;
}

/// Carry-less product reduced modulo `modulus`.
inline std::uint64_t gf_mul(std::uint64_t a, std::uint64_t b, std::uint64_t modulus) {
  const int d = degree(modulus);
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> d) & 1) a ^= modulus;
  }
  return r;
}

inline std::uint64_t gf_pow(std::uint64_t a, std::uint64_t e, std::uint64_t modulus) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = gf_mul(r, a, modulus);
    a = gf_mul(a, a, modulus);
    e >>= 1;
  }
  return r;
}

/// sum_{i<k} x^{2^i}; equals 0 or 1 when x lies in GF(2^k).
inline std::uint64_t trace(std::uint64_t x, int k, std::uint64_t modulus) {
  std::uint64_t s = 0;
  for (int i = 0; i < k; ++i) {
    s ^= x;
    x = gf_mul(x, x, modulus);
  }
  return s;
}

/// c(alpha, beta) evaluated pointwise at x = theta^{i+1}, theta the class of x.
inline std::vector<int> codeword(int m, std::uint64_t modulus, std::uint64_t alpha, std::uint64_t beta) {
  const std::uint64_t q = std::uint64_t{1} << m;
  const std::uint64_t n = q * q - 1;
  std::vector<int> c(n);
  std::uint64_t x = 2;
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto t1 = trace(gf_mul(alpha, x, modulus), 2 * m, modulus);
    const auto t2 = trace(gf_mul(beta, gf_pow(x, q + 1, modulus), modulus), m, modulus);
    c[i] = static_cast<int>((t1 ^ t2) & 1);
    x = gf_mul(x, 2, modulus);
  }
  return c;
}

/// Number of cyclic windows of length b containing a one, checked window by window.
inline std::uint64_t window_weight(const std::vector<int>& x, std::size_t b) {
  const std::size_t n = x.size();
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    for (std::size_t k = 0; k < b; ++k) any = any || x[(i + k) % n];
    w += any;
  }
  return w;
}

/// GF(2) rank of small rows by elimination on copies.
inline std::size_t rank(std::vector<std::uint64_t> rows) {
  std::size_t r = 0;
  for (int bit = 63; bit >= 0; --bit) {
    std::size_t piv = r;
    while (piv < rows.size() && !((rows[piv] >> bit) & 1)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && ((rows[i] >> bit) & 1)) rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

}  // namespace oracle
