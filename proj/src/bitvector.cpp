#include "kasami/bitvector.hpp"

#include "kasami/error.hpp"

namespace kasami {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw KasamiError(Errc::InvalidInput, "bit string may only contain 0 and 1");
  }
  return v;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

}  // namespace kasami
