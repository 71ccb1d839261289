#include "t2sum/transpose.hpp"

#include <string>

#include "t2sum/error.hpp"

namespace t2sum {

BlockMatrix::BlockMatrix(BitMatrix entries, std::size_t p)
    : entries_(std::move(entries)), p_(p) {
  if (entries_.rows() != entries_.cols())
    throw InputError("block matrix must be square");
  if (p_ == 0 || entries_.rows() % p_ != 0)
    throw InputError("block grid size " + std::to_string(p_) +
                     " does not divide " + std::to_string(entries_.rows()));
}

BlockMatrix partial_transpose(const BlockMatrix &m) {
  const std::size_t q = m.q();
  BitMatrix out(m.n(), m.n());
  for (std::size_t s1 = 0; s1 < m.p(); ++s1)
    for (std::size_t s2 = 0; s2 < m.p(); ++s2)
      for (std::size_t r1 = 0; r1 < q; ++r1)
        for (std::size_t r2 = 0; r2 < q; ++r2)
          if (m.block_entry(s1, s2, r2, r1))
            out.set(s1 * q + r1, s2 * q + r2);
  return {std::move(out), m.p()};
}

bool blocks_symmetric(const BlockMatrix &m) {
  const std::size_t q = m.q();
  for (std::size_t s1 = 0; s1 < m.p(); ++s1)
    for (std::size_t s2 = 0; s2 < m.p(); ++s2)
      for (std::size_t r1 = 0; r1 < q; ++r1)
        for (std::size_t r2 = r1 + 1; r2 < q; ++r2)
          if (m.block_entry(s1, s2, r1, r2) != m.block_entry(s1, s2, r2, r1))
            return false;
  return true;
}

bool ppt_test(const Graph &k, std::size_t p) {
  if (p < 2)
    throw InputError("PPT test needs p >= 2");
  return blocks_symmetric(BlockMatrix(k.adjacency(), p));
}

} // namespace t2sum
