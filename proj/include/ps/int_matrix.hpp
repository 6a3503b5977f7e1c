#ifndef PS_INT_MATRIX_HPP
#define PS_INT_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ps/bigint.hpp"

namespace ps {

// Square matrix of exact integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int order);
  static IntMatrix identity(int order);

  int order() const { return order_; }
  Int& at(int i, int j) { return cells_[index(i, j)]; }
  const Int& at(int i, int j) const { return cells_[index(i, j)]; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(j);
  }

  int order_ = 0;
  std::vector<Int> cells_;
};

IntMatrix transpose(const IntMatrix& m);

// Rows of space-separated integers, one row per line.
std::string to_string(const IntMatrix& m);

}  // namespace ps

#endif  // PS_INT_MATRIX_HPP
