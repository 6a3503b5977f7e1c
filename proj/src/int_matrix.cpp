#include "ps/int_matrix.hpp"

#include <sstream>

#include "ps/errors.hpp"

namespace ps {

IntMatrix::IntMatrix(int order) : order_(order) {
  if (order < 0) throw domain_error("matrix order must be non-negative");
  cells_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), Int(0));
}

IntMatrix IntMatrix::identity(int order) {
  IntMatrix m(order);
  for (int i = 0; i < order; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.order());
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) {
      if (j) out << ' ';
      out << m.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ps
