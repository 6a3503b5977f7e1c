#include "ps/exact_linear.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "ps/errors.hpp"

namespace ps {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      throw domain_error("image list is not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw domain_error("degree must be non-negative");
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

std::string to_string(const Permutation& rho) {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < rho.degree(); ++i) {
    if (i) out << ", ";
    out << rho.apply(i);
  }
  out << ']';
  return out.str();
}

CycleDecomposition cycle_decomposition(const Permutation& rho) {
  CycleDecomposition d;
  const int n = rho.degree();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  // scanning ascending means every orbit is discovered at its minimum, which
  // is exactly the canonical form
  for (int v = 0; v < n; ++v) {
    if (visited[static_cast<std::size_t>(v)]) continue;
    std::vector<int> orbit;
    int w = v;
    while (!visited[static_cast<std::size_t>(w)]) {
      visited[static_cast<std::size_t>(w)] = 1;
      orbit.push_back(w);
      w = rho.apply(w);
    }
    if (orbit.size() == 1)
      d.fixed_points.push_back(v);
    else
      d.cycles.push_back(std::move(orbit));
  }
  return d;
}

int sign(const Permutation& rho) {
  const CycleDecomposition d = cycle_decomposition(rho);
  const int transpositions = rho.degree() - (d.cycle_count() + d.fixed_point_count());
  return transpositions % 2 == 0 ? 1 : -1;
}

int sign_by_inversions(const Permutation& rho) {
  int inversions = 0;
  for (int i = 0; i < rho.degree(); ++i)
    for (int j = i + 1; j < rho.degree(); ++j)
      inversions += rho.apply(i) > rho.apply(j);
  return inversions % 2 == 0 ? 1 : -1;
}

IntMatrix identity_minus(const IntMatrix& a) {
  IntMatrix m(a.order());
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) m.at(i, j) = (i == j ? Int(1) : Int(0)) - a.at(i, j);
  return m;
}

Int determinant(const IntMatrix& m) {
  const int n = m.order();
  if (n == 0) return 1;

  std::vector<Int> a;
  a.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.push_back(m.at(i, j));
  auto cell = [&](int i, int j) -> Int& {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(j)];
  };

  int sgn = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (cell(k, k) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r) {
        if (cell(r, k) != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return 0;  // column is dead, the matrix is singular
      for (int j = k; j < n; ++j) std::swap(cell(k, j), cell(pivot, j));
      sgn = -sgn;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        // exact by the Bareiss identity: prev divides the numerator
        cell(i, j) = (cell(i, j) * cell(k, k) - cell(i, k) * cell(k, j)) / prev;
      cell(i, k) = 0;
    }
    prev = cell(k, k);
  }
  return sgn > 0 ? cell(n - 1, n - 1) : -cell(n - 1, n - 1);
}

Int signed_elementary_product(const IntMatrix& m, const Permutation& rho) {
  if (m.order() != rho.degree())
    throw domain_error("matrix order and permutation degree differ");
  Int product = sign(rho);
  for (int i = 0; i < m.order(); ++i) {
    product *= m.at(i, rho.apply(i));
    if (product == 0) break;
  }
  return product;
}

Int leibniz_determinant(const IntMatrix& m, int factorial_limit) {
  const int n = m.order();
  if (n > factorial_limit)
    throw resource_limit_error("matrix order " + std::to_string(n) +
                               " exceeds the factorial limit " + std::to_string(factorial_limit));
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  Int total = 0;
  do {
    total += signed_elementary_product(m, Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return total;
}

Int ps_via_determinant(const Multigraph& g) {
  return determinant(identity_minus(adjacency_matrix(g)));
}

}  // namespace ps
