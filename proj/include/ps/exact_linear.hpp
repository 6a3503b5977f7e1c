#ifndef PS_EXACT_LINEAR_HPP
#define PS_EXACT_LINEAR_HPP

#include <compare>
#include <string>
#include <vector>

#include "ps/bigint.hpp"
#include "ps/int_matrix.hpp"
#include "ps/multigraph.hpp"

namespace ps {

// The Leibniz expansion walks all n! permutations; above this order it
// refuses instead of stalling. Callers may raise the limit explicitly.
inline constexpr int kDefaultFactorialLimit = 8;

// Bijection on {0..n-1}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// "[rho(0), rho(1), ...]"
std::string to_string(const Permutation& rho);

// Disjoint cycles of length >= 2 plus fixed points; together they cover
// {0..n-1}. Canonical form: each cycle rotated to start at its smallest
// element, cycles sorted by that element, fixed points ascending.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
  std::vector<int> fixed_points;

  int cycle_count() const { return static_cast<int>(cycles.size()); }
  int fixed_point_count() const { return static_cast<int>(fixed_points.size()); }
};

CycleDecomposition cycle_decomposition(const Permutation& rho);

// A permutation with m cycles and k fixed points on n points factors into
// n - (m + k) transpositions; the sign is the parity of that count.
int sign(const Permutation& rho);

// Same value by counting inversions. Kept public as an independent route.
int sign_by_inversions(const Permutation& rho);

IntMatrix identity_minus(const IntMatrix& a);

// Exact determinant by fraction-free (Bareiss) elimination. The 0x0 matrix
// has determinant 1.
Int determinant(const IntMatrix& m);

// sgn(rho) * prod_i m[i][rho(i)]. Throws if the degrees differ.
Int signed_elementary_product(const IntMatrix& m, const Permutation& rho);

// Sum of signed elementary products over all of S_n; the second, slower
// route to the determinant.
Int leibniz_determinant(const IntMatrix& m, int factorial_limit = kDefaultFactorialLimit);

// det(I - A) for the graph's adjacency matrix A: the Parry-Sullivan number.
Int ps_via_determinant(const Multigraph& g);

}  // namespace ps

#endif  // PS_EXACT_LINEAR_HPP
