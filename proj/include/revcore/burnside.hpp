#ifndef REVCORE_BURNSIDE_HPP
#define REVCORE_BURNSIDE_HPP

#include <compare>
#include <cstdint>

#include "revcore/action.hpp"

namespace revcore {

// Canonical label of a transitive Z^k-set: the Hermite normal form of its
// stabilizer lattice. The matrix is k x k lower triangular with positive
// diagonal and, below the diagonal, entries reduced modulo the diagonal entry
// of their row. The index (product of the diagonal) is the orbit size.
struct LatticeClass {
  int rank = 0;
  std::vector<std::vector<long long>> hnf;
  long long index = 1;

  bool operator==(const LatticeClass&) const = default;
};

// Classes sort by (index, row-major lexicographic matrix entries).
bool lattice_class_less(const LatticeClass& a, const LatticeClass& b);

// Formal integer combination of classes; zero coefficients are never stored
// and terms are kept sorted.
struct BurnsideElement {
  int rank = 0;
  std::vector<std::pair<LatticeClass, long long>> terms;

  bool operator==(const BurnsideElement&) const = default;
};

// Column-style HNF basis of the lattice spanned by the given vectors
// (each of length k). The lattice must have full rank k.
std::vector<std::vector<long long>> hermite_normal_form(
    int k, std::vector<std::vector<long long>> vectors);

// Stabilizer lattice of a point under k pairwise commuting permutations:
// breadth-first orbit traversal tags every state with a vector in Z^k and
// every revisit contributes one relation vector.
LatticeClass stabilizer_lattice_hnf(const std::vector<Endo>& perms, int base_point);

LatticeClass trivial_class(int rank);
BurnsideElement burnside_zero(int rank);
BurnsideElement burnside_unit(int rank);
BurnsideElement burnside_single(LatticeClass cls, long long coeff = 1);

// Class of a left-only action of a free commutative monoid: the reversible
// core decomposed into orbits, one lattice class per orbit.
BurnsideElement burnside_class(const FiniteBiAction& a);

BurnsideElement burnside_add(const BurnsideElement& x, const BurnsideElement& y);

// Bilinear product; a product of two classes is computed by materializing the
// coset representatives of both lattices, acting diagonally on the product
// set, and re-extracting the orbit classes.
BurnsideElement burnside_mul(const BurnsideElement& x, const BurnsideElement& y);

}  // namespace revcore

#endif
