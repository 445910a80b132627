#pragma once

#include "torhom/int_mat.hpp"

#include <optional>

namespace torhom {

/// Smith normal form S = U * M * V with U, V unimodular, S diagonal,
/// nonnegative entries forming a divisibility chain d_1 | d_2 | ...
struct SnfResult {
  IntMat S, U, V;
  std::size_t rank = 0;
};

/// Free rank plus invariant factors (each > 1, each dividing the next).
struct InvariantFactors {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const InvariantFactors&) const = default;

  Int torsion_order() const;
  /// p-power part of each invariant factor, 1s dropped.
  InvariantFactors localized_at(const Int& p) const;
  std::vector<Int> torsion_primes() const;
};

SnfResult snf(const IntMat& m);

/// Row Hermite normal form H = U * M, U unimodular. H is the canonical
/// representative of the row lattice: pivots positive, entries above each
/// pivot reduced into [0, pivot), zero rows trailing.
struct HnfResult {
  IntMat H, U;
  std::size_t rank = 0;
};
HnfResult hnf(const IntMat& m);

std::size_t rank_of(const IntMat& m);

/// Columns form a basis of the integer kernel {x : M x = 0}; always saturated.
IntMat kernel_basis(const IntMat& m);

/// Rows generate a lattice L; returns the canonical (HNF) basis of
/// {v : k v in L for some k > 0}.
IntMat saturate_rows(const IntMat& generators);

/// Canonical HNF basis of the row lattice (zero rows dropped).
IntMat row_lattice_basis(const IntMat& generators);

/// Invariant factors of Z^rows / (column span of M).
InvariantFactors cokernel_invariants(const IntMat& m);

/// Integer solution x of M x = b, if one exists.
std::optional<std::vector<Int>> solve_integer_linear(const IntMat& m, const std::vector<Int>& b);

/// Integer solution X of M X = B columnwise, if all columns are solvable.
std::optional<IntMat> solve_integer_linear_mat(const IntMat& m, const IntMat& b);

/// Does v lie in the row lattice generated by the rows of L?
bool in_row_lattice(const IntMat& latt, const std::vector<Int>& v);

/// A rational solution of the congruence system C x == d (mod Z), if any,
/// canonicalized: minimal coordinate denominator among all solutions, then
/// lexicographically least representative in [0,1)^n.
std::optional<RatVec> solve_integer_affine(const IntMat& c, const RatVec& d);

/// All solutions of C x == d (mod Z) in [0,1)^n with coordinate denominators
/// dividing q. Ordering is lexicographic.
std::vector<RatVec> enumerate_affine_solutions(const IntMat& c, const RatVec& d, const Int& q);

}  // namespace torhom
