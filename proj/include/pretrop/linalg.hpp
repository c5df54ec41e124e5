#ifndef PRETROP_LINALG_HPP
#define PRETROP_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pretrop {

using Int = mpz_class;
using Rat = mpq_class;

// Integer vector: exponent tuples, ray directions, facet normals.
using IntVec = std::vector<Int>;

int sign_of(const Int& x);
Int dot(const IntVec& a, const IntVec& b);
bool is_zero_vec(const IntVec& v);
bool lex_less(const IntVec& a, const IntVec& b);
std::string vec_to_string(const IntVec& v);

/// v divided by the gcd of its entries; direction preserved.
/// Throws std::invalid_argument on the zero vector.
IntVec primitive(const IntVec& v);
void make_primitive_inplace(IntVec& v);

// Dense rational matrix, row major. Rows may be empty (0 x ncols).
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t nrows, std::size_t ncols)
      : ncols_(ncols), rows_(nrows, std::vector<Rat>(ncols)) {}

  static RatMatrix from_int_rows(const std::vector<IntVec>& rows,
                                 std::size_t ncols);
  static RatMatrix from_rat_rows(std::vector<std::vector<Rat>> rows,
                                 std::size_t ncols);

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  Rat& at(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const std::vector<std::vector<Rat>>& rows() const { return rows_; }

 private:
  std::size_t ncols_ = 0;
  std::vector<std::vector<Rat>> rows_;
};

/// Row rank over the rationals.
std::size_t rank(const RatMatrix& m);
std::size_t rank_int_rows(const std::vector<IntVec>& rows, std::size_t ncols);

/// Primitive integer basis of the right null space, canonical for the
/// row space of m (derived from the reduced row echelon form).
std::vector<IntVec> kernel_basis(const RatMatrix& m);
std::vector<IntVec> kernel_basis_int_rows(const std::vector<IntVec>& rows,
                                          std::size_t ncols);

/// Canonical basis of the row space: reduced row echelon form scaled to
/// primitive integer rows, first nonzero entry positive.
std::vector<IntVec> rref_int_rows(const std::vector<IntVec>& rows,
                                  std::size_t ncols);

}  // namespace pretrop

#endif
