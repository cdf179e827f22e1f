#pragma once

// Matrix rank over F_p and solvability over Z_m, decided through the order
// of and membership in the additive image group realised as permutations.

#include <cstdint>
#include <vector>

#include "pgcanon/group.hpp"

namespace pgc {

class MatrixModP {
 public:
  /// Entries are reduced modulo `modulus`. Throws LengthMismatch on ragged rows
  /// and NonPrimeModulus when modulus < 2.
  MatrixModP(std::uint32_t modulus, std::vector<std::vector<std::int64_t>> rows,
             std::size_t cols = 0);

  std::uint32_t modulus() const { return modulus_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const std::uint32_t> row(std::size_t r) const {
    return std::span<const std::uint32_t>(entries_).subspan(r * cols_, cols_);
  }

 private:
  std::uint32_t modulus_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> entries_;
};

struct VecModM {
  std::uint32_t modulus = 2;
  std::vector<std::uint32_t> entries;

  /// Entries reduced modulo `modulus`.
  static VecModM reduced(std::uint32_t modulus, const std::vector<std::int64_t>& values);
};

bool is_prime(std::uint32_t m);

/// One generator per row a: on the layer of column j (points j*m .. j*m+m-1)
/// it shifts w -> w + M[a][j] mod m. The span is the row space of M.
GeneratorSet image_group_generators(const MatrixModP& m);

/// The layer permutation of a vector: w -> w + y[j] mod m on layer j.
Permutation vector_shift(std::uint32_t modulus, std::span<const std::uint32_t> y);

/// log_p of the image group order. Throws NonPrimeModulus, NonPowerOrder.
std::size_t rank_p(const MatrixModP& m);

/// Whether y lies in the row space of M over Z_m. Throws LengthMismatch.
bool solvable_mod_m(const MatrixModP& m, const VecModM& y);

/// Row-echelon rank over F_p. Throws NonPrimeModulus.
std::size_t gauss_rank(const MatrixModP& m);

}  // namespace pgc
