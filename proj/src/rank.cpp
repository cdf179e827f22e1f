#include "pgcanon/rank.hpp"

#include "pgcanon/error.hpp"
#include "pgcanon/simd/kernels.hpp"

namespace pgc {

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t m) {
  const std::int64_t r = v % static_cast<std::int64_t>(m);
  return static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2) mod p.
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

MatrixModP::MatrixModP(std::uint32_t modulus, std::vector<std::vector<std::int64_t>> rows,
                       std::size_t cols)
    : modulus_(modulus), rows_(rows.size()), cols_(rows.empty() ? cols : rows.front().size()) {
  if (modulus < 2) throw Error(ErrorCode::NonPrimeModulus, "modulus must be at least 2");
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::LengthMismatch, "ragged matrix rows");
    for (std::int64_t v : r) entries_.push_back(reduce(v, modulus));
  }
}

VecModM VecModM::reduced(std::uint32_t modulus, const std::vector<std::int64_t>& values) {
  if (modulus < 2) throw Error(ErrorCode::NonPrimeModulus, "modulus must be at least 2");
  VecModM v{modulus, {}};
  for (std::int64_t x : values) v.entries.push_back(reduce(x, modulus));
  return v;
}

bool is_prime(std::uint32_t m) {
  if (m < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

Permutation vector_shift(std::uint32_t modulus, std::span<const std::uint32_t> y) {
  std::vector<Point> images(y.size() * modulus);
  for (std::size_t j = 0; j < y.size(); ++j)
    for (std::uint32_t w = 0; w < modulus; ++w)
      images[j * modulus + w] = static_cast<Point>(j * modulus + (w + y[j]) % modulus);
  return Permutation::adopt(std::move(images));
}

GeneratorSet image_group_generators(const MatrixModP& m) {
  GeneratorSet out = GeneratorSet::empty(m.cols() * m.modulus());
  for (std::size_t a = 0; a < m.rows(); ++a) out.gens.push_back(vector_shift(m.modulus(), m.row(a)));
  return out;
}

std::size_t rank_p(const MatrixModP& m) {
  const std::uint32_t p = m.modulus();
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  BigCard order = build_chain(image_group_generators(m)).order();
  std::size_t r = 0;
  while (order > 1) {
    if (order % p != 0)
      throw Error(ErrorCode::NonPowerOrder, "image order is not a power of " + std::to_string(p));
    order /= p;
    ++r;
  }
  return r;
}

bool solvable_mod_m(const MatrixModP& m, const VecModM& y) {
  if (y.entries.size() != m.cols())
    throw Error(ErrorCode::LengthMismatch, "vector length " + std::to_string(y.entries.size()) +
                                               " but matrix has " + std::to_string(m.cols()) +
                                               " columns");
  if (y.modulus != m.modulus())
    throw Error(ErrorCode::LengthMismatch, "vector and matrix moduli differ");
  return build_chain(image_group_generators(m)).contains(vector_shift(y.modulus, y.entries));
}

std::size_t gauss_rank(const MatrixModP& m) {
  const std::uint32_t p = m.modulus();
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  const std::size_t cols = m.cols();
  std::vector<std::vector<std::uint32_t>> a;
  for (std::size_t r = 0; r < m.rows(); ++r) a.emplace_back(m.row(r).begin(), m.row(r).end());
  const auto& k = simd::active();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint32_t inv = inverse_mod(a[rank][c], p);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      // row_r -= (a[r][c] / pivot) * row_rank
      const std::uint32_t factor =
          static_cast<std::uint32_t>((static_cast<std::uint64_t>(a[r][c]) * inv % p) * (p - 1) % p);
      if (p < (1u << 15)) {
        k.axpy_mod(a[r].data(), a[rank].data(), factor, p, cols);
      } else {
        for (std::size_t j = 0; j < cols; ++j)
          a[r][j] = static_cast<std::uint32_t>((a[r][j] + static_cast<std::uint64_t>(factor) * a[rank][j]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace pgc
