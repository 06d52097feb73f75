#ifndef BSTAR_PERMUTATION_HPP
#define BSTAR_PERMUTATION_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>

namespace bstar {

/// A permutation x = x_1 x_2 ... x_n of the symbols 1..n, i.e. one vertex of BS_n.
///
/// The dimension is stored alongside the symbols; operations combining two
/// permutations of different dimension throw std::invalid_argument.
/// Positions are 1-based throughout, matching the usual x_i notation.
class Permutation {
 public:
  static constexpr int kMaxDimension = 16;

  Permutation() = default;

  /// Throws std::invalid_argument unless `symbols` is a bijection on 1..size.
  static Permutation from_symbols(std::span<const int> symbols);
  static Permutation identity(int n);

  int dimension() const { return n_; }

  /// Symbol at 1-based `position`. No bounds check.
  int operator[](int position) const { return symbols_[static_cast<std::size_t>(position - 1)]; }

  int last() const { return n_ == 0 ? 0 : symbols_[static_cast<std::size_t>(n_ - 1)]; }

  Permutation inverse() const;

  /// Swaps the symbols at 1-based positions i and j. Unchecked; see apply_swap.
  Permutation swapped(int i, int j) const {
    Permutation out = *this;
    std::swap(out.symbols_[static_cast<std::size_t>(i - 1)],
              out.symbols_[static_cast<std::size_t>(j - 1)]);
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxDimension> symbols_{};
  std::uint8_t n_ = 0;
};

/// The transposition of positions (i, j), 1 <= i < j.
struct SwapOp {
  int i;
  int j;

  SwapOp(int first, int second);
};

/// x o (i,j): exchange the symbols at positions i and j. Involution.
Permutation apply_swap(const Permutation& x, SwapOp op);

enum class Parity { kEven, kOdd };

Parity parity(const Permutation& x);

/// Replaces every symbol s of x by pi(s). This is an automorphism of BS_n
/// because adjacency only looks at positions.
Permutation relabel(const Permutation& x, const Permutation& pi);

/// Lexicographic rank via the Lehmer code; identity has rank 0.
std::uint64_t rank(const Permutation& x);
Permutation unrank(int n, std::uint64_t r);

/// n! with overflow reported as std::overflow_error.
std::uint64_t factorial(int n);

/// Digit string for n <= 9 ("1234"), comma-separated integers otherwise
/// ("10,1,2,3,4,5,6,7,8,9").
std::string format_perm(const Permutation& x);
Permutation parse_perm(std::string_view text);

}  // namespace bstar

template <>
struct std::hash<bstar::Permutation> {
  std::size_t operator()(const bstar::Permutation& p) const noexcept { return p.hash(); }
};

#endif  // BSTAR_PERMUTATION_HPP
