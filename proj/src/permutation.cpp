#include "bstar/permutation.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace bstar {

Permutation Permutation::from_symbols(std::span<const int> symbols) {
  const auto n = static_cast<int>(symbols.size());
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument("permutation dimension " + std::to_string(n) +
                                " outside 1.." + std::to_string(kMaxDimension));
  }
  std::array<bool, kMaxDimension + 1> seen{};
  Permutation out;
  out.n_ = static_cast<std::uint8_t>(n);
  for (int k = 0; k < n; ++k) {
    const int s = symbols[static_cast<std::size_t>(k)];
    if (s < 1 || s > n || seen[static_cast<std::size_t>(s)]) {
      throw std::invalid_argument("symbol list is not a bijection on 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(s)] = true;
    out.symbols_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(s);
  }
  return out;
}

Permutation Permutation::identity(int n) {
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument("permutation dimension " + std::to_string(n) + " unsupported");
  }
  Permutation out;
  out.n_ = static_cast<std::uint8_t>(n);
  for (int k = 0; k < n; ++k) out.symbols_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(k + 1);
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.n_ = n_;
  for (int k = 0; k < n_; ++k) {
    out.symbols_[static_cast<std::size_t>(symbols_[static_cast<std::size_t>(k)] - 1)] =
        static_cast<std::uint8_t>(k + 1);
  }
  return out;
}

std::size_t Permutation::hash() const {
  // FNV-1a over the used symbols.
  std::uint64_t h = 1469598103934665603ULL;
  for (int k = 0; k < n_; ++k) {
    h ^= symbols_[static_cast<std::size_t>(k)];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

SwapOp::SwapOp(int first, int second) : i(first), j(second) {
  if (first < 1 || second <= first) {
    throw std::invalid_argument("swap positions must satisfy 1 <= i < j");
  }
}

Permutation apply_swap(const Permutation& x, SwapOp op) {
  if (op.j > x.dimension()) {
    throw std::invalid_argument("swap position " + std::to_string(op.j) + " exceeds n = " +
                                std::to_string(x.dimension()));
  }
  return x.swapped(op.i, op.j);
}

Parity parity(const Permutation& x) {
  // Cycle decomposition: parity of (n - number of cycles).
  const int n = x.dimension();
  std::array<bool, Permutation::kMaxDimension + 1> visited{};
  int cycles = 0;
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    ++cycles;
    for (int k = start; !visited[static_cast<std::size_t>(k)]; k = x[k]) {
      visited[static_cast<std::size_t>(k)] = true;
    }
  }
  return (n - cycles) % 2 == 0 ? Parity::kEven : Parity::kOdd;
}

Permutation relabel(const Permutation& x, const Permutation& pi) {
  if (x.dimension() != pi.dimension()) {
    throw std::invalid_argument("relabel: dimension mismatch");
  }
  std::array<int, Permutation::kMaxDimension> symbols{};
  for (int k = 1; k <= x.dimension(); ++k) symbols[static_cast<std::size_t>(k - 1)] = pi[x[k]];
  return Permutation::from_symbols(std::span<const int>(symbols.data(), static_cast<std::size_t>(x.dimension())));
}

std::uint64_t factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  std::uint64_t out = 1;
  for (int k = 2; k <= n; ++k) {
    if (__builtin_mul_overflow(out, static_cast<std::uint64_t>(k), &out)) {
      throw std::overflow_error(std::to_string(n) + "! does not fit in 64 bits");
    }
  }
  return out;
}

std::uint64_t rank(const Permutation& x) {
  const int n = x.dimension();
  std::uint64_t r = 0;
  for (int k = 1; k <= n; ++k) {
    int smaller_after = 0;
    for (int m = k + 1; m <= n; ++m) {
      if (x[m] < x[k]) ++smaller_after;
    }
    r = r * static_cast<std::uint64_t>(n - k + 1) + static_cast<std::uint64_t>(smaller_after);
  }
  return r;
}

Permutation unrank(int n, std::uint64_t r) {
  if (n < 1 || n > Permutation::kMaxDimension) {
    throw std::invalid_argument("unrank: unsupported dimension");
  }
  if (r >= factorial(n)) {
    throw std::out_of_range("rank " + std::to_string(r) + " outside [0, " + std::to_string(n) + "!)");
  }
  std::array<int, Permutation::kMaxDimension> digits{};
  for (int k = n - 1; k >= 0; --k) {
    const auto base = static_cast<std::uint64_t>(n - k);
    digits[static_cast<std::size_t>(k)] = static_cast<int>(r % base);
    r /= base;
  }
  std::vector<int> pool;
  for (int s = 1; s <= n; ++s) pool.push_back(s);
  std::array<int, Permutation::kMaxDimension> symbols{};
  for (int k = 0; k < n; ++k) {
    const auto it = pool.begin() + digits[static_cast<std::size_t>(k)];
    symbols[static_cast<std::size_t>(k)] = *it;
    pool.erase(it);
  }
  return Permutation::from_symbols(std::span<const int>(symbols.data(), static_cast<std::size_t>(n)));
}

std::string format_perm(const Permutation& x) {
  std::string out;
  const int n = x.dimension();
  for (int k = 1; k <= n; ++k) {
    if (n <= 9) {
      out.push_back(static_cast<char>('0' + x[k]));
    } else {
      if (k > 1) out.push_back(',');
      out += std::to_string(x[k]);
    }
  }
  return out;
}

Permutation parse_perm(std::string_view text) {
  std::vector<int> symbols;
  if (text.find(',') == std::string_view::npos) {
    if (text.empty() || text.size() > 9) {
      throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
    }
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
      }
      symbols.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string_view token = text.substr(start, end - start);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
      }
      symbols.push_back(value);
      start = end + 1;
    }
  }
  return Permutation::from_symbols(symbols);
}

}  // namespace bstar
