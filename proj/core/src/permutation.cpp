#include "dpcolor/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace dpc {

Permutation Permutation::identity(int m) {
  if (m < 0) throw std::invalid_argument("modulus must be nonnegative");
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("images are not a bijection");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int z = 0; z < size(); ++z) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(z)])] = z;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& b) const {
  if (size() != b.size()) throw std::invalid_argument("modulus mismatch in compose");
  std::vector<int> out(images_.size());
  for (int z = 0; z < size(); ++z) out[static_cast<std::size_t>(z)] = images_[static_cast<std::size_t>(b.images_[static_cast<std::size_t>(z)])];
  return Permutation(std::move(out));
}

std::uint64_t Permutation::lex_rank() const {
  // Factorial number system: the rank counts smaller unused images left
  // to right.
  std::uint64_t rank = 0;
  int m = size();
  for (int i = 0; i < m; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < m; ++j) {
      if (images_[static_cast<std::size_t>(j)] < images_[static_cast<std::size_t>(i)]) ++smaller;
    }
    rank = rank * static_cast<std::uint64_t>(m - i) + static_cast<std::uint64_t>(smaller);
  }
  return rank;
}

Permutation Permutation::from_lex_rank(int m, std::uint64_t rank) {
  if (rank >= count(m)) throw std::invalid_argument("rank out of range");
  std::vector<int> digits(static_cast<std::size_t>(m), 0);
  for (int i = m - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<int>(rank % static_cast<std::uint64_t>(m - i));
    rank /= static_cast<std::uint64_t>(m - i);
  }
  std::vector<int> pool(static_cast<std::size_t>(m));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    auto it = pool.begin() + digits[static_cast<std::size_t>(i)];
    images.push_back(*it);
    pool.erase(it);
  }
  return Permutation(std::move(images));
}

std::uint64_t Permutation::count(int m) {
  if (m < 0) throw std::invalid_argument("modulus must be nonnegative");
  if (m > 20) throw std::overflow_error("m! exceeds uint64 for m > 20");
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation Permutation::random(int m, SplitMix64& rng) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 0);
  for (int i = m - 1; i > 0; --i) {
    auto j = static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(i + 1)));
    std::swap(images[static_cast<std::size_t>(i)], images[j]);
  }
  return Permutation(std::move(images));
}

}  // namespace dpc
