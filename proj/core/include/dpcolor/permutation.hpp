#pragma once

#include <cstdint>
#include <vector>

#include "dpcolor/splitmix.hpp"

namespace dpc {

// Permutation of {0, ..., m-1}, stored as the image list.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int m);
  // Takes ownership of the image list; throws std::invalid_argument if
  // it is not a bijection on {0, ..., size-1}.
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int z) const { return images_[z]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  // (a.compose(b))(z) == a(b(z))
  Permutation compose(const Permutation& b) const;

  // Rank in lexicographic order of image lists, 0 <= rank < size!.
  std::uint64_t lex_rank() const;
  static Permutation from_lex_rank(int m, std::uint64_t rank);

  static std::uint64_t count(int m);  // m!, guarded against overflow

  static Permutation random(int m, SplitMix64& rng);  // Fisher-Yates

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace dpc
