#include "dpcolor/f3.hpp"

#include <stdexcept>

namespace dpc {

LinearFactor perm_to_factor(const Permutation& sigma, int i, int j) {
  if (sigma.size() != 3) throw std::invalid_argument("factor encoding needs modulus 3");
  if (i >= j) throw std::invalid_argument("factor variables need i < j");
  LinearFactor f;
  f.i = i;
  f.j = j;
  bool diff_const = true;
  bool sum_const = true;
  F3 diff = F3::of(0 - sigma(0));
  F3 sum = F3::of(0 + sigma(0));
  for (int z = 1; z < 3; ++z) {
    if (F3::of(z - sigma(z)) != diff) diff_const = false;
    if (F3::of(z + sigma(z)) != sum) sum_const = false;
  }
  if (diff_const) {
    f.c = 1;
    f.a = diff;
  } else if (sum_const) {
    f.c = 0;
    f.a = sum;
  } else {
    // Cannot happen: on three elements every bijection is a shift or a
    // reflection.
    throw std::logic_error("permutation is neither shift nor reflection");
  }
  return f;
}

Permutation factor_to_perm(const LinearFactor& f) {
  std::vector<int> images(3);
  for (int z = 0; z < 3; ++z) {
    F3 img = f.c == 1 ? F3::of(z) - f.a : f.a - F3::of(z);
    images[static_cast<std::size_t>(z)] = img.v;
  }
  return Permutation(std::move(images));
}

}  // namespace dpc
