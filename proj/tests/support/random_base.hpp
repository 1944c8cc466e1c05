#pragma once

#include "qtower/serre.hpp"

#include <random>
#include <string>
#include <vector>

namespace qtower::testing {

/// Random simply connected presentation whose only nonzero products land in
/// the top degree. Triple products then leave the window, so associativity
/// holds by construction and the multiplication table is still nontrivial.
///
/// Basis sizes are drawn from [0, max_dim] in degrees 2..top-1; the top
/// degree gets at least one element. Classes p1..p(n_classes) are declared
/// zero when they fit under `top`.
inline BasePresentation random_base(std::mt19937 &rng, int top, int max_dim,
                                    int n_classes) {
  BasePresentation b(top);
  std::uniform_int_distribution<int> size(0, max_dim);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int d = 2; d <= top; ++d) {
    int n = d == top ? 1 + size(rng) % max_dim : size(rng);
    std::vector<std::string> names;
    for (int j = 0; j < n; ++j)
      names.push_back("e" + std::to_string(d) + "_" + std::to_string(j));
    b.set_basis(d, names);
  }
  for (int di = 2; 2 * di <= top; ++di) {
    int dj = top - di;
    for (std::size_t a = 0; a < b.dim(di); ++a)
      for (std::size_t c = 0; c < b.dim(dj); ++c) {
        if (di == dj && c < a)
          continue;
        if (di == dj && c == a && di % 2 == 1)
          continue;
        RatVector v(b.dim(top));
        for (auto &x : v)
          x = coef(rng);
        b.add_product(di, a, dj, c, v);
      }
  }
  for (int i = 1; i <= n_classes; ++i)
    if (4 * i <= top)
      b.set_class("p" + std::to_string(i), 4 * i, {});
  return b;
}

} // namespace qtower::testing
