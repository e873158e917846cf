#pragma once

#include <random>
#include <vector>

#include "braidgc/code.hpp"
#include "braidgc/word.hpp"

namespace testsupport {

// Random freely reduced word over the base alphabet of B_n with l surface
// generators. Deterministic for a fixed generator state.
inline braidgc::Word random_word(std::mt19937& rng, int n, int l, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  int len = len_dist(rng);
  int kinds = (n - 1) + l;
  braidgc::Word w;
  if (kinds == 0) return w;
  std::uniform_int_distribution<int> kind_dist(0, kinds - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  for (int i = 0; i < len; ++i) {
    int k = kind_dist(rng);
    int e = sign_dist(rng) == 0 ? 1 : -1;
    if (k < n - 1)
      w.append(braidgc::sigma(k + 1), e);
    else
      w.append(braidgc::xgen(k - (n - 1) + 1), e);
  }
  return w;
}

// Random raw letter sequence, deliberately unreduced.
inline std::vector<braidgc::Letter> random_raw(std::mt19937& rng, int n, int l, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> exp_dist(-3, 3);
  int len = len_dist(rng);
  int kinds = (n - 1) + l;
  std::vector<braidgc::Letter> out;
  if (kinds == 0) return out;
  std::uniform_int_distribution<int> kind_dist(0, kinds - 1);
  for (int i = 0; i < len; ++i) {
    int k = kind_dist(rng);
    braidgc::GeneratorSymbol s =
        k < n - 1 ? braidgc::sigma(k + 1) : braidgc::xgen(k - (n - 1) + 1);
    out.push_back(braidgc::Letter{s, exp_dist(rng)});
  }
  return out;
}

}  // namespace testsupport
