#pragma once

#include <string>
#include <vector>

#include "braidgc/word.hpp"

namespace braidgc {

// A permutation of {1..n}. Products compose right to left:
// (p * q)(i) = p(q(i)), so the image of a word g1 g2 ... gm applies gm first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  static Permutation transposition(int n, int i, int j);
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  bool is_identity() const;
  Permutation inverse() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  bool operator==(const Permutation&) const = default;

  std::string cycle_notation() const;  // "(1 2)(3 4)" or "id"
  const std::vector<int>& images() const { return images_; }

 private:
  std::vector<int> images_;
};

// The homomorphism onto S_n: sigma_i -> (i, i+1), x -> id; a- and x-level
// symbols are expanded first. Throws std::invalid_argument on out-of-range
// or named symbols.
Permutation project(const Word& w, int n);

bool is_pure(const Word& w, int n);

}  // namespace braidgc
