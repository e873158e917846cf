#pragma once

#include <vector>

#include "braidgc/perm.hpp"
#include "braidgc/word.hpp"
#include "braidgc/code.hpp"

namespace braidgc {

// One homomorphism of the presented group into S_k, given by the images of
// the presentation generators.
struct FiniteQuotient {
  int degree = 1;
  std::vector<Permutation> images;  // parallel to pres.generators

  Permutation evaluate(const Word& w, const Presentation& pres) const;
};

// Exhaustive enumeration of all generator assignments into S_k that satisfy
// every relator. Always contains the trivial assignment. Exponential in the
// generator count; meant for small presentations and k <= 5.
std::vector<FiniteQuotient> enumerate_finite_quotients(const Presentation& pres, int degree);

// True implies w != 1: some quotient maps w off the identity.
bool quotient_check(const Word& w, const Presentation& pres,
                    const std::vector<FiniteQuotient>& quotients);

}  // namespace braidgc
