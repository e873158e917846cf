#pragma once

#include "braidgc/word.hpp"

namespace braidgc {

// Closed-form conjugation inside the stabilizer of strand 1:
// returns w with conjugator^{-sign} * target * conjugator^{sign} = w, where
// the conjugator is s_i (2 <= i <= n-1) or x_{2,k}, the target is a_{1,j}
// (2 <= j <= n) or x_{1,k}, and w uses only the generators
// {a_{1,2..n}, x_{1,*}}. Throws std::invalid_argument outside that domain.
Word conjugation_rule(const GeneratorSymbol& conjugator, int sign, const GeneratorSymbol& target,
                      int n);

// g * u * g^-1 for a word u over {a_{1,j}, x_{1,k}} and a conjugator word g
// over {s_2.., x_{2,k}}, computed letterwise through conjugation_rule.
Word conjugate_into_stabilizer(const Word& u, const Word& g, int n);

struct Collected {
  Word u;     // over a_{1,2..n}, x_{1,k}
  Word tail;  // over s_2..s_{n-1}, x_{2,k}
};

// Splits a stabilizer-generator word as w = u * tail by pushing the normal
// subgroup letters left through the tail collected so far.
Collected collect(const Word& w, int n);

}  // namespace braidgc
