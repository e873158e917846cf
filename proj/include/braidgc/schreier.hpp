#pragma once

#include <vector>

#include "braidgc/word.hpp"

namespace braidgc {

// Schreier transversal for the stabilizer of strand 1: m_0 = 1, m_j =
// s_j s_{j-1} ... s_1, so that m_j moves strand 1 to j+1.
std::vector<Word> schreier_transversal(int n);

// Schreier generator d_{x,m_j} = (rep(x * m_j))^-1 * x * m_j expressed in the
// stabilizer generators {a_{1,2..n}, s_2..s_{n-1}, x_{1,k}, x_{2,k}}:
//   sigma_i: s_i if i > j+1, empty if i = j+1, a_{1,i+1} if i = j, s_{i+1} if i < j
//   x_k:     x_{1,k} if j = 0, x_{2,k} otherwise.
// x must be a sigma or a level-1 x symbol, 0 <= j <= n-1.
Word d_table(const GeneratorSymbol& x, int j, int n);

// Rewrites a word whose projection fixes strand 1 onto the stabilizer
// generators via the transversal scan; output is freely reduced. Symbols are
// expanded to the base alphabet first. Throws std::invalid_argument if the
// projection moves strand 1.
Word rs_rewrite(const Word& w, int n);

}  // namespace braidgc
