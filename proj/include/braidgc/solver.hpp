#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidgc/code.hpp"
#include "braidgc/word.hpp"

namespace braidgc {

// Shape of the normal level subgroup generated by {a_{1,2..m}, x_{1,k}}.
enum class UVariant {
  FreeFull,        // no braid relator: free on all listed generators
  FreeEliminated,  // relator present: a_{1,2} eliminates, free on the rest
  Z2FreeProduct,   // trivial relator, level 3: torsion letter a_{1,3} of order 2
};

struct UStructure {
  int level = 0;
  UVariant variant = UVariant::FreeFull;
};

// Level structure per (code, level size m >= 2).
UStructure u_structure(const GeneticCode& code, int m);

// Decides triviality of a word over the level-local generators
// {a_{1,2..m}, x_{1,k}} inside the level subgroup.
bool u_is_trivial(const Word& u, const UStructure& s, const GeneticCode& code, int m);

struct Verdict {
  bool trivial = false;
  std::optional<std::string> witness;  // present iff nontrivial
};

class unsupported_base : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Word problem for the n-strand braid group of the code. Input symbols are
// expanded to the base alphabet first; n = 1 goes straight to base_solve.
// Throws unsupported_base when the base group falls outside the implemented
// one-relator fragment, std::invalid_argument on out-of-range symbols.
Verdict solve(const Word& w, const GeneticCode& code, int n);

// Word problem in the base group G: free reduction for empty/trivial
// relation sets; exponent vectors for the genus-1 surface relator; Dehn's
// algorithm under C'(1/6). Anything else throws unsupported_base.
Verdict base_solve(const Word& w, const GeneticCode& code);

// The braid relator of the level-m group as a single word
// r(x)^{-1} * s_1 s_2 ... s_{m-2} s_{m-1}^2 s_{m-2} ... s_1 (m >= 2); for
// m = 1 the inverse base relator. Defined for Trivial/Relator codes.
Word level_relator(const GeneticCode& code, int m);

}  // namespace braidgc
