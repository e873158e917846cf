#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidgc/word.hpp"

namespace braidgc {

// A genetic code <x_1..x_l || R> with |R| <= 1: R empty, R = {e} (trivial
// relator) or R = {r} for one nontrivial cyclically reduced word r over the
// x generators.
enum class RelationKind { Empty, Trivial, Relator };

struct GeneticCode {
  int generators = 0;  // l >= 0
  RelationKind kind = RelationKind::Empty;
  Word relator;  // nonempty iff kind == Relator
};

GeneticCode empty_code(int l = 0);
GeneticCode trivial_code(int l = 0);
GeneticCode relator_code(int l, Word r);

// Canonical surface codes: genus p orientable surface group relator
// x1 x2^-1 x3 ... x_{2p}^-1 x1^-1 x2 x3^-1 ... x_{2p}.
Word surface_relator(int genus);
GeneticCode surface_code(int genus);

// Code file format:
//   generators = <l>
//   relation = empty | trivial | <word over x1..xl>
GeneticCode parse_code(std::string_view text);
std::string code_text(const GeneticCode& code);

struct Presentation {
  std::vector<GeneratorSymbol> generators;
  std::vector<Word> relators;  // left-normalized: lhs * rhs^{-1}
};

// Presentation of the n-strand braid group of the code; n = 1 gives the
// presentation of the base group G itself. Throws std::invalid_argument for
// n < 1.
Presentation build_braid_presentation(const GeneticCode& code, int n);

// Defining expansion into the base alphabet {sigma_i, x_{1,k}}:
//   a[i,i+1] = s_i^2,  a[i,j] = s_{j-1}...s_{i+1} s_i^2 s_{i+1}^-1...s_{j-1}^-1,
//   x[k+1,i] = s_k^-1 x[k,i] s_k,  base symbols map to themselves.
// Named symbols have no defining expansion and map to themselves.
Word expand_generator(const GeneratorSymbol& sym);
Word expand_word(const Word& w);

// Validates symbol index ranges against strand count n and generator count l;
// returns an error description or nullopt. allow_named admits rho symbols.
std::optional<std::string> validate_word(const Word& w, int n, int l, bool allow_named = false);

// The n relation instances r_i = (product of a-symbols) obtained by
// conjugating the braid relator through the strands, plus for i <= n-1 the
// truncated right-hand side valid inside the level subgroup.
struct RelatorFamilyEntry {
  Word lhs;                        // relator with x_k replaced by x[i,k]
  Word rhs;                        // full a-symbol product
  std::optional<Word> rhs_truncated;  // a_{i,i+1} ... a_{i,n} for i <= n-1
};

// Requires a Trivial or Relator code (Empty codes have no such relation) and
// n >= 2.
std::vector<RelatorFamilyEntry> relator_family(const GeneticCode& code, int n);

}  // namespace braidgc
