#pragma once

#include <optional>
#include <vector>

#include "braidgc/word.hpp"

namespace braidgc {

struct PieceReport {
  bool passes = false;       // max piece length < |r| / 6
  long long max_piece = 0;
  long long relator_length = 0;
};

// Enumerates pieces of the symmetrized relator set by brute force: longest
// common prefixes over pairs of occurrence-distinct rotations of r^{+-1}
// (rotations of a periodic relator count as distinct occurrences, so proper
// powers fail the gate). r must be nontrivial and cyclically reduced.
PieceReport smallcancel_check(const Word& r);

// One factor conjugator * r^sign * conjugator^{-1} of a relator product.
struct RelatorSplice {
  Word conjugator;
  int sign = 1;
};

struct DehnResult {
  bool trivial = false;
  Word residual;                      // freely+cyclically reduced survivor if nontrivial
  std::vector<RelatorSplice> splices; // w = product of splices (freely) when trivial
};

// Greedy Dehn shortening; complete when smallcancel_check passes. The splice
// list certifies triviality inside the free group.
DehnResult dehn_reduce(const Word& w, const Word& r);

}  // namespace braidgc
