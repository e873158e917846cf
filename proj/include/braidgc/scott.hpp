#pragma once

#include <string>
#include <vector>

#include "braidgc/word.hpp"

namespace braidgc {

// One defining relation lhs = rhs of the two-strand surface presentation
// from Scott's paper, stored verbatim.
struct ScottRelation {
  std::string label;  // display label, e.g. "2.1"
  int instance = 0;   // i for the i = 1,2 families, 0 otherwise
  Word lhs;
  Word rhs;
};

// Scott's presentation of the 2-strand pure braid group of the torus:
// generators a12, rho11, rho12, rho21, rho22 and 13 labeled relation
// families expanding to 18 instances.
struct ScottPresentation {
  std::vector<GeneratorSymbol> generators;
  std::vector<ScottRelation> relations;

  static ScottPresentation standard();
  const ScottRelation& relation(const std::string& label, int instance = 0) const;
};

struct ScottStep {
  std::string name;
  std::string detail;
  Word lhs;
  Word rhs;
  bool ok = false;
};

struct ScottReport {
  std::vector<ScottStep> steps;
  Word final_lhs;  // reduced sides of the relator-free equation
  Word final_rhs;
  bool contradictory = false;
};

// Replays the derivation that Scott's relations force, inside the free
// group on rho11 and rho12, an equation whose freely reduced sides differ;
// each step names the relation instance it uses and carries its own check.
ScottReport scott_refute();

}  // namespace braidgc
