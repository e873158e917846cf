#pragma once

#include <memory>
#include <string>
#include <vector>

#include "braidgc/code.hpp"
#include "braidgc/word.hpp"

namespace braidgc {

// Integer relation matrix of a presentation: one row per relator, one
// column per generator, entries are exponent sums. Exact arithmetic.
class AbelianizedGroup {
 public:
  explicit AbelianizedGroup(const Presentation& pres);

  // Exponent-sum vector of a word over the presentation generators.
  std::vector<long long> exponent_vector(const Word& w) const;

  // True iff v lies in the integer row space of the relation matrix.
  bool in_row_space(const std::vector<long long>& v) const;

  // Diagonal of the canonical (Smith) form, zeros trimmed to matrix rank,
  // each entry dividing the next. Returned as decimal strings to keep the
  // public surface free of the bignum dependency.
  std::vector<std::string> canonical_diagonal() const;

  int columns() const { return static_cast<int>(generators_.size()); }
  int rows() const;

 private:
  std::vector<GeneratorSymbol> generators_;
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// True implies w != 1 in the presented group: the exponent vector of w lies
// outside the row space of the relation matrix.
bool abelianization_oracle(const Word& w, const Presentation& pres);

}  // namespace braidgc
