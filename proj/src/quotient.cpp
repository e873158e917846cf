#include "braidgc/quotient.hpp"

#include <algorithm>
#include <map>

namespace braidgc {

Permutation FiniteQuotient::evaluate(const Word& w, const Presentation& pres) const {
  std::map<GeneratorSymbol, std::size_t> index;
  for (std::size_t i = 0; i < pres.generators.size(); ++i) index[pres.generators[i]] = i;
  Permutation acc(degree);
  for (const Letter& l : expand_word(w).letters()) {
    auto it = index.find(l.symbol);
    if (it == index.end())
      throw std::invalid_argument("word uses " + symbol_text(l.symbol) +
                                  " which is not a presentation generator");
    const Permutation& g = images[it->second];
    Permutation p = l.exponent > 0 ? g : g.inverse();
    long long reps = l.exponent < 0 ? -l.exponent : l.exponent;
    for (long long t = 0; t < reps; ++t) acc = acc * p;
  }
  return acc;
}

std::vector<FiniteQuotient> enumerate_finite_quotients(const Presentation& pres, int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  std::vector<Permutation> sym;
  {
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    do {
      sym.push_back(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
  }

  // Precompute relators as flat index/exponent lists once.
  std::map<GeneratorSymbol, std::size_t> index;
  for (std::size_t i = 0; i < pres.generators.size(); ++i) index[pres.generators[i]] = i;
  std::vector<std::vector<std::pair<std::size_t, long long>>> relators;
  for (const Word& r : pres.relators) {
    std::vector<std::pair<std::size_t, long long>> flat;
    for (const Letter& l : expand_word(r).letters()) flat.emplace_back(index.at(l.symbol), l.exponent);
    relators.push_back(std::move(flat));
  }

  std::vector<FiniteQuotient> found;
  std::vector<std::size_t> choice(pres.generators.size(), 0);
  std::vector<Permutation> inverses(sym.size());
  for (std::size_t i = 0; i < sym.size(); ++i) inverses[i] = sym[i].inverse();

  auto satisfied = [&]() {
    for (const auto& rel : relators) {
      Permutation acc(degree);
      for (const auto& [gi, e] : rel) {
        const Permutation& p = e > 0 ? sym[choice[gi]] : inverses[choice[gi]];
        long long reps = e < 0 ? -e : e;
        for (long long t = 0; t < reps; ++t) acc = acc * p;
      }
      if (!acc.is_identity()) return false;
    }
    return true;
  };

  while (true) {
    if (satisfied()) {
      FiniteQuotient q;
      q.degree = degree;
      for (std::size_t gi = 0; gi < choice.size(); ++gi) q.images.push_back(sym[choice[gi]]);
      found.push_back(std::move(q));
    }
    std::size_t pos = 0;
    while (pos < choice.size() && choice[pos] + 1 == sym.size()) choice[pos++] = 0;
    if (pos == choice.size()) break;
    ++choice[pos];
  }
  return found;
}

bool quotient_check(const Word& w, const Presentation& pres,
                    const std::vector<FiniteQuotient>& quotients) {
  for (const FiniteQuotient& q : quotients)
    if (!q.evaluate(w, pres).is_identity()) return true;
  return false;
}

}  // namespace braidgc
