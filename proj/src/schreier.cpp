#include "braidgc/schreier.hpp"

#include "braidgc/code.hpp"
#include "braidgc/perm.hpp"

namespace braidgc {

std::vector<Word> schreier_transversal(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<Word> reps;
  reps.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j <= n - 1; ++j) {
    Word m;
    for (int i = j; i >= 1; --i) m.append(sigma(i), 1);
    reps.push_back(std::move(m));
  }
  return reps;
}

Word d_table(const GeneratorSymbol& x, int j, int n) {
  if (j < 0 || j > n - 1) throw std::invalid_argument("coset index out of range");
  if (const SigmaSym* s = std::get_if<SigmaSym>(&x)) {
    int i = s->index;
    if (i < 1 || i > n - 1) throw std::invalid_argument("sigma index out of range");
    if (i > j + 1) return Word::single(sigma(i));
    if (i == j + 1) return Word{};
    if (i == j) return Word::single(agen(1, i + 1));
    return Word::single(sigma(i + 1));
  }
  if (const XSym* xs = std::get_if<XSym>(&x)) {
    if (xs->level != 1 || xs->index < 1) throw std::invalid_argument("expected a level-1 x symbol");
    return Word::single(xgen(j == 0 ? 1 : 2, xs->index));
  }
  throw std::invalid_argument("d table covers sigma and x generators only");
}

Word rs_rewrite(const Word& w, int n) {
  Word base = expand_word(w);
  Permutation p = project(base, n);
  if (p.apply(1) != 1)
    throw std::invalid_argument("word does not fix strand 1 (image " + p.cycle_notation() + ")");

  // Scan from the right, tracking the strand that the processed suffix sends
  // 1 to. Each letter emits one Schreier generator; the concatenation in
  // original letter order telescopes back to the input.
  std::vector<Letter> flat = flatten(base);
  std::vector<Word> emitted;
  emitted.reserve(flat.size());
  int pos = 1;
  for (auto it = flat.rbegin(); it != flat.rend(); ++it) {
    const Letter& l = *it;
    if (const SigmaSym* s = std::get_if<SigmaSym>(&l.symbol)) {
      int i = s->index;
      auto swap_pos = [&](int q) { return q == i ? i + 1 : q == i + 1 ? i : q; };
      if (l.exponent > 0) {
        emitted.push_back(d_table(l.symbol, pos - 1, n));
        pos = swap_pos(pos);
      } else {
        pos = swap_pos(pos);
        emitted.push_back(d_table(l.symbol, pos - 1, n).inverse());
      }
    } else {
      // x letters fix every strand
      Word d = d_table(l.symbol, pos - 1, n);
      emitted.push_back(l.exponent > 0 ? d : d.inverse());
    }
  }
  Word out;
  for (auto it = emitted.rbegin(); it != emitted.rend(); ++it) out.append(*it);
  return out;
}

}  // namespace braidgc
