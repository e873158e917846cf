#include "braidgc/smallcancel.hpp"

namespace braidgc {

namespace {

Letter inv(const Letter& l) { return Letter{l.symbol, -l.exponent}; }

std::vector<Letter> flat_inverse(const std::vector<Letter>& v) {
  std::vector<Letter> out;
  out.reserve(v.size());
  for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(inv(*it));
  return out;
}

struct Rotation {
  std::vector<Letter> letters;
  Word suffix_conj;  // rotation = suffix * r^sign * suffix^-1
  int sign;
};

std::vector<Rotation> all_rotations(const Word& r) {
  std::vector<Letter> base = flatten(r);
  std::size_t L = base.size();
  std::vector<Rotation> rots;
  for (int sign : {1, -1}) {
    std::vector<Letter> word = sign == 1 ? base : flat_inverse(base);
    for (std::size_t k = 0; k < L; ++k) {
      Rotation rot;
      rot.sign = sign;
      rot.letters.reserve(L);
      for (std::size_t t = 0; t < L; ++t) rot.letters.push_back(word[(k + t) % L]);
      std::vector<Letter> suffix(word.begin() + static_cast<std::ptrdiff_t>(k), word.end());
      rot.suffix_conj = unflatten(suffix);
      rots.push_back(std::move(rot));
    }
  }
  return rots;
}

std::size_t common_prefix(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  std::size_t n = a.size() < b.size() ? a.size() : b.size();
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

void free_reduce_flat(std::vector<Letter>& v) {
  std::vector<Letter> out;
  out.reserve(v.size());
  for (const Letter& l : v) {
    if (!out.empty() && out.back().symbol == l.symbol && out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  v = std::move(out);
}

}  // namespace

PieceReport smallcancel_check(const Word& r) {
  if (r.empty()) throw std::invalid_argument("trivial relator has no pieces");
  std::vector<Rotation> rots = all_rotations(r);
  PieceReport rep;
  rep.relator_length = r.length();
  for (std::size_t a = 0; a < rots.size(); ++a)
    for (std::size_t b = a + 1; b < rots.size(); ++b) {
      long long p = static_cast<long long>(common_prefix(rots[a].letters, rots[b].letters));
      if (p > rep.max_piece) rep.max_piece = p;
    }
  rep.passes = 6 * rep.max_piece < rep.relator_length;
  return rep;
}

DehnResult dehn_reduce(const Word& w, const Word& r) {
  if (r.empty()) throw std::invalid_argument("trivial relator");
  std::vector<Rotation> rots = all_rotations(r);
  std::size_t L = flatten(r).size();

  DehnResult res;
  std::vector<Letter> state = flatten(w);
  free_reduce_flat(state);
  Word outer;  // invariant: w = outer * state * outer^-1 * (pending splices applied)

  while (true) {
    free_reduce_flat(state);
    // cyclic reduction, tracked in the outer conjugator
    while (state.size() >= 2 && state.front().symbol == state.back().symbol &&
           state.front().exponent == -state.back().exponent) {
      outer.append(state.front().symbol, state.front().exponent);
      state.erase(state.begin());
      state.pop_back();
      free_reduce_flat(state);
    }
    if (state.empty()) {
      res.trivial = true;
      res.residual = Word{};
      return res;
    }

    std::size_t best_len = 0;
    std::size_t best_pos = 0;
    const Rotation* best_rot = nullptr;
    for (std::size_t i = 0; i < state.size(); ++i) {
      for (const Rotation& rot : rots) {
        std::size_t m = 0;
        while (i + m < state.size() && m < L && state[i + m] == rot.letters[m]) ++m;
        if (2 * m > L && m > best_len) {
          best_len = m;
          best_pos = i;
          best_rot = &rot;
        }
      }
    }
    if (!best_rot) {
      res.trivial = false;
      res.residual = unflatten(state);
      return res;
    }

    // state = A p B with p the first best_len letters of the rotation:
    // A p B = (A rot A^-1) A s^-1 B where rot = p s.
    Word prefix = unflatten(std::span<const Letter>(state.data(), best_pos));
    res.splices.push_back(RelatorSplice{outer * prefix * best_rot->suffix_conj, best_rot->sign});
    std::vector<Letter> next(state.begin(), state.begin() + static_cast<std::ptrdiff_t>(best_pos));
    for (std::size_t t = L; t > best_len; --t) next.push_back(inv(best_rot->letters[t - 1]));
    next.insert(next.end(), state.begin() + static_cast<std::ptrdiff_t>(best_pos + best_len),
                state.end());
    state = std::move(next);
  }
}

}  // namespace braidgc
