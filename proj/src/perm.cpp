#include "braidgc/perm.hpp"

#include <numeric>
#include <sstream>

#include "braidgc/code.hpp"

namespace braidgc {

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::transposition(int n, int i, int j) {
  Permutation p(n);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(j - 1)]);
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  Permutation p;
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("images do not form a bijection");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (apply(i) != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p(degree());
  for (int i = 1; i <= degree(); ++i) p.images_[static_cast<std::size_t>(apply(i) - 1)] = i;
  return p;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch");
  Permutation r(p.degree());
  for (int i = 1; i <= p.degree(); ++i) r.images_[static_cast<std::size_t>(i - 1)] = p.apply(q.apply(i));
  return r;
}

std::string Permutation::cycle_notation() const {
  std::vector<bool> seen(images_.size(), false);
  std::ostringstream os;
  bool any = false;
  for (int i = 1; i <= degree(); ++i) {
    if (seen[static_cast<std::size_t>(i - 1)] || apply(i) == i) continue;
    os << '(' << i;
    seen[static_cast<std::size_t>(i - 1)] = true;
    for (int j = apply(i); j != i; j = apply(j)) {
      seen[static_cast<std::size_t>(j - 1)] = true;
      os << ' ' << j;
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "id";
}

Permutation project(const Word& w, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Permutation acc(n);
  Word base = expand_word(w);
  for (const Letter& l : base.letters()) {
    if (const SigmaSym* s = std::get_if<SigmaSym>(&l.symbol)) {
      if (s->index < 1 || s->index > n - 1)
        throw std::invalid_argument("s" + std::to_string(s->index) + " out of range for n = " +
                                    std::to_string(n));
      if (l.exponent % 2 != 0)
        acc = acc * Permutation::transposition(n, s->index, s->index + 1);
    } else if (const XSym* x = std::get_if<XSym>(&l.symbol)) {
      if (x->index < 1) throw std::invalid_argument("x index out of range");
      // x generators die under the projection
    } else {
      throw std::invalid_argument("cannot project symbol " + symbol_text(l.symbol));
    }
  }
  return acc;
}

bool is_pure(const Word& w, int n) { return project(w, n).is_identity(); }

}  // namespace braidgc
