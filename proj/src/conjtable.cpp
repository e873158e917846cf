#include "braidgc/conjtable.hpp"

namespace braidgc {

namespace {

Word a12_conj(int k, int sign) {
  // x_{2,k}^{-sign} a_{1,2} x_{2,k}^{sign}
  Word w;
  if (sign > 0) {
    w.append(agen(1, 2), -1);
    w.append(xgen(k), 1);
    w.append(agen(1, 2), 1);
    w.append(xgen(k), -1);
    w.append(agen(1, 2), 1);
  } else {
    w.append(xgen(k), -1);
    w.append(agen(1, 2), 1);
    w.append(xgen(k), 1);
  }
  return w;
}

}  // namespace

Word conjugation_rule(const GeneratorSymbol& conjugator, int sign, const GeneratorSymbol& target,
                      int n) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");

  if (const SigmaSym* s = std::get_if<SigmaSym>(&conjugator)) {
    int i = s->index;
    if (i < 2 || i > n - 1) throw std::invalid_argument("conjugator sigma index out of range");
    if (const XSym* xt = std::get_if<XSym>(&target); xt && xt->level == 1)
      return Word::single(target);  // sigma_{>=2} commutes with every x_{1,k}
    const ASym* at = std::get_if<ASym>(&target);
    if (!at || at->low != 1 || at->high > n)
      throw std::invalid_argument("target outside the stabilizer alphabet");
    int j = at->high;
    if (i == j - 1) {
      if (sign > 0) return Word::single(agen(1, j - 1));
      Word w;
      w.append(agen(1, j), -1);
      w.append(agen(1, j - 1), 1);
      w.append(agen(1, j), 1);
      return w;
    }
    if (i == j) {
      if (sign < 0) return Word::single(agen(1, j + 1));
      Word w;
      w.append(agen(1, j), 1);
      w.append(agen(1, j + 1), 1);
      w.append(agen(1, j), -1);
      return w;
    }
    return Word::single(target);
  }

  const XSym* xc = std::get_if<XSym>(&conjugator);
  if (!xc || xc->level != 2) throw std::invalid_argument("conjugator must be sigma or x_{2,k}");
  int ci = xc->index;

  if (const ASym* at = std::get_if<ASym>(&target)) {
    if (at->low != 1 || at->high > n) throw std::invalid_argument("target outside the stabilizer alphabet");
    if (at->high == 2) return a12_conj(ci, sign);
    return Word::single(target);
  }
  const XSym* xt = std::get_if<XSym>(&target);
  if (!xt || xt->level != 1) throw std::invalid_argument("target outside the stabilizer alphabet");
  int ti = xt->index;

  Word w;
  if (ci == ti) {
    if (sign > 0) {
      w.append(agen(1, 2), -1);
      w.append(xgen(ti), 1);
      w.append(agen(1, 2), 1);
    } else {
      w.append(xgen(ti), -1);
      w.append(agen(1, 2), 1);
      w.append(xgen(ti), 1);
      w.append(agen(1, 2), -1);
      w.append(xgen(ti), 1);
    }
    return w;
  }
  if (ci < ti) {
    if (sign > 0) {
      w.append(agen(1, 2), -1);
      w.append(xgen(ti), 1);
    } else {
      w.append(xgen(ci), -1);
      w.append(agen(1, 2), 1);
      w.append(xgen(ci), 1);
      w.append(xgen(ti), 1);
    }
    return w;
  }
  // ci > ti
  if (sign > 0) {
    w.append(agen(1, 2), -1);
    w.append(xgen(ci), 1);
    w.append(agen(1, 2), 1);
    w.append(xgen(ci), -1);
    w.append(xgen(ti), 1);
    w.append(agen(1, 2), 1);
  } else {
    w.append(xgen(ci), -1);
    w.append(agen(1, 2), 1);
    w.append(xgen(ci), 1);
    w.append(agen(1, 2), -1);
    w.append(xgen(ti), 1);
    w.append(xgen(ci), -1);
    w.append(agen(1, 2), -1);
    w.append(xgen(ci), 1);
  }
  return w;
}

Word conjugate_into_stabilizer(const Word& u, const Word& g, int n) {
  Word cur = u;
  for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it) {
    long long reps = it->exponent < 0 ? -it->exponent : it->exponent;
    int step_sign = it->exponent > 0 ? -1 : 1;  // g l g^-1 uses the -sign table entry
    for (long long r = 0; r < reps; ++r) {
      Word next;
      for (const Letter& t : cur.letters())
        next.append(conjugation_rule(it->symbol, step_sign, t.symbol, n).pow(t.exponent));
      cur = std::move(next);
    }
  }
  return cur;
}

Collected collect(const Word& w, int n) {
  Collected out;
  for (const Letter& l : w.letters()) {
    bool is_u_letter = false;
    if (const ASym* a = std::get_if<ASym>(&l.symbol)) {
      if (a->low != 1 || a->high > n) throw std::invalid_argument("unexpected a symbol in collect");
      is_u_letter = true;
    } else if (const XSym* x = std::get_if<XSym>(&l.symbol)) {
      if (x->level == 1)
        is_u_letter = true;
      else if (x->level != 2)
        throw std::invalid_argument("unexpected x level in collect");
    } else if (const SigmaSym* s = std::get_if<SigmaSym>(&l.symbol)) {
      if (s->index < 2 || s->index > n - 1)
        throw std::invalid_argument("unexpected sigma index in collect");
    } else {
      throw std::invalid_argument("unexpected symbol in collect");
    }
    if (is_u_letter)
      out.u.append(conjugate_into_stabilizer(Word::single(l.symbol, l.exponent), out.tail, n));
    else
      out.tail.append(l.symbol, l.exponent);
  }
  return out;
}

}  // namespace braidgc
