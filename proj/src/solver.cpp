#include "braidgc/solver.hpp"

#include <algorithm>
#include <cassert>

#include "braidgc/conjtable.hpp"
#include "braidgc/perm.hpp"
#include "braidgc/schreier.hpp"
#include "braidgc/smallcancel.hpp"

namespace braidgc {

UStructure u_structure(const GeneticCode& code, int m) {
  if (m < 2) throw std::invalid_argument("level size must be >= 2");
  switch (code.kind) {
    case RelationKind::Empty: return {m, UVariant::FreeFull};
    case RelationKind::Relator: return {m, UVariant::FreeEliminated};
    case RelationKind::Trivial: return {m, m == 3 ? UVariant::Z2FreeProduct : UVariant::FreeEliminated};
  }
  throw std::logic_error("unreachable");
}

Word level_relator(const GeneticCode& code, int m) {
  if (code.kind == RelationKind::Empty) throw std::invalid_argument("empty codes have no relator");
  Word r = code.kind == RelationKind::Relator ? code.relator : Word{};
  if (m == 1) return r.inverse();
  Word out = r.inverse();
  for (int i = 1; i <= m - 2; ++i) out.append(sigma(i), 1);
  out.append(sigma(m - 1), 2);
  for (int i = m - 2; i >= 1; --i) out.append(sigma(i), 1);
  return out;
}

namespace {

// One conjugate of the level relator: conjugator * R^sign * conjugator^-1.
struct RelUse {
  Word conjugator;
  int sign = 1;
};

enum class Outcome { Trivial, Nontrivial };

struct CertResult {
  Outcome outcome = Outcome::Nontrivial;
  std::string witness;        // set when Nontrivial
  std::vector<RelUse> uses;   // set when Trivial: w = product of uses in the
                              // relation-free version of the level group
};

CertResult nontrivial(std::string witness) {
  CertResult r;
  r.outcome = Outcome::Nontrivial;
  r.witness = std::move(witness);
  return r;
}

// Letter shift realizing the level embedding: strands and x levels move up
// by one, so lifted words use only symbols that fix strand 1.
Word lift_word(const Word& w) {
  Word out;
  for (const Letter& l : w.letters()) {
    if (const SigmaSym* s = std::get_if<SigmaSym>(&l.symbol))
      out.append(sigma(s->index + 1), l.exponent);
    else if (const XSym* x = std::get_if<XSym>(&l.symbol))
      out.append(xgen(x->level + 1, x->index), l.exponent);
    else if (const ASym* a = std::get_if<ASym>(&l.symbol))
      out.append(agen(a->low + 1, a->high + 1), l.exponent);
    else
      throw std::logic_error("cannot lift named symbol");
  }
  return out;
}

// Inverse shift on tail words (s_i -> s_{i-1}, x_{2,k} -> x_{1,k}).
Word lower_tail(const Word& w) {
  Word out;
  for (const Letter& l : w.letters()) {
    if (const SigmaSym* s = std::get_if<SigmaSym>(&l.symbol))
      out.append(sigma(s->index - 1), l.exponent);
    else if (const XSym* x = std::get_if<XSym>(&l.symbol); x && x->level == 2)
      out.append(xgen(1, x->index), l.exponent);
    else
      throw std::logic_error("unexpected tail letter");
  }
  return out;
}

// Value in the level subgroup of a word all of whose letters fix strand 1
// and which lies in the subgroup as an element (conjugate-shaped inputs).
Word stabilizer_value(const Word& w, int n) {
  Collected col = collect(rs_rewrite(w, n), n);
  if (!col.tail.empty()) throw std::logic_error("stabilizer_value: residual tail " + col.tail.str());
  return col.u;
}

struct NormalFormResult {
  Word nf;
  std::vector<RelUse> uses;  // val = product of uses when nf is empty
};

// Reduces a word over {a_{1,2..m}, x_{1,k}} to the level normal form,
// recording every relator application. a_{1,2} is eliminated through
// a_{1,2} = r(x) * (a_{1,3}...a_{1,m})^{-1} * K with
// K = (a_{1,3}...a_{1,m}) * R_m * (a_{1,3}...a_{1,m})^{-1}; the level-3
// torsion letter reduces mod 2 through
// a_{1,3}^2 = K3 * K1 * (a_{1,3}^{-1} K2^{-1} a_{1,3}),
// K1 = R_3, K2 = s1^{-1} R_3 s1, K3 = (s1 s2)^{-1} R_3 (s1 s2).
NormalFormResult u_normal_form(const Word& val, const GeneticCode& code, int m) {
  NormalFormResult res;
  if (code.kind == RelationKind::Empty) {
    res.nf = val;
    return res;
  }

  Word basis;  // a_{1,3} ... a_{1,m}
  for (int j = 3; j <= m; ++j) basis.append(agen(1, j), 1);
  Word r1 = code.kind == RelationKind::Relator ? code.relator : Word{};

  // Each rewriting step turns the current word W into W' * batch, so the
  // final product reads batches in reverse emission order.
  std::vector<std::vector<RelUse>> batches;

  // Eliminate a_{1,2}, scanning right to left.
  auto letters = val.letters();
  Word out;  // rewritten suffix, built back to front
  Word sub_pos = r1 * basis.inverse();
  for (std::size_t idx = letters.size(); idx-- > 0;) {
    const Letter& l = letters[idx];
    const ASym* a = std::get_if<ASym>(&l.symbol);
    if (!a || a->high != 2) {
      out = Word::single(l.symbol, l.exponent) * out;
      continue;
    }
    long long reps = l.exponent < 0 ? -l.exponent : l.exponent;
    for (long long t = 0; t < reps; ++t) {
      if (l.exponent > 0) {
        // P a12 Q = (P sub Q) * (Q^-1 basis) R (Q^-1 basis)^-1
        batches.push_back({RelUse{out.inverse() * basis, 1}});
        out = sub_pos * out;
      } else {
        // P a12^-1 Q = (P basis r^-1 Q) * (Z^-1 basis) R^-1 (Z^-1 basis)^-1,
        // Z = basis r^-1 Q
        Word z = basis * r1.inverse() * out;
        batches.push_back({RelUse{z.inverse() * basis, -1}});
        out = std::move(z);
      }
    }
  }

  if (u_structure(code, m).variant == UVariant::Z2FreeProduct) {
    Word s1inv = Word::single(sigma(1), -1);
    Word s12inv = Word::single(sigma(2), -1) * Word::single(sigma(1), -1);
    Word a13inv = Word::single(agen(1, 3), -1);
    bool changed = true;
    while (changed) {
      changed = false;
      auto ls = out.letters();
      for (std::size_t idx = ls.size(); idx-- > 0;) {
        const ASym* a = std::get_if<ASym>(&ls[idx].symbol);
        if (!a || a->high != 3 || (ls[idx].exponent >= 0 && ls[idx].exponent <= 1)) continue;
        long long e = ls[idx].exponent;
        Word prefix(ls.subspan(0, idx));
        Word suffix(ls.subspan(idx + 1));
        Word qinv = suffix.inverse();
        if (e >= 2) {
          // a13^e = a13^{e-2} * K3 K1 (a13^-1 K2^-1 a13)
          prefix.append(agen(1, 3), e - 2);
          batches.push_back({RelUse{qinv * s12inv, 1}, RelUse{qinv, 1},
                             RelUse{qinv * a13inv * s1inv, -1}});
        } else {
          // a13^e = a13^{e+2} * (a13^-1 K2 a13) K1^-1 K3^-1
          prefix.append(agen(1, 3), e + 2);
          batches.push_back({RelUse{qinv * a13inv * s1inv, 1}, RelUse{qinv, -1},
                             RelUse{qinv * s12inv, -1}});
        }
        prefix.append(suffix);
        out = std::move(prefix);
        changed = true;
        break;
      }
    }
  }

  res.nf = std::move(out);
  for (auto it = batches.rbegin(); it != batches.rend(); ++it)
    res.uses.insert(res.uses.end(), it->begin(), it->end());
  return res;
}

bool genus1_variant(const GeneticCode& code) {
  if (code.kind != RelationKind::Relator || code.generators != 2) return false;
  Word base = surface_relator(1);
  for (const Word& w : {base, base.inverse()}) {
    std::vector<Letter> flat = flatten(w);
    for (std::size_t k = 0; k < flat.size(); ++k) {
      std::vector<Letter> rot;
      for (std::size_t t = 0; t < flat.size(); ++t) rot.push_back(flat[(k + t) % flat.size()]);
      if (unflatten(rot) == code.relator) return true;
    }
  }
  return false;
}

// Certificate for triviality in the rank-2 free abelian base group: sort
// x_1 letters in front of x_2 letters, each adjacent swap spending one
// conjugate of the relator.
CertResult abelian_base_certify(const Word& w, const GeneticCode& code) {
  long long e1 = 0;
  long long e2 = 0;
  for (const Letter& l : w.letters()) (std::get<XSym>(l.symbol).index == 1 ? e1 : e2) += l.exponent;
  if (e1 != 0 || e2 != 0)
    return nontrivial("base abelianization: exponent vector (" + std::to_string(e1) + ", " +
                      std::to_string(e2) + ")");

  // q * r^sign * q^-1 decompositions of the four swap commutators.
  auto commutator_splice = [&](const Letter& u, const Letter& v) -> RelUse {
    Word c = Word::single(u.symbol, u.exponent) * Word::single(v.symbol, v.exponent) *
             Word::single(u.symbol, -u.exponent) * Word::single(v.symbol, -v.exponent);
    std::vector<Word> candidates = {Word{}};
    for (int k : {1, 2})
      for (int e : {1, -1}) candidates.push_back(Word::single(xgen(k), e));
    for (int k1 : {1, 2})
      for (int ea : {1, -1})
        for (int k2 : {1, 2})
          for (int eb : {1, -1})
            candidates.push_back(Word::single(xgen(k1), ea) * Word::single(xgen(k2), eb));
    for (const Word& q : candidates)
      for (int sign : {1, -1})
        if (conjugate(code.relator.pow(sign), q.inverse()) == c) return RelUse{q, sign};
    throw std::logic_error("no relator decomposition for swap commutator " + c.str());
  };

  CertResult res;
  res.outcome = Outcome::Trivial;
  std::vector<Letter> state = flatten(w);
  while (true) {
    Word reduced = unflatten(state);
    state = flatten(reduced);
    std::size_t swap_at = state.size();
    for (std::size_t i = 0; i + 1 < state.size(); ++i)
      if (std::get<XSym>(state[i].symbol).index == 2 && std::get<XSym>(state[i + 1].symbol).index == 1) {
        swap_at = i;
        break;
      }
    if (swap_at == state.size()) break;
    // A u v B = (A c A^-1) A v u B with c the swap commutator
    RelUse use = commutator_splice(state[swap_at], state[swap_at + 1]);
    Word prefix = unflatten(std::span<const Letter>(state.data(), swap_at));
    use.conjugator = prefix * use.conjugator;
    res.uses.push_back(std::move(use));
    std::swap(state[swap_at], state[swap_at + 1]);
  }
  if (!unflatten(state).empty())
    throw std::logic_error("abelian certificate failed to empty a balanced word");
  return res;
}

CertResult base_certify(const Word& w, const GeneticCode& code) {
  for (const Letter& l : w.letters()) {
    const XSym* x = std::get_if<XSym>(&l.symbol);
    if (!x || x->level != 1 || x->index > code.generators)
      throw std::invalid_argument("base words use x1..xl only; got " + symbol_text(l.symbol));
  }
  if (code.kind != RelationKind::Relator) {
    if (w.empty()) {
      CertResult res;
      res.outcome = Outcome::Trivial;
      return res;
    }
    return nontrivial("base normal form: " + w.str());
  }
  if (genus1_variant(code)) return abelian_base_certify(w, code);
  if (!smallcancel_check(code.relator).passes)
    throw unsupported_base("base relator is neither the genus-1 relator nor C'(1/6): " +
                           code.relator.str());
  DehnResult dehn = dehn_reduce(w, code.relator);
  if (!dehn.trivial) return nontrivial("base normal form: " + dehn.residual.str());
  CertResult res;
  res.outcome = Outcome::Trivial;
  // level_relator at the base is r^-1, so a splice of r^sign uses R^-sign.
  for (const RelatorSplice& s : dehn.splices) res.uses.push_back(RelUse{s.conjugator, -s.sign});
  return res;
}

// Decides w = 1 in the level-m braid group of the code and, when trivial,
// certifies it as a product of conjugates of level_relator(code, m) valid in
// the relation-free version of the group (empty list for Empty codes).
CertResult certify(const Word& w, const GeneticCode& code, int m) {
  if (m == 1) return base_certify(w, code);

  Permutation p = project(w, m);
  if (!p.is_identity()) return nontrivial("projection: " + p.cycle_notation());

  Collected col = collect(rs_rewrite(w, m), m);
  CertResult sub = certify(lower_tail(col.tail), code, m - 1);
  if (sub.outcome == Outcome::Nontrivial) return sub;

  // Lift the sub-certificate: L(R_{m-1}) = s1^-1 R_m s1 * a12^-1, so each
  // use splits into one R_m conjugate and one a12 defect absorbed into the
  // level subgroup.
  struct Item {
    bool is_use;
    RelUse use;   // when is_use
    Word value;   // pure level-subgroup word otherwise
  };
  std::vector<Item> items;
  Word s1inv = Word::single(sigma(1), -1);
  for (const RelUse& su : sub.uses) {
    Word lq = lift_word(su.conjugator);
    Word defect = lq * Word::single(agen(1, 2), -su.sign) * lq.inverse();
    Item use_item{true, RelUse{lq * s1inv, su.sign}, Word{}};
    Item val_item{false, RelUse{}, stabilizer_value(defect, m)};
    if (su.sign > 0) {
      items.push_back(std::move(use_item));
      items.push_back(std::move(val_item));
    } else {
      items.push_back(std::move(val_item));
      items.push_back(std::move(use_item));
    }
  }

  // Push relator conjugates right past the level-subgroup values.
  std::vector<RelUse> lifted;
  Word suffix_value;  // product of values to the right of the cursor
  for (std::size_t i = items.size(); i-- > 0;) {
    if (items[i].is_use)
      lifted.push_back(RelUse{suffix_value.inverse() * items[i].use.conjugator, items[i].use.sign});
    else
      suffix_value = items[i].value * suffix_value;
  }
  std::reverse(lifted.begin(), lifted.end());

  Word val = col.u;
  for (const Item& it : items)
    if (!it.is_use) val.append(it.value);

  NormalFormResult nf = u_normal_form(val, code, m);
  if (!nf.nf.empty())
    return nontrivial("level " + std::to_string(m) + " normal form: " + nf.nf.str());

  CertResult res;
  res.outcome = Outcome::Trivial;
  res.uses = std::move(nf.uses);
  res.uses.insert(res.uses.end(), lifted.begin(), lifted.end());
  return res;
}

}  // namespace

bool u_is_trivial(const Word& u, const UStructure& s, const GeneticCode& code, int m) {
  if (s.level != m || u_structure(code, m).variant != s.variant)
    throw std::invalid_argument("structure does not match (code, level)");
  for (const Letter& l : u.letters()) {
    if (const ASym* a = std::get_if<ASym>(&l.symbol)) {
      if (a->low != 1 || a->high > m) throw std::invalid_argument("foreign symbol " + symbol_text(l.symbol));
    } else if (const XSym* x = std::get_if<XSym>(&l.symbol)) {
      if (x->level != 1 || x->index > code.generators)
        throw std::invalid_argument("foreign symbol " + symbol_text(l.symbol));
    } else {
      throw std::invalid_argument("foreign symbol " + symbol_text(l.symbol));
    }
  }
  return u_normal_form(u, code, m).nf.empty();
}

Verdict solve(const Word& w, const GeneticCode& code, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (auto err = validate_word(w, n, code.generators)) throw std::invalid_argument(*err);
  Word base = expand_word(w);
  CertResult res = n == 1 ? base_certify(base, code) : certify(base, code, n);
  if (res.outcome == Outcome::Trivial) return Verdict{true, std::nullopt};
  return Verdict{false, res.witness};
}

Verdict base_solve(const Word& w, const GeneticCode& code) {
  CertResult res = base_certify(w, code);
  if (res.outcome == Outcome::Trivial) return Verdict{true, std::nullopt};
  return Verdict{false, res.witness};
}

}  // namespace braidgc
