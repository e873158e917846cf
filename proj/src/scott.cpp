#include "braidgc/scott.hpp"

namespace braidgc {

namespace {

Word W(std::string_view text) { return Word::parse(text); }

GeneratorSymbol rho(int i, int j) { return named("r" + std::to_string(i) + std::to_string(j)); }

std::string rr(int i, int j) { return "r" + std::to_string(i) + std::to_string(j); }

// Replaces every occurrence of a symbol by a word.
Word substitute(const Word& w, const GeneratorSymbol& from, const Word& to) {
  Word out;
  for (const Letter& l : w.letters()) {
    if (l.symbol == from)
      out.append(to.pow(l.exponent));
    else
      out.append(l.symbol, l.exponent);
  }
  return out;
}

}  // namespace

ScottPresentation ScottPresentation::standard() {
  ScottPresentation p;
  p.generators = {agen(1, 2), rho(1, 1), rho(1, 2), rho(2, 1), rho(2, 2)};
  auto add = [&p](std::string label, int i, std::string_view lhs, std::string_view rhs) {
    p.relations.push_back(ScottRelation{std::move(label), i, W(lhs), W(rhs)});
  };
  for (int i = 1; i <= 2; ++i) {
    const std::string r1i = rr(1, i);
    const std::string r2i = rr(2, i);
    add("1.1", i, rr(i, 2) + "^-1 " + rr(i, 1) + "^-1 " + rr(i, 2) + " " + rr(i, 1), "a[1,2]");
    add("2.1", i, r2i + "^-1 " + r1i + " " + r2i, "a[1,2]^-1 " + r1i + " a[1,2]");
    add("2.2", i, r2i + " " + r1i + " " + r2i + "^-1",
        r1i + "^-1 a[1,2] " + r1i + " a[1,2]^-1 " + r1i);
    add("2.3", i, r1i + "^-1 " + r2i + " " + r1i,
        r2i + " a[1,2]^-1 " + r2i + " a[1,2] " + r2i + "^-1");
    add("2.4", i, r1i + " " + r2i + " " + r1i + "^-1", "a[1,2] " + r2i + " a[1,2]^-1");
  }
  add("3.1", 0, "r21^-1 r12 r21", "a[1,2]^-1 r11 a[1,2] r11^-1 r12 a[1,2]");
  add("3.2", 0, "r21 r12 r21^-1", "r11^-1 a[1,2] r11 a[1,2]^-1 r12 r11^-1 a[1,2]^-1 r11");
  add("3.3", 0, "r11^-1 r22 r11", "r22 r21 a[1,2] r21^-1");
  add("3.4", 0, "r11 r22 r11^-1", "r22 a[1,2]^-1");
  add("4.1", 0, "r22^-1 r11 r22", "a[1,2]^-1 r11");
  add("4.2", 0, "r22 r11 r22^-1", "r12^-1 a[1,2] r12 r11");
  add("4.3", 0, "r12^-1 r21 r12", "r22 a[1,2]^-1 r22^-1 r21 a[1,2]^-1 r22 a[1,2] r22^-1");
  add("4.4", 0, "r12 r21 r12^-1", "a[1,2] r21 r22^-1 a[1,2] r22 a[1,2]^-1");
  return p;
}

const ScottRelation& ScottPresentation::relation(const std::string& label, int instance) const {
  for (const ScottRelation& r : relations)
    if (r.label == label && r.instance == instance) return r;
  throw std::invalid_argument("no relation " + label + " instance " + std::to_string(instance));
}

namespace {

// 1.1 with i = 1 says [rho12, rho11] = a12, which expresses a12 inside the
// free group on rho11, rho12.
ScottStep step_commutator(const ScottPresentation& pres, const Word& a) {
  ScottStep s;
  s.name = "a12 as a commutator";
  s.detail = "relation 1.1 (i = 1) inside the rho11, rho12 subgroup";
  const ScottRelation& rel = pres.relation("1.1", 1);
  s.lhs = rel.lhs;
  s.rhs = rel.rhs;
  s.ok = rel.lhs == commutator(W("r12"), W("r11")) && rel.rhs == Word::single(agen(1, 2)) &&
         a == rel.lhs;
  return s;
}

}  // namespace

ScottReport scott_refute() {
  ScottPresentation pres = ScottPresentation::standard();
  ScottReport rep;

  const Word a = commutator(W("r12"), W("r11"));  // rho12^-1 rho11^-1 rho12 rho11
  rep.steps.push_back(step_commutator(pres, a));

  // Conjugate both sides of a12 = [rho12, rho11] by rho22. On the left,
  // rewrite the conjugated generators through 2.1 (i = 2) and 4.1.
  {
    ScottStep s;
    s.name = "left side of the conjugated relation";
    s.detail = "substitute 2.1 (i = 2) and 4.1 into [rho12, rho11]^rho22";
    const Word conj_r12 = pres.relation("2.1", 2).rhs;  // a12^-1 rho12 a12
    const Word conj_r11 = pres.relation("4.1").rhs;     // a12^-1 rho11
    s.lhs = commutator(conj_r12, conj_r11);
    s.rhs = W("a[1,2]^-1 r12^-1 a[1,2] r11^-1 r12 r11");
    s.ok = pres.relation("2.1", 2).lhs == conjugate(W("r12"), W("r22")) &&
           pres.relation("4.1").lhs == conjugate(W("r11"), W("r22")) && s.lhs == s.rhs;
    rep.steps.push_back(s);
  }
  const Word left7 = W("a[1,2]^-1 r12^-1 a[1,2] r11^-1 r12 r11");

  // Right side: rho22^-1 a12 rho22 = a12^-1 rho12 a12 rho12^-1 a12, through
  // 2.4 (i = 2) rearranged and then 2.1 (i = 2).
  {
    ScottStep s;
    s.name = "right side of the conjugated relation";
    s.detail = "rearrange 2.4 (i = 2), then substitute 2.1 (i = 2)";
    const ScottRelation& rel24 = pres.relation("2.4", 2);
    // 2.4 solved for the trailing rho22 occurrence
    Word rho22_expr = Word::single(agen(1, 2), -1) * rel24.lhs * Word::single(agen(1, 2));
    bool rearranged_ok =
        Word::single(agen(1, 2), -1) * rel24.rhs * Word::single(agen(1, 2)) == W("r22");
    Word after_24 = W("r22^-1 a[1,2]") * rho22_expr;
    Word bracket_form = conjugate(W("r12"), W("r22")) * W("r12^-1 a[1,2]");
    const ScottRelation& rel21 = pres.relation("2.1", 2);
    Word result = rel21.rhs * W("r12^-1 a[1,2]");
    s.lhs = after_24;
    s.rhs = result;
    s.ok = rearranged_ok && after_24 == bracket_form &&
           rel21.lhs == conjugate(W("r12"), W("r22")) &&
           result == W("a[1,2]^-1 r12 a[1,2] r12^-1 a[1,2]");
    rep.steps.push_back(s);
  }
  const Word right7 = W("a[1,2]^-1 r12 a[1,2] r12^-1 a[1,2]");

  // Multiply both sides by a12 on the left.
  const Word lhs7 = Word::single(agen(1, 2)) * left7;
  const Word rhs7 = Word::single(agen(1, 2)) * right7;
  {
    ScottStep s;
    s.name = "the relator-level equation";
    s.detail = "left-multiply both sides by a12";
    s.lhs = lhs7;
    s.rhs = rhs7;
    s.ok = lhs7 == W("r12^-1 a[1,2] r11^-1 r12 r11") && rhs7 == W("r12 a[1,2] r12^-1 a[1,2]");
    rep.steps.push_back(s);
  }

  // Eliminate a12 via the commutator expression and reduce both sides in
  // the free group on rho11, rho12.
  Word lhs_free = substitute(lhs7, agen(1, 2), a);
  Word rhs_free = substitute(rhs7, agen(1, 2), a);
  std::vector<Letter> lf = flatten(lhs_free);
  std::vector<Letter> rf = flatten(rhs_free);
  std::size_t common = 0;
  while (common < lf.size() && common < rf.size() &&
         lf[lf.size() - 1 - common] == rf[rf.size() - 1 - common])
    ++common;
  rep.final_lhs = unflatten(std::span<const Letter>(lf.data(), lf.size() - common));
  rep.final_rhs = unflatten(std::span<const Letter>(rf.data(), rf.size() - common));
  {
    ScottStep s;
    s.name = "eliminate a12 and reduce";
    s.detail = "substitute the commutator for a12, cancel the common suffix";
    s.lhs = rep.final_lhs;
    s.rhs = rep.final_rhs;
    s.ok = true;
    rep.steps.push_back(s);
  }

  bool all_ok = true;
  for (const ScottStep& st : rep.steps) all_ok = all_ok && st.ok;
  rep.contradictory = all_ok && rep.final_lhs != rep.final_rhs;
  return rep;
}

}  // namespace braidgc
