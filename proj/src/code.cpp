#include "braidgc/code.hpp"

#include <sstream>

namespace braidgc {

GeneticCode empty_code(int l) { return GeneticCode{l, RelationKind::Empty, {}}; }
GeneticCode trivial_code(int l) { return GeneticCode{l, RelationKind::Trivial, {}}; }

GeneticCode relator_code(int l, Word r) {
  GeneticCode code{l, RelationKind::Relator, std::move(r)};
  if (code.relator.empty()) throw std::invalid_argument("relator code requires a nontrivial relator");
  return code;
}

Word surface_relator(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  Word r;
  for (int k = 1; k <= 2 * genus; ++k) r.append(xgen(k), k % 2 == 1 ? 1 : -1);
  for (int k = 1; k <= 2 * genus; ++k) r.append(xgen(k), k % 2 == 1 ? -1 : 1);
  return r;
}

GeneticCode surface_code(int genus) { return relator_code(2 * genus, surface_relator(genus)); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

GeneticCode parse_code(std::string_view text) {
  std::optional<int> l;
  std::optional<std::string> relation;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw parse_error("expected 'key = value' line", 0);
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));
    if (key == "generators") {
      int v = 0;
      auto sv = std::string(value);
      std::size_t used = 0;
      try {
        v = std::stoi(sv, &used);
      } catch (const std::exception&) {
        throw parse_error("generators: expected a non-negative integer", 0);
      }
      if (used != sv.size() || v < 0) throw parse_error("generators: expected a non-negative integer", 0);
      l = v;
    } else if (key == "relation") {
      relation = std::string(value);
    } else {
      throw parse_error("unknown key in code file: " + std::string(key), 0);
    }
  }
  if (!l) throw parse_error("missing 'generators =' line", 0);
  if (!relation) throw parse_error("missing 'relation =' line", 0);

  if (*relation == "empty") return empty_code(*l);
  if (*relation == "trivial") return trivial_code(*l);

  Word r = Word::parse(*relation);
  for (const Letter& letter : r.letters()) {
    const XSym* x = std::get_if<XSym>(&letter.symbol);
    if (!x || x->level != 1)
      throw parse_error("relator must use only x1..xl generators", 0);
    if (x->index > *l)
      throw parse_error("relator references x" + std::to_string(x->index) +
                            " but only " + std::to_string(*l) + " generators are declared",
                        0);
  }
  if (r.empty())
    throw parse_error("relator reduces to the trivial word; declare 'relation = trivial' instead", 0);
  return relator_code(*l, cyclic_reduce(r).first);
}

std::string code_text(const GeneticCode& code) {
  std::ostringstream os;
  os << "generators = " << code.generators << '\n' << "relation = ";
  switch (code.kind) {
    case RelationKind::Empty: os << "empty"; break;
    case RelationKind::Trivial: os << "trivial"; break;
    case RelationKind::Relator: os << code.relator.str(); break;
  }
  os << '\n';
  return os.str();
}

Word expand_generator(const GeneratorSymbol& sym) {
  if (const ASym* a = std::get_if<ASym>(&sym)) {
    Word w;
    for (int t = a->high - 1; t > a->low; --t) w.append(sigma(t), 1);
    w.append(sigma(a->low), 2);
    for (int t = a->low + 1; t <= a->high - 1; ++t) w.append(sigma(t), -1);
    return w;
  }
  if (const XSym* x = std::get_if<XSym>(&sym)) {
    if (x->level == 1) return Word::single(sym);
    Word w;
    for (int t = x->level - 1; t >= 1; --t) w.append(sigma(t), -1);
    w.append(xgen(x->index), 1);
    for (int t = 1; t <= x->level - 1; ++t) w.append(sigma(t), 1);
    return w;
  }
  return Word::single(sym);
}

Word expand_word(const Word& w) {
  Word out;
  for (const Letter& l : w.letters()) out.append(expand_generator(l.symbol).pow(l.exponent));
  return out;
}

std::optional<std::string> validate_word(const Word& w, int n, int l, bool allow_named) {
  for (const Letter& letter : w.letters()) {
    if (const SigmaSym* s = std::get_if<SigmaSym>(&letter.symbol)) {
      if (s->index < 1 || s->index > n - 1)
        return "s" + std::to_string(s->index) + " out of range for n = " + std::to_string(n);
    } else if (const XSym* x = std::get_if<XSym>(&letter.symbol)) {
      if (x->index < 1 || x->index > l)
        return symbol_text(letter.symbol) + " out of range for l = " + std::to_string(l);
      if (x->level < 1 || x->level > n)
        return symbol_text(letter.symbol) + " level out of range for n = " + std::to_string(n);
    } else if (const ASym* a = std::get_if<ASym>(&letter.symbol)) {
      if (a->low < 1 || a->high > n)
        return symbol_text(letter.symbol) + " out of range for n = " + std::to_string(n);
    } else if (!allow_named) {
      return "symbol " + symbol_text(letter.symbol) + " is not valid here";
    }
  }
  return std::nullopt;
}

namespace {

Word braid_relation(int i) {
  // s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
  Word lhs;
  lhs.append(sigma(i), 1);
  lhs.append(sigma(i + 1), 1);
  lhs.append(sigma(i), 1);
  Word rhs;
  rhs.append(sigma(i + 1), 1);
  rhs.append(sigma(i), 1);
  rhs.append(sigma(i + 1), 1);
  return lhs * rhs.inverse();
}

Word sphere_word(int n) {
  // s_1 s_2 ... s_{n-2} s_{n-1}^2 s_{n-2} ... s_2 s_1
  Word w;
  for (int i = 1; i <= n - 2; ++i) w.append(sigma(i), 1);
  w.append(sigma(n - 1), 2);
  for (int i = n - 2; i >= 1; --i) w.append(sigma(i), 1);
  return w;
}

}  // namespace

Presentation build_braid_presentation(const GeneticCode& code, int n) {
  if (n < 1) throw std::invalid_argument("strand count must be >= 1");
  Presentation p;
  if (n == 1) {
    for (int k = 1; k <= code.generators; ++k) p.generators.push_back(xgen(k));
    if (code.kind == RelationKind::Trivial) p.relators.push_back(Word{});
    if (code.kind == RelationKind::Relator) p.relators.push_back(code.relator);
    return p;
  }

  for (int i = 1; i <= n - 1; ++i) p.generators.push_back(sigma(i));
  for (int k = 1; k <= code.generators; ++k) p.generators.push_back(xgen(k));

  for (int i = 1; i <= n - 2; ++i) p.relators.push_back(braid_relation(i));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      p.relators.push_back(Word::single(sigma(i)) * Word::single(sigma(j)) *
                           Word::single(sigma(i), -1) * Word::single(sigma(j), -1));
  // s_i x_j = x_j s_i for i >= 2
  for (int i = 2; i <= n - 1; ++i)
    for (int j = 1; j <= code.generators; ++j)
      p.relators.push_back(Word::single(sigma(i)) * Word::single(xgen(j)) *
                           Word::single(sigma(i), -1) * Word::single(xgen(j), -1));
  // x_j (s_1^-1 x_j s_1^-1) = (s_1^-1 x_j s_1^-1) x_j
  for (int j = 1; j <= code.generators; ++j) {
    Word mid = Word::single(sigma(1), -1) * Word::single(xgen(j)) * Word::single(sigma(1), -1);
    Word lhs = Word::single(xgen(j)) * mid;
    Word rhs = mid * Word::single(xgen(j));
    p.relators.push_back(lhs * rhs.inverse());
  }
  // x_j (s_1^-1 x_i^-1 s_1) x_j^-1 (s_1^-1 x_i s_1) = s_1^2, i < j
  for (int j = 2; j <= code.generators; ++j)
    for (int i = 1; i < j; ++i) {
      Word lhs = Word::single(xgen(j)) *
                 (Word::single(sigma(1), -1) * Word::single(xgen(i), -1) * Word::single(sigma(1))) *
                 Word::single(xgen(j), -1) *
                 (Word::single(sigma(1), -1) * Word::single(xgen(i)) * Word::single(sigma(1)));
      p.relators.push_back(lhs * Word::single(sigma(1), -2));
    }
  if (code.kind != RelationKind::Empty) {
    Word r = code.kind == RelationKind::Relator ? code.relator : Word{};
    p.relators.push_back(sphere_word(n) * r.inverse());
  }
  return p;
}

std::vector<RelatorFamilyEntry> relator_family(const GeneticCode& code, int n) {
  if (code.kind == RelationKind::Empty)
    throw std::invalid_argument("empty codes carry no braid relator");
  if (n < 2) throw std::invalid_argument("relator family needs n >= 2");
  std::vector<RelatorFamilyEntry> out;
  for (int i = 1; i <= n; ++i) {
    RelatorFamilyEntry e;
    if (code.kind == RelationKind::Relator)
      for (const Letter& l : code.relator.letters())
        e.lhs.append(xgen(i, std::get<XSym>(l.symbol).index), l.exponent);
    for (int j = i + 1; j <= n; ++j) e.rhs.append(agen(i, j), 1);
    if (i <= n - 1) e.rhs_truncated = e.rhs;
    for (int t = 1; t <= i - 1; ++t) e.rhs.append(agen(t, i), 1);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace braidgc
