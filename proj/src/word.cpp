#include "braidgc/word.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace braidgc {

GeneratorSymbol sigma(int i) { return SigmaSym{i}; }
GeneratorSymbol xgen(int level, int k) { return XSym{level, k}; }
GeneratorSymbol xgen(int k) { return XSym{1, k}; }
GeneratorSymbol agen(int i, int j) {
  if (i >= j) throw std::invalid_argument("a[i,j] requires i < j");
  return ASym{i, j};
}
GeneratorSymbol named(std::string label) { return NamedSym{std::move(label)}; }

std::string symbol_text(const GeneratorSymbol& s) {
  struct Printer {
    std::string operator()(const SigmaSym& g) const { return "s" + std::to_string(g.index); }
    std::string operator()(const XSym& g) const {
      if (g.level == 1) return "x" + std::to_string(g.index);
      return "x[" + std::to_string(g.level) + "," + std::to_string(g.index) + "]";
    }
    std::string operator()(const ASym& g) const {
      return "a[" + std::to_string(g.low) + "," + std::to_string(g.high) + "]";
    }
    std::string operator()(const NamedSym& g) const { return g.label; }
  };
  return std::visit(Printer{}, s);
}

Word Word::single(GeneratorSymbol s, long long e) {
  Word w;
  w.append(s, e);
  return w;
}

void Word::append(const GeneratorSymbol& s, long long e) {
  if (e == 0) return;
  if (!letters_.empty() && letters_.back().symbol == s) {
    letters_.back().exponent += e;
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(Letter{s, e});
}

void Word::append(const Word& w) {
  for (const Letter& l : w.letters_) append(l.symbol, l.exponent);
}

long long Word::length() const {
  long long n = 0;
  for (const Letter& l : letters_) n += l.exponent < 0 ? -l.exponent : l.exponent;
  return n;
}

Word Word::inverse() const {
  Word out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.append(it->symbol, -it->exponent);
  return out;
}

Word Word::pow(long long e) const {
  Word base = e < 0 ? inverse() : *this;
  long long n = e < 0 ? -e : e;
  Word out;
  for (long long i = 0; i < n; ++i) out.append(base);
  return out;
}

Word operator*(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

Word reduce(std::span<const Letter> raw) { return Word(raw); }

Word conjugate(const Word& g, const Word& h) { return h.inverse() * g * h; }

Word commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

std::pair<Word, Word> cyclic_reduce(const Word& w) {
  Word core = w;
  Word conj;
  // Peel mutually inverse border letters; with run-length letters a shared
  // border symbol moves min(|front|,|back|) of its exponent into the
  // conjugator per step.
  while (core.size() >= 2 && core.front().symbol == core.back().symbol) {
    const Letter f = core.front();
    const Letter b = core.back();
    if ((f.exponent > 0) == (b.exponent > 0)) break;
    long long fa = f.exponent < 0 ? -f.exponent : f.exponent;
    long long ba = b.exponent < 0 ? -b.exponent : b.exponent;
    long long peel = fa < ba ? fa : ba;
    long long sign = f.exponent > 0 ? 1 : -1;
    // core = s^(sign*peel) * mid * s^(-sign*peel), mid may still be peelable.
    Word mid;
    auto ls = core.letters();
    mid.append(f.symbol, f.exponent - sign * peel);
    for (std::size_t i = 1; i + 1 < ls.size(); ++i) mid.append(ls[i].symbol, ls[i].exponent);
    mid.append(b.symbol, b.exponent + sign * peel);
    conj = Word::single(f.symbol, -sign * peel) * conj;
    core = mid;
  }
  return {core, conj};
}

std::vector<Letter> flatten(const Word& w) {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(w.length()));
  for (const Letter& l : w.letters()) {
    long long n = l.exponent < 0 ? -l.exponent : l.exponent;
    long long s = l.exponent < 0 ? -1 : 1;
    for (long long i = 0; i < n; ++i) out.push_back(Letter{l.symbol, s});
  }
  return out;
}

Word unflatten(std::span<const Letter> flat) { return Word(flat); }

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : letters_) {
    if (!first) os << ' ';
    first = false;
    os << symbol_text(l.symbol);
    if (l.exponent != 1) os << '^' << l.exponent;
  }
  return os.str();
}

namespace {

int parse_int(std::string_view tok, std::size_t& pos, std::size_t base_off) {
  std::size_t start = pos;
  if (pos < tok.size() && (tok[pos] == '-' || tok[pos] == '+')) ++pos;
  std::size_t digits = 0;
  long long v = 0;
  while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) {
    v = v * 10 + (tok[pos] - '0');
    if (v > 1000000000) throw parse_error("integer too large", base_off + pos);
    ++pos;
    ++digits;
  }
  if (digits == 0) throw parse_error("expected integer", base_off + start);
  return tok[start] == '-' ? static_cast<int>(-v) : static_cast<int>(v);
}

void expect(std::string_view tok, std::size_t& pos, char c, std::size_t base_off) {
  if (pos >= tok.size() || tok[pos] != c)
    throw parse_error(std::string("expected '") + c + "'", base_off + pos);
  ++pos;
}

}  // namespace

Word Word::parse(std::string_view text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t tok_start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view tok = text.substr(tok_start, i - tok_start);
    if (tok == "1") continue;  // identity atom

    std::size_t p = 0;
    GeneratorSymbol sym;
    char head = tok[0];
    if (head == 's') {
      p = 1;
      int idx = parse_int(tok, p, tok_start);
      if (idx < 1) throw parse_error("sigma index must be >= 1", tok_start);
      sym = sigma(idx);
    } else if (head == 'x') {
      p = 1;
      if (p < tok.size() && tok[p] == '[') {
        ++p;
        int level = parse_int(tok, p, tok_start);
        expect(tok, p, ',', tok_start);
        int idx = parse_int(tok, p, tok_start);
        expect(tok, p, ']', tok_start);
        if (level < 1 || idx < 1) throw parse_error("x indices must be >= 1", tok_start);
        sym = xgen(level, idx);
      } else {
        int idx = parse_int(tok, p, tok_start);
        if (idx < 1) throw parse_error("x index must be >= 1", tok_start);
        sym = xgen(idx);
      }
    } else if (head == 'a') {
      p = 1;
      expect(tok, p, '[', tok_start);
      int lo = parse_int(tok, p, tok_start);
      expect(tok, p, ',', tok_start);
      int hi = parse_int(tok, p, tok_start);
      expect(tok, p, ']', tok_start);
      if (lo < 1 || hi <= lo) throw parse_error("a[i,j] requires 1 <= i < j", tok_start);
      sym = agen(lo, hi);
    } else if (head == 'r') {
      if (tok.size() < 3 || !std::isdigit(static_cast<unsigned char>(tok[1])) ||
          !std::isdigit(static_cast<unsigned char>(tok[2])))
        throw parse_error("expected two digits after 'r'", tok_start + 1);
      sym = named(std::string(tok.substr(0, 3)));
      p = 3;
    } else {
      throw parse_error("unknown generator", tok_start);
    }

    long long e = 1;
    if (p < tok.size()) {
      expect(tok, p, '^', tok_start);
      e = parse_int(tok, p, tok_start);
      if (p != tok.size()) throw parse_error("trailing characters in atom", tok_start + p);
    }
    out.append(sym, e);
  }
  return out;
}

}  // namespace braidgc
