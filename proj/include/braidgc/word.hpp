#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace braidgc {

// Generator alphabet. Indices are 1-based throughout, matching the usual
// presentation conventions for braid generators sigma_i, surface generators
// x_{level,k} (x_k is shorthand for x_{1,k}), pure-braid generators a_{ij}
// with i < j, and free-form named symbols (used for the rho generators of
// the Artin/Scott two-strand presentations).
struct SigmaSym {
  int index;
  auto operator<=>(const SigmaSym&) const = default;
};

struct XSym {
  int level;
  int index;
  auto operator<=>(const XSym&) const = default;
};

struct ASym {
  int low;
  int high;  // low < high
  auto operator<=>(const ASym&) const = default;
};

struct NamedSym {
  std::string label;
  auto operator<=>(const NamedSym&) const = default;
};

using GeneratorSymbol = std::variant<SigmaSym, XSym, ASym, NamedSym>;

GeneratorSymbol sigma(int i);
GeneratorSymbol xgen(int level, int k);
GeneratorSymbol xgen(int k);  // x_{1,k}
GeneratorSymbol agen(int i, int j);
GeneratorSymbol named(std::string label);

std::string symbol_text(const GeneratorSymbol& s);

// One run-length encoded letter: symbol^exponent, exponent != 0 once inside
// a reduced Word.
struct Letter {
  GeneratorSymbol symbol;
  long long exponent = 1;
  auto operator<=>(const Letter&) const = default;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(std::string message, std::size_t offset)
      : std::runtime_error(std::move(message)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A freely reduced word: adjacent letters never share a symbol and no letter
// carries exponent zero. The empty word is the identity. Values are
// immutable once built apart from the merging append used while building.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> raw) { for (const Letter& l : raw) append(l.symbol, l.exponent); }
  static Word single(GeneratorSymbol s, long long e = 1);

  void append(const GeneratorSymbol& s, long long e);
  void append(const Word& w);

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  // Total letter length counting exponents, |sigma^2 x| = 3.
  long long length() const;
  std::span<const Letter> letters() const { return letters_; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }

  Word inverse() const;
  Word pow(long long e) const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

  std::string str() const;
  static Word parse(std::string_view text);

 private:
  std::vector<Letter> letters_;
};

Word operator*(const Word& a, const Word& b);

// Free reduction of an arbitrary letter sequence; idempotent.
Word reduce(std::span<const Letter> raw);

// g conjugated by h: h^{-1} g h.
Word conjugate(const Word& g, const Word& h);

// [a, b] = a^{-1} b^{-1} a b.
Word commutator(const Word& a, const Word& b);

// Splits w (freely reduced) as w = conj^{-1} * core * conj with core
// cyclically reduced, i.e. w == conjugate(core, conj).
std::pair<Word, Word> cyclic_reduce(const Word& w);

// Flat view with every exponent split into +/-1 steps; handy for scans.
std::vector<Letter> flatten(const Word& w);
Word unflatten(std::span<const Letter> flat);

}  // namespace braidgc
