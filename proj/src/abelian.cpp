#include "braidgc/abelian.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>

namespace braidgc {

using Row = std::vector<mpz_class>;
using Matrix = std::vector<Row>;

struct AbelianizedGroup::Impl {
  Matrix relation_matrix;
  Matrix hermite;            // echelon basis of the row space
  std::vector<int> pivots;   // pivot column per hermite row
  std::vector<mpz_class> smith_diagonal;
};

namespace {

// Row-style Hermite form: echelon basis of the integer row space.
void hermite_form(Matrix m, Matrix& out, std::vector<int>& pivots) {
  out.clear();
  pivots.clear();
  if (m.empty()) return;
  std::size_t cols = m[0].size();
  std::size_t top = 0;
  for (std::size_t col = 0; col < cols && top < m.size(); ++col) {
    // gcd-combine all rows below top on this column
    while (true) {
      std::size_t best = m.size();
      for (std::size_t r = top; r < m.size(); ++r)
        if (m[r][col] != 0 && (best == m.size() || cmp(abs(m[r][col]), abs(m[best][col])) < 0))
          best = r;
      if (best == m.size()) break;
      std::swap(m[top], m[best]);
      bool clean = true;
      for (std::size_t r = top + 1; r < m.size(); ++r) {
        if (m[r][col] == 0) continue;
        mpz_class q = m[r][col] / m[top][col];  // truncated division is fine for descent
        for (std::size_t c = 0; c < cols; ++c) m[r][c] -= q * m[top][c];
        if (m[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (top < m.size() && m[top][col] != 0) {
      if (m[top][col] < 0)
        for (std::size_t c = 0; c < cols; ++c) m[top][c] = -m[top][c];
      pivots.push_back(static_cast<int>(col));
      ++top;
    }
  }
  m.resize(top);
  out = std::move(m);
}

void smith_form(Matrix m, std::vector<mpz_class>& diag) {
  diag.clear();
  if (m.empty() || m[0].empty()) return;
  std::size_t rows = m.size();
  std::size_t cols = m[0].size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    std::size_t pr = rows;
    std::size_t pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (m[r][c] != 0 && (pr == rows || cmp(abs(m[r][c]), abs(m[pr][pc])) < 0)) {
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][t], m[r][pc]);

    bool dirty = false;
    for (std::size_t r = t + 1; r < rows; ++r) {
      if (m[r][t] == 0) continue;
      mpz_class q = m[r][t] / m[t][t];
      for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
      if (m[r][t] != 0) dirty = true;
    }
    for (std::size_t c = t + 1; c < cols; ++c) {
      if (m[t][c] == 0) continue;
      mpz_class q = m[t][c] / m[t][t];
      for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
      if (m[t][c] != 0) dirty = true;
    }
    if (dirty) continue;

    // enforce divisibility of the remaining block
    bool fixed = false;
    for (std::size_t r = t + 1; r < rows && !fixed; ++r)
      for (std::size_t c = t + 1; c < cols && !fixed; ++c)
        if (m[r][c] % m[t][t] != 0) {
          for (std::size_t rr = t; rr < rows; ++rr) m[rr][t] += m[rr][c];
          fixed = true;
        }
    if (fixed) continue;
    ++t;
  }
  for (std::size_t i = 0; i < t; ++i) diag.push_back(abs(m[i][i]));
}

}  // namespace

AbelianizedGroup::AbelianizedGroup(const Presentation& pres) : generators_(pres.generators) {
  auto impl = std::make_shared<Impl>();
  for (const Word& rel : pres.relators) {
    std::vector<long long> v = exponent_vector(rel);
    Row row(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) row[i] = static_cast<long>(v[i]);
    impl->relation_matrix.push_back(std::move(row));
  }
  hermite_form(impl->relation_matrix, impl->hermite, impl->pivots);
  smith_form(impl->relation_matrix, impl->smith_diagonal);
  impl_ = std::move(impl);
}

std::vector<long long> AbelianizedGroup::exponent_vector(const Word& w) const {
  std::map<GeneratorSymbol, std::size_t> index;
  for (std::size_t i = 0; i < generators_.size(); ++i) index[generators_[i]] = i;
  std::vector<long long> v(generators_.size(), 0);
  for (const Letter& l : expand_word(w).letters()) {
    auto it = index.find(l.symbol);
    if (it == index.end())
      throw std::invalid_argument("word uses " + symbol_text(l.symbol) +
                                  " which is not a presentation generator");
    v[it->second] += l.exponent;
  }
  return v;
}

bool AbelianizedGroup::in_row_space(const std::vector<long long>& v) const {
  if (v.size() != generators_.size()) throw std::invalid_argument("vector length mismatch");
  Row x(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) x[i] = static_cast<long>(v[i]);
  for (std::size_t r = 0; r < impl_->hermite.size(); ++r) {
    int col = impl_->pivots[r];
    const mpz_class& pivot = impl_->hermite[r][static_cast<std::size_t>(col)];
    if (x[static_cast<std::size_t>(col)] % pivot != 0) return false;
    mpz_class q = x[static_cast<std::size_t>(col)] / pivot;
    for (std::size_t c = 0; c < x.size(); ++c) x[c] -= q * impl_->hermite[r][c];
  }
  for (const mpz_class& e : x)
    if (e != 0) return false;
  return true;
}

std::vector<std::string> AbelianizedGroup::canonical_diagonal() const {
  std::vector<std::string> out;
  for (const mpz_class& d : impl_->smith_diagonal) out.push_back(d.get_str());
  return out;
}

int AbelianizedGroup::rows() const { return static_cast<int>(impl_->relation_matrix.size()); }

bool abelianization_oracle(const Word& w, const Presentation& pres) {
  AbelianizedGroup ab(pres);
  return !ab.in_row_space(ab.exponent_vector(w));
}

}  // namespace braidgc
