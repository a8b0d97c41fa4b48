#include "multlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "multlab/errors.hpp"

namespace multlab {

int Monomial::degree() const {
  int d = 0;
  for (int e : exp) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < exp.size(); ++i) m.exp[i] += o.exp[i];
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.exp > b.exp;
}

Polynomial Polynomial::monomial(const PrimeField& F, const Monomial& m, Elem c) {
  Polynomial p(F, m.exp.size());
  p.add_term(m, c);
  return p;
}

Elem Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Monomial& m, Elem c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, field_.neg(c));
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(field_, nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, field_.mul(c1, c2));
  return r;
}

Polynomial Polynomial::scaled(Elem c) const {
  Polynomial r(field_, nvars_);
  for (const auto& [m, v] : terms_) r.add_term(m, field_.mul(v, c));
  return r;
}

int Polynomial::min_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

int Polynomial::max_degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial r(field_, nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.add_term(m, c);
  return r;
}

void TensorElement::add_term(const Word& w, Elem c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

int TensorElement::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.degree();
  for (const auto& [w, c] : terms_)
    if (w.degree() != d) return -1;
  return d;
}

namespace {

struct RawTerm {
  Elem coeff;
  std::vector<int> factors;  // variable indices in order of appearance
};

class TermParser {
 public:
  TermParser(std::string_view text, const std::vector<std::string>& vars, const PrimeField& F)
      : s_(text), vars_(vars), F_(F) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> out;
    skip_ws();
    bool negative = false;
    while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      if (s_[pos_] == '-') negative = !negative;
      ++pos_;
      skip_ws();
    }
    out.push_back(term(negative));
    skip_ws();
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c != '+' && c != '-') throw ParseError("expected '+', '-' or '*'", pos_);
      ++pos_;
      skip_ws();
      out.push_back(term(c == '-'));
      skip_ws();
    }
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  long long exponent() {
    std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000) throw ParseError("exponent too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected exponent", pos_);
    return v;
  }

  RawTerm term(bool negative) {
    RawTerm t{F_.from_int(negative ? -1 : 1), {}};
    factor(t);
    skip_ws();
    while (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      skip_ws();
      factor(t);
      skip_ws();
    }
    return t;
  }

  void factor(RawTerm& t) {
    if (pos_ >= s_.size()) throw ParseError("expected term", pos_);
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // Coefficients are reduced digit by digit to stay in range.
      long long v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = (v * 10 + (s_[pos_] - '0')) % F_.modulus();
        ++pos_;
      }
      t.coeff = F_.mul(t.coeff, F_.from_int(v));
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw UnknownVariable(name, start);
      int idx = static_cast<int>(it - vars_.begin());
      long long e = 1;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip_ws();
        e = exponent();
      }
      for (long long i = 0; i < e; ++i) t.factors.push_back(idx);
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  const PrimeField& F_;
  std::size_t pos_ = 0;
};

std::string coefficient_prefix(const PrimeField& F, Elem c, bool first, bool has_vars) {
  long long v = F.symmetric(c);
  std::string out;
  if (v < 0) {
    out = first ? "-" : " - ";
    v = -v;
  } else if (!first) {
    out = " + ";
  }
  if (!has_vars) return out + std::to_string(v);
  if (v != 1) out += std::to_string(v) + "*";
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                            const PrimeField& F) {
  Polynomial p(F, vars.size());
  for (const auto& t : TermParser(text, vars, F).parse()) {
    Monomial m{std::vector<int>(vars.size(), 0)};
    for (int v : t.factors) ++m.exp[v];
    p.add_term(m, t.coeff);
  }
  return p;
}

TensorElement parse_tensor(std::string_view text, const std::vector<std::string>& vars,
                           const PrimeField& F) {
  TensorElement f(F, vars.size());
  for (const auto& t : TermParser(text, vars, F).parse()) f.add_term(Word{t.factors}, t.coeff);
  return f;
}

std::string monomial_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
  }
  return out;
}

std::string to_string(const Polynomial& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::string mono = monomial_string(m, vars);
    out += coefficient_prefix(f.field(), c, first, !mono.empty());
    out += mono;
    first = false;
  }
  return out;
}

std::string to_string(const TensorElement& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  // Print longer words first, matching the commutative convention.
  std::vector<std::pair<Word, Elem>> terms(f.terms().begin(), f.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.first.degree() > b.first.degree(); });
  for (const auto& [w, c] : terms) {
    std::string word;
    for (int l : w.letters) {
      if (!word.empty()) word += "*";
      word += vars[l];
    }
    out += coefficient_prefix(f.field(), c, first, !word.empty());
    out += word;
    first = false;
  }
  return out;
}

std::vector<Monomial> commutative_basis(std::size_t n, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (n == 0) {
    if (degree == 0) out.push_back(Monomial{});
    return out;
  }
  std::vector<int> e(n, 0);
  // Lex-descending: the first exponent runs from degree down to 0.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(Monomial{e});
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, degree);
  return out;
}

std::vector<Word> free_basis(std::size_t n, int degree) {
  std::vector<Word> out;
  if (degree < 0) return out;
  std::size_t count = graded_piece_size(PieceKind::Free, n, degree);
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(word_from_index(i, n, degree));
  return out;
}

std::size_t graded_piece_size(PieceKind kind, std::size_t n, int degree) {
  if (degree < 0) return 0;
  if (kind == PieceKind::Free) {
    std::size_t s = 1;
    for (int i = 0; i < degree; ++i) s *= n;
    return s;
  }
  if (n == 0) return degree == 0 ? 1 : 0;
  // C(n + d - 1, d)
  std::size_t num = 1;
  for (int i = 1; i <= degree; ++i) num = num * (n - 1 + i) / i;
  return num;
}

std::vector<Monomial> monomials_up_to(std::size_t n, int d) {
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k) {
    auto piece = commutative_basis(n, k);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

std::size_t word_index(const Word& w, std::size_t n) {
  std::size_t idx = 0;
  for (int l : w.letters) idx = idx * n + static_cast<std::size_t>(l);
  return idx;
}

Word word_from_index(std::size_t idx, std::size_t n, int degree) {
  Word w{std::vector<int>(degree, 0)};
  for (int i = degree - 1; i >= 0; --i) {
    w.letters[i] = static_cast<int>(idx % n);
    idx /= n;
  }
  return w;
}

std::vector<std::string> default_var_names(std::size_t n) {
  static const char* small[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(n <= 4 ? std::string(small[i]) : "x" + std::to_string(i + 1));
  return out;
}

}  // namespace multlab
