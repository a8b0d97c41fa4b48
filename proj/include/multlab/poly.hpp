#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "multlab/field.hpp"

namespace multlab {

struct Monomial {
  std::vector<int> exp;

  int degree() const;
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  auto operator<=>(const Monomial&) const = default;
};

// Graded lex, larger first: higher degree, then lex with x1 > x2 > ...
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct Word {
  std::vector<int> letters;

  int degree() const { return static_cast<int>(letters.size()); }
  auto operator<=>(const Word&) const = default;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Elem, GrlexGreater>;

  Polynomial(const PrimeField& F, std::size_t nvars) : field_(F), nvars_(nvars) {}
  static Polynomial monomial(const PrimeField& F, const Monomial& m, Elem c = 1);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Elem coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, Elem c);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(Elem c) const;

  // Lowest and highest total degree among terms; -1 for the zero polynomial.
  int min_degree() const;
  int max_degree() const;
  Polynomial homogeneous_part(int d) const;

  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  PrimeField field_;
  std::size_t nvars_;
  Terms terms_;
};

// Noncommutative element of the tensor algebra on nvars letters.
class TensorElement {
 public:
  TensorElement(const PrimeField& F, std::size_t nvars) : field_(F), nvars_(nvars) {}

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::map<Word, Elem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Word& w, Elem c);
  // Common degree of all words, or -1 when empty or mixed.
  int homogeneous_degree() const;

  bool operator==(const TensorElement& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

 private:
  PrimeField field_;
  std::size_t nvars_;
  std::map<Word, Elem> terms_;
};

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                            const PrimeField& F);
TensorElement parse_tensor(std::string_view text, const std::vector<std::string>& vars,
                           const PrimeField& F);

std::string to_string(const Polynomial& f, const std::vector<std::string>& vars);
std::string to_string(const TensorElement& f, const std::vector<std::string>& vars);
std::string monomial_string(const Monomial& m, const std::vector<std::string>& vars);

enum class PieceKind { Commutative, Free };

std::vector<Monomial> commutative_basis(std::size_t n, int degree);
std::vector<Word> free_basis(std::size_t n, int degree);
std::size_t graded_piece_size(PieceKind kind, std::size_t n, int degree);

// All monomials of degree <= d, ascending degree, grlex-descending within a degree.
std::vector<Monomial> monomials_up_to(std::size_t n, int d);

// Word <-> index in the lexicographic enumeration of n-letter words of its length.
std::size_t word_index(const Word& w, std::size_t n);
Word word_from_index(std::size_t idx, std::size_t n, int degree);

std::vector<std::string> default_var_names(std::size_t n);

}  // namespace multlab
