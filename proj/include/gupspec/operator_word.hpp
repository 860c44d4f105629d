#pragma once
#include <string>
#include <vector>

#include "gupspec/algebra.hpp"

namespace gup {

// X^k or P^k; only P may carry a negative power
struct Factor {
  char symbol = 'X';
  int power = 1;
};

// coeff * f_1 f_2 ... f_k, the rightmost factor acting first
struct WordTerm {
  cplx coeff = 1;
  std::vector<Factor> factors;

  int x_count() const;
  int length() const;
};

struct OperatorWord {
  std::string text;
  std::vector<WordTerm> terms;

  int x_count() const;
};

inline constexpr int kMaxWordLength = 4;

// Sums and products of X, P, powers X^k, P^k (k may be negative for P),
// numeric factors, parentheses and H for the model Hamiltonian. "XP+PX",
// "P^2", "2*X^2 - H", "P^-2".
OperatorWord parse_word(const std::string& text, const HamiltonianTerms& hamiltonian);
OperatorWord parse_word(const std::string& text);

OperatorWord hamiltonian_word(const HamiltonianTerms& hamiltonian);

}  // namespace gup
