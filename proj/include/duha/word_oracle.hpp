#ifndef DUHA_WORD_ORACLE_HPP
#define DUHA_WORD_ORACLE_HPP

#include <map>
#include <string>

#include "duha/pbw.hpp"

namespace duha {

/// Brute-force normal forms in the free algebra K<u, d> modulo
///   ddu -> α dud + β udd,   duu -> α udu + β uud.
/// Shares nothing with DownUpAlgebra except field arithmetic; it is the
/// reference the PBW engine is tested against. Deliberately naive.
namespace oracle {

/// A word over {u, d}, stored as a string of the letters 'u' and 'd'.
using Word = std::string;
using WordCombination = std::map<Word, FieldElement>;

enum class Strategy { Leftmost, Rightmost };

/// Normal words have the shape u^i (du)^j d^k, i.e. contain neither "ddu"
/// nor "duu".
bool is_normal(const Word& w);

/// Number of (d, u) pairs with the d before the u. Each rewrite lowers it.
int inversions(const Word& w);

void add_to(WordCombination& c, const Word& w, const FieldElement& coeff);

/// Reduces with the given redex choice. Words are processed in order of
/// decreasing inversion count so each word is rewritten at most once.
WordCombination reduce_word(const Word& w, const FieldElement& alpha, const FieldElement& beta,
                            Strategy strategy = Strategy::Leftmost);
WordCombination reduce_combination(const WordCombination& c, const FieldElement& alpha,
                                   const FieldElement& beta,
                                   Strategy strategy = Strategy::Leftmost);

/// Concatenation product of two combinations (no reduction).
WordCombination concatenate(const WordCombination& a, const WordCombination& b);

/// u^i (β ud + r1 du)^j d^k expanded into 2^j words.
WordCombination word_expansion(const Monomial& m, const CaseSpec& spec);

/// Converts a reduced combination to the w1 basis, replacing every du block
/// by (1/r1) w1 - (β/r1) ud and multiplying out with the PBW engine.
AlgebraElement to_pbw_element(const WordCombination& c, const DownUpAlgebra& algebra);

}  // namespace oracle
}  // namespace duha

#endif  // DUHA_WORD_ORACLE_HPP
