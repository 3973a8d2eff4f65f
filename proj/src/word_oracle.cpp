#include "duha/word_oracle.hpp"

#include <functional>

#include "duha/errors.hpp"

namespace duha::oracle {

namespace {

// Position of the chosen redex ("ddu" or "duu"), or npos.
std::size_t find_redex(const Word& w, Strategy strategy) {
  if (w.size() < 3) return Word::npos;
  if (strategy == Strategy::Leftmost) {
    for (std::size_t p = 0; p + 2 < w.size(); ++p) {
      if (w[p] == 'd' && w[p + 2] == 'u' && (w[p + 1] == 'd' || w[p + 1] == 'u')) return p;
    }
  } else {
    for (std::size_t p = w.size() - 2; p-- > 0;) {
      if (w[p] == 'd' && w[p + 2] == 'u' && (w[p + 1] == 'd' || w[p + 1] == 'u')) return p;
    }
  }
  return Word::npos;
}

// Larger inversion count first; ties broken by the word itself.
using Agenda = std::map<std::pair<int, Word>, FieldElement, std::greater<>>;

void push(Agenda& agenda, const Word& w, const FieldElement& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(inversions(w), w);
  auto [it, inserted] = agenda.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) agenda.erase(it);
}

}  // namespace

bool is_normal(const Word& w) {
  return find_redex(w, Strategy::Leftmost) == Word::npos;
}

int inversions(const Word& w) {
  int ds = 0;
  int inv = 0;
  for (char c : w) {
    if (c == 'd') {
      ++ds;
    } else {
      inv += ds;
    }
  }
  return inv;
}

void add_to(WordCombination& c, const Word& w, const FieldElement& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = c.try_emplace(w, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) c.erase(it);
}

WordCombination reduce_combination(const WordCombination& c, const FieldElement& alpha,
                                   const FieldElement& beta, Strategy strategy) {
  for (const auto& [w, x] : c) {
    for (char letter : w) {
      if (letter != 'u' && letter != 'd') throw UsageError("word contains letters other than u, d");
    }
  }
  Agenda agenda;
  for (const auto& [w, x] : c) push(agenda, w, x);
  WordCombination out;
  while (!agenda.empty()) {
    auto node = agenda.extract(agenda.begin());
    const Word& w = node.key().second;
    const FieldElement& coeff = node.mapped();
    const std::size_t p = find_redex(w, strategy);
    if (p == Word::npos) {
      add_to(out, w, coeff);
      continue;
    }
    const Word head = w.substr(0, p);
    const Word tail = w.substr(p + 3);
    if (w[p + 1] == 'd') {
      push(agenda, head + "dud" + tail, coeff * alpha);
      push(agenda, head + "udd" + tail, coeff * beta);
    } else {
      push(agenda, head + "udu" + tail, coeff * alpha);
      push(agenda, head + "uud" + tail, coeff * beta);
    }
  }
  return out;
}

WordCombination reduce_word(const Word& w, const FieldElement& alpha, const FieldElement& beta,
                            Strategy strategy) {
  return reduce_combination(WordCombination{{w, FieldElement(1)}}, alpha, beta, strategy);
}

WordCombination concatenate(const WordCombination& a, const WordCombination& b) {
  WordCombination out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) add_to(out, wa + wb, ca * cb);
  }
  return out;
}

WordCombination word_expansion(const Monomial& m, const CaseSpec& spec) {
  WordCombination acc{{Word(static_cast<std::size_t>(m.i), 'u'), FieldElement(1)}};
  const WordCombination w1{{"ud", spec.beta}, {"du", spec.field.r1}};
  for (int s = 0; s < m.j; ++s) acc = concatenate(acc, w1);
  return concatenate(acc, WordCombination{{Word(static_cast<std::size_t>(m.k), 'd'), 1}});
}

AlgebraElement to_pbw_element(const WordCombination& c, const DownUpAlgebra& algebra) {
  const CaseSpec& spec = algebra.spec();
  AlgebraElement du(Monomial{0, 1, 0}, spec.field.r1.inverse());
  du.add_term({1, 0, 1}, -spec.beta / spec.field.r1);
  AlgebraElement out;
  for (const auto& [w, coeff] : c) {
    if (!is_normal(w)) throw UsageError("to_pbw_element: word '" + w + "' is not reduced");
    std::size_t p = 0;
    int i = 0;
    while (p < w.size() && w[p] == 'u') {
      ++i;
      ++p;
    }
    int j = 0;
    while (p + 1 < w.size() && w[p] == 'd' && w[p + 1] == 'u') {
      ++j;
      p += 2;
    }
    const int k = static_cast<int>(w.size() - p);
    AlgebraElement term = algebra.multiply(AlgebraElement(Monomial{i, 0, 0}),
                                           algebra.power(du, j));
    term = algebra.multiply(term, AlgebraElement(Monomial{0, 0, k}));
    out += coeff * term;
  }
  return out;
}

}  // namespace duha::oracle
