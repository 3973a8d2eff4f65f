#ifndef DUHA_TESTS_PRINTERS_HPP
#define DUHA_TESTS_PRINTERS_HPP

#include <ostream>

#include "duha/pbw.hpp"
#include "duha/series.hpp"

namespace duha {

inline void PrintTo(const AlgebraElement& x, std::ostream* os) { *os << x.to_string(); }
inline void PrintTo(const FieldElement& x, std::ostream* os) { *os << x.to_string(); }
inline void PrintTo(const LaurentSeries& s, std::ostream* os) { *os << s.to_string(); }
inline void PrintTo(const Bidegree& b, std::ostream* os) { *os << "(" << b.deg << "," << b.sdeg << ")"; }
inline void PrintTo(const Monomial& m, std::ostream* os) { *os << to_string(m); }

}  // namespace duha

#endif  // DUHA_TESTS_PRINTERS_HPP
