#ifndef DUHA_PRESETS_HPP
#define DUHA_PRESETS_HPP

#include <string>
#include <vector>

#include "duha/pbw.hpp"
#include "duha/polynomial.hpp"

namespace duha {

/// f1-rational, f2-generic, f2-root-{1,2,3,4,6}.
const std::vector<std::string>& preset_names();

/// Throws UsageError listing the presets when the name is unknown.
CaseSpec resolve_preset(const std::string& name, int genericity_window = 16);

/// Q[θ]/(minpoly) with r1, r2 given as dense coefficient lists in θ.
/// A degree-1 modulus means Q.
CaseSpec custom_case(const RationalPolynomial& minpoly, const RationalPolynomial& r1,
                     const RationalPolynomial& r2, int genericity_window = 16,
                     std::string name = "custom");

}  // namespace duha

#endif  // DUHA_PRESETS_HPP
