#include "duha/presets.hpp"

#include "duha/errors.hpp"

namespace duha {

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"f1-rational", "f2-generic", "f2-root-1",
                                                 "f2-root-2",   "f2-root-3",  "f2-root-4",
                                                 "f2-root-6"};
  return names;
}

namespace {

CaseSpec rational_case(const std::string& name, const Rational& r1, const Rational& r2,
                       int window) {
  return classify(make_field_spec(NumberField::rationals(), r1, r2), window, name);
}

// Q[θ]/Φ_n with r1 = θ and r2 = θ^{n-1} = θ^{-1}.
CaseSpec cyclotomic_case(const std::string& name, int n, int window) {
  auto field = std::make_shared<const NumberField>(cyclotomic(n));
  const FieldElement theta = FieldElement::generator(field);
  return classify(make_field_spec(field, theta, theta.pow(n - 1)), window, name);
}

}  // namespace

CaseSpec resolve_preset(const std::string& name, int genericity_window) {
  if (name == "f1-rational") return rational_case(name, 2, 3, genericity_window);
  if (name == "f2-generic") return rational_case(name, 2, Rational(1, 2), genericity_window);
  if (name == "f2-root-1") return rational_case(name, 1, 1, genericity_window);
  if (name == "f2-root-2") return rational_case(name, -1, -1, genericity_window);
  if (name == "f2-root-3") return cyclotomic_case(name, 3, genericity_window);
  if (name == "f2-root-4") return cyclotomic_case(name, 4, genericity_window);
  if (name == "f2-root-6") return cyclotomic_case(name, 6, genericity_window);
  std::string known;
  for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
  throw UsageError("unknown preset '" + name + "'; known presets: " + known);
}

CaseSpec custom_case(const RationalPolynomial& minpoly, const RationalPolynomial& r1,
                     const RationalPolynomial& r2, int genericity_window, std::string name) {
  const RationalPolynomial m = trimmed(minpoly);
  if (degree(m) < 1) throw UsageError("minimal polynomial must have degree >= 1");
  // Normalize to a monic modulus.
  const RationalPolynomial monic = poly_scale(m, Rational(1) / m.back());
  auto field = std::make_shared<const NumberField>(monic);
  return classify(make_field_spec(field, FieldElement(field, r1), FieldElement(field, r2)),
                  genericity_window, std::move(name));
}

}  // namespace duha
