#ifndef DUHA_VERIFY_HPP
#define DUHA_VERIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "duha/koszul.hpp"
#include "duha/pbw.hpp"
#include "duha/series.hpp"

namespace duha {

/// Inclusive range of usual degrees.
struct Window {
  int min_deg = 0;
  int max_deg = 12;
};

enum class Theory { Homology, Cohomology, CyclicReduced };
std::string to_string(Theory t);

struct DimensionRow {
  int i = 0;
  int deg = 0;
  int sdeg = 0;
  long dim = 0;
};

/// Bigraded dimensions, one row per (i, bidegree), sorted by (i, deg, sdeg).
struct DimensionTable {
  std::string case_name;
  Theory theory = Theory::Homology;
  Window window;
  std::vector<DimensionRow> rows;

  /// 0 for bidegrees not listed.
  long dim(int i, Bidegree bd) const;
  /// Dimensions summed over the special degree, on [min_deg, max_deg].
  LaurentSeries series(int i) const;
};

/// One exact check of d∘d = 0 at one bidegree.
struct ComplexCheck {
  Bidegree bd;
  std::string composite;  ///< e.g. "d1*d2"
  bool zero = true;
};

/// Bidegrees with a nonzero term of the respective complex, deg ascending.
std::vector<Bidegree> homology_bidegrees(Window w);
std::vector<Bidegree> cohomology_bidegrees(Window w);

/// HH_i dims per bidegree. Bidegrees are independent jobs run on up to
/// `jobs` threads; results are merged in a fixed order. When `checks` is
/// given, d1∘d2 and d2∘d3 are multiplied out at each bidegree.
DimensionTable compute_hh_dims(const DownUpAlgebra& A, Window w, int jobs = 1,
                               std::vector<ComplexCheck>* checks = nullptr);
/// HH^i dims per bidegree, with d1*∘d0* and d2*∘d1* checks.
DimensionTable compute_hh_cohomology_dims(const DownUpAlgebra& A, Window w, int jobs = 1,
                                          std::vector<ComplexCheck>* checks = nullptr);

struct Comparison {
  std::string quantity;
  int degree = 0;
  Rational computed;
  Rational predicted;
  bool match = true;
  std::string reading;  ///< which printed formula, for advisory comparisons
};

struct Certificate {
  std::string claim;
  bool certified = true;
  nlohmann::json witness;
};

/// Findings of one check. Advisory comparisons and notes never fail a run.
struct VerificationReport {
  std::string case_name;
  nlohmann::json case_info;
  Window window;
  std::vector<Comparison> comparisons;
  std::vector<Certificate> certificates;
  std::vector<std::string> notes;
  std::vector<Comparison> advisory_comparisons;

  bool ok() const;
  void merge(const VerificationReport& other);
};

nlohmann::json to_json(const CaseSpec& c);
nlohmann::json to_json(const DimensionTable& t);
nlohmann::json to_json(const VerificationReport& r);

/// Compares two series degree by degree and appends the results.
void compare_series(std::vector<Comparison>& out, const std::string& quantity,
                    const LaurentSeries& computed, const LaurentSeries& predicted,
                    const std::string& reading = {});

/// Homology against the printed series. For n = 1 and n = 2 both printed
/// items iii and iv are compared as advisory entries and a note is added.
VerificationReport compare_homology_with_catalog(const CaseSpec& c, const DimensionTable& hh);
/// Cohomology against the printed series (F1 only; other families get a note).
VerificationReport compare_cohomology_with_catalog(const CaseSpec& c, const DimensionTable& hh);

/// dim A per usual degree on [0, max_deg] against 1/((1-t^2)(1-t)^2), and the
/// bigraded recurrence a_n = (s+1/s)(a_{n-1} - a_{n-3}) + a_{n-4}.
VerificationReport verify_algebra_dims(const CaseSpec& c, int max_deg);

/// Computes the tables and runs both comparisons, plus the complex checks.
VerificationReport verify_against_catalog(const DownUpAlgebra& A, Window homology,
                                          Window cohomology, int jobs = 1);

/// Representatives claimed to form a basis of HH_0 in bidegree bd.
std::vector<Monomial> hh0_claimed_basis(const CaseSpec& c, Bidegree bd);
/// Coefficients a of the claimed HH_3 classes a|d²u² in bidegree bd.
std::vector<AlgebraElement> hh3_claimed_basis(const DownUpAlgebra& A, Bidegree bd);

/// Count, cocycle condition and independence modulo the image, per bidegree.
Certificate certify_hh0_basis(const DownUpAlgebra& A, Window w);
Certificate certify_hh3_basis(const DownUpAlgebra& A, Window w);
/// HH^0..HH^3 bases for F1, plus the relation D²U²|w² ∈ Im d2*.
std::vector<Certificate> certify_cohomology_bases(const DownUpAlgebra& A, Window w);

struct CyclicResult {
  DimensionTable hc;  ///< reduced cyclic homology, i = 0, 1, 2
  VerificationReport report;
};

/// Reduced cyclic homology from the computed HH through Connes' exact
/// sequences, checked against the Goodwillie identities and the Euler
/// characteristic formula on degrees 1..max_deg.
CyclicResult verify_cyclic(const CaseSpec& c, const DimensionTable& hh);

/// dim HH^i in degree s equals dim HH_{3-i} in degree s+4, for s in `range`.
/// Throws UnsupportedCase unless β = -1.
VerificationReport verify_cy_duality(const CaseSpec& c, const DimensionTable& homology,
                                     const DimensionTable& cohomology, Window range);

}  // namespace duha

#endif  // DUHA_VERIFY_HPP
