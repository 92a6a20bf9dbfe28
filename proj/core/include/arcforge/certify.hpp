#pragma once

// End-to-end verification of one point set: arc property, completeness with
// witnesses, external lines, and (when a curve is attached) the Frobenius
// test, an empirical eps, the singular-point scan and the integer criteria.
// The resulting Certificate serializes to canonical JSON; identical inputs
// and options give byte-identical output.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcforge/arcs.hpp"
#include "arcforge/criteria.hpp"
#include "arcforge/curve.hpp"
#include "arcforge/families.hpp"

namespace arcforge {

std::string_view tool_version() noexcept;

struct CertifyOptions {
  bool check_arc = true;
  bool check_complete = true;
  bool check_frobenius = true;
  bool check_epsilon = true;
  bool check_criteria = true;
  /// Expected completeness verdict; a mismatch fails the certificate.
  bool expect_complete = true;
  EpsilonOptions epsilon;
  int singular_m = 1;
  unsigned workers = 1;
  /// Wall-clock timings break byte-identical output, so they are opt-in.
  bool record_timing = false;
};

struct CertifyInput {
  std::string source;
  std::optional<Curve> curve;
  ArcSet arc;
  std::optional<FamilySpec> family;
};

CertifyInput input_from_family(FamilyInstance instance);

struct FrobeniusSummary {
  bool nonclassical = false;
  int pivot = 0;
  std::size_t g_terms = 0;
  std::size_t quotient_terms = 0;
  std::string quotient;  // rendered polynomial, empty when classical
  std::size_t remainder_terms = 0;
  std::string remainder_leading;  // first remainder term, empty when nonclassical
};

struct SingularSummary {
  int m = 1;
  std::uint32_t field_order = 0;
  std::vector<std::string> points;  // formatted over GF(q^m)
  /// Singular points may exist only over larger extensions.
  bool conditional = true;
};

struct FamilyWitnessCheck {
  std::uint64_t checked = 0;
  std::uint64_t agreeing = 0;
};

struct Certificate {
  FieldPtr field;
  std::string source;
  std::string route;
  std::uint32_t q = 0;
  std::uint64_t k = 0;
  std::uint32_t d = 0;

  std::uint32_t max_secant = 0;
  std::vector<std::uint64_t> secant_histogram;
  std::uint64_t incidence_sum = 0;
  bool incidence_sum_ok = false;
  bool is_arc = false;

  bool completeness_checked = false;
  bool is_complete = false;
  std::vector<Witness> witnesses;
  std::uint64_t witnesses_verified = 0;
  std::vector<PlaneIndex> addable;
  std::vector<PlaneIndex> external_lines;
  std::optional<FamilyWitnessCheck> family_witnesses;

  std::optional<FrobeniusSummary> frobenius;
  std::optional<EpsilonEstimate> epsilon;
  std::optional<SingularSummary> singular;
  std::vector<criteria::CriterionReport> criteria;
  std::optional<std::int64_t> dual_degree;

  std::vector<std::string> diagnostics;
  std::vector<std::string> failures;
  bool expect_complete = true;
  CertifyOptions options;
  std::optional<double> seconds;

  bool passed() const noexcept { return failures.empty(); }
};

Certificate certify(const CertifyInput& input, const CertifyOptions& options = {});

std::string certificate_json(const Certificate& cert, int indent = -1);
/// Lossy human-readable rendering of the JSON.
std::string certificate_table(const Certificate& cert);

/// Canonical JSON for standalone criterion evaluations (`arcforge criteria`).
std::string criteria_json(const std::vector<criteria::CriterionReport>& reports, int indent = 2);
std::string dual_degree_json(std::int64_t d, std::int64_t eps, std::int64_t q, const criteria::DualDegree& dual,
                             int indent = 2);
std::string lambda_json(const criteria::LambdaRange& range, int indent = 2);

}  // namespace arcforge
