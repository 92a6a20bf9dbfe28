#pragma once

// The fixed matrix of constructions and checks behind `arcforge repro-paper`.
// Rows are keyed by claim id: thmA1, ex31, thmA2, rem30, rem31, rem32,
// frob, eps, lemma21, thmB, thm41, lambda.

#include <cstdint>
#include <string>
#include <vector>

namespace arcforge {

struct ReproOptions {
  /// Restrict to one claim id; empty runs everything.
  std::string only;
  /// Skip rows over fields larger than this.
  std::uint32_t q_max = 27;
  unsigned workers = 1;
  std::uint64_t seed = 0;
};

struct ReproRow {
  std::string claim;
  std::string name;
  std::uint32_t q = 0;
  bool pass = false;
  std::string detail;
};

struct ReproReport {
  std::vector<ReproRow> rows;

  bool all_pass() const noexcept;
};

std::vector<std::string> repro_claims();

ReproReport run_repro(const ReproOptions& options = {});

std::string repro_json(const ReproReport& report, int indent = 2);
std::string repro_table(const ReproReport& report);

}  // namespace arcforge
