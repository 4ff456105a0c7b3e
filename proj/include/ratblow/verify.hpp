#pragma once

#include <string>
#include <vector>

#include "ratblow/moduli.hpp"

namespace ratblow {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyBounds {
  long p_max = 7;
  long t_max = 2;
  long box = 4;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::vector<BvReport> lemma_reports;  // filled by the lemmas suite
  bool pass() const;
};

/// Suites: lattice, lemmas, identities, witten, all.
SuiteReport run_suite(const std::string& suite, const VerifyBounds& bounds);

/// Canonical specs exercised by the witten suite.
std::vector<std::string> catalog_specs();

}  // namespace ratblow
