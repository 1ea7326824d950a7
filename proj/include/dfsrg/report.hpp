#pragma once

#include "dfsrg/params.hpp"

namespace dfsrg {

/// Whether a check's hypotheses are met (its result is a claim) or it is run
/// for information only.
enum class Severity { asserted, diagnostic };

enum class Outcome { asserted_pass, asserted_fail, diagnostic };

inline Outcome outcome(bool holds, Severity s) {
  if (s == Severity::diagnostic) return Outcome::diagnostic;
  return holds ? Outcome::asserted_pass : Outcome::asserted_fail;
}

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::asserted_pass: return "asserted-pass";
    case Outcome::asserted_fail: return "asserted-fail";
    case Outcome::diagnostic: return "diagnostic";
  }
  return "?";
}

inline const char* to_string(Severity s) { return s == Severity::asserted ? "asserted" : "diagnostic"; }

/// The structural lemmas around Psi(u) and sigma_u are claims only for the
/// lambda = 2 family with n >= 3; elsewhere they are measured, not asserted.
inline Severity lemma_severity(const FamilyInfo& fam) {
  return fam.lambda == 2 && fam.n >= 3 ? Severity::asserted : Severity::diagnostic;
}

}  // namespace dfsrg
