#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qpbraid/quasipositivity.hpp"
#include "qpbraid/word.hpp"

namespace qpbraid {

// Replayable derivation that the family t_d t_a^5 t_b^-(15+k) has no positive
// factorization: every displayed equality and conjugacy of the hand
// computation, followed by the structural checks on the final form.
enum class StepKind { Equality, Conjugacy, Check };

struct TranscriptStep {
  std::string label;
  StepKind kind = StepKind::Equality;
  BraidWord lhs;
  BraidWord rhs;
  BraidWord conjugator;  // Conjugacy: conjugate(lhs, conjugator) == rhs
  // Check: returns true on success, may fill in a detail line.
  std::function<bool(std::string& detail)> check;
};

struct StepResult {
  std::string label;
  bool passed = false;
  std::string detail;
};

struct TranscriptReport {
  std::vector<StepResult> steps;
  bool passed = false;
  std::optional<PositivityVerdict> verdict;  // verdict on beta_0 when all steps pass
};

std::vector<TranscriptStep> nonpositivity_transcript(int max_k = 50);

// Runs steps in order and stops at the first failure.
TranscriptReport run_transcript(const std::vector<TranscriptStep>& steps);

}  // namespace qpbraid
