#include "qpbraid/transcript.hpp"

#include <sstream>

#include "qpbraid/garside.hpp"
#include "qpbraid/mcg.hpp"
#include "qpbraid/standard_form.hpp"

namespace qpbraid {

namespace {

TranscriptStep equality(std::string label, std::string_view lhs, std::string_view rhs) {
  return {std::move(label), StepKind::Equality, parse_braid(lhs), parse_braid(rhs), {}, {}};
}

TranscriptStep conjugacy(std::string label, std::string_view lhs, std::string_view rhs, std::string_view by) {
  return {std::move(label), StepKind::Conjugacy, parse_braid(lhs), parse_braid(rhs), parse_braid(by), {}};
}

TranscriptStep check(std::string label, std::function<bool(std::string&)> fn) {
  TranscriptStep s;
  s.label = std::move(label);
  s.kind = StepKind::Check;
  s.check = std::move(fn);
  return s;
}

std::string str(long long x) { return std::to_string(x); }

// D^4 s1^5 (s1 s2 s2 s1)^j s2^-(15-2j) D^-2j
std::string after_applications(int j) {
  std::string w = "D^4 s1^5";
  if (j > 0) w += " (s1 s2 s2 s1)^" + str(j);
  if (15 - 2 * j > 0) w += " s2^-" + str(15 - 2 * j);
  if (j > 0) w += " D^-" + str(2 * j);
  return w;
}

constexpr std::string_view kBeta0 = "(s1 s2)^6 s1^5 s2^-15";
constexpr std::string_view kBeta0Reduced = "D^-11 s1^7 (s2^2 s1^2)^7";

}  // namespace

std::vector<TranscriptStep> nonpositivity_transcript(int max_k) {
  std::vector<TranscriptStep> steps;
  steps.push_back(equality("chain relation (s1 s2)^6 = D^4", "(s1 s2)^6", "D^4"));
  steps.push_back(equality("beta_0 = D^4 s1^5 s2^-15", kBeta0, "D^4 s1^5 s2^-15"));
  steps.push_back(equality("peel s2^-1 = s1 s2 D^-1", "D^4 s1^5 s2^-15", "D^4 s1^5 s1 s2 D^-1 s2^-14"));
  steps.push_back(equality("push D^-1 right", "D^4 s1^5 s1 s2 D^-1 s2^-14", "D^4 s1^5 s1 s2 s1^-14 D^-1"));
  steps.push_back(equality("peel s1^-1 = s2 s1 D^-1", "D^4 s1^5 s1 s2 s1^-14 D^-1",
                           "D^4 s1^5 s1 s2 s2 s1 D^-1 s1^-13 D^-1"));
  steps.push_back(equality("collect D^-2", "D^4 s1^5 s1 s2 s2 s1 D^-1 s1^-13 D^-1",
                           "D^4 s1^5 s1 s2 s2 s1 s2^-13 D^-2"));
  for (int k = 15; k >= 3; k -= 2) {
    const std::string lhs = "s2^-" + str(k);
    std::string rhs = "s1 s2 s2 s1";
    if (k - 2 > 0) rhs += " s2^-" + str(k - 2);
    rhs += " D^-2";
    steps.push_back(equality("identity s2^-k = s1 s2 s2 s1 s2^-(k-2) D^-2, k=" + str(k), lhs, rhs));
  }
  for (int j = 1; j <= 7; ++j) {
    steps.push_back(equality("beta_0 after " + str(j) + " application(s)", kBeta0, after_applications(j)));
  }
  steps.push_back(equality("last letter s2^-1 = s1 s2 D^-1", "s2^-1", "s1 s2 D^-1"));
  steps.push_back(equality("beta_0 = D^4 s1^5 (s1 s2 s2 s1)^7 s1 s2 D^-15", kBeta0,
                           "D^4 s1^5 (s1 s2 s2 s1)^7 s1 s2 D^-15"));
  steps.push_back(conjugacy("move D^-15 to the front", "D^4 s1^5 (s1 s2 s2 s1)^7 s1 s2 D^-15",
                            "D^-11 s1^5 (s1 s2 s2 s1)^7 s1 s2", "D^-15"));
  steps.push_back(equality("regroup syllables", "D^-11 s1^5 (s1 s2 s2 s1)^7 s1 s2",
                           "D^-11 s1^6 (s2^2 s1^2)^7 s2"));
  steps.push_back(conjugacy("cycle trailing s2 to the front", "D^-11 s1^6 (s2^2 s1^2)^7 s2",
                            "s2 D^-11 s1^6 (s2^2 s1^2)^7", "s2^-1"));
  steps.push_back(equality("s2 D^-11 = D^-11 s1", "s2 D^-11 s1^6 (s2^2 s1^2)^7", kBeta0Reduced));

  steps.push_back(check("final form is reduced: case 3, m=15, p=-11", [](std::string& detail) {
    StandardForm sf{-11, {7}, {}};
    for (int i = 0; i < 14; ++i) sf.syllables.push_back(2);
    detail = render(sf.realize());
    return sf.realize() == parse_braid(kBeta0Reduced) && satisfies(ReducedCase::AllGeqTwo, sf.p, sf.syllables) &&
           sf.m() == 15;
  }));
  steps.push_back(check("obstruction: e=2, p+m=4 !< 4=2e", [](std::string& detail) {
    const auto rf = reduce(parse_braid(kBeta0Reduced));
    const auto v = obstruct(rf);
    const auto ineq = v.obstruction->inequality();
    detail = "p+m=" + ineq.mid.str() + " 2e=" + ineq.rhs.str();
    return v.outcome == Outcome::NotQP && v.obstruction->e == 2 && ineq.mid == 4 && ineq.rhs == 4;
  }));
  steps.push_back(check("reduction of beta_0 reproduces the final form", [](std::string& detail) {
    const BraidWord beta0 = parse_braid(kBeta0);
    const auto rf = reduce(beta0);
    detail = render(rf.base) + " via " + render(rf.base.conjugator);
    return rf.base.realize() == parse_braid(kBeta0Reduced) && verify_witness(rf.base, beta0);
  }));
  steps.push_back(check("beta_k = beta_0 s2^-k, so beta_k s2^k = beta_0 (k <= " + str(max_k) + ")",
                        [max_k](std::string& detail) {
                          const BraidWord beta0 = parse_braid(kBeta0);
                          for (int k = 1; k <= max_k; ++k) {
                            const BraidWord beta_k = make_beta(k);
                            if (!equals(multiply(beta_k, BraidWord::generator(Generator::Sigma2, k)), beta0)) {
                              detail = "k=" + str(k);
                              return false;
                            }
                          }
                          return true;
                        }));
  steps.push_back(check("t_d t_a^5 t_b^-(15+k) maps to beta_k (k <= " + str(max_k) + ")",
                        [max_k](std::string& detail) {
                          for (int k = 0; k <= max_k; ++k) {
                            const BraidWord expected =
                                parse_braid("(s1 s2)^6 s1^5 s2^-" + str(15 + k));
                            if (!(psi_inverse(make_phi(k)) == expected)) {
                              detail = "k=" + str(k);
                              return false;
                            }
                          }
                          return true;
                        }));
  return steps;
}

TranscriptReport run_transcript(const std::vector<TranscriptStep>& steps) {
  TranscriptReport report;
  for (const auto& step : steps) {
    StepResult r{step.label, false, {}};
    switch (step.kind) {
      case StepKind::Equality:
        r.passed = equals(step.lhs, step.rhs);
        r.detail = render(step.lhs) + " = " + render(step.rhs);
        break;
      case StepKind::Conjugacy:
        r.passed = equals(conjugate(step.lhs, step.conjugator), step.rhs);
        r.detail = render(step.lhs) + " ~ " + render(step.rhs) + " by " + render(step.conjugator);
        break;
      case StepKind::Check:
        r.passed = step.check && step.check(r.detail);
        break;
    }
    report.steps.push_back(std::move(r));
    if (!report.steps.back().passed) return report;
  }
  report.passed = true;
  report.verdict = decide(parse_braid(kBeta0));
  return report;
}

}  // namespace qpbraid
