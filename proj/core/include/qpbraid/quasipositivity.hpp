#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpbraid/integer.hpp"
#include "qpbraid/standard_form.hpp"
#include "qpbraid/word.hpp"

namespace qpbraid {

enum class Outcome { QP, NotQP, Unknown };

std::string_view outcome_name(Outcome o) noexcept;

// How a verdict was reached.
enum class Route {
  PositiveForm,   // reduced form has p >= 0, so it is a positive word
  Obstruction,    // reduced form with p < 0 violates 0 < p + m < 2e
  ExponentSum,    // e <= 0 and not the identity
  MonoidRule,     // w * (positive word) is already known not quasipositive
  BandSearch,     // explicit band factorization found by search
  Exhausted,      // search space exhausted without a factorization
  Inconclusive,   // obstruction inequalities hold; nothing else attempted
  ResourceLimit,  // search hit its node budget
  NotReduced,     // reduction stalled
};

std::string_view route_name(Route r) noexcept;

// conjugator^-1 * s_i * conjugator
struct Band {
  BraidWord conjugator;
  Generator generator = Generator::Sigma1;

  BraidWord element() const { return conjugate(BraidWord::generator(generator), conjugator); }
  bool operator==(const Band&) const = default;
};

BraidWord band_product(const std::vector<Band>& bands);

// Product equals w and the band count equals e(w).
bool verify_bands(const std::vector<Band>& bands, const BraidWord& w);

// 0 < p + m < 2e, reported as lhs < mid < rhs.
struct Inequality {
  Integer lhs = 0;
  Integer mid = 0;
  Integer rhs = 0;

  bool holds() const { return lhs < mid && mid < rhs; }
};

struct ObstructionData {
  Integer p = 0;
  Integer m = 0;
  Integer e = 0;

  Inequality inequality() const { return {0, p + m, 2 * e}; }
};

struct PositivityVerdict {
  Outcome outcome = Outcome::Unknown;
  Route route = Route::Inconclusive;
  // e of the input element.
  Integer exponent_sum = 0;
  // (p, m, e) of the reduced form examined, when one was.
  std::optional<ObstructionData> obstruction;
  // QP witness, relative to the input element.
  std::vector<Band> bands;
  // Conjugator-length bound of an exhausted or budget-limited search.
  std::optional<std::int64_t> bound;
  // MonoidRule: the prefix proven not quasipositive, and the stripped negative suffix.
  std::optional<BraidWord> monoid_base;
  std::optional<BraidWord> monoid_suffix;
  std::string diagnostic;
};

struct SearchOptions {
  std::int64_t max_conjugator_len = 4;
  std::int64_t node_budget = 1'000'000;
};

// One-directional test on a reduced form: p >= 0 gives QP with one band per
// letter of the realization; p < 0 with the inequalities violated gives NotQP;
// otherwise Unknown. Bands are expressed relative to the element the reduced
// form was computed from.
PositivityVerdict obstruct(const ReducedStandardForm& rf);

// Looks for e(w) bands whose product is w. Branches over bands with conjugators
// of length <= max_conjugator_len (shortest first); a partial quotient whose
// reduced form is positive is closed with bands transported by its reduction
// conjugator, and one that fails the obstruction is pruned. Throws
// ResourceLimitError once node_budget nodes have been visited.
PositivityVerdict search_qp(const BraidWord& w, const SearchOptions& options = {});

// If w = u * v with v a negative word and u not quasipositive by the
// obstruction, w is not quasipositive either (u = w * v^-1 and QP(3) is a
// monoid containing s1, s2). Longest v is tried first.
std::optional<PositivityVerdict> monoid_rule(const BraidWord& w, std::int64_t max_strips = 4096);

// reduce -> obstruct -> monoid rule -> band search.
PositivityVerdict decide(const BraidWord& w, const SearchOptions& options = {});

}  // namespace qpbraid
