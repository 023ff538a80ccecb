#include "qpbraid/quasipositivity.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "qpbraid/errors.hpp"
#include "qpbraid/garside.hpp"

namespace qpbraid {

std::string_view outcome_name(Outcome o) noexcept {
  switch (o) {
    case Outcome::QP: return "QP";
    case Outcome::NotQP: return "NotQP";
    case Outcome::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view route_name(Route r) noexcept {
  switch (r) {
    case Route::PositiveForm: return "positive-form";
    case Route::Obstruction: return "obstruction";
    case Route::ExponentSum: return "exponent-sum";
    case Route::MonoidRule: return "monoid-rule";
    case Route::BandSearch: return "band-search";
    case Route::Exhausted: return "exhausted";
    case Route::Inconclusive: return "inconclusive";
    case Route::ResourceLimit: return "resource-limit";
    case Route::NotReduced: return "not-reduced";
  }
  return "?";
}

BraidWord band_product(const std::vector<Band>& bands) {
  BraidWord w;
  for (const auto& b : bands) w.append(b.element());
  return w;
}

bool verify_bands(const std::vector<Band>& bands, const BraidWord& w) {
  if (Integer(bands.size()) != exponent_sum(w)) return false;
  return equals(band_product(bands), w);
}

namespace {

ObstructionData data_of(const ReducedStandardForm& rf) {
  return {rf.base.p, Integer(rf.base.m()), rf.base.exponent_sum()};
}

}  // namespace

PositivityVerdict obstruct(const ReducedStandardForm& rf) {
  PositivityVerdict v;
  v.obstruction = data_of(rf);
  v.exponent_sum = v.obstruction->e;
  const auto& sf = rf.base;
  if (sf.p >= 0) {
    // realize = g^-1 w g, so w is the product of g s g^-1 = conjugate(s, g^-1).
    const BraidWord back = garside_nf(invert(sf.conjugator)).to_word();
    const BraidWord letters = expand_delta(sf.realize());
    checked_count(letters.letter_count());
    for (const auto& r : letters.runs()) {
      for (Integer i = 0; i < r.exponent; ++i) v.bands.push_back({back, r.generator});
    }
    v.outcome = Outcome::QP;
    v.route = Route::PositiveForm;
    return v;
  }
  if (!v.obstruction->inequality().holds()) {
    v.outcome = Outcome::NotQP;
    v.route = Route::Obstruction;
    return v;
  }
  v.outcome = Outcome::Unknown;
  v.route = Route::Inconclusive;
  return v;
}

namespace {

constexpr std::int64_t kPlainPassBudget = 5'000;

struct StateKey {
  GarsideForm form;
  std::int64_t bands = 0;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept { return k.form.hash() * 131 + static_cast<std::size_t>(k.bands); }
};

// Freely reduced words over s1^{+-1}, s2^{+-1} of length <= n, shortest first.
std::vector<BraidWord> conjugators_up_to(std::int64_t n) {
  std::vector<BraidWord> out{BraidWord{}};
  std::vector<std::vector<std::pair<Generator, int>>> frontier{{}};
  const std::pair<Generator, int> letters[] = {
      {Generator::Sigma1, 1}, {Generator::Sigma1, -1}, {Generator::Sigma2, 1}, {Generator::Sigma2, -1}};
  for (std::int64_t len = 1; len <= n; ++len) {
    std::vector<std::vector<std::pair<Generator, int>>> next;
    for (const auto& w : frontier) {
      for (const auto& l : letters) {
        if (!w.empty() && w.back().first == l.first && w.back().second == -l.second) continue;
        auto x = w;
        x.push_back(l);
        BraidWord bw;
        for (const auto& [g, s] : x) bw.append(g, s);
        out.push_back(bw);
        next.push_back(std::move(x));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

class BandSearch {
 public:
  BandSearch(const SearchOptions& options, bool close_by_conjugation)
      : options_(options), close_by_conjugation_(close_by_conjugation) {}

  void use_conjugator_length(std::int64_t len) {
    alphabet_.clear();
    inverses_.clear();
    failed_.clear();
    std::unordered_set<GarsideForm, GarsideFormHash> seen;
    for (const auto& c : conjugators_up_to(len)) {
      for (const auto g : {Generator::Sigma1, Generator::Sigma2}) {
        Band b{c, g};
        if (!seen.insert(garside_nf(b.element())).second) continue;
        inverses_.push_back(invert(b.element()));
        alphabet_.push_back(std::move(b));
      }
    }
  }

  bool run(const GarsideForm& target, std::int64_t bands, std::vector<Band>& path) {
    count_node();
    if (bands == 0) return target.is_identity();

    const BraidWord word = target.to_word();
    if (target.delta_power() >= 0) {
      // A positive word: one band per letter, identity conjugators.
      const BraidWord letters = expand_delta(word);
      for (const auto& r : letters.runs()) {
        for (Integer i = 0; i < r.exponent; ++i) path.push_back({BraidWord{}, r.generator});
      }
      return true;
    }
    std::optional<ReducedStandardForm> rf;
    try {
      rf = reduce(word);
    } catch (const NotReducedError&) {
    }
    if (rf) {
      auto v = obstruct(*rf);
      if (v.outcome == Outcome::NotQP) return false;
      if (v.outcome == Outcome::QP && close_by_conjugation_) {
        path.insert(path.end(), v.bands.begin(), v.bands.end());
        return true;
      }
    }

    StateKey key{target, bands};
    if (failed_.contains(key)) return false;

    struct Child {
      Integer inf;
      Integer length;
      std::size_t band;
      GarsideForm form;
    };
    std::vector<Child> children;
    children.reserve(alphabet_.size());
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      count_node();
      GarsideForm f = garside_nf(multiply(inverses_[i], word));
      children.push_back({f.delta_power(), f.canonical_length(), i, std::move(f)});
    }
    // Prefer quotients closest to positive.
    std::stable_sort(children.begin(), children.end(), [](const Child& x, const Child& y) {
      if (x.inf != y.inf) return x.inf > y.inf;
      return x.length < y.length;
    });
    for (const auto& c : children) {
      path.push_back(alphabet_[c.band]);
      if (run(c.form, bands - 1, path)) return true;
      path.pop_back();
    }
    failed_.insert(std::move(key));
    return false;
  }

 private:
  void count_node() {
    if (++nodes_ > options_.node_budget) {
      throw ResourceLimitError("band search exceeded node budget " + std::to_string(options_.node_budget));
    }
  }

  SearchOptions options_;
  bool close_by_conjugation_;
  std::int64_t nodes_ = 0;
  std::vector<Band> alphabet_;
  std::vector<BraidWord> inverses_;
  std::unordered_set<StateKey, StateKeyHash> failed_;
};

}  // namespace

PositivityVerdict search_qp(const BraidWord& w, const SearchOptions& options) {
  if (options.max_conjugator_len < 0 || options.node_budget < 0) {
    throw std::invalid_argument("search bounds must be nonnegative");
  }
  PositivityVerdict v;
  const Integer e = exponent_sum(w);
  v.exponent_sum = e;
  if (e <= 0) {
    const bool identity = e == 0 && garside_nf(w).is_identity();
    v.outcome = identity ? Outcome::QP : Outcome::NotQP;
    v.route = identity ? Route::BandSearch : Route::ExponentSum;
    return v;
  }
  const std::int64_t depth = checked_count(e);
  const GarsideForm target = garside_nf(w);

  // First pass: bands within the bound only. Second pass: a node also closes
  // when its reduced form is positive, with the reduction conjugator.
  const std::int64_t first_budget = std::min(options.node_budget, kPlainPassBudget);
  for (const bool close : {false, true}) {
    BandSearch search(close ? options : SearchOptions{options.max_conjugator_len, first_budget}, close);
    try {
      for (std::int64_t len = 0; len <= options.max_conjugator_len; ++len) {
        search.use_conjugator_length(len);
        std::vector<Band> path;
        if (search.run(target, depth, path)) {
          if (!verify_bands(path, w)) throw std::logic_error("band search produced an invalid witness");
          v.outcome = Outcome::QP;
          v.route = Route::BandSearch;
          v.bands = std::move(path);
          v.bound = len;
          return v;
        }
      }
    } catch (const ResourceLimitError&) {
      if (close) throw;
    }
  }
  v.outcome = Outcome::Unknown;
  v.route = Route::Exhausted;
  v.bound = options.max_conjugator_len;
  return v;
}

std::optional<PositivityVerdict> monoid_rule(const BraidWord& w, std::int64_t max_strips) {
  // Negative suffix as single letters (D^-1 counts as one).
  const auto& runs = w.runs();
  std::size_t first_negative = runs.size();
  while (first_negative > 0 && runs[first_negative - 1].exponent < 0) --first_negative;
  if (first_negative == runs.size()) return std::nullopt;

  Integer total = 0;
  for (std::size_t i = first_negative; i < runs.size(); ++i) total += -runs[i].exponent;

  Integer strip = total;
  for (std::int64_t tries = 0; tries < max_strips && strip > 0; ++tries, strip -= 1) {
    // Remove `strip` trailing letters.
    BraidWord base;
    for (std::size_t i = 0; i < first_negative; ++i) base.append(runs[i].generator, runs[i].exponent);
    BraidWord suffix;
    Integer keep = total - strip;
    for (std::size_t i = first_negative; i < runs.size(); ++i) {
      const Integer n = -runs[i].exponent;
      const Integer kept = keep < n ? keep : n;
      keep -= kept;
      base.append(runs[i].generator, -kept);
      suffix.append(runs[i].generator, -(n - kept));
    }
    if (base.empty()) continue;

    std::optional<ReducedStandardForm> rf;
    try {
      rf = reduce(base);
    } catch (const NotReducedError&) {
      continue;
    }
    auto v = obstruct(*rf);
    if (v.outcome != Outcome::NotQP) continue;
    v.route = Route::MonoidRule;
    v.exponent_sum = exponent_sum(w);
    v.monoid_base = std::move(base);
    v.monoid_suffix = std::move(suffix);
    return v;
  }
  return std::nullopt;
}

PositivityVerdict decide(const BraidWord& w, const SearchOptions& options) {
  PositivityVerdict direct;
  try {
    direct = obstruct(reduce(w));
  } catch (const NotReducedError& err) {
    direct.outcome = Outcome::Unknown;
    direct.route = Route::NotReduced;
    direct.exponent_sum = exponent_sum(w);
    direct.diagnostic = err.what();
  }
  if (direct.outcome != Outcome::Unknown) return direct;

  if (auto by_monoid = monoid_rule(w)) return *by_monoid;

  try {
    auto searched = search_qp(w, options);
    if (!searched.obstruction) searched.obstruction = direct.obstruction;
    if (searched.outcome == Outcome::Unknown && !direct.diagnostic.empty()) searched.diagnostic = direct.diagnostic;
    return searched;
  } catch (const ResourceLimitError& err) {
    direct.route = Route::ResourceLimit;
    direct.bound = options.max_conjugator_len;
    direct.diagnostic = err.what();
    return direct;
  }
}

}  // namespace qpbraid
