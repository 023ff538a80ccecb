#include "cli.hpp"

#include <algorithm>
#include <future>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "qpbraid/errors.hpp"
#include "qpbraid/garside.hpp"
#include "qpbraid/mcg.hpp"
#include "qpbraid/quasipositivity.hpp"
#include "qpbraid/serialize.hpp"
#include "qpbraid/standard_form.hpp"
#include "qpbraid/transcript.hpp"

namespace qpbraid::cli {

namespace {

using nlohmann::json;

struct JobConfig {
  std::string command;
  std::vector<std::string> words;
  std::int64_t search_bound = 4;
  std::int64_t node_budget = 1'000'000;
  bool json_output = false;
  std::string k_range = "0..50";
  bool twist_input = false;
  bool braid_input = false;
  int corrupt_step = 0;
};

struct LineResult {
  std::string out;
  std::string err;
  int code = kOk;
};

SearchOptions search_options(const JobConfig& cfg) { return {cfg.search_bound, cfg.node_budget}; }

std::string inequality_text(const ObstructionData& d) {
  const auto ineq = d.inequality();
  std::ostringstream s;
  if (ineq.mid <= ineq.lhs) {
    s << "(0 !< p+m=" << ineq.mid << ")";
  } else if (ineq.mid >= ineq.rhs) {
    s << "(p+m=" << ineq.mid << " !< 2e=" << ineq.rhs << ")";
  } else {
    s << "(0 < p+m=" << ineq.mid << " < 2e=" << ineq.rhs << ")";
  }
  return s.str();
}

std::string pme_text(const ObstructionData& d) {
  std::ostringstream s;
  s << "p=" << d.p << " m=" << d.m << " e=" << d.e;
  return s.str();
}

std::string verdict_text(const PositivityVerdict& v) {
  std::ostringstream s;
  switch (v.outcome) {
    case Outcome::QP:
      s << "QP (" << v.bands.size() << (v.bands.size() == 1 ? " band)" : " bands)") << "  route=" << route_name(v.route);
      for (std::size_t i = 0; i < v.bands.size(); ++i) {
        s << "\n  band " << i + 1 << ": (" << render(v.bands[i].conjugator) << ", "
          << generator_token(v.bands[i].generator) << ")";
      }
      break;
    case Outcome::NotQP:
      s << "NotQP";
      if (v.route == Route::MonoidRule) {
        s << "  monoid rule: w * (" << render(invert(*v.monoid_suffix)) << ") = " << render(*v.monoid_base)
          << "\n  base " << pme_text(*v.obstruction) << "  " << inequality_text(*v.obstruction);
      } else if (v.obstruction) {
        s << "  " << pme_text(*v.obstruction) << "  " << inequality_text(*v.obstruction);
      } else {
        s << "  e=" << v.exponent_sum << "  (exponent sum rules out bands)";
      }
      break;
    case Outcome::Unknown:
      s << "Unknown";
      if (v.obstruction) s << "  " << pme_text(*v.obstruction) << "  " << inequality_text(*v.obstruction);
      if (v.bound) s << "  bound=" << *v.bound;
      s << "\n  status: unknown (" << route_name(v.route) << ")";
      if (!v.diagnostic.empty()) s << "\n  diagnostic: " << v.diagnostic;
      break;
  }
  return s.str();
}

int verdict_code(const PositivityVerdict& v) {
  return (v.route == Route::ResourceLimit || v.route == Route::NotReduced) ? kDiagnostic : kOk;
}

LineResult cmd_nf(const std::string& text, const JobConfig& cfg) {
  const auto f = garside_nf(parse_braid(text));
  if (cfg.json_output) {
    json j = to_json(f);
    j["input"] = text;
    return {j.dump(), {}, kOk};
  }
  return {render(f), {}, kOk};
}

LineResult cmd_standard(const std::string& text, const JobConfig& cfg) {
  const BraidWord w = parse_braid(text);
  const auto sf = to_standard_form(w);
  if (!verify_witness(sf, w)) return {{}, "error: standard form witness failed to verify", kDiagnostic};
  if (cfg.json_output) {
    json j = to_json(sf);
    j["input"] = text;
    j["m"] = sf.m();
    return {j.dump(), {}, kOk};
  }
  std::ostringstream s;
  s << render(sf) << "\np=" << sf.p << " m=" << sf.m() << " e=" << sf.exponent_sum()
    << "\nconjugator: " << render(sf.conjugator);
  return {s.str(), {}, kOk};
}

LineResult cmd_reduce(const std::string& text, const JobConfig& cfg) {
  const BraidWord w = parse_braid(text);
  const auto rf = reduce(w);
  if (!verify_witness(rf.base, w)) return {{}, "error: reduced form witness failed to verify", kDiagnostic};
  if (cfg.json_output) {
    json j = to_json(rf);
    j["input"] = text;
    j["verified"] = true;
    return {j.dump(), {}, kOk};
  }
  std::ostringstream s;
  s << render(rf.base) << "\ncase=" << case_number(rf.case_tag) << " p=" << rf.base.p << " m=" << rf.base.m()
    << " e=" << rf.base.exponent_sum() << "\nconjugator: " << render(rf.base.conjugator) << "  (verified)";
  return {s.str(), {}, kOk};
}

LineResult cmd_classify(const std::string& text, const JobConfig& cfg) {
  if (cfg.twist_input) {
    const auto mv = classify_monodromy(parse_twist(text), search_options(cfg));
    if (cfg.json_output) {
      json j = to_json(mv);
      j["input"] = text;
      return {j.dump(), {}, verdict_code(mv.verdict)};
    }
    return {verdict_text(mv.verdict) + "\n  braid image: " + render(mv.braid_image), {}, verdict_code(mv.verdict)};
  }
  const auto v = decide(parse_braid(text), search_options(cfg));
  if (cfg.json_output) {
    json j = to_json(v);
    j["input"] = text;
    return {j.dump(), {}, verdict_code(v)};
  }
  return {verdict_text(v), {}, verdict_code(v)};
}

LineResult cmd_search(const std::string& text, const JobConfig& cfg) {
  const BraidWord w = cfg.twist_input ? psi_inverse(parse_twist(text)) : parse_braid(text);
  const auto v = search_qp(w, search_options(cfg));
  if (cfg.json_output) {
    json j = to_json(v);
    j["input"] = text;
    return {j.dump(), {}, kOk};
  }
  return {verdict_text(v), {}, kOk};
}

LineResult cmd_psi(const std::string& text, const JobConfig& cfg) {
  const auto t = psi(parse_braid(text));
  if (cfg.json_output) return {json{{"input", text}, {"twist_word", render(t)}}.dump(), {}, kOk};
  return {render(t), {}, kOk};
}

LineResult cmd_psi_inv(const std::string& text, const JobConfig& cfg) {
  const auto w = psi_inverse(parse_twist(text));
  if (cfg.json_output) return {json{{"input", text}, {"braid_word", render(w)}}.dump(), {}, kOk};
  return {render(w), {}, kOk};
}

using LineCommand = LineResult (*)(const std::string&, const JobConfig&);

LineResult guarded(LineCommand cmd, const std::string& text, const JobConfig& cfg) {
  try {
    return cmd(text, cfg);
  } catch (const ParseError& e) {
    return {{}, std::string("error: ") + e.what(), kUsageError};
  } catch (const std::invalid_argument& e) {
    return {{}, std::string("error: ") + e.what(), kUsageError};
  } catch (const NotReducedError& e) {
    return {{}, std::string("not reduced: ") + e.what(), kDiagnostic};
  } catch (const ResourceLimitError& e) {
    return {{}, std::string("resource limit: ") + e.what(), kDiagnostic};
  }
}

int emit(const std::vector<LineResult>& results, std::ostream& out, std::ostream& err) {
  int code = kOk;
  for (const auto& r : results) {
    if (!r.out.empty()) out << r.out << '\n';
    if (!r.err.empty()) err << r.err << '\n';
    code = std::max(code, r.code);
  }
  return code;
}

// Lines are independent; results are emitted in input order.
int run_lines(LineCommand cmd, const std::vector<std::string>& lines, const JobConfig& cfg, std::ostream& out,
              std::ostream& err) {
  std::vector<LineResult> results(lines.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), lines.size()));
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < lines.size(); i += workers) results[i] = guarded(cmd, lines[i], cfg);
    }));
  }
  for (auto& t : tasks) t.get();
  return emit(results, out, err);
}

std::vector<std::string> input_lines(const JobConfig& cfg, std::istream& in) {
  if (!(cfg.words.size() == 1 && cfg.words.front() == "-")) return cfg.words;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::pair<std::int64_t, std::int64_t> parse_k_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("k range must look like a..b");
  std::int64_t lo = 0, hi = 0;
  try {
    std::size_t used = 0;
    lo = std::stoll(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("");
    const std::string rest = text.substr(dots + 2);
    hi = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("k range must look like a..b with integers a, b");
  }
  if (lo < 0) throw std::invalid_argument("k range must start at k >= 0");
  return {lo, hi};
}

int cmd_family(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  std::pair<std::int64_t, std::int64_t> range;
  try {
    range = parse_k_range(cfg.k_range);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  std::vector<std::int64_t> ks;
  for (std::int64_t k = range.first; k <= range.second; ++k) ks.push_back(k);

  std::vector<MonodromyVerdict> rows(ks.size());
  std::vector<std::future<void>> tasks;
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), ks.size()));
  for (std::size_t w = 0; w < workers && !ks.empty(); ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < ks.size(); i += workers) rows[i] = classify_monodromy(make_phi(ks[i]), search_options(cfg));
    }));
  }
  for (auto& t : tasks) t.get();

  int code = kOk;
  if (cfg.json_output) {
    json table = json::array();
    for (std::size_t i = 0; i < ks.size(); ++i) {
      json j = to_json(rows[i]);
      j["k"] = ks[i];
      table.push_back(j);
      code = std::max(code, verdict_code(rows[i].verdict));
    }
    out << table.dump() << '\n';
    return code;
  }
  if (ks.empty()) return kOk;
  out << "k\tp\tm\te\tverdict\troute\tbraid\n";
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const auto& v = rows[i].verdict;
    out << ks[i] << '\t';
    if (v.obstruction) {
      out << v.obstruction->p << '\t' << v.obstruction->m << '\t';
    } else {
      out << "-\t-\t";
    }
    out << v.exponent_sum << '\t' << outcome_name(v.outcome) << '\t' << route_name(v.route) << '\t'
        << render(rows[i].braid_image) << '\n';
    code = std::max(code, verdict_code(v));
  }
  return code;
}

int cmd_verify(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  auto steps = nonpositivity_transcript();
  if (cfg.corrupt_step > 0) {
    if (static_cast<std::size_t>(cfg.corrupt_step) > steps.size()) {
      err << "error: --corrupt-step out of range (1.." << steps.size() << ")\n";
      return kUsageError;
    }
    auto& s = steps[static_cast<std::size_t>(cfg.corrupt_step - 1)];
    if (s.kind == StepKind::Check) {
      s.check = [](std::string& detail) {
        detail = "corrupted";
        return false;
      };
    } else {
      s.rhs.append(Generator::Sigma1, 1);
    }
  }
  const auto report = run_transcript(steps);
  if (cfg.json_output) {
    json j;
    json arr = json::array();
    for (const auto& s : report.steps) arr.push_back({{"step", s.label}, {"pass", s.passed}, {"detail", s.detail}});
    j["steps"] = arr;
    j["pass"] = report.passed;
    if (report.verdict) j["verdict"] = to_json(*report.verdict);
    out << j.dump() << '\n';
  } else {
    std::size_t n = 0;
    for (const auto& s : report.steps) {
      out << (s.passed ? "PASS" : "FAIL") << "  [" << ++n << "] " << s.label;
      if (!s.detail.empty()) out << "\n        " << s.detail;
      out << '\n';
    }
    if (report.verdict) out << "beta_0 verdict: " << verdict_text(*report.verdict) << '\n';
  }
  if (!report.passed) {
    err << "verification failed at step " << report.steps.size() << ": " << report.steps.back().label << '\n';
    return kVerifyFailed;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positivity of once-punctured-torus monodromies via 3-braid normal forms"};
  app.require_subcommand(1);
  app.fallthrough();

  JobConfig cfg;
  app.set_config("--config", "", "Key=value file with defaults for bound, budget, json, k-range");
  app.add_flag("--json", cfg.json_output, "Emit JSON");
  app.add_option("--bound", cfg.search_bound, "Maximum band conjugator length for the search")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--budget", cfg.node_budget, "Node budget for the band search")->check(CLI::NonNegativeNumber);
  app.add_option("--k-range", cfg.k_range, "Family parameter range a..b (inclusive)");

  auto add_word_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("word", cfg.words, "Word, or - to read one word per line from standard input")->required();
    return sub;
  };
  auto* nf = add_word_command("nf", "Left-greedy normal form");
  auto* standard = add_word_command("standard", "Standard form D^p w+ with conjugator");
  auto* reduce_cmd = add_word_command("reduce", "Reduced standard form with verified conjugator");
  auto* search = add_word_command("search-qp", "Search for a band factorization");
  search->add_flag("--twist", cfg.twist_input, "Input is a twist word in a, b, d");
  auto* psi_cmd = add_word_command("psi", "Braid word to twist word");
  auto* psi_inv = add_word_command("psi-inv", "Twist word to braid word");

  auto* classify = app.add_subcommand("classify", "Positivity verdict for a braid or twist word");
  std::string twist_word, braid_word;
  auto* twist_opt = classify->add_option("--twist", twist_word, "Twist word in a, b, d (or -)");
  auto* braid_opt = classify->add_option("--braid", braid_word, "Braid word in s1, s2, D (or -)");
  classify->add_option("word", cfg.words, "Braid word (or -)");
  twist_opt->excludes(braid_opt);

  auto* family = app.add_subcommand("family", "Verdicts for t_d t_a^5 t_b^-(15+k) over a k range");
  auto* verify = app.add_subcommand("verify-paper", "Replay the non-positivity derivation step by step");
  verify->add_option("--corrupt-step", cfg.corrupt_step, "Test mode: deliberately break step N")
      ->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  if (cfg.words.size() > 1) {
    std::string joined;
    for (const auto& w : cfg.words) joined += (joined.empty() ? "" : " ") + w;
    cfg.words = {joined};
  }

  if (*classify) {
    if (!twist_word.empty() || *twist_opt) {
      cfg.twist_input = true;
      cfg.words = {twist_word};
    } else if (*braid_opt) {
      cfg.braid_input = true;
      cfg.words = {braid_word};
    }
    if (cfg.words.empty()) {
      err << "error: classify needs --twist, --braid or a braid word\n";
      return kUsageError;
    }
    return run_lines(cmd_classify, input_lines(cfg, in), cfg, out, err);
  }
  if (*family) return cmd_family(cfg, out, err);
  if (*verify) return cmd_verify(cfg, out, err);

  const std::pair<CLI::App*, LineCommand> table[] = {
      {nf, cmd_nf}, {standard, cmd_standard}, {reduce_cmd, cmd_reduce},
      {search, cmd_search}, {psi_cmd, cmd_psi}, {psi_inv, cmd_psi_inv},
  };
  for (const auto& [sub, cmd] : table) {
    if (*sub) return run_lines(cmd, input_lines(cfg, in), cfg, out, err);
  }
  return kUsageError;
}

}  // namespace qpbraid::cli
