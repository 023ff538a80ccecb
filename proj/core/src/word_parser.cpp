#include <algorithm>
#include <cctype>
#include <sstream>

#include "qpbraid/errors.hpp"
#include "qpbraid/word_grammar.hpp"

namespace qpbraid::grammar {

void push_run(std::vector<Symbol>& runs, int index, const Integer& exponent) {
  if (exponent == 0) return;
  if (!runs.empty() && runs.back().index == index) {
    runs.back().exponent += exponent;
    if (runs.back().exponent == 0) runs.pop_back();
    return;
  }
  runs.push_back({index, exponent});
}

namespace {

constexpr std::string_view kMiddleDot = "\xC2\xB7";

void append_runs(std::vector<Symbol>& out, const std::vector<Symbol>& in) {
  for (const auto& r : in) push_run(out, r.index, r.exponent);
}

std::vector<Symbol> inverse(const std::vector<Symbol>& w) {
  std::vector<Symbol> out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->index, -it->exponent});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  std::vector<Symbol> parse_all() {
    auto w = parse_sequence();
    skip_separators();
    if (pos_ < text_.size()) {
      if (text_[pos_] == ')') fail("unbalanced ')'");
      fail("unexpected character");
    }
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_separators() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
        ++pos_;
      } else if (text_.substr(pos_).starts_with(kMiddleDot)) {
        pos_ += kMiddleDot.size();
      } else {
        break;
      }
    }
  }

  std::vector<Symbol> parse_sequence() {
    std::vector<Symbol> out;
    for (;;) {
      skip_separators();
      if (pos_ >= text_.size() || text_[pos_] == ')') return out;
      append_runs(out, parse_item());
    }
  }

  std::vector<Symbol> parse_item() {
    const std::size_t start = pos_;
    std::vector<Symbol> atom;
    bool group = false;
    if (text_[pos_] == '(') {
      ++pos_;
      atom = parse_sequence();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      group = true;
    } else if (text_[pos_] == '1' &&
               (pos_ + 1 == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      // The identity, as rendered.
      ++pos_;
      group = true;
    } else {
      atom.push_back({match_token(), Integer(1)});
    }

    // Exponent may be separated from its atom by blanks.
    std::size_t save = pos_;
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    if (pos_ >= text_.size() || text_[pos_] != '^') {
      pos_ = save;
      return atom;
    }
    ++pos_;
    const Integer n = parse_integer();
    if (!group) {
      atom.front().exponent = n;
      return atom;
    }
    return repeat(atom, n, start);
  }

  std::vector<Symbol> repeat(const std::vector<Symbol>& block, const Integer& n, std::size_t where) {
    if (block.empty()) return {};
    std::vector<Symbol> base = n < 0 ? inverse(block) : block;
    const Integer count = n < 0 ? Integer(-n) : n;
    if (base.size() == 1) {
      base.front().exponent *= count;
      return base;
    }
    if (count * base.size() > kMaterializeLimit) {
      throw ParseError("group repetition too large to materialize", where);
    }
    std::vector<Symbol> out;
    for (Integer i = 0; i < count; ++i) append_runs(out, base);
    return out;
  }

  int match_token() {
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      const auto tok = alphabet_[i];
      if (tok.size() > best_len && text_.substr(pos_).starts_with(tok)) {
        best = static_cast<int>(i);
        best_len = tok.size();
      }
    }
    if (best < 0) fail("unknown token");
    // "s12" is not s1 followed by 2.
    const std::size_t end = pos_ + best_len;
    if (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) fail("unknown token");
    pos_ = end;
    return best;
  }

  Integer parse_integer() {
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer exponent");
    Integer value(std::string(text_.substr(digits, pos_ - digits)));
    if (value == 0) throw ParseError("zero exponent", start);
    return negative ? Integer(-value) : value;
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

std::string render_run(const Symbol& s, const Alphabet& alphabet) {
  std::string out(alphabet[static_cast<std::size_t>(s.index)]);
  if (s.exponent != 1) out += "^" + s.exponent.str();
  return out;
}

bool same_block(const std::vector<Symbol>& runs, std::size_t a, std::size_t b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (!(runs[a + i] == runs[b + i])) return false;
  }
  return true;
}

}  // namespace

std::vector<Symbol> parse(std::string_view text, const Alphabet& alphabet) {
  return Parser(text, alphabet).parse_all();
}

std::string render(const std::vector<Symbol>& runs, const Alphabet& alphabet) {
  constexpr std::size_t kMaxBlock = 8;
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << ' ';
    first = false;
  };
  std::size_t i = 0;
  while (i < runs.size()) {
    std::size_t best_len = 0, best_reps = 1;
    for (std::size_t len = 2; len <= kMaxBlock && i + 2 * len <= runs.size(); ++len) {
      std::size_t reps = 1;
      while (i + (reps + 1) * len <= runs.size() && same_block(runs, i, i + reps * len, len)) ++reps;
      if (reps >= 2) {
        best_len = len;
        best_reps = reps;
        break;
      }
    }
    sep();
    if (best_len == 0) {
      out << render_run(runs[i], alphabet);
      ++i;
      continue;
    }
    out << '(';
    for (std::size_t j = 0; j < best_len; ++j) {
      if (j) out << ' ';
      out << render_run(runs[i + j], alphabet);
    }
    out << ")^" << best_reps;
    i += best_len * best_reps;
  }
  return out.str();
}

}  // namespace qpbraid::grammar
