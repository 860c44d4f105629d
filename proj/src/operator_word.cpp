#include "gupspec/operator_word.hpp"

#include <cctype>
#include <cstdlib>
#include <optional>

#include "gupspec/errors.hpp"

namespace gup {

int WordTerm::x_count() const {
  int k = 0;
  for (const auto& f : factors)
    if (f.symbol == 'X') k += f.power;
  return k;
}

int WordTerm::length() const {
  int k = 0;
  for (const auto& f : factors) k += std::abs(f.power);
  return k;
}

int OperatorWord::x_count() const {
  int k = 0;
  for (const auto& t : terms) k = std::max(k, t.x_count());
  return k;
}

namespace {

using Sum = std::vector<WordTerm>;

void append_factor(WordTerm& t, Factor f) {
  if (!t.factors.empty() && t.factors.back().symbol == f.symbol) {
    t.factors.back().power += f.power;
    if (t.factors.back().power == 0) t.factors.pop_back();
  } else if (f.power != 0) {
    t.factors.push_back(f);
  }
}

Sum multiply(const Sum& a, const Sum& b) {
  Sum out;
  for (const auto& x : a)
    for (const auto& y : b) {
      WordTerm t{x.coeff * y.coeff, x.factors};
      for (const auto& f : y.factors) append_factor(t, f);
      out.push_back(std::move(t));
    }
  return out;
}

Sum hamiltonian_sum(const HamiltonianTerms& H) {
  Sum s;
  if (H.p2 != 0.0) s.push_back({H.p2, {{'P', 2}}});
  if (H.x2 != 0.0) s.push_back({H.x2, {{'X', 2}}});
  if (H.sym != 0.0) {
    s.push_back({H.sym, {{'X', 1}, {'P', 1}}});
    s.push_back({H.sym, {{'P', 1}, {'X', 1}}});
  }
  if (H.pinv2 != 0.0) s.push_back({H.pinv2, {{'P', -2}}});
  if (H.c0 != 0.0) s.push_back({H.c0, {}});
  return s;
}

class Parser {
 public:
  Parser(const std::string& text, const std::optional<HamiltonianTerms>& H) : s_(text), H_(H) {}

  Sum parse() {
    Sum r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  const std::string& s_;
  std::optional<HamiltonianTerms> H_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParameterError("operator word '" + s_ + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool at_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == 'X' || c == 'P' || c == 'H' || c == '(' || c == '.' || std::isdigit(static_cast<unsigned char>(c));
  }

  Sum expr() {
    double sign = 1;
    if (peek('-')) {
      ++pos_;
      sign = -1;
    } else if (peek('+')) {
      ++pos_;
    }
    Sum r = term();
    for (auto& t : r) t.coeff *= sign;
    while (peek('+') || peek('-')) {
      double sg = s_[pos_++] == '-' ? -1 : 1;
      for (auto t : term()) {
        t.coeff *= sg;
        r.push_back(std::move(t));
      }
    }
    return r;
  }

  Sum term() {
    if (!at_factor()) fail("expected a factor");
    Sum r{WordTerm{}};
    while (at_factor()) {
      r = multiply(r, factor());
      if (peek('*')) {
        ++pos_;
        if (!at_factor()) fail("expected a factor after '*'");
      }
    }
    return r;
  }

  int exponent() {
    if (!peek('^')) return 1;
    ++pos_;
    skip();
    const char* start = s_.c_str() + pos_;
    char* end = nullptr;
    long k = std::strtol(start, &end, 10);
    if (end == start) fail("expected an integer exponent");
    pos_ += size_t(end - start);
    return int(k);
  }

  Sum factor() {
    skip();
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Sum inner = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      int k = exponent();
      if (k < 0) fail("negative power of a bracket");
      Sum r{WordTerm{}};
      for (int i = 0; i < k; ++i) r = multiply(r, inner);
      return r;
    }
    if (c == 'H') {
      ++pos_;
      if (!H_) fail("H needs a model");
      int k = exponent();
      if (k < 0) fail("negative power of H");
      Sum r{WordTerm{}};
      for (int i = 0; i < k; ++i) r = multiply(r, hamiltonian_sum(*H_));
      return r;
    }
    if (c == 'X' || c == 'P') {
      ++pos_;
      int k = exponent();
      if (c == 'X' && k < 0) fail("negative powers of X are not defined");
      WordTerm t;
      append_factor(t, {c, k});
      return {t};
    }
    const char* start = s_.c_str() + pos_;
    char* end = nullptr;
    double v = std::strtod(start, &end);
    if (end == start) fail("expected a number");
    pos_ += size_t(end - start);
    return {WordTerm{v, {}}};
  }
};

OperatorWord finish(const std::string& text, Sum terms) {
  OperatorWord w{text, {}};
  for (auto& t : terms) {
    if (t.length() > kMaxWordLength) throw ParameterError("operator word '" + text + "' exceeds length 4");
    if (t.coeff != 0.0) w.terms.push_back(std::move(t));
  }
  return w;
}

}  // namespace

OperatorWord parse_word(const std::string& text, const HamiltonianTerms& hamiltonian) {
  return finish(text, Parser(text, hamiltonian).parse());
}

OperatorWord parse_word(const std::string& text) { return finish(text, Parser(text, std::nullopt).parse()); }

OperatorWord hamiltonian_word(const HamiltonianTerms& hamiltonian) { return finish("H", hamiltonian_sum(hamiltonian)); }

}  // namespace gup
