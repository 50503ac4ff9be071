#include "stanleychar/exactpoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace stanleychar {

std::string Indeterminate::name() const {
  switch (family) {
    case Family::P: return "p" + std::to_string(index);
    case Family::Q: return "q" + std::to_string(index);
    case Family::R: return "R" + std::to_string(index);
    case Family::S: return "s";
    case Family::Gamma: return "gamma";
  }
  return "?";
}

Indeterminate Indeterminate::parse(std::string_view name) {
  if (name == "s") return var_s();
  if (name == "gamma") return var_gamma();
  if (name.size() >= 2 && (name[0] == 'p' || name[0] == 'q' || name[0] == 'R')) {
    int index = 0;
    for (char c : name.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad variable name: " + std::string(name));
      index = index * 10 + (c - '0');
    }
    if (name[0] == 'R') {
      if (index < 2) throw std::invalid_argument("free cumulants start at R2: " + std::string(name));
      return var_R(index);
    }
    if (index < 1) throw std::invalid_argument("rectangle indices start at 1: " + std::string(name));
    return name[0] == 'p' ? var_p(index) : var_q(index);
  }
  throw std::invalid_argument("bad variable name: " + std::string(name));
}

int Weights::of(const Indeterminate& x) const {
  switch (x.family) {
    case Family::P: return p;
    case Family::Q: return q;
    case Family::R: return r * x.index;
    case Family::S: return s;
    case Family::Gamma: return gamma;
  }
  return 0;
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& [x, e] : factors) {
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == x)
      factors_.back().second += e;
    else
      factors_.emplace_back(x, e);
  }
  refresh();
}

void Monomial::refresh() {
  degree_ = 0;
  grade_ = 0;
  const Weights standard;
  for (const auto& [x, e] : factors_) {
    degree_ += e;
    grade_ += standard.of(x) * e;
  }
}

int Monomial::exponent(const Indeterminate& x) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), x,
                             [](const Factor& f, const Indeterminate& v) { return f.first < v; });
  return it != factors_.end() && it->first == x ? it->second : 0;
}

int Monomial::weighted_degree(const Weights& w) const {
  int total = 0;
  for (const auto& [x, e] : factors_) total += w.of(x) * e;
  return total;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  out.grade_ = a.grade_ + b.grade_;
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [x, e] : factors_) {
    if (!out.empty()) out += '*';
    out += x.name();
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.grade() != b.grade()) return a.grade() > b.grade();
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
      ++i;
      ++j;
    } else {
      return fa[i].first < fb[j].first;
    }
  }
  return i < fa.size() && j == fb.size();
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(const Indeterminate& x, int exponent) { return term(Monomial{{x, exponent}}, 1); }

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial f;
  f.add_term(m, c);
  return f;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant()); }

bool Polynomial::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return stanleychar::is_integral(t.second); });
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial operator-(Polynomial a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

Polynomial pow(const Polynomial& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial result(1);
  Polynomial square = base;
  while (exponent > 0) {
    if (exponent & 1) result *= square;
    exponent >>= 1;
    if (exponent > 0) square = square * square;
  }
  return result;
}

Rational coefficient(const Polynomial& f, const Monomial& m) {
  auto it = f.terms().find(m);
  return it == f.terms().end() ? Rational(0) : it->second;
}

Polynomial homogeneous_component(const Polynomial& f, int d, const Weights& weights) {
  Polynomial out;
  for (const auto& [m, c] : f.terms())
    if (m.weighted_degree(weights) == d) out.add_term(m, c);
  return out;
}

int weighted_degree(const Polynomial& f, const Weights& weights) {
  int best = -1;
  for (const auto& [m, c] : f.terms()) best = std::max(best, m.weighted_degree(weights));
  return best;
}

Polynomial substitute(const Polynomial& f, const std::map<Indeterminate, Polynomial>& bindings) {
  std::map<std::pair<Indeterminate, int>, Polynomial> powers;
  auto power_of = [&](const Indeterminate& x, int e) -> const Polynomial& {
    auto key = std::make_pair(x, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, pow(bindings.at(x), e)).first;
    return it->second;
  };

  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    Polynomial term(c);
    std::vector<Monomial::Factor> kept;
    for (const auto& [x, e] : m.factors()) {
      if (bindings.count(x))
        term *= power_of(x, e);
      else
        kept.emplace_back(x, e);
    }
    if (!kept.empty()) term = term * Polynomial::term(Monomial(std::move(kept)), 1);
    out += term;
  }
  return out;
}

Rational evaluate(const Polynomial& f, const std::map<Indeterminate, Rational>& values) {
  Rational total = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational term = c;
    for (const auto& [x, e] : m.factors()) {
      auto it = values.find(x);
      if (it == values.end()) throw std::invalid_argument("no value bound for " + x.name());
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), it->second.get_num_mpz_t(), static_cast<unsigned long>(e));
      mpz_pow_ui(power.get_den_mpz_t(), it->second.get_den_mpz_t(), static_cast<unsigned long>(e));
      power.canonicalize();
      term *= power;
    }
    total += term;
  }
  return total;
}

std::vector<Indeterminate> indeterminates(const Polynomial& f) {
  std::set<Indeterminate> seen;
  for (const auto& [m, c] : f.terms())
    for (const auto& [x, e] : m.factors()) seen.insert(x);
  return {seen.begin(), seen.end()};
}

std::string to_text(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (m.is_constant()) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) out += to_string(magnitude) + "*";
      out += m.to_string();
    }
  }
  return out;
}

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial result;
    skip_space();
    if (at_end()) fail("empty polynomial");
    int sign = 1;
    if (peek() == '-' || peek() == '+') sign = take() == '-' ? -1 : 1;
    result += parse_term() * Rational(sign);
    while (true) {
      skip_space();
      if (at_end()) break;
      const char op = take();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      result += parse_term() * Rational(op == '-' ? -1 : 1);
    }
    return result;
  }

 private:
  Polynomial parse_term() {
    Rational coeff = 1;
    std::vector<Monomial::Factor> factors;
    do {
      skip_space();
      if (at_end()) fail("dangling operator");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        Rational value(parse_digits());
        skip_space();
        if (!at_end() && peek() == '/') {
          take();
          skip_space();
          Rational den(parse_digits());
          if (den == 0) fail("zero denominator");
          value /= den;
        }
        coeff *= value;
      } else {
        std::string name;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) name += take();
        if (name.empty()) fail("expected a number or a variable");
        int exponent = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          take();
          skip_space();
          exponent = static_cast<int>(parse_digits().get_si());
        }
        factors.emplace_back(Indeterminate::parse(name), exponent);
      }
      skip_space();
    } while (consume('*'));
    return Polynomial::term(Monomial(std::move(factors)), coeff);
  }

  Integer parse_digits() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
    if (digits.empty()) fail("expected digits");
    return Integer(digits);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool consume(char c) {
    if (at_end() || peek() != c) return false;
    ++pos_;
    return true;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

}  // namespace stanleychar
