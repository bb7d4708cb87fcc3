#include "motcsm/motivic.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "motcsm/errors.hpp"

namespace motcsm {

// ---------------------------------------------------------------------------
// LPolynomial

LPolynomial::LPolynomial(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

LPolynomial::LPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

LPolynomial LPolynomial::monomial(const Integer& coefficient, std::size_t degree) {
  std::vector<Integer> c(degree + 1, Integer(0));
  c[degree] = coefficient;
  return LPolynomial(std::move(c));
}

void LPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer LPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Integer LPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational LPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

LPolynomial& LPolynomial::operator+=(const LPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

LPolynomial& LPolynomial::operator-=(const LPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

LPolynomial operator*(const LPolynomial& a, const LPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LPolynomial(std::move(c));
}

LPolynomial& LPolynomial::operator*=(const LPolynomial& other) { return *this = *this * other; }

LPolynomial operator-(LPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string LPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[i].get_str();
    if (i == 1) out += "*L";
    if (i >= 2) out += "*L^" + std::to_string(i);
  }
  return out;
}

namespace {

class TermReader {
 public:
  explicit TermReader(std::string_view text) {
    bool gap = false;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        gap = !s_.empty();
        continue;
      }
      // "1 2" or "L 2" is not a polynomial
      if (gap && std::isalnum(static_cast<unsigned char>(c)) &&
          std::isalnum(static_cast<unsigned char>(s_.back())))
        fail_on(std::string(text), "missing operator");
      gap = false;
      s_.push_back(c);
    }
  }

  LPolynomial read() {
    if (s_.empty()) fail("empty polynomial");
    LPolynomial result;
    while (pos_ < s_.size()) result += read_term();
    return result;
  }

 private:
  [[noreturn]] static void fail_on(const std::string& text, const std::string& why) {
    throw InputError("cannot parse polynomial '" + text + "': " + why);
  }
  [[noreturn]] void fail(const std::string& why) const { fail_on(s_, why); }

  bool digit_at(std::size_t p) const {
    return p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]));
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (digit_at(pos_)) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  LPolynomial read_term() {
    bool negative = false;
    bool saw_sign = false;
    while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      negative ^= (s_[pos_] == '-');
      saw_sign = true;
      ++pos_;
    }
    if (!saw_sign && first_term_done_) fail("missing operator");
    first_term_done_ = true;

    Integer coefficient = 1;
    bool saw_number = false;
    if (digit_at(pos_)) {
      coefficient = Integer(read_digits());
      saw_number = true;
    }
    std::size_t degree = 0;
    if (pos_ < s_.size() && s_[pos_] == '*') {
      if (!saw_number) fail("'*' without coefficient");
      ++pos_;
      if (pos_ >= s_.size() || s_[pos_] != 'L') fail("expected L after '*'");
    }
    if (pos_ < s_.size() && s_[pos_] == 'L') {
      ++pos_;
      degree = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        if (!digit_at(pos_)) fail("expected exponent");
        degree = std::stoul(read_digits());
      }
    } else if (!saw_number) {
      fail("expected a coefficient or L at offset " + std::to_string(pos_));
    }
    if (negative) coefficient = -coefficient;
    return LPolynomial::monomial(coefficient, degree);
  }

  std::string s_;
  std::size_t pos_ = 0;
  bool first_term_done_ = false;
};

}  // namespace

LPolynomial LPolynomial::parse(std::string_view text) { return TermReader(text).read(); }

std::optional<LPolynomial> divide_exact(const LPolynomial& a, const LPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (a.is_zero()) return LPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> rem = a.coefficients();
  const auto& den = b.coefficients();
  const std::size_t db = den.size() - 1;
  const Integer& lead = den.back();
  std::vector<Integer> quot(rem.size() - db, Integer(0));
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Integer& top = rem[i + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Integer q = top / lead;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * den[j];
    quot[i] = q;
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return LPolynomial(std::move(quot));
}

LPolynomial projective_polynomial(unsigned mu) {
  return LPolynomial(std::vector<Integer>(mu + 1, Integer(1)));
}

LPolynomial times_projective(const LPolynomial& p, unsigned mu) {
  if (p.is_zero()) return {};
  const auto& c = p.coefficients();
  std::vector<Integer> out(c.size() + mu);
  Integer window = 0;
  for (std::size_t n = 0; n < out.size(); ++n) {
    if (n < c.size()) window += c[n];
    if (n > mu && n - mu - 1 < c.size()) window -= c[n - mu - 1];
    out[n] = window;
  }
  return LPolynomial(std::move(out));
}

// ---------------------------------------------------------------------------
// MotivicClass

namespace {

std::vector<unsigned> normalized_denominator(std::vector<unsigned> den) {
  std::erase(den, 0u);
  std::sort(den.begin(), den.end());
  return den;
}

LPolynomial product_of_projectives(const std::vector<unsigned>& den) {
  LPolynomial p = 1;
  for (unsigned mu : den) p = times_projective(p, mu);
  return p;
}

std::vector<unsigned> multiset_difference(const std::vector<unsigned>& a,
                                          const std::vector<unsigned>& b) {
  std::vector<unsigned> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

MotivicClass::MotivicClass(long constant) : num_(constant) {}

MotivicClass::MotivicClass(LPolynomial numerator) : num_(std::move(numerator)) {}

MotivicClass::MotivicClass(LPolynomial numerator, std::vector<unsigned> denominator)
    : num_(std::move(numerator)), den_(normalized_denominator(std::move(denominator))) {}

LPolynomial MotivicClass::denominator_polynomial() const { return product_of_projectives(den_); }

MotivicClass MotivicClass::reduced() const {
  if (num_.is_zero()) return {};
  LPolynomial num = num_;
  std::vector<unsigned> kept;
  // Largest factors first: they carry the most cancellation.
  for (auto it = den_.rbegin(); it != den_.rend(); ++it) {
    if (auto q = divide_exact(num, projective_polynomial(*it))) {
      num = std::move(*q);
    } else {
      kept.push_back(*it);
    }
  }
  return MotivicClass(std::move(num), std::move(kept));
}

MotivicClass operator+(const MotivicClass& a, const MotivicClass& b) {
  if (a.den_ == b.den_) return MotivicClass(a.num_ + b.num_, a.den_);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Multiset maximum of the two denominators.
  std::vector<unsigned> common;
  std::set_union(a.den_.begin(), a.den_.end(), b.den_.begin(), b.den_.end(),
                 std::back_inserter(common));
  LPolynomial num = a.num_ * product_of_projectives(multiset_difference(common, a.den_)) +
                    b.num_ * product_of_projectives(multiset_difference(common, b.den_));
  return MotivicClass(std::move(num), std::move(common));
}

MotivicClass operator-(const MotivicClass& a) { return MotivicClass(-a.num_, a.den_); }

MotivicClass operator-(const MotivicClass& a, const MotivicClass& b) { return a + (-b); }

MotivicClass operator*(const MotivicClass& a, const MotivicClass& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<unsigned> den;
  std::merge(a.den_.begin(), a.den_.end(), b.den_.begin(), b.den_.end(), std::back_inserter(den));
  return MotivicClass(a.num_ * b.num_, std::move(den));
}

bool operator==(const MotivicClass& a, const MotivicClass& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.num_ * product_of_projectives(multiset_difference(b.den_, a.den_)) ==
         b.num_ * product_of_projectives(multiset_difference(a.den_, b.den_));
}

std::string MotivicClass::to_string() const {
  if (den_.empty() || num_.is_zero()) return num_.to_string();
  std::string out = "(" + num_.to_string() + ") / ";
  for (unsigned mu : den_) out += "[P^" + std::to_string(mu) + "]";
  return out;
}

MotivicClass projective_class(unsigned mu) { return MotivicClass(projective_polynomial(mu)); }

MotivicClass affine_class(unsigned n) { return MotivicClass(LPolynomial::monomial(1, n)); }

MotivicClass torus_class(unsigned n) {
  // Binomial expansion of (L - 1)^n.
  std::vector<Integer> c(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), n, i);
    c[i] = ((n - i) % 2 == 0) ? binom : Integer(-binom);
  }
  return MotivicClass(LPolynomial(std::move(c)));
}

MotivicClass div_by_projective(const MotivicClass& a, unsigned mu) {
  std::vector<unsigned> den = a.denominator();
  den.push_back(mu);
  return MotivicClass(a.numerator(), std::move(den));
}

Rational euler_specialize(const MotivicClass& a) {
  Rational value(a.numerator().evaluate(Integer(1)));
  for (unsigned mu : a.denominator()) value /= Rational(mu + 1);
  return value;
}

Rational eval_at(const MotivicClass& a, const Integer& q) {
  if (q <= 1) throw InputError("eval_at requires q >= 2, got " + q.get_str());
  Rational value(a.numerator().evaluate(q));
  for (unsigned mu : a.denominator()) value /= Rational(projective_polynomial(mu).evaluate(q));
  return value;
}

std::optional<LPolynomial> as_polynomial(const MotivicClass& a) {
  return divide_exact(a.numerator(), a.denominator_polynomial());
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  std::erase_if(s, [](unsigned char c) { return std::isspace(c); });
  if (s.empty()) throw InputError("empty rational");
  if (s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  Rational r;
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw InputError("cannot parse rational '" + s + "'");
    r = Rational(Integer(s));
  } else {
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    if (!valid_int(n) || !valid_int(d)) throw InputError("cannot parse rational '" + s + "'");
    Integer den(d);
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
    r = Rational(Integer(n), den);
  }
  r.canonicalize();
  return r;
}

}  // namespace motcsm
