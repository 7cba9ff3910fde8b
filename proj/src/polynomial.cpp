#include "hilbkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "hilbkit/error.hpp"

namespace hilbkit {

std::string to_string(const Rational& q) { return q.get_str(); }

Polynomial Polynomial::constant(const PolyRing& ring, const Rational& c) {
  return term(ring, c, Monomial());
}

Polynomial Polynomial::variable(const PolyRing& ring, int index) {
  if (index < 0 || index >= ring.total_vars()) throw DomainError("variable index out of range");
  return term(ring, 1, Monomial::variable(index));
}

Polynomial Polynomial::term(const PolyRing& ring, const Rational& c, const Monomial& m) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({c, m});
  return p;
}

Polynomial Polynomial::from_terms(const PolyRing& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ring.compare(a.mono, b.mono) > 0;
  });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

int Polynomial::degree_in(std::uint32_t mask) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(mask));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

bool Polynomial::is_x_homogeneous() const {
  auto mask = ring_.x_mask();
  for (const auto& t : terms_)
    if (t.mono.degree_in(mask) != terms_.front().mono.degree_in(mask)) return false;
  return true;
}

bool Polynomial::uses_variable(int index) const {
  for (const auto& t : terms_)
    if (t.mono[index] > 0) return true;
  return false;
}

void Polynomial::pop_leading() {
  if (!terms_.empty()) terms_.erase(terms_.begin());
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!(ring_ == other.ring_)) throw RingMismatch();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::sub_mul(const Rational& c, const Monomial& m,
                               const Polynomial& other) const {
  check_ring(other);
  Polynomial r(ring_);
  if (c == 0 || other.is_zero()) return *this;
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  Monomial bm;
  bool have_b = false;
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b != other.terms_.end() && !have_b) {
      bm = b->mono * m;
      have_b = true;
    }
    int cmp;
    if (a == terms_.end()) cmp = -1;
    else if (b == other.terms_.end()) cmp = 1;
    else cmp = ring_.compare(a->mono, bm);
    if (cmp > 0) {
      r.terms_.push_back(*a++);
    } else if (cmp < 0) {
      r.terms_.push_back({-c * b->coeff, bm});
      ++b;
      have_b = false;
    } else {
      Rational v = a->coeff - c * b->coeff;
      if (v != 0) r.terms_.push_back({std::move(v), bm});
      ++a;
      ++b;
      have_b = false;
    }
  }
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  return sub_mul(-1, Monomial(), other);
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return sub_mul(1, Monomial(), other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_ring(other);
  std::vector<Term> terms;
  terms.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) terms.push_back({a.coeff * b.coeff, a.mono * b.mono});
  return from_terms(ring_, std::move(terms));
}

Polynomial Polynomial::scale(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.coeff *= c;
    t.mono = t.mono * m;
  }
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw DomainError("negative power");
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(int var, const Polynomial& replacement) const {
  check_ring(replacement);
  std::vector<Polynomial> images;
  images.reserve(static_cast<std::size_t>(ring_.total_vars()));
  for (int i = 0; i < ring_.total_vars(); ++i)
    images.push_back(i == var ? replacement : variable(ring_, i));
  return substitute_all(images);
}

Polynomial Polynomial::substitute_all(std::span<const Polynomial> images) const {
  if (images.size() != static_cast<std::size_t>(ring_.total_vars()))
    throw DomainError("substitution needs one image per variable");
  const PolyRing& target = images.front().ring();
  for (const auto& im : images)
    if (!(im.ring() == target)) throw RingMismatch();
  // Cache powers of each image as they are requested.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t v, int e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
    return cache[static_cast<std::size_t>(e)];
  };
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v) {
      int e = t.mono[static_cast<int>(v)];
      if (e) prod = prod * power(v, e);
    }
    for (auto& pt : prod.terms_) acc.push_back(std::move(pt));
  }
  return from_terms(target, std::move(acc));
}

Polynomial Polynomial::evaluate(int var, const Rational& value) const {
  std::vector<Term> acc;
  acc.reserve(terms_.size());
  for (const auto& t : terms_) {
    int e = t.mono[var];
    Rational c = t.coeff;
    if (e) {
      Rational pw = 1;
      for (int i = 0; i < e; ++i) pw *= value;
      c *= pw;
    }
    Monomial m = t.mono;
    m.set(var, 0);
    acc.push_back({std::move(c), m});
  }
  return from_terms(ring_, std::move(acc));
}

Polynomial Polynomial::transfer(const PolyRing& target) const {
  if (ring_ == target) return *this;
  const int src_param = ring_.has_param() ? ring_.param_index() : -1;
  const int src_aux0 = ring_.num_vars() + (ring_.has_param() ? 1 : 0);
  std::vector<int> map(static_cast<std::size_t>(ring_.total_vars()), -1);
  for (int i = 0; i < ring_.total_vars(); ++i) {
    if (i < ring_.num_vars()) {
      if (i < target.num_vars()) map[static_cast<std::size_t>(i)] = i;
    } else if (i == src_param) {
      if (target.has_param()) map[static_cast<std::size_t>(i)] = target.param_index();
    } else {
      int k = i - src_aux0;
      if (k < target.num_aux()) map[static_cast<std::size_t>(i)] = target.aux_index(k);
    }
  }
  std::vector<Term> acc;
  acc.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (int i = 0; i < ring_.total_vars(); ++i) {
      int e = t.mono[i];
      if (!e) continue;
      int j = map[static_cast<std::size_t>(i)];
      if (j < 0)
        throw DomainError("variable " + ring_.var_name(i) + " has no counterpart in target ring");
      m.set(j, e);
    }
    acc.push_back({t.coeff, m});
  }
  return from_terms(target, std::move(acc));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  Rational inv = 1 / leading_coeff();
  return scale(inv);
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (leading_coeff() < 0) factor = -factor;
  if (factor == 1) return *this;
  return scale(factor);
}

bool Polynomial::is_canonical() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff == 0) return false;
    if (i > 0 && ring_.compare(terms_[i - 1].mono, terms_[i].mono) <= 0) return false;
  }
  return true;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!(ring_ == other.ring_) || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != other.terms_[i].coeff || !(terms_[i].mono == other.terms_[i].mono))
      return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (int i = 0; i < ring_.total_vars(); ++i) {
      int e = t.mono[i];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_.var_name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const PolyRing& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = get() == '-' ? -1 : 1;
      skip_ws();
    }
    terms.push_back(parse_term(sign));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      get();
      skip_ws();
      terms.push_back(parse_term(c == '-' ? -1 : 1));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  std::string_view text_;
  const PolyRing& ring_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  long small_nat(long limit, const char* what) {
    std::size_t start = pos_;
    std::string d = digits();
    if (d.size() > 9 || std::stol(d) > limit) throw ParseError(std::string(what) + " overflow", start);
    return std::stol(d);
  }

  Term parse_term(int sign) {
    Term term{sign, Monomial()};
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num(digits());
      Integer den = 1;
      skip_ws();
      if (peek() == '/') {
        get();
        std::size_t at = pos_;
        den = Integer(digits());
        if (den == 0) throw ParseError("zero denominator", at);
      }
      Rational c(num, den);
      c.canonicalize();
      term.coeff *= c;
    } else {
      parse_factor(term.mono);
    }
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      get();
      parse_factor(term.mono);
    }
    return term;
  }

  void parse_factor(Monomial& mono) {
    skip_ws();
    std::size_t start = pos_;
    int var;
    if (peek() == 'x') {
      get();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected variable index after 'x'", pos_);
      long idx = small_nat(1000000, "variable index");
      if (idx >= ring_.num_vars())
        throw ParseError("unknown variable x" + std::to_string(idx), start);
      var = static_cast<int>(idx);
    } else if (peek() == 't') {
      get();
      if (!ring_.has_param()) throw ParseError("unknown variable t", start);
      var = ring_.param_index();
    } else if (at_end()) {
      throw ParseError("unexpected end of input", pos_);
    } else {
      throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
    }
    long e = 1;
    skip_ws();
    if (peek() == '^') {
      get();
      e = small_nat(std::numeric_limits<std::uint16_t>::max(), "exponent");
    }
    long total = mono[var] + e;
    if (total > std::numeric_limits<std::uint16_t>::max())
      throw ParseError("exponent overflow", start);
    mono.set(var, static_cast<int>(total));
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolyRing& ring) {
  return Parser(text, ring).parse();
}

}  // namespace hilbkit
