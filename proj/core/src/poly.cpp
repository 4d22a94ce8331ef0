#include "gstirling/poly.hpp"

#include <array>
#include <sstream>
#include <utility>

namespace gstirling {

const char* var_name(var v) {
  switch (v) {
    case var::a: return "a";
    case var::b: return "b";
    case var::x: return "x";
  }
  return "?";
}

unsigned monomial::degree(var v) const {
  switch (v) {
    case var::a: return deg_a;
    case var::b: return deg_b;
    case var::x: return deg_x;
  }
  return 0;
}

bool grlex_greater::operator()(const monomial& lhs, const monomial& rhs) const {
  const unsigned dl = lhs.total_degree();
  const unsigned dr = rhs.total_degree();
  if (dl != dr) return dl > dr;
  if (lhs.deg_a != rhs.deg_a) return lhs.deg_a > rhs.deg_a;
  if (lhs.deg_b != rhs.deg_b) return lhs.deg_b > rhs.deg_b;
  return lhs.deg_x > rhs.deg_x;
}

multipoly::multipoly(integer c) {
  if (c != 0) terms_.emplace(monomial{}, std::move(c));
}

multipoly::multipoly(long c) : multipoly(integer(c)) {}

multipoly multipoly::variable(var v) {
  monomial m;
  switch (v) {
    case var::a: m.deg_a = 1; break;
    case var::b: m.deg_b = 1; break;
    case var::x: m.deg_x = 1; break;
  }
  return term(m, 1);
}

multipoly multipoly::term(const monomial& m, integer c) {
  multipoly p;
  if (c != 0) p.terms_.emplace(m, std::move(c));
  return p;
}

integer multipoly::coeff(const monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? integer(0) : it->second;
}

unsigned multipoly::total_degree() const {
  // Canonical order puts the highest total degree first.
  return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

unsigned multipoly::degree(var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(v));
  return d;
}

bool multipoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.total_degree();
  for (const auto& [m, c] : terms_)
    if (m.total_degree() != d) return false;
  return true;
}

multipoly& multipoly::operator+=(const multipoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

multipoly& multipoly::operator-=(const multipoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

multipoly operator*(const multipoly& lhs, const multipoly& rhs) {
  multipoly out;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) {
      const monomial m = ml * mr;
      auto [it, inserted] = out.terms_.try_emplace(m, cl * cr);
      if (!inserted) {
        it->second += cl * cr;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

multipoly& multipoly::operator*=(const multipoly& rhs) {
  *this = *this * rhs;
  return *this;
}

multipoly& multipoly::operator*=(const integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

multipoly multipoly::operator-() const {
  multipoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

namespace {

rational rational_pow(const rational& base, unsigned e) {
  rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  // num and den were coprime, so their powers are too.
  return out;
}

}  // namespace

rational multipoly::eval(const std::map<var, rational>& at) const {
  for (var v : {var::a, var::b, var::x}) {
    if (degree(v) > 0 && !at.contains(v))
      throw missing_assignment(std::string("no value assigned to variable ") + var_name(v));
  }
  rational sum = 0;
  for (const auto& [m, c] : terms_) {
    rational term(c);
    if (m.deg_a > 0) term *= rational_pow(at.at(var::a), m.deg_a);
    if (m.deg_b > 0) term *= rational_pow(at.at(var::b), m.deg_b);
    if (m.deg_x > 0) term *= rational_pow(at.at(var::x), m.deg_x);
    sum += term;
  }
  return sum;
}

multipoly multipoly::exact_div(const integer& c) const {
  if (c == 0) throw divisor_zero("exact division by zero");
  multipoly out;
  for (const auto& [m, coeff] : terms_) {
    if (!mpz_divisible_p(coeff.get_mpz_t(), c.get_mpz_t()))
      throw not_divisible("coefficient " + coeff.get_str() + " not divisible by " + c.get_str());
    integer q;
    mpz_divexact(q.get_mpz_t(), coeff.get_mpz_t(), c.get_mpz_t());
    out.terms_.emplace(m, std::move(q));
  }
  return out;
}

multipoly multipoly::exact_div(var v, unsigned e) const {
  if (e == 0) return *this;
  multipoly out;
  for (const auto& [m, coeff] : terms_) {
    if (m.degree(v) < e)
      throw not_divisible(std::string("term has ") + var_name(v) + "-degree below " +
                          std::to_string(e));
    monomial q = m;
    switch (v) {
      case var::a: q.deg_a -= e; break;
      case var::b: q.deg_b -= e; break;
      case var::x: q.deg_x -= e; break;
    }
    out.terms_.emplace(q, coeff);
  }
  return out;
}

namespace {

void append_power(std::string& out, const char* name, unsigned e, bool& first_factor) {
  if (e == 0) return;
  if (!first_factor) out += '*';
  first_factor = false;
  out += name;
  if (e > 1) {
    out += '^';
    out += std::to_string(e);
  }
}

}  // namespace

std::string multipoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first_term = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first_term) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first_term = false;

    const integer mag = abs(c);
    const bool constant_term = m.total_degree() == 0;
    bool first_factor = true;
    if (mag != 1 || constant_term) {
      out += mag.get_str();
      first_factor = false;
    }
    append_power(out, "a", m.deg_a, first_factor);
    append_power(out, "b", m.deg_b, first_factor);
    append_power(out, "x", m.deg_x, first_factor);
  }
  return out;
}

std::string multipoly::json() const {
  std::string out = "[";
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += ',';
    first = false;
    out += "{\"a\":" + std::to_string(m.deg_a) + ",\"b\":" + std::to_string(m.deg_b) +
           ",\"x\":" + std::to_string(m.deg_x) + ",\"c\":\"" + c.get_str() + "\"}";
  }
  out += ']';
  return out;
}

namespace {

bool valid_integer_token(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

}  // namespace

rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer_token(num, true) ||
      (slash != std::string_view::npos && !valid_integer_token(den, false)))
    throw parse_error("malformed rational '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);

  integer n(std::string(num), 10);
  integer d = slash == std::string_view::npos ? integer(1) : integer(std::string(den), 10);
  if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  rational value(n, d);
  value.canonicalize();
  return value;
}

std::string rational_str(const rational& value) {
  return value.get_str();
}

}  // namespace gstirling
