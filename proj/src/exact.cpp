#include "symdyn/exact.hpp"

#include <algorithm>
#include <cctype>

#include "symdyn/error.hpp"

namespace symdyn {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw DomainError("malformed rational '" + text + "'");
  Integer n(num[0] == '+' ? num.substr(1) : num, 10);
  Integer d(den, 10);
  if (d == 0) throw DomainError("rational with zero denominator '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) {
    Rational q = c;
    q.canonicalize();
    terms_.emplace(Monomial{}, q);
  }
}

Polynomial Polynomial::variable(std::int64_t g) {
  Polynomial p;
  p.terms_.emplace(Monomial{{g, 1u}}, Rational(1));
  return p;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) {
    std::uint32_t s = 0;
    for (const auto& ve : m) s += ve.second;
    d = std::max(d, s);
  }
  return d;
}

std::vector<std::int64_t> Polynomial::variables() const {
  std::vector<std::int64_t> out;
  for (const auto& [m, c] : terms_)
    for (const auto& ve : m) out.push_back(ve.first);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  Rational q = c;
  q.canonicalize();
  // Sort, merge repeated variables and drop zero exponents.
  std::map<std::int64_t, std::uint32_t> merged;
  for (const auto& [v, e] : m) merged[v] += e;
  Monomial key;
  for (const auto& [v, e] : merged)
    if (e) key.emplace_back(v, e);
  auto [it, inserted] = terms_.emplace(key, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(multiply(ma, mb), ca * cb);
  terms_ = std::move(out.terms_);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::shift_variables(std::int64_t k) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    for (auto& ve : s) ve.first += k;
    out.terms_.emplace(std::move(s), c);
  }
  return out;
}

Polynomial Polynomial::substitute(const std::map<std::int64_t, Polynomial>& subs) const {
  Polynomial out;
  // Cache powers of substituted variables.
  std::map<std::pair<std::int64_t, std::uint32_t>, Polynomial> powers;
  for (const auto& [m, c] : terms_) {
    Polynomial term(c);
    Monomial kept;
    for (const auto& [g, e] : m) {
      auto it = subs.find(g);
      if (it == subs.end()) {
        kept.emplace_back(g, e);
        continue;
      }
      auto key = std::make_pair(g, e);
      auto pit = powers.find(key);
      if (pit == powers.end()) pit = powers.emplace(key, it->second.pow(e)).first;
      term *= pit->second;
    }
    if (!kept.empty()) {
      Polynomial k;
      k.terms_.emplace(std::move(kept), Rational(1));
      term *= k;
    }
    out += term;
  }
  return out;
}

Rational Polynomial::evaluate(const std::function<Rational(std::int64_t)>& value) const {
  std::map<std::int64_t, Rational> cache;
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [g, e] : m) {
      auto it = cache.find(g);
      if (it == cache.end()) it = cache.emplace(g, value(g)).first;
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
      term *= p;
    }
    sum += term;
  }
  return sum;
}

Rational Polynomial::evaluate(const std::map<std::int64_t, Rational>& values) const {
  return evaluate([&](std::int64_t g) {
    auto it = values.find(g);
    if (it == values.end()) throw DomainError("evaluate: no value for t" + std::to_string(g));
    return it->second;
  });
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string vars;
    for (const auto& [g, e] : m) {
      if (!vars.empty()) vars += "*";
      vars += "t" + std::to_string(g);
      if (e != 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += vars;
    else
      out += mag.get_str() + "*" + vars;
  }
  return out;
}

Polynomial parse_polynomial(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw DomainError("empty polynomial");
  Polynomial out;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) -> void {
    throw DomainError("polynomial '" + text + "': " + what + " at offset " + std::to_string(i));
  };
  auto read_digits = [&]() {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };
  bool first = true;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coef = 1;
    Monomial m;
    bool have_factor = false;
    while (true) {
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::string num = read_digits();
        if (i < s.size() && s[i] == '/') {
          ++i;
          std::string den = read_digits();
          if (den.empty()) fail("missing denominator");
          num += "/" + den;
        }
        coef *= parse_rational(num);
      } else if (i < s.size() && s[i] == 't') {
        ++i;
        bool neg_index = false;
        if (i < s.size() && s[i] == '-') {
          neg_index = true;
          ++i;
        }
        std::string idx = read_digits();
        if (idx.empty()) fail("missing variable index");
        std::int64_t g = std::stoll(idx);
        if (neg_index) g = -g;
        std::uint32_t e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          std::string ex = read_digits();
          if (ex.empty()) fail("missing exponent");
          e = static_cast<std::uint32_t>(std::stoul(ex));
        }
        if (e > 0) m = multiply(m, Monomial{{g, e}});
      } else {
        fail("expected a coefficient or variable");
      }
      have_factor = true;
      if (i < s.size() && s[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    out.add_term(m, negative ? Rational(-coef) : coef);
  }
  return out;
}

}  // namespace symdyn
