#include "hgmono/zeta_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hgmono/errors.hpp"

namespace hgm {

int generator_index_of_g(int k) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("g_k is only defined for odd k >= 3");
  return (k - 1) / 2;
}

std::string generator_name(int index) {
  if (index == 0) return "lambda";
  return "g" + std::to_string(2 * index + 1);
}

int generator_index(const std::string& name) {
  if (name == "lambda") return 0;
  if (name.size() >= 2 && name[0] == 'g') {
    try {
      std::size_t used = 0;
      int k = std::stoi(name.substr(1), &used);
      if (used == name.size() - 1 && k >= 3 && k % 2 == 1) return generator_index_of_g(k);
    } catch (const std::exception&) {
    }
  }
  throw InvalidInput("unknown generator '" + name + "'");
}

std::complex<double> GeneratorValues::at(int index) const {
  if (index < 0 || static_cast<std::size_t>(index) >= values.size())
    throw std::out_of_range("no numeric value for generator " + generator_name(index));
  return values[static_cast<std::size_t>(index)];
}

namespace {

int degree_of(const ZetaElem::Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

ZetaElem::Monomial mono_mul(const ZetaElem::Monomial& x, const ZetaElem::Monomial& y) {
  ZetaElem::Monomial r(std::max(x.size(), y.size()), 0);
  for (std::size_t i = 0; i < x.size(); ++i) r[i] += x[i];
  for (std::size_t i = 0; i < y.size(); ++i) r[i] += y[i];
  return r;
}

void add_term(ZetaElem::TermMap& t, const ZetaElem::Monomial& m, const BigRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

}  // namespace

bool ZetaElem::MonomialOrder::operator()(const Monomial& x, const Monomial& y) const {
  int dx = degree_of(x), dy = degree_of(y);
  if (dx != dy) return dx < dy;
  std::size_t n = std::max(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    int ex = i < x.size() ? x[i] : 0;
    int ey = i < y.size() ? y[i] : 0;
    if (ex != ey) return ex > ey;
  }
  return false;
}

ZetaElem::ZetaElem(const BigRational& r) {
  if (!r.is_zero()) terms_.emplace(Monomial{}, r);
}

ZetaElem ZetaElem::generator(int index) {
  if (index < 0) throw std::invalid_argument("negative generator index");
  Monomial m(static_cast<std::size_t>(index) + 1, 0);
  m.back() = 1;
  ZetaElem z;
  z.terms_.emplace(std::move(m), BigRational(1));
  return z;
}

ZetaElem ZetaElem::from_terms(TermMap terms) {
  ZetaElem z;
  for (auto& [m, c] : terms) {
    Monomial trimmed = m;
    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
    for (int e : trimmed)
      if (e < 0) throw InvalidInput("negative exponent in monomial");
    add_term(z.terms_, trimmed, c);
  }
  return z;
}

bool ZetaElem::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::optional<BigRational> ZetaElem::rational_value() const {
  if (terms_.empty()) return BigRational(0);
  if (is_rational()) return terms_.begin()->second;
  return std::nullopt;
}

BigRational ZetaElem::coeff(const Monomial& mono) const {
  Monomial m = mono;
  while (!m.empty() && m.back() == 0) m.pop_back();
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRational(0) : it->second;
}

int ZetaElem::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, degree_of(m));
  return d;
}

std::vector<int> ZetaElem::support() const {
  std::vector<int> out;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) out.push_back(static_cast<int>(i));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ZetaElem& ZetaElem::operator+=(const ZetaElem& o) {
  for (const auto& [m, c] : o.terms_) add_term(terms_, m, c);
  return *this;
}

ZetaElem& ZetaElem::operator-=(const ZetaElem& o) {
  for (const auto& [m, c] : o.terms_) add_term(terms_, m, -c);
  return *this;
}

ZetaElem operator*(const ZetaElem& a, const ZetaElem& b) {
  ZetaElem r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) add_term(r.terms_, mono_mul(ma, mb), ca * cb);
  return r;
}

ZetaElem operator/(const ZetaElem& a, const ZetaElem& b) {
  auto r = b.rational_value();
  if (!r) throw NonRationalDeterminant("division by a non-rational element " + b.str());
  if (r->is_zero()) throw std::domain_error("ZetaElem: division by zero");
  ZetaElem out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, c / *r);
  return out;
}

ZetaElem ZetaElem::operator-() const {
  ZetaElem r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

std::complex<double> ZetaElem::evaluate(const GeneratorValues& gv) const {
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.to_double();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) t *= gv.at(static_cast<int>(i));
    sum += t;
  }
  return sum;
}

std::string ZetaElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = c.sign() < 0;
    BigRational a = neg ? -c : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool unit = a == BigRational(1);
    if (!unit || m.empty()) {
      os << a.str();
      if (!m.empty()) os << '*';
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!first_factor) os << '*';
      first_factor = false;
      os << generator_name(static_cast<int>(i));
      if (m[i] > 1) os << '^' << m[i];
    }
  }
  return os.str();
}

ZetaElem zeta_symbol(int k) {
  if (k < 1) throw std::invalid_argument("zeta_symbol: k must be >= 1");
  if (k == 1) return ZetaElem();
  if (k % 2 == 0) return ZetaElem(zeta_even_ratio(k));
  return ZetaElem::g(k);
}

}  // namespace hgm
