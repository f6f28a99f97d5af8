#include "nomaps/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace nomaps {

namespace {

int exponent_of(const MPoly::Exponent& e, Var x) {
  switch (x) {
    case Var::u: return e.u;
    case Var::z: return e.z;
    case Var::v: return e.v;
  }
  return 0;
}

int& exponent_of(MPoly::Exponent& e, Var x) {
  switch (x) {
    case Var::u: return e.u;
    case Var::z: return e.z;
    case Var::v: return e.v;
  }
  return e.u;
}

MPoly::Key pack_exp(const MPoly::Exponent& e) { return MPoly::pack(e.u, e.z, e.v); }

// Merges two canonical term lists with sign applied to the second.
std::vector<MPoly::Term> merge(const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b,
                               bool negate_b) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].key < b[j].key)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].key < a[i].key) {
      out.push_back({b[j].key, negate_b ? Rational(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rational c = negate_b ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].key, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_.push_back({0, c});
}

MPoly::Key MPoly::pack(int eu, int ez, int ev) {
  if (eu < 0 || ez < 0 || ev < 0) throw std::invalid_argument("MPoly: negative exponent");
  const int d = eu + ez + ev;
  if (d > kMaxExponent) throw std::overflow_error("MPoly: exponent overflow");
  return (Key(d) << 48) | (Key(eu) << 32) | (Key(ez) << 16) | Key(ev);
}

MPoly::Exponent MPoly::unpack(Key k) {
  return {int((k >> 32) & 0xFFFF), int((k >> 16) & 0xFFFF), int(k & 0xFFFF)};
}

MPoly MPoly::monomial(const Rational& c, int eu, int ez, int ev) {
  MPoly p;
  if (c != 0) p.terms_.push_back({pack(eu, ez, ev), c});
  return p;
}

MPoly MPoly::var(Var x) {
  switch (x) {
    case Var::u: return monomial(1, 1, 0, 0);
    case Var::z: return monomial(1, 0, 1, 0);
    case Var::v: return monomial(1, 0, 0, 1);
  }
  return {};
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
  MPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().key == t.key) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Rational MPoly::coeff(int eu, int ez, int ev) const {
  if (eu < 0 || ez < 0 || ev < 0) return 0;
  const Key k = pack(eu, ez, ev);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, Key key) { return t.key < key; });
  if (it != terms_.end() && it->key == k) return it->coeff;
  return 0;
}

int MPoly::degree() const {
  if (terms_.empty()) return -1;
  return int(terms_.back().key >> 48);
}

int MPoly::degree_in(Var x) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, exponent_of(unpack(t.key), x));
  return d;
}

bool MPoly::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return int(t.key >> 48) == d; });
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  const std::pair<const MPoly*, const MPoly*> one{&a, &b};
  return MPoly::sum_of_products({&one, 1});
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

bool MPoly::operator==(const MPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].key != o.terms_[i].key || terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

void MPoly::add_scaled(const MPoly& p, const Rational& c) {
  if (c == 0 || p.is_zero()) return;
  if (c == 1) {
    *this += p;
    return;
  }
  *this += p * c;
}

MPoly MPoly::times_monomial(const Rational& c, int eu, int ez, int ev) const {
  if (c == 0) return {};
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto e = unpack(t.key);
    out.push_back({pack(e.u + eu, e.z + ez, e.v + ev), t.coeff * c});
  }
  // Multiplying by a monomial preserves graded-lex order.
  MPoly p;
  p.terms_ = std::move(out);
  return p;
}

MPoly MPoly::divided_by(const Rational& c) const {
  if (c == 0) throw std::domain_error("MPoly: division by zero");
  MPoly p = *this;
  for (auto& t : p.terms_) t.coeff /= c;
  return p;
}

MPoly MPoly::shift(Var x, long delta) const {
  if (delta == 0) return *this;
  std::vector<Term> out;
  const Integer d(delta);
  for (const auto& t : terms_) {
    const auto e = unpack(t.key);
    const int a = exponent_of(e, x);
    Integer dpow = 1;  // delta^(a-k), built from k = a downwards
    for (int k = a; k >= 0; --k) {
      Exponent f = e;
      exponent_of(f, x) = k;
      out.push_back({pack_exp(f), t.coeff * Rational(binomial(a, k) * dpow)});
      dpow *= d;
    }
  }
  return from_terms(std::move(out));
}

MPoly MPoly::swapped(Var a, Var b) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto e = unpack(t.key);
    std::swap(exponent_of(e, a), exponent_of(e, b));
    out.push_back({pack_exp(e), t.coeff});
  }
  return from_terms(std::move(out));
}

bool MPoly::divisible_by_var(Var x) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [x](const Term& t) { return exponent_of(unpack(t.key), x) > 0; });
}

MPoly MPoly::divided_by_var(Var x) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto e = unpack(t.key);
    if (exponent_of(e, x) == 0) throw std::domain_error("MPoly: not divisible by variable: " + str());
    exponent_of(e, x) -= 1;
    out.push_back({pack_exp(e), t.coeff});
  }
  return from_terms(std::move(out));
}

MPoly MPoly::coefficient_of(Var x, int e) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    auto f = unpack(t.key);
    if (exponent_of(f, x) != e) continue;
    exponent_of(f, x) = 0;
    out.push_back({pack_exp(f), t.coeff});
  }
  return from_terms(std::move(out));
}

Rational MPoly::eval(const Rational& u, const Rational& z, const Rational& v) const {
  Rational s = 0;
  for (const auto& t : terms_) {
    const auto e = unpack(t.key);
    Rational m = t.coeff;
    for (int i = 0; i < e.u; ++i) m *= u;
    for (int i = 0; i < e.z; ++i) m *= z;
    for (int i = 0; i < e.v; ++i) m *= v;
    s += m;
  }
  return s;
}

MPoly MPoly::sum_of_products(std::span<const std::pair<const MPoly*, const MPoly*>> pairs) {
  int mu = -1, mz = -1, mv = -1;
  std::size_t work = 0;
  for (const auto& [a, b] : pairs) {
    if (a->is_zero() || b->is_zero()) continue;
    mu = std::max(mu, a->degree_in(Var::u) + b->degree_in(Var::u));
    mz = std::max(mz, a->degree_in(Var::z) + b->degree_in(Var::z));
    mv = std::max(mv, a->degree_in(Var::v) + b->degree_in(Var::v));
    work += a->size() * b->size();
  }
  if (work == 0) return {};

  const std::size_t nz = std::size_t(mz) + 1, nv = std::size_t(mv) + 1;
  const std::size_t dense = (std::size_t(mu) + 1) * nz * nv;
  mpq_class prod;
  std::vector<Term> out;

  if (dense <= (std::size_t(1) << 18)) {
    std::vector<mpq_class> acc(dense);
    std::vector<char> touched(dense, 0);
    for (const auto& [a, b] : pairs) {
      for (const auto& x : a->terms_) {
        const auto ex = unpack(x.key);
        for (const auto& y : b->terms_) {
          const auto ey = unpack(y.key);
          const std::size_t idx = (std::size_t(ex.u + ey.u) * nz + std::size_t(ex.z + ey.z)) * nv +
                                  std::size_t(ex.v + ey.v);
          mpq_mul(prod.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
          mpq_add(acc[idx].get_mpq_t(), acc[idx].get_mpq_t(), prod.get_mpq_t());
          touched[idx] = 1;
        }
      }
    }
    for (std::size_t idx = 0; idx < dense; ++idx) {
      if (!touched[idx] || acc[idx] == 0) continue;
      const int ev = int(idx % nv), ez = int((idx / nv) % nz), eu = int(idx / (nv * nz));
      out.push_back({pack(eu, ez, ev), std::move(acc[idx])});
    }
  } else {
    std::unordered_map<Key, mpq_class> acc;
    for (const auto& [a, b] : pairs) {
      for (const auto& x : a->terms_) {
        const auto ex = unpack(x.key);
        for (const auto& y : b->terms_) {
          const auto ey = unpack(y.key);
          mpq_mul(prod.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
          auto& slot = acc[pack(ex.u + ey.u, ex.z + ey.z, ex.v + ey.v)];
          mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), prod.get_mpq_t());
        }
      }
    }
    for (auto& [k, c] : acc) {
      if (c != 0) out.push_back({k, std::move(c)});
    }
  }
  return from_terms(std::move(out));
}

std::string monomial_str(MPoly::Exponent e) {
  std::string s;
  auto add = [&s](const char* name, int k) {
    if (k == 0) return;
    if (!s.empty()) s += '*';
    s += name;
    if (k > 1) s += '^' + std::to_string(k);
  };
  add("u", e.u);
  add("z", e.z);
  add("v", e.v);
  return s.empty() ? "1" : s;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto e = unpack(it->key);
    Rational c = it->coeff;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    if (c < 0) c = -c;
    const std::string m = monomial_str(e);
    if (m == "1") {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << '*';
      os << m;
    }
    first = false;
  }
  return os.str();
}

}  // namespace nomaps
