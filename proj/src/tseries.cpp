#include "nomaps/tseries.hpp"

#include <algorithm>
#include <sstream>

namespace nomaps {

namespace {

const MPoly& zero_poly() {
  static const MPoly z;
  return z;
}

int sat(long x) {
  if (x >= TSeries::kExact) return TSeries::kExact;
  return int(x);
}

}  // namespace

TSeries::TSeries(int min_order, std::vector<MPoly> coeffs, int max_order)
    : min_order_(min_order), max_order_(sat(max_order)), coeffs_(std::move(coeffs)) {
  if (max_order_ < min_order_) throw WindowError("TSeries: empty validity window");
  normalize();
}

void TSeries::normalize() {
  const long keep = long(max_order_) - min_order_ + 1;
  if (long(coeffs_.size()) > keep) coeffs_.resize(std::size_t(keep));
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

TSeries TSeries::zero(int max_order) { return TSeries(max_order, {}, max_order); }

TSeries TSeries::monomial(const MPoly& c, int k, int max_order) {
  if (k > max_order) return zero(max_order);
  return TSeries(k, {c}, max_order);
}

int TSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return min_order_ + int(i);
  }
  return exact() ? kExact : max_order_ + 1;
}

const MPoly& TSeries::coeff(int k) const {
  if (k > max_order_) {
    throw WindowError("TSeries: coefficient t^" + std::to_string(k) + " outside window ending at t^" +
                      std::to_string(max_order_));
  }
  if (k < min_order_ || k - min_order_ >= int(coeffs_.size())) return zero_poly();
  return coeffs_[std::size_t(k - min_order_)];
}

bool TSeries::is_zero_on_window() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MPoly& p) { return p.is_zero(); });
}

std::optional<TSeries::Location> TSeries::first_nonzero() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const auto& term = coeffs_[i].terms().front();
    return Location{min_order_ + int(i), MPoly::unpack(term.key), term.coeff};
  }
  return std::nullopt;
}

TSeries& TSeries::operator+=(const TSeries& o) {
  const int lo = std::min(min_order_, o.min_order_);
  const int hi = std::min(max_order_, o.max_order_);
  if (hi < lo) throw WindowError("TSeries: disjoint windows in sum");
  const int top = std::min<long>(hi, std::max(min_order_ + long(coeffs_.size()),
                                              o.min_order_ + long(o.coeffs_.size())) - 1);
  std::vector<MPoly> out(std::size_t(std::max(0, top - lo + 1)));
  for (int k = lo; k <= top; ++k) {
    MPoly c = (k >= min_order_ && k - min_order_ < int(coeffs_.size())) ? coeffs_[std::size_t(k - min_order_)]
                                                                          : MPoly{};
    if (k >= o.min_order_ && k - o.min_order_ < int(o.coeffs_.size())) c += o.coeffs_[std::size_t(k - o.min_order_)];
    out[std::size_t(k - lo)] = std::move(c);
  }
  *this = TSeries(lo, std::move(out), hi);
  return *this;
}

TSeries TSeries::operator-() const { return scaled(-1); }

TSeries& TSeries::operator-=(const TSeries& o) { return *this += -o; }

TSeries TSeries::scaled(const Rational& c) const {
  TSeries r = *this;
  for (auto& p : r.coeffs_) p *= c;
  r.normalize();
  return r;
}

TSeries TSeries::times(const MPoly& c) const {
  TSeries r = *this;
  for (auto& p : r.coeffs_) p = p * c;
  r.normalize();
  return r;
}

TSeries TSeries::divided_by(const Rational& c) const {
  TSeries r = *this;
  for (auto& p : r.coeffs_) p = p.divided_by(c);
  return r;
}

TSeries TSeries::mul_t(int k) const {
  TSeries r = *this;
  r.min_order_ += k;
  if (!exact()) r.max_order_ = sat(long(max_order_) + k);
  return r;
}

TSeries TSeries::dt() const {
  if (max_order_ < min_order_) throw WindowError("TSeries: d/dt of an empty window");
  std::vector<MPoly> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * Rational(min_order_ + long(i));
  const int top = exact() ? kExact : max_order_ - 1;
  if (top < min_order_ - 1) throw WindowError("TSeries: d/dt leaves an empty window");
  return TSeries(min_order_ - 1, std::move(out), top);
}

TSeries TSeries::t_dt() const {
  TSeries r = *this;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] *= Rational(min_order_ + long(i));
  r.normalize();
  return r;
}

TSeries TSeries::divided_by_var(Var x) const {
  TSeries r = *this;
  for (auto& p : r.coeffs_) p = p.divided_by_var(x);
  return r;
}

TSeries TSeries::map_coeffs(const std::function<MPoly(const MPoly&)>& f) const {
  TSeries r = *this;
  for (auto& p : r.coeffs_) p = f(p);
  r.normalize();
  return r;
}

TSeries TSeries::truncated(int max_order) const {
  if (max_order > max_order_) throw WindowError("TSeries: truncation beyond window");
  if (max_order < min_order_) return zero(max_order);
  return TSeries(min_order_, coeffs_, max_order);
}

int TSeries::last_nonzero() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (!coeffs_[i].is_zero()) return min_order_ + int(i);
  }
  return min_order_ - 1;
}

bool TSeries::operator==(const TSeries& o) const {
  if (max_order_ != o.max_order_) return false;
  const int lo = std::min(min_order_, o.min_order_);
  const int hi = std::max(last_nonzero(), o.last_nonzero());
  for (int k = lo; k <= hi; ++k) {
    if (!(coeff(k) == o.coeff(k))) return false;
  }
  return true;
}

std::string TSeries::str() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (any) os << " + ";
    os << '(' << coeffs_[i].str() << ")*t^" << (min_order_ + int(i));
    any = true;
  }
  if (!any) os << '0';
  if (!exact()) os << " + O(t^" << (max_order_ + 1) << ')';
  return os.str();
}

TSeries operator*(const TSeries& a, const TSeries& b) { return mul(a, b, Exec::parallel); }

TSeries mul(const TSeries& a, const TSeries& b, Exec exec) {
  const int va = a.valuation(), vb = b.valuation();
  const bool a_zero = va > a.max_order() || va >= TSeries::kExact;
  const bool b_zero = vb > b.max_order() || vb >= TSeries::kExact;
  if ((a_zero && a.exact()) || (b_zero && b.exact())) return TSeries();
  long top_l = TSeries::kExact;
  if (!a.exact()) top_l = std::min(top_l, long(a.max_order()) + vb);
  if (!b.exact()) top_l = std::min(top_l, long(b.max_order()) + va);
  const int top = sat(top_l);
  if (a_zero || b_zero) {
    if (top >= TSeries::kExact) return TSeries();
    return TSeries::zero(top);
  }
  const int lo = va + vb;
  const int hi = std::min<long>(top, long(a.last_nonzero()) + b.last_nonzero());
  const int count = std::max(0, hi - lo + 1);
  std::vector<MPoly> out(static_cast<std::size_t>(count));

  auto kernel = [&](int k) {
    std::vector<std::pair<const MPoly*, const MPoly*>> pairs;
    for (int i = va; i <= k - vb; ++i) {
      const MPoly& x = a.coeff(i);
      if (x.is_zero()) continue;
      const MPoly& y = b.coeff(k - i);
      if (y.is_zero()) continue;
      pairs.emplace_back(&x, &y);
    }
    out[std::size_t(k - lo)] = MPoly::sum_of_products(pairs);
  };

  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int k = lo; k <= hi; ++k) kernel(k);
  } else {
    for (int k = lo; k <= hi; ++k) kernel(k);
  }
  if (top < lo) return TSeries::zero(top);
  return TSeries(lo, std::move(out), top);
}

}  // namespace nomaps
