#include "conelab/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "conelab/errors.hpp"

namespace conelab {

namespace {

using Coeffs = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("Hilbert series coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("Hilbert series coefficient overflow");
  return r;
}

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs add(Coeffs a, const Coeffs& b, std::int64_t sign = 1) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = checked_add(a[i], checked_mul(sign, b[i]));
  trim(a);
  return a;
}

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
  trim(out);
  return out;
}

Coeffs shift(const Coeffs& a, std::uint64_t by) {
  if (a.empty()) return {};
  Coeffs out(by, 0);
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

Coeffs one_minus_t_pow(std::uint32_t w) {
  Coeffs c(w + 1, 0);
  c[0] = 1;
  c[w] -= 1;
  return c;
}

Coeffs denominator_product(const std::vector<std::uint32_t>& ws) {
  Coeffs d{1};
  for (auto w : ws) d = multiply(d, one_minus_t_pow(w));
  return d;
}

/// Exact division by (1 - t^w); empty optional if it does not divide.
std::optional<Coeffs> divide_one_minus(const Coeffs& a, std::uint32_t w) {
  // a = (1 - t^w) q  <=>  q_i = a_i + q_{i-w}.
  if (a.empty()) return Coeffs{};
  if (a.size() <= w) return std::nullopt;
  Coeffs q(a.size() - w, 0);
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = checked_add(a[i], i >= w ? q[i - w] : 0);
  // The top w coefficients of a must equal -q_{i-w}.
  for (std::size_t i = q.size(); i < a.size(); ++i) {
    const std::int64_t prev = i >= w && i - w < q.size() ? q[i - w] : 0;
    if (checked_add(a[i], prev) != 0) return std::nullopt;
  }
  return q;
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept)
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(g));
  }
  gens = std::move(kept);
}

Coeffs numerator(std::vector<Monomial> gens, std::span<const std::uint32_t> weights) {
  minimalize(gens);
  if (gens.empty()) return {1};
  const std::size_t n = weights.size();
  std::vector<std::size_t> uses(n, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i)
      if (g[i] > 0) ++uses[i];
  const auto pivot = static_cast<std::size_t>(std::max_element(uses.begin(), uses.end()) - uses.begin());
  if (uses[pivot] <= 1) {
    // Pairwise coprime generators.
    Coeffs c{1};
    for (const auto& g : gens) c = multiply(c, one_minus_t_pow(static_cast<std::uint32_t>(g.weighted_degree(weights))));
    return c;
  }
  // N(M) = N(M + (x)) + t^{w(x)} N(M : x).
  std::vector<Monomial> with_var{Monomial::variable(n, pivot)};
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    if (g[pivot] == 0) with_var.push_back(g);
    Monomial q = g;
    if (q[pivot] > 0) q.set(pivot, q[pivot] - 1);
    colon.push_back(std::move(q));
  }
  return add(numerator(std::move(with_var), weights), shift(numerator(std::move(colon), weights), weights[pivot]));
}

std::string t_power(std::uint64_t e) {
  if (e == 0) return "1";
  if (e == 1) return "t";
  return "t^" + std::to_string(e);
}

}  // namespace

std::vector<std::int64_t> monomial_hilbert_numerator(std::vector<Monomial> generators,
                                                     std::span<const std::uint32_t> weights) {
  for (const auto& g : generators)
    if (g.size() != weights.size()) throw DomainError("weight vector length does not match the ring");
  for (auto w : weights)
    if (w == 0) throw DomainError("Hilbert series weights must be positive");
  for (const auto& g : generators)
    if (g.is_one()) return {};
  return numerator(std::move(generators), weights);
}

HilbertSeries::HilbertSeries(std::vector<std::int64_t> numerator, std::vector<std::uint32_t> denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  trim(numerator_);
  for (auto w : denominator_)
    if (w == 0) throw DomainError("Hilbert series weights must be positive");
  std::sort(denominator_.begin(), denominator_.end());
}

HilbertSeries HilbertSeries::simplified() const {
  Coeffs num = numerator_;
  std::vector<std::uint32_t> den;
  for (auto w : denominator_) {
    if (auto q = divide_one_minus(num, w))
      num = std::move(*q);
    else
      den.push_back(w);
  }
  if (num.empty()) den.clear();
  return HilbertSeries(std::move(num), std::move(den));
}

std::int64_t HilbertSeries::coefficient(std::uint64_t degree) const {
  // Expand 1/prod(1 - t^w) up to `degree`.
  Coeffs series(degree + 1, 0);
  series[0] = 1;
  for (auto w : denominator_)
    for (std::size_t i = w; i <= degree; ++i) series[i] = checked_add(series[i], series[i - w]);
  std::int64_t c = 0;
  for (std::size_t i = 0; i < numerator_.size() && i <= degree; ++i)
    c = checked_add(c, checked_mul(numerator_[i], series[degree - i]));
  return c;
}

std::optional<std::int64_t> HilbertSeries::total_length() const {
  const HilbertSeries s = simplified();
  if (!s.denominator_.empty()) return std::nullopt;
  std::int64_t sum = 0;
  for (auto c : s.numerator_) sum = checked_add(sum, c);
  return sum;
}

HilbertSeries HilbertSeries::shifted(std::uint64_t by) const {
  return HilbertSeries(shift(numerator_, by), denominator_);
}

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
  // Bring both to the common denominator lcm of the factor multisets.
  std::vector<std::uint32_t> common = a.denominator_;
  std::vector<std::uint32_t> extra_a;
  std::vector<std::uint32_t> rest = a.denominator_;
  for (auto w : b.denominator_) {
    auto it = std::find(rest.begin(), rest.end(), w);
    if (it != rest.end())
      rest.erase(it);
    else {
      common.push_back(w);
      extra_a.push_back(w);
    }
  }
  const Coeffs na = multiply(a.numerator_, denominator_product(extra_a));
  const Coeffs nb = multiply(b.numerator_, denominator_product(rest));
  return HilbertSeries(add(na, nb), common).simplified();
}

HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b) {
  Coeffs neg = b.numerator_;
  for (auto& c : neg) c = checked_mul(c, -1);
  return a + HilbertSeries(std::move(neg), b.denominator_);
}

bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
  return multiply(a.numerator_, denominator_product(b.denominator_)) ==
         multiply(b.numerator_, denominator_product(a.denominator_));
}

std::string HilbertSeries::to_string() const {
  const HilbertSeries s = simplified();
  std::ostringstream out;
  std::size_t nterms = 0;
  for (auto c : s.numerator_) nterms += c != 0;
  std::string num;
  if (nterms == 0) num = "0";
  for (std::size_t i = 0; i < s.numerator_.size(); ++i) {
    std::int64_t c = s.numerator_[i];
    if (c == 0) continue;
    if (num.empty()) {
      if (c < 0) num += "-";
    } else {
      num += c < 0 ? " - " : " + ";
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (i == 0)
      num += std::to_string(mag);
    else
      num += (mag == 1 ? "" : std::to_string(mag) + "*") + t_power(i);
  }
  if (s.denominator_.empty()) return num;
  if (nterms > 1) num = "(" + num + ")";
  out << num << "/";
  // Group equal factors as powers.
  std::string den;
  for (std::size_t i = 0; i < s.denominator_.size();) {
    std::size_t j = i;
    while (j < s.denominator_.size() && s.denominator_[j] == s.denominator_[i]) ++j;
    if (!den.empty()) den += "*";
    den += "(1 - " + t_power(s.denominator_[i]) + ")";
    if (j - i > 1) den += "^" + std::to_string(j - i);
    i = j;
  }
  out << den;
  return out.str();
}

}  // namespace conelab
