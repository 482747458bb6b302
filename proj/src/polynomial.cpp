#include "knotsig/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace knotsig {

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending, int low_exponent2)
    : coeffs_(std::move(ascending)), low2_(low_exponent2) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  for (long v : ascending) coeffs_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, int degree) {
  std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) low2_ = 0;
}

mpz_class IntPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

mpz_class IntPolynomial::evaluate(const mpz_class& t) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<mpz_class> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long>(k));
  return IntPolynomial(std::move(d));
}

int IntPolynomial::strip_variable_powers() {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(k));
  return static_cast<int>(k);
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) r[k] += b.coeffs_[k];
  return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a) {
  std::vector<mpz_class> r = a.coeffs_;
  for (auto& c : r) c = -c;
  return IntPolynomial(std::move(r), a.low2_);
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial operator*(const mpz_class& s, const IntPolynomial& a) {
  std::vector<mpz_class> r = a.coeffs_;
  for (auto& c : r) c *= s;
  return IntPolynomial(std::move(r), a.low2_);
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    // exponent in halves: low2_ + 2k
    int e2 = low2_ + 2 * k;
    bool unit_coeff = (mag == 1) && e2 != 0;
    if (!unit_coeff) os << mag.get_str();
    if (e2 != 0) {
      os << var;
      if (e2 != 2) {
        os << "^";
        if (e2 % 2 == 0) {
          os << (e2 / 2 < 0 ? "(" + std::to_string(e2 / 2) + ")" : std::to_string(e2 / 2));
        } else {
          os << "(" << e2 << "/2)";
        }
      }
    }
  }
  return os.str();
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InternalError("polynomial division by zero");
  std::vector<mpz_class> rem = a.coefficients();
  const auto& bc = b.coefficients();
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    throw InternalError("inexact polynomial division");
  }
  std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    mpz_class& top = rem[static_cast<std::size_t>(k + b.degree())];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), bc.back().get_mpz_t()))
      throw InternalError("inexact polynomial division");
    mpz_class f = top / bc.back();
    q[static_cast<std::size_t>(k)] = f;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= f * bc[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw InternalError("inexact polynomial division");
  return IntPolynomial(std::move(q));
}

IntPolynomial remainder_monic(const IntPolynomial& a, const IntPolynomial& monic) {
  if (monic.is_zero() || monic.leading() != 1) throw InternalError("remainder_monic needs a monic divisor");
  std::vector<mpz_class> rem = a.coefficients();
  const auto& mc = monic.coefficients();
  const int d = monic.degree();
  for (int k = static_cast<int>(rem.size()) - 1; k >= d; --k) {
    mpz_class f = rem[static_cast<std::size_t>(k)];
    if (f == 0) continue;
    for (int j = 0; j <= d; ++j) rem[static_cast<std::size_t>(k - d + j)] -= f * mc[static_cast<std::size_t>(j)];
  }
  return IntPolynomial(std::move(rem));
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) {
  QPolynomial q, r;
  divmod(QPolynomial::from(a), QPolynomial::from(b), q, r);
  return r.is_zero();
}

int totient(int m) {
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const IntPolynomial& cyclotomic_polynomial(int m) {
  static std::mutex mu;
  static std::map<int, IntPolynomial> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  // t^m - 1 = prod_{d | m} Phi_d
  IntPolynomial p = IntPolynomial::monomial(1, m) - IntPolynomial{1};
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto it = cache.find(d);
    if (it == cache.end()) {
      // Recursion would re-lock; build bottom-up instead.
      IntPolynomial pd = IntPolynomial::monomial(1, d) - IntPolynomial{1};
      for (int e = 1; e < d; ++e)
        if (d % e == 0) pd = divide_exact(pd, cache.at(e));
      it = cache.emplace(d, pd).first;
    }
    p = divide_exact(p, it->second);
  }
  return cache.emplace(m, p).first->second;
}

IntPolynomial pencil_determinant(const IntMatrix& m0, const IntMatrix& m1) {
  const std::size_t n = m0.rows();
  if (!m0.square() || m1.rows() != n || m1.cols() != n) throw InternalError("pencil_determinant: shape");
  if (n == 0) return IntPolynomial{1};
  Matrix<IntPolynomial> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = IntPolynomial({mpz_class(static_cast<long>(m0(i, j))), mpz_class(static_cast<long>(m1(i, j)))});

  // Bareiss: every division below is exact in Z[t].
  IntPolynomial prev{1};
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k).is_zero()) ++swap;
      if (swap == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = divide_exact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      }
      a(i, k) = {};
    }
    prev = a(k, k);
  }
  IntPolynomial det = a(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

mpz_class determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (!m.square()) throw InternalError("determinant: non-square");
  if (n == 0) return 1;
  Matrix<mpz_class> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long>(m(i, j));
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

QPolynomial QPolynomial::from(const IntPolynomial& p) {
  std::vector<mpq_class> v;
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

mpq_class QPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPolynomial QPolynomial::derivative() const {
  std::vector<mpq_class> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<long>(k));
  return QPolynomial(std::move(d));
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
  std::vector<mpq_class> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t k = 0; k < a.c.size(); ++k) r[k] += a.c[k];
  for (std::size_t k = 0; k < b.c.size(); ++k) r[k] += b.c[k];
  return QPolynomial(std::move(r));
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
  std::vector<mpq_class> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t k = 0; k < a.c.size(); ++k) r[k] += a.c[k];
  for (std::size_t k = 0; k < b.c.size(); ++k) r[k] -= b.c[k];
  return QPolynomial(std::move(r));
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> r(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return QPolynomial(std::move(r));
}

void divmod(const QPolynomial& a, const QPolynomial& b, QPolynomial& q, QPolynomial& r) {
  if (b.is_zero()) throw InternalError("QPolynomial division by zero");
  std::vector<mpq_class> rem = a.c;
  std::vector<mpq_class> quo(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree() + 1) : 0);
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const mpq_class f = rem[static_cast<std::size_t>(k + b.degree())] / b.c.back();
    quo[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= f * b.c[j];
  }
  q = QPolynomial(std::move(quo));
  r = QPolynomial(std::move(rem));
}

QPolynomial gcd(QPolynomial a, QPolynomial b) {
  while (!b.is_zero()) {
    QPolynomial q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    const mpq_class lead = a.c.back();
    for (auto& x : a.c) x /= lead;
  }
  return a;
}

}  // namespace knotsig
