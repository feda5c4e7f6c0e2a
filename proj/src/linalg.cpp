#include "germkit/linalg.hpp"

#include <utility>

namespace germkit::linalg {

namespace {

// In-place Bareiss forward pass over the first `cols` columns of `a`
// (which may carry extra augmented columns). Returns false on a zero pivot
// column, which means the square part is singular.
bool bareiss(IntMatrix& a, std::size_t n, int& sign) {
  const std::size_t width = a.empty() ? 0 : a[0].size();
  BigInt prev = 1;
  sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return false;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        BigInt v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = v;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return true;
}

}  // namespace

BigInt determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  if (!bareiss(a, n, sign)) return 0;
  return sign * a[n - 1][n - 1];
}

std::optional<std::vector<Rational>> solve(IntMatrix a, std::vector<BigInt> b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  int sign = 1;
  if (!bareiss(a, n, sign)) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc(a[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(a[ii][j]) * x[j];
    x[ii] = acc / Rational(a[ii][ii]);
    x[ii].canonicalize();
  }
  return x;
}

}  // namespace germkit::linalg
