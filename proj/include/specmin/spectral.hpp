#pragma once

#include <compare>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "specmin/graph.hpp"

namespace specmin {

class SpectralError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Integer polynomial, coefficients in ascending degree. The zero polynomial
// has no coefficients.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  static IntPolynomial monomial(long coeff, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& leading() const { return c_.back(); }

  IntPolynomial derivative() const;
  // p(x^2 - l)
  IntPolynomial compose_shifted_square(long l) const;
  // Divide out the content and make the leading coefficient positive.
  IntPolynomial primitive() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string() const;

private:
  void trim();
  std::vector<mpz_class> c_;
};

// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
// p / gcd(p, p'), primitive.
IntPolynomial square_free_part(const IntPolynomial& p);

// m / 2^e, kept reduced (m odd or e == 0).
struct Dyadic {
  mpz_class m;
  unsigned e = 0;

  static Dyadic from_double(double x);
  static Dyadic midpoint(const Dyadic& a, const Dyadic& b);
  double to_double() const;
  std::string to_string() const;  // "p/q"
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) { return (a <=> b) == 0; }
};

// Sign of p at a dyadic point, exactly.
int sign_at(const IntPolynomial& p, const Dyadic& x);

// Sturm chain of a square-free polynomial.
class SturmChain {
public:
  explicit SturmChain(const IntPolynomial& square_free);
  int changes_at(const Dyadic& x) const;
  int changes_at_infinity() const;
  // Number of distinct roots in (a, b].
  int roots_in(const Dyadic& a, const Dyadic& b) const { return changes_at(a) - changes_at(b); }
  int roots_above(const Dyadic& a) const { return changes_at(a) - changes_at_infinity(); }
  const IntPolynomial& base() const { return chain_.front(); }

private:
  std::vector<IntPolynomial> chain_;
};

// The largest real root of `poly`, isolated in (lo, hi]. When `exact` is
// false (non-tree input) the interval is only the numeric bracket.
struct RadiusCertificate {
  IntPolynomial poly;
  Dyadic lo, hi;
  double approx = 0.0;
  bool exact = false;
  std::shared_ptr<const SturmChain> sturm;

  Dyadic width() const { return hi - lo; }
};

IntPolynomial char_poly_tree(const Graph& tree);

struct PowerIteration {
  double value = 0.0;
  double lower = 0.0, upper = 0.0;  // Collatz-Wielandt bracket
  long iterations = 0;
};
inline constexpr long kPowerIterationCap = 1'000'000;
// Power iteration on A + I from the all-ones vector. Throws SpectralError
// if the bracket does not close to `tol` within the cap.
PowerIteration power_iteration(const Graph& g, double tol, long cap = kPowerIterationCap);

// ρ of a tree by bisection on eigenvalue counts (tree LDL^T inertia);
// the fast numeric screen used by the searches.
double tree_radius_numeric(const Graph& tree, double tol = 1e-13);
// Number of eigenvalues of a tree adjacency matrix strictly above x.
int tree_eigenvalues_above(const Graph& tree, double x);

// Isolate the largest real root of `poly` to width <= tol, seeded by `hint`.
RadiusCertificate certify_largest_root(const IntPolynomial& poly, double hint, double tol = 1e-12);

RadiusCertificate spectral_radius(const Graph& g, double tol = 1e-12);

// Exact order of two tree-backed radii.
std::strong_ordering compare_radii(const RadiusCertificate& a, const RadiusCertificate& b);

// Certificate for sqrt(ρ² + l), built from poly(x² - l).
RadiusCertificate bipartite_lift_radius(const RadiusCertificate& base, long l, double tol = 1e-12);

// True when the certified root is <= bound.
bool radius_at_most(const RadiusCertificate& c, const Dyadic& bound);

// Narrow an exact certificate in place until its width is <= tol.
void refine(RadiusCertificate& c, double tol);

nlohmann::json to_json(const RadiusCertificate& c);

}  // namespace specmin
