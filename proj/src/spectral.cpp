#include "specmin/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace specmin {

// ---- IntPolynomial ---------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(long coeff, int degree) {
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = coeff;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::compose_shifted_square(long l) const {
  if (is_zero()) return {};
  std::vector<mpz_class> q{mpz_class(-l), 0, 1};
  IntPolynomial step(q), out({c_.back()});
  for (int i = degree() - 1; i >= 0; --i) out = out * step + IntPolynomial({c_[static_cast<std::size_t>(i)]});
  return out;
}

namespace {

mpz_class content(const IntPolynomial& p) {
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Divides by the positive content; the sign is untouched.
IntPolynomial reduce_content(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (g == 1) return p;
  std::vector<mpz_class> c(p.coeffs());
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

// lc(b)^steps * a = q * b + r; returns r and the number of steps.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b, int& steps) {
  std::vector<mpz_class> r(a.coeffs());
  const auto& bc = b.coeffs();
  const int db = b.degree();
  steps = 0;
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    const int shift = static_cast<int>(r.size()) - 1 - db;
    mpz_class lead = r.back();
    for (auto& x : r) x *= b.leading();
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shift)] -= lead * bc[static_cast<std::size_t>(i)];
    while (!r.empty() && r.back() == 0) r.pop_back();
    ++steps;
  }
  return IntPolynomial(std::move(r));
}

// Exact quotient a / b when b divides a and b is primitive.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> r(a.coeffs());
  const int da = a.degree(), db = b.degree();
  std::vector<mpz_class> q(static_cast<std::size_t>(da - db + 1), 0);
  for (int i = da - db; i >= 0; --i) {
    mpz_class t = r[static_cast<std::size_t>(i + db)];
    if (t == 0) continue;
    if (!mpz_divisible_p(t.get_mpz_t(), b.leading().get_mpz_t())) throw SpectralError("polynomial division is not exact");
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), b.leading().get_mpz_t());
    q[static_cast<std::size_t>(i)] = t;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
  }
  for (const auto& x : r)
    if (x != 0) throw SpectralError("polynomial division is not exact");
  return IntPolynomial(std::move(q));
}

int sgn(const mpz_class& x) { return mpz_sgn(x.get_mpz_t()); }

}  // namespace

IntPolynomial IntPolynomial::primitive() const {
  IntPolynomial p = reduce_content(*this);
  if (!p.is_zero() && p.leading() < 0)
    for (auto& x : p.c_) x = -x;
  return p;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const auto& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    s += (c < 0 ? (s.empty() ? "-" : " - ") : (s.empty() ? "" : " + "));
    mpz_class a = abs(c);
    if (a != 1 || i == 0) s += a.get_str();
    if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return s;
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = reduce_content(a), y = reduce_content(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    int steps = 0;
    IntPolynomial r = reduce_content(pseudo_remainder(x, y, steps));
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive();
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.primitive();
  IntPolynomial g = gcd(p, p.derivative());
  IntPolynomial pp = p.primitive();
  if (g.degree() <= 0) return pp;
  return exact_quotient(pp, g).primitive();
}

// ---- Dyadic ----------------------------------------------------------------

namespace {

Dyadic normalized(mpz_class m, unsigned e) {
  if (m == 0) return {0, 0};
  unsigned tz = static_cast<unsigned>(mpz_scan1(m.get_mpz_t(), 0));
  unsigned drop = std::min(tz, e);
  m >>= drop;
  return {m, e - drop};
}

mpz_class scaled(const Dyadic& d, unsigned e) { return mpz_class(d.m << (e - d.e)); }

}  // namespace

Dyadic Dyadic::from_double(double x) {
  if (!std::isfinite(x)) throw SpectralError("non-finite value");
  int exp = 0;
  double f = std::frexp(x, &exp);
  mpz_class m(std::ldexp(f, 53));
  int shift = exp - 53;
  if (shift >= 0) return normalized(mpz_class(m << shift), 0);
  return normalized(m, static_cast<unsigned>(-shift));
}

Dyadic Dyadic::midpoint(const Dyadic& a, const Dyadic& b) {
  unsigned e = std::max(a.e, b.e);
  return normalized(scaled(a, e) + scaled(b, e), e + 1);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  unsigned e = std::max(a.e, b.e);
  return normalized(scaled(a, e) - scaled(b, e), e);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  unsigned e = std::max(a.e, b.e);
  int c = cmp(scaled(a, e), scaled(b, e));
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

double Dyadic::to_double() const {
  mpz_class den = mpz_class(1) << e;
  return mpq_class(m, den).get_d();
}

std::string Dyadic::to_string() const {
  mpz_class den = mpz_class(1) << e;
  return m.get_str() + "/" + den.get_str();
}

int sign_at(const IntPolynomial& p, const Dyadic& x) {
  if (p.is_zero()) return 0;
  const auto& c = p.coeffs();
  mpz_class acc = c.back(), pw = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    pw <<= x.e;
    acc *= x.m;
    mpz_addmul(acc.get_mpz_t(), c[static_cast<std::size_t>(i)].get_mpz_t(), pw.get_mpz_t());
  }
  return sgn(acc);
}

// ---- Sturm -----------------------------------------------------------------

SturmChain::SturmChain(const IntPolynomial& square_free) {
  if (square_free.is_zero()) throw SpectralError("Sturm chain of the zero polynomial");
  chain_.push_back(reduce_content(square_free));
  IntPolynomial d = reduce_content(square_free.derivative());
  while (!d.is_zero()) {
    chain_.push_back(d);
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    int steps = 0;
    IntPolynomial r = pseudo_remainder(a, b, steps);
    // Negated remainder, corrected for the sign of lc(b)^steps.
    bool flip = !(sgn(b.leading()) < 0 && steps % 2 == 1);
    r = reduce_content(r);
    d = flip ? IntPolynomial() - r : r;
  }
}

namespace {
int count_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}
}  // namespace

int SturmChain::changes_at(const Dyadic& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) s.push_back(sign_at(p, x));
  return count_changes(s);
}

int SturmChain::changes_at_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(sgn(p.leading()));
  return count_changes(s);
}

// ---- characteristic polynomials and numerics -------------------------------

IntPolynomial char_poly_tree(const Graph& tree) {
  if (!tree.is_tree()) throw GraphError("char_poly_tree: input is not a tree");
  const int n = tree.vertex_count();
  std::vector<Vertex> order, parent(static_cast<std::size_t>(n), -2);
  std::vector<Vertex> stack{0};
  parent[0] = -1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (Vertex w : tree.neighbors(u))
      if (parent[w] == -2) {
        parent[w] = u;
        stack.push_back(w);
      }
  }
  // with[v] = φ(T_v), without[v] = φ(T_v - v), merged child by child:
  // φ(G1 + G2 + uv) = φ(G1)φ(G2) - φ(G1 - u)φ(G2 - v).
  const IntPolynomial x = IntPolynomial::monomial(1, 1), one = IntPolynomial::monomial(1, 0);
  std::vector<IntPolynomial> with(static_cast<std::size_t>(n), x), without(static_cast<std::size_t>(n), one);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex c = *it, v = parent[c];
    if (v < 0) break;
    IntPolynomial w = with[v] * with[c] - without[v] * without[c];
    without[v] = without[v] * with[c];
    with[v] = std::move(w);
    with[c] = {};
    without[c] = {};
  }
  return with[0];
}

PowerIteration power_iteration(const Graph& g, double tol, long cap) {
  if (!g.is_connected()) throw GraphError("power_iteration: graph is disconnected");
  const int n = g.vertex_count();
  PowerIteration out;
  if (n == 1) return out;
  std::vector<double> x(static_cast<std::size_t>(n), 1.0), y(x.size());
  for (long it = 1; it <= cap; ++it) {
    double lo = INFINITY, hi = 0.0, num = 0.0, den = 0.0, top = 0.0;
    for (Vertex v = 0; v < n; ++v) {
      double s = x[v];
      for (Vertex w : g.neighbors(v)) s += x[w];
      y[v] = s;
      lo = std::min(lo, s / x[v]);
      hi = std::max(hi, s / x[v]);
      num += s * x[v];
      den += x[v] * x[v];
      top = std::max(top, s);
    }
    out.lower = lo - 1.0;
    out.upper = hi - 1.0;
    out.value = std::clamp(num / den - 1.0, out.lower, out.upper);
    out.iterations = it;
    if (out.upper - out.lower <= tol) return out;
    for (Vertex v = 0; v < n; ++v) x[v] = y[v] / top;
  }
  throw SpectralError("power iteration did not converge within " + std::to_string(cap) + " iterations");
}

int tree_eigenvalues_above(const Graph& tree, double x) {
  // Congruence diagonalisation of A - xI bottom-up along a rooted tree.
  const int n = tree.vertex_count();
  std::vector<Vertex> order, parent(static_cast<std::size_t>(n), -2);
  std::vector<Vertex> stack{0};
  parent[0] = -1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (Vertex w : tree.neighbors(u))
      if (parent[w] == -2) {
        parent[w] = u;
        stack.push_back(w);
      }
  }
  std::vector<double> a(static_cast<std::size_t>(n), -x);
  std::vector<char> zero_child(static_cast<std::size_t>(n), 0), cut(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> zero_witness(static_cast<std::size_t>(n), -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    if (zero_witness[v] >= 0) {
      a[zero_witness[v]] = 2.0;
      a[v] = -0.5;
      cut[v] = 1;
    }
    Vertex p = parent[v];
    if (p < 0 || cut[v]) continue;
    if (a[v] == 0.0) {
      if (zero_witness[p] < 0) zero_witness[p] = v;
    } else if (zero_witness[p] < 0) {
      a[p] -= 1.0 / a[v];
    }
  }
  return static_cast<int>(std::count_if(a.begin(), a.end(), [](double d) { return d > 0.0; }));
}

double tree_radius_numeric(const Graph& tree, double tol) {
  if (!tree.is_tree()) throw GraphError("tree_radius_numeric: input is not a tree");
  if (tree.vertex_count() == 1) return 0.0;
  int maxdeg = 0;
  for (Vertex v = 0; v < tree.vertex_count(); ++v) maxdeg = std::max(maxdeg, tree.degree(v));
  double lo = std::sqrt(static_cast<double>(maxdeg)) * 0.999, hi = maxdeg;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (tree_eigenvalues_above(tree, mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// ---- certificates ----------------------------------------------------------

namespace {

void bisect_once(RadiusCertificate& c) {
  Dyadic mid = Dyadic::midpoint(c.lo, c.hi);
  if (c.sturm->roots_in(mid, c.hi) >= 1)
    c.lo = mid;
  else
    c.hi = mid;
}

Dyadic cauchy_bound(const IntPolynomial& p) {
  mpz_class top = 0;
  for (const auto& c : p.coeffs()) top = std::max(top, mpz_class(abs(c)));
  mpz_class lead = abs(p.leading());
  mpz_class bound = top / lead + 2;
  std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  return {mpz_class(1) << bits, 0};
}

}  // namespace

void refine(RadiusCertificate& c, double tol) {
  if (!c.exact) throw SpectralError("refine: certificate is not exact");
  while (c.width().to_double() > tol) bisect_once(c);
  c.approx = Dyadic::midpoint(c.lo, c.hi).to_double();
}

RadiusCertificate certify_largest_root(const IntPolynomial& poly, double hint, double tol) {
  if (poly.degree() < 1) throw SpectralError("certify_largest_root: polynomial has no roots");
  if (!(tol > 0)) throw SpectralError("tolerance must be positive");
  RadiusCertificate c;
  c.poly = poly;
  c.exact = true;
  c.sturm = std::make_shared<SturmChain>(square_free_part(poly));
  const SturmChain& s = *c.sturm;

  bool seeded = false;
  if (std::isfinite(hint)) {
    double eps = 1e-7 * std::max(1.0, std::abs(hint));
    c.lo = Dyadic::from_double(hint - eps);
    c.hi = Dyadic::from_double(hint + eps);
    seeded = s.roots_above(c.hi) == 0 && s.roots_in(c.lo, c.hi) == 1;
  }
  if (!seeded) {
    c.hi = cauchy_bound(poly);
    c.lo = Dyadic{-c.hi.m, 0};
    if (s.roots_in(c.lo, c.hi) == 0) throw SpectralError("certify_largest_root: no real root");
    while (s.roots_in(c.lo, c.hi) > 1) bisect_once(c);
  }
  refine(c, tol);
  return c;
}

RadiusCertificate spectral_radius(const Graph& g, double tol) {
  if (!g.is_connected()) throw GraphError("spectral_radius: graph is disconnected");
  if (!(tol > 0)) throw SpectralError("tolerance must be positive");
  if (g.is_tree()) {
    PowerIteration pi = power_iteration(g, std::max(tol, 1e-9));
    return certify_largest_root(char_poly_tree(g), pi.value, tol);
  }
  PowerIteration pi = power_iteration(g, tol);
  RadiusCertificate c;
  c.lo = Dyadic::from_double(pi.lower);
  c.hi = Dyadic::from_double(pi.upper);
  c.approx = pi.value;
  c.exact = false;
  return c;
}

std::strong_ordering compare_radii(const RadiusCertificate& a0, const RadiusCertificate& b0) {
  if (!a0.exact || !b0.exact) throw SpectralError("compare_radii: both certificates must be exact");
  RadiusCertificate a = a0, b = b0;
  bool equality_checked = false;
  while (true) {
    if (a.hi <= b.lo) return std::strong_ordering::less;
    if (b.hi <= a.lo) return std::strong_ordering::greater;
    if (!equality_checked) {
      equality_checked = true;
      IntPolynomial g = gcd(a.sturm->base(), b.sturm->base());
      if (g.degree() >= 1) {
        Dyadic lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
        if (lo < hi && SturmChain(g).roots_in(lo, hi) >= 1) return std::strong_ordering::equal;
      }
    }
    bisect_once(a);
    bisect_once(b);
  }
}

RadiusCertificate bipartite_lift_radius(const RadiusCertificate& base, long l, double tol) {
  if (l < 0) throw SpectralError("bipartite_lift_radius: negative lift");
  if (!base.exact) throw SpectralError("bipartite_lift_radius: base certificate is not exact");
  // poly(x) * x^parity = r(x^2); the lift has certificate polynomial r(x^2 - l).
  std::vector<mpz_class> c(base.poly.coeffs());
  if (base.poly.degree() % 2 == 1) c.insert(c.begin(), mpz_class(0));
  std::vector<mpz_class> r;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i % 2 == 0)
      r.push_back(c[i]);
    else if (c[i] != 0)
      throw SpectralError("bipartite_lift_radius: spectrum is not symmetric");
  }
  IntPolynomial lifted = IntPolynomial(std::move(r)).compose_shifted_square(l);
  double hint = std::sqrt(base.approx * base.approx + static_cast<double>(l));
  return certify_largest_root(lifted, hint, tol);
}

bool radius_at_most(const RadiusCertificate& c, const Dyadic& bound) {
  if (!c.exact) return c.hi <= bound;
  return c.sturm->roots_above(bound) == 0;
}

nlohmann::json to_json(const RadiusCertificate& c) {
  nlohmann::json poly = nlohmann::json::array();
  for (const auto& x : c.poly.coeffs()) {
    if (x.fits_slong_p())
      poly.push_back(x.get_si());
    else
      poly.push_back(x.get_str());
  }
  return {{"poly", poly},
          {"lo", c.lo.to_string()},
          {"hi", c.hi.to_string()},
          {"approx", c.approx},
          {"exact", c.exact}};
}

}  // namespace specmin
