#include "pluricalc/toric3.hpp"

#include <algorithm>
#include <numeric>

#include "pluricalc/error.hpp"
#include "pluricalc/ratmat.hpp"

namespace pluricalc {

namespace {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

BigInt det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  const auto x = cross(b, c);
  BigInt out = 0;
  for (int i = 0; i < 3; ++i) out += BigInt(static_cast<long>(a[i])) * BigInt(static_cast<long>(x[i]));
  return out;
}

IntMatrix column_matrix(const Cone3& c) {
  IntMatrix m(3, c.rays.size());
  for (std::size_t j = 0; j < c.rays.size(); ++j)
    for (std::size_t i = 0; i < 3; ++i) m(i, j) = BigInt(static_cast<long>(c.rays[j].vec()[i]));
  return m;
}

BigInt mod_pos(const BigInt& a, const BigInt& n) {
  BigInt r = a % n;
  if (r < 0) r += n;
  return r;
}

}  // namespace

Ray::Ray(Vec3 v) : v_(v) {
  const std::int64_t g = std::gcd(std::gcd(v[0], v[1]), v[2]);
  if (g == 0) throw FanError("zero vector is not a ray");
  if (g != 1) throw FanError("ray " + str() + " is not primitive");
}

std::string Ray::str() const {
  return "(" + std::to_string(v_[0]) + "," + std::to_string(v_[1]) + "," + std::to_string(v_[2]) + ")";
}

Cone3::Cone3(std::vector<Ray> r) : rays(std::move(r)) {
  if (rays.size() == 3) {
    if (det3(rays[0].vec(), rays[1].vec(), rays[2].vec()) == 0) throw FanError("cone rays are dependent: " + str());
  } else if (rays.size() == 2) {
    if (cross(rays[0].vec(), rays[1].vec()) == Vec3{0, 0, 0}) throw FanError("wall rays are dependent: " + str());
  } else {
    throw FanError("a cone needs 2 or 3 rays");
  }
}

bool Cone3::has_ray(const Ray& r) const { return std::find(rays.begin(), rays.end(), r) != rays.end(); }

bool Cone3::same_as(const Cone3& o) const {
  if (rays.size() != o.rays.size()) return false;
  return std::all_of(rays.begin(), rays.end(), [&](const Ray& r) { return o.has_ray(r); });
}

std::string Cone3::str() const {
  std::string s = "Cone(";
  for (std::size_t i = 0; i < rays.size(); ++i) s += (i ? "," : "") + rays[i].str();
  return s + ")";
}

Fan3D::Fan3D(std::vector<Cone3> maximal) : cones(std::move(maximal)) {
  for (const auto& c : cones)
    if (!c.is_maximal()) throw FanError("fan cones must be maximal (3 rays): " + c.str());
}

std::vector<Ray> Fan3D::rays() const {
  std::vector<Ray> out;
  for (const auto& c : cones) out.insert(out.end(), c.rays.begin(), c.rays.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Wall> Fan3D::walls() const {
  std::map<std::pair<Ray, Ray>, std::vector<std::size_t>> faces;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const auto& r = cones[i].rays;
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = a + 1; b < 3; ++b) {
        auto key = std::minmax(r[a], r[b]);
        faces[{key.first, key.second}].push_back(i);
      }
    }
  }
  std::vector<Wall> out;
  for (auto& [key, adj] : faces) out.push_back(Wall{Cone3({key.first, key.second}), adj});
  return out;
}

std::optional<std::size_t> Fan3D::find_cone(const Cone3& c) const {
  for (std::size_t i = 0; i < cones.size(); ++i)
    if (cones[i].same_as(c)) return i;
  return std::nullopt;
}

BigInt cone_mult(const Cone3& c) {
  if (c.is_maximal()) return abs(det3(c.rays[0].vec(), c.rays[1].vec(), c.rays[2].vec()));
  const Vec3 x = cross(c.rays[0].vec(), c.rays[1].vec());
  return BigInt(static_cast<long>(std::gcd(std::gcd(x[0], x[1]), x[2])));
}

std::vector<BigInt> canonical_weights(std::vector<BigInt> w, const BigInt& n) {
  if (n <= 1) return {};
  std::vector<BigInt> best;
  for (BigInt u = 1; u < n; ++u) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), n.get_mpz_t());
    if (g != 1) continue;
    std::vector<BigInt> cand;
    for (const auto& x : w) cand.push_back(mod_pos(u * x, n));
    std::sort(cand.begin(), cand.end());
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

std::array<Rational, 3> cone_coordinates(const Cone3& c, const Vec3& v) {
  if (!c.is_maximal()) throw FanError("coordinates need a maximal cone");
  const auto& a = c.rays[0].vec();
  const auto& b = c.rays[1].vec();
  const auto& d = c.rays[2].vec();
  const BigInt den = det3(a, b, d);
  return {Rational(det3(v, b, d), den), Rational(det3(a, v, d), den), Rational(det3(a, b, v), den)};
}

QuotientType quotient_type(const Cone3& c) {
  if (!c.is_maximal()) throw FanError("quotient_type needs a maximal cone");
  const IntMatrix a = column_matrix(c);
  const SmithForm s = smith_normal_form(a);
  QuotientType q;
  q.snf_diag = s.diag;
  q.order = 1;
  std::size_t nontrivial = 0;
  for (const auto& d : s.diag) {
    q.order *= d;
    if (d != 1) ++nontrivial;
  }
  q.cyclic = nontrivial <= 1;
  if (!q.cyclic || q.order == 1) return q;

  // The generator of Z^3 / A Z^3 is left^{-1} e_k for the nontrivial slot k.
  std::size_t k = 0;
  while (s.diag[k] == 1) ++k;
  RatVector ek(3);
  ek[k] = 1;
  const RatVector g = solve(s.left.to_rational(), ek);
  const RatVector lambda = solve(a.to_rational(), g);
  for (const auto& l : lambda) q.weights.push_back(mod_pos((Rational(q.order) * l).numerator(), q.order));
  q.canonical = canonical_weights(q.weights, q.order);
  return q;
}

Fan3D star_subdivide(const Fan3D& f, const Ray& w) {
  const auto rs = f.rays();
  if (std::find(rs.begin(), rs.end(), w) != rs.end()) return f;
  std::vector<Cone3> out;
  bool inside = false;
  for (const auto& c : f.cones) {
    const auto l = cone_coordinates(c, w.vec());
    if (std::any_of(l.begin(), l.end(), [](const Rational& x) { return x.sign() < 0; })) {
      out.push_back(c);
      continue;
    }
    inside = true;
    for (std::size_t i = 0; i < 3; ++i) {
      if (l[i].sign() <= 0) continue;
      auto rays = c.rays;
      rays[i] = w;
      out.emplace_back(std::move(rays));
    }
  }
  if (!inside) throw FanError("ray " + w.str() + " is outside the support of the fan");
  return Fan3D(std::move(out));
}

WallIntersections wall_curve_intersections(const Fan3D& f, const Cone3& wall) {
  if (wall.is_maximal()) throw FanError("expected a wall (2 rays)");
  const Wall* found = nullptr;
  const auto walls = f.walls();
  for (const auto& w : walls)
    if (w.wall.same_as(wall)) found = &w;
  if (!found) throw FanError(wall.str() + " is not a wall of the fan");
  if (found->adjacent.size() != 2) throw FanError(wall.str() + " is a boundary wall");

  const auto& v1 = wall.rays[0].vec();
  const auto& v2 = wall.rays[1].vec();
  const Rational mw(cone_mult(wall));
  std::array<Ray, 2> extra{Ray(1, 0, 0), Ray(1, 0, 0)};
  std::array<Rational, 2> alpha;
  for (std::size_t s = 0; s < 2; ++s) {
    const Cone3& sigma = f.cones[found->adjacent[s]];
    for (const auto& r : sigma.rays)
      if (!wall.has_ray(r)) extra[s] = r;
    alpha[s] = mw / Rational(cone_mult(sigma));
  }
  std::array<Rational, 3> t;  // alpha1 u1 + alpha2 u2
  for (std::size_t i = 0; i < 3; ++i)
    t[i] = alpha[0] * Rational(extra[0].vec()[i]) + alpha[1] * Rational(extra[1].vec()[i]);

  // Solve c1 v1 + c2 v2 = -t on two rows with a nonzero minor.
  std::array<Rational, 2> coef;
  bool solved = false;
  for (std::size_t i = 0; i < 3 && !solved; ++i) {
    for (std::size_t j = i + 1; j < 3 && !solved; ++j) {
      const Rational det = Rational(v1[i]) * Rational(v2[j]) - Rational(v2[i]) * Rational(v1[j]);
      if (det.is_zero()) continue;
      coef[0] = (-t[i] * Rational(v2[j]) + t[j] * Rational(v2[i])) / det;
      coef[1] = (-Rational(v1[i]) * t[j] + Rational(v1[j]) * t[i]) / det;
      solved = true;
    }
  }
  WallIntersections out;
  for (const auto& r : f.rays()) out.values[r] = 0;
  out.values[extra[0]] = alpha[0];
  out.values[extra[1]] = alpha[1];
  out.values[wall.rays[0]] = coef[0];
  out.values[wall.rays[1]] = coef[1];
  for (std::size_t i = 0; i < 3; ++i) out.residual[i] = t[i] + coef[0] * Rational(v1[i]) + coef[1] * Rational(v2[i]);
  out.k_dot = 0;
  for (const auto& [r, x] : out.values) out.k_dot -= x;
  return out;
}

Rational subdivision_discrepancy(const Fan3D& f, const Ray& w, const Cone3& target) {
  if (!f.find_cone(target)) throw FanError(target.str() + " is not a maximal cone of the fan");
  if (target.has_ray(w)) return 0;
  const auto l = cone_coordinates(target, w.vec());
  if (std::any_of(l.begin(), l.end(), [](const Rational& x) { return x.sign() <= 0; }))
    throw FanError("ray " + w.str() + " is not in the interior of " + target.str());
  return l[0] + l[1] + l[2] - 1;
}

std::vector<std::string> ToricParams::violations() const {
  std::vector<std::string> out;
  if (m < 1 || n < 1 || b < 1) out.push_back("m, n, b must be positive");
  if (n * b != m + 1) out.push_back("nb = m + 1 fails");
  if (n % 2 == 0) out.push_back("n must be odd");
  return out;
}

ToricReport floored_pullback_check(const ToricParams& p, std::int64_t m0, bool with_types) {
  if (m0 < 0) throw PreconditionError("m0 must be non-negative");
  ToricReport r;
  r.params = p;
  r.m0 = m0;
  r.constraint_failures = p.violations();
  if (!r.constraint_failures.empty()) return r;
  if (!(2 * p.b * m0 < p.n)) r.constraint_failures.push_back("2 b m0 < n fails");
  if (!(p.n < p.m)) r.constraint_failures.push_back("n < m fails");

  const Ray e2(0, 1, 0), e3(0, 0, 1);
  r.u = Ray(p.m, 1, -p.b);
  r.v = Ray(-p.n, 2, 1);
  r.w = Ray(1, 1, 0);
  const Cone3 top({e3, r.u, r.v});
  r.sigma1 = Fan3D({top});
  if (with_types) r.sigma1_type = quotient_type(top);
  r.discrepancy_e2 = subdivision_discrepancy(r.sigma1, e2, top);
  r.sigma2 = star_subdivide(r.sigma1, e2);
  if (with_types)
    for (const auto& c : r.sigma2.cones) r.sigma2_types.emplace_back(c.str(), quotient_type(c));

  const Cone3 rwall({e2, e3});
  r.r_sigma2 = wall_curve_intersections(r.sigma2, rwall);
  r.discrepancy_w = subdivision_discrepancy(r.sigma2, r.w, Cone3({e3, r.u, e2}));
  r.sigma3 = star_subdivide(r.sigma2, r.w);
  r.r_sigma3 = wall_curve_intersections(r.sigma3, rwall);

  // f^*K_2 = K_3 - a D_w = -sum_{old} D_rho - (1 + a) D_w, then m0 times, floored.
  const Rational M(m0);
  for (const auto& ray : r.sigma3.rays()) {
    const Rational c = ray == r.w ? -M * (Rational(1) + r.discrepancy_w) : -M;
    r.floored_pullback[ray] = Rational(c.floor());
  }
  r.floored_value = 0;
  for (const auto& [ray, c] : r.floored_pullback) r.floored_value += c * r.r_sigma3.values.at(ray);
  r.closed_form = (Rational(2, p.n) - Rational(p.b, p.m)) * M - Rational(p.m - m0 * p.b, p.m).frac();
  r.equal = r.floored_value == r.closed_form;
  return r;
}

}  // namespace pluricalc
