#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pluricalc/rational.hpp"

namespace pluricalc {

using Vec3 = std::array<std::int64_t, 3>;

// Primitive nonzero lattice vector.
class Ray {
 public:
  // Throws FanError for the zero vector or a non-primitive vector.
  explicit Ray(Vec3 v);
  Ray(std::int64_t x, std::int64_t y, std::int64_t z) : Ray(Vec3{x, y, z}) {}
  const Vec3& vec() const { return v_; }
  std::string str() const;
  friend auto operator<=>(const Ray&, const Ray&) = default;

 private:
  Vec3 v_;
};

// Simplicial cone on 2 (wall) or 3 (maximal) linearly independent rays.
struct Cone3 {
  std::vector<Ray> rays;
  // Throws FanError unless 2 or 3 independent rays are given.
  explicit Cone3(std::vector<Ray> r);
  bool is_maximal() const { return rays.size() == 3; }
  bool has_ray(const Ray& r) const;
  // Same ray set.
  bool same_as(const Cone3& o) const;
  std::string str() const;
};

struct Wall {
  Cone3 wall;
  std::vector<std::size_t> adjacent;  // indices of maximal cones
};

struct Fan3D {
  std::vector<Cone3> cones;  // maximal cones

  // Throws FanError when some cone is not maximal.
  explicit Fan3D(std::vector<Cone3> maximal = {});
  std::vector<Ray> rays() const;  // sorted, distinct
  std::vector<Wall> walls() const;
  std::optional<std::size_t> find_cone(const Cone3& c) const;
};

// |det| for a maximal cone, lattice index of the span for a wall.
BigInt cone_mult(const Cone3& c);

struct QuotientType {
  BigInt order;
  std::vector<BigInt> snf_diag;
  bool cyclic = true;
  std::vector<BigInt> weights;    // raw action weights mod order (cyclic case)
  std::vector<BigInt> canonical;  // least sorted representative under units
};

QuotientType quotient_type(const Cone3& c);
// Least sorted representative of w mod n over unit multiples.
std::vector<BigInt> canonical_weights(std::vector<BigInt> w, const BigInt& n);

// Barycentric coordinates of v in the basis of a maximal cone's rays.
std::array<Rational, 3> cone_coordinates(const Cone3& c, const Vec3& v);

// Throws FanError when w is outside the support.
Fan3D star_subdivide(const Fan3D& f, const Ray& w);

struct WallIntersections {
  std::map<Ray, Rational> values;  // D_rho . V(wall) for every ray of the fan
  Rational k_dot;                  // K . V(wall) = -sum
  std::array<Rational, 3> residual{};  // relation evaluated; zero vector expected
};

// Throws FanError for a boundary wall or a cone that is not a wall of f.
WallIntersections wall_curve_intersections(const Fan3D& f, const Cone3& wall);

// sum lambda_i - 1 for w = sum lambda_i ray_i; 0 when w is a ray of the cone.
// Throws FanError when w lies on a proper face or outside.
Rational subdivision_discrepancy(const Fan3D& f, const Ray& w, const Cone3& target);

struct ToricParams {
  std::int64_t m = 9;
  std::int64_t n = 5;
  std::int64_t b = 2;
  // Violated invariants (nb = m + 1, n odd); empty when valid.
  std::vector<std::string> violations() const;
};

struct ToricReport {
  ToricParams params;
  std::int64_t m0 = 1;
  Ray u{1, 0, 0}, v{1, 0, 0}, w{1, 1, 0};
  Fan3D sigma1, sigma2, sigma3;
  QuotientType sigma1_type;
  std::vector<std::pair<std::string, QuotientType>> sigma2_types;
  WallIntersections r_sigma2;   // R = Cone(e2, e3) in Sigma_2
  WallIntersections r_sigma3;   // R' = Cone(e2, e3) in Sigma_3
  Rational discrepancy_w;       // coefficient of D_w in K_3 - f^*K_2
  Rational discrepancy_e2;      // the same for e2 over Sigma_1
  std::map<Ray, Rational> floored_pullback;  // floor(m0 f^*K) in the D_rho basis
  Rational floored_value;       // floor(m0 f^*K) . R'
  Rational closed_form;         // (2/n - b/m) m0 - {(m - m0 b)/m}
  bool equal = false;
  std::vector<std::string> constraint_failures;  // 2 b m0 < n < m and invariants
  bool negative() const { return floored_value.sign() < 0; }
};

// with_types = false skips the quotient types (the unit search is O(order)).
ToricReport floored_pullback_check(const ToricParams& p, std::int64_t m0, bool with_types = true);

}  // namespace pluricalc
