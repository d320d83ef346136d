// Copyright 2026 The ulc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ulc/geometry.h"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "ulc/errors.h"
#include "ulc/linear_solve.h"

namespace ulc {

Body::Body(std::size_t dim, std::vector<Point> points)
    : dim_(dim), vertices_(std::move(points)) {
  if (dim_ == 0) throw PreconditionError("body dimension must be positive");
  if (vertices_.empty()) throw PreconditionError("body has no vertices");
  for (const Point& p : vertices_) {
    if (p.size() != dim_) {
      throw PreconditionError("point of length " + std::to_string(p.size()) +
                              " in a body of dimension " +
                              std::to_string(dim_));
    }
  }
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                  vertices_.end());
}

Body ScaleBody(const Body& body, const Rat& t) {
  if (sgn(t) < 0) throw PreconditionError("dilation factor must be >= 0");
  std::vector<Point> out;
  out.reserve(body.vertices().size());
  for (const Point& v : body.vertices()) {
    Point w;
    w.reserve(v.size());
    for (const Rat& x : v) w.emplace_back(x * t);
    out.push_back(std::move(w));
  }
  return Body(body.dim(), std::move(out));
}

Body MinkowskiSum(const Body& a, const Body& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError("Minkowski sum of bodies in dimensions " +
                                 std::to_string(a.dim()) + " and " +
                                 std::to_string(b.dim()));
  }
  std::vector<Point> out;
  out.reserve(a.vertices().size() * b.vertices().size());
  for (const Point& u : a.vertices()) {
    for (const Point& v : b.vertices()) {
      Point w(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
      out.push_back(std::move(w));
    }
  }
  return Body(a.dim(), std::move(out));
}

Body CartesianProduct(const Body& a, const Body& b) {
  std::vector<Point> out;
  out.reserve(a.vertices().size() * b.vertices().size());
  for (const Point& u : a.vertices()) {
    for (const Point& v : b.vertices()) {
      Point w(u);
      w.insert(w.end(), v.begin(), v.end());
      out.push_back(std::move(w));
    }
  }
  return Body(a.dim() + b.dim(), std::move(out));
}

namespace {

using IntPoint = std::vector<BigInt>;
using IndexSet = std::vector<int>;

// Boundary simplex of the current triangulation, with the hyperplane
// normal . x = offset oriented so the interior lies on the negative side.
struct Facet {
  IndexSet verts;
  IntPoint normal;
  BigInt offset;
};

BigInt Dot(const IntPoint& u, const IntPoint& v) {
  BigInt acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

// Placing (beneath-beyond) triangulation over integer coordinates. Points
// are inserted one at a time; each insertion cones the new point over the
// boundary facets it strictly sees. Coplanar facets are not seen, which
// keeps the triangulation valid for degenerate inputs.
class PlacingTriangulation {
 public:
  explicit PlacingTriangulation(std::vector<IntPoint> points)
      : pts_(std::move(points)), dim_(pts_.front().size()) {}

  // Sum of |det| over all simplices, i.e. dim! times the hull volume.
  // Zero when the points do not span R^dim.
  BigInt ScaledVolume() {
    IndexSet base = InitialSimplex();
    if (base.size() != dim_ + 1) return 0;

    interior_.assign(dim_, 0);
    for (int i : base) {
      for (std::size_t k = 0; k < dim_; ++k) interior_[k] += pts_[i][k];
    }

    for (std::size_t skip = 0; skip <= dim_; ++skip) {
      IndexSet verts;
      for (std::size_t j = 0; j <= dim_; ++j) {
        if (j != skip) verts.push_back(base[j]);
      }
      facets_.push_back(MakeFacet(std::move(verts)));
    }
    const Facet& opposite = facets_.front();
    BigInt total = opposite.offset - Dot(opposite.normal, pts_[base[0]]);

    std::vector<bool> placed(pts_.size(), false);
    for (int i : base) placed[i] = true;
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      if (!placed[i]) total += Place(static_cast<int>(i));
    }
    return total;
  }

 private:
  // Greedily picks affinely independent points, in input order.
  IndexSet InitialSimplex() const {
    IndexSet chosen = {0};
    std::vector<std::vector<Rat>> basis;
    std::vector<std::size_t> pivots;
    for (std::size_t i = 1; i < pts_.size() && chosen.size() <= dim_; ++i) {
      std::vector<Rat> v(dim_);
      for (std::size_t k = 0; k < dim_; ++k) v[k] = pts_[i][k] - pts_[0][k];
      for (std::size_t r = 0; r < basis.size(); ++r) {
        if (sgn(v[pivots[r]]) == 0) continue;
        const Rat f = v[pivots[r]] / basis[r][pivots[r]];
        for (std::size_t k = 0; k < dim_; ++k) v[k] -= f * basis[r][k];
      }
      const auto nz = std::find_if(v.begin(), v.end(),
                                   [](const Rat& x) { return sgn(x) != 0; });
      if (nz == v.end()) continue;
      pivots.push_back(static_cast<std::size_t>(nz - v.begin()));
      basis.push_back(std::move(v));
      chosen.push_back(static_cast<int>(i));
    }
    return chosen;
  }

  Facet MakeFacet(IndexSet verts) const {
    std::sort(verts.begin(), verts.end());
    const IntPoint& origin = pts_[verts[0]];
    std::vector<IntPoint> rows;
    for (std::size_t j = 1; j < verts.size(); ++j) {
      IntPoint r(dim_);
      for (std::size_t k = 0; k < dim_; ++k) r[k] = pts_[verts[j]][k] - origin[k];
      rows.push_back(std::move(r));
    }
    // Generalized cross product of the edge vectors.
    IntPoint normal(dim_);
    for (std::size_t col = 0; col < dim_; ++col) {
      std::vector<std::vector<BigInt>> minor;
      minor.reserve(rows.size());
      for (const IntPoint& r : rows) {
        std::vector<BigInt> m;
        m.reserve(dim_ - 1);
        for (std::size_t k = 0; k < dim_; ++k) {
          if (k != col) m.push_back(r[k]);
        }
        minor.push_back(std::move(m));
      }
      normal[col] = DeterminantFractionFree(std::move(minor));
      if (col % 2 == 1) normal[col] = -normal[col];
    }
    BigInt offset = Dot(normal, origin);
    const BigInt side =
        Dot(normal, interior_) - BigInt(static_cast<unsigned long>(dim_ + 1)) * offset;
    if (side == 0) {
      throw VerificationError("boundary facet passes through the interior");
    }
    if (side > 0) {
      for (BigInt& x : normal) x = -x;
      offset = -offset;
    }
    return Facet{std::move(verts), std::move(normal), std::move(offset)};
  }

  // Inserts point `p`; returns dim! times the added volume.
  BigInt Place(int p) {
    std::vector<bool> seen(facets_.size(), false);
    BigInt added = 0;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      BigInt height = Dot(facets_[i].normal, pts_[p]) - facets_[i].offset;
      if (height > 0) {
        added += height;
        seen[i] = true;
      }
    }
    if (added == 0) return 0;

    // Ridges of seen facets that appear once border an unseen facet.
    std::map<IndexSet, int> ridges;
    std::vector<Facet> next;
    next.reserve(facets_.size());
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      Facet& f = facets_[i];
      if (!seen[i]) {
        next.push_back(std::move(f));
        continue;
      }
      for (std::size_t drop = 0; drop < f.verts.size(); ++drop) {
        IndexSet r;
        for (std::size_t j = 0; j < f.verts.size(); ++j) {
          if (j != drop) r.push_back(f.verts[j]);
        }
        ++ridges[r];
      }
    }
    for (const auto& [ridge, count] : ridges) {
      if (count != 1) continue;
      IndexSet verts = ridge;
      verts.push_back(p);
      next.push_back(MakeFacet(std::move(verts)));
    }
    facets_ = std::move(next);
    return added;
  }

  std::vector<IntPoint> pts_;
  std::size_t dim_;
  IntPoint interior_;  // dim+1 times an interior point
  std::vector<Facet> facets_;
};

}  // namespace

Rat Volume(const Body& body) {
  const std::size_t n = body.dim();
  const auto verts = body.vertices();
  if (verts.size() <= n) return Rat(0);

  BigInt scale = 1;
  for (const Point& v : verts) {
    for (const Rat& x : v) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    }
  }
  std::vector<IntPoint> pts;
  pts.reserve(verts.size());
  for (const Point& v : verts) {
    IntPoint w;
    w.reserve(n);
    for (const Rat& x : v) w.emplace_back(x.get_num() * (scale / x.get_den()));
    pts.push_back(std::move(w));
  }

  const BigInt scaled = PlacingTriangulation(std::move(pts)).ScaledVolume();
  BigInt denom = Factorial(n);
  BigInt scale_pow;
  mpz_pow_ui(scale_pow.get_mpz_t(), scale.get_mpz_t(), n);
  denom *= scale_pow;
  Rat out(scaled, denom);
  out.canonicalize();
  return out;
}

VolPoly VolumePoly(const Body& p, const Body& q) {
  if (p.dim() != q.dim()) {
    throw DimensionMismatchError("volume polynomial of bodies in dimensions " +
                                 std::to_string(p.dim()) + " and " +
                                 std::to_string(q.dim()));
  }
  const std::size_t n = p.dim();
  std::vector<std::vector<BigInt>> vandermonde(n + 1,
                                               std::vector<BigInt>(n + 1));
  std::vector<Rat> values;
  values.reserve(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    BigInt power = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      vandermonde[t][k] = power;
      power *= static_cast<unsigned long>(t);
    }
    values.push_back(
        Volume(MinkowskiSum(ScaleBody(p, Rat(static_cast<long>(t))), q)));
  }
  Seq coeffs(SolveFractionFree(std::move(vandermonde), values));

  if (coeffs[0] != Volume(q) || coeffs[n] != Volume(p)) {
    throw VerificationError(
        "volume polynomial endpoints disagree with Vol(Q) and Vol(P)");
  }
  if (!coeffs.IsNonNegative()) {
    throw VerificationError("volume polynomial has a negative coefficient");
  }
  return VolPoly{n, std::move(coeffs)};
}

Rat MixedVolume(const Body& p, const Body& q, long k) {
  if (k < 0 || static_cast<std::size_t>(k) > p.dim()) {
    throw PreconditionError("mixed volume index " + std::to_string(k) +
                            " outside [0, " + std::to_string(p.dim()) + "]");
  }
  const VolPoly poly = VolumePoly(p, q);
  const auto uk = static_cast<unsigned long>(k);
  return Rat(Factorial(uk) * Factorial(poly.dim - uk)) * poly.coeffs[uk];
}

Body StandardSimplex(std::size_t n) {
  if (n == 0) throw PreconditionError("simplex dimension must be positive");
  std::vector<Point> pts(1, Point(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    Point e(n, Rat(0));
    e[i] = 1;
    pts.push_back(std::move(e));
  }
  return Body(n, std::move(pts));
}

Body DiagSimplex(std::span<const Rat> lambda) {
  const std::size_t n = lambda.size();
  if (n == 0) throw PreconditionError("simplex dimension must be positive");
  std::vector<Point> pts(1, Point(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(lambda[i]) <= 0) {
      throw PreconditionError("diagonal scaling entries must be positive");
    }
    Point e(n, Rat(0));
    e[i] = lambda[i];
    pts.push_back(std::move(e));
  }
  return Body(n, std::move(pts));
}

Body Box(std::span<const Rat> edges) {
  const std::size_t n = edges.size();
  if (n == 0) throw PreconditionError("box dimension must be positive");
  for (const Rat& e : edges) {
    if (sgn(e) <= 0) throw PreconditionError("box edges must be positive");
  }
  std::vector<Point> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Point corner(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) corner[i] = edges[i];
    }
    pts.push_back(std::move(corner));
  }
  return Body(n, std::move(pts));
}

}  // namespace ulc
