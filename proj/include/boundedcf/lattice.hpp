#pragma once

// Integer lattice arithmetic in O_d with the module basis (1, w), where
// w = sqrt(-d) (d = 1, 2) or w = (1 + sqrt(-d))/2 (d = 3, 7, 11).
// An element u + v*w is stored as its coordinate pair. Points of Q(sqrt(-d))
// are handled in scaled form (U, V; D) meaning (U + V*w)/D with D > 0.
// Everything is templated on the integer type so the same rounding rule
// serves the exact BigInt path and the fast fixed-width enumeration path.

#include <utility>

namespace boundedcf {

/// w^2 = trace*w - norm.
struct FieldShape {
  int d = 1;
  int trace = 0;
  int norm = 1;
};

template <class Int>
struct LatticeCoords {
  Int u{};
  Int v{};

  friend bool operator==(const LatticeCoords&, const LatticeCoords&) = default;
  bool is_zero() const { return u == 0 && v == 0; }
};

template <class Int>
Int lattice_norm(const FieldShape& f, const Int& u, const Int& v) {
  return u * u + Int(f.trace) * u * v + Int(f.norm) * v * v;
}

template <class Int>
Int lattice_norm(const FieldShape& f, const LatticeCoords<Int>& a) {
  return lattice_norm(f, a.u, a.v);
}

template <class Int>
LatticeCoords<Int> lattice_conj(const FieldShape& f, const LatticeCoords<Int>& a) {
  return {a.u + Int(f.trace) * a.v, -a.v};
}

template <class Int>
LatticeCoords<Int> lattice_mul(const FieldShape& f, const LatticeCoords<Int>& a,
                               const LatticeCoords<Int>& b) {
  const Int vv = a.v * b.v;
  return {a.u * b.u - Int(f.norm) * vv, a.u * b.v + a.v * b.u + Int(f.trace) * vv};
}

template <class Int>
LatticeCoords<Int> lattice_add(const LatticeCoords<Int>& a, const LatticeCoords<Int>& b) {
  return {a.u + b.u, a.v + b.v};
}

template <class Int>
LatticeCoords<Int> lattice_sub(const LatticeCoords<Int>& a, const LatticeCoords<Int>& b) {
  return {a.u - b.u, a.v - b.v};
}

/// floor(a / b) for b > 0.
template <class Int>
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a < 0) q -= 1;
  return q;
}

/// Nearest lattice point to (U + V w)/D, D > 0. The seed comes from rounding
/// v first and then u along the sheared axis; the exact answer is taken over
/// the 3x3 block around it. Exact ties go to the lexicographically smallest
/// (u, v).
template <class Int>
LatticeCoords<Int> nearest_scaled(const FieldShape& f, const Int& U, const Int& V, const Int& D) {
  const Int two_d = Int(2) * D;
  const Int v0 = floor_div(Int(2) * V + D, two_d);
  const Int u0 = floor_div(Int(2) * U + Int(f.trace) * (V - v0 * D) + D, two_d);
  LatticeCoords<Int> best{u0 - 1, v0 - 1};
  Int best_dist = lattice_norm(f, Int(U - best.u * D), Int(V - best.v * D));
  for (int du = -1; du <= 1; ++du) {
    for (int dv = -1; dv <= 1; ++dv) {
      const Int cu = u0 + Int(du);
      const Int cv = v0 + Int(dv);
      const Int dist = lattice_norm(f, Int(U - cu * D), Int(V - cv * D));
      if (dist < best_dist) {
        best_dist = dist;
        best = {cu, cv};
      }
    }
  }
  return best;
}

/// True iff (U + V w)/D lies in the closed Voronoi cell of the origin.
template <class Int>
bool in_closed_cell_scaled(const FieldShape& f, const Int& U, const Int& V, const Int& D) {
  const auto mu = nearest_scaled(f, U, V, D);
  if (mu.is_zero()) return true;
  return lattice_norm(f, U, V) == lattice_norm(f, Int(U - mu.u * D), Int(V - mu.v * D));
}

/// Scaled form of p/q for lattice elements p, q != 0: p*conj(q) / N(q).
template <class Int>
std::pair<LatticeCoords<Int>, Int> scaled_quotient(const FieldShape& f, const LatticeCoords<Int>& p,
                                                    const LatticeCoords<Int>& q) {
  return {lattice_mul(f, p, lattice_conj(f, q)), lattice_norm(f, q)};
}

}  // namespace boundedcf
