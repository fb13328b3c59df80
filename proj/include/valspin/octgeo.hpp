#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "valspin/errors.hpp"

namespace valspin {

// Tolerance for every floating-point geometry check (orthonormality
// validation, identity verification).  The identities are algebraic and
// well-conditioned at unit scale, so double precision leaves a wide margin.
inline constexpr double kGeomTol = 1e-9;

// Element of the octonions in the basis {1, e1, ..., e7}: c[0] is the real
// part.  Multiplication is fixed by Cayley-Dickson doubling of the
// quaternions, (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)); the full 8x8
// basis table is pinned by unit tests.
struct Octonion {
    std::array<double, 8> c{};

    // Basis element: unit(0) = 1, unit(i) = e_i for 1 <= i <= 7.
    static Octonion unit(std::size_t i);
};

Octonion operator+(const Octonion& a, const Octonion& b);
Octonion operator-(const Octonion& a, const Octonion& b);
Octonion operator*(double s, const Octonion& a);

Octonion oct_mul(const Octonion& a, const Octonion& b);
Octonion oct_conj(const Octonion& a);
// Euclidean inner product of the coordinate vectors.
double oct_inner(const Octonion& a, const Octonion& b);
double oct_norm(const Octonion& a);
// || a ^ b ||^2 = |a|^2 |b|^2 - <a,b>^2 (Gram determinant).
double wedge_norm_sq(const Octonion& a, const Octonion& b);

// Element of O^2 = R^16.
struct OctPair {
    Octonion first;
    Octonion second;
};

double pair_inner(const OctPair& u, const OctPair& v);

// A tangent 2-plane of OP^2 at the base point, spanned by u = (a,b) and
// v = (c,d).  The curvature formula requires |u| = |v| = 1 and <u,v> = 0;
// this is validated (to kGeomTol), never silently re-orthonormalized.
struct TangentPlanePair {
    OctPair u;
    OctPair v;
};

// Sectional curvature of OP^2 at the plane, normalized so that sampled values
// lie in [1, 4]:
//   K = 4 [ |a^c|^2 + |b^d|^2 + 1/4 |a|^2 |d|^2 + 1/4 |b|^2 |c|^2
//           + 1/2 <a conj(b), c conj(d)> - <a conj(d), c conj(b)> ].
// Throws ArgumentError when the plane is not orthonormal.
double sectional_curvature_op2(const TangentPlanePair& plane);

// The standard complex structure on R^{2n} with interleaved coordinates:
// J(x0, y0, x1, y1, ...) = (-y0, x0, -y1, x1, ...).
class ComplexStructure {
public:
    std::vector<double> apply(const std::vector<double>& v) const;
};

// Kaehler angle phi(E) in [0, pi/2] of the plane spanned by the orthonormal
// pair v, w in C^n = R^{2n}: cos^2 phi = <v, Jw>^2.
double kaehler_angle(const std::vector<double>& v, const std::vector<double>& w,
                     const ComplexStructure& j = ComplexStructure{});

// K(E) = 1 + 3 cos^2 phi(E) for CP^n.
double sectional_curvature_cpn(const std::vector<double>& v, const std::vector<double>& w);

// Quaternion in the basis {1, i, j, k}.
struct Quaternion {
    double r = 0, i = 0, j = 0, k = 0;
};

Quaternion quat_mul(const Quaternion& a, const Quaternion& b);
Quaternion quat_conj(const Quaternion& a);

// lambda^2 = |Im_H sum_t conj(u1_t) u2_t|^2, the squared norm of the pure
// part of the quaternionic hermitian product.  Inputs are real 4n-vectors
// (consecutive blocks of four are quaternion coordinates).
double quaternionic_lambda_sq(const std::vector<double>& u1, const std::vector<double>& u2);

// K(E) = 1 + 3 lambda^2 for HP^n; u1, u2 orthonormal over the reals.
double sectional_curvature_hpn(const std::vector<double>& u1, const std::vector<double>& u2);

enum class Space { cpn, hpn, op2 };

// Result of evaluating one curvature/Klain-function identity at one plane:
// the curvature side, the linear-combination side, and their difference.
struct KlainCheckReport {
    Space space;
    std::string identity;  // e.g. "K = 4*Kl[mu_2] - 3*Kl[tau_oct]"
    double curvature;
    double combination;
    double difference;
    bool passed;  // difference <= kGeomTol
};

// Checks the identity named by the space at the plane spanned by u, v:
//   cpn: K = Kl[tau_{2,0}] + 3 Kl[tau_{2,1}] = 1 + 3 cos^2 phi  (any plane);
//   hpn: K = Kl[mu_2] + 3 Kl[tau] = 1 + 3 lambda^2              (any plane);
//   op2: K = 4 Kl[mu_2] - 3 Kl[tau_oct], checkable only at the two planes
//        with tabulated Kl[tau_oct]: span{(1,0),(e1,0)} (value 0) and
//        span{(1,0),(0,1)} (value 1); any other plane raises
//        UnsupportedPlaneError.
// Vector lengths: cpn even, hpn divisible by 4, op2 exactly 16 (first eight
// coordinates = first octonion, last eight = second).
KlainCheckReport klain_identity_check(Space space, const std::vector<double>& u,
                                      const std::vector<double>& v);

// Typed OP^2 variant.
KlainCheckReport klain_identity_check(const TangentPlanePair& plane);

} // namespace valspin
