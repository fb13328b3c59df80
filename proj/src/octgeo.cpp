#include "valspin/octgeo.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

namespace valspin {

namespace {

// Cayley-Dickson conjugation on a span of width 2^level.
void cd_conj(const double* x, double* out, std::size_t width) {
    out[0] = x[0];
    for (std::size_t t = 1; t < width; ++t) out[t] = -x[t];
}

// Cayley-Dickson product on spans of width 2^level, doubling downward until
// the real numbers: (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)).
void cd_mul(const double* x, const double* y, double* out, std::size_t width) {
    if (width == 1) {
        out[0] = x[0] * y[0];
        return;
    }
    const std::size_t h = width / 2;
    const double *a = x, *b = x + h, *c = y, *d = y + h;
    double conj_d[8], conj_c[8], t1[8], t2[8];
    cd_conj(d, conj_d, h);
    cd_conj(c, conj_c, h);
    cd_mul(a, c, t1, h);        // ac
    cd_mul(conj_d, b, t2, h);   // conj(d) b
    for (std::size_t t = 0; t < h; ++t) out[t] = t1[t] - t2[t];
    cd_mul(d, a, t1, h);        // da
    cd_mul(b, conj_c, t2, h);   // b conj(c)
    for (std::size_t t = 0; t < h; ++t) out[h + t] = t1[t] + t2[t];
}

void require_unit(double norm, const char* which) {
    if (std::abs(norm - 1.0) > kGeomTol) {
        std::ostringstream msg;
        msg << which << " must be a unit vector (|" << which << "| = " << norm << ")";
        throw ArgumentError(msg.str());
    }
}

void require_orthogonal(double inner, const char* pair) {
    if (std::abs(inner) > kGeomTol) {
        std::ostringstream msg;
        msg << pair << " must be orthogonal (<" << pair << "> = " << inner << ")";
        throw ArgumentError(msg.str());
    }
}

double vec_inner(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
    return s;
}

void require_orthonormal_pair(const std::vector<double>& u, const std::vector<double>& v) {
    if (u.size() != v.size()) {
        throw ArgumentError("the two spanning vectors must have equal length");
    }
    require_unit(std::sqrt(vec_inner(u, u)), "u");
    require_unit(std::sqrt(vec_inner(v, v)), "v");
    require_orthogonal(vec_inner(u, v), "u,v");
}

OctPair pair_from_coords(const std::vector<double>& x) {
    if (x.size() != 16) {
        throw ArgumentError("a point of O^2 needs 16 coordinates, got " + std::to_string(x.size()));
    }
    OctPair p;
    for (std::size_t t = 0; t < 8; ++t) {
        p.first.c[t] = x[t];
        p.second.c[t] = x[8 + t];
    }
    return p;
}

// Whether the target vector lies in the span of the orthonormal pair (p1, p2).
bool in_span(const OctPair& target, const OctPair& p1, const OctPair& p2) {
    const double c1 = pair_inner(target, p1);
    const double c2 = pair_inner(target, p2);
    double residual = 0;
    for (std::size_t t = 0; t < 8; ++t) {
        const double r1 = target.first.c[t] - c1 * p1.first.c[t] - c2 * p2.first.c[t];
        const double r2 = target.second.c[t] - c1 * p1.second.c[t] - c2 * p2.second.c[t];
        residual += r1 * r1 + r2 * r2;
    }
    return std::sqrt(residual) <= kGeomTol;
}

} // namespace

Octonion Octonion::unit(std::size_t i) {
    if (i >= 8) throw ArgumentError("octonion basis index must be 0..7");
    Octonion o;
    o.c[i] = 1.0;
    return o;
}

Octonion operator+(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (std::size_t t = 0; t < 8; ++t) r.c[t] = a.c[t] + b.c[t];
    return r;
}

Octonion operator-(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (std::size_t t = 0; t < 8; ++t) r.c[t] = a.c[t] - b.c[t];
    return r;
}

Octonion operator*(double s, const Octonion& a) {
    Octonion r;
    for (std::size_t t = 0; t < 8; ++t) r.c[t] = s * a.c[t];
    return r;
}

Octonion oct_mul(const Octonion& a, const Octonion& b) {
    Octonion r;
    cd_mul(a.c.data(), b.c.data(), r.c.data(), 8);
    return r;
}

Octonion oct_conj(const Octonion& a) {
    Octonion r;
    cd_conj(a.c.data(), r.c.data(), 8);
    return r;
}

double oct_inner(const Octonion& a, const Octonion& b) {
    double s = 0;
    for (std::size_t t = 0; t < 8; ++t) s += a.c[t] * b.c[t];
    return s;
}

double oct_norm(const Octonion& a) { return std::sqrt(oct_inner(a, a)); }

double wedge_norm_sq(const Octonion& a, const Octonion& b) {
    const double ip = oct_inner(a, b);
    return oct_inner(a, a) * oct_inner(b, b) - ip * ip;
}

double pair_inner(const OctPair& u, const OctPair& v) {
    return oct_inner(u.first, v.first) + oct_inner(u.second, v.second);
}

double sectional_curvature_op2(const TangentPlanePair& plane) {
    require_unit(std::sqrt(pair_inner(plane.u, plane.u)), "u");
    require_unit(std::sqrt(pair_inner(plane.v, plane.v)), "v");
    require_orthogonal(pair_inner(plane.u, plane.v), "u,v");

    const Octonion& a = plane.u.first;
    const Octonion& b = plane.u.second;
    const Octonion& c = plane.v.first;
    const Octonion& d = plane.v.second;

    const Octonion ab = oct_mul(a, oct_conj(b));
    const Octonion cd = oct_mul(c, oct_conj(d));
    const Octonion ad = oct_mul(a, oct_conj(d));
    const Octonion cb = oct_mul(c, oct_conj(b));

    return 4.0 * (wedge_norm_sq(a, c) + wedge_norm_sq(b, d) +
                  0.25 * oct_inner(a, a) * oct_inner(d, d) +
                  0.25 * oct_inner(b, b) * oct_inner(c, c) +
                  0.5 * oct_inner(ab, cd) - oct_inner(ad, cb));
}

std::vector<double> ComplexStructure::apply(const std::vector<double>& v) const {
    if (v.size() % 2 != 0) {
        throw ArgumentError("a complex structure needs an even number of real coordinates");
    }
    std::vector<double> out(v.size());
    for (std::size_t t = 0; t + 1 < v.size(); t += 2) {
        out[t] = -v[t + 1];
        out[t + 1] = v[t];
    }
    return out;
}

double kaehler_angle(const std::vector<double>& v, const std::vector<double>& w,
                     const ComplexStructure& j) {
    require_orthonormal_pair(v, w);
    const double cos_phi = vec_inner(v, j.apply(w));
    const double clamped = std::min(1.0, std::abs(cos_phi));
    return std::acos(clamped);
}

double sectional_curvature_cpn(const std::vector<double>& v, const std::vector<double>& w) {
    require_orthonormal_pair(v, w);
    const double cos_phi = vec_inner(v, ComplexStructure{}.apply(w));
    return 1.0 + 3.0 * cos_phi * cos_phi;
}

Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
    return Quaternion{
        a.r * b.r - a.i * b.i - a.j * b.j - a.k * b.k,
        a.r * b.i + a.i * b.r + a.j * b.k - a.k * b.j,
        a.r * b.j - a.i * b.k + a.j * b.r + a.k * b.i,
        a.r * b.k + a.i * b.j - a.j * b.i + a.k * b.r,
    };
}

Quaternion quat_conj(const Quaternion& a) { return Quaternion{a.r, -a.i, -a.j, -a.k}; }

double quaternionic_lambda_sq(const std::vector<double>& u1, const std::vector<double>& u2) {
    if (u1.size() % 4 != 0 || u1.empty() || u1.size() != u2.size()) {
        throw ArgumentError("quaternionic vectors need equal lengths, a positive multiple of 4");
    }
    Quaternion h{};
    for (std::size_t t = 0; t < u1.size(); t += 4) {
        const Quaternion q1{u1[t], u1[t + 1], u1[t + 2], u1[t + 3]};
        const Quaternion q2{u2[t], u2[t + 1], u2[t + 2], u2[t + 3]};
        const Quaternion p = quat_mul(quat_conj(q1), q2);
        h.r += p.r;
        h.i += p.i;
        h.j += p.j;
        h.k += p.k;
    }
    return h.i * h.i + h.j * h.j + h.k * h.k;
}

double sectional_curvature_hpn(const std::vector<double>& u1, const std::vector<double>& u2) {
    require_orthonormal_pair(u1, u2);
    return 1.0 + 3.0 * quaternionic_lambda_sq(u1, u2);
}

KlainCheckReport klain_identity_check(Space space, const std::vector<double>& u,
                                      const std::vector<double>& v) {
    if (space == Space::op2) {
        TangentPlanePair plane{pair_from_coords(u), pair_from_coords(v)};
        return klain_identity_check(plane);
    }

    KlainCheckReport rep;
    rep.space = space;
    if (space == Space::cpn) {
        const double curvature = sectional_curvature_cpn(u, v);
        const double cos_phi = std::cos(kaehler_angle(u, v));
        rep.identity = "K = Kl[tau_2,0] + 3*Kl[tau_2,1]";
        rep.curvature = curvature;
        rep.combination = 1.0 + 3.0 * cos_phi * cos_phi;
    } else {
        rep.identity = "K = Kl[mu_2] + 3*Kl[tau]";
        rep.curvature = sectional_curvature_hpn(u, v);
        // Kl[mu_2] = 1 and Kl[tau] = lambda^2.
        rep.combination = 1.0 + 3.0 * quaternionic_lambda_sq(u, v);
    }
    rep.difference = std::abs(rep.curvature - rep.combination);
    rep.passed = rep.difference <= kGeomTol;
    return rep;
}

KlainCheckReport klain_identity_check(const TangentPlanePair& plane) {
    const double curvature = sectional_curvature_op2(plane);

    // The octonionic pseudo-volume has tabulated Klain values at exactly two
    // planes: 0 on span{(1,0),(e1,0)} and 1 on span{(1,0),(0,1)}.  Recognize
    // the plane as a subspace (any orthonormal basis of it is accepted).
    const OctPair one_zero{Octonion::unit(0), Octonion{}};
    const OctPair e1_zero{Octonion::unit(1), Octonion{}};
    const OctPair zero_one{Octonion{}, Octonion::unit(0)};

    double kl_tau_oct = 0;
    if (in_span(one_zero, plane.u, plane.v) && in_span(e1_zero, plane.u, plane.v)) {
        kl_tau_oct = 0.0;
    } else if (in_span(one_zero, plane.u, plane.v) && in_span(zero_one, plane.u, plane.v)) {
        kl_tau_oct = 1.0;
    } else {
        throw UnsupportedPlaneError(
            "Kl[tau_oct] is tabulated only at span{(1,0),(e1,0)} and span{(1,0),(0,1)}; "
            "the identity cannot be checked at other planes");
    }

    KlainCheckReport rep;
    rep.space = Space::op2;
    rep.identity = "K = 4*Kl[mu_2] - 3*Kl[tau_oct]";
    rep.curvature = curvature;
    rep.combination = 4.0 - 3.0 * kl_tau_oct;
    rep.difference = std::abs(rep.curvature - rep.combination);
    rep.passed = rep.difference <= kGeomTol;
    return rep;
}

} // namespace valspin
