#include "camc/families.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace camc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string describe(const CyclicFamilyParams& p) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s lambda=%g mu=%g c=%g", family_name(p.kind), p.lambda, p.mu,
                  p.c);
    return buf;
}

}  // namespace

const char* family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::TypeI: return "type1";
        case FamilyKind::TypeII: return "type2";
        default: return "type3";
    }
}

void CyclicFamilyParams::validate() const {
    if (lambda * lambda + mu * mu == 0.0)
        throw DomainError("cyclic family: lambda^2 + mu^2 must be nonzero");
    if (kind != FamilyKind::TypeII && c == 0.0)
        throw DomainError("cyclic family: c must be nonzero for Types I and III");
}

CyclicProfile family_profile(const CyclicFamilyParams& params, double s) {
    params.validate();
    const double k = std::hypot(params.lambda, params.mu);
    const double k2 = k * k;
    const double lam = params.lambda, mu = params.mu, c = params.c;
    CyclicProfile p;
    switch (params.kind) {
        case FamilyKind::TypeI: {
            const double co = std::cos(c * s), si = std::sin(c * s);
            p.r = c / (k * co);
            if (!(p.r > 0.0) || !std::isfinite(p.r))
                throw DomainError("family_profile: r <= 0 on this Type I branch");
            p.rp = c * c * si / (k * co * co);
            p.rpp = c * c * c * (1.0 + si * si) / (k * co * co * co);
            const double ta = si / co;
            p.a = c * lam * ta / k2;
            p.b = c * mu * ta / k2;
            break;
        }
        case FamilyKind::TypeII: {
            const double d = k * s + c;
            p.r = 1.0 / d;
            if (!(p.r > 0.0) || !std::isfinite(p.r))
                throw DomainError("family_profile: vanishing denominator on Type II branch");
            p.rp = -k * p.r * p.r;
            p.rpp = 2.0 * k2 * p.r * p.r * p.r;
            p.a = -lam / (k * d);
            p.b = -mu / (k * d);
            break;
        }
        case FamilyKind::TypeIII: {
            const double sh = std::sinh(c * s), ch = std::cosh(c * s);
            p.r = c / (k * sh);
            if (!(p.r > 0.0) || !std::isfinite(p.r))
                throw DomainError("family_profile: r <= 0 on this Type III branch");
            p.rp = -c * c * ch / (k * sh * sh);
            p.rpp = c * c * c * (1.0 + ch * ch) / (k * sh * sh * sh);
            p.a = -c * lam * ch / (k2 * sh);
            p.b = -c * mu * ch / (k2 * sh);
            break;
        }
    }
    p.ap = lam * p.r * p.r;
    p.bp = mu * p.r * p.r;
    p.app = 2.0 * lam * p.r * p.rp;
    p.bpp = 2.0 * mu * p.r * p.rp;
    return p;
}

Interval domain_interval(const CyclicFamilyParams& params) {
    params.validate();
    const double k = std::hypot(params.lambda, params.mu);
    switch (params.kind) {
        case FamilyKind::TypeI: {
            const double m = kPi / (2.0 * std::abs(params.c));
            return Interval{-m, m, false, false};
        }
        case FamilyKind::TypeII: return Interval{-params.c / k, kInf, false, false};
        default: return Interval{0.0, kInf, false, false};
    }
}

ParametricSurface cyclic_surface(const CyclicFamilyParams& params) {
    params.validate();
    const Interval dom = domain_interval(params);
    ParametricSurface s;
    s.descriptor = describe(params);
    s.eval = [params](double u, double th) {
        const CyclicProfile p = family_profile(params, u);
        return Vec3{p.a + p.r * std::cos(th), p.b + p.r * std::sin(th), u};
    };
    s.jets = [params](double u, double th) {
        const CyclicProfile p = family_profile(params, u);
        const double ct = std::cos(th), st = std::sin(th);
        SurfaceJet j;
        j.X = {p.a + p.r * ct, p.b + p.r * st, u};
        j.Xs = {p.ap + p.rp * ct, p.bp + p.rp * st, 1.0};
        j.Xt = {-p.r * st, p.r * ct, 0.0};
        j.Xss = {p.app + p.rpp * ct, p.bpp + p.rpp * st, 0.0};
        j.Xst = {-p.rp * st, p.rp * ct, 0.0};
        j.Xtt = {-p.r * ct, -p.r * st, 0.0};
        return j;
    };
    s.jet_mode = JetMode::Analytic;
    s.param_domain = {dom.lo, dom.hi, -kInf, kInf};
    s.theta_periodic = true;
    return s;
}

double RotationalProfile::u(double r) const {
    return c1 * std::log(r) + lambda_camc / 8.0 * r * r + c2;
}
double RotationalProfile::up(double r) const { return c1 / r + lambda_camc / 4.0 * r; }
double RotationalProfile::upp(double r) const { return -c1 / (r * r) + lambda_camc / 4.0; }

RotationalProfile rotational_solution(double c1, double c2, double lambda_camc) {
    return RotationalProfile{c1, c2, lambda_camc};
}

ParametricSurface rotational_surface(const RotationalProfile& profile, double r_lo, double r_hi) {
    if (!(0.0 < r_lo && r_lo < r_hi))
        throw DomainError("rotational_surface: need 0 < r_lo < r_hi");
    ParametricSurface s;
    char buf[96];
    std::snprintf(buf, sizeof buf, "rotational c1=%g c2=%g lambda=%g", profile.c1, profile.c2,
                  profile.lambda_camc);
    s.descriptor = buf;
    s.eval = [profile](double r, double th) {
        return Vec3{r * std::cos(th), r * std::sin(th), profile.u(r)};
    };
    s.jets = [profile](double r, double th) {
        const double ct = std::cos(th), st = std::sin(th);
        SurfaceJet j;
        j.X = {r * ct, r * st, profile.u(r)};
        j.Xs = {ct, st, profile.up(r)};
        j.Xt = {-r * st, r * ct, 0.0};
        j.Xss = {0.0, 0.0, profile.upp(r)};
        j.Xst = {-st, ct, 0.0};
        j.Xtt = {-r * ct, -r * st, 0.0};
        return j;
    };
    s.jet_mode = JetMode::Analytic;
    s.param_domain = {r_lo, r_hi, -kInf, kInf};
    s.theta_periodic = true;
    return s;
}

std::pair<CyclicFamilyParams, double> normalize_by_rotation(const CyclicFamilyParams& params) {
    params.validate();
    CyclicFamilyParams out = params;
    out.lambda = std::hypot(params.lambda, params.mu);
    out.mu = 0.0;
    const double phi = std::atan2(params.mu, params.lambda);
    return {out, phi};
}

bool overlap_predicate(const CyclicFamilyParams& params, double s1, double s2) {
    const CyclicProfile p1 = family_profile(params, s1);
    const CyclicProfile p2 = family_profile(params, s2);
    return std::hypot(p1.a - p2.a, p1.b - p2.b) < p1.r + p2.r;
}

namespace {

Vec3 cyclic_point(const CyclicFamilyParams& params, double s, double theta) {
    const CyclicProfile p = family_profile(params, s);
    return {p.a + p.r * std::cos(theta), p.b + p.r * std::sin(theta), s};
}

}  // namespace

double symmetry_check(const CyclicFamilyParams& params, double s, double theta) {
    if (params.mu != 0.0)
        throw DomainError("symmetry_check: expects mu = 0 normalized parameters");
    const Vec3 X = cyclic_point(params, s, theta);
    const Vec3 RX{-X.x, X.y, -X.z};
    return norm(RX - cyclic_point(params, -s, kPi - theta));
}

double mirror_symmetry_check(const CyclicFamilyParams& params, double s, double theta) {
    if (params.mu != 0.0)
        throw DomainError("mirror_symmetry_check: expects mu = 0 normalized parameters");
    const Vec3 X = cyclic_point(params, s, theta);
    const Vec3 MX{X.x, -X.y, X.z};
    return norm(MX - cyclic_point(params, s, -theta));
}

PiecewiseSurface schwarz_extend(const CyclicFamilyParams& params, int copies) {
    params.validate();
    if (copies < 1) throw UnsupportedExtension("schwarz_extend: copies must be >= 1");
    const double k = std::hypot(params.lambda, params.mu);
    const double phi = std::atan2(params.mu, params.lambda);
    const Vec3 line_dir{-std::sin(phi), std::cos(phi), 0.0};
    const ParametricSurface base = cyclic_surface(params);

    PiecewiseSurface out;
    switch (params.kind) {
        case FamilyKind::TypeI: {
            const double period = kPi / std::abs(params.c);
            for (int i = 0; i < copies; ++i)
                out.pieces.push_back(translated(base, Vec3{0.0, 0.0, i * period}));
            for (int m = 0; m <= copies; ++m)
                out.limit_lines.push_back(
                    LimitLine{Vec3{0.0, 0.0, -period / 2.0 + m * period}, line_dir});
            break;
        }
        case FamilyKind::TypeII:
        case FamilyKind::TypeIII: {
            if (copies > 2)
                throw UnsupportedExtension(
                    "schwarz_extend: Types II/III extend by a single 180-degree rotation");
            const Vec3 p0 = params.kind == FamilyKind::TypeII ? Vec3{0.0, 0.0, -params.c / k}
                                                              : Vec3{0.0, 0.0, 0.0};
            out.pieces.push_back(base);
            if (copies == 2) {
                const Mat3 rot = Mat3::axis_angle(line_dir, kPi);
                out.pieces.push_back(transformed(base, rot, p0 - rot * p0));
            }
            out.limit_lines.push_back(LimitLine{p0, line_dir});
            break;
        }
    }
    return out;
}

AsymptoteReport asymptote_probe(const CyclicFamilyParams& params, BoundaryEnd end, double theta) {
    params.validate();
    const double k = std::hypot(params.lambda, params.mu);
    const double k2 = k * k;
    const Interval dom = domain_interval(params);

    AsymptoteReport rep;
    std::vector<double> s_probes;
    const bool to_infinity = end == BoundaryEnd::Upper && !std::isfinite(dom.hi);
    if (to_infinity) {
        rep.kind = AsymptoteReport::LimitKind::VerticalLine;
        if (params.kind == FamilyKind::TypeII) {
            rep.line_point = {0.0, 0.0, 0.0};
        } else {
            rep.line_point = {-params.c * params.lambda / k2, -params.c * params.mu / k2, 0.0};
        }
        rep.line_dir = {0.0, 0.0, 1.0};
        const double s0 = std::max(1.0 / std::max(std::abs(params.c), k), dom.lo + 1.0);
        if (params.kind == FamilyKind::TypeII) {
            for (int j = 0; j < 16; ++j) s_probes.push_back(s0 * std::pow(2.0, j));
        } else {
            // Type III converges exponentially; additive steps avoid sinh overflow.
            for (int j = 0; j < 16; ++j) s_probes.push_back(s0 * (1.0 + 0.75 * j));
        }
    } else {
        const double endpoint = end == BoundaryEnd::Lower ? dom.lo : dom.hi;
        if (!std::isfinite(endpoint))
            throw DomainError("asymptote_probe: no finite endpoint at the requested end");
        rep.kind = AsymptoteReport::LimitKind::HorizontalPlane;
        rep.plane_z = endpoint;
        const double inward = end == BoundaryEnd::Lower ? 1.0 : -1.0;
        const double span = std::isfinite(dom.span()) ? dom.span() : 2.0;
        const double d0 = 0.2 * std::min(span, 2.0);
        for (int j = 0; j < 26; ++j) s_probes.push_back(endpoint + inward * d0 * std::pow(0.5, j));
    }

    double first_planar = -1.0;
    rep.monotone_decreasing = true;
    for (double s : s_probes) {
        const Vec3 X = cyclic_point(params, s, theta);
        double dist;
        if (rep.kind == AsymptoteReport::LimitKind::HorizontalPlane) {
            dist = std::abs(X.z - rep.plane_z);
            const double planar = std::hypot(X.x, X.y);
            if (first_planar < 0.0) first_planar = planar;
            if (planar > 100.0 * std::max(1.0, first_planar)) rep.diverges_in_plane = true;
        } else {
            dist = std::hypot(X.x - rep.line_point.x, X.y - rep.line_point.y);
        }
        if (!rep.s_and_distance.empty() && dist >= rep.s_and_distance.back().second)
            rep.monotone_decreasing = false;
        rep.s_and_distance.emplace_back(s, dist);
    }
    rep.final_distance = rep.s_and_distance.back().second;
    return rep;
}

double cyclic_camc_residual(const CyclicProfile& p, double lambda0, double theta) {
    const double ct = std::cos(theta), st = std::sin(theta);
    const double Q = p.rp + p.ap * ct + p.bp * st;
    const double cross_term = p.ap * st - p.bp * ct;
    return lambda0 * p.r * Q * Q * Q -
           2.0 * (cross_term * cross_term + Q * Q - p.r * (p.rpp + p.app * ct + p.bpp * st));
}

GridSpec default_family_grid(const CyclicFamilyParams& params) {
    params.validate();
    const double k = std::hypot(params.lambda, params.mu);
    GridSpec g;
    g.n_s = 101;
    g.n_theta = 64;
    switch (params.kind) {
        case FamilyKind::TypeI: {
            const double m = kPi / (2.0 * std::abs(params.c));
            g.s_min = -0.89 * m;
            g.s_max = 0.89 * m;
            break;
        }
        case FamilyKind::TypeII: {
            const double lo = -params.c / k;
            g.s_min = lo + 0.5 / k;
            g.s_max = lo + 3.5 / k;
            break;
        }
        case FamilyKind::TypeIII: {
            g.s_min = 0.1 / std::abs(params.c);
            g.s_max = 2.1 / std::abs(params.c);
            break;
        }
    }
    return g;
}

}  // namespace camc
