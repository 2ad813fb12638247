// Copyright 2026 The hopfsmith Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hopfsmith/integrals.hpp"

#include <stdexcept>

#include "hopfsmith/linsolve.hpp"
#include "hopfsmith/yd.hpp"

namespace hopfsmith {

namespace {

// Left/right integral conditions on the n unknowns of t or λ.
void add_integral_equations(LinearSystem& sys, const HopfData& h, Side side, Carrier carrier) {
    const std::size_t n = h.dim();
    FieldSpec f = h.field();
    if (carrier == Carrier::in_h) {
        AlgebraOps alg(h.alg);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t c = 0; c < n; ++c) {
                Equation eq(f);
                for (std::size_t k = 0; k < n; ++k) {
                    const auto& terms = side == Side::left ? alg.product(i, k) : alg.product(k, i);
                    for (const auto& t : terms)
                        if (t.index == c) eq.add(k, t.coef);
                }
                eq.add(c, -h.coa.counit[i]);
                sys.add(eq);
            }
        return;
    }
    // left: sum_b δ(k,a,b) λ_b = u_a λ_k;  right: sum_a δ(k,a,b) λ_a = u_b λ_k
    std::vector<Equation> rows;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Equation> eqs(n, Equation(f));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Scalar& d = h.coa.comult(k, a, b);
                if (d.is_zero()) continue;
                if (side == Side::left)
                    eqs[a].add(b, d);
                else
                    eqs[b].add(a, d);
            }
        for (std::size_t a = 0; a < n; ++a) {
            eqs[a].add(k, -h.alg.unit[a]);
            sys.add(eqs[a]);
        }
    }
}

Vec ad_left_on_basis(const ModuleAction& m, std::size_t i, std::size_t j) {
    Vec v;
    for (std::size_t k = 0; k < m.space_dim; ++k) v.push_back(m.alpha(i, j, k));
    return v;
}

bool linear_under(const HopfData& h, const ModuleAction& m, std::span<const Scalar> lambda) {
    const std::size_t n = h.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (dot(lambda, ad_left_on_basis(m, i, j)) != h.coa.counit[i] * lambda[j]) return false;
    return true;
}

// Λ(b, q) = λ(e_b S(e_q))
Mat lambda_twisted(const HopfData& h, std::span<const Scalar> lambda) {
    AlgebraOps alg(h.alg);
    const std::size_t n = h.dim();
    Mat out(h.field(), n, n);
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t q = 0; q < n; ++q) out(b, q) = dot(lambda, alg.mul(unit_vec(h.field(), n, b), h.antipode.col(q)));
    return out;
}

std::array<bool, 3> ad_invariant_conditions(const HopfData& h, std::span<const Scalar> lambda) {
    ModuleAction ad = adjoint_action(h, AdjointAction::left);
    return {is_integral(h, lambda, Side::left, Carrier::in_dual), linear_under(h, ad, lambda),
            dot(lambda, h.alg.unit).is_one()};
}

std::array<bool, 3> ad_coinvariant_conditions(const HopfData& h, std::span<const Scalar> t) {
    const std::size_t n = h.dim();
    ComoduleCoaction coad = adjoint_coaction(h, AdjointCoaction::left);
    Vec rho = zero_vec(h.field(), n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (!t[k].is_zero()) rho[a * n + b] += t[k] * coad.rho(k, a, b);
    CoalgebraOps coa(h.coa);
    return {is_integral(h, t, Side::left, Carrier::in_h), rho == kron(h.alg.unit, t), coa.eps(t).is_one()};
}

}  // namespace

SubspaceBasis integral_space(const HopfData& h, Side side, Carrier carrier) {
    LinearSystem sys(h.field(), h.dim());
    add_integral_equations(sys, h, side, carrier);
    return SubspaceBasis{h.dim(), reduce(sys).nullspace_basis(), std::nullopt};
}

bool is_integral(const HopfData& h, std::span<const Scalar> v, Side side, Carrier carrier) {
    LinearSystem sys(h.field(), h.dim());
    add_integral_equations(sys, h, side, carrier);
    return sys.satisfied_by(v);
}

std::optional<IntegralCertificate> total_integral(const HopfData& h, Carrier carrier, Side side) {
    SubspaceBasis space = integral_space(h, side, carrier);
    const Vec& norm = carrier == Carrier::in_h ? h.coa.counit : h.alg.unit;
    for (std::size_t c = 0; c < space.dim(); ++c) {
        Vec v = space.basis.col(c);
        Scalar s = dot(norm, v);
        if (s.is_zero()) continue;
        IntegralCertificate cert;
        cert.side = side;
        cert.carrier = carrier;
        cert.vector = scaled(v, s.inverse());
        cert.total = dot(norm, cert.vector).is_one();
        if (is_integral(h, cert.vector, side, carrier)) cert.verified.push_back("integral");
        if (cert.total) cert.verified.push_back("total");
        return cert;
    }
    return std::nullopt;
}

bool is_unimodular(const HopfData& h, Carrier carrier) {
    return same_span(integral_space(h, Side::left, carrier).basis, integral_space(h, Side::right, carrier).basis);
}

AdIntegralSearch ad_invariant_search(const HopfData& h) {
    const std::size_t n = h.dim();
    FieldSpec f = h.field();
    LinearSystem sys(f, n);
    add_integral_equations(sys, h, Side::left, Carrier::in_dual);
    ModuleAction ad = adjoint_action(h, AdjointAction::left);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Equation eq(f);
            for (std::size_t k = 0; k < n; ++k) eq.add(k, ad.alpha(i, j, k));
            eq.add(j, -h.coa.counit[i]);
            sys.add(eq);
        }
    AdIntegralSearch out;
    out.homogeneous_dim = reduce(sys).nullity();
    Equation norm(f);
    for (std::size_t k = 0; k < n; ++k) norm.add(k, h.alg.unit[k]);
    norm.add_rhs(f.one());
    sys.add(norm);
    auto sol = solve_affine(sys);
    if (!sol) return out;
    out.affine_nullity = sol->nullspace.cols();
    auto ok = ad_invariant_conditions(h, sol->particular);
    IntegralCertificate cert{Side::left, Carrier::in_dual, sol->particular, ok[2], ok[0] && ok[1] && ok[2], false, {}};
    const char* names[] = {"a", "b", "c"};
    for (int c = 0; c < 3; ++c)
        if (ok[c]) cert.verified.push_back(names[c]);
    out.integral = cert;
    return out;
}

std::optional<IntegralCertificate> ad_invariant_integral(const HopfData& h) { return ad_invariant_search(h).integral; }

AdIntegralSearch ad_coinvariant_search(const HopfData& h) {
    const std::size_t n = h.dim();
    FieldSpec f = h.field();
    LinearSystem sys(f, n);
    add_integral_equations(sys, h, Side::left, Carrier::in_h);
    ComoduleCoaction coad = adjoint_coaction(h, AdjointCoaction::left);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Equation eq(f);
            for (std::size_t k = 0; k < n; ++k) {
                eq.add(k, coad.rho(k, a, b));
                if (b == k) eq.add(k, -h.alg.unit[a]);
            }
            sys.add(eq);
        }
    AdIntegralSearch out;
    out.homogeneous_dim = reduce(sys).nullity();
    Equation norm(f);
    for (std::size_t k = 0; k < n; ++k) norm.add(k, h.coa.counit[k]);
    norm.add_rhs(f.one());
    sys.add(norm);
    auto sol = solve_affine(sys);
    if (!sol) return out;
    out.affine_nullity = sol->nullspace.cols();
    auto ok = ad_coinvariant_conditions(h, sol->particular);
    IntegralCertificate cert{Side::left, Carrier::in_h, sol->particular, ok[2], false, ok[0] && ok[1] && ok[2], {}};
    const char* names[] = {"a", "b", "c"};
    for (int c = 0; c < 3; ++c)
        if (ok[c]) cert.verified.push_back(names[c]);
    out.integral = cert;
    return out;
}

std::optional<IntegralCertificate> ad_coinvariant_integral(const HopfData& h) {
    return ad_coinvariant_search(h).integral;
}

std::array<bool, 4> adjoint_linearity(const HopfData& h, std::span<const Scalar> lambda) {
    return {linear_under(h, adjoint_action(h, AdjointAction::left), lambda),
            linear_under(h, adjoint_action(h, AdjointAction::right), lambda),
            linear_under(h, adjoint_action(h, AdjointAction::left_bar), lambda),
            linear_under(h, adjoint_action(h, AdjointAction::right_bar), lambda)};
}

Vec sigma_from_integral(const HopfData& h, std::span<const Scalar> t) {
    const std::size_t n = h.dim();
    CoalgebraOps coa(h.coa);
    Vec e = zero_vec(h.field(), n * n);
    for (std::size_t k = 0; k < n; ++k) {
        if (t[k].is_zero()) continue;
        for (const auto& d : coa.delta(k))
            for (std::size_t c = 0; c < n; ++c)
                if (!h.antipode(c, d.b).is_zero()) e[d.a * n + c] += t[k] * d.coef * h.antipode(c, d.b);
    }
    return e;
}

bool verify_separability_idempotent(const HopfData& h, std::span<const Scalar> e) {
    const std::size_t n = h.dim();
    AlgebraOps alg(h.alg);
    FieldSpec f = h.field();
    if (e.size() != n * n) throw DimensionError("separability idempotent must live in H⊗H");
    Vec me = zero_vec(f, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) alg.add_product(a, b, e[a * n + b], me);
    if (me != h.alg.unit) return false;
    for (std::size_t i = 0; i < n; ++i) {
        Vec lhs = zero_vec(f, n * n), rhs = zero_vec(f, n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Scalar& x = e[a * n + b];
                if (x.is_zero()) continue;
                for (const auto& t : alg.product(i, a)) lhs[t.index * n + b] += x * t.coef;
                for (const auto& t : alg.product(b, i)) rhs[a * n + t.index] += x * t.coef;
            }
        if (lhs != rhs) return false;
    }
    return true;
}

std::optional<Vec> blind_idempotent_search(const HopfData& h) {
    const std::size_t n = h.dim();
    FieldSpec f = h.field();
    AlgebraOps alg(h.alg);
    LinearSystem sys(f, n * n);
    std::vector<Equation> unit(n, Equation(f));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (const auto& t : alg.product(a, b)) unit[t.index].add(a * n + b, t.coef);
    for (std::size_t k = 0; k < n; ++k) {
        unit[k].add_rhs(h.alg.unit[k]);
        sys.add(unit[k]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Equation> eqs(n * n, Equation(f));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                for (const auto& t : alg.product(i, a)) eqs[t.index * n + b].add(a * n + b, t.coef);
                for (const auto& t : alg.product(b, i)) eqs[a * n + t.index].add(a * n + b, -t.coef);
            }
        for (const auto& eq : eqs) sys.add(eq);
    }
    auto sol = solve_affine(sys);
    if (!sol) return std::nullopt;
    return sol->particular;
}

Mat theta_from_integral(const HopfData& h, std::span<const Scalar> lambda) {
    const std::size_t n = h.dim();
    CoalgebraOps coa(h.coa);
    Mat tw = lambda_twisted(h, lambda);
    Mat theta(h.field(), n, n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (const auto& d : coa.delta(p))
            for (std::size_t q = 0; q < n; ++q)
                if (!tw(d.b, q).is_zero()) theta(d.a, p * n + q) += d.coef * tw(d.b, q);
    return theta;
}

bool verify_coseparability_retraction(const HopfData& h, const Mat& theta) {
    const std::size_t n = h.dim();
    FieldSpec f = h.field();
    if (theta.rows() != n || theta.cols() != n * n) throw DimensionError("retraction must be an n x n² matrix");
    CoalgebraOps coa(h.coa);
    if (theta * coa.comult_matrix() != Mat::identity(f, n)) return false;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            Vec image = coa.comul(theta.col(p * n + q));
            Vec left = zero_vec(f, n * n), right = zero_vec(f, n * n);
            for (const auto& d : coa.delta(p))
                for (std::size_t r = 0; r < n; ++r) left[d.a * n + r] += d.coef * theta(r, d.b * n + q);
            for (const auto& d : coa.delta(q))
                for (std::size_t r = 0; r < n; ++r) right[r * n + d.b] += d.coef * theta(r, p * n + d.a);
            if (image != left || image != right) return false;
        }
    return true;
}

bool left_integral_identity(const HopfData& h, std::span<const Scalar> lambda) {
    const std::size_t n = h.dim();
    CoalgebraOps coa(h.coa);
    Mat theta = theta_from_integral(h, lambda);
    Mat tw = lambda_twisted(h, lambda);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            Vec rhs = zero_vec(h.field(), n);
            for (const auto& d : coa.delta(q)) rhs[d.b] += d.coef * tw(p, d.a);
            if (theta.col(p * n + q) != rhs) return false;
        }
    return true;
}

std::optional<Mat> blind_retraction_search(const HopfData& h) {
    const std::size_t n = h.dim(), n2 = n * n;
    FieldSpec f = h.field();
    CoalgebraOps coa(h.coa);
    auto var = [&](std::size_t r, std::size_t p, std::size_t q) { return r * n2 + p * n + q; };
    LinearSystem sys(f, n * n2);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < n; ++r) {
            Equation eq(f);
            for (const auto& d : coa.delta(k)) eq.add(var(r, d.a, d.b), d.coef);
            if (r == k) eq.add_rhs(f.one());
            sys.add(eq);
        }
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            std::vector<Equation> left(n2, Equation(f)), right(n2, Equation(f));
            for (std::size_t r = 0; r < n; ++r)
                for (const auto& d : coa.delta(r)) {
                    left[d.a * n + d.b].add(var(r, p, q), d.coef);
                    right[d.a * n + d.b].add(var(r, p, q), d.coef);
                }
            for (const auto& d : coa.delta(p))
                for (std::size_t b = 0; b < n; ++b) left[d.a * n + b].add(var(b, d.b, q), -d.coef);
            for (const auto& d : coa.delta(q))
                for (std::size_t a = 0; a < n; ++a) right[a * n + d.b].add(var(a, p, d.a), -d.coef);
            for (const auto& eq : left) sys.add(eq);
            for (const auto& eq : right) sys.add(eq);
        }
    auto sol = solve_affine(sys);
    if (!sol) return std::nullopt;
    return Mat(f, n, n2, sol->particular);
}

SeparabilityRoutes separability_routes(const HopfData& h) {
    SeparabilityRoutes r;
    r.total = total_integral(h, Carrier::in_h);
    if (r.total) {
        r.formula_element = sigma_from_integral(h, r.total->vector);
        r.formula_verified = verify_separability_idempotent(h, *r.formula_element);
    }
    if (auto blind = blind_idempotent_search(h)) {
        r.blind_found = true;
        r.blind_verified = verify_separability_idempotent(h, *blind);
    }
    return r;
}

SeparabilityRoutes coseparability_routes(const HopfData& h) {
    SeparabilityRoutes r;
    r.total = total_integral(h, Carrier::in_dual);
    if (r.total) {
        r.formula_map = theta_from_integral(h, r.total->vector);
        r.formula_verified = verify_coseparability_retraction(h, *r.formula_map) &&
                             left_integral_identity(h, r.total->vector);
    }
    if (auto blind = blind_retraction_search(h)) {
        r.blind_found = true;
        r.blind_verified = verify_coseparability_retraction(h, *blind);
    }
    return r;
}

std::optional<SeparabilityCertificate> separability_idempotent(const HopfData& h) {
    SeparabilityRoutes r = separability_routes(h);
    if (!r.agree()) throw std::logic_error("separability: integral formula and direct search disagree");
    if (!r.total) return std::nullopt;
    SeparabilityCertificate c;
    c.kind = SeparabilityCertificate::Kind::idempotent_for_algebra;
    c.idempotent = *r.formula_element;
    c.route = "formula";
    c.verified = {"multiplication", "bimodule", "search_agrees"};
    return c;
}

std::optional<SeparabilityCertificate> coseparability_retraction(const HopfData& h) {
    SeparabilityRoutes r = coseparability_routes(h);
    if (!r.agree()) throw std::logic_error("coseparability: integral formula and direct search disagree");
    if (!r.total) return std::nullopt;
    SeparabilityCertificate c;
    c.kind = SeparabilityCertificate::Kind::retraction_for_coalgebra;
    c.retraction = *r.formula_map;
    c.route = "formula";
    c.verified = {"retraction", "bicolinear", "left_integral_identity", "search_agrees"};
    return c;
}

}  // namespace hopfsmith
