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

#include "hopfsmith/yd.hpp"

#include <stdexcept>

namespace hopfsmith {

namespace {

Mat action_matrix(const ModuleAction& m, std::size_t i) {
    const std::size_t d = m.space_dim;
    Mat a(m.alpha.field(), d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) a(k, j) = m.alpha(i, j, k);
    return a;
}

// Rows indexed a * d + k (H factor a, space factor k), columns by the source vector.
Mat coaction_matrix(const ComoduleCoaction& c, std::size_t n) {
    const std::size_t d = c.space_dim;
    Mat r(c.rho.field(), n * d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t k = 0; k < d; ++k) r(a * d + k, j) = c.rho(j, a, k);
    return r;
}

void set_action_column(ModuleAction& m, std::size_t i, std::size_t j, std::span<const Scalar> v) {
    for (std::size_t k = 0; k < v.size(); ++k) m.alpha(i, j, k) = v[k];
}

// out[a * d + k] += c * x[a] * y[k]
void add_outer(Vec& out, const Scalar& c, std::span<const Scalar> x, std::span<const Scalar> y) {
    if (c.is_zero()) return;
    const std::size_t d = y.size();
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (x[a].is_zero()) continue;
        Scalar ca = c * x[a];
        for (std::size_t k = 0; k < d; ++k)
            if (!y[k].is_zero()) out[a * d + k] += ca * y[k];
    }
}

}  // namespace

ModuleAction adjoint_action(const HopfData& h, AdjointAction which) {
    HopfOps ops(h);
    const std::size_t n = h.dim();
    FieldSpec f = h.field();
    const bool right = which == AdjointAction::right || which == AdjointAction::right_bar ||
                       which == AdjointAction::right_regular;
    ModuleAction m{right ? Side::right : Side::left, n, Tensor3(f, n, n, n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = ops.basis(j);
            Vec out = zero_vec(f, n);
            if (which == AdjointAction::left_regular) {
                out = ops.mul(ops.basis(i), x);
            } else if (which == AdjointAction::right_regular) {
                out = ops.mul(x, ops.basis(i));
            } else {
                for (const auto& t : ops.coa().delta(i)) {
                    Vec a = ops.basis(t.a), b = ops.basis(t.b);
                    Vec term;
                    switch (which) {
                        case AdjointAction::left: term = ops.mul3(a, x, ops.S_col(t.b)); break;
                        case AdjointAction::right: term = ops.mul3(ops.S_col(t.a), x, b); break;
                        case AdjointAction::left_bar: term = ops.mul3(b, x, ops.Sbar_col(t.a)); break;
                        case AdjointAction::right_bar: term = ops.mul3(ops.Sbar_col(t.b), x, a); break;
                        default: break;
                    }
                    axpy(out, t.coef, term);
                }
            }
            set_action_column(m, i, j, out);
        }
    return m;
}

ComoduleCoaction adjoint_coaction(const HopfData& h, AdjointCoaction which) {
    HopfOps ops(h);
    const std::size_t n = h.dim();
    FieldSpec f = h.field();
    const bool right = which == AdjointCoaction::right || which == AdjointCoaction::right_bar ||
                       which == AdjointCoaction::right_regular;
    ComoduleCoaction c{right ? Side::right : Side::left, n, Tensor3(f, n, n, n)};
    for (std::size_t j = 0; j < n; ++j) {
        if (which == AdjointCoaction::left_regular || which == AdjointCoaction::right_regular) {
            for (const auto& t : ops.coa().delta(j)) {
                if (right)
                    c.rho(j, t.b, t.a) += t.coef;
                else
                    c.rho(j, t.a, t.b) += t.coef;
            }
            continue;
        }
        Vec acc = zero_vec(f, n * n);  // a * n + k: H factor a, space factor k
        for (const auto& t : ops.coa().delta2(j)) {
            Vec p = ops.basis(t.a), q = ops.basis(t.b), r = ops.basis(t.c);
            switch (which) {
                case AdjointCoaction::left: add_outer(acc, t.coef, ops.mul(p, ops.S_col(t.c)), q); break;
                case AdjointCoaction::right: add_outer(acc, t.coef, ops.mul(ops.S_col(t.a), r), q); break;
                case AdjointCoaction::right_bar: add_outer(acc, t.coef, ops.mul(r, ops.Sbar_col(t.a)), q); break;
                case AdjointCoaction::left_bar: add_outer(acc, t.coef, ops.mul(ops.Sbar_col(t.c), p), q); break;
                default: break;
            }
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t k = 0; k < n; ++k) c.rho(j, a, k) = acc[a * n + k];
    }
    return c;
}

AxiomCheck check_module_action(const ModuleAction& m, const HopfData& h) {
    AlgebraOps alg(h.alg);
    const std::size_t n = h.dim(), d = m.space_dim;
    FieldSpec f = h.field();
    if (m.alpha.dim0() != n || m.alpha.dim1() != d || m.alpha.dim2() != d)
        throw DimensionError("module action tensor has the wrong shape");
    std::vector<Mat> act;
    for (std::size_t i = 0; i < n; ++i) act.push_back(action_matrix(m, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat lhs(f, d, d);
            for (const auto& t : alg.product(i, j)) lhs = lhs + Mat(f, d, d, scaled(act[t.index].entries(), t.coef));
            Mat rhs = m.side == Side::left ? act[i] * act[j] : act[j] * act[i];
            if (lhs != rhs) return {"action_associativity", false, {i, j}};
        }
    Mat unit(f, d, d);
    for (std::size_t k = 0; k < n; ++k)
        if (!h.alg.unit[k].is_zero()) unit = unit + Mat(f, d, d, scaled(act[k].entries(), h.alg.unit[k]));
    if (unit != Mat::identity(f, d)) return {"action_unit", false, {}};
    return {"action", true, {}};
}

AxiomCheck check_comodule_coaction(const ComoduleCoaction& c, const HopfData& h) {
    CoalgebraOps coa(h.coa);
    const std::size_t n = h.dim(), d = c.space_dim;
    FieldSpec f = h.field();
    if (c.rho.dim0() != d || c.rho.dim1() != n || c.rho.dim2() != d)
        throw DimensionError("comodule coaction tensor has the wrong shape");
    for (std::size_t j = 0; j < d; ++j) {
        // Both sides indexed (a, b, l) with the coaction's own H factor ordering.
        Vec lhs = zero_vec(f, n * n * d), rhs = zero_vec(f, n * n * d);
        for (std::size_t cc = 0; cc < n; ++cc)
            for (std::size_t l = 0; l < d; ++l) {
                const Scalar& x = c.rho(j, cc, l);
                if (x.is_zero()) continue;
                for (const auto& t : coa.delta(cc)) lhs[(t.a * n + t.b) * d + l] += x * t.coef;
            }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t k = 0; k < d; ++k) {
                const Scalar& x = c.rho(j, a, k);
                if (x.is_zero()) continue;
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t l = 0; l < d; ++l) {
                        const Scalar& y = c.rho(k, b, l);
                        if (y.is_zero()) continue;
                        if (c.side == Side::left)
                            rhs[(a * n + b) * d + l] += x * y;
                        else
                            rhs[(b * n + a) * d + l] += x * y;
                    }
            }
        if (lhs != rhs) return {"coaction_coassociativity", false, {j}};
        Vec counit = zero_vec(f, d);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t k = 0; k < d; ++k)
                if (!c.rho(j, a, k).is_zero()) counit[k] += c.rho(j, a, k) * h.coa.counit[a];
        if (counit != unit_vec(f, d, j)) return {"coaction_counit", false, {j}};
    }
    return {"coaction", true, {}};
}

YDReport check_yd(const YDStructure& s, const HopfData& h) {
    const bool left_act = s.variant == YDVariant::LL || s.variant == YDVariant::LR;
    const bool left_coact = s.variant == YDVariant::LL || s.variant == YDVariant::RL;
    if ((s.action.side == Side::left) != left_act || (s.coaction.side == Side::left) != left_coact)
        throw std::invalid_argument("check_yd: action/coaction sides do not match the variant");
    if (s.action.space_dim != s.coaction.space_dim) throw DimensionError("check_yd: action and coaction spaces differ");

    AxiomCheck am = check_module_action(s.action, h);
    if (!am.passed) return {false, "action", am.witness};
    AxiomCheck cm = check_comodule_coaction(s.coaction, h);
    if (!cm.passed) return {false, "coaction", cm.witness};

    HopfOps ops(h);
    const std::size_t n = h.dim(), d = s.action.space_dim;
    FieldSpec f = h.field();
    std::vector<Mat> act;
    for (std::size_t i = 0; i < n; ++i) act.push_back(action_matrix(s.action, i));
    Mat rho = coaction_matrix(s.coaction, n);
    const bool need_bar = s.variant == YDVariant::LR || s.variant == YDVariant::RL;
    if (need_bar && !ops.has_invertible_antipode()) throw std::domain_error("check_yd: variant needs S̄");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec moved = act[i].col(j);
            Vec lhs = rho * moved;
            Vec rhs = zero_vec(f, n * d);
            for (const auto& t : ops.coa().delta2(i)) {
                Vec p = ops.basis(t.a), q = ops.basis(t.b), r = ops.basis(t.c);
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t k = 0; k < d; ++k) {
                        const Scalar& x = s.coaction.rho(j, a, k);
                        if (x.is_zero()) continue;
                        Vec ea = ops.basis(a);
                        Vec hpart;
                        switch (s.variant) {
                            case YDVariant::LL: hpart = ops.mul3(p, ea, ops.S_col(t.c)); break;
                            case YDVariant::RR: hpart = ops.mul3(ops.S_col(t.a), ea, r); break;
                            case YDVariant::LR: hpart = ops.mul3(r, ea, ops.Sbar_col(t.a)); break;
                            case YDVariant::RL: hpart = ops.mul3(ops.Sbar_col(t.c), ea, p); break;
                        }
                        // The space factor is acted on by h2 in every variant.
                        add_outer(rhs, t.coef * x, hpart, act[t.b].col(k));
                    }
            }
            if (lhs != rhs) return {false, "compatibility", {i, j}};
        }
    return {true, "", {}};
}

std::vector<NamedYD> canonical_yd_structures(const HopfData& h) {
    using A = AdjointAction;
    using C = AdjointCoaction;
    std::vector<NamedYD> out;
    out.push_back({"(ad_left, comult) LL", {adjoint_action(h, A::left), adjoint_coaction(h, C::left_regular), YDVariant::LL}});
    out.push_back({"(ad_right, comult) RR", {adjoint_action(h, A::right), adjoint_coaction(h, C::right_regular), YDVariant::RR}});
    out.push_back({"(ad_left_bar, comult) LR",
                   {adjoint_action(h, A::left_bar), adjoint_coaction(h, C::right_regular), YDVariant::LR}});
    out.push_back({"(ad_right_bar, comult) RL",
                   {adjoint_action(h, A::right_bar), adjoint_coaction(h, C::left_regular), YDVariant::RL}});
    out.push_back({"(mult, coad_left) LL", {adjoint_action(h, A::left_regular), adjoint_coaction(h, C::left), YDVariant::LL}});
    out.push_back({"(mult, coad_right) RR", {adjoint_action(h, A::right_regular), adjoint_coaction(h, C::right), YDVariant::RR}});
    out.push_back({"(mult, coad_right_bar) LR",
                   {adjoint_action(h, A::left_regular), adjoint_coaction(h, C::right_bar), YDVariant::LR}});
    out.push_back({"(mult, coad_left_bar) RL",
                   {adjoint_action(h, A::right_regular), adjoint_coaction(h, C::left_bar), YDVariant::RL}});
    return out;
}

YDStructure h_plus_yd(const HopfData& h) {
    HopfOps ops(h);
    const std::size_t n = h.dim();
    FieldSpec f = h.field();
    SubspaceBasis hp = augmentation_ideal(h);
    const std::size_t d = hp.dim();
    Mat coords = hp.coordinates();
    YDStructure s{{Side::left, d, Tensor3(f, n, d, d)}, {Side::left, d, Tensor3(f, d, n, d)}, YDVariant::LL};
    ComoduleCoaction coad = adjoint_coaction(h, AdjointCoaction::left);
    Mat big = coaction_matrix(coad, n);
    for (std::size_t j = 0; j < d; ++j) {
        Vec v = hp.basis.col(j);
        for (std::size_t i = 0; i < n; ++i) set_action_column(s.action, i, j, coords * ops.mul(ops.basis(i), v));
        Vec rv = big * v;
        for (std::size_t a = 0; a < n; ++a) {
            Vec slice(rv.begin() + static_cast<std::ptrdiff_t>(a * n), rv.begin() + static_cast<std::ptrdiff_t>((a + 1) * n));
            Vec c = coords * slice;
            for (std::size_t k = 0; k < d; ++k) s.coaction.rho(j, a, k) = c[k];
        }
    }
    return s;
}

YDStructure h_bar_yd(const HopfData& h) {
    HopfOps ops(h);
    const std::size_t n = h.dim();
    FieldSpec f = h.field();
    QuotientSpace q = unit_cokernel(h);
    const std::size_t d = q.dim();
    YDStructure s{{Side::left, d, Tensor3(f, n, d, d)}, {Side::left, d, Tensor3(f, d, n, d)}, YDVariant::LL};
    for (std::size_t j = 0; j < d; ++j) {
        Vec x = q.section.col(j);
        for (std::size_t i = 0; i < n; ++i) set_action_column(s.action, i, j, q.projection * ops.left_adjoint(i, x));
        for (std::size_t k = 0; k < n; ++k) {
            if (x[k].is_zero()) continue;
            for (const auto& t : ops.coa().delta(k))
                for (std::size_t r = 0; r < d; ++r)
                    if (!q.projection(r, t.b).is_zero()) s.coaction.rho(j, t.a, r) += x[k] * t.coef * q.projection(r, t.b);
        }
    }
    return s;
}

YDStructure trivial_yd(const HopfData& h, YDVariant v) {
    const std::size_t n = h.dim();
    FieldSpec f = h.field();
    const bool left_act = v == YDVariant::LL || v == YDVariant::LR;
    const bool left_coact = v == YDVariant::LL || v == YDVariant::RL;
    YDStructure s{{left_act ? Side::left : Side::right, 1, Tensor3(f, n, 1, 1)},
                  {left_coact ? Side::left : Side::right, 1, Tensor3(f, 1, n, 1)},
                  v};
    for (std::size_t i = 0; i < n; ++i) {
        s.action.alpha(i, 0, 0) = h.coa.counit[i];
        s.coaction.rho(0, i, 0) = h.alg.unit[i];
    }
    return s;
}

bool is_yd_morphism(const Mat& f, const YDStructure& v, const YDStructure& w, const HopfData& h) {
    const std::size_t n = h.dim();
    if (f.rows() != w.action.space_dim || f.cols() != v.action.space_dim)
        throw DimensionError("is_yd_morphism: map shape differs from the spaces");
    if (v.action.side != w.action.side || v.coaction.side != w.coaction.side) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (f * action_matrix(v.action, i) != action_matrix(w.action, i) * f) return false;
    Mat lifted = Mat::kron(Mat::identity(h.field(), n), f);
    return lifted * coaction_matrix(v.coaction, n) == coaction_matrix(w.coaction, n) * f;
}

void add_yd_morphism_equations(LinearSystem& sys, std::size_t offset, const YDStructure& v, const YDStructure& w,
                               const HopfData& h) {
    const std::size_t n = h.dim(), dv = v.action.space_dim, dw = w.action.space_dim;
    FieldSpec f = h.field();
    auto unknown = [&](std::size_t r, std::size_t c) { return offset + r * dv + c; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < dw; ++r)
            for (std::size_t c = 0; c < dv; ++c) {
                Equation eq(f);
                for (std::size_t k = 0; k < dv; ++k) eq.add(unknown(r, k), v.action.alpha(i, c, k));
                for (std::size_t k = 0; k < dw; ++k) eq.add(unknown(k, c), -w.action.alpha(i, k, r));
                sys.add(eq);
            }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t r = 0; r < dw; ++r)
            for (std::size_t c = 0; c < dv; ++c) {
                Equation eq(f);
                for (std::size_t k = 0; k < dv; ++k) eq.add(unknown(r, k), v.coaction.rho(c, a, k));
                for (std::size_t l = 0; l < dw; ++l) eq.add(unknown(l, c), -w.coaction.rho(l, a, r));
                sys.add(eq);
            }
}

}  // namespace hopfsmith
