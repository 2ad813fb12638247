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

#include "hopfsmith/lifting.hpp"

#include "hopfsmith/filtration.hpp"
#include "hopfsmith/linsolve.hpp"

namespace hopfsmith {

namespace {

Vec basis_vec(const AlgebraData& a, std::size_t i) { return unit_vec(a.field, a.dim, i); }

Vec unit_solve(const Tensor3& mult, FieldSpec f, std::size_t n) {
    LinearSystem sys(f, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (int side = 0; side < 2; ++side) {
                Equation eq(f);
                for (std::size_t i = 0; i < n; ++i) eq.add(i, side == 0 ? mult(i, j, k) : mult(j, i, k));
                if (j == k) eq.add_rhs(f.one());
                sys.add(eq);
            }
    auto sol = solve_affine(sys);
    if (!sol) throw LiftError("extension has no two-sided unit");
    return sol->particular;
}

// Component of a right coaction at H basis index h, as a map V → V.
Mat coaction_slice(const ComoduleCoaction& c, std::size_t h) {
    const std::size_t d = c.space_dim;
    Mat t(c.rho.field(), d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) t(k, j) = c.rho(j, h, k);
    return t;
}

std::vector<Intertwiner> coaction_intertwiners(const Coactions& c) {
    std::vector<Intertwiner> out;
    for (std::size_t h = 0; h < c.h.dim(); ++h) out.push_back({coaction_slice(c.on_e, h), coaction_slice(c.on_a, h)});
    return out;
}

bool intertwines(const Mat& sigma, const std::vector<Intertwiner>& ts) {
    for (const auto& t : ts)
        if (sigma * t.on_a != t.on_e * sigma) return false;
    return true;
}

bool multiplicative(const AlgebraData& e, const AlgebraData& a, const Mat& sigma) {
    AlgebraOps ea(e), aa(a);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            if (sigma * aa.mul(basis_vec(a, i), basis_vec(a, j)) != ea.mul(sigma.col(i), sigma.col(j))) return false;
    return sigma * a.unit == e.unit;
}

// d1 equations on unknown h (dim M x n, index r n + k); rhs from c when given.
LinearSystem coboundary_system(const AlgebraData& a, const Bimodule& m, const Mat* c) {
    const std::size_t n = a.dim, d = m.dim;
    FieldSpec f = a.field;
    LinearSystem sys(f, d * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t r = 0; r < d; ++r) {
                Equation eq(f);
                for (std::size_t s = 0; s < d; ++s) {
                    if (!m.left[x](r, s).is_zero()) eq.add(s * n + y, m.left[x](r, s));
                    if (!m.right[y](r, s).is_zero()) eq.add(s * n + x, m.right[y](r, s));
                }
                for (std::size_t k = 0; k < n; ++k)
                    if (!a.mult(x, y, k).is_zero()) eq.add(r * n + k, -a.mult(x, y, k));
                if (c) eq.add_rhs((*c)(r, x * n + y));
                sys.add(eq);
            }
    return sys;
}

std::vector<SubspaceBasis> ideal_powers(const AlgebraData& e, const SubspaceBasis& i) {
    AlgebraOps alg(e);
    std::vector<SubspaceBasis> pw{full_space(e.field, e.dim), i};
    while (pw.back().dim() > 0) {
        std::vector<Vec> cols;
        const SubspaceBasis& last = pw.back();
        for (std::size_t x = 0; x < last.dim(); ++x)
            for (std::size_t y = 0; y < i.dim(); ++y) cols.push_back(alg.mul(last.basis.col(x), i.basis.col(y)));
        Mat next = column_basis(Mat::from_columns(e.field, e.dim, cols));
        if (next.cols() == last.dim()) throw LiftError("kernel is not nilpotent");
        pw.push_back(next.cols() == 0 ? zero_space(e.field, e.dim) : make_subspace(next, e.field, e.dim));
    }
    return pw;
}

// I^r / I^{r+1} as an A-bimodule through σ, in coordinates of the quotient E/I^{r+1}.
struct Layer {
    Bimodule bimodule;
    Mat to_layer;  // E → layer coordinates, valid on I^r
};

Layer make_layer(const AlgebraData& e, const AlgebraData& a, const Mat& sigma, const SubspaceBasis& ir,
                 const QuotientReducer& q) {
    AlgebraOps alg(e);
    Mat proj = q.projection();
    Mat w = column_basis(proj * ir.basis);
    const std::size_t d = w.cols();
    Layer l;
    l.bimodule.dim = d;
    Mat coords = d == 0 ? Mat(e.field, 0, q.dim()) : left_inverse(w);
    l.to_layer = coords * proj;
    for (std::size_t i = 0; i < a.dim; ++i) {
        Mat left(e.field, d, d), right(e.field, d, d);
        for (std::size_t j = 0; j < d; ++j) {
            Vec wj = q.lift(w.col(j));
            left.set_col(j, l.to_layer * alg.mul(sigma.col(i), wj));
            right.set_col(j, l.to_layer * alg.mul(wj, sigma.col(i)));
        }
        l.bimodule.left.push_back(left);
        l.bimodule.right.push_back(right);
    }
    return l;
}

}  // namespace

void check_bimodule(const AlgebraData& a, const Bimodule& m) {
    const std::size_t n = a.dim, d = m.dim;
    if (m.left.size() != n || m.right.size() != n) throw LiftError("bimodule: need one action matrix per basis vector");
    for (std::size_t i = 0; i < n; ++i)
        if (m.left[i].rows() != d || m.left[i].cols() != d || m.right[i].rows() != d || m.right[i].cols() != d)
            throw LiftError("bimodule: action matrices must be dim M x dim M");
    auto combo = [&](const std::vector<Mat>& acts, std::span<const Scalar> x) {
        Mat out(a.field, d, d);
        for (std::size_t k = 0; k < n; ++k)
            if (!x[k].is_zero()) out = out + Mat(a.field, d, d, scaled(acts[k].entries(), x[k]));
        return out;
    };
    Mat id = Mat::identity(a.field, d);
    if (combo(m.left, a.unit) != id || combo(m.right, a.unit) != id) throw LiftError("bimodule: unit does not act as identity");
    AlgebraOps alg(a);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec ij = alg.mul(basis_vec(a, i), basis_vec(a, j));
            if (combo(m.left, ij) != m.left[i] * m.left[j]) throw LiftError("bimodule: left action is not associative");
            if (combo(m.right, ij) != m.right[j] * m.right[i]) throw LiftError("bimodule: right action is not associative");
            if (m.left[i] * m.right[j] != m.right[j] * m.left[i]) throw LiftError("bimodule: actions do not commute");
        }
}

Bimodule regular_bimodule(const AlgebraData& a) {
    AlgebraOps alg(a);
    Bimodule m{a.dim, {}, {}};
    for (std::size_t i = 0; i < a.dim; ++i) {
        m.left.push_back(alg.left_mult_basis(i));
        m.right.push_back(alg.right_mult_basis(i));
    }
    return m;
}

Bimodule character_bimodule(const AlgebraData& a, const Vec& chi) {
    if (chi.size() != a.dim) throw LiftError("character has the wrong length");
    Bimodule m{1, {}, {}};
    for (std::size_t i = 0; i < a.dim; ++i) {
        m.left.push_back(Mat(a.field, 1, 1, {chi[i]}));
        m.right.push_back(Mat(a.field, 1, 1, {chi[i]}));
    }
    check_bimodule(a, m);
    return m;
}

Bimodule free_bimodule(const AlgebraData& a) {
    AlgebraOps alg(a);
    Mat id = Mat::identity(a.field, a.dim);
    Bimodule m{a.dim * a.dim, {}, {}};
    for (std::size_t i = 0; i < a.dim; ++i) {
        m.left.push_back(Mat::kron(alg.left_mult_basis(i), id));
        m.right.push_back(Mat::kron(id, alg.right_mult_basis(i)));
    }
    return m;
}

Mat hochschild_d1(const AlgebraData& a, const Bimodule& m, const Mat& h) {
    const std::size_t n = a.dim;
    if (h.rows() != m.dim || h.cols() != n) throw DimensionError("hochschild_d1: 1-cochain must be dim M x n");
    Mat out(a.field, m.dim, n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Vec v = m.left[x] * h.col(y) + m.right[y] * h.col(x);
            for (std::size_t k = 0; k < n; ++k)
                if (!a.mult(x, y, k).is_zero()) axpy(v, -a.mult(x, y, k), h.col(k));
            out.set_col(x * n + y, v);
        }
    return out;
}

Mat hochschild_d2(const AlgebraData& a, const Bimodule& m, const Mat& c) {
    const std::size_t n = a.dim;
    if (c.rows() != m.dim || c.cols() != n * n) throw DimensionError("hochschild_d2: 2-cochain must be dim M x n²");
    Mat out(a.field, m.dim, n * n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Vec v = m.left[x] * c.col(y * n + z) - m.right[z] * c.col(x * n + y);
                for (std::size_t k = 0; k < n; ++k) {
                    if (!a.mult(x, y, k).is_zero()) axpy(v, -a.mult(x, y, k), c.col(k * n + z));
                    if (!a.mult(y, z, k).is_zero()) axpy(v, a.mult(y, z, k), c.col(x * n + k));
                }
                out.set_col((x * n + y) * n + z, v);
            }
    return out;
}

bool is_cocycle(const AlgebraData& a, const Bimodule& m, const Mat& c) { return hochschild_d2(a, m, c).is_zero(); }

Mat cocycle_space(const AlgebraData& a, const Bimodule& m) {
    const std::size_t n = a.dim, d = m.dim, u = d * n * n;
    LinearSystem sys(a.field, u);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t r = 0; r < d; ++r) {
                    Equation eq(a.field);
                    for (std::size_t s = 0; s < d; ++s) {
                        if (!m.left[x](r, s).is_zero()) eq.add(s * n * n + y * n + z, m.left[x](r, s));
                        if (!m.right[z](r, s).is_zero()) eq.add(s * n * n + x * n + y, -m.right[z](r, s));
                    }
                    for (std::size_t k = 0; k < n; ++k) {
                        if (!a.mult(x, y, k).is_zero()) eq.add(r * n * n + k * n + z, -a.mult(x, y, k));
                        if (!a.mult(y, z, k).is_zero()) eq.add(r * n * n + x * n + k, a.mult(y, z, k));
                    }
                    sys.add(eq);
                }
    return reduce(sys).nullspace_basis();
}

Mat coboundary_space(const AlgebraData& a, const Bimodule& m) {
    const std::size_t n = a.dim, d = m.dim;
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < d * n; ++k) {
        Mat h(a.field, d, n, unit_vec(a.field, d * n, k));
        cols.push_back(hochschild_d1(a, m, h).entries());
    }
    if (cols.empty()) return Mat(a.field, d * n * n, 0);
    return column_basis(Mat::from_columns(a.field, d * n * n, cols));
}

std::optional<Mat> hochschild_coboundary_solve(const AlgebraData& a, const Bimodule& m, const Mat& c) {
    check_bimodule(a, m);
    if (!is_cocycle(a, m, c)) throw LiftError("hochschild_coboundary_solve: input is not a 2-cocycle");
    auto sol = solve_affine(coboundary_system(a, m, &c));
    if (!sol) return std::nullopt;
    Mat h(a.field, m.dim, a.dim, sol->particular);
    if (hochschild_d1(a, m, h) != c) throw std::logic_error("hochschild_coboundary_solve: solution fails δh = c");
    return h;
}

SurjectionProblem make_surjection(const AlgebraData& e, const AlgebraData& a, const Mat& pi) {
    validate_shape(e);
    validate_shape(a);
    if (e.field != a.field) throw LiftError("surjection: algebras over different fields");
    if (pi.rows() != a.dim || pi.cols() != e.dim) throw LiftError("surjection: π must be dim A x dim E");
    if (!multiplicative(a, e, pi)) throw LiftError("surjection: π is not a unital algebra map");
    if (rank(pi) != a.dim) throw LiftError("surjection: π is not surjective");
    Mat ker = nullspace(pi);
    SubspaceBasis kernel = ker.cols() == 0 ? zero_space(e.field, e.dim) : make_subspace(ker, e.field, e.dim);
    if (!is_nilpotent_ideal(kernel, e)) throw LiftError("surjection: kernel is not nilpotent");
    return SurjectionProblem{e, a, pi, kernel, std::nullopt, {}};
}

SurjectionProblem square_zero_extension(const AlgebraData& a, const Bimodule& m, const std::optional<Mat>& cocycle) {
    check_bimodule(a, m);
    const std::size_t n = a.dim, d = m.dim, t = n + d;
    FieldSpec f = a.field;
    if (cocycle && !is_cocycle(a, m, *cocycle)) throw LiftError("square_zero_extension: twist is not a 2-cocycle");
    AlgebraData e{f, t, Tensor3(f, t, t, t), {}};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) e.mult(i, j, k) = a.mult(i, j, k);
            if (cocycle)
                for (std::size_t s = 0; s < d; ++s) e.mult(i, j, n + s) = (*cocycle)(s, i * n + j);
        }
        for (std::size_t s = 0; s < d; ++s)
            for (std::size_t r = 0; r < d; ++r) {
                e.mult(i, n + s, n + r) = m.left[i](r, s);
                e.mult(n + s, i, n + r) = m.right[i](r, s);
            }
    }
    e.unit = unit_solve(e.mult, f, t);
    if (!check_algebra(e).all_passed()) throw std::logic_error("square_zero_extension: result is not an algebra");
    Mat pi(f, n, t);
    for (std::size_t i = 0; i < n; ++i) pi(i, i) = f.one();
    return make_surjection(e, a, pi);
}

LiftOutcome lift_algebra_section(const SurjectionProblem& p, bool colinear) {
    const AlgebraData& e = p.e;
    const AlgebraData& a = p.a;
    const std::size_t ne = e.dim, na = a.dim;
    FieldSpec f = e.field;
    if (colinear && !p.coactions) throw LiftError("colinear lift requested without coactions");
    std::vector<Intertwiner> ts = p.constraints;
    std::vector<Intertwiner> co;
    if (p.coactions) co = coaction_intertwiners(*p.coactions);
    if (colinear) ts.insert(ts.end(), co.begin(), co.end());
    for (const auto& t : ts)
        if (t.on_e.rows() != ne || t.on_e.cols() != ne || t.on_a.rows() != na || t.on_a.cols() != na)
            throw LiftError("intertwiner of the wrong shape");

    auto pw = ideal_powers(e, p.kernel);  // pw[r] = I^r
    AlgebraOps ea(e);

    // Linear lift: π σ = id plus the intertwining constraints. Unknown σ(j, x) at x ne + j.
    LinearSystem first(f, ne * na);
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t i = 0; i < na; ++i) {
            Equation eq(f);
            for (std::size_t j = 0; j < ne; ++j)
                if (!p.pi(i, j).is_zero()) eq.add(x * ne + j, p.pi(i, j));
            if (i == x) eq.add_rhs(f.one());
            first.add(eq);
        }
    for (const auto& t : ts)
        for (std::size_t x = 0; x < na; ++x)
            for (std::size_t k = 0; k < ne; ++k) {
                Equation eq(f);
                for (std::size_t l = 0; l < na; ++l)
                    if (!t.on_a(l, x).is_zero()) eq.add(l * ne + k, t.on_a(l, x));
                for (std::size_t j = 0; j < ne; ++j)
                    if (!t.on_e(k, j).is_zero()) eq.add(x * ne + j, -t.on_e(k, j));
                first.add(eq);
            }
    LiftOutcome out;
    auto start = solve_affine(first);
    if (!start) {
        out.obstruction = Obstruction{0, Bimodule{}, Mat(), true, "constraints"};
        return out;
    }
    Mat sigma(f, na, ne, start->particular);
    sigma = sigma.transpose();

    LiftCertificate cert;
    for (std::size_t r = 1; r + 1 < pw.size(); ++r) {
        const SubspaceBasis& ir = pw[r];
        QuotientReducer q(pw[r + 1]);
        Mat proj = q.projection();
        Layer layer = make_layer(e, a, sigma, ir, q);

        std::vector<Vec> curv(na * na);
        Mat cbar(f, layer.bimodule.dim, na * na);
        AlgebraOps aa(a);
        for (std::size_t x = 0; x < na; ++x)
            for (std::size_t y = 0; y < na; ++y) {
                Vec c = sigma * aa.mul(basis_vec(a, x), basis_vec(a, y)) - ea.mul(sigma.col(x), sigma.col(y));
                if (ir.dim() < ne && !span_contains(ir.basis, Mat(f, ne, 1, c)))
                    throw std::logic_error("lift: curvature leaves I^r");
                cbar.set_col(x * na + y, layer.to_layer * c);
                curv[x * na + y] = std::move(c);
            }
        bool closed = is_cocycle(a, layer.bimodule, cbar);
        if (!closed) throw std::logic_error("lift: curvature is not a Hochschild cocycle");

        // Correction h̃: A → I^r with h̃(e_x) = sum_t X(t, x) B_t, unknown x k + t.
        const std::size_t k = ir.dim();
        std::vector<Vec> pb(k), left(na * k), right(na * k);
        for (std::size_t t = 0; t < k; ++t) {
            Vec bt = ir.basis.col(t);
            pb[t] = proj * bt;
            for (std::size_t x = 0; x < na; ++x) {
                left[x * k + t] = proj * ea.mul(sigma.col(x), bt);
                right[x * k + t] = proj * ea.mul(bt, sigma.col(x));
            }
        }
        LinearSystem sys(f, na * k);
        for (std::size_t x = 0; x < na; ++x)
            for (std::size_t y = 0; y < na; ++y) {
                Vec rhs = proj * curv[x * na + y];
                std::vector<Equation> eqs(q.dim(), Equation(f));
                for (std::size_t t = 0; t < k; ++t)
                    for (std::size_t row = 0; row < q.dim(); ++row) {
                        if (!left[x * k + t][row].is_zero()) eqs[row].add(y * k + t, left[x * k + t][row]);
                        if (!right[y * k + t][row].is_zero()) eqs[row].add(x * k + t, right[y * k + t][row]);
                        for (std::size_t z = 0; z < na; ++z)
                            if (!a.mult(x, y, z).is_zero() && !pb[t][row].is_zero())
                                eqs[row].add(z * k + t, -(a.mult(x, y, z) * pb[t][row]));
                    }
                for (std::size_t row = 0; row < q.dim(); ++row) {
                    eqs[row].add_rhs(rhs[row]);
                    sys.add(eqs[row]);
                }
            }
        for (const auto& t : ts) {
            std::vector<Vec> tb(k);
            for (std::size_t s = 0; s < k; ++s) tb[s] = t.on_e * ir.basis.col(s);
            for (std::size_t x = 0; x < na; ++x)
                for (std::size_t row = 0; row < ne; ++row) {
                    Equation eq(f);
                    for (std::size_t l = 0; l < na; ++l)
                        if (!t.on_a(l, x).is_zero())
                            for (std::size_t s = 0; s < k; ++s)
                                if (!ir.basis(row, s).is_zero()) eq.add(l * k + s, t.on_a(l, x) * ir.basis(row, s));
                    for (std::size_t s = 0; s < k; ++s)
                        if (!tb[s][row].is_zero()) eq.add(x * k + s, -tb[s][row]);
                    sys.add(eq);
                }
        }
        auto sol = solve_affine(sys);
        if (!sol) {
            bool exact = !hochschild_coboundary_solve(a, layer.bimodule, cbar).has_value();
            out.obstruction = Obstruction{r, layer.bimodule, cbar, closed, exact ? "cohomology" : "constraints"};
            return out;
        }
        Mat xs(f, na, k, sol->particular);  // row x, column t
        sigma = sigma + ir.basis * xs.transpose();
        cert.stages.push_back({r, layer.bimodule.dim, proj * sigma});
    }

    cert.section = sigma;
    cert.algebra_map = p.pi * sigma == Mat::identity(f, na) && multiplicative(e, a, sigma);
    cert.colinear = p.coactions && intertwines(sigma, co);
    cert.constraints_hold = intertwines(sigma, p.constraints);
    if (!cert.algebra_map || (colinear && !cert.colinear) || !cert.constraints_hold)
        throw std::logic_error("lift: final section fails its direct check");
    out.certificate = std::move(cert);
    return out;
}

Json lift_to_json(const LiftOutcome& out) {
    Json j;
    j["holds"] = out.certificate.has_value();
    if (out.certificate) {
        const auto& c = *out.certificate;
        Json stages = Json::array();
        for (const auto& s : c.stages)
            stages.push_back({{"r", s.r}, {"layer_dim", s.layer_dim}, {"section", mat_to_json(s.section)}});
        j["stages"] = stages;
        j["section"] = mat_to_json(c.section);
        j["verified"] = {{"algebra_map", c.algebra_map}, {"colinear", c.colinear}, {"constraints", c.constraints_hold}};
    }
    if (out.obstruction) {
        const auto& o = *out.obstruction;
        j["obstruction"] = {{"stage", o.stage},
                            {"reason", o.reason},
                            {"closed", o.closed},
                            {"layer_dim", o.layer.dim},
                            {"cocycle", o.cocycle.rows() == 0 ? Json::array() : mat_to_json(o.cocycle)}};
    }
    return j;
}

SubHopf sub_hopf_algebra(const HopfData& e, const SubspaceBasis& s) {
    validate_shape(e);
    if (s.ambient != e.dim() || s.dim() == 0) throw LiftError("sub_hopf_algebra: need a nonzero subspace of E");
    const std::size_t n = e.dim(), d = s.dim();
    FieldSpec f = e.field();
    const Mat& b = s.basis;
    Mat c = left_inverse(b);
    Mat bb = Mat::kron(b, b);
    Mat cc = left_inverse(bb);
    HopfOps ops(e);
    auto in_span = [&](const Mat& span, const Mat& inv, const Vec& v) { return span * (inv * v) == v; };

    HopfData h;
    h.alg = {f, d, Tensor3(f, d, d, d), c * e.alg.unit};
    h.coa = {f, d, Tensor3(f, d, d, d), zero_vec(f, d)};
    h.antipode = Mat(f, d, d);
    if (!in_span(b, c, e.alg.unit)) throw LiftError("sub_hopf_algebra: subspace does not contain 1");
    Mat delta = ops.coa().comult_matrix();
    for (std::size_t i = 0; i < d; ++i) {
        Vec bi = b.col(i);
        for (std::size_t j = 0; j < d; ++j) {
            Vec p = ops.mul(bi, b.col(j));
            if (!in_span(b, c, p)) throw LiftError("sub_hopf_algebra: subspace is not closed under multiplication");
            Vec cp = c * p;
            for (std::size_t k = 0; k < d; ++k) h.alg.mult(i, j, k) = cp[k];
        }
        Vec di = delta * bi;
        if (!in_span(bb, cc, di)) throw LiftError("sub_hopf_algebra: subspace is not a subcoalgebra");
        Vec cd = cc * di;
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y) h.coa.comult(i, x, y) = cd[x * d + y];
        h.coa.counit[i] = dot(e.coa.counit, bi);
        Vec si = ops.S(bi);
        if (!in_span(b, c, si)) throw LiftError("sub_hopf_algebra: subspace is not stable under the antipode");
        h.antipode.set_col(i, c * si);
    }
    for (std::size_t i = 0; i < d; ++i) {
        std::size_t support = 0, at = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (!b(k, i).is_zero()) ++support, at = k;
        h.basis.push_back(support == 1 && b(at, i).is_one() && at < e.basis.size() ? e.basis[at] : "b" + std::to_string(i));
    }
    require_hopf(h);
    return {h, b};
}

WeakProjectionOutcome weak_projection(const HopfData& e, const HopfData& h, const Mat& inclusion, bool bilinear) {
    validate_shape(e);
    validate_shape(h);
    const std::size_t ne = e.dim(), nh = h.dim();
    FieldSpec f = e.field();
    if (inclusion.rows() != ne || inclusion.cols() != nh) throw LiftError("weak_projection: inclusion must be dim E x dim H");
    if (rank(inclusion) != nh) throw LiftError("weak_projection: inclusion is not injective");
    if (!multiplicative(e.alg, h.alg, inclusion)) throw LiftError("weak_projection: inclusion is not an algebra map");
    CoalgebraOps ec(e.coa), hc(h.coa);
    if (ec.comult_matrix() * inclusion != Mat::kron(inclusion, inclusion) * hc.comult_matrix())
        throw LiftError("weak_projection: inclusion is not a coalgebra map");

    SubspaceBasis image = make_subspace(inclusion, f, ne);
    if (!is_subcoalgebra(image, e.coa)) throw LiftError("weak_projection: image is not a subcoalgebra");
    SubspaceBasis corad = coradical(e.coa);
    if (!span_contains(image.basis, corad.basis)) throw LiftError("weak_projection: Corad(E) is not contained in H");
    bool exhausts = wedge_filtration(image, e.coa).exhausted;

    AlgebraData estar = dual_algebra(e.coa), hstar = dual_algebra(h.coa);
    SurjectionProblem p = make_surjection(estar, hstar, inclusion.transpose());
    if (!exhausts) throw std::logic_error("weak_projection: nilpotent kernel but the wedge filtration does not exhaust");

    AlgebraOps ea(e.alg), ha(h.alg);
    for (std::size_t y = 0; y < nh; ++y) {
        Vec iy = inclusion.col(y);
        p.constraints.push_back({ea.left_mult(iy).transpose(), ha.left_mult_basis(y).transpose()});
        if (bilinear) p.constraints.push_back({ea.right_mult(iy).transpose(), ha.right_mult_basis(y).transpose()});
    }
    LiftOutcome lifted = lift_algebra_section(p);
    WeakProjectionOutcome out;
    out.obstruction = lifted.obstruction;
    if (!lifted) return out;

    WeakProjection w;
    w.retraction = lifted.certificate->section.transpose();
    const Mat& pi = w.retraction;
    w.retracts = pi * inclusion == Mat::identity(f, nh);
    w.coalgebra_map = hc.comult_matrix() * pi == Mat::kron(pi, pi) * ec.comult_matrix() &&
                      Mat(f, 1, nh, h.coa.counit) * pi == Mat(f, 1, ne, e.coa.counit);
    w.left_linear = w.right_linear = true;
    for (std::size_t y = 0; y < nh; ++y) {
        Vec iy = inclusion.col(y);
        w.left_linear = w.left_linear && pi * ea.left_mult(iy) == ha.left_mult_basis(y) * pi;
        w.right_linear = w.right_linear && pi * ea.right_mult(iy) == ha.right_mult_basis(y) * pi;
    }
    if (!w.retracts || !w.coalgebra_map || !w.left_linear || (bilinear && !w.right_linear))
        throw std::logic_error("weak_projection: retraction fails its direct check");
    out.projection = std::move(w);
    return out;
}

Json weak_projection_to_json(const WeakProjectionOutcome& out) {
    Json j;
    j["holds"] = out.projection.has_value();
    if (out.projection) {
        const auto& w = *out.projection;
        j["retraction"] = mat_to_json(w.retraction);
        j["verified"] = {{"retracts", w.retracts},
                         {"coalgebra_map", w.coalgebra_map},
                         {"left_linear", w.left_linear},
                         {"right_linear", w.right_linear}};
    }
    if (out.obstruction) {
        LiftOutcome tmp;
        tmp.obstruction = out.obstruction;
        j["obstruction"] = lift_to_json(tmp)["obstruction"];
    }
    return j;
}

}  // namespace hopfsmith
