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

#include "hopfsmith/smoothness.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace hopfsmith {

namespace {

using Kind = SectionCertificate::Kind;
using SparseVec = std::map<std::size_t, Scalar>;

void accumulate(SparseVec& v, std::size_t idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = v.emplace(idx, c);
    if (!fresh) it->second += c;
}

struct QuadTerm {
    std::uint32_t a, b, c, d;
    Scalar coef;
};

// (Δ ⊗ id ⊗ id)(Δ ⊗ id)Δ(e_i)
std::vector<QuadTerm> delta3(const CoalgebraOps& coa, std::size_t i) {
    std::vector<QuadTerm> out;
    for (const auto& t : coa.delta2(i))
        for (const auto& s : coa.delta(t.a)) out.push_back({s.a, s.b, t.b, t.c, t.coef * s.coef});
    return out;
}

// Common setting for τ: the H⁺ basis B (n x d) and its coordinate map C (d x n).
struct SectionFrame {
    const HopfData& h;
    HopfOps ops;
    std::size_t n, d;
    Mat B, C;

    explicit SectionFrame(const HopfData& hh)
        : h(hh), ops(hh), n(hh.dim()), d(0) {
        SubspaceBasis plus = augmentation_ideal(hh);
        B = plus.basis;
        d = B.cols();
        C = plus.coordinates();
    }
    FieldSpec f() const { return h.field(); }
    std::size_t var(std::size_t a, std::size_t k, std::size_t j) const { return (a * d + k) * d + j; }

    // u1 v1 S(v3) S(u3) ⊗ u2 ⊗ v2 for basis u = e_a, v = e_q, at index (x n + u2) n + v2.
    SparseVec pair_coaction(std::size_t a, std::size_t q) const {
        SparseVec out;
        const auto& coa = ops.coa();
        for (const auto& ta : coa.delta2(a))
            for (const auto& tq : coa.delta2(q)) {
                Vec x = ops.mul(ops.mul(ops.basis(ta.a), ops.basis(tq.a)), ops.mul(ops.S_col(tq.c), ops.S_col(ta.c)));
                Scalar c = ta.coef * tq.coef;
                for (std::size_t p = 0; p < n; ++p)
                    if (!x[p].is_zero()) accumulate(out, (p * n + ta.b) * n + tq.b, c * x[p]);
            }
        return out;
    }

    // x1 S(x3) ⊗ x2 for x = b_j, in H ⊗ H⁺ coordinates (n x d).
    Mat plus_coaction(std::size_t j) const {
        Mat y(f(), n, n);
        for (std::size_t q = 0; q < n; ++q) {
            if (B(q, j).is_zero()) continue;
            for (const auto& t : ops.coa().delta2(q)) {
                Vec x = ops.mul(ops.basis(t.a), ops.S_col(t.c));
                for (std::size_t p = 0; p < n; ++p)
                    if (!x[p].is_zero()) y(p, t.b) += B(q, j) * t.coef * x[p];
            }
        }
        return y * C.transpose();
    }

    // τ(b_j) as a vector of H ⊗ H (index a n + m).
    Vec tau_full(const Mat& tau, std::size_t j) const {
        Vec out = zero_vec(f(), n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t k = 0; k < d; ++k) {
                const Scalar& c = tau(a * d + k, j);
                if (c.is_zero()) continue;
                for (std::size_t m = 0; m < n; ++m)
                    if (!B(m, k).is_zero()) out[a * n + m] += c * B(m, k);
            }
        return out;
    }
};

void add_section_linearity(LinearSystem& sys, const SectionFrame& fr) {
    const std::size_t n = fr.n, d = fr.d;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec c = fr.C * fr.ops.mul(fr.ops.basis(i), fr.B.col(j));
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t k = 0; k < d; ++k) {
                    Equation eq(fr.f());
                    for (std::size_t l = 0; l < d; ++l)
                        if (!c[l].is_zero()) eq.add(fr.var(a, k, l), c[l]);
                    for (std::size_t a2 = 0; a2 < n; ++a2) {
                        const Scalar& m = fr.h.alg.mult(i, a2, a);
                        if (!m.is_zero()) eq.add(fr.var(a2, k, j), -m);
                    }
                    sys.add(eq);
                }
        }
}

void add_section_splitting(LinearSystem& sys, const SectionFrame& fr) {
    const std::size_t n = fr.n, d = fr.d;
    std::vector<Vec> prod(n * d);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t k = 0; k < d; ++k) prod[a * d + k] = fr.ops.mul(fr.ops.basis(a), fr.B.col(k));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t m = 0; m < n; ++m) {
            Equation eq(fr.f());
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t k = 0; k < d; ++k)
                    if (!prod[a * d + k][m].is_zero()) eq.add(fr.var(a, k, j), prod[a * d + k][m]);
            eq.add_rhs(fr.B(m, j));
            sys.add(eq);
        }
}

void add_section_completeness(LinearSystem& sys, const SectionFrame& fr) {
    const std::size_t n = fr.n, d = fr.d;
    std::vector<SparseVec> pair(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t q = 0; q < n; ++q) pair[a * n + q] = fr.pair_coaction(a, q);
    for (std::size_t j = 0; j < d; ++j) {
        std::map<std::size_t, Equation> eqs;
        auto at = [&](std::size_t idx) -> Equation& { return eqs.try_emplace(idx, fr.f()).first->second; };
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t q = 0; q < n; ++q) {
                    if (fr.B(q, k).is_zero()) continue;
                    for (const auto& [idx, v] : pair[a * n + q]) at(idx).add(fr.var(a, k, j), v * fr.B(q, k));
                }
        Mat r = fr.plus_coaction(j);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t k = 0; k < d; ++k) {
                if (r(p, k).is_zero()) continue;
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t k2 = 0; k2 < d; ++k2)
                        for (std::size_t m = 0; m < n; ++m)
                            if (!fr.B(m, k2).is_zero()) at((p * n + a) * n + m).add(fr.var(a, k2, k), -(r(p, k) * fr.B(m, k2)));
            }
        for (const auto& [idx, eq] : eqs) sys.add(eq);
    }
}

// Common setting for χ on H ⊗ H̄.
struct RetractionFrame {
    const HopfData& h;
    HopfOps ops;
    std::size_t n, d;
    QuotientSpace q;

    explicit RetractionFrame(const HopfData& hh) : h(hh), ops(hh), n(hh.dim()), q(unit_cokernel(hh)) { d = q.dim(); }
    FieldSpec f() const { return h.field(); }
    std::size_t var(std::size_t k, std::size_t i, std::size_t l) const { return k * (n * d) + i * d + l; }

    Vec P(std::span<const Scalar> x) const { return q.projection * x; }

    // (id ⊗ P)Δ(x), index a d + k.
    Vec bar_coaction(std::span<const Scalar> x) const {
        Vec out = zero_vec(f(), n * d);
        for (std::size_t c = 0; c < n; ++c) {
            if (x[c].is_zero()) continue;
            for (const auto& t : ops.coa().delta(c))
                for (std::size_t k = 0; k < d; ++k) {
                    const Scalar& p = q.projection(k, t.b);
                    if (!p.is_zero()) out[t.a * d + k] += x[c] * t.coef * p;
                }
        }
        return out;
    }

    // P(e_i ▷ s(v_k)) as a d x d matrix.
    Mat adjoint_bar(std::size_t i) const {
        Mat out(f(), d, d);
        for (std::size_t k = 0; k < d; ++k) out.set_col(k, P(ops.left_adjoint(i, q.section.col(k))));
        return out;
    }

    // Σ u_p w_m e_p ⊗ v_m over Δ³(e_i), with u = h1 e_j S(h4), w = P(h2 y S(h3)).
    Mat equivariance_argument(const std::vector<QuadTerm>& d3, std::size_t j, std::span<const Scalar> y) const {
        Mat out(f(), n, d);
        for (const auto& t : d3) {
            Vec u = ops.mul(ops.mul(ops.basis(t.a), ops.basis(j)), ops.S_col(t.d));
            Vec w = P(ops.mul(ops.mul(ops.basis(t.b), y), ops.S_col(t.c)));
            for (std::size_t p = 0; p < n; ++p) {
                if (u[p].is_zero()) continue;
                for (std::size_t m = 0; m < d; ++m)
                    if (!w[m].is_zero()) out(p, m) += t.coef * u[p] * w[m];
            }
        }
        return out;
    }
};

void add_retraction_colinearity(LinearSystem& sys, const RetractionFrame& fr) {
    const std::size_t n = fr.n, d = fr.d;
    std::vector<Vec> w(d);
    for (std::size_t k = 0; k < d; ++k) w[k] = fr.bar_coaction(fr.q.section.col(k));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < d; ++l) {
            std::vector<Equation> eqs(n * d, Equation(fr.f()));
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t idx = 0; idx < n * d; ++idx)
                    if (!w[k][idx].is_zero()) eqs[idx].add(fr.var(k, i, l), w[k][idx]);
            for (const auto& t : fr.ops.coa().delta(i))
                for (std::size_t k = 0; k < d; ++k) eqs[t.a * d + k].add(fr.var(k, t.b, l), -t.coef);
            for (const auto& eq : eqs) sys.add(eq);
        }
}

void add_retraction_splitting(LinearSystem& sys, const RetractionFrame& fr) {
    const std::size_t n = fr.n, d = fr.d;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            Equation eq(fr.f());
            for (const auto& t : fr.ops.coa().delta(i))
                for (std::size_t l = 0; l < d; ++l) {
                    const Scalar& p = fr.q.projection(l, t.b);
                    if (!p.is_zero()) eq.add(fr.var(k, t.a, l), t.coef * p);
                }
            eq.add_rhs(fr.q.projection(k, i));
            sys.add(eq);
        }
}

void add_retraction_equivariance(LinearSystem& sys, const RetractionFrame& fr) {
    const std::size_t n = fr.n, d = fr.d;
    for (std::size_t i = 0; i < n; ++i) {
        auto d3 = delta3(fr.ops.coa(), i);
        Mat ad = fr.adjoint_bar(i);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < d; ++l) {
                Mat arg = fr.equivariance_argument(d3, j, fr.q.section.col(l));
                for (std::size_t k = 0; k < d; ++k) {
                    Equation eq(fr.f());
                    for (std::size_t p = 0; p < n; ++p)
                        for (std::size_t m = 0; m < d; ++m)
                            if (!arg(p, m).is_zero()) eq.add(fr.var(k, p, m), arg(p, m));
                    for (std::size_t k2 = 0; k2 < d; ++k2)
                        if (!ad(k, k2).is_zero()) eq.add(fr.var(k2, j, l), -ad(k, k2));
                    sys.add(eq);
                }
            }
    }
}

std::vector<std::string> condition_names(const std::array<bool, 3>& c) {
    static const char* names[] = {"i", "ii", "iii"};
    std::vector<std::string> out;
    for (std::size_t k = 0; k < 3; ++k)
        if (c[k]) out.emplace_back(names[k]);
    return out;
}

std::optional<SectionCertificate> solve_certificate(const HopfData& h, const LinearSystem& sys, Kind kind,
                                                    std::size_t rows, std::size_t cols) {
    auto ef = std::make_shared<EchelonForm>(reduce(sys));
    if (!ef->consistent()) return std::nullopt;
    Vec x = ef->particular();
    SectionCertificate cert{kind, Mat(h.field(), rows, cols, std::move(x)), {}, ef};
    bool section = kind == Kind::fs_section || kind == Kind::complete_fs_section;
    auto conds = section ? fs_section_conditions(h, cert.matrix) : fs_retraction_conditions(h, cert.matrix);
    bool complete = kind == Kind::complete_fs_section || kind == Kind::complete_fs_retraction;
    if (!conds[0] || !conds[1] || (complete && !conds[2]))
        throw std::logic_error("smoothness: solver output fails the direct " + to_string(kind) + " check");
    cert.verified_conditions = condition_names(conds);
    return cert;
}

std::optional<SectionCertificate> section_search(const HopfData& h, bool complete) {
    validate_shape(h);
    SectionFrame fr(h);
    LinearSystem sys(h.field(), fr.n * fr.d * fr.d);
    add_section_linearity(sys, fr);
    add_section_splitting(sys, fr);
    if (complete) add_section_completeness(sys, fr);
    return solve_certificate(h, sys, complete ? Kind::complete_fs_section : Kind::fs_section, fr.n * fr.d, fr.d);
}

std::optional<SectionCertificate> retraction_search(const HopfData& h, bool complete) {
    validate_shape(h);
    RetractionFrame fr(h);
    LinearSystem sys(h.field(), fr.d * fr.n * fr.d);
    add_retraction_colinearity(sys, fr);
    add_retraction_splitting(sys, fr);
    if (complete) add_retraction_equivariance(sys, fr);
    return solve_certificate(h, sys, complete ? Kind::complete_fs_retraction : Kind::fs_retraction, fr.d,
                             fr.n * fr.d);
}

}  // namespace

bool SectionCertificate::verified(const std::string& condition) const {
    return std::find(verified_conditions.begin(), verified_conditions.end(), condition) != verified_conditions.end();
}

std::string to_string(SectionCertificate::Kind k) {
    switch (k) {
        case Kind::fs_section: return "fs_section";
        case Kind::complete_fs_section: return "complete_fs_section";
        case Kind::fs_retraction: return "fs_retraction";
        case Kind::complete_fs_retraction: return "complete_fs_retraction";
    }
    return "unknown";
}

std::optional<SectionCertificate> find_fs_section(const HopfData& h) { return section_search(h, false); }
std::optional<SectionCertificate> find_complete_fs_section(const HopfData& h) { return section_search(h, true); }
std::optional<SectionCertificate> find_fs_retraction(const HopfData& h) { return retraction_search(h, false); }
std::optional<SectionCertificate> find_complete_fs_retraction(const HopfData& h) {
    return retraction_search(h, true);
}

bool check_im_tau(const HopfData& h, const SectionCertificate& cert) {
    const std::size_t n = h.dim();
    const std::size_t d = cert.matrix.cols();
    if (cert.matrix.rows() != n * d) throw DimensionError("check_im_tau: matrix is not a map H⁺ -> H ⊗ H⁺");
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            Scalar s = h.field().zero();
            for (std::size_t a = 0; a < n; ++a) s += h.coa.counit[a] * cert.matrix(a * d + k, j);
            if (!s.is_zero()) return false;
        }
    return true;
}

std::array<bool, 3> fs_section_conditions(const HopfData& h, const Mat& tau) {
    SectionFrame fr(h);
    const std::size_t n = fr.n, d = fr.d;
    if (tau.rows() != n * d || tau.cols() != d) throw DimensionError("fs_section_conditions: wrong matrix shape");
    std::vector<Vec> full(d);
    for (std::size_t j = 0; j < d; ++j) full[j] = fr.tau_full(tau, j);

    std::array<bool, 3> ok{true, true, true};
    for (std::size_t i = 0; i < n && ok[0]; ++i)
        for (std::size_t j = 0; j < d && ok[0]; ++j) {
            Vec c = fr.C * fr.ops.mul(fr.ops.basis(i), fr.B.col(j));
            Vec lhs = zero_vec(h.field(), n * n);
            for (std::size_t l = 0; l < d; ++l) axpy(lhs, c[l], full[l]);
            Vec rhs = zero_vec(h.field(), n * n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t m = 0; m < n; ++m) {
                    const Scalar& v = full[j][a * n + m];
                    if (v.is_zero()) continue;
                    for (const auto& t : fr.ops.alg().product(i, a)) rhs[t.index * n + m] += t.coef * v;
                }
            ok[0] = lhs == rhs;
        }
    Mat mm = fr.ops.alg().mult_matrix();
    for (std::size_t j = 0; j < d && ok[1]; ++j) ok[1] = mm * full[j] == fr.B.col(j);
    for (std::size_t j = 0; j < d && ok[2]; ++j) {
        Vec lhs = zero_vec(h.field(), n * n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t m = 0; m < n; ++m) {
                const Scalar& v = full[j][a * n + m];
                if (v.is_zero()) continue;
                for (const auto& [idx, w] : fr.pair_coaction(a, m)) lhs[idx] += v * w;
            }
        Mat r = fr.plus_coaction(j);
        Vec rhs = zero_vec(h.field(), n * n * n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t k = 0; k < d; ++k)
                if (!r(p, k).is_zero())
                    for (std::size_t x = 0; x < n * n; ++x) rhs[p * n * n + x] += r(p, k) * full[k][x];
        ok[2] = lhs == rhs;
    }
    return ok;
}

std::array<bool, 3> fs_retraction_conditions(const HopfData& h, const Mat& chi) {
    RetractionFrame fr(h);
    const std::size_t n = fr.n, d = fr.d;
    if (chi.rows() != d || chi.cols() != n * d) throw DimensionError("fs_retraction_conditions: wrong matrix shape");
    auto chi_col = [&](std::size_t i, std::size_t l) { return chi.col(i * d + l); };

    std::array<bool, 3> ok{true, true, true};
    for (std::size_t i = 0; i < n && ok[0]; ++i)
        for (std::size_t l = 0; l < d && ok[0]; ++l) {
            Vec lhs = fr.bar_coaction(fr.q.section * chi_col(i, l));
            Vec rhs = zero_vec(h.field(), n * d);
            for (const auto& t : fr.ops.coa().delta(i)) {
                Vec c = chi_col(t.b, l);
                for (std::size_t k = 0; k < d; ++k) rhs[t.a * d + k] += t.coef * c[k];
            }
            ok[0] = lhs == rhs;
        }
    for (std::size_t i = 0; i < n && ok[1]; ++i) {
        Vec arg = zero_vec(h.field(), n * d);
        for (const auto& t : fr.ops.coa().delta(i)) {
            Vec pb = fr.P(fr.ops.basis(t.b));
            for (std::size_t l = 0; l < d; ++l) arg[t.a * d + l] += t.coef * pb[l];
        }
        ok[1] = chi * arg == fr.P(fr.ops.basis(i));
    }
    for (std::size_t i = 0; i < n && ok[2]; ++i) {
        auto d3 = delta3(fr.ops.coa(), i);
        for (std::size_t j = 0; j < n && ok[2]; ++j)
            for (std::size_t l = 0; l < d && ok[2]; ++l) {
                Mat arg = fr.equivariance_argument(d3, j, fr.q.section.col(l));
                Vec lhs = chi * arg.entries();
                Vec rhs = fr.P(fr.ops.left_adjoint(i, fr.q.section * chi_col(j, l)));
                ok[2] = lhs == rhs;
            }
    }
    return ok;
}

// ---- group algebra of the integers ----

namespace {

FieldSpec laurent_field() { return FieldSpec::rationals(); }

void add_to(LaurentElement& e, long k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = e.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

template <class Key, class Map>
void add_key(Map& m, const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

LaurentElement basis_vector(long n) {
    LaurentElement e;
    add_to(e, n, laurent_field().one());
    add_to(e, n + 1, -laurent_field().one());
    return e;
}

// τ on a finitely supported element of the augmentation ideal, via partial sums.
std::optional<LaurentTensor> apply_tau(const LaurentTau& tau, const LaurentElement& x) {
    LaurentTensor out;
    if (x.empty()) return out;
    Scalar partial = laurent_field().zero();
    long lo = x.begin()->first, hi = x.rbegin()->first;
    for (long k = lo; k <= hi; ++k) {
        auto it = x.find(k);
        if (it != x.end()) partial += it->second;
        if (partial.is_zero()) continue;
        for (const auto& [key, v] : tau(k)) add_key(out, key, partial * v);
    }
    if (!partial.is_zero()) return std::nullopt;
    return out;
}

}  // namespace

LaurentTensor laurent_standard_tau(long n) {
    LaurentTensor t;
    add_key(t, std::pair{n, 0L}, laurent_field().one());
    add_key(t, std::pair{n, 1L}, -laurent_field().one());
    return t;
}

LaurentWindowReport laurent_window_report(long window, const LaurentTau& tau) {
    if (window < 1) throw std::invalid_argument("laurent window must be positive");
    LaurentWindowReport rep;
    for (long n = -window; n <= window; ++n) {
        LaurentTensor t = tau(n);
        for (long a = -window; a <= window; ++a) {
            LaurentElement hx;
            for (const auto& [k, c] : basis_vector(n)) add_to(hx, k + a, c);
            auto lhs = apply_tau(tau, hx);
            LaurentTensor rhs;
            for (const auto& [key, c] : t) add_key(rhs, std::pair{key.first + a, key.second}, c);
            if (!lhs || *lhs != rhs) rep.linear = false;
        }
        LaurentElement m;
        for (const auto& [key, c] : t) add_to(m, key.first + key.second, c);
        if (m != basis_vector(n)) rep.splits = false;
        // Group-likes: a1 b1 S(b3) S(a3) ⊗ a2 ⊗ b2 = g^{u+v-v-u} ⊗ g^u ⊗ g^v, x1 S(x3) ⊗ x2 = g^{m-m} ⊗ g^m.
        std::map<std::array<long, 3>, Scalar> lhs, rhs;
        for (const auto& [key, c] : t) add_key(lhs, std::array<long, 3>{key.first + key.second - key.second - key.first, key.first, key.second}, c);
        std::map<long, LaurentElement> by_left;
        for (const auto& [m, c] : basis_vector(n)) add_to(by_left[m - m], m, c);
        for (const auto& [p, x] : by_left) {
            auto tx = apply_tau(tau, x);
            if (!tx) {
                rep.complete = false;
                continue;
            }
            for (const auto& [key, c] : *tx) add_key(rhs, std::array<long, 3>{p, key.first, key.second}, c);
        }
        if (lhs != rhs) rep.complete = false;
    }
    return rep;
}

bool laurent_fs_section_window_check(long window) { return laurent_window_report(window).holds(); }

}  // namespace hopfsmith
