#include "stf/stgroup.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stf {

namespace {

constexpr long double kTau = 2.0L * std::numbers::pi_v<long double>;

cplx unit_root(int n) { // e^{2 pi i / n}
    return {std::cos(kTau / n), std::sin(kTau / n)};
}

void put_cell(CMat& m, int bi, int bj, cplx a, cplx b, cplx c, cplx d) {
    m.at(2 * bi, 2 * bj) = a;
    m.at(2 * bi, 2 * bj + 1) = b;
    m.at(2 * bi + 1, 2 * bj) = c;
    m.at(2 * bi + 1, 2 * bj + 1) = d;
}

void put_J(CMat& m, int bi, int bj, long double sign = 1) {
    put_cell(m, bi, bj, 0, sign, -sign, 0);
}

void put_K(CMat& m, int bi, int bj) {
    cplx i{0, 1};
    put_cell(m, bi, bj, 0, i, i, 0);
}

void put_I(CMat& m, int bi, int bj) { put_cell(m, bi, bj, 1, 0, 0, 1); }

void put_Z(CMat& m, int bi, int bj, int n, bool conjugated) {
    cplx z = unit_root(n);
    if (conjugated) z = std::conj(z);
    put_cell(m, bi, bj, z, 0, 0, std::conj(z));
}

CMat mk_R(int g) { // diag(J, ..., J)
    CMat m(2 * g);
    for (int b = 0; b < g; ++b) put_J(m, b, b);
    return m;
}

CMat mk_T(int g, int n) { // diag(Z_n, conj Z_n, I, ...)
    CMat m(2 * g);
    put_Z(m, 0, 0, n, false);
    put_Z(m, 1, 1, n, true);
    for (int b = 2; b < g; ++b) put_I(m, b, b);
    return m;
}

CMat mk_S_swapJ(int g) { // [[0,J],[-J,0]] (+ I on block 3)
    CMat m(2 * g);
    put_J(m, 0, 1);
    put_J(m, 1, 0, -1);
    if (g > 2) put_I(m, 2, 2);
    return m;
}

CMat mk_S_swapK(int g) { // [[0,K],[K,0]] (+ J on block 3)
    CMat m(2 * g);
    put_K(m, 0, 1);
    put_K(m, 1, 0);
    if (g > 2) put_J(m, 2, 2);
    return m;
}

struct KahanL {
    long double s = 0, c = 0;
    void add(long double x) {
        long double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    void merge(const KahanL& o) {
        add(o.s);
        c += o.c;
    }
    long double value() const { return s + c; }
};

// Faddeev-LeVerrier up to the requested coefficient only; the a1 path is a
// bare trace, which keeps the torus-only groups cheap.
long double charpoly_coeff_ld(const CMat& m, int k) {
    cplx p1 = -trace(m);
    if (k == 1) return p1.real();
    CMat b = m;
    for (int i = 0; i < m.n; ++i) b.at(i, i) += p1;
    b = mul(m, b);
    cplx p2 = -trace(b) / 2.0L;
    if (k == 2) return p2.real();
    for (int i = 0; i < m.n; ++i) b.at(i, i) += p2;
    b = mul(m, b);
    return (-trace(b) / 3.0L).real();
}

} // namespace

const char* builtin_group_name(BuiltinGroup which) {
    switch (which) {
        case BuiltinGroup::U1: return "u1";
        case BuiltinGroup::N_U1: return "n-u1";
        case BuiltinGroup::U1_2: return "u1-2";
        case BuiltinGroup::U1_3: return "u1-3";
        case BuiltinGroup::U1_2xU1: return "u1-2xu1";
        case BuiltinGroup::JD4: return "jd4";
        case BuiltinGroup::D61: return "d61";
        case BuiltinGroup::ST_C1_generic: return "st-c1-generic";
        case BuiltinGroup::ST_C1_sub4: return "st-c1-sub4";
        case BuiltinGroup::ST_C1_sub2: return "st-c1-sub2";
        case BuiltinGroup::ST_C2_generic: return "st-c2-generic";
        case BuiltinGroup::ST_C2_cube: return "st-c2-cube";
    }
    return "?";
}

std::vector<BuiltinGroup> all_builtin_groups() {
    return {BuiltinGroup::U1,          BuiltinGroup::N_U1,
            BuiltinGroup::U1_2,        BuiltinGroup::U1_3,
            BuiltinGroup::U1_2xU1,     BuiltinGroup::JD4,
            BuiltinGroup::D61,         BuiltinGroup::ST_C1_generic,
            BuiltinGroup::ST_C1_sub4,  BuiltinGroup::ST_C1_sub2,
            BuiltinGroup::ST_C2_generic, BuiltinGroup::ST_C2_cube};
}

std::optional<BuiltinGroup> builtin_by_name(std::string_view name) {
    for (BuiltinGroup b : all_builtin_groups())
        if (name == builtin_group_name(b)) return b;
    return std::nullopt;
}

STGroup builtin_group(BuiltinGroup which) {
    STGroup G;
    G.name = builtin_group_name(which);
    switch (which) {
        case BuiltinGroup::U1:
            G.g = 1;
            break;
        case BuiltinGroup::N_U1:
            G.g = 1;
            G.gens = {mk_R(1)};
            break;
        case BuiltinGroup::U1_2:
            G.g = 2;
            break;
        case BuiltinGroup::U1_3:
            G.g = 3;
            break;
        case BuiltinGroup::U1_2xU1:
            G.g = 3;
            G.n_params = 2;
            G.param_of_block = {0, 0, 1};
            break;
        case BuiltinGroup::JD4:
            G.g = 2;
            G.gens = {mk_R(2), mk_S_swapJ(2), mk_T(2, 8)};
            break;
        case BuiltinGroup::D61:
            G.g = 2;
            G.gens = {mk_R(2), mk_S_swapK(2), mk_T(2, 3)};
            break;
        case BuiltinGroup::ST_C1_generic:
            G.g = 3;
            G.n_params = 2;
            G.param_of_block = {0, 0, 1};
            G.gens = {mk_R(3), mk_S_swapJ(3), mk_T(3, 8)};
            break;
        case BuiltinGroup::ST_C1_sub4: // third generator's primitive 8th root demoted to i
            G.g = 3;
            G.n_params = 2;
            G.param_of_block = {0, 0, 1};
            G.gens = {mk_R(3), mk_S_swapJ(3), mk_T(3, 4)};
            break;
        case BuiltinGroup::ST_C1_sub2: // Z_2 variant: third generator lands in the torus, dropped
            G.g = 3;
            G.n_params = 2;
            G.param_of_block = {0, 0, 1};
            G.gens = {mk_R(3), mk_S_swapJ(3)};
            break;
        case BuiltinGroup::ST_C2_generic:
            G.g = 3;
            G.gens = {mk_R(3), mk_S_swapK(3), mk_T(3, 3)};
            break;
        case BuiltinGroup::ST_C2_cube: // c a cube: Z_3 generator removed
            G.g = 3;
            G.gens = {mk_R(3), mk_S_swapK(3)};
            break;
    }
    return G;
}

CMat symplectic_form(int g) { return mk_R(g); }

CMat torus_element(const STGroup& G, const std::vector<double>& angles) {
    if ((int)angles.size() != G.n_params)
        throw std::invalid_argument("torus_element: expected one angle per parameter");
    CMat m(2 * G.g);
    for (int b = 0; b < G.g; ++b) {
        long double th = angles[(size_t)G.param_of_block[(size_t)b]];
        cplx u{std::cos(th), std::sin(th)};
        m.at(2 * b, 2 * b) = u;
        m.at(2 * b + 1, 2 * b + 1) = std::conj(u);
    }
    if (G.basis.n) m = mul(mul(G.basis, m), adjoint(G.basis));
    return m;
}

bool in_torus(const STGroup& G, const CMat& m, double tol) {
    CMat p = G.basis.n ? mul(mul(adjoint(G.basis), m), G.basis) : m;
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (i != j && std::abs(p.at(i, j)) > tol) return false;
    for (int b = 0; b < G.g; ++b) {
        cplx u = p.at(2 * b, 2 * b);
        if (std::abs(std::abs(u) - 1.0L) > tol) return false;
        if (std::abs(p.at(2 * b + 1, 2 * b + 1) - std::conj(u)) > tol) return false;
    }
    for (int b = 1; b < G.g; ++b)
        for (int b2 = 0; b2 < b; ++b2)
            if (G.param_of_block[(size_t)b] == G.param_of_block[(size_t)b2] &&
                std::abs(p.at(2 * b, 2 * b) - p.at(2 * b2, 2 * b2)) > tol)
                return false;
    return true;
}

std::vector<CMat> closure_mod_torus(const STGroup& G, const std::vector<CMat>& seeds,
                                    double tol, int cap) {
    std::vector<CMat> reps{CMat::ident(2 * G.g)};
    for (size_t i = 0; i < reps.size(); ++i) {
        for (const CMat& s : seeds) {
            CMat y = mul(reps[i], s);
            bool known = false;
            for (const CMat& r : reps)
                if (in_torus(G, mul(adjoint(r), y), tol)) {
                    known = true;
                    break;
                }
            if (!known) {
                if ((int)reps.size() >= cap)
                    throw std::runtime_error("closure_mod_torus: more than " +
                                             std::to_string(cap) +
                                             " cosets; tolerance is off");
                reps.push_back(y);
            }
        }
    }
    return reps;
}

std::vector<CMat> enumerate_components(const STGroup& G, double tol) {
    return closure_mod_torus(G, G.gens, tol);
}

ComponentProfile component_group_profile(const STGroup& G, double tol) {
    std::vector<CMat> reps = enumerate_components(G, tol);
    int n = (int)reps.size();
    auto index_of = [&](const CMat& m) {
        for (int i = 0; i < n; ++i)
            if (in_torus(G, mul(adjoint(reps[(size_t)i]), m), tol)) return i;
        throw std::runtime_error("component_group_profile: product left the closure");
    };
    std::vector<std::vector<int>> table((size_t)n, std::vector<int>((size_t)n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[(size_t)i][(size_t)j] = index_of(mul(reps[(size_t)i], reps[(size_t)j]));

    ComponentProfile p;
    p.order = n;
    p.abelian = true;
    for (int i = 0; i < n && p.abelian; ++i)
        for (int j = 0; j < i; ++j)
            if (table[(size_t)i][(size_t)j] != table[(size_t)j][(size_t)i]) {
                p.abelian = false;
                break;
            }
    for (int i = 0; i < n; ++i) {
        int cur = i, ord = 1;
        while (cur != 0) {
            cur = table[(size_t)cur][(size_t)i];
            ++ord;
            if (ord > n) throw std::runtime_error("component_group_profile: order overflow");
        }
        p.element_orders.push_back(ord);
    }
    std::sort(p.element_orders.begin(), p.element_orders.end());
    return p;
}

std::array<double, 3> charpoly_coeffs(const CMat& m) {
    cplx p1 = -trace(m);
    CMat b = m;
    for (int i = 0; i < m.n; ++i) b.at(i, i) += p1;
    b = mul(m, b);
    cplx p2 = -trace(b) / 2.0L;
    for (int i = 0; i < m.n; ++i) b.at(i, i) += p2;
    b = mul(m, b);
    cplx p3 = -trace(b) / 3.0L;
    return {(double)p1.real(), (double)p2.real(), (double)p3.real()};
}

MomentSequence haar_moments(const STGroup& G, CharCoeff coeff, int n_max, int quad_points) {
    if (n_max < 0) throw std::invalid_argument("haar_moments: n_max must be nonnegative");
    if (quad_points <= 3 * n_max)
        throw std::invalid_argument("haar_moments: quad_points must exceed 3*n_max");
    if (G.n_params < 1 || G.n_params > 2)
        throw std::invalid_argument("haar_moments: torus dimension out of range");

    const std::vector<CMat> reps = enumerate_components(G);
    const int Q = quad_points;
    const int kc = (int)coeff;
    const int dim = G.n_params;

    std::vector<cplx> phase((size_t)Q);
    for (int q = 0; q < Q; ++q)
        phase[(size_t)q] = {std::cos(kTau * q / Q), std::sin(kTau * q / Q)};

    const bool conjugated = G.basis.n != 0;
    const CMat basis_adj = conjugated ? adjoint(G.basis) : CMat{};

    // One slot per (component, first angle); each slot is filled serially and
    // slots merge in ascending order, so thread count never changes the result.
    const long n_outer = (long)reps.size() * Q;
    std::vector<std::vector<KahanL>> slots((size_t)n_outer,
                                           std::vector<KahanL>((size_t)n_max + 1));

#pragma omp parallel for schedule(dynamic)
    for (long o = 0; o < n_outer; ++o) {
        const CMat& w = reps[(size_t)(o / Q)];
        const int q0 = (int)(o % Q);
        std::vector<KahanL>& sums = slots[(size_t)o];
        const int inner = dim == 2 ? Q : 1;
        for (int q1 = 0; q1 < inner; ++q1) {
            const int qs[2] = {q0, q1};
            cplx u[3];
            for (int b = 0; b < G.g; ++b)
                u[b] = phase[(size_t)qs[G.param_of_block[(size_t)b]]];
            CMat m;
            if (!conjugated) {
                m = w; // right-multiplying by a diagonal torus element scales columns
                for (int b = 0; b < G.g; ++b)
                    for (int i = 0; i < m.n; ++i) {
                        m.at(i, 2 * b) *= u[b];
                        m.at(i, 2 * b + 1) *= std::conj(u[b]);
                    }
            } else {
                CMat t = G.basis;
                for (int b = 0; b < G.g; ++b)
                    for (int i = 0; i < t.n; ++i) {
                        t.at(i, 2 * b) *= u[b];
                        t.at(i, 2 * b + 1) *= std::conj(u[b]);
                    }
                m = mul(w, mul(t, basis_adj));
            }
            long double a = charpoly_coeff_ld(m, kc);
            long double x = 1;
            for (int n = 0; n <= n_max; ++n) {
                sums[(size_t)n].add(x);
                x *= a;
            }
        }
    }

    std::vector<KahanL> total((size_t)n_max + 1);
    for (long o = 0; o < n_outer; ++o)
        for (int n = 0; n <= n_max; ++n) total[(size_t)n].merge(slots[(size_t)o][(size_t)n]);

    long double n_points = (long double)reps.size();
    for (int d = 0; d < dim; ++d) n_points *= Q;

    MomentSequence ms;
    ms.coeff = coeff;
    ms.values.resize((size_t)n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        ms.values[(size_t)n] = (double)(total[(size_t)n].value() / n_points);
    return ms;
}

MomentSequence binomial_convolution(const MomentSequence& x, const MomentSequence& y) {
    if (x.coeff != CharCoeff::A1 || y.coeff != CharCoeff::A1)
        throw std::invalid_argument("binomial_convolution: defined for a1 sequences only");
    size_t len = std::min(x.values.size(), y.values.size());
    MomentSequence r;
    r.coeff = CharCoeff::A1;
    r.values.resize(len);
    for (size_t n = 0; n < len; ++n) {
        long double binom = 1, sum = 0;
        for (size_t k = 0; k <= n; ++k) {
            sum += binom * (long double)x.values[k] * (long double)y.values[n - k];
            binom = binom * (long double)(n - k) / (long double)(k + 1);
        }
        r.values[n] = (double)sum;
    }
    return r;
}

MomentSequence scaled_moments(const MomentSequence& base, long s) {
    MomentSequence r = base;
    long double f = 1;
    for (size_t n = 0; n < r.values.size(); ++n) {
        r.values[n] = (double)(f * (long double)base.values[n]);
        f *= (long double)s;
    }
    return r;
}

STGroup conjugate_group(const STGroup& G, const CMat& w) {
    STGroup r = G;
    r.name += "~";
    CMat w_adj = adjoint(w);
    for (CMat& g : r.gens) g = mul(mul(w, g), w_adj);
    r.basis = G.basis.n ? mul(w, G.basis) : w;
    return r;
}

} // namespace stf
