#include "stf/endo.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "stf/stgroup.hpp"

namespace stf {

namespace {

const STGroup& c2_group() {
    static const STGroup g = builtin_group(BuiltinGroup::ST_C2_generic);
    return g;
}

// R^18 coordinates of a slice element: (Re p0, Im p0, ..., Re p8, Im p8).
Eigen::VectorXd to_vec(const VRElement& e) {
    Eigen::VectorXd v(18);
    for (int k = 0; k < 9; ++k) {
        v(2 * k) = e.p[(size_t)k].real();
        v(2 * k + 1) = e.p[(size_t)k].imag();
    }
    return v;
}

VRElement from_vec(const Eigen::VectorXd& v) {
    VRElement e;
    for (int k = 0; k < 9; ++k) e.p[(size_t)k] = {v(2 * k), v(2 * k + 1)};
    return e;
}

// Conjugation by g as a real-linear operator on the 18 slice coordinates.
Eigen::MatrixXd conj_operator(const CMat& g) {
    Eigen::MatrixXd L(18, 18);
    CMat g_adj = adjoint(g);
    for (int k = 0; k < 18; ++k) {
        Eigen::VectorXd unit = Eigen::VectorXd::Zero(18);
        unit(k) = 1.0;
        CMat c = mul(mul(g, vr_realize(from_vec(unit))), g_adj);
        if (vr_offslice(c) > 1e-9)
            throw std::runtime_error("conjugation left the centralizer slice");
        L.col(k) = to_vec(vr_project(c));
    }
    return L;
}

int nullspace(const Eigen::MatrixXd& m, Eigen::MatrixXd* basis_out) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double thresh = 1e-8 * std::max(1.0, sv.size() ? sv(0) : 0.0);
    int null_dim = (int)m.cols();
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) >= thresh) --null_dim;
    if (basis_out) *basis_out = svd.matrixV().rightCols(null_dim);
    return null_dim;
}

std::array<std::complex<double>, 9> amat_product(const VRElement& x, const VRElement& y) {
    std::array<std::complex<double>, 9> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                r[(size_t)(3 * i + j)] += x.p[(size_t)(3 * i + k)] * y.p[(size_t)(3 * k + j)];
    return r;
}

double commutator_norm(const VRElement& x, const VRElement& y) {
    auto xy = amat_product(x, y), yx = amat_product(y, x);
    double m = 0;
    for (int k = 0; k < 9; ++k) m = std::max(m, std::abs(xy[(size_t)k] - yx[(size_t)k]));
    return m;
}

std::string identify_algebra(int dim, bool comm, int center) {
    if (!comm) {
        if (dim == 18 && center == 2) return "M3(C)";
        if (dim == 10 && center == 4) return "M2(C) x C";
        if (dim == 9 && center == 1) return "M3(R)";
        if (dim == 5 && center == 2) return "M2(R) x R";
    } else {
        if (dim == 6) return "C x C x C";
        if (dim == 4) return "C x C";
        if (dim == 3) return "R x R x R or C x R";
        if (dim == 2) return "R x R";
        if (dim == 1) return "R";
    }
    return "dim " + std::to_string(dim) + (comm ? ", commutative" : ", noncommutative") +
           ", center " + std::to_string(center);
}

struct Parser {
    const std::string& s;
    size_t pos = 0;

    int peek() {
        while (pos < s.size() && (std::isspace((unsigned char)s[pos]) || s[pos] == '*')) ++pos;
        return pos < s.size() ? std::tolower((unsigned char)s[pos]) : -1;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("bad subgroup word '" + s + "': " + what);
    }

    CMat atom() {
        int c = peek();
        const auto& gens = c2_group().gens;
        switch (c) {
            case 'r': ++pos; return gens[0];
            case 's': ++pos; return gens[1];
            case 't': ++pos; return gens[2];
            case '1': ++pos; return CMat::ident(6);
            case '(': {
                ++pos;
                CMat m = sequence();
                if (peek() != ')') fail("missing ')'");
                ++pos;
                return m;
            }
            default: fail("expected r, s, t, 1 or '('");
        }
    }

    CMat term() {
        CMat m = atom();
        if (peek() == '^') {
            ++pos;
            if (!std::isdigit((unsigned char)peek())) fail("expected digits after '^'");
            int k = 0;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
                k = 10 * k + (s[pos++] - '0');
            CMat r = CMat::ident(6);
            for (int i = 0; i < k; ++i) r = mul(r, m);
            return r;
        }
        return m;
    }

    CMat sequence() {
        CMat m = CMat::ident(6);
        for (int c = peek(); c != -1 && c != ')'; c = peek()) m = mul(m, term());
        return m;
    }
};

std::vector<CMat> subgroup_reps(const std::vector<std::string>& words) {
    std::vector<CMat> seeds;
    seeds.reserve(words.size());
    for (const std::string& w : words) seeds.push_back(word_matrix(w));
    return closure_mod_torus(c2_group(), seeds);
}

} // namespace

CMat vr_realize(const VRElement& e) {
    CMat m(6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            cplx v((long double)e.p[(size_t)(3 * i + j)].real(),
                   (long double)e.p[(size_t)(3 * i + j)].imag());
            m.at(2 * i, 2 * j) = v;
            m.at(2 * i + 1, 2 * j + 1) = std::conj(v);
        }
    return m;
}

VRElement vr_project(const CMat& m) {
    VRElement e;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            e.p[(size_t)(3 * i + j)] = {(double)m.at(2 * i, 2 * j).real(),
                                        (double)m.at(2 * i, 2 * j).imag()};
    return e;
}

double vr_offslice(const CMat& m) {
    long double worst = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if ((i + j) % 2) { // mixed parity must vanish
                worst = std::max(worst, std::abs(m.at(i, j)));
            } else if (i % 2 == 1) { // odd-odd mirrors even-even conjugated
                worst = std::max(worst, std::abs(m.at(i, j) - std::conj(m.at(i - 1, j - 1))));
            }
        }
    return (double)worst;
}

double rosati_pairing(const VRElement& x, const VRElement& y) {
    CMat h = symplectic_form(3);
    CMat m = mul(mul(vr_realize(x), transpose(h)), mul(transpose(vr_realize(y)), h));
    return (double)trace(m).real();
}

CMat word_matrix(const std::string& word) {
    Parser p{word};
    CMat m = p.sequence();
    if (p.peek() != -1) p.fail("trailing input");
    return m;
}

FixedAlgebra fixed_subalgebra(const std::vector<std::string>& words) {
    std::vector<CMat> reps = subgroup_reps(words);

    FixedAlgebra fa;
    Eigen::MatrixXd basis;
    if (reps.size() == 1) {
        basis = Eigen::MatrixXd::Identity(18, 18);
        fa.dim = 18;
    } else {
        Eigen::MatrixXd stacked(18 * (reps.size() - 1), 18);
        for (size_t i = 1; i < reps.size(); ++i)
            stacked.middleRows(18 * ((Eigen::Index)i - 1), 18) =
                conj_operator(reps[i]) - Eigen::MatrixXd::Identity(18, 18);
        fa.dim = nullspace(stacked, &basis);
    }

    fa.basis.reserve((size_t)fa.dim);
    for (int k = 0; k < fa.dim; ++k) fa.basis.push_back(from_vec(basis.col(k)));

    fa.commutative = true;
    for (int i = 0; i < fa.dim && fa.commutative; ++i)
        for (int j = 0; j < i; ++j)
            if (commutator_norm(fa.basis[(size_t)i], fa.basis[(size_t)j]) >= 1e-9) {
                fa.commutative = false;
                break;
            }

    if (fa.commutative) {
        fa.center_dim = fa.dim;
    } else {
        // x in the center iff [b_i, x] = 0 for every basis element; the
        // commutator stays in the algebra, so restrict to basis coordinates.
        Eigen::MatrixXd stacked(18 * fa.dim, fa.dim);
        for (int i = 0; i < fa.dim; ++i) {
            Eigen::MatrixXd ad(18, 18);
            for (int k = 0; k < 18; ++k) {
                Eigen::VectorXd unit = Eigen::VectorXd::Zero(18);
                unit(k) = 1.0;
                VRElement x = from_vec(unit);
                auto xy = amat_product(fa.basis[(size_t)i], x);
                auto yx = amat_product(x, fa.basis[(size_t)i]);
                VRElement d;
                for (int q = 0; q < 9; ++q) d.p[(size_t)q] = xy[(size_t)q] - yx[(size_t)q];
                ad.col(k) = to_vec(d);
            }
            stacked.middleRows(18 * i, 18) = ad * basis;
        }
        fa.center_dim = nullspace(stacked, nullptr);
    }

    fa.identified = identify_algebra(fa.dim, fa.commutative, fa.center_dim);
    return fa;
}

int subgroup_order(const std::vector<std::string>& words) {
    return (int)subgroup_reps(words).size();
}

double closure_residual(const std::vector<std::string>& words) {
    std::vector<CMat> reps = subgroup_reps(words);
    double worst = 0;
    for (const CMat& g : reps) {
        CMat g_adj = adjoint(g);
        for (int k = 0; k < 18; ++k) {
            Eigen::VectorXd unit = Eigen::VectorXd::Zero(18);
            unit(k) = 1.0;
            worst = std::max(worst,
                             vr_offslice(mul(mul(g, vr_realize(from_vec(unit))), g_adj)));
        }
    }
    return worst;
}

double identity_residual(const std::vector<std::string>& words, const FixedAlgebra& fa) {
    std::vector<CMat> reps = subgroup_reps(words);
    double worst = 0;
    for (const CMat& g : reps) {
        CMat g_adj = adjoint(g);
        for (const VRElement& b : fa.basis) {
            CMat phi = vr_realize(b);
            worst = std::max(worst, max_abs_diff(mul(mul(g, phi), g_adj), phi));
        }
    }
    return worst;
}

double span_residual(const FixedAlgebra& fa, const VRElement& e) {
    Eigen::MatrixXd basis(18, fa.dim);
    for (int k = 0; k < fa.dim; ++k) basis.col(k) = to_vec(fa.basis[(size_t)k]);
    Eigen::VectorXd v = to_vec(e);
    return (v - basis * (basis.transpose() * v)).norm();
}

std::vector<double> rosati_gram_eigenvalues(const FixedAlgebra& fa) {
    Eigen::MatrixXd gram(fa.dim, fa.dim);
    for (int i = 0; i < fa.dim; ++i)
        for (int j = 0; j <= i; ++j) {
            double v = rosati_pairing(fa.basis[(size_t)i], fa.basis[(size_t)j]);
            gram(i, j) = v;
            gram(j, i) = v;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    std::vector<double> out((size_t)fa.dim);
    for (int i = 0; i < fa.dim; ++i) out[(size_t)i] = es.eigenvalues()(i);
    return out;
}

std::vector<LatticeRow> lattice_report() {
    static const std::vector<std::vector<std::string>> lattice = {
        {"r", "t", "s"},
        {"t", "r", "(rs)^2"},
        {"t", "rs"},
        {"t", "s", "(rs)^2"},
        {"r", "s"},
        {"t", "r"},
        {"t", "(rs)^2"},
        {"t", "s"},
        {"(rs)^2", "r"},
        {"rs"},
        {"(rs)^2", "s"},
        {"t"},
        {"r"},
        {"(rs)^2"},
        {"s"},
        {"1"},
    };
    std::vector<LatticeRow> rows;
    rows.reserve(lattice.size());
    for (const auto& words : lattice) {
        LatticeRow row;
        std::string label;
        for (const std::string& w : words) {
            if (!label.empty()) label += ';';
            label += w;
        }
        row.subgroup = label;
        row.order = subgroup_order(words);
        row.algebra = fixed_subalgebra(words);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string lattice_csv(const std::vector<LatticeRow>& rows) {
    std::string out = "subgroup,dim,commutative,center_dim,identified_algebra\n";
    for (const LatticeRow& r : rows) {
        out += r.subgroup;
        out += ',' + std::to_string(r.algebra.dim);
        out += r.algebra.commutative ? ",yes," : ",no,";
        out += std::to_string(r.algebra.center_dim);
        out += ',' + r.algebra.identified + '\n';
    }
    return out;
}

} // namespace stf
