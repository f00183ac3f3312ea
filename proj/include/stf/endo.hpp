#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "stf/cmatrix.hpp"

namespace stf {

// One element of the checkerboard centralizer slice of End(C^6): nine complex
// parameters (alpha, beta, gamma, delta, epsilon, phi, lambda, mu, nu) laid
// out row-major as a 3x3 matrix A. The realized 6x6 matrix carries A on the
// even-even positions and conj(A) on the odd-odd ones, zero elsewhere.
struct VRElement {
    std::array<std::complex<double>, 9> p{};
};

CMat vr_realize(const VRElement& e);
VRElement vr_project(const CMat& m); // reads the even-even entries
double vr_offslice(const CMat& m);   // largest |entry| violating the pattern

// Re Tr(Phi_x H^T Phi_y^T H) with H the standard symplectic form; positive
// definite on the slice (2 * sum |p_k|^2 on the diagonal).
double rosati_pairing(const VRElement& x, const VRElement& y);

// Word in the component-group generators of the y^2 = x^7 - c x symmetry
// group: atoms r, s, t, 1, parentheses, ^k powers; case and whitespace are
// ignored. Throws std::invalid_argument on anything else.
CMat word_matrix(const std::string& word);

struct FixedAlgebra {
    int dim = 0; // real dimension
    bool commutative = false;
    int center_dim = 0;
    std::string identified;       // e.g. "M2(R) x R"
    std::vector<VRElement> basis; // orthonormal in the 18 real coordinates
};

// Subalgebra of the slice fixed by conjugation under the subgroup the words
// generate. Throws std::runtime_error if the words do not close into a
// subgroup within 256 cosets.
FixedAlgebra fixed_subalgebra(const std::vector<std::string>& words);

int subgroup_order(const std::vector<std::string>& words);

// Diagnostics used by tests: how far conjugation drifts off the slice, how
// far the computed basis is from being fixed, and the distance from an
// element to the span of a basis (all ~0 when everything is consistent).
double closure_residual(const std::vector<std::string>& words);
double identity_residual(const std::vector<std::string>& words, const FixedAlgebra& fa);
double span_residual(const FixedAlgebra& fa, const VRElement& e);

std::vector<double> rosati_gram_eigenvalues(const FixedAlgebra& fa);

struct LatticeRow {
    std::string subgroup; // generator words joined with ';'
    int order = 1;
    FixedAlgebra algebra;
};

// One row per subgroup in the standard lattice of the 24-element component
// group, top (full group) to bottom (trivial).
std::vector<LatticeRow> lattice_report();

// CSV: subgroup,dim,commutative,center_dim,identified_algebra
std::string lattice_csv(const std::vector<LatticeRow>& rows);

} // namespace stf
