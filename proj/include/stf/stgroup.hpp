#pragma once

#include "stf/cmatrix.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stf {

enum class BuiltinGroup {
    U1,
    N_U1,
    U1_2,
    U1_3,
    U1_2xU1,
    JD4,
    D61,
    ST_C1_generic,
    ST_C1_sub4,
    ST_C1_sub2,
    ST_C2_generic,
    ST_C2_cube,
};

// Compact subgroup of USp(2g) presented as <gens> * <embedded torus>. Block b
// of the 2g x 2g matrices carries U(u) = diag(u, conj u) with u the torus
// parameter indexed by param_of_block[b]; shared indices tie blocks together.
// `basis` conjugates the whole picture (identity when n == 0), so conjugated
// copies of a group stay first-class citizens.
struct STGroup {
    std::string name;
    int g = 1;
    int n_params = 1;
    std::array<int, 3> param_of_block{0, 0, 0};
    std::vector<CMat> gens; // finite part; empty for connected groups
    CMat basis;             // torus = basis * diag(...) * basis^-1; n == 0 means identity
};

const char* builtin_group_name(BuiltinGroup which);
std::optional<BuiltinGroup> builtin_by_name(std::string_view name);
std::vector<BuiltinGroup> all_builtin_groups();
STGroup builtin_group(BuiltinGroup which);

CMat symplectic_form(int g); // diag(J, ..., J)

// One angle (radians) per torus parameter.
CMat torus_element(const STGroup& G, const std::vector<double>& angles);
bool in_torus(const STGroup& G, const CMat& m, double tol = 1e-9);

// BFS closure of coset representatives modulo the torus, starting from the
// identity and right-multiplying by seeds. Throws std::runtime_error past
// `cap` cosets (runaway closure means a bad tolerance, not a bigger group).
std::vector<CMat> closure_mod_torus(const STGroup& G, const std::vector<CMat>& seeds,
                                    double tol = 1e-9, int cap = 256);
std::vector<CMat> enumerate_components(const STGroup& G, double tol = 1e-9);

struct ComponentProfile {
    int order = 1;
    bool abelian = true;
    std::vector<int> element_orders; // sorted, one entry per component
};
ComponentProfile component_group_profile(const STGroup& G, double tol = 1e-9);

// det(I - M T) = 1 + a1 T + a2 T^2 + a3 T^3 + ...; the a_k are real for
// symplectic unitary M. Faddeev-LeVerrier, no eigendecomposition.
std::array<double, 3> charpoly_coeffs(const CMat& m);

enum class CharCoeff { A1 = 1, A2 = 2, A3 = 3 };

struct MomentSequence {
    CharCoeff coeff = CharCoeff::A1;
    std::vector<double> values; // values[n] = M_n, n = 0..n_max
};

// Exact Haar moments by equispaced torus quadrature averaged over components.
// The integrand is a trig polynomial of per-angle degree <= 3*n, so any
// quad_points > 3*n_max integrates it exactly; the default leaves headroom.
MomentSequence haar_moments(const STGroup& G, CharCoeff coeff, int n_max,
                            int quad_points = 256);

// M_n(G1 x G2) for a1: traces add across a direct sum, so moments convolve
// binomially. Both inputs must carry the a1 tag.
MomentSequence binomial_convolution(const MomentSequence& x, const MomentSequence& y);
MomentSequence scaled_moments(const MomentSequence& base, long s); // M_n -> s^n M_n

STGroup conjugate_group(const STGroup& G, const CMat& w); // w symplectic unitary

} // namespace stf
