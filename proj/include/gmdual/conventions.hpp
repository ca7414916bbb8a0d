#pragma once

#include <string>

// Single place where twist and shift signs are fixed. data/conventions.json
// mirrors these values and a unit test keeps the two in sync.
namespace gmdual::conventions {

/// O(n) is the free module A(twist_sign * n).
inline constexpr int twist_sign = 1;
/// A(a)_d = A_{a+d}, so the basis vector of A(a) sits in degree basis_degree_sign * a.
inline constexpr int basis_degree_sign = -1;
/// Ext^j_P(F, P(-sum w)) is placed in spot j + dse_spot_offset_per_var * n.
inline constexpr int dse_spot_offset_per_var = -1;
/// S = H^d_m(omega_A) sits in cohomological spot 0 with its socle in this degree.
inline constexpr int serre_socle_degree = 0;
/// Extra shift applied when comparing the two sides of the duality identities.
inline constexpr int theorem_b_shift = 0;
/// D_mat of the local cohomology H^i sits in spot -i.
inline constexpr int dmat_gamma_spot_sign = -1;

inline int dse_spot(int j, int nvars) { return j + dse_spot_offset_per_var * nvars; }
inline int twist_of_line_bundle(int n) { return twist_sign * n; }

/// Ledger contents as a JSON object with sorted keys.
std::string ledger_json();

}  // namespace gmdual::conventions
