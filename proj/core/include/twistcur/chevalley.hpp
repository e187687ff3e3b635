#pragma once

#include "twistcur/folding.hpp"
#include "twistcur/sparse.hpp"

namespace twistcur {

// Chevalley basis {h_i} u {e_alpha, e_{-alpha}} with structure constants
// from a bimultiplicative asymmetry function on the root lattice, oriented
// so that the type-A table equals the sl_{n+1} realization
// e_{alpha_{ij}} -> E_{i,j+1}, f_{alpha_{ij}} -> E_{j+1,i}.
struct ChevalleyAlgebra
{
	std::shared_ptr<const RootSystem> rs;
	int dim = 0;

	// basis layout: h_0..h_{n-1}, then e_r, f_r interleaved per root index
	int h_index(int i) const { return i; }
	int e_index(int r) const { return rs->rank + 2 * r; }
	int f_index(int r) const { return rs->rank + 2 * r + 1; }
	bool is_h(int b) const { return b < rs->rank; }
	bool is_e(int b) const { return b >= rs->rank && (b - rs->rank) % 2 == 0; }
	int root_of(int b) const { return (b - rs->rank) / 2; } // for e/f indices

	// bracket table over Q
	std::vector<std::vector<std::vector<std::pair<int, Rational>>>> tab;

	const std::vector<std::pair<int, Rational>> &bracket_basis(int a, int b) const
	{
		return tab[a][b];
	}
	SparseVector bracket(const SparseVector &x, const SparseVector &y) const;

	// root-space weight of a basis vector, as root-lattice coords (zero for h)
	Coords weight_of(int b) const;
	// fundamental-weight coordinates of the same
	Weight fund_weight_of(int b) const;

	// structure constant N(alpha,beta): coefficient of e_{alpha+beta} in
	// [e_alpha, e_beta]; signs of roots are passed separately
	Rational structure_constant(int r1, bool neg1, int r2, bool neg2) const;

	std::string basis_name(int b) const;
};

ChevalleyAlgebra build_chevalley(const RootSystem &rs);

// sl_{n+1} bracket table in the same basis layout, for cross-validation
std::vector<std::vector<std::vector<std::pair<int, Rational>>>>
sl_matrix_bracket_table(const RootSystem &rs);

} // namespace twistcur
