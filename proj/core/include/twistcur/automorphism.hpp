#pragma once

#include "twistcur/chevalley.hpp"

namespace twistcur {

// Linear map given on the Chevalley basis; bracket preservation is checked
// at construction for the maps built here.
struct AlgebraAutomorphism
{
	std::shared_ptr<const ChevalleyAlgebra> alg;
	std::vector<SparseVector> img; // image of each basis vector

	SparseVector apply(const SparseVector &v) const;
	AlgebraAutomorphism compose(const AlgebraAutomorphism &inner) const; // this after inner
	bool is_identity() const;
	int order(int cap = 12) const;
	bool preserves_bracket() const; // on all basis pairs
};

// Pinned diagram automorphism: e_i -> e_{tau(i)}, extended by bracket
// closure through a decomposition of each root as (root + simple).
AlgebraAutomorphism build_tau(std::shared_ptr<const ChevalleyAlgebra> alg,
                              const FoldingData &fd);

// Standard automorphism: tau for m != 4, tau composed with i^h on A_{2l}.
AlgebraAutomorphism build_sigma(std::shared_ptr<const ChevalleyAlgebra> alg,
                                const FoldingData &fd);

// Cartan involution phi: e_i -> -f_i, h -> -h (so e_alpha -> -e_{-alpha}).
AlgebraAutomorphism build_cartan_involution(std::shared_ptr<const ChevalleyAlgebra> alg);

} // namespace twistcur
