#pragma once

#include "twistcur/automorphism.hpp"
#include "twistcur/current.hpp"

namespace twistcur {

// Twisted current algebra g[t]^sigma attached to a folding: per-degree
// bases, sigma-eigenspace dimensions, the hyperspecial algebra Cg for
// A_{2l} parents, and the isomorphism eta: Cg -> g[t]^sigma.
class TwistedAlgebra
{
  public:
	TwistedAlgebra(std::shared_ptr<const ChevalleyAlgebra> alg,
	               std::shared_ptr<const FoldingData> fd);

	const ChevalleyAlgebra &chevalley() const { return *alg_; }
	std::shared_ptr<const ChevalleyAlgebra> chevalley_ptr() const { return alg_; }
	const FoldingData &folding() const { return *fd_; }
	std::shared_ptr<const FoldingData> folding_ptr() const { return fd_; }
	int m() const { return fd_->m; }
	const AlgebraAutomorphism &sigma() const { return sigma_; }
	const AlgebraAutomorphism &tau() const { return tau_; }

	// basis of the degree-d component (linearly independent, spanning)
	const std::vector<CurrentElement> &basis(int d) const;

	// dimension of the eps^d eigenspace of sigma on g
	int eigenspace_dim(int d) const;

	// sigma extended to g[t] (resp. tau to g[t,1/t] with tau(t) = -t)
	CurrentElement apply_sigma(const CurrentElement &x) const;
	CurrentElement apply_tau_hyp(const CurrentElement &x) const;
	bool sigma_fixed(const CurrentElement &x) const;

	// coordinates of a degree-homogeneous twisted element in basis(d);
	// false if x is outside the span (i.e. not sigma-fixed)
	bool coords_in_basis(const CurrentElement &x,
	                     std::vector<std::pair<int, Cyclotomic>> &out) const;

	// Cartan subalgebra eigenbasis: h in the eps^j eigenspace, as
	// coroot-coordinate sparse vectors over the h-indices
	const std::vector<SparseVector> &cartan_eigenbasis(int j) const;

	// hyperspecial current algebra (A_{2l} only): the five listed families
	// at parameter k, both signs
	std::vector<CurrentElement> hyperspecial_basis(int k) const;

	// eta = eta_k o eta_c on Cg elements; errors if x is not in Cg
	CurrentElement eta(const CurrentElement &x) const;

	// degree-d twisted Cartan elements h (x) t^d as currents
	std::vector<CurrentElement> cartan_currents(int d) const;

  private:
	std::vector<CurrentElement> build_basis(int d) const;
	int flat(int basis, int degoff) const; // index in the (basis, degree)-slice

	std::shared_ptr<const ChevalleyAlgebra> alg_;
	std::shared_ptr<const FoldingData> fd_;
	AlgebraAutomorphism tau_, sigma_, cartan_inv_;
	mutable std::vector<std::vector<CurrentElement>> basis_cache_;
	mutable std::vector<RowSpace> basis_space_;
	mutable std::vector<int> eig_cache_;
	std::vector<std::vector<SparseVector>> cartan_eig_;
};

} // namespace twistcur
