#pragma once

#include "twistcur/rootsystem.hpp"

namespace twistcur {

// Diagram-automorphism folding data for the standard automorphism sigma.
// m = 1 encodes the trivial (untwisted) case, usable wherever a folding is
// expected; then the folded system is the parent itself.
struct FoldingData
{
	std::shared_ptr<const RootSystem> rs;
	int m = 1;
	std::vector<int> tau;     // vertex permutation, 0-based
	std::vector<int> h_coro;  // h in simple-coroot coords (A_{2l} only, else empty)
	std::vector<int> alpha_h; // alpha_i(h) per vertex (zeros unless A_{2l})
	bool a2l = false;         // parent A_{2l} with the order-4 standard sigma
	int ell = 0;              // l for parents A_{2l} and A_{2l-1}

	std::string folded_type;
	int folded_rank = 0;
	std::vector<std::vector<int>> fiber; // folded vertex -> parent vertices
	std::vector<int> eta;                // parent vertex -> folded vertex
	std::vector<int> mi;                 // m_i = m / |fiber(i)|

	struct OrbitInfo
	{
		std::vector<int> orbit; // root indices, starting at the root itself
		bool fixed = false;
		bool a2l_mixed = false; // alpha + tau(alpha) is a root (A_{2l} only)
		bool long_restriction = false;
		// coroot of the restricted root: parent simple-coroot coords and
		// folded coords (empty for a2l_mixed roots)
		Coords rest_coroot;
		std::vector<int> rest_coroot_folded;
	};
	std::vector<OrbitInfo> root_info; // per positive root index

	int tau_root(int r) const;            // index of tau(alpha_r)
	Coords tau_coords(const Coords &c) const;
	int root_alpha_h(int r) const;        // alpha_r(h)
	int tau_coweight_index(int j) const { return tau[j]; }
	Coweight tau_coweight(const Coweight &l) const;

	// type A interval names alpha_{i,j} (1-based, i <= j)
	int root_of_interval(int i, int j) const;
	std::pair<int, int> interval_of_root(int r) const;

	// weight restriction / coweight projection: folded coords are the
	// fiber-sums of parent coords
	std::vector<int> fold_coords(const std::vector<int> &parent) const;
};

// Standard automorphism per the fixed-subalgebra table; D_4 defaults to the
// order-3 folding, pass m = 2 for the B_3 one.
FoldingData build_folding(const RootSystem &rs);
FoldingData build_folding(const RootSystem &rs, int m);
FoldingData trivial_folding(const RootSystem &rs);

// iota: coweights to weights via the normalized form; twisted = restrict to
// the folded Cartan (fundamental coweights map to folded fundamentals).
Weight iota(const FoldingData &fd, const Coweight &lambda, bool twisted);

// class of lambda in X_*(T)_sigma, in the fiber-sum normal form
std::vector<int> project_coweight(const FoldingData &fd, const Coweight &lambda);

} // namespace twistcur
