#include "twistcur/chevalley.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistcur {

namespace {

// asymmetry function on the root lattice, values in {+1,-1}:
// eps(alpha_i, alpha_i) = -1; eps(alpha_i, alpha_j) = -1 on edges with i > j.
int eps_sign(const RootSystem &rs, const Coords &a, const Coords &b)
{
	long parity = 0;
	for (int i = 0; i < rs.rank; ++i) {
		if (a[i] == 0)
			continue;
		for (int j = 0; j < rs.rank; ++j) {
			if (b[j] == 0)
				continue;
			bool neg = (i == j) || (rs.cartan[i][j] == -1 && i > j);
			if (neg)
				parity += (long)a[i] * b[j];
		}
	}
	return (parity % 2 == 0) ? 1 : -1;
}

Coords signed_coords(const RootSystem &rs, int r, bool neg)
{
	Coords c = rs.pos[r];
	if (neg)
		for (auto &x : c)
			x = -x;
	return c;
}

bool coords_positive(const Coords &c)
{
	for (int x : c)
		if (x != 0)
			return x > 0;
	return false;
}

Coords coords_neg(Coords c)
{
	for (auto &x : c)
		x = -x;
	return c;
}

// Chevalley structure constant N(a, b) for signed roots with a + b a root.
// Positive pairs take the asymmetry function; the rest follow from the
// Chevalley symmetry N(-a,-b) = -N(a,b) and the cyclic identity
// N(a,b) = N(b,c) = N(c,a) for a + b + c = 0.
int n_signed(const RootSystem &rs, const Coords &a, const Coords &b)
{
	bool ap = coords_positive(a), bp = coords_positive(b);
	if (ap && bp)
		return eps_sign(rs, a, b);
	if (!ap && !bp)
		return -eps_sign(rs, a, b); // eps(-a,-b) = eps(a,b)
	if (!ap)
		return -n_signed(rs, b, a);
	Coords s(a.size());
	for (size_t i = 0; i < a.size(); ++i)
		s[i] = a[i] + b[i];
	if (coords_positive(s))
		return -eps_sign(rs, coords_neg(b), s);
	return eps_sign(rs, coords_neg(s), a);
}

} // namespace

SparseVector ChevalleyAlgebra::bracket(const SparseVector &x, const SparseVector &y) const
{
	SparseVector out(dim);
	for (const auto &[a, ca] : x.ent)
		for (const auto &[b, cb] : y.ent) {
			Cyclotomic c = ca * cb;
			for (const auto &[t, coef] : tab[a][b])
				out.axpy(coef * c, SparseVector::unit(dim, t));
		}
	return out;
}

Coords ChevalleyAlgebra::weight_of(int b) const
{
	if (is_h(b))
		return Coords(rs->rank, 0);
	return signed_coords(*rs, root_of(b), !is_e(b));
}

Weight ChevalleyAlgebra::fund_weight_of(int b) const
{
	Coords rc = weight_of(b);
	Weight w(rs->rank, 0);
	for (int i = 0; i < rs->rank; ++i)
		for (int j = 0; j < rs->rank; ++j)
			w[i] += rs->cartan[i][j] * rc[j];
	return w;
}

Rational ChevalleyAlgebra::structure_constant(int r1, bool neg1, int r2, bool neg2) const
{
	int a = neg1 ? f_index(r1) : e_index(r1);
	int b = neg2 ? f_index(r2) : e_index(r2);
	Coords sum = signed_coords(*rs, r1, neg1);
	Coords other = signed_coords(*rs, r2, neg2);
	for (int i = 0; i < rs->rank; ++i)
		sum[i] += other[i];
	bool neg_sum = false;
	{
		// locate e_{sum} in the basis
		Coords abs = sum;
		if (!rs->is_pos_root(abs)) {
			for (auto &x : abs)
				x = -x;
			neg_sum = true;
			if (!rs->is_pos_root(abs))
				return 0;
		}
		int t = neg_sum ? f_index(rs->root_index(abs)) : e_index(rs->root_index(abs));
		for (const auto &[idx, c] : tab[a][b])
			if (idx == t)
				return c;
	}
	return 0;
}

std::string ChevalleyAlgebra::basis_name(int b) const
{
	if (is_h(b))
		return "h" + std::to_string(b + 1);
	int r = root_of(b);
	std::string c;
	for (int i = 0; i < rs->rank; ++i)
		c += std::to_string(rs->pos[r][i]);
	return (is_e(b) ? "e[" : "f[") + c + "]";
}

ChevalleyAlgebra build_chevalley(const RootSystem &rs)
{
	ChevalleyAlgebra A;
	A.rs = std::make_shared<RootSystem>(rs);
	A.dim = rs.rank + 2 * rs.n_pos();
	A.tab.assign(A.dim, std::vector<std::vector<std::pair<int, Rational>>>(A.dim));

	auto set = [&](int a, int b, std::vector<std::pair<int, Rational>> v) {
		A.tab[a][b] = v;
		for (auto &[i, c] : v)
			c = -c;
		A.tab[b][a] = v;
	};

	// [h_i, e_{+-r}]
	for (int i = 0; i < rs.rank; ++i)
		for (int r = 0; r < rs.n_pos(); ++r) {
			int v = 0;
			for (int j = 0; j < rs.rank; ++j)
				v += rs.cartan[i][j] * rs.pos[r][j];
			if (v != 0) {
				set(A.h_index(i), A.e_index(r), {{A.e_index(r), Rational(v)}});
				set(A.h_index(i), A.f_index(r), {{A.f_index(r), Rational(-v)}});
			}
		}

	// [e_alpha, e_beta] over all sign pairs
	for (int r = 0; r < rs.n_pos(); ++r)
		for (int s = 0; s < rs.n_pos(); ++s) {
			for (int sgn = 0; sgn < 4; ++sgn) {
				bool n1 = sgn & 1, n2 = sgn & 2;
				int a = n1 ? A.f_index(r) : A.e_index(r);
				int b = n2 ? A.f_index(s) : A.e_index(s);
				if (a >= b)
					continue; // fill upper triangle, mirror below
				Coords ca = signed_coords(rs, r, n1), cb = signed_coords(rs, s, n2);
				Coords sum = ca;
				for (int i = 0; i < rs.rank; ++i)
					sum[i] += cb[i];
				bool zero_sum = true;
				for (int x : sum)
					if (x != 0)
						zero_sum = false;
				if (zero_sum) {
					// [e_alpha, e_{-alpha}] = alpha^vee; here n1 = 0, n2 = 1, r == s
					std::vector<std::pair<int, Rational>> v;
					for (int i = 0; i < rs.rank; ++i)
						if (rs.pos[r][i] != 0)
							v.emplace_back(A.h_index(i), Rational(rs.pos[r][i]));
					set(a, b, v);
					continue;
				}
				Coords abs = sum;
				bool neg_sum = false;
				if (!rs.is_pos_root(abs)) {
					for (auto &x : abs)
						x = -x;
					neg_sum = true;
					if (!rs.is_pos_root(abs))
						continue;
				}
				int t = neg_sum ? A.f_index(rs.root_index(abs)) : A.e_index(rs.root_index(abs));
				Rational c(n_signed(rs, ca, cb));
				set(a, b, {{t, c}});
			}
		}
	return A;
}

std::vector<std::vector<std::vector<std::pair<int, Rational>>>>
sl_matrix_bracket_table(const RootSystem &rs)
{
	if (rs.type != Type::A)
		throw std::invalid_argument("matrix realization is for type A");
	int n = rs.rank, N = n + 1;
	ChevalleyAlgebra lay;
	lay.rs = std::make_shared<RootSystem>(rs);
	lay.dim = rs.rank + 2 * rs.n_pos();

	// basis b -> matrix (N x N rational entries)
	auto mat_of = [&](int b) {
		std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N, 0));
		if (lay.is_h(b)) {
			M[b][b] = 1;
			M[b + 1][b + 1] = -1;
			return M;
		}
		int r = lay.root_of(b);
		int i = -1, j = -1;
		for (int k = 0; k < n; ++k)
			if (rs.pos[r][k]) {
				if (i < 0)
					i = k;
				j = k;
			}
		if (lay.is_e(b))
			M[i][j + 1] = 1;
		else
			M[j + 1][i] = 1;
		return M;
	};
	std::vector<std::vector<std::vector<Rational>>> mats;
	for (int b = 0; b < lay.dim; ++b)
		mats.push_back(mat_of(b));

	// decompose a traceless matrix back into the basis
	auto decomp = [&](std::vector<std::vector<Rational>> M) {
		std::vector<std::pair<int, Rational>> out;
		for (int r = 0; r < rs.n_pos(); ++r) {
			int i = -1, j = -1;
			for (int k = 0; k < n; ++k)
				if (rs.pos[r][k]) {
					if (i < 0)
						i = k;
					j = k;
				}
			if (M[i][j + 1] != 0)
				out.emplace_back(lay.e_index(r), M[i][j + 1]);
			if (M[j + 1][i] != 0)
				out.emplace_back(lay.f_index(r), M[j + 1][i]);
		}
		// diagonal: with D = sum c_k h_k we get c_k = M[0][0] + ... + M[k][k]
		Rational prefix = 0;
		for (int k = 0; k < n; ++k) {
			prefix += M[k][k];
			if (prefix != 0)
				out.emplace_back(lay.h_index(k), prefix);
		}
		std::sort(out.begin(), out.end());
		return out;
	};

	std::vector<std::vector<std::vector<std::pair<int, Rational>>>> tab(
	    lay.dim, std::vector<std::vector<std::pair<int, Rational>>>(lay.dim));
	for (int a = 0; a < lay.dim; ++a)
		for (int b = 0; b < lay.dim; ++b) {
			std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N, 0));
			for (int x = 0; x < N; ++x)
				for (int y = 0; y < N; ++y) {
					Rational v = 0;
					for (int k = 0; k < N; ++k)
						v += mats[a][x][k] * mats[b][k][y] - mats[b][x][k] * mats[a][k][y];
					M[x][y] = v;
				}
			tab[a][b] = decomp(M);
		}
	return tab;
}

} // namespace twistcur
