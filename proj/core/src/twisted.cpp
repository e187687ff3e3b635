#include "twistcur/twisted.hpp"

#include <stdexcept>

namespace twistcur {

TwistedAlgebra::TwistedAlgebra(std::shared_ptr<const ChevalleyAlgebra> alg,
                               std::shared_ptr<const FoldingData> fd)
    : alg_(std::move(alg)), fd_(std::move(fd))
{
	if (fd_->m == 1) {
		AlgebraAutomorphism id;
		id.alg = alg_;
		for (int b = 0; b < alg_->dim; ++b)
			id.img.push_back(SparseVector::unit(alg_->dim, b));
		tau_ = sigma_ = id;
	} else {
		tau_ = build_tau(alg_, *fd_);
		sigma_ = build_sigma(alg_, *fd_);
	}
	cartan_inv_ = build_cartan_involution(alg_);
	eig_cache_.assign(fd_->m, -1);

	// Cartan eigenbasis per residue: orbit sums sum_a eps^{-ja} h_{tau^a(i)}
	const RootSystem &rs = *alg_->rs;
	Cyclotomic z = Cyclotomic::zeta(fd_->m);
	cartan_eig_.resize(fd_->m);
	for (int j = 0; j < fd_->m; ++j) {
		RowSpace seen(rs.rank);
		for (int i = 0; i < rs.rank; ++i) {
			SparseVector v(rs.rank);
			int cur = i;
			for (int a = 0; a < fd_->m; ++a) {
				v.axpy(z.pow(-(long)j * a), SparseVector::unit(rs.rank, cur));
				cur = fd_->tau[cur];
			}
			if (v.is_zero())
				continue;
			v = v.scaled(v.lead_coeff().inverse());
			if (seen.insert(v) >= 0)
				cartan_eig_[j].push_back(v);
		}
	}
}

CurrentElement TwistedAlgebra::apply_sigma(const CurrentElement &x) const
{
	return twist_current(*alg_, sigma_, fd_->m, x);
}

CurrentElement TwistedAlgebra::apply_tau_hyp(const CurrentElement &x) const
{
	return twist_current(*alg_, tau_, 2, x);
}

bool TwistedAlgebra::sigma_fixed(const CurrentElement &x) const
{
	return apply_sigma(x) == x;
}

int TwistedAlgebra::eigenspace_dim(int d) const
{
	int j = ((d % fd_->m) + fd_->m) % fd_->m;
	if (eig_cache_[j] >= 0)
		return eig_cache_[j];
	Cyclotomic ev = Cyclotomic::zeta(fd_->m).pow(j);
	ExactMatrix m(alg_->dim);
	for (int b = 0; b < alg_->dim; ++b) {
		SparseVector row = sigma_.img[b];
		row.axpy(-ev, SparseVector::unit(alg_->dim, b));
		if (!row.is_zero())
			m.add_row(std::move(row));
	}
	eig_cache_[j] = alg_->dim - rref(m).rank;
	return eig_cache_[j];
}

const std::vector<SparseVector> &TwistedAlgebra::cartan_eigenbasis(int j) const
{
	return cartan_eig_[((j % fd_->m) + fd_->m) % fd_->m];
}

std::vector<CurrentElement> TwistedAlgebra::cartan_currents(int d) const
{
	std::vector<CurrentElement> out;
	for (const SparseVector &h : cartan_eigenbasis(d % fd_->m)) {
		CurrentElement x(Alg::TW);
		for (const auto &[i, c] : h.ent)
			x.add(alg_->h_index(i), d, c);
		out.push_back(std::move(x));
	}
	return out;
}

std::vector<CurrentElement> TwistedAlgebra::build_basis(int d) const
{
	const RootSystem &rs = *alg_->rs;
	std::vector<CurrentElement> cand;

	if (fd_->m == 1) {
		for (int b = 0; b < alg_->dim; ++b)
			cand.push_back(CurrentElement::monomial(Alg::TW, b, d));
	} else if (fd_->a2l) {
		int l = fd_->ell;
		int k2 = d / 2; // the k of the even families
		if (d % 2 == 0) {
			for (int i = 1; i < l; ++i)
				for (int j = i; j < l; ++j) {
					// family 1: alpha_{i,j}; family 2: alpha_{i,2l-j}
					for (int fam = 0; fam < 2; ++fam) {
						int r = fd_->root_of_interval(i, fam == 0 ? j : 2 * l - j);
						int tr = fd_->tau_root(r);
						int sgn = ((i + j + k2) % 2 == 0 ? 1 : -1) * (fam == 0 ? 1 : -1);
						for (bool neg : {false, true}) {
							CurrentElement x(Alg::TW);
							x.add(neg ? alg_->f_index(r) : alg_->e_index(r), d, 1);
							x.add(neg ? alg_->f_index(tr) : alg_->e_index(tr), d, sgn);
							cand.push_back(std::move(x));
						}
					}
				}
			if (d % 4 == 0)
				for (int i = 1; i <= l; ++i) {
					int r = fd_->root_of_interval(i, 2 * l + 1 - i);
					cand.push_back(CurrentElement::monomial(Alg::TW, alg_->e_index(r), d));
					cand.push_back(CurrentElement::monomial(Alg::TW, alg_->f_index(r), d));
				}
			for (int i = 1; i <= l; ++i) {
				CurrentElement x(Alg::TW);
				x.add(alg_->h_index(i - 1), d, 1);
				x.add(alg_->h_index(2 * l - i), d, k2 % 2 == 0 ? 1 : -1);
				cand.push_back(std::move(x));
			}
		} else {
			int k = (d - 1) / 2;
			for (int i = 1; i <= l; ++i) {
				int r = fd_->root_of_interval(i, l);
				int tr = fd_->tau_root(r);
				int sgn = (i + l + k) % 2 == 0 ? 1 : -1;
				CurrentElement xp(Alg::TW), xm(Alg::TW);
				xp.add(alg_->e_index(r), d, 1);
				xp.add(alg_->e_index(tr), d, sgn);
				xm.add(alg_->f_index(r), d, 1);
				xm.add(alg_->f_index(tr), d, -sgn);
				cand.push_back(std::move(xp));
				cand.push_back(std::move(xm));
			}
		}
	} else {
		// orbit sums sum_i sigma^i(x (x) t^d), one representative per orbit
		std::vector<bool> seen(rs.n_pos(), false);
		for (int r = 0; r < rs.n_pos(); ++r) {
			if (seen[r])
				continue;
			for (int o : fd_->root_info[r].orbit)
				seen[o] = true;
			for (bool neg : {false, true}) {
				CurrentElement x =
				    CurrentElement::monomial(Alg::TW, neg ? alg_->f_index(r) : alg_->e_index(r), d);
				CurrentElement acc(Alg::TW);
				CurrentElement cur = x;
				for (int i = 0; i < fd_->m; ++i) {
					acc += cur;
					cur = apply_sigma(cur);
				}
				if (acc.is_zero())
					continue;
				// normalize on the representative's own coefficient
				Cyclotomic c0 = acc.terms.count({neg ? alg_->f_index(r) : alg_->e_index(r), d})
				                    ? acc.terms.at({neg ? alg_->f_index(r) : alg_->e_index(r), d})
				                    : Cyclotomic(0);
				if (!c0.is_zero())
					acc = acc.scaled(c0.inverse());
				cand.push_back(std::move(acc));
			}
		}
		for (const CurrentElement &h : cartan_currents(d))
			cand.push_back(h);
	}
	return cand;
}

const std::vector<CurrentElement> &TwistedAlgebra::basis(int d) const
{
	if (d < 0)
		throw std::invalid_argument("negative degree");
	while ((int)basis_cache_.size() <= d) {
		int dd = (int)basis_cache_.size();
		std::vector<CurrentElement> cand = build_basis(dd), kept;
		RowSpace space(alg_->dim);
		for (const CurrentElement &x : cand) {
			if (!sigma_fixed(x))
				throw std::logic_error("twisted basis candidate not sigma-fixed");
			SparseVector v(alg_->dim);
			for (const auto &[key, c] : x.terms) {
				if (key.second != dd)
					throw std::logic_error("inhomogeneous basis candidate");
				v.axpy(c, SparseVector::unit(alg_->dim, key.first));
			}
			if (space.insert(v) >= 0)
				kept.push_back(x);
		}
		if ((int)kept.size() != eigenspace_dim(dd))
			throw std::logic_error("twisted basis does not match eigenspace dimension");
		basis_cache_.push_back(std::move(kept));
		basis_space_.push_back(std::move(space));
	}
	return basis_cache_[d];
}

bool TwistedAlgebra::coords_in_basis(const CurrentElement &x,
                                     std::vector<std::pair<int, Cyclotomic>> &out) const
{
	out.clear();
	if (x.is_zero())
		return true;
	if (!x.homogeneous())
		return false;
	int d = x.degree();
	const auto &elts = basis(d);
	// augmented elimination: [element | unit] rows, reduce the target and
	// read the coordinates off the augmentation block
	int n = (int)elts.size();
	RowSpace aug(alg_->dim + n);
	for (int i = 0; i < n; ++i) {
		SparseVector row(alg_->dim + n);
		SparseVector w(alg_->dim);
		for (const auto &[key, c] : elts[i].terms)
			w.axpy(c, SparseVector::unit(alg_->dim, key.first));
		for (const auto &[k, c] : w.ent)
			row.push(k, c);
		row.push(alg_->dim + i, Cyclotomic(1));
		aug.insert(std::move(row));
	}
	SparseVector target(alg_->dim + n);
	{
		SparseVector v(alg_->dim);
		for (const auto &[key, c] : x.terms)
			v.axpy(c, SparseVector::unit(alg_->dim, key.first));
		for (const auto &[k, c] : v.ent)
			target.push(k, c);
	}
	SparseVector red = aug.reduce(target);
	for (const auto &[k, c] : red.ent)
		if (k < alg_->dim)
			return false;
	for (const auto &[k, c] : red.ent)
		out.emplace_back(k - alg_->dim, -c);
	return true;
}

std::vector<CurrentElement> TwistedAlgebra::hyperspecial_basis(int k) const
{
	if (!fd_->a2l)
		throw std::invalid_argument("hyperspecial algebra needs parent A_{2l}");
	if (k < 0)
		throw std::invalid_argument("negative family parameter");
	const int l = fd_->ell;
	std::vector<CurrentElement> out;
	auto add_pair = [&](int r, int exp_p, int exp_m, int sgn_p, int sgn_m) {
		int tr = fd_->tau_root(r);
		CurrentElement xp(Alg::HYP), xm(Alg::HYP);
		xp.add(alg_->e_index(r), exp_p, 1);
		xp.add(alg_->e_index(tr), exp_p, sgn_p);
		xm.add(alg_->f_index(r), exp_m, 1);
		xm.add(alg_->f_index(tr), exp_m, sgn_m);
		out.push_back(std::move(xp));
		out.push_back(std::move(xm));
	};
	int s = (k % 2 == 0) ? 1 : -1; // (-1)^k
	// family 1: alpha_{ij}, i <= j < l, exponent k on both signs
	for (int i = 1; i < l; ++i)
		for (int j = i; j < l; ++j) {
			int sign = ((i + j) % 2 == 0 ? 1 : -1) * s;
			add_pair(fd_->root_of_interval(i, j), k, k, sign, sign);
		}
	// family 2: alpha_{i,2l-j}, exponents k+1 / k-1
	for (int i = 1; i < l; ++i)
		for (int j = i; j < l; ++j) {
			int base = (i + j) % 2 == 0 ? 1 : -1;
			add_pair(fd_->root_of_interval(i, 2 * l - j), k + 1, k - 1, -base * s, -base * s);
		}
	// family 3: alpha_{i,2l+1-i}, exponents 2k+1 / 2k-1
	for (int i = 1; i <= l; ++i) {
		int r = fd_->root_of_interval(i, 2 * l + 1 - i);
		out.push_back(CurrentElement::monomial(Alg::HYP, alg_->e_index(r), 2 * k + 1));
		out.push_back(CurrentElement::monomial(Alg::HYP, alg_->f_index(r), 2 * k - 1));
	}
	// family 4: alpha_{il}, exponents k+1 / k
	for (int i = 1; i <= l; ++i) {
		int base = (l + i) % 2 == 0 ? 1 : -1;
		add_pair(fd_->root_of_interval(i, l), k + 1, k, -base * s, base * s);
	}
	// family 5: h_i (x) t^k + h_{2l+1-i} (x) (-t)^k
	for (int i = 1; i <= l; ++i) {
		CurrentElement x(Alg::HYP);
		x.add(alg_->h_index(i - 1), k, 1);
		x.add(alg_->h_index(2 * l - i), k, s);
		out.push_back(std::move(x));
	}
	return out;
}

CurrentElement TwistedAlgebra::eta(const CurrentElement &x) const
{
	if (!fd_->a2l)
		throw std::invalid_argument("eta needs parent A_{2l}");
	if (x.tag != Alg::HYP)
		throw std::invalid_argument("eta expects a Cg element");
	// per-exponent tau-eigenvector check: tau(v_j) = (-1)^j v_j
	std::map<int, SparseVector> comp;
	for (const auto &[key, c] : x.terms) {
		auto [it, fresh] = comp.try_emplace(key.second, SparseVector(alg_->dim));
		it->second.axpy(c, SparseVector::unit(alg_->dim, key.first));
	}
	for (const auto &[j, v] : comp) {
		SparseVector tv = tau_.apply(v);
		if (!(tv == v.scaled(Cyclotomic(j % 2 == 0 ? 1 : -1))))
			throw std::invalid_argument("element is not in Cg");
	}
	CurrentElement out(Alg::TW);
	for (const auto &[key, c] : x.terms) {
		auto [b, j] = key;
		// eta_c: phi is a signed basis permutation
		const SparseVector &ph = cartan_inv_.img[b];
		int b2 = ph.ent[0].first;
		Cyclotomic sign = ph.ent[0].second;
		// eta_k on the image term: exponent 2j + (ad h eigenvalue)
		int s = 0;
		if (!alg_->is_h(b2))
			s = fd_->root_alpha_h(alg_->root_of(b2)) * (alg_->is_e(b2) ? 1 : -1);
		int e = 2 * j + s;
		if (e < 0)
			throw std::invalid_argument("element is not in Cg (eta image not in g[t])");
		out.add(b2, e, c * sign);
	}
	return out;
}

} // namespace twistcur
