#include "twistcur/automorphism.hpp"

#include <stdexcept>

namespace twistcur {

SparseVector AlgebraAutomorphism::apply(const SparseVector &v) const
{
	SparseVector out(alg->dim);
	for (const auto &[b, c] : v.ent)
		out.axpy(c, img[b]);
	return out;
}

AlgebraAutomorphism AlgebraAutomorphism::compose(const AlgebraAutomorphism &inner) const
{
	AlgebraAutomorphism r;
	r.alg = alg;
	for (int b = 0; b < alg->dim; ++b)
		r.img.push_back(apply(inner.img[b]));
	return r;
}

bool AlgebraAutomorphism::is_identity() const
{
	for (int b = 0; b < alg->dim; ++b)
		if (!(img[b] == SparseVector::unit(alg->dim, b)))
			return false;
	return true;
}

int AlgebraAutomorphism::order(int cap) const
{
	AlgebraAutomorphism p = *this;
	for (int k = 1; k <= cap; ++k) {
		if (p.is_identity())
			return k;
		p = compose(p);
	}
	return -1;
}

bool AlgebraAutomorphism::preserves_bracket() const
{
	for (int a = 0; a < alg->dim; ++a)
		for (int b = a + 1; b < alg->dim; ++b) {
			SparseVector lhs = apply(alg->bracket(SparseVector::unit(alg->dim, a),
			                                      SparseVector::unit(alg->dim, b)));
			SparseVector rhs = alg->bracket(img[a], img[b]);
			if (!(lhs == rhs))
				return false;
		}
	return true;
}

AlgebraAutomorphism build_tau(std::shared_ptr<const ChevalleyAlgebra> alg,
                              const FoldingData &fd)
{
	const RootSystem &rs = *alg->rs;
	AlgebraAutomorphism t;
	t.alg = alg;
	t.img.assign(alg->dim, SparseVector(alg->dim));

	for (int i = 0; i < rs.rank; ++i)
		t.img[alg->h_index(i)] = SparseVector::unit(alg->dim, alg->h_index(fd.tau[i]));
	for (int r = 0; r < rs.n_pos(); ++r) {
		if (rs.height(r) != 1)
			continue;
		int i = -1;
		for (int k = 0; k < rs.rank; ++k)
			if (rs.pos[r][k])
				i = k;
		Coords c(rs.rank, 0);
		c[fd.tau[i]] = 1;
		int tr = rs.root_index(c);
		t.img[alg->e_index(r)] = SparseVector::unit(alg->dim, alg->e_index(tr));
		t.img[alg->f_index(r)] = SparseVector::unit(alg->dim, alg->f_index(tr));
	}
	// extend by bracket closure, roots in height order: alpha = beta + alpha_i
	for (int r = 0; r < rs.n_pos(); ++r) {
		if (rs.height(r) == 1)
			continue;
		int simple = -1, rest = -1;
		for (int i = 0; i < rs.rank && simple < 0; ++i) {
			if (rs.pos[r][i] == 0)
				continue;
			Coords c = rs.pos[r];
			c[i] -= 1;
			if (rs.is_pos_root(c)) {
				simple = rs.root_index([&] {
					Coords s(rs.rank, 0);
					s[i] = 1;
					return s;
				}());
				rest = rs.root_index(c);
			}
		}
		if (simple < 0)
			throw std::logic_error("root without simple summand");
		Rational ne = alg->structure_constant(rest, false, simple, false);
		Rational nf = alg->structure_constant(rest, true, simple, true);
		if (ne == 0 || nf == 0)
			throw std::logic_error("vanishing structure constant in extension");
		SparseVector e = alg->bracket(t.img[alg->e_index(rest)], t.img[alg->e_index(simple)]);
		SparseVector f = alg->bracket(t.img[alg->f_index(rest)], t.img[alg->f_index(simple)]);
		t.img[alg->e_index(r)] = e.scaled(Cyclotomic(Rational(1) / ne));
		t.img[alg->f_index(r)] = f.scaled(Cyclotomic(Rational(1) / nf));
	}
	if (!t.preserves_bracket())
		throw std::logic_error("tau extension is not an automorphism");
	return t;
}

AlgebraAutomorphism build_sigma(std::shared_ptr<const ChevalleyAlgebra> alg,
                                const FoldingData &fd)
{
	AlgebraAutomorphism tau = build_tau(alg, fd);
	if (!fd.a2l)
		return tau;
	// sigma = tau after i^h: e_alpha scales by i^{alpha(h)}
	AlgebraAutomorphism s;
	s.alg = alg;
	Cyclotomic i4 = Cyclotomic::zeta(4);
	for (int b = 0; b < alg->dim; ++b) {
		if (alg->is_h(b)) {
			s.img.push_back(tau.img[b]);
			continue;
		}
		int r = alg->root_of(b);
		int w = fd.root_alpha_h(r) * (alg->is_e(b) ? 1 : -1);
		s.img.push_back(tau.img[b].scaled(i4.pow(w)));
	}
	return s;
}

AlgebraAutomorphism build_cartan_involution(std::shared_ptr<const ChevalleyAlgebra> alg)
{
	AlgebraAutomorphism p;
	p.alg = alg;
	p.img.assign(alg->dim, SparseVector(alg->dim));
	for (int i = 0; i < alg->rs->rank; ++i)
		p.img[alg->h_index(i)] =
		    SparseVector::unit(alg->dim, alg->h_index(i), Cyclotomic(-1));
	for (int r = 0; r < alg->rs->n_pos(); ++r) {
		p.img[alg->e_index(r)] =
		    SparseVector::unit(alg->dim, alg->f_index(r), Cyclotomic(-1));
		p.img[alg->f_index(r)] =
		    SparseVector::unit(alg->dim, alg->e_index(r), Cyclotomic(-1));
	}
	if (!p.preserves_bracket())
		throw std::logic_error("Cartan involution table inconsistent");
	return p;
}

} // namespace twistcur
