#pragma once

#include "twistcur/chevalley.hpp"

#include <map>

namespace twistcur {

enum class Alg { GT, TW, HYP }; // g[t], g[t]^sigma, hyperspecial Cg

std::string alg_name(Alg a);

// Finite linear combination of basis-symbol (x) t^s terms. Exponents are
// >= 0 except under the HYP tag, where the enumerated families reach t^{-1}.
struct CurrentElement
{
	Alg tag = Alg::GT;
	std::map<std::pair<int, int>, Cyclotomic> terms; // (basis idx, exponent) -> coeff

	CurrentElement() = default;
	explicit CurrentElement(Alg t) : tag(t) {}
	static CurrentElement monomial(Alg tag, int basis, int exp,
	                               const Cyclotomic &c = Cyclotomic(1));

	bool is_zero() const { return terms.empty(); }
	void add(int basis, int exp, const Cyclotomic &c);
	CurrentElement &operator+=(const CurrentElement &o);
	CurrentElement operator+(const CurrentElement &o) const;
	CurrentElement operator-(const CurrentElement &o) const;
	CurrentElement scaled(const Cyclotomic &c) const;
	CurrentElement retagged(Alg t) const;

	bool homogeneous() const; // single t-exponent
	int degree() const;       // requires homogeneous and nonzero
	int min_exp() const;
	int max_exp() const;

	bool operator==(const CurrentElement &o) const
	{
		return tag == o.tag && terms == o.terms;
	}
};

// [x, y]: bilinear, degree-additive; tags must agree
CurrentElement bracket_current(const ChevalleyAlgebra &alg, const CurrentElement &x,
                               const CurrentElement &y);

// extension of an algebra automorphism to currents: x (x) t^j ->
// zeta^{-j} phi(x) (x) t^j, with zeta of the given order
CurrentElement twist_current(const ChevalleyAlgebra &alg, const AlgebraAutomorphism &phi,
                             int zeta_order, const CurrentElement &x);

// Plain-text syntax (type A): "e[1,2]*t^3", "h[2]*t^0", "-1/2*f[1,1]*t^1",
// "(0+1*z4)*e[2,2]*t^0"; terms joined by " + ".
std::string print_current(const ChevalleyAlgebra &alg, const CurrentElement &x);
CurrentElement parse_current(const ChevalleyAlgebra &alg, Alg tag, const std::string &s);

} // namespace twistcur
