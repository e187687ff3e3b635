#include "twistcur/current.hpp"
#include "twistcur/automorphism.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace twistcur {

std::string alg_name(Alg a)
{
	switch (a) {
	case Alg::GT: return "g[t]";
	case Alg::TW: return "g[t]^sigma";
	case Alg::HYP: return "Cg";
	}
	return "?";
}

CurrentElement CurrentElement::monomial(Alg tag, int basis, int exp, const Cyclotomic &c)
{
	CurrentElement x(tag);
	x.add(basis, exp, c);
	return x;
}

void CurrentElement::add(int basis, int exp, const Cyclotomic &c)
{
	if (exp < (tag == Alg::HYP ? -1 : 0))
		throw std::invalid_argument("t-exponent out of range for algebra tag");
	auto key = std::make_pair(basis, exp);
	auto it = terms.find(key);
	if (it == terms.end()) {
		if (!c.is_zero())
			terms.emplace(key, c);
		return;
	}
	it->second += c;
	if (it->second.is_zero())
		terms.erase(it);
}

CurrentElement &CurrentElement::operator+=(const CurrentElement &o)
{
	if (tag != o.tag)
		throw std::invalid_argument("algebra tag mismatch");
	for (const auto &[k, c] : o.terms)
		add(k.first, k.second, c);
	return *this;
}

CurrentElement CurrentElement::operator+(const CurrentElement &o) const
{
	CurrentElement r = *this;
	r += o;
	return r;
}

CurrentElement CurrentElement::operator-(const CurrentElement &o) const
{
	CurrentElement r = *this;
	r += o.scaled(Cyclotomic(-1));
	return r;
}

CurrentElement CurrentElement::scaled(const Cyclotomic &c) const
{
	CurrentElement r(tag);
	if (c.is_zero())
		return r;
	for (const auto &[k, x] : terms)
		r.terms.emplace(k, c * x);
	return r;
}

CurrentElement CurrentElement::retagged(Alg t) const
{
	CurrentElement r = *this;
	r.tag = t;
	if (t != Alg::HYP && !terms.empty() && min_exp() < 0)
		throw std::invalid_argument("negative t-exponent outside Cg");
	return r;
}

bool CurrentElement::homogeneous() const
{
	return terms.empty() || min_exp() == max_exp();
}

int CurrentElement::degree() const
{
	if (terms.empty() || !homogeneous())
		throw std::logic_error("degree of non-homogeneous current");
	return terms.begin()->first.second;
}

int CurrentElement::min_exp() const
{
	int m = INT32_MAX;
	for (const auto &[k, c] : terms)
		m = std::min(m, k.second);
	return m;
}

int CurrentElement::max_exp() const
{
	int m = INT32_MIN;
	for (const auto &[k, c] : terms)
		m = std::max(m, k.second);
	return m;
}

CurrentElement bracket_current(const ChevalleyAlgebra &alg, const CurrentElement &x,
                               const CurrentElement &y)
{
	if (x.tag != y.tag)
		throw std::invalid_argument("bracket across algebra tags");
	CurrentElement out(x.tag);
	for (const auto &[kx, cx] : x.terms)
		for (const auto &[ky, cy] : y.terms) {
			Cyclotomic c = cx * cy;
			for (const auto &[b, coef] : alg.bracket_basis(kx.first, ky.first))
				out.add(b, kx.second + ky.second, Cyclotomic(coef) * c);
		}
	return out;
}

CurrentElement twist_current(const ChevalleyAlgebra &alg, const AlgebraAutomorphism &phi,
                             int zeta_order, const CurrentElement &x)
{
	Cyclotomic z = Cyclotomic::zeta(zeta_order);
	CurrentElement out(x.tag);
	for (const auto &[k, c] : x.terms) {
		SparseVector im = phi.img[k.first].scaled(z.pow(-k.second) * c);
		for (const auto &[b, v] : im.ent)
			out.add(b, k.second, v);
	}
	return out;
}

// ---- text syntax ------------------------------------------------------

namespace {

std::string coeff_str(const Cyclotomic &c)
{
	return c.str();
}

struct Lexer
{
	const std::string &s;
	size_t p = 0;
	explicit Lexer(const std::string &str) : s(str) {}
	void skip()
	{
		while (p < s.size() && std::isspace((unsigned char)s[p]))
			++p;
	}
	bool eat(char c)
	{
		skip();
		if (p < s.size() && s[p] == c) {
			++p;
			return true;
		}
		return false;
	}
	void expect(char c)
	{
		if (!eat(c))
			throw std::invalid_argument("parse error near position " + std::to_string(p));
	}
	bool peek_digit()
	{
		skip();
		return p < s.size() && std::isdigit((unsigned char)s[p]);
	}
	long integer()
	{
		skip();
		size_t q = p;
		if (q < s.size() && (s[q] == '-' || s[q] == '+'))
			++q;
		size_t st = q;
		while (q < s.size() && std::isdigit((unsigned char)s[q]))
			++q;
		if (st == q)
			throw std::invalid_argument("expected integer at " + std::to_string(p));
		long v = std::stol(s.substr(p, q - p));
		p = q;
		return v;
	}
	Rational rational()
	{
		long num = integer();
		if (eat('/')) {
			long den = integer();
			return Rational(num, den);
		}
		return Rational(num);
	}
};

Cyclotomic parse_coeff(Lexer &lx)
{
	lx.skip();
	if (lx.eat('(')) {
		Rational a = lx.rational();
		lx.skip();
		bool minus = false;
		if (lx.eat('-'))
			minus = true;
		else
			lx.expect('+');
		Rational b = lx.rational();
		if (minus)
			b = -b;
		lx.expect('*');
		lx.expect('z');
		long m = lx.integer();
		lx.expect(')');
		return Cyclotomic((int)m, a, b);
	}
	return Cyclotomic(lx.rational());
}

} // namespace

std::string print_current(const ChevalleyAlgebra &alg, const CurrentElement &x)
{
	if (x.is_zero())
		return "0";
	const RootSystem &rs = *alg.rs;
	std::ostringstream os;
	bool first = true;
	for (const auto &[k, c] : x.terms) {
		if (!first)
			os << " + ";
		first = false;
		if (!c.is_one())
			os << coeff_str(c) << "*";
		int b = k.first;
		if (alg.is_h(b)) {
			os << "h[" << b + 1 << "]";
		} else {
			int r = alg.root_of(b);
			os << (alg.is_e(b) ? "e[" : "f[");
			if (rs.type == Type::A) {
				int i = -1, j = -1;
				for (int t = 0; t < rs.rank; ++t)
					if (rs.pos[r][t]) {
						if (i < 0)
							i = t;
						j = t;
					}
				os << i + 1 << "," << j + 1;
			} else {
				for (int t = 0; t < rs.rank; ++t) {
					if (t)
						os << ",";
					os << rs.pos[r][t];
				}
			}
			os << "]";
		}
		os << "*t^" << k.second;
	}
	return os.str();
}

CurrentElement parse_current(const ChevalleyAlgebra &alg, Alg tag, const std::string &s)
{
	const RootSystem &rs = *alg.rs;
	if (rs.type != Type::A)
		throw std::invalid_argument("element syntax is defined for type A");
	CurrentElement out(tag);
	Lexer lx(s);
	lx.skip();
	if (lx.p == s.size() || s.substr(lx.p) == "0")
		return out;
	bool negate = false;
	for (;;) {
		Cyclotomic coeff(1);
		lx.skip();
		if (lx.p < s.size() && (s[lx.p] == '(' || std::isdigit((unsigned char)s[lx.p]) ||
		                        s[lx.p] == '-' || s[lx.p] == '+')) {
			coeff = parse_coeff(lx);
			lx.expect('*');
		}
		if (negate)
			coeff = -coeff;
		lx.skip();
		if (lx.p >= s.size())
			throw std::invalid_argument("dangling term");
		char kind = s[lx.p++];
		lx.expect('[');
		int basis;
		if (kind == 'h') {
			long i = lx.integer();
			basis = alg.h_index((int)i - 1);
		} else {
			long i = lx.integer();
			lx.expect(',');
			long j = lx.integer();
			Coords c(rs.rank, 0);
			for (long t = i - 1; t <= j - 1; ++t)
				c[t] = 1;
			int r = rs.root_index(c);
			basis = (kind == 'e') ? alg.e_index(r) : alg.f_index(r);
			if (kind != 'e' && kind != 'f')
				throw std::invalid_argument("unknown symbol kind");
		}
		lx.expect(']');
		lx.expect('*');
		lx.expect('t');
		lx.expect('^');
		long e = lx.integer();
		out.add(basis, (int)e, coeff);
		lx.skip();
		if (lx.p == s.size())
			break;
		if (lx.eat('+'))
			negate = false;
		else if (lx.eat('-'))
			negate = true;
		else
			throw std::invalid_argument("expected '+' or '-' between terms");
	}
	return out;
}

} // namespace twistcur
