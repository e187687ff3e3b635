#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace twistcur {

using Rational = mpq_class;

// Element of Q(zeta_m) for m in {1, 3, 4} on the power basis {1, zeta}.
// Order 2 is accepted on input and folded into the rationals (zeta_2 = -1);
// a value whose zeta-coefficient vanishes is canonicalized to order 1, so
// structural equality is field equality.
class Cyclotomic
{
  public:
	Cyclotomic() : order_(1), a_(0), b_(0) {}
	Cyclotomic(const Rational &a) : order_(1), a_(a), b_(0) {}
	Cyclotomic(long n) : order_(1), a_(n), b_(0) {}
	Cyclotomic(int n) : order_(1), a_(n), b_(0) {}

	// a + b*zeta_m
	Cyclotomic(int m, const Rational &a, const Rational &b);

	static Cyclotomic zeta(int m);
	static Cyclotomic imag() { return zeta(4); }

	int order() const { return order_; }
	bool is_zero() const { return order_ == 1 && a_ == 0; }
	bool is_rational() const { return order_ == 1; }
	bool is_one() const { return order_ == 1 && a_ == 1; }

	// requires is_rational()
	const Rational &rat() const;
	const Rational &c0() const { return a_; }
	const Rational &c1() const { return b_; }

	Cyclotomic operator-() const;
	Cyclotomic operator+(const Cyclotomic &o) const;
	Cyclotomic operator-(const Cyclotomic &o) const;
	Cyclotomic operator*(const Cyclotomic &o) const;
	Cyclotomic &operator+=(const Cyclotomic &o) { return *this = *this + o; }
	Cyclotomic &operator-=(const Cyclotomic &o) { return *this = *this - o; }
	Cyclotomic &operator*=(const Cyclotomic &o) { return *this = *this * o; }

	// fails on zero
	Cyclotomic inverse() const;
	Cyclotomic operator/(const Cyclotomic &o) const { return *this * o.inverse(); }

	// integer power, negative exponents allowed for nonzero values
	Cyclotomic pow(long e) const;

	bool operator==(const Cyclotomic &o) const
	{
		return order_ == o.order_ && a_ == o.a_ && b_ == o.b_;
	}
	bool operator!=(const Cyclotomic &o) const { return !(*this == o); }

	// total order for use as map key (order, then coefficients)
	bool operator<(const Cyclotomic &o) const;

	// "3", "-1/2", "(1+2*z4)", "(0-1/3*z3)"
	std::string str() const;

  private:
	void canonicalize();
	// lift both operands into a common field; throws on {3,4} clash
	static int common_order(const Cyclotomic &x, const Cyclotomic &y);

	int order_;      // 1, 3 or 4
	Rational a_, b_; // b_ == 0 whenever order_ == 1
};

Cyclotomic operator*(const Rational &r, const Cyclotomic &c);

std::string rational_str(const Rational &r);

} // namespace twistcur
