#include "twistcur/cyclotomic.hpp"

namespace twistcur {

Cyclotomic::Cyclotomic(int m, const Rational &a, const Rational &b) : order_(m), a_(a), b_(b)
{
	if (m == 2) {
		// zeta_2 = -1
		order_ = 1;
		a_ = a - b;
		b_ = 0;
		return;
	}
	if (m != 1 && m != 3 && m != 4)
		throw std::invalid_argument("cyclotomic order must be in {1,2,3,4}");
	if (m == 1 && b != 0)
		throw std::invalid_argument("order-1 cyclotomic with zeta coefficient");
	canonicalize();
}

Cyclotomic Cyclotomic::zeta(int m)
{
	switch (m) {
	case 1: return Cyclotomic(1);
	case 2: return Cyclotomic(-1);
	case 3: return Cyclotomic(3, 0, 1);
	case 4: return Cyclotomic(4, 0, 1);
	default: throw std::invalid_argument("cyclotomic order must be in {1,2,3,4}");
	}
}

void Cyclotomic::canonicalize()
{
	if (order_ != 1 && b_ == 0)
		order_ = 1;
}

const Rational &Cyclotomic::rat() const
{
	if (order_ != 1)
		throw std::domain_error("cyclotomic value is not rational");
	return a_;
}

int Cyclotomic::common_order(const Cyclotomic &x, const Cyclotomic &y)
{
	if (x.order_ == y.order_)
		return x.order_;
	if (x.order_ == 1)
		return y.order_;
	if (y.order_ == 1)
		return x.order_;
	throw std::domain_error("incompatible cyclotomic orders (Q(z3) vs Q(z4))");
}

Cyclotomic Cyclotomic::operator-() const
{
	Cyclotomic r = *this;
	r.a_ = -r.a_;
	r.b_ = -r.b_;
	return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic &o) const
{
	int m = common_order(*this, o);
	Cyclotomic r;
	r.order_ = m;
	r.a_ = a_ + o.a_;
	r.b_ = b_ + o.b_;
	r.canonicalize();
	return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic &o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic &o) const
{
	int m = common_order(*this, o);
	Cyclotomic r;
	r.order_ = m;
	if (m == 1) {
		r.a_ = a_ * o.a_;
		return r;
	}
	// (a + b z)(c + d z) with z^2 = -1 (m=4) or z^2 = -1 - z (m=3)
	Rational ac = a_ * o.a_, bd = b_ * o.b_, cross = a_ * o.b_ + b_ * o.a_;
	if (m == 4) {
		r.a_ = ac - bd;
		r.b_ = cross;
	} else {
		r.a_ = ac - bd;
		r.b_ = cross - bd;
	}
	r.canonicalize();
	return r;
}

Cyclotomic Cyclotomic::inverse() const
{
	if (is_zero())
		throw std::domain_error("division by zero in Q(zeta_m)");
	if (order_ == 1)
		return Cyclotomic(Rational(1) / a_);
	// norm over Q: m=4: a^2+b^2; m=3: a^2-ab+b^2
	Rational n = (order_ == 4) ? a_ * a_ + b_ * b_ : a_ * a_ - a_ * b_ + b_ * b_;
	// conjugate: m=4: a - b z; m=3: (a-b) - b z   (zbar = z^2 = -1-z)
	Rational ca = (order_ == 4) ? a_ : a_ - b_;
	return Cyclotomic(order_, ca / n, -b_ / n);
}

Cyclotomic Cyclotomic::pow(long e) const
{
	Cyclotomic base = (e < 0) ? inverse() : *this;
	unsigned long k = (e < 0) ? -(unsigned long)e : (unsigned long)e;
	Cyclotomic r(1);
	while (k) {
		if (k & 1)
			r *= base;
		base *= base;
		k >>= 1;
	}
	return r;
}

bool Cyclotomic::operator<(const Cyclotomic &o) const
{
	if (order_ != o.order_)
		return order_ < o.order_;
	if (a_ != o.a_)
		return a_ < o.a_;
	return b_ < o.b_;
}

std::string rational_str(const Rational &r)
{
	return r.get_str();
}

std::string Cyclotomic::str() const
{
	if (order_ == 1)
		return rational_str(a_);
	std::string s = "(" + rational_str(a_);
	if (b_ >= 0)
		s += "+";
	s += rational_str(b_) + "*z" + std::to_string(order_) + ")";
	return s;
}

Cyclotomic operator*(const Rational &r, const Cyclotomic &c)
{
	return Cyclotomic(r) * c;
}

} // namespace twistcur
