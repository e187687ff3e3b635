#include <doctest.h>

#include "twistcur/cyclotomic.hpp"

#include <random>

using namespace twistcur;

TEST_CASE("defining relations")
{
	Cyclotomic i = Cyclotomic::zeta(4);
	CHECK(i * i == Cyclotomic(-1));
	Cyclotomic w = Cyclotomic::zeta(3);
	CHECK(w + w * w == Cyclotomic(-1));
	CHECK(w * w * w == Cyclotomic(1));
	CHECK(Cyclotomic::zeta(2) == Cyclotomic(-1));
	CHECK(Cyclotomic(2).inverse() == Cyclotomic(Rational(1, 2)));
}

TEST_CASE("canonical form collapses to rationals")
{
	Cyclotomic i = Cyclotomic::zeta(4);
	Cyclotomic x = i * i; // -1, must compare equal to the rational -1
	CHECK(x.is_rational());
	CHECK(x == Cyclotomic(-1));
	CHECK((i + (-i)).is_zero());
	CHECK((i + (-i)).order() == 1);
}

TEST_CASE("incompatible orders and zero inversion fail")
{
	Cyclotomic i = Cyclotomic::zeta(4), w = Cyclotomic::zeta(3);
	CHECK_THROWS(i + w);
	CHECK_THROWS(i * w);
	CHECK_THROWS(Cyclotomic(0).inverse());
	// rationals coerce into either field
	CHECK(Cyclotomic(2) * w == w + w);
	CHECK(Cyclotomic(2) * i == i + i);
}

static Cyclotomic random_cyc(std::mt19937_64 &rng, int order)
{
	std::uniform_int_distribution<int> d(-6, 6);
	std::uniform_int_distribution<int> den(1, 4);
	return Cyclotomic(order, Rational(d(rng), den(rng)), Rational(d(rng), den(rng)));
}

TEST_CASE("field axioms on random triples")
{
	std::mt19937_64 rng(12345);
	for (int order : {3, 4})
		for (int it = 0; it < 200; ++it) {
			Cyclotomic a = random_cyc(rng, order), b = random_cyc(rng, order),
			           c = random_cyc(rng, order);
			CHECK((a * b) * c == a * (b * c));
			CHECK((a + b) * c == a * c + b * c);
			CHECK(a + b == b + a);
			if (!a.is_zero())
				CHECK(a * a.inverse() == Cyclotomic(1));
		}
}

TEST_CASE("powers")
{
	Cyclotomic i = Cyclotomic::zeta(4);
	CHECK(i.pow(4) == Cyclotomic(1));
	CHECK(i.pow(-1) == -i);
	CHECK(Cyclotomic::zeta(3).pow(-1) == Cyclotomic::zeta(3) * Cyclotomic::zeta(3));
}
