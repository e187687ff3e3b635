#include <doctest.h>

#include "twistcur/twisted.hpp"

#include <random>

using namespace twistcur;

namespace {

TwistedAlgebra make_tw(Type t, int rank)
{
	auto rs = build_root_system(t, rank);
	auto alg = std::make_shared<ChevalleyAlgebra>(build_chevalley(rs));
	auto fd = std::make_shared<FoldingData>(build_folding(rs));
	return TwistedAlgebra(alg, fd);
}

} // namespace

TEST_CASE("degree-0 dimensions equal the folded algebra dimensions")
{
	// sl_3 -> C_1 (dim 3), sl_4 -> C_2 (dim 10), sl_5 -> C_2 (dim 10)
	CHECK((int)make_tw(Type::A, 2).basis(0).size() == 3);
	CHECK((int)make_tw(Type::A, 3).basis(0).size() == 10);
	CHECK((int)make_tw(Type::A, 4).basis(0).size() == 10);
	// D_4 -> G_2 (dim 14), E_6 -> F_4 (dim 52), D_5 -> B_4 (dim 36)
	CHECK((int)make_tw(Type::D, 4).basis(0).size() == 14);
	CHECK((int)make_tw(Type::E6, 6).basis(0).size() == 52);
	CHECK((int)make_tw(Type::D, 5).basis(0).size() == 36);
}

TEST_CASE("per-degree dimensions match sigma eigenspaces")
{
	for (auto tw : {make_tw(Type::A, 2), make_tw(Type::A, 3), make_tw(Type::A, 4),
	                make_tw(Type::D, 4)}) {
		int total = 0;
		for (int d = 0; d <= 6; ++d) {
			CHECK((int)tw.basis(d).size() == tw.eigenspace_dim(d));
			total += (int)tw.basis(d).size();
		}
		CHECK(total > 0);
	}
}

TEST_CASE("A_2 degree-1 basis contains e_{a_1} t + e_{a_2} t and the f-side twin")
{
	TwistedAlgebra tw = make_tw(Type::A, 2);
	const ChevalleyAlgebra &alg = tw.chevalley();
	CurrentElement ep(Alg::TW), em(Alg::TW);
	ep.add(alg.e_index(0), 1, 1);
	ep.add(alg.e_index(1), 1, 1);
	em.add(alg.f_index(0), 1, 1);
	em.add(alg.f_index(1), 1, -1);
	auto b1 = tw.basis(1);
	CHECK(std::count(b1.begin(), b1.end(), ep) == 1);
	CHECK(std::count(b1.begin(), b1.end(), em) == 1);
	CHECK((int)b1.size() == 2);
	CHECK(tw.sigma_fixed(ep));
	// the opposite sign combination is not sigma-fixed
	CurrentElement bad(Alg::TW);
	bad.add(alg.e_index(0), 1, 1);
	bad.add(alg.e_index(1), 1, -1);
	CHECK_FALSE(tw.sigma_fixed(bad));
}

TEST_CASE("A_2 degree-0 component is spanned as C_1")
{
	TwistedAlgebra tw = make_tw(Type::A, 2);
	CHECK((int)tw.basis(0).size() == 3);
	for (const auto &x : tw.basis(0))
		CHECK(tw.sigma_fixed(x));
}

TEST_CASE("brackets of twisted basis elements stay in the twisted span")
{
	for (auto tw : {make_tw(Type::A, 2), make_tw(Type::A, 3)}) {
		const ChevalleyAlgebra &alg = tw.chevalley();
		for (int d1 = 0; d1 <= 3; ++d1)
			for (int d2 = d1; d2 <= 3; ++d2)
				for (const auto &x : tw.basis(d1))
					for (const auto &y : tw.basis(d2)) {
						CurrentElement br = bracket_current(alg, x, y);
						std::vector<std::pair<int, Cyclotomic>> co;
						REQUIRE(tw.coords_in_basis(br, co));
					}
	}
}

TEST_CASE("hyperspecial families are tau-fixed in the Laurent algebra")
{
	for (int rank : {2, 4}) {
		TwistedAlgebra tw = make_tw(Type::A, rank);
		for (int k = 0; k <= 3; ++k)
			for (const auto &x : tw.hyperspecial_basis(k))
				CHECK(tw.apply_tau_hyp(x) == x);
	}
}

TEST_CASE("eta on the A_2 family-5 element: proof identity (5)")
{
	TwistedAlgebra tw = make_tw(Type::A, 2);
	const ChevalleyAlgebra &alg = tw.chevalley();
	for (int k = 0; k <= 4; ++k) {
		// h_1 t^k + h_2 (-t)^k  ->  -(h_1 t^{2k} + (-1)^k h_2 t^{2k})
		CurrentElement x(Alg::HYP);
		x.add(alg.h_index(0), k, 1);
		x.add(alg.h_index(1), k, k % 2 == 0 ? 1 : -1);
		CurrentElement expect(Alg::TW);
		expect.add(alg.h_index(0), 2 * k, -1);
		expect.add(alg.h_index(1), 2 * k, k % 2 == 0 ? -1 : 1);
		CHECK(tw.eta(x) == expect);
	}
}

TEST_CASE("eta on family 3: e_{+-a} t^{2k+-1} -> -e_{-+a} t^{4k}")
{
	TwistedAlgebra tw = make_tw(Type::A, 2);
	const ChevalleyAlgebra &alg = tw.chevalley();
	int th = alg.rs->theta(); // a_{1,2} is the fixed root for l = 1
	for (int k = 0; k <= 3; ++k) {
		CurrentElement xp = CurrentElement::monomial(Alg::HYP, alg.e_index(th), 2 * k + 1);
		CHECK(tw.eta(xp) ==
		      CurrentElement::monomial(Alg::TW, alg.f_index(th), 4 * k, Cyclotomic(-1)));
		CurrentElement xm = CurrentElement::monomial(Alg::HYP, alg.f_index(th), 2 * k - 1);
		CHECK(tw.eta(xm) ==
		      CurrentElement::monomial(Alg::TW, alg.e_index(th), 4 * k, Cyclotomic(-1)));
	}
}

TEST_CASE("eta rejects elements outside Cg")
{
	TwistedAlgebra tw = make_tw(Type::A, 2);
	const ChevalleyAlgebra &alg = tw.chevalley();
	CurrentElement bad = CurrentElement::monomial(Alg::HYP, alg.e_index(0), 0);
	CHECK_THROWS(tw.eta(bad));
	CHECK(tw.eta(CurrentElement(Alg::HYP)).is_zero());
}

TEST_CASE("eta maps the hyperspecial basis onto the twisted basis")
{
	for (int rank : {2, 4}) {
		TwistedAlgebra tw = make_tw(Type::A, rank);
		for (int k = 0; k <= 2; ++k)
			for (const auto &x : tw.hyperspecial_basis(k)) {
				CurrentElement y = tw.eta(x);
				REQUIRE_FALSE(y.is_zero());
				REQUIRE(y.homogeneous());
				std::vector<std::pair<int, Cyclotomic>> co;
				REQUIRE(tw.coords_in_basis(y, co));
				// image is exactly +-(one basis element)
				REQUIRE(co.size() == 1);
				Cyclotomic c = co[0].second;
				CHECK((c == Cyclotomic(1) || c == Cyclotomic(-1)));
			}
	}
}

TEST_CASE("eta preserves brackets on seeded random pairs")
{
	TwistedAlgebra tw = make_tw(Type::A, 4);
	std::vector<CurrentElement> pool;
	for (int k = 0; k <= 2; ++k)
		for (const auto &x : tw.hyperspecial_basis(k))
			pool.push_back(x);
	std::mt19937_64 rng(2024);
	std::uniform_int_distribution<size_t> d(0, pool.size() - 1);
	const ChevalleyAlgebra &alg = tw.chevalley();
	for (int it = 0; it < 100; ++it) {
		const CurrentElement &x = pool[d(rng)], &y = pool[d(rng)];
		CurrentElement lhs = tw.eta(bracket_current(alg, x, y));
		CurrentElement rhs = bracket_current(alg, tw.eta(x), tw.eta(y));
		CHECK(lhs == rhs);
	}
}
