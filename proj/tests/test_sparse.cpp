#include <doctest.h>

#include "twistcur/sparse.hpp"

#include <random>

using namespace twistcur;

TEST_CASE("rref basics")
{
	// rows [(1,2),(2,4)] -> rank 1
	ExactMatrix m(2);
	{
		SparseVector v(2);
		v.push(0, 1);
		v.push(1, 2);
		m.add_row(v);
	}
	{
		SparseVector v(2);
		v.push(0, 2);
		v.push(1, 4);
		m.add_row(v);
	}
	auto r = rref(m);
	CHECK(r.rank == 1);
	CHECK(r.pivot_columns == std::vector<int>{0});

	ExactMatrix id(3);
	for (int i = 0; i < 3; ++i)
		id.add_row(SparseVector::unit(3, i));
	auto r3 = rref(id);
	CHECK(r3.rank == 3);
	CHECK(r3.basis.rows == id.rows);
}

TEST_CASE("rank over Q(i): second row is i times the first")
{
	Cyclotomic i = Cyclotomic::zeta(4);
	ExactMatrix m(2);
	{
		SparseVector v(2);
		v.push(0, 1);
		v.push(1, i);
		m.add_row(v);
	}
	{
		SparseVector v(2);
		v.push(0, i);
		v.push(1, Cyclotomic(-1));
		m.add_row(v);
	}
	// direct scalar check: i * (1, i) = (i, -1)
	CHECK(i * i == Cyclotomic(-1));
	CHECK(rref(m).rank == 1);
}

static ExactMatrix random_matrix(std::mt19937_64 &rng, int rows, int cols)
{
	std::uniform_int_distribution<int> d(-3, 3);
	ExactMatrix m(cols);
	for (int r = 0; r < rows; ++r) {
		SparseVector v(cols);
		for (int c = 0; c < cols; ++c) {
			int x = d(rng);
			if (x != 0)
				v.push(c, x);
		}
		m.add_row(v);
	}
	return m;
}

TEST_CASE("rref idempotence and rank of transpose")
{
	std::mt19937_64 rng(99);
	for (int it = 0; it < 40; ++it) {
		ExactMatrix m = random_matrix(rng, 5, 7);
		auto r = rref(m);
		auto r2 = rref(r.basis);
		CHECK(r2.basis.rows == r.basis.rows);
		CHECK(rref(m.transposed()).rank == r.rank);
	}
}

TEST_CASE("row space insert/coords")
{
	RowSpace rs(4);
	SparseVector a(4), b(4);
	a.push(0, 1);
	a.push(2, 2);
	b.push(0, 1);
	b.push(3, 1);
	CHECK(rs.insert(a, 0) == 0);
	CHECK(rs.insert(b, 1) == 1);
	CHECK(rs.insert(a + b.scaled(Cyclotomic(3))) == -1); // dependent
	std::vector<std::pair<int, Cyclotomic>> co;
	CHECK(rs.coords(a + b.scaled(Cyclotomic(3)), co));
	SparseVector rec(4);
	for (auto &[i, c] : co)
		rec.axpy(c, rs.row(i));
	CHECK(rec == a + b.scaled(Cyclotomic(3)));
	SparseVector out(4);
	out.push(1, 1);
	CHECK_FALSE(rs.contains(out));
}
