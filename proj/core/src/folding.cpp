#include "twistcur/folding.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace twistcur {

Coords FoldingData::tau_coords(const Coords &c) const
{
	Coords out(c.size(), 0);
	for (size_t i = 0; i < c.size(); ++i)
		out[tau[i]] = c[i];
	return out;
}

int FoldingData::tau_root(int r) const
{
	return rs->root_index(tau_coords(rs->pos[r]));
}

int FoldingData::root_alpha_h(int r) const
{
	if (alpha_h.empty())
		return 0;
	int s = 0;
	for (int i = 0; i < rs->rank; ++i)
		s += rs->pos[r][i] * alpha_h[i];
	return s;
}

Coweight FoldingData::tau_coweight(const Coweight &l) const
{
	Coweight out(l.size(), 0);
	for (size_t i = 0; i < l.size(); ++i)
		out[tau[i]] = l[i];
	return out;
}

int FoldingData::root_of_interval(int i, int j) const
{
	if (rs->type != Type::A || i < 1 || j < i || j > rs->rank)
		throw std::invalid_argument("bad interval root");
	Coords c(rs->rank, 0);
	for (int k = i - 1; k <= j - 1; ++k)
		c[k] = 1;
	return rs->root_index(c);
}

std::pair<int, int> FoldingData::interval_of_root(int r) const
{
	const Coords &c = rs->pos[r];
	int i = -1, j = -1;
	for (int k = 0; k < rs->rank; ++k)
		if (c[k] != 0) {
			if (i < 0)
				i = k;
			j = k;
		}
	return {i + 1, j + 1};
}

std::vector<int> FoldingData::fold_coords(const std::vector<int> &parent) const
{
	std::vector<int> out(folded_rank, 0);
	for (int i = 0; i < folded_rank; ++i)
		for (int j : fiber[i])
			out[i] += parent[j];
	return out;
}

static std::vector<int> vertex_tau(const RootSystem &rs, int m)
{
	int n = rs.rank;
	std::vector<int> t(n);
	if (m == 1) {
		std::iota(t.begin(), t.end(), 0);
		return t;
	}
	if (rs.type == Type::A) {
		for (int i = 0; i < n; ++i)
			t[i] = n - 1 - i;
	} else if (rs.type == Type::D && m == 3) {
		if (n != 4)
			throw std::invalid_argument("triality needs D_4");
		t = {2, 1, 3, 0};
	} else if (rs.type == Type::D) {
		std::iota(t.begin(), t.end(), 0);
		std::swap(t[n - 2], t[n - 1]);
	} else {
		t = {5, 1, 4, 3, 2, 0};
	}
	return t;
}

FoldingData build_folding(const RootSystem &rs)
{
	int m;
	if (rs.type == Type::A)
		m = (rs.rank % 2 == 0) ? 4 : 2;
	else if (rs.type == Type::D)
		m = (rs.rank == 4) ? 3 : 2;
	else
		m = 2;
	return build_folding(rs, m);
}

FoldingData trivial_folding(const RootSystem &rs)
{
	return build_folding(rs, 1);
}

FoldingData build_folding(const RootSystem &rs, int m)
{
	if (rs.type == Type::A && rs.rank == 1 && m != 1)
		throw std::invalid_argument("A_1 admits no nontrivial folding");

	FoldingData fd;
	fd.rs = std::make_shared<RootSystem>(rs);
	fd.m = m;
	fd.tau = vertex_tau(rs, m);
	fd.a2l = (m == 4);
	if (rs.type == Type::A)
		fd.ell = (rs.rank + 1) / 2;

	if (fd.a2l) {
		if (rs.type != Type::A || rs.rank % 2 != 0)
			throw std::invalid_argument("order-4 standard automorphism needs A_{2l}");
		int l = fd.ell;
		fd.alpha_h.assign(rs.rank, 0);
		fd.alpha_h[l - 1] = fd.alpha_h[l] = 1;
		// h = sum min(j+1, 2l-j) alpha^vee_j solves alpha_i(h) = [i in {l, l+1}]
		fd.h_coro.resize(rs.rank);
		for (int j = 0; j < rs.rank; ++j)
			fd.h_coro[j] = std::min(j + 1, 2 * l - j);
		for (int i = 0; i < rs.rank; ++i) {
			int v = 0;
			for (int j = 0; j < rs.rank; ++j)
				v += fd.h_coro[j] * rs.cartan[j][i];
			if (v != fd.alpha_h[i])
				throw std::logic_error("element h of the Cartan mis-solved");
		}
	} else {
		fd.alpha_h.assign(rs.rank, 0);
	}

	// vertex fibers in folded Bourbaki order
	if (rs.type == Type::E6 && m == 2) {
		fd.fiber = {{1}, {3}, {2, 4}, {0, 5}};
		fd.folded_type = "F4";
	} else if (rs.type == Type::D && m == 3) {
		fd.fiber = {{0, 2, 3}, {1}};
		fd.folded_type = "G2";
	} else if (m == 1) {
		for (int i = 0; i < rs.rank; ++i)
			fd.fiber.push_back({i});
		fd.folded_type = type_name(rs.type) + std::to_string(rs.rank);
	} else {
		std::vector<bool> seen(rs.rank, false);
		for (int i = 0; i < rs.rank; ++i) {
			if (seen[i])
				continue;
			std::vector<int> f = {i};
			seen[i] = true;
			if (fd.tau[i] != i) {
				f.push_back(fd.tau[i]);
				seen[fd.tau[i]] = true;
			}
			fd.fiber.push_back(f);
		}
		if (rs.type == Type::A)
			fd.folded_type = "C" + std::to_string((int)fd.fiber.size());
		else
			fd.folded_type = "B" + std::to_string((int)fd.fiber.size());
	}
	fd.folded_rank = (int)fd.fiber.size();
	fd.eta.assign(rs.rank, -1);
	for (int i = 0; i < fd.folded_rank; ++i)
		for (int j : fd.fiber[i])
			fd.eta[j] = i;
	for (int i = 0; i < fd.folded_rank; ++i)
		fd.mi.push_back(m / (int)fd.fiber[i].size());

	// per-root orbit data
	fd.root_info.resize(rs.n_pos());
	for (int r = 0; r < rs.n_pos(); ++r) {
		auto &info = fd.root_info[r];
		int cur = r;
		do {
			info.orbit.push_back(cur);
			cur = fd.tau_root(cur);
		} while (cur != r);
		info.fixed = info.orbit.size() == 1;
		if (fd.a2l && !info.fixed) {
			Coords sum = rs.pos[r];
			const Coords &other = rs.pos[info.orbit[1]];
			for (int i = 0; i < rs.rank; ++i)
				sum[i] += other[i];
			info.a2l_mixed = rs.is_pos_root(sum);
		}
		info.long_restriction = (m > 1) && info.fixed && !info.a2l_mixed;
		if (!info.a2l_mixed) {
			std::vector<int> seen_set;
			info.rest_coroot.assign(rs.rank, 0);
			for (int o : info.orbit) {
				bool dup = std::find(seen_set.begin(), seen_set.end(), o) != seen_set.end();
				if (dup)
					continue;
				seen_set.push_back(o);
				for (int i = 0; i < rs.rank; ++i)
					info.rest_coroot[i] += rs.pos[o][i];
			}
			info.rest_coroot_folded.assign(fd.folded_rank, 0);
			for (int i = 0; i < fd.folded_rank; ++i) {
				int v = info.rest_coroot[fd.fiber[i][0]];
				for (int j : fd.fiber[i])
					if (info.rest_coroot[j] != v)
						throw std::logic_error("orbit coroot not tau-invariant");
				info.rest_coroot_folded[i] = v;
			}
		}
	}
	return fd;
}

Weight iota(const FoldingData &fd, const Coweight &lambda, bool twisted)
{
	if ((int)lambda.size() != fd.rs->rank)
		throw std::invalid_argument("coweight rank mismatch");
	if (!twisted)
		return lambda; // omega-check_j maps to omega_j under the normalized form
	return fd.fold_coords(lambda);
}

std::vector<int> project_coweight(const FoldingData &fd, const Coweight &lambda)
{
	return fd.fold_coords(lambda);
}

} // namespace twistcur
