#include "twistcur/rootsystem.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace twistcur {

std::string type_name(Type t)
{
	switch (t) {
	case Type::A: return "A";
	case Type::D: return "D";
	case Type::E6: return "E";
	}
	return "?";
}

int RootSystem::root_index(const Coords &c) const
{
	auto it = index.find(c);
	if (it == index.end())
		throw std::invalid_argument("not a positive root");
	return it->second;
}

int RootSystem::height(int r) const
{
	return std::accumulate(pos[r].begin(), pos[r].end(), 0);
}

int RootSystem::form(const Coords &a, const Coords &b) const
{
	int s = 0;
	for (int i = 0; i < rank; ++i) {
		if (a[i] == 0)
			continue;
		for (int j = 0; j < rank; ++j)
			if (b[j] != 0)
				s += a[i] * cartan[i][j] * b[j];
	}
	return s;
}

long RootSystem::pair_weight_coroot(const Weight &w, const Coords &coroot)
{
	long s = 0;
	for (size_t j = 0; j < w.size() && j < coroot.size(); ++j)
		s += (long)w[j] * coroot[j];
	return s;
}

static std::vector<std::vector<int>> cartan_matrix(Type t, int rank)
{
	std::vector<std::pair<int, int>> edges;
	if (t == Type::A) {
		if (rank < 1)
			throw std::invalid_argument("type A needs rank >= 1");
		for (int i = 0; i + 1 < rank; ++i)
			edges.emplace_back(i, i + 1);
	} else if (t == Type::D) {
		if (rank < 4)
			throw std::invalid_argument("type D needs rank >= 4");
		for (int i = 0; i + 2 < rank; ++i)
			edges.emplace_back(i, i + 1);
		edges.emplace_back(rank - 3, rank - 1);
	} else {
		if (rank != 6)
			throw std::invalid_argument("type E supports rank 6 only");
		// Bourbaki: chain 1-3-4-5-6, vertex 2 attached to 4
		edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
	}
	std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
	for (int i = 0; i < rank; ++i)
		c[i][i] = 2;
	for (auto [a, b] : edges)
		c[a][b] = c[b][a] = -1;
	return c;
}

RootSystem build_root_system(Type t, int rank)
{
	RootSystem rs;
	rs.type = t;
	rs.rank = rank;
	rs.cartan = cartan_matrix(t, rank);

	std::set<Coords> seen;
	std::vector<Coords> frontier;
	for (int i = 0; i < rank; ++i) {
		Coords a(rank, 0);
		a[i] = 1;
		seen.insert(a);
		frontier.push_back(a);
	}
	// simply-laced: alpha + alpha_i is a root iff (alpha, alpha_i) = -1
	while (!frontier.empty()) {
		std::vector<Coords> next;
		for (const auto &a : frontier) {
			for (int i = 0; i < rank; ++i) {
				int f = 0;
				for (int j = 0; j < rank; ++j)
					f += a[j] * rs.cartan[j][i];
				if (f != -1)
					continue;
				Coords b = a;
				b[i] += 1;
				if (seen.insert(b).second)
					next.push_back(b);
			}
		}
		frontier.swap(next);
	}
	rs.pos.assign(seen.begin(), seen.end());
	std::sort(rs.pos.begin(), rs.pos.end(), [](const Coords &x, const Coords &y) {
		int hx = std::accumulate(x.begin(), x.end(), 0);
		int hy = std::accumulate(y.begin(), y.end(), 0);
		if (hx != hy)
			return hx < hy;
		return x < y;
	});
	for (int r = 0; r < (int)rs.pos.size(); ++r)
		rs.index[rs.pos[r]] = r;

	int expected = t == Type::A   ? rank * (rank + 1) / 2
	               : t == Type::D ? rank * (rank - 1)
	                              : 36;
	if (rs.n_pos() != expected)
		throw std::logic_error("positive root count mismatch");
	return rs;
}

std::string dump_root_system(const RootSystem &rs)
{
	std::string s;
	for (const auto &r : rs.pos) {
		for (int i = 0; i < rs.rank; ++i) {
			if (i)
				s += " ";
			s += std::to_string(r[i]);
		}
		s += "\n";
	}
	return s;
}

bool is_dominant(const std::vector<int> &coords)
{
	return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

} // namespace twistcur
