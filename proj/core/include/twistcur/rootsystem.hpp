#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace twistcur {

enum class Type { A, D, E6 };

std::string type_name(Type t);

using Coords = std::vector<int>; // coordinates on simple roots / coroots
using Weight = std::vector<int>; // coordinates on fundamental weights
using Coweight = std::vector<int>;

// Simply-laced root system with Bourbaki vertex order, normalized so that
// (alpha, alpha) = 2 for every root.
struct RootSystem
{
	Type type;
	int rank;
	std::vector<std::vector<int>> cartan;
	std::vector<Coords> pos; // positive roots, sorted by height then lex
	std::map<Coords, int> index;

	int n_pos() const { return (int)pos.size(); }
	bool is_pos_root(const Coords &c) const { return index.count(c) > 0; }
	int root_index(const Coords &c) const;
	int height(int r) const;

	// normalized symmetric form (alpha_i, alpha_j) = cartan[i][j]
	int form(const Coords &a, const Coords &b) const;

	// <weight, coroot>: fundamental-weight coords against simple-coroot coords
	static long pair_weight_coroot(const Weight &w, const Coords &coroot);

	// index of the highest root
	int theta() const { return n_pos() - 1; }
};

RootSystem build_root_system(Type t, int rank);

// One root per line in simple-root coordinates, for golden tests.
std::string dump_root_system(const RootSystem &rs);

bool is_dominant(const std::vector<int> &coords);

} // namespace twistcur
