#pragma once

#include "twistcur/cyclotomic.hpp"

#include <map>
#include <utility>
#include <vector>

namespace twistcur {

// Sparse vector over Q(zeta_m): ascending indices, no stored zeros.
struct SparseVector
{
	int dim = 0;
	std::vector<std::pair<int, Cyclotomic>> ent;

	SparseVector() = default;
	explicit SparseVector(int d) : dim(d) {}

	static SparseVector unit(int dim, int i, const Cyclotomic &c = Cyclotomic(1));

	bool is_zero() const { return ent.empty(); }
	int nnz() const { return (int)ent.size(); }
	int lead_index() const { return ent.front().first; }
	const Cyclotomic &lead_coeff() const { return ent.front().second; }
	Cyclotomic get(int i) const;
	void push(int i, const Cyclotomic &c); // append, index must exceed previous

	SparseVector scaled(const Cyclotomic &c) const;
	SparseVector &operator+=(const SparseVector &o);
	SparseVector operator+(const SparseVector &o) const;
	SparseVector operator-(const SparseVector &o) const;

	// *this += c * x
	void axpy(const Cyclotomic &c, const SparseVector &x);

	bool operator==(const SparseVector &o) const { return dim == o.dim && ent == o.ent; }

	std::string str() const;
};

struct ExactMatrix
{
	int cols = 0;
	std::vector<SparseVector> rows;

	ExactMatrix() = default;
	explicit ExactMatrix(int c) : cols(c) {}
	void add_row(SparseVector v);
	int nrows() const { return (int)rows.size(); }
	ExactMatrix transposed() const;
};

struct RrefResult
{
	int rank = 0;
	ExactMatrix basis; // reduced row-echelon rows, lead coefficient 1
	std::vector<int> pivot_columns;
};

// Reduced row-echelon form, deterministic pivoting: lowest column index
// first, ties by lowest row index.
RrefResult rref(const ExactMatrix &m);

// Incremental row space in echelon (not back-substituted) form. Inserted
// rows are reduced against existing rows only, so each stored row lies in
// the span of the vectors inserted up to that point; the integer tag of a
// row records the insertion phase (filtration level) it arrived in.
class RowSpace
{
  public:
	explicit RowSpace(int cols) : cols_(cols) {}

	int cols() const { return cols_; }
	int dim() const { return (int)rows_.size(); }
	const SparseVector &row(int i) const { return rows_[i]; }
	int tag(int i) const { return tags_[i]; }

	SparseVector reduce(SparseVector v) const;

	// returns new row index, or -1 if v reduced to zero
	int insert(SparseVector v, int tag = 0);

	bool contains(const SparseVector &v) const { return reduce(v).is_zero(); }

	// v = sum c_i * row_i; false if v is outside the span
	bool coords(SparseVector v, std::vector<std::pair<int, Cyclotomic>> &out) const;

  private:
	int cols_;
	std::vector<SparseVector> rows_; // lead coefficient normalized to 1
	std::vector<int> tags_;
	std::map<int, int> by_pivot_;
};

} // namespace twistcur
