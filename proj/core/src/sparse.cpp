#include "twistcur/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistcur {

SparseVector SparseVector::unit(int dim, int i, const Cyclotomic &c)
{
	SparseVector v(dim);
	if (!c.is_zero())
		v.ent.emplace_back(i, c);
	return v;
}

Cyclotomic SparseVector::get(int i) const
{
	auto it = std::lower_bound(ent.begin(), ent.end(), i,
	                           [](const auto &p, int k) { return p.first < k; });
	if (it != ent.end() && it->first == i)
		return it->second;
	return Cyclotomic(0);
}

void SparseVector::push(int i, const Cyclotomic &c)
{
	if (c.is_zero())
		return;
	if (!ent.empty() && ent.back().first >= i)
		throw std::logic_error("SparseVector::push out of order");
	ent.emplace_back(i, c);
}

SparseVector SparseVector::scaled(const Cyclotomic &c) const
{
	SparseVector r(dim);
	if (c.is_zero())
		return r;
	r.ent.reserve(ent.size());
	for (const auto &[i, x] : ent)
		r.ent.emplace_back(i, c * x);
	return r;
}

void SparseVector::axpy(const Cyclotomic &c, const SparseVector &x)
{
	if (c.is_zero() || x.is_zero())
		return;
	std::vector<std::pair<int, Cyclotomic>> out;
	out.reserve(ent.size() + x.ent.size());
	size_t a = 0, b = 0;
	while (a < ent.size() || b < x.ent.size()) {
		if (b == x.ent.size() || (a < ent.size() && ent[a].first < x.ent[b].first)) {
			out.push_back(ent[a++]);
		} else if (a == ent.size() || x.ent[b].first < ent[a].first) {
			Cyclotomic v = c * x.ent[b].second;
			if (!v.is_zero())
				out.emplace_back(x.ent[b].first, v);
			++b;
		} else {
			Cyclotomic v = ent[a].second + c * x.ent[b].second;
			if (!v.is_zero())
				out.emplace_back(ent[a].first, v);
			++a;
			++b;
		}
	}
	ent.swap(out);
}

SparseVector &SparseVector::operator+=(const SparseVector &o)
{
	axpy(Cyclotomic(1), o);
	return *this;
}

SparseVector SparseVector::operator+(const SparseVector &o) const
{
	SparseVector r = *this;
	r += o;
	return r;
}

SparseVector SparseVector::operator-(const SparseVector &o) const
{
	SparseVector r = *this;
	r.axpy(Cyclotomic(-1), o);
	return r;
}

std::string SparseVector::str() const
{
	std::string s = "[";
	bool first = true;
	for (const auto &[i, c] : ent) {
		if (!first)
			s += ", ";
		s += std::to_string(i) + ":" + c.str();
		first = false;
	}
	return s + "]";
}

void ExactMatrix::add_row(SparseVector v)
{
	if (v.dim != cols)
		throw std::invalid_argument("row dimension mismatch");
	rows.push_back(std::move(v));
}

ExactMatrix ExactMatrix::transposed() const
{
	ExactMatrix t(nrows());
	std::vector<std::vector<std::pair<int, Cyclotomic>>> cols_acc(cols);
	for (int r = 0; r < nrows(); ++r)
		for (const auto &[j, c] : rows[r].ent)
			cols_acc[j].emplace_back(r, c);
	for (int j = 0; j < cols; ++j) {
		SparseVector v(nrows());
		v.ent = std::move(cols_acc[j]);
		t.rows.push_back(std::move(v));
	}
	return t;
}

RrefResult rref(const ExactMatrix &m)
{
	std::vector<SparseVector> work = m.rows;
	RrefResult res;
	res.basis.cols = m.cols;
	std::vector<bool> used(work.size(), false);

	for (int col = 0; col < m.cols; ++col) {
		int pivot = -1;
		for (size_t r = 0; r < work.size(); ++r) {
			if (used[r] || work[r].is_zero())
				continue;
			if (work[r].lead_index() == col) {
				pivot = (int)r;
				break;
			}
		}
		if (pivot < 0)
			continue;
		used[pivot] = true;
		SparseVector prow = work[pivot].scaled(work[pivot].lead_coeff().inverse());
		for (size_t r = 0; r < work.size(); ++r) {
			if ((int)r == pivot || work[r].is_zero())
				continue;
			Cyclotomic c = work[r].get(col);
			if (!c.is_zero())
				work[r].axpy(-c, prow);
		}
		// back-substitute into already emitted rows
		for (auto &b : res.basis.rows) {
			Cyclotomic c = b.get(col);
			if (!c.is_zero())
				b.axpy(-c, prow);
		}
		res.basis.rows.push_back(std::move(prow));
		res.pivot_columns.push_back(col);
	}
	res.rank = (int)res.basis.rows.size();
	return res;
}

SparseVector RowSpace::reduce(SparseVector v) const
{
	while (!v.is_zero()) {
		auto it = by_pivot_.find(v.lead_index());
		if (it == by_pivot_.end())
			break;
		v.axpy(-v.lead_coeff(), rows_[it->second]);
	}
	return v;
}

int RowSpace::insert(SparseVector v, int tag)
{
	v = reduce(std::move(v));
	if (v.is_zero())
		return -1;
	v = v.scaled(v.lead_coeff().inverse());
	int idx = (int)rows_.size();
	by_pivot_[v.lead_index()] = idx;
	rows_.push_back(std::move(v));
	tags_.push_back(tag);
	return idx;
}

bool RowSpace::coords(SparseVector v, std::vector<std::pair<int, Cyclotomic>> &out) const
{
	out.clear();
	while (!v.is_zero()) {
		auto it = by_pivot_.find(v.lead_index());
		if (it == by_pivot_.end())
			return false;
		Cyclotomic c = v.lead_coeff();
		out.emplace_back(it->second, c);
		v.axpy(-c, rows_[it->second]);
	}
	return true;
}

} // namespace twistcur
