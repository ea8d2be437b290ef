#include "lievf/linalg.hpp"

#include <sstream>

namespace lievf {

std::string to_string(const QMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << to_string(m(i, j));
    }
  }
  os << ']';
  return os.str();
}

SparseRow sparse_axpy(const SparseRow& a, const Rational& c, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, c * ib->second);
      ++ib;
    } else {
      Rational v = ia->second + c * ib->second;
      if (v != 0) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

SparseRow SparseEchelon::reduce(SparseRow row) const {
  std::size_t start = 0;
  while (start < row.size()) {
    auto it = rows_.find(row[start].first);
    if (it == rows_.end()) {
      ++start;
      continue;
    }
    Rational c = -row[start].second;
    row = sparse_axpy(row, c, it->second);
    // entries before `start` are untouched because the pivot row starts at row[start].first
  }
  return row;
}

bool SparseEchelon::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  Rational inv = 1 / row.front().second;
  for (auto& e : row) e.second *= inv;
  int lead = row.front().first;
  rows_.emplace(lead, std::move(row));
  return true;
}

bool SparseEchelon::contains(SparseRow row) const { return reduce(std::move(row)).empty(); }

std::vector<std::vector<Rational>> SparseEchelon::kernel() const {
  // Fully reduce: process pivots from the right so each stored row loses entries in later pivot columns.
  std::map<int, SparseRow> full = rows_;
  for (auto it = full.rbegin(); it != full.rend(); ++it) {
    SparseRow& r = it->second;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 1; k < r.size(); ++k) {
        auto p = full.find(r[k].first);
        if (p != full.end() && p->first != it->first) {
          r = sparse_axpy(r, -r[k].second, p->second);
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < cols_; ++f) {
    if (full.count(f)) continue;
    std::vector<Rational> v(static_cast<std::size_t>(cols_), Rational(0));
    v[static_cast<std::size_t>(f)] = 1;
    for (const auto& [lead, r] : full)
      for (const auto& [c, val] : r)
        if (c == f) v[static_cast<std::size_t>(lead)] = -val;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace lievf
