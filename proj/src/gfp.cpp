#include "nbraid/gfp.hpp"

#include <algorithm>
#include <bit>

#include "nbraid/error.hpp"

namespace nbraid {

int inv_mod_p(int a, int p) {
  a = mod_p(a, p);
  if (a == 0) fail(Errc::internal, "inverse of zero mod p");
  int r = 1;
  for (int e = p - 2; e > 0; e >>= 1) { // a^(p-2), p prime
    if (e & 1) r = static_cast<int>((long{r} * a) % p);
    a = static_cast<int>((long{a} * a) % p);
  }
  return r;
}

void FpMatrix::add_row(std::vector<int> r) {
  if (cols == 0) cols = r.size();
  if (r.size() != cols) fail(Errc::internal, "row length mismatch");
  for (auto& v : r) v = mod_p(v, p);
  rows.push_back(std::move(r));
}

std::vector<std::size_t> rref(FpMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows.size() && m.rows[sel][col] == 0) ++sel;
    if (sel == m.rows.size()) continue;
    std::swap(m.rows[row], m.rows[sel]);
    const int inv = inv_mod_p(m.rows[row][col], m.p);
    for (auto& v : m.rows[row]) v = static_cast<int>((long{v} * inv) % m.p);
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
      if (r == row || m.rows[r][col] == 0) continue;
      const int f = m.rows[r][col];
      for (std::size_t c = 0; c < m.cols; ++c)
        m.rows[r][c] = mod_p(m.rows[r][c] - long{f} * m.rows[row][c], m.p);
    }
    pivots.push_back(col);
    ++row;
  }
  m.rows.resize(row);
  return pivots;
}

std::size_t BitVec::first_set() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
  return n_;
}

std::size_t BitVec::popcount() const {
  std::size_t c = 0;
  for (uint64_t x : w_) c += std::popcount(x);
  return c;
}

void Gf2Basis::reduce(BitVec& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(lead_[i])) v ^= rows_[i];
}

bool Gf2Basis::insert(BitVec v) {
  reduce(v);
  if (!v.any()) return false;
  const std::size_t lead = v.first_set();
  // keep earlier rows fully reduced against the new one
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].get(lead)) rows_[i] ^= v;
  auto at = std::upper_bound(lead_.begin(), lead_.end(), lead);
  const std::size_t idx = static_cast<std::size_t>(at - lead_.begin());
  lead_.insert(at, lead);
  rows_.insert(rows_.begin() + static_cast<long>(idx), std::move(v));
  return true;
}

bool Gf2Basis::contains(BitVec v) const {
  reduce(v);
  return !v.any();
}

} // namespace nbraid
