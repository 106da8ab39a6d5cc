#pragma once
// Small dense linear algebra mod p, and bit-packed vectors over GF(2).
// Everything here is desk scale: matrices of a few dozen rows, GF(2)
// vectors up to a few thousand bits.

#include <cstdint>
#include <vector>

namespace nbraid {

inline int mod_p(long v, int p) {
  long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inv_mod_p(int a, int p);

struct FpMatrix {
  int p{2};
  std::size_t cols{0};
  std::vector<std::vector<int>> rows; // entries in [0, p)

  void add_row(std::vector<int> r);
};

// In-place reduced row echelon form; returns the pivot column of each
// surviving row, in order.  Zero rows are dropped.
std::vector<std::size_t> rref(FpMatrix& m);

class BitVec {
public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void flip(std::size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

  void operator^=(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  }
  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }
  // Index of the lowest set bit; size() when empty.
  std::size_t first_set() const;
  std::size_t popcount() const;

  friend bool operator==(const BitVec&, const BitVec&) = default;

private:
  std::size_t n_{0};
  std::vector<uint64_t> w_;
};

// Echelonized GF(2) row space keyed by lowest set bit.
class Gf2Basis {
public:
  explicit Gf2Basis(std::size_t n) : n_(n) {}

  // Reduces v against the basis; inserts the remainder if nonzero.
  // Returns true when the dimension grew.
  bool insert(BitVec v);
  bool contains(BitVec v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<BitVec>& rows() const { return rows_; }

private:
  void reduce(BitVec& v) const;
  std::size_t n_;
  std::vector<BitVec> rows_; // sorted by leading index
  std::vector<std::size_t> lead_;
};

} // namespace nbraid
