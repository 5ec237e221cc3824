#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wf {

// Dense matrix over the two-element field, bit-packed 64 columns per word.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64),
        data_(static_cast<size_t>(rows) * words_, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative shape");
  }

  static GF2Matrix identity(int n) {
    GF2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const {
    check(r, c);
    return data_[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64) & 1;
  }
  void set(int r, int c, bool v) {
    check(r, c);
    std::uint64_t& w = data_[static_cast<size_t>(r) * words_ + c / 64];
    if (v) w |= 1ULL << (c % 64);
    else w &= ~(1ULL << (c % 64));
  }

  bool is_zero() const {
    for (auto w : data_)
      if (w) return false;
    return true;
  }

  GF2Matrix operator+(const GF2Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("shape mismatch in +: " + shape() + " vs " +
                                  o.shape());
    GF2Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] ^= o.data_[i];
    return r;
  }

  GF2Matrix operator*(const GF2Matrix& o) const {
    if (cols_ != o.rows_)
      throw std::invalid_argument("shape mismatch in *: " + shape() + " vs " +
                                  o.shape());
    GF2Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k)
        if (get(i, k))
          for (int w = 0; w < o.words_; ++w)
            r.data_[static_cast<size_t>(i) * r.words_ + w] ^=
                o.data_[static_cast<size_t>(k) * o.words_ + w];
    return r;
  }

  GF2Matrix transpose() const {
    GF2Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (get(i, j)) r.set(j, i, true);
    return r;
  }

  int rank() const {
    GF2Matrix m = *this;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int pivot = -1;
      for (int i = r; i < rows_; ++i)
        if (m.get(i, c)) { pivot = i; break; }
      if (pivot < 0) continue;
      m.swap_rows(pivot, r);
      for (int i = 0; i < rows_; ++i)
        if (i != r && m.get(i, c)) m.xor_row(i, r);
      ++r;
    }
    return r;
  }

  int nullity() const { return cols_ - rank(); }

  // Columns form a basis of the kernel.
  GF2Matrix kernel_basis() const {
    GF2Matrix m = *this;
    std::vector<int> pivot_of_col(cols_, -1);
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int pivot = -1;
      for (int i = r; i < rows_; ++i)
        if (m.get(i, c)) { pivot = i; break; }
      if (pivot < 0) continue;
      m.swap_rows(pivot, r);
      for (int i = 0; i < rows_; ++i)
        if (i != r && m.get(i, c)) m.xor_row(i, r);
      pivot_of_col[c] = r;
      ++r;
    }
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
      if (pivot_of_col[c] < 0) free_cols.push_back(c);
    GF2Matrix k(cols_, static_cast<int>(free_cols.size()));
    for (size_t j = 0; j < free_cols.size(); ++j) {
      int fc = free_cols[j];
      k.set(fc, static_cast<int>(j), true);
      for (int c = 0; c < cols_; ++c)
        if (pivot_of_col[c] >= 0 && m.get(pivot_of_col[c], fc))
          k.set(c, static_cast<int>(j), true);
    }
    return k;
  }

  // Horizontal concatenation [this | o].
  GF2Matrix hconcat(const GF2Matrix& o) const {
    if (rows_ != o.rows_)
      throw std::invalid_argument("row mismatch in hconcat");
    GF2Matrix r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j)
        if (get(i, j)) r.set(i, j, true);
      for (int j = 0; j < o.cols_; ++j)
        if (o.get(i, j)) r.set(i, cols_ + j, true);
    }
    return r;
  }

  // Submatrix on the given row/column index lists.
  GF2Matrix submatrix(const std::vector<int>& rs,
                      const std::vector<int>& cs) const {
    GF2Matrix r(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (size_t i = 0; i < rs.size(); ++i)
      for (size_t j = 0; j < cs.size(); ++j)
        if (get(rs[i], cs[j])) r.set(static_cast<int>(i),
                                     static_cast<int>(j), true);
    return r;
  }

  // First nonzero entry, as (row, col); (-1, -1) when zero.
  std::pair<int, int> first_nonzero() const {
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (get(i, j)) return {i, j};
    return {-1, -1};
  }

  std::vector<std::pair<int, int>> entries() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (get(i, j)) out.push_back({i, j});
    return out;
  }

  bool operator==(const GF2Matrix&) const = default;

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("index (" + std::to_string(r) + "," +
                              std::to_string(c) + ") in " + shape());
  }
  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int w = 0; w < words_; ++w)
      std::swap(data_[static_cast<size_t>(a) * words_ + w],
                data_[static_cast<size_t>(b) * words_ + w]);
  }
  void xor_row(int dst, int src) {
    for (int w = 0; w < words_; ++w)
      data_[static_cast<size_t>(dst) * words_ + w] ^=
          data_[static_cast<size_t>(src) * words_ + w];
  }

  int rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> data_;
};

// Rank of the map induced on homology by a chain map f: (C, d_src) ->
// (C', d_tgt): rank [f·ker_basis | im d_tgt] - rank d_tgt.
inline int induced_homology_rank(const GF2Matrix& f, const GF2Matrix& d_src,
                                 const GF2Matrix& d_tgt) {
  GF2Matrix k = d_src.kernel_basis();
  GF2Matrix img = f * k;
  return img.hconcat(d_tgt).rank() - d_tgt.rank();
}

}  // namespace wf
