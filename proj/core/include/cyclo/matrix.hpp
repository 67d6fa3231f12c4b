#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cyclo/field.hpp"

namespace cyclo {

/// A list of length-n row vectors over a field, generating a linear code.
/// `is_canonical()` is set only on matrices produced by rref(), whose rows
/// then form the unique reduced row-echelon basis of the row space.
class GenMatrix {
 public:
  GenMatrix(FieldCtx field, std::size_t length);
  GenMatrix(FieldCtx field, std::size_t length, const std::vector<std::vector<Fe>>& rows);

  static GenMatrix identity(FieldCtx field, std::size_t k);
  /// Integer entries reduced into the prime subfield.
  static GenMatrix from_ints(FieldCtx field, const std::vector<std::vector<std::int64_t>>& rows);

  const FieldCtx& field() const { return field_; }
  std::size_t length() const { return length_; }
  std::size_t rows() const { return rows_; }
  std::span<const Fe> row(std::size_t i) const { return {data_.data() + i * length_, length_}; }
  Fe at(std::size_t i, std::size_t j) const { return data_[i * length_ + j]; }
  bool is_canonical() const { return canonical_; }

  void append_row(std::span<const Fe> row);

  friend bool operator==(const GenMatrix& a, const GenMatrix& b);

 private:
  friend GenMatrix rref(const GenMatrix& m);

  FieldCtx field_;
  std::size_t length_ = 0;
  std::size_t rows_ = 0;
  std::vector<Fe> data_;
  bool canonical_ = false;
};

/// Reduced row-echelon form with zero rows removed; the row count of the
/// result is the rank.
GenMatrix rref(const GenMatrix& m);
std::size_t rank(const GenMatrix& m);

/// a * b^T as a rows(a) x rows(b) matrix.
GenMatrix multiply_transpose(const GenMatrix& a, const GenMatrix& b);
bool is_zero_matrix(const GenMatrix& m);

/// Rows of a followed by rows of b.
GenMatrix stack(const GenMatrix& a, const GenMatrix& b);

/// Moves column j to position target[j]; `target` must be a permutation.
GenMatrix permute_columns(const GenMatrix& m, std::span<const std::size_t> target);

/// Moves column j to (j + shift) mod n.
GenMatrix cyclic_shift(const GenMatrix& m, std::size_t shift);

/// message * m for a message of length rows(m).
std::vector<Fe> encode(const GenMatrix& m, std::span<const Fe> message);

}  // namespace cyclo
