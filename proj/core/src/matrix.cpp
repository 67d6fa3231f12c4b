#include "cyclo/matrix.hpp"

#include "cyclo/error.hpp"

namespace cyclo {

GenMatrix::GenMatrix(FieldCtx field, std::size_t length) : field_(std::move(field)), length_(length) {}

GenMatrix::GenMatrix(FieldCtx field, std::size_t length, const std::vector<std::vector<Fe>>& rows)
    : GenMatrix(std::move(field), length) {
  for (const auto& r : rows) append_row(r);
}

GenMatrix GenMatrix::identity(FieldCtx field, std::size_t k) {
  GenMatrix out(field, k);
  std::vector<Fe> row(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::fill(row.begin(), row.end(), field.zero());
    row[i] = field.one();
    out.append_row(row);
  }
  out.canonical_ = true;
  return out;
}

GenMatrix GenMatrix::from_ints(FieldCtx field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  GenMatrix out(field, n);
  std::vector<Fe> buf(n);
  for (const auto& r : rows) {
    if (r.size() != n) fail(ErrorKind::LengthMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < n; ++j) buf[j] = field.from_int(r[j]);
    out.append_row(buf);
  }
  return out;
}

void GenMatrix::append_row(std::span<const Fe> row) {
  if (row.size() != length_) {
    fail(ErrorKind::LengthMismatch,
         "row of length " + std::to_string(row.size()) + " in a length-" + std::to_string(length_) + " matrix");
  }
  for (Fe c : row) {
    if (!field_.contains(c)) fail(ErrorKind::ContextMismatch, "matrix entry outside the field");
  }
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
  canonical_ = false;
}

bool operator==(const GenMatrix& a, const GenMatrix& b) {
  return a.field_ == b.field_ && a.length_ == b.length_ && a.rows_ == b.rows_ && a.data_ == b.data_;
}

GenMatrix rref(const GenMatrix& m) {
  const FieldCtx& f = m.field();
  const std::size_t n = m.length();
  std::vector<Fe> data = m.data_;
  std::size_t rows = m.rows();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && data[sel * n + col].is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row) {
      std::swap_ranges(data.begin() + static_cast<std::ptrdiff_t>(sel * n),
                       data.begin() + static_cast<std::ptrdiff_t>((sel + 1) * n),
                       data.begin() + static_cast<std::ptrdiff_t>(pivot_row * n));
    }
    Fe* prow = data.data() + pivot_row * n;
    const Fe scale = f.inv(prow[col]);
    for (std::size_t j = col; j < n; ++j) prow[j] = f.mul(prow[j], scale);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      Fe* row = data.data() + r * n;
      const Fe c = row[col];
      if (c.is_zero()) continue;
      for (std::size_t j = col; j < n; ++j) row[j] = f.sub(row[j], f.mul(c, prow[j]));
    }
    ++pivot_row;
  }
  GenMatrix out(f, n);
  out.data_.assign(data.begin(), data.begin() + static_cast<std::ptrdiff_t>(pivot_row * n));
  out.rows_ = pivot_row;
  out.canonical_ = true;
  return out;
}

std::size_t rank(const GenMatrix& m) { return rref(m).rows(); }

GenMatrix multiply_transpose(const GenMatrix& a, const GenMatrix& b) {
  if (!(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "matrices over different fields");
  if (a.length() != b.length()) fail(ErrorKind::LengthMismatch, "matrices of different lengths");
  const FieldCtx& f = a.field();
  GenMatrix out(f, b.rows());
  std::vector<Fe> buf(b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      Fe acc = f.zero();
      for (std::size_t c = 0; c < a.length(); ++c) acc = f.add(acc, f.mul(a.at(i, c), b.at(j, c)));
      buf[j] = acc;
    }
    out.append_row(buf);
  }
  return out;
}

bool is_zero_matrix(const GenMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (Fe c : m.row(i)) {
      if (!c.is_zero()) return false;
    }
  }
  return true;
}

GenMatrix stack(const GenMatrix& a, const GenMatrix& b) {
  if (!(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "matrices over different fields");
  if (a.length() != b.length()) fail(ErrorKind::LengthMismatch, "matrices of different lengths");
  GenMatrix out = a;
  for (std::size_t i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
  return out;
}

GenMatrix permute_columns(const GenMatrix& m, std::span<const std::size_t> target) {
  const std::size_t n = m.length();
  if (target.size() != n) fail(ErrorKind::DimensionMismatch, "permutation length differs from code length");
  std::vector<bool> hit(n, false);
  for (std::size_t t : target) {
    if (t >= n || hit[t]) fail(ErrorKind::InvalidArgument, "column map is not a permutation");
    hit[t] = true;
  }
  GenMatrix out(m.field(), n);
  std::vector<Fe> buf(n);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.row(i);
    for (std::size_t j = 0; j < n; ++j) buf[target[j]] = row[j];
    out.append_row(buf);
  }
  return out;
}

GenMatrix cyclic_shift(const GenMatrix& m, std::size_t shift) {
  const std::size_t n = m.length();
  std::vector<std::size_t> target(n);
  for (std::size_t j = 0; j < n; ++j) target[j] = (j + shift) % n;
  return permute_columns(m, target);
}

std::vector<Fe> encode(const GenMatrix& m, std::span<const Fe> message) {
  if (message.size() != m.rows()) fail(ErrorKind::DimensionMismatch, "message length differs from row count");
  const FieldCtx& f = m.field();
  std::vector<Fe> out(m.length(), f.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (message[i].is_zero()) continue;
    const auto row = m.row(i);
    for (std::size_t j = 0; j < m.length(); ++j) out[j] = f.add(out[j], f.mul(message[i], row[j]));
  }
  return out;
}

}  // namespace cyclo
