#include "superhom/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace superhom {

// ---------------------------------------------------------------- vectors

SparseVector SparseVector::unit(std::size_t index, const Scalar& value) {
  SparseVector v;
  v.push_back(index, value);
  return v;
}

SparseVector SparseVector::from_dense(std::span<const Scalar> dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i) v.push_back(i, dense[i]);
  return v;
}

const Scalar* SparseVector::find(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  if (it == entries_.end() || it->index != index) return nullptr;
  return &it->value;
}

Scalar SparseVector::get(std::size_t index, const Scalar& zero) const {
  const Scalar* s = find(index);
  return s ? *s : zero;
}

void SparseVector::push_back(std::size_t index, Scalar value) {
  if (value.is_zero()) return;
  if (!entries_.empty() && entries_.back().index >= index) throw Error("SparseVector::push_back out of order");
  entries_.push_back({index, std::move(value)});
}

void SparseVector::add_scaled(const SparseVector& other, const Scalar& c) {
  if (c.is_zero() || other.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      out.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->index < a->index) {
      out.push_back({b->index, b->value * c});
      ++b;
    } else {
      Scalar s = std::move(a->value);
      s += b->value * c;
      if (!s.is_zero()) out.push_back({a->index, std::move(s)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

SparseVector SparseVector::scaled(const Scalar& c) const {
  SparseVector v;
  if (c.is_zero()) return v;
  v.entries_.reserve(entries_.size());
  for (const auto& e : entries_) v.entries_.push_back({e.index, e.value * c});
  return v;
}

SparseVector& SparseVector::operator+=(const SparseVector& o) {
  if (o.empty()) return *this;
  add_scaled(o, o.entries_.front().value.one_like());
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& o) {
  if (o.empty()) return *this;
  add_scaled(o, -o.entries_.front().value.one_like());
  return *this;
}

SparseVector SparseVector::operator-() const {
  SparseVector v;
  v.entries_.reserve(entries_.size());
  for (const auto& e : entries_) v.entries_.push_back({e.index, -e.value});
  return v;
}

SparseVector SparseVector::remapped(std::span<const std::size_t> map) const {
  SparseVector v;
  v.entries_.reserve(entries_.size());
  for (const auto& e : entries_) v.entries_.push_back({map[e.index], e.value});
  std::sort(v.entries_.begin(), v.entries_.end(), [](const Entry& x, const Entry& y) { return x.index < y.index; });
  return v;
}

std::vector<Scalar> SparseVector::to_dense(std::size_t dim, const Scalar& zero) const {
  std::vector<Scalar> out(dim, zero);
  for (const auto& e : entries_) out.at(e.index) = e.value;
  return out;
}

void SparseAccumulator::add(std::size_t index, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, value);
  if (!inserted) it->second += value;
}

void SparseAccumulator::add(const SparseVector& v, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& e : v) add(e.index, e.value * c);
}

void SparseAccumulator::add(const SparseVector& v) {
  for (const auto& e : v) add(e.index, e.value);
}

SparseVector SparseAccumulator::take() {
  SparseVector v;
  for (auto& [i, s] : terms_) v.push_back(i, std::move(s));
  terms_.clear();
  return v;
}

// ---------------------------------------------------------------- matrices

SparseMatrix::SparseMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), cols_(cols), rows_(rows) {}

SparseMatrix SparseMatrix::identity(FieldSpec field, std::size_t n) {
  SparseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i] = SparseVector::unit(i, field.one());
  return m;
}

SparseMatrix SparseMatrix::from_dense(FieldSpec field, const std::vector<std::vector<Scalar>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  SparseMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("ragged dense matrix");
    for (const auto& s : rows[r]) field.check(s);
    m.rows_[r] = SparseVector::from_dense(rows[r]);
  }
  return m;
}

SparseMatrix SparseMatrix::from_int(FieldSpec field, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Scalar>> dense;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (long x : r) row.push_back(field.from_int(x));
    dense.push_back(std::move(row));
  }
  return from_dense(field, dense);
}

void SparseMatrix::set_row(std::size_t r, SparseVector v) {
  if (!v.empty() && v.entries().back().index >= cols_) throw Error("SparseMatrix::set_row index out of range");
  rows_.at(r) = std::move(v);
}

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const { return rows_.at(r).get(c, field_.zero()); }

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.nnz();
  return n;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(field_, cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& e : rows_[r]) t.rows_[e.index].push_back(r, e.value);
  }
  return t;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar s = field_.zero();
    const auto& row = rows_[r].entries();
    auto a = row.begin();
    auto b = v.begin();
    while (a != row.end() && b != v.end()) {
      if (a->index < b->index) {
        ++a;
      } else if (b->index < a->index) {
        ++b;
      } else {
        s += a->value * b->value;
        ++a;
        ++b;
      }
    }
    out.push_back(r, std::move(s));
  }
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix product dimension mismatch");
  SparseMatrix out(a.field(), a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    SparseAccumulator acc;
    for (const auto& e : a.row(r)) acc.add(b.row(e.index), e.value);
    out.set_row(r, acc.take());
  }
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const SparseVector& v) { return v.empty(); });
}

// ---------------------------------------------------------------- echelon

Echelon::Echelon(FieldSpec field, std::size_t dim) : field_(field), dim_(dim), pivot_row_(dim, -1) {}

SparseVector Echelon::reduce(SparseVector v) const {
  std::size_t k = 0;
  while (k < v.entries_.size()) {
    auto row = pivot_row_[v.entries_[k].index];
    if (row < 0) {
      ++k;
      continue;
    }
    // Stored rows start at their pivot, so entries before k are untouched.
    Scalar c = -v.entries_[k].value;
    v.add_scaled(rows_[static_cast<std::size_t>(row)], c);
  }
  return v;
}

bool Echelon::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Scalar lead = v.entries_.front().value.inverse();
  if (!lead.is_one()) v = v.scaled(lead);
  pivot_row_[v.entries_.front().index] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

std::vector<SparseVector> Echelon::reduced_rows() const {
  std::vector<SparseVector> rows = rows_;
  std::sort(rows.begin(), rows.end(),
            [](const SparseVector& a, const SparseVector& b) { return a[0].index < b[0].index; });
  // Back-substitution from the last pivot upwards.
  std::vector<std::ptrdiff_t> where(dim_, -1);
  for (std::size_t r = rows.size(); r-- > 0;) {
    auto& v = rows[r].entries_;
    std::size_t k = 1;
    while (k < v.size()) {
      auto src = where[v[k].index];
      if (src < 0) {
        ++k;
        continue;
      }
      Scalar c = -v[k].value;
      rows[r].add_scaled(rows[static_cast<std::size_t>(src)], c);
    }
    where[v.front().index] = static_cast<std::ptrdiff_t>(r);
  }
  return rows;
}

// ---------------------------------------------------------------- subspaces

Subspace::Subspace(FieldSpec field, std::size_t ambient_dim)
    : field_(field), ambient_dim_(ambient_dim), pivot_pos_(ambient_dim, -1) {}

Subspace Subspace::span(FieldSpec field, std::size_t ambient_dim, std::span<const SparseVector> vectors) {
  Echelon ech(field, ambient_dim);
  for (const auto& v : vectors) ech.insert(v);
  Subspace s(field, ambient_dim);
  s.basis_ = ech.reduced_rows();
  for (std::size_t k = 0; k < s.basis_.size(); ++k) {
    s.pivots_.push_back(s.basis_[k][0].index);
    s.pivot_pos_[s.pivots_.back()] = static_cast<std::ptrdiff_t>(k);
  }
  return s;
}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim) {
  std::vector<SparseVector> units;
  for (std::size_t i = 0; i < ambient_dim; ++i) units.push_back(SparseVector::unit(i, field.one()));
  return span(field, ambient_dim, units);
}

SparseVector Subspace::reduce(const SparseVector& v) const {
  // RREF: subtracting v[p] * basis_p for every pivot p present in v.
  SparseVector out = v;
  for (const auto& e : v) {
    auto k = pivot_pos_.at(e.index);
    if (k < 0) continue;
    const Scalar* c = out.find(e.index);
    if (c) {
      Scalar coef = -*c;
      out.add_scaled(basis_[static_cast<std::size_t>(k)], coef);
    }
  }
  return out;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const SparseVector& v) { return contains(v); });
}

std::optional<SparseVector> Subspace::coordinates(const SparseVector& v) const {
  SparseVector coords;
  for (const auto& e : v) {
    auto k = pivot_pos_.at(e.index);
    if (k >= 0) coords.push_back(static_cast<std::size_t>(k), e.value);
  }
  // Pivot order equals basis order, so coords is already sorted.
  if (!(combine(coords) == v)) return std::nullopt;
  return coords;
}

SparseVector Subspace::combine(const SparseVector& coords) const {
  SparseAccumulator acc;
  for (const auto& e : coords) acc.add(basis_.at(e.index), e.value);
  return acc.take();
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.field_ == b.field_ && a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
}

DenseAccumulator::DenseAccumulator(FieldSpec field, std::size_t dim)
    : values_(dim, field.zero()), used_(dim, 0), zero_(field.zero()) {}

void DenseAccumulator::add(std::size_t index, const Scalar& value) {
  if (!used_[index]) {
    used_[index] = 1;
    touched_.push_back(index);
    values_[index] = value;
  } else {
    values_[index] += value;
  }
}

void DenseAccumulator::add(const SparseVector& v, const Scalar& c) {
  for (const auto& e : v) add(e.index, e.value * c);
}

void DenseAccumulator::add(const SparseVector& v) {
  for (const auto& e : v) add(e.index, e.value);
}

SparseVector DenseAccumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseVector out;
  for (auto i : touched_) {
    out.push_back(i, values_[i]);
    used_[i] = 0;
    values_[i] = zero_;
  }
  touched_.clear();
  return out;
}

// ---------------------------------------------------------------- quotients

Quotient::Quotient(Subspace kernel) : kernel_(std::move(kernel)), position_(kernel_.ambient_dim(), -1) {
  std::vector<bool> is_pivot(kernel_.ambient_dim(), false);
  for (auto p : kernel_.pivots()) is_pivot[p] = true;
  for (std::size_t i = 0; i < kernel_.ambient_dim(); ++i) {
    if (!is_pivot[i]) {
      position_[i] = static_cast<std::ptrdiff_t>(complement_.size());
      complement_.push_back(i);
    }
  }
}

SparseVector Quotient::project(const SparseVector& v) const {
  SparseVector r = kernel_.reduce(v);
  SparseVector out;
  for (const auto& e : r) out.push_back(static_cast<std::size_t>(position_[e.index]), e.value);
  return out;
}

SparseVector Quotient::section(std::size_t k) const {
  return SparseVector::unit(complement_.at(k), kernel_.field().one());
}

SparseMatrix Quotient::projection() const {
  SparseMatrix cols(kernel_.field(), ambient_dim(), dim());
  for (std::size_t i = 0; i < ambient_dim(); ++i) {
    cols.set_row(i, project(SparseVector::unit(i, kernel_.field().one())));
  }
  return cols.transpose();
}

// ---------------------------------------------------------------- rank etc.

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Rank of one connected block. Columns are relabelled so that sparse
// columns are tried as pivots first, and short rows are inserted first.
std::size_t block_rank(FieldSpec field, std::vector<const SparseVector*> rows, std::span<const std::size_t> columns) {
  std::vector<std::size_t> count(columns.size(), 0);
  std::vector<std::size_t> local(columns.empty() ? 0 : columns.back() + 1, 0);
  for (std::size_t k = 0; k < columns.size(); ++k) local[columns[k]] = k;
  for (const auto* r : rows)
    for (const auto& e : *r) ++count[local[e.index]];
  std::vector<std::size_t> order(columns.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return count[a] < count[b]; });
  std::vector<std::size_t> relabel(columns.size());
  for (std::size_t k = 0; k < order.size(); ++k) relabel[order[k]] = k;
  std::vector<std::size_t> map(local.size(), 0);
  for (std::size_t k = 0; k < columns.size(); ++k) map[columns[k]] = relabel[k];

  std::stable_sort(rows.begin(), rows.end(), [](const SparseVector* a, const SparseVector* b) { return a->nnz() < b->nnz(); });
  Echelon ech(field, columns.size());
  for (const auto* r : rows) {
    ech.insert(r->remapped(map));
    if (ech.rank() == columns.size()) break;
  }
  return ech.rank();
}

}  // namespace

std::size_t rank_of_rows(FieldSpec field, std::size_t dim, std::span<const SparseVector> rows) {
  // The rank is additive over connected components of the row/column
  // incidence graph, which is what makes the large complexes tractable.
  DisjointSets sets(dim);
  for (const auto& r : rows)
    for (std::size_t k = 1; k < r.nnz(); ++k) sets.unite(r[0].index, r[k].index);
  std::map<std::size_t, std::vector<const SparseVector*>> groups;
  for (const auto& r : rows)
    if (!r.empty()) groups[sets.find(r[0].index)].push_back(&r);
  std::map<std::size_t, std::vector<std::size_t>> columns;
  for (std::size_t c = 0; c < dim; ++c) columns[sets.find(c)].push_back(c);
  std::size_t total = 0;
  for (auto& [root, group] : groups) total += block_rank(field, std::move(group), columns[root]);
  return total;
}

std::size_t rank(const SparseMatrix& m) {
  std::vector<SparseVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rank_of_rows(m.field(), m.cols(), rows);
}

Subspace row_space(const SparseMatrix& m) {
  std::vector<SparseVector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return Subspace::span(m.field(), m.cols(), rows);
}

Subspace kernel_basis(const SparseMatrix& m) {
  Subspace rs = row_space(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rs.pivots()) is_pivot[p] = true;
  std::vector<SparseVector> kernel;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseAccumulator acc;
    acc.add(f, m.field().one());
    for (std::size_t k = 0; k < rs.dim(); ++k) {
      if (const Scalar* c = rs.basis()[k].find(f)) acc.add(rs.pivots()[k], -*c);
    }
    kernel.push_back(acc.take());
  }
  return Subspace::span(m.field(), m.cols(), kernel);
}

std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b) {
  const std::size_t n = m.cols();
  std::vector<SparseVector> augmented;
  augmented.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVector row = m.row(r);
    if (const Scalar* s = b.find(r)) row.push_back(n, *s);
    augmented.push_back(std::move(row));
  }
  Subspace rs = Subspace::span(m.field(), n + 1, augmented);
  SparseVector x;
  for (std::size_t k = 0; k < rs.dim(); ++k) {
    if (rs.pivots()[k] == n) return std::nullopt;
    x.push_back(rs.pivots()[k], rs.basis()[k].get(n, m.field().zero()));
  }
  return x;
}

Quotient quotient(std::size_t ambient_dim, const Subspace& w) {
  if (w.ambient_dim() != ambient_dim) throw Error("quotient: subspace lives in a different ambient space");
  return Quotient(w);
}

}  // namespace superhom
