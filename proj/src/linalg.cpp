#include "leibkit/linalg.hpp"

#include <algorithm>

#include "leibkit/errors.hpp"

namespace leibkit {

namespace {
void require_same_size(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
}
}  // namespace

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

Vec operator+(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Vec out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Vec out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec out(v);
  for (auto& x : out) x *= c;
  return out;
}

Vec& add_scaled(Vec& target, const Scalar& c, const Vec& v) {
  require_same_size(target, v);
  for (std::size_t i = 0; i < v.size(); ++i) target[i] += c * v[i];
  return target;
}

Scalar dot(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Scalar sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Vec unit_vec(std::size_t n, std::size_t index) {
  Vec v(n, Scalar(0));
  v[index] = 1;
  return v;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> values) {
  rows_ = values.size();
  cols_ = rows_ == 0 ? 0 : values.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : values) {
    if (row.size() != cols_) throw DimensionMismatch("ragged initializer");
    for (long x : row) data_.emplace_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<long>(i * cols_),
             data_.begin() + static_cast<long>((i + 1) * cols_));
}

Vec Matrix::col(std::size_t j) const {
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

void Matrix::set_row(std::size_t i, const Vec& values) {
  if (values.size() != cols_) throw DimensionMismatch("row size mismatch");
  std::copy(values.begin(), values.end(), data_.begin() + static_cast<long>(i * cols_));
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix shapes differ");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix shapes differ");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(*this);
  for (auto& x : out.data_) x = -x;
  return out;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
  Matrix out(m);
  for (auto& x : out.data_) x *= c;
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product shapes differ");
  Matrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, j) += aik * other.at(k, j);
    }
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shapes differ");
  Vec out(rows_, Scalar(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * v[j];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x == 0; });
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
    std::size_t found = rows_;
    for (std::size_t i = pivot_row; i < rows_; ++i)
      if (at(i, col) != 0) {
        found = i;
        break;
      }
    if (found == rows_) continue;
    if (found != pivot_row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(found, j), at(pivot_row, j));
    const Scalar inv = Scalar(1) / at(pivot_row, col);
    for (std::size_t j = col; j < cols_; ++j) at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == pivot_row || at(i, col) == 0) continue;
      const Scalar factor = at(i, col);
      for (std::size_t j = col; j < cols_; ++j) at(i, j) -= factor * at(pivot_row, j);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix work(*this);
  return work.rref().size();
}

Matrix Matrix::kernel() const {
  Matrix work(*this);
  const auto pivots = work.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(cols_, Scalar(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work.at(r, free_col);
    basis.push_back(std::move(v));
  }
  Matrix out = Matrix::from_rows(cols_, basis);
  out.rref();
  return out;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  if (rows_ == 0) return Matrix(0, 0);
  Matrix work(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) work.at(i, j) = at(i, j);
    work.at(i, cols_ + i) = 1;
  }
  const auto pivots = work.rref();
  if (pivots.size() != rows_ || pivots.back() >= cols_) return std::nullopt;
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = work.at(i, cols_ + j);
  return out;
}

std::optional<Vec> Matrix::solve(const Vec& rhs) const {
  if (rhs.size() != rows_) throw DimensionMismatch("solve rhs size mismatch");
  Matrix work(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) work.at(i, j) = at(i, j);
    work.at(i, cols_) = rhs[i];
  }
  const auto pivots = work.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  Vec x(cols_, Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = work.at(r, cols_);
  return x;
}

bool Matrix::is_nilpotent() const {
  if (rows_ != cols_) throw DimensionMismatch("nilpotency is for square matrices");
  Matrix power = *this;
  for (std::size_t k = 1; k <= rows_; ++k) {
    if (power.is_zero()) return true;
    power = power * (*this);
  }
  return power.is_zero();
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw DimensionMismatch("trace is for square matrices");
  Scalar sum = 0;
  for (std::size_t i = 0; i < rows_; ++i) sum += at(i, i);
  return sum;
}

Vec Matrix::flatten() const { return data_; }

Matrix Matrix::unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw DimensionMismatch("unflatten size mismatch");
  Matrix out(rows, cols);
  out.data_ = v;
  return out;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Matrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) out.set_row(i, rows[i]);
  return out;
}

Vec characteristic_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier: exact over Q, no pivoting.
  Vec coeffs(n + 1, Scalar(0));
  coeffs[0] = 1;
  Matrix aux = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    aux = m * aux;
    const Scalar c = -aux.trace() / Scalar(static_cast<long>(k));
    coeffs[k] = c;
    for (std::size_t i = 0; i < n; ++i) aux.at(i, i) += c;
  }
  return coeffs;
}

Vec minimal_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("minimal polynomial of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Vec> power_flats{Matrix::identity(n).flatten()};
  Matrix power = Matrix::identity(n);
  for (std::size_t degree = 1; degree <= n; ++degree) {
    power = power * m;
    const Vec target = power.flatten();
    Matrix system(n * n, degree);
    for (std::size_t col = 0; col < degree; ++col)
      for (std::size_t row = 0; row < n * n; ++row) system.at(row, col) = power_flats[col][row];
    if (const auto combo = system.solve(target)) {
      Vec coeffs(degree + 1, Scalar(0));
      coeffs[0] = 1;
      for (std::size_t i = 0; i < degree; ++i) coeffs[degree - i] = -(*combo)[i];
      return coeffs;
    }
    power_flats.push_back(target);
  }
  throw Error("internal: no minimal polynomial found");  // Cayley-Hamilton forbids this
}

namespace {

// sqrt of a non-negative rational, when the result is rational again.
std::optional<Scalar> exact_sqrt(const Scalar& value) {
  if (value < 0) return std::nullopt;
  const mpz_class num = value.get_num();
  const mpz_class den = value.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
    return std::nullopt;
  mpz_class num_root, den_root;
  mpz_sqrt(num_root.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), den.get_mpz_t());
  Scalar root(num_root, den_root);
  root.canonicalize();
  return root;
}

}  // namespace

std::vector<Scalar> rational_roots(const Vec& poly) {
  // Strip leading zeros, factor out x^k, clear denominators.
  std::size_t first = 0;
  while (first < poly.size() && poly[first] == 0) ++first;
  if (first == poly.size()) return {};
  Vec p(poly.begin() + static_cast<long>(first), poly.end());
  std::vector<Scalar> roots;
  while (p.size() > 1 && p.back() == 0) {
    p.pop_back();
    if (roots.empty()) roots.emplace_back(0);
  }
  if (p.size() == 2) {
    roots.push_back(-p[1] / p[0]);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
  }
  if (p.size() == 3) {
    const Scalar disc = p[1] * p[1] - 4 * p[0] * p[2];
    if (const auto root = exact_sqrt(disc)) {
      roots.push_back((-p[1] + *root) / (2 * p[0]));
      roots.push_back((-p[1] - *root) / (2 * p[0]));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
  }
  if (p.size() <= 1) return roots;

  mpz_class lcm_den = 1;
  for (const auto& c : p) lcm_den = lcm(lcm_den, c.get_den());
  std::vector<mpz_class> ip;
  ip.reserve(p.size());
  for (const auto& c : p) ip.push_back(mpz_class(c.get_num() * (lcm_den / c.get_den())));

  auto divisors = [](const mpz_class& value) {
    std::vector<mpz_class> divs;
    mpz_class v = abs(value);
    for (mpz_class d = 1; d * d <= v && d <= 100000; ++d)
      if (v % d == 0) {
        divs.push_back(d);
        divs.push_back(v / d);
      }
    return divs;
  };
  auto eval = [&](const Scalar& x) {
    Scalar acc = 0;
    for (const auto& c : ip) acc = acc * x + Scalar(c);
    return acc;
  };

  for (const auto& num : divisors(ip.back()))
    for (const auto& den : divisors(ip.front())) {
      for (int sign = 1; sign >= -1; sign -= 2) {
        Scalar candidate(sign * num, den);
        candidate.canonicalize();
        if (eval(candidate) == 0 &&
            std::find(roots.begin(), roots.end(), candidate) == roots.end())
          roots.push_back(candidate);
      }
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace leibkit
