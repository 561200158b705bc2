#include "sgconj/exactla.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sgconj {

int ExactMatrix::rows() const {
  return std::visit([](const auto& m) { return m.rows; }, m);
}
int ExactMatrix::cols() const {
  return std::visit([](const auto& m) { return m.cols; }, m);
}
long ExactMatrix::gf_q() const {
  if (is_rational()) return 0;
  return std::get<Mat<GfField>>(m).f->q();
}
std::string ExactMatrix::field_name() const {
  return is_rational() ? "Q" : "F" + std::to_string(gf_q());
}

ExactMatrix ExactMatrix::mul(const ExactMatrix& o) const {
  if (m.index() != o.m.index() || gf_q() != o.gf_q())
    throw_domain("matrix product over mismatched fields");
  if (is_rational())
    return ExactMatrix{std::get<Mat<QField>>(m).mul(std::get<Mat<QField>>(o.m))};
  return ExactMatrix{std::get<Mat<GfField>>(m).mul(std::get<Mat<GfField>>(o.m))};
}

ExactMatrix ExactMatrix::pow(unsigned long long k) const {
  return std::visit([k](const auto& mm) { return ExactMatrix{mm.pow(k)}; }, m);
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (m.index() != o.m.index() || gf_q() != o.gf_q()) return false;
  if (is_rational())
    return std::get<Mat<QField>>(m) == std::get<Mat<QField>>(o.m);
  return std::get<Mat<GfField>>(m) == std::get<Mat<GfField>>(o.m);
}

ExactMatrix rational_matrix(const std::vector<std::vector<Rational>>& entries) {
  int r = static_cast<int>(entries.size());
  int c = r == 0 ? 0 : static_cast<int>(entries[0].size());
  Mat<QField> m(QField::instance(), r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(entries[i].size()) != c)
      throw_format("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = entries[i][j];
  }
  return ExactMatrix{std::move(m)};
}

ExactMatrix gf_matrix(long q, const std::vector<std::vector<int>>& entries) {
  const GfField& f = GfField::get(q);
  int r = static_cast<int>(entries.size());
  int c = r == 0 ? 0 : static_cast<int>(entries[0].size());
  Mat<GfField> m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(entries[i].size()) != c)
      throw_format("ragged matrix rows");
    for (int j = 0; j < c; ++j) {
      int v = entries[i][j];
      if (v < 0 || v >= q)
        throw_format("matrix entry " + std::to_string(v) + " is not an F_" +
                     std::to_string(q) + " element code");
      m.at(i, j) = static_cast<GfElem>(v);
    }
  }
  return ExactMatrix{std::move(m)};
}

ExactMatrix wrap_matrix(Mat<QField> m) { return ExactMatrix{std::move(m)}; }
ExactMatrix wrap_matrix(Mat<GfField> m) { return ExactMatrix{std::move(m)}; }

namespace {

template <class F>
Mat<F> companion_of(const F& f, const std::vector<typename F::Elem>& coeffs) {
  int d = static_cast<int>(coeffs.size()) - 1;
  if (d < 1) throw_domain("companion matrix needs degree >= 1");
  if (!f.eq(coeffs.back(), f.one()))
    throw_domain("companion matrix needs a monic polynomial");
  Mat<F> m(f, d, d);
  for (int i = 1; i < d; ++i) m.at(i, i - 1) = f.one();
  for (int i = 0; i < d; ++i) m.at(i, d - 1) = f.neg(coeffs[i]);
  return m;
}

}  // namespace

ExactMatrix companion_q(const std::vector<Rational>& monic_coeffs) {
  return ExactMatrix{companion_of(QField::instance(), monic_coeffs)};
}

ExactMatrix companion_gf(long q, const std::vector<int>& monic_coeffs) {
  const GfField& f = GfField::get(q);
  std::vector<GfElem> c;
  c.reserve(monic_coeffs.size());
  for (int v : monic_coeffs) {
    if (v < 0 || v >= q) throw_domain("companion coefficient out of range");
    c.push_back(static_cast<GfElem>(v));
  }
  return ExactMatrix{companion_of(f, c)};
}

namespace {

template <class F>
void require_square(const Mat<F>& m, const char* what) {
  if (m.rows != m.cols)
    throw_domain(std::string(what) + " requires a square matrix");
}

// Ranks of M, M^2, ... until two consecutive values agree; rank 0 and full
// rank are already stable.
template <class F>
RankSequence rank_sequence_t(const Mat<F>& m) {
  require_square(m, "rank_sequence");
  RankSequence out;
  Mat<F> power = m;
  int prev = -1;
  for (int step = 1; step <= m.rows + 1; ++step) {
    int r = mat_rank(power);
    out.dims.push_back(r);
    if (r == prev || r == 0 || r == m.rows) {
      out.stable = r;
      return out;
    }
    prev = r;
    power = power.mul(m);
  }
  throw_domain("rank sequence failed to stabilize");  // unreachable
}

// Least m with rank M^m = rank M^{m+1}, derived from the truncated sequence.
int stabilization_index_from(const RankSequence& rs, int dim) {
  int len = static_cast<int>(rs.dims.size());
  if (rs.dims.back() == dim) return 1;                  // invertible
  if (rs.dims.back() == 0) return len;                  // nilpotent step count
  return len - 1;                                       // dims ends with a repeat
}

template <class F>
FittingSplit fitting_split_t(const Mat<F>& m) {
  require_square(m, "fitting_split");
  RankSequence rs = rank_sequence_t(m);
  int idx = stabilization_index_from(rs, m.rows);
  Mat<F> stable_power = m.pow(static_cast<unsigned long long>(idx));
  return FittingSplit{ExactMatrix{column_space_basis(stable_power)},
                      ExactMatrix{null_space_basis(stable_power)}, idx};
}

// --- Smith normal form of xI - M over F[x] ---------------------------------

template <class F>
using PolyMat = std::vector<std::vector<Poly<F>>>;

template <class F>
PolyMat<F> characteristic_matrix(const Mat<F>& m) {
  const F& f = *m.f;
  int n = m.rows;
  PolyMat<F> a(n, std::vector<Poly<F>>(n, Poly<F>::zero(f)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<typename F::Elem> c;
      if (i == j)
        c = {f.neg(m.at(i, j)), f.one()};  // x - m_ii
      else
        c = {f.neg(m.at(i, j))};
      a[i][j] = Poly<F>(f, std::move(c));
    }
  return a;
}

// Scale a row by a unit to keep rational coefficient growth in check:
// clear denominators and divide by the integer content.
inline void reduce_row_content(std::vector<Poly<QField>>& row) {
  BigInt den_lcm = 1;
  for (const auto& p : row)
    for (const auto& c : p.c)
      den_lcm = boost::multiprecision::lcm(den_lcm,
                                           boost::multiprecision::denominator(c));
  BigInt num_gcd = 0;
  for (const auto& p : row)
    for (const auto& c : p.c) {
      BigInt scaled_num = boost::multiprecision::numerator(c) *
                          (den_lcm / boost::multiprecision::denominator(c));
      num_gcd = boost::multiprecision::gcd(num_gcd, scaled_num);
    }
  if (num_gcd == 0 || (den_lcm == 1 && num_gcd == 1)) return;
  Rational unit(den_lcm, num_gcd);
  for (auto& p : row) p = p.scale(unit);
}

template <class F>
inline void reduce_row_content_any(std::vector<Poly<F>>& row) {
  if constexpr (std::is_same_v<F, QField>) reduce_row_content(row);
}

// Deterministic Smith elimination: pivot = minimal degree, ties by (row, col).
template <class F>
std::vector<Poly<F>> smith_invariant_factors(PolyMat<F> a) {
  int n = static_cast<int>(a.size());
  std::vector<Poly<F>> diag;

  for (int t = 0; t < n; ++t) {
    while (true) {
      int pr = -1, pc = -1, best_deg = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j) {
          if (a[i][j].is_zero()) continue;
          int d = a[i][j].degree();
          if (pr < 0 || d < best_deg) {
            pr = i;
            pc = j;
            best_deg = d;
          }
        }
      if (pr < 0) {
        // Remaining block is zero; xI - M is nonsingular so this cannot
        // happen before t = n, but keep the loop total.
        return diag;
      }
      std::swap(a[t], a[pr]);
      for (int i = t; i < n; ++i) std::swap(a[i][t], a[i][pc]);

      bool clean = true;
      // Clear the pivot column by division with remainder.
      for (int i = t + 1; i < n; ++i) {
        if (a[i][t].is_zero()) continue;
        auto [q, r] = a[i][t].divmod(a[t][t]);
        for (int j = t; j < n; ++j)
          a[i][j] = a[i][j].sub(q.mul(a[t][j]));
        reduce_row_content_any(a[i]);
        if (!r.is_zero()) clean = false;
      }
      // Clear the pivot row.
      for (int j = t + 1; j < n; ++j) {
        if (a[t][j].is_zero()) continue;
        auto [q, r] = a[t][j].divmod(a[t][t]);
        for (int i = t; i < n; ++i)
          a[i][j] = a[i][j].sub(a[i][t].mul(q));
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the submatrix.
      int bad_row = -1;
      for (int i = t + 1; i < n && bad_row < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (!a[t][t].divides(a[i][j])) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      for (int j = t; j < n; ++j) a[t][j] = a[t][j].add(a[bad_row][j]);
      reduce_row_content_any(a[t]);
    }
    diag.push_back(a[t][t].make_monic());
  }
  return diag;
}

template <class F>
std::vector<Poly<F>> invariant_factors_t(const Mat<F>& m) {
  require_square(m, "invariant_factors");
  std::vector<Poly<F>> diag = smith_invariant_factors(characteristic_matrix(m));
  std::vector<Poly<F>> out;
  for (auto& d : diag)
    if (d.degree() >= 1) out.push_back(std::move(d));
  return out;
}

template <class F>
Mat<F> restriction_to_eventual_range(const Mat<F>& m) {
  require_square(m, "eventual range restriction");
  RankSequence rs = rank_sequence_t(m);
  int idx = stabilization_index_from(rs, m.rows);
  Mat<F> basis = column_space_basis(m.pow(static_cast<unsigned long long>(idx)));
  Mat<F> image = m.mul(basis);
  return coords_in_basis(basis, image);
}

template <class F>
bool is_permutation_matrix(const Mat<F>& m) {
  const F& f = *m.f;
  if (m.rows != m.cols) return false;
  for (int i = 0; i < m.rows; ++i) {
    int ones = 0;
    for (int j = 0; j < m.cols; ++j) {
      const auto& e = m.at(i, j);
      if (f.is_zero(e)) continue;
      if (!f.eq(e, f.one())) return false;
      ++ones;
    }
    if (ones != 1) return false;
  }
  for (int j = 0; j < m.cols; ++j) {
    int ones = 0;
    for (int i = 0; i < m.rows; ++i)
      if (!f.is_zero(m.at(i, j))) ++ones;
    if (ones != 1) return false;
  }
  return true;
}

template <class F>
CycleType cycle_type_of_permutation(const Mat<F>& m) {
  const F& f = *m.f;
  int n = m.rows;
  std::vector<int> image(n, -1);  // column j maps to the row of its 1
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (!f.is_zero(m.at(i, j))) image[j] = i;
  CycleType type;
  std::vector<bool> seen(n, false);
  for (int j = 0; j < n; ++j) {
    if (seen[j]) continue;
    int len = 0, cur = j;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = image[cur];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

}  // namespace

RankSequence rank_sequence(const ExactMatrix& M) {
  return std::visit([](const auto& m) { return rank_sequence_t(m); }, M.m);
}

FittingSplit fitting_split(const ExactMatrix& M) {
  return std::visit([](const auto& m) { return fitting_split_t(m); }, M.m);
}

InvariantFactors invariant_factors(const ExactMatrix& M) {
  return std::visit(
      [](const auto& m) { return InvariantFactors{invariant_factors_t(m)}; },
      M.m);
}

std::size_t InvariantFactors::count() const {
  return std::visit([](const auto& v) { return v.size(); }, factors);
}

std::vector<std::vector<std::string>> InvariantFactors::coeff_strings() const {
  std::vector<std::vector<std::string>> out;
  if (factors.index() == 0) {
    for (const auto& p : std::get<0>(factors)) {
      std::vector<std::string> c;
      for (const auto& x : p.c) c.push_back(format_rational(x));
      out.push_back(std::move(c));
    }
  } else {
    for (const auto& p : std::get<1>(factors)) {
      std::vector<std::string> c;
      for (const auto& x : p.c) c.push_back(std::to_string(x));
      out.push_back(std::move(c));
    }
  }
  return out;
}

bool InvariantFactors::operator==(const InvariantFactors& o) const {
  if (factors.index() != o.factors.index()) return false;
  if (factors.index() == 0) return std::get<0>(factors) == std::get<0>(o.factors);
  return std::get<1>(factors) == std::get<1>(o.factors);
}

bool similar(const ExactMatrix& M, const ExactMatrix& N) {
  if (M.m.index() != N.m.index() || M.gf_q() != N.gf_q())
    throw_domain("similar: matrices over different fields");
  if (M.rows() != N.rows() || M.cols() != N.cols())
    throw_domain("similar: dimension mismatch");
  return invariant_factors(M) == invariant_factors(N);
}

CycleType permutation_cycle_type(const ExactMatrix& M) {
  return std::visit(
      [](const auto& m) {
        if (!is_permutation_matrix(m))
          throw_domain("not a permutation matrix");
        return cycle_type_of_permutation(m);
      },
      M.m);
}

ExactMatrix eventual_range_restriction(const ExactMatrix& M) {
  return std::visit(
      [](const auto& m) { return ExactMatrix{restriction_to_eventual_range(m)}; },
      M.m);
}

bool kovacs_conjugate(const ExactMatrix& M, const ExactMatrix& N) {
  if (M.m.index() != N.m.index() || M.gf_q() != N.gf_q())
    throw_domain("kovacs_conjugate: matrices over different fields");
  if (M.rows() != N.rows() || M.cols() != N.cols())
    throw_domain("kovacs_conjugate: dimension mismatch");
  RankSequence rm = rank_sequence(M);
  RankSequence rn = rank_sequence(N);
  if (rm.dims != rn.dims) return false;

  auto perm_type = [](const ExactMatrix& A) {
    ExactMatrix r = eventual_range_restriction(A);
    return std::visit(
        [](const auto& m) {
          if (!is_permutation_matrix(m))
            throw_unsupported(
                "eventual-range restriction is not a basis permutation");
          return cycle_type_of_permutation(m);
        },
        r.m);
  };
  return perm_type(M) == perm_type(N);
}

int exact_rank(const ExactMatrix& M) {
  return std::visit([](const auto& m) { return mat_rank(m); }, M.m);
}

namespace {

Partition similarity_partition_impl(const std::vector<ExactMatrix>& mats,
                                    bool parallel) {
  for (const auto& m : mats) {
    if (m.rows() != m.cols())
      throw_domain("similarity partition requires square matrices");
    if (m.m.index() != mats.front().m.index() || m.gf_q() != mats.front().gf_q())
      throw_domain("similarity partition requires one common field");
  }
  std::vector<InvariantFactors> inv(mats.size());
#pragma omp parallel for schedule(dynamic) if (parallel && mats.size() >= 8)
  for (std::size_t i = 0; i < mats.size(); ++i) inv[i] = invariant_factors(mats[i]);

  std::vector<int> labels(mats.size());
  std::map<std::vector<std::vector<std::string>>, int> ids;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    auto key = inv[i].coeff_strings();
    auto it = ids.find(key);
    if (it == ids.end()) it = ids.emplace(std::move(key), static_cast<int>(ids.size())).first;
    labels[i] = it->second;
  }
  return Partition::from_class_of(labels);
}

}  // namespace

Partition similarity_partition(const std::vector<ExactMatrix>& mats) {
  return similarity_partition_impl(mats, true);
}

Partition similarity_partition_serial(const std::vector<ExactMatrix>& mats) {
  return similarity_partition_impl(mats, false);
}

}  // namespace sgconj
