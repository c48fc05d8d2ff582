#include "concord/core_forms.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>

namespace concord {

namespace {

IntPolynomial integral(const RatPolynomial& p) {
  std::vector<Integer> c;
  for (const auto& v : p.coeffs()) {
    if (v.get_den() != 1) throw Error(Errc::InvalidArgument, "polynomial is not integral");
    c.push_back(v.get_num());
  }
  return IntPolynomial(std::move(c));
}

// det(a + t b) as a polynomial in t, by interpolation at t = 0..n.
IntPolynomial pencil_determinant(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.rows();
  std::vector<Rational> xs, ys;
  for (std::size_t t = 0; t <= n; ++t) {
    const Integer ti(static_cast<unsigned long>(t));
    xs.emplace_back(ti);
    ys.emplace_back(determinant(a + ti * b));
  }
  return integral(interpolate(xs, ys));
}

}  // namespace

SeifertForm::SeifertForm(IntMatrix a) : a_(std::move(a)) {
  if (!a_.is_square()) throw Error(Errc::NotSquare, "Seifert matrix must be square");
  if (a_.rows() == 0 || a_.rows() % 2 != 0)
    throw Error(Errc::OddSize, "Seifert matrix must have even positive size");
  const Integer d = determinant(skew());
  if (d != 1)
    throw Error(Errc::NonUnimodularSkewPart, "det(A - A^T) = " + d.get_str() + ", expected 1");
}

IntMatrix SeifertForm::skew() const { return a_ - a_.transpose(); }
IntMatrix SeifertForm::symmetrized() const { return a_ + a_.transpose(); }

SeifertForm validate_seifert(const IntMatrix& m) { return SeifertForm(m); }

IntMatrix isometric_structure(const SeifertForm& f) {
  return to_integer(inverse(to_rational(f.skew())) * to_rational(f.matrix()));
}

IntPolynomial alexander(const SeifertForm& f) {
  return pencil_determinant(f.matrix(), -f.matrix().transpose());
}

IntPolynomial characteristic_polynomial(const IntMatrix& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "characteristic polynomial of non-square matrix");
  return pencil_determinant(-m, IntMatrix::identity(m.rows()));
}

bool charpoly_identity_check(const SeifertForm& f) {
  return charpoly_identity_check(f, isometric_structure(f));
}

bool charpoly_identity_check(const SeifertForm& f, const IntMatrix& g) {
  const IntPolynomial lhs = characteristic_polynomial(g);
  const IntPolynomial delta = alexander(f);
  const std::size_t n = f.size();
  // x^n Delta(1 - 1/x) = sum_j c_j (x - 1)^j x^(n - j)
  const IntPolynomial xm1{-1, 1};
  IntPolynomial rhs;
  IntPolynomial pw{1};
  for (std::size_t j = 0; j <= n; ++j) {
    const Integer cj = delta.coeff(j);
    if (cj != 0) rhs = rhs + cj * (pw * IntPolynomial::monomial(1, n - j));
    pw = pw * xm1;
  }
  return lhs == rhs || lhs == -rhs;
}

SeifertForm block_sum(const SeifertForm& a, const SeifertForm& b) {
  return SeifertForm(block_diagonal(a.matrix(), b.matrix()));
}

SeifertForm mirror(const SeifertForm& f) { return SeifertForm(-f.matrix().transpose()); }

bool is_metabolizer(const SeifertForm& f, const IntMatrix& basis) {
  const std::size_t g = f.genus();
  if (basis.rows() != g || basis.cols() != f.size()) return false;
  const SmithForm snf = smith_normal_form(basis);
  if (snf.rank != g) return false;
  for (std::size_t i = 0; i < g; ++i)
    if (snf.diagonal(i, i) != 1) return false;
  const IntMatrix w = f.skew();
  const IntMatrix pairing = basis * w * basis.transpose();
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      if (pairing(i, j) != 0) return false;
  const IntMatrix gs = isometric_structure(f);
  const IntMatrix images = (gs * basis.transpose()).transpose();
  IntMatrix stacked(2 * g, f.size());
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < f.size(); ++j) {
      stacked(i, j) = basis(i, j);
      stacked(g + i, j) = images(i, j);
    }
  return rank(stacked) == g;
}

std::vector<Metabolizer> find_rank1_metabolizers(const SeifertForm& f) {
  if (f.genus() != 1) throw Error(Errc::InvalidArgument, "rank-one metabolizers need genus one");
  const IntMatrix gm = isometric_structure(f);
  const Integer tr = gm(0, 0) + gm(1, 1);
  const Integer det = gm(0, 0) * gm(1, 1) - gm(0, 1) * gm(1, 0);
  const Integer disc = tr * tr - 4 * det;
  std::vector<Metabolizer> out;
  if (!is_perfect_square(disc)) return out;
  const Integer root = integer_sqrt(disc);
  std::vector<Integer> eigenvalues{Integer((tr - root) / 2)};
  if (root != 0) eigenvalues.emplace_back((tr + root) / 2);
  for (const auto& lambda : eigenvalues) {
    const IntMatrix shifted = gm - lambda * IntMatrix::identity(2);
    const IntMatrix kernel = integer_left_kernel(shifted.transpose());
    if (kernel.rows() != 1) continue;
    IntMatrix v(1, 2);
    v(0, 0) = kernel(0, 0);
    v(0, 1) = kernel(0, 1);
    if (v(0, 1) < 0 || (v(0, 1) == 0 && v(0, 0) < 0)) v = -v;
    if (is_metabolizer(f, v)) out.push_back({v, lambda});
  }
  return out;
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  return a.cols() == b.cols() && hermite_normal_form(a) == hermite_normal_form(b);
}

namespace {

using Row = std::vector<std::int64_t>;

std::int64_t to_i64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(Errc::HeightTooLargeForBudget, "entry exceeds machine range");
  return z.get_si();
}

std::int64_t pair(const std::vector<Row>& w, const Row& a, const Row& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * w[i][j] * b[j];
  }
  return s;
}

// Hermite shape: pivot columns and pivot values; ranges of the remaining entries.
struct Shape {
  std::vector<std::size_t> cols;
  std::vector<long> pivots;
};

std::vector<std::pair<long, long>> row_ranges(const Shape& s, std::size_t i, std::size_t n,
                                              long height) {
  std::vector<std::pair<long, long>> r(n, {0, 0});
  r[s.cols[i]] = {s.pivots[i], s.pivots[i]};
  for (std::size_t j = s.cols[i] + 1; j < n; ++j) {
    const auto later = std::find(s.cols.begin() + static_cast<long>(i) + 1, s.cols.end(), j);
    if (later != s.cols.end()) {
      const long pk = s.pivots[static_cast<std::size_t>(later - s.cols.begin())];
      r[j] = {0, std::min(pk - 1, height)};
    } else {
      r[j] = {-height, height};
    }
  }
  return r;
}

std::vector<Row> expand(const std::vector<std::pair<long, long>>& ranges) {
  std::vector<Row> out;
  Row cur(ranges.size());
  for (std::size_t j = 0; j < ranges.size(); ++j) cur[j] = ranges[j].first;
  for (;;) {
    out.push_back(cur);
    std::size_t j = ranges.size();
    while (j > 0) {
      --j;
      if (cur[j] < ranges[j].second) {
        ++cur[j];
        break;
      }
      cur[j] = ranges[j].first;
      if (j == 0) return out;
    }
    if (ranges.empty()) return out;
  }
}

void for_each_shape(std::size_t n, std::size_t g, long height,
                    const std::function<void(const Shape&)>& fn) {
  std::vector<std::size_t> cols(g);
  std::iota(cols.begin(), cols.end(), 0);
  for (;;) {
    Shape s{cols, std::vector<long>(g, 1)};
    for (;;) {
      fn(s);
      std::size_t i = 0;
      while (i < g && s.pivots[i] == height) s.pivots[i++] = 1;
      if (i == g) break;
      ++s.pivots[i];
    }
    std::size_t i = g;
    while (i > 0 && cols[i - 1] == n - g + i - 1) --i;
    if (i == 0) return;
    ++cols[i - 1];
    for (std::size_t k = i; k < g; ++k) cols[k] = cols[k - 1] + 1;
  }
}

std::int64_t minor3(const Row& a, const Row& b, const Row& c, std::size_t i, std::size_t j,
                    std::size_t k) {
  return a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i]) +
         a[k] * (b[i] * c[j] - b[j] * c[i]);
}

Row apply(const std::vector<Row>& m, const Row& v) {
  Row out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

bool invariant(const std::vector<Row>& gs, const std::vector<Row>& rows) {
  const std::size_t n = gs.size();
  for (const auto& b : rows) {
    const Row v = apply(gs, b);
    if (rows.size() == 1) {
      if (b[0] * v[1] - b[1] * v[0] != 0) return false;
      continue;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (minor3(rows[0], rows[1], v, i, j, k) != 0) return false;
  }
  return true;
}

bool primitive(const std::vector<Row>& rows) {
  std::int64_t g = 0;
  if (rows.size() == 1) {
    for (auto v : rows[0]) g = std::gcd(g, v);
    return g == 1;
  }
  const std::size_t n = rows[0].size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      g = std::gcd(g, rows[0][i] * rows[1][j] - rows[0][j] * rows[1][i]);
  return g == 1;
}

}  // namespace

std::vector<Metabolizer> enumerate_metabolizers(const SeifertForm& f, long height,
                                                std::size_t budget) {
  const std::size_t g = f.genus();
  const std::size_t n = f.size();
  if (g > 2) throw Error(Errc::InvalidArgument, "metabolizer enumeration supports genus <= 2");
  if (height < 1) throw Error(Errc::InvalidArgument, "height must be positive");

  double total = 0;
  for_each_shape(n, g, height, [&](const Shape& s) {
    double count = 1;
    for (std::size_t i = 0; i < g; ++i)
      for (const auto& [lo, hi] : row_ranges(s, i, n, height))
        count *= static_cast<double>(hi - lo + 1);
    total += count;
  });
  if (total > static_cast<double>(budget))
    throw Error(Errc::HeightTooLargeForBudget,
                "height " + std::to_string(height) + " needs about " +
                    std::to_string(static_cast<long long>(total)) + " candidates");

  const IntMatrix wz = f.skew();
  const IntMatrix gz = isometric_structure(f);
  std::vector<Row> w(n, Row(n)), gs(n, Row(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      w[i][j] = to_i64(wz(i, j));
      gs[i][j] = to_i64(gz(i, j));
    }

  std::vector<Metabolizer> out;
  for_each_shape(n, g, height, [&](const Shape& s) {
    std::vector<std::vector<Row>> cands;
    for (std::size_t i = 0; i < g; ++i) cands.push_back(expand(row_ranges(s, i, n, height)));
    std::vector<Row> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == g) {
        if (!primitive(chosen) || !invariant(gs, chosen)) return;
        IntMatrix basis(g, n);
        for (std::size_t r = 0; r < g; ++r)
          for (std::size_t c = 0; c < n; ++c) basis(r, c) = static_cast<long>(chosen[r][c]);
        if (is_metabolizer(f, basis)) out.push_back({basis, std::nullopt});
        return;
      }
      for (const auto& row : cands[i]) {
        bool ok = true;
        for (const auto& prev : chosen)
          if (pair(w, prev, row) != 0) {
            ok = false;
            break;
          }
        if (!ok) continue;
        chosen.push_back(row);
        rec(i + 1);
        chosen.pop_back();
      }
    };
    rec(0);
  });
  return out;
}

bool alexander_coprime(const IntPolynomial& p1, const IntPolynomial& p2) {
  if (p1.is_zero() || p2.is_zero()) throw Error(Errc::ZeroPolynomial, "coprimality of zero");
  return gcd(to_rational(strip_x_power(p1)), to_rational(strip_x_power(p2))).degree() == 0;
}

BezoutRelation integer_bezout(const IntPolynomial& phi1, const IntPolynomial& phi2) {
  if (phi1.is_zero() || phi2.is_zero()) throw Error(Errc::ZeroPolynomial, "Bezout with zero");
  RatPolynomial u, v;
  const RatPolynomial g = extended_gcd(to_rational(phi1), to_rational(phi2), u, v);
  if (g.degree() != 0) throw Error(Errc::NotCoprime, "polynomials share a factor over Q");
  Integer den = 1;
  for (const auto* p : {&u, &v})
    for (const auto& c : p->coeffs()) den = lcm(den, Integer(c.get_den()));
  Integer content = den;
  for (const auto* p : {&u, &v})
    for (const auto& c : p->coeffs()) content = gcd(content, Integer(c * den));
  const Integer scale = den / content;
  BezoutRelation out;
  out.u1 = integral(Rational(scale) * u);
  out.u2 = integral(Rational(scale) * v);
  out.c = scale;
  return out;
}

namespace {

IntMatrix columns(const IntMatrix& m, std::size_t from, std::size_t to) {
  IntMatrix out(m.rows(), to - from);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = from; j < to; ++j) out(i, j - from) = m(i, j);
  return out;
}

IntMatrix intersect_factor(const IntMatrix& z, std::size_t keep_from, std::size_t keep_to) {
  // Combinations of the basis rows that vanish outside the kept block.
  IntMatrix outside(z.rows(), z.cols() - (keep_to - keep_from));
  for (std::size_t i = 0; i < z.rows(); ++i) {
    std::size_t c = 0;
    for (std::size_t j = 0; j < z.cols(); ++j)
      if (j < keep_from || j >= keep_to) outside(i, c++) = z(i, j);
  }
  const IntMatrix k = integer_left_kernel(outside);
  if (k.rows() == 0) return IntMatrix(0, keep_to - keep_from);
  return hermite_normal_form(columns(k * z, keep_from, keep_to));
}

}  // namespace

std::pair<Metabolizer, Metabolizer> split_metabolizer(const SeifertForm& f1, const SeifertForm& f2,
                                                      const Metabolizer& z) {
  if (!alexander_coprime(alexander(f1), alexander(f2)))
    throw Error(Errc::HypothesisViolated, "Alexander polynomials are not coprime");
  if (determinant(f1.matrix()) == 0 && determinant(f2.matrix()) == 0)
    throw Error(Errc::HypothesisViolated, "both Seifert matrices are singular");
  const SeifertForm sum = block_sum(f1, f2);
  if (!is_metabolizer(sum, z.basis))
    throw Error(Errc::InvalidMetabolizer, "input is not a metabolizer of the block sum");

  const std::size_t n1 = f1.size();
  const std::size_t n = sum.size();
  const IntMatrix z1 = intersect_factor(z.basis, 0, n1);
  const IntMatrix z2 = intersect_factor(z.basis, n1, n);

  IntMatrix joined(z1.rows() + z2.rows(), n);
  for (std::size_t i = 0; i < z1.rows(); ++i)
    for (std::size_t j = 0; j < n1; ++j) joined(i, j) = z1(i, j);
  for (std::size_t i = 0; i < z2.rows(); ++i)
    for (std::size_t j = 0; j < n - n1; ++j) joined(z1.rows() + i, n1 + j) = z2(i, j);
  if (!same_lattice(joined, z.basis))
    throw Error(Errc::SplitFailed, "Z is not the direct sum of its intersections");
  if (!is_metabolizer(f1, z1) || !is_metabolizer(f2, z2))
    throw Error(Errc::SplitFailed, "an intersection is not a metabolizer of its factor");
  return {Metabolizer{z1, std::nullopt}, Metabolizer{z2, std::nullopt}};
}

}  // namespace concord
