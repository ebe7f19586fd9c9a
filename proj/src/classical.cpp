#include "dyadisc/classical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dyadisc/summation.hpp"

namespace dyadisc {

namespace mp = boost::multiprecision;

namespace {

void require_points(const PointMultiset& points, const char* who) {
  if (points.empty()) {
    throw std::invalid_argument(std::string(who) + ": empty point multiset");
  }
}

std::vector<BigInt> breaks_of(const std::vector<BigInt>& coordinates, const BigInt& one) {
  std::vector<BigInt> out = coordinates;
  out.emplace_back(0);
  out.push_back(one);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t rank_of(const std::vector<BigInt>& sorted, const BigInt& value) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), value) - sorted.begin());
}

BigInt binomial(int n, int k) {
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

} // namespace

CellGrid::CellGrid(const PointMultiset& points)
    : resolution_(points.resolution()), point_count_(points.size()) {
  const BigInt one = BigInt(1) << static_cast<unsigned>(resolution_);
  std::vector<BigInt> xs;
  std::vector<BigInt> ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const auto& z : points) {
    xs.push_back(z.x.numerator_at(resolution_));
    ys.push_back(z.y.numerator_at(resolution_));
  }
  x_breaks_ = breaks_of(xs, one);
  y_breaks_ = breaks_of(ys, one);

  const std::size_t nx = x_breaks_.size();
  const std::size_t ny = y_breaks_.size();
  // histogram over break ranks, then 2D prefix sums: the open cell (i, j)
  // counts points with x-rank <= i and y-rank <= j
  std::vector<std::uint64_t> hist(nx * ny, 0);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    ++hist[rank_of(x_breaks_, xs[k]) * ny + rank_of(y_breaks_, ys[k])];
  }
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      std::uint64_t v = hist[i * ny + j];
      if (i > 0) {
        v += hist[(i - 1) * ny + j];
      }
      if (j > 0) {
        v += hist[i * ny + j - 1];
      }
      if (i > 0 && j > 0) {
        v -= hist[(i - 1) * ny + j - 1];
      }
      hist[i * ny + j] = v;
    }
  }
  counts_.resize(columns() * rows());
  for (std::size_t i = 0; i < columns(); ++i) {
    for (std::size_t j = 0; j < rows(); ++j) {
      counts_[i * rows() + j] = hist[i * ny + j];
    }
  }
}

DyadicRational local_discrepancy(const PointMultiset& points, const Point& t) {
  require_points(points, "local_discrepancy");
  const DyadicRational zero;
  const DyadicRational one(1);
  if (t.x < zero || t.x > one || t.y < zero || t.y > one) {
    throw std::domain_error("local_discrepancy: t outside [0,1]^2");
  }
  std::uint64_t inside = 0;
  for (const auto& z : points) {
    if (z.x < t.x && z.y < t.y) {
      ++inside;
    }
  }
  return divide_by_power_of_two_count(DyadicRational(static_cast<std::int64_t>(inside)), points.size()) -
         t.x * t.y;
}

Rational l2_warnock(const PointMultiset& points) {
  require_points(points, "l2_warnock");
  const int res = points.resolution();
  const BigInt one = BigInt(1) << static_cast<unsigned>(res);
  const BigInt one_sq = one * one;

  struct Node {
    BigInt x;
    BigInt y;
  };
  std::vector<Node> nodes;
  nodes.reserve(points.size());
  for (const auto& z : points) {
    nodes.push_back({z.x.numerator_at(res), z.y.numerator_at(res)});
  }

  // sum_z prod_i (1 - z_i^2), numerator over 2^{4 res}
  BigInt single = 0;
  for (const auto& node : nodes) {
    single += (one_sq - node.x * node.x) * (one_sq - node.y * node.y);
  }

  // sum over ordered pairs of prod_i (1 - max(z_i, z'_i)), numerator over 2^{2 res}
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.x < b.x; });
  std::vector<BigInt> ys;
  ys.reserve(nodes.size());
  for (const auto& node : nodes) {
    ys.push_back(node.y);
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  // Fenwick trees over y-rank: point counts and sums of (1 - y)
  const std::size_t m = ys.size();
  std::vector<std::uint64_t> fen_count(m + 1, 0);
  std::vector<BigInt> fen_rest(m + 1, BigInt(0));
  std::uint64_t inserted = 0;
  BigInt rest_total = 0;
  auto prefix = [&](std::size_t rank, std::uint64_t& count, BigInt& rest) {
    count = 0;
    rest = 0;
    for (std::size_t i = rank + 1; i > 0; i -= i & (~i + 1)) {
      count += fen_count[i];
      rest += fen_rest[i];
    }
  };

  BigInt off_diagonal = 0;
  BigInt diagonal = 0;
  for (const auto& node : nodes) {
    const std::size_t rank = rank_of(ys, node.y);
    const BigInt rest_y = one - node.y;
    diagonal += (one - node.x) * rest_y;
    // earlier nodes have x' <= x, so max(x, x') = x
    std::uint64_t below = 0;
    BigInt below_rest;
    prefix(rank, below, below_rest);
    const BigInt above_rest = rest_total - below_rest;
    off_diagonal += (one - node.x) * (rest_y * below + above_rest);

    for (std::size_t i = rank + 1; i <= m; i += i & (~i + 1)) {
      ++fen_count[i];
      fen_rest[i] += rest_y;
    }
    ++inserted;
    rest_total += rest_y;
  }
  const BigInt pairs = diagonal + 2 * off_diagonal;

  const BigInt n = static_cast<std::uint64_t>(points.size());
  Rational result = Rational(1, 9);
  result -= Rational(2 * single, 4 * n * one_sq * one_sq);
  result += Rational(pairs, n * n * one_sq);
  return result;
}

Rational lp_exact_even(const PointMultiset& points, int p) {
  require_points(points, "lp_exact_even");
  if (p < 2 || p % 2 != 0) {
    throw std::invalid_argument("lp_exact_even: p must be a positive even integer; use lp_numeric");
  }
  const CellGrid grid(points);
  const int res = grid.resolution();
  const auto n_cols = grid.columns();
  const auto n_rows = grid.rows();

  // On cell (i, j): D = A/N - t1 t2, so
  //   int D^p = sum_k C(p,k) (-1)^k A^{p-k} dX_k dY_k / (N^{p-k} (k+1)^2 2^{2 res (k+1)})
  // with dX_k = X_{i+1}^{k+1} - X_i^{k+1} on the integer grid.
  auto powers_diff = [](const std::vector<BigInt>& breaks, int k) {
    std::vector<BigInt> out(breaks.size() - 1);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
      out[i] = mp::pow(breaks[i + 1], static_cast<unsigned>(k + 1)) - mp::pow(breaks[i], static_cast<unsigned>(k + 1));
    }
    return out;
  };

  const BigInt n = static_cast<std::uint64_t>(points.size());
  Rational result = 0;
  for (int k = 0; k <= p; ++k) {
    const auto dx = powers_diff(grid.x_breaks(), k);
    const auto dy = powers_diff(grid.y_breaks(), k);
    BigInt sum_k = 0;
    for (std::size_t i = 0; i < n_cols; ++i) {
      BigInt column = 0;
      for (std::size_t j = 0; j < n_rows; ++j) {
        const std::uint64_t a = grid.count(i, j);
        if (p - k > 0 && a == 0) {
          continue;
        }
        column += mp::pow(BigInt(a), static_cast<unsigned>(p - k)) * dy[j];
      }
      sum_k += column * dx[i];
    }
    const BigInt denominator = mp::pow(n, static_cast<unsigned>(p - k)) * (k + 1) * (k + 1)
                               << static_cast<unsigned>(2 * res * (k + 1));
    Rational term(binomial(p, k) * sum_k, denominator);
    if (k % 2 == 1) {
      result -= term;
    } else {
      result += term;
    }
  }
  return result;
}

DyadicRational star_discrepancy(const PointMultiset& points) {
  require_points(points, "star_discrepancy");
  const int log2_n = exact_log2(points.size());
  if (log2_n < 0) {
    throw std::domain_error("star_discrepancy: point count must be a power of two");
  }
  const CellGrid grid(points);
  const int res = grid.resolution();
  // |A/N - XY/2^{2res}| = |A 2^{2res} - N X Y| / (N 2^{2res})
  const BigInt n = static_cast<std::uint64_t>(points.size());
  const auto& xb = grid.x_breaks();
  const auto& yb = grid.y_breaks();
  BigInt best = 0;
  for (std::size_t i = 0; i < grid.columns(); ++i) {
    for (std::size_t j = 0; j < grid.rows(); ++j) {
      const BigInt counted = BigInt(grid.count(i, j)) << static_cast<unsigned>(2 * res);
      // D is monotone in t within the closed cell, so the extremes sit at
      // the lower-left and upper-right corners.
      const BigInt low = mp::abs(counted - n * xb[i] * yb[j]);
      const BigInt high = mp::abs(counted - n * xb[i + 1] * yb[j + 1]);
      best = std::max({best, low, high});
    }
  }
  return DyadicRational(best, 2 * static_cast<std::int64_t>(res) + log2_n);
}

NumericLpEstimate lp_numeric(const PointMultiset& points, double p, int subdivisions) {
  require_points(points, "lp_numeric");
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("lp_numeric: p must be a finite real >= 1");
  }
  if (subdivisions < 1) {
    throw std::invalid_argument("lp_numeric: subdivisions must be positive");
  }
  const CellGrid grid(points);
  const double scale = std::ldexp(1.0, -grid.resolution());
  std::vector<double> xb;
  std::vector<double> yb;
  for (const auto& b : grid.x_breaks()) {
    xb.push_back(b.convert_to<double>() * scale);
  }
  for (const auto& b : grid.y_breaks()) {
    yb.push_back(b.convert_to<double>() * scale);
  }
  const double n = static_cast<double>(points.size());
  CompensatedSum sum;
  NumericLpEstimate out;
  out.subdivisions = subdivisions;
  for (std::size_t i = 0; i < grid.columns(); ++i) {
    const double hx = (xb[i + 1] - xb[i]) / subdivisions;
    for (std::size_t j = 0; j < grid.rows(); ++j) {
      const double hy = (yb[j + 1] - yb[j]) / subdivisions;
      const double c = static_cast<double>(grid.count(i, j)) / n;
      CompensatedSum cell;
      for (int a = 0; a < subdivisions; ++a) {
        const double t1 = xb[i] + (a + 0.5) * hx;
        for (int b = 0; b < subdivisions; ++b) {
          const double t2 = yb[j] + (b + 0.5) * hy;
          cell.add(std::pow(std::abs(c - t1 * t2), p));
        }
      }
      sum.add(cell.value() * hx * hy);
      out.sample_count += static_cast<std::size_t>(subdivisions) * static_cast<std::size_t>(subdivisions);
    }
  }
  out.integral_of_power = sum.value();
  out.norm = std::pow(out.integral_of_power, 1.0 / p);
  return out;
}

} // namespace dyadisc
