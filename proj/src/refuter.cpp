#include "xorcert/refuter.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

#include "xorcert/errors.hpp"
#include "xorcert/rounding.hpp"
#include "xorcert/subset_rank.hpp"

namespace xorcert {

using rounding::add_up;
using rounding::Interval;
using rounding::mul_up;

Dyadic KikuchiOperator::entry(std::uint64_t row, std::uint64_t col) const {
  const auto begin = column.begin() + static_cast<std::ptrdiff_t>(row_start[row]);
  const auto end = column.begin() + static_cast<std::ptrdiff_t>(row_start[row + 1]);
  auto it = std::lower_bound(begin, end, static_cast<std::uint32_t>(col));
  if (it == end || *it != col) return Dyadic{};
  return value[static_cast<std::size_t>(it - column.begin())];
}

Rational KikuchiOperator::gamma(std::uint64_t row) const {
  return Rational(static_cast<std::int64_t>(degree[row])) + average_degree;
}

Dyadic KikuchiOperator::quadratic_form(std::span<const Sign> x) const {
  if (x.size() != n) throw ValidationError("assignment length mismatch");
  SubsetIndexer idx(n, r);
  std::vector<Sign> lifted(dim);
  std::vector<std::uint32_t> subset(r);
  for (std::uint64_t s = 0; s < dim; ++s) {
    idx.unrank(s, subset);
    Sign v = 1;
    for (auto i : subset) v = static_cast<Sign>(v * x[i]);
    lifted[s] = v;
  }
  Dyadic total;
  for (std::uint64_t s = 0; s < dim; ++s)
    for (auto p = row_start[s]; p < row_start[s + 1]; ++p)
      total += lifted[s] * lifted[column[p]] > 0 ? value[p] : -value[p];
  return total;
}

std::uint64_t KikuchiOperator::degree_trace() const {
  std::uint64_t s = 0;
  for (auto d : degree) s += d;
  return s;
}

namespace {

// Advances a sorted q-combination of [0, size); false after the last one.
bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t size) {
  const std::size_t q = c.size();
  for (std::size_t i = q; i-- > 0;) {
    if (c[i] < size - q + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < q; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t checked_binomial(unsigned n, unsigned k) {
  try {
    return binomial(n, k);
  } catch (const std::overflow_error&) {
    throw CapExceeded("C(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows");
  }
}

}  // namespace

KikuchiOperator build_kikuchi(const XorInstance& inst, unsigned r, std::uint64_t max_dimension,
                              std::uint64_t max_pairs) {
  validate_instance(inst);
  if (inst.scheme.mixed_arity) throw ValidationError("mixed-arity instance; split by arity first");
  const auto k = static_cast<unsigned>(inst.scheme.arity);
  const std::uint32_t n = inst.n();
  if (k % 2 != 0) throw ValidationError("Kikuchi construction needs even arity, got " + std::to_string(k));
  if (r < k / 2 || r + k / 2 > n)
    throw ValidationError("level r = " + std::to_string(r) + " outside [" + std::to_string(k / 2) + ", " +
                          std::to_string(n >= k / 2 ? n - k / 2 : 0) + "]");

  KikuchiOperator op;
  op.n = n;
  op.r = r;
  op.k = k;
  op.dim = checked_binomial(n, r);
  if (op.dim > max_dimension || op.dim > 0xffffffffull)
    throw CapExceeded("Kikuchi dimension " + std::to_string(op.dim) + " above cap " + std::to_string(max_dimension));
  op.edge_multiplier = checked_binomial(k, k / 2) * checked_binomial(n - k, r - k / 2);
  for (std::size_t c = 0; c < inst.m(); ++c) op.m += !inst.weights()[c].is_zero();
  if (op.m > 0 && op.edge_multiplier > max_pairs / op.m)
    throw CapExceeded("Kikuchi build needs " + std::to_string(op.m) + " x " + std::to_string(op.edge_multiplier) +
                      " pairs, above cap");
  op.average_degree = Rational(static_cast<std::int64_t>(op.m * op.edge_multiplier)) /
                      Rational(static_cast<std::int64_t>(op.dim));

  struct Triplet {
    std::uint64_t row;
    std::uint32_t col;
    Dyadic v;
  };
  std::vector<Triplet> triplets;
  triplets.reserve(op.m * op.edge_multiplier);
  op.degree.assign(op.dim, 0);

  const SubsetIndexer idx(n, r);
  const unsigned half = k / 2, outside_size = r - half;
  std::vector<std::uint32_t> outside_pool, combo(outside_size), s_set, t_set;
  for (std::size_t c = 0; c < inst.m(); ++c) {
    const auto& w = inst.weights()[c];
    if (w.is_zero()) continue;
    const Dyadic signed_w = inst.rhs[c] > 0 ? w : -w;
    const auto& e = inst.edges()[c];
    outside_pool.clear();
    for (std::uint32_t v = 0, p = 0; v < n; ++v) {
      if (p < e.size() && e[p] == v) {
        ++p;
        continue;
      }
      outside_pool.push_back(v);
    }
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      if (static_cast<unsigned>(std::popcount(mask)) != half) continue;
      for (unsigned i = 0; i < outside_size; ++i) combo[i] = i;
      do {
        s_set.clear();
        t_set.clear();
        for (unsigned i = 0; i < k; ++i) (mask >> i & 1u ? s_set : t_set).push_back(e[i]);
        for (auto i : combo) {
          s_set.push_back(outside_pool[i]);
          t_set.push_back(outside_pool[i]);
        }
        std::sort(s_set.begin(), s_set.end());
        std::sort(t_set.begin(), t_set.end());
        const auto row = idx.rank(s_set);
        triplets.push_back({row, static_cast<std::uint32_t>(idx.rank(t_set)), signed_w});
        ++op.degree[row];
      } while (outside_size > 0 && next_combination(combo, static_cast<std::uint32_t>(outside_pool.size())));
    }
  }

  std::sort(triplets.begin(), triplets.end(),
            [](const Triplet& a, const Triplet& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
  op.row_start.assign(op.dim + 1, 0);
  for (std::size_t i = 0; i < triplets.size();) {
    std::size_t j = i;
    Dyadic sum;
    while (j < triplets.size() && triplets[j].row == triplets[i].row && triplets[j].col == triplets[i].col)
      sum += triplets[j++].v;
    if (!sum.is_zero()) {
      op.column.push_back(triplets[i].col);
      op.value.push_back(sum);
      ++op.row_start[triplets[i].row + 1];
    }
    i = j;
  }
  for (std::uint64_t s = 0; s < op.dim; ++s) op.row_start[s + 1] += op.row_start[s];
  return op;
}

namespace {

struct GammaBounds {
  std::vector<double> lo, hi;          // Gamma_SS
  std::vector<double> inv_lo, inv_hi;  // 1 / Gamma_SS
};

GammaBounds gamma_bounds(const KikuchiOperator& op) {
  GammaBounds g;
  const double d_lo = rounding::rational_down(op.average_degree), d_hi = rounding::rational_up(op.average_degree);
  g.lo.resize(op.dim);
  g.hi.resize(op.dim);
  g.inv_lo.resize(op.dim);
  g.inv_hi.resize(op.dim);
  for (std::uint64_t s = 0; s < op.dim; ++s) {
    const auto deg = static_cast<double>(op.degree[s]);
    g.lo[s] = rounding::add_down(deg, d_lo);
    g.hi[s] = rounding::add_up(deg, d_hi);
    g.inv_lo[s] = rounding::down(1.0 / g.hi[s]);
    g.inv_hi[s] = rounding::up(1.0 / g.lo[s]);
  }
  return g;
}

Interval entry_interval(const Dyadic& v) { return {rounding::dyadic_down(v), rounding::dyadic_up(v)}; }

}  // namespace

double trace_certificate(const KikuchiOperator& op, unsigned ell, std::uint64_t work_cap, unsigned* used_ell) {
  if (ell == 0 || ell % 2 != 0) throw ValidationError("trace power must be even and positive, got " + std::to_string(ell));
  unsigned half = ell / 2;
  const auto work = [&](unsigned h) {
    return static_cast<long double>(op.dim) * h * static_cast<long double>(op.nnz() + op.dim);
  };
  while (half > 1 && work(half) > static_cast<long double>(work_cap)) --half;
  if (used_ell) *used_ell = 2 * half;
  if (op.nnz() == 0) return 0.0;
  const auto g = gamma_bounds(op);

  if (half == 1) {
    // trace(B^2) = sum_{S,T} A_ST^2 / (Gamma_S Gamma_T)
    double total = 0.0;
    for (std::uint64_t s = 0; s < op.dim; ++s)
      for (auto p = op.row_start[s]; p < op.row_start[s + 1]; ++p) {
        const double sq = entry_interval(op.value[p]).square_up();
        total = add_up(total, mul_up(sq, mul_up(g.inv_hi[s], g.inv_hi[op.column[p]])));
      }
    return rounding::root_up(total, 2);
  }

  // trace(B^(2h)) = sum_i (1/Gamma_i) sum_j Gamma_j ((M^h e_i)_j)^2, M = Gamma^-1 A
  std::vector<Interval> entries(op.nnz());
  for (std::size_t p = 0; p < op.nnz(); ++p) entries[p] = entry_interval(op.value[p]);
  std::vector<Interval> v(op.dim), next(op.dim);
  double total = 0.0;
  for (std::uint64_t i = 0; i < op.dim; ++i) {
    std::fill(v.begin(), v.end(), Interval{});
    v[i] = Interval::point(1.0);
    for (unsigned step = 0; step < half; ++step) {
      for (std::uint64_t s = 0; s < op.dim; ++s) {
        Interval acc{};
        for (auto p = op.row_start[s]; p < op.row_start[s + 1]; ++p) {
          const auto& x = v[op.column[p]];
          if (x.lo == 0.0 && x.hi == 0.0) continue;
          acc = acc + entries[p] * x;
        }
        next[s] = acc * Interval{g.inv_lo[s], g.inv_hi[s]};
      }
      std::swap(v, next);
    }
    double inner = 0.0;
    for (std::uint64_t j = 0; j < op.dim; ++j) inner = add_up(inner, mul_up(g.hi[j], v[j].square_up()));
    total = add_up(total, mul_up(g.inv_hi[i], inner));
  }
  return rounding::root_up(total, 2 * half);
}

std::optional<double> spectral_certificate(const KikuchiOperator& op, std::uint64_t max_dimension) {
  if (op.dim > max_dimension) return std::nullopt;
  if (op.nnz() == 0) return 0.0;
  const auto dim = static_cast<Eigen::Index>(op.dim);
  std::vector<double> gamma(op.dim);
  for (std::uint64_t s = 0; s < op.dim; ++s) gamma[s] = op.gamma(s).numerator() == 0 ? 0.0 : boost::rational_cast<double>(op.gamma(s));

  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(dim, dim);
  for (std::uint64_t s = 0; s < op.dim; ++s)
    for (auto p = op.row_start[s]; p < op.row_start[s + 1]; ++p) {
      const auto t = op.column[p];
      if (t < s) continue;
      const double v = op.value[p].to_double() / std::sqrt(gamma[s] * gamma[t]);
      b(static_cast<Eigen::Index>(s), t) = v;
      b(t, static_cast<Eigen::Index>(s)) = v;
    }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
  if (solver.info() != Eigen::Success) return std::nullopt;
  const Eigen::MatrixXd& vecs = solver.eigenvectors();
  const Eigen::VectorXd& vals = solver.eigenvalues();
  const double lambda = vals.cwiseAbs().maxCoeff();

  constexpr double u = 0x1p-53;
  const double nd = static_cast<double>(dim);
  const auto gamma_n = [&](double count) { return count * u / (1.0 - count * u) * 1.01; };

  const double b_frob = rounding::up(b.norm() * (1.0 + gamma_n(nd * nd + 2)));
  const double v_frob = rounding::up(vecs.norm() * (1.0 + gamma_n(nd * nd + 2)));

  // rho >= ||B V - V Lambda||_F, floating error of the products included.
  const Eigen::MatrixXd residual = b * vecs - vecs * vals.asDiagonal();
  double rho = rounding::up(residual.norm() * (1.0 + gamma_n(nd * nd + 2)));
  rho = add_up(rho, mul_up(gamma_n(nd + 2), mul_up(v_frob, add_up(b_frob, lambda))));

  // e >= ||V^T V - I||_F
  const Eigen::MatrixXd gram = vecs.transpose() * vecs - Eigen::MatrixXd::Identity(dim, dim);
  double e = rounding::up(gram.norm() * (1.0 + gamma_n(nd * nd + 2)));
  e = add_up(e, mul_up(gamma_n(nd + 1), add_up(mul_up(v_frob, v_frob), std::sqrt(nd) * (1.0 + u))));
  if (!(e < 0.5)) return std::nullopt;

  // ||B~|| <= (lambda sqrt(1+e) + rho) / sqrt(1-e)
  double bound = add_up(mul_up(lambda, rounding::sqrt_up(add_up(1.0, e))), rho);
  bound = rounding::div_up(bound, rounding::sqrt_down(rounding::add_down(1.0, -e)));

  // Entry rounding: each B~ entry is within a relative 16u of the exact one.
  bound = add_up(bound, mul_up(16.0 * u, b_frob) * 1.01);
  return bound;
}

const char* to_string(RefuteMode mode) {
  switch (mode) {
    case RefuteMode::kTrace: return "trace";
    case RefuteMode::kSpectral: return "spectral";
    case RefuteMode::kAuto: return "auto";
  }
  return "?";
}

RefuteMode parse_refute_mode(const std::string& text) {
  if (text == "trace") return RefuteMode::kTrace;
  if (text == "spectral") return RefuteMode::kSpectral;
  if (text == "auto") return RefuteMode::kAuto;
  throw ValidationError("unknown refute mode '" + text + "'");
}

unsigned default_level(unsigned k, std::uint32_t n) {
  const unsigned r = k / 2;
  return std::min<unsigned>(r, n >= r ? n - r : 0);
}

unsigned default_power(unsigned r, std::uint32_t n) {
  if (n <= 1 || r == 0) return 2;
  return std::max(2u, 2 * static_cast<unsigned>(std::ceil(r * std::log(static_cast<double>(n)))));
}

namespace {

double trivial_up(const XorInstance& inst) { return rounding::rational_up(inst.trivial_bound()); }

Certificate uncertain(const XorInstance& inst, std::string mode, std::string why) {
  Certificate c;
  c.mode = std::move(mode);
  c.bound = inst.m() == 0 ? 0.0 : trivial_up(inst);
  c.certified = false;
  c.label = std::move(why);
  return c;
}

Certificate direct(double bound) {
  Certificate c;
  c.mode = "direct";
  c.bound = bound;
  return c;
}

bool level_valid(unsigned k, std::uint32_t n, unsigned r) { return r >= k / 2 && r + k / 2 <= n; }

Certificate refute_uniform(const XorInstance& inst, const RefuteParams& params);

Certificate refute_even(const XorInstance& inst, const RefuteParams& params) {
  const auto k = static_cast<unsigned>(inst.scheme.arity);
  const std::uint32_t n = inst.n();
  const unsigned r = params.r && level_valid(k, n, *params.r) ? *params.r : default_level(k, n);
  const unsigned ell = params.ell ? *params.ell : default_power(r, n);
  KikuchiOperator op;
  try {
    op = build_kikuchi(inst, r, params.max_dimension);
  } catch (const CapExceeded& e) {
    return uncertain(inst, "trace", e.what());
  }
  Certificate best;
  best.r = r;
  best.certified = false;
  best.bound = std::numeric_limits<double>::infinity();
  if (params.mode != RefuteMode::kSpectral) {
    unsigned used = 0;
    const double tb = trace_certificate(op, ell, params.trace_work_cap, &used);
    best.mode = "trace";
    best.ell = used;
    best.bound = mul_up(2.0, tb);
    best.certified = true;
  }
  const std::uint64_t cap =
      params.mode == RefuteMode::kAuto ? params.auto_spectral_max_dimension : params.spectral_max_dimension;
  if (params.mode != RefuteMode::kTrace) {
    if (auto sb = spectral_certificate(op, cap)) {
      const double bound = mul_up(2.0, *sb);
      if (!best.certified || bound < best.bound) {
        best.mode = "spectral";
        best.ell = 0;
        best.bound = bound;
        best.certified = true;
      }
    }
  }
  if (!best.certified) {
    auto c = uncertain(inst, "spectral", "dimension above spectral cap or solver failure");
    c.r = r;
    return c;
  }
  return best;
}

Certificate refute_odd(const XorInstance& inst, const RefuteParams& params) {
  const auto red = odd_to_even(inst);
  Certificate out;
  out.mode = "odd";
  if (red.m == 0 || red.groups == 0) return out;
  double total = rounding::dyadic_up(red.diag_term);
  for (const auto& bucket : red.buckets) {
    RefuteParams child_params = params;
    child_params.clamp_trivial = true;
    auto child = refute(bucket, child_params);
    child.label = "pairs |e|=" + std::to_string(bucket.scheme.arity);
    total = add_up(total, mul_up(2.0 * static_cast<double>(bucket.m()), child.bound));
    out.certified = out.certified && child.certified;
    out.r = std::max(out.r, child.r);
    out.ell = std::max(out.ell, child.ell);
    out.breakdown.push_back(std::move(child));
  }
  const double md = static_cast<double>(red.m);
  const double scale = rounding::div_up(static_cast<double>(red.groups), rounding::down(md * md));
  out.bound = rounding::sqrt_up(mul_up(scale, total));
  return out;
}

Certificate refute_uniform(const XorInstance& inst, const RefuteParams& params) {
  const auto k = static_cast<unsigned>(inst.scheme.arity);
  const auto m = static_cast<std::int64_t>(inst.m());
  if (k == 0) {
    Dyadic s;
    for (std::size_t c = 0; c < inst.m(); ++c) s += inst.rhs[c] > 0 ? inst.weights()[c] : -inst.weights()[c];
    return direct(rounding::rational_up(s.abs().to_rational() / m));
  }
  if (k == 1) {
    std::map<std::uint32_t, Dyadic> per_var;
    for (std::size_t c = 0; c < inst.m(); ++c)
      per_var[inst.edges()[c][0]] += inst.rhs[c] > 0 ? inst.weights()[c] : -inst.weights()[c];
    Dyadic s;
    for (const auto& [_, v] : per_var) s += v.abs();
    return direct(rounding::rational_up(s.to_rational() / m));
  }
  if (k % 2 == 0) return refute_even(inst, params);
  return refute_odd(inst, params);
}

XorInstance strip_zero_weights(const XorInstance& inst) {
  XorInstance out;
  out.scheme.hypergraph.n = inst.n();
  out.scheme.arity = inst.scheme.arity;
  out.scheme.mixed_arity = inst.scheme.mixed_arity;
  for (std::size_t c = 0; c < inst.m(); ++c) {
    if (inst.weights()[c].is_zero()) continue;
    out.scheme.hypergraph.edges.push_back(inst.edges()[c]);
    out.scheme.weights.push_back(inst.weights()[c]);
    out.rhs.push_back(inst.rhs[c]);
  }
  return out;
}

double scale_up(double bound, std::size_t part, std::size_t whole) {
  if (part == whole) return bound;
  return mul_up(bound, rounding::rational_up(Rational(static_cast<std::int64_t>(part), static_cast<std::int64_t>(whole))));
}

bool uniform_arity(const XorInstance& inst) {
  for (const auto& e : inst.edges())
    if (static_cast<int>(e.size()) != inst.scheme.arity) return false;
  return true;
}

}  // namespace

Certificate refute(const XorInstance& inst, const RefuteParams& params) {
  validate_instance(inst);
  const std::size_t m = inst.m();
  if (m == 0) return direct(0.0);

  if (params.split_unit_weights) {
    RefuteParams inner = params;
    inner.split_unit_weights = false;
    XorInstance split;
    try {
      split = split_into_units(inst);
    } catch (const CapExceeded& e) {
      return uncertain(inst, "split", e.what());
    }
    auto child = refute(split, inner);
    Certificate out = child;
    out.bound = scale_up(child.bound, split.m(), m);
    out.label = "unit split x" + std::to_string(split.m()) + "/" + std::to_string(m);
    return out;
  }

  Certificate cert;
  if (inst.scheme.mixed_arity || !uniform_arity(inst)) {
    cert.mode = "mixed";
    double total = 0.0;
    for (auto& [arity, part] : split_by_arity(inst)) {
      auto child = refute(part, params);
      child.label = "arity " + std::to_string(arity);
      total = add_up(total, scale_up(child.bound, part.m(), m));
      cert.certified = cert.certified && child.certified;
      cert.breakdown.push_back(std::move(child));
    }
    cert.bound = total;
  } else {
    const auto stripped = strip_zero_weights(inst);
    if (stripped.m() == 0) {
      cert = direct(0.0);
    } else {
      cert = refute_uniform(stripped, params);
      cert.bound = scale_up(cert.bound, stripped.m(), m);
    }
  }
  if (params.clamp_trivial) cert.bound = std::min(cert.bound, trivial_up(inst));
  return cert;
}

OddReduction odd_to_even(const XorInstance& inst) {
  validate_instance(inst);
  const int k = inst.scheme.arity;
  if (inst.scheme.mixed_arity || k % 2 == 0 || k < 3)
    throw ValidationError("odd_to_even needs a uniform odd arity >= 3");
  OddReduction red;
  red.m = inst.m();
  std::map<std::uint32_t, std::vector<std::size_t>> groups;
  for (std::size_t c = 0; c < inst.m(); ++c)
    if (!inst.weights()[c].is_zero()) groups[inst.edges()[c][0]].push_back(c);
  red.groups = groups.size();

  std::map<int, XorInstance> buckets;
  Edge diff;
  for (const auto& [_, members] : groups) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      const auto ca = members[a];
      const auto& wa = inst.weights()[ca];
      red.diag_term += wa * wa;
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const auto cb = members[b];
        const auto& ea = inst.edges()[ca];
        const auto& eb = inst.edges()[cb];
        diff.clear();
        std::set_symmetric_difference(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(diff));
        Dyadic w = wa * inst.weights()[cb];
        Sign s = static_cast<Sign>(inst.rhs[ca] * inst.rhs[cb]);
        if (diff.empty()) {
          red.diag_term += s > 0 ? Dyadic(2) * w : Dyadic(-2) * w;
          continue;
        }
        if (w.sign() < 0) {
          w = -w;
          s = static_cast<Sign>(-s);
        }
        auto [it, fresh] = buckets.try_emplace(static_cast<int>(diff.size()));
        auto& bucket = it->second;
        if (fresh) {
          bucket.scheme.hypergraph.n = inst.n();
          bucket.scheme.arity = static_cast<int>(diff.size());
        }
        bucket.scheme.hypergraph.edges.push_back(diff);
        bucket.scheme.weights.push_back(w);
        bucket.rhs.push_back(s);
      }
    }
  }
  for (auto& [_, b] : buckets) red.buckets.push_back(std::move(b));
  return red;
}

XorInstance split_into_units(const XorInstance& inst) {
  unsigned j = 0;
  for (const auto& w : inst.weights()) j = std::max(j, w.log_denominator());
  std::uint64_t total = 0;
  for (const auto& w : inst.weights()) {
    const auto units = static_cast<std::uint64_t>(std::llabs(w.numerator())) << (j - w.log_denominator());
    total += units;
    if (total > (1u << 22)) throw CapExceeded("unit split would create more than 2^22 edges");
  }
  XorInstance out;
  out.scheme.hypergraph.n = inst.n();
  out.scheme.arity = inst.scheme.arity;
  out.scheme.mixed_arity = inst.scheme.mixed_arity;
  const Dyadic unit = Dyadic::pow2_inv(j);
  for (std::size_t c = 0; c < inst.m(); ++c) {
    const auto& w = inst.weights()[c];
    const auto units = static_cast<std::uint64_t>(std::llabs(w.numerator())) << (j - w.log_denominator());
    const Sign s = w.sign() < 0 ? static_cast<Sign>(-inst.rhs[c]) : inst.rhs[c];
    for (std::uint64_t u = 0; u < units; ++u) {
      out.scheme.hypergraph.edges.push_back(inst.edges()[c]);
      out.scheme.weights.push_back(unit);
      out.rhs.push_back(s);
    }
  }
  return out;
}

}  // namespace xorcert
