// src/circle.cpp

// Copyright 2026  The jacscat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jacscat/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jacscat/errors.hpp"

namespace jacscat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFlagTol = 1e-10;

// In-place radix-2 FFT.  inverse=false computes sum_j x_j e^{-2 pi i jk/M}
// (no normalization), inverse=true the e^{+...} sum.  Twiddles come from a
// table built with one trig call each, so roundoff does not accumulate
// across butterfly stages.
void fft_radix2(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n < 2 || (n & (n - 1)) != 0)
    throw error(errc::size_mismatch, "fft: length must be a power of two >= 2");

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  std::vector<cplx> twiddle(n / 2);
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t j = 0; j < n / 2; ++j)
    twiddle[j] = std::polar(1.0, sign * 2.0 * kPi * static_cast<double>(j) /
                                     static_cast<double>(n));

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * twiddle[k * stride];
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

circle_function circle_function::analyze(std::vector<cplx> samples,
                                         int grid_log2) {
  if (grid_log2 < 3)
    throw error(errc::domain, "circle_function: grid_log2 must be >= 3");
  const std::size_t m = std::size_t{1} << grid_log2;
  if (samples.size() != m)
    throw error(errc::size_mismatch,
                "circle_function: sample count does not match 2^grid_log2");
  circle_function f;
  f.grid_log2_ = grid_log2;
  f.bins_ = samples;
  fft_radix2(f.bins_, /*inverse=*/false);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (auto& c : f.bins_) c *= inv_m;
  f.samples_ = std::move(samples);
  f.detect_flags();
  return f;
}

circle_function circle_function::from_bins(std::vector<cplx> bins,
                                           int grid_log2) {
  if (grid_log2 < 3)
    throw error(errc::domain, "circle_function: grid_log2 must be >= 3");
  const std::size_t m = std::size_t{1} << grid_log2;
  if (bins.size() != m)
    throw error(errc::size_mismatch,
                "circle_function: bin count does not match 2^grid_log2");
  circle_function f;
  f.grid_log2_ = grid_log2;
  f.samples_ = bins;
  fft_radix2(f.samples_, /*inverse=*/true);
  f.bins_ = std::move(bins);
  f.detect_flags();
  return f;
}

circle_function circle_function::zero(int grid_log2) {
  return constant(0.0, grid_log2);
}

circle_function circle_function::constant(double value, int grid_log2) {
  const std::size_t m = std::size_t{1} << grid_log2;
  return analyze(std::vector<cplx>(m, cplx(value, 0.0)), grid_log2);
}

void circle_function::detect_flags() {
  const int half = size() / 2;
  const double tol = kFlagTol * std::max(1.0, max_abs(samples_));

  double im = 0.0;
  for (const auto& s : samples_) im = std::max(im, std::abs(s.imag()));
  real_ = im <= tol;

  double dev_sym = 0.0, dev_anti = 0.0;
  for (int n = 0; n < half; ++n) {  // pairs (n, -n); Nyquist bin excluded
    const cplx pos = bins_[static_cast<std::size_t>(n)];
    const cplx neg = n == 0 ? pos : bins_[static_cast<std::size_t>(size() - n)];
    dev_sym = std::max(dev_sym, std::abs(neg - pos));
    dev_anti = std::max(dev_anti, std::abs(neg + pos));
  }
  if (dev_sym <= tol)
    symmetry_ = spin_symmetry::symmetric;
  else if (dev_anti <= tol)
    symmetry_ = spin_symmetry::antisymmetric;
  else
    symmetry_ = spin_symmetry::none;
}

cplx circle_function::coeff(int n) const {
  if (std::abs(n) > max_order())
    throw error(errc::domain, "circle_function: coefficient order out of range");
  const int m = size();
  return bins_[static_cast<std::size_t>(n >= 0 ? n : n + m)];
}

double circle_function::theta(int j) const {
  return 2.0 * kPi * static_cast<double>(j) / static_cast<double>(size());
}

cplx circle_function::node(int j) const { return std::polar(1.0, theta(j)); }

cplx circle_function::eval(cplx t) const {
  const int half = size() / 2;
  // Horner in t and 1/t over the one-sided ranges, Nyquist split evenly.
  const cplx tinv = 1.0 / t;
  cplx pos = 0.0;
  for (int n = half - 1; n >= 1; --n)
    pos = (pos + bins_[static_cast<std::size_t>(n)]) * t;
  cplx neg = 0.0;
  for (int n = half - 1; n >= 1; --n)
    neg = (neg + bins_[static_cast<std::size_t>(size() - n)]) * tinv;
  const cplx nyq = bins_[static_cast<std::size_t>(half)];
  cplx tp = 1.0;
  for (int i = 0; i < half; ++i) tp *= t;
  return bins_[0] + pos + neg + 0.5 * nyq * (tp + 1.0 / tp);
}

circle_function circle_function::plus_constant(double c) const {
  std::vector<cplx> shifted = samples_;
  for (auto& s : shifted) s += c;
  return analyze(std::move(shifted), grid_log2_);
}

namespace {

double symmetry_defect(const circle_function& f, bool anti) {
  double dev = 0.0;
  for (int n = 1; n <= f.max_order(); ++n) {
    const cplx pos = f.coeff(n), neg = f.coeff(-n);
    dev = std::max(dev, std::abs(anti ? neg + pos : neg - pos));
  }
  if (anti) dev = std::max(dev, std::abs(f.coeff(0)));
  return dev;
}

double coeff_scale(const circle_function& f) {
  double m = 0.0;
  for (const auto& s : f.samples()) m = std::max(m, std::abs(s));
  return std::max(1.0, m);
}

}  // namespace

bool is_symmetric(const circle_function& f, double tol) {
  return symmetry_defect(f, false) <= tol * coeff_scale(f);
}

bool is_antisymmetric(const circle_function& f, double tol) {
  return symmetry_defect(f, true) <= tol * coeff_scale(f);
}

double besov_seminorm(const circle_function& f) {
  double total = 0.0;
  for (int n = 1; n <= f.max_order(); ++n) {
    total += n * std::norm(f.coeff(n));
    total += n * std::norm(f.coeff(-n));
  }
  return std::sqrt(total);
}

bool besov_admissible(const circle_function& f, double rel_tol) {
  double total = 0.0, tail = 0.0;
  const int quarter = f.size() / 4;
  for (int n = 1; n <= f.max_order(); ++n) {
    const double w = n * (std::norm(f.coeff(n)) + std::norm(f.coeff(-n)));
    total += w;
    if (n > quarter) tail += w;
  }
  // functions at the roundoff floor are constants for every practical
  // purpose; their flat noise spectrum must not fail the tail criterion
  if (total <= 1e-20) return true;
  return tail <= rel_tol * total;
}

circle_function conjugate(const circle_function& u) {
  if (!u.real_valued())
    throw error(errc::domain, "conjugate: input must be real-valued");
  const int m = u.size();
  std::vector<cplx> bins(static_cast<std::size_t>(m), cplx(0.0, 0.0));
  const cplx mi(0.0, -1.0);
  for (int n = 1; n <= u.max_order(); ++n) {
    bins[static_cast<std::size_t>(n)] = mi * u.coeff(n);
    bins[static_cast<std::size_t>(m - n)] = -mi * u.coeff(-n);
  }
  // bin 0 and the Nyquist bin stay zero: the mean is dropped and the
  // self-conjugate Nyquist mode has no odd counterpart.
  return circle_function::from_bins(std::move(bins), u.grid_log2());
}

circle_function inverse_conjugate(const circle_function& v) {
  if (!v.real_valued())
    throw error(errc::domain, "inverse_conjugate: input must be real-valued");
  if (!is_antisymmetric(v))
    throw error(errc::domain, "inverse_conjugate: input must be antisymmetric");
  const double scale = std::max(1.0, std::abs(besov_seminorm(v)));
  if (std::abs(v.coeff(0)) > 1e-10 * scale)
    throw error(errc::domain, "inverse_conjugate: mean of input must vanish");
  const int m = v.size();
  std::vector<cplx> bins(static_cast<std::size_t>(m), cplx(0.0, 0.0));
  const cplx ci(0.0, 1.0);
  for (int n = 1; n <= v.max_order(); ++n) {
    bins[static_cast<std::size_t>(n)] = ci * v.coeff(n);
    bins[static_cast<std::size_t>(m - n)] = -ci * v.coeff(-n);
  }
  return circle_function::from_bins(std::move(bins), v.grid_log2());
}

cplx herglotz_outer_eval(const circle_function& log_modulus, cplx z) {
  if (std::abs(z) >= 1.0)
    throw error(errc::domain, "herglotz_outer_eval: point must be inside the disk");
  if (!log_modulus.real_valued())
    throw error(errc::domain, "herglotz_outer_eval: log-modulus must be real");
  cplx sum = 0.0;
  for (int n = log_modulus.max_order(); n >= 1; --n)
    sum = (sum + log_modulus.coeff(n)) * z;
  return std::exp(0.5 * (log_modulus.coeff(0) + 2.0 * sum));
}

namespace {

void require_unimodular(const circle_function& s, const char* who) {
  for (int j = 0; j < s.size(); ++j) {
    if (std::abs(std::abs(s.sample(j)) - 1.0) > 1e-8)
      throw error(errc::domain,
                  std::string(who) + ": samples are not unimodular");
  }
}

}  // namespace

int winding_number(const circle_function& s) {
  require_unimodular(s, "winding_number");
  const int m = s.size();
  double total = 0.0;
  for (int j = 0; j < m; ++j) {
    const cplx ratio = s.sample((j + 1) % m) / s.sample(j);
    const double inc = std::arg(ratio);
    if (std::abs(inc) >= kPi - 1e-9)
      throw error(errc::resolution,
                  "winding_number: phase increment reached pi; refine the grid");
    total += inc;
  }
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

circle_function unwrap_phase(const circle_function& s) {
  require_unimodular(s, "unwrap_phase");
  if (winding_number(s) != 0)
    throw error(errc::domain, "unwrap_phase: winding number must be zero");
  const int m = s.size();
  std::vector<cplx> phase(static_cast<std::size_t>(m));
  double phi = std::arg(s.sample(0));
  phase[0] = phi;
  for (int j = 1; j < m; ++j) {
    phi += std::arg(s.sample(j) / s.sample(j - 1));
    phase[static_cast<std::size_t>(j)] = phi;
  }
  double mean = 0.0;
  for (const auto& p : phase) mean += p.real();
  mean /= m;
  // shift by a multiple of 2 pi so the mean lands in (-pi, pi]
  const double shift = 2.0 * kPi * std::ceil((mean - kPi) / (2.0 * kPi));
  for (auto& p : phase) p -= shift;
  return circle_function::analyze(std::move(phase), s.grid_log2());
}

}  // namespace jacscat
