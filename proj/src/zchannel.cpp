// Copyright 2026 The gspb Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gspb/zchannel.hpp"

#include <algorithm>
#include <stdexcept>

namespace gspb {
namespace {

void check_params(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("z channel needs n >= 1 and r >= 1");
}

// Row l of the weight-class LP evaluated at w.
Rational row_value(int l, int r, const std::vector<Rational>& w) {
  Rational s = 0;
  for (int i = 0; i <= std::min(l, r); ++i) s += Rational(binomial(l, i)) * w[static_cast<std::size_t>(l - i)];
  return s;
}

}  // namespace

CoveringLP z_quotient_lp(int n, int r) {
  check_params(n, r);
  CoveringLP lp;
  lp.num_vars = n + 1;
  for (int l = 0; l <= n; ++l) lp.objective.emplace_back(binomial(n, l));
  for (int l = 0; l <= n; ++l) {
    SparseRow row;
    for (int i = std::min(l, r); i >= 0; --i) row.emplace_back(l - i, Rational(binomial(l, i)));
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

Rational z_objective(int n, const std::vector<Rational>& w) {
  Rational s = 0;
  for (int k = 0; k <= n; ++k) s += Rational(binomial(n, k)) * w.at(static_cast<std::size_t>(k));
  return s;
}

ZWeights z_weights_recursive(int n, int r) {
  check_params(n, r);
  ZWeights out{n, r, std::vector<Rational>(static_cast<std::size_t>(n + 1), Rational(0)),
               WeightSource::kRecursive};
  auto& w = out.w;
  for (int k = n - r; k >= 1; --k) {
    Rational s = 1;
    for (int i = 1; i <= r; ++i)
      s -= w[static_cast<std::size_t>(k + i)] * Rational(binomial(k + r, r - i));
    w[static_cast<std::size_t>(k)] = s / Rational(binomial(k + r, r));
  }
  w[0] = 1;
  return out;
}

DSequence d_sequence(int r, int length) {
  if (r < 1) throw std::invalid_argument("d_sequence needs r >= 1");
  DSequence d{r, {}};
  d.values.reserve(static_cast<std::size_t>(std::max(length, 0)));
  std::vector<Rational> inv_fact;
  for (int j = 0; j <= r; ++j) inv_fact.emplace_back(Rational(1) / Rational(factorial(j)));
  const Rational r_fact(factorial(r));
  for (int i = 0; i < length; ++i) {
    if (i < r - 1) {
      d.values.emplace_back(0);
    } else if (i == r - 1) {
      d.values.emplace_back(1);
    } else {
      // sum_{j=0}^{r} D_{i-j} / (r-j)! = 0, solved for D_i.
      Rational s = 0;
      for (int j = 1; j <= r; ++j)
        s += d.values[static_cast<std::size_t>(i - j)] * inv_fact[static_cast<std::size_t>(r - j)];
      d.values.push_back(-r_fact * s);
    }
  }
  return d;
}

ZWeights z_weights_explicit(int n, int r) {
  check_params(n, r);
  ZWeights out{n, r, std::vector<Rational>(static_cast<std::size_t>(n + 1), Rational(0)),
               WeightSource::kExplicit};
  const DSequence d = d_sequence(r, std::max(n, 1));
  const Rational r_fact(factorial(r));
  for (int k = 1; k <= n; ++k) {
    Rational s = 0;
    for (int m = r + k; m <= n; ++m)
      s += d.values[static_cast<std::size_t>(m - k - 1)] / Rational(factorial(m));
    out.w[static_cast<std::size_t>(k)] = r_fact * Rational(factorial(k)) * s;
  }
  out.w[0] = 1;
  return out;
}

ZFeasibility z_check_feasibility(const ZWeights& weights) {
  ZFeasibility f;
  const auto& w = weights.w;
  if (static_cast<int>(w.size()) != weights.n + 1)
    throw std::invalid_argument("weight vector length must be n + 1");
  for (int k = 0; k <= weights.n; ++k) {
    if (sgn(w[static_cast<std::size_t>(k)]) < 0) {
      f.negative_index = k;
      return f;
    }
  }
  for (int l = 0; l <= weights.n; ++l) {
    if (row_value(l, weights.r, w) < 1) {
      f.violated_row = l;
      return f;
    }
  }
  f.feasible = true;
  return f;
}

ZCertificate z_optimality_certificate(int n, int r) {
  check_params(n, r);
  // Column j of M (row j of M^T), as (i, m_ij) pairs with i <= j.
  auto entry = [&](int i, int j) -> BigInt {
    if (i == 0) return BigInt(j == 0 ? 1 : 0);
    if (i > n - r) return BigInt(i == j ? 1 : 0);
    if (j < i || j > i + r) return BigInt(0);
    return binomial(i + r, j);
  };
  ZCertificate cert;
  cert.y.assign(static_cast<std::size_t>(n + 1), Rational(0));
  for (int j = 0; j <= n; ++j) {
    Rational s(binomial(n, j));
    for (int i = std::max(0, j - r); i < j; ++i) {
      const BigInt m = entry(i, j);
      if (m != 0) s -= Rational(m) * cert.y[static_cast<std::size_t>(i)];
    }
    cert.y[static_cast<std::size_t>(j)] = s / Rational(entry(j, j));
  }
  cert.status = CertificateStatus::kOptimalCertified;
  for (int j = 0; j <= n; ++j) {
    if (sgn(cert.y[static_cast<std::size_t>(j)]) < 0) {
      cert.status = CertificateStatus::kNonnegativityFailed;
      cert.failed_index = j;
      break;
    }
  }
  for (int j = 0; j <= n - r; ++j) cert.dual_value += cert.y[static_cast<std::size_t>(j)];
  return cert;
}

ZResult z_gspb(int n, int r) {
  ZResult res;
  res.weights = z_weights_recursive(n, r);
  res.certificate = z_optimality_certificate(n, r);
  res.value = z_objective(n, res.weights.w);
  const bool ok = z_check_feasibility(res.weights).feasible &&
                  res.certificate.status == CertificateStatus::kOptimalCertified &&
                  res.certificate.dual_value == res.value;
  if (ok) {
    res.certified = true;
    res.path = ZPath::kClosedForm;
    return res;
  }
  const LPSolution lp = solve_min_transversal(z_quotient_lp(n, r));
  res.path = ZPath::kLPFallback;
  res.value = lp.optimum;
  res.certified = lp.certified;
  return res;
}

ZExampleBound z_example_wprime(int n) {
  check_params(n, 1);
  ZExampleBound out;
  out.w.assign(static_cast<std::size_t>(n + 1), Rational(0));
  out.w[0] = 1;
  for (int k = 1; k <= n; ++k) out.w[static_cast<std::size_t>(k)] = make_rational(k + 2, (k + 1) * (k + 3));
  const FeasibilityReport rep = verify_transversal(z_quotient_lp(n, 1), out.w);
  out.feasible = rep.feasible;
  out.bound = z_objective(n, out.w);
  return out;
}

}  // namespace gspb
