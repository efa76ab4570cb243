// Copyright 2026 The gmix Authors.
//
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

#include "gmix/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "gmix/csv.h"

namespace gmix {

void BoundSpec::validate() const {
  if (k < 2) throw std::invalid_argument("bound needs k >= 2");
  if (n < k) throw std::invalid_argument("bound needs n >= k");
  if (e < 1) throw std::invalid_argument("bound needs e >= 1");
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("eta must be in (0, 1)");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
}

SamplingError sampling_error(const BoundSpec& spec) {
  spec.validate();
  const double m = std::floor(static_cast<double>(spec.n) / spec.k);
  const double log_term = std::log(4.0 / spec.eta);
  const double n = spec.n;
  SamplingError s;
  s.vertex = std::sqrt(log_term / (2.0 * m));
  s.edge = spec.e / std::sqrt(n * (n - 1.0)) * std::sqrt(2.0 * log_term);
  s.total = s.vertex + s.edge;
  return s;
}

double classical_sampling_error(int n, int k, double eta) {
  if (n < 1) throw std::invalid_argument("classical bound needs n >= 1");
  if (k < 2) throw std::invalid_argument("classical bound needs k >= 2");
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("eta must be in (0, 1)");
  return 2.0 * k * std::sqrt(std::log(2.0 / eta) / n);
}

double total_moment_bound(const BoundSpec& spec) {
  return spec.e * spec.epsilon + 2.0 * sampling_error(spec).total;
}

BoundTable bound_comparison(std::span<const int> n_values,
                            std::span<const Motif> family, double eta) {
  BoundTable table;
  table.min_ratio.assign(family.size(), std::numeric_limits<double>::infinity());
  for (size_t i = 0; i < family.size(); ++i) {
    const Motif& f = family[i];
    for (int n : n_values) {
      BoundSpec spec{n, f.vertex_count, f.edge_count(), eta, 0.0};
      BoundRow row;
      row.motif_id = f.id;
      row.k = spec.k;
      row.e = spec.e;
      row.n = n;
      row.novel = 2.0 * sampling_error(spec).total;
      row.classical = 2.0 * classical_sampling_error(n, spec.k, eta);
      table.min_ratio[i] = std::min(table.min_ratio[i], row.classical / row.novel);
      table.rows.push_back(row);
    }
  }
  return table;
}

void write_bound_csv(std::ostream& out, const BoundTable& table) {
  out << "motif_id,k,e,n,novel,classical\n";
  for (const BoundRow& r : table.rows) {
    out << r.motif_id << ',' << r.k << ',' << r.e << ',' << r.n << ','
        << format_real(r.novel) << ',' << format_real(r.classical) << '\n';
  }
}

}  // namespace gmix
