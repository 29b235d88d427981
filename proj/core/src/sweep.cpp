// Copyright 2026 The faddeeva-trap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "faddeeva/sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "faddeeva/bounds.hpp"
#include "faddeeva/errors.hpp"
#include "faddeeva/faddeeva.hpp"
#include "faddeeva/oracle.hpp"

namespace faddeeva::bench {
namespace {

using xprec::XComplex;

struct MaxTracker {
  double value = 0.0;
  ComplexValue where;
  bool seen = false;

  void offer(double v, ComplexValue z) {
    if (std::isnan(v)) v = std::numeric_limits<double>::infinity();
    if (!seen || v > value) {
      value = v;
      where = z;
      seen = true;
    }
  }
  // Called in chunk order; strict comparison keeps the earliest point.
  void merge(const MaxTracker& o) {
    if (o.seen) offer(o.value, o.where);
  }
};

struct ErrorPair {
  MaxTracker abs;
  MaxTracker rel;
};

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

bool rel_usable(ComplexValue z, double oracle_mod) {
  return z.imag() >= 0.0 && oracle_mod >= std::numeric_limits<double>::min();
}

}  // namespace

std::size_t chunk_count(std::size_t size) { return (size + kChunkSize - 1) / kChunkSize; }

void parallel_chunks(std::size_t size, unsigned threads,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  const std::size_t chunks = chunk_count(size);
  const unsigned workers = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(chunks, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      try {
        body(c, c * kChunkSize, std::min(size, (c + 1) * kChunkSize));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = chunks;
      }
    }
  };
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run);
  }
  if (failure) std::rethrow_exception(failure);
}

SweepReport error_sweep(std::span<const int> n_values, const Grid& grid, Precision precision,
                        unsigned threads) {
  if (n_values.empty()) throw ParameterError("error_sweep: empty list of orders");
  std::vector<EvalParams> params;
  for (const int n : n_values) {
    if (n < 0 || n > kMaxOrder) throw ParameterError("error_sweep: order " + std::to_string(n) + " outside [0, 25]");
    if (precision == Precision::kBinary64 && n >= 12) {
      throw ParameterError("error_sweep: N >= 12 needs the double-double precision (binary64 floor)");
    }
    if (precision == Precision::kBinary64) params.emplace_back(n);
  }

  const std::size_t m = n_values.size();
  const std::size_t chunks = chunk_count(grid.size());
  std::vector<ErrorPair> partial(chunks * m);
  std::vector<std::size_t> excl_abs(chunks), excl_rel(chunks);

  parallel_chunks(grid.size(), threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
    ErrorPair* acc = &partial[c * m];
    for (std::size_t i = begin; i < end; ++i) {
      const ComplexValue z = grid[i];
      const XComplex ref = xprec::w_oracle(z);
      if (!ref.is_finite()) {
        ++excl_abs[c];
        ++excl_rel[c];
        continue;
      }
      const double ref_mod = xprec::abs(ref).to_double();
      const bool use_rel = rel_usable(z, ref_mod);
      if (!use_rel) ++excl_rel[c];
      for (std::size_t k = 0; k < m; ++k) {
        const XComplex approx = precision == Precision::kBinary64
                                    ? XComplex(w_plane(z, params[k]))
                                    : xprec::w_xprec(z, n_values[k]);
        const double err = xprec::abs(approx - ref).to_double();
        acc[k].abs.offer(err, z);
        if (use_rel) acc[k].rel.offer(err / ref_mod, z);
      }
    }
  });

  SweepReport report;
  report.points = grid.size();
  std::vector<ErrorPair> total(m);
  for (std::size_t c = 0; c < chunks; ++c) {
    for (std::size_t k = 0; k < m; ++k) {
      total[k].abs.merge(partial[c * m + k].abs);
      total[k].rel.merge(partial[c * m + k].rel);
    }
    report.excluded_abs += excl_abs[c];
    report.excluded_rel += excl_rel[c];
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t k = 0; k < m; ++k) {
    SweepRecord r;
    r.n = n_values[k];
    r.max_abs_err = total[k].abs.seen ? total[k].abs.value : nan;
    r.max_rel_err = total[k].rel.seen ? total[k].rel.value : nan;
    r.bound_abs = bounds::abs_bound(r.n);
    r.bound_rel = bounds::rel_bound(r.n);
    r.argmax_abs = total[k].abs.where;
    r.argmax_rel = total[k].rel.where;
    report.records.push_back(r);
  }
  return report;
}

std::vector<AccuracyRow> accuracy_table(std::span<const MethodSpec> methods, const Grid& grid,
                                        unsigned threads) {
  if (methods.empty()) throw ParameterError("accuracy_table: empty method list");
  std::vector<Method> impl;
  impl.reserve(methods.size());
  for (const auto& spec : methods) impl.emplace_back(spec);

  const std::size_t m = impl.size();
  const std::size_t chunks = chunk_count(grid.size());
  std::vector<ErrorPair> partial(chunks * m);
  std::vector<std::size_t> counts(chunks * m);

  parallel_chunks(grid.size(), threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const ComplexValue z = grid[i];
      bool any = false;
      for (const auto& method : impl) any = any || method.rated(z);
      if (!any) continue;
      const XComplex ref = xprec::w_oracle(z);
      if (!ref.is_finite()) continue;
      const double ref_mod = xprec::abs(ref).to_double();
      const bool use_rel = rel_usable(z, ref_mod);
      for (std::size_t k = 0; k < m; ++k) {
        if (!impl[k].rated(z)) continue;
        ++counts[c * m + k];
        const double err = xprec::abs(XComplex(impl[k](z)) - ref).to_double();
        partial[c * m + k].abs.offer(err, z);
        if (use_rel) partial[c * m + k].rel.offer(err / ref_mod, z);
      }
    }
  });

  std::vector<AccuracyRow> rows(m);
  for (std::size_t k = 0; k < m; ++k) {
    ErrorPair total;
    rows[k].method = impl[k].label();
    for (std::size_t c = 0; c < chunks; ++c) {
      total.abs.merge(partial[c * m + k].abs);
      total.rel.merge(partial[c * m + k].rel);
      rows[k].points += counts[c * m + k];
    }
    if (rows[k].points == 0) {
      throw ParameterError("accuracy_table: " + rows[k].method + " has no rated point on the grid");
    }
    rows[k].max_abs = total.abs.value;
    rows[k].max_rel = total.rel.seen ? total.rel.value : std::numeric_limits<double>::quiet_NaN();
    rows[k].argmax_abs = total.abs.where;
    rows[k].argmax_rel = total.rel.where;
  }
  return rows;
}

}  // namespace faddeeva::bench
