/*
 * Copyright 2026 The crossconn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "crossconn/kernels.hpp"

#include <algorithm>  // for sort, unique
#include <exception>  // for exception_ptr

#include <omp.h>

namespace crossconn {

  namespace {
    int g_jobs = 0;

    int thread_count() {
      return g_jobs > 0 ? g_jobs : omp_get_max_threads();
    }

    // First (b, c) with (ab)c != a(bc), as b * n + c, or npos.
    std::size_t first_violation_in_row(std::size_t                n,
                                       std::span<element_t const> t,
                                       element_t                  a) {
      for (element_t b = 0; b < n; ++b) {
        element_t const ab = t[a * n + b];
        for (element_t c = 0; c < n; ++c) {
          if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
            return b * n + c;
          }
        }
      }
      return kernels::npos;
    }

    std::vector<element_t> hom_set(FiniteSemigroup const& S,
                                   element_t              e,
                                   element_t              f) {
      std::vector<bool> seen(S.size(), false);
      for (element_t x = 0; x < S.size(); ++x) {
        seen[S.product(S.product(e, x), f)] = true;
      }
      std::vector<element_t> result;
      for (element_t u = 0; u < S.size(); ++u) {
        if (seen[u]) {
          result.push_back(u);
        }
      }
      return result;
    }
  }  // namespace

  void set_num_jobs(int jobs) {
    g_jobs = jobs;
  }

  int num_jobs() {
    return thread_count();
  }

  namespace kernels {

    std::optional<Triple>
    associativity_violation_serial(std::size_t                n,
                                   std::span<element_t const> t) {
      for (element_t a = 0; a < n; ++a) {
        for (element_t b = 0; b < n; ++b) {
          for (element_t c = 0; c < n; ++c) {
            if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) {
              return Triple{a, b, c};
            }
          }
        }
      }
      return std::nullopt;
    }

    std::optional<Triple>
    associativity_violation_parallel(std::size_t                n,
                                     std::span<element_t const> t) {
      std::vector<std::size_t> first(n, npos);
      auto const               rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
      for (std::int64_t a = 0; a < rows; ++a) {
        first[a] = first_violation_in_row(n, t, a);
      }
      for (element_t a = 0; a < n; ++a) {
        if (first[a] != npos) {
          return Triple{a, first[a] / n, first[a] % n};
        }
      }
      return std::nullopt;
    }

    std::vector<std::vector<element_t>>
    hom_sets_serial(FiniteSemigroup const&     S,
                    std::span<element_t const> objects) {
      std::size_t const                   k = objects.size();
      std::vector<std::vector<element_t>> result(k * k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          result[i * k + j] = hom_set(S, objects[i], objects[j]);
        }
      }
      return result;
    }

    std::vector<std::vector<element_t>>
    hom_sets_parallel(FiniteSemigroup const&     S,
                      std::span<element_t const> objects) {
      std::size_t const                   k = objects.size();
      std::vector<std::vector<element_t>> result(k * k);
      auto const                          pairs = static_cast<std::int64_t>(k * k);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
      for (std::int64_t p = 0; p < pairs; ++p) {
        result[p] = hom_set(S, objects[p / k], objects[p % k]);
      }
      return result;
    }

    std::vector<ApexCones> cones_by_apex_serial(NormalCategory const& C,
                                                EnumerationOptions    opts) {
      std::vector<ApexCones> result;
      for (element_t d : C.objects()) {
        result.push_back(enumerate_cones_at(C, d, opts));
      }
      return result;
    }

    std::vector<ApexCones> cones_by_apex_parallel(NormalCategory const& C,
                                                  EnumerationOptions    opts) {
      auto const&                 objects = C.objects();
      std::vector<ApexCones>      result(objects.size());
      std::vector<std::exception_ptr> errors(objects.size());
      auto const k = static_cast<std::int64_t>(objects.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
      for (std::int64_t i = 0; i < k; ++i) {
        try {
          result[i] = enumerate_cones_at(C, objects[i], opts);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
      for (auto const& e : errors) {
        if (e) {
          std::rethrow_exception(e);
        }
      }
      return result;
    }

    std::vector<std::size_t> cone_table_serial(NormalCategory const&       C,
                                               std::span<NormalCone const> cones,
                                               ConeIndex const&            index) {
      std::size_t const        m = cones.size();
      std::vector<std::size_t> table(m * m, npos);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          table[i * m + j]
              = index.find(cone_product(C, cones[i], cones[j])).value_or(npos);
        }
      }
      return table;
    }

    std::vector<std::size_t>
    cone_table_parallel(NormalCategory const&       C,
                        std::span<NormalCone const> cones,
                        ConeIndex const&            index) {
      std::size_t const        m = cones.size();
      std::vector<std::size_t> table(m * m, npos);
      auto const               rows = static_cast<std::int64_t>(m);
      std::vector<std::exception_ptr> errors(m);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
      for (std::int64_t i = 0; i < rows; ++i) {
        try {
          for (std::size_t j = 0; j < m; ++j) {
            table[i * m + j] = index.find(cone_product(C, cones[i], cones[j]))
                                   .value_or(npos);
          }
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
      for (auto const& e : errors) {
        if (e) {
          std::rethrow_exception(e);
        }
      }
      return table;
    }

  }  // namespace kernels
}  // namespace crossconn
