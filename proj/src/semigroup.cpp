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

#include "crossconn/semigroup.hpp"

#include <algorithm>  // for any_of
#include <cctype>     // for isspace

#include <fmt/format.h>  // for fmt::format

#include "crossconn/error.hpp"    // for Error, ErrorCode
#include "crossconn/green.hpp"    // for green
#include "crossconn/kernels.hpp"  // for associativity_violation_parallel

namespace crossconn {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::ParseError: return "ParseError";
      case ErrorCode::NotClosed: return "NotClosed";
      case ErrorCode::NotAssociative: return "NotAssociative";
      case ErrorCode::NotRegular: return "NotRegular";
      case ErrorCode::NotIdempotent: return "NotIdempotent";
      case ErrorCode::NotInHom: return "NotInHom";
      case ErrorCode::NotComposable: return "NotComposable";
      case ErrorCode::NotIncluded: return "NotIncluded";
      case ErrorCode::NotInDomain: return "NotInDomain";
      case ErrorCode::MixedApex: return "MixedApex";
      case ErrorCode::ClosureFailed: return "ClosureFailed";
      case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
      case ErrorCode::EnumerationBudgetExceeded:
        return "EnumerationBudgetExceeded";
      case ErrorCode::BadSemilattice: return "BadSemilattice";
      case ErrorCode::BadGroup: return "BadGroup";
      case ErrorCode::BadHom: return "BadHom";
      case ErrorCode::MissingHom: return "MissingHom";
      case ErrorCode::IncoherentHoms: return "IncoherentHoms";
      case ErrorCode::NotAnIsomorphism: return "NotAnIsomorphism";
      case ErrorCode::FunctorialityFailed: return "FunctorialityFailed";
      case ErrorCode::NotASemilattice: return "NotASemilattice";
      case ErrorCode::UnknownFixture: return "UnknownFixture";
    }
    return "Error";
  }

  FiniteSemigroup FiniteSemigroup::from_table(Table const&             table,
                                              std::vector<std::string> labels) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw Error(ErrorCode::NotClosed, "the table is empty");
    }
    std::vector<element_t> flat;
    flat.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) {
        throw Error(ErrorCode::NotClosed,
                    fmt::format("row {} has {} entries, expected {}",
                                a,
                                table[a].size(),
                                n));
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] >= n) {
          throw Error(ErrorCode::NotClosed,
                      fmt::format("entry [{}][{}] = {} is out of range [0, {})",
                                  a,
                                  b,
                                  table[a][b],
                                  n));
        }
        flat.push_back(table[a][b]);
      }
    }
    if (!labels.empty()) {
      if (labels.size() != n) {
        throw Error(ErrorCode::ParseError,
                    fmt::format("{} labels given for {} elements",
                                labels.size(),
                                n));
      }
      for (auto const& l : labels) {
        if (l.empty() || std::any_of(l.begin(), l.end(), [](char c) {
              return std::isspace(static_cast<unsigned char>(c));
            })) {
          throw Error(ErrorCode::ParseError,
                      fmt::format("invalid label \"{}\"", l));
        }
      }
    }
    if (auto t = kernels::associativity_violation_parallel(n, flat)) {
      throw Error(ErrorCode::NotAssociative,
                  fmt::format("({0}*{1})*{2} != {0}*({1}*{2}) for ({0}, {1}, {2})",
                              t->a,
                              t->b,
                              t->c));
    }
    return FiniteSemigroup(n, std::move(flat), std::move(labels));
  }

  Table FiniteSemigroup::table() const {
    Table result(_n);
    for (std::size_t a = 0; a < _n; ++a) {
      auto r = row(a);
      result[a].assign(r.begin(), r.end());
    }
    return result;
  }

  std::string FiniteSemigroup::label(element_t a) const {
    return _labels.empty() ? std::to_string(a) : _labels[a];
  }

  std::vector<element_t> idempotents(FiniteSemigroup const& S) {
    std::vector<element_t> result;
    for (element_t a = 0; a < S.size(); ++a) {
      if (S.product(a, a) == a) {
        result.push_back(a);
      }
    }
    return result;
  }

  bool is_idempotent(FiniteSemigroup const& S, element_t a) {
    return S.product(a, a) == a;
  }

  ElementSet principal_left_ideal(FiniteSemigroup const& S, element_t a) {
    ElementSet result(S.size());
    for (element_t x = 0; x < S.size(); ++x) {
      result.set(S.product(x, a));
    }
    return result;
  }

  ElementSet principal_right_ideal(FiniteSemigroup const& S, element_t a) {
    ElementSet result(S.size());
    for (element_t x : S.row(a)) {
      result.set(x);
    }
    return result;
  }

  FiniteSemigroup opposite(FiniteSemigroup const& S) {
    std::size_t const      n = S.size();
    std::vector<element_t> flat(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        flat[a * n + b] = S.product(b, a);
      }
    }
    // the transpose of an associative table is associative
    return FiniteSemigroup(n, std::move(flat), S.labels());
  }

  bool is_commutative(FiniteSemigroup const& S) {
    for (element_t a = 0; a < S.size(); ++a) {
      for (element_t b = a + 1; b < S.size(); ++b) {
        if (S.product(a, b) != S.product(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_band(FiniteSemigroup const& S) {
    return idempotents(S).size() == S.size();
  }

  bool is_semilattice(FiniteSemigroup const& S) {
    return is_band(S) && is_commutative(S);
  }

  std::optional<element_t> first_non_regular(FiniteSemigroup const& S) {
    for (element_t a = 0; a < S.size(); ++a) {
      bool found = false;
      for (element_t x = 0; x < S.size() && !found; ++x) {
        found = S.product(S.product(a, x), a) == a;
      }
      if (!found) {
        return a;
      }
    }
    return std::nullopt;
  }

  std::optional<CentralityWitness>
  first_non_central_idempotent(FiniteSemigroup const& S) {
    for (element_t e : idempotents(S)) {
      for (element_t x = 0; x < S.size(); ++x) {
        if (S.product(e, x) != S.product(x, e)) {
          return CentralityWitness{e, x};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::pair<element_t, element_t>>
  first_non_commuting_idempotents(FiniteSemigroup const& S) {
    auto const E = idempotents(S);
    for (std::size_t i = 0; i < E.size(); ++i) {
      for (std::size_t j = i + 1; j < E.size(); ++j) {
        if (S.product(E[i], E[j]) != S.product(E[j], E[i])) {
          return std::make_pair(E[i], E[j]);
        }
      }
    }
    return std::nullopt;
  }

  bool is_regular(FiniteSemigroup const& S) {
    return !first_non_regular(S).has_value();
  }

  bool is_inverse(FiniteSemigroup const& S) {
    return is_regular(S) && !first_non_commuting_idempotents(S).has_value();
  }

  bool is_clifford(FiniteSemigroup const& S) {
    return is_regular(S) && !first_non_central_idempotent(S).has_value();
  }

  bool is_clifford_by_d_classes(FiniteSemigroup const& S) {
    if (!is_regular(S)) {
      return false;
    }
    auto const               G = green(S);
    std::vector<std::size_t> count(G.num_dclasses, 0);
    for (element_t e : idempotents(S)) {
      ++count[G.dclass[e]];
    }
    return std::all_of(
        count.begin(), count.end(), [](std::size_t c) { return c == 1; });
  }

  std::optional<element_t> identity_element(FiniteSemigroup const& S) {
    for (element_t e = 0; e < S.size(); ++e) {
      bool ok = true;
      for (element_t x = 0; x < S.size() && ok; ++x) {
        ok = S.product(e, x) == x && S.product(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  bool is_group(FiniteSemigroup const& S) {
    auto const id = identity_element(S);
    if (!id) {
      return false;
    }
    for (element_t a = 0; a < S.size(); ++a) {
      auto r = S.row(a);
      if (std::find(r.begin(), r.end(), *id) == r.end()) {
        return false;
      }
    }
    return true;
  }

  IndexPeriod index_period(FiniteSemigroup const& S, element_t a) {
    // powers a^1, a^2, ... until the first repeat
    std::vector<std::size_t> first_seen(S.size(), 0);
    element_t                x = a;
    for (std::size_t k = 1;; ++k) {
      if (first_seen[x] != 0) {
        return {first_seen[x], k - first_seen[x]};
      }
      first_seen[x] = k;
      x             = S.product(x, a);
    }
  }

}  // namespace crossconn
