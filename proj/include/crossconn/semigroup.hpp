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

#ifndef CROSSCONN_SEMIGROUP_HPP_
#define CROSSCONN_SEMIGROUP_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include <boost/dynamic_bitset.hpp>  // for dynamic_bitset

namespace crossconn {

  //! Elements of a finite semigroup are dense indices 0, ..., n - 1.
  using element_t = std::size_t;

  //! Subsets of a semigroup, indexed by element.
  using ElementSet = boost::dynamic_bitset<>;

  using Table = std::vector<std::vector<element_t>>;

  //! A finite semigroup given by its multiplication table.
  //!
  //! Instances are immutable once constructed and every instance has passed
  //! the closure and associativity checks in from_table.
  class FiniteSemigroup {
   public:
    //! Validates \p table and returns the semigroup it defines.
    //!
    //! Throws NotClosed if the table is not square or some entry is out of
    //! range, and NotAssociative (naming the first failing triple in
    //! ascending order) if associativity fails. Labels are optional and
    //! must be non-empty and whitespace free when present.
    static FiniteSemigroup from_table(Table const&             table,
                                      std::vector<std::string> labels = {});

    std::size_t size() const noexcept {
      return _n;
    }

    element_t product(element_t a, element_t b) const noexcept {
      return _table[a * _n + b];
    }

    std::span<element_t const> row(element_t a) const noexcept {
      return {_table.data() + a * _n, _n};
    }

    std::span<element_t const> flat() const noexcept {
      return _table;
    }

    Table table() const;

    bool has_labels() const noexcept {
      return !_labels.empty();
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    //! The label of \p a, or its index when the semigroup is unlabelled.
    std::string label(element_t a) const;

    bool operator==(FiniteSemigroup const&) const = default;

   private:
    FiniteSemigroup(std::size_t              n,
                    std::vector<element_t>   table,
                    std::vector<std::string> labels)
        : _n(n), _table(std::move(table)), _labels(std::move(labels)) {}

    friend FiniteSemigroup opposite(FiniteSemigroup const&);

    std::size_t              _n;
    std::vector<element_t>   _table;
    std::vector<std::string> _labels;
  };

  //! E(S) in ascending order.
  std::vector<element_t> idempotents(FiniteSemigroup const& S);

  bool is_idempotent(FiniteSemigroup const& S, element_t a);

  //! Sa = { x a : x in S }.
  ElementSet principal_left_ideal(FiniteSemigroup const& S, element_t a);

  //! aS = { a x : x in S }.
  ElementSet principal_right_ideal(FiniteSemigroup const& S, element_t a);

  //! The semigroup with the same carrier and product a * b := b a.
  FiniteSemigroup opposite(FiniteSemigroup const& S);

  bool is_commutative(FiniteSemigroup const& S);
  bool is_band(FiniteSemigroup const& S);
  bool is_semilattice(FiniteSemigroup const& S);

  struct CentralityWitness {
    element_t idempotent;
    element_t element;
    bool      operator==(CentralityWitness const&) const = default;
  };

  //! The first a (ascending) with no x such that axa = a.
  std::optional<element_t> first_non_regular(FiniteSemigroup const& S);

  //! The first pair (e, x), in ascending order, with e idempotent and
  //! ex != xe.
  std::optional<CentralityWitness>
  first_non_central_idempotent(FiniteSemigroup const& S);

  //! The first pair (e, f), e < f, of non-commuting idempotents.
  std::optional<std::pair<element_t, element_t>>
  first_non_commuting_idempotents(FiniteSemigroup const& S);

  bool is_regular(FiniteSemigroup const& S);
  bool is_inverse(FiniteSemigroup const& S);

  //! Regular and every idempotent is central.
  bool is_clifford(FiniteSemigroup const& S);

  //! Regular and every D-class holds exactly one idempotent. Agrees with
  //! is_clifford on every finite semigroup.
  bool is_clifford_by_d_classes(FiniteSemigroup const& S);

  //! Has an identity and an inverse for every element.
  bool is_group(FiniteSemigroup const& S);

  //! The identity of a monoid, if any.
  std::optional<element_t> identity_element(FiniteSemigroup const& S);

  //! Index and period of the monogenic subsemigroup generated by \p a:
  //! a^(index + period) = a^index with both minimal.
  struct IndexPeriod {
    std::size_t index;
    std::size_t period;
    bool        operator==(IndexPeriod const&) const = default;
  };

  IndexPeriod index_period(FiniteSemigroup const& S, element_t a);

}  // namespace crossconn

#endif  // CROSSCONN_SEMIGROUP_HPP_
