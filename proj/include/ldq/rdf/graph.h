/*
 * Copyright 2026 The ldq Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LDQ_RDF_GRAPH_H_
#define LDQ_RDF_GRAPH_H_

#include <cstddef>
#include <iterator>
#include <map>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ldq/rdf/term.h"
#include "ldq/rdf/triple.h"

namespace ldq {

// Read-only view over a run of stored triples.
class TripleRange {
 public:
  class iterator {
   public:
    using iterator_category = std::random_access_iterator_tag;
    using value_type = Triple;
    using difference_type = std::ptrdiff_t;
    using pointer = const Triple*;
    using reference = const Triple&;

    iterator() = default;
    explicit iterator(const Triple* const* p) : p_(p) {}
    reference operator*() const { return **p_; }
    pointer operator->() const { return *p_; }
    iterator& operator++() { ++p_; return *this; }
    iterator operator++(int) { auto old = *this; ++p_; return old; }
    iterator& operator--() { --p_; return *this; }
    iterator operator--(int) { auto old = *this; --p_; return old; }
    iterator& operator+=(difference_type n) { p_ += n; return *this; }
    iterator& operator-=(difference_type n) { p_ -= n; return *this; }
    iterator operator+(difference_type n) const { return iterator(p_ + n); }
    friend iterator operator+(difference_type n, iterator it) { return it + n; }
    iterator operator-(difference_type n) const { return iterator(p_ - n); }
    difference_type operator-(const iterator& o) const { return p_ - o.p_; }
    reference operator[](difference_type n) const { return *p_[n]; }
    friend bool operator==(const iterator&, const iterator&) = default;
    friend auto operator<=>(const iterator&, const iterator&) = default;

   private:
    const Triple* const* p_ = nullptr;
  };

  TripleRange() = default;
  explicit TripleRange(std::span<const Triple* const> items) : items_(items) {}

  iterator begin() const { return iterator(items_.data()); }
  iterator end() const { return iterator(items_.data() + items_.size()); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

 private:
  std::span<const Triple* const> items_;
};

// Set of triples with exact hash indexes on subject, predicate and object.
// Iteration follows insertion order.
class Graph {
 public:
  Graph() = default;
  Graph(const Graph& other);
  Graph& operator=(const Graph& other);
  Graph(Graph&&) noexcept = default;
  Graph& operator=(Graph&&) noexcept = default;

  // Returns true iff `t` was not already present.
  bool Insert(Triple t);
  bool Contains(const Triple& t) const { return triples_.contains(t); }

  std::size_t size() const { return order_.size(); }
  bool empty() const { return order_.empty(); }

  TripleRange triples() const { return TripleRange(order_); }
  TripleRange::iterator begin() const { return triples().begin(); }
  TripleRange::iterator end() const { return triples().end(); }

  TripleRange WithSubject(const Term& s) const { return Lookup(by_subject_, s); }
  TripleRange WithPredicate(const Term& p) const { return Lookup(by_predicate_, p); }
  TripleRange WithObject(const Term& o) const { return Lookup(by_object_, o); }

  // Distinct subjects in first-appearance order.
  const std::vector<Term>& subjects() const { return subjects_; }
  bool HasSubject(const Term& s) const { return by_subject_.contains(s); }

  void InsertAll(const Graph& other);

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  using Index = std::unordered_map<Term, std::vector<const Triple*>>;
  static TripleRange Lookup(const Index& index, const Term& key);

  std::unordered_set<Triple> triples_;
  std::vector<const Triple*> order_;
  Index by_subject_;
  Index by_predicate_;
  Index by_object_;
  std::vector<Term> subjects_;
};

// The outgoing triples of one subject.
struct Frame {
  Term subject;
  std::vector<Triple> triples;
};

struct Degree {
  std::size_t out_count = 0;
  std::size_t in_count = 0;
  friend bool operator==(const Degree&, const Degree&) = default;
};

// Triples matched by `pattern`, in graph order. Picks the most selective
// bound position's index before checking the full pattern.
std::vector<Triple> MatchPattern(const Graph& graph, const TriplePattern& pattern);

// Throws kStructural for a literal subject.
Frame FrameOf(const Graph& graph, const Term& subject);

Degree DegreeOf(const Graph& graph, const Term& term);

struct Dataset {
  Graph default_graph;
  std::map<Term, Graph> named_graphs;

  // Default graph plus every named graph, merged.
  Graph Union() const;
  std::size_t statement_count() const;
  bool empty() const { return statement_count() == 0; }

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

}  // namespace ldq

#endif  // LDQ_RDF_GRAPH_H_
