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

#ifndef LDQ_TAXONOMY_TAXONOMY_H_
#define LDQ_TAXONOMY_TAXONOMY_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ldq/result_kind.h"

namespace ldq {

enum class Source { kPm, kLD, kPD, kSF, kKahn, kLDpattern, kODP };
enum class CategoryKind { kFunctionType, kPattern, kDimension };

std::string_view SourceName(Source source);
std::string_view CategoryKindName(CategoryKind kind);
// Source implied by an id's namespace prefix; ids without a known prefix are pm.
Source SourceOfId(std::string_view id);

// Which metric operation computes a category, and with what parameter.
struct EvaluatorBinding {
  std::string operation;
  // Selects one field of a multi-valued result, or configures the operation
  // (e.g. "external_ratio" of link_stats, "is_standard" of format_profile).
  std::string parameter;
  // The operation needs caller-chosen arguments (a pattern, a term, a pair
  // of statements) and so cannot run inside a whole-dataset assessment.
  bool requires_arguments = false;
  std::vector<std::string> auxiliary;
};

struct MetricCategory {
  std::string id;
  std::string label;
  Source source = Source::kPm;
  std::vector<std::string> parents;
  CategoryKind kind = CategoryKind::kFunctionType;
  ResultKind result_kind = ResultKind::kNone;
  std::vector<std::string> signature;
  // Definition and rationale; names which link is provisional.
  std::string note;
  std::optional<EvaluatorBinding> evaluator;
  bool provisional = false;
};

enum class ViewKind { kRelation, kConcept };

struct DerivedView {
  std::string origin;
  ViewKind kind = ViewKind::kRelation;
  std::string derived_id;
  friend bool operator==(const DerivedView&, const DerivedView&) = default;
};

struct TaxonomyDiagnostic {
  std::string code;  // cycle, root, partition, alias, evaluator, parent
  std::string message;
  std::vector<std::string> ids;
};

// Quality-function categories as a DAG over parent edges, plus alias links
// and the relation/concept views derived from them. Read-only once loaded.
class TaxonomyGraph {
 public:
  static constexpr std::string_view kRoot = "pm:quality";
  static constexpr std::string_view kContentBranch = "pm:description-content_quality";
  static constexpr std::string_view kMediumBranch = "pm:description-medium_quality";
  static constexpr std::string_view kContainerBranch = "pm:description-container_quality";

  // Throws kStructural on a duplicate id.
  void Add(MetricCategory category);
  void AddAlias(std::string alias, std::string canonical);
  // Registers `view`; throws kDerivation when the derived id is taken.
  void AddView(DerivedView view);

  // Canonical id for an id or alias. Whitespace runs count as '_'. Throws
  // kUnknownCategory when nothing matches.
  std::string Resolve(std::string_view id) const;
  std::optional<std::string> TryResolve(std::string_view id) const;
  const MetricCategory& Get(std::string_view id) const;
  const MetricCategory* Find(std::string_view canonical_id) const;

  // Ids in insertion order.
  const std::vector<std::string>& ids() const { return order_; }
  const std::map<std::string, MetricCategory, std::less<>>& nodes() const { return nodes_; }
  const std::map<std::string, std::string, std::less<>>& aliases() const { return aliases_; }
  const std::map<std::string, DerivedView, std::less<>>& views() const { return views_; }
  const DerivedView* FindView(std::string_view derived_id) const;

  // Direct children in insertion order.
  const std::vector<std::string>& Children(std::string_view id) const;
  // Reflexive: includes `id` itself.
  std::set<std::string> Descendants(std::string_view id) const;
  std::set<std::string> Ancestors(std::string_view id) const;

  // True iff `b` is reachable from `a` along parent edges (reflexive).
  bool IsSubtype(std::string_view a, std::string_view b) const;

  std::string version() const { return version_; }
  void set_version(std::string version) { version_ = std::move(version); }

 private:
  std::map<std::string, MetricCategory, std::less<>> nodes_;
  std::vector<std::string> order_;
  std::map<std::string, std::vector<std::string>, std::less<>> children_;
  std::map<std::string, std::string, std::less<>> aliases_;
  std::map<std::string, DerivedView, std::less<>> views_;
  std::string version_ = "unversioned";
};

// Names of every metric operation the built-in evaluators implement.
const std::set<std::string>& BuiltinOperations();

// The built-in quality-function taxonomy with its evaluator bindings and
// derived views.
const TaxonomyGraph& BuiltinTaxonomy();
TaxonomyGraph LoadBuiltin();

// Structural checks: acyclic parents, a single root at pm:quality, the three
// description branches disjoint, aliases resolving, evaluator operations
// drawn from `operations`, parents existing.
std::vector<TaxonomyDiagnostic> Validate(const TaxonomyGraph& graph,
                                         const std::set<std::string>& operations);
inline std::vector<TaxonomyDiagnostic> Validate(const TaxonomyGraph& graph) {
  return Validate(graph, BuiltinOperations());
}

// Naming scheme for views:
//   <Q>_of_this_<a1>_wrt_this_<a2>  ->  <a1>_<adj Q>_with_this_<a2>
//   <Q>_of_this_<a>                 ->  <a>_<adj Q>
//   anything else                   ->  has_<local name>
// where <adj Q> maps each "_and_"-separated quality noun to its adjective
// (consistency -> consistent, non-redundancy -> non-redundant, ...). Concept
// views capitalize the first letter and read "with_this_one" as
// "with_any_other_one_in_the_KB". Concepts over non-boolean functions are
// Object_measured_by_<local name>. The namespace prefix is kept.
// Throws kDerivation for a relation view over a non-boolean function and
// kUnknownCategory for an unknown origin.
DerivedView DeriveView(const TaxonomyGraph& graph, std::string_view origin, ViewKind kind);
std::string_view ViewKindName(ViewKind kind);

// Indented subtree rendering in the style of the source figures, one node per
// line with its source tag, result kind and evaluator marker. Nodes with
// several parents appear under each of them.
std::string RenderTree(const TaxonomyGraph& graph, std::string_view root,
                       std::optional<int> depth);

// {"version": ..., "nodes": [{id, label, parents, source, kind, result_kind,
//  signature, note, evaluator}], "aliases": {...}, "views": [...]}.
std::string ExportJson(const TaxonomyGraph& graph);

}  // namespace ldq

#endif  // LDQ_TAXONOMY_TAXONOMY_H_
