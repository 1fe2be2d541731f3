// Copyright 2026 The fglog Authors.
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

#ifndef FGLOG_IO_HPP
#define FGLOG_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fglog/formal_group.hpp"
#include "fglog/hopf_algebra.hpp"
#include "fglog/series.hpp"
#include "fglog/tensor.hpp"

namespace fglog {

// Pretty printing. Elements read "3t^2", "t·u - 1/2", "2(t⊗t⊗t)";
// series read "x - 1/2·x^2" or "2(t⊗t)·X·Y". Output is deterministic.
std::string format_element(const TensorElement &e);
std::vector<std::string> default_variable_names(int nvars);
std::string format_series(const Series &s);
std::string format_series(const Series &s, const std::vector<std::string> &names);

// Inline element syntax: sums, products (juxtaposition, "*", "·"),
// integer or p/q scalars, powers "t^2", parentheses, and "⊗" or "(x)" for
// the tensor product. With arity 0 the arity is inferred; a bare scalar
// then becomes an element of H. Throws ParseError.
TensorElement parse_element(const AlgebraPtr &alg, std::string_view text, int arity = 0);

// JSON interchange. All functions take and return JSON text; ParseError on
// malformed input. Rationals are written as "p/q".
AlgebraSpec algebra_spec_from_json(std::string_view json);
std::string algebra_spec_to_json(const AlgebraSpec &spec);

// A list of terms [m1, ..., mk, "p/q"], each mi a monomial written as a
// list of generator names (["1"] or [] for the unit) or an exponent vector.
TensorElement element_from_json(const AlgebraPtr &alg, std::string_view json, int arity = 0);
std::string element_to_json(const TensorElement &e);

// {"variables", "order", "arity", "terms": [{"exp", "coeff"}]} plus an
// optional "polynomial" flag (default false: orders above N unknown) and an
// optional "exact_degrees" and "stable_degrees" certification profiles.
Series series_from_json(const AlgebraPtr &alg, std::string_view json);
std::string series_to_json(const Series &s);

// {"hopf": ..., "order": N, "series": {...}}. The "hopf" member is returned
// as raw JSON text for the caller to resolve.
struct GroupDocument {
  std::string hopf;
  int order = 0;
  std::string series;
};
GroupDocument group_document_from_json(std::string_view json);
std::string group_to_json(const std::string &hopf_json, const Series &f);

std::string report_to_json(const Report &r);
Report report_from_json(const AlgebraPtr &alg, std::string_view json);

}  // namespace fglog

#endif  // FGLOG_IO_HPP
