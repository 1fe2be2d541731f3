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

// Internal term-level kernels shared by tensors and series.

#ifndef FGLOG_SRC_KERNELS_HPP
#define FGLOG_SRC_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "fglog/hopf_algebra.hpp"
#include "fglog/tensor.hpp"

namespace fglog::detail {

using Term = TensorElement::Term;

// Unordered accumulation of terms; finish() sorts, merges and drops zeros.
// With `dense` set and a small key space, a reusable dense array replaces
// sort-merge; worth it only when the buffer serves many finish() rounds.
class TermBuffer {
 public:
  TermBuffer(const HopfAlgebra &alg, int arity, bool dense = false);

  void add(std::uint64_t key, const Rational &c);
  void add_product(std::uint64_t key, const Rational &a, const Rational &b);
  [[nodiscard]] bool empty() const { return raw_.empty() && touched_.empty(); }
  std::vector<Term> finish();

 private:
  std::size_t dense_index(std::uint64_t key) const;

  int arity_;
  int dim_;
  bool dense_ = false;
  std::vector<Term> raw_;
  std::vector<Rational> dense_vals_;
  std::vector<std::uint8_t> dense_used_;
  std::vector<std::uint64_t> touched_;
};

// buf += scale * a * b, slot-wise, dropping slots above the degree bound.
// Returns the least total degree among dropped terms, or kExact.
int multiply_into(TermBuffer &buf, const HopfAlgebra &alg, int arity,
                  const std::vector<Term> &a, const std::vector<Term> &b);

int total_degree(const HopfAlgebra &alg, int arity, std::uint64_t key);

std::vector<Term> add_terms(const std::vector<Term> &a, const std::vector<Term> &b,
                            bool subtract);

std::vector<Term> scale_terms(const std::vector<Term> &a, const Rational &c);

// Slot-map kernels; return the new term list (arity changes are implied).
std::vector<Term> apply_slot_terms(const HopfAlgebra &alg, int arity,
                                   const std::vector<Term> &a, int slot, SlotMap map);
// Returns dropped-degree like multiply_into through `dropped`.
std::vector<Term> contract_terms(const HopfAlgebra &alg, int arity,
                                 const std::vector<Term> &a, int first, int &dropped);
std::vector<Term> embed_terms(int arity, const std::vector<Term> &a, int target_arity,
                              const std::vector<int> &slots);
std::vector<Term> permute_terms(int arity, const std::vector<Term> &a,
                                const std::vector<int> &perm);

}  // namespace fglog::detail

#endif  // FGLOG_SRC_KERNELS_HPP
