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

#ifndef FGLOG_HOPF_ALGEBRA_HPP
#define FGLOG_HOPF_ALGEBRA_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "fglog/rational.hpp"

namespace fglog {

struct Generator {
  std::string name;
  int degree = 1;
};

// Exponent vector over the generators of an algebra.
struct Monomial {
  std::vector<int> exponents;

  friend auto operator<=>(const Monomial &, const Monomial &) = default;
};

struct CoproductTerm {
  Monomial left;
  Monomial right;
  Rational coef;
};

// Input description of a graded connected commutative Hopf algebra: a free
// commutative algebra on graded generators, truncated above degree_bound,
// with the coproduct given on generators. Generators absent from
// `coproduct` are primitive.
struct AlgebraSpec {
  std::vector<Generator> generators;
  int degree_bound = 0;
  std::map<std::string, std::vector<CoproductTerm>> coproduct;
};

// Structure constants on the monomial basis. Index 0 is always the unit.
struct HopfTables {
  struct Product {
    int index = -1;  // -1: the product has degree above the bound
    Rational coef;
  };
  struct CoproductEntry {
    int left = 0;
    int right = 0;
    Rational coef;
  };
  struct LinearEntry {
    int index = 0;
    Rational coef;
  };

  std::vector<Product> product;  // row-major, dimension x dimension
  std::vector<std::vector<CoproductEntry>> coproduct;
  std::vector<Rational> counit;
  std::vector<std::vector<LinearEntry>> antipode;
};

class HopfAlgebra {
 public:
  // build_hopf_algebra. Throws SpecError for a non-counital or
  // inhomogeneous coproduct and DegreeOverflow when a generator or a
  // coproduct monomial does not fit under the degree bound.
  static std::shared_ptr<const HopfAlgebra> build(const AlgebraSpec &spec);

  // Wraps raw tables without validation. Used to study corrupted
  // structures with verify_hopf_axioms.
  static std::shared_ptr<const HopfAlgebra> from_tables(AlgebraSpec spec,
                                                        HopfTables tables);

  [[nodiscard]] const AlgebraSpec &spec() const { return spec_; }
  [[nodiscard]] const std::vector<Generator> &generators() const {
    return spec_.generators;
  }
  [[nodiscard]] int degree_bound() const { return spec_.degree_bound; }
  [[nodiscard]] int dimension() const { return static_cast<int>(basis_.size()); }
  [[nodiscard]] int min_generator_degree() const { return min_gen_degree_; }

  [[nodiscard]] const Monomial &basis(int i) const { return basis_[i]; }
  [[nodiscard]] int degree(int i) const { return degrees_[i]; }
  [[nodiscard]] int degree_of(const Monomial &m) const;
  [[nodiscard]] std::optional<int> index_of(const Monomial &m) const;
  [[nodiscard]] std::optional<int> generator_index(const std::string &name) const;

  [[nodiscard]] const HopfTables &tables() const { return tables_; }
  [[nodiscard]] const HopfTables::Product &product(int i, int j) const {
    return tables_.product[static_cast<std::size_t>(i) * basis_.size() + j];
  }
  [[nodiscard]] bool monomial_products() const { return monomial_products_; }

  // "1", "t", "t^2", "t·u^3".
  [[nodiscard]] std::string monomial_name(int i) const;

 private:
  HopfAlgebra() = default;
  void enumerate_basis();

  AlgebraSpec spec_;
  std::vector<Monomial> basis_;
  std::vector<int> degrees_;
  std::map<Monomial, int> index_;
  HopfTables tables_;
  int min_gen_degree_ = 1;
  bool monomial_products_ = true;
};

using AlgebraPtr = std::shared_ptr<const HopfAlgebra>;

namespace builtin {

// Degree-0 algebra Q with basis {1}.
AlgebraSpec trivial_spec(int degree_bound);
// Polynomial algebra on primitive generators.
AlgebraSpec primitive_spec(const std::vector<Generator> &generators,
                           int degree_bound);
// Q[t1, t2], deg t1 = 1, deg t2 = 2, t1 primitive and
// Δt2 = t2⊗1 + t1⊗t1 + 1⊗t2.
AlgebraSpec divided_square_spec(int degree_bound);

// Names accepted by lookup(): "trivial", "qt1", "qt2", "qtu", "qt12".
std::optional<AlgebraSpec> lookup(const std::string &name, int degree_bound);

}  // namespace builtin

}  // namespace fglog

#endif  // FGLOG_HOPF_ALGEBRA_HPP
