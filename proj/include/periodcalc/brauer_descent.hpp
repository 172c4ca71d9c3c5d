/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <bitset>
#include <memory>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "periodcalc/hodge_motives.hpp"

namespace periodcalc {

inline constexpr int kMaxGroupOrder = 128;
using ElementSet = std::bitset<kMaxGroupOrder>;

// Finite group on 0..N-1 with 0 the identity.
class FiniteGroup {
 public:
  // Validates the axioms; associativity is checked exhaustively for N <= 120.
  static std::shared_ptr<const FiniteGroup> from_table(std::string name, const std::vector<std::vector<int>>& table);
  // Closure of the generators in S_degree. Elements sorted, identity first. Points are 0-based.
  static std::shared_ptr<const FiniteGroup> from_permutations(std::string name,
                                                              const std::vector<std::vector<int>>& gens);

  const std::string& name() const { return name_; }
  int order() const { return n_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(inv(x), g), x); }  // x^-1 g x
  int element_order(int g) const;
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int g) const { return class_of_[g]; }
  // Permutation images when built from permutations; empty otherwise.
  const std::vector<std::vector<int>>& permutations() const { return perms_; }

 private:
  FiniteGroup() = default;
  void finish();

  std::string name_;
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> perms_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct Subgroup {
  ElementSet elements;
  int order = 0;

  std::vector<int> list() const;
  bool contains(int g) const { return elements.test(static_cast<size_t>(g)); }
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
};

// Throws NotASubgroup unless the set is closed, contains 0 and is nonempty.
Subgroup make_subgroup(const FiniteGroup& G, const std::vector<int>& elements);
Subgroup whole_group(const FiniteGroup& G);
Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens);

const std::vector<std::vector<int>>& conjugacy_classes(const FiniteGroup& G);
bool is_solvable(const FiniteGroup& G, const Subgroup& H);
bool is_solvable(const FiniteGroup& G);

// Every subgroup, sorted by (order, element list).
std::vector<Subgroup> all_subgroups(const FiniteGroup& G);
// One per conjugacy class; each the smallest member of its class.
std::vector<Subgroup> subgroup_class_representatives(const FiniteGroup& G);

using Rational = boost::rational<long long>;

struct ClassFunction {
  GroupPtr group;
  std::vector<Rational> values;  // indexed by conjugacy class

  Rational at(int g) const { return values[static_cast<size_t>(group->class_of(g))]; }
  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction operator*(long long k) const;
  bool operator==(const ClassFunction& o) const { return values == o.values; }

  static ClassFunction trivial(GroupPtr G);
};

// <f, g> = |G|^-1 sum_x f(x) g(x); values are rational here.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

ClassFunction induce_trivial(const GroupPtr& G, const Subgroup& H);

struct BrauerTerm {
  Subgroup H;
  long long n = 0;
};

struct BrauerDecomposition {
  GroupPtr group;
  std::vector<BrauerTerm> terms;
  bool fast_path = false;
  long long l1_norm = 0;

  ClassFunction sum() const;
  // sum_j n_j Ind 1 == 1_G and every H_j solvable.
  bool verify() const;
};

BrauerDecomposition brauer_decompose(const GroupPtr& G);

// Exact cyclotomic integers Z[x]/Phi_m(x), m <= 12.
class Cyclotomic {
 public:
  explicit Cyclotomic(int m = 1);
  static Cyclotomic root_power(int m, long long e);  // zeta_m^e

  int modulus() const { return m_; }
  const std::vector<long long>& coefficients() const { return c_; }
  Cyclotomic& operator+=(const Cyclotomic& o);
  // Exact division by an integer; throws InvalidInput if some coefficient is not divisible.
  Cyclotomic divided_by(long long k) const;
  bool operator==(const Cyclotomic& o) const { return m_ == o.m_ && c_ == o.c_; }
  std::string text() const;

 private:
  void reduce(std::vector<long long> raw);
  int m_;
  std::vector<long long> c_;
};

// lambda(g) = zeta_m^{exponent[g]} for g in N; other entries ignored.
struct LinearCharacter {
  int m = 1;
  std::vector<int> exponent;

  Cyclotomic value(int g) const { return Cyclotomic::root_power(m, exponent[static_cast<size_t>(g)]); }
  int order() const;
};

// All homomorphisms N -> mu_12 whose order divides one of 1..max_order.
std::vector<LinearCharacter> linear_characters(const FiniteGroup& G, const Subgroup& N, int max_order);

struct InductionRestrictionReport {
  bool holds = false;
  bool g_equals_hn = false;
  std::vector<Cyclotomic> lhs;  // Res_H Ind_N^G lambda at each h in H (in element order)
  std::vector<Cyclotomic> rhs;  // Ind_{H cap N}^H lambda
};

// Computes both sides without insisting on G = HN.
InductionRestrictionReport induction_restriction(const FiniteGroup& G, const Subgroup& N, const Subgroup& H,
                                                 const LinearCharacter& lambda);
// Throws HypothesisFailed if G != HN, InvalidInput if [G:N] != 2 or lambda is not a character of N.
bool verify_induction_restriction(const FiniteGroup& G, const Subgroup& N, const Subgroup& H,
                                  const LinearCharacter& lambda);

struct SweepStats {
  long long tuples = 0;        // (G, N, H, lambda) with G = HN
  long long failures = 0;
  long long off_hypothesis = 0;  // tuples with G != HN
  long long counterexamples = 0; // of those, identity fails
};
SweepStats induction_restriction_sweep(const FiniteGroup& G, int max_order);

std::vector<DescentDatum> descent_data_from_decomposition(const BrauerDecomposition& dec, int base_degree);

namespace groups {
GroupPtr cyclic(int n);
GroupPtr dihedral(int n);  // order 2n
GroupPtr symmetric(int n);
GroupPtr alternating(int n);
GroupPtr quaternion();
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
GroupPtr klein_four();
// "C5", "D4", "S3", "A5", "Q8", "V4", "C2xS3" style names.
GroupPtr by_name(const std::string& name);
// The fixture list exercised by the tests.
std::vector<GroupPtr> fixtures();
// Groups of order <= 48 used for the induction-restriction sweep.
std::vector<GroupPtr> sweep_groups();
}  // namespace groups

}  // namespace periodcalc
