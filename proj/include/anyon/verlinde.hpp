#pragma once

#include <vector>

#include "anyon/model.hpp"

namespace anyon {

// (f_a)_{c,b} = N^c_{ab}
struct RegularRep {
  std::vector<Matrix> f;
};

struct IdempotentSet {
  std::vector<Matrix> p;
};

RegularRep regular_representation(const AnyonModel& model);

// p_a = S_{1a} sum_b conj(S_{ba}) f_b
IdempotentSet idempotents(const AnyonModel& model);

// f_b rebuilt as sum_a (S_{ba} / S_{1a}) p_a
RegularRep reconstruct_from_idempotents(const AnyonModel& model, const IdempotentSet& p);

// S Pi^-1 D Pi D^-1 Pi^-1 S^-1 with Pi(x,y) = [x = perm(y)] and D = diag(d).
Matrix lambda_matrix(const AnyonModel& model, const Permutation& perm);

// Sum_a S_{ba} conj(S_{d,perm(a)}); agrees with lambda_matrix on abelian models.
Matrix abelian_lambda_matrix(const AnyonModel& model, const Permutation& perm);

}  // namespace anyon
