#ifndef MSUB_NORMALIZE_HPP
#define MSUB_NORMALIZE_HPP

// Conjugation moves that normalize the binary profile of a subspace C_n of
// Mat_n(K), and the rct-injectivity certificate built on top of them.

#include "msub/errors.hpp"
#include "msub/matspace.hpp"

#include <string>
#include <vector>

namespace msub {

enum class MoveKind { generic_vector, unit_triangular, permutation };
enum class Branch { double_pass, single_pass };

/// Shape of the conjugator used to make dim C_k e_k = d_k.
enum class GenericForm {
  /// T e_k = v and T e_j = e_j for j > k (columns left of k completed to a basis).
  pass_one,
  /// T = I with column k replaced by v, where v_k = 1.
  pivot_column,
};

const char* to_string(MoveKind k);
const char* to_string(Branch b);

struct Move {
  MoveKind kind;
  std::size_t level;
  DenseMatrix t;
};

struct MoveOutcome {
  DenseMatrix t;
  MatrixSubspace c_n;
};

struct NormalizationResult {
  DenseMatrix t_total;
  MatrixSubspace c_n_final;
  BinaryProfile profile;
  Branch branch;
  std::vector<Move> log;
};

/// dim C_j e_j >= rank over K(x_j) of { C (e_k + x_j e_j) : C in C_j }.
bool zeroL_condition(const MatrixSubspace& c_n, std::size_t j, std::size_t k);

/// Makes dim C_k e_k = d_k. A no-op (t = I) when that already holds.
MoveOutcome move_generic_vector(const MatrixSubspace& c_n, std::size_t k, GenericForm form = GenericForm::pass_one);

/// Lower-triangular conjugation after which C_k e_k is spanned by unit vectors.
MoveOutcome move_unit_triangular(const MatrixSubspace& c_n, std::size_t k);

/// Permutes coordinates 1..s (s < k maximal with B_sk = 1) so that column k of
/// B is decreasing above the diagonal.
MoveOutcome move_permutation(const MatrixSubspace& c_n, std::size_t k);

/// Runs the full normalization. Throws FieldTooSmall when #K < d_n and
/// InternalError (with the move log) if a promised postcondition fails.
NormalizationResult normalize_main3(const MatrixSubspace& c_n);

/// Human-readable list of violated normalization postconditions for a final
/// profile; empty when all hold.
std::vector<std::string> main3_violations(const BinaryProfile& p, Field f, bool identity_in_c_n);

bool rows_increasing(const BinaryProfile& p);
bool columns_decreasing_above_diagonal(const BinaryProfile& p);

/// { C in c + K I : rct_r(C) = 0 } equals span{I}.
bool main2_conclusion_holds(const MatrixSubspace& c, std::size_t r);

struct Main2Certificate {
  DenseMatrix t;
  std::size_t r;
};

/// Finds t, r such that main2_conclusion_holds(conjugate(C, t), r) for the
/// constraint space C of m. Throws PreconditionViolated unless I is not in C
/// and 0 < dim C < n; FieldTooSmall when #K < d_n(C + K I).
Main2Certificate apply_main2(const MatrixSubspace& m);

std::string describe_log(const std::vector<Move>& log);

}  // namespace msub

#endif  // MSUB_NORMALIZE_HPP
