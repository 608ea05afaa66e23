#pragma once
// Exact dense linear algebra over Q, sized for the small systems that show up
// in Cartan data, Clifford representations and truncated Koszul complexes.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace affine {

using Q = mpq_class;
using IVec = std::vector<int>;
using IMat = std::vector<IVec>;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

QMat to_q(const IMat& m);

/// Row-reduces in place; returns the pivot columns.
std::vector<int> rref(QMat& m);

int rank(QMat m);
Q det(QMat m);

/// Basis of {x : m x = 0}.
std::vector<QVec> nullspace(const QMat& m);

/// Throws std::domain_error when m is singular.
QMat inverse(const QMat& m);

QMat transpose(const QMat& m);
IMat transpose(const IMat& m);
IMat matmul(const IMat& a, const IMat& b);

/// Scales a rational vector to the primitive integer vector with the same
/// direction and the sign of its first nonzero entry.
IVec primitive_integer(const QVec& v);

std::string to_string(const Q& q);
std::string join(const IVec& v, const char* sep = " ");

}  // namespace affine
