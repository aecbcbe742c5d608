#pragma once

#include "qec/codes.hpp"
#include "qec/config.hpp"
#include "qec/error_model.hpp"

#include <string>
#include <vector>

namespace qec {

// Result of checking <i|A^dag B|j> = lambda_{A,B} delta_ij over an error set.
struct KLReport {
    std::vector<std::string> error_labels;
    std::vector<std::vector<cplx>> lambda; // lambda[a][b], Hermitian
    double max_offdiag_violation = 0.0;
    double max_lambda_inconsistency = 0.0;
    double tolerance = kKlTol;
    bool passed = false;
};

// Evaluates the correctability condition for every pair of errors in the
// list, each lifted to the code's register space.  For pair (A, B) the
// matrix M_ij = <i_enc|A^dag B|j_enc> must be lambda * I: the off-diagonal
// maximum and the spread of the diagonal around its mean are the two
// violation metrics.  M^{BA} = (M^{AB})^dag exactly, so only unordered
// pairs are evaluated and lambda is mirrored by conjugation.
KLReport kl_check(const CodeSpec& code, const std::vector<ErrorChain>& errors,
                  double tolerance = kKlTol);

// The identity plus every R_i, P_mn, Q_mn on every register: a spanning
// set for all single-register errors, so passing it certifies the full
// error class.
std::vector<ErrorChain> single_register_error_set(int N, int registers);

} // namespace qec
