#include "qec/kl.hpp"

#include "qec/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace qec {

namespace {

StateVec apply_chain(const StateVec& state, const ErrorChain& chain) {
    StateVec out = state;
    for (const auto& placed : chain.factors) {
        if (placed.reg < 0 || placed.reg >= state.registers()) {
            throw std::invalid_argument("kl_check: error '" + chain.str() +
                                        "' targets register " + std::to_string(placed.reg) +
                                        " outside 0.." + std::to_string(state.registers() - 1));
        }
        out = apply_local(out, placed.label.to_operator(state.levels()), placed.reg);
    }
    return out;
}

// All pairwise <a_i|b_j>, chunked so each multi-MB state streams from
// memory once per chunk rather than once per (i, j) pair.
std::vector<std::vector<cplx>> gram(const std::vector<StateVec>& va,
                                    const std::vector<StateVec>& vb) {
    const auto& kern = kernels::active();
    const std::size_t na = va.size(), nb = vb.size();
    const std::size_t dim = na ? va[0].dim() : 0;
    std::vector<std::vector<cplx>> m(na, std::vector<cplx>(nb));
    constexpr std::size_t chunk = 1024;
    for (std::size_t x0 = 0; x0 < dim; x0 += chunk) {
        const std::size_t len = std::min(chunk, dim - x0);
        for (std::size_t i = 0; i < na; ++i) {
            const cplx* a = va[i].amps().data() + x0;
            for (std::size_t j = 0; j < nb; ++j) {
                m[i][j] += kern.cdot(a, vb[j].amps().data() + x0, len);
            }
        }
    }
    return m;
}

} // namespace

KLReport kl_check(const CodeSpec& code, const std::vector<ErrorChain>& errors,
                  double tolerance) {
    if (code.codewords.empty()) {
        throw std::invalid_argument("kl_check: code has no codewords");
    }
    if (code_gram_deviation(code) > kCheckTol) {
        throw std::invalid_argument("kl_check: codewords are not orthonormal");
    }
    const std::size_t n_err = errors.size();
    const std::size_t n_code = code.codewords.size();

    KLReport report;
    report.tolerance = tolerance;
    report.error_labels.reserve(n_err);
    for (const auto& chain : errors) report.error_labels.push_back(chain.str());
    report.lambda.assign(n_err, std::vector<cplx>(n_err));

    std::vector<StateVec> lifted_a;
    std::vector<StateVec> lifted_b;
    for (std::size_t a = 0; a < n_err; ++a) {
        lifted_a.clear();
        for (const auto& w : code.codewords) lifted_a.push_back(apply_chain(w, errors[a]));
        for (std::size_t b = a; b < n_err; ++b) {
            if (b == a) {
                lifted_b = lifted_a;
            } else {
                lifted_b.clear();
                for (const auto& w : code.codewords) lifted_b.push_back(apply_chain(w, errors[b]));
            }
            const auto m = gram(lifted_a, lifted_b);
            cplx diag_mean = 0.0;
            std::vector<cplx> diag(n_code);
            for (std::size_t i = 0; i < n_code; ++i) {
                for (std::size_t j = 0; j < n_code; ++j) {
                    if (i == j) {
                        diag[i] = m[i][j];
                        diag_mean += m[i][j];
                    } else {
                        report.max_offdiag_violation =
                            std::max(report.max_offdiag_violation, std::abs(m[i][j]));
                    }
                }
            }
            diag_mean /= static_cast<double>(n_code);
            for (std::size_t i = 0; i < n_code; ++i) {
                report.max_lambda_inconsistency =
                    std::max(report.max_lambda_inconsistency, std::abs(diag[i] - diag_mean));
            }
            report.lambda[a][b] = diag_mean;
            report.lambda[b][a] = std::conj(diag_mean);
        }
    }

    report.passed = report.max_offdiag_violation <= tolerance &&
                    report.max_lambda_inconsistency <= tolerance;
    return report;
}

std::vector<ErrorChain> single_register_error_set(int N, int registers) {
    if (N < 2) throw std::invalid_argument("single_register_error_set: N must be >= 2");
    if (registers < 1) {
        throw std::invalid_argument("single_register_error_set: registers must be >= 1");
    }
    std::vector<ErrorChain> out;
    out.push_back(ErrorChain{{PlacedError{ErrorLabel::identity(), 0}}});
    for (int reg = 0; reg < registers; ++reg) {
        for (int i = 1; i < N; ++i) {
            out.push_back(ErrorChain{{PlacedError{ErrorLabel::r(i), reg}}});
        }
        for (const auto& [m, n] : index_pairs(N)) {
            out.push_back(ErrorChain{{PlacedError{ErrorLabel::p(m, n), reg}}});
        }
        for (const auto& [m, n] : index_pairs(N)) {
            out.push_back(ErrorChain{{PlacedError{ErrorLabel::q(m, n), reg}}});
        }
    }
    return out;
}

} // namespace qec
