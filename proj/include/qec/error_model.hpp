#pragma once

#include "qec/config.hpp"
#include "qec/operators.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace qec {

// Single-register error operators.
//
// R_i flips the sign of the |i> component (phase error); P_mn swaps |m> and
// |n> (level flip); Q_mn sends |m> to -|n> and |n> to |m> (combined flip and
// phase).  Together with the identity they span all N x N matrices.
Operator make_R(int i, int N);
Operator make_P(int m, int n, int N);
Operator make_Q(int m, int n, int N);

// Symbolic name of an error, resolvable to a matrix for a given N.
// String syntax: "I", "R:i", "P:m,n", "Q:m,n", "custom:@file.json".
struct ErrorLabel {
    enum class Kind { Identity, R, P, Q, Custom };

    Kind kind = Kind::Identity;
    int i = 0;       // R index, 1 <= i <= N-1
    int m = 0, n = 0; // P/Q indices, 0 <= m < n <= N-1
    std::shared_ptr<const Operator> custom; // nonzero matrix when Kind::Custom
    std::string custom_name;                // display name for Custom labels

    static ErrorLabel identity();
    static ErrorLabel r(int i);
    static ErrorLabel p(int m, int n);
    static ErrorLabel q(int m, int n);
    static ErrorLabel custom_matrix(Operator op, std::string name = "custom");

    Operator to_operator(int N) const;
    std::string str() const;

    // Parses the string syntax above.  "custom:@file" entries are loaded
    // from the referenced JSON file (an N x N matrix as [[[re,im],...],...]).
    static ErrorLabel parse(const std::string& text);
};

// An error fixed to a register.  Serialized as "<label>@<register>".
struct PlacedError {
    ErrorLabel label;
    int reg = 0;

    std::string str() const;
    static PlacedError parse(const std::string& text);
};

// A product of placed errors applied left to right; almost always a single
// factor, longer chains model multi-register composites.
// Serialized with '*' between factors.
struct ErrorChain {
    std::vector<PlacedError> factors;

    std::string str() const;
    static ErrorChain parse(const std::string& text);
};

// Coefficients of E = alpha I + sum_i beta_i R_i
//                     + sum_{m<n} (gamma_mn P_mn + delta_mn Q_mn).
// Restricting to m < n makes the N^2 basis matrices independent and the
// decomposition unique.
struct Decomposition {
    int levels = 0;
    cplx alpha{};
    std::vector<cplx> beta;  // beta[j] multiplies R_{j+1}
    std::vector<cplx> gamma; // indexed by pair_index(m, n, N)
    std::vector<cplx> delta;
};

// Position of (m, n), m < n, in lexicographic order over all such pairs.
int pair_index(int m, int n, int N);
std::vector<std::pair<int, int>> index_pairs(int N);

Decomposition decompose(const Operator& error);

// Closure of {R_1..R_{N-1}, P_01..P_{0,N-1}} under multiplication.  All
// entries stay in {-1, 0, 1}, so elements are deduplicated exactly.
struct GroupClosure {
    std::vector<Operator> elements;
    std::size_t order = 0;
};

GroupClosure generate_group(int N, std::size_t max_order = 10000);

// True when op has exactly one +-1 entry per row and column, zero elsewhere.
bool is_signed_permutation(const Operator& op);

} // namespace qec
