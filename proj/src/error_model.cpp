#include "qec/error_model.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qec {

namespace {

void check_levels(int N, const char* who) {
    if (N < 2) throw std::invalid_argument(std::string(who) + ": N must be >= 2");
}

void check_pair(int m, int n, int N, const char* who) {
    check_levels(N, who);
    if (m < 0 || n <= m || n > N - 1) {
        throw std::invalid_argument(std::string(who) + ": indices must satisfy 0 <= m < n <= N-1, got m=" +
                                    std::to_string(m) + " n=" + std::to_string(n));
    }
}

} // namespace

Operator make_R(int i, int N) {
    check_levels(N, "make_R");
    if (i < 1 || i > N - 1) {
        // i = 0 is deliberately excluded; R_0 is not in the generating set.
        throw std::invalid_argument("make_R: index must satisfy 1 <= i <= N-1, got i=" +
                                    std::to_string(i));
    }
    Operator op = Operator::identity(N);
    op.at(i, i) = -1.0;
    return op;
}

Operator make_P(int m, int n, int N) {
    check_pair(m, n, N, "make_P");
    Operator op = Operator::identity(N);
    op.at(m, m) = 0.0;
    op.at(n, n) = 0.0;
    op.at(m, n) = 1.0;
    op.at(n, m) = 1.0;
    return op;
}

Operator make_Q(int m, int n, int N) {
    check_pair(m, n, N, "make_Q");
    Operator op = Operator::identity(N);
    op.at(m, m) = 0.0;
    op.at(n, n) = 0.0;
    op.at(m, n) = 1.0;
    op.at(n, m) = -1.0;
    return op;
}

ErrorLabel ErrorLabel::identity() { return {}; }

ErrorLabel ErrorLabel::r(int i) {
    ErrorLabel l;
    l.kind = Kind::R;
    l.i = i;
    return l;
}

ErrorLabel ErrorLabel::p(int m, int n) {
    ErrorLabel l;
    l.kind = Kind::P;
    l.m = m;
    l.n = n;
    return l;
}

ErrorLabel ErrorLabel::q(int m, int n) {
    ErrorLabel l;
    l.kind = Kind::Q;
    l.m = m;
    l.n = n;
    return l;
}

ErrorLabel ErrorLabel::custom_matrix(Operator op, std::string name) {
    if (op.is_zero()) {
        throw std::invalid_argument("ErrorLabel: custom error matrix must be nonzero");
    }
    ErrorLabel l;
    l.kind = Kind::Custom;
    l.custom = std::make_shared<Operator>(std::move(op));
    l.custom_name = std::move(name);
    return l;
}

Operator ErrorLabel::to_operator(int N) const {
    switch (kind) {
        case Kind::Identity:
            return Operator::identity(N);
        case Kind::R:
            return make_R(i, N);
        case Kind::P:
            return make_P(m, n, N);
        case Kind::Q:
            return make_Q(m, n, N);
        case Kind::Custom:
            if (!custom || custom->dim() != N) {
                throw std::invalid_argument("ErrorLabel: custom matrix dim does not match N=" +
                                            std::to_string(N));
            }
            return *custom;
    }
    throw std::logic_error("ErrorLabel: bad kind");
}

std::string ErrorLabel::str() const {
    switch (kind) {
        case Kind::Identity:
            return "I";
        case Kind::R:
            return "R:" + std::to_string(i);
        case Kind::P:
            return "P:" + std::to_string(m) + "," + std::to_string(n);
        case Kind::Q:
            return "Q:" + std::to_string(m) + "," + std::to_string(n);
        case Kind::Custom:
            return custom_name;
    }
    return "?";
}

namespace {

std::pair<int, int> parse_pair(const std::string& text, const std::string& full) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("error label '" + full + "': expected m,n indices");
    }
    try {
        return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw std::invalid_argument("error label '" + full + "': bad integer index");
    }
}

Operator load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file '" + path + "'");
    nlohmann::json j;
    in >> j;
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("matrix file '" + path + "': expected a nonempty array of rows");
    }
    const int dim = static_cast<int>(j.size());
    Operator op(dim);
    for (int r = 0; r < dim; ++r) {
        const auto& row = j.at(r);
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            throw std::invalid_argument("matrix file '" + path + "': row " + std::to_string(r) +
                                        " is not length " + std::to_string(dim));
        }
        for (int c = 0; c < dim; ++c) {
            const auto& e = row.at(c);
            if (!e.is_array() || e.size() != 2) {
                throw std::invalid_argument("matrix file '" + path +
                                            "': entries must be [re, im] pairs");
            }
            op.at(r, c) = cplx(e.at(0).get<double>(), e.at(1).get<double>());
        }
    }
    return op;
}

} // namespace

ErrorLabel ErrorLabel::parse(const std::string& text) {
    if (text == "I") return identity();
    if (text.rfind("R:", 0) == 0) {
        try {
            return r(std::stoi(text.substr(2)));
        } catch (const std::exception&) {
            throw std::invalid_argument("error label '" + text + "': bad R index");
        }
    }
    if (text.rfind("P:", 0) == 0) {
        auto [m, n] = parse_pair(text.substr(2), text);
        return p(m, n);
    }
    if (text.rfind("Q:", 0) == 0) {
        auto [m, n] = parse_pair(text.substr(2), text);
        return q(m, n);
    }
    if (text.rfind("custom:@", 0) == 0) {
        const std::string path = text.substr(8);
        return custom_matrix(load_matrix_file(path), text);
    }
    throw std::invalid_argument("unrecognized error label '" + text +
                                "' (expected I, R:i, P:m,n, Q:m,n or custom:@file.json)");
}

std::string PlacedError::str() const { return label.str() + "@" + std::to_string(reg); }

PlacedError PlacedError::parse(const std::string& text) {
    const auto at = text.rfind('@');
    if (at == std::string::npos || at + 1 >= text.size()) {
        throw std::invalid_argument("placed error '" + text + "': expected '<label>@<register>'");
    }
    const std::string reg_text = text.substr(at + 1);
    if (reg_text.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("placed error '" + text + "': register must be an integer");
    }
    PlacedError pe;
    pe.label = ErrorLabel::parse(text.substr(0, at));
    pe.reg = std::stoi(reg_text);
    return pe;
}

std::string ErrorChain::str() const {
    std::string out;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k) out += "*";
        out += factors[k].str();
    }
    return out;
}

ErrorChain ErrorChain::parse(const std::string& text) {
    ErrorChain chain;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto star = text.find('*', start);
        const std::string part =
            text.substr(start, star == std::string::npos ? std::string::npos : star - start);
        chain.factors.push_back(PlacedError::parse(part));
        if (star == std::string::npos) break;
        start = star + 1;
    }
    if (chain.factors.empty()) {
        throw std::invalid_argument("error chain '" + text + "' is empty");
    }
    return chain;
}

int pair_index(int m, int n, int N) {
    check_pair(m, n, N, "pair_index");
    // Pairs (0,1), (0,2), ..., (0,N-1), (1,2), ... in lexicographic order.
    return m * N - m * (m + 1) / 2 + (n - m - 1);
}

std::vector<std::pair<int, int>> index_pairs(int N) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(N) * (N - 1) / 2);
    for (int m = 0; m < N; ++m) {
        for (int n = m + 1; n < N; ++n) out.emplace_back(m, n);
    }
    return out;
}

Decomposition decompose(const Operator& error) {
    const int N = error.dim();
    check_levels(N, "decompose");
    if (error.is_zero()) {
        throw std::invalid_argument("decompose: error matrix must be nonzero");
    }

    Decomposition d;
    d.levels = N;
    d.beta.resize(static_cast<std::size_t>(N - 1));
    const auto pairs = index_pairs(N);
    d.gamma.resize(pairs.size());
    d.delta.resize(pairs.size());

    // Off-diagonal part: only gamma_mn P_mn + delta_mn Q_mn contribute to the
    // (m,n)/(n,m) entries, with P symmetric and Q antisymmetric there.
    for (const auto& [m, n] : pairs) {
        const int k = pair_index(m, n, N);
        d.gamma[k] = (error.at(m, n) + error.at(n, m)) / 2.0;
        d.delta[k] = (error.at(m, n) - error.at(n, m)) / 2.0;
    }

    // Diagonal part: P_mn and Q_mn both carry 1 on diagonal entries outside
    // {m, n}.  With those subtracted, D_x = alpha + sum_i beta_i eps_i(x)
    // where eps_i(x) = -1 iff x = i, which solves in closed form.
    std::vector<cplx> diag(static_cast<std::size_t>(N));
    for (int x = 0; x < N; ++x) diag[x] = error.at(x, x);
    for (const auto& [m, n] : pairs) {
        const cplx gd = d.gamma[pair_index(m, n, N)] + d.delta[pair_index(m, n, N)];
        for (int x = 0; x < N; ++x) {
            if (x != m && x != n) diag[x] -= gd;
        }
    }
    cplx beta_sum = 0.0;
    for (int x = 1; x < N; ++x) {
        d.beta[x - 1] = (diag[0] - diag[x]) / 2.0;
        beta_sum += d.beta[x - 1];
    }
    d.alpha = diag[0] - beta_sum;
    return d;
}

namespace {

// Exact small-integer matrix for group enumeration; entries in {-1, 0, 1}.
using IntMat = std::vector<int8_t>;

IntMat int_identity(int N) {
    IntMat m(static_cast<std::size_t>(N) * N, 0);
    for (int i = 0; i < N; ++i) m[static_cast<std::size_t>(i) * N + i] = 1;
    return m;
}

IntMat int_matmul(const IntMat& a, const IntMat& b, int N) {
    IntMat out(static_cast<std::size_t>(N) * N, 0);
    for (int i = 0; i < N; ++i) {
        for (int k = 0; k < N; ++k) {
            const int aik = a[static_cast<std::size_t>(i) * N + k];
            if (!aik) continue;
            for (int j = 0; j < N; ++j) {
                out[static_cast<std::size_t>(i) * N + j] +=
                    static_cast<int8_t>(aik * b[static_cast<std::size_t>(k) * N + j]);
            }
        }
    }
    return out;
}

std::size_t factorial(int n) {
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
    return f;
}

} // namespace

GroupClosure generate_group(int N, std::size_t max_order) {
    check_levels(N, "generate_group");
    // The closure is the full signed permutation group of order 2^N * N!.
    // N >= 13 overflows nothing here but is far beyond any sane max_order.
    const std::size_t projected =
        N >= 13 ? static_cast<std::size_t>(-1) : (static_cast<std::size_t>(1) << N) * factorial(N);
    if (projected > max_order) {
        throw std::invalid_argument("generate_group: projected order 2^N*N! = " +
                                    (N >= 13 ? std::string("(overflow)") : std::to_string(projected)) +
                                    " exceeds max_order = " + std::to_string(max_order));
    }

    std::vector<IntMat> generators;
    for (int i = 1; i < N; ++i) {
        IntMat g = int_identity(N);
        g[static_cast<std::size_t>(i) * N + i] = -1;
        generators.push_back(std::move(g));
    }
    for (int n = 1; n < N; ++n) {
        IntMat g = int_identity(N);
        g[0] = 0;
        g[static_cast<std::size_t>(n) * N + n] = 0;
        g[static_cast<std::size_t>(n)] = 1;
        g[static_cast<std::size_t>(n) * N] = 1;
        generators.push_back(std::move(g));
    }

    std::set<IntMat> seen;
    std::vector<IntMat> frontier{int_identity(N)};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<IntMat> next;
        for (const auto& elem : frontier) {
            for (const auto& gen : generators) {
                IntMat prod = int_matmul(elem, gen, N);
                if (seen.insert(prod).second) {
                    if (seen.size() > max_order) {
                        throw std::runtime_error(
                            "generate_group: closure exceeded max_order during enumeration");
                    }
                    next.push_back(std::move(prod));
                }
            }
        }
        frontier = std::move(next);
    }

    GroupClosure result;
    result.order = seen.size();
    result.elements.reserve(seen.size());
    for (const auto& m : seen) {
        Operator op(N);
        for (int r = 0; r < N; ++r) {
            for (int c = 0; c < N; ++c) {
                op.at(r, c) = static_cast<double>(m[static_cast<std::size_t>(r) * N + c]);
            }
        }
        result.elements.push_back(std::move(op));
    }
    return result;
}

bool is_signed_permutation(const Operator& op) {
    const int d = op.dim();
    std::vector<int> col_hits(static_cast<std::size_t>(d), 0);
    for (int r = 0; r < d; ++r) {
        int row_hits = 0;
        for (int c = 0; c < d; ++c) {
            const cplx z = op.at(r, c);
            if (z == cplx{}) continue;
            if (z != cplx{1.0} && z != cplx{-1.0}) return false;
            ++row_hits;
            ++col_hits[static_cast<std::size_t>(c)];
        }
        if (row_hits != 1) return false;
    }
    return std::all_of(col_hits.begin(), col_hits.end(), [](int h) { return h == 1; });
}

} // namespace qec
