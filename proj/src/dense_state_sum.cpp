#include <Eigen/Dense>

#include "dw/state_sum.hpp"

namespace dw {

namespace {

using CMatrix = Eigen::MatrixXcd;

CMatrix unit_matrix(int d, int a, int b) {
    CMatrix m = CMatrix::Zero(d, d);
    m(a, b) = 1;
    return m;
}

StructureAlgebra with_matrix_involution(StructureAlgebra alg, int d, const CMatrix& j) {
    if (alg.dim != d * d) throw StateSumError("involution size does not match the matrix algebra");
    const CMatrix j_inv = j.inverse();
    std::vector<Scalar> inv(static_cast<std::size_t>(alg.dim) * alg.dim, 0.0);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const CMatrix img = j * unit_matrix(d, a, b).transpose() * j_inv;
            const int col = a * d + b;
            for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q) inv[static_cast<std::size_t>(p * d + q) * alg.dim + col] = img(p, q);
        }
    alg.involution = std::move(inv);
    return alg;
}

struct EdgeTerm {
    int first;
    int second;
    Scalar coefficient;
};

}  // namespace

StructureAlgebra matrix_algebra(int d) {
    if (d < 1) throw StateSumError("matrix size must be positive");
    StructureAlgebra alg;
    alg.dim = d * d;
    alg.mult.assign(static_cast<std::size_t>(alg.dim) * alg.dim * alg.dim, 0.0);
    alg.trace.assign(alg.dim, 0.0);
    for (int a = 0; a < d; ++a) {
        alg.trace[a * d + a] = static_cast<double>(d);
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                alg.mult[(static_cast<std::size_t>(a * d + b) * alg.dim + (b * d + c)) * alg.dim + (a * d + c)] = 1.0;
    }
    return alg;
}

StructureAlgebra with_transpose(StructureAlgebra a, int d) {
    return with_matrix_involution(std::move(a), d, CMatrix::Identity(d, d));
}

StructureAlgebra with_symplectic(StructureAlgebra a, int d) {
    if (d % 2 != 0) throw StateSumError("symplectic involution needs even size");
    CMatrix j = CMatrix::Zero(d, d);
    for (int i = 0; i < d / 2; ++i) {
        j(i, i + d / 2) = 1;
        j(i + d / 2, i) = -1;
    }
    return with_matrix_involution(std::move(a), d, j);
}

StructureAlgebra from_twisted(const TwistedGroupAlgebra& a) {
    const FiniteGroup& g = a.group();
    const int n = g.order();
    StructureAlgebra alg;
    alg.dim = n;
    alg.mult.assign(static_cast<std::size_t>(n) * n * n, 0.0);
    alg.trace.assign(n, 0.0);
    alg.trace[0] = static_cast<double>(n);
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) alg.mult[(static_cast<std::size_t>(x) * n + y) * n + g.mul(x, y)] = a.structure(x, y);
    if (a.has_star()) {
        std::vector<Scalar> inv(static_cast<std::size_t>(n) * n, 0.0);
        for (Element x = 0; x < n; ++x) inv[static_cast<std::size_t>(g.inv(x)) * n + x] = a.structure(x, g.inv(x));
        alg.involution = std::move(inv);
    }
    return alg;
}

std::complex<double> dense_state_sum(const StructureAlgebra& a, const GluedTriangulation& tri, bool use_star) {
    const int m = a.dim;
    if (use_star && !a.involution) throw StateSumError("dense *-state sum needs an involution");
    if (!use_star && !tri.consistently_oriented()) throw StateSumError("dense state sum needs a consistently oriented triangulation");

    CMatrix gram(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Scalar s = 0;
            for (int k = 0; k < m; ++k) s += a.structure(i, j, k) * a.trace[k];
            gram(i, j) = s;
        }
    const CMatrix v = gram.inverse();
    CMatrix v_star = v;
    if (use_star) {
        Eigen::Map<const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> inv(a.involution->data(), m, m);
        v_star = v * inv.transpose();
    }

    // T(e_i e_j e_k)
    std::vector<Scalar> t3(static_cast<std::size_t>(m) * m * m, 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int p = 0; p < m; ++p) {
                const Scalar sij = a.structure(i, j, p);
                if (sij == Scalar(0)) continue;
                for (int k = 0; k < m; ++k) {
                    Scalar s = 0;
                    for (int q = 0; q < m; ++q) s += a.structure(p, k, q) * a.trace[q];
                    t3[(static_cast<std::size_t>(i) * m + j) * m + k] += sij * s;
                }
            }

    const ContractionPlan plan = plan_contraction(tri);
    std::vector<std::vector<EdgeTerm>> terms(tri.edge_count());
    for (int e = 0; e < tri.edge_count(); ++e) {
        const CMatrix& w = tri.reversal(tri.edge_flags(e)[0]) ? v : v_star;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (std::abs(w(i, j)) > 1e-14) terms[e].push_back({i, j, w(i, j)});
    }

    std::vector<int> flag_index(tri.flag_count(), -1);
    std::complex<double> total = 0;
    auto descend = [&](auto&& self, std::size_t step, Scalar weight) -> void {
        if (step == plan.steps.size()) {
            total += weight;
            return;
        }
        const PlanStep& st = plan.steps[step];
        const auto flags = tri.edge_flags(st.edge);
        for (const EdgeTerm& term : terms[st.edge]) {
            flag_index[flags[0]] = term.first;
            flag_index[flags[1]] = term.second;
            Scalar w = weight * term.coefficient;
            for (int t : st.completes) {
                w *= t3[(static_cast<std::size_t>(flag_index[3 * t]) * m + flag_index[3 * t + 1]) * m + flag_index[3 * t + 2]];
                if (w == Scalar(0)) break;
            }
            if (w != Scalar(0)) self(self, step + 1, w);
        }
        flag_index[flags[0]] = flag_index[flags[1]] = -1;
    };
    descend(descend, 0, 1.0);
    return total;
}

}  // namespace dw
