#pragma once

#include <random>
#include <string>
#include <vector>

#include "trideg/json_io.hpp"

namespace trideg::testing {

inline TensorDocument load_corpus(const std::string& name) {
    return load_tensor_document(std::string(TRIDEG_CORPUS_DIR) + "/" + name + ".json");
}

inline Tensor3 make_tensor(const std::vector<std::vector<std::vector<int>>>& e) {
    std::vector<std::vector<std::vector<Rational>>> r;
    for (const auto& plane : e) {
        r.emplace_back();
        for (const auto& row : plane) {
            r.back().emplace_back();
            for (int v : row) r.back().back().emplace_back(v);
        }
    }
    return Tensor3::from_entries(r);
}

inline QVector qvec(const std::vector<int>& v) {
    QVector out;
    for (int x : v) out.emplace_back(x);
    return out;
}

// Deterministic across platforms: raw mt19937 output, no distribution objects.
struct Rng {
    std::mt19937 gen;
    explicit Rng(std::uint32_t seed) : gen(seed) {}

    int range(int lo, int hi) { return lo + static_cast<int>(gen() % std::uint32_t(hi - lo + 1)); }
    Rational rat(int lo, int hi) { return Rational(range(lo, hi)); }

    Tensor3 tensor(int p, int q, int r, int lo, int hi) {
        Tensor3 t(p, q, r);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j)
                for (int k = 0; k < r; ++k) t.set(i, j, k, rat(lo, hi));
        return t;
    }

    Tensor3 nonzero_tensor(int p, int q, int r, int lo, int hi) {
        while (true) {
            Tensor3 t = tensor(p, q, r, lo, hi);
            if (!t.is_zero()) return t;
        }
    }

    QMatrix matrix(int rows, int cols, int lo, int hi) {
        QMatrix m(rows, QVector(cols));
        for (auto& row : m)
            for (auto& v : row) v = rat(lo, hi);
        return m;
    }

    QMatrix invertible(int n, int lo = -2, int hi = 2) {
        while (true) {
            QMatrix m = matrix(n, n, lo, hi);
            if (determinant(m) != 0) return m;
        }
    }

    QVector vec(int n, int lo, int hi) {
        QVector v(n);
        for (auto& x : v) x = rat(lo, hi);
        return v;
    }

    QVector nonzero_vec(int n, int lo, int hi) {
        while (true) {
            QVector v = vec(n, lo, hi);
            for (const auto& x : v)
                if (x != 0) return v;
        }
    }

    MPoly linear_form(const VarList& vars, int lo = -3, int hi = 3) {
        while (true) {
            MPoly f(vars);
            for (std::size_t i = 0; i < vars.size(); ++i)
                f = f + MPoly::variable(vars, static_cast<int>(i)) * rat(lo, hi);
            if (!f.is_zero()) return f;
        }
    }
};

// Numeric row-vector times matrix helpers for the kernel-system identities.
inline QVector vec_mat(const QVector& v, const QMatrix& m) {
    QVector out(m[0].size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) out[j] += v[i] * m[i][j];
    return out;
}

inline QVector mat_vec(const QMatrix& m, const QVector& v) {
    QVector out(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

} // namespace trideg::testing
