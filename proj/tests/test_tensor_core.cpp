#include <doctest.h>

#include "helpers.hpp"
#include "trideg/classify.hpp"
#include "trideg/errors.hpp"

using namespace trideg;
using namespace trideg::testing;

namespace {
QMatrix qmat(const std::vector<std::vector<int>>& rows) {
    QMatrix m;
    for (const auto& r : rows) m.push_back(qvec(r));
    return m;
}
} // namespace

TEST_CASE("slices") {
    const Tensor3 a11 = load_corpus("example_3_11").tensor;
    CHECK(slice(a11, Axis::Z, 0) == qmat({{1, 0, 1}, {0, 0, 0}, {0, 1, 0}}));
    const Tensor3 a10 = load_corpus("example_3_10").tensor;
    CHECK(slice(a10, Axis::Z, 2) == qmat({{1, 0, 0}, {1, -1, 0}, {2, 0, 0}}));
    CHECK(slice(Tensor3(2, 3, 4), Axis::Y, 1) == QMatrix(2, QVector(4, Rational(0))));
    CHECK_THROWS_AS(slice(a11, Axis::Z, 4), DimensionError);
}

TEST_CASE("combine_slices") {
    const Tensor3 a = load_corpus("example_3_11").tensor;
    CHECK(combine_slices(a, Axis::Z, identity_matrix(4)) == a);

    // Swapping two z-slices is an involution.
    QMatrix swap01 = identity_matrix(4);
    std::swap(swap01[0], swap01[1]);
    const Tensor3 swapped = combine_slices(a, Axis::Z, swap01);
    CHECK_FALSE(swapped == a);
    CHECK(combine_slices(swapped, Axis::Z, swap01) == a);

    // The new slices really are the E^T-combinations of the old ones.
    Rng rng(5);
    const QMatrix e = rng.invertible(4);
    const Tensor3 b = combine_slices(a, Axis::Z, e);
    for (int lam = 0; lam < 4; ++lam) {
        QMatrix expect(a.p(), QVector(a.q(), Rational(0)));
        for (int k = 0; k < 4; ++k)
            for (int i = 0; i < a.p(); ++i)
                for (int j = 0; j < a.q(); ++j) expect[i][j] += e[k][lam] * a.at(i, j, k);
        CHECK(slice(b, Axis::Z, lam) == expect);
    }

    QMatrix singular(4, QVector(4, Rational(1)));
    CHECK_THROWS_AS(combine_slices(a, Axis::Z, singular), ValueError);
}

TEST_CASE("flattenings and index ranks") {
    const Tensor3 rem = load_corpus("remark_2_3").tensor;
    const IndexRanks r = index_ranks(rem);
    std::multiset<int> ranks{r.x, r.y, r.z};
    CHECK(ranks == std::multiset<int>{3, 2, 2});
    CHECK(r.z == 3); // the long axis carries the three independent slices

    // Rank-one tensor u (x) v (x) w.
    Rng rng(7);
    const QVector u = rng.nonzero_vec(3, -3, 3), v = rng.nonzero_vec(2, -3, 3), w = rng.nonzero_vec(4, -3, 3);
    Tensor3 one(3, 2, 4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 4; ++k) one.set(i, j, k, u[i] * v[j] * w[k]);
    const IndexRanks r1 = index_ranks(one);
    CHECK(r1 == IndexRanks{1, 1, 1});
    CHECK(essential_format(one) == EssentialFormat{1, 1, 1});

    CHECK(index_ranks(Tensor3(2, 2, 2)) == IndexRanks{0, 0, 0});

    // Fixed layout of the x-flattening: column (j,k) -> j*r + k.
    const Flattening fx = flattening(rem, Axis::X);
    REQUIRE(fx.matrix.size() == 2);
    REQUIRE(fx.matrix[0].size() == 6);
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 3; ++k) CHECK(fx.matrix[1][j * 3 + k] == rem.at(1, j, k));
}

TEST_CASE("index ranks are invariant under invertible slice combinations") {
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const Tensor3 a = rng.nonzero_tensor(rng.range(2, 4), rng.range(2, 4), rng.range(2, 4), -3, 3);
        const IndexRanks before = index_ranks(a);
        Tensor3 b = a;
        for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) b = combine_slices(b, ax, rng.invertible(b.extent(ax)));
        CHECK(index_ranks(b) == before);
    }
}

TEST_CASE("essential format examples") {
    CHECK(essential_format(load_corpus("concise_224").tensor) == EssentialFormat{2, 2, 4});

    // Type IV embedded in (2,2,3) with a zero third z-slice.
    const Tensor3 iv = load_corpus("type_IV_223").tensor;
    CHECK(essential_format(iv) == EssentialFormat{2, 2, 2});

    // Zero-padded rank-one tensor.
    Tensor3 t(2, 2, 3);
    t.set(0, 0, 0, Rational(5));
    CHECK(essential_format(t) == EssentialFormat{1, 1, 1});
}

TEST_CASE("reduce_to_essential") {
    // Already concise: all three changes are identities.
    const Tensor3 c = load_corpus("type_VI_223").tensor;
    const EssentialReduction rc = reduce_to_essential(c);
    CHECK(rc.reduced == c);
    CHECK(rc.ex == identity_matrix(2));
    CHECK(rc.ey == identity_matrix(2));
    CHECK(rc.ez == identity_matrix(3));

    // z-slices S, S, 2S collapse to a single slice.
    Rng rng(17);
    QMatrix s = rng.matrix(2, 2, -3, 3);
    while (rank(s) == 0) s = rng.matrix(2, 2, -3, 3);
    Tensor3 t(2, 2, 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            t.set(i, j, 0, s[i][j]);
            t.set(i, j, 1, s[i][j]);
            t.set(i, j, 2, Rational(2) * s[i][j]);
        }
    const EssentialReduction rt = reduce_to_essential(t);
    CHECK(essential_format(t).r == 1);
    CHECK(slice(rt.reduced, Axis::Z, 1) == QMatrix(2, QVector(2, Rational(0))));
    CHECK(slice(rt.reduced, Axis::Z, 2) == QMatrix(2, QVector(2, Rational(0))));
    CHECK_FALSE(rt.reduced.is_zero());

    // No reduction possible along a full-rank axis.
    const Tensor3 rem = load_corpus("remark_2_3").tensor;
    const EssentialReduction rr = reduce_to_essential(rem);
    for (int k = 0; k < 3; ++k) {
        bool nonzero = false;
        for (const auto& row : slice(rr.reduced, Axis::Z, k))
            for (const auto& v : row) nonzero = nonzero || v != 0;
        CHECK(nonzero);
    }

    CHECK_THROWS_AS(reduce_to_essential(Tensor3(2, 2, 2)), ZeroTensorError);
}

TEST_CASE("reduce_to_essential leaves a concise leading block") {
    Rng rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const Tensor3 a = rng.nonzero_tensor(rng.range(1, 3), rng.range(1, 3), rng.range(2, 4), -2, 2);
        const EssentialFormat f = essential_format(a);
        const EssentialReduction red = reduce_to_essential(a);
        CHECK(essential_format(red.reduced) == f);
        // Trailing slices along each axis vanish.
        for (int i = f.p; i < a.p(); ++i)
            CHECK(slice(red.reduced, Axis::X, i) == QMatrix(a.q(), QVector(a.r(), Rational(0))));
        for (int j = f.q; j < a.q(); ++j)
            CHECK(slice(red.reduced, Axis::Y, j) == QMatrix(a.p(), QVector(a.r(), Rational(0))));
        for (int k = f.r; k < a.r(); ++k)
            CHECK(slice(red.reduced, Axis::Z, k) == QMatrix(a.p(), QVector(a.q(), Rational(0))));
        // The leading block has full index ranks.
        std::vector<std::vector<std::vector<Rational>>> block;
        for (int i = 0; i < std::max(f.p, 1); ++i) {
            block.emplace_back();
            for (int j = 0; j < std::max(f.q, 1); ++j) {
                block.back().emplace_back();
                for (int k = 0; k < std::max(f.r, 1); ++k)
                    block.back().back().push_back(red.reduced.at(i, j, k));
            }
        }
        const Tensor3 core = Tensor3::from_entries(block);
        CHECK(essential_format(core) == f);
        // The reported change matrices reproduce the reduction.
        Tensor3 replay = combine_slices(a, Axis::X, red.ex);
        replay = combine_slices(replay, Axis::Y, red.ey);
        replay = combine_slices(replay, Axis::Z, red.ez);
        CHECK(replay == red.reduced);
    }
}

TEST_CASE("associated matrices") {
    const VarList x2 = make_vars("x", 2);
    const Tensor3 diag = load_corpus("type_IV_222").tensor;
    const PolyMatrix l = assoc_matrix(diag, Axis::X);
    CHECK(l.at(0, 0) == parse_mpoly("x1", x2));
    CHECK(l.at(0, 1).is_zero());
    CHECK(l.at(1, 0).is_zero());
    CHECK(l.at(1, 1) == parse_mpoly("x2", x2));

    const Tensor3 a10 = load_corpus("example_3_10").tensor;
    const VarList x3 = make_vars("x", 3), y3 = make_vars("y", 3), zz = make_vars("z", 4);
    const PolyMatrix l10 = assoc_matrix(a10, Axis::X);
    const char* l_rows[3][4] = {
        {"x1 + x2 + x3", "x2 + 2*x3", "x1 + x2 + 2*x3", "x1 + 2*x2 + x3"},
        {"x2 + x3", "x1 + x3", "-x2", "x1 + x2 + x3"},
        {"x1 + 2*x3", "x2 + x3", "0", "x1 + x2 + x3"},
    };
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 4; ++k) CHECK(l10.at(j, k) == parse_mpoly(l_rows[j][k], x3));

    const PolyMatrix m10 = assoc_matrix(a10, Axis::Y);
    const char* m_rows[3][4] = {
        {"y1 + y3", "y2", "y1", "y1 + y2 + y3"},
        {"y1 + y2", "y1 + y3", "y1 - y2", "2*y1 + y2 + y3"},
        {"y1 + y2 + 2*y3", "2*y1 + y2 + y3", "2*y1", "y1 + y2 + y3"},
    };
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 4; ++k) CHECK(m10.at(i, k) == parse_mpoly(m_rows[i][k], y3));

    const Tensor3 a11 = load_corpus("example_3_11").tensor;
    const PolyMatrix n11 = assoc_matrix(a11, Axis::Z);
    const char* n_rows[3][3] = {{"z1", "z4", "z1"}, {"z4", "z2", "0"}, {"z2", "z1", "z3"}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(n11.at(i, j) == parse_mpoly(n_rows[i][j], zz));
}

TEST_CASE("trilinear polynomial and evaluation") {
    const Tensor3 t1 = load_corpus("type_I_222").tensor;
    const VarList vars = {"x1", "x2", "y1", "y2", "z1", "z2"};
    CHECK(poly_pa(t1) == parse_mpoly("x1*y1*z1", vars));
    CHECK(eval_fa(t1, qvec({0, 1}), qvec({0, 1}), qvec({0, 1})) == Rational(0));

    const Tensor3 t4 = load_corpus("type_IV_222").tensor;
    CHECK(eval_fa(t4, qvec({1, 1}), qvec({1, 1}), qvec({1, 1})) == Rational(2));
    CHECK_THROWS_AS(eval_fa(t4, qvec({1}), qvec({1, 1}), qvec({1, 1})), DimensionError);
}

TEST_CASE("eval_fa agrees with evaluating the trilinear polynomial") {
    Rng rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const Tensor3 a = rng.tensor(rng.range(1, 3), rng.range(1, 3), rng.range(1, 3), -4, 4);
        const QVector x = rng.vec(a.p(), -3, 3), y = rng.vec(a.q(), -3, 3), z = rng.vec(a.r(), -3, 3);
        QVector all = x;
        all.insert(all.end(), y.begin(), y.end());
        all.insert(all.end(), z.begin(), z.end());
        CHECK(eval_fa(a, x, y, z) == eval(poly_pa(a), all));
    }
}

TEST_CASE("kernel-system matrix identities hold after specialization") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const Tensor3 a = rng.tensor(rng.range(1, 4), rng.range(1, 4), rng.range(1, 4), -4, 4);
        const QVector x = rng.vec(a.p(), -3, 3), y = rng.vec(a.q(), -3, 3), z = rng.vec(a.r(), -3, 3);
        const QMatrix lx = assoc_matrix(a, Axis::X).evaluated(x);
        const QMatrix my = assoc_matrix(a, Axis::Y).evaluated(y);
        const QMatrix nz = assoc_matrix(a, Axis::Z).evaluated(z);
        CHECK(vec_mat(y, lx) == vec_mat(x, my)); // tY L = tX M
        CHECK(vec_mat(x, nz) == mat_vec(lx, z)); // tX N = t(L Z)
        CHECK(mat_vec(my, z) == mat_vec(nz, y)); // M Z = N Y
    }
}
