#include "doctest.h"
#include "qschur/decomp.hpp"

using namespace qschur;

namespace {

LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s, 2); }

// Expected (2,2) decomposition patterns as lists of off-diagonal units
// (row index, col index) in the descending order lambda<0>,<1>,<2>,<7>,<8>.
Eigen::MatrixXi pattern(std::vector<std::tuple<int, int, int>> entries) {
    Eigen::MatrixXi d = Eigen::MatrixXi::Identity(5, 5);
    for (auto [i, j, v] : entries) d(i, j) = v;
    return d;
}

bool same(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

bool same(const Mat<LaurentPoly>& a, const Mat<LaurentPoly>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

} // namespace

TEST_CASE("gram golden entries") {
    Pipeline pipe = Pipeline::cyclotomic(2, 2);
    auto ws = enumerate_weights(2, 2);
    const GramMatrix& g01 = pipe.gram(ws[0], ws[1]);
    REQUIRE(g01.entries.rows() == 1);
    CHECK(g01.entries(0, 0) == P("q + q^-1"));
    const GramMatrix& g12 = pipe.gram(ws[1], ws[2]);
    REQUIRE(g12.entries.rows() == 1);
    CHECK(g12.entries(0, 0) == P("q^-2*Q1 - Q2"));
    const GramMatrix& gd = pipe.gram(ws[7], ws[7]);
    REQUIRE(gd.entries.rows() == 1);
    CHECK(gd.entries(0, 0) == P("1"));
}

TEST_CASE("generic decomposition matrix is the identity") {
    Pipeline pipe = Pipeline::cyclotomic(2, 2);
    DecompResult res = pipe.decomposition_matrix(nullptr, DecompMode::Full);
    CHECK(res.exact);
    CHECK(same(res.d, Eigen::MatrixXi::Identity(5, 5)));
    CHECK(res.block_classes.size() == 5);
}

TEST_CASE("first worked specialization: q = 2, Q1 = Q2 = 1") {
    Pipeline pipe = Pipeline::cyclotomic(2, 2);
    FieldConfig cfg = FieldConfig::rational(2, {1, 1});
    DecompResult res = pipe.decomposition_matrix(&cfg, DecompMode::Full);
    // Off-diagonal ones exactly at (lambda<1>, lambda<8>) and (lambda<0>, lambda<7>).
    CHECK(same(res.d, pattern({{1, 4, 1}, {0, 3, 1}})));
    // Blocks: {l8, l1}, {l7, l0}, {l2}.
    CHECK(res.block_classes ==
          std::vector<std::vector<int>>({{0, 3}, {1, 4}, {2}}));
    // Mode agreement.
    DecompResult res2 = pipe.decomposition_matrix(&cfg, DecompMode::PlusOnly);
    CHECK(same(res.d, res2.d));
}

TEST_CASE("q^2 = -1 with vanishing parameters has the multiplicity 2") {
    Pipeline pipe = Pipeline::cyclotomic(2, 2);
    FieldConfig cfg = FieldConfig::from_json_text(
        R"({"mode":"number_field","minpoly":"x^2+1","q":"x","Q":["0","0"]})");
    DecompResult res = pipe.decomposition_matrix(&cfg, DecompMode::Full);
    CHECK(same(res.d, pattern({{2, 4, 2}, {2, 3, 1}, {1, 4, 1}, {1, 2, 1},
                               {0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {3, 4, 1}})));
    CHECK(res.block_classes.size() == 1);
}

TEST_CASE("simple dimensions") {
    Pipeline pipe = Pipeline::cyclotomic(2, 2);
    auto ws = enumerate_weights(2, 2);
    // Generic: Delta = L everywhere; dim L(lambda<0>) sums to 10.
    auto generic = pipe.simple_dims(ws[0], nullptr);
    int total = 0;
    for (const auto& [bar, d] : generic) total += d;
    CHECK(total == 10);
    // dim L(nu)_nu = 1 for every nu in Lambda+.
    for (int idx : {0, 1, 2, 7, 8}) {
        auto dims = pipe.simple_dims(ws[size_t(idx)], nullptr);
        CHECK(dims.at(ws[size_t(idx)].bar) == 1);
    }
    // q^2 = -1, Q1 = Q2: [2] specializes to zero, so dim L(l0)_{l1} = 0.
    FieldConfig cfg = FieldConfig::from_json_text(
        R"({"mode":"number_field","minpoly":"x^2+1","q":"x","Q":["1","1"]})");
    auto dims = pipe.simple_dims(ws[0], &cfg);
    CHECK(dims.find(ws[1].bar) == dims.end());
}

TEST_CASE("sum of squared standard dimensions") {
    Pipeline pipe = Pipeline::cyclotomic(2, 2);
    int sum = 0;
    for (const auto& lam : pipe.lambda_plus()) {
        int dim = 0;
        for (const auto& mu : pipe.lattice()) {
            if (lam != mu && !ge(lam, mu)) continue;
            dim += pipe.generic_dim(lam, mu);
        }
        sum += dim * dim;
    }
    CHECK(sum == 210);
}

TEST_CASE("consistency sum on one specialization") {
    Pipeline pipe = Pipeline::cyclotomic(2, 2);
    FieldConfig cfg = FieldConfig::rational(2, {1, 1});
    DecompResult res = pipe.decomposition_matrix(&cfg, DecompMode::Full);
    const auto& plus = pipe.lambda_plus();
    std::vector<std::map<std::vector<int>, int>> dims;
    for (const auto& mu : plus) dims.push_back(pipe.simple_dims(mu, &cfg));
    for (size_t li = 0; li < plus.size(); ++li) {
        for (const auto& nu : pipe.lattice()) {
            if (plus[li] != nu && !ge(plus[li], nu)) continue;
            int lhs = 0;
            for (size_t mi = 0; mi < plus.size(); ++mi) {
                auto it = dims[mi].find(nu.bar);
                if (it != dims[mi].end()) lhs += res.d(int(li), int(mi)) * it->second;
            }
            CHECK(lhs == pipe.generic_dim(plus[li], nu));
        }
    }
}

TEST_CASE("linkage classes") {
    CHECK(linkage_classes(Eigen::MatrixXi::Identity(4, 4)).size() == 4);
    Eigen::MatrixXi d = Eigen::MatrixXi::Identity(3, 3);
    d(2, 0) = 1; // third row shares the first column
    auto cls = linkage_classes(d);
    CHECK(cls == std::vector<std::vector<int>>({{0, 2}, {1}}));
}

TEST_CASE("parallel warm-up agrees with serial evaluation") {
    Pipeline serial = Pipeline::cyclotomic(2, 2);
    Pipeline parallel = Pipeline::cyclotomic(2, 2);
    parallel.warm_gram_parallel(4);
    FieldConfig cfg = FieldConfig::rational(3, {2, 5});
    DecompResult a = serial.decomposition_matrix(&cfg, DecompMode::Full);
    DecompResult b = parallel.decomposition_matrix(&cfg, DecompMode::Full);
    CHECK(same(a.d, b.d));
    for (const auto& lam : serial.lambda_plus()) {
        for (const auto& mu : serial.lattice()) {
            if (lam != mu && !ge(lam, mu)) continue;
            CHECK(same(serial.gram(lam, mu).entries, parallel.gram(lam, mu).entries));
        }
    }
}
