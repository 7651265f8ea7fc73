// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Golden data lives inline; runtimes are reported per criterion.
#include <chrono>
#include <iostream>

#include "qschur/decomp.hpp"
#include "qschur/presented.hpp"
#include "qschur/tensor.hpp"

using namespace qschur;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    bool pass = true;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Criterion(std::string n) : name(std::move(n)) {}
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            std::cout << "    FAILED: " << what << "\n";
        }
    }
    ~Criterion() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << (pass ? "PASS" : "FAIL") << " - " << name << " (" << ms << " ms)\n";
        if (!pass) ++failures;
    }
};

LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s, 2); }

constexpr int P11 = 1, P21 = 2, P12 = 3;

FMonomial M(std::vector<std::pair<int, int>> letters) {
    FMonomial m;
    m.letters = std::move(letters);
    return m;
}

// The worked homogeneous bases of the standard modules for (2,2), by
// (lambda index, mu index) in the enumeration order.
std::map<std::pair<int, int>, std::vector<FMonomial>> worked_bases() {
    std::map<std::pair<int, int>, std::vector<FMonomial>> b;
    b[{0, 0}] = {M({})};
    b[{0, 1}] = {M({{P11, 1}})};
    b[{0, 2}] = {M({{P21, 1}, {P11, 1}})};
    b[{0, 3}] = {M({{P12, 1}, {P21, 1}, {P11, 1}})};
    b[{0, 4}] = {M({{P11, 2}})};
    b[{0, 5}] = {M({{P21, 1}, {P11, 2}})};
    b[{0, 6}] = {M({{P12, 1}, {P21, 1}, {P11, 2}})};
    b[{0, 7}] = {M({{P21, 2}, {P11, 2}})};
    b[{0, 8}] = {M({{P12, 1}, {P21, 2}, {P11, 2}})};
    b[{0, 9}] = {M({{P12, 2}, {P21, 2}, {P11, 2}})};
    b[{1, 1}] = {M({})};
    b[{1, 2}] = {M({{P21, 1}})};
    b[{1, 3}] = {M({{P12, 1}, {P21, 1}})};
    b[{1, 5}] = {M({{P11, 1}, {P21, 1}})};
    b[{1, 6}] = {M({{P12, 1}, {P11, 1}, {P21, 1}})};
    b[{1, 8}] = {M({{P21, 1}, {P12, 1}, {P11, 1}, {P21, 1}})};
    b[{2, 2}] = {M({})};
    b[{2, 3}] = {M({{P12, 1}})};
    b[{2, 5}] = {M({{P11, 1}})};
    b[{2, 6}] = {M({{P12, 1}, {P11, 1}})};
    b[{2, 7}] = {M({{P21, 1}, {P11, 1}})};
    b[{2, 8}] = {M({{P21, 1}, {P12, 1}, {P11, 1}}), M({{P12, 1}, {P21, 1}, {P11, 1}})};
    b[{2, 9}] = {M({{P12, 1}, {P21, 1}, {P12, 1}, {P11, 1}})};
    b[{7, 7}] = {M({})};
    b[{7, 8}] = {M({{P12, 1}})};
    b[{7, 9}] = {M({{P12, 2}})};
    b[{8, 8}] = {M({})};
    return b;
}

bool entries_equal(const Mat<LaurentPoly>& got, const std::vector<std::vector<LaurentPoly>>& want) {
    if (got.rows() != int(want.size())) return false;
    for (int i = 0; i < got.rows(); ++i) {
        if (got.cols() != int(want[size_t(i)].size())) return false;
        for (int j = 0; j < got.cols(); ++j) {
            if (got(i, j) != want[size_t(i)][size_t(j)]) return false;
        }
    }
    return true;
}

Eigen::MatrixXi pattern(const std::vector<std::tuple<int, int, int>>& entries) {
    Eigen::MatrixXi d = Eigen::MatrixXi::Identity(5, 5);
    for (auto [i, j, v] : entries) d(i, j) = v;
    return d;
}

bool mat_equal(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

std::string show(const Eigen::MatrixXi& d) {
    std::string s;
    for (int i = 0; i < d.rows(); ++i) {
        for (int j = 0; j < d.cols(); ++j) s += std::to_string(d(i, j)) + " ";
        s += "| ";
    }
    return s;
}

void criterion1_gram_golden(Pipeline& pipe, const std::vector<Weight>& ws) {
    Criterion c("criterion 1: Gram golden tables (App-style forced bases, symbolic)");
    auto bases = worked_bases();
    auto gram_with = [&](int li, int mi) -> const GramMatrix& {
        auto it = bases.find({li, mi});
        return pipe.gram(ws[size_t(li)], ws[size_t(mi)],
                         it == bases.end() ? nullptr : &it->second);
    };
    c.require(entries_equal(gram_with(0, 1).entries, {{P("q + q^-1")}}), "M(l0)_{l1}");
    c.require(entries_equal(gram_with(0, 2).entries, {{P("q + q^-1") * P("q^2*Q1 - Q2")}}),
              "M(l0)_{l2}");
    c.require(entries_equal(gram_with(0, 7).entries, {{P("Q1 - Q2") * P("q^2*Q1 - Q2")}}),
              "M(l0)_{l7}");
    c.require(entries_equal(gram_with(0, 8).entries,
                            {{P("q + q^-1") * P("Q1 - Q2") * P("q^2*Q1 - Q2")}}),
              "M(l0)_{l8}");
    c.require(entries_equal(gram_with(1, 2).entries, {{P("q^-2*Q1 - Q2")}}), "M(l1)_{l2}");
    c.require(entries_equal(gram_with(1, 8).entries, {{P("Q1 - Q2") * P("q^-2*Q1 - Q2")}}),
              "M(l1)_{l8}");
    c.require(entries_equal(gram_with(2, 7).entries, {{P("q") * P("q^-2*Q1 - Q2")}}),
              "M(l2)_{l7}");
    {
        const GramMatrix& g = gram_with(2, 8);
        LaurentPoly d = P("q^-2*Q1 - Q2");
        bool ok = entries_equal(g.entries, {{P("Q1 - Q2"), P("q") * d},
                                            {P("q") * d, P("q + q^-1") * P("q") * d}});
        c.require(ok, "M(l2)_{l8} entries");
        if (g.entries.rows() == 2) {
            LaurentPoly det = g.entries(0, 0) * g.entries(1, 1) - g.entries(0, 1) * g.entries(1, 0);
            c.require(det == P("q^-2*Q1 - Q2") * P("q^2*Q1 - Q2"), "M(l2)_{l8} determinant");
        }
    }
    c.require(entries_equal(gram_with(7, 8).entries, {{P("q + q^-1")}}), "M(l7)_{l8}");
    for (const auto& [key, forced] : bases) {
        (void)forced;
        c.require(pipe.gram(ws[size_t(key.first)], ws[size_t(key.second)]).lattice_ok,
                  "lattice check at forced basis");
    }
}

void criterion2_decomposition_tables(Pipeline& pipe) {
    Criterion c("criterion 2: all nine worked decomposition matrices for (2,2)");
    struct Case {
        std::string name;
        std::string cfg;
        Eigen::MatrixXi want;
    };
    // Index order: l0=0, l1=1, l2=2, l7=3, l8=4 (descending enumeration).
    std::vector<Case> cases = {
        {"q=2, Q1=Q2=1", R"({"mode":"rational","q":"2","Q":["1","1"]})",
         pattern({{1, 4, 1}, {0, 3, 1}})},
        {"q=2, Q2=q^-2 Q1", R"({"mode":"rational","q":"2","Q":["1","1/4"]})",
         pattern({{2, 3, 1}, {1, 2, 1}})},
        {"q=2, Q2=q^2 Q1", R"({"mode":"rational","q":"2","Q":["1","4"]})",
         pattern({{2, 4, 1}, {0, 2, 1}})},
        {"q^2=-1, generic Q", R"({"mode":"number_field","minpoly":"x^2+1","q":"x","Q":["1","2"]})",
         pattern({{3, 4, 1}, {0, 1, 1}})},
        {"q^2=-1, Q1=Q2", R"({"mode":"number_field","minpoly":"x^2+1","q":"x","Q":["1","1"]})",
         pattern({{3, 4, 1}, {1, 4, 1}, {0, 4, 1}, {0, 3, 1}, {0, 1, 1}})},
        {"q^2=-1, Q2=-Q1", R"({"mode":"number_field","minpoly":"x^2+1","q":"x","Q":["1","-1"]})",
         pattern({{3, 4, 1}, {2, 3, 1}, {1, 2, 1}, {0, 3, 1}, {0, 2, 1}, {0, 1, 1}})},
        {"q=1, Q1=Q2=0", R"({"mode":"rational","q":"1","Q":["0","0"]})",
         pattern({{2, 4, 1}, {2, 3, 1}, {1, 4, 1}, {1, 2, 1}, {0, 3, 1}, {0, 2, 1}})},
        {"q=2, Q1=Q2=0", R"({"mode":"rational","q":"2","Q":["0","0"]})",
         pattern({{2, 4, 1}, {2, 3, 1}, {1, 4, 1}, {1, 2, 1}, {0, 3, 1}, {0, 2, 1}})},
        {"q^2=-1, Q1=Q2=0", R"({"mode":"number_field","minpoly":"x^2+1","q":"x","Q":["0","0"]})",
         pattern({{2, 4, 2}, {2, 3, 1}, {1, 4, 1}, {1, 2, 1}, {0, 1, 1}, {0, 2, 1},
                  {0, 3, 1}, {0, 4, 1}, {3, 4, 1}})},
    };
    for (const auto& cs : cases) {
        FieldConfig cfg = FieldConfig::from_json_text(cs.cfg);
        DecompResult res = pipe.decomposition_matrix(&cfg, DecompMode::Full);
        bool ok = mat_equal(res.d, cs.want);
        c.require(ok, cs.name + (ok ? "" : ": got " + show(res.d)));
        c.require(res.exact, cs.name + ": exact status");
    }
}

void criterion3_eta_golden(const std::shared_ptr<SchurData>& S, const std::vector<Weight>& ws) {
    Criterion c("criterion 3: eta golden data for (2,2)");
    auto eval_expr = [&](const Weight& lam, const Fraction& scalar,
                         const std::vector<GWord>& words) {
        HeckeElem acc = S->hecke().m(lam) * scalar;
        for (const auto& w : words) {
            acc += S->full(S->eval_word(lam, w.f_word, w.e_word)) * w.coeff;
        }
        return acc;
    };
    auto F2 = [&](const std::string& s) { return Fraction(P(s)); };
    struct Expected {
        int idx;
        Fraction scalar;
        std::vector<GWord> words;
    };
    std::vector<Expected> table = {
        {0, Fraction::zero(2), {}},
        {1, F2("Q1*q^-2 - Q2"), {{F2("Q1") * F2("q - q^-1"), {P11}, {P11}}}},
        {2, Fraction::zero(2), {{-Fraction::one(2), {P21}, {P21}}}},
        {3, Fraction::zero(2), {}},
        {4, F2("Q1*q^3 + Q1*q - Q2*q - Q2*q^-1"), {}},
        {5, F2("Q1*q^-1 - Q2*q"), {{-F2("q"), {P11, P21}, {P21, P11}}}},
        {6, F2("Q1 - Q2"), {}},
        {7, Fraction::zero(2), {{-Fraction::one(2), {P21}, {P21}}}},
        {8, Fraction::zero(2), {{-Fraction::one(2), {P21}, {P21}}}},
        {9, Fraction::zero(2), {}},
    };
    for (const auto& ex : table) {
        const EtaExpr& e = S->eta(ws[size_t(ex.idx)], P21);
        c.require(e.scalar == ex.scalar,
                  "scalar of eta at lambda<" + std::to_string(ex.idx) + ">");
        c.require(eval_expr(ws[size_t(ex.idx)], e.scalar, e.words) ==
                      eval_expr(ws[size_t(ex.idx)], ex.scalar, ex.words),
                  "word part of eta at lambda<" + std::to_string(ex.idx) + ">");
    }
    // Interior positions carry the bare quantum integer.
    for (const auto& lam : ws) {
        for (int p : {P11, P12}) {
            const EtaExpr& e = S->eta(lam, p);
            c.require(e.words.empty(), "interior eta has no words");
            c.require(e.scalar == Fraction(quantum_int(lam.at(p) - lam.at(p + 1), 2)),
                      "interior eta scalar");
        }
    }
}

void criterion4_identity_suites() {
    Criterion c("criterion 4: identity suites (section 6, EF powers, Schur-Weyl)");
    for (auto [n, r] : {std::pair{2, 2}, std::pair{3, 2}}) {
        SchurData S(n, r);
        for (const auto& item : S.verify_section6()) {
            c.require(item.pass, item.identity + " [" + item.params + "]");
        }
    }
    for (auto [n, r] : {std::pair{2, 2}, std::pair{3, 2}}) {
        auto data = std::make_shared<SchurData>(n, r);
        CyclotomicProvider prov(data);
        Engine eng(&prov);
        for (const auto& item : verify_ef_power_identity(eng, n, r)) {
            c.require(item.pass, item.identity + " [" + item.params + "]");
        }
    }
    for (auto [n, m] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
        for (const auto& item : check_prop47(n, m)) {
            c.require(item.pass, item.identity + " [" + item.params + "]");
        }
    }
}

void criterion5_property_suites(Pipeline& pipe, const std::shared_ptr<SchurData>& S,
                                const std::vector<Weight>& ws) {
    Criterion c("criterion 5: property suites");
    CyclotomicProvider prov(S);
    Engine eng(&prov);

    // Form symmetry and weight orthogonality over all of Lambda+_{2,2}.
    for (int li : {0, 1, 2, 7, 8}) {
        const Weight& lam = ws[size_t(li)];
        for (const auto& mu : ws) {
            auto xi = enumerate_xi(lam, mu);
            for (size_t i = 0; i < xi.size(); ++i) {
                for (size_t j = i; j < xi.size(); ++j) {
                    c.require(eng.pair(xi[i], xi[j], lam) == eng.pair(xi[j], xi[i], lam),
                              "form symmetry");
                }
            }
        }
        // Orthogonality: different degrees pair to zero.
        FMonomial a = M({{P11, 1}});
        FMonomial b = M({{P21, 1}, {P11, 1}});
        c.require(eng.pair(a, b, lam).is_zero(), "weight orthogonality");
    }

    // Serre-relator nullity: R * s pairs to zero against every test monomial.
    {
        auto apply_word = [&](const std::vector<int>& word, const FormalVector& v) {
            FormalVector cur = v;
            for (auto it = word.rbegin(); it != word.rend(); ++it) {
                cur = eng.apply_F(cur, *it);
            }
            return cur;
        };
        for (int li : {0, 1, 2, 7, 8}) {
            const Weight& lam = ws[size_t(li)];
            for (const auto& mu : ws) {
                for (const auto& s : enumerate_xi(lam, mu)) {
                    FormalVector base{lam, {}};
                    base.add(s.plain(), Fraction::one(2));
                    for (auto [p, p2] : {std::pair{P11, P21}, std::pair{P21, P11},
                                         std::pair{P21, P12}, std::pair{P12, P21}}) {
                        FormalVector r1 = apply_word({p2, p, p}, base);
                        FormalVector r2 = apply_word({p, p2, p}, base);
                        FormalVector r3 = apply_word({p, p, p2}, base);
                        // R s = r1 - [2] r2 + r3.
                        FormalVector rel{lam, {}};
                        Fraction two(quantum_int(2, 2));
                        for (const auto& [t, cc] : r1.terms) rel.add(t, cc);
                        for (const auto& [t, cc] : r2.terms) rel.add(t, -(two * cc));
                        for (const auto& [t, cc] : r3.terms) rel.add(t, cc);
                        if (rel.is_zero()) continue;
                        int deg = int(s.plain().size()) + 3;
                        for (const auto& nu : ws) {
                            for (const auto& y : enumerate_xi(lam, nu)) {
                                if (y.degree() != deg) continue;
                                Fraction acc = Fraction::zero(2);
                                for (const auto& [t, cc] : rel.terms) {
                                    FMonomial xm = FMonomial::from_plain(t);
                                    acc += cc * eng.pair(y, xm, lam);
                                }
                                c.require(acc.is_zero(), "Serre relator nullity");
                            }
                        }
                    }
                }
            }
        }
    }

    // g-choice invariance: a second valid g (reversed candidate order) gives
    // identical Gram values on Lambda+.
    {
        auto data2 = std::make_shared<SchurData>(2, 2);
        data2->set_reversed_candidates(true);
        CyclotomicProvider prov2(data2);
        Engine eng2(&prov2);
        for (int li : {0, 1, 2, 7, 8}) {
            const Weight& lam = ws[size_t(li)];
            for (const auto& mu : ws) {
                auto xi = enumerate_xi(lam, mu);
                for (const auto& y : xi) {
                    for (const auto& x : xi) {
                        c.require(eng.pair(y, x, lam) == eng2.pair(y, x, lam),
                                  "g-choice invariance of form values");
                    }
                }
            }
        }
    }

    // Zero-provider degeneracy on the (2,3) composition lattice.
    {
        ZeroProvider zp(0);
        Engine zeng(&zp);
        for (const auto& lam : enumerate_compositions(2, 3)) {
            for (const auto& mu : enumerate_compositions(2, 3)) {
                if (lam == mu) continue;
                for (const auto& y : enumerate_xi(lam, mu)) {
                    for (const auto& x : enumerate_xi(lam, mu)) {
                        c.require(zeng.pair(y, x, lam).is_zero(), "zero provider degeneracy");
                    }
                }
            }
        }
    }

    // Generic decomposition matrices are identities.
    {
        DecompResult res = pipe.decomposition_matrix(nullptr, DecompMode::Full);
        c.require(mat_equal(res.d, Eigen::MatrixXi::Identity(5, 5)),
                  "generic identity decomposition matrix (2,2)");
    }

    // Mode agreement and the consistency sum on every criterion-2 config.
    std::vector<std::string> cfgs = {
        R"({"mode":"rational","q":"2","Q":["1","1"]})",
        R"({"mode":"rational","q":"2","Q":["1","1/4"]})",
        R"({"mode":"rational","q":"2","Q":["1","4"]})",
        R"({"mode":"number_field","minpoly":"x^2+1","q":"x","Q":["1","2"]})",
        R"({"mode":"number_field","minpoly":"x^2+1","q":"x","Q":["1","1"]})",
        R"({"mode":"number_field","minpoly":"x^2+1","q":"x","Q":["1","-1"]})",
        R"({"mode":"rational","q":"1","Q":["0","0"]})",
        R"({"mode":"rational","q":"2","Q":["0","0"]})",
        R"({"mode":"number_field","minpoly":"x^2+1","q":"x","Q":["0","0"]})",
    };
    const auto& plus = pipe.lambda_plus();
    for (const auto& cfg_text : cfgs) {
        FieldConfig cfg = FieldConfig::from_json_text(cfg_text);
        DecompResult full = pipe.decomposition_matrix(&cfg, DecompMode::Full);
        DecompResult plus_only = pipe.decomposition_matrix(&cfg, DecompMode::PlusOnly);
        c.require(mat_equal(full.d, plus_only.d), "mode agreement at " + cfg_text);

        std::vector<std::map<std::vector<int>, int>> dims;
        for (const auto& mu : plus) dims.push_back(pipe.simple_dims(mu, &cfg));
        for (size_t li = 0; li < plus.size(); ++li) {
            for (const auto& nu : pipe.lattice()) {
                if (plus[li] != nu && !ge(plus[li], nu)) continue;
                int lhs = 0;
                for (size_t mi = 0; mi < plus.size(); ++mi) {
                    auto it = dims[mi].find(nu.bar);
                    if (it != dims[mi].end()) lhs += full.d(int(li), int(mi)) * it->second;
                }
                c.require(lhs == pipe.generic_dim(plus[li], nu),
                          "consistency sum at " + cfg_text);
            }
        }
        // Unitriangularity.
        for (int i = 0; i < full.d.rows(); ++i) {
            c.require(full.d(i, i) == 1, "unit diagonal");
            for (int j = 0; j < i; ++j) c.require(full.d(i, j) == 0, "triangularity");
        }
    }
}

void criterion5b_generic_32() {
    Criterion c("criterion 5 (continued): generic identity at (3,2)");
    Pipeline pipe = Pipeline::cyclotomic(3, 2);
    DecompResult res = pipe.decomposition_matrix(nullptr, DecompMode::Full);
    c.require(res.exact, "(3,2) lattice checks");
    c.require(mat_equal(res.d, Eigen::MatrixXi::Identity(int(pipe.lambda_plus().size()),
                                                         int(pipe.lambda_plus().size()))),
              "generic identity decomposition matrix (3,2)");
}

void criterion6_scale_sanity() {
    Criterion c("criterion 6: (3,2) scale sanity under ten minutes");
    auto t0 = std::chrono::steady_clock::now();
    Pipeline pipe = Pipeline::cyclotomic(3, 2);
    pipe.warm_gram_parallel(4);
    FieldConfig cfg = FieldConfig::rational(2, {1, 1});
    DecompResult res = pipe.decomposition_matrix(&cfg, DecompMode::Full);
    const auto& plus = pipe.lambda_plus();
    // Unitriangularity.
    for (int i = 0; i < res.d.rows(); ++i) {
        c.require(res.d(i, i) == 1, "unit diagonal");
        for (int j = 0; j < i; ++j) c.require(res.d(i, j) == 0, "triangularity");
    }
    // Consistency sum.
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
            c.require(lhs == pipe.generic_dim(plus[li], nu), "consistency sum at (3,2)");
        }
    }
    auto minutes = std::chrono::duration_cast<std::chrono::minutes>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    c.require(minutes < 10, "wall clock under ten minutes");
}

} // namespace

int main() {
    auto ws = enumerate_weights(2, 2);
    auto S = std::make_shared<SchurData>(2, 2);
    Pipeline pipe(std::make_shared<CyclotomicProvider>(S), 2, 4, 2);

    criterion1_gram_golden(pipe, ws);
    criterion2_decomposition_tables(pipe);
    criterion3_eta_golden(S, ws);
    criterion4_identity_suites();
    criterion5_property_suites(pipe, S, ws);
    criterion5b_generic_32();
    // r = 1 oracle agreement rides with the property suites.
    {
        Criterion c("criterion 5 (continued): r=1 tensor oracle agreement");
        for (const auto& item : r1_crosscheck(2, 2, nullptr)) c.require(item.pass, item.identity);
        for (const auto& item : r1_crosscheck(3, 3, nullptr)) c.require(item.pass, item.identity);
        FieldConfig gauss = FieldConfig::from_json_text(
            R"({"mode":"number_field","minpoly":"x^2+1","q":"x","Q":[]})");
        for (const auto& item : r1_crosscheck(2, 2, &gauss)) c.require(item.pass, item.identity);
    }
    criterion6_scale_sanity();

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
