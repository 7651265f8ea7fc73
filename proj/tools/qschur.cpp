#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qschur/decomp.hpp"
#include "qschur/errors.hpp"
#include "qschur/presented.hpp"
#include "qschur/tensor.hpp"
#include "qschur/vendor_json.hpp"

using namespace qschur;
using nlohmann::json;

namespace {

json weight_to_json(const Weight& w, int n, int r) {
    json out = json::array();
    for (int k = 0; k < r; ++k) {
        json block = json::array();
        for (int i = 0; i < n; ++i) block.push_back(w.bar[size_t(k * n + i)]);
        out.push_back(block);
    }
    return out;
}

Weight weight_from_json(const json& j, int n, int r) {
    std::vector<int> bar;
    for (const auto& block : j) {
        for (const auto& x : block) bar.push_back(x.get<int>());
    }
    if (int(bar.size()) != n * r) throw parse_error("weight literal has the wrong shape");
    return Weight(std::move(bar));
}

json position_to_json(int flat, int n) {
    Position p = position_of(flat, n);
    return json::array({p.i, p.k});
}

json monomial_to_json(const FMonomial& m, int n) {
    json out = json::array();
    for (const auto& [p, c] : m.letters) out.push_back(json::array({position_to_json(p, n), c}));
    return out;
}

FMonomial monomial_from_json(const json& j, int n) {
    FMonomial m;
    for (const auto& item : j) {
        Position pos{item[0][0].get<int>(), item[0][1].get<int>()};
        m.letters.emplace_back(flat_of(pos, n), item[1].get<int>());
    }
    return m;
}

// A weight argument is either an enumeration index or a nested-array literal.
Weight parse_weight_arg(const std::string& arg, int n, int r) {
    auto lattice = enumerate_weights(n, r);
    if (!arg.empty() && arg.find('[') == std::string::npos) {
        size_t idx = std::stoul(arg);
        if (idx >= lattice.size()) throw parse_error("weight index out of range");
        return lattice[idx];
    }
    return weight_from_json(json::parse(arg), n, r);
}

struct GlobalOpts {
    int n = 2, r = 2;
    std::string field;
    bool symbolic = false;
    std::string mode = "full";
    std::string out;
    bool latex = false;
    int jobs = 1;
    int budget = 8;
};

void emit(const GlobalOpts& g, const json& doc, const std::string& extra = "") {
    std::string text = doc.dump(2) + "\n" + extra;
    if (g.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.out);
        f << text;
    }
}

json check_items_to_json(const std::vector<CheckItem>& items) {
    json out = json::array();
    for (const auto& it : items) {
        out.push_back({{"identity", it.identity}, {"params", it.params}, {"pass", it.pass}});
    }
    return out;
}

std::string latex_table(const DecompResult& res, int n, int r) {
    // Rows and columns in ascending dominance order, as in the worked tables.
    std::ostringstream os;
    const int z = int(res.order.size());
    os << "\\begin{array}{c|" << std::string(size_t(z), 'c') << "}\n";
    os << "\\Delta(\\lambda)\\backslash L(\\mu)";
    for (int j = z - 1; j >= 0; --j) os << " & " << res.order[size_t(j)].str(n, r);
    os << " \\\\\\hline\n";
    for (int i = z - 1; i >= 0; --i) {
        os << res.order[size_t(i)].str(n, r);
        for (int j = z - 1; j >= 0; --j) {
            os << " & ";
            if (j >= i) os << res.d(i, j);
        }
        os << " \\\\\n";
    }
    os << "\\end{array}\n";
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"Exact computations in cyclotomic q-Schur algebras"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--n", g.n, "letters n");
    app.add_option("--r", g.r, "levels r");
    app.add_option("--field", g.field, "field configuration JSON");
    app.add_flag("--symbolic", g.symbolic, "work over the fraction field");
    app.add_option("--mode", g.mode, "decomposition mode: full|plus");
    app.add_option("--out", g.out, "write the JSON document to a file");
    app.add_flag("--latex", g.latex, "also emit a LaTeX table");
    app.add_option("--jobs", g.jobs, "parallel Gram evaluation workers");
    app.add_option("--budget", g.budget, "safety bound on n*r");

    auto* cmd_gram = app.add_subcommand("gram", "Gram matrix of a weight space");
    std::string lam_arg, mu_arg, basis_file;
    cmd_gram->add_option("--lambda", lam_arg, "row weight (index or literal)")->required();
    cmd_gram->add_option("--mu", mu_arg, "column weight (index or literal)")->required();
    cmd_gram->add_option("--basis", basis_file, "forced monomial basis JSON file");

    auto* cmd_decomp = app.add_subcommand("decomp", "decomposition matrix");
    auto* cmd_eta = app.add_subcommand("eta", "dump the full eta table");
    auto* cmd_blocks = app.add_subcommand("blocks", "block classes of Lambda+");
    auto* cmd_check = app.add_subcommand("check", "identity suites");
    std::string suite = "all";
    cmd_check->add_option("--suite", suite, "section6|tensor_a|r1|ef_power|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (g.n < 1 || g.r < 1 || g.n * g.r > g.budget) {
        json err{{"error", "UsageError"},
                 {"message", "n*r exceeds the configured budget (" + std::to_string(g.budget) + ")"}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    }

    std::optional<FieldConfig> cfg;
    if (!g.field.empty()) cfg = FieldConfig::from_json_text(g.field);
    if (!g.symbolic && !cfg && (cmd_decomp->parsed() || cmd_blocks->parsed())) {
        json err{{"error", "UsageError"}, {"message", "decomp requires --field or --symbolic"}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
    if (cfg && cfg->num_q_vars() < g.r) {
        json err{{"error", "UsageError"}, {"message", "field config needs r Q-values"}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    }

    if (cmd_gram->parsed()) {
        Pipeline pipe = Pipeline::cyclotomic(g.n, g.r);
        Weight lam = parse_weight_arg(lam_arg, g.n, g.r);
        Weight mu = parse_weight_arg(mu_arg, g.n, g.r);
        std::vector<FMonomial> forced;
        bool have_forced = false;
        if (!basis_file.empty()) {
            std::ifstream f(basis_file);
            if (!f) throw parse_error("cannot open basis file: " + basis_file);
            json jb = json::parse(f);
            for (const auto& item : jb) forced.push_back(monomial_from_json(item, g.n));
            have_forced = true;
        }
        const GramMatrix& gm = pipe.gram(lam, mu, have_forced ? &forced : nullptr);
        json entries = json::array();
        for (int i = 0; i < gm.entries.rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < gm.entries.cols(); ++j) {
                if (cfg) {
                    row.push_back(specialize(gm.entries(i, j), *cfg).str());
                } else {
                    row.push_back(gm.entries(i, j).str());
                }
            }
            entries.push_back(row);
        }
        json basis = json::array();
        for (const auto& b : gm.basis) basis.push_back(monomial_to_json(b, g.n));
        json doc{{"n", g.n},
                 {"r", g.r},
                 {"lambda", weight_to_json(lam, g.n, g.r)},
                 {"mu", weight_to_json(mu, g.n, g.r)},
                 {"basis", basis},
                 {"entries", entries},
                 {"lattice_ok", gm.lattice_ok}};
        emit(g, doc);
        return 0;
    }

    if (cmd_decomp->parsed() || cmd_blocks->parsed()) {
        Pipeline pipe = Pipeline::cyclotomic(g.n, g.r);
        if (g.jobs > 1) pipe.warm_gram_parallel(g.jobs);
        DecompMode mode = g.mode == "plus" ? DecompMode::PlusOnly : DecompMode::Full;
        DecompResult res = pipe.decomposition_matrix(cfg ? &*cfg : nullptr, mode);
        json order = json::array();
        for (const auto& w : res.order) order.push_back(weight_to_json(w, g.n, g.r));
        json blocks = json::array();
        for (const auto& cls : res.block_classes) {
            json c = json::array();
            for (int idx : cls) c.push_back(idx);
            blocks.push_back(c);
        }
        if (cmd_blocks->parsed()) {
            json doc{{"order", order}, {"blocks", blocks}};
            emit(g, doc);
            return 0;
        }
        json dm = json::array();
        for (int i = 0; i < res.d.rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < res.d.cols(); ++j) row.push_back(res.d(i, j));
            dm.push_back(row);
        }
        json doc{{"order", order},
                 {"d", dm},
                 {"blocks", blocks},
                 {"status", res.exact ? "exact" : "advisory"}};
        emit(g, doc, g.latex ? latex_table(res, g.n, g.r) : "");
        return 0;
    }

    if (cmd_eta->parsed()) {
        auto data = std::make_shared<SchurData>(g.n, g.r);
        json table = json::array();
        for (const auto& lam : enumerate_weights(g.n, g.r)) {
            for (int p = 1; p < g.n * g.r; ++p) {
                const EtaExpr& e = data->eta(lam, p);
                json words = json::array();
                for (const auto& w : e.words) {
                    json F = json::array(), E = json::array();
                    for (int f : w.f_word) F.push_back(position_to_json(f, g.n));
                    for (int ee : w.e_word) E.push_back(position_to_json(ee, g.n));
                    words.push_back({{"coeff", w.coeff.str()}, {"F", F}, {"E", E}});
                }
                table.push_back({{"weight", weight_to_json(lam, g.n, g.r)},
                                 {"pos", position_to_json(p, g.n)},
                                 {"scalar", e.scalar.str()},
                                 {"words", words}});
            }
        }
        emit(g, json{{"n", g.n}, {"r", g.r}, {"eta", table}});
        return 0;
    }

    if (cmd_check->parsed()) {
        std::vector<CheckItem> items;
        auto run_section6 = [&] {
            SchurData data(g.n, g.r);
            auto v = data.verify_section6();
            items.insert(items.end(), v.begin(), v.end());
        };
        auto run_tensor = [&] {
            auto v = check_prop47(g.n, g.n);
            items.insert(items.end(), v.begin(), v.end());
        };
        auto run_r1 = [&] {
            auto v = r1_crosscheck(g.n, g.n, nullptr);
            items.insert(items.end(), v.begin(), v.end());
        };
        auto run_ef = [&] {
            auto data = std::make_shared<SchurData>(g.n, g.r);
            CyclotomicProvider prov(data);
            Engine eng(&prov);
            auto v = verify_ef_power_identity(eng, g.n, g.r);
            items.insert(items.end(), v.begin(), v.end());
        };
        if (suite == "section6") {
            run_section6();
        } else if (suite == "tensor_a") {
            run_tensor();
        } else if (suite == "r1") {
            run_r1();
        } else if (suite == "ef_power") {
            run_ef();
        } else if (suite == "all") {
            run_section6();
            run_tensor();
            run_r1();
            run_ef();
        } else {
            json err{{"error", "UsageError"}, {"message", "unknown suite: " + suite}};
            std::cerr << err.dump(2) << "\n";
            return 2;
        }
        bool all_pass = true;
        for (const auto& it : items) all_pass = all_pass && it.pass;
        emit(g, json{{"checks", check_items_to_json(items)}, {"pass", all_pass}});
        return all_pass ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        json err{{"error", e.code()}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err{{"error", "InternalError"}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 1;
    }
}
