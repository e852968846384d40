#include "mirrorext/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "mirrorext/acceptance.hpp"
#include "mirrorext/catalog.hpp"
#include "mirrorext/errors.hpp"
#include "mirrorext/mirror.hpp"
#include "mirrorext/modinv.hpp"

namespace mirrorext {

namespace {

using nlohmann::json;

struct Ctx {
    unsigned bits = 128;
    bool json_only = false;
    std::ostream* out = nullptr;
    std::ostream* err = nullptr;
    int exit_code = 0;
};

json checks_json(const Report& rep) {
    json arr = json::array();
    for (const auto& c : rep.checks)
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return arr;
}

void emit(Ctx& ctx, const std::string& command, json parameters, json result,
          const Report* rep = nullptr) {
    json env;
    env["command"] = command;
    env["parameters"] = std::move(parameters);
    env["result"] = std::move(result);
    env["checks"] = rep ? checks_json(*rep) : json::array();
    env["precision_bits"] = ctx.bits;
    *ctx.out << env.dump(2) << "\n";
    if (rep) {
        if (!ctx.json_only)
            for (const auto& c : rep->checks)
                *ctx.err << (c.pass ? "ok   " : "FAIL ") << c.name
                         << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        if (!rep->passed() && ctx.exit_code == 0)
            ctx.exit_code = 1;
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    if (out.empty())
        throw ArgumentError("empty integer list");
    return out;
}

Spectrum read_spectrum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ArgumentError("cannot open spectrum file: " + path);
    json j = json::parse(in);
    Spectrum rho(j.at("n").get<int>(), j.at("k").get<int>());
    for (const auto& e : j.at("entries"))
        rho.add(e.at("labels").get<std::vector<int>>(), e.at("mult").get<int>());
    return rho;
}

json spectrum_json(const Spectrum& rho) {
    json entries = json::array();
    for (const auto& [labels, mult] : rho.multiplicities)
        entries.push_back({{"labels", labels}, {"mult", mult}});
    return {{"n", rho.rank_n}, {"k", rho.level_k}, {"entries", entries}};
}

json pair_json(const Cplx& z) {
    return json::array({static_cast<double>(z.re), static_cast<double>(z.im)});
}

json mass_matrix_json(const MassMatrix& z) {
    const std::size_t dim = z.weights.size();
    json rows = json::array();
    for (std::size_t i = 0; i < dim; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < dim; ++j)
            row.push_back(z.at(i, j));
        rows.push_back(std::move(row));
    }
    return {{"n", z.weights.rank_n}, {"k", z.weights.level_k}, {"z", rows}};
}

MassMatrix read_mass_matrix_file(const std::string& path, int n, int k) {
    std::ifstream in(path);
    if (!in)
        throw ArgumentError("cannot open mass-matrix file: " + path);
    json j = json::parse(in);
    if (j.contains("n") && (j["n"].get<int>() != n || j["k"].get<int>() != k))
        throw ArgumentError("mass-matrix file is for a different algebra");
    MassMatrix z;
    z.weights = alcove_weights(n, k);
    const std::size_t dim = z.weights.size();
    const auto& rows = j.at("z");
    if (rows.size() != dim)
        throw ArgumentError("mass-matrix size does not match the alcove");
    z.entries.assign(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        if (rows[i].size() != dim)
            throw ArgumentError("mass-matrix row length does not match the alcove");
        for (std::size_t j2 = 0; j2 < dim; ++j2)
            z.at(i, j2) = rows[i][j2].get<int>();
    }
    return z;
}

void cmd_weights(Ctx& ctx, int n, int k) {
    set_precision_bits(ctx.bits);
    WeightSet ws = alcove_weights(n, k);
    json list = json::array();
    for (const auto& w : ws.members)
        list.push_back({{"labels", w.labels},
                        {"h", to_string(conformal_weight_exact(w))},
                        {"dim", static_cast<double>(quantum_dim(w))}});
    emit(ctx, "weights", {{"n", n}, {"k", k}},
         {{"count", ws.size()},
          {"central_charge", to_string(central_charge_exact(n, k))},
          {"weights", list}});
}

void cmd_smatrix(Ctx& ctx, int n, int k) {
    set_precision_bits(ctx.bits);
    ModularData md = build_modular_data(n, k, ctx.bits);
    const std::size_t dim = md.size();
    json s = json::array(), t = json::array(), h = json::array();
    for (std::size_t i = 0; i < dim; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < dim; ++j)
            row.push_back(pair_json(md.s.at(i, j)));
        s.push_back(std::move(row));
        t.push_back(pair_json(md.t_phases[i]));
        h.push_back(to_string(md.h_values[i]));
    }
    Report rep;
    rep.add("modular-data-self-checks", true,
            "unitarity, S^2 = C, (ST)^3 = S^2 verified at construction");
    emit(ctx, "smatrix", {{"n", n}, {"k", k}},
         {{"count", dim},
          {"charge", to_string(md.charge)},
          {"h", h},
          {"s", s},
          {"t", t}},
         &rep);
}

void cmd_fusion(Ctx& ctx, int n, int k, bool oracle_check) {
    set_precision_bits(ctx.bits);
    ModularData md = build_modular_data(n, k, ctx.bits);
    FusionTensor fusion = verlinde_fusion(md);
    const std::size_t dim = md.size();
    json labels = json::array(), nonzero = json::array();
    for (const auto& w : md.weights.members)
        labels.push_back(w.labels);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t c = 0; c < dim; ++c)
                if (fusion.at(a, b, c) != 0)
                    nonzero.push_back(json::array({a, b, c, fusion.at(a, b, c)}));
    Report rep;
    rep.add("integrality", true, "all coefficients within 1e-6 of integers");
    if (oracle_check) {
        if (n != 2)
            throw ArgumentError("--oracle-check is only available for n = 2");
        FusionTensor oracle = fusion_oracle_su2(k);
        rep.add("oracle-equivalence", fusion.coefficients == oracle.coefficients,
                "entrywise comparison against the combinatorial rule");
    }
    emit(ctx, "fusion", {{"n", n}, {"k", k}, {"oracle_check", oracle_check}},
         {{"count", dim}, {"labels", labels}, {"nonzero", nonzero}}, &rep);
}

void cmd_dims(Ctx& ctx, int n, int k) {
    set_precision_bits(ctx.bits);
    WeightSet ws = alcove_weights(n, k);
    json list = json::array();
    Real mu = 0;
    for (const auto& w : ws.members) {
        Real d = quantum_dim(w);
        mu += d * d;
        list.push_back({{"labels", w.labels}, {"dim", static_cast<double>(d)}});
    }
    Real mu_closed = global_dimension_closed(n, k);
    Report rep;
    rep.add("global-dimension-closed-form",
            static_cast<double>(abs(mu - mu_closed)) < 1e-8,
            "sum of d^2 against 1/S00^2");
    emit(ctx, "dims", {{"n", n}, {"k", k}},
         {{"count", ws.size()},
          {"dims", list},
          {"global_dimension", static_cast<double>(mu)}},
         &rep);
}

void cmd_exp_levelrank(Ctx& ctx, int n, int m) {
    set_precision_bits(ctx.bits);
    ExpSet exp = exp_set_levelrank(n, m);
    json members = json::array();
    for (const auto& w : exp.members)
        members.push_back(
            {{"labels", w.labels}, {"partner_labels", exp.partner(w).labels}});
    emit(ctx, "exp levelrank", {{"n", n}, {"m", m}},
         {{"count", exp.members.size()}, {"members", members}});
}

void cmd_exp_diagonal(Ctx& ctx, int n, const std::vector<int>& levels) {
    set_precision_bits(ctx.bits);
    DiagonalExpSet exp = exp_set_diagonal(n, levels);
    json members = json::array();
    for (const auto& w : exp.members)
        members.push_back({{"labels", w.labels},
                           {"partner_h_mod1", to_string(exp.partner_h_mod1.at(w.labels))}});
    emit(ctx, "exp diagonal", {{"n", n}, {"levels", levels}},
         {{"count", exp.members.size()},
          {"level_total", exp.level_total},
          {"coset_c", to_string(exp.coset_c)},
          {"members", members}});
}

void cmd_pair(Ctx& ctx, int n, int m, const std::string& weight) {
    set_precision_bits(ctx.bits);
    AffineWeight w(n, m, parse_int_list(weight));
    AffineWeight partner = mirror_pair(w);
    emit(ctx, "pair", {{"n", n}, {"m", m}, {"weight", w.labels}},
         {{"labels", w.labels},
          {"h", to_string(conformal_weight_exact(w))},
          {"partner_labels", partner.labels},
          {"partner_h", to_string(conformal_weight_exact(partner))}});
}

void cmd_mirror(Ctx& ctx, const NormalSubnetSpec& spec, json parameters,
                const std::string& spectrum_path) {
    set_precision_bits(ctx.bits);
    Spectrum rho = read_spectrum_file(spectrum_path);
    MirrorSpectrum mir = mirror_extension(spec, rho, ctx.bits);
    Report rep = mirror_report(spec, rho, ctx.bits);

    json entries = json::array();
    Spectrum out_spec;
    if (mir.kind == NormalSubnetSpec::Kind::LevelRank)
        out_spec = Spectrum(rho.level_k, rho.rank_n);
    else
        out_spec = Spectrum(rho.rank_n, rho.level_k);
    for (const auto& e : mir.entries) {
        json je = {{"labels", e.label.labels}, {"mult", e.multiplicity}};
        if (e.h_mod1)
            je["h_mod1"] = to_string(*e.h_mod1);
        entries.push_back(std::move(je));
        out_spec.add(e.label.labels, e.multiplicity);
    }
    json result = {{"kind", mir.kind == NormalSubnetSpec::Kind::LevelRank
                                ? "levelrank"
                                : "diagonal"},
                   {"index", static_cast<double>(mir.index)},
                   {"index_assumed_preserved", mir.index_assumed_preserved},
                   {"entries", entries},
                   {"spectrum", spectrum_json(out_spec)}};
    if (mir.coset_c)
        result["coset_c"] = to_string(*mir.coset_c);
    emit(ctx, "mirror", std::move(parameters), std::move(result), &rep);
}

json inclusion_json(const InclusionRecord& rec) {
    return json::parse(catalog_to_json({rec})).at("inclusions").at(0);
}

void cmd_catalog_list(Ctx& ctx) {
    set_precision_bits(ctx.bits);
    auto recs = builtin_inclusions(false, ctx.bits);
    json list = json::array();
    for (const auto& rec : recs)
        list.push_back({{"name", rec.name},
                        {"n", rec.rank_n},
                        {"k", rec.level_k},
                        {"target", rec.target.name},
                        {"provenance", rec.provenance}});
    emit(ctx, "catalog list", json::object(),
         {{"count", recs.size()},
          {"inclusions", list},
          {"levelrank_series", levelrank_series_note()}});
}

void cmd_catalog_show(Ctx& ctx, const std::string& name) {
    set_precision_bits(ctx.bits);
    auto recs = builtin_inclusions(false, ctx.bits);
    const auto& rec = find_inclusion(recs, name);
    emit(ctx, "catalog show", {{"name", name}}, inclusion_json(rec));
}

void cmd_catalog_validate(Ctx& ctx, const std::string& name) {
    set_precision_bits(ctx.bits);
    auto recs = builtin_inclusions(false, ctx.bits);
    const auto& rec = find_inclusion(recs, name);
    Report rep = validate_inclusion(rec, ctx.bits);
    emit(ctx, "catalog validate", {{"name", name}},
         {{"name", rec.name}, {"provenance", rec.provenance}}, &rep);
}

void cmd_modinv_search(Ctx& ctx, int n, int k, int bound) {
    set_precision_bits(ctx.bits);
    ModularData md = build_modular_data(n, k, ctx.bits);
    auto invariants = commutant_search(md, bound);
    json list = json::array();
    for (const auto& z : invariants)
        list.push_back(mass_matrix_json(z));
    emit(ctx, "modinv search", {{"n", n}, {"k", k}, {"bound", bound}},
         {{"count", invariants.size()}, {"invariants", list}});
}

void cmd_modinv_verify(Ctx& ctx, int n, int k, const std::string& z_path) {
    set_precision_bits(ctx.bits);
    ModularData md = build_modular_data(n, k, ctx.bits);
    MassMatrix z = read_mass_matrix_file(z_path, n, k);
    Report rep = verify_invariant(z, md);
    emit(ctx, "modinv verify", {{"n", n}, {"k", k}, {"z", z_path}},
         {{"matrix", mass_matrix_json(z)}}, &rep);
}

void cmd_reproduce(Ctx& ctx) {
    set_precision_bits(ctx.bits);
    auto results = run_acceptance(ctx.bits);
    Report rep;
    json list = json::array();
    for (const auto& r : results) {
        rep.add("criterion-" + std::to_string(r.id) + " " + r.name, r.pass, r.detail);
        list.push_back({{"id", r.id},
                        {"name", r.name},
                        {"pass", r.pass},
                        {"detail", r.detail},
                        {"seconds", r.seconds}});
        if (!ctx.json_only) {
            std::ostringstream line;
            line << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": "
                 << r.name << "  (" << r.seconds << " s)";
            *ctx.err << line.str() << "\n";
        }
    }
    bool was_quiet = ctx.json_only;
    ctx.json_only = true; // per-criterion lines already rendered above
    emit(ctx, "reproduce-paper", json::object(), {{"criteria", list}}, &rep);
    ctx.json_only = was_quiet;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Ctx ctx;
    ctx.out = &out;
    ctx.err = &err;
    unsigned seed = 0;

    CLI::App app{"modular data, level-rank pairing and mirror extensions for SU(N)_K"};
    app.require_subcommand(1);
    app.add_option("--precision", ctx.bits, "working precision in bits")
        ->default_val(128);
    app.add_flag("--json", ctx.json_only, "suppress human-readable rendering");
    app.add_option("--seed", seed, "accepted for interface stability; unused");

    int n = 0, k = 0, m = 0, bound = 3;
    bool oracle_check = false;
    std::string levels_text, weight_text, spectrum_path, z_path, name;

    auto* weights_cmd = app.add_subcommand("weights", "enumerate the alcove");
    weights_cmd->add_option("n", n)->required();
    weights_cmd->add_option("k", k)->required();
    weights_cmd->callback([&] { cmd_weights(ctx, n, k); });

    auto* smatrix_cmd = app.add_subcommand("smatrix", "Kac-Peterson S and T matrices");
    smatrix_cmd->add_option("n", n)->required();
    smatrix_cmd->add_option("k", k)->required();
    smatrix_cmd->callback([&] { cmd_smatrix(ctx, n, k); });

    auto* fusion_cmd = app.add_subcommand("fusion", "Verlinde fusion coefficients");
    fusion_cmd->add_option("n", n)->required();
    fusion_cmd->add_option("k", k)->required();
    fusion_cmd->add_flag("--oracle-check", oracle_check,
                         "compare against the SU(2) combinatorial rule");
    fusion_cmd->callback([&] { cmd_fusion(ctx, n, k, oracle_check); });

    auto* dims_cmd = app.add_subcommand("dims", "quantum and global dimensions");
    dims_cmd->add_option("n", n)->required();
    dims_cmd->add_option("k", k)->required();
    dims_cmd->callback([&] { cmd_dims(ctx, n, k); });

    auto* exp_cmd = app.add_subcommand("exp", "exp set of a normal subnet");
    exp_cmd->require_subcommand(1);
    auto* exp_lr = exp_cmd->add_subcommand("levelrank", "SU(n)_m x SU(m)_n < SU(nm)_1");
    exp_lr->add_option("n", n)->required();
    exp_lr->add_option("m", m)->required();
    exp_lr->callback([&] { cmd_exp_levelrank(ctx, n, m); });
    auto* exp_diag = exp_cmd->add_subcommand("diagonal", "diagonal SU(n) embedding");
    exp_diag->add_option("n", n)->required();
    exp_diag->add_option("levels", levels_text, "comma-separated levels")->required();
    exp_diag->callback([&] { cmd_exp_diagonal(ctx, n, parse_int_list(levels_text)); });

    auto* pair_cmd = app.add_subcommand("pair", "branch partner of one weight");
    pair_cmd->add_option("n", n)->required();
    pair_cmd->add_option("m", m)->required();
    pair_cmd->add_option("--weight", weight_text, "comma-separated Dynkin labels")
        ->required();
    pair_cmd->callback([&] { cmd_pair(ctx, n, m, weight_text); });

    auto* mirror_cmd = app.add_subcommand("mirror", "mirror extension of a spectrum");
    mirror_cmd->require_subcommand(1);
    auto* mirror_lr = mirror_cmd->add_subcommand("levelrank", "level-rank context");
    mirror_lr->add_option("n", n)->required();
    mirror_lr->add_option("m", m)->required();
    mirror_lr->add_option("--spectrum", spectrum_path, "spectrum JSON file")->required();
    mirror_lr->callback([&] {
        cmd_mirror(ctx, NormalSubnetSpec::make_level_rank(n, m),
                   {{"n", n}, {"m", m}, {"spectrum", spectrum_path}}, spectrum_path);
    });
    auto* mirror_diag = mirror_cmd->add_subcommand("diagonal", "diagonal context");
    mirror_diag->add_option("n", n)->required();
    mirror_diag->add_option("levels", levels_text, "comma-separated levels")->required();
    mirror_diag->add_option("--spectrum", spectrum_path, "spectrum JSON file")
        ->required();
    mirror_diag->callback([&] {
        auto levels = parse_int_list(levels_text);
        cmd_mirror(ctx, NormalSubnetSpec::make_diagonal(n, levels),
                   {{"n", n}, {"levels", levels}, {"spectrum", spectrum_path}},
                   spectrum_path);
    });

    auto* catalog_cmd = app.add_subcommand("catalog", "shipped conformal inclusions");
    catalog_cmd->require_subcommand(1);
    catalog_cmd->add_subcommand("list", "names and summary")->callback([&] {
        cmd_catalog_list(ctx);
    });
    auto* cat_show = catalog_cmd->add_subcommand("show", "full record");
    cat_show->add_option("name", name)->required();
    cat_show->callback([&] { cmd_catalog_show(ctx, name); });
    auto* cat_val = catalog_cmd->add_subcommand("validate", "run the record checks");
    cat_val->add_option("name", name)->required();
    cat_val->callback([&] { cmd_catalog_validate(ctx, name); });

    auto* modinv_cmd = app.add_subcommand("modinv", "modular invariants");
    modinv_cmd->require_subcommand(1);
    auto* mi_search = modinv_cmd->add_subcommand("search", "commutant search");
    mi_search->add_option("n", n)->required();
    mi_search->add_option("k", k)->required();
    mi_search->add_option("--bound", bound, "entry bound")->default_val(3);
    mi_search->callback([&] { cmd_modinv_search(ctx, n, k, bound); });
    auto* mi_verify = modinv_cmd->add_subcommand("verify", "verify one mass matrix");
    mi_verify->add_option("n", n)->required();
    mi_verify->add_option("k", k)->required();
    mi_verify->add_option("--z", z_path, "mass-matrix JSON file")->required();
    mi_verify->callback([&] { cmd_modinv_verify(ctx, n, k, z_path); });

    app.add_subcommand("reproduce-paper", "run the full reproduction suite")
        ->callback([&] { cmd_reproduce(ctx); });

    std::vector<const char*> argv;
    argv.push_back("mirrorext");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        err << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const HypothesisViolation& e) {
        err << "hypothesis violation: " << e.what() << "\n";
        return 2;
    } catch (const PairingAmbiguity& e) {
        err << "pairing ambiguity: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionError& e) {
        err << "precision failure: " << e.what() << "\n";
        return 3;
    } catch (const ArgumentError& e) {
        err << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const ScaleError& e) {
        err << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return ctx.exit_code;
}

} // namespace mirrorext
