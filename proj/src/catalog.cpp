#include "mirrorext/catalog.hpp"

#include <cmath>

#include "json.hpp"

#include "catalog_data.hpp"
#include "mirrorext/errors.hpp"

namespace mirrorext {

namespace {

using nlohmann::json;

const double kSqrt2 = std::sqrt(2.0);
const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;

} // namespace

Level1Algebra level1_su(int m) {
    if (m < 2)
        throw ArgumentError("level1_su: need m >= 2");
    Level1Algebra a;
    a.name = "A" + std::to_string(m - 1) + "_level1";
    a.sector_count = m;
    for (int j = 0; j < m; ++j) {
        a.quantum_dims.push_back(1.0);
        a.h_values.emplace_back(static_cast<std::int64_t>(j) * (m - j), 2LL * m);
    }
    a.central_charge = Rational(m - 1);
    return a;
}

Level1Algebra level1_spin(int m) {
    if (m < 3 || (m % 2 == 0 && m % 8 != 0))
        throw ArgumentError("level1_spin: need m odd or m = 0 mod 8");
    Level1Algebra a;
    a.central_charge = Rational(m, 2);
    if (m % 2 == 1) {
        a.name = "B" + std::to_string((m - 1) / 2) + "_level1";
        a.sector_count = 3;
        a.quantum_dims = {1.0, 1.0, kSqrt2};
        a.h_values = {Rational(0), Rational(1, 2), Rational(m, 16)};
    } else {
        a.name = "D" + std::to_string(m / 2) + "_level1";
        a.sector_count = 4;
        a.quantum_dims = {1.0, 1.0, 1.0, 1.0};
        a.h_values = {Rational(0), Rational(1, 2), Rational(m, 16), Rational(m, 16)};
    }
    return a;
}

Level1Algebra level1_g2() {
    Level1Algebra a;
    a.name = "G2_level1";
    a.sector_count = 2;
    a.quantum_dims = {1.0, kGolden};
    a.h_values = {Rational(0), Rational(2, 5)};
    a.central_charge = Rational(14, 5);
    return a;
}

Level1Algebra level1_e6() {
    Level1Algebra a;
    a.name = "E6_level1";
    a.sector_count = 3;
    a.quantum_dims = {1.0, 1.0, 1.0};
    a.h_values = {Rational(0), Rational(2, 3), Rational(2, 3)};
    a.central_charge = Rational(6);
    return a;
}

Level1Algebra level1_e7() {
    Level1Algebra a;
    a.name = "E7_level1";
    a.sector_count = 2;
    a.quantum_dims = {1.0, 1.0};
    a.h_values = {Rational(0), Rational(3, 4)};
    a.central_charge = Rational(7);
    return a;
}

Level1Algebra level1_e8() {
    Level1Algebra a;
    a.name = "E8_level1";
    a.sector_count = 1;
    a.quantum_dims = {1.0};
    a.h_values = {Rational(0)};
    a.central_charge = Rational(8);
    return a;
}

Level1Algebra level1_by_name(const std::string& name) {
    if (name == "G2_level1")
        return level1_g2();
    if (name == "E6_level1")
        return level1_e6();
    if (name == "E7_level1")
        return level1_e7();
    if (name == "E8_level1")
        return level1_e8();
    if (name.size() > 7 && name.substr(1).find("_level1") != std::string::npos) {
        int num = std::stoi(name.substr(1, name.find('_') - 1));
        if (name[0] == 'A')
            return level1_su(num + 1);
        if (name[0] == 'B')
            return level1_spin(2 * num + 1);
        if (name[0] == 'D')
            return level1_spin(2 * num);
    }
    throw ArgumentError("level1_by_name: unknown algebra " + name);
}

RationalCFT level1_cft(const std::string& name, unsigned precision_bits) {
    set_precision_bits(precision_bits);
    Level1Algebra a = level1_by_name(name);
    RationalCFT cft;
    cft.name = a.name;
    cft.h = a.h_values;
    cft.charge = a.central_charge;
    for (double d : a.quantum_dims)
        cft.dims.emplace_back(d);

    const std::size_t n = a.sector_count;
    if (a.name[0] == 'A') {
        // SU(m)_1 through the Kac-Peterson engine, exact dims.
        ModularData md = build_modular_data(static_cast<int>(n), 1, precision_bits);
        cft.s = md.s;
        cft.dims.assign(md.quantum_dims.begin(), md.quantum_dims.end());
        return cft;
    }
    cft.s = CMatrix(n, n);
    if (a.name == "G2_level1") {
        Real phi = (1 + sqrt(Real(5))) / 2;
        Real norm = 1 / sqrt(2 + phi);
        cft.s.at(0, 0) = Cplx(norm);
        cft.s.at(0, 1) = cft.s.at(1, 0) = Cplx(norm * phi);
        cft.s.at(1, 1) = Cplx(-norm);
        cft.dims = {Real(1), phi};
    } else if (a.name == "E6_level1") {
        // Z3 sectors with spin 2/3: the bilinear form is 2jk/3, so the
        // primitive phase is exp(4 pi i/3); the orientation is pinned by
        // the (ST)^3 = S^2 self check.
        Real r = 1 / sqrt(Real(3));
        Cplx omega = unit_phase(Rational(2, 3));
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) {
                Cplx w(Real(1));
                for (std::size_t t = 0; t < (j * k) % 3; ++t)
                    w = w * omega;
                cft.s.at(j, k) = w * r;
            }
    } else if (a.name == "E7_level1") {
        Real r = 1 / sqrt(Real(2));
        cft.s.at(0, 0) = cft.s.at(0, 1) = cft.s.at(1, 0) = Cplx(r);
        cft.s.at(1, 1) = Cplx(-r);
    } else if (a.name == "E8_level1") {
        cft.s.at(0, 0) = Cplx(Real(1));
    } else if (a.name[0] == 'B') {
        Real h = Real(1) / 2;
        Real r = 1 / sqrt(Real(2));
        cft.s.at(0, 0) = cft.s.at(0, 1) = cft.s.at(1, 0) = cft.s.at(1, 1) = Cplx(h);
        cft.s.at(0, 2) = cft.s.at(2, 0) = Cplx(r);
        cft.s.at(1, 2) = cft.s.at(2, 1) = Cplx(-r);
        cft.s.at(2, 2) = Cplx(Real(0));
        cft.dims = {Real(1), Real(1), sqrt(Real(2))};
    } else if (a.name[0] == 'D') {
        Real h = Real(1) / 2;
        const int sign[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                cft.s.at(i, j) = Cplx(h * sign[i][j]);
        cft.dims = {Real(1), Real(1), Real(1), Real(1)};
    }
    return cft;
}

Report validate_inclusion(const InclusionRecord& rec, unsigned precision_bits,
                          const ModularData* md) {
    set_precision_bits(precision_bits);
    Report rep;
    const Spectrum& vac = rec.vacuum_spectrum;
    std::vector<int> vac_labels(rec.rank_n - 1, 0);

    rep.add("vacuum-multiplicity-one", vac.mult_of(vac_labels) == 1);

    bool h_ok = true, conj_ok = true;
    for (const auto& [labels, mult] : vac.multiplicities) {
        AffineWeight w(rec.rank_n, rec.level_k, labels);
        if (!is_integer(conformal_weight_exact(w)))
            h_ok = false;
        if (vac.mult_of(conjugate(w).labels) != mult)
            conj_ok = false;
    }
    rep.add("integer-h", h_ok);
    rep.add("conjugation-symmetric", conj_ok);

    Real ind = 0;
    for (const auto& [labels, mult] : vac.multiplicities)
        ind += mult * quantum_dim(AffineWeight(rec.rank_n, rec.level_k, labels));
    bool trivial = vac.is_vacuum_only();
    rep.add("index", trivial ? abs(ind - 1) < Real("1e-8") : ind > 1,
            "ind = " + std::to_string(static_cast<double>(ind)));

    Real mu_a = global_dimension_closed(rec.rank_n, rec.level_k);
    Real ratio = mu_a / (ind * ind);
    rep.add("mu-relation",
            abs(ratio - Real(rec.target.global_dimension())) < Real("1e-6"),
            "mu_A/ind^2 = " + std::to_string(static_cast<double>(ratio)));

    if (rec.full_branching) {
        ModularData local;
        if (!md && alcove_cardinality(rec.rank_n, rec.level_k) <= 150) {
            local = build_modular_data(rec.rank_n, rec.level_k, precision_bits);
            md = &local;
        }
        if (md) {
            MassMatrix z = invariant_from_branching(*rec.full_branching, md->weights);
            Report inv = verify_invariant(z, *md);
            rep.add("branching-invariant", inv.passed());
        } else {
            rep.notes.push_back("full branching present but alcove too large for "
                                "the invariant check without supplied modular data");
        }
    }
    return rep;
}

namespace {

json spectrum_to_json(const Spectrum& s) {
    json arr = json::array();
    for (const auto& [labels, mult] : s.multiplicities)
        arr.push_back({{"labels", labels}, {"mult", mult}});
    return arr;
}

Spectrum spectrum_from_json(const json& arr, int n, int k) {
    Spectrum s(n, k);
    for (const auto& e : arr)
        s.add(e.at("labels").get<std::vector<int>>(), e.at("mult").get<int>());
    return s;
}

} // namespace

std::string catalog_to_json(const std::vector<InclusionRecord>& recs) {
    json root;
    root["version"] = 1;
    json arr = json::array();
    for (const auto& rec : recs) {
        json t;
        t["name"] = rec.target.name;
        t["dims"] = rec.target.quantum_dims;
        std::vector<std::string> hs;
        for (const auto& h : rec.target.h_values)
            hs.push_back(to_string(h));
        t["h"] = hs;
        t["c"] = to_string(rec.target.central_charge);

        json r;
        r["name"] = rec.name;
        r["a_side"] = {{"n", rec.rank_n}, {"k", rec.level_k}};
        r["target"] = t;
        r["dynkin_index"] = rec.dynkin_index;
        r["vacuum_spectrum"] = spectrum_to_json(rec.vacuum_spectrum);
        r["provenance"] = rec.provenance;
        if (rec.full_branching) {
            json fb = json::array();
            for (const auto& [sector, spec] : *rec.full_branching)
                fb.push_back({{"sector", sector}, {"entries", spectrum_to_json(spec)}});
            r["full_branching"] = fb;
        }
        arr.push_back(std::move(r));
    }
    root["inclusions"] = std::move(arr);
    return root.dump(2);
}

std::vector<InclusionRecord> catalog_from_json(const std::string& text) {
    json root = json::parse(text);
    std::vector<InclusionRecord> recs;
    for (const auto& r : root.at("inclusions")) {
        InclusionRecord rec;
        rec.name = r.value("name", "");
        rec.rank_n = r.at("a_side").at("n").get<int>();
        rec.level_k = r.at("a_side").at("k").get<int>();
        const auto& t = r.at("target");
        rec.target.name = t.at("name").get<std::string>();
        rec.target.quantum_dims = t.at("dims").get<std::vector<double>>();
        for (const auto& h : t.at("h"))
            rec.target.h_values.push_back(parse_rational(h.get<std::string>()));
        rec.target.sector_count = static_cast<int>(rec.target.quantum_dims.size());
        rec.target.central_charge = parse_rational(t.at("c").get<std::string>());
        rec.dynkin_index = r.at("dynkin_index").get<int>();
        rec.vacuum_spectrum =
            spectrum_from_json(r.at("vacuum_spectrum"), rec.rank_n, rec.level_k);
        rec.provenance = r.at("provenance").get<std::string>();
        if (r.contains("full_branching")) {
            std::map<int, Spectrum> fb;
            for (const auto& e : r.at("full_branching"))
                fb[e.at("sector").get<int>()] =
                    spectrum_from_json(e.at("entries"), rec.rank_n, rec.level_k);
            rec.full_branching = std::move(fb);
        }
        recs.push_back(std::move(rec));
    }
    return recs;
}

std::vector<InclusionRecord> builtin_inclusions(bool validate, unsigned precision_bits) {
    auto recs = catalog_from_json(detail::embedded_catalog_json());
    if (validate)
        for (const auto& rec : recs) {
            Report rep = validate_inclusion(rec, precision_bits);
            if (!rep.passed())
                throw PrecisionError("builtin_inclusions: record " + rec.name +
                                     " failed validation");
        }
    return recs;
}

const InclusionRecord& find_inclusion(const std::vector<InclusionRecord>& recs,
                                      const std::string& name) {
    for (const auto& r : recs)
        if (r.name == name)
            return r;
    throw ArgumentError("catalog: no inclusion named " + name);
}

std::string levelrank_series_note() {
    return "SU(N)_M x SU(M)_N < SU(NM)_1: branching data is computed on demand "
           "by the levelrank module (exp sets, transpose pairing); no stored records.";
}

} // namespace mirrorext
