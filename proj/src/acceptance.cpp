#include "mirrorext/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "mirrorext/catalog.hpp"
#include "mirrorext/errors.hpp"
#include "mirrorext/mirror.hpp"
#include "mirrorext/modinv.hpp"

namespace mirrorext {

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
    std::vector<CriterionResult> results;
    unsigned bits;

    template <typename F> void run(int id, const std::string& name, F&& body) {
        CriterionResult r;
        r.id = id;
        r.name = name;
        auto start = Clock::now();
        try {
            std::ostringstream detail;
            r.pass = body(detail);
            r.detail = detail.str();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        results.push_back(std::move(r));
    }
};

Spectrum spin5_vacuum_spectrum() {
    Spectrum rho(2, 10);
    rho.add({0});
    rho.add({6});
    return rho;
}

bool close(const Real& a, double b, double tol) {
    return static_cast<double>(abs(a - Real(b))) < tol;
}

} // namespace

std::vector<CriterionResult> run_acceptance(unsigned precision_bits) {
    Runner r;
    r.bits = precision_bits;
    const unsigned bits = precision_bits;

    r.run(1, "mirror spectrum of the spin-5 extension lands on SU(10)_2", [&](auto& d) {
        auto spec = NormalSubnetSpec::make_level_rank(2, 10);
        MirrorSpectrum mir = mirror_extension(spec, spin5_vacuum_spectrum(), bits);
        std::vector<int> vac(9, 0), l37(9, 0);
        l37[2] = 1;
        l37[6] = 1;
        bool ok = mir.entries.size() == 2 && mir.entries[0].label.labels == vac &&
                  mir.entries[0].multiplicity == 1 && mir.entries[1].label.labels == l37 &&
                  mir.entries[1].multiplicity == 1;
        d << "entries " << mir.entries.size();
        return ok;
    });

    r.run(2, "extension index 3+sqrt(3) and mirror dimension 2+sqrt(3)", [&](auto& d) {
        Real idx = extension_index(spin5_vacuum_spectrum());
        std::vector<int> l37(9, 0);
        l37[2] = 1;
        l37[6] = 1;
        Real dim = quantum_dim(AffineWeight(10, 2, l37));
        d << "index " << static_cast<double>(idx) << ", d " << static_cast<double>(dim);
        return close(idx, 3 + std::sqrt(3.0), 1e-8) && close(dim, 2 + std::sqrt(3.0), 1e-8);
    });

    r.run(3, "diagonal mirror (A10,E6): c~ = 21/22 and Kac-table spectrum", [&](auto& d) {
        auto spec = NormalSubnetSpec::make_diagonal(2, {1, 9});
        MirrorSpectrum mir = mirror_extension(spec, spin5_vacuum_spectrum(), bits);
        bool c_ok = mir.coset_c && *mir.coset_c == Rational(21, 22);
        bool labels_ok = mir.entries.size() == 2 &&
                         mir.entries[0].label.labels == std::vector<int>{0} &&
                         mir.entries[1].label.labels == std::vector<int>{6} &&
                         *mir.entries[0].h_mod1 == Rational(0) &&
                         *mir.entries[1].h_mod1 == Rational(0);
        bool kac_ok = mod1(kac_h(11, 1, 1)) == Rational(0) &&
                      mod1(kac_h(11, 1, 7)) == Rational(0);
        Report rep = mirror_report(spec, spin5_vacuum_spectrum(), bits);
        d << "c~ = " << (mir.coset_c ? to_string(*mir.coset_c) : "?");
        return c_ok && labels_ok && kac_ok && rep.passed();
    });

    r.run(4, "diagonal mirror (A28,E8): hypotheses pass, c~ = 1 - 6/870", [&](auto& d) {
        Spectrum rho(2, 28);
        for (int l : {0, 10, 18, 28})
            rho.add({l});
        auto spec = NormalSubnetSpec::make_diagonal(2, {1, 27});
        MirrorSpectrum mir = mirror_extension(spec, rho, bits);
        Report rep = mirror_report(spec, rho, bits);
        bool c_ok = mir.coset_c && *mir.coset_c == Rational(144, 145);
        d << "c~ = " << (mir.coset_c ? to_string(*mir.coset_c) : "?") << ", entries "
          << mir.entries.size();
        return c_ok && mir.entries.size() == 4 && rep.passed();
    });

    r.run(5, "Verlinde integrality and SU(2) oracle equivalence", [&](auto& d) {
        for (int k = 1; k <= 28; ++k) {
            ModularData md = build_modular_data(2, k, bits);
            FusionTensor v = verlinde_fusion(md);
            FusionTensor o = fusion_oracle_su2(k);
            if (v.coefficients != o.coefficients) {
                d << "oracle mismatch at k = " << k;
                return false;
            }
        }
        // Integrality (verlinde_fusion throws on failure).
        verlinde_fusion(build_modular_data(3, 5, bits));
        verlinde_fusion(build_modular_data(10, 2, bits));
        d << "k = 1..28 plus SU(3)_5 and SU(10)_2";
        return true;
    });

    r.run(6, "exp closure and ring isomorphism across the level-rank pairing",
          [&](auto& d) {
              const std::pair<int, int> cases[] = {{2, 10}, {3, 5}, {2, 28}, {3, 3}};
              for (auto [n, m] : cases) {
                  ExpSet exp = exp_set_levelrank(n, m);
                  Report rep = verify_ring_isomorphism(exp, bits);
                  if (!rep.passed()) {
                      d << "failure at (" << n << "," << m << ")";
                      return false;
                  }
              }
              d << "(2,10) (3,5) (2,28) (3,3)";
              return true;
          });

    r.run(7, "twist and Hopf-link conjugation across the pairing", [&](auto& d) {
        for (auto [n, m] : {std::pair<int, int>{2, 10}, {3, 3}}) {
            ExpSet exp = exp_set_levelrank(n, m);
            Report rep = verify_mirror_conjugation(exp, bits);
            if (!rep.passed()) {
                d << "failure at (" << n << "," << m << ")";
                return false;
            }
            for (const auto& note : rep.notes)
                d << note << "; ";
        }
        return true;
    });

    r.run(8, "SU(2)_10 invariants: A11, D7, E6 and the mu-relation", [&](auto& d) {
        ModularData md = build_modular_data(2, 10, bits);
        auto invariants = commutant_search(md, 3);
        if (invariants.size() != 3) {
            d << "found " << invariants.size() << " invariants";
            return false;
        }
        auto recs = builtin_inclusions(false, bits);
        const auto& spin5 = find_inclusion(recs, "su2_10_in_b2_1");
        if (!spin5.full_branching) {
            d << "no stored full branching";
            return false;
        }
        MassMatrix e6 = invariant_from_branching(*spin5.full_branching, md.weights);
        bool found = false;
        for (const auto& z : invariants)
            if (z == e6)
                found = true;
        Real ind = 0;
        for (const auto& [labels, mult] : spin5.vacuum_spectrum.multiplicities)
            ind += mult * md.quantum_dims[md.weights.index_of(labels)];
        Real ratio = global_dimension(md) / (ind * ind);
        d << "mu_A/ind^2 = " << static_cast<double>(ratio);
        return found && close(ratio, 4.0, 1e-6);
    });

    r.run(9, "mirror of the mirror returns the original spectrum", [&](auto& d) {
        auto fwd = NormalSubnetSpec::make_level_rank(2, 10);
        auto bwd = NormalSubnetSpec::make_level_rank(10, 2);
        auto round_trip = [&](const Spectrum& rho) {
            MirrorSpectrum mir = mirror_extension(fwd, rho, bits);
            Spectrum mid(10, 2);
            for (const auto& e : mir.entries)
                mid.add(e.label.labels, e.multiplicity);
            MirrorSpectrum back = mirror_extension(bwd, mid, bits);
            Spectrum again(2, 10);
            for (const auto& e : back.entries)
                again.add(e.label.labels, e.multiplicity);
            return again == rho;
        };
        if (!round_trip(spin5_vacuum_spectrum())) {
            d << "failed on the spin-5 spectrum";
            return false;
        }
        std::mt19937 rng(20240611);
        ExpSet exp = exp_set_levelrank(2, 10);
        for (int trial = 0; trial < 3; ++trial) {
            Spectrum rho(2, 10);
            rho.add({0});
            for (const auto& w : exp.members) {
                if (w.is_vacuum())
                    continue;
                int mult = static_cast<int>(rng() % 3); // SU(2) weights are self-conjugate
                if (mult > 0)
                    rho.add(w.labels, mult);
            }
            if (!round_trip(rho)) {
                d << "failed on random trial " << trial;
                return false;
            }
        }
        d << "spin-5 instance plus 3 random exp-supported spectra";
        return true;
    });

    return r.results;
}

} // namespace mirrorext
