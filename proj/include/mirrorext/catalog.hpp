#pragma once

#include <map>
#include <optional>
#include <string>

#include "mirrorext/modinv.hpp"
#include "mirrorext/report.hpp"
#include "mirrorext/spectrum.hpp"

namespace mirrorext {

/// Level-1 target algebra constants: sector count, quantum dimensions,
/// exact conformal weights and central charge.
struct Level1Algebra {
    std::string name;
    int sector_count = 0;
    std::vector<double> quantum_dims;
    std::vector<Rational> h_values;
    Rational central_charge;

    double global_dimension() const {
        double g = 0;
        for (double d : quantum_dims)
            g += d * d;
        return g;
    }
};

/// One conformal inclusion SU(N)_K < H_1 with its branching data.
struct InclusionRecord {
    std::string name;
    int rank_n = 0;
    int level_k = 0;
    Level1Algebra target;
    int dynkin_index = 0;
    Spectrum vacuum_spectrum;
    std::optional<std::map<int, Spectrum>> full_branching; // target sector -> spectrum
    std::string provenance; // "paper-given" | "search-derived"
};

/// Built-in level-1 constants; every constructor result passes the
/// RationalCFT self check (asserted in tests, not trusted).
Level1Algebra level1_su(int m);
Level1Algebra level1_spin(int m); // m odd, or m = 0 mod 8
Level1Algebra level1_g2();
Level1Algebra level1_e6();
Level1Algebra level1_e7();
Level1Algebra level1_e8();
Level1Algebra level1_by_name(const std::string& name);

/// Full modular data (with S matrix) for a named level-1 algebra.
RationalCFT level1_cft(const std::string& name, unsigned precision_bits = 128);

/// The shipped inclusion catalog. With validate set, every record is run
/// through validate_inclusion at load and a failure throws.
std::vector<InclusionRecord> builtin_inclusions(bool validate = true,
                                                unsigned precision_bits = 128);

const InclusionRecord& find_inclusion(const std::vector<InclusionRecord>& recs,
                                      const std::string& name);

/// Numerical checks on one record: h-integrality and conjugation symmetry
/// of the vacuum spectrum, index and mu-relation, and (when full branching
/// data is present) commutation of Z = sum b b^T with S and T.
Report validate_inclusion(const InclusionRecord& rec, unsigned precision_bits = 128,
                          const ModularData* md = nullptr);

/// JSON round trip in the shipped schema.
std::string catalog_to_json(const std::vector<InclusionRecord>& recs);
std::vector<InclusionRecord> catalog_from_json(const std::string& text);

/// Description of the level-rank series SU(N)_M x SU(M)_N < SU(NM)_1, whose
/// branching data lives in the levelrank module rather than in records.
std::string levelrank_series_note();

} // namespace mirrorext
