// Offline generator for the shipped inclusion catalog. Runs the branching
// intertwiner search for every conformal inclusion SU(N)_K < H_1 in the
// built-in inventory, keeps the unique solution passing the mu-relation,
// and writes the versioned catalog JSON. Intended to be rerun only when
// the inventory or schema changes; the output is committed.

#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mirrorext/catalog.hpp"
#include "mirrorext/errors.hpp"

namespace mx = mirrorext;

namespace {

struct Job {
    std::string name;
    int n = 0;
    int k = 0;
    std::string target;
    std::optional<std::vector<std::vector<int>>> given_vacuum; // labels only, mult 1
};

std::vector<Job> inventory() {
    std::vector<Job> jobs;
    // Exceptional items; the first carries a published vacuum spectrum.
    jobs.push_back({"su2_10_in_b2_1", 2, 10, "B2_level1",
                    std::vector<std::vector<int>>{{0}, {6}}});
    jobs.push_back({"su2_28_in_g2_1", 2, 28, "G2_level1", std::nullopt});
    jobs.push_back({"su3_5_in_a5_1", 3, 5, "A5_level1", std::nullopt});
    jobs.push_back({"su3_9_in_e6_1", 3, 9, "E6_level1", std::nullopt});
    jobs.push_back({"su3_21_in_e7_1", 3, 21, "E7_level1", std::nullopt});
    jobs.push_back({"su9_1_in_e8_1", 9, 1, "E8_level1", std::nullopt});
    // SU(N)_{N-2} < SU(N(N-1)/2)_1, alcove <= 500 sectors.
    for (int n : {4, 5, 6, 7}) {
        int m = n * (n - 1) / 2;
        jobs.push_back({"su" + std::to_string(n) + "_" + std::to_string(n - 2) +
                            "_in_a" + std::to_string(m - 1) + "_1",
                        n, n - 2, "A" + std::to_string(m - 1) + "_level1",
                        std::nullopt});
    }
    // SU(N)_{N+2} < SU(N(N+1)/2)_1; the N = 3 item is the A5 record above.
    for (int n : {2, 4, 5}) {
        int m = n * (n + 1) / 2;
        jobs.push_back({"su" + std::to_string(n) + "_" + std::to_string(n + 2) +
                            "_in_a" + std::to_string(m - 1) + "_1",
                        n, n + 2, "A" + std::to_string(m - 1) + "_level1",
                        std::nullopt});
    }
    // SU(N)_N < Spin(N^2-1)_1.
    for (int n : {2, 3, 4, 5, 6}) {
        int m = n * n - 1;
        std::string target = (m % 2 == 1)
                                 ? "B" + std::to_string((m - 1) / 2) + "_level1"
                                 : "D" + std::to_string(m / 2) + "_level1";
        std::string tshort = target.substr(0, target.find("_level1"));
        for (auto& c : tshort)
            c = static_cast<char>(std::tolower(c));
        jobs.push_back({"su" + std::to_string(n) + "_" + std::to_string(n) + "_in_" +
                            tshort + "_1",
                        n, n, target, std::nullopt});
    }
    return jobs;
}

mx::InclusionRecord derive(const Job& job, unsigned bits) {
    std::cerr << "deriving " << job.name << " ..." << std::endl;
    mx::RationalCFT target = mx::level1_cft(job.target, bits);
    if (!target.self_check(bits).passed())
        throw mx::PrecisionError("target self check failed: " + job.target);
    mx::ModularData md = mx::build_modular_data(job.n, job.k, bits);
    const std::size_t na = md.size();
    const std::size_t nt = target.size();

    auto solutions = mx::branching_search(target, md, 3);
    std::cerr << "  " << solutions.size() << " intertwiner(s) before the mu filter"
              << std::endl;

    // Keep solutions whose vacuum row satisfies mu_A / ind^2 = mu_H.
    mx::Real mu_a = mx::global_dimension(md);
    mx::Real mu_h = 0;
    for (const auto& dq : target.dims)
        mu_h += dq * dq;
    std::set<std::vector<int>> vacuum_rows;
    std::vector<std::vector<int>> kept;
    for (const auto& b : solutions) {
        mx::Real ind = 0;
        for (std::size_t l = 0; l < na; ++l)
            ind += b[l] * md.quantum_dims[l];
        if (static_cast<double>(abs(mu_a / (ind * ind) - mu_h)) > 1e-6)
            continue;
        kept.push_back(b);
        vacuum_rows.insert(std::vector<int>(b.begin(), b.begin() + na));
    }
    if (vacuum_rows.size() != 1)
        throw mx::PrecisionError(job.name + ": expected a unique vacuum row, found " +
                                 std::to_string(vacuum_rows.size()));

    mx::InclusionRecord rec;
    rec.name = job.name;
    rec.rank_n = job.n;
    rec.level_k = job.k;
    rec.target = mx::level1_by_name(job.target);
    rec.dynkin_index = job.k;
    rec.provenance = job.given_vacuum ? "paper-given" : "search-derived";

    const auto& row = *vacuum_rows.begin();
    rec.vacuum_spectrum = mx::Spectrum(job.n, job.k);
    for (std::size_t l = 0; l < na; ++l)
        if (row[l] > 0)
            rec.vacuum_spectrum.add(md.weights.members[l].labels, row[l]);

    if (job.given_vacuum) {
        mx::Spectrum expected(job.n, job.k);
        for (const auto& labels : *job.given_vacuum)
            expected.add(labels);
        if (!(rec.vacuum_spectrum == expected))
            throw mx::PrecisionError(job.name +
                                     ": derived vacuum differs from the published one");
    }

    if (na <= 150) {
        std::map<int, mx::Spectrum> fb;
        const auto& b = kept.front();
        for (std::size_t i = 0; i < nt; ++i) {
            mx::Spectrum s(job.n, job.k);
            for (std::size_t l = 0; l < na; ++l)
                if (b[i * na + l] > 0)
                    s.add(md.weights.members[l].labels, b[i * na + l]);
            fb[static_cast<int>(i)] = std::move(s);
        }
        rec.full_branching = std::move(fb);
    }

    mx::Report rep = mx::validate_inclusion(rec, bits, &md);
    if (!rep.passed()) {
        for (const auto& c : rep.checks)
            if (!c.pass)
                std::cerr << "  FAIL " << c.name << " " << c.detail << std::endl;
        throw mx::PrecisionError(job.name + ": validation failed");
    }
    std::cerr << "  ok: " << rec.vacuum_spectrum.multiplicities.size()
              << " vacuum sectors" << std::endl;
    return rec;
}

} // namespace

int main(int argc, char** argv) {
    const std::string out_path = argc > 1 ? argv[1] : "catalog.json";
    const unsigned bits = argc > 2 ? static_cast<unsigned>(std::stoul(argv[2])) : 128;
    try {
        std::vector<mx::InclusionRecord> recs;
        for (const auto& job : inventory())
            recs.push_back(derive(job, bits));
        std::string text = mx::catalog_to_json(recs);
        // Round trip before shipping.
        auto reparsed = mx::catalog_from_json(text);
        if (reparsed.size() != recs.size())
            throw mx::PrecisionError("catalog round trip lost records");
        std::ofstream out(out_path);
        out << text << "\n";
        std::cerr << "wrote " << recs.size() << " records to " << out_path << std::endl;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 0;
}
