// dss: command-line frontend for diagonal symmetric N-qubit states.
//
// Subcommands
//   classify  NPT classification of a state file
//   bsa       closed-form best separable approximation (optionally verified)
//   region    (p0, pN) feasibility scan to CSV
//   oracle    cross-check of the analytic weight against numerical bounds
//
// Exit codes: 0 success, 1 input/usage error, 2 domain rejection (the state
// is outside the full-NPT region an operation requires), 3 a verification or
// internal consistency check failed.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dss/bsa.hpp"
#include "dss/errors.hpp"
#include "dss/io.hpp"
#include "dss/nptcheck.hpp"
#include "dss/oracle.hpp"
#include "dss/region.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitDomainRejected = 2;
constexpr int kExitCheckFailed = 3;

int run_classify(const std::string& state_file) {
    const dss::DssState state = dss::read_state_file(state_file);
    const dss::NptReport report = dss::classify(state);
    std::cout << dss::report_to_json(report) << "\n";
    return report.is_full_npt ? kExitOk : kExitDomainRejected;
}

int run_bsa(const std::string& state_file, bool verify, double epsilon,
            int grid_points) {
    const dss::DssState state = dss::read_state_file(state_file);
    const dss::BsaResult result = dss::compute_bsa(state);

    nlohmann::json doc = nlohmann::json::parse(dss::report_to_json(result));
    bool all_passed = true;
    if (verify) {
        const int two_n = 2 * state.n();
        nlohmann::json reports = nlohmann::json::array();
        for (int m = 0; m < two_n; ++m) {
            const dss::LemmaReport r = dss::verify_single_maximality(state, m);
            all_passed = all_passed && r.passed;
            reports.push_back(nlohmann::json::parse(dss::report_to_json(r)));
        }
        for (int m = 0; m < two_n; ++m) {
            for (int l = m + 1; l < two_n; ++l) {
                const dss::LemmaReport r = dss::verify_pair_maximality(state, m, l);
                all_passed = all_passed && r.passed;
                reports.push_back(nlohmann::json::parse(dss::report_to_json(r)));
            }
        }
        const bool certified =
            dss::verify_remainder_entangled(state, grid_points, epsilon);
        all_passed = all_passed && certified;
        doc["lemma_reports"] = std::move(reports);
        doc["remainder_certified"] = certified;
    }
    std::cout << doc.dump() << "\n";
    if (verify && !all_passed) {
        std::cerr << "bsa: verification failed\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int run_region(int n, int resolution, const std::string& out_path) {
    const std::vector<dss::RegionRow> rows = dss::region_scan(n, resolution);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "region: cannot open " << out_path << " for writing\n";
        return kExitInputError;
    }
    dss::write_region_csv(out, rows);
    if (!out.good()) {
        std::cerr << "region: write to " << out_path << " failed\n";
        return kExitInputError;
    }
    return kExitOk;
}

int run_oracle(const std::string& state_file, int t_grid) {
    const dss::DssState state = dss::read_state_file(state_file);
    const dss::OracleReport report = dss::compare(state, t_grid);
    std::cout << dss::report_to_json(report) << "\n";
    if (!report.agrees) {
        std::cerr << "oracle: bounds do not agree with the analytic value\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const dss::NotFullNptError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainRejected;
    } catch (const dss::RankDeficientError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainRejected;
    } catch (const dss::InconsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Diagonal symmetric N-qubit states: NPT classification and "
        "closed-form best separable approximation"};
    app.require_subcommand(1);

    std::string state_file;
    bool verify = false;
    double epsilon = 1e-6;
    int grid_points = 50;
    int region_n = 0;
    int resolution = 0;
    std::string out_path;
    int t_grid = 2001;

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "NPT classification of a DSS state");
    classify_cmd->add_option("state", state_file, "state JSON file")->required();

    CLI::App* bsa_cmd = app.add_subcommand(
        "bsa", "best separable approximation of a full-NPT DSS state");
    bsa_cmd->add_option("state", state_file, "state JSON file")->required();
    bsa_cmd->add_flag("--verify", verify,
                      "run the maximality identities and the remainder grid check");
    bsa_cmd->add_option("--epsilon", epsilon,
                        "subtraction weight for the remainder grid check");
    bsa_cmd->add_option("--grid", grid_points,
                        "samples per axis for the remainder grid check");

    CLI::App* region_cmd =
        app.add_subcommand("region", "(p0, pN) feasibility scan to CSV");
    region_cmd->add_option("--n", region_n, "qubit count")->required();
    region_cmd->add_option("--resolution", resolution, "grid points per axis")
        ->required();
    region_cmd->add_option("--out", out_path, "output CSV path")->required();

    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle", "compare the analytic weight against numerical bounds");
    oracle_cmd->add_option("state", state_file, "state JSON file")->required();
    oracle_cmd->add_option("--t-grid", t_grid,
                           "atoms in the lower-bound linear program");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    if (classify_cmd->parsed()) {
        return guarded([&] { return run_classify(state_file); });
    }
    if (bsa_cmd->parsed()) {
        return guarded([&] { return run_bsa(state_file, verify, epsilon, grid_points); });
    }
    if (region_cmd->parsed()) {
        if (region_n < 2 || resolution < 2) {
            std::cerr << "region: --n and --resolution must be >= 2\n";
            return kExitInputError;
        }
        return guarded([&] { return run_region(region_n, resolution, out_path); });
    }
    if (oracle_cmd->parsed()) {
        if (t_grid < 1) {
            std::cerr << "oracle: --t-grid must be >= 1\n";
            return kExitInputError;
        }
        return guarded([&] { return run_oracle(state_file, t_grid); });
    }
    return kExitInputError;
}
