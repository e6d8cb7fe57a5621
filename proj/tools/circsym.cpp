// circsym: tests of circular reflective symmetry against k-sine-skewed
// alternatives, with exact model sampling, parametric bootstrap and a Monte
// Carlo power-study engine.
//
// Exit codes: 0 success, 1 input/usage error, 2 trivial-test selection.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "circsym/bootstrap.hpp"
#include "circsym/estimators.hpp"
#include "circsym/io.hpp"
#include "circsym/powerstudy.hpp"
#include "circsym/sampling.hpp"
#include "circsym/special.hpp"
#include "circsym/symtests.hpp"

namespace {

using namespace circsym;

struct DataOptions {
    std::string path;
    std::string unit = "radians";
    std::string delimiter = ",";
    int column = 0;
};

void add_data_options(CLI::App* cmd, DataOptions& data) {
    cmd->add_option("--data", data.path, "input file, one observation per row")->required();
    cmd->add_option("--unit", data.unit, "radians, degrees or hours24")
        ->check(CLI::IsMember({"radians", "degrees", "hours24"}));
    cmd->add_option("--delimiter", data.delimiter, "field delimiter (default ',')");
    cmd->add_option("--column", data.column, "zero-based column index (default 0)");
}

AngleSample load_sample(const DataOptions& data, int* skipped = nullptr) {
    DatasetSpec spec;
    spec.path = data.path;
    spec.unit = angle_unit_from_string(data.unit);
    spec.delimiter = data.delimiter.empty() ? ',' : data.delimiter[0];
    spec.column = data.column;
    IngestResult result = ingest(spec);
    if (skipped != nullptr) {
        *skipped = result.skipped_lines;
    }
    return std::move(result.sample);
}

int cmd_test(const DataOptions& data, const std::string& test_name,
             const std::string& family_name, double concentration, int k,
             std::optional<double> mu, int bootstrap_b, std::uint64_t seed,
             bool freeze_concentration) {
    const AngleSample sample = load_sample(data);
    const TestId id = test_id_from_string(test_name);

    const bool known_mu_test = id == TestId::ParamKnownMu || id == TestId::SemiparKnownMu;
    if (known_mu_test && !mu.has_value()) {
        throw std::invalid_argument("test '" + test_name + "' requires --mu");
    }

    nlohmann::json doc;
    if (bootstrap_b > 0) {
        if (family_name.empty()) {
            throw std::invalid_argument("--bootstrap requires --family");
        }
        BootstrapConfig config;
        config.family = family_from_string(family_name);
        config.test = id;
        config.k = k;
        config.replications = bootstrap_b;
        config.seed = seed;
        config.refit_concentration = !freeze_concentration;
        config.mu = mu;
        doc = bootstrap_result_to_json(bootstrap_test(sample, config));
    } else {
        std::optional<BaseFamily> family;
        if (!family_name.empty()) {
            family = BaseFamily{family_from_string(family_name), concentration};
        }
        const TestReport report =
            run_selected_test(sample, id, family, k, mu.value_or(0.0));
        if (report.trivial()) {
            std::cerr << "trivial test: the requested pairing (von Mises, k=1) carries no "
                         "information about skewness when mu is unknown\n";
            return 2;
        }
        doc = test_report_to_json(report);
    }
    std::cout << doc.dump(2) << '\n';
    return 0;
}

int cmd_summary(const DataOptions& data) {
    int skipped = 0;
    const AngleSample sample = load_sample(data, &skipped);
    const CircularSummary summary = circular_summary(sample);
    nlohmann::json doc = summary_to_json(summary, duplicate_fraction(sample));
    doc["skipped_lines"] = skipped;
    std::cout << doc.dump(2) << '\n';
    return 0;
}

int cmd_sample(const std::string& family_name, double concentration, double mu,
               double lambda, int k, int n, std::uint64_t seed, const std::string& out_path) {
    const BaseFamily base{family_from_string(family_name), concentration};
    const SineSkewedModel model{base, normalize_angle(mu), lambda, k};
    const AngleSample sample = sample_sine_skewed(model, n, seed);
    const std::string csv = sample_to_csv(sample);
    if (out_path.empty() || out_path == "-") {
        std::cout << csv;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot open output file '" + out_path + "'");
        }
        out << csv;
    }
    return 0;
}

int cmd_info(const std::string& family_name, double concentration, int k) {
    const BaseFamily family{family_from_string(family_name), concentration};
    const FisherBlock block = fisher_block(family, k);
    std::cout << fisher_block_to_json(family, k, block).dump(2) << '\n';
    return 0;
}

int cmd_simulate(const std::string& config_path, const std::string& out_path, int workers,
                 const std::string& format) {
    std::ifstream in(config_path);
    if (!in) {
        throw std::runtime_error("cannot open config file '" + config_path + "'");
    }
    nlohmann::json doc = nlohmann::json::parse(in);
    const StudyConfig config = study_config_from_json(doc);
    const PowerTable table = run_power_study(config, workers);

    std::string payload;
    if (format == "json") {
        payload = power_table_to_json(table).dump(2) + "\n";
    } else {
        payload = power_table_to_csv(table);
    }
    if (out_path.empty() || out_path == "-") {
        std::cout << payload;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot open output file '" + out_path + "'");
        }
        out << payload;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tests of circular reflective symmetry against k-sine-skewed alternatives"};
    app.require_subcommand(1);

    // test
    auto* test_cmd = app.add_subcommand("test", "run a symmetry test on a dataset");
    DataOptions test_data;
    add_data_options(test_cmd, test_data);
    std::string test_name;
    std::string test_family;
    double test_conc = 0.0;
    int test_k = 1;
    double test_mu = 0.0;
    int bootstrap_b = 0;
    std::uint64_t test_seed = 0;
    bool freeze_conc = false;
    test_cmd->add_option("--test", test_name,
                         "param_known_mu, param_unknown_mu, semipar_known_mu, "
                         "semipar_unknown_mu or b2bar")
        ->required();
    test_cmd->add_option("--family", test_family, "assumed/posited family (vm, cardioid, wc, wn)");
    test_cmd->add_option("--concentration", test_conc, "concentration of that family");
    test_cmd->add_option("-k,--k", test_k, "skewness frequency k (default 1)");
    auto* mu_opt = test_cmd->add_option("--mu", test_mu, "known central direction (radians)");
    test_cmd->add_option("--bootstrap", bootstrap_b,
                         "parametric-bootstrap replications B (0 = asymptotic p-value)");
    test_cmd->add_option("--seed", test_seed, "bootstrap seed");
    test_cmd->add_flag("--freeze-concentration", freeze_conc,
                       "bootstrap: keep the original concentration fit in every replicate");

    // summary
    auto* summary_cmd = app.add_subcommand("summary", "circular summary statistics as JSON");
    DataOptions summary_data;
    add_data_options(summary_cmd, summary_data);

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "draw from a k-sine-skewed model as CSV");
    std::string sample_family = "vm";
    double sample_conc = 1.0;
    double sample_mu = 0.0;
    double sample_lambda = 0.0;
    int sample_k = 1;
    int sample_n = 100;
    std::uint64_t sample_seed = 0;
    std::string sample_out;
    sample_cmd->add_option("--family", sample_family, "vm, cardioid, wc, wn")->required();
    sample_cmd->add_option("--concentration", sample_conc, "concentration")->required();
    sample_cmd->add_option("--mu", sample_mu, "location (radians, default 0)");
    sample_cmd->add_option("--lambda", sample_lambda, "skewness in [-1, 1] (default 0)");
    sample_cmd->add_option("-k,--k", sample_k, "frequency k (default 1)");
    sample_cmd->add_option("-n,--n", sample_n, "sample size")->required();
    sample_cmd->add_option("--seed", sample_seed, "generator seed");
    sample_cmd->add_option("--out", sample_out, "output path (default stdout)");

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "run a Monte Carlo power study");
    std::string sim_config;
    std::string sim_out;
    std::string sim_format = "csv";
    int sim_workers = 1;
    sim_cmd->add_option("--config", sim_config, "JSON study config")->required();
    sim_cmd->add_option("--out", sim_out, "output path (default stdout)");
    sim_cmd->add_option("--workers", sim_workers, "worker threads (default 1)");
    sim_cmd->add_option("--format", sim_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // info
    auto* info_cmd = app.add_subcommand("info", "print the Fisher block of a (family, k) pair");
    std::string info_family;
    double info_conc = 0.0;
    int info_k = 1;
    info_cmd->add_option("--family", info_family, "vm, cardioid, wc, wn")->required();
    info_cmd->add_option("--concentration", info_conc, "concentration")->required();
    info_cmd->add_option("-k,--k", info_k, "frequency k")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (test_cmd->parsed()) {
            std::optional<double> mu;
            if (mu_opt->count() > 0) {
                mu = normalize_angle(test_mu);
            }
            return cmd_test(test_data, test_name, test_family, test_conc, test_k, mu,
                            bootstrap_b, test_seed, freeze_conc);
        }
        if (summary_cmd->parsed()) {
            return cmd_summary(summary_data);
        }
        if (sample_cmd->parsed()) {
            return cmd_sample(sample_family, sample_conc, sample_mu, sample_lambda, sample_k,
                              sample_n, sample_seed, sample_out);
        }
        if (sim_cmd->parsed()) {
            return cmd_simulate(sim_config, sim_out, sim_workers, sim_format);
        }
        if (info_cmd->parsed()) {
            return cmd_info(info_family, info_conc, info_k);
        }
    } catch (const trivial_test_error& e) {
        std::cerr << "trivial test: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
