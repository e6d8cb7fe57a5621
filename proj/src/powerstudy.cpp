#include "circsym/powerstudy.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "circsym/estimators.hpp"
#include "circsym/rng.hpp"
#include "circsym/sampling.hpp"

namespace circsym {
namespace {

bool spec_needs_family(TestId id) {
    return id == TestId::ParamKnownMu || id == TestId::ParamUnknownMu ||
           id == TestId::SemiparUnknownMu;
}

bool spec_is_trivial(const TestSpec& spec) {
    return spec.family.has_value() && spec.family->kind == Family::VonMises && spec.k == 1 &&
           (spec.test == TestId::ParamUnknownMu || spec.test == TestId::SemiparUnknownMu);
}

std::vector<Scenario> deduplicated(const std::vector<Scenario>& scenarios) {
    std::vector<Scenario> out;
    for (Scenario s : scenarios) {
        if (s.lambda == 0.0) {
            s.lambda = 0.0;  // drop any negative-zero bit pattern
            s.k_prime = 1;   // null scenarios are k'-invariant
        }
        const std::uint64_t h = scenario_hash(s);
        const bool dup = std::any_of(out.begin(), out.end(), [&](const Scenario& t) {
            return scenario_hash(t) == h;
        });
        if (!dup) {
            out.push_back(s);
        }
    }
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void StudyConfig::validate() const {
    if (scenarios.empty() || tests.empty()) {
        throw std::invalid_argument("study config needs at least one scenario and one test");
    }
    if (replications < 1) {
        throw std::invalid_argument("study config needs replications >= 1");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("study config needs alpha in (0, 1)");
    }
    for (const Scenario& s : scenarios) {
        SineSkewedModel{s.g0, 0.0, s.lambda, s.k_prime}.validate();
        if (s.n < 5) {
            throw std::invalid_argument("study scenarios need n >= 5");
        }
    }
    for (const TestSpec& t : tests) {
        if (t.k < 1) {
            throw std::invalid_argument("test specs need k >= 1");
        }
        if (spec_needs_family(t.test) && !t.family.has_value()) {
            throw std::invalid_argument("test '" + test_id_to_string(t.test) +
                                        "' needs an assumed or posited family");
        }
        if (t.family.has_value()) {
            t.family->validate();
        }
    }
}

std::uint64_t scenario_hash(const Scenario& scenario) {
    std::uint64_t h = derive_seed(0x5c1c5c1cULL, static_cast<std::uint64_t>(scenario.g0.kind));
    h = derive_seed(h, std::bit_cast<std::uint64_t>(scenario.g0.concentration));
    h = derive_seed(h, static_cast<std::uint64_t>(scenario.k_prime));
    h = derive_seed(h, std::bit_cast<std::uint64_t>(scenario.lambda + 0.0));
    h = derive_seed(h, static_cast<std::uint64_t>(scenario.n));
    return h;
}

PowerTable run_power_study(const StudyConfig& config, int workers) {
    config.validate();
    if (workers < 1) {
        workers = 1;
    }
    const std::vector<Scenario> scenarios = deduplicated(config.scenarios);
    const int reps = config.replications;
    const std::size_t ntests = config.tests.size();

    std::vector<bool> trivial(ntests);
    for (std::size_t t = 0; t < ntests; ++t) {
        trivial[t] = spec_is_trivial(config.tests[t]);
    }

    PowerTable table;
    table.alpha = config.alpha;
    for (const Scenario& scenario : scenarios) {
        const std::uint64_t shash = derive_seed(config.master_seed, scenario_hash(scenario));
        const SineSkewedModel model{scenario.g0, 0.0, scenario.lambda, scenario.k_prime};

        // per-(test) reject and flag counts; merged over worker chunks
        std::vector<long> rejects(ntests, 0);
        std::vector<long> flags(ntests, 0);

        const auto run_chunk = [&](int first, int last, std::vector<long>& rej,
                                   std::vector<long>& flg) {
            for (int r = first; r < last; ++r) {
                const AngleSample sample =
                    sample_sine_skewed(model, scenario.n, derive_seed(shash, r));
                for (std::size_t t = 0; t < ntests; ++t) {
                    if (trivial[t]) {
                        continue;
                    }
                    const TestSpec& spec = config.tests[t];
                    try {
                        const TestReport rep =
                            run_selected_test(sample, spec.test, spec.family, spec.k, 0.0);
                        if (rep.flags != 0) {
                            ++flg[t];
                        } else if (rep.p_value < config.alpha) {
                            ++rej[t];
                        }
                    } catch (const zero_resultant_error&) {
                        ++flg[t];
                    }
                }
            }
        };

        if (workers == 1) {
            run_chunk(0, reps, rejects, flags);
        } else {
            const int nchunks = std::min(workers, reps);
            std::vector<std::vector<long>> rej(nchunks, std::vector<long>(ntests, 0));
            std::vector<std::vector<long>> flg(nchunks, std::vector<long>(ntests, 0));
            std::vector<std::thread> pool;
            pool.reserve(nchunks);
            for (int c = 0; c < nchunks; ++c) {
                const int first = static_cast<int>(static_cast<long>(reps) * c / nchunks);
                const int last = static_cast<int>(static_cast<long>(reps) * (c + 1) / nchunks);
                pool.emplace_back(run_chunk, first, last, std::ref(rej[c]), std::ref(flg[c]));
            }
            for (std::thread& th : pool) {
                th.join();
            }
            for (int c = 0; c < nchunks; ++c) {
                for (std::size_t t = 0; t < ntests; ++t) {
                    rejects[t] += rej[c][t];
                    flags[t] += flg[c][t];
                }
            }
        }

        for (std::size_t t = 0; t < ntests; ++t) {
            PowerRow row;
            row.scenario = scenario;
            row.test = config.tests[t];
            row.replications = reps;
            row.trivial = trivial[t];
            row.flagged = static_cast<int>(flags[t]);
            row.rejection_rate = trivial[t] ? config.alpha
                                            : static_cast<double>(rejects[t]) / reps;
            row.monte_carlo_se =
                std::sqrt(row.rejection_rate * (1.0 - row.rejection_rate) / reps);
            table.rows.push_back(row);
        }
    }
    return table;
}

std::string power_table_to_csv(const PowerTable& table) {
    std::ostringstream out;
    out << "family,concentration,k_prime,lambda,n,test,test_family,test_concentration,"
           "k,rejection_rate,replications,monte_carlo_se,trivial,flagged,alpha\n";
    for (const PowerRow& row : table.rows) {
        out << family_to_string(row.scenario.g0.kind) << ','
            << format_double(row.scenario.g0.concentration) << ',' << row.scenario.k_prime
            << ',' << format_double(row.scenario.lambda) << ',' << row.scenario.n << ','
            << test_id_to_string(row.test.test) << ',';
        if (row.test.family.has_value()) {
            out << family_to_string(row.test.family->kind) << ','
                << format_double(row.test.family->concentration) << ',';
        } else {
            out << ",,";
        }
        out << row.test.k << ',' << format_double(row.rejection_rate) << ','
            << row.replications << ',' << format_double(row.monte_carlo_se) << ','
            << (row.trivial ? 1 : 0) << ',' << row.flagged << ','
            << format_double(table.alpha) << '\n';
    }
    return out.str();
}

PowerTable power_table_from_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("power table CSV is empty");
    }
    PowerTable table;
    bool have_alpha = false;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) {
            fields.push_back(field);
        }
        if (line.back() == ',') {
            fields.emplace_back();
        }
        if (fields.size() != 15) {
            throw std::invalid_argument("power table CSV row has " +
                                        std::to_string(fields.size()) + " fields, expected 15");
        }
        PowerRow row;
        row.scenario.g0.kind = family_from_string(fields[0]);
        row.scenario.g0.concentration = std::stod(fields[1]);
        row.scenario.k_prime = std::stoi(fields[2]);
        row.scenario.lambda = std::stod(fields[3]);
        row.scenario.n = std::stoi(fields[4]);
        row.test.test = test_id_from_string(fields[5]);
        if (!fields[6].empty()) {
            row.test.family = BaseFamily{family_from_string(fields[6]), std::stod(fields[7])};
        }
        row.test.k = std::stoi(fields[8]);
        row.rejection_rate = std::stod(fields[9]);
        row.replications = std::stoi(fields[10]);
        row.monte_carlo_se = std::stod(fields[11]);
        row.trivial = fields[12] == "1";
        row.flagged = std::stoi(fields[13]);
        table.alpha = std::stod(fields[14]);
        have_alpha = true;
        table.rows.push_back(row);
    }
    if (!have_alpha) {
        throw std::invalid_argument("power table CSV has no data rows");
    }
    return table;
}

}  // namespace circsym
