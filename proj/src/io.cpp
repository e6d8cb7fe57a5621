#include "circsym/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "circsym/special.hpp"

namespace circsym {
namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_value(const std::string& field, int line_no) {
    try {
        std::size_t used = 0;
        const double v = std::stod(field, &used);
        if (used != field.size() || !std::isfinite(v)) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": cannot parse value '" + field + "'");
    }
}

nlohmann::json family_json(const BaseFamily& family) {
    return {{"family", family_to_string(family.kind)},
            {"concentration", family.concentration}};
}

std::optional<BaseFamily> family_from_json(const nlohmann::json& doc) {
    if (!doc.contains("family") || doc["family"].is_null()) {
        return std::nullopt;
    }
    return BaseFamily{family_from_string(doc.at("family").get<std::string>()),
                      doc.at("concentration").get<double>()};
}

}  // namespace

AngleUnit angle_unit_from_string(const std::string& name) {
    if (name == "radians") return AngleUnit::Radians;
    if (name == "degrees") return AngleUnit::Degrees;
    if (name == "hours24") return AngleUnit::Hours24;
    throw std::invalid_argument("unknown unit '" + name +
                                "' (expected radians, degrees, hours24)");
}

IngestResult ingest(const DatasetSpec& spec) {
    std::ifstream in(spec.path);
    if (!in) {
        throw std::runtime_error("cannot open dataset file '" + spec.path + "'");
    }
    IngestResult out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trim(line);
        if (body.empty() || body.front() == '#') {
            ++out.skipped_lines;
            continue;
        }
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(body);
        while (std::getline(ls, field, spec.delimiter)) {
            fields.push_back(trim(field));
        }
        if (spec.column < 0 || spec.column >= static_cast<int>(fields.size())) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": no column " +
                                        std::to_string(spec.column));
        }
        const double raw = parse_value(fields[spec.column], line_no);
        double theta = 0.0;
        switch (spec.unit) {
            case AngleUnit::Radians:
                theta = raw;
                break;
            case AngleUnit::Degrees:
                theta = raw * kPi / 180.0;
                break;
            case AngleUnit::Hours24:
                if (raw < 0.0 || raw >= 24.0) {
                    throw std::invalid_argument("line " + std::to_string(line_no) +
                                                ": hours24 value " + fields[spec.column] +
                                                " outside [0, 24)");
                }
                theta = kTwoPi * raw / 24.0;
                break;
        }
        out.sample.push_back(normalize_angle(theta));
    }
    if (out.sample.empty()) {
        throw std::runtime_error("dataset '" + spec.path + "' has no parsable rows");
    }
    return out;
}

std::string sample_to_csv(const AngleSample& sample) {
    std::string out;
    char buf[40];
    for (const double theta : sample) {
        std::snprintf(buf, sizeof buf, "%.17g\n", theta);
        out += buf;
    }
    return out;
}

nlohmann::json test_report_to_json(const TestReport& report) {
    nlohmann::json flags = nlohmann::json::array();
    if (report.trivial()) {
        flags.push_back("TrivialTest");
    }
    if (report.degenerate_variance()) {
        flags.push_back("DegenerateVariance");
    }
    nlohmann::json doc{{"test", test_id_to_string(report.test)},
                       {"k", report.k},
                       {"n", report.n},
                       {"mu_used", report.mu_used},
                       {"flags", flags}};
    if (report.flags == 0) {
        doc["statistic"] = report.statistic;
        doc["p_value"] = report.p_value;
        doc["reject_at"] = {{"0.01", report.reject_at(0.01)},
                            {"0.05", report.reject_at(0.05)},
                            {"0.10", report.reject_at(0.10)}};
    } else {
        doc["statistic"] = nullptr;
        doc["p_value"] = nullptr;
        doc["reject_at"] = nlohmann::json::object();
    }
    return doc;
}

nlohmann::json bootstrap_result_to_json(const BootstrapResult& result) {
    nlohmann::json doc = test_report_to_json(result.report);
    doc["bootstrap"] = {{"replications", result.replications},
                        {"fitted_mu", result.fitted_mu},
                        {"fitted_concentration", result.fitted_concentration}};
    return doc;
}

nlohmann::json summary_to_json(const CircularSummary& summary, double dup_fraction) {
    nlohmann::json doc{{"n", summary.n},
                       {"mean_direction", summary.mean_direction},
                       {"mean_resultant_length", summary.mean_resultant_length},
                       {"b2bar", summary.b2bar},
                       {"a2bar", summary.a2bar},
                       {"degenerate", summary.degenerate},
                       {"duplicate_fraction", dup_fraction}};
    if (std::isnan(summary.skewness)) {
        doc["skewness"] = nullptr;
    } else {
        doc["skewness"] = summary.skewness;
    }
    return doc;
}

nlohmann::json fisher_block_to_json(const BaseFamily& family, int k, const FisherBlock& block) {
    return {{"family", family_to_string(family.kind)},
            {"concentration", family.concentration},
            {"k", k},
            {"gamma11", block.gamma11},
            {"gamma12", block.gamma12},
            {"gamma22", block.gamma22},
            {"gamma22_1", block.gamma22_1}};
}

nlohmann::json power_table_to_json(const PowerTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const PowerRow& row : table.rows) {
        nlohmann::json r{{"scenario",
                          {{"family", family_to_string(row.scenario.g0.kind)},
                           {"concentration", row.scenario.g0.concentration},
                           {"k_prime", row.scenario.k_prime},
                           {"lambda", row.scenario.lambda},
                           {"n", row.scenario.n}}},
                         {"test", test_id_to_string(row.test.test)},
                         {"k", row.test.k},
                         {"rejection_rate", row.rejection_rate},
                         {"replications", row.replications},
                         {"monte_carlo_se", row.monte_carlo_se},
                         {"trivial", row.trivial},
                         {"flagged", row.flagged}};
        if (row.test.family.has_value()) {
            r["test_family"] = family_json(*row.test.family);
        } else {
            r["test_family"] = nullptr;
        }
        rows.push_back(r);
    }
    return {{"alpha", table.alpha}, {"rows", rows}};
}

StudyConfig study_config_from_json(const nlohmann::json& doc) {
    StudyConfig config;
    config.master_seed = doc.value("master_seed", 0ull);
    config.replications = doc.value("replications", 1000);
    config.alpha = doc.value("alpha", 0.05);
    for (const nlohmann::json& s : doc.at("scenarios")) {
        Scenario scenario;
        scenario.g0.kind = family_from_string(s.at("family").get<std::string>());
        scenario.g0.concentration = s.at("concentration").get<double>();
        scenario.k_prime = s.value("k_prime", 1);
        scenario.lambda = s.value("lambda", 0.0);
        scenario.n = s.at("n").get<int>();
        config.scenarios.push_back(scenario);
    }
    for (const nlohmann::json& t : doc.at("tests")) {
        TestSpec spec;
        spec.test = test_id_from_string(t.at("test").get<std::string>());
        spec.k = t.value("k", 2);
        spec.family = family_from_json(t);
        config.tests.push_back(spec);
    }
    config.validate();
    return config;
}

double duplicate_fraction(const AngleSample& sample) {
    if (sample.empty()) {
        return 0.0;
    }
    AngleSample sorted = sample;
    std::sort(sorted.begin(), sorted.end());
    std::size_t dups = 0;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) {
            ++dups;
        }
    }
    return static_cast<double>(dups) / static_cast<double>(sorted.size());
}

}  // namespace circsym
