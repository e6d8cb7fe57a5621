#pragma once

#include <string>

#include "circsym/bootstrap.hpp"
#include "circsym/estimators.hpp"
#include "circsym/powerstudy.hpp"
#include "circsym/sampling.hpp"

#include "json.hpp"

namespace circsym {

enum class AngleUnit { Radians, Degrees, Hours24 };

struct DatasetSpec {
    std::string path;
    AngleUnit unit = AngleUnit::Radians;
    char delimiter = ',';
    int column = 0;
};

struct IngestResult {
    AngleSample sample;
    int skipped_lines = 0;  // blank lines and '#' comments
};

/// Reads one angle per row (at spec.column after splitting on the
/// delimiter), converts to radians and normalizes. hours24 values must lie
/// in [0, 24) and map through theta = 2 pi t / 24.
IngestResult ingest(const DatasetSpec& spec);

AngleUnit angle_unit_from_string(const std::string& name);

/// CSV body for a sample: one angle per line, radians, 17 significant
/// digits, LF line ends.
std::string sample_to_csv(const AngleSample& sample);

nlohmann::json test_report_to_json(const TestReport& report);
nlohmann::json bootstrap_result_to_json(const BootstrapResult& result);
nlohmann::json summary_to_json(const CircularSummary& summary, double duplicate_fraction);
nlohmann::json fisher_block_to_json(const BaseFamily& family, int k, const FisherBlock& block);
nlohmann::json power_table_to_json(const PowerTable& table);

StudyConfig study_config_from_json(const nlohmann::json& doc);

/// Fraction of sample values that collide with an earlier value (exact
/// double equality); large for heavily discretized data.
double duplicate_fraction(const AngleSample& sample);

}  // namespace circsym
