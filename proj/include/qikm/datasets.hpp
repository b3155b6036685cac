#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qikm/encoding.hpp"

namespace qikm {

enum class DatasetId { Iris, Wine, Seeds, Glass, Penguins, AlgerianFires, Wholesale, EColi };

/// Expected shape of a benchmark dataset after ingestion. Loading fails
/// loudly when the parsed file does not match.
struct DatasetSpec {
    DatasetId id;
    std::filesystem::path source_path;
    int expected_n = 0;
    int expected_m = 0;
    int expected_k = 0;
};

std::vector<DatasetId> all_dataset_ids();
std::string dataset_name(DatasetId id);
DatasetId dataset_id_from_name(const std::string& name);

/// Canonical spec for a dataset id, with the source file resolved inside
/// data_dir. See data/README.md for file provenance and column mappings.
DatasetSpec dataset_spec(DatasetId id, const std::filesystem::path& data_dir);

/// Parses the UCI source file, applies the fixed preprocessing for the
/// dataset (row filters, feature selection, label remapping to 0..k-1) and
/// asserts the expected shape. Throws with the offending path, line or shape
/// on any failure.
RawDataset load(const DatasetSpec& spec);

/// SHA-256 of the raw file bytes, as lowercase hex.
std::string checksum(const DatasetSpec& spec);

}  // namespace qikm
