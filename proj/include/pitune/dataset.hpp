#ifndef PITUNE_DATASET_HPP
#define PITUNE_DATASET_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pitune/errors.hpp"

namespace pitune {

enum class ColumnRole { FeatureNumeric, FeatureCategorical, Response, Ignore };

/// Describes the raw CSV columns and the encoded feature layout.
///
/// Encoded features are the numeric columns in file order followed by one
/// block of one-hot indicators per categorical column (levels in
/// first-appearance order).
struct ColumnSchema {
    std::vector<std::string> column_names;
    std::vector<ColumnRole> roles;
    std::vector<std::vector<std::string>> levels;  // per raw column; empty unless categorical
    std::vector<std::string> feature_names;        // encoded width
    std::string response_name;
    std::string order_by_name;  // empty when rows keep file order

    std::size_t feature_count() const { return feature_names.size(); }
};

/// Ingestion settings: which column is the response, optional chronological
/// ordering column, categorical columns, and columns to drop.
struct IngestConfig {
    std::string response;
    std::string order_by;
    std::vector<std::string> categorical;
    std::vector<std::string> ignore;
};

/// Immutable table of encoded feature rows plus responses.
///
/// Row order is chronological when `ordered()` is true. Each row carries the
/// index it had in the originally loaded dataset (`origin`), which subsetting
/// preserves; the tuning layers use it to audit that no computation ever saw
/// rows it was not entitled to.
class Dataset {
public:
    Dataset(std::vector<double> features_row_major, std::vector<double> responses,
            std::size_t feature_count, ColumnSchema schema, bool ordered);

    std::size_t size() const { return responses_.size(); }
    std::size_t feature_count() const { return feature_count_; }

    std::span<const double> row(std::size_t i) const {
        return {features_.data() + i * feature_count_, feature_count_};
    }
    double feature(std::size_t i, std::size_t f) const {
        return features_[i * feature_count_ + f];
    }
    double response(std::size_t i) const { return responses_[i]; }
    std::span<const double> responses() const { return responses_; }

    const ColumnSchema& schema() const { return schema_; }
    bool ordered() const { return ordered_; }

    std::size_t origin(std::size_t i) const { return origin_[i]; }
    std::span<const std::size_t> origins() const { return origin_; }

    /// Rows at the given indices, in the given order. Indices may repeat
    /// (bootstrap training multisets).
    Dataset subset(std::span<const std::size_t> rows) const;

private:
    std::vector<double> features_;  // row-major, size() * feature_count()
    std::vector<double> responses_;
    std::size_t feature_count_;
    ColumnSchema schema_;
    bool ordered_;
    std::vector<std::size_t> origin_;
};

/// Parses an ingestion config from a JSON file.
IngestConfig load_ingest_config(const std::string& path);

/// Loads a CSV per the config: response column extracted, categorical columns
/// one-hot encoded, rows sorted ascending by the ordering column when one is
/// named (stable — ties keep file order). Rejects missing or non-finite cells.
Dataset load_csv(const std::string& path, const IngestConfig& config);

/// CSV parsing entry point over in-memory text, for tests.
Dataset load_csv_text(const std::string& text, const IngestConfig& config);

} // namespace pitune

#endif
