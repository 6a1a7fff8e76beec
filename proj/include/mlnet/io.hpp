#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mlnet/core.hpp"

namespace mlnet {

/// Parses the edge-list format: one `actorA<sep>actorB<sep>layerName`
/// record per line, separator comma or tab auto-detected per stream and
/// enforced throughout, '#' lines ignored, CRLF tolerated. Duplicate
/// records are deduplicated; directed input is symmetrized.
MultilayerNetwork parse_edge_list(std::istream& edges, std::istream* actors,
                                  std::size_t layer_cap = kDefaultLayerCap);

MultilayerNetwork load_network(const std::filesystem::path& edges_path,
                               const std::optional<std::filesystem::path>& actors_path,
                               std::size_t layer_cap = kDefaultLayerCap);

/// Deterministic edge-list export: comma separated, rows sorted by
/// (layer index, endpoint ids). load-export-load is idempotent when the
/// actor list is exported alongside.
void write_edge_list(const MultilayerNetwork& net, std::ostream& out);

/// One actor label per line, in id order.
void write_actor_list(const MultilayerNetwork& net, std::ostream& out);

/// Table cell: text, integer, exact rational (displayed at 2 decimals),
/// plain real, or null.
struct Cell {
    enum class Kind { text, integer, ratio, real, null } kind = Kind::null;
    std::string text;
    std::int64_t integer = 0;
    Ratio ratio{0, 1};
    double real = 0.0;

    static Cell str(std::string s);
    static Cell num(std::int64_t v);
    static Cell rat(Ratio r);
    static Cell dbl(double v);
    static Cell none();
};

/// Header plus typed rows; rendered as CSV (2-decimal rationals) or as a
/// JSON array of flat objects carrying full-precision values.
struct ReportTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> comments;  // emitted as leading '#' lines in CSV
};

void write_csv(const ReportTable& table, std::ostream& out);
void write_json(const ReportTable& table, std::ostream& out);

/// Layer-initial label in layer index order (e.g. "FL"); falls back to
/// full names joined by '+' when two layers share an initial.
std::string combination_label(const MultilayerNetwork& net, const LayerSet& combo);

/// True when every layer has a distinct initial, i.e. initials mode is on.
bool initials_unique(const MultilayerNetwork& net);

}  // namespace mlnet
