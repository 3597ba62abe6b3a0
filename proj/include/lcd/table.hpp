#pragma once

// Text formats and the on-disk cache used by the command-line tool.
//
// Matrix text: one row per line, each line a string over {'0','1'}, all
// lines the same length. A trailing newline is optional.
//
// Cache: one JSON object per line with fields n, k, d, method and witness
// (array of row strings, or null). Unknown fields are ignored.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcd/gf2.hpp"
#include "lcd/oracle.hpp"

namespace lcd {

/// Throws ParseError (with a 1-based line number) on empty input, ragged
/// rows or characters other than '0' and '1'.
[[nodiscard]] Gf2Matrix parse_matrix(std::string_view text);
[[nodiscard]] std::string render_matrix(const Gf2Matrix& m);

struct TableEntry {
    int n = 0;
    int k = 0;
    int d = 0;
    Method method = Method::formula;
    std::optional<Gf2Matrix> witness;

    friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

/// True when there is no witness, or the witness is a full-rank k x n LCD
/// generator with minimum distance d.
[[nodiscard]] bool witness_consistent(const TableEntry& entry);

/// Computes LCD[n,k] with the given method. Only the exhaustive method
/// accepts k != 2.
[[nodiscard]] TableEntry compute_entry(int n, int k, Method method, const ExhaustiveOptions& options = {});

enum class TableFormat { text, csv, json };

[[nodiscard]] TableFormat parse_format(std::string_view name);

/// Text: aligned columns. CSV: header n,k,d,method. JSON: array of objects.
void write_table(std::ostream& os, std::span<const TableEntry> entries, TableFormat format);

/// Single-line JSON object.
[[nodiscard]] std::string serialize_entry(const TableEntry& entry);
/// Throws ParseError(line 1, ...) on malformed input.
[[nodiscard]] TableEntry deserialize_entry(std::string_view line);

/// Line-delimited cache of table entries keyed by (n, k, method).
class TableCache {
public:
    explicit TableCache(std::filesystem::path path);

    /// Reads the file if it exists. Corrupt or inconsistent lines are
    /// reported on `diag` and skipped; duplicate keys keep the first line.
    void load(std::ostream& diag);

    [[nodiscard]] const TableEntry* find(int n, int k, Method method) const;
    [[nodiscard]] const std::vector<TableEntry>& entries() const noexcept { return entries_; }

    /// Appends one line and flushes. Entries whose key is already present
    /// are not written again; returns whether a line was written.
    bool append(const TableEntry& entry);

private:
    std::filesystem::path path_;
    std::vector<TableEntry> entries_;
};

}  // namespace lcd
