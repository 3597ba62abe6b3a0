#include "lcd/table.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <utility>

#include <json.hpp>

#include "lcd/code.hpp"
#include "lcd/constructions.hpp"
#include "lcd/errors.hpp"
#include "lcd/formula.hpp"

namespace lcd {

using nlohmann::json;

Gf2Matrix parse_matrix(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        auto line = text.substr(0, eol);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back(line);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    }
    while (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    if (lines.empty()) {
        throw ParseError(1, "empty matrix");
    }

    const auto width = lines.front().size();
    if (width == 0) {
        throw ParseError(1, "empty row");
    }
    std::vector<BitWord> rows;
    rows.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto line = lines[i];
        if (line.size() != width) {
            throw ParseError(i + 1, "row has " + std::to_string(line.size()) + " columns, expected " +
                                        std::to_string(width));
        }
        if (const auto bad = line.find_first_not_of("01"); bad != std::string_view::npos) {
            throw ParseError(i + 1, "illegal character '" + std::string(1, line[bad]) + "' at column " +
                                        std::to_string(bad + 1));
        }
        rows.push_back(BitWord::from_string(line));
    }
    return Gf2Matrix(std::move(rows));
}

std::string render_matrix(const Gf2Matrix& m) {
    std::string out;
    out.reserve(m.row_count() * (m.col_count() + 1));
    for (const auto& r : m.rows()) {
        out += r.to_string();
        out += '\n';
    }
    return out;
}

bool witness_consistent(const TableEntry& entry) {
    if (!entry.witness) {
        return true;
    }
    const auto& g = *entry.witness;
    if (static_cast<int>(g.row_count()) != entry.k || static_cast<int>(g.col_count()) != entry.n) {
        return false;
    }
    try {
        const LinearCode code(g);
        return is_lcd(code) && static_cast<int>(min_distance(code)) == entry.d;
    } catch (const Error&) {
        return false;
    }
}

TableEntry compute_entry(int n, int k, Method method, const ExhaustiveOptions& options) {
    if (k != 2 && method != Method::exhaustive) {
        throw DomainError("method '" + std::string(method_name(method)) + "' only handles k=2");
    }
    TableEntry entry{n, k, 0, method, std::nullopt};
    switch (method) {
        case Method::formula:
            entry.d = lcd_n2_formula(n);
            break;
        case Method::construction: {
            auto code = construct_optimal(n);
            entry.d = static_cast<int>(min_distance(code));
            entry.witness = code.generator();
            break;
        }
        case Method::profile: {
            auto r = oracle_profile(n);
            entry.d = r.d;
            entry.witness = std::move(r.witness);
            break;
        }
        case Method::exhaustive: {
            auto r = oracle_exhaustive(n, k, options);
            entry.d = r.d;
            entry.witness = std::move(r.witness);
            break;
        }
        case Method::pairs:
            entry.d = oracle_pairs(n);
            break;
    }
    return entry;
}

TableFormat parse_format(std::string_view name) {
    if (name == "text") {
        return TableFormat::text;
    }
    if (name == "csv") {
        return TableFormat::csv;
    }
    if (name == "json") {
        return TableFormat::json;
    }
    throw DomainError("unknown table format '" + std::string(name) + "'");
}

namespace {

json to_json(const TableEntry& e) {
    json j;
    j["n"] = e.n;
    j["k"] = e.k;
    j["d"] = e.d;
    j["method"] = std::string(method_name(e.method));
    if (e.witness) {
        json rows = json::array();
        for (const auto& r : e.witness->rows()) {
            rows.push_back(r.to_string());
        }
        j["witness"] = std::move(rows);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

}  // namespace

void write_table(std::ostream& os, std::span<const TableEntry> entries, TableFormat format) {
    switch (format) {
        case TableFormat::text:
            os << std::setw(5) << "n" << std::setw(4) << "k" << std::setw(5) << "d" << "  method\n";
            for (const auto& e : entries) {
                os << std::setw(5) << e.n << std::setw(4) << e.k << std::setw(5) << e.d << "  "
                   << method_name(e.method) << '\n';
            }
            break;
        case TableFormat::csv:
            os << "n,k,d,method\n";
            for (const auto& e : entries) {
                os << e.n << ',' << e.k << ',' << e.d << ',' << method_name(e.method) << '\n';
            }
            break;
        case TableFormat::json: {
            json arr = json::array();
            for (const auto& e : entries) {
                arr.push_back(to_json(e));
            }
            os << arr.dump(2) << '\n';
            break;
        }
    }
}

std::string serialize_entry(const TableEntry& entry) { return to_json(entry).dump(); }

TableEntry deserialize_entry(std::string_view line) {
    try {
        const auto j = json::parse(line);
        TableEntry e;
        e.n = j.at("n").get<int>();
        e.k = j.at("k").get<int>();
        e.d = j.at("d").get<int>();
        e.method = parse_method(j.at("method").get<std::string>());
        if (const auto it = j.find("witness"); it != j.end() && !it->is_null()) {
            std::string text;
            for (const auto& row : *it) {
                text += row.get<std::string>();
                text += '\n';
            }
            e.witness = parse_matrix(text);
        }
        return e;
    } catch (const json::exception& ex) {
        throw ParseError(1, ex.what());
    } catch (const ParseError&) {
        throw;
    } catch (const Error& ex) {
        throw ParseError(1, ex.what());
    }
}

TableCache::TableCache(std::filesystem::path path) : path_(std::move(path)) {}

void TableCache::load(std::ostream& diag) {
    entries_.clear();
    std::ifstream in(path_);
    if (!in) {
        return;
    }
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        try {
            auto e = deserialize_entry(line);
            if (!witness_consistent(e)) {
                diag << "warning: " << path_.string() << ":" << lineno << ": witness does not match entry, skipped\n";
                continue;
            }
            if (find(e.n, e.k, e.method) == nullptr) {
                entries_.push_back(std::move(e));
            }
        } catch (const ParseError& ex) {
            diag << "warning: " << path_.string() << ":" << lineno << ": corrupt cache record skipped ("
                 << ex.what() << ")\n";
        }
    }
}

const TableEntry* TableCache::find(int n, int k, Method method) const {
    for (const auto& e : entries_) {
        if (e.n == n && e.k == k && e.method == method) {
            return &e;
        }
    }
    return nullptr;
}

bool TableCache::append(const TableEntry& entry) {
    if (find(entry.n, entry.k, entry.method) != nullptr) {
        return false;
    }
    const std::string line = serialize_entry(entry) + '\n';
    // One write(2) on an O_APPEND descriptor keeps the line contiguous.
    const int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
    if (fd < 0) {
        throw Error("cannot open cache " + path_.string() + ": " + std::strerror(errno));
    }
    const auto written = ::write(fd, line.data(), line.size());
    ::close(fd);
    if (written != static_cast<ssize_t>(line.size())) {
        throw Error("short write to cache " + path_.string());
    }
    entries_.push_back(entry);
    return true;
}

}  // namespace lcd
