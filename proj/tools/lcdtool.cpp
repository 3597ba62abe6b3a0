// lcdtool: largest minimum distance of binary LCD codes from the command line.
//
// Exit codes: 0 success, 1 usage or parse error, 2 infeasible size,
// 3 degenerate (rank-deficient) input.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcd/code.hpp"
#include "lcd/constructions.hpp"
#include "lcd/errors.hpp"
#include "lcd/formula.hpp"
#include "lcd/oracle.hpp"
#include "lcd/table.hpp"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kInfeasible = 2, kDegenerate = 3 };

std::string read_input(const std::string& source) {
    if (source == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(source, std::ios::binary);
    if (!in) {
        throw lcd::Error("cannot open " + source);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run_formula(std::optional<int> n, std::optional<int> lo, std::optional<int> hi) {
    if (n) {
        lo = hi = n;
    }
    if (!lo || !hi) {
        std::cerr << "formula: give --n, or both --min and --max\n";
        return kUsage;
    }
    for (int m = *lo; m <= *hi; ++m) {
        std::cout << "LCD[" << m << ",2] = " << lcd::lcd_n2_formula(m) << '\n';
    }
    return kOk;
}

int run_construct(int n, bool standard) {
    auto code = lcd::construct_optimal(n);
    if (standard) {
        code = lcd::standard_form(code).code;
    }
    std::cout << lcd::render_matrix(code.generator());
    // Summary goes to stderr so the matrix can be piped into `check`.
    std::cerr << "n=" << code.length() << " k=" << code.dimension() << " d=" << lcd::min_distance(code)
              << " lcd=" << (lcd::is_lcd(code) ? "true" : "false") << '\n';
    return kOk;
}

int run_check(const std::string& source) {
    const lcd::LinearCode code(lcd::parse_matrix(read_input(source)));
    std::cout << "n=" << code.length() << " k=" << code.dimension() << " d=" << lcd::min_distance(code)
              << " lcd=" << (lcd::is_lcd(code) ? "true" : "false") << '\n';
    return kOk;
}

int run_oracle(int n, int k, bool witness, const lcd::ExhaustiveOptions& options) {
    if (k >= 3) {
        std::cerr << "note: LCD[n," << k << "] values are computed here, not checked against published tables\n";
    }
    const auto result = lcd::oracle_exhaustive(n, k, options);
    if (!result.found()) {
        std::cout << "LCD[" << n << "," << k << "] = none\n";
        return kOk;
    }
    std::cout << "LCD[" << n << "," << k << "] = " << result.d << '\n';
    if (witness) {
        std::cout << lcd::render_matrix(*result.witness);
    }
    return kOk;
}

int run_table(int lo, int hi, int k, const std::string& method_text, const std::string& format_text,
              const std::string& cache_path, const lcd::ExhaustiveOptions& options) {
    const auto method = lcd::parse_method(method_text);
    const auto format = lcd::parse_format(format_text);
    std::optional<lcd::TableCache> cache;
    if (!cache_path.empty()) {
        cache.emplace(cache_path);
        cache->load(std::cerr);
    }
    std::vector<lcd::TableEntry> rows;
    for (int n = lo; n <= hi; ++n) {
        if (cache) {
            if (const auto* hit = cache->find(n, k, method)) {
                rows.push_back(*hit);
                continue;
            }
        }
        rows.push_back(lcd::compute_entry(n, k, method, options));
        if (cache) {
            cache->append(rows.back());
        }
    }
    lcd::write_table(std::cout, rows, format);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Largest minimum distance of binary LCD codes"};
    app.require_subcommand(1);

    std::optional<int> formula_n;
    std::optional<int> formula_min;
    std::optional<int> formula_max;
    auto* formula = app.add_subcommand("formula", "Evaluate the closed form for LCD[n,2]");
    formula->add_option("--n", formula_n, "Code length");
    formula->add_option("--min", formula_min, "First length of a range");
    formula->add_option("--max", formula_max, "Last length of a range");

    int construct_n = 0;
    bool construct_standard = false;
    auto* construct = app.add_subcommand("construct", "Print an optimal LCD [n,2] generator matrix");
    construct->add_option("--n", construct_n, "Code length")->required();
    construct->add_flag("--standard-form", construct_standard, "Emit the generator as [I_2 | A]");

    std::string check_source = "-";
    auto* check = app.add_subcommand("check", "Report n, k, d and LCD status of a generator matrix");
    check->add_option("file", check_source, "Matrix file, or - for standard input");

    int oracle_n = 0;
    int oracle_k = 2;
    bool oracle_witness = false;
    lcd::ExhaustiveOptions options;
    auto* oracle = app.add_subcommand("oracle", "Exhaustive search for LCD[n,k]");
    oracle->add_option("--n", oracle_n, "Code length")->required();
    oracle->add_option("--k", oracle_k, "Code dimension")->required();
    oracle->add_flag("--witness", oracle_witness, "Also print an optimal generator matrix");

    int table_min = 0;
    int table_max = 0;
    int table_k = 2;
    std::string table_method;
    std::string table_format = "text";
    std::string table_cache;
    auto* table = app.add_subcommand("table", "Tabulate LCD[n,k] over a range of lengths");
    table->add_option("--min", table_min, "First length")->required();
    table->add_option("--max", table_max, "Last length")->required();
    table->add_option("--k", table_k, "Code dimension (exhaustive method only)");
    table->add_option("--method", table_method, "formula, profile, exhaustive, pairs or construction")
        ->required()
        ->check(CLI::IsMember({"formula", "profile", "exhaustive", "pairs", "construction"}));
    table->add_option("--format", table_format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    table->add_option("--cache", table_cache, "Line-delimited cache file to consult and extend");

    for (auto* sub : {oracle, table}) {
        sub->add_option("--threads", options.workers, "Worker threads (0 = all cores)");
        sub->add_option("--budget", options.budget, "Maximum number of generator matrices to enumerate");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*formula) {
            return run_formula(formula_n, formula_min, formula_max);
        }
        if (*construct) {
            return run_construct(construct_n, construct_standard);
        }
        if (*check) {
            return run_check(check_source);
        }
        if (*oracle) {
            return run_oracle(oracle_n, oracle_k, oracle_witness, options);
        }
        if (*table) {
            return run_table(table_min, table_max, table_k, table_method, table_format, table_cache, options);
        }
    } catch (const lcd::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInfeasible;
    } catch (const lcd::DegenerateCodeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDegenerate;
    } catch (const lcd::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
