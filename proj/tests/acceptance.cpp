// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are exact unless a runtime limit is stated.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lcd/code.hpp"
#include "lcd/constructions.hpp"
#include "lcd/formula.hpp"
#include "lcd/oracle.hpp"
#include "naive.hpp"
#include "process.hpp"

namespace {

const std::string kTool = LCDTOOL_PATH;

struct Verdict {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_runtime(Verdict& v, double elapsed, double limit) {
    if (elapsed >= limit) {
        std::ostringstream ss;
        ss << "took " << elapsed << " s, limit " << limit << " s";
        v.fail(ss.str());
    }
}

Verdict paper_table() {
    Verdict v;
    const auto start = Clock::now();
    const auto r = proc::run(kTool, "table --min 3 --max 7 --method exhaustive --format csv");
    const double elapsed = seconds_since(start);
    if (r.exit_code != 0) {
        v.fail("exit code " + std::to_string(r.exit_code));
        return v;
    }
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);  // header
    std::vector<int> ds;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string n;
        std::string k;
        std::string d;
        std::getline(fields, n, ',');
        std::getline(fields, k, ',');
        std::getline(fields, d, ',');
        ds.push_back(std::stoi(d));
    }
    if (ds != std::vector<int>{2, 2, 2, 3, 4}) {
        v.fail("unexpected d column:\n" + r.out);
    }
    check_runtime(v, elapsed, 1.0);
    return v;
}

Verdict remark() {
    Verdict v;
    if (lcd::lcd_n2_formula(2) != 1) {
        v.fail("formula(2) = " + std::to_string(lcd::lcd_n2_formula(2)));
    }
    if (lcd::oracle_pairs(2) != 1) {
        v.fail("oracle_pairs(2) = " + std::to_string(lcd::oracle_pairs(2)));
    }
    return v;
}

Verdict formula_vs_profile() {
    Verdict v;
    const auto start = Clock::now();
    for (int n = 2; n <= 200; ++n) {
        const auto r = lcd::oracle_profile(n);
        if (r.d != lcd::lcd_n2_formula(n)) {
            v.fail("n=" + std::to_string(n) + ": profile " + std::to_string(r.d) + " vs formula " +
                   std::to_string(lcd::lcd_n2_formula(n)));
        }
    }
    check_runtime(v, seconds_since(start), 5.0);
    return v;
}

Verdict triple_oracle() {
    Verdict v;
    const auto start = Clock::now();
    for (int n = 2; n <= 14; ++n) {
        const int profile = lcd::oracle_profile(n).d;
        const int exhaustive = lcd::oracle_exhaustive(n, 2).d;
        const int pairs = lcd::oracle_pairs(n);
        if (profile != exhaustive || exhaustive != pairs) {
            v.fail("n=" + std::to_string(n) + ": profile " + std::to_string(profile) + ", exhaustive " +
                   std::to_string(exhaustive) + ", pairs " + std::to_string(pairs));
        }
    }
    check_runtime(v, seconds_since(start), 120.0);
    return v;
}

lcd::LinearCode family(int r, int s) {
    return s <= 5 ? lcd::construct_family_a(r, s) : lcd::construct_family_b(r, s);
}

Verdict construction_optimality() {
    Verdict v;
    const auto start = Clock::now();
    const int case_offset[9] = {0, 0, 0, 2, 2, 2, 3, 4, 5};
    for (int r = 0; r <= 10; ++r) {
        for (int s = 3; s <= 8; ++s) {
            const auto code = family(r, s);
            const auto d = static_cast<int>(lcd::min_distance(code));
            if (!lcd::is_lcd(code) || d != 4 * r + case_offset[s]) {
                v.fail("r=" + std::to_string(r) + " s=" + std::to_string(s) + ": d=" + std::to_string(d));
            }
        }
    }
    check_runtime(v, seconds_since(start), 1.0);
    return v;
}

Verdict construction_weights() {
    Verdict v;
    for (int r = 0; r <= 10; ++r) {
        for (int s = 3; s <= 8; ++s) {
            const auto code = family(r, s);
            const auto& u = code.generator().row(0);
            const auto& w = code.generator().row(1);
            const auto row = static_cast<std::size_t>(s <= 5 ? 4 * r + s - 1 : 4 * r + s - 3);
            const auto sum = static_cast<std::size_t>(s <= 5 ? 4 * r + 2 : 4 * r + 6);
            if (lcd::weight(u) != row || lcd::weight(w) != row || lcd::weight(lcd::word_add(u, w)) != sum) {
                v.fail("r=" + std::to_string(r) + " s=" + std::to_string(s));
            }
        }
    }
    return v;
}

Verdict massey_invariance() {
    Verdict v;
    std::mt19937_64 rng(20240601);
    const auto full_rank = [&](std::size_t k, std::size_t n) {
        while (true) {
            auto g = naive::random_matrix(rng, k, n);
            if (lcd::rank(g) == k) {
                return lcd::LinearCode(std::move(g));
            }
        }
    };
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t k = 1 + rng() % 4;
        const std::size_t n = k + rng() % (33 - k);
        const auto code = full_rank(k, n);
        auto m = naive::random_matrix(rng, k, k);
        while (!lcd::det(m)) {
            m = naive::random_matrix(rng, k, k);
        }
        failures += lcd::is_lcd(lcd::row_transform(code, m)) != lcd::is_lcd(code) ? 1 : 0;
    }
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t k = 1 + rng() % 4;
        const std::size_t n = k + rng() % (33 - k);
        const auto code = full_rank(k, n);
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), std::size_t{0});
        std::shuffle(p.begin(), p.end(), rng);
        const auto permuted = lcd::permute_columns(code, lcd::ColumnPermutation(std::move(p)));
        failures += (lcd::is_lcd(permuted) != lcd::is_lcd(code) ||
                     lcd::min_distance(permuted) != lcd::min_distance(code))
                        ? 1
                        : 0;
    }
    if (failures != 0) {
        v.fail(std::to_string(failures) + " failures");
    }
    return v;
}

Verdict census_faithfulness() {
    Verdict v;
    int failures = 0;
    int profiles = 0;
    for (int n = 2; n <= 10; ++n) {
        for (int a = 0; a <= n; ++a) {
            for (int b = 0; a + b <= n; ++b) {
                for (int c = 0; a + b + c <= n; ++c) {
                    const lcd::WeightProfile p{a, b, c, n - a - b - c};
                    if (!p.valid()) {
                        continue;
                    }
                    ++profiles;
                    const auto code = lcd::profile_to_matrix(p);
                    if (lcd::profile_is_lcd(p) != lcd::is_lcd(code) ||
                        lcd::profile_distance(p) != static_cast<int>(lcd::min_distance(code))) {
                        ++failures;
                    }
                }
            }
        }
    }
    if (failures != 0) {
        v.fail(std::to_string(failures) + " of " + std::to_string(profiles) + " profiles disagree");
    }
    return v;
}

Verdict subspace_count() {
    Verdict v;
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            std::uint64_t visits = 0;
            lcd::for_each_rref_generator(n, k, [&](const lcd::Gf2Matrix&) { ++visits; });
            const auto expected = naive::gaussian_binomial(n, k);
            const auto oracle_visits = lcd::oracle_exhaustive(n, k).visited;
            if (visits != expected || oracle_visits != expected) {
                v.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + std::to_string(visits) + "/" +
                       std::to_string(oracle_visits) + " visits, expected " + std::to_string(expected));
            }
        }
    }
    return v;
}

Verdict determinism() {
    Verdict v;
    const auto one = proc::run(kTool, "oracle --n 12 --k 2 --witness --threads 1");
    const auto many = proc::run(kTool, "oracle --n 12 --k 2 --witness --threads 16");
    if (one.exit_code != 0 || many.exit_code != 0) {
        v.fail("nonzero exit");
    } else if (one.out.empty() || one.out != many.out) {
        v.fail("outputs differ:\n" + one.out + "---\n" + many.out);
    }
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"1  table --min 3 --max 7 --method exhaustive gives 2,2,2,3,4 in < 1 s", paper_table},
        {"2  LCD[2,2] = 1 by formula and pair scan", remark},
        {"3  formula == profile oracle for n in [2,200] in < 5 s", formula_vs_profile},
        {"4  profile == exhaustive == pairs for n in [2,14] in < 120 s", triple_oracle},
        {"5  constructions are LCD with case-table distance, r<=10, in < 1 s", construction_optimality},
        {"6  construction row and sum weights", construction_weights},
        {"7  Massey and permutation invariance, 1000 + 1000 trials", massey_invariance},
        {"8  census faithfulness for every profile with n <= 10", census_faithfulness},
        {"9  RREF enumeration count equals Gaussian binomial, n <= 8", subspace_count},
        {"10 oracle --n 12 --k 2 --witness identical for 1 and 16 workers", determinism},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = Clock::now();
        const auto verdict = run();
        const double elapsed = seconds_since(start);
        std::printf("[%s] %s  (%.3f s)\n", verdict.pass ? "PASS" : "FAIL", name.c_str(), elapsed);
        if (!verdict.pass) {
            std::printf("       %s\n", verdict.detail.c_str());
            ++failed;
        }
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
