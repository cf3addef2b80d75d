#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "liouville/errors.hpp"
#include "liouville/zero_locator.hpp"
#include "liouville/zero_table.hpp"
#include "liouville/zeta.hpp"
#include "oracles.hpp"

using namespace liouville;
namespace fs = std::filesystem;

namespace {

// one shared small table; locating is cheap but not free
const ZeroTable& shared_table() {
    static ZeroTable table = [] {
        ZeroTable t = ZeroTable::from_ordinates(locate_zeros(750));
        t.enrich();
        return t;
    }();
    return table;
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / name; }

}  // namespace

TEST_CASE("ingest accepts a valid file and refines gamma_1") {
    fs::path p = temp_file("zeros_ok.txt");
    {
        std::ofstream out(p);
        out << "# comment line\n";
        out << "14.134725142\n21.022039639\n25.010857580\n";
    }
    ZeroTable t = ZeroTable::ingest(p);
    REQUIRE(t.records().size() == 3);
    CHECK_FALSE(t.source_digest().empty());
    t.validate(1e-4, true);
    double g1_oracle = oracles::first_zero_bisect();
    CHECK(std::fabs(t.records()[0].gamma - g1_oracle) < 1e-9);
    // validating again does not move the ordinate
    double before = t.records()[0].gamma;
    t.validate(1e-4, true);
    CHECK(std::fabs(t.records()[0].gamma - before) < 1e-9);
    fs::remove(p);
}

TEST_CASE("ingest rejects bad files") {
    fs::path p = temp_file("zeros_bad.txt");
    {
        std::ofstream out(p);
        out << "14.1347\nnot_a_number\n";
    }
    CHECK_THROWS_WITH_AS(static_cast<void>(ZeroTable::ingest(p)),
                         doctest::Contains("line 2"), std::runtime_error);
    {
        std::ofstream out(p, std::ios::trunc);
        out << "21.02\n14.13\n";
    }
    CHECK_THROWS_WITH_AS(static_cast<void>(ZeroTable::ingest(p)),
                         doctest::Contains("monotonicity"), std::runtime_error);
    fs::remove(p);
    CHECK_THROWS(static_cast<void>(ZeroTable::ingest(temp_file("zeros_missing.txt"))));
}

TEST_CASE("validation failure lists offending indices") {
    fs::path p = temp_file("zeros_off.txt");
    {
        std::ofstream out(p);
        out << "14.134725142\n17.5\n";  // 17.5 is nowhere near a zero
    }
    ZeroTable t = ZeroTable::ingest(p);
    CHECK_THROWS_AS(t.validate(1e-4, false), AccuracyError);
    fs::remove(p);
}

TEST_CASE("zero counting matches the sign-change oracle at T = 100") {
    const ZeroTable& t = shared_table();
    CHECK(t.count_below(100.0) == 29);
    CHECK(oracles::count_zeros_scan(100.0) == 29);
    CHECK(n_asymptotic(100.0) == doctest::Approx(28.127).epsilon(1e-3));
    CHECK(t.count_below(14.0) == 0);  // T below gamma_1
}

TEST_CASE("count asymptotic stays within 3 log T across the table") {
    const ZeroTable& t = shared_table();
    for (std::size_t i = 0; i < t.records().size(); i += 7) {
        double T = t.records()[i].gamma + 1e-6;
        double dev = std::fabs(double(t.count_below(T)) - n_asymptotic(T));
        CHECK(dev <= 3.0 * std::log(T));
    }
}

TEST_CASE("counts are nondecreasing and jump at ordinates") {
    const ZeroTable& t = shared_table();
    for (std::size_t i = 0; i + 1 < 40; ++i) {
        double g = t.records()[i].gamma;
        CHECK(t.count_below(g + 1e-9) == i + 1);
        CHECK(t.count_below(g - 1e-9) == i);
    }
}

TEST_CASE("enrichment amplitudes") {
    const ZeroTable& t = shared_table();
    CHECK(t.enriched());
    const auto& r0 = t.records()[0];
    CHECK(r0.dzeta == doctest::Approx(0.7932).epsilon(2e-3));
    CHECK(r0.zeta2rho > 0.2);
    CHECK(r0.zeta2rho < 3.0);
    for (const auto& r : t.records()) {
        CHECK(r.dzeta > 1e-6);
        CHECK(r.zeta2rho > 0.0);
    }
}

TEST_CASE("enrichment is idempotent") {
    ZeroTable t = ZeroTable::from_ordinates(locate_zeros(16));
    t.enrich();
    std::vector<ZeroRecord> first = t.records();
    t.enrich();
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(t.records()[i].dzeta == first[i].dzeta);
        CHECK(t.records()[i].zeta2rho == first[i].zeta2rho);
    }
    // empty table is a no-op
    ZeroTable empty = ZeroTable::from_ordinates({});
    empty.enrich();
    CHECK(empty.enriched());
}

TEST_CASE("littlewood window: amplitudes grow no faster than log log gamma") {
    const ZeroTable& t = shared_table();
    double c_hi = 0.0, c_lo = 0.0;
    for (const auto& r : t.records()) {
        double ll = std::log(std::log(r.gamma + 4.0));
        c_hi = std::max(c_hi, r.zeta2rho / ll);
        c_lo = std::max(c_lo, 1.0 / (r.zeta2rho * ll));
    }
    // envelope fit only: both constants stay modest on the table range
    CHECK(c_hi < 8.0);
    CHECK(c_lo < 8.0);
}

TEST_CASE("amplitude cache round trip") {
    ZeroTable t = ZeroTable::from_ordinates(locate_zeros(12));
    t.enrich();
    fs::path p = temp_file("amplitudes_test.csv");
    t.save_cache(p);
    ZeroTable back = ZeroTable::load_cache(p);
    CHECK(back.source_digest() == t.source_digest());
    REQUIRE(back.records().size() == t.records().size());
    for (std::size_t i = 0; i < back.records().size(); ++i) {
        CHECK(back.records()[i].gamma == t.records()[i].gamma);
        CHECK(back.records()[i].dzeta == t.records()[i].dzeta);
        CHECK(back.records()[i].zeta2rho == t.records()[i].zeta2rho);
    }
    // saving twice produces the identical file
    fs::path p2 = temp_file("amplitudes_test2.csv");
    back.save_cache(p2);
    std::ifstream a(p), b(p2);
    std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(sa.substr(sa.find('\n')) == sb.substr(sb.find('\n')));  // modulo timestamp header
    fs::remove(p);
    fs::remove(p2);
}

TEST_CASE("discrete moments") {
    const ZeroTable& t = shared_table();
    double T = t.max_gamma();
    CHECK(discrete_moment(t, -1.0, 14.0, false) == 0.0);  // empty sum below gamma_1
    double j1 = discrete_moment(t, -1.0, T, false);
    CHECK(j1 / T > 0.05);
    CHECK(j1 / T < 0.2);
    // Cauchy-Schwarz: J_{-1/2}(T)^2 <= N(T) J_{-1}(T)
    double jh = discrete_moment(t, -0.5, T, false);
    CHECK(jh * jh <= double(t.count_below(T)) * j1 * (1.0 + 1e-12));
    // weighted variant is monotone in T and lands near 1/(2 pi) at the top
    double k1 = discrete_moment(t, -1.0, T, true);
    CHECK(k1 / T > 0.05);
    CHECK(k1 / T < 0.3);
    CHECK_THROWS_AS(discrete_moment(t, -0.3, T, false), std::invalid_argument);
    CHECK_THROWS_AS(discrete_moment(t, -1.0, T + 100.0, false), std::out_of_range);
}

TEST_CASE("locator output is strictly increasing and matches known ordinates") {
    auto zeros = locate_zeros(29);
    REQUIRE(zeros.size() == 29);
    CHECK(zeros[0] == doctest::Approx(14.134725141734695).epsilon(1e-10));
    CHECK(zeros[1] == doctest::Approx(21.022039638771556).epsilon(1e-10));
    CHECK(zeros.back() < 100.0);
    for (std::size_t i = 1; i < zeros.size(); ++i) CHECK(zeros[i] > zeros[i - 1]);
}
