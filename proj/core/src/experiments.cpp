#include "zr/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zr/averages.hpp"
#include "zr/errors.hpp"
#include "zr/euler.hpp"
#include "zr/identities.hpp"
#include "zr/sieve.hpp"
#include "zr/table_io.hpp"
#include "zr/test_function.hpp"

#include <json.hpp>

namespace zr {

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void csv_row(std::ostream& os, double T, double lambda, const std::string& label,
             cplx v, const std::string& rel) {
    os << fmt(T) << ',' << fmt(lambda) << ',' << csv_field(label) << ','
       << fmt(v.real()) << ',' << fmt(v.imag()) << ',' << rel << "\r\n";
}

double rel_err(cplx got, cplx want) {
    const double scale = std::abs(want);
    return scale > 0.0 ? std::abs(got - want) / scale : std::abs(got - want);
}

std::string show(cplx z) {
    return fmt(z.real()) + (z.imag() < 0 ? "" : "+") + fmt(z.imag()) + "i";
}

std::string show(const ShiftSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += show(s.elems[i]);
    }
    return out + "}";
}

void apply_threads(const RunOptions& opt) {
#ifdef _OPENMP
    if (opt.threads > 0) omp_set_num_threads(opt.threads);
#else
    (void)opt;
#endif
}

/// Maps exceptions to the documented exit codes.
template <class F>
int guarded(std::ostream& log, F&& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        log << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        log << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        log << "resource error: " << e.what() << '\n';
        return 3;
    } catch (const std::bad_alloc&) {
        log << "resource error: out of memory\n";
        return 3;
    } catch (const std::filesystem::filesystem_error& e) {
        log << "resource error: " << e.what() << '\n';
        return 3;
    } catch (const std::ios_base::failure& e) {
        log << "resource error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << '\n';
        return 1;
    }
}

RunManifest make_manifest(const Config& cfg, const RunOptions& opt) {
    RunManifest m;
    m.config = config_snapshot(cfg);
    m.version = kVersion;
    m.seed = opt.seed;
#ifdef _OPENMP
    m.threads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#else
    m.threads = 1;
#endif
    return m;
}

struct Timer {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
            .count();
    }
};

std::filesystem::path table_path(const Config& cfg, const char* tag,
                                 std::uint32_t X) {
    return cfg.output_dir /
           ("table_" + std::string(tag) + "_" + std::to_string(X) + ".bin");
}

/// Ensures sieved table artifacts for the pair (A,C)/(B,D) at size X exist,
/// honouring --no-build.  Returns false (and logs) when a dependency is
/// missing and building is disallowed.
bool ensure_tables(const Config& cfg, const RunOptions& opt, std::uint32_t X,
                   std::ostream& log) {
    struct Item {
        const char* tag;
        const ShiftSet *num, *den;
    };
    const Item items[] = {{"AC", &cfg.A, &cfg.C}, {"BD", &cfg.B, &cfg.D}};
    for (const Item& it : items) {
        const auto exact = table_path(cfg, it.tag, X);
        const auto sieved = table_path(cfg, it.tag, cfg.sieve_x);
        if (std::filesystem::exists(exact)) continue;
        if (cfg.sieve_x >= X && std::filesystem::exists(sieved)) continue;
        if (opt.no_build) {
            log << "resource error: missing coefficient table " << exact.string()
                << " (run the sieve subcommand or drop --no-build)\n";
            return false;
        }
        write_table(sieve_coefficients(*it.num, *it.den, X), exact);
    }
    return true;
}

cplx rand_disk(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = radius * std::sqrt(unit(rng));
    const double th = 2.0 * M_PI * unit(rng);
    return {r * std::cos(th), r * std::sin(th)};
}

/// Denominator shifts need positive real part; shift the disk right.
cplx rand_denominator(std::mt19937_64& rng) {
    cplx z = rand_disk(rng, 0.095);
    return z + cplx{0.145, 0.0};
}

ShiftSet rand_set(std::mt19937_64& rng, std::size_t n, Role role) {
    ShiftSet s;
    s.role = role;
    for (std::size_t i = 0; i < n; ++i)
        s.elems.push_back(is_numerator(role) ? rand_disk(rng, 0.2)
                                             : rand_denominator(rng));
    return s;
}

}  // namespace

std::vector<IdentityRecord> identity_suite(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<IdentityRecord> out;

    for (int i = 0; i < count; ++i) {
        {
            SequencePair pair;
            for (int k = 0; k < 8; ++k) pair.a_prime.push_back(rand_disk(rng, 1.0));
            for (int k = 0; k < 8; ++k) pair.b_prime.push_back(rand_disk(rng, 1.0));
            pair.Y = cplx{1.0, 0.0} + rand_disk(rng, 0.3);
            pair.Z = cplx{1.2, 0.0} + rand_disk(rng, 0.3);
            const cplx X = rand_disk(rng, 0.3);
            IdentityRecord rec;
            rec.family = "power-series pair identity";
            rec.params = "X=" + show(X) + " Y=" + show(pair.Y) +
                         " Z=" + show(pair.Z);
            rec.tolerance = 1e-10;
            rec.residual = check_theorem3(pair, X);
            rec.pass = rec.residual <= rec.tolerance;
            out.push_back(rec);
        }
        {
            const std::uint64_t primes[] = {2, 3, 5, 7};
            const std::uint64_t p = primes[rng() % 4];
            const ShiftSet A = rand_set(rng, 2, Role::A);
            const ShiftSet B = rand_set(rng, 2, Role::B);
            const ShiftSet C = rand_set(rng, 1, Role::C);
            const ShiftSet D = rand_set(rng, 1, Role::D);
            IdentityRecord rec;
            rec.family = "local q-sum identity";
            rec.params = "p=" + std::to_string(p) + " A=" + show(A) +
                         " B=" + show(B) + " C=" + show(C) + " D=" + show(D);
            rec.tolerance = 1e-8;
            rec.residual = check_local_theorem1(p, A, B, C, D, A.elems[0],
                                                B.elems[0]);
            rec.pass = rec.residual <= rec.tolerance;
            out.push_back(rec);
        }
        {
            const auto q = static_cast<std::uint32_t>(1 + rng() % 50);
            const cplx A{3.0 + unit(rng), 2.0 * unit(rng) - 1.0};
            const std::uint64_t H = 100000;
            IdentityRecord rec;
            rec.family = "ramanujan sum series";
            rec.params = "q=" + std::to_string(q) + " A=" + show(A);
            const RqSeriesCheck chk = check_rq_series(q, A, H);
            rec.residual = std::abs(chk.lhs_partial - chk.rhs);
            rec.tolerance = chk.tail_bound + 1e-8;
            rec.pass = rec.residual <= rec.tolerance;
            out.push_back(rec);
        }
        {
            const std::uint64_t primes[] = {2, 3, 5, 7, 11};
            const std::uint64_t p = primes[rng() % 5];
            const ShiftSet A = rand_set(rng, 3, Role::A);
            const ShiftSet C = rand_set(rng, 2, Role::C);
            const cplx alpha = A.elems[rng() % 3];
            IdentityRecord rec;
            rec.family = "coefficient recurrence";
            rec.params = "p=" + std::to_string(p) + " A=" + show(A) +
                         " C=" + show(C);
            rec.tolerance = 1e-10;
            rec.residual = check_recurrence(A, C, alpha, p, 30);
            rec.pass = rec.residual <= rec.tolerance;
            out.push_back(rec);
        }
        {
            const ShiftSet A = rand_set(rng, 1, Role::A);
            const ShiftSet B = rand_set(rng, 1, Role::B);
            const ShiftSet C = rand_set(rng, 1, Role::C);
            const ShiftSet D = rand_set(rng, 1, Role::D);
            const cplx s{0.1 + 0.3 * unit(rng), 2.0 * unit(rng) - 1.0};
            IdentityRecord rec;
            rec.family = "convolution shift";
            rec.params = "s=" + show(s) + " A=" + show(A) + " B=" + show(B) +
                         " C=" + show(C) + " D=" + show(D);
            rec.tolerance = 1e-8;
            rec.residual = check_B_shift(A, B, C, D, s);
            rec.pass = rec.residual <= rec.tolerance;
            out.push_back(rec);
        }
    }
    return out;
}

int run_sieve(const Config& cfg, const RunOptions& opt, std::ostream& log) {
    return guarded(log, [&]() -> int {
        apply_threads(opt);
        Timer timer;
        std::filesystem::create_directories(cfg.output_dir);
        RunManifest manifest = make_manifest(cfg, opt);

        const CoefficientTable ac = sieve_coefficients(cfg.A, cfg.C, cfg.sieve_x);
        const CoefficientTable bd = sieve_coefficients(cfg.B, cfg.D, cfg.sieve_x);
        const auto pac = table_path(cfg, "AC", cfg.sieve_x);
        const auto pbd = table_path(cfg, "BD", cfg.sieve_x);
        write_table(ac, pac);
        write_table(bd, pbd);
        log << "wrote " << pac.string() << " and " << pbd.string() << " (X = "
            << cfg.sieve_x << ")\n";

        manifest.wall_seconds = timer.seconds();
        manifest.diagnostics.emplace_back("tables",
                                          pac.string() + ";" + pbd.string());
        manifest.write(cfg.output_dir / "sieve_manifest.json");
        return 0;
    });
}

int run_check_identities(const Config& cfg, const RunOptions& opt,
                         std::ostream& log) {
    return guarded(log, [&]() -> int {
        apply_threads(opt);
        Timer timer;
        std::filesystem::create_directories(cfg.output_dir);
        const std::vector<IdentityRecord> records =
            identity_suite(opt.seed, opt.identity_count);

        nlohmann::ordered_json report = nlohmann::ordered_json::array();
        std::size_t failures = 0;
        for (const IdentityRecord& r : records) {
            report.push_back({{"family", r.family},
                              {"params", r.params},
                              {"residual", r.residual},
                              {"tolerance", r.tolerance},
                              {"pass", r.pass}});
            if (!r.pass) {
                ++failures;
                log << "FAIL " << r.family << " (" << r.params
                    << "): residual " << fmt(r.residual) << " > tolerance "
                    << fmt(r.tolerance) << '\n';
            }
        }
        {
            std::ofstream out(cfg.output_dir / "identities.json");
            out << report.dump(2) << '\n';
        }
        RunManifest manifest = make_manifest(cfg, opt);
        manifest.wall_seconds = timer.seconds();
        manifest.diagnostics.emplace_back("instances",
                                          std::to_string(records.size()));
        manifest.diagnostics.emplace_back("failures", std::to_string(failures));
        manifest.write(cfg.output_dir / "identities_manifest.json");
        log << records.size() << " identity instances, " << failures
            << " failures\n";
        return failures == 0 ? 0 : 1;
    });
}

int run_moments(const Config& cfg, const RunOptions& opt, std::ostream& log) {
    return guarded(log, [&]() -> int {
        apply_threads(opt);
        Timer timer;
        std::filesystem::create_directories(cfg.output_dir);
        const TestFunction psi(cfg.psi_lo, cfg.psi_hi);

        std::ofstream csv(cfg.output_dir / "moments.csv");
        csv << "T,lambda,component,re,im,rel_err\r\n";
        std::vector<std::pair<double, double>> convergence;

        for (double T : cfg.t_grid) {
            ExperimentConfig ex{cfg.A,          cfg.B,  cfg.C,
                                cfg.D,          T,      cfg.lambda,
                                &psi,           cfg.x_override, 1,
                                cfg.prime_cutoff};
            if (!ensure_tables(cfg, opt, ex.X(), log)) return 3;

            const cplx lhs = truncated_lhs(ex);
            ComparisonReport report = truncated_rhs(ex);
            report.empirical = lhs;
            report.abs_err = std::abs(lhs - report.predicted);
            report.rel_err = rel_err(lhs, report.predicted);

            csv_row(csv, T, cfg.lambda, "truncated lhs", lhs, "");
            for (const Component& c : report.components)
                csv_row(csv, T, cfg.lambda, c.label, c.value, "");
            csv_row(csv, T, cfg.lambda, "predicted total", report.predicted,
                    fmt(report.rel_err));
            convergence.emplace_back(T, report.rel_err);
            log << "T = " << fmt(T) << ": rel_err = " << fmt(report.rel_err)
                << '\n';
        }
        csv.close();

        if (opt.emit_plot_data) {
            std::ofstream plot(cfg.output_dir / "moments_convergence.csv");
            plot << "T,rel_err\r\n";
            for (const auto& [T, e] : convergence)
                plot << fmt(T) << ',' << fmt(e) << "\r\n";
        }

        RunManifest manifest = make_manifest(cfg, opt);
        manifest.wall_seconds = timer.seconds();
        manifest.write(cfg.output_dir / "moments_manifest.json");
        return 0;
    });
}

int run_ratios(const Config& cfg, const RunOptions& opt, std::ostream& log) {
    return guarded(log, [&]() -> int {
        apply_threads(opt);
        Timer timer;
        std::filesystem::create_directories(cfg.output_dir);
        const TestFunction psi(cfg.psi_lo, cfg.psi_hi);
        const std::size_t max_swap = std::min(cfg.A.size(), cfg.B.size());

        std::ofstream csv(cfg.output_dir / "ratios.csv");
        csv << "T,lambda,component,re,im,rel_err\r\n";
        for (double T : cfg.t_grid) {
            ExperimentConfig ex{cfg.A,          cfg.B,  cfg.C,
                                cfg.D,          T,      cfg.lambda,
                                &psi,           cfg.x_override, 1,
                                cfg.prime_cutoff};
            const cplx lhs = ratios_lhs(ex);
            std::vector<Component> components;
            const cplx rhs = ratios_rhs(ex, max_swap, &components);
            const double rel = rel_err(lhs, rhs);

            csv_row(csv, T, cfg.lambda, "average lhs", lhs, "");
            for (const Component& c : components)
                csv_row(csv, T, cfg.lambda, c.label, c.value, "");
            csv_row(csv, T, cfg.lambda, "predicted total", rhs, fmt(rel));
            log << "T = " << fmt(T) << ": rel_err = " << fmt(rel) << '\n';
        }
        csv.close();

        RunManifest manifest = make_manifest(cfg, opt);
        manifest.wall_seconds = timer.seconds();
        manifest.write(cfg.output_dir / "ratios_manifest.json");
        return 0;
    });
}

int run_correlations(const Config& cfg, const RunOptions& opt,
                     std::ostream& log) {
    return guarded(log, [&]() -> int {
        apply_threads(opt);
        Timer timer;
        std::filesystem::create_directories(cfg.output_dir);

        const double u = cfg.corr_u;
        const auto m_lo = static_cast<std::uint32_t>(std::ceil(u));
        const auto m_hi =
            static_cast<std::uint32_t>(std::floor(u * (1.0 + cfg.corr_width)));
        if (m_hi <= m_lo)
            throw ConfigError("correlations: empty averaging window");
        std::uint32_t h_max = 0;
        for (std::uint32_t h : cfg.h_values) h_max = std::max(h_max, h);

        const CoefficientTable Ia = sieve_coefficients(cfg.A, cfg.C, m_hi);
        const CoefficientTable Ib =
            sieve_coefficients(cfg.B, cfg.D, m_hi + h_max);

        std::ofstream csv(cfg.output_dir / "correlations.csv");
        csv << "u,h,component,re,im,rel_err\r\n";
        for (std::uint32_t h : cfg.h_values) {
            cplx sum{};
            for (std::uint32_t m = m_lo; m <= m_hi; ++m)
                sum += Ia[m] * Ib[m + h];
            const cplx empirical = sum / static_cast<double>(m_hi - m_lo + 1);
            const cplx predicted = correlation_predicted(
                cfg.A, cfg.C, cfg.B, cfg.D, u, h, cfg.corr_qmax);
            const double rel = rel_err(empirical, predicted);

            csv << fmt(u) << ',' << h << ",windowed mean," << fmt(empirical.real())
                << ',' << fmt(empirical.imag()) << ",\r\n";
            csv << fmt(u) << ',' << h << ",predicted," << fmt(predicted.real())
                << ',' << fmt(predicted.imag()) << ',' << fmt(rel) << "\r\n";
            log << "h = " << h << ": rel_err = " << fmt(rel) << '\n';
        }
        csv.close();

        RunManifest manifest = make_manifest(cfg, opt);
        manifest.wall_seconds = timer.seconds();
        manifest.write(cfg.output_dir / "correlations_manifest.json");
        return 0;
    });
}

}  // namespace zr
