// Command-line front end for totient preimage enumeration and counting.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "phinv/construction.hpp"
#include "phinv/core_arith.hpp"
#include "phinv/errors.hpp"
#include "phinv/fermat.hpp"
#include "phinv/inverse.hpp"
#include "phinv/metric.hpp"
#include "phinv/three_smooth.hpp"

using json = nlohmann::ordered_json;
using namespace phinv;

namespace {

enum class Format { Human, Json, Csv };

struct Options {
    Format format = Format::Human;
    std::uint64_t budget = kDefaultBudget;
    std::string witness_file;
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

json natural_array(const std::vector<Natural>& xs) {
    json a = json::array();
    for (const Natural& x : xs) a.push_back(to_string(x));
    return a;
}

// Big integers are serialized as decimal strings throughout.
void emit(const Options& opt, const std::string& command, json inputs, json result,
          const std::string& provenance, const Timer& timer) {
    if (opt.format == Format::Json) {
        json rec;
        rec["command"] = command;
        rec["inputs"] = std::move(inputs);
        rec["result"] = std::move(result);
        rec["provenance"] = provenance;
        rec["elapsed_ms"] = timer.elapsed_ms();
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << command << ":";
        if (result.is_array()) {
            for (const auto& v : result) std::cout << " " << (v.is_string() ? v.get<std::string>() : v.dump());
        } else if (result.is_string()) {
            std::cout << " " << result.get<std::string>();
        } else {
            std::cout << " " << result.dump(2);
        }
        std::cout << "  [" << provenance << "]\n";
    }
}

FermatPrimeTable make_table(const Options& opt) {
    FermatPrimeTable table(20);
    if (!opt.witness_file.empty()) table.load_witness_file(opt.witness_file);
    return table;
}

Format initial_format() {
    if (const char* env = std::getenv("TOTIENT_PREIMAGES_FORMAT")) {
        std::string v = env;
        if (v == "json") return Format::Json;
        if (v == "csv") return Format::Csv;
    }
    return Format::Human;
}

std::string class_name(PreimageClass c) {
    switch (c) {
        case PreimageClass::PurePower23: return "pure-power-2-3";
        case PreimageClass::SingleExtraPrime: return "single-extra-prime";
        case PreimageClass::MultiExtraPrime: return "multi-extra-prime";
    }
    return "?";
}

int run(int argc, char** argv) {
    CLI::App app{"Exact enumeration and counting of Euler totient preimages"};
    app.require_subcommand(1);

    Options opt;
    opt.format = initial_format();
    bool json_flag = false, csv_flag = false;
    app.add_flag("--json", json_flag, "one JSON record per line");
    app.add_flag("--csv", csv_flag, "CSV output for tabular subcommands");
    app.add_option("--budget", opt.budget, "cap on oracle work (totient evaluations)");
    app.add_option("--witness-file", opt.witness_file,
                   "Fermat compositeness witnesses, one 'index divisor' per line");

    std::string m_str, h_str, g_str, b_str;
    unsigned e = 0, n_arg = 0, k_arg = 0;
    std::size_t mult_k = 0;
    std::string limit_str;
    double c_const = 1.0;
    bool report = false;

    auto* cmd_inverse = app.add_subcommand("inverse", "full preimage set of m");
    cmd_inverse->add_option("m", m_str)->required();

    auto* cmd_count = app.add_subcommand("count", "number of preimages of m");
    cmd_count->add_option("m", m_str)->required();

    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force preimage set of m");
    cmd_oracle->add_option("m", m_str)->required();

    auto* cmd_pow2 = app.add_subcommand("pow2", "preimages of powers of two");
    auto* cmd_pow2_count = cmd_pow2->add_subcommand("count");
    cmd_pow2_count->add_option("e", e)->required();
    auto* cmd_pow2_list = cmd_pow2->add_subcommand("list");
    cmd_pow2_list->add_option("e", e)->required();
    cmd_pow2->require_subcommand(1);

    auto* cmd_fermat = app.add_subcommand("fermat", "Fermat prime table");
    auto* cmd_fermat_list = cmd_fermat->add_subcommand("list");
    cmd_fermat_list->add_option("--below", b_str, "only entries below this value");
    cmd_fermat->require_subcommand(1);

    auto* cmd_construct = app.add_subcommand("construct", "preimages of Q_n by substitution");
    cmd_construct->add_option("n", n_arg)->required();

    auto* cmd_search = app.add_subcommand("search", "smallest m with a given multiplicity");
    cmd_search->add_option("--multiplicity", mult_k)->required();
    cmd_search->add_option("--limit", limit_str)->required();

    auto* cmd_smooth = app.add_subcommand("smooth", "preimages of 2^k 3^n with classification");
    cmd_smooth->add_option("k", k_arg)->required();
    cmd_smooth->add_option("n", n_arg)->required();
    cmd_smooth->add_flag("--report", report, "estimate-vs-exact counting report");

    auto* cmd_metric = app.add_subcommand("metric", "logarithmic cross-ratio metric");
    auto* cmd_metric_fromm = cmd_metric->add_subcommand("from-m");
    cmd_metric_fromm->add_option("m", m_str)->required();
    cmd_metric->add_option("hval", h_str)->description("first coordinate");
    cmd_metric->add_option("gval", g_str)->description("second coordinate");
    cmd_metric->add_option("--c", c_const, "metric constant");

    // Global flags may appear after the subcommand.
    auto enable_fallthrough = [](CLI::App* a, auto&& self) -> void {
        for (CLI::App* sub : a->get_subcommands({})) {
            sub->fallthrough();
            self(sub, self);
        }
    };
    enable_fallthrough(&app, enable_fallthrough);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }
    if (json_flag) opt.format = Format::Json;
    if (csv_flag) opt.format = Format::Csv;

    Timer timer;

    if (*cmd_inverse) {
        Natural m(m_str);
        auto xs = inverse_totient(m);
        emit(opt, "inverse", {{"m", m_str}}, natural_array(xs), "exact", timer);
    } else if (*cmd_count) {
        Natural m(m_str);
        emit(opt, "count", {{"m", m_str}}, std::to_string(multiplicity(m)), "exact", timer);
    } else if (*cmd_oracle) {
        Natural m(m_str);
        auto xs = brute_force_inverse(m, opt.budget);
        emit(opt, "oracle", {{"m", m_str}}, natural_array(xs), "oracle", timer);
    } else if (*cmd_pow2_count) {
        auto table = make_table(opt);
        emit(opt, "pow2 count", {{"e", std::to_string(e)}},
             to_string(count_pow2_preimages(e, table)), "exact", timer);
    } else if (*cmd_pow2_list) {
        auto table = make_table(opt);
        emit(opt, "pow2 list", {{"e", std::to_string(e)}},
             natural_array(enumerate_pow2_preimages(e, table)), "exact", timer);
    } else if (*cmd_fermat_list) {
        auto table = make_table(opt);
        Natural below = b_str.empty() ? Natural(0) : Natural(b_str);
        json rows = json::array();
        if (opt.format == Format::Csv) std::cout << "index,value,status,witness\n";
        for (const auto& entry : table.entries()) {
            if (!b_str.empty() && entry.value >= below) break;
            std::string status = entry.status == FermatStatus::Prime      ? "prime"
                                 : entry.status == FermatStatus::Composite ? "composite"
                                                                           : "unknown";
            if (opt.format == Format::Csv) {
                std::cout << entry.index << "," << to_string(entry.value) << "," << status << ","
                          << (entry.witness > 0 ? to_string(entry.witness) : "") << "\n";
            } else {
                json row;
                row["index"] = entry.index;
                row["value"] = to_string(entry.value);
                row["status"] = status;
                if (entry.witness > 0) row["witness"] = to_string(entry.witness);
                rows.push_back(std::move(row));
            }
        }
        if (opt.format != Format::Csv)
            emit(opt, "fermat list", {{"below", b_str}}, rows, "exact", timer);
    } else if (*cmd_construct) {
        auto xs = construct_preimages(n_arg);
        auto lb = lower_bound_check(n_arg);
        json result;
        result["q"] = to_string(q_value(n_arg));
        result["preimages"] = natural_array(xs);
        result["constructed"] = lb.constructed;
        if (lb.exact) result["exact"] = *lb.exact;
        emit(opt, "construct", {{"n", std::to_string(n_arg)}}, result, "exact", timer);
    } else if (*cmd_search) {
        auto found = find_with_multiplicity(mult_k, Natural(limit_str));
        json result = found ? json(to_string(*found)) : json(nullptr);
        emit(opt, "search",
             {{"multiplicity", std::to_string(mult_k)}, {"limit", limit_str}}, result, "exact",
             timer);
    } else if (*cmd_smooth) {
        ThreeSmoothTarget target{k_arg, n_arg};
        if (report) {
            // Estimate column sums the counting formula over feasible L with
            // F = 0 and minimal 3-exponent.
            if (opt.format == Format::Csv) {
                std::cout << "k,n,exact,paper_estimate,lower_trunc\n";
                auto row = report_row(k_arg, n_arg);
                std::cout << row.k << "," << row.n << "," << row.exact << ","
                          << row.paper_estimate.get_str() << "," << row.lower_trunc << "\n";
            } else {
                auto row = report_row(k_arg, n_arg);
                json result;
                result["exact"] = row.exact;
                result["paper_estimate"] = row.paper_estimate.get_str();
                result["lower_trunc"] = row.lower_trunc;
                emit(opt, "smooth report",
                     {{"k", std::to_string(k_arg)}, {"n", std::to_string(n_arg)}}, result,
                     "estimate", timer);
            }
        } else {
            auto xs = enumerate_three_smooth_preimages(k_arg, n_arg);
            json rows = json::array();
            for (const Natural& t : xs) {
                auto c = classify_preimage(t, target);
                json row;
                row["t"] = to_string(t);
                row["class"] = class_name(c.cls);
                row["x"] = c.two_exponent;
                row["y"] = c.three_exponent;
                json extras = json::array();
                for (const auto& ep : c.extra_primes) {
                    extras.push_back({{"p", to_string(ep.p)}, {"u", ep.u}, {"v", ep.v}});
                }
                row["extra_primes"] = std::move(extras);
                rows.push_back(std::move(row));
            }
            emit(opt, "smooth", {{"k", std::to_string(k_arg)}, {"n", std::to_string(n_arg)}},
                 rows, "exact", timer);
        }
    } else if (*cmd_metric_fromm) {
        auto [h, g] = eta_coordinates(Natural(m_str));
        json result;
        result["h"] = h;
        result["g"] = g;
        result["rho"] = rho(h, g);
        emit(opt, "metric from-m", {{"m", m_str}}, result, "exact", timer);
    } else if (*cmd_metric) {
        if (h_str.empty() || g_str.empty()) {
            std::cerr << "usage: metric <h> <g> [--c C] | metric from-m <m>\n";
            return 2;
        }
        double h = std::stod(h_str), g = std::stod(g_str);
        MetricDomain domain{c_const, h > c_const ? MetricSide::Above : MetricSide::Below};
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.9f", rho(h, g, domain));
        emit(opt, "metric", {{"h", h_str}, {"g", g_str}}, std::string(buf), "exact", timer);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 4;
    } catch (const unsettled_error& e) {
        std::cerr << "unsettled: " << e.what() << " (max settled index " << e.max_settled_index
                  << ")\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
