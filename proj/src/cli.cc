// Copyright 2026 The bifree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bifree/cli.h"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "bifree/bichromatic.h"
#include "bifree/cumulants.h"
#include "bifree/errors.h"
#include "bifree/limit_law.h"
#include "bifree/matrix_model.h"
#include "bifree/meanders.h"
#include "bifree/partitions.h"
#include "bifree/tensor_clt.h"
#include "json.hpp"

namespace bifree {

namespace {

using Json = nlohmann::ordered_json;

void check_cap(const char *what, long long value, long long cap) {
    if (value > cap) {
        throw ResourceError(std::string(what) + " = " + std::to_string(value) + " exceeds the cap " +
                            std::to_string(cap) + " (raise it with BIFREE_MAX_SIZE)");
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ArgumentError("cannot open input file " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string csv_quote(const std::string &s) {
    if (s.find_first_of(",\"") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

// Leg moments from either a bare array (used for both legs) or {"a": [...], "b": [...]}.
std::pair<MomentSeq, MomentSeq> read_legs(const std::string &path) {
    std::string text = read_file(path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ArgumentError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    if (doc.is_array()) {
        MomentSeq ms(rationals_from_json(doc.dump()));
        return {ms, ms};
    }
    if (doc.is_object() && doc.contains("a") && doc.contains("b")) {
        return {MomentSeq(rationals_from_json(doc["a"].dump())), MomentSeq(rationals_from_json(doc["b"].dump()))};
    }
    throw ArgumentError("moment input must be a JSON array or an object with \"a\" and \"b\" arrays");
}

class Runner {
   public:
    Runner(CliConfig config, std::ostream &out) : cfg_(std::move(config)), out_(out) {
    }

    Json number(const Rational &r) const {
        if (cfg_.numeric == NumericMode::float_point) {
            return Json(r.get_d());
        }
        return Json(to_string(r));
    }

    std::string cell(const Rational &r) const {
        return cfg_.numeric == NumericMode::float_point ? format_double(r.get_d()) : to_string(r);
    }

    void emit(const Json &doc) {
        out_ << doc.dump() << "\n";
    }

    bool csv() const {
        return cfg_.output == OutputFormat::csv;
    }

    void sequence(const std::vector<Rational> &values) {
        if (csv()) {
            out_ << "k,value\n";
            for (std::size_t k = 0; k < values.size(); ++k) {
                out_ << k + 1 << "," << cell(values[k]) << "\n";
            }
            return;
        }
        Json arr = Json::array();
        for (const auto &v : values) {
            arr.push_back(number(v));
        }
        emit(arr);
    }

    void strings(const char *header, const std::vector<std::string> &items) {
        if (csv()) {
            out_ << header << "\n";
            for (const auto &s : items) {
                out_ << csv_quote(s) << "\n";
            }
            return;
        }
        emit(Json(items));
    }

    void surd_fields(Json &row, const SurdValue &v) const {
        if (cfg_.numeric == NumericMode::float_point) {
            row["value"] = v.approx();
            return;
        }
        row["value"] = to_string(v.coefficient);
        if (!v.is_rational()) {
            row["radicand"] = to_string(v.radicand);
            row["approx"] = v.approx();
        }
    }

    std::string surd_cell(const SurdValue &v) const {
        if (cfg_.numeric == NumericMode::float_point || v.is_rational()) {
            return cfg_.numeric == NumericMode::float_point ? format_double(v.approx()) : to_string(v.coefficient);
        }
        return to_string(v.coefficient) + "*sqrt(" + to_string(v.radicand) + ")";
    }

    const CliCaps &caps() const {
        return cfg_.caps;
    }

   private:
    CliConfig cfg_;
    std::ostream &out_;
};

std::vector<SetPartition> partitions_of_kind(int n, const std::string &kind) {
    std::vector<SetPartition> out;
    if (kind == "nc") {
        return enumerate_noncrossing(n);
    }
    if (kind == "nc2") {
        return enumerate_pair_noncrossing(n);
    }
    if (kind == "all") {
        for_each_partition(n, [&](const SetPartition &p) { out.push_back(p); });
        return out;
    }
    for_each_pair_partition(n, [&](const SetPartition &p) {
        auto c = classify_pair_partition(p);
        if (kind == "pairs" || (kind == "con" && c.is_connected) || (kind == "bicon" && c.is_bipartite_connected)) {
            out.push_back(p);
        }
    });
    return out;
}

std::uint64_t count_of_kind(int n, const std::string &kind) {
    if (kind == "bicon") {
        return (n % 2 == 0) ? count_bicon_pairs(n) : 0;
    }
    if (kind == "all") {
        std::uint64_t count = 0;
        for_each_partition(n, [&](const SetPartition &) { ++count; });
        return count;
    }
    return partitions_of_kind(n, kind).size();
}

}  // namespace

CliCaps CliCaps::from_environment() {
    CliCaps caps;
    const char *env = std::getenv("BIFREE_MAX_SIZE");
    if (env == nullptr || *env == '\0') {
        return caps;
    }
    std::string_view text(env);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
        throw ArgumentError("BIFREE_MAX_SIZE must be a positive integer, got '" + std::string(text) + "'");
    }
    caps.max_partition_n = value;
    caps.max_cumulant_order = value;
    caps.max_meander_size = value;
    caps.max_clt_m = value;
    caps.max_limit_order = value;
    caps.max_matrix_n = value;
    return caps;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"bifree: partitions, bi-free cumulants and tensor central limits in exact arithmetic"};
    app.name("bifree");
    app.require_subcommand(1);
    app.fallthrough();

    std::string output = "json";
    std::string numeric = "rational";
    app.add_option("--output", output, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--numeric", numeric, "rational or float")->check(CLI::IsMember({"rational", "float"}));

    std::function<void(Runner &)> action;
    auto leaf = [&](CLI::App *parent, const std::string &name, const std::string &help) {
        auto *sub = parent->add_subcommand(name, help);
        sub->fallthrough();
        return sub;
    };
    auto group = [&](const std::string &name, const std::string &help) {
        auto *sub = app.add_subcommand(name, help);
        sub->require_subcommand(1);
        sub->fallthrough();
        return sub;
    };

    // partitions
    int part_n = 0;
    std::string part_kind = "all";
    auto *partitions = group("partitions", "set partitions of [n]");
    const std::vector<std::string> kinds{"all", "nc", "nc2", "pairs", "con", "bicon"};
    auto *p_count = leaf(partitions, "count", "count partitions of a kind");
    auto *p_list = leaf(partitions, "list", "list partitions of a kind");
    for (auto *sub : {p_count, p_list}) {
        sub->add_option("--n", part_n, "ground set size")->required()->check(CLI::Range(1, 64));
        sub->add_option("--kind", part_kind, "all, nc, nc2, pairs, con or bicon")->check(CLI::IsMember(kinds));
    }
    p_count->callback([&]() {
        action = [&](Runner &r) {
            check_cap("n", part_n, r.caps().max_partition_n);
            std::uint64_t count = count_of_kind(part_n, part_kind);
            if (r.csv()) {
                out << "n,kind,count\n" << part_n << "," << part_kind << "," << count << "\n";
                return;
            }
            r.emit(Json{{"n", part_n}, {"kind", part_kind}, {"count", count}});
        };
    });
    p_list->callback([&]() {
        action = [&](Runner &r) {
            check_cap("n", part_n, r.caps().max_partition_n);
            std::vector<std::string> items;
            for (const auto &p : partitions_of_kind(part_n, part_kind)) {
                items.push_back(to_string(p));
            }
            r.strings("partition", items);
        };
    });

    // bnc
    std::string chi_text;
    std::string partition_text;
    bool vs_only = false;
    auto *bnc = group("bnc", "bi-non-crossing partitions for a chi map");
    auto *b_list = leaf(bnc, "list", "list BNC(chi)");
    b_list->add_option("--chi", chi_text, "sides as a string over L and R")->required();
    b_list->add_flag("--vertically-split", vs_only, "keep only vertically split partitions");
    b_list->callback([&]() {
        action = [&](Runner &r) {
            ChiMap chi = parse_chi(chi_text);
            check_cap("chi length", chi.size(), r.caps().max_partition_n);
            std::vector<std::string> items;
            for (const auto &p : enumerate_bnc(chi)) {
                if (!vs_only || is_vertically_split(p)) {
                    items.push_back(to_string(p.partition()));
                }
            }
            r.strings("partition", items);
        };
    });
    auto *b_check = leaf(bnc, "check", "test one partition");
    b_check->add_option("--chi", chi_text, "sides as a string over L and R")->required();
    b_check->add_option("--partition", partition_text, "blocks like 1,4|2,3")->required();
    b_check->callback([&]() {
        action = [&](Runner &r) {
            ChiMap chi = parse_chi(chi_text);
            SetPartition p = parse_partition(partition_text);
            if (p.size() != chi.size()) {
                throw ArgumentError("partition and chi have different sizes");
            }
            bool ok = is_bnc(p, chi);
            bool split = ok && is_vertically_split(BNCPartition(p, chi));
            if (r.csv()) {
                out << "chi,partition,bnc,vertically_split\n"
                    << to_string(chi) << "," << csv_quote(to_string(p)) << "," << ok << "," << split << "\n";
                return;
            }
            r.emit(Json{{"chi", to_string(chi)}, {"partition", to_string(p)}, {"bnc", ok}, {"vertically_split", split}});
        };
    });

    // meander
    int meander_size = 0;
    std::string system_text;
    auto *meander = group("meander", "meandric systems");
    auto *m_dist = leaf(meander, "dist", "loop-count histogram over all systems of a size");
    m_dist->add_option("--size", meander_size, "number of arcs on each side")->required()->check(CLI::Range(1, 64));
    m_dist->callback([&]() {
        action = [&](Runner &r) {
            check_cap("size", meander_size, r.caps().max_meander_size);
            auto hist = loop_distribution(meander_size, r.caps().max_meander_size);
            if (r.csv()) {
                out << "loops,count\n";
                for (const auto &[c, count] : hist) {
                    out << c << "," << count << "\n";
                }
                return;
            }
            Json obj = Json::object();
            for (const auto &[c, count] : hist) {
                obj[std::to_string(c)] = count;
            }
            r.emit(obj);
        };
    });
    auto *m_loops = leaf(meander, "loops", "loop count of one system");
    m_loops->add_option("--system", system_text, "top=...;bottom=...")->required();
    m_loops->callback([&]() {
        action = [&](Runner &r) {
            MeandricSystem system = parse_meander(system_text);
            int c = loop_count(system);
            if (r.csv()) {
                out << "system,loops\n" << csv_quote(to_string(system)) << "," << c << "\n";
                return;
            }
            r.emit(Json{{"system", to_string(system)}, {"loops", c}});
        };
    });

    // cumulants
    std::string input_path;
    auto *cumulants = group("cumulants", "free moment-cumulant transforms");
    auto *c_to = leaf(cumulants, "to-moments", "free cumulants to moments");
    c_to->add_option("--input", input_path, "JSON array of kappa_1..kappa_K")->required();
    c_to->callback([&]() {
        action = [&](Runner &r) {
            CumulantSeq k(rationals_from_json(read_file(input_path)));
            check_cap("K", k.max_order(), r.caps().max_partition_n);
            r.sequence(moments_from_free_cumulants(k).values());
        };
    });
    auto *c_from = leaf(cumulants, "from-moments", "moments to free cumulants");
    c_from->add_option("--input", input_path, "JSON array of m_1..m_K")->required();
    c_from->callback([&]() {
        action = [&](Runner &r) {
            MomentSeq m(rationals_from_json(read_file(input_path)));
            check_cap("K", m.max_order(), r.caps().max_cumulant_order);
            r.sequence(free_cumulants_from_moments(m).values());
        };
    });

    // clt
    int clt_m = 0;
    std::vector<std::int64_t> clt_n;
    std::string clt_route = "tensor";
    auto *clt = group("clt", "exact moments of the normalized tensor sum S_n");
    auto *clt_moments = leaf(clt, "moments", "(phi (x) phi)(S_n^m)");
    auto *clt_table = leaf(clt, "table", "exact moments against the limit law");
    for (auto *sub : {clt_moments, clt_table}) {
        sub->add_option("--m", clt_m, "moment order")->required()->check(CLI::Range(1, 64));
        sub->add_option("--n", clt_n, "number of summands (repeatable)")->required()->check(CLI::PositiveNumber);
        sub->add_option("--input", input_path, "leg moments: array, or {\"a\": [...], \"b\": [...]}")->required();
    }
    clt_moments->add_option("--route", clt_route, "tensor or bifree")->check(CLI::IsMember({"tensor", "bifree"}));
    clt_moments->callback([&]() {
        action = [&](Runner &r) {
            check_cap("m", clt_m, r.caps().max_clt_m);
            auto [a, b] = read_legs(input_path);
            TensorMomentEngine engine(TensorCLTInput::from_moments(a, b), r.caps().max_clt_m);
            Route route = clt_route == "bifree" ? Route::bifree : Route::tensor_factorized;
            if (r.csv()) {
                out << "m,n,value\n";
                for (auto n : clt_n) {
                    out << clt_m << "," << n << "," << r.surd_cell(engine.moment(clt_m, n, route)) << "\n";
                }
                return;
            }
            Json rows = Json::array();
            for (auto n : clt_n) {
                Json row{{"m", clt_m}, {"n", n}};
                r.surd_fields(row, engine.moment(clt_m, n, route));
                rows.push_back(row);
            }
            r.emit(rows);
        };
    });
    clt_table->callback([&]() {
        action = [&](Runner &r) {
            check_cap("m", clt_m, r.caps().max_clt_m);
            auto [a, b] = read_legs(input_path);
            auto rows = convergence_table(clt_m, clt_n, TensorCLTInput::from_moments(a, b), r.caps().max_clt_m);
            if (r.csv()) {
                out << "n,value,limit,gap\n";
                for (const auto &row : rows) {
                    out << row.n << "," << r.surd_cell(row.value) << "," << r.cell(row.limit) << ","
                        << format_double(row.gap) << "\n";
                }
                return;
            }
            Json arr = Json::array();
            for (const auto &row : rows) {
                Json j{{"n", row.n}};
                r.surd_fields(j, row.value);
                j["limit"] = r.number(row.limit);
                j["gap"] = row.gap;
                arr.push_back(j);
            }
            r.emit(arr);
        };
    });

    // limit
    std::string q_text = "0";
    int limit_k = 0;
    std::string limit_route = "recurrence";
    auto *limit = group("limit", "the limit law mu_q");
    auto *l_moments = leaf(limit, "moments", "M_1..M_K of mu_q");
    l_moments->add_option("--q", q_text, "q in [0, 1), as p/q")->required();
    l_moments->add_option("--K", limit_k, "highest order")->required()->check(CLI::Range(1, 1000));
    l_moments->add_option("--route", limit_route, "recurrence or cumulants")
        ->check(CLI::IsMember({"recurrence", "cumulants"}));
    l_moments->callback([&]() {
        action = [&](Runner &r) {
            check_cap("K", limit_k, r.caps().max_limit_order);
            LimitLawParams params{parse_rational(q_text), limit_k};
            params.validate();
            MomentSeq ms = limit_route == "cumulants" ? mu_q_moments_cumulant_route(params.q, limit_k)
                                                      : mu_q_moments_recurrence(params.q, limit_k);
            r.sequence(ms.values());
        };
    });

    // simulate
    SimConfig sim;
    sim.d = 2;
    sim.n = 100;
    sim.trials = 200;
    double sim_lambda = 0.0;
    double sim_sigma = 1.0;
    bool empirical_means = false;
    std::string strategy = "auto";
    std::string spectrum_path;
    double z_threshold = 3.0;
    auto *simulate = app.add_subcommand("simulate", "Monte Carlo moments of the Kraus-type tensor sum Delta");
    simulate->fallthrough();
    simulate->add_option("--d", sim.d, "tensor summands")->check(CLI::Range(1, 1 << 20));
    simulate->add_option("--n", sim.n, "matrix dimension")->check(CLI::Range(1, 1 << 20));
    simulate->add_option("--trials", sim.trials, "independent trials")->check(CLI::Range(1, 1 << 30));
    simulate->add_option("--seed", sim.seed, "64-bit seed");
    simulate->add_option("--lambda", sim_lambda, "shift of every sample");
    simulate->add_option("--sigma", sim_sigma, "scale of every sample")->check(CLI::NonNegativeNumber);
    simulate->add_option("--max-moment", sim.max_moment, "highest moment order")->check(CLI::Range(1, 64));
    simulate->add_option("--threads", sim.threads, "worker threads")->check(CLI::Range(1, 1024));
    simulate->add_flag("--empirical-means", empirical_means, "subtract sampled traces instead of lambda (biased)");
    simulate->add_option("--strategy", strategy, "auto, factorized or dense")
        ->check(CLI::IsMember({"auto", "factorized", "dense"}));
    simulate->add_option("--z-threshold", z_threshold, "pass bound on |z|")->check(CLI::PositiveNumber);
    simulate->add_option("--dump-spectrum", spectrum_path, "write eigenvalues of Delta (trial 0), one per line");
    simulate->callback([&]() {
        action = [&](Runner &r) {
            check_cap("n", static_cast<long long>(sim.n), r.caps().max_matrix_n);
            if (!spectrum_path.empty() && sim.n * sim.n > kMaxDenseDelta) {
                throw ResourceError("--dump-spectrum needs n^2 <= " + std::to_string(kMaxDenseDelta));
            }
            sim.means = empirical_means ? MeanMode::empirical : MeanMode::analytic;
            sim.strategy = strategy == "dense"        ? MomentStrategy::dense
                           : strategy == "factorized" ? MomentStrategy::factorized
                                                      : MomentStrategy::automatic;
            EnsembleSpec spec{EnsembleKind::gue, sim.n, sim_sigma, sim_lambda};
            auto estimates = empirical_moments(sim, spec);
            std::vector<double> exact;
            for (const auto &v : predicted_delta_moments(spec, sim.d, sim.max_moment)) {
                exact.push_back(v.approx());
            }
            auto cmp = compare_to_prediction(estimates, exact, z_threshold);
            if (!spectrum_path.empty()) {
                std::ofstream f(spectrum_path);
                if (!f) {
                    throw ArgumentError("cannot write " + spectrum_path);
                }
                for (double ev : delta_spectrum(sim, spec, 0)) {
                    f << format_double(ev) << "\n";
                }
            }
            if (r.csv()) {
                out << "m,mean,std_error,exact,z\n";
                for (const auto &z : cmp.rows) {
                    out << z.m << "," << format_double(z.mean) << "," << format_double(z.std_error) << ","
                        << format_double(z.exact) << "," << format_double(z.z) << "\n";
                }
                return;
            }
            Json rows = Json::array();
            for (const auto &z : cmp.rows) {
                rows.push_back(
                    Json{{"m", z.m}, {"mean", z.mean}, {"std_error", z.std_error}, {"exact", z.exact}, {"z", z.z}});
            }
            r.emit(rows);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        CliConfig cfg;
        cfg.output = output == "csv" ? OutputFormat::csv : OutputFormat::json;
        cfg.numeric = numeric == "float" ? NumericMode::float_point : NumericMode::rational;
        cfg.seed = sim.seed;
        cfg.caps = CliCaps::from_environment();
        for (const auto *sub : app.get_subcommands()) {
            cfg.subcommand = sub->get_name();
            for (const auto *inner : sub->get_subcommands()) {
                cfg.subcommand += " " + inner->get_name();
            }
        }
        if (!action) {
            err << app.help();
            return kExitUsage;
        }
        Runner runner(cfg, out);
        action(runner);
    } catch (const ResourceError &e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const ArgumentError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InsufficientDataError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace bifree
