#include "quantfam/simstudy.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>

#include <json.hpp>

#include "quantfam/distribution.hpp"
#include "quantfam/rng.hpp"

namespace quantfam {

namespace {

std::vector<std::pair<std::string, double>> parameter_vector(const FamilySpec& spec) {
    std::vector<std::pair<std::string, double>> out;
    out.emplace_back("a", spec.a);
    out.emplace_back("b", spec.b);
    switch (spec.kind) {
        case FamilyKind::G: out.emplace_back("g", *spec.g); break;
        case FamilyKind::H: out.emplace_back("h", *spec.h); break;
        case FamilyKind::GH:
        case FamilyKind::GeneralizedGH:
            out.emplace_back("g", *spec.g);
            out.emplace_back("h", *spec.h);
            break;
        case FamilyKind::GK:
            out.emplace_back("g", *spec.g);
            out.emplace_back("k", *spec.k);
            break;
        case FamilyKind::GJ: out.emplace_back("g", *spec.g); break;
        case FamilyKind::DoubleHH:
            out.emplace_back("h_l", *spec.h_l);
            out.emplace_back("h_r", *spec.h_r);
            break;
        case FamilyKind::SuperHJK:
            out.emplace_back("alpha", *spec.alpha_s);
            out.emplace_back("beta", *spec.beta_s);
            out.emplace_back("gamma", *spec.gamma_s);
            break;
        case FamilyKind::LogisticGammaKappa:
            out.emplace_back("gamma", *spec.gamma_l);
            out.emplace_back("kappa", *spec.kappa_l2);
            break;
        case FamilyKind::LogisticKappaKappa:
            out.emplace_back("kappa_l", *spec.kappa_left);
            out.emplace_back("kappa_r", *spec.kappa_right);
            break;
    }
    return out;
}

std::uint64_t method_tag(FitMethod m) { return static_cast<std::uint64_t>(m) + 101; }

FitResult dispatch_fit(std::span<const double> data, FitMethod method, FamilyKind family,
                       const OptimizerSettings& settings) {
    switch (method) {
        case FitMethod::MoM: return fit_mom(data, settings);
        case FitMethod::ML: return fit_ml(data, family, settings);
        case FitMethod::QM: return fit_qm(data, family, settings);
        case FitMethod::MoLM: return fit_molm(data, family, settings);
        case FitMethod::LambdaMatch: return fit_logistic_lmatch(data, family);
    }
    throw Error("unreachable method");
}

std::string format17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double round3(double v) { return std::nearbyint(v * 1000.0) / 1000.0; }

std::string format3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", round3(v));
    return buf;
}

}  // namespace

FitResult run_replicate(int rep_index, int n, FitMethod method, const FamilySpec& true_spec,
                        std::uint64_t master_seed, const OptimizerSettings& settings) {
    std::uint64_t rep_seed = derive_seed(master_seed, static_cast<std::uint64_t>(n),
                                         method_tag(method),
                                         static_cast<std::uint64_t>(rep_index));
    SamplePayload draws = sample(n, rep_seed, true_spec);

    OptimizerSettings per_fit = settings;
    per_fit.seed = derive_seed(rep_seed, 0x5eedULL);

    auto t0 = std::chrono::steady_clock::now();
    FitResult fit = dispatch_fit(draws.values, method, true_spec.kind, per_fit);
    fit.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return fit;
}

StudySummary run_study(const StudyConfig& config) {
    if (config.replicates < 1)
        throw InvalidParameter("replicates", config.replicates, "replicates >= 1");
    for (int n : config.sample_sizes)
        if (n < 20) throw InvalidParameter("sample_sizes", n, "n >= 20");
    if (config.methods.empty() && !config.sample_sizes.empty())
        ;  // legal: produces a header-only table
    validate(config.true_spec);

    struct Task {
        std::size_t cell;
        int rep;
    };
    struct Cell {
        FitMethod method;
        int n;
    };
    std::vector<Cell> cells;
    for (FitMethod m : config.methods)
        for (int n : config.sample_sizes) cells.push_back({m, n});

    const int R = config.replicates;
    std::vector<std::vector<std::optional<FitResult>>> results(
        cells.size(), std::vector<std::optional<FitResult>>(static_cast<std::size_t>(R)));

    std::vector<Task> tasks;
    tasks.reserve(cells.size() * static_cast<std::size_t>(R));
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (int r = 0; r < R; ++r) tasks.push_back({c, r});

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            const Task& t = tasks[i];
            try {
                results[t.cell][static_cast<std::size_t>(t.rep)] =
                    run_replicate(t.rep, cells[t.cell].n, cells[t.cell].method, config.true_spec,
                                  config.master_seed, config.optimizer);
            } catch (const Error&) {
                results[t.cell][static_cast<std::size_t>(t.rep)] = std::nullopt;
            }
        }
    };

    int workers = std::max(1, config.parallelism);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    StudySummary summary;
    summary.true_spec = config.true_spec;
    summary.replicates = R;
    summary.master_seed = config.master_seed;

    auto truth = parameter_vector(config.true_spec);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        CellSummary cell;
        cell.method = cells[c].method;
        cell.n = cells[c].n;

        std::vector<const FitResult*> ok;
        for (const auto& r : results[c]) {
            if (r && r->converged)
                ok.push_back(&*r);
        }
        cell.successes = static_cast<int>(ok.size());
        cell.failures = R - cell.successes;

        for (std::size_t pi = 0; pi < truth.size(); ++pi) {
            ParameterStat stat;
            stat.name = truth[pi].first;
            stat.truth = truth[pi].second;
            if (!ok.empty()) {
                double mean = 0.0, mse = 0.0;
                for (const FitResult* f : ok) {
                    double est = parameter_vector(f->spec)[pi].second;
                    mean += est;
                    double d = est - stat.truth;
                    mse += d * d;
                }
                mean /= static_cast<double>(ok.size());
                mse /= static_cast<double>(ok.size());
                stat.mean = mean;
                stat.mse = mse;
                if (ok.size() >= 2) {
                    double ss = 0.0;
                    for (const FitResult* f : ok) {
                        double est = parameter_vector(f->spec)[pi].second;
                        ss += (est - mean) * (est - mean);
                    }
                    stat.sd = std::sqrt(ss / static_cast<double>(ok.size() - 1));
                }
            }
            cell.parameters.push_back(stat);
        }

        if (!ok.empty()) {
            double tm = 0.0;
            for (const FitResult* f : ok) tm += f->elapsed_seconds;
            tm /= static_cast<double>(ok.size());
            cell.time_mean_s = tm;
            if (ok.size() >= 2) {
                double ss = 0.0;
                for (const FitResult* f : ok)
                    ss += (f->elapsed_seconds - tm) * (f->elapsed_seconds - tm);
                cell.time_sd_s = std::sqrt(ss / static_cast<double>(ok.size() - 1));
            }
        }
        summary.cells.push_back(std::move(cell));
    }
    return summary;
}

StudyConfig study_config_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    StudyConfig cfg;
    cfg.true_spec = spec_from_json(j.at("true_spec").dump());
    cfg.sample_sizes = j.at("sample_sizes").get<std::vector<int>>();
    cfg.replicates = j.at("replicates").get<int>();
    for (const auto& m : j.at("methods"))
        cfg.methods.push_back(method_from_name(m.get<std::string>()));
    cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("parallelism")) cfg.parallelism = j.at("parallelism").get<int>();
    if (j.contains("optimizer")) {
        const auto& o = j.at("optimizer");
        if (o.contains("x_tol")) cfg.optimizer.x_tol = o.at("x_tol").get<double>();
        if (o.contains("f_tol")) cfg.optimizer.f_tol = o.at("f_tol").get<double>();
        if (o.contains("max_evals")) cfg.optimizer.max_evals = o.at("max_evals").get<int>();
        if (o.contains("restarts")) cfg.optimizer.restarts = o.at("restarts").get<int>();
    }
    if (cfg.replicates < 1)
        throw InvalidParameter("replicates", cfg.replicates, "replicates >= 1");
    return cfg;
}

std::string summary_csv(const StudySummary& summary) {
    std::string out = "method,n,parameter,truth,mean,sd,mse,failures\n";
    for (const auto& cell : summary.cells) {
        for (const auto& p : cell.parameters) {
            out += method_name(cell.method);
            out += ',' + std::to_string(cell.n) + ',' + p.name + ',' + format17(p.truth) + ',' +
                   format17(p.mean) + ',' + (p.sd ? format17(*p.sd) : std::string()) + ',' +
                   format17(p.mse) + ',' + std::to_string(cell.failures) + '\n';
        }
    }
    return out;
}

std::string summary_json(const StudySummary& summary) {
    nlohmann::json j;
    j["true_spec"] = nlohmann::json::parse(to_json(summary.true_spec));
    j["replicates"] = summary.replicates;
    j["master_seed"] = summary.master_seed;
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : summary.cells) {
        nlohmann::json c;
        c["method"] = method_name(cell.method);
        c["n"] = cell.n;
        c["successes"] = cell.successes;
        c["failures"] = cell.failures;
        nlohmann::json params = nlohmann::json::array();
        for (const auto& p : cell.parameters) {
            nlohmann::json pj;
            pj["parameter"] = p.name;
            pj["truth"] = p.truth;
            pj["mean"] = p.mean;
            if (p.sd)
                pj["sd"] = *p.sd;
            else
                pj["sd"] = nullptr;
            pj["mse"] = p.mse;
            params.push_back(pj);
        }
        c["parameters"] = params;
        cells.push_back(c);
    }
    j["cells"] = cells;
    return j.dump(2);
}

std::string timing_csv(const StudySummary& summary) {
    std::string out = "method,n,time_mean_s,time_sd_s\n";
    for (const auto& cell : summary.cells) {
        out += method_name(cell.method);
        out += ',' + std::to_string(cell.n) + ',' + format17(cell.time_mean_s) + ',' +
               (cell.time_sd_s ? format17(*cell.time_sd_s) : std::string()) + '\n';
    }
    return out;
}

std::string render_table(const StudySummary& summary, const std::string& format) {
    const bool markdown = (format == "markdown");
    if (!markdown && format != "csv")
        throw InvalidParameter("format", 0.0, "format in {csv, markdown}");

    std::string out;
    if (markdown) {
        out += "| method | n | parameter | mean | sd | mse |\n";
        out += "|---|---|---|---|---|---|\n";
    } else {
        out += "method,n,parameter,mean,sd,mse\n";
    }
    for (const auto& cell : summary.cells) {
        for (const auto& p : cell.parameters) {
            std::string sd = p.sd ? format3(*p.sd) : std::string();
            if (markdown) {
                out += "| " + std::string(method_name(cell.method)) + " | " +
                       std::to_string(cell.n) + " | " + p.name + " | " + format3(p.mean) +
                       " | " + sd + " | " + format3(p.mse) + " |\n";
            } else {
                out += std::string(method_name(cell.method)) + ',' + std::to_string(cell.n) +
                       ',' + p.name + ',' + format3(p.mean) + ',' + sd + ',' + format3(p.mse) +
                       '\n';
            }
        }
    }
    // timing block
    if (markdown) {
        out += "\n| method | n | time mean (s) | time sd (s) |\n";
        out += "|---|---|---|---|\n";
    } else {
        out += "method,n,time_mean_s,time_sd_s\n";
    }
    for (const auto& cell : summary.cells) {
        std::string sd = cell.time_sd_s ? format3(*cell.time_sd_s) : std::string();
        if (markdown) {
            out += "| " + std::string(method_name(cell.method)) + " | " + std::to_string(cell.n) +
                   " | " + format3(cell.time_mean_s) + " | " + sd + " |\n";
        } else {
            out += std::string(method_name(cell.method)) + ',' + std::to_string(cell.n) + ',' +
                   format3(cell.time_mean_s) + ',' + sd + '\n';
        }
    }
    return out;
}

}  // namespace quantfam
