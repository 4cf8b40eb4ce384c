// cutstack: exact cutting-and-stacking constructions and randomness-test
// experiments. Subcommands: build | simulate | tests | compress | adversary |
// run-all | acceptance.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cutstack/adversary.hpp"
#include "cutstack/criteria.hpp"
#include "cutstack/csvio.hpp"
#include "cutstack/dynamics.hpp"
#include "cutstack/lil.hpp"
#include "cutstack/lz78.hpp"
#include "cutstack/rng.hpp"
#include "cutstack/slln.hpp"

using namespace cutstack;

namespace {

std::string fmt_secs(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

ExperimentConfig load_config(const std::string& config_path) {
    if (config_path.empty()) return ExperimentConfig{};
    return ExperimentConfig::from_json_file(config_path);
}

std::vector<int> read_bits_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_parameter_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return bits_from_string(ss.str());
}

std::vector<int> make_omega(const std::string& spec, long n, uint64_t seed) {
    std::vector<int> out;
    if (spec == "alternating") {
        for (long i = 0; i < n; ++i) out.push_back(static_cast<int>(i % 2));
    } else if (spec == "zeros") {
        out.assign(static_cast<size_t>(n), 0);
    } else if (spec == "ones") {
        out.assign(static_cast<size_t>(n), 1);
    } else if (spec == "random") {
        SplitMix64 rng(seed);
        for (long i = 0; i < n; ++i) out.push_back(rng.bit() ? 1 : 0);
    } else if (spec.rfind("file:", 0) == 0) {
        out = read_bits_file(spec.substr(5));
    } else {
        throw invalid_parameter_error("unknown omega spec: " + spec);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cutstack: exact cutting-and-stacking dynamics and randomness tests"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out";
    uint64_t seed = 1;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--seed", seed, "override config seed");
    app.add_option("--out-dir", out_dir, "output directory");

    // build
    auto* cmd_build = app.add_subcommand("build", "run the staged construction, emit per-stage CSV");
    std::string b_r = "1/64", b_sigma = "identity";
    long b_stages = 3;
    long b_cap = 1L << 22;
    cmd_build->add_option("--r", b_r, "dyadic r (e.g. 1/64)");
    cmd_build->add_option("--sigma", b_sigma, "identity | log2 | file:<path>");
    cmd_build->add_option("--stages", b_stages, "stages to run");
    cmd_build->add_option("--cap", b_cap, "find_R probe cap");

    // simulate
    auto* cmd_sim = app.add_subcommand("simulate", "iterate T exactly from a start point");
    std::string s_r = "1/64", s_sigma = "identity", s_start = "";
    long s_stage = 1, s_steps = 100;
    cmd_sim->add_option("--r", s_r, "dyadic r");
    cmd_sim->add_option("--sigma", s_sigma, "sigma spec");
    cmd_sim->add_option("--stage", s_stage, "stage gadget to simulate in");
    cmd_sim->add_option("--start", s_start, "start point as a rational p/q (default: first base)");
    cmd_sim->add_option("--steps", s_steps, "steps");

    // tests
    auto* cmd_tests = app.add_subcommand("tests", "run a test family, emit CSV");
    std::string t_family = "slln", t_param = "1/4", t_omega = "alternating";
    long t_horizon = 16;
    cmd_tests->add_option("--family", t_family, "slln | lil");
    cmd_tests->add_option("--param", t_param, "epsilon (slln) or delta (lil)");
    cmd_tests->add_option("--horizon", t_horizon, "blocks / prefix horizon");
    cmd_tests->add_option("--omega", t_omega, "zeros|ones|alternating|random|file:<path>");

    // compress
    auto* cmd_comp = app.add_subcommand("compress", "LZ78 codelengths along prefixes");
    std::string c_input = "alternating";
    long c_n = 4096, c_stride = 256;
    std::string c_coder = "lz78";
    cmd_comp->add_option("--input", c_input, "zeros|ones|alternating|random|file:<path>");
    cmd_comp->add_option("--n", c_n, "generated input length");
    cmd_comp->add_option("--stride", c_stride, "checkpoint stride");
    cmd_comp->add_option("--coder", c_coder, "coder (lz78)");

    // adversary
    auto* cmd_adv = app.add_subcommand("adversary", "build the oscillating adversary trace");

    // run-all
    auto* cmd_all = app.add_subcommand("run-all", "artifacts + acceptance summary");
    std::vector<std::string> only;
    cmd_all->add_option("--only", only, "artifact subset (build simulate tests compress adversary)");

    // acceptance
    auto* cmd_acc = app.add_subcommand("acceptance", "run acceptance criteria, print PASS/FAIL");
    std::vector<int> acc_only;
    cmd_acc->add_option("--only", acc_only, "criterion ids");

    CLI11_PARSE(app, argc, argv);

    try {
        std::filesystem::create_directories(out_dir);
        if (*cmd_build) {
            SigmaFunction sigma = SigmaFunction::parse(b_sigma);
            Rat r = Rat::from_string(b_r);
            HeightSchedule sched = derive_height_schedule(sigma, r, b_stages);
            ConstructionState st = init_construction(r, sched);
            st.find_R_cap = b_cap;
            CsvWriter csv(out_dir + "/build.csv");
            csv.row({"stage", "num_columns", "min_height", "width", "support_pi", "support_delta",
                     "defect", "R_s"});
            for (long s = 1; s <= b_stages; ++s) {
                construction_step(st);
                const StageRecord& rec = st.records.back();
                csv.row({std::to_string(rec.s), rec.pi_columns.get_str(),
                         std::to_string(rec.pi_min_height), rec.pi_width.str(),
                         rec.pi_support.str(), rec.delta_support.str(), rec.defect.str(),
                         std::to_string(rec.R)});
                std::cout << "stage " << s << ": R=" << rec.R << " defect~"
                          << rec.defect.to_double() << " pi_cols=" << rec.pi_columns.get_str()
                          << "\n";
            }
            std::cout << "wrote " << out_dir << "/build.csv\n";
        } else if (*cmd_sim) {
            SigmaFunction sigma = SigmaFunction::parse(s_sigma);
            Rat r = Rat::from_string(s_r);
            HeightSchedule sched = derive_height_schedule(sigma, r, std::max(s_stage, 1L));
            ConstructionState st = init_construction(r, sched);
            for (long s = 1; s <= s_stage; ++s) construction_step(st);
            if (!st.pi_materialized)
                throw invalid_parameter_error("stage too large to simulate pointwise");
            PartitionSpec part(r);
            const Gadget& g = st.pi;
            Rat x = s_start.empty() ? g.columns[0].base().lo + g.columns[0].width() / Rat(7)
                                    : Rat::from_string(s_start);
            CsvWriter csv(out_dir + "/simulate.csv");
            csv.row({"step", "point", "symbol", "running_average"});
            long ones = 0;
            for (long i = 0; i < s_steps; ++i) {
                int sym = part.chi(x);
                ones += sym;
                csv.row({std::to_string(i), x.str(), std::to_string(sym), Rat(ones, i + 1).str()});
                auto nxt = apply_T(g, x);
                if (!nxt) {
                    std::cout << "reached a top level after " << (i + 1) << " steps\n";
                    break;
                }
                x = *nxt;
            }
            std::cout << "wrote " << out_dir << "/simulate.csv\n";
        } else if (*cmd_tests) {
            std::vector<int> omega = make_omega(t_omega, 1 << 10, seed);
            CsvWriter csv(out_dir + "/tests.csv");
            csv.row({"k", "n", "U_size", "exact_measure", "bound", "hit_indices"});
            if (t_family == "slln") {
                SllnFamily fam({Rat::from_string(t_param)});
                PassVerdict pv = fam.passes(omega, 0, t_horizon);
                std::string hits;
                for (size_t i = 0; i < pv.hit_blocks.size(); ++i)
                    hits += (i ? "|" : "") + std::to_string(pv.hit_blocks[i]);
                for (long n = 1; n <= t_horizon && n <= 24; ++n)
                    csv.row({"0", std::to_string(n), fam.block_count(0, n).get_str(),
                             fam.block_measure(0, n).str(),
                             std::to_string(fam.block_bound(0, n).mid_double()), hits});
            } else if (t_family == "lil") {
                LilFamily fam(Rat::from_string(t_param));
                PassVerdict pv = fam.passes(omega, t_horizon);
                std::string hits;
                for (size_t i = 0; i < pv.hit_blocks.size(); ++i)
                    hits += (i ? "|" : "") + std::to_string(pv.hit_blocks[i]);
                for (long n = 1; n <= t_horizon && fam.block_boundary(n + 1) <= 22; ++n) {
                    auto block = fam.enumerate_block(n, 22);
                    csv.row({"0", std::to_string(n), std::to_string(block.size()),
                             fam.block_measure(n, 22).str(),
                             std::to_string(fam.block_bound(n).mid_double()), hits});
                }
            } else {
                throw invalid_parameter_error("unknown family: " + t_family);
            }
            std::cout << "wrote " << out_dir << "/tests.csv\n";
        } else if (*cmd_comp) {
            if (c_coder != "lz78") throw invalid_parameter_error("unknown coder: " + c_coder);
            std::vector<int> input = make_omega(c_input, c_n, seed);
            auto running = lz78_running_codelength(input);
            CsvWriter csv(out_dir + "/compress.csv");
            csv.row({"prefix_length", "codelength", "ratio", "proxy_deficiency"});
            for (long n = c_stride; n <= static_cast<long>(input.size()); n += c_stride) {
                long cl = running[static_cast<size_t>(n - 1)];
                csv.row({std::to_string(n), std::to_string(cl), Rat(cl, n).str(),
                         std::to_string(n - cl)});
            }
            std::cout << "wrote " << out_dir << "/compress.csv\n";
        } else if (*cmd_adv) {
            ExperimentConfig cfg = load_config(config_path);
            if (app.count("--seed")) cfg.seed = seed;
            cfg.out_dir = out_dir;
            AdversaryTrace tr = build_adversary(cfg, out_dir + "/violation_prefix.txt");
            OscillationReport osc = compression_oscillation(tr);
            CsvWriter csv(out_dir + "/adversary.csv");
            csv.row({"n", "phase", "frequency", "lz78_bits", "ratio", "neg_log2_width",
                     "deficiency_upper"});
            for (const auto& cp : tr.checkpoints)
                csv.row({std::to_string(cp.n), cp.even_phase ? "even" : "odd",
                         cp.frequency.str(), std::to_string(cp.lz78_bits),
                         Rat(cp.lz78_bits, cp.n).str(),
                         std::to_string(cp.neg_log2_width_hi.to_double()),
                         std::to_string(cp.deficiency_hi.to_double())});
            std::cout << "gap = " << osc.gap.to_double() << " (max_even "
                      << osc.max_even_ratio.to_double() << " @" << osc.max_even_at << ", min_odd "
                      << osc.min_odd_ratio.to_double() << " @" << osc.min_odd_at << ")\n";
            std::cout << "wrote " << out_dir << "/adversary.csv\n";
        } else if (*cmd_all) {
            ExperimentConfig cfg = load_config(config_path);
            if (app.count("--seed")) cfg.seed = seed;
            cfg.out_dir = out_dir;
            bool ok = run_all(cfg, only);
            std::cout << (ok ? "all criteria passed\n" : "some criteria failed (see summary.json)\n");
            return ok ? 0 : 1;
        } else if (*cmd_acc) {
            auto results = run_acceptance(acc_only, false);
            bool all = true;
            for (const auto& r : results) {
                std::cout << "criterion " << r.id << " [" << (r.pass ? "PASS" : "FAIL") << "] ("
                          << fmt_secs(r.seconds) << "s) " << r.name << ": " << r.detail
                          << "\n";
                all = all && r.pass;
            }
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
