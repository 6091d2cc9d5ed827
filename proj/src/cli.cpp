#include "pqsim/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pqsim/adversarial.hpp"
#include "pqsim/engine.hpp"
#include "pqsim/oracle.hpp"
#include "pqsim/trace_io.hpp"

namespace pqsim {

namespace {

PolicyConfig make_config(const std::string& policy, const std::string& priority, Bytes buffer,
                         std::optional<Bytes> max_size) {
    PolicyConfig config;
    config.admission = policy == "po" ? AdmissionPolicy::Po : AdmissionPolicy::Npo;
    config.discipline = priority == "lp" ? Discipline::Lp : Discipline::Srpt;
    config.capacity = buffer;
    config.max_size = max_size;
    if (config.admission == AdmissionPolicy::Po && !max_size)
        throw ConfigError("--max-size is required with --policy po");
    config.validate();
    return config;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParamError("cannot open output file: " + path);
    return out;
}

void print_summary(const SimResult& result, std::ostream& out) {
    out << "transmitted_bytes=" << result.transmitted_bytes << '\n';
    out << "transmitted_packets=" << result.transmitted_packets << '\n';
    if (auto la = result.avg_transmitted_len())
        out << "avg_transmitted_len_La=" << format_value(*la) << '\n';
    else
        out << "avg_transmitted_len_La=undefined\n";
    out << "rejected=" << result.rejected_count << '\n';
    out << "pushed_out=" << result.pushed_out_count << '\n';
}

int cmd_simulate(const std::string& trace_path, const PolicyConfig& config,
                 const std::string& csv_path, std::ostream& out) {
    Trace trace = read_trace_file(trace_path);
    SimResult result = simulate(trace, config);
    print_summary(result, out);
    if (!csv_path.empty()) {
        auto csv = open_output(csv_path);
        write_slot_csv(result, csv);
    }
    return 0;
}

int cmd_gen(const std::string& family, Bytes buffer, Bytes max_size,
            std::optional<Cycles> max_cycles, std::int64_t rounds, const std::string& out_path,
            std::ostream& out) {
    Trace trace = gen_family(family, buffer, max_size, max_cycles, rounds);
    write_trace_file(trace, out_path);
    std::size_t records = 0;
    for (const auto& s : trace.slots)
        if (!s.empty()) ++records;
    out << "wrote " << out_path << " family=" << family << " slot_records=" << records
        << " packets=" << trace.packet_count();
    if (trace.metadata) {
        if (trace.metadata->analytic_alg_bytes)
            out << " analytic_alg_bytes=" << *trace.metadata->analytic_alg_bytes;
        if (trace.metadata->analytic_opt_bytes)
            out << " analytic_opt_bytes=" << *trace.metadata->analytic_opt_bytes;
    }
    out << '\n';
    return 0;
}

int cmd_ratio(const std::string& trace_path, const PolicyConfig& config, std::uint64_t budget,
              const std::string& csv_path, std::ostream& out) {
    Trace trace = read_trace_file(trace_path);
    OracleLimits limits;
    limits.max_states = budget;
    RatioReport report = empirical_ratio(trace, config, limits);

    out << "alg_bytes=" << report.alg_bytes << '\n';
    out << "opt_bytes=" << report.opt_bytes << " source=" << to_string(report.source) << '\n';
    out << "ratio=" << format_value(report.ratio) << '\n';

    // Matching theorem bounds, with L and k taken from the run itself when
    // the flags do not pin them.
    BoundQuery query;
    query.admission = config.admission;
    query.discipline = config.discipline;
    query.buffer = config.capacity;
    query.max_size = config.max_size ? *config.max_size : trace.max_packet_size();
    query.max_cycles = trace.max_packet_cycles();
    query.avg_transmitted_len = report.avg_transmitted_len;
    if (query.max_size >= 1 && query.max_cycles >= 1) {
        for (const BoundRow& row : bounds_table(query)) {
            if (!row.is_upper || !row.in_regime || !row.value) continue;
            out << "bound " << row.name << "=" << format_value(*row.value)
                << " satisfied=" << (report.ratio <= *row.value ? "yes" : "no") << '\n';
        }
    }
    if (!csv_path.empty()) {
        auto csv = open_output(csv_path);
        csv << "alg_bytes,opt_bytes,source,ratio\n";
        csv << report.alg_bytes << ',' << report.opt_bytes << ',' << to_string(report.source)
            << ',' << to_fraction(report.ratio) << '\n';
    }
    return 0;
}

int cmd_bounds(const BoundQuery& query, const std::string& csv_path, std::ostream& out) {
    const std::vector<BoundRow> rows = bounds_table(query);
    if (rows.empty()) {
        out << "no stated bounds for " << to_string(query.admission) << "/"
            << to_string(query.discipline) << '\n';
        return 0;
    }
    for (const BoundRow& row : rows) {
        out << row.name << ' ' << (row.is_upper ? "upper" : "lower") << " regime[" << row.regime
            << "]=" << (row.in_regime ? "ok" : "violated");
        if (row.value)
            out << " value=" << format_value(*row.value);
        else if (row.in_regime && row.needs_avg_len)
            out << " value=needs-L_a";
        else
            out << " value=-";
        out << '\n';
    }
    if (!csv_path.empty()) {
        auto csv = open_output(csv_path);
        csv << "name,type,regime,in_regime,value\n";
        for (const BoundRow& row : rows) {
            csv << row.name << ',' << (row.is_upper ? "upper" : "lower") << ',' << row.regime
                << ',' << (row.in_regime ? "yes" : "no") << ','
                << (row.value ? to_fraction(*row.value) : "") << '\n';
        }
    }
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete-time simulator and bound-verification harness for "
                 "bounded-buffer packet scheduling"};
    app.name("pqsim");
    app.require_subcommand(1);

    const auto policy_check = CLI::IsMember({"npo", "po"});
    const auto priority_check = CLI::IsMember({"srpt", "lp"});

    std::string sim_trace, sim_policy, sim_priority, sim_csv;
    Bytes sim_buffer = 0;
    std::optional<Bytes> sim_max_size;
    auto* sim = app.add_subcommand("simulate", "Run a policy over a trace file");
    sim->add_option("trace", sim_trace, "trace file, or - for stdin")->required();
    sim->add_option("--policy", sim_policy, "admission policy")->required()->check(policy_check);
    sim->add_option("--priority", sim_priority, "priority discipline")
        ->required()
        ->check(priority_check);
    sim->add_option("--buffer", sim_buffer, "buffer capacity B in bytes")->required();
    sim->add_option("--max-size", sim_max_size, "max packet size L in bytes");
    sim->add_option("--csv", sim_csv, "write the per-slot log to this CSV file");

    std::string gen_family_name, gen_out;
    Bytes gen_buffer = 0, gen_max_size = 0;
    std::optional<Cycles> gen_max_cycles;
    std::int64_t gen_rounds = 0;
    auto* gen = app.add_subcommand("gen", "Emit an adversarial trace family");
    gen->add_option("--family", gen_family_name, "npo-srpt-lb | po-srpt-lb | po-lp-lb")
        ->required()
        ->check(CLI::IsMember({"npo-srpt-lb", "po-srpt-lb", "po-lp-lb"}));
    gen->add_option("--buffer", gen_buffer, "buffer capacity B in bytes")->required();
    gen->add_option("--max-size", gen_max_size, "max packet size L in bytes")->required();
    gen->add_option("--max-cycles", gen_max_cycles, "max processing cycles k");
    gen->add_option("--slots", gen_rounds, "number of arrival rounds n")->required();
    gen->add_option("--out", gen_out, "output trace file, or - for stdout")->required();

    std::string ratio_trace, ratio_policy, ratio_priority, ratio_csv;
    Bytes ratio_buffer = 0;
    std::optional<Bytes> ratio_max_size;
    std::uint64_t ratio_budget = 1'000'000;
    auto* ratio = app.add_subcommand("ratio", "Empirical competitive ratio against the optimum");
    ratio->add_option("trace", ratio_trace, "trace file, or - for stdin")->required();
    ratio->add_option("--policy", ratio_policy, "admission policy")
        ->required()
        ->check(policy_check);
    ratio->add_option("--priority", ratio_priority, "priority discipline")
        ->required()
        ->check(priority_check);
    ratio->add_option("--buffer", ratio_buffer, "buffer capacity B in bytes")->required();
    ratio->add_option("--max-size", ratio_max_size, "max packet size L in bytes");
    ratio->add_option("--oracle-budget", ratio_budget, "state budget for the exact search");
    ratio->add_option("--csv", ratio_csv, "write the ratio row to this CSV file");

    std::string bounds_policy, bounds_priority, bounds_la, bounds_csv;
    Bytes bounds_buffer = 0, bounds_max_size = 0;
    Cycles bounds_max_cycles = 0;
    auto* bounds = app.add_subcommand("bounds", "Competitive-ratio guarantees for a configuration");
    bounds->add_option("--policy", bounds_policy, "admission policy")
        ->required()
        ->check(policy_check);
    bounds->add_option("--priority", bounds_priority, "priority discipline")
        ->required()
        ->check(priority_check);
    bounds->add_option("--buffer", bounds_buffer, "buffer capacity B in bytes")->required();
    bounds->add_option("--max-size", bounds_max_size, "max packet size L in bytes")->required();
    bounds->add_option("--max-cycles", bounds_max_cycles, "max processing cycles k")->required();
    bounds->add_option("--la", bounds_la, "average transmitted packet size L_a, as p or p/q");
    bounds->add_option("--csv", bounds_csv, "write the bound rows to this CSV file");

    // CLI11 consumes argv-style input.
    std::vector<const char*> argv;
    argv.push_back("pqsim");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (sim->parsed()) {
            return cmd_simulate(sim_trace, make_config(sim_policy, sim_priority, sim_buffer,
                                                       sim_max_size),
                                sim_csv, out);
        }
        if (gen->parsed())
            return cmd_gen(gen_family_name, gen_buffer, gen_max_size, gen_max_cycles, gen_rounds,
                           gen_out, out);
        if (ratio->parsed()) {
            return cmd_ratio(ratio_trace,
                             make_config(ratio_policy, ratio_priority, ratio_buffer,
                                         ratio_max_size),
                             ratio_budget, ratio_csv, out);
        }
        if (bounds->parsed()) {
            BoundQuery query;
            query.admission = bounds_policy == "po" ? AdmissionPolicy::Po : AdmissionPolicy::Npo;
            query.discipline = bounds_priority == "lp" ? Discipline::Lp : Discipline::Srpt;
            query.buffer = bounds_buffer;
            query.max_size = bounds_max_size;
            query.max_cycles = bounds_max_cycles;
            if (!bounds_la.empty()) query.avg_transmitted_len = parse_rational(bounds_la);
            return cmd_bounds(query, bounds_csv, out);
        }
    } catch (const ConfigError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParamError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const RegimeError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const TraceParseError& e) {
        err << "trace parse error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace pqsim
