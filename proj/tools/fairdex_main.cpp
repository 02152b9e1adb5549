#include "fairdex/errors.hpp"
#include "fairdex/fairness.hpp"
#include "fairdex/generators.hpp"
#include "fairdex/model.hpp"
#include "fairdex/reductions.hpp"
#include "fairdex/serialization.hpp"
#include "fairdex/solvers.hpp"
#include "fairdex/value.hpp"
#include "fairdex/welfare.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace {

using fairdex::Allocation;
using fairdex::BudgetError;
using fairdex::InputError;
using fairdex::Instance;
using fairdex::Json;
using fairdex::Notion;
using fairdex::Value;

// Exit codes: 0 fair/exists, 1 unfair/does not exist, 2 usage or input
// error, 3 enumeration budget exceeded.
constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_input_error = 2;
constexpr int exit_budget = 3;

Json base_report(const std::string& command_line)
{
    Json report;
    report["schema"] = fairdex::report_schema;
    report["command"] = command_line;
    return report;
}

void emit(Json report, int exit_code, const std::string& output_path)
{
    report["exit_code"] = exit_code;
    if (! output_path.empty())
        fairdex::write_json_file(output_path, report);
    std::cout << report.dump(2) << "\n";
}

Notion parse_notion(const std::string& text)
{
    auto notion = fairdex::notion_from_string(text);
    if (! notion)
        throw InputError("unknown fairness notion '" + text + "' (expected ef, ef1, efx or ef2)");
    return *notion;
}

Json stats_json(const fairdex::SolveStats& stats)
{
    return Json{
        {"allocations_checked", stats.allocations_checked},
        {"guesses_explored", stats.guesses_explored},
        {"feasibility_nodes", stats.feasibility_nodes},
    };
}

std::optional<std::uint64_t> safe_pow(std::uint64_t base, int exponent)
{
    std::uint64_t result = 1;
    for (int i = 0; i < exponent; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
            return std::nullopt;
        result *= base;
    }
    return result;
}

struct CheckArgs {
    std::string instance_path;
    std::string allocation_path;
    std::string notion;
    std::string output;
};

int cmd_check(const CheckArgs& args, const std::string& command_line)
{
    const Instance inst = fairdex::load_instance_document(args.instance_path).materialize();
    const Allocation alloc = fairdex::load_allocation(args.allocation_path, inst);
    const auto verdict = check_fairness(inst, alloc, parse_notion(args.notion));

    Json report = base_report(command_line);
    report["notion"] = fairdex::to_string(verdict.notion);
    report["verdict"] = verdict.pass ? "pass" : "fail";
    report["result"] = fairdex::verdict_to_json(verdict, inst);
    const int code = verdict.pass ? exit_pass : exit_fail;
    emit(std::move(report), code, args.output);
    return code;
}

struct SolveArgs {
    std::string instance_path;
    std::string notion;
    std::string engine = "auto";
    std::uint64_t budget = fairdex::default_allocation_budget;
    std::string output;
};

int cmd_solve(const SolveArgs& args, const std::string& command_line)
{
    const Instance inst = fairdex::load_instance_document(args.instance_path).materialize();
    const Notion notion = parse_notion(args.notion);

    std::string engine = args.engine;
    if (engine == "auto") {
        if (notion == Notion::EF2) {
            engine = inst.agent_count() > inst.item_count() ? "ef2-trivial" : "brute";
        }
        else {
            const int tau = fairdex::item_types(inst).type_count();
            const auto subsets = safe_pow(2, tau);
            const auto guesses = subsets ? safe_pow(*subsets, inst.agent_count()) : std::nullopt;
            const auto allocations = fairdex::allocation_count(inst.agent_count(), inst.item_count());
            if (guesses && *guesses <= args.budget)
                engine = "bundle-type";
            else if (allocations && *allocations <= args.budget)
                engine = "brute";
            else
                throw BudgetError("both engines exceed the budget of " + std::to_string(args.budget) +
                    "; raise --budget or FAIRDEX_BUDGET");
        }
    }

    fairdex::SolveResult result;
    if (engine == "brute")
        result = fairdex::brute_force_solve(inst, notion, args.budget);
    else if (engine == "bundle-type")
        result = fairdex::bundle_type_solve(inst, notion, args.budget);
    else if (engine == "ef2-trivial")
        result = fairdex::ef2_trivial(inst);
    else
        throw InputError("unknown engine '" + engine + "' (expected auto, brute or bundle-type)");

    Json report = base_report(command_line);
    report["notion"] = fairdex::to_string(notion);
    report["engine"] = engine;
    report["decision"] = result.exists ? "exists" : "not-exists";
    if (result.witness)
        report["witness"] = fairdex::allocation_to_json(*result.witness, inst);
    report["stats"] = stats_json(result.stats);
    const int code = result.exists ? exit_pass : exit_fail;
    emit(std::move(report), code, args.output);
    return code;
}

struct GenerateArgs {
    std::string seed_file;
    std::string output;
    std::string witness_output;
    std::vector<long long> values;        // partition
    std::vector<int> certificate;         // partition subset / bisection side / clique vertices
    bool certificate_given = false;
    int agents = 0, items = 0;            // random
    std::vector<std::string> domain;      // random
    std::uint64_t seed = 0;               // random
};

Json seed_json(const GenerateArgs& args)
{
    if (args.seed_file.empty())
        return Json::object();
    return fairdex::load_json_file(args.seed_file);
}

std::vector<int> int_list(const Json& node, const char* what)
{
    if (! node.is_array())
        throw InputError(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const auto& entry : node) {
        if (! entry.is_number_integer() && ! entry.is_number_unsigned())
            throw InputError(std::string(what) + " must contain integers only");
        out.push_back(entry.get<int>());
    }
    return out;
}

void write_generated(const GenerateArgs& args, const Instance& inst, Json meta,
    const std::optional<Allocation>& witness, const std::string& command_line, int& code)
{
    if (args.output.empty())
        throw InputError("--output is required");
    Json doc = fairdex::instance_to_json(inst);
    doc["meta"] = std::move(meta);
    fairdex::write_json_file(args.output, doc);

    Json report = base_report(command_line);
    report["instance"] = args.output;
    if (witness) {
        if (args.witness_output.empty())
            throw InputError("--witness-output is required when a certificate is supplied");
        fairdex::write_json_file(args.witness_output, fairdex::allocation_to_json(*witness, inst));
        report["witness"] = args.witness_output;
    }
    report["meta"] = doc["meta"];
    code = exit_pass;
    emit(std::move(report), code, "");
}

int cmd_generate_partition(const GenerateArgs& args, const std::string& command_line)
{
    Json seed_doc = seed_json(args);
    fairdex::PartitionSeed seed;
    seed.values = args.values;
    if (seed.values.empty() && seed_doc.contains("values"))
        for (const auto& entry : seed_doc["values"])
            seed.values.push_back(entry.get<long long>());

    std::optional<std::vector<int>> certificate;
    if (args.certificate_given)
        certificate = args.certificate;
    else if (seed_doc.contains("certificate"))
        certificate = int_list(seed_doc["certificate"], "'certificate'");

    const Instance inst = fairdex::partition_to_efx_instance(seed);
    if (seed.half_count() <= 10)
        std::cerr << "note: 2n <= 20 is below the construction's hardness regime; only the"
                     " certificate-to-EFX direction is guaranteed\n";

    const auto numbers_target = inst.value(0, 0, inst.item_count() - 2);   // Mn + B
    Json meta{{"kind", "partition"}, {"half_count", seed.half_count()},
        {"target", fairdex::format_value(numbers_target)}};

    std::optional<Allocation> witness;
    if (certificate)
        witness = fairdex::partition_witness(seed, *certificate);
    int code = exit_pass;
    write_generated(args, inst, std::move(meta), witness, command_line, code);
    return code;
}

int cmd_generate_bisection(const GenerateArgs& args, const std::string& command_line)
{
    Json seed_doc = seed_json(args);
    fairdex::CubicGraphSeed seed;
    if (! seed_doc.contains("vertices") || ! seed_doc.contains("edges") || ! seed_doc.contains("cut"))
        throw InputError("bisection seeds need 'vertices', 'edges' and 'cut' fields");
    seed.vertex_count = seed_doc["vertices"].get<int>();
    seed.cut_size = seed_doc["cut"].get<int>();
    for (const auto& edge : seed_doc["edges"]) {
        auto pair = int_list(edge, "graph edge");
        if (pair.size() != 2)
            throw InputError("graph edges must be [u, v] pairs");
        seed.edges.emplace_back(pair[0], pair[1]);
    }

    std::optional<std::vector<int>> side;
    if (args.certificate_given)
        side = args.certificate;
    else if (seed_doc.contains("side"))
        side = int_list(seed_doc["side"], "'side'");

    const Instance inst = fairdex::bisection_to_efx_instance(seed);
    if (seed.cut_size <= 4)
        std::cerr << "note: cut size <= 4 is below the construction's hardness regime; only the"
                     " bisection-to-EFX direction is guaranteed\n";

    Json meta{{"kind", "bisection"},
        {"item_types", fairdex::item_types(inst).type_count()},
        {"distinct_values", fairdex::distinct_value_count(inst)}};

    std::optional<Allocation> witness;
    if (side)
        witness = fairdex::bisection_witness(seed, *side);
    int code = exit_pass;
    write_generated(args, inst, std::move(meta), witness, command_line, code);
    return code;
}

int cmd_generate_clique(const GenerateArgs& args, const std::string& command_line)
{
    Json seed_doc = seed_json(args);
    fairdex::CliqueSeed seed;
    if (! seed_doc.contains("colors") || ! seed_doc.contains("class_size") || ! seed_doc.contains("edges"))
        throw InputError("clique seeds need 'colors', 'class_size' and 'edges' fields");
    seed.colors = seed_doc["colors"].get<int>();
    seed.class_size = seed_doc["class_size"].get<int>();
    for (const auto& edge : seed_doc["edges"]) {
        auto quad = int_list(edge, "clique edge");
        if (quad.size() != 4)
            throw InputError("clique edges must be [color_a, vertex_a, color_b, vertex_b]");
        seed.edges.push_back({quad[0], quad[1], quad[2], quad[3]});
    }

    std::optional<std::vector<int>> clique;
    if (args.certificate_given)
        clique = args.certificate;
    else if (seed_doc.contains("clique"))
        clique = int_list(seed_doc["clique"], "'clique'");

    const Instance inst = fairdex::clique_to_ef_instance(seed);
    if (seed.class_size <= seed.colors * seed.colors + seed.colors)
        std::cerr << "note: class size <= k^2 + k is below the construction's hardness regime; only"
                     " the clique-to-EF direction is guaranteed\n";

    Json meta{{"kind", "clique"}, {"agents", inst.agent_count()}, {"items", inst.item_count()}};

    std::optional<Allocation> witness;
    if (clique)
        witness = fairdex::clique_witness(seed, *clique);
    int code = exit_pass;
    write_generated(args, inst, std::move(meta), witness, command_line, code);
    return code;
}

int cmd_generate_random(const GenerateArgs& args, const std::string& command_line)
{
    std::vector<Value> domain;
    for (const auto& text : args.domain)
        domain.push_back(fairdex::parse_value(text));
    const Instance inst = fairdex::random_instance(args.agents, args.items, domain, args.seed);
    Json meta{{"kind", "random"}, {"seed", args.seed}};
    int code = exit_pass;
    write_generated(args, inst, std::move(meta), std::nullopt, command_line, code);
    return code;
}

struct ReduceArgs {
    std::string input;
    std::string output;
};

int cmd_reduce(const std::string& kind, const ReduceArgs& args, const std::string& command_line)
{
    const auto doc = fairdex::load_instance_document(args.input);
    Json out;
    Json meta{{"kind", kind}};

    if (kind == "normalize") {
        const Instance inst = doc.materialize();
        Json shifts = Json::array();
        for (int i = 0; i < inst.agent_count(); ++i)
            for (int a = 0; a < inst.item_count(); ++a) {
                Value shift = inst.value(i, 0, a);
                for (int j = 1; j < inst.agent_count(); ++j)
                    shift = std::min(shift, inst.value(i, j, a));
                if (shift != 0)
                    shifts.push_back(Json::array({i, inst.item_id(a), fairdex::format_value(shift)}));
            }
        meta["shifts"] = std::move(shifts);
        out = fairdex::instance_to_json(fairdex::normalize(inst));
    }
    else if (kind == "binary") {
        const Instance inst = doc.materialize();
        Json levels = Json::array();
        for (int i = 0; i < inst.agent_count(); ++i) {
            std::optional<Value> low, high;
            for (int j = 0; j < inst.agent_count(); ++j)
                for (int a = 0; a < inst.item_count(); ++a) {
                    const Value& v = inst.value(i, j, a);
                    if (! low || v < *low)
                        low = v;
                    if (! high || v > *high)
                        high = v;
                }
            if (low)
                levels.push_back(Json::array({i, fairdex::format_value(*low), fairdex::format_value(*high)}));
        }
        meta["levels"] = std::move(levels);
        out = fairdex::instance_to_json(fairdex::two_valued_to_binary(inst));
    }
    else if (kind == "correlated") {
        if (doc.kind != fairdex::DocumentKind::Correlated)
            throw InputError("reduce correlated expects an instance document of kind 'correlated'");
        const auto& spec = *doc.correlated;
        Json taus = Json::array();
        for (int i = 0; i < spec.agent_count; ++i)
            for (int j = 0; j < spec.agent_count; ++j)
                if (i != j)
                    taus.push_back(Json::array({i, j, fairdex::format_value(spec.pair_coefficient(i, j))}));
        Json mus = Json::array();
        for (int i = 0; i < spec.agent_count; ++i)
            for (int a = 0; a < static_cast<int>(spec.items.size()); ++a)
                mus.push_back(Json::array({i, spec.items[static_cast<std::size_t>(a)],
                    fairdex::format_value(spec.item_coefficient(i, a))}));
        meta["tau"] = std::move(taus);
        meta["mu"] = std::move(mus);
        out = fairdex::plain_to_json(fairdex::correlated_to_plain(spec));
    }
    else {
        throw InputError("unknown reduction '" + kind + "'");
    }

    out["meta"] = meta;
    fairdex::write_json_file(args.output, out);

    Json report = base_report(command_line);
    report["output"] = args.output;
    report["meta"] = std::move(meta);
    emit(std::move(report), exit_pass, "");
    return exit_pass;
}

struct WelfareArgs {
    std::string instance_path;
    std::string allocation_path;
    std::string maximize;
    std::uint64_t budget = fairdex::default_allocation_budget;
    std::string output;
};

Json welfare_json(const fairdex::WelfareReport& report)
{
    Json out;
    out["utilitarian"] = fairdex::format_value(report.utilitarian);
    Json per_agent = Json::array();
    for (const Value& u : report.per_agent)
        per_agent.push_back(fairdex::format_value(u));
    out["per_agent"] = std::move(per_agent);
    if (report.nash)
        out["nash"] = fairdex::format_value(*report.nash);
    else
        out["nash"] = nullptr;
    return out;
}

int cmd_welfare(const WelfareArgs& args, const std::string& command_line)
{
    const Instance inst = fairdex::load_instance_document(args.instance_path).materialize();
    Json report = base_report(command_line);

    if (! args.maximize.empty()) {
        if (args.maximize == "utilitarian") {
            const Allocation alloc = fairdex::msw_po_greedy(inst);
            report["maximize"] = "utilitarian";
            report["witness"] = fairdex::allocation_to_json(alloc, inst);
            report["welfare"] = welfare_json(fairdex::welfare_report(inst, alloc));
        }
        else if (args.maximize == "nash") {
            const auto maximizers = fairdex::max_nash_bruteforce(inst, args.budget);
            report["maximize"] = "nash";
            report["maximizer_count"] = maximizers.size();
            if (! maximizers.empty()) {
                report["witness"] = fairdex::allocation_to_json(maximizers.front(), inst);
                report["welfare"] = welfare_json(fairdex::welfare_report(inst, maximizers.front()));
            }
        }
        else {
            throw InputError("--maximize expects 'utilitarian' or 'nash'");
        }
        emit(std::move(report), exit_pass, args.output);
        return exit_pass;
    }

    if (args.allocation_path.empty())
        throw InputError("either --allocation or --maximize is required");
    const Allocation alloc = fairdex::load_allocation(args.allocation_path, inst);
    report["welfare"] = welfare_json(fairdex::welfare_report(inst, alloc));
    emit(std::move(report), exit_pass, args.output);
    return exit_pass;
}

}

int main(int argc, char** argv)
{
    std::string command_line;
    for (int i = 0; i < argc; ++i) {
        if (i)
            command_line += ' ';
        command_line += argv[i];
    }

    CLI::App app{"fair division of indivisible items under additive externalities"};
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "check a given allocation for EF/EF1/EFX/EF2");
    check->add_option("--instance,-i", check_args.instance_path, "instance document")->required();
    check->add_option("--allocation,-a", check_args.allocation_path, "allocation document")->required();
    check->add_option("--notion,-n", check_args.notion, "fairness notion")->required();
    check->add_option("--output,-o", check_args.output, "also write the report here");

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "decide whether a fair allocation exists");
    solve->add_option("--instance,-i", solve_args.instance_path, "instance document")->required();
    solve->add_option("--notion,-n", solve_args.notion, "fairness notion")->required();
    solve->add_option("--engine,-e", solve_args.engine, "auto, brute or bundle-type");
    solve->add_option("--budget,-b", solve_args.budget, "enumeration budget")->envname("FAIRDEX_BUDGET");
    solve->add_option("--output,-o", solve_args.output, "also write the report here");

    GenerateArgs generate_args;
    auto* generate = app.add_subcommand("generate", "emit instances from reduction seeds");
    generate->require_subcommand(1);
    auto add_generate_common = [&](CLI::App* sub, bool with_seed_file) {
        if (with_seed_file)
            sub->add_option("--seed-file", generate_args.seed_file, "JSON seed document");
        sub->add_option("--output,-o", generate_args.output, "instance document to write")->required();
        sub->add_option("--witness-output,-w", generate_args.witness_output, "witness allocation to write");
    };
    auto* gen_partition = generate->add_subcommand("partition", "equal-cardinality-partition construction");
    add_generate_common(gen_partition, true);
    gen_partition->add_option("--values", generate_args.values, "the 2n integers")->delimiter(',');
    gen_partition->add_option("--certificate", generate_args.certificate, "0-based indices of an equal-sum half")
        ->delimiter(',');
    auto* gen_bisection = generate->add_subcommand("bisection", "min-bisection construction on a cubic graph");
    add_generate_common(gen_bisection, true);
    gen_bisection->add_option("--side", generate_args.certificate, "vertices of one bisection side")
        ->delimiter(',');
    auto* gen_clique = generate->add_subcommand("clique", "multicolored-clique construction");
    add_generate_common(gen_clique, true);
    gen_clique->add_option("--clique", generate_args.certificate, "chosen vertex index per color")
        ->delimiter(',');
    auto* gen_random = generate->add_subcommand("random", "seeded random instance");
    add_generate_common(gen_random, false);
    gen_random->add_option("--agents", generate_args.agents, "agent count")->required();
    gen_random->add_option("--items", generate_args.items, "item count")->required();
    gen_random->add_option("--domain", generate_args.domain, "value domain")->required()->delimiter(',');
    gen_random->add_option("--seed", generate_args.seed, "RNG seed");

    ReduceArgs reduce_args;
    auto* reduce = app.add_subcommand("reduce", "equivalence-preserving transformations");
    reduce->require_subcommand(1);
    std::vector<CLI::App*> reduce_subs;
    for (const char* kind : {"normalize", "binary", "correlated"}) {
        auto* sub = reduce->add_subcommand(kind);
        sub->add_option("--input,-i", reduce_args.input, "instance document")->required();
        sub->add_option("--output,-o", reduce_args.output, "transformed document to write")->required();
        reduce_subs.push_back(sub);
    }

    WelfareArgs welfare_args;
    auto* welfare = app.add_subcommand("welfare", "utilitarian and Nash welfare");
    welfare->add_option("--instance,-i", welfare_args.instance_path, "instance document")->required();
    welfare->add_option("--allocation,-a", welfare_args.allocation_path, "allocation document");
    welfare->add_option("--maximize,-m", welfare_args.maximize, "utilitarian or nash");
    welfare->add_option("--budget,-b", welfare_args.budget, "enumeration budget")->envname("FAIRDEX_BUDGET");
    welfare->add_option("--output,-o", welfare_args.output, "also write the report here");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return exit_input_error;
    }

    generate_args.certificate_given = gen_partition->count("--certificate") > 0 ||
        gen_bisection->count("--side") > 0 || gen_clique->count("--clique") > 0;

    try {
        if (check->parsed())
            return cmd_check(check_args, command_line);
        if (solve->parsed())
            return cmd_solve(solve_args, command_line);
        if (generate->parsed()) {
            if (gen_partition->parsed())
                return cmd_generate_partition(generate_args, command_line);
            if (gen_bisection->parsed())
                return cmd_generate_bisection(generate_args, command_line);
            if (gen_clique->parsed())
                return cmd_generate_clique(generate_args, command_line);
            if (gen_random->parsed())
                return cmd_generate_random(generate_args, command_line);
        }
        if (reduce->parsed()) {
            for (std::size_t k = 0; k < reduce_subs.size(); ++k)
                if (reduce_subs[k]->parsed())
                    return cmd_reduce(std::array{"normalize", "binary", "correlated"}[k], reduce_args,
                        command_line);
        }
        if (welfare->parsed())
            return cmd_welfare(welfare_args, command_line);
        return exit_input_error;
    }
    catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_budget;
    }
    catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}
