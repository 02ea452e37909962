// polar: combinatorics of polarizations of powers of the maximal ideal.
//
// One subcommand per task; every command prints a single JSON report to
// stdout (progress goes to stderr) and exits 0 on success, 1 on bad
// input, 2 when two independent oracles disagree.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "polar/betti.hpp"
#include "polar/cellres.hpp"
#include "polar/duality.hpp"
#include "polar/graphs.hpp"
#include "polar/hilbert.hpp"
#include "polar/json_io.hpp"
#include "polar/partitions.hpp"
#include "polar/trees.hpp"
#include "polar/trianglegrid.hpp"

using nlohmann::json;
using namespace polar;

namespace {

constexpr int kExitOracleDisagreement = 2;

json loadJson(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void emitFile(const std::optional<std::string>& path, const json& payload) {
    if (!path) return;
    std::ofstream out(*path);
    if (!out) throw std::invalid_argument("cannot write " + *path);
    out << payload.dump(2) << "\n";
}

json numeratorJson(const HilbertNumerator& num) {
    return json{{"coefficients", num.coeffs}, {"pretty", num.str()}};
}

std::vector<std::pair<int, int>> parseEdges(const std::string& spec) {
    std::vector<std::pair<int, int>> edges;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("edge must look like 1-2: " + item);
        edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    }
    return edges;
}

TriangleChoice parseChoices(int d, const std::string& spec) {
    TriangleChoice choice;
    choice.d = d;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "x" || item == "X")
            choice.choices.push_back(TriangleType::X);
        else if (item == "y" || item == "Y")
            choice.choices.push_back(TriangleType::Y);
        else if (item == "z" || item == "Z")
            choice.choices.push_back(TriangleType::Z);
        else
            throw std::invalid_argument("choice must be one of x,y,z: " + item);
    }
    if (!choice.valid())
        throw std::invalid_argument("need " + std::to_string((d - 1) * d / 2) + " choices for d=" +
                                    std::to_string(d));
    return choice;
}

MonomialIdeal powerIdeal(int n, int d) {  // (x_1..x_n)^d
    std::vector<SplitMonomial> gens;
    std::vector<int> exp(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n - 1) {
            exp[static_cast<size_t>(i)] = left;
            std::vector<std::pair<VarRef, int>> e;
            for (int b = 0; b < n; ++b)
                if (exp[static_cast<size_t>(b)]) e.emplace_back(VarRef{b + 1, 1}, exp[static_cast<size_t>(b)]);
            gens.emplace_back(std::move(e));
            return;
        }
        for (int take = left; take >= 0; --take) {
            exp[static_cast<size_t>(i)] = take;
            self(self, i + 1, left - take);
        }
    };
    rec(rec, 0, d);
    return minimalize(n, std::move(gens));
}

json bettiJson(const BettiTable& table) {
    json entries = json::object();
    for (const auto& [key, rank] : table.entries)
        entries[std::to_string(key.first) + ":" + key.second.str()] = rank;
    return json{{"entries", std::move(entries)}, {"totals", table.totals()}};
}

// shared by `sweep duality` and the acceptance criteria: criterion,
// Hilbert oracle, and the duality theorem on one family
struct FamilyAudit {
    bool criterion = false;
    bool oracle = false;
    bool dualityOk = true;  // only meaningful when criterion holds
};

FamilyAudit auditFamily(const PartitionFamily& family, const MonomialIdeal& target,
                        const HilbertNumerator& targetNum, const MonomialIdeal& dualTarget) {
    FamilyAudit audit;
    audit.criterion = satisfies_criterion(family).ok;
    MonomialIdeal pol = partition_to_ideal(family);
    audit.oracle = is_polarization(pol, target, targetNum).ok;
    if (audit.criterion) {
        MonomialIdeal viaIdeal = alexander_dual(pol);
        MonomialIdeal viaPartition = partition_to_ideal(dual_partition(family));
        viaIdeal.n = dualTarget.n;
        viaPartition.n = dualTarget.n;
        audit.dualityOk = canonical_form(viaIdeal) == canonical_form(viaPartition);
    }
    return audit;
}

int runDual(const std::string& input, bool partitionMode, const std::optional<std::string>& emit,
            json& report) {
    if (partitionMode) {
        PartitionFamily family = partition_from_json(loadJson(input));
        PartitionFamily dual = dual_partition(family);
        report["dual"] = partition_to_json(dual);
        emitFile(emit, partition_to_json(dual));
    } else {
        MonomialIdeal ideal = ideal_from_json(loadJson(input));
        MonomialIdeal dual = alexander_dual(ideal);
        report["dual"] = ideal_to_json(dual);
        emitFile(emit, ideal_to_json(dual));
    }
    report["ok"] = true;
    return 0;
}

int runCheckPolarization(const std::string& candPath, const std::string& targetPath, json& report) {
    MonomialIdeal candidate = ideal_from_json(loadJson(candPath));
    MonomialIdeal target = ideal_from_json(loadJson(targetPath));
    PolarizationCheck check = is_polarization(candidate, target);
    report["ok"] = check.ok;
    report["reason"] = check.reason;
    report["numerator_candidate"] = numeratorJson(check.candidate);
    report["numerator_target"] = numeratorJson(check.target);
    return check.ok ? 0 : 1;
}

int runCheckPartition(const std::string& input, bool verify, json& report) {
    PartitionFamily family = partition_from_json(loadJson(input));
    CriterionResult crit = satisfies_criterion(family);
    report["criterion"] = crit.ok;
    if (!crit.ok) {
        report["witness"] = json{{"i", crit.i}, {"sigma", crit.sigma}, {"tau", crit.tau}};
    }
    report["ok"] = crit.ok;
    if (verify) {
        MonomialIdeal target = squarefree_power_ideal(family.n, family.d);
        PolarizationCheck oracle = is_polarization(partition_to_ideal(family), target);
        report["oracle"] = oracle.ok;
        if (oracle.ok != crit.ok) {
            report["ok"] = false;
            report["disagreement"] = json{{"criterion", crit.ok}, {"oracle", oracle.ok},
                                          {"reason", oracle.reason}};
            return kExitOracleDisagreement;
        }
    }
    return report["ok"].get<bool>() ? 0 : 1;
}

int runEnumerate(int n, int d, bool maximalOnly, const std::optional<std::string>& emit,
                 json& report) {
    long long total = 0, pass = 0, maximal = 0;
    json families = json::array();
    for_each_partition_family(n, d, [&](const PartitionFamily& family) {
        ++total;
        if (!satisfies_criterion(family).ok) return;
        ++pass;
        bool isMax = is_maximal(family);
        if (isMax) ++maximal;
        if (!maximalOnly || isMax) families.push_back(partition_to_json(family));
    });
    report["families_total"] = total;
    report["criterion_pass"] = pass;
    report["maximal"] = maximal;
    report["families"] = families;
    report["ok"] = true;
    emitFile(emit, families);
    return 0;
}

int runTree(int n, const std::string& edgeSpec, bool dual, const std::optional<std::string>& emit,
            json& report) {
    LabeledTree tree{n, parseEdges(edgeSpec)};
    if (!is_valid_tree(tree)) throw std::invalid_argument("edges do not form a spanning tree");
    MonomialIdeal ideal = dual ? tree_dual(tree) : tree_polarization(tree);
    report["ideal"] = ideal_to_json(ideal);
    report["ok"] = true;
    emitFile(emit, ideal_to_json(ideal));
    return 0;
}

int runGraphSplits(const std::string& input, int at, json& report) {
    SimpleGraph graph = graph_from_json(loadJson(input));
    json splits = json::array();
    for (const auto& [a, b] : valid_splits(graph, at))
        splits.push_back(json{{"a", a}, {"b", b}});
    report["splits"] = std::move(splits);
    report["ok"] = true;
    return 0;
}

int runGraphSplit(const std::string& input, int at, const std::string& partsSpec,
                  const std::optional<std::string>& emit, json& report) {
    SimpleGraph graph = graph_from_json(loadJson(input));
    auto bar = partsSpec.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("--parts must look like 2|3,4");
    auto parseList = [](const std::string& s) {
        std::vector<int> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
        return out;
    };
    std::pair<std::vector<int>, std::vector<int>> split{parseList(partsSpec.substr(0, bar)),
                                                        parseList(partsSpec.substr(bar + 1))};
    SimpleGraph result = split_vertex(graph, at, split);
    report["graph"] = graph_to_json(result);
    report["edge_ideal"] = ideal_to_json(edge_ideal(result));
    report["ok"] = true;
    emitFile(emit, graph_to_json(result));
    return 0;
}

int runTriangle(int d, const std::string& choiceSpec, bool verify,
                const std::optional<std::string>& emitSvg, const std::optional<std::string>& emit,
                json& report) {
    TriangleChoice choice = parseChoices(d, choiceSpec);
    MonomialIdeal ideal = construct_polarization(choice);
    LabeledCellComplex delta = build_delta_complex(choice);
    report["ideal"] = ideal_to_json(ideal);
    report["face_counts"] = face_counts(delta);
    report["complex"] = complex_to_json(delta);
    report["ok"] = true;
    emitFile(emit, ideal_to_json(ideal));
    if (emitSvg) {
        std::ofstream out(*emitSvg);
        if (!out) throw std::invalid_argument("cannot write " + *emitSvg);
        out << render_svg(choice);
    }
    if (verify) {
        MonomialIdeal target = powerIdeal(3, d);
        PolarizationCheck pol = is_polarization(ideal, target);
        ResolutionCheck res = supports_resolution(delta, ideal);
        bool minimal = is_minimal(delta);
        auto counts = face_counts(delta);
        auto betti = betti_table(target).totals();
        bool bettiMatch = counts.size() == betti.size();
        for (size_t i = 0; bettiMatch && i < counts.size(); ++i)
            bettiMatch = counts[i] == betti[i];
        report["verify"] = json{{"is_polarization", pol.ok},
                                {"supports_resolution", res.ok},
                                {"is_minimal", minimal},
                                {"betti_totals", betti},
                                {"betti_match", bettiMatch}};
        if (!(pol.ok && res.ok && minimal && bettiMatch)) {
            report["ok"] = false;
            return kExitOracleDisagreement;
        }
    }
    return 0;
}

int runBetti(const std::string& input, json& report) {
    MonomialIdeal ideal = ideal_from_json(loadJson(input));
    report["betti"] = bettiJson(betti_table(ideal));
    report["ok"] = true;
    return 0;
}

int runHilbert(const std::string& input, json& report) {
    MonomialIdeal ideal = ideal_from_json(loadJson(input));
    report["numerator"] = numeratorJson(hilbert_numerator(ideal));
    report["ok"] = true;
    return 0;
}

int runCertify(const std::string& complexPath, const std::string& idealPath, json& report) {
    LabeledCellComplex complex = complex_from_json(loadJson(complexPath));
    MonomialIdeal ideal = ideal_from_json(loadJson(idealPath));
    ResolutionCheck check = supports_resolution(complex, ideal);
    report["supports_resolution"] = check.ok;
    if (!check.error.empty()) report["error"] = check.error;
    if (check.offendingDegree) report["offending_degree"] = monomial_to_json(*check.offendingDegree);
    report["is_minimal"] = is_minimal(complex);
    report["face_counts"] = face_counts(complex);
    report["ok"] = check.ok;
    return check.ok ? 0 : 1;
}

int runSweepDuality(int n, int d, long long sample, uint64_t seed, json& report) {
    MonomialIdeal target = squarefree_power_ideal(n, d);
    HilbertNumerator targetNum = hilbert_numerator(target);
    MonomialIdeal dualTarget = squarefree_power_ideal(n, n - d + 1);

    long long checked = 0, pass = 0, dualityOk = 0, disagreements = 0;
    json witnesses = json::array();
    auto visit = [&](const PartitionFamily& family) {
        ++checked;
        FamilyAudit audit = auditFamily(family, target, targetNum, dualTarget);
        if (audit.criterion != audit.oracle) {
            ++disagreements;
            if (witnesses.size() < 5)
                witnesses.push_back(json{{"family", partition_to_json(family)},
                                         {"criterion", audit.criterion},
                                         {"oracle", audit.oracle}});
        }
        if (audit.criterion) {
            ++pass;
            if (audit.dualityOk)
                ++dualityOk;
            else if (witnesses.size() < 5)
                witnesses.push_back(json{{"family", partition_to_json(family)},
                                         {"duality_ok", false}});
        }
        if (checked % 50000 == 0) std::cerr << "checked " << checked << " families\n";
    };
    if (sample > 0)
        for_random_partition_families(n, d, sample, seed, visit);
    else
        for_each_partition_family(n, d, visit);

    report["families_checked"] = checked;
    report["criterion_pass"] = pass;
    report["duality_ok"] = dualityOk;
    report["disagreements"] = disagreements;
    if (!witnesses.empty()) report["witnesses"] = witnesses;
    report["ok"] = disagreements == 0 && dualityOk == pass;
    return report["ok"].get<bool>() ? 0 : kExitOracleDisagreement;
}

int runSweepTriangle(int d, json& report) {
    MonomialIdeal target = powerIdeal(3, d);
    HilbertNumerator targetNum = hilbert_numerator(target);
    auto bettiTotals = betti_table(target).totals();

    int k = (d - 1) * d / 2;
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= 3;
    long long ok = 0, failures = 0;
    json witnesses = json::array();
    for (long long code = 0; code < total; ++code) {
        TriangleChoice choice;
        choice.d = d;
        long long rest = code;
        for (int i = 0; i < k; ++i) {
            choice.choices.push_back(static_cast<TriangleType>(rest % 3));
            rest /= 3;
        }
        MonomialIdeal ideal = construct_polarization(choice);
        LabeledCellComplex delta = build_delta_complex(choice);
        auto counts = face_counts(delta);
        bool countsOk = counts.size() == bettiTotals.size();
        for (size_t i = 0; countsOk && i < counts.size(); ++i)
            countsOk = counts[i] == bettiTotals[i];
        bool good = is_polarization(ideal, target, targetNum).ok &&
                    supports_resolution(delta, ideal).ok && is_minimal(delta) && countsOk;
        if (good)
            ++ok;
        else {
            ++failures;
            if (witnesses.size() < 5) witnesses.push_back(json{{"choice", code}});
        }
        if ((code + 1) % 100 == 0) std::cerr << "checked " << (code + 1) << " choices\n";
    }
    report["choices_checked"] = total;
    report["certified"] = ok;
    report["failures"] = failures;
    if (!witnesses.empty()) report["witnesses"] = witnesses;
    report["ok"] = failures == 0;
    return failures == 0 ? 0 : kExitOracleDisagreement;
}

int runSweepTrees(int n, json& report) {
    MonomialIdeal target = squarefree_power_ideal(n, n - 1);
    HilbertNumerator targetNum = hilbert_numerator(target);
    long long checked = 0, failures = 0;
    json witnesses = json::array();
    for (const auto& tree : enumerate_spanning_trees(n)) {
        ++checked;
        MonomialIdeal pol = tree_polarization(tree);
        MonomialIdeal dual = tree_dual(tree);
        bool good = is_polarization(pol, target, targetNum).ok &&
                    alexander_dual(pol) == dual &&
                    linear_relation_graph(pol).connected;
        if (!good) {
            ++failures;
            if (witnesses.size() < 5) witnesses.push_back(tree_to_json(tree));
        }
    }
    report["trees_checked"] = checked;
    report["failures"] = failures;
    if (!witnesses.empty()) report["witnesses"] = witnesses;
    report["ok"] = failures == 0;
    return failures == 0 ? 0 : kExitOracleDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorics of polarizations of powers of the maximal ideal"};
    app.require_subcommand(1);

    std::string input, candidate, target, edgeSpec, choiceSpec, partsSpec, complexPath, idealPath;
    std::string sweepKind;
    std::optional<std::string> emit, emitSvg;
    int n = 0, d = 0, at = 0;
    long long sample = 0;
    uint64_t seed = 0;
    bool partitionMode = false, verify = false, dualTree = false, maximalOnly = false;

    auto* dual = app.add_subcommand("dual", "Alexander dual of an ideal or partition family");
    dual->add_option("--input", input)->required();
    dual->add_flag("--partition", partitionMode, "input is a partition family");
    dual->add_option("--emit", emit);

    auto* check = app.add_subcommand("check", "validate a polarization or partition family");
    check->require_subcommand(1);
    auto* checkPol = check->add_subcommand("polarization");
    checkPol->add_option("--candidate", candidate)->required();
    checkPol->add_option("--target", target)->required();
    auto* checkPart = check->add_subcommand("partition");
    checkPart->add_option("--input", input)->required();
    checkPart->add_flag("--verify", verify, "also run the Hilbert oracle and compare");

    auto* enumerate = app.add_subcommand("enumerate", "sweep partition families");
    enumerate->require_subcommand(1);
    auto* enumPart = enumerate->add_subcommand("partitions");
    enumPart->add_option("--n", n)->required();
    enumPart->add_option("--d", d)->required();
    enumPart->add_flag("--maximal-only", maximalOnly);
    enumPart->add_option("--emit", emit);

    auto* tree = app.add_subcommand("tree", "polarization from a labeled spanning tree");
    tree->add_option("--n", n)->required();
    tree->add_option("--edges", edgeSpec, "e.g. 1-2,2-3")->required();
    tree->add_flag("--dual", dualTree);
    tree->add_option("--emit", emit);

    auto* graph = app.add_subcommand("graph", "vertex splits of edge ideals");
    graph->require_subcommand(1);
    auto* graphSplits = graph->add_subcommand("splits");
    graphSplits->add_option("--input", input)->required();
    graphSplits->add_option("--at", at)->required();
    auto* graphSplit = graph->add_subcommand("split");
    graphSplit->add_option("--input", input)->required();
    graphSplit->add_option("--at", at)->required();
    graphSplit->add_option("--parts", partsSpec, "e.g. 2|3,4")->required();
    graphSplit->add_option("--emit", emit);

    auto* triangle = app.add_subcommand("triangle", "grid polarization from down-triangle choices");
    triangle->add_option("--d", d)->required();
    triangle->add_option("--choices", choiceSpec, "e.g. x,y,z per down triangle")->required();
    triangle->add_flag("--verify", verify);
    triangle->add_option("--emit-svg", emitSvg);
    triangle->add_option("--emit", emit);

    auto* betti = app.add_subcommand("betti", "multigraded Betti numbers");
    betti->add_option("--input", input)->required();

    auto* hilbert = app.add_subcommand("hilbert", "coarse Hilbert numerator");
    hilbert->add_option("--input", input)->required();

    auto* certify = app.add_subcommand("certify", "cellular resolution certificate");
    certify->add_option("--complex", complexPath)->required();
    certify->add_option("--ideal", idealPath)->required();

    auto* sweep = app.add_subcommand("sweep", "exhaustive or sampled oracle sweeps");
    sweep->add_option("kind", sweepKind, "duality | triangle | trees")->required();
    sweep->add_option("--n", n);
    sweep->add_option("--d", d);
    sweep->add_option("--sample", sample, "sample this many families instead of all");
    sweep->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    json report;
    report["command"] = app.get_subcommands().front()->get_name();
    auto started = std::chrono::steady_clock::now();
    int code = 0;
    try {
        if (dual->parsed()) code = runDual(input, partitionMode, emit, report);
        if (check->parsed()) {
            if (checkPol->parsed()) code = runCheckPolarization(candidate, target, report);
            if (checkPart->parsed()) code = runCheckPartition(input, verify, report);
        }
        if (enumerate->parsed()) code = runEnumerate(n, d, maximalOnly, emit, report);
        if (tree->parsed()) code = runTree(n, edgeSpec, dualTree, emit, report);
        if (graph->parsed()) {
            if (graphSplits->parsed()) code = runGraphSplits(input, at, report);
            if (graphSplit->parsed()) code = runGraphSplit(input, at, partsSpec, emit, report);
        }
        if (triangle->parsed()) code = runTriangle(d, choiceSpec, verify, emitSvg, emit, report);
        if (betti->parsed()) code = runBetti(input, report);
        if (hilbert->parsed()) code = runHilbert(input, report);
        if (certify->parsed()) code = runCertify(complexPath, idealPath, report);
        if (sweep->parsed()) {
            if (sweepKind == "duality")
                code = runSweepDuality(n, d, sample, seed, report);
            else if (sweepKind == "triangle")
                code = runSweepTriangle(d, report);
            else if (sweepKind == "trees")
                code = runSweepTrees(n, report);
            else
                throw std::invalid_argument("unknown sweep kind: " + sweepKind);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    report["elapsed_ms"] = elapsed.count();
    std::cout << report.dump(2) << std::endl;
    return code;
}
