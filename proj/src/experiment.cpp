#include "evciso/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "evciso/exact_matcher.hpp"

namespace evciso {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Tally {
    long count_matched = 0;
    long degree_flagged = 0;
    long evc_flagged = 0;
    long confirmed = 0;
    std::vector<std::pair<size_t, size_t>> evc_false_pairs;
    std::vector<std::pair<size_t, size_t>> soundness_violations;  // confirm_all_degree

    void merge(const Tally& other) {
        count_matched += other.count_matched;
        degree_flagged += other.degree_flagged;
        evc_flagged += other.evc_flagged;
        confirmed += other.confirmed;
        evc_false_pairs.insert(evc_false_pairs.end(), other.evc_false_pairs.begin(),
                               other.evc_false_pairs.end());
        soundness_violations.insert(soundness_violations.end(),
                                    other.soundness_violations.begin(),
                                    other.soundness_violations.end());
    }
};

// Names the graph whose EVC failed to converge; compare() itself cannot tell.
ConvergenceError locate_failure(SignatureCache& cache, size_t i, size_t j,
                                const ConvergenceError& e) {
    size_t offender = j;
    try {
        cache.full(i);
    } catch (const ConvergenceError&) {
        offender = i;
    }
    return ConvergenceError("suite graph " + std::to_string(offender) + ": " + e.what());
}

void classify_pair(SignatureCache& cache, size_t i, size_t j,
                   const ExperimentConfig& opt, Tally& tally) {
    FilterVerdict verdict;
    try {
        verdict = compare(cache, i, j, opt.sequence_tolerance);
    } catch (const ConvergenceError& e) {
        throw locate_failure(cache, i, j, e);
    }

    switch (verdict.kind) {
        case FilterVerdict::Kind::RejectedByCounts:
            return;
        case FilterVerdict::Kind::RejectedByDegreeSeq:
            ++tally.count_matched;
            return;
        case FilterVerdict::Kind::RejectedByEvcSeq:
            ++tally.count_matched;
            ++tally.degree_flagged;
            if (opt.confirm_all_degree &&
                is_isomorphic(cache.graph(i), cache.graph(j), Refinement::Degree)
                    .isomorphic)
                tally.soundness_violations.emplace_back(i, j);
            return;
        case FilterVerdict::Kind::TriviallyIsomorphic:
        case FilterVerdict::Kind::PotentiallyIsomorphic:
            break;
    }

    ++tally.count_matched;
    ++tally.degree_flagged;
    ++tally.evc_flagged;
    const MatchResult match =
        verdict.mapping
            ? is_isomorphic_within_classes(cache.graph(i), cache.graph(j),
                                           *verdict.mapping)
            : is_isomorphic(cache.graph(i), cache.graph(j), Refinement::Degree);
    if (match.isomorphic)
        ++tally.confirmed;
    else
        tally.evc_false_pairs.emplace_back(i, j);
}

void dump_pair(const SignatureCache& cache, size_t i, size_t j, double p_link,
               const std::string& dir) {
    std::filesystem::create_directories(dir);
    char stem[96];
    std::snprintf(stem, sizeof stem, "pair_p%.3f_%05zu_%05zu", p_link, i, j);
    write_graph_file(cache.graph(i),
                     (std::filesystem::path(dir) / (std::string(stem) + "_a.txt")).string());
    write_graph_file(cache.graph(j),
                     (std::filesystem::path(dir) / (std::string(stem) + "_b.txt")).string());
}

}  // namespace

SuiteReport analyze_suite(std::vector<Graph> graphs, int n, double p_link,
                          const ExperimentConfig& opt) {
    const auto start = std::chrono::steady_clock::now();
    const size_t count = graphs.size();

    SuiteReport report;
    report.n = n;
    report.p_link = p_link;
    report.suite_size = static_cast<int>(count);
    report.pairs_total =
        static_cast<long>(count) * (static_cast<long>(count) - 1) / 2;

    SignatureCache cache(std::move(graphs), opt.convergence);
    Tally total;

    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || count < 3) {
        for (size_t i = 0; i + 1 < count; ++i)
            for (size_t j = i + 1; j < count; ++j)
                classify_pair(cache, i, j, opt, total);
    } else {
        // Workers pull rows; counters are merged by summation, so the report
        // does not depend on worker count or scheduling.
        std::atomic<size_t> next_row{0};
        std::atomic<bool> failed{false};
        std::mutex merge_mutex;
        std::exception_ptr first_error;

        auto worker = [&] {
            Tally local;
            try {
                for (;;) {
                    const size_t i = next_row.fetch_add(1);
                    if (i + 1 >= count || failed.load()) break;
                    for (size_t j = i + 1; j < count; ++j)
                        classify_pair(cache, i, j, opt, local);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(merge_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                return;
            }
            std::lock_guard<std::mutex> lock(merge_mutex);
            total.merge(local);
        };

        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    if (!total.soundness_violations.empty()) {
        auto [i, j] = total.soundness_violations.front();
        if (!opt.counterexample_dir.empty())
            dump_pair(cache, i, j, p_link, opt.counterexample_dir);
        throw std::logic_error(
            "confirm-all-degree found an isomorphic pair the EVC stage rejected: "
            "graphs " +
            std::to_string(i) + " and " + std::to_string(j));
    }
    if (!opt.counterexample_dir.empty())
        for (auto [i, j] : total.evc_false_pairs)
            dump_pair(cache, i, j, p_link, opt.counterexample_dir);

    report.count_matched = total.count_matched;
    report.degree_flagged = total.degree_flagged;
    report.evc_flagged = total.evc_flagged;
    report.confirmed = total.confirmed;
    report.degree_false_positives = report.degree_flagged - report.confirmed;
    report.evc_false_positives = report.evc_flagged - report.confirmed;
    report.evc_computations = cache.evc_computations();
    if (opt.record_timing)
        report.wall_time =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
    return report;
}

SuiteReport run_suite_experiment(int n, double p_link, int suite_size,
                                 std::uint64_t suite_seed,
                                 const ExperimentConfig& opt) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report = analyze_suite(suite(n, p_link, suite_size, suite_seed), n,
                                       p_link, opt);
    if (opt.record_timing)
        report.wall_time =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
    return report;
}

ExperimentReport run_full_experiment(const ExperimentConfig& cfg) {
    if (cfg.p_list.empty()) throw std::invalid_argument("p_list must be non-empty");
    for (size_t s = 0; s < cfg.p_list.size(); ++s) {
        if (!(cfg.p_list[s] >= 0.0 && cfg.p_list[s] <= 1.0))
            throw std::invalid_argument("p_list values must be in [0, 1]");
        if (s > 0 && !(cfg.p_list[s] > cfg.p_list[s - 1]))
            throw std::invalid_argument("p_list must be strictly increasing");
    }
    ExperimentReport report;
    report.master_seed = cfg.master_seed;
    report.config = cfg;
    for (size_t s = 0; s < cfg.p_list.size(); ++s)
        report.suites.push_back(run_suite_experiment(
            cfg.n, cfg.p_list[s], cfg.suite_size,
            derive_seed(cfg.master_seed, static_cast<std::uint64_t>(s)), cfg));
    return report;
}

namespace {

ordered_json suite_to_json(const SuiteReport& s) {
    ordered_json j;
    j["n"] = s.n;
    j["p_link"] = s.p_link;
    j["suite_size"] = s.suite_size;
    j["pairs_total"] = s.pairs_total;
    j["count_matched"] = s.count_matched;
    j["degree_flagged"] = s.degree_flagged;
    j["evc_flagged"] = s.evc_flagged;
    j["confirmed"] = s.confirmed;
    j["degree_false_positives"] = s.degree_false_positives;
    j["evc_false_positives"] = s.evc_false_positives;
    j["evc_computations"] = s.evc_computations;
    j["wall_time"] = s.wall_time;
    return j;
}

SuiteReport suite_from_json(const ordered_json& j) {
    SuiteReport s;
    s.n = j.at("n").get<int>();
    s.p_link = j.at("p_link").get<double>();
    s.suite_size = j.at("suite_size").get<int>();
    s.pairs_total = j.at("pairs_total").get<long>();
    s.count_matched = j.at("count_matched").get<long>();
    s.degree_flagged = j.at("degree_flagged").get<long>();
    s.evc_flagged = j.at("evc_flagged").get<long>();
    s.confirmed = j.at("confirmed").get<long>();
    s.degree_false_positives = j.at("degree_false_positives").get<long>();
    s.evc_false_positives = j.at("evc_false_positives").get<long>();
    s.evc_computations = j.at("evc_computations").get<long>();
    s.wall_time = j.at("wall_time").get<double>();
    return s;
}

std::string render_table(const ExperimentReport& report) {
    std::ostringstream out;
    char line[256];
    out << "n=" << report.config.n << " suite_size=" << report.config.suite_size
        << " master_seed=" << report.master_seed << "\n";
    std::snprintf(line, sizeof line, "%-8s %12s %14s %15s %12s %10s %11s %8s %10s %9s\n",
                  "p_link", "pairs_total", "count_matched", "degree_flagged",
                  "evc_flagged", "confirmed", "degree_fp", "evc_fp", "evc_comps",
                  "wall_s");
    out << line;
    for (const auto& s : report.suites) {
        std::snprintf(line, sizeof line,
                      "%-8.3f %12ld %14ld %15ld %12ld %10ld %11ld %8ld %10ld %9.3f\n",
                      s.p_link, s.pairs_total, s.count_matched, s.degree_flagged,
                      s.evc_flagged, s.confirmed, s.degree_false_positives,
                      s.evc_false_positives, s.evc_computations, s.wall_time);
        out << line;
    }
    return out.str();
}

std::string render_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "n,p_link,suite_size,pairs_total,count_matched,degree_flagged,"
           "evc_flagged,confirmed,degree_false_positives,evc_false_positives,"
           "evc_computations,wall_time\n";
    for (const auto& s : report.suites) {
        ordered_json p = s.p_link;  // reuse json's shortest-round-trip doubles
        ordered_json w = s.wall_time;
        out << s.n << ',' << p.dump() << ',' << s.suite_size << ',' << s.pairs_total
            << ',' << s.count_matched << ',' << s.degree_flagged << ','
            << s.evc_flagged << ',' << s.confirmed << ',' << s.degree_false_positives
            << ',' << s.evc_false_positives << ',' << s.evc_computations << ','
            << w.dump() << '\n';
    }
    return out.str();
}

}  // namespace

std::string render_report(const ExperimentReport& report, ReportFormat format) {
    if (format == ReportFormat::Table) return render_table(report);
    if (format == ReportFormat::Csv) return render_csv(report);

    ordered_json j;
    j["master_seed"] = report.master_seed;
    ordered_json cfg;
    cfg["n"] = report.config.n;
    cfg["suite_size"] = report.config.suite_size;
    cfg["p_list"] = report.config.p_list;
    cfg["sequence_tolerance"] = report.config.sequence_tolerance;
    cfg["norm_tolerance"] = report.config.convergence.norm_tolerance;
    cfg["vector_tolerance"] = report.config.convergence.vector_tolerance;
    cfg["max_iterations"] = report.config.convergence.max_iterations;
    cfg["confirm_all_degree"] = report.config.confirm_all_degree;
    j["config"] = cfg;
    j["suites"] = ordered_json::array();
    for (const auto& s : report.suites) j["suites"].push_back(suite_to_json(s));
    return j.dump(2) + "\n";
}

ExperimentReport parse_report_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    ExperimentReport report;
    report.master_seed = j.at("master_seed").get<std::uint64_t>();
    const auto& cfg = j.at("config");
    report.config.n = cfg.at("n").get<int>();
    report.config.suite_size = cfg.at("suite_size").get<int>();
    report.config.p_list = cfg.at("p_list").get<std::vector<double>>();
    report.config.sequence_tolerance = cfg.at("sequence_tolerance").get<double>();
    report.config.convergence.norm_tolerance = cfg.at("norm_tolerance").get<double>();
    report.config.convergence.vector_tolerance =
        cfg.at("vector_tolerance").get<double>();
    report.config.convergence.max_iterations = cfg.at("max_iterations").get<int>();
    report.config.confirm_all_degree = cfg.at("confirm_all_degree").get<bool>();
    for (const auto& s : j.at("suites")) report.suites.push_back(suite_from_json(s));
    return report;
}

}  // namespace evciso
