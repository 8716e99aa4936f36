#include "cli_app.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "proglab/crt.hpp"
#include "proglab/density.hpp"
#include "proglab/families.hpp"
#include "proglab/greedy.hpp"
#include "proglab/intervals.hpp"
#include "proglab/numtheory.hpp"

namespace proglab::cli {

namespace {

using nlohmann::json;

// json objects keep keys sorted, so dumped records are diffable and two
// identical invocations emit identical bytes.
struct Record {
    std::string command;
    json params = json::object();
    json provenance = json::object();
    json result;
};

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
                    out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

void emit(const Record& rec, const std::string& format, std::ostream& out) {
    json record;
    record["command"] = rec.command;
    record["params"] = rec.params;
    record["provenance"] = rec.provenance;
    record["result"] = rec.result;
    if (format == "json") {
        out << record.dump() << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(record, "", rows);
    if (format == "csv") {
        out << "field,value\n";
        for (const auto& [k, v] : rows) out << k << "," << v << "\n";
    } else {
        for (const auto& [k, v] : rows) out << k << " = " << v << "\n";
    }
}

// Re-throws core-library errors with the offending flag in front, so every
// diagnostic names the flag it came from.
template <typename Fn>
auto with_flag(const char* flag, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const std::domain_error& e) {
        throw std::domain_error(std::string(flag) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(flag) + ": " + e.what());
    }
}

std::uint64_t parse_u64(const std::string& text, const std::string& flag) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(flag + ": expected a nonnegative integer, got '" +
                                    text + "'");
    try {
        return std::stoull(text);
    } catch (const std::exception&) {
        throw std::invalid_argument(flag + ": value out of range: '" + text + "'");
    }
}

// "N" or "A..B" (inclusive).
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text,
                                                    const std::string& flag) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        std::uint64_t n = parse_u64(text, flag);
        return {n, n};
    }
    std::uint64_t a = parse_u64(text.substr(0, dots), flag);
    std::uint64_t b = parse_u64(text.substr(dots + 2), flag);
    if (b < a) throw std::invalid_argument(flag + ": empty range '" + text + "'");
    if (b - a > 10'000'000)
        throw std::domain_error(flag + ": range wider than 10^7");
    return {a, b};
}

Progression parse_family(const std::string& name) {
    if (name == "arith") return Progression::Translation;
    if (name == "geom") return Progression::Dilation;
    if (name == "exp") return Progression::Exponentiation;
    throw std::invalid_argument("--family: unknown family '" + name + "'");
}

json rational_json(const Rational& r) { return r.str(); }

json witness_json(const CrtWitness& w) {
    json congruences = json::array();
    for (const auto& c : w.system) {
        json entry;
        entry["residue"] = c.residue.get_str();
        entry["modulus"] = c.modulus.get_str();
        congruences.push_back(entry);
    }
    json result;
    result["a"] = w.a.get_str();
    result["length"] = w.length;
    result["level"] = w.level;
    result["excluded_exponent"] = w.excluded_exponent;
    result["moduli_product"] = w.moduli_product.get_str();
    result["congruences"] = congruences;
    result["verified"] = verify_witness(w);
    return result;
}

void run_generate(const std::string& family_name, std::uint64_t limit,
                  bool verify, const std::string& format, std::ostream& out) {
    Progression family = parse_family(family_name);
    GreedySet set = with_flag("--limit", [&] { return greedy_set(family, limit); });

    Record rec;
    rec.command = "generate";
    rec.params["family"] = family_name;
    rec.params["limit"] = limit;
    rec.result["start"] = progression_start(family);
    rec.result["limit"] = limit;
    rec.result["count"] = set.members.size();
    rec.result["members"] = set.members;
    if (verify) {
        auto progression = verify_free(set.members, family);
        rec.result["free"] = !progression.has_value();
        auto counterexample = verify_maximal(set);
        rec.result["maximal"] = !counterexample.has_value();
    }
    emit(rec, format, out);
}

void run_member(const std::string& set_id, const std::string& n_text,
                const std::string& format, std::ostream& out) {
    SetFamily family =
        with_flag("--set", [&] { return SetFamily::parse(set_id); });
    auto [lo, hi] = parse_range(n_text, "--n");

    Record rec;
    rec.command = "member";
    rec.params["set"] = set_id;
    rec.params["n"] = n_text;
    if (lo == hi) {
        rec.result = with_flag("--n", [&] { return member(family, lo); });
    } else {
        json items = json::array();
        for (std::uint64_t n = lo; n <= hi; ++n) {
            json item;
            item["n"] = n;
            item["member"] = with_flag("--n", [&] { return member(family, n); });
            items.push_back(item);
        }
        rec.result = items;
    }
    emit(rec, format, out);
}

void run_density_empirical(const std::string& set_id, std::uint64_t n_max,
                           std::optional<std::uint64_t> window,
                           const std::string& format, std::ostream& out,
                           std::ostream& err) {
    SetFamily family =
        with_flag("--set", [&] { return SetFamily::parse(set_id); });
    // progress goes to the diagnostic stream; stdout stays parseable
    if (n_max >= 10'000'000)
        err << "# scanning " << set_id << " over 1.." << n_max << "\n";
    DensityReport report = with_flag("--max", [&] {
        return density_report(set_id, family_predicate(family), n_max);
    });

    Record rec;
    rec.command = "density empirical";
    rec.params["set"] = set_id;
    rec.params["max"] = n_max;
    rec.result["set"] = report.set;
    rec.result["count"] = report.count;
    rec.result["asymptotic_estimate"] = report.asymptotic_estimate;
    if (report.exponential_estimate)
        rec.result["exponential_estimate"] = *report.exponential_estimate;
    else
        rec.result["exponential_estimate"] = nullptr;
    if (window) {
        rec.params["window"] = *window;
        WindowScanResult scan = with_flag("--window", [&] {
            return uniform_scan(family_predicate(family), *window, n_max);
        });
        json w;
        w["window"] = scan.window;
        w["range_max"] = scan.range_max;
        w["min_count"] = scan.min_count;
        w["max_count"] = scan.max_count;
        w["argmin_start"] = scan.argmin_start;
        w["argmax_start"] = scan.argmax_start;
        rec.result["window_scan"] = w;
    }
    emit(rec, format, out);
}

void run_density_analytic(const std::string& set_id, double eps,
                          const std::string& format, std::ostream& out) {
    Record rec;
    rec.command = "density analytic";
    rec.params["set"] = set_id;
    rec.params["eps"] = eps;

    auto emit_product = [&](const AnalyticDensity& d) {
        rec.provenance["eps"] = d.eps;
        rec.provenance["route"] = d.route;
        rec.provenance["factor_count"] = d.factor_count;
        rec.provenance["tail_bound"] = d.tail_bound;
        if (d.prime_bound > 0) rec.provenance["prime_bound"] = d.prime_bound;
        rec.result = d.value;
    };

    if (set_id == "g3") {
        emit_product(analytic_density_g3_info(eps));
    } else if (set_id.rfind("s:", 0) == 0) {
        SetFamily family = SetFamily::parse(set_id);
        emit_product(analytic_density_s_info(family.level, eps));
    } else if (set_id.rfind("t:", 0) == 0) {
        auto i = parse_u64(set_id.substr(2), "--set t:<i>");
        rec.provenance["route"] = "finite-product";
        rec.provenance["i"] = i;
        rec.result = t_i_density(static_cast<std::uint32_t>(i));
    } else if (set_id.rfind("r:", 0) == 0) {
        auto i = parse_u64(set_id.substr(2), "--set r:<i>");
        rec.provenance["route"] = "finite-product";
        rec.provenance["i"] = i;
        rec.result = r_i_density(static_cast<std::uint32_t>(i));
    } else if (set_id.rfind("kfree:", 0) == 0) {
        auto k = parse_u64(set_id.substr(6), "--set kfree:<k>");
        rec.provenance["route"] = "zeta";
        rec.provenance["eps"] = eps;
        rec.result = kfree_density(static_cast<std::uint32_t>(k), eps);
    } else if (set_id.rfind("bm:", 0) == 0) {
        auto m = parse_u64(set_id.substr(3), "--set bm:<m>");
        rec.provenance["route"] = "zeta";
        rec.provenance["eps"] = eps;
        rec.result = b_m_density(static_cast<std::uint32_t>(m), eps);
    } else if (set_id == "a3" || set_id == "e3" || set_id == "s:1") {
        throw std::domain_error(
            "--set: no truncated analytic density for '" + set_id +
            "' (supported: g3, s:2..s:4, t:<i>, r:<i>, kfree:<k>, bm:<m>)");
    } else {
        throw std::invalid_argument("--set: unknown set '" + set_id + "'");
    }
    emit(rec, format, out);
}

void run_density_exponential(const std::string& set_id, std::uint64_t n_max,
                             const std::string& format, std::ostream& out) {
    if (set_id != "e3-excluded")
        throw std::invalid_argument(
            "--set: exponential density is provided for 'e3-excluded' only");
    std::uint64_t count =
        with_flag("--max", [&] { return excluded_e3_count(n_max); });

    Record rec;
    rec.command = "density exponential";
    rec.params["set"] = set_id;
    rec.params["max"] = n_max;
    rec.provenance["method"] = "perfect-power-enumeration";
    rec.result["count"] = count;
    if (count >= 1 && n_max >= 2)
        rec.result["exponential_estimate"] = exponential_estimate(count, n_max);
    else
        rec.result["exponential_estimate"] = nullptr;
    emit(rec, format, out);
}

void run_gap(std::uint32_t level, std::uint32_t length,
             const std::string& format, std::ostream& out) {
    CrtWitness witness = s_level_gap_witness(level, length);
    Record rec;
    rec.command = "gap";
    rec.params["level"] = level;
    rec.params["length"] = length;
    rec.provenance["prime_indexing"] = "1-based";
    rec.result = witness_json(witness);
    emit(rec, format, out);
}

void run_block(std::uint64_t anchor, bool verify, const std::string& format,
               std::ostream& out) {
    IntervalUnion block = with_flag("--anchor", [&] { return s_block(anchor); });
    Record rec;
    rec.command = "block";
    rec.params["anchor"] = anchor;
    json intervals = json::array();
    for (const auto& iv : block.intervals)
        intervals.push_back(json::array({rational_json(iv.lo), rational_json(iv.hi)}));
    rec.result["anchor"] = anchor;
    rec.result["intervals"] = intervals;
    rec.result["integer_count"] = integer_count(block);
    rec.result["measure_fraction"] = rational_json(measure_fraction(block));
    rec.result["next_anchor"] =
        next_anchor(mpz_class(static_cast<unsigned long>(anchor)),
                    mpz_class(static_cast<unsigned long>(anchor)))
            .get_str();
    if (verify) {
        auto progression = verify_block_free(anchor);
        if (progression) {
            json triple;
            triple["first"] = progression->first;
            triple["middle"] = progression->middle;
            triple["last"] = progression->last;
            rec.result["progression"] = triple;
        } else {
            rec.result["progression"] = nullptr;
        }
    }
    emit(rec, format, out);
}

void run_zeta(std::uint32_t s, double eps, const std::string& format,
              std::ostream& out) {
    ZetaValue z = zeta(s, eps);
    Record rec;
    rec.command = "zeta";
    rec.params["s"] = s;
    rec.params["eps"] = eps;
    rec.provenance["eps"] = eps;
    rec.provenance["terms"] = z.terms;
    rec.result["s"] = z.s;
    rec.result["value"] = z.value;
    rec.result["error_bound"] = z.error_bound;
    emit(rec, format, out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"progression-free set laboratory"};
    app.require_subcommand(1);

    const auto format_check = CLI::IsMember({"json", "csv", "text"});

    std::string gen_family, gen_format = "json";
    std::uint64_t gen_limit = 0;
    bool gen_verify = false;
    auto* gen = app.add_subcommand("generate", "greedy progression-free set");
    gen->add_option("--family", gen_family, "arith|geom|exp")->required();
    gen->add_option("--limit", gen_limit, "largest candidate")->required();
    gen->add_flag("--verify", gen_verify, "re-check freeness and maximality");
    gen->add_option("--format", gen_format)->check(format_check);

    std::string mem_set, mem_n, mem_format = "json";
    auto* mem = app.add_subcommand("member", "closed-form membership");
    mem->add_option("--set", mem_set, "a3|g3|e3|s:<level>")->required();
    mem->add_option("--n", mem_n, "value or range A..B")->required();
    mem->add_option("--format", mem_format)->check(format_check);

    auto* den = app.add_subcommand("density", "density measurements");
    den->require_subcommand(1);

    std::string emp_set, emp_format = "json";
    std::uint64_t emp_max = 0;
    std::uint64_t emp_window = 0;
    auto* emp = den->add_subcommand("empirical", "counting scan");
    emp->add_option("--set", emp_set, "a3|g3|e3|s:<level>")->required();
    emp->add_option("--max", emp_max, "scan bound N")->required();
    auto* emp_window_opt = emp->add_option("--window", emp_window, "window length");
    emp->add_option("--format", emp_format)->check(format_check);

    std::string ana_set, ana_format = "json";
    double ana_eps = 0.0;
    auto* ana = den->add_subcommand("analytic", "truncated Euler/zeta products");
    ana->add_option("--set", ana_set, "g3|s:<2..4>|t:<i>|r:<i>|kfree:<k>|bm:<m>")
        ->required();
    ana->add_option("--eps", ana_eps, "certified tolerance")->required();
    ana->add_option("--format", ana_format)->check(format_check);

    std::string expn_set, expn_format = "json";
    std::uint64_t expn_max = 0;
    auto* expn = den->add_subcommand("exponential", "exponential density");
    expn->add_option("--set", expn_set, "e3-excluded")->required();
    expn->add_option("--max", expn_max, "bound N")->required();
    expn->add_option("--format", expn_format)->check(format_check);

    std::uint32_t gap_level = 0, gap_length = 0;
    std::string gap_format = "json";
    auto* gap = app.add_subcommand("gap", "CRT gap witness");
    gap->add_option("--level", gap_level, "2..4")->required();
    gap->add_option("--length", gap_length, "gap length l")->required();
    gap->add_option("--format", gap_format)->check(format_check);

    std::uint64_t block_anchor = 0;
    bool block_verify = false;
    std::string block_format = "json";
    auto* blk = app.add_subcommand("block", "interval block S_N");
    blk->add_option("--anchor", block_anchor, "anchor N >= 48")->required();
    blk->add_flag("--verify", block_verify, "brute-force freeness check");
    blk->add_option("--format", block_format)->check(format_check);

    std::uint32_t zeta_s = 0;
    double zeta_eps = 1e-12;
    std::string zeta_format = "json";
    auto* zet = app.add_subcommand("zeta", "certified zeta value");
    zet->add_option("--s", zeta_s, "integer s >= 2")->required();
    zet->add_option("--eps", zeta_eps, "error bound");
    zet->add_option("--format", zeta_format)->check(format_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) {
            run_generate(gen_family, gen_limit, gen_verify, gen_format, out);
        } else if (mem->parsed()) {
            run_member(mem_set, mem_n, mem_format, out);
        } else if (emp->parsed()) {
            std::optional<std::uint64_t> window;
            if (emp_window_opt->count() > 0) window = emp_window;
            run_density_empirical(emp_set, emp_max, window, emp_format, out,
                                  err);
        } else if (ana->parsed()) {
            run_density_analytic(ana_set, ana_eps, ana_format, out);
        } else if (expn->parsed()) {
            run_density_exponential(expn_set, expn_max, expn_format, out);
        } else if (gap->parsed()) {
            run_gap(gap_level, gap_length, gap_format, out);
        } else if (blk->parsed()) {
            run_block(block_anchor, block_verify, block_format, out);
        } else if (zet->parsed()) {
            run_zeta(zeta_s, zeta_eps, zeta_format, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "refused: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "refused: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace proglab::cli
