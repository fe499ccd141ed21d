// p5g command line: generate | analyze | color | discharge | verify.
// Talks to the library strictly through the C API in p5g.h.

#include <p5g.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct GraphHandle {
    p5g_graph* g = nullptr;
    GraphHandle() = default;
    GraphHandle(const GraphHandle&) = delete;
    GraphHandle& operator=(const GraphHandle&) = delete;
    ~GraphHandle() { p5g_graph_free(g); }
};

struct ApiString {
    char* s = nullptr;
    ApiString() = default;
    ApiString(const ApiString&) = delete;
    ApiString& operator=(const ApiString&) = delete;
    ~ApiString() { p5g_string_free(s); }
    std::string str() const { return s ? std::string(s) : std::string(); }
};

int fail_input(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

std::string api_error(p5g_status st) {
    return std::string(p5g_status_name(st)) + ": " + p5g_last_error();
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

bool write_file(const fs::path& path, const std::string& data) {
    std::error_code ec;
    if (path.has_parent_path())
        fs::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        return false;
    out << data;
    return static_cast<bool>(out);
}

std::string rational_str(const Json& r) {
    const std::int64_t num = r.at("num").get<std::int64_t>();
    const std::int64_t den = r.at("den").get<std::int64_t>();
    if (den == 1)
        return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

struct Options {
    std::string input;
    std::string gen;
    std::string out;
    std::uint32_t delta = 0; // 0 = graph's max degree
    bool exact = false;
    bool json = false;
    std::int64_t budget_ms = 5000;
    std::uint64_t seed = 0;
};

int load_graph(const Options& o, GraphHandle& gh) {
    if (o.input.empty() == o.gen.empty())
        return fail_input("exactly one input source is required (--input or --gen)");
    p5g_status st;
    if (!o.gen.empty()) {
        st = p5g_graph_from_spec(o.gen.c_str(), o.seed, &gh.g);
    } else {
        std::string text;
        if (!read_file(o.input, text))
            return fail_input("cannot read '" + o.input + "'");
        st = p5g_graph_from_text(text.c_str(), &gh.g);
    }
    if (st != P5G_OK)
        return fail_input(api_error(st));
    return 0;
}

int cmd_generate(const Options& o) {
    if (o.gen.empty())
        return fail_input("generate needs --gen <spec>");
    GraphHandle gh;
    if (int rc = load_graph(o, gh))
        return rc;
    ApiString text;
    if (auto st = p5g_graph_to_text(gh.g, &text.s); st != P5G_OK)
        return fail_input(api_error(st));
    if (o.out.empty()) {
        std::cout << text.str();
    } else {
        const fs::path path = fs::path(o.out) / "graph.p5g";
        if (!write_file(path, text.str()))
            return fail_input("cannot write '" + path.string() + "'");
        std::cout << path.string() << "\n";
    }
    return 0;
}

int cmd_analyze(const Options& o) {
    GraphHandle gh;
    if (int rc = load_graph(o, gh))
        return rc;
    ApiString profile, violations;
    if (auto st = p5g_analyze_json(gh.g, o.delta, &profile.s, &violations.s); st != P5G_OK)
        return fail_input(api_error(st));

    const std::string out_dir = o.out.empty() ? "." : o.out;
    if (!write_file(fs::path(out_dir) / "profile.json", profile.str()) ||
        !write_file(fs::path(out_dir) / "violations.json", violations.str()))
        return fail_input("cannot write analysis documents to '" + out_dir + "'");

    const Json rows = Json::parse(violations.str());
    std::size_t findings = 0;
    for (const auto& row : rows) {
        const auto rule = row.at("rule").get<std::string>();
        findings += rule != "MinDegree" && rule != "Cor3Refinement";
    }
    if (o.json) {
        Json doc{{"profile", Json::parse(profile.str())}, {"violations", rows}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "analyze: wrote profile.json and violations.json to " << out_dir
                  << " (findings: " << findings << ")\n";
    }
    return 0;
}

int cmd_color(const Options& o) {
    GraphHandle gh;
    if (int rc = load_graph(o, gh))
        return rc;
    ApiString coloring;
    std::uint32_t colors = 0, lower = 0, upper = 0;
    int is_exact = 0;
    const auto st = p5g_color(gh.g, o.exact ? 1 : 0, o.budget_ms, &coloring.s, &colors, &is_exact,
                              &lower, &upper);
    if (st == P5G_ERR_BUDGET_EXCEEDED) {
        std::cout << "chi2>=" << lower << "\n";
        std::cout << "chi2<=" << upper << "\n";
        std::cerr << "error: " << api_error(st) << "\n";
        return 3;
    }
    if (st != P5G_OK)
        return fail_input(api_error(st));

    int valid = 0;
    if (p5g_validate_coloring(gh.g, coloring.s, &valid, nullptr, nullptr) != P5G_OK || !valid)
        return fail_input("internal: produced coloring failed validation");

    const std::string out_dir = o.out.empty() ? "." : o.out;
    const fs::path path = fs::path(out_dir) / "coloring.txt";
    if (!write_file(path, coloring.str()))
        return fail_input("cannot write '" + path.string() + "'");

    if (o.json) {
        Json doc{{"k", colors}, {"exact", is_exact != 0}, {"coloring", path.string()}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << (is_exact ? "chi2=" : "chi2<=") << colors << "\n";
    }
    return 0;
}

int cmd_discharge(const Options& o) {
    GraphHandle gh;
    if (int rc = load_graph(o, gh))
        return rc;
    ApiString ledger, audit;
    int all_pass = 0;
    if (auto st = p5g_discharge_json(gh.g, o.delta, &ledger.s, &audit.s, &all_pass); st != P5G_OK)
        return fail_input(api_error(st));

    const std::string out_dir = o.out.empty() ? "." : o.out;
    if (!write_file(fs::path(out_dir) / "ledger.json", ledger.str()) ||
        !write_file(fs::path(out_dir) / "audit.json", audit.str()))
        return fail_input("cannot write discharge documents to '" + out_dir + "'");

    const Json audit_doc = Json::parse(audit.str());
    if (o.json) {
        Json doc{{"total_initial", audit_doc.at("total_initial")},
                 {"total_final", audit_doc.at("total_final")},
                 {"all_pass", all_pass != 0}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "total_initial=" << rational_str(audit_doc.at("total_initial"))
                  << " total_final=" << rational_str(audit_doc.at("total_final"))
                  << " all_pass=" << (all_pass ? "true" : "false") << "\n";
    }
    return all_pass ? 0 : 4;
}

struct VerifyRow {
    std::string spec;
    std::string canonical;
    bool error = false;
    std::string error_message;
    std::uint32_t n = 0;
    std::uint32_t delta = 0;
    std::string girth;
    bool eligible = false; // girth >= 5 and delta >= 22
    std::string method;
    std::uint32_t k = 0;
    std::uint32_t bound = 0;
    bool pass = false;
};

void verify_one(const Options& o, VerifyRow& row) {
    GraphHandle gh;
    auto st = p5g_graph_from_spec(row.spec.c_str(), o.seed, &gh.g);
    if (st != P5G_OK) {
        row.error = true;
        row.error_message = api_error(st);
        return;
    }
    {
        ApiString canon;
        p5g_spec_canonical(row.spec.c_str(), o.seed, &canon.s);
        row.canonical = canon.str();
    }
    p5g_graph_order(gh.g, &row.n);
    p5g_graph_max_degree(gh.g, &row.delta);
    int unbounded = 0;
    std::uint32_t girth_value = 0;
    p5g_graph_girth(gh.g, &unbounded, &girth_value);
    row.girth = unbounded ? "unbounded" : std::to_string(girth_value);
    row.eligible = (unbounded || girth_value >= 5) && row.delta >= 22;
    row.bound = row.delta + 4;

    ApiString coloring;
    std::uint32_t colors = 0, lower = 0, upper = 0;
    int is_exact = 0;
    st = p5g_color(gh.g, 1, o.budget_ms, &coloring.s, &colors, &is_exact, &lower, &upper);
    if (st == P5G_OK) {
        row.method = "exact";
        row.k = colors;
    } else if (st == P5G_ERR_BUDGET_EXCEEDED) {
        ApiString fallback;
        st = p5g_color(gh.g, 0, 0, &fallback.s, &colors, &is_exact, &lower, &upper);
        if (st != P5G_OK) {
            row.error = true;
            row.error_message = api_error(st);
            return;
        }
        row.method = "dsatur";
        row.k = colors;
        coloring.s = fallback.s;
        fallback.s = nullptr;
    } else {
        row.error = true;
        row.error_message = api_error(st);
        return;
    }
    row.pass = row.k <= row.bound;

    if (!o.out.empty()) {
        ApiString hash;
        p5g_spec_hash(row.spec.c_str(), o.seed, &hash.s);
        const fs::path dir = fs::path(o.out) / hash.str();
        ApiString text, profile, violations, ledger, audit;
        p5g_graph_to_text(gh.g, &text.s);
        p5g_analyze_json(gh.g, 0, &profile.s, &violations.s);
        int all_pass = 0;
        if (p5g_discharge_json(gh.g, 0, &ledger.s, &audit.s, &all_pass) != P5G_OK) {
            row.error = true;
            row.error_message = api_error(P5G_ERR_INTERNAL);
            return;
        }
        const bool ok = write_file(dir / "graph.p5g", text.str()) &&
                        write_file(dir / "profile.json", profile.str()) &&
                        write_file(dir / "ledger.json", ledger.str()) &&
                        write_file(dir / "audit.json", audit.str()) &&
                        write_file(dir / "coloring.txt", coloring.str());
        if (!ok) {
            row.error = true;
            row.error_message = "cannot write artifacts under " + dir.string();
        }
    }
}

unsigned verify_threads(std::size_t rows) {
    unsigned t = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("P5G_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1)
            t = static_cast<unsigned>(parsed);
    }
    if (t == 0)
        t = 1;
    return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(rows, 1)));
}

int cmd_verify(const Options& o) {
    if (o.input.empty())
        return fail_input("verify needs --input <manifest>");
    std::string text;
    if (!read_file(o.input, text))
        return fail_input("cannot read '" + o.input + "'");

    std::vector<VerifyRow> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        VerifyRow row;
        row.spec = line;
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        return fail_input("manifest contains no specs");

    const unsigned threads = verify_threads(rows.size());
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= rows.size())
                return;
            verify_one(o, rows[i]);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();

    bool any_error = false, any_violation = false;
    std::size_t checked = 0, skipped = 0;
    Json json_rows = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.error) {
            any_error = true;
            std::cerr << "error: row " << i << " (" << row.spec << "): " << row.error_message
                      << "\n";
            continue;
        }
        const std::string result = row.eligible ? (row.pass ? "pass" : "FAIL") : "skip";
        if (row.eligible) {
            ++checked;
            any_violation |= !row.pass;
        } else {
            ++skipped;
        }
        if (o.json) {
            json_rows.push_back(Json{{"spec", row.canonical},
                                     {"n", row.n},
                                     {"delta", row.delta},
                                     {"girth", row.girth},
                                     {"method", row.method},
                                     {"k", row.k},
                                     {"bound", row.bound},
                                     {"result", result}});
        } else {
            std::printf("%-40s n=%-4u delta=%-3u girth=%-9s %-6s k=%-4u bound=%-4u %s\n",
                        row.canonical.c_str(), row.n, row.delta, row.girth.c_str(),
                        row.method.c_str(), row.k, row.bound, result.c_str());
        }
    }
    if (o.json)
        std::cout << json_rows.dump(2) << "\n";
    else
        std::cout << "verified " << checked << " instance(s), " << skipped << " skipped\n";

    if (any_error)
        return 2;
    return any_violation ? 5 : 0;
}

void add_common(CLI::App* cmd, Options& o, bool with_input) {
    if (with_input) {
        cmd->add_option("--input", o.input, "input file path");
        cmd->add_option("--gen", o.gen, "generator spec, e.g. 'grafted n=6 delta=22 seed=1'");
    }
    cmd->add_option("--delta", o.delta, "delta parameter (default: the graph's max degree)")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--exact", o.exact, "run the exact engine");
    cmd->add_option("--budget-ms", o.budget_ms, "time budget for exact search (ms)");
    cmd->add_option("--seed", o.seed, "default seed for seeded generator specs");
    cmd->add_option("--out", o.out, "output directory");
    cmd->add_flag("--json", o.json, "machine-readable stdout");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-distance coloring and discharging for planar graphs of girth >= 5"};
    app.require_subcommand(1);

    Options gen_opts, analyze_opts, color_opts, discharge_opts, verify_opts;
    auto* c_gen = app.add_subcommand("generate", "emit a corpus graph in p5g format");
    add_common(c_gen, gen_opts, true);
    auto* c_analyze = app.add_subcommand("analyze", "structural profile and violation report");
    add_common(c_analyze, analyze_opts, true);
    auto* c_color = app.add_subcommand("color", "2-distance coloring (dsatur, or --exact)");
    add_common(c_color, color_opts, true);
    auto* c_discharge = app.add_subcommand("discharge", "charge ledger and audit");
    add_common(c_discharge, discharge_opts, true);
    auto* c_verify = app.add_subcommand("verify", "run a corpus manifest against chi2 <= delta+4");
    add_common(c_verify, verify_opts, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (c_gen->parsed())
        return cmd_generate(gen_opts);
    if (c_analyze->parsed())
        return cmd_analyze(analyze_opts);
    if (c_color->parsed())
        return cmd_color(color_opts);
    if (c_discharge->parsed())
        return cmd_discharge(discharge_opts);
    if (c_verify->parsed())
        return cmd_verify(verify_opts);
    return 2;
}
