/*
   Copyright 2026 The sternpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// stern: sequences, tables, identity checks and conjecture explorers for
// Stern polynomials.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stern/checks.hpp"
#include "stern/core.hpp"
#include "stern/degree_stats.hpp"
#include "stern/errors.hpp"
#include "stern/power_sums.hpp"
#include "stern/reciprocal_sums.hpp"
#include "stern/series_props.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace stern;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

constexpr std::uint64_t kDefaultRangeCap = std::uint64_t{1} << 20;

struct Globals {
    std::string format = "text";
    std::optional<std::uint64_t> max;
    std::optional<std::uint64_t> order;
    std::optional<std::uint64_t> cap;
    std::optional<unsigned> k;
    std::optional<std::uint64_t> seed;
};

class usage_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(const BigInt& v) { return v.get_str(); }

json coeff_array(const IntPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(num(c));
    return a;
}

json global_params(const Globals& g) {
    json p = json::object();
    if (g.max) p["max"] = *g.max;
    if (g.order) p["order"] = *g.order;
    if (g.cap) p["cap"] = *g.cap;
    if (g.k) p["k"] = *g.k;
    if (g.seed) p["seed"] = *g.seed;
    return p;
}

void emit_json(const std::string& command, const json& params, const json& result) {
    json out;
    out["command"] = command;
    out["params"] = params;
    out["result"] = result;
    std::cout << out.dump() << '\n';
}

// Rows of strings under a header, rendered in the chosen format.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    json to_json() const {
        json a = json::array();
        for (const auto& r : rows) {
            json o = json::object();
            for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
            a.push_back(std::move(o));
        }
        return a;
    }

    void print(char sep) const {
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? std::string(1, sep) : "") << cells[i];
            std::cout << '\n';
        };
        line(header);
        for (const auto& r : rows) line(r);
    }
};

void emit_table(const Globals& g, const std::string& command, json params, const Table& t) {
    if (g.format == "json") {
        emit_json(command, params, t.to_json());
    } else {
        t.print(g.format == "csv" ? ',' : ' ');
    }
}

// poly

int cmd_poly(const Globals& g, std::uint64_t n) {
    SternCache cache;
    const IntPoly& p = cache.poly(n);
    if (g.format == "json") {
        json params = global_params(g);
        params["n"] = n;
        json r;
        r["n"] = n;
        r["coeffs"] = coeff_array(p);
        emit_json("poly", params, r);
    } else if (g.format == "csv") {
        std::cout << "power,coeff\n";
        for (std::size_t i = 0; i < p.size(); ++i) std::cout << i << ',' << num(p.coeffs()[i]) << '\n';
    } else {
        std::cout << exact::to_string(p) << '\n';
    }
    return kExitPass;
}

// seq

int cmd_seq(const Globals& g, const std::string& name, std::uint64_t from, std::uint64_t to) {
    if (from > to) throw usage_error("--from must not exceed --to");
    require_cap("sequence length", static_cast<long long>(to - from + 1), static_cast<long long>(g.cap.value_or(kDefaultRangeCap)));
    SternCache cache;
    std::vector<std::string> values;
    if (name == "e" || name == "d") {
        if (from == 0) throw std::domain_error("e(n) and d(n) start at n = 1");
        for (std::uint64_t n = from; n <= to; ++n) values.push_back(std::to_string(name == "e" ? cache.degree(n) : cache.order(n)));
    } else if (name == "s") {
        require_cap("s_n index", static_cast<long long>(to), 20);
        for (std::uint64_t n = from; n <= to; ++n) values.push_back(std::to_string(sign_partial_sum(std::uint64_t{1} << n, cache)));
    } else if (name == "spartial") {
        if (from == 0) throw std::domain_error("partial sign sums start at n = 1");
        for (std::uint64_t n = from; n <= to; ++n) values.push_back(std::to_string(sign_partial_sum(n, cache)));
    } else if (name == "t") {
        const auto t = t_sequence(static_cast<std::size_t>(to + 1));
        for (std::uint64_t n = from; n <= to; ++n) values.push_back(num(t[n]));
    } else if (name == "sk") {
        if (!g.k) throw usage_error("seq sk requires --k");
        require_cap("sk index", static_cast<long long>(to), 4096);
        require_cap("sk power k", *g.k, 64);
        GkTable table;
        const auto series = exact::series_expand(table.get(*g.k), static_cast<std::size_t>(to + 1));
        for (std::uint64_t n = from; n <= to; ++n) values.push_back(series[n].get_str());
    } else {
        throw usage_error("unknown sequence: " + name);
    }
    if (g.format == "json") {
        json params = global_params(g);
        params["name"] = name;
        params["from"] = from;
        params["to"] = to;
        emit_json("seq", params, values);
    } else if (g.format == "csv") {
        std::cout << "n,value\n";
        for (std::uint64_t n = from; n <= to; ++n) std::cout << n << ',' << values[n - from] << '\n';
    } else {
        for (const auto& v : values) std::cout << v << '\n';
    }
    return kExitPass;
}

// table

int cmd_table(const Globals& g, const std::string& name, std::uint64_t n) {
    SternCache cache;
    Table t;
    if (name == "hn") {
        require_cap("table hn n", static_cast<long long>(n), 20);
        const IntPoly h = h_poly(static_cast<unsigned>(n));
        t.header = {"i", "coeff"};
        for (std::size_t i = 0; i < h.size(); ++i) t.rows.push_back({std::to_string(i), num(h.coeffs()[i])});
    } else if (name == "ecount") {
        require_cap("table ecount n", static_cast<long long>(n), 20);
        const auto hist = degree_histogram(static_cast<unsigned>(n), cache).counts;
        t.header = {"i", "closed", "brute", "match"};
        for (long i = 0; i <= static_cast<long>(n); ++i) {
            const BigInt closed = e_count_closed(i, static_cast<long>(n));
            const BigInt& brute = hist[static_cast<std::size_t>(i)];
            t.rows.push_back({std::to_string(i), num(closed), num(brute), closed == brute ? "true" : "false"});
        }
    } else if (name == "auxpoly") {
        require_cap("table auxpoly n", static_cast<long long>(n), 1 << 16);
        AuxSternFamily family;
        t.header = {"k", "S_k"};
        for (std::uint64_t k = 1; k <= n; ++k) t.rows.push_back({std::to_string(k), exact::to_string(family.poly(k))});
    } else if (name == "maxcoeff") {
        require_cap("table maxcoeff n", static_cast<long long>(n), 20);
        t.header = {"n", "lhs", "rhs", "match"};
        for (unsigned m = 1; m <= n; ++m) {
            const auto r = maxcoeff_conjecture_check(m, cache);
            t.rows.push_back({std::to_string(m), num(r.lhs), num(r.rhs), r.match ? "true" : "false"});
        }
    } else {
        throw usage_error("unknown table: " + name);
    }
    json params = global_params(g);
    params["name"] = name;
    params["n"] = n;
    emit_table(g, "table", params, t);
    return kExitPass;
}

// check

json report_json(const checks::CheckReport& r) {
    json o;
    o["check_name"] = r.check_name;
    o["range"] = r.range;
    o["passed"] = r.passed;
    o["failed"] = r.failed;
    o["first_failure"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
    for (const auto& [k, v] : r.info) o[k] = v;
    return o;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

int cmd_check(const Globals& g, const std::string& name) {
    std::vector<std::pair<std::string, checks::CheckFn>> selected;
    if (name == "all") {
        selected = checks::registry();
    } else if (auto f = checks::find_check(name)) {
        selected.emplace_back(name, *f);
    } else {
        throw usage_error("unknown check: " + name);
    }
    checks::CheckParams params{g.max, g.order, g.k, g.cap, g.seed};
    checks::Context ctx;
    std::vector<checks::CheckReport> reports;
    for (const auto& [n, f] : selected) reports.push_back(f(ctx, params));

    if (g.format == "json") {
        json p = global_params(g);
        p["name"] = name;
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        emit_json("check", p, arr);
    } else if (g.format == "csv") {
        std::cout << "check_name,range,passed,failed,first_failure,info\n";
        for (const auto& r : reports) {
            std::string info;
            for (const auto& [k, v] : r.info) info += (info.empty() ? "" : ";") + k + "=" + v;
            std::cout << csv_cell(r.check_name) << ',' << csv_cell(r.range) << ',' << r.passed << ',' << r.failed << ','
                      << csv_cell(r.first_failure.value_or("")) << ',' << csv_cell(info) << '\n';
        }
    } else {
        for (const auto& r : reports) {
            std::cout << r.check_name << ": passed=" << r.passed << " failed=" << r.failed << " (" << r.range << ")\n";
            for (const auto& [k, v] : r.info) std::cout << "  " << k << "=" << v << '\n';
            if (r.first_failure) std::cout << "  first failure: " << *r.first_failure << '\n';
        }
    }
    for (const auto& r : reports)
        if (!r.ok()) return kExitFail;
    return kExitPass;
}

// explore

int cmd_explore(const Globals& g, const std::string& name, std::optional<unsigned> max_n, std::optional<unsigned> max_deg) {
    SternCache cache;
    if (name == "maxcoeff") {
        const unsigned top = max_n.value_or(14);
        require_cap("explore maxcoeff max-n", top, 20);
        std::vector<MaxCoeffReport> rows;
        for (unsigned n = 2; n <= top; ++n) rows.push_back(maxcoeff_conjecture_check(n, cache));
        if (g.format == "json") {
            json params = global_params(g);
            params["name"] = name;
            params["max_n"] = top;
            json arr = json::array();
            json findings = json::array();
            for (const auto& r : rows) {
                json o;
                o["n"] = r.n;
                o["lhs"] = num(r.lhs);
                o["rhs"] = num(r.rhs);
                o["match"] = r.match;
                if (!r.match) findings.push_back(o);
                arr.push_back(std::move(o));
            }
            json res;
            res["rows"] = arr;
            res["findings"] = findings;
            emit_json("explore", params, res);
        } else {
            const char sep = g.format == "csv" ? ',' : ' ';
            std::cout << "n" << sep << "lhs" << sep << "rhs" << sep << "match\n";
            for (const auto& r : rows)
                std::cout << r.n << sep << num(r.lhs) << sep << num(r.rhs) << sep << (r.match ? "true" : "false") << '\n';
            for (const auto& r : rows)
                if (!r.match) std::cout << "FINDING maxcoeff n=" << r.n << " lhs=" << num(r.lhs) << " rhs=" << num(r.rhs) << '\n';
        }
        return kExitPass;
    }
    if (name == "transcendence") {
        const unsigned k = g.k.value_or(2);
        const unsigned deg = max_deg.value_or(4);
        const std::uint64_t order = g.order.value_or(40);
        require_cap("transcendence order", static_cast<long long>(order), static_cast<long long>(g.cap.value_or(4096)));
        require_cap("transcendence degree", deg, 64);
        const bool supports = transcendence_conjecture_probe(k, deg, static_cast<std::size_t>(order), cache);
        if (g.format == "json") {
            json params = global_params(g);
            params["name"] = name;
            params["max_deg"] = deg;
            json r;
            r["k"] = k;
            r["max_deg"] = deg;
            r["order"] = order;
            r["supports"] = supports;
            emit_json("explore", params, r);
        } else if (g.format == "csv") {
            std::cout << "k,max_deg,order,supports\n" << k << ',' << deg << ',' << order << ',' << (supports ? "true" : "false") << '\n';
        } else {
            std::cout << "k=" << k << " max_deg=" << deg << " order=" << order << " supports=" << (supports ? "true" : "false") << '\n';
            if (!supports) std::cout << "FINDING transcendence k=" << k << ": a rational function of degree <= " << deg << " fits to order " << order << '\n';
        }
        return kExitPass;
    }
    throw usage_error("unknown explorer: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stern polynomial toolkit"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--max", g.max, "Upper bound of the swept range");
    app.add_option("--order", g.order, "Series truncation order");
    app.add_option("--cap", g.cap, "Override the hard resource cap");
    app.add_option("--k", g.k, "Power or index parameter");
    app.add_option("--seed", g.seed, "Add 32 random indices beyond --max to index sweeps");

    std::uint64_t poly_n = 0;
    auto* poly = app.add_subcommand("poly", "Print B_n(t)");
    poly->add_option("n", poly_n, "Index")->required();

    std::string seq_name;
    std::uint64_t seq_from = 0, seq_to = 0;
    auto* seq = app.add_subcommand("seq", "Print a sequence (e, d, s, spartial, t, sk)");
    seq->add_option("name", seq_name, "Sequence name")->required();
    seq->add_option("--from", seq_from, "First index")->required();
    seq->add_option("--to", seq_to, "Last index")->required();

    std::string table_name;
    std::uint64_t table_n = 0;
    auto* table = app.add_subcommand("table", "Print a table (hn, ecount, auxpoly, maxcoeff)");
    table->add_option("name", table_name, "Table name")->required();
    table->add_option("n", table_n, "Size")->required();

    std::string check_name;
    auto* check = app.add_subcommand("check", "Run a named identity check, or all of them");
    check->add_option("name", check_name, "Check name or all")->required();

    std::string explore_name;
    std::optional<unsigned> max_n, max_deg;
    auto* explore = app.add_subcommand("explore", "Run a conjecture explorer (maxcoeff, transcendence)");
    explore->add_option("name", explore_name, "Explorer name")->required();
    explore->add_option("--max-n", max_n, "Largest n");
    explore->add_option("--max-deg", max_deg, "Largest degree of the fitted rational function");

    for (auto* sub : {poly, seq, table, check, explore}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*poly) return cmd_poly(g, poly_n);
        if (*seq) return cmd_seq(g, seq_name, seq_from, seq_to);
        if (*table) return cmd_table(g, table_name, table_n);
        if (*check) return cmd_check(g, check_name);
        if (*explore) return cmd_explore(g, explore_name, max_n, max_deg);
    } catch (const cap_exceeded& e) {
        std::cerr << "stern: " << e.what() << '\n';
        return kExitCap;
    } catch (const std::length_error& e) {
        std::cerr << "stern: " << e.what() << '\n';
        return kExitCap;
    } catch (const formula_discrepancy& e) {
        std::cerr << "stern: formula discrepancy: " << e.what() << '\n';
        return kExitFail;
    } catch (const usage_error& e) {
        std::cerr << "stern: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "stern: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "stern: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
