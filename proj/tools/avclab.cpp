// avclab: command-line front end for the affine variety code toolkit.
// Subcommands regenerate the capability/zero-bound tables and run seeded
// decoding experiments; identical config + seed gives byte-identical output.

#include "CLI11.hpp"
#include "json.hpp"

#include "avc/codes.hpp"
#include "avc/mvdec.hpp"
#include "avc/rng.hpp"
#include "avc/rsdec.hpp"
#include "avc/zeros.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

using json = nlohmann::json;
using namespace avc;

namespace {

struct Options {
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    uint64_t seed = 1;
    int threads = 1;
    long long budget = 0; // seconds, 0 = no limit
    json config = json::object();
    uint64_t config_hash = 0;
};

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "0x%016llx", (unsigned long long)v);
    return buf;
}

// ---------------------------------------------------------------- output

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Document {
    std::string command;
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<Table> tables;
    json report; // used instead of tables by decode/experiment in json mode
    bool partial = false;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string render_csv(const Options& opt, const Document& doc) {
    std::ostringstream os;
    os << "# avclab " << doc.command << " v1\n";
    os << "# config_hash=" << hex64(opt.config_hash) << " seed=" << opt.seed << "\n";
    os << "# index=row-major,last-axis-fastest comparison=strict-rational\n";
    for (const auto& [k, v] : doc.meta) os << "# " << k << "=" << v << "\n";
    if (doc.partial) os << "# partial=true\n";
    for (const auto& t : doc.tables) {
        os << "# section=" << t.name << "\n";
        if (!t.columns.empty()) {
            for (size_t i = 0; i < t.columns.size(); ++i)
                os << (i ? "," : "") << t.columns[i];
            os << "\n";
        }
        for (const auto& row : t.rows) {
            for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
            os << "\n";
        }
    }
    if (!doc.report.is_null()) {
        for (auto it = doc.report.begin(); it != doc.report.end(); ++it) {
            os << it.key() << ",";
            if (it.value().is_string()) os << csv_field(it.value().get<std::string>());
            else os << csv_field(it.value().dump());
            os << "\n";
        }
    }
    return os.str();
}

std::string render_json(const Options& opt, const Document& doc) {
    json out;
    out["tool"] = "avclab";
    out["version"] = 1;
    out["command"] = doc.command;
    out["config_hash"] = hex64(opt.config_hash);
    out["seed"] = opt.seed;
    out["index_convention"] = "row-major,last-axis-fastest";
    out["comparison"] = "strict-rational";
    json meta = json::object();
    for (const auto& [k, v] : doc.meta) meta[k] = v;
    out["meta"] = meta;
    if (doc.partial) out["partial"] = true;
    if (!doc.report.is_null()) out["report"] = doc.report;
    if (!doc.tables.empty()) {
        json tabs = json::array();
        for (const auto& t : doc.tables) {
            json jt;
            jt["name"] = t.name;
            jt["columns"] = t.columns;
            jt["rows"] = t.rows;
            tabs.push_back(jt);
        }
        out["tables"] = tabs;
    }
    return out.dump(2) + "\n";
}

int emit(const Options& opt, const Document& doc) {
    std::string text = opt.format == "json" ? render_json(opt, doc) : render_csv(opt, doc);
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out_path, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open output file " + opt.out_path);
        f << text;
    }
    return doc.partial ? 3 : 0;
}

// ---------------------------------------------------------------- config

Rat parse_rat(const json& v) {
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(std::stoll(s));
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
    throw std::invalid_argument("rational values must be integers or \"a/b\" strings");
}

FieldCtx field_from(const json& c, int def_p, int def_k) {
    int p = def_p, k = def_k;
    if (c.contains("field")) {
        p = c["field"].value("p", def_p);
        k = c["field"].value("k", def_k);
    }
    return field_create(p, k);
}

std::vector<int> sizes_from(const json& c, std::vector<int> def) {
    if (!c.contains("sizes")) return def;
    return c["sizes"].get<std::vector<int>>();
}

MonomialSet set_from(const json& c, const std::vector<int>& sizes) {
    std::string kind = c.value("kind", "wrm");
    if (kind == "wrm") {
        Rat u = parse_rat(c.at("u"));
        std::vector<Rat> w;
        for (const auto& wv : c.at("w")) w.push_back(parse_rat(wv));
        return wrm_set(sizes, u, w);
    }
    if (kind == "qary_rm") return qary_rm_set(sizes, c.at("u").get<long long>());
    if (kind == "mcj") return mcj_set(sizes, c.at("delta").get<long long>());
    if (kind == "hyperbolic") return hyperbolic_set(sizes, c.at("delta").get<long long>());
    if (kind == "joyner") return joyner_set();
    throw std::invalid_argument("unknown set kind " + kind);
}

ZeroBound bound_from(const json& c, const std::vector<int>& sizes, int r) {
    std::string kind = c.value("bound", "d");
    DFlavor flavor = c.value("flavor", std::string("literal")) == "flat" ? DFlavor::flat
                                                                         : DFlavor::literal;
    std::vector<int> order;
    if (c.contains("order")) order = c["order"].get<std::vector<int>>();
    BoundKind bk;
    if (kind == "sz") bk = BoundKind::sz;
    else if (kind == "closed") bk = BoundKind::closed_form;
    else if (kind == "d") bk = BoundKind::d_recursive;
    else throw std::invalid_argument("unknown bound kind " + kind);
    return make_zero_bound(bk, sizes, r, flavor, order);
}

// ---------------------------------------------------------------- params

void params_example_rows(Table& t) {
    struct Entry {
        const char* label;
        std::vector<int> sizes;
        Rat u;
        std::vector<Rat> w;
    };
    std::vector<Entry> entries = {
        {"square_8x8", {8, 8}, Rat(7), {Rat(1), Rat(1)}},
        {"wide_16x4_unit", {16, 4}, Rat(11), {Rat(1), Rat(1)}},
        {"wide_16x4_weighted", {16, 4}, Rat(14), {Rat(1), Rat(2)}},
    };
    for (const auto& e : entries) {
        MonomialSet ms = wrm_set(e.sizes, e.u, e.w);
        DistanceBound d = footprint_distance(ms, e.sizes);
        t.rows.push_back({e.label, std::to_string(e.sizes[0]), std::to_string(e.sizes[1]),
                          e.u.str(), e.w[0].str(), e.w[1].str(), std::to_string(ms.size()),
                          std::to_string(d.value), d.exact ? "1" : "0"});
    }
}

int cmd_params(const Options& opt) {
    Document doc;
    doc.command = "params";
    std::string task = opt.config.value("task", "example_dimensions");

    if (task == "example_dimensions") {
        Table t;
        t.name = "codes";
        t.columns = {"label", "s1", "s2", "u", "w1", "w2", "dim", "d", "exact"};
        params_example_rows(t);
        doc.tables.push_back(std::move(t));
        doc.meta.push_back({"field", "GF(16)"});
        return emit(opt, doc);
    }

    if (task == "length1024") {
        // five grid shapes of the same length, optimal second weight per u
        std::vector<std::pair<int, int>> shapes = {{32, 32}, {64, 16}, {128, 8}, {256, 4}, {512, 2}};
        Table curves;
        curves.name = "curves";
        curves.columns = {"s1", "s2", "u", "w2", "dim", "d"};
        for (auto [s1, s2] : shapes) {
            long long umax = (long long)(s1 - 1) + (long long)(s2 - 1);
            for (long long u = 1; u <= umax; ++u) {
                Rat w2;
                try {
                    w2 = optimal_w2(s1, s2, Rat(u), Rat(1));
                } catch (const std::invalid_argument&) {
                    break;
                }
                MonomialSet ms = wrm_set({s1, s2}, Rat(u), {Rat(1), w2});
                DistanceBound d = footprint_distance(ms, {s1, s2});
                curves.rows.push_back({std::to_string(s1), std::to_string(s2), std::to_string(u),
                                       w2.str(), std::to_string(ms.size()),
                                       std::to_string(d.value)});
            }
        }
        Table dom;
        dom.name = "dominance_32x32_vs_512x2";
        dom.columns = {"d", "dim_32x32", "dim_512x2", "verdict"};
        for (long long d = 2; d <= 1024; d *= 2) {
            DominanceVerdict v = dominance_check(32, 32, 512, 2, d);
            dom.rows.push_back({std::to_string(d), std::to_string(v.dim_first),
                                std::to_string(v.dim_second), std::to_string(v.verdict)});
        }
        doc.tables.push_back(std::move(curves));
        doc.tables.push_back(std::move(dom));
        return emit(opt, doc);
    }

    if (task == "header") {
        std::string grid = opt.config.value("grid", "64x8");
        std::vector<int> sizes;
        Rat w2;
        std::vector<long long> us;
        if (grid == "64x8") { sizes = {64, 8}; w2 = Rat(8); us = {3, 4, 7, 15, 16, 20}; }
        else if (grid == "256x16") { sizes = {256, 16}; w2 = Rat(16); us = {5, 8, 15, 31, 36, 55}; }
        else throw std::invalid_argument("header task knows grids 64x8 and 256x16");
        Table t;
        t.name = "header";
        t.columns = {"label"};
        std::vector<std::string> urow{"u"}, drow{"d"};
        for (long long u : us) {
            MonomialSet ms = wrm_set(sizes, Rat(u), {Rat(1), w2});
            t.columns.push_back("u" + std::to_string(u));
            urow.push_back(std::to_string(u));
            drow.push_back(std::to_string(footprint_distance(ms, sizes).value));
        }
        t.rows.push_back(urow);
        t.rows.push_back(drow);
        doc.meta.push_back({"grid", grid});
        doc.meta.push_back({"w", "(1," + w2.str() + ")"});
        doc.tables.push_back(std::move(t));
        return emit(opt, doc);
    }

    if (task == "custom") {
        FieldCtx F = field_from(opt.config, 2, 4);
        std::vector<int> sizes = sizes_from(opt.config, {8, 4});
        MonomialSet ms = set_from(opt.config, sizes);
        DistanceBound d = footprint_distance(ms, sizes);
        Table t;
        t.name = "code";
        t.columns = {"n", "dim", "d", "exact", "divisor_closed"};
        long long n = 1;
        for (int s : sizes) n *= s;
        t.rows.push_back({std::to_string(n), std::to_string(ms.size()), std::to_string(d.value),
                          d.exact ? "1" : "0", ms.divisor_closed() ? "1" : "0"});
        doc.meta.push_back({"field", "GF(" + std::to_string(F.q) + ")"});
        doc.tables.push_back(std::move(t));
        return emit(opt, doc);
    }

    throw std::invalid_argument("params task must be example_dimensions, length1024, header, or custom");
}

// ---------------------------------------------------------------- zeros

std::string milli_string(const Rat& truncated) {
    long long milli = truncated.num * (1000 / truncated.den);
    char buf[16];
    std::snprintf(buf, sizeof buf, "0.%03lld", (long long)milli);
    return buf;
}

int cmd_zeros(const Options& opt) {
    Document doc;
    doc.command = "zeros";
    std::string task = opt.config.value("task", "means");

    if (task == "means") {
        std::vector<long long> qs = {2, 3, 4, 5, 7, 8};
        if (opt.config.contains("qs")) qs = opt.config["qs"].get<std::vector<long long>>();
        // default scope: every (m,r) cell that stays desk-cheap at every q
        std::vector<std::pair<int, int>> cells;
        if (opt.config.contains("cells")) {
            for (const auto& c : opt.config["cells"])
                cells.push_back({c.at("m").get<int>(), c.at("r").get<int>()});
        } else {
            for (int r : {2, 3}) cells.push_back({2, r});
            for (int r : {2, 3}) cells.push_back({3, r});
            for (int r : {2, 3}) cells.push_back({4, r});
        }
        Table t;
        t.name = "mean_improvement";
        t.columns = {"cell"};
        for (long long q : qs) t.columns.push_back("q" + std::to_string(q));
        for (auto [m, r] : cells) {
            std::vector<std::string> row{"m=" + std::to_string(m) + " r=" + std::to_string(r)};
            for (long long q : qs) {
                // the largest grids get expensive; skip them unless asked for
                bool heavy = m == 4 && q > 5;
                if (heavy && !opt.config.contains("cells")) {
                    row.push_back("");
                    continue;
                }
                row.push_back(milli_string(mean_improvement(m, r, q).truncated));
            }
            t.rows.push_back(std::move(row));
        }
        doc.meta.push_back({"value", "(floor(sz)-d)/floor(sz), mean over nonzero cells"});
        doc.meta.push_back({"rounding", "truncated-3-decimals"});
        doc.tables.push_back(std::move(t));
        return emit(opt, doc);
    }

    if (task == "dump") {
        int m = opt.config.value("m", 2);
        int r = opt.config.value("r", 2);
        long long q = opt.config.value("q", 2);
        std::vector<int> sizes(m, (int)q);
        long long n = 1;
        for (int j = 0; j < m; ++j) n *= q;
        Table t;
        t.name = "per_monomial";
        for (int j = 1; j <= m; ++j) t.columns.push_back("i" + std::to_string(j));
        t.columns.insert(t.columns.end(), {"sz_floor", "d", "improvement"});
        DCache cache;
        std::vector<int> dims(m, r * (int)q), e(m, 0);
        while (true) {
            if (delta_contains(e, r, sizes)) {
                long long s = 0;
                for (int v : e) s += v;
                long long pts = 1;
                for (int j = 1; j < m; ++j) pts *= q;
                long long sz_floor = std::min(s * pts, r * n) / r;
                if (sz_floor > 0) {
                    long long d = d_function(e, r, sizes, &cache);
                    Rat imp(sz_floor - d, sz_floor);
                    std::vector<std::string> row;
                    for (int v : e) row.push_back(std::to_string(v));
                    row.push_back(std::to_string(sz_floor));
                    row.push_back(std::to_string(d));
                    row.push_back(imp.str());
                    t.rows.push_back(std::move(row));
                }
            }
            int j = m - 1;
            for (; j >= 0; --j) {
                if (++e[j] < dims[j]) break;
                e[j] = 0;
            }
            if (j < 0) break;
        }
        doc.meta.push_back({"grid", std::to_string(q) + "^" + std::to_string(m)});
        doc.meta.push_back({"r", std::to_string(r)});
        doc.tables.push_back(std::move(t));
        return emit(opt, doc);
    }

    throw std::invalid_argument("zeros task must be means or dump");
}

// ---------------------------------------------------------------- capability

struct SweepSpec {
    std::string grid;
    int p = 2, kext = 6;
    std::vector<int> sizes;
    Rat w2;
    std::vector<long long> us;
    std::vector<int> rs;   // multiplicities for the sz and closed rows
    std::vector<int> d_rs; // multiplicities for the recursion rows
};

SweepSpec sweep_spec(const Options& opt) {
    std::string grid = opt.config.value("grid", "64x8");
    SweepSpec sp;
    sp.grid = grid;
    if (grid == "64x8") {
        sp.kext = 6;
        sp.sizes = {64, 8};
        sp.w2 = Rat(8);
        sp.us = {3, 4, 7, 15, 16, 20};
        sp.rs = {2, 3, 4, 9, 20};
        sp.d_rs = {2, 3, 4};
    } else if (grid == "256x16") {
        sp.kext = 8;
        sp.sizes = {256, 16};
        sp.w2 = Rat(16);
        sp.us = {5, 8, 15, 31, 36, 55};
        sp.rs = {2, 3};
        sp.d_rs = {};
    } else {
        throw std::invalid_argument("capability sweep knows grids 64x8 and 256x16");
    }
    if (opt.config.contains("rs")) sp.rs = opt.config["rs"].get<std::vector<int>>();
    if (opt.config.contains("d_rs")) sp.d_rs = opt.config["d_rs"].get<std::vector<int>>();
    if (opt.config.contains("us")) sp.us = opt.config["us"].get<std::vector<long long>>();
    return sp;
}

struct SweepCell {
    std::string key;   // row label + column, used for the checkpoint
    char row = 'S';    // S, C, or D
    int r = 0;
    size_t col = 0;
    bool inner = false; // the mcj companion of the column
};

// table-row conventions: sz as given, the other two in the swapped
// orientation, the recursion in its cheap flat flavor
ZeroBound sweep_bound(char row, const std::vector<int>& sizes, int r) {
    switch (row) {
        case 'S': return make_zero_bound(BoundKind::sz, sizes, r);
        case 'C': return make_zero_bound(BoundKind::closed_form, sizes, r, DFlavor::literal, {1, 0});
        default: return make_zero_bound(BoundKind::d_recursive, sizes, r, DFlavor::flat, {1, 0});
    }
}

int cmd_capability_sweep(const Options& opt) {
    SweepSpec sp = sweep_spec(opt);
    FieldCtx F = field_create(sp.p, sp.kext);
    PointEnsemble S = default_ensemble(F, sp.sizes);

    // column data: weighted set, its distance, the equal-distance mcj set
    struct Column {
        long long u;
        MonomialSet wset, iset;
        long long d = 0;
        bool paired = false;
    };
    std::vector<Column> cols;
    for (long long u : sp.us) {
        Column c;
        c.u = u;
        c.wset = wrm_set(sp.sizes, Rat(u), {Rat(1), sp.w2});
        c.d = footprint_distance(c.wset, sp.sizes).value;
        c.iset = mcj_set(sp.sizes, c.d);
        c.paired = c.iset.mons != c.wset.mons;
        cols.push_back(std::move(c));
    }

    std::vector<std::pair<char, int>> row_kinds;
    for (int r : sp.rs) row_kinds.push_back({'S', r});
    for (int r : sp.rs) row_kinds.push_back({'C', r});
    for (int r : sp.d_rs) row_kinds.push_back({'D', r});
    auto letter_rank = [](char c) { return c == 'S' ? 0 : c == 'C' ? 1 : 2; };
    std::sort(row_kinds.begin(), row_kinds.end(),
              [&](auto a, auto b) { return a.second != b.second
                                        ? a.second < b.second
                                        : letter_rank(a.first) < letter_rank(b.first); });

    std::vector<SweepCell> cells;
    for (auto [row, r] : row_kinds) {
        for (size_t ci = 0; ci < cols.size(); ++ci) {
            SweepCell cell;
            cell.row = row;
            cell.r = r;
            cell.col = ci;
            cell.inner = false;
            cell.key = std::string(1, row) + " r=" + std::to_string(r) +
                       " u=" + std::to_string(cols[ci].u) + " W";
            cells.push_back(cell);
            if (cols[ci].paired) {
                cell.inner = true;
                cell.key.back() = 'I';
                cells.push_back(cell);
            }
        }
    }

    // checkpoint: one json line per finished cell, keyed by row/column
    std::map<std::string, long long> done;
    std::string ckpt_path = opt.out_path.empty() ? "" : opt.out_path + ".ckpt";
    if (!ckpt_path.empty()) {
        std::ifstream in(ckpt_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            json j = json::parse(line, nullptr, false);
            if (j.is_discarded()) continue;
            done[j.at("key").get<std::string>()] = j.at("E").get<long long>();
        }
    }

    std::mutex ckpt_mutex;
    std::ofstream ckpt;
    if (!ckpt_path.empty()) ckpt.open(ckpt_path, std::ios::app);

    long long budget_secs = opt.budget > 0 ? opt.budget : 315360000LL; // ten years = no limit
    auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(budget_secs);
    std::vector<long long> results(cells.size(), -2); // -2 = not computed
    std::atomic<size_t> next{0};
    std::atomic<bool> out_of_time{false};

    auto worker = [&]() {
        while (true) {
            size_t idx = next.fetch_add(1);
            if (idx >= cells.size()) return;
            const SweepCell& cell = cells[idx];
            auto hit = done.find(cell.key);
            if (hit != done.end()) {
                results[idx] = hit->second;
                continue;
            }
            if (std::chrono::steady_clock::now() > deadline) {
                out_of_time = true;
                continue;
            }
            const Column& col = cols[cell.col];
            const MonomialSet& ms = cell.inner ? col.iset : col.wset;
            long long E;
            try {
                E = capability(ms, S, cell.r, sweep_bound(cell.row, sp.sizes, cell.r)).E_max;
            } catch (const std::invalid_argument&) {
                E = -1;
            }
            results[idx] = E;
            if (ckpt.is_open()) {
                std::lock_guard<std::mutex> lock(ckpt_mutex);
                ckpt << json{{"key", cell.key}, {"E", E}}.dump() << "\n";
                ckpt.flush();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < opt.threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    // assemble: per row kind, one line; paired columns render as W/I
    std::map<std::string, std::map<size_t, std::pair<long long, long long>>> grid;
    bool missing = false;
    for (size_t idx = 0; idx < cells.size(); ++idx) {
        const SweepCell& cell = cells[idx];
        std::string row_label = std::string(1, cell.row) + " r=" + std::to_string(cell.r);
        auto& slot = grid[row_label];
        if (!slot.count(cell.col)) slot[cell.col] = {-2, -2};
        if (cell.inner) slot[cell.col].second = results[idx];
        else slot[cell.col].first = results[idx];
        if (results[idx] == -2) missing = true;
    }

    auto cell_text = [&](const Column& col, std::pair<long long, long long> v) -> std::string {
        auto one = [](long long e) { return e == -2 ? std::string() : std::to_string(e); };
        if (!col.paired) return one(v.first);
        return one(v.first) + "/" + one(v.second);
    };

    Document doc;
    doc.command = "capability";
    doc.partial = missing || out_of_time;
    doc.meta.push_back({"grid", sp.grid});
    doc.meta.push_back({"field", "GF(" + std::to_string(F.q) + ")"});
    doc.meta.push_back({"w", "(1," + sp.w2.str() + ")"});
    doc.meta.push_back({"order_S", "as-given"});
    doc.meta.push_back({"order_C", "swapped"});
    doc.meta.push_back({"order_D", "swapped"});
    doc.meta.push_back({"flavor_D", "flat"});
    doc.meta.push_back({"sum", "i=0..t"});
    doc.meta.push_back({"pair", "weighted/equal-distance-mcj"});

    Table t;
    t.name = "capabilities";
    t.columns = {"row"};
    for (const auto& col : cols) t.columns.push_back("u" + std::to_string(col.u));

    std::vector<std::string> urow{"u"}, drow{"d"}, dimrow{"dim"}, subrow{"Sub"}, halfrow{"half_d"};
    for (const auto& col : cols) {
        urow.push_back(std::to_string(col.u));
        drow.push_back(std::to_string(col.d));
        dimrow.push_back(col.paired ? std::to_string(col.wset.size()) + "/" +
                                          std::to_string(col.iset.size())
                                    : std::to_string(col.wset.size()));
        subrow.push_back(std::to_string(
            gs_capability_ultimate(S.n, (int)std::min<long long>(ambient_rs_k(col.wset, S),
                                                                 1 << 30))));
        halfrow.push_back(std::to_string((col.d - 1) / 2));
    }
    t.rows.push_back(urow);
    t.rows.push_back(drow);
    t.rows.push_back(dimrow);
    for (auto [row, r] : row_kinds) {
        std::string label = std::string(1, row) + " r=" + std::to_string(r);
        std::vector<std::string> line{label};
        for (size_t ci = 0; ci < cols.size(); ++ci) line.push_back(cell_text(cols[ci], grid[label][ci]));
        t.rows.push_back(std::move(line));
    }
    t.rows.push_back(subrow);
    t.rows.push_back(halfrow);
    doc.tables.push_back(std::move(t));

    int rc = emit(opt, doc);
    if (!ckpt_path.empty() && !doc.partial) {
        ckpt.close();
        std::remove(ckpt_path.c_str());
    }
    return rc;
}

int cmd_capability_cell(const Options& opt) {
    FieldCtx F = field_from(opt.config, 2, 4);
    std::vector<int> sizes = sizes_from(opt.config, {8, 4});
    PointEnsemble S = default_ensemble(F, sizes);
    MonomialSet ms = set_from(opt.config, sizes);
    int r = opt.config.value("r", 2);
    ZeroBound bound = bound_from(opt.config, sizes, r);

    Document doc;
    doc.command = "capability";
    Table t;
    t.name = "cell";
    t.columns = {"E_max", "t", "unknowns", "layers", "plan"};
    try {
        CapabilityResult cap = capability(ms, S, r, bound);
        std::string layers;
        for (size_t i = 0; i < cap.plan.sets.size(); ++i)
            layers += (i ? ";" : "") + std::to_string(cap.plan.sets[i].size());
        t.rows.push_back({std::to_string(cap.E_max), std::to_string(cap.plan.t),
                          std::to_string(cap.plan.unknowns), layers, cap.plan.describe()});
    } catch (const std::invalid_argument& ex) {
        t.rows.push_back({"-1", "", "", "", ex.what()});
    }
    doc.meta.push_back({"field", "GF(" + std::to_string(F.q) + ")"});
    doc.tables.push_back(std::move(t));
    return emit(opt, doc);
}

int cmd_capability(const Options& opt) {
    std::string task = opt.config.value("task", "sweep");
    if (task == "sweep") return cmd_capability_sweep(opt);
    if (task == "cell") return cmd_capability_cell(opt);
    throw std::invalid_argument("capability task must be sweep or cell");
}

// ---------------------------------------------------------------- decode

std::vector<felem> corrupt_word(Rng& rng, const FieldCtx& F, std::vector<felem> w, long long weight) {
    std::set<size_t> pos;
    while ((long long)pos.size() < weight) pos.insert((size_t)rng.below(w.size()));
    for (size_t i : pos) w[i] = F.add(w[i], (felem)(1 + rng.below(F.q - 1)));
    return w;
}

std::vector<felem> random_vec(Rng& rng, const FieldCtx& F, size_t k) {
    std::vector<felem> v(k);
    for (auto& x : v) x = (felem)rng.below(F.q);
    return v;
}

int cmd_decode(const Options& opt) {
    Document doc;
    doc.command = "decode";
    std::string task = opt.config.value("task", "mv");
    long long trials = opt.config.value("trials", 100LL);
    Rng rng(opt.seed);

    json report;
    report["task"] = task;
    report["trials"] = trials;

    long long successes = 0;
    std::vector<long long> list_sizes;

    if (task == "mv") {
        FieldCtx F = field_from(opt.config, 2, 4);
        std::vector<int> sizes = sizes_from(opt.config, {8, 4});
        json cfg = opt.config;
        if (!cfg.contains("u")) { cfg["u"] = 4; cfg["w"] = {1, 2}; }
        MonomialSet ms = set_from(cfg, sizes);
        int r = opt.config.value("r", 2);
        ZeroBound bound = bound_from(opt.config, sizes, r);
        PointEnsemble S = default_ensemble(F, sizes);
        CodeSpec code = make_code(ms, S);
        CapabilityResult cap = capability(ms, S, r, bound);
        long long E = opt.config.value("errors", -1LL);
        if (E < 0) E = cap.E_max;
        report["params"] = {{"n", S.n}, {"dim", dimension(code)}, {"r", r},
                            {"E", E}, {"E_max", cap.E_max}, {"plan", cap.plan.describe()}};
        long long dim = dimension(code);
        for (long long i = 0; i < trials; ++i) {
            auto sent = encode(code, random_vec(rng, F, dim));
            auto received = corrupt_word(rng, F, sent, E);
            DecodeReport rep = decode_mv(received, code, r, bound, E);
            bool hit = std::find(rep.words.begin(), rep.words.end(), sent) != rep.words.end();
            successes += hit;
            list_sizes.push_back((long long)rep.words.size());
        }
    } else if (task == "rs") {
        FieldCtx F = field_from(opt.config, 2, 6);
        int n = opt.config.value("n", 49);
        int k = opt.config.value("k", 25);
        int r = opt.config.value("r", 1);
        PointEnsemble line = default_ensemble(F, {n});
        RSCode code = make_rs_code(F, line.sets[0], k);
        GSParams gp = gs_parameters(n, k, r);
        long long E = opt.config.value("errors", gp.E_max);
        report["params"] = {{"n", n}, {"k", k}, {"r", r}, {"E", E}, {"E_max", gp.E_max},
                            {"L", gp.L}, {"A_min", gp.A_min}};
        for (long long i = 0; i < trials; ++i) {
            auto sent = rs_encode(code, random_vec(rng, F, k));
            auto received = corrupt_word(rng, F, sent, E);
            DecodeReport rep = gs_decode_rs(received, code, r);
            bool hit = std::find(rep.words.begin(), rep.words.end(), sent) != rep.words.end();
            successes += hit;
            list_sizes.push_back((long long)rep.words.size());
        }
    } else if (task == "subfield") {
        FieldCtx F = field_from(opt.config, 2, 4);
        std::vector<int> sizes = sizes_from(opt.config, {16, 4});
        json cfg = opt.config;
        if (!cfg.contains("u")) { cfg["u"] = 2; cfg["w"] = {1, 1}; }
        MonomialSet ms = set_from(cfg, sizes);
        PointEnsemble S = default_ensemble(F, sizes);
        CodeSpec code = make_code(ms, S);
        int r = opt.config.value("r", 1);
        long long kamb = ambient_rs_k(ms, S);
        long long E = opt.config.value("errors", 10LL);
        report["params"] = {{"n", S.n}, {"dim", dimension(code)}, {"ambient_k", kamb},
                            {"r", r}, {"errors", E}};
        long long dim = dimension(code);
        for (long long i = 0; i < trials; ++i) {
            auto sent = encode(code, random_vec(rng, F, dim));
            auto received = corrupt_word(rng, F, sent, E);
            DecodeReport rep = subfield_subcode_decode(received, code, r);
            bool hit = std::find(rep.words.begin(), rep.words.end(), sent) != rep.words.end();
            successes += hit;
            list_sizes.push_back((long long)rep.words.size());
        }
    } else if (task == "joyner") {
        FieldCtx F = field_create(2, 3);
        PointEnsemble S = units_ensemble(F, 2);
        CodeSpec code = make_code(joyner_set(), S);
        int r = opt.config.value("r", 1);
        long long E = opt.config.value("E", 12LL);
        long long errors = opt.config.value("errors", E);
        report["params"] = {{"n", S.n}, {"dim", dimension(code)}, {"r", r},
                            {"E", E}, {"errors", errors}};
        long long dim = dimension(code);
        for (long long i = 0; i < trials; ++i) {
            auto sent = encode(code, random_vec(rng, F, dim));
            auto received = corrupt_word(rng, F, sent, errors);
            DecodeReport rep = joyner_decode(F, received, r, E);
            bool hit = std::find(rep.words.begin(), rep.words.end(), sent) != rep.words.end();
            successes += hit;
            list_sizes.push_back((long long)rep.words.size());
        }
    } else {
        throw std::invalid_argument("decode task must be mv, rs, subfield, or joyner");
    }

    report["successes"] = successes;
    report["list_sizes"] = list_sizes;
    long long max_list = 0;
    for (long long s : list_sizes) max_list = std::max(max_list, s);
    report["list_size_max"] = max_list;
    doc.report = std::move(report);
    return emit(opt, doc);
}

// ---------------------------------------------------------------- experiment

int cmd_experiment(const Options& opt) {
    Document doc;
    doc.command = "experiment";
    std::string task = opt.config.value("task", "joyner_curve");
    long long trials = opt.config.value("trials", 100LL);

    if (task == "joyner_curve") {
        std::vector<int> rs = {1};
        if (opt.config.contains("rs")) rs = opt.config["rs"].get<std::vector<int>>();
        long long w_from = 12, w_to = 31;
        if (opt.config.contains("weights")) {
            w_from = opt.config["weights"].at(0).get<long long>();
            w_to = opt.config["weights"].at(1).get<long long>();
        }
        FieldCtx F = field_create(2, 3);
        PointEnsemble S = units_ensemble(F, 2);
        CodeSpec code = make_code(joyner_set(), S);
        long long dim = dimension(code);

        Table capt;
        capt.name = "certified_radius";
        capt.columns = {"r", "E_max"};
        for (int r : rs) {
            GSParams gp = gs_parameters(49, 25, r);
            capt.rows.push_back({std::to_string(r), std::to_string(gp.E_max)});
        }
        Table curve;
        curve.name = "empirical";
        curve.columns = {"r", "weight", "successes", "trials"};
        for (int r : rs) {
            for (long long w = w_from; w <= w_to; ++w) {
                Rng rng(opt.seed ^ fnv1a("joyner r=" + std::to_string(r) +
                                         " w=" + std::to_string(w)));
                long long ok = 0;
                for (long long i = 0; i < trials; ++i) {
                    auto sent = encode(code, random_vec(rng, F, dim));
                    auto received = corrupt_word(rng, F, sent, w);
                    DecodeReport rep = joyner_decode(F, received, r, w);
                    ok += std::find(rep.words.begin(), rep.words.end(), sent) != rep.words.end();
                }
                curve.rows.push_back({std::to_string(r), std::to_string(w), std::to_string(ok),
                                      std::to_string(trials)});
            }
        }
        doc.meta.push_back({"code", "49-point unit grid, dim 11"});
        doc.tables.push_back(std::move(capt));
        doc.tables.push_back(std::move(curve));
        return emit(opt, doc);
    }

    if (task == "mv_sweep") {
        FieldCtx F = field_from(opt.config, 2, 4);
        std::vector<int> sizes = sizes_from(opt.config, {8, 4});
        json cfg = opt.config;
        if (!cfg.contains("u")) { cfg["u"] = 4; cfg["w"] = {1, 2}; }
        MonomialSet ms = set_from(cfg, sizes);
        PointEnsemble S = default_ensemble(F, sizes);
        CodeSpec code = make_code(ms, S);
        long long dim = dimension(code);
        std::vector<int> rs = {1, 2};
        if (opt.config.contains("rs")) rs = opt.config["rs"].get<std::vector<int>>();

        Table capt;
        capt.name = "certified_radius";
        capt.columns = {"r", "E_max"};
        Table curve;
        curve.name = "empirical";
        curve.columns = {"r", "weight", "successes", "trials"};
        for (int r : rs) {
            long long emax = -1;
            std::optional<CapabilityResult> cap;
            try {
                cap = capability(ms, S, r, bound_from(opt.config, sizes, r));
                emax = cap->E_max;
            } catch (const std::invalid_argument&) {
            }
            capt.rows.push_back({std::to_string(r), std::to_string(emax)});
            if (emax < 0) continue;
            ZeroBound bound = bound_from(opt.config, sizes, r);
            for (long long w = 0; w <= emax; ++w) {
                Rng rng(opt.seed ^ fnv1a("mv r=" + std::to_string(r) +
                                         " w=" + std::to_string(w)));
                long long ok = 0;
                for (long long i = 0; i < trials; ++i) {
                    auto sent = encode(code, random_vec(rng, F, dim));
                    auto received = corrupt_word(rng, F, sent, w);
                    DecodeReport rep = decode_mv(received, code, r, bound, emax);
                    ok += std::find(rep.words.begin(), rep.words.end(), sent) != rep.words.end();
                }
                curve.rows.push_back({std::to_string(r), std::to_string(w), std::to_string(ok),
                                      std::to_string(trials)});
            }
        }
        doc.meta.push_back({"n", std::to_string(S.n)});
        doc.meta.push_back({"dim", std::to_string(dim)});
        doc.tables.push_back(std::move(capt));
        doc.tables.push_back(std::move(curve));
        return emit(opt, doc);
    }

    throw std::invalid_argument("experiment task must be joyner_curve or mv_sweep");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"affine variety code laboratory"};
    app.fallthrough();
    Options opt;
    app.add_option("--config", opt.config_path, "JSON job description");
    app.add_option("--out", opt.out_path, "output path (default stdout)");
    app.add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", opt.seed, "seed for all randomness");
    app.add_option("--threads", opt.threads, "worker threads for sweeps")
        ->check(CLI::Range(1, 256));
    app.add_option("--budget", opt.budget, "wall-clock seconds before partial flush");

    auto* sub_params = app.add_subcommand("params", "dimensions, distances, code comparisons");
    auto* sub_zeros = app.add_subcommand("zeros", "zero-count bound tables and dumps");
    auto* sub_capability = app.add_subcommand("capability", "list-decoding capability sweeps");
    auto* sub_decode = app.add_subcommand("decode", "seeded decoding runs");
    auto* sub_experiment = app.add_subcommand("experiment", "success-rate curves");
    app.require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!opt.config_path.empty()) {
            std::ifstream f(opt.config_path);
            if (!f) throw std::runtime_error("cannot read config " + opt.config_path);
            f >> opt.config;
        }
        opt.config_hash = fnv1a(opt.config.dump() + "|" + std::to_string(opt.seed));

        if (sub_params->parsed()) return cmd_params(opt);
        if (sub_zeros->parsed()) return cmd_zeros(opt);
        if (sub_capability->parsed()) return cmd_capability(opt);
        if (sub_decode->parsed()) return cmd_decode(opt);
        if (sub_experiment->parsed()) return cmd_experiment(opt);
    } catch (const std::exception& ex) {
        std::cerr << "avclab: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
