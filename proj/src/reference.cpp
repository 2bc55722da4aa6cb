#include "eqlines/reference.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#ifndef EQLINES_DATA_DIR
#define EQLINES_DATA_DIR "data"
#endif

namespace eqlines {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

RefKind parse_kind(const std::string& s) {
    if (s == "lower") return RefKind::lower;
    if (s == "upper") return RefKind::upper;
    if (s == "exact") return RefKind::exact;
    throw std::invalid_argument("unknown kind '" + s + "'");
}

void check_table2_row(const ReferenceRow& r) {
    if (!r.alpha || r.alpha->sign() <= 0 || r.alpha->num() != 1)
        throw std::invalid_argument("table2 row needs alpha = 1/a");
    Rational inv = r.alpha->inverse();
    if (!inv.is_integer()) throw std::invalid_argument("table2 row needs alpha = 1/a with integer a");
    Rational a2 = inv * inv;
    if (r.value != (a2 - 2) * (a2 - 1) / Rational(2))
        throw std::invalid_argument("table2 value " + r.value.str() + " is not (a^2-2)(a^2-1)/2");
    Rational n(r.n);
    if (n != a2 - 2 && n != Rational(3) * a2 - 16)
        throw std::invalid_argument("table2 dimension " + n.str() + " is neither a^2-2 nor 3a^2-16");
}

}  // namespace

std::string to_string(RefKind k) {
    switch (k) {
        case RefKind::lower: return "lower";
        case RefKind::upper: return "upper";
        case RefKind::exact: return "exact";
    }
    return "?";
}

std::optional<Rational> ReferenceTable::find(long long n, const std::optional<Rational>& alpha) const {
    for (const auto& r : rows)
        if (r.n == n && r.alpha == alpha && r.kind != RefKind::lower) return r.value;
    return std::nullopt;
}

ReferenceTable parse_reference(std::istream& in, const std::string& name) {
    ReferenceTable t{name, {}};
    std::string line;
    int lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto where = [&] { return name + ":" + std::to_string(lineno) + ": "; };
        if (!have_header) {
            if (line != "n,alpha,value,kind,source")
                throw std::runtime_error(where() + "expected header n,alpha,value,kind,source");
            have_header = true;
            continue;
        }
        auto cells = split_csv(line);
        if (cells.size() != 5) throw std::runtime_error(where() + "expected 5 fields");
        try {
            ReferenceRow r;
            Rational n = Rational::parse(trim(cells[0]));
            if (!n.is_integer()) throw std::invalid_argument("n must be an integer");
            r.n = n.num().get_si();
            if (!trim(cells[1]).empty()) r.alpha = Rational::parse(trim(cells[1]));
            r.value = Rational::parse(trim(cells[2]));
            r.kind = parse_kind(trim(cells[3]));
            r.source = trim(cells[4]);
            if (r.source == "table2") check_table2_row(r);
            t.rows.push_back(std::move(r));
        } catch (const std::exception& e) {
            throw std::runtime_error(where() + e.what());
        }
    }
    if (!have_header) throw std::runtime_error(name + ": missing header");
    return t;
}

ReferenceTable load_reference(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open reference file " + path.string());
    return parse_reference(in, path.filename().string());
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("EQLINES_DATA"); env && *env) return env;
    return EQLINES_DATA_DIR;
}

std::map<long long, long long> m_bound_map(const ReferenceTable& t) {
    std::map<long long, long long> out;
    for (const auto& r : t.rows) {
        if (r.kind == RefKind::lower) continue;
        long long v = r.value.floor().get_si();
        auto [it, fresh] = out.emplace(r.n, v);
        if (!fresh) it->second = std::min(it->second, v);
    }
    return out;
}

std::vector<Table2Entry> table2_entries(const ReferenceTable& t) {
    std::map<Rational, Table2Entry> by_alpha;
    for (const auto& r : t.rows) {
        if (r.source != "table2" || !r.alpha) continue;
        auto [it, fresh] = by_alpha.try_emplace(*r.alpha);
        Table2Entry& e = it->second;
        if (fresh) {
            e.alpha = *r.alpha;
            e.a = r.alpha->inverse().num().get_si();
            e.value = r.value.num().get_si();
            e.lo = e.hi = r.n;
        } else {
            e.lo = std::min(e.lo, r.n);
            e.hi = std::max(e.hi, r.n);
        }
    }
    std::vector<Table2Entry> out;
    for (auto& [alpha, e] : by_alpha) out.push_back(e);
    std::sort(out.begin(), out.end(), [](const Table2Entry& x, const Table2Entry& y) { return x.a < y.a; });
    return out;
}

void write_reference_csv(std::ostream& out, const std::vector<ReferenceRow>& rows) {
    out << "n,alpha,value,kind,source\n";
    for (const auto& r : rows)
        out << r.n << ',' << (r.alpha ? r.alpha->str() : "") << ',' << r.value.str() << ',' << to_string(r.kind)
            << ',' << r.source << '\n';
}

}  // namespace eqlines
