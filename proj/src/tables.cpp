#include "quadsq/tables.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "quadsq/characters.hpp"
#include "quadsq/closedform.hpp"
#include "quadsq/ideal.hpp"

#include "json.hpp"

namespace quadsq {

bool operator==(const TableRow& l, const TableRow& r) {
    return l.a == r.a && l.b == r.b && l.e == r.e && l.ep == r.ep && l.h == r.h;
}

namespace {

QuadInt tau(const Field& F, const QuadInt& z) {
    return F.conj(z);
}

// alpha ~ alpha' iff alpha = u^k * alpha' or u^k * tau(alpha'), u = eps0^2.
// k is pinned by the first embedding; the search bound is a sanity rail.
bool equivalent(const Field& F, const QuadInt& a, const QuadInt& b) {
    if (F.norm(a) != F.norm(b)) return false;
    QuadInt u = F.mul(F.eps0(), F.eps0());
    double lu = std::log(F.embed(u, 0));
    for (const QuadInt& c : {b, tau(F, b)}) {
        double lr = std::log(F.embed(a, 0)) - std::log(F.embed(c, 0));
        long k0 = std::lround(lr / lu);
        for (long k = k0 - 1; k <= k0 + 1; ++k) {
            if (std::labs(k) > 40)
                throw std::logic_error("unit equivalence search bound exceeded");
            QuadInt scaled = c;
            QuadInt step = k >= 0 ? u : F.unit_inverse(u);
            for (long i = 0; i < std::labs(k); ++i) scaled = F.mul(scaled, step);
            if (scaled == a) return true;
        }
    }
    return false;
}

uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

std::vector<QuadInt> enumerate_alphas(const Field& F, int n) {
    std::vector<QuadInt> kept;
    for (Int a = 1; (int)kept.size() < n; ++a) {
        for (Int b = 0;; ++b) {
            QuadInt alpha(a, b);
            if (!F.is_totally_positive(alpha)) {
                if (b > 0) break;
                continue;
            }
            if (!is_squarefree(F, alpha)) continue;
            if (F.id() == FieldId::Q17 && coarse17(F, alpha) == Coarse17::Excluded)
                continue;
            bool dup = false;
            for (const QuadInt& prev : kept)
                if (equivalent(F, alpha, prev)) { dup = true; break; }
            if (!dup) {
                kept.push_back(alpha);
                if ((int)kept.size() == n) return kept;
            }
        }
    }
    return kept;
}

std::pair<int, int> disc_marker(const Field& F, const QuadInt& alpha) {
    QuadInt neg(-alpha.x, -alpha.y);
    if (F.id() == FieldId::Q3) {
        switch (classify3(F, neg)) {
            case Case3::A:
            case Case3::B: return {1, 0};
            case Case3::C1: return {2, 0};
            default: return {4, 0};
        }
    }
    auto [c, cp] = classify17(F, neg);
    auto ex = [](Case17 c) { return c == Case17::A || c == Case17::B ? 0 : 2; };
    return {ex(c), ex(cp)};
}

std::vector<TableRow> generate_table(const Field& F, int n) {
    std::vector<TableRow> rows;
    for (const QuadInt& alpha : enumerate_alphas(F, n)) {
        auto [e, ep] = disc_marker(F, alpha);
        rows.push_back({alpha.x, alpha.y, e, ep, class_number(F, alpha).h});
    }
    return rows;
}

std::vector<TableRow> load_golden(const Field& F, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::string first;
    std::getline(in, first);
    std::string rest((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    std::istringstream hdr(first);
    std::string hash_tag, fnv_tag, want;
    hdr >> hash_tag >> fnv_tag >> want;
    if (hash_tag != "#" || fnv_tag != "fnv1a64")
        throw InvalidInput("missing checksum line in " + path);
    std::ostringstream got;
    got << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(rest);
    if (got.str() != want) throw InvalidInput("checksum mismatch in " + path);
    std::vector<TableRow> rows;
    std::istringstream body(rest);
    std::string line;
    std::getline(body, line);  // header row
    bool q3 = F.id() == FieldId::Q3;
    while (std::getline(body, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        TableRow r;
        char comma;
        long a, b, e, ep = 0, h;
        ls >> a >> comma >> b >> comma >> e >> comma;
        if (q3) {
            ls >> h;
        } else {
            ls >> ep >> comma >> h;
        }
        rows.push_back({a, b, (int)e, (int)ep, h});
    }
    return rows;
}

TableDiff diff_table(const std::vector<TableRow>& golden,
                     const std::vector<TableRow>& generated) {
    TableDiff d;
    std::map<std::pair<Int, Int>, TableRow> gen;
    for (const TableRow& r : generated) gen[{r.a, r.b}] = r;
    std::map<std::pair<Int, Int>, TableRow> gold;
    for (const TableRow& r : golden) gold[{r.a, r.b}] = r;
    for (const TableRow& g : golden) {
        auto it = gen.find({g.a, g.b});
        if (it == gen.end()) d.missing.push_back(g);
        else if (!(it->second == g)) d.mismatched.push_back({g, it->second});
    }
    for (const TableRow& r : generated)
        if (!gold.count({r.a, r.b})) d.extra.push_back(r);
    return d;
}

std::string table_csv(const Field& F, const std::vector<TableRow>& rows) {
    std::ostringstream out;
    bool q3 = F.id() == FieldId::Q3;
    out << (q3 ? "a,b,m,h" : "a,b,e,ep,h") << "\n";
    for (const TableRow& r : rows) {
        out << r.a << "," << r.b << "," << r.e << ",";
        if (!q3) out << r.ep << ",";
        out << r.h << "\n";
    }
    return out.str();
}

std::string table_json(const Field& F, const std::vector<TableRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    bool q3 = F.id() == FieldId::Q3;
    for (const TableRow& r : rows) {
        nlohmann::json o;
        o["a"] = r.a.convert_to<long long>();
        o["b"] = r.b.convert_to<long long>();
        if (q3) {
            o["m"] = r.e;
        } else {
            o["e"] = r.e;
            o["ep"] = r.ep;
        }
        o["h"] = r.h;
        arr.push_back(o);
    }
    return arr.dump(2) + "\n";
}

}  // namespace quadsq
