#include "weylarr/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylarr {

CatalogEntry catalog_entry(const RootSystemId& id) {
    if (id.rank > 8) throw std::invalid_argument("catalog covers rank <= 8 only");
    CatalogEntry e;
    e.id = id;
    int l = id.rank;
    switch (id.family) {
        case 'A':
            e.coxeter = l + 1;
            for (int i = 1; i <= l; ++i) e.exponents.push_back(i);
            e.theta.assign(l, 1);
            break;
        case 'B':
        case 'C':
            e.coxeter = 2 * l;
            for (int i = 1; i <= l; ++i) e.exponents.push_back(2 * i - 1);
            if (id.family == 'B') {
                e.theta.assign(l, 2);
                e.theta[0] = 1;
            } else {
                e.theta.assign(l, 2);
                e.theta[l - 1] = 1;
            }
            break;
        case 'D':
            e.coxeter = 2 * l - 2;
            for (int i = 1; i + 1 <= l; ++i) e.exponents.push_back(2 * i - 1);
            e.exponents.push_back(l - 1);
            std::sort(e.exponents.begin(), e.exponents.end());
            e.theta.assign(l, 2);
            e.theta[0] = e.theta[l - 2] = e.theta[l - 1] = 1;
            break;
        case 'E':
            if (l == 6) {
                e.coxeter = 12;
                e.exponents = {1, 4, 5, 7, 8, 11};
                e.theta = {1, 2, 2, 3, 2, 1};
            } else if (l == 7) {
                e.coxeter = 18;
                e.exponents = {1, 5, 7, 9, 11, 13, 17};
                e.theta = {2, 2, 3, 4, 3, 2, 1};
            } else {
                e.coxeter = 30;
                e.exponents = {1, 7, 11, 13, 17, 19, 23, 29};
                e.theta = {2, 3, 4, 6, 5, 4, 3, 2};
            }
            break;
        case 'F':
            e.coxeter = 12;
            e.exponents = {1, 5, 7, 11};
            e.theta = {2, 3, 4, 2};
            break;
        case 'G':
            e.coxeter = 6;
            e.exponents = {1, 5};
            e.theta = {3, 2};
            break;
        default:
            throw std::invalid_argument("unknown family");
    }
    e.num_positive = l * e.coxeter / 2;
    e.c_max = *std::max_element(e.theta.begin(), e.theta.end());
    return e;
}

namespace {
std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}
} // namespace

std::vector<CatalogEntry> load_catalog_file(const std::string& path,
                                            std::vector<std::vector<std::vector<int>>>* cartans) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file: " + path);
    std::vector<CatalogEntry> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, '|')) {
            size_t a = field.find_first_not_of(" \t");
            size_t b = field.find_last_not_of(" \t");
            fields.push_back(a == std::string::npos ? "" : field.substr(a, b - a + 1));
        }
        if (fields.size() != 7)
            throw std::runtime_error("bad catalog record: " + line);
        CatalogEntry e;
        e.id = RootSystemId::parse(fields[0]);
        e.coxeter = std::stoi(fields[1]);
        e.num_positive = std::stoi(fields[2]);
        e.exponents = parse_int_list(fields[3]);
        e.theta = parse_int_list(fields[4]);
        e.c_max = std::stoi(fields[5]);
        if (cartans) {
            std::vector<std::vector<int>> c;
            std::stringstream rows(fields[6]);
            std::string row;
            while (std::getline(rows, row, ';')) c.push_back(parse_int_list(row));
            cartans->push_back(c);
        }
        entries.push_back(e);
    }
    return entries;
}

} // namespace weylarr
