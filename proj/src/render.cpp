#include "whitlat/render.hpp"

#include <sstream>

namespace whitlat {

namespace {

// One monomial without sign: v first, then z factors; "1" if all trivial.
std::string monomial_body(const Mono& m, const Rat& abs_coeff, int rank) {
    std::vector<std::string> factors;
    if (abs_coeff != 1) factors.push_back(abs_coeff.str());
    if (m[rank] != 0)
        factors.push_back(m[rank] == 1 ? "v" : "v^" + std::to_string(m[rank]));
    for (int i = 0; i < rank; ++i) {
        if (m[i] == 0) continue;
        std::string f = "z" + std::to_string(i + 1);
        if (m[i] != 1) f += "^" + std::to_string(m[i]);
        factors.push_back(f);
    }
    if (factors.empty()) return "1";
    std::string out = factors[0];
    for (size_t k = 1; k < factors.size(); ++k) out += "*" + factors[k];
    return out;
}

} // namespace

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += monomial_body(m, neg ? Rat(-c) : c, p.rank());
    }
    return out;
}

nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json term;
        term["coeff"] = c.str();
        term["z"] = std::vector<int>(m.begin(), m.begin() + p.rank());
        term["v"] = m[p.rank()];
        arr.push_back(term);
    }
    return arr;
}

LaurentPoly poly_from_json(int rank, const nlohmann::json& j) {
    LaurentPoly p(rank);
    for (const auto& term : j) {
        const Rat c(term.at("coeff").get<std::string>());
        const std::vector<int> zexp = term.at("z").get<std::vector<int>>();
        const int vexp = term.at("v").get<int>();
        p += LaurentPoly::monomial(rank, zexp, vexp, c);
    }
    return p;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in list: " + text);
        out.push_back(std::stoi(item));
    }
    return out;
}

Permutation parse_permutation(const std::string& text, int degree) {
    if (text.empty() || text == "1" || text == "e" || text == "id")
        return Permutation(degree);
    if (text.find('s') != std::string::npos) {
        Permutation w(degree);
        std::stringstream ss(text);
        std::string tok;
        std::vector<int> word;
        while (ss >> tok) {
            if (tok.size() < 2 || tok[0] != 's')
                throw std::invalid_argument("bad word token: " + tok);
            word.push_back(std::stoi(tok.substr(1)));
        }
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            w = Permutation::simple(degree, *it) * w;
        return w;
    }
    const std::vector<int> images = parse_int_list(text);
    if (static_cast<int>(images.size()) != degree)
        throw std::invalid_argument("one-line permutation has wrong length: " + text);
    return Permutation(images);
}

} // namespace whitlat
