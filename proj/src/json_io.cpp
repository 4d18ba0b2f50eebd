#include "superspherical/json_io.hpp"

#include "superspherical/gl12.hpp"

#include <regex>
#include <stdexcept>

namespace superspherical {

Json to_json(const UElement &u)
{
    Json out = Json::array();
    for (const auto &[m, c] : u.terms()) {
        Json exps = Json::array();
        for (auto e : m.exponents()) {
            exps.push_back(e);
        }
        out.push_back(Json{{"monomial", std::move(exps)}, {"coeff", to_string(c)}});
    }
    return out;
}

UElement uelement_from_json(const Json &j, std::size_t dim)
{
    if (!j.is_array()) {
        throw std::invalid_argument("element must be a JSON array");
    }
    UElement out;
    for (const auto &term : j) {
        const auto exps = term.at("monomial").get<std::vector<unsigned>>();
        if (exps.size() != dim) {
            throw std::invalid_argument("monomial has the wrong length");
        }
        std::vector<Monomial::Exponent> e(exps.begin(), exps.end());
        out.add(Monomial(std::move(e)), parse_scalar(term.at("coeff").get<std::string>()));
    }
    return out;
}

Json to_json(const SymmetricAlgebra &s, const SymElement &y)
{
    return Json{{"basis", s.tag()}, {"terms", to_json(y)}};
}

Json to_json(const UniPoly &p)
{
    Json out = Json::array();
    for (const auto &c : p.coefficient_strings()) {
        out.push_back(c);
    }
    return out;
}

Json to_json(const CheckReport &r, bool with_time)
{
    Json items = Json::array();
    for (const auto &i : r.items) {
        Json item{{"check", i.name}, {"pass", i.pass}};
        if (!i.pass) {
            item["witness"] = i.witness;
        }
        if (!i.data.empty()) {
            item["data"] = i.data;
        }
        items.push_back(std::move(item));
    }
    Json out{{"suite", r.suite}, {"degree", r.degree}, {"pass", r.pass()}, {"items", std::move(items)}};
    if (with_time) {
        out["seconds"] = r.seconds;
    }
    return out;
}

Json algebra_to_json(const LieSuperalgebra &g)
{
    Json gens = Json::array();
    for (const auto &x : g.generators()) {
        gens.push_back(Json{{"name", x.name}, {"parity", is_odd(x.parity) ? "odd" : "even"}});
    }
    Json brackets = Json::array();
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = i; j < g.dim(); ++j) {
            const SuperVector &v = g.bracket_basis(i, j);
            if (v.is_zero()) {
                continue;
            }
            Json value = Json::object();
            for (const auto &[k, c] : v.terms()) {
                value[g.generator(k).name] = to_string(c);
            }
            brackets.push_back(Json{{"left", g.generator(i).name}, {"right", g.generator(j).name}, {"value", value}});
        }
    }
    return Json{{"schema", schema_version}, {"generators", std::move(gens)}, {"brackets", std::move(brackets)}};
}

LieSuperalgebra algebra_from_json(const Json &j)
{
    try {
        std::vector<Generator> gens;
        std::map<std::string, std::size_t> index;
        for (const auto &g : j.at("generators")) {
            const std::string name = g.at("name").get<std::string>();
            const std::string parity = g.at("parity").get<std::string>();
            if (parity != "even" && parity != "odd") {
                throw std::invalid_argument("parity must be \"even\" or \"odd\"");
            }
            if (!index.emplace(name, gens.size()).second) {
                throw std::invalid_argument("duplicate generator '" + name + "'");
            }
            gens.push_back(Generator{gens.size(), name, parity_of(parity == "odd")});
        }
        auto lookup = [&](const std::string &name) {
            const auto it = index.find(name);
            if (it == index.end()) {
                throw std::invalid_argument("unknown generator '" + name + "'");
            }
            return it->second;
        };
        LieSuperalgebra::Table table;
        if (j.contains("brackets")) {
            for (const auto &b : j.at("brackets")) {
                SuperVector v;
                for (const auto &[name, coeff] : b.at("value").items()) {
                    v.add(lookup(name), parse_scalar(coeff.get<std::string>()));
                }
                table[{lookup(b.at("left").get<std::string>()), lookup(b.at("right").get<std::string>())}] = v;
            }
        }
        return LieSuperalgebra(std::move(gens), table);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed algebra document: ") + e.what());
    }
}

LieSuperalgebra builtin_algebra(const std::string &name)
{
    if (name == "gl12-osp12") {
        return *gl12().algebra;
    }
    static const std::regex gl(R"(gl\((\d+)\|(\d+)\))");
    std::smatch m;
    if (std::regex_match(name, m, gl)) {
        const unsigned long a = std::stoul(m[1]);
        const unsigned long b = std::stoul(m[2]);
        if (a + b == 0 || a + b > 8) {
            throw std::invalid_argument("gl(m|n) needs 1 <= m + n <= 8");
        }
        return gl_superalgebra(a, b);
    }
    throw std::invalid_argument("unknown built-in algebra '" + name + "'");
}

} // namespace superspherical
