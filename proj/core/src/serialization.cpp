#include "sunit/serialization.hpp"

#include "sunit/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace sunit {

namespace {

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer())
        return BigInt(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        BigInt v;
        if (mpz_set_str(v.get_mpz_t(), j.get<std::string>().c_str(), 10) != 0)
            throw BadParameters("not an integer: " + j.get<std::string>());
        return v;
    }
    throw BadParameters("expected an integer or a decimal string");
}

Json bigint_to_json(const BigInt& v) {
    if (v.fits_slong_p())
        return Json(v.get_si());
    return Json(v.get_str());
}

} // namespace

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.order();
    j["edges"] = Json::array();
    for (const auto& [u, v] : g.edges())
        j["edges"].push_back(Json::array({u, v}));
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw BadParameters("graph JSON needs \"n\" and \"edges\"");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw BadParameters("each edge must be a pair [i, j]");
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return Graph(n, std::move(edges));
}

Json representation_to_json(const Representation& r) {
    Json j;
    j["primes"] = Json::array();
    for (const auto& p : r.s.primes())
        j["primes"].push_back(bigint_to_json(p));
    j["points"] = Json::array();
    for (const auto& pt : r.points)
        j["points"].push_back(pt.str());
    if (r.target)
        j["graph"] = graph_to_json(*r.target);
    if (r.map)
        j["map"] = r.map->forward;
    return j;
}

Representation representation_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("primes") || !j.contains("points"))
        throw BadParameters("representation JSON needs \"primes\" and \"points\"");
    std::vector<BigInt> primes;
    for (const auto& p : j.at("primes"))
        primes.push_back(bigint_from_json(p));
    PrimeSet s{std::move(primes)};

    std::vector<SInteger> points;
    for (const auto& pt : j.at("points")) {
        if (pt.is_number_integer())
            points.push_back(from_rational(BigInt(static_cast<long>(pt.get<std::int64_t>())),
                                           1, s));
        else
            points.push_back(from_rational(parse_rational(pt.get<std::string>()), s));
    }

    Representation rep{s, std::move(points), std::nullopt, std::nullopt};
    if (j.contains("graph") && !j.at("graph").is_null())
        rep.target = graph_from_json(j.at("graph"));
    if (j.contains("map") && !j.at("map").is_null())
        rep.map = VertexMap{j.at("map").get<std::vector<int>>()};
    return rep;
}

Json embedding_to_json(const CubeEmbedding& e) {
    Json j;
    j["dim"] = e.dimension;
    j["coords"] = e.coords;
    return j;
}

CubeEmbedding embedding_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("coords"))
        throw BadParameters("embedding JSON needs \"dim\" and \"coords\"");
    CubeEmbedding e;
    e.dimension = j.at("dim").get<int>();
    e.coords = j.at("coords").get<std::vector<std::string>>();
    return e;
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["status"] = status_name(v.status);
    j["citations"] = v.citations;
    j["notes"] = v.notes;
    return j;
}

Verdict verdict_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("status"))
        throw BadParameters("verdict JSON needs \"status\"");
    Verdict v;
    v.status = status_from_name(j.at("status").get<std::string>());
    if (j.contains("citations"))
        v.citations = j.at("citations").get<std::vector<std::string>>();
    if (j.contains("notes"))
        v.notes = j.at("notes").get<std::string>();
    return v;
}

Json solutions_to_json(const std::vector<UnitSolution>& sols) {
    Json j = Json::array();
    for (const auto& sol : sols) {
        Json entry;
        entry["values"] = Json::array();
        for (const auto& v : sol.values)
            entry["values"].push_back(v.str());
        entry["degenerate"] = sol.degenerate;
        j.push_back(std::move(entry));
    }
    return j;
}

Json census_to_json(const CensusResult& census) {
    Json j;
    j["classes"] = census.classes;
    j["representatives"] = Json::array();
    for (const auto& rep : census.representatives) {
        Json row = Json::array();
        for (const auto& pt : rep)
            row.push_back(pt.str());
        j["representatives"].push_back(std::move(row));
    }
    return j;
}

BigRat parse_rational(const std::string& text) {
    // Accept -?digits(/digits)? and nothing else.
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t k = from;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])))
            ++k;
        return k;
    };
    if (i < text.size() && text[i] == '-')
        ++i;
    std::size_t num_end = digits(i);
    if (num_end == i)
        throw BadParameters("not a rational: \"" + text + "\"");
    std::size_t pos = num_end;
    if (pos < text.size()) {
        if (text[pos] != '/')
            throw BadParameters("not a rational: \"" + text + "\"");
        std::size_t den_end = digits(pos + 1);
        if (den_end == pos + 1 || den_end != text.size())
            throw BadParameters("not a rational: \"" + text + "\"");
    }

    BigRat q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw BadParameters("not a rational: \"" + text + "\"");
    if (q.get_den() == 0)
        throw BadParameters("zero denominator in \"" + text + "\"");
    q.canonicalize();
    return q;
}

namespace {

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw BadParameters("empty item in list \"" + csv + "\"");
        out.push_back(item.substr(a, b - a + 1));
    }
    if (out.empty())
        throw BadParameters("empty list");
    return out;
}

} // namespace

PrimeSet parse_primes(const std::string& csv) {
    std::vector<BigInt> primes;
    for (const auto& tok : split_csv(csv)) {
        BigInt p;
        if (mpz_set_str(p.get_mpz_t(), tok.c_str(), 10) != 0)
            throw BadParameters("not an integer: \"" + tok + "\"");
        primes.push_back(std::move(p));
    }
    return PrimeSet{std::move(primes)};
}

std::vector<SInteger> parse_points(const std::string& csv, const PrimeSet& s) {
    std::vector<SInteger> pts;
    for (const auto& tok : split_csv(csv))
        pts.push_back(from_rational(parse_rational(tok), s));
    return pts;
}

Graph read_graph_text(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        std::istringstream row(line);
        long a, b;
        if (!(row >> a))
            continue; // blank or comment-only line
        if (row >> b) {
            edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
            n = std::max(n, static_cast<int>(std::max(a, b)) + 1);
        } else {
            n = std::max(n, static_cast<int>(a));
        }
        long extra;
        if (row >> extra)
            throw BadParameters("edge lines hold exactly two vertices");
    }
    return Graph(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw BadParameters("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string body = buf.str();
    std::size_t first = body.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw BadParameters(path + " is empty");
    if (body[first] == '{') {
        Json j = Json::parse(body, nullptr, false);
        if (j.is_discarded())
            throw BadParameters(path + " is not valid JSON");
        return graph_from_json(j);
    }
    std::istringstream text(body);
    return read_graph_text(text);
}

} // namespace sunit
