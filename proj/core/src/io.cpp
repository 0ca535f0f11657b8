#include "phs/io.hpp"

#include <fstream>
#include <sstream>

#include "phs/errors.hpp"

namespace phs::io {

namespace {

json components_to_json(const StateVector& v) {
    json arr = json::array();
    for (const cplx& c : v.components()) arr.push_back({c.real(), c.imag()});
    return arr;
}

std::vector<cplx> components_from_json(const json& arr) {
    if (!arr.is_array() || arr.empty()) throw ParseError("components must be a nonempty array");
    std::vector<cplx> out;
    out.reserve(arr.size());
    for (const json& c : arr) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
            throw ParseError("component must be a [re, im] pair");
        out.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
    return out;
}

}  // namespace

json to_json(const StateVector& v) {
    return json{{"dim", v.dim()}, {"components", components_to_json(v)}};
}

StateVector vector_from_json(const json& j) {
    if (!j.is_object() || !j.contains("components"))
        throw ParseError("state document must be an object with \"components\"");
    std::vector<cplx> comps = components_from_json(j.at("components"));
    if (j.contains("dim")) {
        if (!j.at("dim").is_number_integer()) throw ParseError("\"dim\" must be an integer");
        if (j.at("dim").get<int>() != static_cast<int>(comps.size()))
            throw ParseError("\"dim\" does not match component count");
    }
    try {
        return StateVector(std::move(comps));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid state vector: ") + e.what());
    }
}

json to_json(const Ray& r) {
    json j = to_json(r.rep().vec());
    j["canonical"] = true;
    return j;
}

std::string to_csv(const StateVector& v) {
    std::ostringstream out;
    out.precision(17);
    out << "index,re,im\n";
    for (int i = 0; i < v.dim(); ++i)
        out << i << "," << v[i].real() << "," << v[i].imag() << "\n";
    return out.str();
}

StateVector vector_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("index,re,im", 0) != 0)
        throw ParseError("CSV state file must start with header index,re,im");
    std::vector<cplx> comps;
    int expected = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        double values[3];
        for (int f = 0; f < 3; ++f) {
            if (!std::getline(row, field, f < 2 ? ',' : '\n'))
                throw ParseError("CSV row has fewer than 3 fields: " + line);
            try {
                values[f] = std::stod(field);
            } catch (const std::exception&) {
                throw ParseError("CSV field is not a number: " + field);
            }
        }
        if (static_cast<int>(values[0]) != expected++)
            throw ParseError("CSV indices must run 0,1,2,...");
        comps.emplace_back(values[1], values[2]);
    }
    try {
        return StateVector(std::move(comps));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid state vector: ") + e.what());
    }
}

json to_json(const HermitianMatrix& m) {
    json entries = json::array();
    for (const cplx& c : m.entries()) entries.push_back({c.real(), c.imag()});
    return json{{"dim", m.dim()}, {"entries", entries}};
}

HermitianMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw ParseError("matrix document needs \"dim\" and \"entries\"");
    const int dim = j.at("dim").get<int>();
    std::vector<cplx> entries = components_from_json(j.at("entries"));
    try {
        return HermitianMatrix(dim, std::move(entries));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid matrix: ") + e.what());
    }
}

json to_json(const StateSequence& seq) {
    json states = json::array();
    for (const PureState& p : seq.states) states.push_back(components_to_json(p.vec().vec()));
    return json{{"dim", seq.dim}, {"label", seq.label}, {"states", states}};
}

StateSequence sequence_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("states"))
        throw ParseError("sequence document needs \"dim\" and \"states\"");
    const int dim = j.at("dim").get<int>();
    const std::string label = j.value("label", std::string{});
    std::vector<PureState> states;
    for (const json& s : j.at("states")) {
        std::vector<cplx> comps = components_from_json(s);
        try {
            states.emplace_back(UnitVector(StateVector(std::move(comps))));
        } catch (const Error& e) {
            throw ParseError(std::string("sequence state is not a unit vector: ") + e.what());
        }
    }
    try {
        return StateSequence(dim, std::move(states), label);
    } catch (const Error& e) {
        throw ParseError(std::string("invalid sequence: ") + e.what());
    }
}

json to_json(const MembershipReport& r) {
    return json{{"checked", r.checked}, {"agreed", r.agreed}, {"violations", r.violations}};
}

json to_json(const TopologyVerdict& v) {
    return json{{"converges", v.converges},
                {"cauchy", v.cauchy},
                {"tol", v.tol},
                {"residual_tail", v.residual_tail},
                {"cauchy_residual_tail", v.cauchy_residual_tail}};
}

json to_json(const ConvergenceReport& r) {
    json weak = to_json(r.weak);
    weak["probe_cauchy"] = r.weak.cauchy;  // finitely many probes: Cauchy in the probe sense only
    json topologies{{"weak", weak},
                    {"strong", to_json(r.strong)},
                    {"norm", to_json(r.norm)},
                    {"trace", to_json(r.trace)}};
    json j{{"label", r.label},       {"dim", r.dim},
           {"length", r.length},     {"tail", r.tail},
           {"tol", r.tol},           {"probes", r.probe_description},
           {"topologies", topologies}};
    if (r.limit_candidate.has_value())
        j["limit_candidate"] = to_json(r.limit_candidate->vec().vec());
    return j;
}

json to_json(const FinitePartition& p) {
    json blocks = json::array();
    for (const std::vector<int>& b : p.blocks) blocks.push_back(b);
    return blocks;
}

json to_json(const MisraResult& r) {
    return json{{"atoms_xi", to_json(r.xi_atoms)},
                {"atoms_sigma", to_json(r.sigma_atoms)},
                {"equal", r.equal},
                {"refinement", refinement_name(r.refinement)}};
}

json to_json(const CompletenessResult& r) {
    return json{{"limit", to_json(r.limit)},
                {"idempotency_residual", r.idempotency_residual},
                {"trace_residual", r.trace_residual},
                {"is_pure", r.is_pure}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON in " + path);
    return j;
}

std::string load_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void save_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << content;
    if (!out) throw ParseError("write failed for " + path);
}

}  // namespace phs::io
